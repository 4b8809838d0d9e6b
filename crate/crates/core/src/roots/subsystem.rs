use std::collections::HashSet;
use std::fmt;

use num_traits::ToPrimitive;

use crate::error::Result;
use crate::weight::Weight;

use super::system::{coroot_pairing, RootSystem};

/// Cartan letters, declared in the order used when printing labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    E,
    F,
    G,
    D,
    C,
    B,
    A,
}

/// Isomorphism type of a reductive root datum: simple components plus a
/// central torus rank, printed like `A5A1` or `D5T1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub components: Vec<(Letter, usize)>,
    pub torus: usize,
}

impl CartanType {
    /// Classifies the root system with simple roots `simple`; the torus
    /// rank is `ambient_rank - simple.len()`.
    pub fn classify(simple: &[Weight], ambient_rank: usize) -> CartanType {
        let n = simple.len();
        let bond = |i: usize, j: usize| -> usize {
            let p = coroot_pairing(&simple[i], &simple[j]) * coroot_pairing(&simple[j], &simple[i]);
            p.to_integer().to_usize().unwrap_or(0)
        };
        let mut visited = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut comp = vec![start];
            visited[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for j in 0..n {
                    if !visited[j] && bond(i, j) > 0 {
                        visited[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            components.push(classify_component(simple, &comp, &bond));
        }
        components.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        CartanType { components, torus: ambient_rank.saturating_sub(n) }
    }

    /// The type of the dual (coroot) system.
    pub fn dual(&self) -> CartanType {
        let mut components: Vec<_> = self
            .components
            .iter()
            .map(|&(l, r)| match (l, r) {
                (Letter::B, r) if r > 2 => (Letter::C, r),
                (Letter::C, r) if r > 2 => (Letter::B, r),
                x => x,
            })
            .collect();
        components.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        CartanType { components, torus: self.torus }
    }

    pub fn semisimple_rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }
}

fn classify_component(simple: &[Weight], comp: &[usize], bond: &dyn Fn(usize, usize) -> usize) -> (Letter, usize) {
    let k = comp.len();
    let degree = |i: usize| comp.iter().filter(|&&j| j != i && bond(i, j) > 0).count();
    let bonds: Vec<usize> = comp
        .iter()
        .enumerate()
        .flat_map(|(a, &i)| comp[a + 1..].iter().map(move |&j| (i, j)))
        .map(|(i, j)| bond(i, j))
        .collect();
    if bonds.contains(&3) {
        return (Letter::G, 2);
    }
    if bonds.contains(&2) {
        if k == 2 {
            return (Letter::B, 2);
        }
        if k == 4 {
            let middle = comp
                .iter()
                .flat_map(|&i| comp.iter().map(move |&j| (i, j)))
                .any(|(i, j)| i < j && bond(i, j) == 2 && degree(i) == 2 && degree(j) == 2);
            if middle {
                return (Letter::F, 4);
            }
        }
        let long = comp.iter().map(|&i| simple[i].norm2()).max().expect("nonempty component");
        let short_count = comp.iter().filter(|&&i| simple[i].norm2() < long).count();
        return if short_count == 1 { (Letter::B, k) } else { (Letter::C, k) };
    }
    let Some(&branch) = comp.iter().find(|&&i| degree(i) >= 3) else {
        return (Letter::A, k);
    };
    let mut arms: Vec<usize> = comp
        .iter()
        .filter(|&&j| j != branch && bond(branch, j) > 0)
        .map(|&first| {
            let (mut prev, mut cur, mut len) = (branch, first, 1);
            loop {
                let next = comp.iter().find(|&&j| j != prev && j != cur && bond(cur, j) > 0);
                match next {
                    Some(&nx) => {
                        prev = cur;
                        cur = nx;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => (Letter::D, k),
        [1, 2, 2] => (Letter::E, 6),
        [1, 2, 3] => (Letter::E, 7),
        [1, 2, 4] => (Letter::E, 8),
        _ => (Letter::A, k),
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, r) in &self.components {
            write!(f, "{l:?}{r}")?;
        }
        if self.torus > 0 || self.components.is_empty() {
            write!(f, "T{}", self.torus)?;
        }
        Ok(())
    }
}

/// The roots with integral coroot pairing against `lambda`.
#[derive(Clone, Debug)]
pub struct IntegralSubsystem {
    pub positive_roots: Vec<Weight>,
    pub simple_roots: Vec<Weight>,
    pub cartan_type: CartanType,
}

pub fn integral_subsystem(sys: &RootSystem, lambda: &Weight) -> Result<IntegralSubsystem> {
    lambda.check_dim(sys.ambient_dim())?;
    let positive_roots: Vec<Weight> =
        sys.positive_roots().iter().filter(|a| coroot_pairing(lambda, a).is_integer()).cloned().collect();
    let set: HashSet<&Weight> = positive_roots.iter().collect();
    // A positive root is simple in the subsystem exactly when its
    // reflection permutes the remaining positive roots.
    let simple_roots: Vec<Weight> = positive_roots
        .iter()
        .filter(|a| {
            positive_roots.iter().all(|b| {
                b == *a || {
                    let r = b - &a.scale(&coroot_pairing(b, a));
                    set.contains(&r)
                }
            })
        })
        .cloned()
        .collect();
    let cartan_type = CartanType::classify(&simple_roots, sys.rank());
    Ok(IntegralSubsystem { positive_roots, simple_roots, cartan_type })
}
