//! Independent oracles shared by the integration tests. They use only
//! the root data (simple and positive roots) and exact rationals, never
//! the engine's lattice kernels.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use diraccoh::weight::qi;
use diraccoh::{RootSystem, Weight, Q};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Solves `sum c_j alpha_j = v` over the simple roots; `None` when `v`
/// is outside their span.
pub fn simple_coordinates(sys: &RootSystem, v: &Weight) -> Option<Vec<Q>> {
    let s = sys.simple_roots();
    let r = s.len();
    let mut m: Vec<Vec<Q>> = (0..r).map(|i| (0..r).map(|j| s[i].dot(&s[j])).chain([v.dot(&s[i])]).collect()).collect();
    for col in 0..r {
        let piv = (col..r).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for i in 0..r {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..=r {
                    let t = &m[col][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
    }
    let c: Vec<Q> = m.iter().map(|row| row[r].clone()).collect();
    let mut back = Weight::zero(v.dim());
    for (ci, a) in c.iter().zip(s) {
        back = &back + &a.scale(ci);
    }
    (back == *v).then_some(c)
}

/// The Weyl group as the list of images of a regular dominant weight,
/// with determinant signs.
pub fn weyl_orbit_signed(sys: &RootSystem, regular: &Weight) -> Vec<(Weight, i64)> {
    let mut seen: HashMap<Weight, i64> = HashMap::from([(regular.clone(), 1)]);
    let mut queue = VecDeque::from([regular.clone()]);
    while let Some(v) = queue.pop_front() {
        let sign = seen[&v];
        for i in 0..sys.semisimple_rank() {
            let r = sys.reflect_simple(&v, i);
            if !seen.contains_key(&r) {
                seen.insert(r.clone(), -sign);
                queue.push_back(r);
            }
        }
    }
    seen.into_iter().collect()
}

/// The full orbit of `lambda`.
pub fn orbit(sys: &RootSystem, lambda: &Weight) -> HashSet<Weight> {
    let mut seen = HashSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(v) = queue.pop_front() {
        for i in 0..sys.semisimple_rank() {
            let r = sys.reflect_simple(&v, i);
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    seen
}

/// The dominant element of the orbit, found by scanning the whole orbit.
pub fn orbit_dominant(sys: &RootSystem, lambda: &Weight) -> Weight {
    let dom: Vec<Weight> = orbit(sys, lambda).into_iter().filter(|w| sys.is_dominant(w)).collect();
    assert_eq!(dom.len(), 1, "an orbit has one dominant element");
    dom.into_iter().next().unwrap()
}

/// Weyl's dimension formula as a product over positive roots.
pub fn weyl_dimension(sys: &RootSystem, hw: &Weight) -> Q {
    let shifted = hw + sys.rho();
    sys.positive_roots().iter().fold(Q::one(), |acc, a| acc * shifted.dot(a) / sys.rho().dot(a))
}

/// Kostant's partition function and multiplicity formula.
pub struct Kostant<'a> {
    sys: &'a RootSystem,
    coeffs: Vec<Vec<i64>>,
    signed: Vec<(Weight, i64)>,
    memo: HashMap<(Vec<i64>, usize), u64>,
}

impl<'a> Kostant<'a> {
    pub fn new(sys: &'a RootSystem) -> Self {
        let coeffs = (0..sys.positive_roots().len()).map(|i| sys.simple_coefficients(i).to_vec()).collect();
        let signed = weyl_orbit_signed(sys, sys.rho());
        Kostant { sys, coeffs, signed, memo: HashMap::new() }
    }

    fn partitions(&mut self, c: Vec<i64>, k: usize) -> u64 {
        if c.iter().any(|&x| x < 0) {
            return 0;
        }
        if k == self.coeffs.len() {
            return u64::from(c.iter().all(|&x| x == 0));
        }
        if let Some(&v) = self.memo.get(&(c.clone(), k)) {
            return v;
        }
        let mut total = 0;
        let mut rest = c.clone();
        loop {
            total += self.partitions(rest.clone(), k + 1);
            for (x, y) in rest.iter_mut().zip(&self.coeffs[k]) {
                *x -= y;
            }
            if rest.iter().any(|&x| x < 0) {
                break;
            }
        }
        self.memo.insert((c, k), total);
        total
    }

    /// The number of ways to write `v` as a sum of positive roots.
    pub fn partition(&mut self, v: &Weight) -> u64 {
        match simple_coordinates(self.sys, v) {
            Some(c) if c.iter().all(|x| x.is_integer()) => {
                let c: Vec<i64> = c.iter().map(|x| x.to_integer().to_i64().unwrap()).collect();
                self.partitions(c, 0)
            }
            _ => 0,
        }
    }

    /// Multiplicity of `mu` in `E(hw)`.
    pub fn multiplicity(&mut self, hw: &Weight, mu: &Weight) -> u64 {
        let rho = self.sys.rho().clone();
        let target = mu + &rho;
        let mut total: i64 = 0;
        for (w_rho, sign) in self.signed.clone() {
            // w(hw + rho) - (mu + rho) = w(hw) + w(rho) - rho - mu, with w(hw) found
            // by replaying the reflections that carry rho to w(rho).
            let image = self.image_of(&w_rho, hw);
            let v = &(&image + &w_rho) - &target;
            total += sign * self.partition(&v) as i64;
        }
        u64::try_from(total).expect("multiplicities are nonnegative")
    }

    fn image_of(&self, w_rho: &Weight, x: &Weight) -> Weight {
        let mut v = w_rho.clone();
        let mut x = x.clone();
        let mut path = Vec::new();
        while let Some(i) = (0..self.sys.semisimple_rank()).find(|&i| self.sys.simple_pairing(&v, i).is_negative()) {
            v = self.sys.reflect_simple(&v, i);
            path.push(i);
        }
        for &i in path.iter().rev() {
            x = self.sys.reflect_simple(&x, i);
        }
        x
    }

    /// All weights of `E(hw)` with multiplicities, found by descending
    /// simple root strings from the highest weight.
    pub fn character(&mut self, hw: &Weight) -> BTreeMap<Weight, u64> {
        let mut out = BTreeMap::new();
        let mut queue = VecDeque::from([hw.clone()]);
        let mut seen = HashSet::from([hw.clone()]);
        while let Some(mu) = queue.pop_front() {
            let m = self.multiplicity(hw, &mu);
            if m == 0 {
                continue;
            }
            out.insert(mu.clone(), m);
            for a in self.sys.simple_roots().to_vec() {
                let next = &mu - &a;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        out
    }
}

/// Tensor product decomposition by multiplying characters and peeling off
/// highest weights.
pub fn tensor_by_characters(sys: &RootSystem, a: &Weight, b: &Weight) -> BTreeMap<Weight, u64> {
    let mut k = Kostant::new(sys);
    let ca = k.character(a);
    let cb = k.character(b);
    let mut prod: HashMap<Weight, i64> = HashMap::new();
    for (x, m) in &ca {
        for (y, n) in &cb {
            *prod.entry(x + y).or_insert(0) += (m * n) as i64;
        }
    }
    let f = sys.height_functional().clone();
    let mut out = BTreeMap::new();
    loop {
        prod.retain(|_, m| *m != 0);
        let Some(top) =
            prod.keys().filter(|w| sys.is_dominant(w)).max_by(|x, y| x.dot(&f).cmp(&y.dot(&f)).then(x.cmp(y))).cloned()
        else {
            break;
        };
        let m = prod[&top];
        assert!(m > 0, "peeling produced a negative multiplicity at {top}");
        out.insert(top.clone(), m as u64);
        for (w, n) in k.character(&top) {
            *prod.entry(w).or_insert(0) -= m * n as i64;
        }
    }
    assert!(prod.is_empty(), "product character is not a sum of irreducibles");
    out
}

/// The Kostant subset statistics by direct enumeration: the minimum of
/// `<2 rho(B), 2 rho(B^c)>` and the number of subsets attaining zero.
pub fn kostant_subsets(sys: &RootSystem) -> (Q, usize) {
    let pos = sys.positive_roots();
    let two_rho = sys.rho().double();
    let mut min: Option<Q> = None;
    let mut zeros = 0;
    for mask in 0u64..(1u64 << pos.len()) {
        let mut s = Weight::zero(sys.ambient_dim());
        for (i, a) in pos.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s = &s + a;
            }
        }
        let v = s.dot(&(&two_rho - &s));
        if v.is_zero() {
            zeros += 1;
        }
        if min.as_ref().is_none_or(|m| v < *m) {
            min = Some(v);
        }
    }
    (min.unwrap_or_else(Q::zero), zeros)
}

/// Order of the Weyl group from the orbit of `rho`.
pub fn weyl_order(sys: &RootSystem) -> usize {
    orbit(sys, sys.rho()).len()
}

pub fn halves(xs: &[i64]) -> Weight {
    Weight::new(xs.iter().map(|&x| Q::new(x.into(), 2.into())).collect())
}

pub fn ints(xs: &[i64]) -> Weight {
    Weight::new(xs.iter().map(|&x| qi(x)).collect())
}
