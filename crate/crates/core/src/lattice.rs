//! Integer kernel for integral weights.
//!
//! Weights are stored as `SCALE * coordinates` in `i64`, which is exact
//! for every denominator dividing `SCALE`. Coroot pairings of integral
//! weights are integers, so Weyl reflections never leave the lattice.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rustc_hash::{FxHashMap, FxHashSet};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::roots::RootSystem;
use crate::weight::{Weight, Q};

pub const SCALE: i64 = 12;

pub type IVec = SmallVec<[i64; 8]>;

pub fn encode(w: &Weight) -> Result<IVec> {
    let s = BigInt::from(SCALE);
    w.coords()
        .iter()
        .map(|x| {
            let y = x * Q::from_integer(s.clone());
            if y.is_integer() {
                y.to_integer().to_i64().ok_or_else(|| Error::Unrepresentable(w.to_string()))
            } else {
                Err(Error::Unrepresentable(w.to_string()))
            }
        })
        .collect()
}

pub fn decode(v: &[i64]) -> Weight {
    Weight::new(v.iter().map(|&x| Q::new(BigInt::from(x), BigInt::from(SCALE))).collect())
}

#[inline]
pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub fn add(a: &[i64], b: &[i64]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[inline]
pub fn sub(a: &[i64], b: &[i64]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Scaled copy of a root system.
#[derive(Clone, Debug)]
pub struct Frame {
    pub dim: usize,
    pub simple: Vec<IVec>,
    pub simple_norm: Vec<i64>,
    pub positive: Vec<IVec>,
    pub rho: IVec,
    /// Positive multiple of the height functional.
    pub height: IVec,
}

impl Frame {
    pub fn new(sys: &RootSystem) -> Self {
        let enc = |w: &Weight| encode(w).expect("roots and rho have denominators dividing SCALE");
        let simple: Vec<IVec> = sys.simple_roots().iter().map(enc).collect();
        let simple_norm = simple.iter().map(|a| dot(a, a)).collect();
        let h = sys.height_functional();
        let den = h.denominator_lcm();
        let height = h
            .coords()
            .iter()
            .map(|x| (x * Q::from_integer(den.clone())).to_integer().to_i64().expect("small height functional"))
            .collect();
        Frame {
            dim: sys.ambient_dim(),
            simple,
            simple_norm,
            positive: sys.positive_roots().iter().map(enc).collect(),
            rho: enc(sys.rho()),
            height,
        }
    }

    /// `<v, alpha_i^vee>`; exact for integral `v`.
    #[inline]
    pub fn simple_pairing(&self, v: &[i64], i: usize) -> i64 {
        2 * dot(v, &self.simple[i]) / self.simple_norm[i]
    }

    #[inline]
    pub fn reflect_simple(&self, v: &mut IVec, i: usize) {
        let k = self.simple_pairing(v, i);
        if k != 0 {
            for (x, a) in v.iter_mut().zip(&self.simple[i]) {
                *x -= k * a;
            }
        }
    }

    pub fn is_integral(&self, v: &[i64]) -> bool {
        (0..self.simple.len()).all(|i| (2 * dot(v, &self.simple[i])) % self.simple_norm[i] == 0)
    }

    pub fn check_integral(&self, v: &[i64]) -> Result<()> {
        if self.is_integral(v) {
            Ok(())
        } else {
            Err(Error::NotIntegral(decode(v).to_string()))
        }
    }

    pub fn is_dominant(&self, v: &[i64]) -> bool {
        self.simple.iter().all(|a| dot(v, a) >= 0)
    }

    /// Moves `v` to its dominant conjugate in place and returns the number
    /// of reflections used.
    pub fn make_dominant(&self, v: &mut IVec) -> usize {
        let mut len = 0;
        'outer: loop {
            for i in 0..self.simple.len() {
                if dot(v, &self.simple[i]) < 0 {
                    self.reflect_simple(v, i);
                    len += 1;
                    continue 'outer;
                }
            }
            return len;
        }
    }

    /// For dominant `v`, whether it lies on a wall.
    pub fn on_wall(&self, v: &[i64]) -> bool {
        self.simple.iter().any(|a| dot(v, a) == 0)
    }

    pub fn height_of(&self, v: &[i64]) -> i64 {
        dot(v, &self.height)
    }

    /// The Weyl orbit of the dominant weight `v`.
    pub fn orbit(&self, v: &[i64]) -> Vec<IVec> {
        let start: IVec = v.iter().copied().collect();
        let mut seen: FxHashSet<IVec> = FxHashSet::default();
        seen.insert(start.clone());
        let mut out = vec![start];
        let mut k = 0;
        while k < out.len() {
            for i in 0..self.simple.len() {
                if dot(&out[k], &self.simple[i]) > 0 {
                    let mut r = out[k].clone();
                    self.reflect_simple(&mut r, i);
                    if seen.insert(r.clone()) {
                        out.push(r);
                    }
                }
            }
            k += 1;
        }
        out
    }

    /// Orbit of `rho` with the sign of each element: the terms of the
    /// Weyl denominator `prod (1 - e^{-alpha}) = sum sign(w) e^{w rho - rho}`.
    pub fn signed_rho_orbit(&self) -> Vec<(IVec, i64)> {
        let mut seen: FxHashMap<IVec, i64> = FxHashMap::default();
        seen.insert(self.rho.clone(), 1);
        let mut out = vec![(self.rho.clone(), 1)];
        let mut k = 0;
        while k < out.len() {
            let (v, s) = out[k].clone();
            for i in 0..self.simple.len() {
                let mut r = v.clone();
                self.reflect_simple(&mut r, i);
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(r.clone()) {
                    e.insert(-s);
                    out.push((r, -s));
                }
            }
            k += 1;
        }
        out
    }

    /// Applies a word `s_{i0} .. s_{ik}`, rightmost letter first.
    pub fn apply_word(&self, letters: &[usize], v: &mut IVec) {
        for &i in letters.iter().rev() {
            self.reflect_simple(v, i);
        }
    }

    pub fn zero(&self) -> IVec {
        std::iter::repeat(0).take(self.dim).collect()
    }
}

pub fn is_zero(v: &[i64]) -> bool {
    v.iter().all(Zero::is_zero)
}
