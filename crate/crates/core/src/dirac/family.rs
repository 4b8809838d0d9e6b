use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::weight::{qi, Weight, Q};

/// A set of K-types `base + sum_j c_j g_j` with `c_j` natural numbers,
/// optionally required to be nonincreasing in `j` and to have a fixed
/// parity of `sum_j c_j`. Generators are pairwise orthogonal. Every member
/// occurs with multiplicity one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTypeFamily {
    name: String,
    base: Weight,
    generators: Vec<Weight>,
    monotone: bool,
    parity: Option<u8>,
}

impl KTypeFamily {
    pub fn new(
        name: impl Into<String>,
        base: Weight,
        generators: Vec<Weight>,
        monotone: bool,
        parity: Option<u8>,
    ) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            g.check_dim(base.dim())?;
            if g.is_zero() {
                return Err(Error::InvalidParameters("zero generator".into()));
            }
            if generators[..i].iter().any(|h| !h.dot(g).is_zero()) {
                return Err(Error::InvalidParameters("generators must be orthogonal".into()));
            }
        }
        Ok(KTypeFamily { name: name.into(), base, generators, monotone, parity: parity.map(|p| p % 2) })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &Weight {
        &self.base
    }

    pub fn generators(&self) -> &[Weight] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    fn admissible(&self, c: &[i64]) -> bool {
        c.iter().all(|&x| x >= 0)
            && (!self.monotone || c.windows(2).all(|w| w[0] >= w[1]))
            && self.parity.map_or(true, |p| c.iter().sum::<i64>().rem_euclid(2) as u8 == p)
    }

    /// Coefficients expressing `mu` in the family, if it is a member.
    pub fn coefficients(&self, mu: &Weight) -> Option<Vec<i64>> {
        if mu.dim() != self.dim() {
            return None;
        }
        let diff = mu - &self.base;
        let c: Vec<i64> = if self.generators.is_empty() {
            if !diff.is_zero() {
                return None;
            }
            Vec::new()
        } else {
            let cols: Vec<Vec<Q>> =
                (0..self.dim()).map(|r| self.generators.iter().map(|g| g.coords()[r].clone()).collect()).collect();
            let x = linalg::solve(&cols, diff.coords())?;
            x.iter().map(|v| if v.is_integer() { v.to_integer().to_i64() } else { None }).collect::<Option<_>>()?
        };
        self.admissible(&c).then_some(c)
    }

    pub fn contains(&self, mu: &Weight) -> bool {
        self.coefficients(mu).is_some()
    }

    pub fn member(&self, c: &[i64]) -> Weight {
        let mut w = self.base.clone();
        for (g, &k) in self.generators.iter().zip(c) {
            w += &g.scale(&qi(k));
        }
        w
    }

    /// All members with squared norm at most `norm2_bound`, in
    /// lexicographic order of coefficients. `limit` caps the number of
    /// coefficient vectors visited.
    pub fn enumerate(&self, norm2_bound: &Q, limit: u64) -> Result<Vec<Weight>> {
        let bound = norm2_bound.to_f64().unwrap_or(f64::INFINITY).max(0.0).sqrt();
        let base = self.base.norm2().to_f64().unwrap_or(0.0).sqrt();
        let caps: Vec<i64> = self
            .generators
            .iter()
            .map(|g| ((bound + base) / g.norm2().to_f64().unwrap_or(1.0).sqrt()).floor() as i64 + 1)
            .collect();
        let mut out = Vec::new();
        let mut visited = 0u64;
        let mut c = vec![0i64; caps.len()];
        self.walk(0, &caps, &mut c, norm2_bound, &mut out, &mut visited, limit)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        j: usize,
        caps: &[i64],
        c: &mut Vec<i64>,
        bound: &Q,
        out: &mut Vec<Weight>,
        visited: &mut u64,
        limit: u64,
    ) -> Result<()> {
        if j == caps.len() {
            *visited += 1;
            if *visited > limit {
                return Err(Error::BudgetExceeded { operation: "ktype_enumeration", budget: limit });
            }
            if self.admissible(c) {
                let w = self.member(c);
                if &w.norm2() <= bound {
                    out.push(w);
                }
            }
            return Ok(());
        }
        let top = if self.monotone && j > 0 { caps[j].min(c[j - 1]) } else { caps[j] };
        for k in 0..=top.max(0) {
            c[j] = k;
            self.walk(j + 1, caps, c, bound, out, visited, limit)?;
        }
        c[j] = 0;
        Ok(())
    }

    /// Places the family into a larger ambient space: coordinate `i` goes
    /// to `coords[i]`, and `shift` is added to the base.
    pub fn embed(&self, name: impl Into<String>, ambient: usize, coords: &[usize], shift: &Weight) -> Result<Self> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: coords.len() });
        }
        let lift = |w: &Weight| {
            let mut v = Weight::zero(ambient);
            for (i, &k) in coords.iter().enumerate() {
                v.coords_mut()[k] = w.coords()[i].clone();
            }
            v
        };
        let base = &lift(&self.base) + shift;
        KTypeFamily::new(name, base, self.generators.iter().map(lift).collect(), self.monotone, self.parity)
    }

    pub fn is_nonnegative_combination(&self) -> bool {
        self.generators.iter().all(|g| g.coords().iter().all(|x| !x.is_negative()))
    }
}

impl fmt::Display for KTypeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.base)?;
        for (j, g) in self.generators.iter().enumerate() {
            write!(f, " + c{}{}", j + 1, g)?;
        }
        if self.monotone {
            f.write_str(", c nonincreasing")?;
        }
        if let Some(p) = self.parity {
            write!(f, ", sum c = {p} mod 2")?;
        }
        Ok(())
    }
}
