use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::lattice::{self, encode, Frame, IVec};
use crate::roots::RootSystem;
use crate::weight::Weight;

use super::{check_highest_weight, weyl_dim};

/// The PRV component of `E(a) (x) E(b)`: the dominant conjugate of
/// `a + w_0 b`.
pub fn prv_component(sys: &RootSystem, a: &Weight, b: &Weight) -> Result<Weight> {
    check_highest_weight(sys, a)?;
    check_highest_weight(sys, b)?;
    let lowest = -sys.dominant(&-b)?;
    sys.dominant(&(a + &lowest))
}

impl Engine {
    /// Signed Brauer-Klimyk sum over the weights of `E(inner)`.
    fn klimyk_raw(
        &self,
        sys: &RootSystem,
        outer: &Weight,
        inner: &Weight,
        target: Option<&IVec>,
    ) -> Result<FxHashMap<IVec, i64>> {
        let mut meter = self.meter("klimyk_tensor");
        let base = lattice::add(&check_highest_weight(sys, outer)?, &Frame::new(sys).rho);
        let ch = self.full_character_metered(sys, inner, &mut meter)?;
        let frame = Frame::new(sys);
        let mut acc: FxHashMap<IVec, i64> = FxHashMap::default();
        for (nu, &m) in ch.raw() {
            let mut v = lattice::add(&base, nu);
            let len = frame.make_dominant(&mut v);
            if frame.on_wall(&v) {
                continue;
            }
            let tau = lattice::sub(&v, &frame.rho);
            if target.is_some_and(|t| *t != tau) {
                continue;
            }
            let sign = if len % 2 == 0 { 1 } else { -1 };
            *acc.entry(tau).or_insert(0) += sign * m as i64;
        }
        acc.retain(|_, m| *m != 0);
        if let Some((k, m)) = acc.iter().find(|(_, m)| **m < 0) {
            return Err(Error::Inconsistent(format!("negative tensor multiplicity {m} at {}", lattice::decode(k))));
        }
        Ok(acc)
    }

    fn smaller_first<'a>(&self, sys: &RootSystem, a: &'a Weight, b: &'a Weight) -> Result<(&'a Weight, &'a Weight)> {
        Ok(if weyl_dim(sys, a)? <= weyl_dim(sys, b)? { (b, a) } else { (a, b) })
    }

    /// Decomposition of `E(a) (x) E(b)` into irreducibles, iterating over
    /// the weights of the smaller factor.
    pub fn klimyk_tensor(&self, sys: &RootSystem, a: &Weight, b: &Weight) -> Result<BTreeMap<Weight, u64>> {
        let (outer, inner) = self.smaller_first(sys, a, b)?;
        self.klimyk_tensor_over(sys, outer, inner)
    }

    /// Same decomposition, iterating over the weights of `inner`.
    pub fn klimyk_tensor_over(
        &self,
        sys: &RootSystem,
        outer: &Weight,
        inner: &Weight,
    ) -> Result<BTreeMap<Weight, u64>> {
        Ok(self
            .klimyk_raw(sys, outer, inner, None)?
            .into_iter()
            .map(|(k, m)| (lattice::decode(&k), m as u64))
            .collect())
    }

    /// `[E(a) (x) E(b) : E(tau)]`.
    pub fn tensor_multiplicity(&self, sys: &RootSystem, a: &Weight, b: &Weight, tau: &Weight) -> Result<u64> {
        tau.check_dim(sys.ambient_dim())?;
        if !sys.is_dominant(tau) {
            return Ok(0);
        }
        let Ok(t) = encode(tau) else { return Ok(0) };
        let (outer, inner) = self.smaller_first(sys, a, b)?;
        Ok(self.klimyk_raw(sys, outer, inner, Some(&t))?.values().sum::<i64>() as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_root_system, Series};
    use crate::weight;

    #[test]
    fn a2_adjoint_square() {
        let a2 = build_root_system(Series::A, 2).unwrap();
        let adj = weight![1, 0, -1];
        let d = Engine::new().klimyk_tensor(&a2, &adj, &adj).unwrap();
        let expect: BTreeMap<Weight, u64> = [
            (weight![2, 0, -2], 1),
            (weight![2, -1, -1], 1),
            (weight![1, 1, -2], 1),
            (adj.clone(), 2),
            (weight![0, 0, 0], 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, expect);
        assert_eq!(prv_component(&a2, &adj, &adj).unwrap(), weight![0, 0, 0]);
    }
}
