//! Characters of finite-dimensional modules: Weyl dimension, Freudenthal
//! multiplicities, tensor products, exterior algebras of nilradicals and
//! branching to Levi subalgebras.

mod cache;
mod character;
mod exterior;
mod freudenthal;
mod levi;
mod tensor;

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use cache::CharacterCache;
pub use character::{Character, DominantCharacter};
pub use tensor::prv_component;

use crate::engine::{Engine, Meter};
use crate::error::{Error, Result};
use crate::lattice::{encode, Frame, IVec};
use crate::roots::RootSystem;
use crate::weight::{Weight, Q};

/// Rejects weights that are not dominant integral for `sys`.
pub(crate) fn check_highest_weight(sys: &RootSystem, hw: &Weight) -> Result<IVec> {
    hw.check_dim(sys.ambient_dim())?;
    if !sys.is_integral(hw)? {
        return Err(Error::NotIntegral(hw.to_string()));
    }
    if !sys.is_dominant(hw) {
        return Err(Error::NotDominant(hw.to_string()));
    }
    encode(hw)
}

/// Weyl's dimension formula.
pub fn weyl_dim(sys: &RootSystem, hw: &Weight) -> Result<BigUint> {
    check_highest_weight(sys, hw)?;
    let shifted = hw + sys.rho();
    let mut d = Q::one();
    for a in sys.positive_roots() {
        d *= shifted.dot(a) / sys.rho().dot(a);
    }
    if !d.is_integer() || d <= Q::zero() {
        return Err(Error::Inconsistent(format!("Weyl dimension {d} for {hw}")));
    }
    d.to_integer().to_biguint().ok_or_else(|| Error::Inconsistent("negative dimension".into()))
}

impl Engine {
    pub(crate) fn dominant_character_metered(
        &self,
        sys: &RootSystem,
        hw: &Weight,
        meter: &mut Meter,
    ) -> Result<Arc<DominantCharacter>> {
        let v = check_highest_weight(sys, hw)?;
        if let Some(cache) = self.character_cache() {
            if let Some(dc) = cache.get(sys.label(), hw) {
                return Ok(dc);
            }
        }
        let dc = Arc::new(freudenthal::dominant_weights(&Frame::new(sys), &v, meter)?);
        if let Some(cache) = self.character_cache() {
            return Ok(cache.insert(sys.label(), hw, dc));
        }
        Ok(dc)
    }

    /// Dominant weight multiplicities of `E(hw)`.
    pub fn dominant_character(&self, sys: &RootSystem, hw: &Weight) -> Result<Arc<DominantCharacter>> {
        self.dominant_character_metered(sys, hw, &mut self.meter("freudenthal"))
    }

    pub(crate) fn full_character_metered(&self, sys: &RootSystem, hw: &Weight, meter: &mut Meter) -> Result<Character> {
        let dc = self.dominant_character_metered(sys, hw, meter)?;
        Ok(Character::from_raw(freudenthal::expand(&Frame::new(sys), &dc, meter)?))
    }

    /// Full character of `E(hw)`, every weight with its multiplicity.
    pub fn freudenthal(&self, sys: &RootSystem, hw: &Weight) -> Result<Character> {
        self.full_character_metered(sys, hw, &mut self.meter("freudenthal"))
    }

    /// Multiplicity of an arbitrary weight in `E(hw)`.
    pub fn weight_multiplicity(&self, sys: &RootSystem, hw: &Weight, mu: &Weight) -> Result<u64> {
        mu.check_dim(sys.ambient_dim())?;
        let dc = self.dominant_character(sys, hw)?;
        let Ok(mut v) = encode(mu) else { return Ok(0) };
        let frame = Frame::new(sys);
        if !frame.is_integral(&v) {
            return Ok(0);
        }
        frame.make_dominant(&mut v);
        Ok(dc.entries.iter().find(|(k, _)| *k == v).map_or(0, |e| e.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_root_system, Series};
    use crate::weight;

    #[test]
    fn dimensions() {
        let a2 = build_root_system(Series::A, 2).unwrap();
        assert_eq!(weyl_dim(&a2, &weight![1, 0, -1]).unwrap(), BigUint::from(8u32));
        let b3 = build_root_system(Series::B, 3).unwrap();
        assert_eq!(weyl_dim(&b3, &weight![1 / 2, 1 / 2, 1 / 2]).unwrap(), BigUint::from(8u32));
        let f4 = build_root_system(Series::F, 4).unwrap();
        assert_eq!(weyl_dim(&f4, f4.rho()).unwrap(), BigUint::from(1u32 << 24));
        let e8 = build_root_system(Series::E, 8).unwrap();
        assert_eq!(weyl_dim(&e8, &weight![0, 0, 0, 0, 0, 0, 1, 1]).unwrap(), BigUint::from(248u32));
        assert!(weyl_dim(&a2, &weight![0, 1, 0]).is_err());
        assert!(weyl_dim(&b3, &weight![1 / 2, 0, 0]).is_err());
    }

    #[test]
    fn g2_adjoint_and_small() {
        let g2 = build_root_system(Series::G, 2).unwrap();
        let e = Engine::new();
        let highest_root = g2.positive_roots().last().unwrap().clone();
        let ch = e.freudenthal(&g2, &highest_root).unwrap();
        assert_eq!(ch.mass(), 14);
        assert_eq!(ch.multiplicity(&Weight::zero(3)), 2);
        let short = g2
            .positive_roots()
            .iter()
            .filter(|a| a.norm2() == crate::weight::qi(2))
            .max_by_key(|a| g2.height(a))
            .unwrap()
            .clone();
        assert_eq!(e.freudenthal(&g2, &short).unwrap().mass(), 7);
    }

    #[test]
    fn budget_is_enforced() {
        let c4 = build_root_system(Series::C, 4).unwrap();
        let e = Engine::new().budget(10);
        assert!(matches!(e.freudenthal(&c4, c4.rho()), Err(Error::BudgetExceeded { .. })));
    }
}
