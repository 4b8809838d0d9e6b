use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::lattice::{self, encode, Frame, IVec};
use crate::roots::LeviDatum;
use crate::weight::Weight;

use super::character::Character;
use super::freudenthal;

impl Engine {
    /// Decomposes a `W_m`-invariant character into irreducible characters
    /// of the Levi by repeatedly stripping the highest remaining
    /// Levi-dominant weight. Keys are Levi highest weights.
    pub fn levi_decompose(&self, ch: &Character, datum: &LeviDatum) -> Result<BTreeMap<Weight, u64>> {
        let levi = datum.levi();
        let frame = Frame::new(levi);
        let mut meter = self.meter("branch_to_levi");
        let mut rem: FxHashMap<IVec, i64> = ch.raw().iter().map(|(k, &m)| (k.clone(), m as i64)).collect();
        let mut tops: Vec<IVec> = rem.keys().filter(|k| frame.is_dominant(k)).cloned().collect();
        tops.sort_by(|a, b| frame.height_of(b).cmp(&frame.height_of(a)).then_with(|| b.cmp(a)));
        let mut out = BTreeMap::new();
        for eta in tops {
            let c = rem.get(&eta).copied().unwrap_or(0);
            if c == 0 {
                continue;
            }
            if c < 0 {
                return Err(Error::Inconsistent(format!("negative Levi multiplicity at {}", lattice::decode(&eta))));
            }
            let hw = lattice::decode(&eta);
            let dc = self.dominant_character_metered(levi, &hw, &mut meter)?;
            for (v, m) in freudenthal::expand(&frame, &dc, &mut meter)? {
                let e = rem.entry(v).or_insert(0);
                *e -= c * m as i64;
            }
            out.insert(hw, c as u64);
        }
        if rem.values().any(|&m| m != 0) {
            return Err(Error::Inconsistent("character is not W_m-invariant".into()));
        }
        Ok(out)
    }

    /// `E(hw)` restricted to the Levi, as Levi highest weights with
    /// multiplicities.
    pub fn branch_to_levi(&self, hw: &Weight, datum: &LeviDatum) -> Result<BTreeMap<Weight, u64>> {
        let ch = self.freudenthal(datum.parent(), hw)?;
        self.levi_decompose(&ch, datum)
    }

    /// Multiplicity of the Levi irreducible with highest weight `eta` in a
    /// `W_m`-invariant character, by the Weyl denominator identity
    /// `c_eta = sum_w sign(w) m(eta + rho_m - w rho_m)`.
    pub fn levi_multiplicity(&self, ch: &Character, datum: &LeviDatum, eta: &Weight) -> Result<u64> {
        let frame = Frame::new(datum.levi());
        let e = encode(eta)?;
        if !frame.is_dominant(&e) || !frame.is_integral(&e) {
            return Err(Error::NotDominant(eta.to_string()));
        }
        let orbit = frame.signed_rho_orbit();
        self.meter("levi_multiplicity").charge(orbit.len() as u64)?;
        let base = lattice::add(&e, &frame.rho);
        let mut c: i64 = 0;
        for (v, s) in orbit {
            let w = lattice::sub(&base, &v);
            c += s * ch.raw().get(&w).copied().unwrap_or(0) as i64;
        }
        u64::try_from(c).map_err(|_| Error::Inconsistent(format!("negative Levi multiplicity at {eta}")))
    }

    /// Multiplicity of the Levi module `F(xi)` in `E(tau)` restricted to
    /// the Levi.
    pub fn induced_ktype_mult(&self, datum: &LeviDatum, xi: &Weight, tau: &Weight) -> Result<u64> {
        let ch = self.freudenthal(datum.parent(), tau)?;
        self.levi_multiplicity(&ch, datum, xi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_root_system, Series};
    use crate::weight;

    #[test]
    fn borel_branching_is_the_character() {
        let b2 = build_root_system(Series::B, 2).unwrap();
        let d = LeviDatum::new(&b2, &[]).unwrap();
        let e = Engine::new();
        let lam = weight![1, 1];
        let br = e.branch_to_levi(&lam, &d).unwrap();
        let ch = e.freudenthal(&b2, &lam).unwrap();
        assert_eq!(br.len(), ch.len());
        for (w, m) in ch.entries() {
            assert_eq!(br[&w], m);
            assert_eq!(e.induced_ktype_mult(&d, &w, &lam).unwrap(), m);
        }
    }

    #[test]
    fn full_levi_is_trivial_branching() {
        let a3 = build_root_system(Series::A, 3).unwrap();
        let d = LeviDatum::new(&a3, &[0, 1, 2]).unwrap();
        let lam = weight![2, 1, 0, 0];
        let br = Engine::new().branch_to_levi(&lam, &d).unwrap();
        assert_eq!(br.into_iter().collect::<Vec<_>>(), vec![(lam, 1)]);
    }
}
