use rustc_hash::FxHashMap;

use crate::engine::Engine;
use crate::error::Result;
use crate::lattice::{encode, IVec};
use crate::roots::LeviDatum;

use super::character::Character;

/// Above this many roots the product form replaces subset enumeration.
const SUBSET_LIMIT: usize = 20;

impl Engine {
    /// Character of the exterior algebra of the nilradical,
    /// `prod_{alpha in Delta(n)} (1 + e^alpha)`.
    pub fn exterior_character(&self, datum: &LeviDatum) -> Result<Character> {
        if datum.delta_n().len() > SUBSET_LIMIT {
            self.exterior_character_by_product(datum)
        } else {
            self.exterior_character_by_subsets(datum)
        }
    }

    /// Enumerates all `2^|Delta(n)|` subsets in Gray-code order.
    pub fn exterior_character_by_subsets(&self, datum: &LeviDatum) -> Result<Character> {
        let roots: Vec<IVec> = datum.delta_n().iter().map(encode).collect::<Result<_>>()?;
        let n = roots.len();
        let mut meter = self.meter("exterior_character");
        meter.charge(1u64.checked_shl(n as u32).unwrap_or(u64::MAX))?;
        let mut sum: IVec = std::iter::repeat(0).take(datum.parent().ambient_dim()).collect();
        let mut inside = vec![false; n];
        let mut map: FxHashMap<IVec, u64> = FxHashMap::default();
        *map.entry(sum.clone()).or_insert(0) += 1;
        for step in 1u64..(1u64 << n) {
            let bit = step.trailing_zeros() as usize;
            let sign = if inside[bit] { -1 } else { 1 };
            inside[bit] = !inside[bit];
            for (x, a) in sum.iter_mut().zip(&roots[bit]) {
                *x += sign * a;
            }
            *map.entry(sum.clone()).or_insert(0) += 1;
        }
        Ok(Character::from_raw(map))
    }

    /// Multiplies the factors `(1 + e^alpha)` one at a time.
    pub fn exterior_character_by_product(&self, datum: &LeviDatum) -> Result<Character> {
        let mut meter = self.meter("exterior_character");
        let zero: IVec = std::iter::repeat(0).take(datum.parent().ambient_dim()).collect();
        let mut map: FxHashMap<IVec, u64> = FxHashMap::default();
        map.insert(zero, 1);
        for a in datum.delta_n() {
            let a = encode(a)?;
            let mut next = map.clone();
            for (k, m) in &map {
                let v: IVec = k.iter().zip(&a).map(|(x, y)| x + y).collect();
                *next.entry(v).or_insert(0) += m;
            }
            meter.charge(next.len() as u64)?;
            map = next;
        }
        Ok(Character::from_raw(map))
    }
}
