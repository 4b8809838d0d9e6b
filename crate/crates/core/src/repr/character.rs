use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::lattice::{self, encode, IVec};
use crate::weight::Weight;

/// A finite formal character: weights with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Character {
    map: FxHashMap<IVec, u64>,
}

impl Character {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn from_raw(map: FxHashMap<IVec, u64>) -> Self {
        Character { map: map.into_iter().filter(|(_, m)| *m > 0).collect() }
    }

    pub(crate) fn raw(&self) -> &FxHashMap<IVec, u64> {
        &self.map
    }

    pub fn from_weights<I: IntoIterator<Item = (Weight, u64)>>(items: I) -> Result<Self> {
        let mut map = FxHashMap::default();
        for (w, m) in items {
            *map.entry(encode(&w)?).or_insert(0) += m;
        }
        Ok(Self::from_raw(map))
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        encode(w).ok().and_then(|v| self.map.get(&v).copied()).unwrap_or(0)
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Sum of all multiplicities, i.e. the dimension.
    pub fn mass(&self) -> u128 {
        self.map.values().map(|&m| m as u128).sum()
    }

    /// Weights in decreasing lexicographic order.
    pub fn entries(&self) -> Vec<(Weight, u64)> {
        let mut v: Vec<_> = self.map.iter().map(|(k, &m)| (k.clone(), m)).collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        v.into_iter().map(|(k, m)| (lattice::decode(&k), m)).collect()
    }

    pub fn shifted(&self, by: &Weight) -> Result<Character> {
        let s = encode(by)?;
        Ok(Character { map: self.map.iter().map(|(k, &m)| (lattice::add(k, &s), m)).collect() })
    }

    /// Character of the tensor product.
    pub fn product(&self, other: &Character) -> Character {
        let mut map: FxHashMap<IVec, u64> = FxHashMap::default();
        for (a, &m) in &self.map {
            for (b, &n) in &other.map {
                *map.entry(lattice::add(a, b)).or_insert(0) += m * n;
            }
        }
        Character { map }
    }
}

/// Dominant weights of an irreducible module with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantCharacter {
    pub(crate) highest: IVec,
    pub(crate) entries: Vec<(IVec, u64)>,
}

impl DominantCharacter {
    pub fn highest_weight(&self) -> Weight {
        lattice::decode(&self.highest)
    }

    /// Dominant weights in order of decreasing height.
    pub fn entries(&self) -> Vec<(Weight, u64)> {
        self.entries.iter().map(|(k, m)| (lattice::decode(k), *m)).collect()
    }

    pub fn multiplicity(&self, dominant: &Weight) -> u64 {
        encode(dominant).ok().and_then(|v| self.entries.iter().find(|(k, _)| *k == v).map(|(_, m)| *m)).unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
