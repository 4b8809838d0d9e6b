use num_traits::Zero;

use crate::error::{Error, Result};
use crate::weight::Weight;

use super::system::{RootSystem, WeylWord};

/// A standard Levi subalgebra `m`, determined by a subset of the simple
/// roots, together with the nilradical `n` of the standard parabolic.
#[derive(Clone, Debug)]
pub struct LeviDatum {
    parent: RootSystem,
    simple_indices: Vec<usize>,
    levi: RootSystem,
    delta_m: Vec<Weight>,
    delta_n: Vec<Weight>,
    rho_m: Weight,
    rho_n: Weight,
    w_m: WeylWord,
}

impl LeviDatum {
    pub fn new(parent: &RootSystem, simple_indices: &[usize]) -> Result<Self> {
        let mut idx = simple_indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&bad) = idx.iter().find(|&&i| i >= parent.semisimple_rank()) {
            return Err(Error::InvalidParameters(format!("simple root index {bad} out of range")));
        }
        let in_levi =
            |k: usize| parent.simple_coefficients(k).iter().enumerate().all(|(i, &c)| c == 0 || idx.contains(&i));
        let (mut delta_m, mut delta_n) = (Vec::new(), Vec::new());
        for (k, b) in parent.positive_roots().iter().enumerate() {
            if in_levi(k) {
                delta_m.push(b.clone());
            } else {
                delta_n.push(b.clone());
            }
        }
        let label = format!("{}[{}]", parent.label(), idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","));
        let simple: Vec<Weight> = idx.iter().map(|&i| parent.simple_roots()[i].clone()).collect();
        let levi = RootSystem::from_simple_roots(None, label, parent.rank(), parent.ambient_dim(), simple)?;
        if levi.positive_roots().len() != delta_m.len() {
            return Err(Error::Inconsistent("Levi closure disagrees with root supports".into()));
        }
        let mut rho_n = Weight::zero(parent.ambient_dim());
        for b in &delta_n {
            rho_n += b;
        }
        let rho_n = rho_n.half();
        let rho_m = levi.rho().clone();
        // The longest element of W_m, written in the parent's letters.
        let local = levi.longest_element();
        let w_m = WeylWord::new(local.letters().iter().map(|&j| idx[j]).collect());
        Ok(LeviDatum { parent: parent.clone(), simple_indices: idx, levi, delta_m, delta_n, rho_m, rho_n, w_m })
    }

    /// Every standard Levi, indexed by subsets of the simple roots.
    pub fn all_standard(parent: &RootSystem) -> Result<Vec<Self>> {
        let r = parent.semisimple_rank();
        (0u32..(1 << r))
            .map(|mask| {
                let idx: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
                LeviDatum::new(parent, &idx)
            })
            .collect()
    }

    /// The Levi factor of the parabolic determined by `xi`: the simple
    /// roots orthogonal to `xi`.
    pub fn from_character(parent: &RootSystem, xi: &Weight) -> Result<Self> {
        xi.check_dim(parent.ambient_dim())?;
        let idx: Vec<usize> =
            (0..parent.semisimple_rank()).filter(|&i| parent.simple_pairing(xi, i).is_zero()).collect();
        LeviDatum::new(parent, &idx)
    }

    pub fn parent(&self) -> &RootSystem {
        &self.parent
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple_indices
    }

    /// The Levi as a root system in the parent's ambient coordinates.
    pub fn levi(&self) -> &RootSystem {
        &self.levi
    }

    pub fn delta_m(&self) -> &[Weight] {
        &self.delta_m
    }

    pub fn delta_n(&self) -> &[Weight] {
        &self.delta_n
    }

    pub fn rho_m(&self) -> &Weight {
        &self.rho_m
    }

    pub fn rho_n(&self) -> &Weight {
        &self.rho_n
    }

    /// Longest element of the Levi Weyl group.
    pub fn w_m(&self) -> &WeylWord {
        &self.w_m
    }

    /// `xi` is orthogonal to every root of `m`.
    pub fn is_character(&self, xi: &Weight) -> bool {
        self.delta_m.iter().all(|a| xi.dot(a).is_zero())
    }

    pub fn is_levi_dominant(&self, w: &Weight) -> bool {
        self.levi.is_dominant(w)
    }
}

/// Convenience wrapper matching the engine operation name.
pub fn parabolic_from_character(parent: &RootSystem, xi: &Weight) -> Result<LeviDatum> {
    LeviDatum::from_character(parent, xi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_root_system, Series};
    use crate::weight;

    #[test]
    fn sp10_gl2_sp6() {
        let c5 = build_root_system(Series::C, 5).unwrap();
        let d = LeviDatum::from_character(&c5, &weight![3, 3, 0, 0, 0]).unwrap();
        assert_eq!(d.simple_indices(), &[0, 2, 3, 4]);
        assert_eq!(d.delta_m().len(), 1 + 9);
        assert_eq!(d.delta_n().len(), 15);
        assert_eq!(d.rho_m(), &weight![1 / 2, -1 / 2, 3, 2, 1]);
        let rp = weight![4, 2, 5, 3, 1];
        assert_eq!(d.w_m().apply(&c5, &rp), weight![2, 4, -5, -3, -1]);
    }

    #[test]
    fn levi_counts_and_extremes() {
        let f4 = build_root_system(Series::F, 4).unwrap();
        let all = LeviDatum::all_standard(&f4).unwrap();
        assert_eq!(all.len(), 16);
        assert_eq!(all[0].delta_n().len(), 24);
        assert!(all[15].delta_n().is_empty());
        for d in &all {
            assert_eq!(&(d.rho_m() + d.rho_n()), f4.rho());
        }
        assert!(LeviDatum::new(&f4, &[4]).is_err());
    }
}
