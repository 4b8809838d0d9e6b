use std::collections::BTreeMap;
use std::fmt;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::lattice::{self, encode, Frame};
use crate::roots::RootSystem;
use crate::weight::{qi, Weight};

use super::family::KTypeFamily;

/// Outcome of the regular-integral test on `2 lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecessaryCondition {
    pub regular: bool,
    pub integral: bool,
    /// `tau' = dom(2 lambda) - rho`, the only possible K-type of Dirac
    /// cohomology, when `2 lambda` is regular and integral.
    pub tau: Option<Weight>,
}

impl NecessaryCondition {
    pub fn holds(&self) -> bool {
        self.regular && self.integral
    }
}

pub fn necessary_condition(sys: &RootSystem, lambda: &Weight) -> Result<NecessaryCondition> {
    let two = lambda.double();
    let regular = sys.is_regular(&two)?;
    let integral = sys.is_integral(&two)?;
    let tau = if regular && integral { Some(&sys.dominant(&two)? - sys.rho()) } else { None };
    Ok(NecessaryCondition { regular, integral, tau })
}

/// `dim Spin / dim E(rho) = 2^{floor(r/2)}` where `r` is the rank: the
/// number of copies of `E(rho)` in the spin module of `s = g`.
pub fn spin_factor(sys: &RootSystem) -> u64 {
    let dim_s = sys.algebra_dim();
    let exponent = dim_s / 2 - sys.positive_roots().len();
    1u64 << exponent
}

/// The count `floor(r/2)` obtained by reading the exponent as a plain
/// multiplicity; kept to report where it disagrees with [`spin_factor`].
pub fn literal_spin_count(sys: &RootSystem) -> u64 {
    (sys.rank() / 2) as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HdStatus {
    Nonzero,
    Zero,
    Undetermined,
}

impl fmt::Display for HdStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HdStatus::Nonzero => "nonzero",
            HdStatus::Zero => "zero",
            HdStatus::Undetermined => "undetermined",
        })
    }
}

/// Dirac cohomology as a K-module, per copy of `E(rho)` in the spin
/// module, together with the spin multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HDResult {
    pub summands: BTreeMap<Weight, u64>,
    pub spin_factor: u64,
    pub status: HdStatus,
    /// K-types `mu` of the module and `[E(mu) (x) E(rho) : E(tau')]`.
    pub contributions: Vec<(Weight, u64)>,
}

impl HDResult {
    pub fn per_copy_multiplicity(&self) -> u64 {
        self.summands.values().sum()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.per_copy_multiplicity() * self.spin_factor
    }

    pub(crate) fn from_counts(tau: Weight, spin: u64, contributions: Vec<(Weight, u64)>) -> Self {
        let total: u64 = contributions.iter().map(|c| c.1).sum();
        let mut summands = BTreeMap::new();
        if total > 0 {
            summands.insert(tau, total);
        }
        HDResult {
            summands,
            spin_factor: spin,
            status: if total > 0 { HdStatus::Nonzero } else { HdStatus::Zero },
            contributions: contributions.into_iter().filter(|c| c.1 > 0).collect(),
        }
    }
}

impl Engine {
    /// Dirac cohomology of a unitary module with infinitesimal character
    /// `lambda` and multiplicity-free K-types `family`.
    ///
    /// The candidates `mu` are the family members in `rho + W tau'`, found
    /// from the orbit of `tau'`; if that orbit exceeds the budget the
    /// family is enumerated up to norm `|tau'| + |rho| + margin` instead.
    pub fn hd_from_ktype_family(&self, sys: &RootSystem, family: &KTypeFamily, lambda: &Weight) -> Result<HDResult> {
        family.base().check_dim(sys.ambient_dim())?;
        let nc = necessary_condition(sys, lambda)?;
        let tau = nc.tau.ok_or_else(|| {
            Error::Precondition(format!("2*{lambda} is not regular integral, so Dirac cohomology vanishes"))
        })?;
        let candidates = match self.orbit_candidates(sys, family, &tau) {
            Err(Error::BudgetExceeded { .. }) => self.enumerated_candidates(sys, family, &tau)?,
            other => other?,
        };
        let mut contributions = Vec::new();
        for mu in candidates {
            if !sys.is_dominant(&mu) {
                return Err(Error::Inconsistent(format!("family member {mu} is not dominant")));
            }
            let m = self.tensor_multiplicity(sys, &mu, sys.rho(), &tau)?;
            contributions.push((mu, m));
        }
        Ok(HDResult::from_counts(tau, spin_factor(sys), contributions))
    }

    fn orbit_candidates(&self, sys: &RootSystem, family: &KTypeFamily, tau: &Weight) -> Result<Vec<Weight>> {
        let frame = Frame::new(sys);
        let t = encode(tau)?;
        let mut meter = self.meter("hd_candidates");
        let orbit = frame.orbit(&t);
        meter.charge(orbit.len() as u64)?;
        let mut out: Vec<Weight> = orbit
            .into_iter()
            .map(|x| lattice::decode(&lattice::add(&x, &frame.rho)))
            .filter(|mu| family.contains(mu))
            .collect();
        out.sort();
        Ok(out)
    }

    fn enumerated_candidates(&self, sys: &RootSystem, family: &KTypeFamily, tau: &Weight) -> Result<Vec<Weight>> {
        let margin = sys.positive_roots().iter().map(|a| a.norm2()).max().unwrap_or_else(|| qi(1));
        let bound = qi(3) * (tau.norm2() + sys.rho().norm2() + margin);
        let mut out = Vec::new();
        for mu in family.enumerate(&bound, self.budget_limit())? {
            if sys.dominant(&(&mu - sys.rho()))? == *tau {
                out.push(mu);
            }
        }
        Ok(out)
    }
}

/// `|tau + rho|^2` and `|2 lambda|^2` for the Dirac inequality.
pub fn dirac_norms(sys: &RootSystem, tau: &Weight, lambda: &Weight) -> (crate::Q, crate::Q) {
    ((tau + sys.rho()).norm2(), lambda.double().norm2())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_root_system, Series};
    use crate::weight;

    #[test]
    fn spin_factor_by_rank() {
        for (s, r, f) in
            [(Series::A, 1, 1), (Series::C, 5, 4), (Series::F, 4, 4), (Series::GL, 5, 4), (Series::E, 7, 8)]
        {
            assert_eq!(spin_factor(&build_root_system(s, r).unwrap()), f);
        }
    }

    #[test]
    fn literal_count_never_matches_dimension_ratio() {
        for r in 1..=8 {
            let sys = build_root_system(Series::A, r).unwrap();
            assert_eq!(spin_factor(&sys), 1 << literal_spin_count(&sys));
            assert_ne!(spin_factor(&sys), literal_spin_count(&sys), "rank {r}");
        }
    }

    #[test]
    fn necessary_condition_examples() {
        let c2 = build_root_system(Series::C, 2).unwrap();
        let nc = necessary_condition(&c2, &weight![3 / 2, 1 / 2]).unwrap();
        assert!(nc.holds());
        assert_eq!(nc.tau, Some(weight![1, 0]));
        let nc = necessary_condition(&c2, &weight![1, 1]).unwrap();
        assert!(!nc.regular && nc.tau.is_none());
        let nc = necessary_condition(&c2, &weight![1 / 4, 0]).unwrap();
        assert!(!nc.integral);
    }
}
