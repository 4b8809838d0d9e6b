use std::collections::BTreeMap;

use num_traits::Signed;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::lattice::{self, encode, Frame};
use crate::roots::LeviDatum;
use crate::weight::Weight;

use super::hd::{spin_factor, HDResult, HdStatus};

/// Dirac cohomology of a module induced from a unitary character with
/// infinitesimal character `rho/2`, with the data that produced it.
#[derive(Clone, Debug)]
pub struct HalfRhoInduced {
    pub hd: HDResult,
    /// `rho' = xi + 2 rho_m`, the `rho` of the positive system making `2 lambda` dominant.
    pub rho_prime: Weight,
    /// `w_m rho' + rho`, the lowest weight of the relevant `m`-type.
    pub extremal: Weight,
    /// `rho' + w_m rho`, its highest weight.
    pub highest: Weight,
    /// Multiplicity of that `m`-type in the exterior algebra of `n`.
    pub exterior_multiplicity: u64,
}

/// Subset of `Delta(n)` realizing the extremal weight of a unitarily
/// induced module.
#[derive(Clone, Debug)]
pub struct InducedWitness {
    pub two_lambda: Weight,
    pub rho_prime: Weight,
    /// `w_m rho' + rho = 2 rho(B)`.
    pub extremal: Weight,
    pub subset: Vec<Weight>,
}

fn check_character(datum: &LeviDatum, xi: &Weight) -> Result<()> {
    xi.check_dim(datum.parent().ambient_dim())?;
    if !datum.is_character(xi) {
        return Err(Error::NotLeviCharacter(xi.to_string()));
    }
    if !datum.parent().is_dominant(xi) {
        return Err(Error::NotDominant(xi.to_string()));
    }
    Ok(())
}

/// Dominant characters `xi` of `m` such that `xi + 2 rho_m` is conjugate
/// to `rho`, i.e. the induced module has infinitesimal character `rho/2`.
pub fn half_rho_characters(datum: &LeviDatum) -> Result<Vec<Weight>> {
    let parent = datum.parent();
    let frame = Frame::new(parent);
    let two_rho_m = encode(&datum.rho_m().double())?;
    let mut out: Vec<Weight> = frame
        .orbit(&frame.rho)
        .into_iter()
        .map(|x| lattice::decode(&lattice::sub(&x, &two_rho_m)))
        .filter(|xi| datum.is_character(xi) && parent.is_dominant(xi))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

impl Engine {
    /// Dirac cohomology of `Ind_P(C_xi)` at infinitesimal character
    /// `rho/2`: it is one copy of the trivial K-type per copy of `E(rho)`
    /// exactly when the `m`-type of extremal weight `w_m rho' + rho`
    /// occurs once in the exterior algebra of `n`.
    pub fn hd_half_rho_induced(&self, datum: &LeviDatum, xi: &Weight) -> Result<HalfRhoInduced> {
        check_character(datum, xi)?;
        let parent = datum.parent();
        let rho_prime = xi + &datum.rho_m().double();
        if &parent.dominant(&rho_prime)? != parent.rho() {
            return Err(Error::Precondition(format!("{xi} + 2 rho_m is not conjugate to rho")));
        }
        let extremal = &datum.w_m().apply(parent, &rho_prime) + parent.rho();
        let highest = &rho_prime + &datum.w_m().apply(parent, parent.rho());
        let ext = self.exterior_character(datum)?;
        let decomposition = self.levi_decompose(&ext, datum)?;
        let mult = decomposition.get(&highest).copied().unwrap_or(0);
        if mult != 1 {
            return Err(Error::Inconsistent(format!(
                "m-type with highest weight {highest} occurs {mult} times in the exterior algebra"
            )));
        }
        let hd = HDResult {
            summands: BTreeMap::from([(Weight::zero(parent.ambient_dim()), 1)]),
            spin_factor: spin_factor(parent),
            status: HdStatus::Nonzero,
            contributions: vec![(xi.clone(), 1)],
        };
        Ok(HalfRhoInduced { hd, rho_prime, extremal, highest, exterior_multiplicity: mult })
    }
}

/// For `Ind_P(C_xi (x) pi_m)` with `2 lambda = xi + tau_m + rho_m` regular
/// integral, finds `B` in `Delta(n)` with `2 rho(B) = w_m rho' + rho`.
pub fn hd_unitarily_induced_witness(datum: &LeviDatum, xi: &Weight, tau_m: &Weight) -> Result<InducedWitness> {
    check_character(datum, xi)?;
    let parent = datum.parent();
    tau_m.check_dim(parent.ambient_dim())?;
    if !datum.is_levi_dominant(tau_m) {
        return Err(Error::NotDominant(tau_m.to_string()));
    }
    let two_lambda = &(xi + tau_m) + datum.rho_m();
    if !parent.is_regular(&two_lambda)? {
        return Err(Error::NotRegular(two_lambda.to_string()));
    }
    if !parent.is_integral(&two_lambda)? {
        return Err(Error::NotIntegral(two_lambda.to_string()));
    }
    let (_, w) = parent.make_dominant(&two_lambda)?;
    let rho_prime = w.inverse().apply(parent, parent.rho());
    let x = datum.w_m().apply(parent, &rho_prime);
    let subset: Vec<Weight> = datum.delta_n().iter().filter(|a| a.dot(&x).is_positive()).cloned().collect();
    let extremal = &x + parent.rho();
    if parent.two_rho_of_subset(&subset)? != extremal {
        return Err(Error::Inconsistent(format!("2 rho(B) differs from {extremal}")));
    }
    for a in &subset {
        for &i in datum.simple_indices() {
            let b = a - &parent.simple_roots()[i];
            if parent.positive_index(&b).is_some() && !subset.contains(&b) {
                return Err(Error::Inconsistent(format!("{a} in B but {b} is not")));
            }
        }
    }
    Ok(InducedWitness { two_lambda, rho_prime, extremal, subset })
}
