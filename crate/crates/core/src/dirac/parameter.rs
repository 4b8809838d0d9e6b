use std::fmt;

use crate::error::{Error, Result};
use crate::roots::{RootSystem, WeylWord};
use crate::weight::Weight;

/// Zhelobenko parameter `(lambda_L, lambda_R)` of an irreducible
/// admissible module of a complex group; `mu = lambda_L - lambda_R` is the
/// extremal weight of the lowest K-type and `nu = lambda_L + lambda_R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GKParameter {
    pub lambda_l: Weight,
    pub lambda_r: Weight,
}

/// A parameter written as `(lambda, -s lambda)` with `lambda` dominant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionForm {
    pub lambda: Weight,
    pub s: WeylWord,
}

impl GKParameter {
    pub fn new(sys: &RootSystem, lambda_l: Weight, lambda_r: Weight) -> Result<Self> {
        lambda_l.check_dim(sys.ambient_dim())?;
        lambda_r.check_dim(sys.ambient_dim())?;
        let mu = &lambda_l - &lambda_r;
        if !sys.is_integral(&mu)? {
            return Err(Error::NotIntegral(mu.to_string()));
        }
        Ok(GKParameter { lambda_l, lambda_r })
    }

    pub fn spherical(sys: &RootSystem, lambda: Weight) -> Result<Self> {
        Self::new(sys, lambda.clone(), lambda)
    }

    pub fn mu(&self) -> Weight {
        &self.lambda_l - &self.lambda_r
    }

    pub fn nu(&self) -> Weight {
        &self.lambda_l + &self.lambda_r
    }

    /// Conjugates `lambda_L` to the dominant `lambda` and finds `s` with
    /// `s lambda = -w lambda_R`. Returns `None` when `-lambda_R` is not
    /// conjugate to `lambda_L`.
    pub fn involution_form(&self, sys: &RootSystem) -> Result<Option<InvolutionForm>> {
        let (lambda, w) = sys.make_dominant(&self.lambda_l)?;
        let target = -w.apply(sys, &self.lambda_r);
        let (d, u) = sys.make_dominant(&target)?;
        if d != lambda {
            return Ok(None);
        }
        Ok(Some(InvolutionForm { lambda, s: u.inverse() }))
    }
}

impl fmt::Display for GKParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}]", self.lambda_l, self.lambda_r)
    }
}

/// Checks that `s` is an involution (on the standard basis) for a
/// regular `lambda`.
pub fn hermitian_involution_check(sys: &RootSystem, lambda: &Weight, s: &WeylWord) -> Result<bool> {
    if !sys.is_regular(lambda)? {
        return Err(Error::NotRegular(lambda.to_string()));
    }
    let n = sys.ambient_dim();
    Ok((0..n).all(|i| {
        let e = Weight::unit(n, i);
        s.apply(sys, &s.apply(sys, &e)) == e
    }))
}
