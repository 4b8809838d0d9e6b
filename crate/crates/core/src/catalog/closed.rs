use std::fmt;

use crate::dirac::{HDResult, HdStatus};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::weight::{Weight, Q};

use super::spec::{Flavor, Parity, UnipotentSpec};

/// The expected Dirac cohomology of a catalog representation, per copy
/// of `E(rho)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormHD {
    pub status: HdStatus,
    pub tau: Option<Weight>,
    pub contributing_mu: Option<Weight>,
}

impl ClosedFormHD {
    pub fn per_copy_multiplicity(&self) -> u64 {
        u64::from(self.status == HdStatus::Nonzero)
    }

    fn nonzero(tau: Weight, mu: Weight) -> Self {
        ClosedFormHD { status: HdStatus::Nonzero, tau: Some(tau), contributing_mu: Some(mu) }
    }

    fn zero() -> Self {
        ClosedFormHD { status: HdStatus::Zero, tau: None, contributing_mu: None }
    }
}

fn halves(xs: impl IntoIterator<Item = i64>) -> Weight {
    Weight::from_halves(&xs.into_iter().collect::<Vec<_>>())
}

fn ints(xs: impl IntoIterator<Item = i64>) -> Weight {
    Weight::from_ints(&xs.into_iter().collect::<Vec<_>>())
}

pub fn closed_form_hd(spec: &UnipotentSpec) -> Result<ClosedFormHD> {
    Ok(match spec.flavor {
        Flavor::GlTwoColumn { a, b } => {
            let (a, b) = (a as i64, b as i64);
            let d = (a - b - 1) / 2;
            let tau = ints((0..d).map(|i| d - i).chain((0..2 * b + 1).map(|_| 0)).chain((1..=d).map(|i| -i)));
            let top = (0..b).map(|i| a + b - 1 - 2 * i);
            let mu = halves(top.clone().chain((0..a - b).map(|_| 0)).chain(top.rev().map(|x| -x)));
            ClosedFormHD::nonzero(tau, mu)
        }
        Flavor::GlMaxpar { alpha, beta, k, l } => {
            let p = (alpha - beta + 1) / 2;
            let b = p + l;
            let tau = if l >= 0 {
                // c = (alpha + beta)/2 + (k - l)/2, a half-integer shift.
                let c2 = alpha + beta + k - l;
                halves(
                    (1..=k).rev().map(|i| c2 + 2 * i).chain((0..2 * p).map(|_| c2)).chain((1..=l).map(|i| c2 - 2 * i)),
                )
            } else {
                &spec.two_lambda()? - spec.system.rho()
            };
            let xi = spec.inducing.as_ref().map(|(_, xi)| xi.clone()).expect("GL specs carry their character");
            let n = xi.dim();
            let mut mu = xi;
            for i in 0..b as usize {
                let x = Q::from_integer((p - 1 - i as i64).max(0).into());
                mu.coords_mut()[i] += &x;
                mu.coords_mut()[n - 1 - i] -= &x;
            }
            ClosedFormHD::nonzero(tau, mu)
        }
        Flavor::SoOdd { a, b } => {
            let (a, b) = (a as i64, b as i64);
            let tau = halves((1..=a + b).map(|i| (2 * (b - a - i) + 1).max(1)));
            let mu = ints((1..=a).flat_map(|i| [a + b - 2 * i + 1; 2]).chain((0..b - a).map(|_| 0)));
            ClosedFormHD::nonzero(tau, mu)
        }
        Flavor::SpMetaplectic { n, parity } => {
            let n = n as i64;
            if Parity::of(n) != parity {
                ClosedFormHD::zero()
            } else {
                let tau = ints((0..n).map(|i| n - 1 - i));
                let mu = ints((0..n).map(|i| if i == 0 { n } else { 0 }));
                ClosedFormHD::nonzero(tau, mu)
            }
        }
        Flavor::SoEven { a, b, spherical } => {
            let (a, b) = (a as i64, b as i64);
            if (a % 2 == 0) != spherical {
                ClosedFormHD::zero()
            } else {
                let tau = ints((1..=a + b).map(|i| (b - a - i).max(0)));
                let mu = ints((1..=2 * a).map(|j| a + b - j).chain((0..b - a).map(|_| 0)));
                ClosedFormHD::nonzero(tau, mu)
            }
        }
        Flavor::Exceptional(e) => {
            return Err(Error::Precondition(format!("no K-structure is available for the exceptional parameter {e}")))
        }
    })
}

/// Result of comparing a closed form with the multiplicity formula.
#[derive(Clone, Debug)]
pub struct CrosscheckReport {
    pub label: String,
    pub closed: ClosedFormHD,
    pub engine: HDResult,
    pub agree: bool,
}

impl fmt::Display for CrosscheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |w: &Option<Weight>| w.as_ref().map_or_else(|| "-".to_string(), Weight::to_string);
        write!(
            f,
            "{}: closed {} tau={} mu={} mult={}; engine {} summands={:?} contributions={:?}; {}",
            self.label,
            self.closed.status,
            show(&self.closed.tau),
            show(&self.closed.contributing_mu),
            self.closed.per_copy_multiplicity(),
            self.engine.status,
            self.engine.summands.iter().map(|(t, m)| format!("{t}:{m}")).collect::<Vec<_>>(),
            self.engine.contributions.iter().map(|(t, m)| format!("{t}:{m}")).collect::<Vec<_>>(),
            if self.agree { "agree" } else { "DISAGREE" }
        )
    }
}

impl Engine {
    /// `H_D` of a catalog representation from its K-structure.
    pub fn hd_of_spec(&self, spec: &UnipotentSpec) -> Result<HDResult> {
        let family =
            spec.ktypes.as_ref().ok_or_else(|| Error::Precondition(format!("{} has no K-structure", spec.label())))?;
        self.hd_from_ktype_family(&spec.system, family, spec.lambda())
    }

    pub fn crosscheck(&self, spec: &UnipotentSpec) -> Result<CrosscheckReport> {
        let closed = closed_form_hd(spec)?;
        let engine = self.hd_of_spec(spec)?;
        let agree = closed.status == engine.status
            && closed.per_copy_multiplicity() == engine.per_copy_multiplicity()
            && match (&closed.tau, &closed.contributing_mu) {
                (Some(tau), Some(mu)) => {
                    engine.summands.keys().eq([tau])
                        && engine.contributions.len() == 1
                        && &engine.contributions[0].0 == mu
                        && spec.system.dominant(&(mu - spec.system.rho()))? == *tau
                }
                _ => engine.summands.is_empty(),
            };
        Ok(CrosscheckReport { label: spec.label(), closed, engine, agree })
    }
}

#[cfg(test)]
mod tests {
    use super::super::spec::{gl_maxpar_family, make_spec, Exceptional};
    use super::*;
    use crate::weight;

    fn closed(f: Flavor) -> ClosedFormHD {
        closed_form_hd(&make_spec(f).unwrap()).unwrap()
    }

    #[test]
    fn metaplectic_values() {
        let c = closed(Flavor::SpMetaplectic { n: 5, parity: Parity::Odd });
        assert_eq!(c.tau, Some(weight![4, 3, 2, 1, 0]));
        assert_eq!(c.contributing_mu, Some(weight![5, 0, 0, 0, 0]));
        assert_eq!(closed(Flavor::SpMetaplectic { n: 5, parity: Parity::Even }).status, HdStatus::Zero);
    }

    #[test]
    fn orthogonal_values() {
        let c = closed(Flavor::SoOdd { a: 1, b: 2 });
        assert_eq!(c.tau, Some(weight![1 / 2, 1 / 2, 1 / 2]));
        assert_eq!(c.contributing_mu, Some(weight![2, 2, 0]));
        let c = closed(Flavor::SoOdd { a: 1, b: 1 });
        assert_eq!((c.tau, c.contributing_mu), (Some(weight![1 / 2, 1 / 2]), Some(weight![1, 1])));
        let c = closed(Flavor::SoEven { a: 1, b: 2, spherical: false });
        assert_eq!((c.tau, c.contributing_mu), (Some(weight![0, 0, 0]), Some(weight![2, 1, 0])));
        let c = closed(Flavor::SoEven { a: 1, b: 3, spherical: false });
        assert_eq!((c.tau, c.contributing_mu), (Some(weight![1, 0, 0, 0]), Some(weight![3, 2, 0, 0])));
    }

    #[test]
    fn gl_values() {
        let c = closed(Flavor::GlTwoColumn { a: 4, b: 1 });
        assert_eq!((c.tau, c.contributing_mu), (Some(weight![1, 0, 0, 0, -1]), Some(weight![2, 0, 0, 0, -2])));
        let c = closed_form_hd(&gl_maxpar_family(3, 0, 1, 0).unwrap()).unwrap();
        assert_eq!((c.tau, c.contributing_mu), (Some(weight![3, 2, 2, 2, 2]), Some(weight![4, 3, 3, 1, 0])));
    }

    #[test]
    fn exceptional_has_no_closed_form() {
        assert!(closed_form_hd(&make_spec(Flavor::Exceptional(Exceptional::E6TwoA1)).unwrap()).is_err());
    }

    #[test]
    fn small_crosschecks() {
        let e = Engine::new();
        for f in [
            Flavor::GlTwoColumn { a: 3, b: 2 },
            Flavor::SoOdd { a: 1, b: 2 },
            Flavor::SpMetaplectic { n: 4, parity: Parity::Even },
            Flavor::SpMetaplectic { n: 4, parity: Parity::Odd },
            Flavor::SoEven { a: 1, b: 2, spherical: false },
        ] {
            let r = e.crosscheck(&make_spec(f).unwrap()).unwrap();
            assert!(r.agree, "{r}");
        }
    }
}
