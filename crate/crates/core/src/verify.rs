//! Named verification suites, each a list of pass/fail checks.

use std::fmt;

use num_traits::Zero;

use crate::catalog::{closed_form_hd, make_spec, Exceptional, Flavor, Parity, MAXPAR_GRID};
use crate::dirac::{dirac_norms, half_rho_characters, hd_unitarily_induced_witness, necessary_condition, HdStatus};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::repr::{prv_component, weyl_dim};
use crate::roots::{integral_subsystem, parse_system, LeviDatum, RootSystem};
use crate::weight::{qi, Weight};

pub const SUITES: [&str; 11] =
    ["kostant", "reserho", "prv", "crosscheck", "parity", "maxpar", "halfrho", "sp10", "exceptional", "f4", "norms"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub case: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.suite, self.case, self.detail)
    }
}

fn check(suite: &'static str, case: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check { suite, case: case.into(), passed, detail: detail.into() }
}

fn systems(args: &[String], default: &[&str]) -> Result<Vec<RootSystem>> {
    if args.is_empty() {
        default.iter().map(|s| parse_system(s)).collect()
    } else {
        args.iter().map(|s| parse_system(s)).collect()
    }
}

/// Parses `lo..hi` (inclusive) or a single integer.
fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<u32>> {
    let bad = || Error::Parse(format!("expected N or LO..HI, got `{s}`"));
    match s.split_once("..") {
        Some((a, b)) => {
            Ok(a.trim().parse().map_err(|_| bad())?..=b.trim().trim_start_matches('=').parse().map_err(|_| bad())?)
        }
        None => {
            let n: u32 = s.trim().parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
    }
}

/// The catalog flavors selected by `crosscheck` arguments.
pub fn crosscheck_selection(args: &[String]) -> Result<Vec<Flavor>> {
    let two_column = || [(2, 1), (3, 2), (4, 1), (4, 3)].map(|(a, b)| Flavor::GlTwoColumn { a, b }).to_vec();
    let so_odd = || [(1, 1), (1, 2), (2, 3), (1, 4)].map(|(a, b)| Flavor::SoOdd { a, b }).to_vec();
    let so_even = || {
        [(1, 2), (2, 2), (1, 3)]
            .into_iter()
            .flat_map(|(a, b)| [true, false].map(|spherical| Flavor::SoEven { a, b, spherical }))
            .collect::<Vec<_>>()
    };
    let sp = |r: std::ops::RangeInclusive<u32>| {
        r.flat_map(|n| [Parity::Even, Parity::Odd].map(|parity| Flavor::SpMetaplectic { n, parity }))
            .collect::<Vec<_>>()
    };
    let Some(head) = args.first() else {
        return Ok([two_column(), so_odd(), sp(2..=6), so_even()].concat());
    };
    let range = || args.get(1).map(|s| parse_range(s)).transpose();
    Ok(match head.as_str() {
        "gl" | "gl-two-column" => two_column(),
        "so-odd" | "b" => so_odd(),
        "so-even" | "d" => so_even(),
        "sp" | "sp-metaplectic" | "c" => sp(range()?.unwrap_or(2..=6)),
        _ => args.iter().map(|s| s.parse()).collect::<Result<_>>()?,
    })
}

impl Engine {
    /// Runs one suite. `args` narrows it (systems, ranges or flavors);
    /// with no arguments the suite's default cases run.
    pub fn verify(&self, suite: &str, args: &[String]) -> Result<Vec<Check>> {
        match suite {
            "kostant" => self.verify_kostant(&systems(args, &["A1", "A2", "A3", "B2", "B3", "C3", "G2"])?),
            "reserho" => self.verify_reserho(&systems(args, &["A3", "B3", "C3", "A4"])?),
            "prv" => self.verify_prv(&systems(args, &["A2", "B2", "C3", "G2"])?),
            "crosscheck" => self.verify_crosscheck(&crosscheck_selection(args)?),
            "parity" => self.verify_parity(),
            "maxpar" => self.verify_maxpar(),
            "halfrho" => self.verify_half_rho(&systems(args, &["A4", "B3", "C4", "D4"])?),
            "sp10" => self.verify_sp10(),
            "exceptional" => Ok(verify_exceptional()),
            "f4" => self.verify_f4(),
            "norms" => self.verify_norms(),
            "all" => {
                let mut out = Vec::new();
                for s in SUITES {
                    out.extend(self.verify(s, &[])?);
                }
                Ok(out)
            }
            other => {
                Err(Error::Parse(format!("unknown suite `{other}`; expected one of {} or all", SUITES.join(", "))))
            }
        }
    }

    fn verify_kostant(&self, systems: &[RootSystem]) -> Result<Vec<Check>> {
        systems
            .iter()
            .map(|sys| {
                let r = self.kostant_scan(sys)?;
                let passed = r.all_hold() && r.equality_subsets == r.weyl_order;
                Ok(check(
                    "kostant",
                    sys.label(),
                    passed,
                    format!(
                        "{}/{} equality subsets, |W|={}, inequality={}, criterion={}, parametrization={}",
                        r.equality_subsets,
                        r.subsets,
                        r.weyl_order,
                        r.inequality_holds,
                        r.equality_criterion_holds,
                        r.parametrization_holds
                    ),
                ))
            })
            .collect()
    }

    /// `E(rho)|_m = F(rho_m) (x) C_{-rho_n} (x) exterior(n)` for every
    /// standard Levi, as characters and by dimension of the branching.
    fn verify_reserho(&self, systems: &[RootSystem]) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for sys in systems {
            let e_rho = self.freudenthal(sys, sys.rho())?;
            let dim = weyl_dim(sys, sys.rho())?;
            for d in LeviDatum::all_standard(sys)? {
                let f = self.freudenthal(d.levi(), d.rho_m())?.shifted(&-d.rho_n())?;
                let rhs = f.product(&self.exterior_character(&d)?);
                let branching = self.levi_decompose(&e_rho, &d)?;
                let mut total = num_bigint::BigUint::zero();
                for (hw, m) in &branching {
                    total += weyl_dim(d.levi(), hw)? * m;
                }
                let passed = rhs == e_rho && total == dim;
                out.push(check(
                    "reserho",
                    d.levi().label(),
                    passed,
                    format!("{} Levi types, dimension {total} of {dim}", branching.len()),
                ));
            }
        }
        Ok(out)
    }

    fn verify_prv(&self, systems: &[RootSystem]) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for sys in systems {
            let mut small: Vec<Weight> =
                self.dominant_character(sys, sys.rho())?.entries().into_iter().map(|(w, _)| w).collect();
            small.sort_by(|a, b| a.norm2().cmp(&b.norm2()).then_with(|| a.cmp(b)));
            small.truncate(6);
            for (i, a) in small.iter().enumerate() {
                for b in &small[i..] {
                    let t = self.klimyk_tensor(sys, a, b)?;
                    let flipped = self.klimyk_tensor(sys, b, a)?;
                    let prv = prv_component(sys, a, b)?;
                    let mut total = num_bigint::BigUint::zero();
                    for (hw, m) in &t {
                        total += weyl_dim(sys, hw)? * m;
                    }
                    let expected = weyl_dim(sys, a)? * weyl_dim(sys, b)?;
                    let present = t.get(&prv).copied().unwrap_or(0);
                    out.push(check(
                        "prv",
                        format!("{} {a} (x) {b}", sys.label()),
                        present >= 1 && total == expected && t == flipped,
                        format!("PRV {prv} multiplicity {present}, {} summands, dimension {total}", t.len()),
                    ));
                }
            }
        }
        Ok(out)
    }

    fn verify_crosscheck(&self, flavors: &[Flavor]) -> Result<Vec<Check>> {
        flavors
            .iter()
            .map(|&f| {
                let r = self.crosscheck(&make_spec(f)?)?;
                Ok(check("crosscheck", f.to_string(), r.agree, r.to_string()))
            })
            .collect()
    }

    fn verify_parity(&self) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for n in 2..=6u32 {
            for parity in [Parity::Even, Parity::Odd] {
                let f = Flavor::SpMetaplectic { n, parity };
                let hd = self.hd_of_spec(&make_spec(f)?)?;
                let expected = Parity::of(n as i64) == parity;
                out.push(check(
                    "parity",
                    f.to_string(),
                    (hd.status == HdStatus::Nonzero) == expected,
                    format!("engine {}, expected {}", hd.status, if expected { "nonzero" } else { "zero" }),
                ));
            }
        }
        for (a, b) in [(1u32, 1u32), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3), (2, 4), (1, 5)] {
            for spherical in [true, false] {
                let f = Flavor::SoEven { a, b, spherical };
                let hd = self.hd_of_spec(&make_spec(f)?)?;
                let expected = (a % 2 == 0) == spherical;
                out.push(check(
                    "parity",
                    f.to_string(),
                    (hd.status == HdStatus::Nonzero) == expected,
                    format!("engine {}, expected {}", hd.status, if expected { "nonzero" } else { "zero" }),
                ));
            }
        }
        Ok(out)
    }

    /// Conjecture form `H_D = E(2 lambda - rho)` once, with the unique
    /// contributing K-type, confirmed by enumerating every family member
    /// that could contribute and computing its multiplicity directly.
    fn verify_maxpar(&self) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for (alpha, beta, k, l) in MAXPAR_GRID {
            let spec = make_spec(Flavor::GlMaxpar { alpha, beta, k, l })?;
            let closed = closed_form_hd(&spec)?;
            let sys = &spec.system;
            let tau = &spec.two_lambda()? - sys.rho();
            let family = spec.ktypes.as_ref().expect("GL specs have K-types");
            // E(tau) in E(mu) (x) E(rho) forces |mu| <= |tau| + |rho|.
            let bound = qi(2) * (tau.norm2() + sys.rho().norm2());
            let mut hits = Vec::new();
            let members = family.enumerate(&bound, self.budget_limit())?;
            for mu in &members {
                let m = self.tensor_multiplicity(sys, mu, sys.rho(), &tau)?;
                if m > 0 {
                    hits.push((mu.clone(), m));
                }
            }
            let r = self.crosscheck(&spec)?;
            let passed = r.agree
                && closed.tau.as_ref() == Some(&tau)
                && hits.len() == 1
                && hits[0].1 == 1
                && Some(&hits[0].0) == closed.contributing_mu.as_ref();
            out.push(check(
                "maxpar",
                spec.label(),
                passed,
                format!(
                    "tau {tau}, mu {}, {} members scanned, contributing {:?}",
                    closed.contributing_mu.map(|m| m.to_string()).unwrap_or_default(),
                    members.len(),
                    hits.iter().map(|(m, c)| format!("{m}:{c}")).collect::<Vec<_>>()
                ),
            ));
        }
        Ok(out)
    }

    /// Every standard parabolic with a character giving infinitesimal
    /// character `rho/2`; also checks that `s = w_m` for its parameter.
    fn verify_half_rho(&self, systems: &[RootSystem]) -> Result<Vec<Check>> {
        let probes: Vec<Vec<i64>> =
            (0..20).map(|t| (0..8).map(|i| ((t * 7 + i * 3) % 11) as i64 - 5).collect()).collect();
        let mut out = Vec::new();
        for sys in systems {
            for d in LeviDatum::all_standard(sys)? {
                for xi in half_rho_characters(&d)? {
                    let r = self.hd_half_rho_induced(&d, &xi)?;
                    let lambda_l = &xi.half() + d.rho_m();
                    let lambda_r = &(-xi.half()) + d.rho_m();
                    let s_is_w_m = s_equals_w_m(sys, &d, &lambda_l, &lambda_r, &probes)?;
                    let passed = r.exterior_multiplicity == 1
                        && r.hd.per_copy_multiplicity() == 1
                        && r.hd.summands.keys().all(Weight::is_zero)
                        && s_is_w_m;
                    out.push(check(
                        "halfrho",
                        format!("{} xi={xi}", d.levi().label()),
                        passed,
                        format!(
                            "rho'={}, m-type {} occurs {} time(s), s = w_m: {s_is_w_m}",
                            r.rho_prime, r.highest, r.exterior_multiplicity
                        ),
                    ));
                }
            }
        }
        Ok(out)
    }

    fn verify_sp10(&self) -> Result<Vec<Check>> {
        let c5 = parse_system("C5")?;
        let d = LeviDatum::new(&c5, &[0, 2, 3, 4])?;
        let xi = Weight::from_ints(&[3, 3, 0, 0, 0]);
        let tau_m = Weight::from_halves(&[1, -1, 4, 2, 0]);
        let w = hd_unitarily_induced_witness(&d, &xi, &tau_m)?;
        let sum = c5.two_rho_of_subset(&w.subset)?;
        let mut out = vec![check(
            "sp10",
            "witness",
            sum == Weight::from_ints(&[7, 8, -2, -1, 0]) && w.subset.len() == 12,
            format!("2 lambda = {}, |B| = {}, 2 rho(B) = {sum}", w.two_lambda, w.subset.len()),
        )];
        let variant = LeviDatum::new(&c5, &[0, 3, 4])?;
        let xi = Weight::from_ints(&[4, 4, 1, 0, 0]);
        let r = self.hd_half_rho_induced(&variant, &xi)?;
        out.push(check(
            "sp10",
            "half-rho variant",
            r.exterior_multiplicity == 1,
            format!("{} xi={xi}: multiplicity {}", variant.levi().label(), r.exterior_multiplicity),
        ));
        let (dom, _) = c5.make_dominant(&Weight::from_halves(&[4, 2, 5, 3, 1]))?;
        out.push(check("sp10", "conjugate", dom == Weight::from_halves(&[5, 4, 3, 2, 1]), format!("dominant {dom}")));
        Ok(out)
    }

    fn verify_f4(&self) -> Result<Vec<Check>> {
        Ok(self
            .f4_table()?
            .into_iter()
            .filter(|r| r.row.unitary)
            .map(|r| {
                check(
                    "f4",
                    format!("row {} {}", r.row.index, r.row.lambda_r),
                    r.passes(),
                    format!(
                        "[pi:E(rho)] = {}, via {}",
                        r.e_rho_multiplicity.map_or("-".into(), |m| m.to_string()),
                        r.inducing.map_or("-".into(), |i| i.to_string())
                    ),
                )
            })
            .collect())
    }

    /// Norm equality `|tau' + rho| = |2 lambda|` for every catalog spec,
    /// and the Dirac inequality on the Klimyk summands of `E(mu) (x) E(rho)`
    /// for the smallest members of each family of rank at most 4.
    fn verify_norms(&self) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for f in crate::catalog::standard_catalog() {
            let spec = make_spec(f)?;
            let sys = &spec.system;
            let nc = necessary_condition(sys, spec.lambda())?;
            let Some(tau) = nc.tau.clone() else {
                out.push(check("norms", f.to_string(), false, "2 lambda is not regular integral"));
                continue;
            };
            let (lhs, rhs) = dirac_norms(sys, &tau, spec.lambda());
            let mut passed = lhs == rhs;
            let mut detail = format!("|tau'+rho|^2 = {lhs}, |2 lambda|^2 = {rhs}");
            if let (Some(family), true) = (&spec.ktypes, sys.rank() <= 4) {
                let bound = tau.norm2() + sys.rho().norm2();
                let mut members = family.enumerate(&bound, self.budget_limit())?;
                members.sort_by(|a, b| a.norm2().cmp(&b.norm2()));
                members.truncate(8);
                let mut summands = 0;
                for mu in &members {
                    for t in self.klimyk_tensor(sys, mu, sys.rho())?.keys() {
                        let (l, r) = dirac_norms(sys, t, spec.lambda());
                        summands += 1;
                        if l < r || (l == r && *t != tau) {
                            passed = false;
                            detail.push_str(&format!("; violated by {t} in {mu} (x) rho"));
                        }
                    }
                }
                detail.push_str(&format!("; {summands} summands of {} members", members.len()));
            }
            out.push(check("norms", f.to_string(), passed, detail));
        }
        Ok(out)
    }
}

fn s_equals_w_m(
    sys: &RootSystem,
    d: &LeviDatum,
    lambda_l: &Weight,
    lambda_r: &Weight,
    probes: &[Vec<i64>],
) -> Result<bool> {
    let p = crate::dirac::GKParameter::new(sys, lambda_l.clone(), lambda_r.clone())?;
    let Some(form) = p.involution_form(sys)? else {
        return Ok(false);
    };
    let (_, u) = sys.make_dominant(lambda_l)?;
    // s acts on lambda_L as u^-1 s' u, where s' is the involution at the dominant conjugate.
    let s = u.inverse().compose(&form.s).compose(&u);
    let n = sys.ambient_dim();
    Ok(probes.iter().all(|v| {
        let x = Weight::from_ints(
            &v[..n.min(v.len())].iter().copied().chain(std::iter::repeat(0)).take(n).collect::<Vec<_>>(),
        );
        s.apply(sys, &x) == d.w_m().apply(sys, &x)
    }))
}

fn verify_exceptional() -> Vec<Check> {
    Exceptional::ALL
        .into_iter()
        .map(|e| {
            let run = || -> Result<(bool, String)> {
                let spec = make_spec(Flavor::Exceptional(e))?;
                let nc = necessary_condition(&spec.system, spec.lambda())?;
                let ty = integral_subsystem(&spec.system, spec.lambda())?.cartan_type.to_string();
                Ok((
                    nc.holds() && ty == e.integral_type(),
                    format!(
                        "2 lambda regular integral: {}, integral system {ty}, expected {}",
                        nc.holds(),
                        e.integral_type()
                    ),
                ))
            };
            match run() {
                Ok((passed, detail)) => check("exceptional", e.name(), passed, detail),
                Err(err) => check("exceptional", e.name(), false, err.to_string()),
            }
        })
        .collect()
}
