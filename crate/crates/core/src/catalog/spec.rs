use std::fmt;
use std::str::FromStr;

use crate::dirac::{GKParameter, KTypeFamily};
use crate::error::{Error, Result};
use crate::roots::{build_root_system, LeviDatum, RootSystem, Series};
use crate::weight::{qi, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn of(n: i64) -> Parity {
        if n.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl FromStr for Parity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "even" | "0" => Ok(Parity::Even),
            "odd" | "1" => Ok(Parity::Odd),
            other => Err(Error::Parse(format!("unknown parity `{other}`"))),
        }
    }
}

/// Exceptional parameters with `2 lambda` regular integral, named by the
/// dual nilpotent orbit they are attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exceptional {
    E6ThreeA1,
    E6TwoA1,
    E7ThreeA1Prime,
    E7TwoA1,
    E7FourA1,
    E8FourA1,
    E8ThreeA1,
}

impl Exceptional {
    pub const ALL: [Exceptional; 7] = [
        Exceptional::E6ThreeA1,
        Exceptional::E6TwoA1,
        Exceptional::E7ThreeA1Prime,
        Exceptional::E7TwoA1,
        Exceptional::E7FourA1,
        Exceptional::E8FourA1,
        Exceptional::E8ThreeA1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Exceptional::E6ThreeA1 => "E6-3A1",
            Exceptional::E6TwoA1 => "E6-2A1",
            Exceptional::E7ThreeA1Prime => "E7-3A1'",
            Exceptional::E7TwoA1 => "E7-2A1",
            Exceptional::E7FourA1 => "E7-4A1",
            Exceptional::E8FourA1 => "E8-4A1",
            Exceptional::E8ThreeA1 => "E8-3A1",
        }
    }

    pub fn rank(self) -> usize {
        match self {
            Exceptional::E6ThreeA1 | Exceptional::E6TwoA1 => 6,
            Exceptional::E7ThreeA1Prime | Exceptional::E7TwoA1 | Exceptional::E7FourA1 => 7,
            Exceptional::E8FourA1 | Exceptional::E8ThreeA1 => 8,
        }
    }

    /// `lambda` in Bourbaki coordinates, as numerators over 4.
    fn quarters(self) -> [i64; 8] {
        match self {
            Exceptional::E6ThreeA1 => [-10, -6, -2, 2, 3, -3, -3, 3],
            Exceptional::E6TwoA1 => [-9, -5, -1, 3, 7, -7, -7, 7],
            Exceptional::E7ThreeA1Prime => [0, 4, 8, 12, 16, 20, -4, 4],
            Exceptional::E7TwoA1 => [0, 4, 8, 12, 16, -14, -17, 17],
            Exceptional::E7FourA1 => [-9, -5, -1, 3, 7, 11, -16, 16],
            Exceptional::E8FourA1 => [0, 4, 8, 12, 16, 20, 24, 32],
            Exceptional::E8ThreeA1 => [0, 4, 8, 12, 16, 20, -32, 36],
        }
    }

    pub fn lambda(self) -> Weight {
        Weight::over(&self.quarters(), 4)
    }

    /// Cartan type of the integral root system of `lambda`.
    pub fn integral_type(self) -> &'static str {
        match self {
            Exceptional::E6ThreeA1 => "A5A1",
            Exceptional::E6TwoA1 => "D5T1",
            Exceptional::E7ThreeA1Prime => "D6A1",
            Exceptional::E7TwoA1 => "E6T1",
            Exceptional::E7FourA1 => "A7",
            Exceptional::E8FourA1 => "D8",
            Exceptional::E8ThreeA1 => "E7A1",
        }
    }

    pub fn unitarity(self) -> Unitarity {
        match self {
            Exceptional::E7FourA1 | Exceptional::E8FourA1 | Exceptional::E8ThreeA1 => Unitarity::AssertedUncertain,
            _ => Unitarity::Asserted,
        }
    }

    fn provenance(self) -> &'static str {
        match self {
            Exceptional::E6ThreeA1 => "factor of a module induced from a character of the A5 Levi",
            Exceptional::E6TwoA1 => "end point of a complementary series induced from the D5 Levi",
            Exceptional::E7ThreeA1Prime => "factor of a module induced from a character of the D6 Levi",
            Exceptional::E7TwoA1 => "end point of a complementary series induced from the E6 Levi",
            Exceptional::E7FourA1 | Exceptional::E8FourA1 | Exceptional::E8ThreeA1 => {
                "minimal length parameter for its integral system; K-structure multiplicity free, unitarity expected but not established"
            }
        }
    }
}

impl fmt::Display for Exceptional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Exceptional {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace(['_', ' '], "-");
        let key = key.trim_end_matches("PRIME").trim_end_matches('\'');
        Exceptional::ALL
            .into_iter()
            .find(|e| e.name().trim_end_matches('\'').eq_ignore_ascii_case(key))
            .ok_or_else(|| Error::Parse(format!("unknown exceptional parameter `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Unitarity {
    Asserted,
    AssertedUncertain,
    NotAsserted,
}

impl fmt::Display for Unitarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unitarity::Asserted => "asserted",
            Unitarity::AssertedUncertain => "asserted-uncertain",
            Unitarity::NotAsserted => "not-asserted",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `Ind_{GL(a) x GL(b)}^{GL(a+b)}[triv (x) triv]`, `a > b`, opposite parity.
    GlTwoColumn {
        a: u32,
        b: u32,
    },
    /// Induced from a unitary character of the maximal Levi
    /// `GL(a) x GL(b)`, with `2 lambda` written through `(alpha, beta, k, l)`.
    GlMaxpar {
        alpha: i64,
        beta: i64,
        k: i64,
        l: i64,
    },
    /// Spherical unipotent of `SO(2(a+b)+1)`, `b >= a >= 1`.
    SoOdd {
        a: u32,
        b: u32,
    },
    /// One of the two halves of the metaplectic representation of `Sp(2n)`.
    SpMetaplectic {
        n: u32,
        parity: Parity,
    },
    /// Unipotent of `SO(2(a+b))`, `b >= a >= 1`, spherical or not.
    SoEven {
        a: u32,
        b: u32,
        spherical: bool,
    },
    Exceptional(Exceptional),
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Flavor::GlTwoColumn { a, b } => write!(f, "gl-two-column({a},{b})"),
            Flavor::GlMaxpar { alpha, beta, k, l } => write!(f, "gl-maxpar({alpha},{beta},{k},{l})"),
            Flavor::SoOdd { a, b } => write!(f, "so-odd({a},{b})"),
            Flavor::SpMetaplectic { n, parity } => write!(f, "sp-metaplectic({n},{parity})"),
            Flavor::SoEven { a, b, spherical } => {
                write!(f, "so-even({a},{b},{})", if spherical { "spherical" } else { "nonspherical" })
            }
            Flavor::Exceptional(e) => write!(f, "exceptional({e})"),
        }
    }
}

impl FromStr for Flavor {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form, e.g. `so-even(1,2,nonspherical)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, rest) = s.split_once('(').ok_or_else(|| Error::Parse(format!("expected name(args): `{s}`")))?;
        let body = rest.strip_suffix(')').ok_or_else(|| Error::Parse(format!("missing `)` in `{s}`")))?;
        let args: Vec<&str> = body.split(',').map(str::trim).collect();
        let int = |i: usize| -> Result<i64> {
            args.get(i)
                .ok_or_else(|| Error::Parse(format!("missing argument {} in `{s}`", i + 1)))?
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("`{s}`: {e}")))
        };
        let nat = |i: usize| -> Result<u32> {
            u32::try_from(int(i)?).map_err(|_| Error::Parse(format!("`{s}`: argument {} must be nonnegative", i + 1)))
        };
        let arity = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(Error::Parse(format!("`{head}` takes {n} arguments, got {}", args.len())))
            }
        };
        match head.trim() {
            "gl-two-column" => {
                arity(2)?;
                Ok(Flavor::GlTwoColumn { a: nat(0)?, b: nat(1)? })
            }
            "gl-maxpar" => {
                arity(4)?;
                Ok(Flavor::GlMaxpar { alpha: int(0)?, beta: int(1)?, k: int(2)?, l: int(3)? })
            }
            "so-odd" => {
                arity(2)?;
                Ok(Flavor::SoOdd { a: nat(0)?, b: nat(1)? })
            }
            "sp-metaplectic" => {
                arity(2)?;
                Ok(Flavor::SpMetaplectic { n: nat(0)?, parity: args[1].parse()? })
            }
            "so-even" => {
                arity(3)?;
                let spherical = match args[2] {
                    "spherical" | "true" => true,
                    "nonspherical" | "false" => false,
                    other => return Err(Error::Parse(format!("expected spherical|nonspherical, got `{other}`"))),
                };
                Ok(Flavor::SoEven { a: nat(0)?, b: nat(1)?, spherical })
            }
            "exceptional" => {
                arity(1)?;
                Ok(Flavor::Exceptional(args[0].parse()?))
            }
            other => Err(Error::Parse(format!("unknown flavor `{other}`"))),
        }
    }
}

/// A representation from the catalog: its group, parameter, K-structure
/// and the (asserted, never computed) unitarity.
#[derive(Clone, Debug)]
pub struct UnipotentSpec {
    pub flavor: Flavor,
    pub system: RootSystem,
    pub parameter: GKParameter,
    pub ktypes: Option<KTypeFamily>,
    pub unitary: Unitarity,
    pub provenance: String,
    /// For the GL flavors: simple roots of the inducing Levi and the
    /// unitary character `xi`.
    pub inducing: Option<(Vec<usize>, Weight)>,
}

impl UnipotentSpec {
    pub fn label(&self) -> String {
        self.flavor.to_string()
    }

    /// The infinitesimal character `lambda = lambda_L`.
    pub fn lambda(&self) -> &Weight {
        &self.parameter.lambda_l
    }

    /// The dominant conjugate of `2 lambda`.
    pub fn two_lambda(&self) -> Result<Weight> {
        self.system.dominant(&self.lambda().double())
    }

    pub fn inducing_levi(&self) -> Result<Option<(LeviDatum, Weight)>> {
        match &self.inducing {
            None => Ok(None),
            Some((idx, xi)) => Ok(Some((LeviDatum::new(&self.system, idx)?, xi.clone()))),
        }
    }
}

fn invalid(flavor: &Flavor, why: &str) -> Error {
    Error::InvalidParameters(format!("{flavor}: {why}"))
}

/// `(start, start - 2, ..., > stop)`, the arithmetic run of step 2.
fn run2(start: i64, len: i64) -> impl Iterator<Item = i64> {
    (0..len.max(0)).map(move |i| start - 2 * i)
}

fn sorted_desc(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// `e_j - e_{n+1-j}` for `j = 1..b`.
fn gl_generators(n: usize, b: usize) -> Vec<Weight> {
    (0..b)
        .map(|j| {
            let mut v = vec![0i64; n];
            v[j] = 1;
            v[n - 1 - j] = -1;
            Weight::from_ints(&v)
        })
        .collect()
}

/// `rho` of `gl(a) x gl(b)` in `a + b` coordinates.
fn gl_levi_rho(a: usize, b: usize) -> Weight {
    let block = |m: usize| (0..m).map(move |i| m as i64 - 1 - 2 * i as i64);
    let doubled: Vec<i64> = block(a).chain(block(b)).collect();
    Weight::from_halves(&doubled)
}

pub fn make_spec(flavor: Flavor) -> Result<UnipotentSpec> {
    match flavor {
        Flavor::GlTwoColumn { a, b } => gl_two_column(flavor, a as i64, b as i64),
        Flavor::GlMaxpar { alpha, beta, k, l } => gl_maxpar(flavor, alpha, beta, k, l),
        Flavor::SoOdd { a, b } => so_odd(flavor, a as i64, b as i64),
        Flavor::SpMetaplectic { n, parity } => sp_metaplectic(flavor, n as i64, parity),
        Flavor::SoEven { a, b, spherical } => so_even(flavor, a as i64, b as i64, spherical),
        Flavor::Exceptional(e) => {
            let system = build_root_system(Series::E, e.rank())?;
            let parameter = GKParameter::spherical(&system, e.lambda())?;
            Ok(UnipotentSpec {
                flavor,
                system,
                parameter,
                ktypes: None,
                unitary: e.unitarity(),
                provenance: e.provenance().to_string(),
                inducing: None,
            })
        }
    }
}

pub fn gl_maxpar_family(alpha: i64, beta: i64, k: i64, l: i64) -> Result<UnipotentSpec> {
    make_spec(Flavor::GlMaxpar { alpha, beta, k, l })
}

fn gl_two_column(flavor: Flavor, a: i64, b: i64) -> Result<UnipotentSpec> {
    if b < 1 || a <= b {
        return Err(invalid(&flavor, "requires a > b >= 1"));
    }
    if (a - b) % 2 == 0 {
        return Err(invalid(&flavor, "a and b must have opposite parity"));
    }
    let n = (a + b) as usize;
    let system = build_root_system(Series::GL, n)?;
    let two_lambda = sorted_desc(run2(a - 1, a).chain(run2(b - 1, b)).collect());
    let parameter = GKParameter::spherical(&system, Weight::from_halves(&two_lambda))?;
    let family = KTypeFamily::new(flavor.to_string(), Weight::zero(n), gl_generators(n, b as usize), true, None)?;
    let levi: Vec<usize> = (0..n - 1).filter(|&i| i != a as usize - 1).collect();
    Ok(UnipotentSpec {
        flavor,
        system,
        parameter,
        ktypes: Some(family),
        unitary: Unitarity::Asserted,
        provenance: format!("induced from the trivial character of GL({a}) x GL({b})"),
        inducing: Some((levi, Weight::zero(n))),
    })
}

fn gl_maxpar(flavor: Flavor, alpha: i64, beta: i64, k: i64, l: i64) -> Result<UnipotentSpec> {
    if (alpha - beta) % 2 == 0 {
        return Err(invalid(&flavor, "alpha and beta must have opposite parity"));
    }
    if alpha <= beta {
        return Err(invalid(&flavor, "requires alpha > beta"));
    }
    if k < 0 || k + l + 1 < 0 || k < l {
        return Err(invalid(&flavor, "requires k >= 0, k >= l and k + l + 1 >= 0"));
    }
    let p = (alpha - beta + 1) / 2;
    let (a, b) = (p + k, p + l);
    if b < 1 {
        return Err(invalid(&flavor, "the second block GL(b) is empty"));
    }
    let n = (a + b) as usize;
    let xi1 = (alpha + beta + 1) / 2 + k;
    let xi2 = (alpha + beta - 1) / 2 - l;
    let xi = Weight::from_ints(&(0..n).map(|i| if (i as i64) < a { xi1 } else { xi2 }).collect::<Vec<_>>());
    let rho_m = gl_levi_rho(a as usize, b as usize);
    let system = build_root_system(Series::GL, n)?;
    let lambda_l = &xi.half() + &rho_m;
    let lambda_r = &(-xi.half()) + &rho_m;
    if l >= 0 {
        let closed: Vec<i64> = run2(alpha + 2 * k, k).chain((beta..=alpha).rev()).chain(run2(beta - 2, l)).collect();
        if system.dominant(&lambda_l.double())? != Weight::from_ints(&closed) {
            return Err(Error::Inconsistent(format!("{flavor}: induced parameter disagrees with 2 lambda")));
        }
    }
    let parameter = GKParameter::new(&system, lambda_l, lambda_r)?;
    let family = KTypeFamily::new(flavor.to_string(), xi.clone(), gl_generators(n, b as usize), true, None)?;
    let levi: Vec<usize> = (0..n - 1).filter(|&i| i != a as usize - 1).collect();
    Ok(UnipotentSpec {
        flavor,
        system,
        parameter,
        ktypes: Some(family),
        unitary: Unitarity::Asserted,
        provenance: format!("induced from the unitary character ({xi1},{xi2}) of GL({a}) x GL({b})"),
        inducing: Some((levi, xi)),
    })
}

fn so_odd(flavor: Flavor, a: i64, b: i64) -> Result<UnipotentSpec> {
    if a < 1 || b < a {
        return Err(invalid(&flavor, "requires b >= a >= 1"));
    }
    let n = (a + b) as usize;
    let system = build_root_system(Series::B, n)?;
    let two_lambda = sorted_desc(run2(2 * b - 1, b).chain(run2(2 * a, a)).collect());
    let parameter = GKParameter::spherical(&system, Weight::from_halves(&two_lambda))?;
    let generators = (0..a as usize)
        .map(|j| {
            let mut v = vec![0i64; n];
            v[2 * j] = 1;
            v[2 * j + 1] = 1;
            Weight::from_ints(&v)
        })
        .collect();
    let family = KTypeFamily::new(flavor.to_string(), Weight::zero(n), generators, true, None)?;
    Ok(UnipotentSpec {
        flavor,
        system,
        parameter,
        ktypes: Some(family),
        unitary: Unitarity::Asserted,
        provenance: format!("spherical unipotent representation of SO({},C)", 2 * n + 1),
        inducing: None,
    })
}

fn sp_metaplectic(flavor: Flavor, n: i64, parity: Parity) -> Result<UnipotentSpec> {
    if n < 1 {
        return Err(invalid(&flavor, "requires n >= 1"));
    }
    let dim = n as usize;
    let system = build_root_system(Series::C, dim)?;
    let lambda_l = Weight::from_halves(&run2(2 * n - 1, n).collect::<Vec<_>>());
    let mut lambda_r = lambda_l.clone();
    if parity == Parity::Odd {
        let last = lambda_r.coords()[dim - 1].clone();
        lambda_r.coords_mut()[dim - 1] = -last;
    }
    let parameter = GKParameter::new(&system, lambda_l, lambda_r)?;
    let base = Weight::unit(dim, 0).scale(&qi(parity.bit() as i64));
    let family = KTypeFamily::new(flavor.to_string(), base, vec![Weight::unit(dim, 0).double()], false, None)?;
    Ok(UnipotentSpec {
        flavor,
        system,
        parameter,
        ktypes: Some(family),
        unitary: Unitarity::Asserted,
        provenance: format!("{parity} part of the metaplectic representation of Sp({},C)", 2 * n),
        inducing: None,
    })
}

fn so_even(flavor: Flavor, a: i64, b: i64, spherical: bool) -> Result<UnipotentSpec> {
    if a < 1 || b < a {
        return Err(invalid(&flavor, "requires b >= a >= 1"));
    }
    let n = (a + b) as usize;
    let system = build_root_system(Series::D, n)?;
    let first: Vec<i64> = run2(2 * a - 1, a).collect();
    let second: Vec<i64> = run2(2 * b - 2, b).collect();
    let lambda_r = Weight::from_halves(&first.iter().chain(&second).copied().collect::<Vec<_>>());
    let mut lambda_l = lambda_r.clone();
    if !spherical {
        let k = a as usize - 1;
        let x = lambda_l.coords()[k].clone();
        lambda_l.coords_mut()[k] = -x;
    }
    let parameter = GKParameter::new(&system, lambda_l, lambda_r)?;
    let generators = (0..2 * a as usize).map(|j| Weight::unit(n, j)).collect();
    let family =
        KTypeFamily::new(flavor.to_string(), Weight::zero(n), generators, true, Some(if spherical { 0 } else { 1 }))?;
    Ok(UnipotentSpec {
        flavor,
        system,
        parameter,
        ktypes: Some(family),
        unitary: Unitarity::Asserted,
        provenance: format!(
            "{} unipotent representation of SO({},C)",
            if spherical { "spherical" } else { "nonspherical" },
            2 * n
        ),
        inducing: None,
    })
}

/// Every representation used by the verification suites.
pub fn standard_catalog() -> Vec<Flavor> {
    let mut out = Vec::new();
    for (a, b) in [(2, 1), (3, 2), (4, 1), (4, 3)] {
        out.push(Flavor::GlTwoColumn { a, b });
    }
    for (alpha, beta, k, l) in MAXPAR_GRID {
        out.push(Flavor::GlMaxpar { alpha, beta, k, l });
    }
    for (a, b) in [(1, 1), (1, 2), (2, 3)] {
        out.push(Flavor::SoOdd { a, b });
    }
    for n in 2..=6 {
        for parity in [Parity::Even, Parity::Odd] {
            out.push(Flavor::SpMetaplectic { n, parity });
        }
    }
    for (a, b) in [(1, 2), (2, 2), (1, 3)] {
        for spherical in [true, false] {
            out.push(Flavor::SoEven { a, b, spherical });
        }
    }
    out.extend(Exceptional::ALL.map(Flavor::Exceptional));
    out
}

/// `(alpha, beta, k, l)` cases of the maximal-parabolic check, all with
/// `l >= 0` and `k >= l`, of rank at most 7.
pub const MAXPAR_GRID: [(i64, i64, i64, i64); 10] = [
    (1, 0, 0, 0),
    (2, 1, 0, 0),
    (3, 0, 0, 0),
    (1, 0, 1, 0),
    (1, 0, 1, 1),
    (0, -1, 2, 0),
    (3, 0, 1, 0),
    (2, -1, 1, 1),
    (4, 1, 0, 0),
    (1, -2, 2, 1),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight;

    #[test]
    fn flavor_round_trip() {
        for f in standard_catalog() {
            assert_eq!(f.to_string().parse::<Flavor>().unwrap(), f);
        }
        assert!("so-odd(1)".parse::<Flavor>().is_err());
        assert!("gl-two-column(3,-2)".parse::<Flavor>().is_err());
        assert_eq!(
            "exceptional(e7-3a1prime)".parse::<Flavor>().unwrap(),
            Flavor::Exceptional(Exceptional::E7ThreeA1Prime)
        );
    }

    #[test]
    fn two_column_parameter() {
        let s = make_spec(Flavor::GlTwoColumn { a: 3, b: 2 }).unwrap();
        assert_eq!(s.two_lambda().unwrap(), weight![2, 1, 0, -1, -2]);
        assert!(make_spec(Flavor::GlTwoColumn { a: 3, b: 1 }).is_err());
        assert!(make_spec(Flavor::GlTwoColumn { a: 2, b: 3 }).is_err());
    }

    #[test]
    fn two_column_is_maxpar_with_empty_lower_run() {
        for b in 1..=4 {
            let two_column = make_spec(Flavor::GlTwoColumn { a: b as u32 + 1, b: b as u32 }).unwrap();
            let maxpar = gl_maxpar_family(b, -b - 1, 0, -1).unwrap();
            assert_eq!(two_column.two_lambda().unwrap(), maxpar.two_lambda().unwrap());
        }
        // With k = l = 0 the two blocks have equal size.
        let s = gl_maxpar_family(1, -2, 0, 0).unwrap();
        assert_eq!(s.system.ambient_dim(), 4);
        assert_eq!(s.two_lambda().unwrap(), weight![1, 0, -1, -2]);
    }

    #[test]
    fn metaplectic_family() {
        let s = make_spec(Flavor::SpMetaplectic { n: 3, parity: Parity::Odd }).unwrap();
        let f = s.ktypes.unwrap();
        assert!(f.contains(&weight![1, 0, 0]) && f.contains(&weight![5, 0, 0]));
        assert!(!f.contains(&weight![2, 0, 0]));
        assert_eq!(s.parameter.mu(), weight![0, 0, 1]);
    }

    #[test]
    fn exceptional_parameter() {
        let s = make_spec(Flavor::Exceptional(Exceptional::E8FourA1)).unwrap();
        assert_eq!(s.lambda(), &weight![0, 1, 2, 3, 4, 5, 6, 8]);
        assert!(s.ktypes.is_none());
        assert_eq!(s.unitary, Unitarity::AssertedUncertain);
    }

    #[test]
    fn maxpar_parameter_and_constraints() {
        let s = gl_maxpar_family(3, 0, 1, 0).unwrap();
        assert_eq!(s.two_lambda().unwrap(), weight![5, 3, 2, 1, 0]);
        assert_eq!(s.parameter.mu(), weight![3, 3, 3, 1, 1]);
        assert!(gl_maxpar_family(2, 0, 0, 0).is_err());
        assert!(gl_maxpar_family(0, 1, 0, 0).is_err());
        assert!(gl_maxpar_family(1, 0, 0, 1).is_err());
    }

    #[test]
    fn so_even_nonspherical_parameter() {
        let s = make_spec(Flavor::SoEven { a: 2, b: 3, spherical: false }).unwrap();
        assert_eq!(s.parameter.lambda_l, weight![3 / 2, -1 / 2, 2, 1, 0]);
        assert_eq!(s.parameter.lambda_r, weight![3 / 2, 1 / 2, 2, 1, 0]);
        assert_eq!(s.two_lambda().unwrap(), weight![4, 3, 2, 1, 0]);
    }
}
