//! Exact rational weights in ambient coordinates.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Unbounded exact rational.
pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A vector of exact rationals. Ordering is lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Weight(Vec<Q>);

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Weight(vec![Q::zero(); dim])
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Weight(xs.iter().map(|&x| qi(x)).collect())
    }

    /// Builds a weight from numerators over a common denominator.
    pub fn from_halves(xs: &[i64]) -> Self {
        Self::over(xs, 2)
    }

    pub fn over(xs: &[i64], den: i64) -> Self {
        Weight(xs.iter().map(|&x| q(x, den)).collect())
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut w = Self::zero(dim);
        w.0[i] = Q::one();
        w
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [Q] {
        &mut self.0
    }

    pub fn into_coords(self) -> Vec<Q> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &Weight) -> Q {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self) -> Q {
        self.dot(self)
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    pub fn half(&self) -> Weight {
        self.scale(&q(1, 2))
    }

    pub fn double(&self) -> Weight {
        self.scale(&qi(2))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integer_vector(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    pub fn sum(&self) -> Q {
        self.0.iter().sum()
    }

    /// Coordinates as `f64`, for display and heuristics only.
    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn abs_max(&self) -> Q {
        self.0.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
    }

    pub fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, got: self.dim() })
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&fmt_q(x))?;
        }
        f.write_str(")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `(5/2,3/2,1)`, `[5/2, 3/2, 1]` or a bare comma list.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .or_else(|| t.strip_prefix('[').and_then(|t| t.strip_suffix(']')))
            .unwrap_or(t);
        if t.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        t.split(',')
            .map(parse_q)
            .collect::<Result<Vec<_>>>()
            .map(Weight)
            .map_err(|_| Error::Parse(format!("weight `{s}`")))
    }
}

impl From<Vec<Q>> for Weight {
    fn from(v: Vec<Q>) -> Self {
        Weight(v)
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn add(self, rhs: &'a Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn sub(self, rhs: &'a Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

/// `weight![5/2, 3/2, 1]` style literal for tests and tables.
#[macro_export]
macro_rules! weight {
    ($($n:literal $(/ $d:literal)?),* $(,)?) => {
        $crate::Weight::new(vec![$($crate::weight::q($n, 1 $(* 0 + $d)?)),*])
    };
}
