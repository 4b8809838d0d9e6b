use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::weight::{qi, Weight, Q};

/// Cartan series of a simple (or general linear) root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    /// `gl(n)`: type `A_{n-1}` roots in `n` coordinates, rank `n`.
    GL,
}

impl Series {
    pub fn name(self) -> &'static str {
        match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
            Series::GL => "GL",
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "A" => Series::A,
            "B" => Series::B,
            "C" => Series::C,
            "D" => Series::D,
            "E" => Series::E,
            "F" => Series::F,
            "G" => Series::G,
            "GL" => Series::GL,
            _ => return Err(Error::Parse(format!("series `{s}`"))),
        })
    }
}

/// An element of the Weyl group as a word in simple reflections.
///
/// `letters = [i0, i1, .., ik]` denotes `s_{i0} s_{i1} .. s_{ik}`, so the
/// letters act on a weight from right to left.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `(-1)^length`.
    pub fn det_sign(&self) -> i64 {
        if self.letters.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> Self {
        WeylWord { letters: self.letters.iter().rev().copied().collect() }
    }

    /// The product `self * other` (apply `other` first).
    pub fn compose(&self, other: &WeylWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        WeylWord { letters }
    }

    pub fn apply(&self, sys: &RootSystem, w: &Weight) -> Weight {
        let mut v = w.clone();
        for &i in self.letters.iter().rev() {
            v = sys.reflect_simple(&v, i);
        }
        v
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, i) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// A reduced root system with a chosen positive system, embedded in an
/// ambient coordinate space.
#[derive(Clone, Debug)]
pub struct RootSystem {
    series: Option<Series>,
    label: String,
    rank: usize,
    ambient: usize,
    simple: Vec<Weight>,
    positive: Vec<Weight>,
    coefficients: Vec<Vec<i64>>,
    index: HashMap<Weight, usize>,
    rho: Weight,
    height: Weight,
}

fn e(dim: usize, i: usize) -> Weight {
    Weight::unit(dim, i)
}

fn eps_diff(dim: usize, i: usize, j: usize) -> Weight {
    &e(dim, i) - &e(dim, j)
}

fn chain(dim: usize, len: usize) -> Vec<Weight> {
    (0..len).map(|i| eps_diff(dim, i, i + 1)).collect()
}

/// Simple roots of `E8` in Bourbaki order; `E6` and `E7` use prefixes.
fn e8_simple() -> Vec<Weight> {
    let mut v = vec![Weight::over(&[1, -1, -1, -1, -1, -1, -1, 1], 2), &e(8, 0) + &e(8, 1)];
    for i in 0..6 {
        v.push(eps_diff(8, i + 1, i));
    }
    v
}

/// Builds the standard root system of the given series and rank.
pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystem> {
    let invalid = || Error::InvalidSystem { series: series.name().to_string(), rank };
    let (ambient, simple) = match series {
        Series::A if rank >= 1 => (rank + 1, chain(rank + 1, rank)),
        Series::GL if rank >= 1 => (rank, chain(rank, rank - 1)),
        Series::B if rank >= 1 => {
            let mut s = chain(rank, rank - 1);
            s.push(e(rank, rank - 1));
            (rank, s)
        }
        Series::C if rank >= 1 => {
            let mut s = chain(rank, rank - 1);
            s.push(e(rank, rank - 1).double());
            (rank, s)
        }
        Series::D if rank >= 2 => {
            let mut s = chain(rank, rank - 1);
            s.push(&e(rank, rank - 2) + &e(rank, rank - 1));
            (rank, s)
        }
        Series::E if (6..=8).contains(&rank) => (8, e8_simple()[..rank].to_vec()),
        Series::F if rank == 4 => (
            4,
            vec![
                Weight::from_ints(&[0, 1, -1, 0]),
                Weight::from_ints(&[0, 0, 1, -1]),
                Weight::from_ints(&[0, 0, 0, 1]),
                Weight::from_halves(&[1, -1, -1, -1]),
            ],
        ),
        Series::G if rank == 2 => (3, vec![Weight::from_ints(&[1, -1, 0]), Weight::from_ints(&[-2, 1, 1])]),
        _ => return Err(invalid()),
    };
    RootSystem::from_simple_roots(Some(series), format!("{series}{rank}"), rank, ambient, simple)
}

/// Parses labels such as `C5`, `E8`, `GL4` or `F4`.
pub fn parse_system(label: &str) -> Result<RootSystem> {
    let split = label.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::Parse(format!("system `{label}`")))?;
    let series: Series = label[..split].parse()?;
    let rank: usize = label[split..].parse().map_err(|_| Error::Parse(format!("system `{label}`")))?;
    build_root_system(series, rank)
}

impl RootSystem {
    /// Generates the positive system spanned by `simple` by reflection
    /// closure. `rank` is the reductive rank reported to callers.
    pub fn from_simple_roots(
        series: Option<Series>,
        label: String,
        rank: usize,
        ambient: usize,
        simple: Vec<Weight>,
    ) -> Result<Self> {
        for s in &simple {
            s.check_dim(ambient)?;
        }
        let gram: Vec<Vec<Q>> = simple.iter().map(|a| simple.iter().map(|b| a.dot(b)).collect()).collect();
        let ones = vec![qi(1); simple.len()];
        let c = linalg::solve(&gram, &ones)
            .ok_or_else(|| Error::InvalidParameters("simple roots are linearly dependent".into()))?;
        let mut height = Weight::zero(ambient);
        for (cj, aj) in c.iter().zip(&simple) {
            height += &aj.scale(cj);
        }

        let mut seen: HashSet<Weight> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Weight> = simple.iter().cloned().collect();
        while let Some(beta) = queue.pop_front() {
            for a in &simple {
                let k = coroot_pairing(&beta, a);
                if k.is_zero() {
                    continue;
                }
                let r = &beta - &a.scale(&k);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut positive: Vec<Weight> = seen.into_iter().filter(|b| b.dot(&height).is_positive()).collect();
        positive.sort_by(|x, y| x.dot(&height).cmp(&y.dot(&height)).then_with(|| y.cmp(x)));

        let columns: Vec<Vec<Q>> =
            (0..ambient).map(|r| simple.iter().map(|a| a.coords()[r].clone()).collect()).collect();
        let mut coefficients = Vec::with_capacity(positive.len());
        for beta in &positive {
            let x = linalg::solve(&columns, beta.coords())
                .ok_or_else(|| Error::Inconsistent(format!("root {beta} outside the simple span")))?;
            coefficients.push(
                x.iter()
                    .map(|c| {
                        if c.is_integer() && !c.is_negative() {
                            Ok(num_traits::ToPrimitive::to_i64(&c.to_integer()).unwrap_or(0))
                        } else {
                            Err(Error::Inconsistent(format!("root {beta} has coefficient {c}")))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let mut rho = Weight::zero(ambient);
        for b in &positive {
            rho += b;
        }
        let rho = rho.half();
        let index = positive.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(RootSystem { series, label, rank, ambient, simple, positive, coefficients, index, rho, height })
    }

    pub fn series(&self) -> Option<Series> {
        self.series
    }

    /// Identifier such as `F4`, or a derived label for subsystems.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    /// Expansion of `positive_roots()[i]` in the simple roots.
    pub fn simple_coefficients(&self, i: usize) -> &[i64] {
        &self.coefficients[i]
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// The vector `f` in the root span with `(f, alpha_i) = 1` for every simple root.
    pub fn height_functional(&self) -> &Weight {
        &self.height
    }

    pub fn height(&self, w: &Weight) -> Q {
        w.dot(&self.height)
    }

    pub fn positive_index(&self, root: &Weight) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.index.contains_key(w) || self.index.contains_key(&-w)
    }

    /// Dimension of the Lie algebra: rank plus the number of roots.
    pub fn algebra_dim(&self) -> usize {
        self.rank + 2 * self.positive.len()
    }

    /// `<lambda, alpha^vee>` for a root `alpha`.
    pub fn pairing(&self, lambda: &Weight, alpha: &Weight) -> Result<Q> {
        lambda.check_dim(self.ambient)?;
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        Ok(coroot_pairing(lambda, alpha))
    }

    pub fn simple_pairing(&self, lambda: &Weight, i: usize) -> Q {
        coroot_pairing(lambda, &self.simple[i])
    }

    pub fn reflect(&self, lambda: &Weight, alpha: &Weight) -> Weight {
        lambda - &alpha.scale(&coroot_pairing(lambda, alpha))
    }

    pub fn reflect_simple(&self, lambda: &Weight, i: usize) -> Weight {
        self.reflect(lambda, &self.simple[i])
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        (0..self.simple.len()).all(|i| !self.simple_pairing(lambda, i).is_negative())
    }

    /// Returns the dominant representative of `W lambda` together with a
    /// word `w` such that `w.apply(lambda)` is that representative. At each
    /// step the lowest-index simple root with negative pairing is used.
    pub fn make_dominant(&self, lambda: &Weight) -> Result<(Weight, WeylWord)> {
        lambda.check_dim(self.ambient)?;
        let mut v = lambda.clone();
        let mut letters = Vec::new();
        while let Some(i) = (0..self.simple.len()).find(|&i| self.simple_pairing(&v, i).is_negative()) {
            v = self.reflect_simple(&v, i);
            letters.push(i);
        }
        letters.reverse();
        Ok((v, WeylWord::new(letters)))
    }

    pub fn dominant(&self, lambda: &Weight) -> Result<Weight> {
        self.make_dominant(lambda).map(|x| x.0)
    }

    /// No root is orthogonal to `lambda`.
    pub fn is_regular(&self, lambda: &Weight) -> Result<bool> {
        lambda.check_dim(self.ambient)?;
        Ok(self.positive.iter().all(|a| !lambda.dot(a).is_zero()))
    }

    /// Every coroot pairing is an integer.
    pub fn is_integral(&self, lambda: &Weight) -> Result<bool> {
        lambda.check_dim(self.ambient)?;
        Ok(self.positive.iter().all(|a| coroot_pairing(lambda, a).is_integer()))
    }

    /// Sum of a set of distinct positive roots.
    pub fn two_rho_of_subset(&self, subset: &[Weight]) -> Result<Weight> {
        let mut seen = HashSet::new();
        let mut sum = Weight::zero(self.ambient);
        for b in subset {
            if self.positive_index(b).is_none() {
                return Err(Error::NotPositiveRoot(b.to_string()));
            }
            if !seen.insert(b) {
                return Err(Error::InvalidParameters(format!("root {b} repeated")));
            }
            sum += b;
        }
        Ok(sum)
    }

    /// The longest element `w_0`, as the word taking `-rho` to `rho`.
    pub fn longest_element(&self) -> WeylWord {
        self.make_dominant(&-&self.rho).expect("rho has ambient dimension").1
    }

    /// All Weyl group elements as reduced words, found as the orbit of the
    /// regular weight `rho`. Fails when the group exceeds `limit`.
    pub fn weyl_group(&self, limit: usize) -> Result<Vec<WeylWord>> {
        let mut words: HashMap<Weight, WeylWord> = HashMap::new();
        words.insert(self.rho.clone(), WeylWord::identity());
        let mut queue = VecDeque::from([self.rho.clone()]);
        let mut order = vec![WeylWord::identity()];
        while let Some(v) = queue.pop_front() {
            let word = words[&v].clone();
            for i in 0..self.simple.len() {
                let r = self.reflect_simple(&v, i);
                if !words.contains_key(&r) {
                    if words.len() >= limit {
                        return Err(Error::BudgetExceeded { operation: "weyl_group", budget: limit as u64 });
                    }
                    let w = WeylWord::new([i].into_iter().chain(word.letters().iter().copied()).collect());
                    order.push(w.clone());
                    words.insert(r.clone(), w);
                    queue.push_back(r);
                }
            }
        }
        Ok(order)
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rank == other.rank && self.simple == other.simple
    }
}

impl Eq for RootSystem {}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// `2 (lambda, alpha) / (alpha, alpha)`.
pub fn coroot_pairing(lambda: &Weight, alpha: &Weight) -> Q {
    lambda.dot(alpha) * qi(2) / alpha.norm2()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight;

    fn sys(s: Series, r: usize) -> RootSystem {
        build_root_system(s, r).unwrap()
    }

    #[test]
    fn positive_root_counts_match_algebra_dimension() {
        let cases = [
            (Series::A, 4, 24),
            (Series::B, 3, 21),
            (Series::C, 4, 36),
            (Series::D, 4, 28),
            (Series::G, 2, 14),
            (Series::F, 4, 52),
            (Series::E, 6, 78),
            (Series::E, 7, 133),
            (Series::E, 8, 248),
            (Series::GL, 5, 25),
        ];
        for (s, r, dim) in cases {
            let rs = sys(s, r);
            assert_eq!(rs.algebra_dim(), dim, "{s}{r}");
        }
    }

    #[test]
    fn rho_values() {
        assert_eq!(sys(Series::G, 2).rho(), &weight![-1, -2, 3]);
        assert_eq!(sys(Series::F, 4).rho(), &weight![11 / 2, 5 / 2, 3 / 2, 1 / 2]);
        assert_eq!(sys(Series::C, 3).rho(), &weight![3, 2, 1]);
        assert_eq!(sys(Series::GL, 4).rho(), &weight![3 / 2, 1 / 2, -1 / 2, -3 / 2]);
        assert_eq!(sys(Series::E, 8).rho(), &weight![0, 1, 2, 3, 4, 5, 6, 23]);
    }

    #[test]
    fn invalid_pairs_rejected() {
        assert!(build_root_system(Series::E, 5).is_err());
        assert!(build_root_system(Series::G, 3).is_err());
        assert!(build_root_system(Series::D, 1).is_err());
        assert!(build_root_system(Series::A, 0).is_err());
    }

    #[test]
    fn pairing_requires_root() {
        let b2 = sys(Series::B, 2);
        assert_eq!(b2.pairing(&weight![1, 0], &weight![0, 1]).unwrap(), qi(0));
        assert_eq!(b2.pairing(&weight![1, 0], &weight![1, 0]).unwrap(), qi(2));
        assert!(matches!(b2.pairing(&weight![1, 0], &weight![2, 0]), Err(Error::NotARoot(_))));
        assert!(b2.pairing(&weight![1, 0, 0], &weight![1, 0]).is_err());
    }

    #[test]
    fn make_dominant_word_semantics() {
        let c3 = sys(Series::C, 3);
        let lam = weight![-1, 3, -2];
        let (d, w) = c3.make_dominant(&lam).unwrap();
        assert_eq!(d, weight![3, 2, 1]);
        assert_eq!(w.apply(&c3, &lam), d);
        assert_eq!(w.inverse().apply(&c3, &d), lam);
    }

    #[test]
    fn weyl_group_orders() {
        for (s, r, n) in
            [(Series::A, 3, 24), (Series::B, 3, 48), (Series::D, 4, 192), (Series::G, 2, 12), (Series::F, 4, 1152)]
        {
            assert_eq!(sys(s, r).weyl_group(5000).unwrap().len(), n, "{s}{r}");
        }
        assert!(sys(Series::E, 8).weyl_group(1000).is_err());
    }

    #[test]
    fn longest_element_negates_rho() {
        for (s, r) in [(Series::A, 3), (Series::D, 5), (Series::E, 6), (Series::GL, 3)] {
            let rs = sys(s, r);
            let w0 = rs.longest_element();
            assert_eq!(w0.apply(&rs, &-rs.rho()), *rs.rho());
            assert_eq!(w0.len(), rs.positive_roots().len());
        }
    }

    #[test]
    fn two_rho_of_subset_checks_membership() {
        let a2 = sys(Series::A, 2);
        let all = a2.positive_roots().to_vec();
        assert_eq!(a2.two_rho_of_subset(&all).unwrap(), a2.rho().double());
        assert!(a2.two_rho_of_subset(&[weight![1, 0, -1], weight![1, 0, -1]]).is_err());
        assert!(a2.two_rho_of_subset(&[weight![-1, 0, 1]]).is_err());
    }

    #[test]
    fn parse_labels() {
        assert_eq!(parse_system("GL4").unwrap().ambient_dim(), 4);
        assert_eq!(parse_system("e7").unwrap().semisimple_rank(), 7);
        assert!(parse_system("X3").is_err());
    }
}
