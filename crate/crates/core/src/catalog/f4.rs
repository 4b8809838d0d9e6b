use std::fmt;

use crate::dirac::KTypeFamily;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::lattice::{self, encode, Frame, IVec};
use crate::repr::Character;
use crate::roots::{build_root_system, LeviDatum, RootSystem, Series, WeylWord};
use crate::weight::Weight;

use super::spec::{make_spec, Flavor};

/// One hermitian parameter `(lambda_L, lambda_R)` of `F4` with
/// `lambda_L = (5/2,3/2,1,1/2)`, with the columns as printed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F4Row {
    pub index: usize,
    pub lambda_r: Weight,
    pub printed_mu: Weight,
    pub printed_nu: Weight,
    pub unitary: bool,
    pub printed_e_rho: Option<u64>,
    /// K-type of signature opposite to the lowest one, echoed verbatim.
    pub mu_prime: Option<Weight>,
}

/// `(lambda_R, mu, nu, unitary, mu')` with `lambda_R` and `mu'` in halves.
#[rustfmt::skip]
const ROWS: [([i64; 4], [i64; 4], [i64; 4], bool, Option<[i64; 4]>); 40] = [
    ([5, 3, 2, 1], [0, 0, 0, 0], [5, 3, 2, 1], false, Some([2, 0, 0, 0])),
    ([5, 3, 2, -1], [1, 0, 0, 0], [0, 5, 3, 2], false, Some([2, 2, 0, 0])),
    ([5, -3, 2, 1], [3, 0, 0, 0], [0, 5, 2, 1], false, Some([6, 2, 0, 0])),
    ([-5, 3, 2, 1], [5, 0, 0, 0], [0, 3, 2, 1], true, None),
    ([5, -3, 2, -1], [3, 1, 0, 0], [0, 0, 5, 2], false, Some([6, 2, 2, 2])),
    ([-5, 3, 2, -1], [5, 1, 0, 0], [0, 0, 3, 2], false, Some([10, 2, 2, 2])),
    ([-5, -3, 2, 1], [5, 3, 0, 0], [0, 0, 2, 1], true, None),
    ([-5, -3, 2, -1], [5, 3, 1, 0], [0, 0, 0, 2], false, Some([10, 6, 2, 2])),
    ([5, 1, 2, 3], [1, 1, 0, 0], [2, -2, 2, 5], false, Some([4, 0, 0, 0])),
    ([-5, 1, 2, 3], [5, 1, 1, 0], [0, 2, -2, 2], false, Some([10, 4, 0, 0])),
    ([3, 5, 2, 1], [1, 1, 0, 0], [4, -4, 2, 1], false, Some([2, 0, 0, 0])),
    ([3, 5, 2, -1], [1, 1, 1, 0], [4, -4, 0, 2], false, Some([4, 0, 0, 0])),
    ([1, 3, 2, 5], [2, 2, 0, 0], [3, -3, 2, 3], false, Some([6, 2, 0, 0])),
    ([1, -3, 2, 5], [3, 2, 2, 0], [0, 3, -3, 2], false, Some([7, 5, 1, 1])),
    ([5, -1, 2, -3], [2, 2, 0, 0], [1, -1, 5, 2], false, Some([6, 2, 0, 0])),
    ([-5, -1, 2, -3], [5, 2, 2, 0], [0, 1, -1, 2], false, Some([10, 4, 4, 2])),
    ([-3, -5, 2, 1], [4, 4, 0, 0], [1, -1, 2, 1], false, Some([9, 7, 1, 1])),
    ([-3, -5, 2, -1], [4, 4, 1, 0], [1, -1, 1, 2], false, Some([8, 8, 2, 2])),
    ([-1, -3, 2, 5], [3, 3, 0, 0], [2, -2, 3, 2], false, Some([8, 4, 0, 0])),
    ([-1, -3, 2, -5], [3, 3, 3, 0], [2, 0, -2, 2], false, Some([9, 5, 3, 1])),
    ([5, 3, -2, 1], [2, 0, 0, 0], [0, 5, 3, 1], true, None),
    ([5, 3, -2, -1], [2, 1, 0, 0], [0, 0, 5, 3], false, None),
    ([5, -3, -2, 1], [3, 2, 0, 0], [0, 0, 5, 1], false, None),
    ([-5, 3, -2, 1], [5, 2, 0, 0], [0, 0, 3, 1], true, None),
    ([5, -3, -2, 1], [3, 2, 0, 0], [0, 0, 5, 1], false, None),
    ([-5, 3, -2, -1], [5, 2, 1, 0], [0, 0, 0, 3], false, None),
    ([-5, -3, -2, 1], [5, 3, 2, 0], [0, 0, 0, 1], true, None),
    ([-5, -3, -2, -1], [5, 3, 2, 1], [0, 0, 0, 0], true, None),
    ([5, 1, -2, 3], [2, 1, 1, 0], [0, 2, -2, 5], false, None),
    ([-5, 1, -2, 3], [5, 2, 1, 1], [0, 0, 2, -2], false, None),
    ([3, 5, -2, 1], [2, 1, 1, 0], [0, 4, -4, 1], false, None),
    ([3, 5, -2, -1], [2, 1, 1, 1], [0, 4, 0, -4], false, None),
    ([1, 3, -2, 5], [2, 2, 2, 0], [0, 3, -3, 3], false, None),
    ([1, -3, -2, 5], [3, 2, 2, 2], [0, 3, -3, 0], false, None),
    ([5, -1, -2, -3], [2, 2, 2, 0], [1, 0, -1, 5], false, None),
    ([-5, -1, -2, -3], [5, 2, 2, 2], [0, 1, 0, -1], true, None),
    ([-3, -5, -2, 1], [4, 4, 2, 0], [1, -1, 0, 1], true, None),
    ([-3, -5, -2, -1], [4, 4, 1, 0], [1, -1, 1, 2], true, None),
    ([-1, -3, -2, 5], [3, 3, 2, 0], [2, -2, 0, 3], false, None),
    ([-1, -3, -2, -5], [3, 3, 3, 2], [2, 0, -2, 0], true, None),
];

pub fn f4_rows() -> Vec<F4Row> {
    ROWS.iter()
        .enumerate()
        .map(|(i, (lr, mu, nu, unitary, mp))| F4Row {
            index: i + 1,
            lambda_r: Weight::from_halves(lr),
            printed_mu: Weight::from_ints(mu),
            printed_nu: Weight::from_ints(nu),
            unitary: *unitary,
            printed_e_rho: unitary.then_some(1),
            mu_prime: mp.map(|m| Weight::from_halves(&m)),
        })
        .collect()
}

/// `lambda_L = (5/2,3/2,1,1/2)`, conjugate to half the dominant `rho`.
pub fn f4_lambda_l() -> Weight {
    Weight::from_halves(&[5, 3, 2, 1])
}

/// How a table representation is obtained by unitary induction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inducing {
    /// From the character `xi` of the Levi; `word` conjugates the table
    /// parameter to `(xi/2 + rho_m, -xi/2 + rho_m)`.
    Character { levi: Vec<usize>, xi: Weight, word: WeylWord },
    /// From `C_xi` tensored with the spherical unipotent `inner` of the
    /// Levi, whose coordinates are `coords`.
    Unipotent { levi: Vec<usize>, xi: Weight, inner: Flavor, coords: Vec<usize> },
}

impl fmt::Display for Inducing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = |l: &[usize]| l.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Inducing::Character { levi, xi, .. } => write!(f, "character {xi} of levi[{}]", idx(levi)),
            Inducing::Unipotent { levi, xi, inner, .. } => write!(f, "{inner} (x) {xi} of levi[{}]", idx(levi)),
        }
    }
}

/// The two rows whose remainder on a `B3` or `B2` Levi is a spherical
/// unipotent representation rather than a character.
fn unipotent_inducing(row: &F4Row) -> Option<Inducing> {
    match row.index {
        4 => Some(Inducing::Unipotent {
            levi: vec![0, 1, 2],
            xi: Weight::from_ints(&[5, 0, 0, 0]),
            inner: Flavor::SoOdd { a: 1, b: 2 },
            coords: vec![1, 2, 3],
        }),
        7 => Some(Inducing::Unipotent {
            levi: vec![1, 2],
            xi: Weight::from_ints(&[5, 3, 0, 0]),
            inner: Flavor::SoOdd { a: 1, b: 1 },
            coords: vec![2, 3],
        }),
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct F4RowReport {
    pub row: F4Row,
    /// Dominant conjugate of `lambda_L - lambda_R`.
    pub mu: Weight,
    pub nu: Weight,
    pub printed_mu_conjugate: bool,
    /// Whether the printed `(mu, nu)` is one diagonal `W`-conjugate of
    /// `(lambda_L - lambda_R, lambda_L + lambda_R)`.
    pub printed_pair_conjugate: bool,
    pub duplicate_of: Option<usize>,
    /// Multiplicity of the weight `mu` in `E(rho)`.
    pub weight_multiplicity: u64,
    pub inducing: Option<Inducing>,
    /// `[pi : E(rho)]` computed from the inducing data.
    pub e_rho_multiplicity: Option<u64>,
    /// For character-induced rows, the exterior-algebra multiplicity.
    pub exterior_multiplicity: Option<u64>,
}

impl F4RowReport {
    /// A unitary row is reproduced when `E(rho)` occurs exactly once.
    pub fn passes(&self) -> bool {
        !self.row.unitary || self.e_rho_multiplicity == Some(1)
    }
}

struct Search {
    frame: Frame,
    words: Vec<WeylWord>,
    levis: Vec<(LeviDatum, IVec)>,
}

impl Search {
    fn new(f4: &RootSystem) -> Result<Self> {
        let frame = Frame::new(f4);
        let words = f4.weyl_group(2000)?;
        let levis = LeviDatum::all_standard(f4)?
            .into_iter()
            .map(|d| {
                let two = encode(&d.rho_m().double())?;
                Ok((d, two))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Search { frame, words, levis })
    }

    /// The first `(Levi, w)` in standard order with `w nu = 2 rho_m` and
    /// `w mu` a dominant character of the Levi.
    fn character(&self, mu: &Weight, nu: &Weight) -> Result<Option<Inducing>> {
        let (m, n) = (encode(mu)?, encode(nu)?);
        for (d, two_rho_m) in &self.levis {
            for w in &self.words {
                let mut wn = n.clone();
                self.frame.apply_word(w.letters(), &mut wn);
                if &wn != two_rho_m {
                    continue;
                }
                let mut wm = m.clone();
                self.frame.apply_word(w.letters(), &mut wm);
                let orthogonal = d.simple_indices().iter().all(|&i| self.frame.simple_pairing(&wm, i) == 0);
                if orthogonal && self.frame.is_dominant(&wm) {
                    return Ok(Some(Inducing::Character {
                        levi: d.simple_indices().to_vec(),
                        xi: lattice::decode(&wm),
                        word: w.clone(),
                    }));
                }
            }
        }
        Ok(None)
    }

    /// Whether some `w` maps `(a_L, a_R)` to `(b_L, b_R)`.
    fn diagonal_conjugate(&self, a: (&Weight, &Weight), b: (&Weight, &Weight)) -> Result<bool> {
        let (al, ar, bl, br) = (encode(a.0)?, encode(a.1)?, encode(b.0)?, encode(b.1)?);
        Ok(self.words.iter().any(|w| {
            let (mut l, mut r) = (al.clone(), ar.clone());
            self.frame.apply_word(w.letters(), &mut l);
            self.frame.apply_word(w.letters(), &mut r);
            l == bl && r == br
        }))
    }
}

impl Engine {
    /// Evaluates every row of the `F4` table at infinitesimal character
    /// `rho/2`.
    pub fn f4_table(&self) -> Result<Vec<F4RowReport>> {
        let f4 = build_root_system(Series::F, 4)?;
        let rho = f4.rho().clone();
        let e_rho = self.freudenthal(&f4, &rho)?;
        let search = Search::new(&f4)?;
        let lambda_l = f4_lambda_l();
        let rows = f4_rows();
        let mut out = Vec::with_capacity(rows.len());
        for row in &rows {
            let mu = f4.dominant(&(&lambda_l - &row.lambda_r))?;
            let nu = &lambda_l + &row.lambda_r;
            let printed_mu_conjugate = f4.dominant(&row.printed_mu)? == mu;
            let printed_pair_conjugate =
                search.diagonal_conjugate((&(&lambda_l - &row.lambda_r), &nu), (&row.printed_mu, &row.printed_nu))?;
            let duplicate_of = rows[..row.index - 1].iter().find(|r| r.lambda_r == row.lambda_r).map(|r| r.index);
            let weight_multiplicity = e_rho.multiplicity(&mu);
            let mut report = F4RowReport {
                row: row.clone(),
                mu,
                nu: nu.clone(),
                printed_mu_conjugate,
                printed_pair_conjugate,
                duplicate_of,
                weight_multiplicity,
                inducing: None,
                e_rho_multiplicity: None,
                exterior_multiplicity: None,
            };
            if let Some(ind) = unipotent_inducing(row) {
                report.e_rho_multiplicity = Some(self.unipotent_induced_e_rho(&f4, &e_rho, &search, row, &ind)?);
                report.inducing = Some(ind);
            } else if let Some(ind) = search.character(&(&lambda_l - &row.lambda_r), &nu)? {
                if let Inducing::Character { levi, xi, .. } = &ind {
                    let datum = LeviDatum::new(&f4, levi)?;
                    let hr = self.hd_half_rho_induced(&datum, xi)?;
                    let frobenius = self.levi_multiplicity(&e_rho, &datum, xi)?;
                    if frobenius != hr.exterior_multiplicity {
                        return Err(Error::Inconsistent(format!(
                            "row {}: [E(rho)|m : C_xi] = {frobenius} but the exterior algebra gives {}",
                            row.index, hr.exterior_multiplicity
                        )));
                    }
                    report.exterior_multiplicity = Some(hr.exterior_multiplicity);
                    report.e_rho_multiplicity = Some(frobenius);
                }
                report.inducing = Some(ind);
            }
            out.push(report);
        }
        Ok(out)
    }

    /// `[Ind(C_xi (x) pi_m) : E(rho)] = sum_sigma [E(rho)|m : F(sigma)]`
    /// over the K-types `sigma` of `C_xi (x) pi_m`.
    fn unipotent_induced_e_rho(
        &self,
        f4: &RootSystem,
        e_rho: &Character,
        search: &Search,
        row: &F4Row,
        ind: &Inducing,
    ) -> Result<u64> {
        let Inducing::Unipotent { levi, xi, inner, coords } = ind else {
            return Err(Error::Precondition("expected a unipotent inducing datum".into()));
        };
        let datum = LeviDatum::new(f4, levi)?;
        let spec = make_spec(*inner)?;
        let family = spec.ktypes.as_ref().ok_or_else(|| Error::Precondition(format!("{inner} has no K-types")))?;
        let embedded: KTypeFamily = family.embed(format!("{inner}+xi"), 4, coords, xi)?;
        let inner_lambda = spec.lambda().clone();
        let mut lifted = Weight::zero(4);
        for (i, &k) in coords.iter().enumerate() {
            lifted.coords_mut()[k] = inner_lambda.coords()[i].clone();
        }
        let induced_l = &xi.half() + &lifted;
        let induced_r = &(-xi.half()) + &lifted;
        if !search.diagonal_conjugate((&induced_l, &induced_r), (&f4_lambda_l(), &row.lambda_r))? {
            return Err(Error::Inconsistent(format!("row {}: inducing data gives another parameter", row.index)));
        }
        let mut total = 0;
        for sigma in embedded.enumerate(&f4.rho().norm2(), self.budget_limit())? {
            if datum.is_levi_dominant(&sigma) {
                total += self.levi_multiplicity(e_rho, &datum, &sigma)?;
            }
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_reproduces_unitary_rows() {
        let reports = Engine::new().f4_table().unwrap();
        assert_eq!(reports.len(), 40);
        let yes: Vec<_> = reports.iter().filter(|r| r.row.unitary).collect();
        assert_eq!(yes.len(), 10);
        assert!(yes.iter().all(|r| r.passes()), "{yes:#?}");
        let by_character = yes.iter().filter(|r| matches!(r.inducing, Some(Inducing::Character { .. }))).count();
        assert_eq!(by_character, 8);
        let rho_row = &reports[27];
        assert_eq!(rho_row.weight_multiplicity, 1);
        let mismatched: Vec<usize> = reports.iter().filter(|r| !r.printed_mu_conjugate).map(|r| r.row.index).collect();
        assert_eq!(mismatched, vec![19, 38, 39]);
        let pairs: Vec<usize> = reports.iter().filter(|r| !r.printed_pair_conjugate).map(|r| r.row.index).collect();
        assert_eq!(pairs, vec![18, 19, 38, 39]);
        assert_eq!(reports[24].duplicate_of, Some(23));
    }
}
