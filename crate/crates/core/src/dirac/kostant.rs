use rayon::prelude::*;

use crate::engine::Engine;
use crate::error::Result;
use crate::lattice::{self, dot, Frame, IVec};
use crate::roots::RootSystem;

/// Result of scanning every subset `B` of the positive roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostantReport {
    pub system: String,
    pub positive_roots: usize,
    pub subsets: u64,
    /// Subsets with `<2 rho(B), 2 rho(B^c)> = 0`.
    pub equality_subsets: u64,
    pub weyl_order: u64,
    /// `<2 rho(B), 2 rho(B^c)> >= 0` for every subset.
    pub inequality_holds: bool,
    /// Equality holds exactly when `rho - 2 rho(B)` is conjugate to `rho`.
    pub equality_criterion_holds: bool,
    /// The equality subsets are exactly the `Delta+ cap w Delta+`, one per
    /// Weyl group element, with `2 rho(B_w) = rho + w rho`.
    pub parametrization_holds: bool,
}

impl KostantReport {
    pub fn all_hold(&self) -> bool {
        self.inequality_holds && self.equality_criterion_holds && self.parametrization_holds
    }
}

struct ChunkResult {
    equality: Vec<u64>,
    inequality_ok: bool,
    criterion_ok: bool,
}

fn scan_chunk(frame: &Frame, start: u64, end: u64) -> ChunkResult {
    let gray = |i: u64| i ^ (i >> 1);
    let two_rho = lattice::add(&frame.rho, &frame.rho);
    let mut sum: IVec = frame.zero();
    let first = gray(start);
    for (k, a) in frame.positive.iter().enumerate() {
        if first >> k & 1 == 1 {
            sum = lattice::add(&sum, a);
        }
    }
    let mut res = ChunkResult { equality: Vec::new(), inequality_ok: true, criterion_ok: true };
    let mut mask = first;
    for i in start..end {
        if i > start {
            let next = gray(i);
            let bit = (next ^ mask).trailing_zeros() as usize;
            if next >> bit & 1 == 1 {
                sum = lattice::add(&sum, &frame.positive[bit]);
            } else {
                sum = lattice::sub(&sum, &frame.positive[bit]);
            }
            mask = next;
        }
        let rest = lattice::sub(&two_rho, &sum);
        let ip = dot(&sum, &rest);
        if ip < 0 {
            res.inequality_ok = false;
        } else if ip == 0 {
            let mut v = lattice::sub(&frame.rho, &sum);
            frame.make_dominant(&mut v);
            if v != frame.rho {
                res.criterion_ok = false;
            }
            res.equality.push(mask);
        }
    }
    res
}

impl Engine {
    pub fn kostant_scan(&self, sys: &RootSystem) -> Result<KostantReport> {
        self.kostant_scan_chunked(sys, rayon::current_num_threads().max(1) * 8)
    }

    /// The scan split into `chunks` contiguous ranges processed in
    /// parallel; the report does not depend on the partition.
    pub fn kostant_scan_chunked(&self, sys: &RootSystem, chunks: usize) -> Result<KostantReport> {
        let n = sys.positive_roots().len();
        let total = 1u64 << n;
        self.meter("kostant_scan").charge(total)?;
        let frame = Frame::new(sys);
        let chunks = (chunks.max(1) as u64).min(total);
        let step = total.div_ceil(chunks);
        let parts: Vec<ChunkResult> =
            (0..chunks).into_par_iter().map(|c| scan_chunk(&frame, c * step, ((c + 1) * step).min(total))).collect();
        let mut equality: Vec<u64> = parts.iter().flat_map(|p| p.equality.iter().copied()).collect();
        equality.sort_unstable();
        let inequality_holds = parts.iter().all(|p| p.inequality_ok);
        let equality_criterion_holds = parts.iter().all(|p| p.criterion_ok);

        let weyl = sys.weyl_group(self.budget_limit() as usize)?;
        let mut from_weyl = Vec::with_capacity(weyl.len());
        let mut parametrization_holds = true;
        for w in &weyl {
            let inv: Vec<usize> = w.inverse().letters().to_vec();
            let mut mask = 0u64;
            let mut sum = frame.zero();
            for (k, a) in frame.positive.iter().enumerate() {
                let mut v = a.clone();
                frame.apply_word(&inv, &mut v);
                if frame.height_of(&v) > 0 {
                    mask |= 1 << k;
                    sum = lattice::add(&sum, a);
                }
            }
            let mut w_rho = frame.rho.clone();
            frame.apply_word(w.letters(), &mut w_rho);
            if sum != lattice::add(&frame.rho, &w_rho) {
                parametrization_holds = false;
            }
            from_weyl.push(mask);
        }
        from_weyl.sort_unstable();
        let distinct = from_weyl.windows(2).all(|p| p[0] != p[1]);
        parametrization_holds &= distinct && from_weyl == equality;

        Ok(KostantReport {
            system: sys.label().to_string(),
            positive_roots: n,
            subsets: total,
            equality_subsets: equality.len() as u64,
            weyl_order: weyl.len() as u64,
            inequality_holds,
            equality_criterion_holds,
            parametrization_holds,
        })
    }
}
