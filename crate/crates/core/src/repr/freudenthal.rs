use rustc_hash::{FxHashMap, FxHashSet};

use crate::engine::Meter;
use crate::error::{Error, Result};
use crate::lattice::{self, dot, Frame, IVec};

use super::character::DominantCharacter;

/// Freudenthal's recursion on dominant weights only. Weights `mu + k alpha`
/// outside the dominant chamber are looked up through their dominant
/// conjugate.
pub(crate) fn dominant_weights(frame: &Frame, hw: &IVec, meter: &mut Meter) -> Result<DominantCharacter> {
    // Every dominant weight below the highest weight is reachable by
    // subtracting positive roots without leaving the dominant chamber.
    let mut seen: FxHashSet<IVec> = FxHashSet::default();
    seen.insert(hw.clone());
    let mut order = vec![hw.clone()];
    let mut k = 0;
    while k < order.len() {
        for a in &frame.positive {
            let v = lattice::sub(&order[k], a);
            if frame.is_dominant(&v) && !seen.contains(&v) {
                meter.charge(1)?;
                seen.insert(v.clone());
                order.push(v);
            }
        }
        k += 1;
    }
    order.sort_by(|a, b| frame.height_of(b).cmp(&frame.height_of(a)).then_with(|| b.cmp(a)));

    let top = lattice::add(hw, &frame.rho);
    let top_norm = dot(&top, &top) as i128;
    let mut mult: FxHashMap<IVec, u64> = FxHashMap::default();
    mult.insert(hw.clone(), 1);
    let mut entries = vec![(hw.clone(), 1u64)];
    for mu in order.iter().skip(1) {
        let shifted = lattice::add(mu, &frame.rho);
        let lhs = top_norm - dot(&shifted, &shifted) as i128;
        let mut rhs: i128 = 0;
        for a in &frame.positive {
            let mut v = mu.clone();
            loop {
                for (x, y) in v.iter_mut().zip(a) {
                    *x += y;
                }
                let mut d = v.clone();
                frame.make_dominant(&mut d);
                match mult.get(&d) {
                    Some(&m) => rhs += 2 * m as i128 * dot(&v, a) as i128,
                    None => break,
                }
            }
        }
        if lhs <= 0 || rhs % lhs != 0 {
            return Err(Error::Inconsistent(format!(
                "Freudenthal recursion at {} is not integral",
                lattice::decode(mu)
            )));
        }
        let m = (rhs / lhs) as u64;
        if m > 0 {
            mult.insert(mu.clone(), m);
            entries.push((mu.clone(), m));
        }
    }
    Ok(DominantCharacter { highest: hw.clone(), entries })
}

/// Expands a dominant character over Weyl orbits.
pub(crate) fn expand(frame: &Frame, dc: &DominantCharacter, meter: &mut Meter) -> Result<FxHashMap<IVec, u64>> {
    let mut map = FxHashMap::default();
    for (mu, m) in &dc.entries {
        let orbit = frame.orbit(mu);
        meter.charge(orbit.len() as u64)?;
        for v in orbit {
            map.insert(v, *m);
        }
    }
    Ok(map)
}
