mod common;

use common::{
    halves, ints, kostant_subsets, orbit_dominant, tensor_by_characters, weyl_dimension, weyl_order, Kostant,
};
use diraccoh::roots::parse_system;
use diraccoh::{Engine, Q};
use num_traits::Zero;

#[test]
fn freudenthal_matches_kostant_multiplicities() {
    let e = Engine::new();
    let cases = [
        ("A2", ints(&[2, 1, 0])),
        ("A3", ints(&[2, 1, 1, 0])),
        ("B2", ints(&[2, 1])),
        ("B3", halves(&[3, 1, 1])),
        ("C3", ints(&[2, 1, 0])),
        ("G2", ints(&[-1, -2, 3])),
        ("D4", ints(&[1, 1, 0, 0])),
    ];
    for (label, hw) in cases {
        let sys = parse_system(label).unwrap();
        let mut k = Kostant::new(&sys);
        let oracle = k.character(&hw);
        let ch = e.freudenthal(&sys, &hw).unwrap();
        assert_eq!(ch.len(), oracle.len(), "{label} {hw}");
        for (mu, m) in &oracle {
            assert_eq!(ch.multiplicity(mu), *m, "{label} {hw} at {mu}");
        }
        assert_eq!(Q::from_integer((ch.mass() as i64).into()), weyl_dimension(&sys, &hw));
    }
}

#[test]
fn klimyk_matches_character_products() {
    let e = Engine::new();
    let cases = [
        ("A2", ints(&[1, 0, 0]), ints(&[1, 1, 0])),
        ("A2", ints(&[2, 1, 0]), ints(&[2, 1, 0])),
        ("B2", ints(&[1, 0]), halves(&[1, 1])),
        ("B2", ints(&[1, 1]), ints(&[2, 0])),
        ("C3", ints(&[1, 0, 0]), ints(&[1, 1, 0])),
        ("G2", ints(&[0, -1, 1]), ints(&[-1, -2, 3])),
    ];
    for (label, a, b) in cases {
        let sys = parse_system(label).unwrap();
        assert_eq!(e.klimyk_tensor(&sys, &a, &b).unwrap(), tensor_by_characters(&sys, &a, &b), "{label} {a} x {b}");
    }
}

#[test]
fn kostant_scan_matches_subset_enumeration() {
    let e = Engine::new();
    for label in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
        let sys = parse_system(label).unwrap();
        let (min, zeros) = kostant_subsets(&sys);
        let r = e.kostant_scan(&sys).unwrap();
        assert!(min >= Q::zero());
        assert_eq!(r.equality_subsets as usize, zeros, "{label}");
        assert_eq!(zeros, weyl_order(&sys), "{label}");
        assert!(r.all_hold(), "{label}");
    }
}

#[test]
fn make_dominant_agrees_with_orbit_scan() {
    let sys = parse_system("F4").unwrap();
    for w in [halves(&[5, 3, 2, 1]), halves(&[-3, -5, 2, -1]), ints(&[0, -1, 2, -3])] {
        let (d, word) = sys.make_dominant(&w).unwrap();
        assert_eq!(d, orbit_dominant(&sys, &w));
        assert_eq!(word.apply(&sys, &w), d);
    }
}

#[test]
fn rho_f4_character_values() {
    // Frozen from the Kostant partition-function oracle on E(rho_F4).
    let e = Engine::new();
    let sys = parse_system("F4").unwrap();
    let rho = sys.rho().clone();
    assert_eq!(e.weight_multiplicity(&sys, &rho, &ints(&[5, 0, 0, 0])).unwrap(), 112);
    assert_eq!(e.weight_multiplicity(&sys, &rho, &ints(&[5, 3, 0, 0])).unwrap(), 8);
    assert_eq!(e.weight_multiplicity(&sys, &rho, &ints(&[2, 0, 0, 0])).unwrap(), 16336);
    assert_eq!(e.weight_multiplicity(&sys, &rho, &ints(&[0, 0, 0, 0])).unwrap(), 34432);
    assert_eq!(e.weight_multiplicity(&sys, &rho, &rho).unwrap(), 1);
    assert_eq!(e.freudenthal(&sys, &rho).unwrap().mass(), 1 << 24);
}

#[test]
fn rho_f4_top_multiplicities_match_kostant() {
    let e = Engine::new();
    let sys = parse_system("F4").unwrap();
    let rho = sys.rho().clone();
    let mut k = Kostant::new(&sys);
    for mu in [
        halves(&[9, 5, 3, 1]),
        ints(&[5, 3, 0, 0]),
        halves(&[9, 3, 3, 1]),
        ints(&[5, 0, 0, 0]),
        ints(&[2, 0, 0, 0]),
        ints(&[0, 0, 0, 0]),
    ] {
        assert_eq!(e.weight_multiplicity(&sys, &rho, &mu).unwrap(), k.multiplicity(&rho, &mu), "{mu}");
    }
}
