//! The ten acceptance criteria. Each prints one PASS/FAIL line with its
//! wall time; the run exits nonzero when an outcome differs from the
//! recorded one.

mod common;

use std::time::{Duration, Instant};

use diraccoh::catalog::{f4_rows, make_spec, standard_catalog, Exceptional, Flavor, Parity};
use diraccoh::dirac::{hd_unitarily_induced_witness, necessary_condition};
use diraccoh::repr::{prv_component, weyl_dim};
use diraccoh::roots::parse_system;
use diraccoh::verify::Check;
use diraccoh::{Engine, LeviDatum, RootSystem, Weight, Q};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_checks(checks: &[Check]) -> Outcome {
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| c.case.clone()).collect();
    Outcome {
        passed: failed.is_empty() && !checks.is_empty(),
        detail: if failed.is_empty() {
            format!("{} checks", checks.len())
        } else {
            format!("{} of {} checks failed: {}", failed.len(), checks.len(), failed.join(", "))
        },
    }
}

fn run(n: usize, limit: Duration, expect_pass: bool, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let t = start.elapsed();
    let passed = o.passed && t <= limit;
    println!(
        "criterion {n:>2}: {} ({:.2}s, limit {}s) {}",
        if passed { "PASS" } else { "FAIL" },
        t.as_secs_f64(),
        limit.as_secs(),
        o.detail
    );
    passed == expect_pass
}

fn crosscheck_flavors() -> Vec<Flavor> {
    let mut v: Vec<Flavor> = [(2, 1), (3, 2), (4, 1), (4, 3)].map(|(a, b)| Flavor::GlTwoColumn { a, b }).to_vec();
    v.extend([(1, 1), (1, 2), (2, 3)].map(|(a, b)| Flavor::SoOdd { a, b }));
    for n in 2..=6 {
        v.extend([Parity::Even, Parity::Odd].map(|parity| Flavor::SpMetaplectic { n, parity }));
    }
    for (a, b) in [(1, 2), (2, 2), (1, 3)] {
        v.extend([true, false].map(|spherical| Flavor::SoEven { a, b, spherical }));
    }
    v
}

fn strs(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn random_dominant(sys: &RootSystem, rng: &mut ChaCha8Rng, max: i64) -> Weight {
    let raw: Vec<i64> = (0..sys.ambient_dim()).map(|_| rng.gen_range(-max..=max)).collect();
    let w = if sys.label() == "G2" {
        sys.simple_roots()
            .iter()
            .zip(&raw)
            .fold(Weight::zero(3), |acc, (a, &c)| &acc + &a.scale(&Q::from_integer(c.into())))
    } else {
        Weight::from_ints(&raw)
    };
    sys.dominant(&w).unwrap()
}

fn kostant(e: &Engine) -> Outcome {
    let labels = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"];
    let checks = e.verify("kostant", &strs(&labels)).unwrap();
    let mut o = from_checks(&checks);
    for l in labels {
        let sys = parse_system(l).unwrap();
        let (min, zeros) = common::kostant_subsets(&sys);
        if min < Q::from_integer(0.into()) || zeros != common::weyl_order(&sys) {
            o.passed = false;
            o.detail.push_str(&format!("; oracle disagrees on {l}"));
        }
    }
    o
}

fn sp10(e: &Engine) -> Outcome {
    let mut o = from_checks(&e.verify("sp10", &[]).unwrap());
    let c5 = parse_system("C5").unwrap();
    let d = LeviDatum::new(&c5, &[0, 2, 3, 4]).unwrap();
    let w =
        hd_unitarily_induced_witness(&d, &Weight::from_ints(&[3, 3, 0, 0, 0]), &Weight::from_halves(&[1, -1, 4, 2, 0]))
            .unwrap();
    let expected: Vec<Weight> = [
        [2, 0, 0, 0, 0],
        [1, 1, 0, 0, 0],
        [1, 0, -1, 0, 0],
        [1, 0, 0, -1, 0],
        [1, 0, 0, 0, 1],
        [1, 0, 0, 0, -1],
        [0, 2, 0, 0, 0],
        [0, 1, -1, 0, 0],
        [0, 1, 0, 1, 0],
        [0, 1, 0, -1, 0],
        [0, 1, 0, 0, 1],
        [0, 1, 0, 0, -1],
    ]
    .iter()
    .map(|x| Weight::from_ints(x))
    .collect();
    let same = w.subset.len() == expected.len() && expected.iter().all(|b| w.subset.contains(b));
    // Lowering a member of B by a positive root of m stays in B whenever it
    // stays in Delta(n).
    let closed = w.subset.iter().all(|b| {
        d.delta_m().iter().all(|a| {
            let lower = b - a;
            !d.delta_n().contains(&lower) || w.subset.contains(&lower)
        })
    });
    o.passed &= same && closed;
    o.detail.push_str(&format!("; B equals the 12 listed roots: {same}; closed under m-lowering: {closed}"));
    o
}

fn f4(e: &Engine) -> Outcome {
    let yes = f4_rows().iter().filter(|r| r.unitary).count();
    let mut o = from_checks(&e.verify("f4", &[]).unwrap());
    o.passed &= yes == 10;
    o.detail.push_str(&format!("; {yes} YES rows, each with [pi:E(rho)] = 1"));
    o
}

fn properties(e: &Engine) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let rank4 = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"];
    let rank3 = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"];
    let mut bad = Vec::new();
    for k in 0..200 {
        let sys = parse_system(rank4[k % rank4.len()]).unwrap();
        let hw = random_dominant(&sys, &mut rng, if sys.label() == "F4" { 1 } else { 3 });
        let mass = e.freudenthal(&sys, &hw).unwrap().mass();
        if Q::from_integer((mass as i64).into()) != common::weyl_dimension(&sys, &hw) {
            bad.push(format!("mass {} {hw}", sys.label()));
        }
    }
    for k in 0..100 {
        let sys = parse_system(rank4[k % rank4.len()]).unwrap();
        let max = if sys.label() == "F4" { 1 } else { 2 };
        let (a, b) = (random_dominant(&sys, &mut rng, max), random_dominant(&sys, &mut rng, max));
        let t = e.klimyk_tensor(&sys, &a, &b).unwrap();
        let total: u128 = t.iter().map(|(w, m)| weyl_dim(&sys, w).unwrap().to_u128().unwrap() * *m as u128).sum();
        let expected = weyl_dim(&sys, &a).unwrap() * weyl_dim(&sys, &b).unwrap();
        if !t.contains_key(&prv_component(&sys, &a, &b).unwrap()) || total != expected.to_u128().unwrap() {
            bad.push(format!("prv {} {a} {b}", sys.label()));
        }
    }
    for k in 0..50 {
        let sys = parse_system(rank3[k % rank3.len()]).unwrap();
        let (a, b) = (random_dominant(&sys, &mut rng, 1), random_dominant(&sys, &mut rng, 1));
        if e.klimyk_tensor(&sys, &a, &b).unwrap() != common::tensor_by_characters(&sys, &a, &b) {
            bad.push(format!("klimyk {} {a} {b}", sys.label()));
        }
    }
    // Norm checks need tau', which exists only when 2 lambda is regular
    // integral; the exceptional parameters without it are criterion 10's.
    let without_tau: Vec<String> = standard_catalog()
        .into_iter()
        .filter(|f| {
            let s = make_spec(*f).unwrap();
            !necessary_condition(&s.system, s.lambda()).unwrap().holds()
        })
        .map(|f| f.to_string())
        .collect();
    let norms = e.verify("norms", &[]).unwrap();
    for c in norms.iter().filter(|c| !c.passed && !without_tau.contains(&c.case)) {
        bad.push(format!("norms {}", c.case));
    }
    Outcome {
        passed: bad.is_empty(),
        detail: format!(
            "200 masses, 100 PRV pairs, 50 oracle pairs, {} norm checks ({} without tau': {}){}",
            norms.len(),
            without_tau.len(),
            without_tau.join(", "),
            if bad.is_empty() { String::new() } else { format!("; failures: {}", bad.join(", ")) }
        ),
    }
}

fn exceptional(e: &Engine) -> (Outcome, Vec<&'static str>) {
    let checks = e.verify("exceptional", &[]).unwrap();
    let failing: Vec<&'static str> = Exceptional::ALL
        .into_iter()
        .filter(|x| checks.iter().any(|c| c.case == x.name() && !c.passed))
        .map(|x| x.name())
        .collect();
    let detail = checks
        .iter()
        .map(|c| format!("{} {}: {}", if c.passed { "ok" } else { "red" }, c.case, c.detail))
        .collect::<Vec<_>>()
        .join("; ");
    (Outcome { passed: failing.is_empty(), detail }, failing)
}

fn main() {
    let e = Engine::with_memo();
    let secs = Duration::from_secs;
    let mut unexpected = Vec::new();
    let mut expect = |n: usize, ok: bool| {
        if !ok {
            unexpected.push(n);
        }
    };
    expect(1, run(1, secs(10), true, || kostant(&e)));
    expect(2, run(2, secs(60), true, || from_checks(&e.verify("reserho", &strs(&["A3", "B3", "C3", "A4"])).unwrap())));
    expect(3, run(3, secs(30), true, || sp10(&e)));
    expect(4, run(4, secs(300), true, || from_checks(&e.verify("halfrho", &strs(&["A4", "B3", "C4", "D4"])).unwrap())));
    expect(5, run(5, secs(600), true, || f4(&e)));
    expect(
        6,
        run(6, secs(300), true, || {
            let flavors = crosscheck_flavors();
            let args: Vec<String> = flavors.iter().map(|f| f.to_string()).collect();
            from_checks(&e.verify("crosscheck", &args).unwrap())
        }),
    );
    expect(7, run(7, secs(60), true, || from_checks(&e.verify("parity", &[]).unwrap())));
    expect(8, run(8, secs(300), true, || from_checks(&e.verify("maxpar", &[]).unwrap())));
    expect(9, run(9, secs(600), true, || properties(&e)));
    // The printed E6 parameters and the E8 3A1 parameter do not satisfy the
    // stated condition; the other four do.
    let mut red = Vec::new();
    expect(
        10,
        run(10, secs(60), false, || {
            let (o, failing) = exceptional(&e);
            red = failing;
            o
        }),
    );
    assert_eq!(red, ["E6-3A1", "E6-2A1", "E8-3A1"]);
    assert!(unexpected.is_empty(), "criteria with unexpected outcomes: {unexpected:?}");
    println!("acceptance: 9 PASS, criterion 10 FAIL as recorded");
}
