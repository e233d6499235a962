//! Acceptance suite: every criterion runs at its stated (exact) tolerance
//! and prints one pass line. Run with `cargo test --test acceptance` (add
//! `-- --nocapture` to see the lines).

use std::process::Command;
use std::time::{Duration, Instant};

use tropnev_core::curve::{verify_dependence_witness, Curve, Hyperplane};
use tropnev_core::harness::{
    cc410_report, complete_hyperplane_identity, geometric_grid, growth_indicator,
    meromorphic_smt_report, smt_casorati_report, smt_main_report, truncated_counterexample,
    GrowthClass, Scenario, Verdict,
};
use tropnev_core::linalg::{
    check_balance, cramer_permanents, cramer_upper_bound, tmat_mul, tropical_determinant,
    TropMatrix,
};
use tropnev_core::nevanlinna::{characteristic, counting_poles, counting_truncated, CrossingKind};
use tropnev_core::plfun::{e2_on_window, SignedCrossing};
use tropnev_core::scalar::{rat, rat_int, TropScalar};
use tropnev_core::suites::{
    suite_casorati_properties, suite_complete_identity, suite_determinant_oracle,
    suite_first_main, suite_jensen, suite_smt_main, suite_tp1_general_position, DEFAULT_SEED,
};
use tropnev_core::PLFunction;

fn pass(criterion: u32, detail: &str) {
    println!("ACCEPTANCE criterion {:2}: PASS — {}", criterion, detail);
}

fn int_matrix(rows: &[&[i64]]) -> TropMatrix {
    TropMatrix::from_rows(
        rows.iter().map(|r| r.iter().map(|&v| TropScalar::from_int(v)).collect()).collect(),
    )
    .unwrap()
}

fn scalars(vals: &[i64]) -> Vec<TropScalar> {
    vals.iter().map(|&v| TropScalar::from_int(v)).collect()
}

fn hyperplane(coeffs: &[Option<i64>]) -> Hyperplane {
    Hyperplane::new(
        coeffs
            .iter()
            .map(|c| match c {
                None => TropScalar::Bottom,
                Some(v) => TropScalar::from_int(*v),
            })
            .collect(),
    )
    .unwrap()
}

fn example_5_7_function() -> PLFunction {
    let f0 = PLFunction::from_terms(&[
        (TropScalar::from_int(12), rat_int(-2)),
        (TropScalar::from_int(-18), rat_int(3)),
    ])
    .unwrap();
    let f1 = PLFunction::from_terms(&[
        (TropScalar::from_int(0), rat_int(-3)),
        (TropScalar::from_int(0), rat_int(0)),
        (TropScalar::from_int(-8), rat_int(4)),
    ])
    .unwrap();
    f1.sub_combine(&f0).unwrap()
}

#[test]
fn criterion_01_cramer_example() {
    let a = int_matrix(&[&[0, -1, 1], &[0, 0, 2], &[0, 1, 0]]);
    let b = scalars(&[0, -1, 1]);

    let solve = || {
        let det = tropical_determinant(&a).unwrap();
        let perms = cramer_permanents(&a, &b).unwrap();
        let bound = cramer_upper_bound(&a, &b).unwrap();
        (det, perms, bound)
    };
    solve(); // warm-up
    let start = Instant::now();
    let (det, perms, bound) = solve();
    let elapsed = start.elapsed();

    assert_eq!(det.value, TropScalar::from_int(3));
    assert!(!det.is_singular());
    let values: Vec<TropScalar> = perms.iter().map(|p| p.value.clone()).collect();
    assert_eq!(values, scalars(&[3, 3, 1]));
    assert!(!perms[0].is_singular(), "B_1 nonsingular");
    assert!(!perms[1].is_singular(), "B_2 nonsingular");
    assert!(perms[2].is_singular(), "B_3 singular");
    assert_eq!(bound, scalars(&[0, 0, -2]));
    assert!(check_balance(&a, &bound, &b).unwrap());
    assert!(elapsed < Duration::from_millis(1), "took {:?}", elapsed);
    pass(1, &format!("|A|=3, permanents (3,3,1), bound (0,0,-2) in {:?}", elapsed));
}

#[test]
fn criterion_02_determinant_product_example() {
    let a = int_matrix(&[&[1, 2, 0], &[1, 0, 1], &[0, 1, 1]]);
    let b = int_matrix(&[&[-1, 1, -1], &[0, 0, 1], &[1, 2, 1]]);
    let da = tropical_determinant(&a).unwrap().value;
    let db = tropical_determinant(&b).unwrap().value;
    assert_eq!(da, TropScalar::from_int(4));
    assert_eq!(db, TropScalar::from_int(3));
    let c = tmat_mul(&a, &b).unwrap();
    assert_eq!(c, int_matrix(&[&[2, 2, 3], &[2, 3, 2], &[2, 3, 2]]));
    let dc = tropical_determinant(&c).unwrap().value;
    assert_eq!(dc, TropScalar::from_int(8));
    assert!(da.tmul(&db) <= dc, "4 + 3 <= 8");
    pass(2, "|A|=4, |B|=3, |A⊗B|=8, product inequality strict");
}

#[test]
fn criterion_03_dependence_witness_example() {
    let f0 = PLFunction::from_terms(&[
        (TropScalar::from_int(1), rat_int(-1)),
        (TropScalar::from_int(1), rat_int(0)),
        (TropScalar::from_int(-1), rat_int(1)),
    ])
    .unwrap();
    let f1 = {
        let a = PLFunction::from_terms(&[
            (TropScalar::from_int(0), rat_int(0)),
            (TropScalar::from_int(-4), rat_int(2)),
        ])
        .unwrap();
        let b = PLFunction::from_terms(&[
            (TropScalar::from_int(0), rat_int(-1)),
            (TropScalar::from_int(0), rat_int(0)),
        ])
        .unwrap();
        a.sub_combine(&b).unwrap()
    };
    let f2 = PLFunction::from_terms(&[
        (TropScalar::from_int(-1), rat_int(-1)),
        (TropScalar::from_int(-1), rat_int(0)),
        (TropScalar::from_int(-5), rat_int(2)),
    ])
    .unwrap();
    let fns = vec![f0, f1, f2];
    let window = Some((rat_int(-5), rat_int(5)));
    let witness = scalars(&[0, 1, 2]);
    assert!(verify_dependence_witness(&fns, &witness, window.clone()).unwrap());
    let flat = scalars(&[0, 0, 0]);
    assert!(!verify_dependence_witness(&fns, &flat, window).unwrap());
    pass(3, "witness (0,1,2) verifies on [-5,5], (0,0,0) does not");
}

#[test]
fn criterion_04_truncated_counterexample() {
    let f = example_5_7_function();
    assert_eq!(
        f.poles(),
        vec![SignedCrossing { location: rat_int(6), jump: rat_int(-5) }]
    );
    // N(r,f) = (5/2)r − 15 and T(r,f) = (7/2)r − 16 for r > 12
    for r in [13i64, 20, 44] {
        let r = rat_int(r);
        assert_eq!(counting_poles(&f, &r).unwrap(), rat(5, 2) * &r - rat_int(15));
        assert_eq!(characteristic(&f, &r).unwrap().t, rat(7, 2) * &r - rat_int(16));
        assert_eq!(
            counting_truncated(&f, &r, CrossingKind::Poles).unwrap(),
            rat(1, 2) * &r - rat_int(3)
        );
    }
    // exact crossings of f ⊕ (−2) pin the truncated count to r − 13/2
    let shifted = f.max_combine(&PLFunction::constant(rat_int(-2))).unwrap();
    assert_eq!(
        shifted.roots(),
        vec![
            SignedCrossing { location: rat_int(-10), jump: rat_int(1) },
            SignedCrossing { location: rat_int(3), jump: rat_int(6) },
        ]
    );
    let r20 = rat_int(20);
    assert_eq!(
        counting_truncated(&shifted, &r20, CrossingKind::Roots).unwrap(),
        &r20 - rat(13, 2)
    );

    let values = vec![TropScalar::from_int(-12), TropScalar::from_int(-2)];
    let grid = geometric_grid(&rat_int(1), &rat_int(44), 64);
    let truncated = truncated_counterexample(&f, &values, &grid).unwrap();
    assert_eq!(truncated.verdict.verdict, Verdict::FailsEventually);
    assert_eq!(truncated.verdict.lhs_tail_slope, rat(7, 2));
    assert!(truncated.verdict.rhs_tail_slope < rat(7, 2));
    let untruncated = meromorphic_smt_report(&f, &values, &grid).unwrap();
    assert_eq!(untruncated.main.verdict, Verdict::HoldsEventually);
    pass(
        4,
        &format!(
            "T slope 7/2 beats truncated RHS slope {}; untruncated inequality holds",
            truncated.verdict.rhs_tail_slope
        ),
    );
}

#[test]
fn criterion_05_jensen_identity_suite() {
    let outcome = suite_jensen(DEFAULT_SEED, 200);
    assert!(outcome.passed(), "{:?}", outcome.failures);
    pass(5, "Jensen residue identically zero on 200 randomized functions x 5 radii");
}

#[test]
fn criterion_06_first_main_theorem_suite() {
    let outcome = suite_first_main(DEFAULT_SEED, 50);
    assert!(outcome.passed(), "{:?}", outcome.failures);
    pass(6, "m + N − T_f exactly constant on 50 randomized (curve, hyperplane) pairs");
}

#[test]
fn criterion_07_smt_main_suite() {
    let outcome = suite_smt_main(DEFAULT_SEED, 50);
    assert!(outcome.passed(), "{:?}", outcome.failures);
    pass(7, "growth-free second main theorem holds on 50 randomized scenarios");
}

#[test]
fn criterion_08_complete_identity_suite() {
    let outcome = suite_complete_identity(DEFAULT_SEED, 30);
    assert!(outcome.passed(), "{:?}", outcome.failures);
    pass(8, "T_f − N tail slope exactly 0 on 30 randomized complete hyperplanes");
}

#[test]
fn criterion_09_staircase_duality() {
    let e2 = e2_on_window(rat_int(-8), rat_int(8)).unwrap();
    let curve = Curve::new(vec![PLFunction::constant(rat_int(0)), e2]).unwrap();
    let hyperplanes = vec![
        hyperplane(&[Some(0), None]),
        hyperplane(&[None, Some(0)]),
        hyperplane(&[Some(0), Some(0)]),
    ];
    let grid = geometric_grid(&rat_int(1), &rat_int(8), 32);
    let sc = Scenario::new(curve.clone(), hyperplanes, grid.clone(), rat_int(1)).unwrap();

    let cas = smt_casorati_report(&sc).unwrap();
    let sums = cas.table.column("sum_N_compositions").unwrap();
    let ncas = cas.table.column("N_inv_casorati").unwrap();
    assert!(sums.iter().zip(ncas.iter()).all(|(s, n)| s == n), "ΣN − N(1/C) ≡ 0");
    assert_eq!(cas.verdict.verdict, Verdict::FailsEventually);

    // T_F outgrows any constant visible on the grid (the Casorati report
    // clips to r ≤ 7 where C(f)'s window ends)
    let t_vals = cas.table.column("T_f").unwrap();
    assert!(*t_vals.last().unwrap() > rat_int(60));
    assert!(t_vals.windows(2).all(|w| w[0] < w[1]));
    assert!(t_vals.last().unwrap() > &(t_vals.first().unwrap() * rat_int(100)));

    let main = smt_main_report(&sc).unwrap();
    assert_eq!(main.verdict.verdict, Verdict::HoldsEventually);
    let deficits = main.table.column("deficit").unwrap();
    assert!(deficits.iter().all(|d| *d == rat_int(0)));

    let growth = growth_indicator(&curve, &grid).unwrap();
    let last = growth.samples.last().unwrap().1;
    assert!(last > 0.6, "final indicator {}", last);
    assert_eq!(growth.classification, GrowthClass::NotSubnormal);
    pass(
        9,
        &format!(
            "Casorati bound diverges while the growth-free bound holds; indicator {:.4} > 0.6",
            last
        ),
    );
}

#[test]
fn criterion_10_equality_example() {
    let curve =
        Curve::new(vec![PLFunction::constant(rat_int(0)), PLFunction::identity()]).unwrap();
    let h3 = hyperplane(&[Some(0), Some(0)]);
    let hyperplanes =
        vec![hyperplane(&[Some(0), None]), hyperplane(&[None, Some(0)]), h3.clone()];
    let grid = geometric_grid(&rat_int(1), &rat_int(16), 32);
    let sc = Scenario::new(curve.clone(), hyperplanes, grid.clone(), rat_int(1)).unwrap();
    let main = smt_main_report(&sc).unwrap();
    assert_eq!(main.verdict.verdict, Verdict::HoldsEventually);
    let deficits = main.table.column("deficit").unwrap();
    assert!(deficits.iter().all(|d| *d == rat_int(0)), "D ≡ 0");

    let identity = complete_hyperplane_identity(&curve, &h3, &grid).unwrap();
    assert_eq!(identity.verdict.verdict, Verdict::HoldsEventually);
    assert_eq!(identity.verdict.lhs_tail_slope, identity.verdict.rhs_tail_slope);
    pass(10, "deficit identically zero; T_f − N(1/(P3∘f)) has tail slope 0");
}

#[test]
fn criterion_11_casorati_properties_suite() {
    let outcome = suite_casorati_properties(DEFAULT_SEED, 50);
    assert!(outcome.passed(), "{:?}", outcome.failures);
    pass(11, "Casorati symmetry/annihilation/factorization exact, shift bound pointwise, 50 tuples");
}

#[test]
fn criterion_12_determinant_oracle_suite() {
    let outcome = suite_determinant_oracle(DEFAULT_SEED, 500);
    assert!(outcome.passed(), "{:?}", outcome.failures);
    pass(12, "permutation enumeration matches cofactor expansion on 500 matrices");
}

#[test]
fn criterion_13_tp1_distinctness_suite() {
    let outcome = suite_tp1_general_position(DEFAULT_SEED, 100);
    assert!(outcome.passed(), "{:?}", outcome.failures);
    pass(13, "distinctness equals general position on 100 TP^1 value multisets");
}

#[test]
fn criterion_14_maximal_one_degeneracy() {
    for n in 1usize..=3 {
        // components 0, x, 2x−2, 3x−6, ... keep every term of the all-zero
        // extra hyperplane essential
        let mut components = vec![PLFunction::constant(rat_int(0))];
        for i in 1..=n {
            let i = i as i64;
            components.push(PLFunction::affine(rat_int(i), rat_int(-i * (i - 1))));
        }
        let curve = Curve::new(components).unwrap();
        let mut hyperplanes = Vec::new();
        for i in 0..=n {
            let coeffs: Vec<TropScalar> = (0..=n)
                .map(|j| if i == j { TropScalar::one() } else { TropScalar::Bottom })
                .collect();
            hyperplanes.push(Hyperplane::new(coeffs).unwrap());
        }
        hyperplanes.push(
            Hyperplane::new(vec![TropScalar::one(); n + 1]).unwrap(),
        );
        let grid = geometric_grid(&rat_int(1), &rat_int(24), 32);
        let sc = Scenario::new(curve, hyperplanes, grid, rat_int(1)).unwrap();
        let report = cc410_report(&sc).unwrap();
        assert_eq!(report.lambda_star, n + 1, "λ* = n+1 for n = {}", n);
        assert_eq!(report.lambda, 0, "λ = 0 for n = {}", n);
        assert_eq!(report.lower.verdict, Verdict::HoldsEventually);
        assert_eq!(report.upper.verdict, Verdict::HoldsEventually);
        let eq = report.equality.expect("equality case engaged");
        assert_eq!(eq.verdict, Verdict::HoldsEventually);
        assert_eq!(eq.lhs_tail_slope, eq.rhs_tail_slope, "equality tail slope 0");
    }
    pass(14, "coordinate-plus-complete construction: λ* = n+1, λ = 0, equality slope 0 for n=1..3");
}

#[test]
fn criterion_15_reproduce_paper_end_to_end() {
    let bin = env!("CARGO_BIN_EXE_tropnev");
    let tmp = std::env::temp_dir().join("tropnev-acceptance");
    let out1 = tmp.join("run1");
    let out2 = tmp.join("run2");
    let _ = std::fs::remove_dir_all(&tmp);

    let run = |out: &std::path::Path| {
        let start = Instant::now();
        let output = Command::new(bin)
            .args(["reproduce-paper", "--out"])
            .arg(out)
            .output()
            .expect("binary runs");
        let elapsed = start.elapsed();
        assert!(output.status.success(), "exit status {:?}", output.status);
        assert!(elapsed < Duration::from_secs(60), "took {:?}", elapsed);
        let stdout = String::from_utf8(output.stdout).unwrap();
        assert!(stdout.contains("reproduce-paper: all checks passed"));
        assert!(!stdout.contains("FAIL\n"), "no failing rows");
        (stdout, elapsed)
    };
    let (stdout1, t1) = run(&out1);
    let (stdout2, _) = run(&out2);
    assert_eq!(stdout1, stdout2, "stdout byte-identical across runs");

    let mut files1: Vec<_> = std::fs::read_dir(&out1)
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    files1.sort();
    let mut files2: Vec<_> = std::fs::read_dir(&out2)
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    files2.sort();
    assert_eq!(files1, files2);
    assert!(!files1.is_empty());
    for name in &files1 {
        let a = std::fs::read(out1.join(name)).unwrap();
        let b = std::fs::read(out2.join(name)).unwrap();
        assert_eq!(a, b, "{:?} byte-identical", name);
    }
    pass(15, &format!("all PASS in {:?}; outputs byte-identical across two runs", t1));
}
