//! Cross-module invariants: projective behaviour of compositions, Cartan
//! characteristic invariances, the Casorati determinant against the
//! shift-matrix determinant, defect relation sums, and the one-variable
//! bridge between the two characteristics.

use tropnev_core::casorati::{casorati, CasoratiSpec};
use tropnev_core::curve::{compose, representation_length, Curve, Hyperplane};
use tropnev_core::harness::{default_grid, fmt_report, Scenario};
use tropnev_core::linalg::{tropical_determinant, TropMatrix};
use tropnev_core::nevanlinna::{
    cartan_characteristic, characteristic, defect_estimate, weil_and_proximity,
};
use tropnev_core::scalar::{rat_int, Rat, TropScalar};
use tropnev_core::suites::{
    random_general_position_family, random_hyperplane, random_nondegenerate_curve,
    random_polynomial, SplitMix64, DEFAULT_SEED,
};
use tropnev_core::PLFunction;

#[test]
fn compose_is_monotone_in_coefficients() {
    let mut rng = SplitMix64::new(DEFAULT_SEED ^ 0x100);
    for _ in 0..25 {
        let n = 1 + (rng.below(3) as usize);
        let curve = tropnev_core::suites::random_curve(&mut rng, n);
        let h = random_hyperplane(&mut rng, n, true);
        let bumped: Vec<TropScalar> = h
            .coefficients()
            .iter()
            .map(|c| c.tmul(&TropScalar::from_int(rng.int_in(0, 3))))
            .collect();
        let h2 = Hyperplane::new(bumped).unwrap();
        let lo = compose(&h, &curve).unwrap();
        let hi = compose(&h2, &curve).unwrap();
        assert!(lo.pointwise_le(&hi).unwrap());
    }
}

#[test]
fn compose_respects_projective_scaling() {
    let mut rng = SplitMix64::new(DEFAULT_SEED ^ 0x101);
    for _ in 0..25 {
        let n = 1 + (rng.below(3) as usize);
        let curve = tropnev_core::suites::random_curve(&mut rng, n);
        let h = random_hyperplane(&mut rng, n, true);
        let lambda = rng.small_rat();
        let scaled = Curve::new(
            curve.components().iter().map(|f| f.add_scalar(&lambda)).collect(),
        )
        .unwrap();
        let base = compose(&h, &curve).unwrap();
        let shifted = compose(&h, &scaled).unwrap();
        assert_eq!(shifted, base.add_scalar(&lambda));
    }
}

#[test]
fn representation_length_is_projective() {
    let mut rng = SplitMix64::new(DEFAULT_SEED ^ 0x102);
    for _ in 0..20 {
        let n = 1 + (rng.below(3) as usize);
        let curve = tropnev_core::suites::random_curve(&mut rng, n);
        let h = random_hyperplane(&mut rng, n, true);
        let c = rng.small_rat();
        let bumped: Vec<TropScalar> = h
            .coefficients()
            .iter()
            .map(|a| a.tmul(&TropScalar::Real(c.clone())))
            .collect();
        let h2 = Hyperplane::new(bumped).unwrap();
        assert_eq!(
            representation_length(&h, &curve).unwrap(),
            representation_length(&h2, &curve).unwrap()
        );
    }
}

#[test]
fn cartan_characteristic_invariances() {
    let mut rng = SplitMix64::new(DEFAULT_SEED ^ 0x103);
    for _ in 0..20 {
        let n = 1 + (rng.below(3) as usize);
        let curve = tropnev_core::suites::random_curve(&mut rng, n);
        let lambda = rng.small_rat();
        let scaled = Curve::new(
            curve.components().iter().map(|f| f.add_scalar(&lambda)).collect(),
        )
        .unwrap();
        let mut permuted_components = curve.components().to_vec();
        permuted_components.rotate_left(1);
        let permuted = Curve::new(permuted_components).unwrap();
        for r in [rat_int(2), rat_int(7), rat_int(23)] {
            let t = cartan_characteristic(&curve, &r).unwrap();
            assert_eq!(cartan_characteristic(&scaled, &r).unwrap(), t);
            assert_eq!(cartan_characteristic(&permuted, &r).unwrap(), t);
        }
    }
}

// For F = (1_T, f) with entire f, Cartan's characteristic differs from the
// one-variable characteristic by the constant f⁺(0).
#[test]
fn cartan_vs_characteristic_constant_gap() {
    let mut rng = SplitMix64::new(DEFAULT_SEED ^ 0x104);
    for _ in 0..20 {
        let f = random_polynomial(&mut rng);
        let curve =
            Curve::new(vec![PLFunction::constant(Rat::from_integer(0.into())), f.clone()])
                .unwrap();
        let mut gap: Option<Rat> = None;
        for r in [rat_int(3), rat_int(9), rat_int(31), rat_int(77)] {
            let t_curve = cartan_characteristic(&curve, &r).unwrap();
            let t_fn = characteristic(&f, &r).unwrap().t;
            let g = t_curve - t_fn;
            match &gap {
                None => gap = Some(g),
                Some(seen) => assert_eq!(*seen, g),
            }
        }
    }
}

#[test]
fn casorati_matches_shift_matrix_determinant() {
    let mut rng = SplitMix64::new(DEFAULT_SEED ^ 0x105);
    for _ in 0..10 {
        let k = 2 + (rng.below(3) as usize);
        let functions: Vec<PLFunction> = (0..k).map(|_| random_polynomial(&mut rng)).collect();
        let shift = rat_int(rng.int_in(1, 2));
        let spec = CasoratiSpec::new(functions.clone(), shift.clone()).unwrap();
        let cas = casorati(&spec).unwrap();
        for _ in 0..100 {
            let x = rng.small_rat();
            let rows: Vec<Vec<TropScalar>> = functions
                .iter()
                .map(|f| {
                    (0..k)
                        .map(|step| f.eval(&(&x + rat_int(step as i64) * &shift)).unwrap())
                        .collect()
                })
                .collect();
            let det = tropical_determinant(&TropMatrix::from_rows(rows).unwrap()).unwrap();
            assert_eq!(det.value, cas.eval(&x).unwrap());
        }
    }
}

// Defect relation: the defect estimates over a general-position family sum
// to at most n+1 (within the documented estimate tolerance), and a complete
// hyperplane has defect estimate 0 at large radii.
#[test]
fn defect_relation_property_run() {
    let mut rng = SplitMix64::new(DEFAULT_SEED ^ 0x106);
    let tolerance = Rat::new(1.into(), 100.into());
    for case in 0..10 {
        let n = 1 + (case % 2);
        let curve = random_nondegenerate_curve(&mut rng, n);
        let q = n + 2;
        let family = random_general_position_family(&mut rng, n, q);
        let grid = default_grid(&curve);
        let mut sum = Rat::from_integer(0.into());
        let mut ok = true;
        for h in &family {
            match defect_estimate(&curve, h, &grid) {
                Ok(d) => sum += d,
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            assert!(
                sum <= rat_int((n + 1) as i64) + &tolerance,
                "defect sum {} exceeds n+1 in case {}",
                sum,
                case
            );
        }
    }
    // complete hyperplane over a growing curve
    let curve =
        Curve::new(vec![PLFunction::constant(rat_int(0)), PLFunction::identity()]).unwrap();
    let complete =
        Hyperplane::new(vec![TropScalar::from_int(0), TropScalar::from_int(0)]).unwrap();
    let grid: Vec<Rat> = (1..=32).map(rat_int).collect();
    assert_eq!(defect_estimate(&curve, &complete, &grid).unwrap(), rat_int(0));
}

// First-main-theorem constant equals ‖a‖ + ‖F(0)‖ − (P∘F)(0).
#[test]
fn fmt_constant_closed_form() {
    let mut rng = SplitMix64::new(DEFAULT_SEED ^ 0x107);
    for _ in 0..15 {
        let n = 1 + (rng.below(3) as usize);
        let curve = tropnev_core::suites::random_curve(&mut rng, n);
        let h = random_hyperplane(&mut rng, n, true);
        let comp = compose(&h, &curve).unwrap();
        let grid = default_grid(&curve);
        let sc = Scenario::new(curve.clone(), vec![h.clone()], grid, rat_int(1)).unwrap();
        let report = fmt_report(&sc).unwrap();
        let zero = Rat::from_integer(0.into());
        let expected = h.norm() + curve.sup_norm().eval_finite(&zero).unwrap()
            - comp.eval_finite(&zero).unwrap();
        assert_eq!(report.constants, vec![expected]);
        // and the Weil samples it averages are the exact λ values
        let w = weil_and_proximity(&curve, &h, &rat_int(5)).unwrap();
        assert_eq!(
            w.m_f,
            (w.lambda_plus + w.lambda_minus) / rat_int(2)
        );
    }
}
