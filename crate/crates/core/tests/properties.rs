//! Property tests over random family points and random symmetric states.

use std::f64::consts::PI;

use nalgebra::{Rotation3, Unit, Vector3};
use proptest::prelude::*;

use squeezekit::reduction::{
    reduced_bruteforce, reduced_closed_form, reduced_dicke_trace, reduced_pair,
};
use squeezekit::squeezing::{
    bloch_correlation, mean_spin_triad, xi, xi_closed_form_family, xi_from_bloch,
};
use squeezekit::state::{canonical_amplitudes, full_tensor, two_spinor_expansion};
use squeezekit::sweep::{emit_csv, parse_csv, run_sweep, AGrid, KSelection, Mode, SweepConfig};
use squeezekit::{DickeVector, FamilyParams, Spinor};

fn family(n_max: usize) -> impl Strategy<Value = FamilyParams> {
    (2..=n_max)
        .prop_flat_map(|n| (Just(n), 1..=n / 2, 0.0..=1.0f64))
        .prop_map(|(n, k, a)| FamilyParams::new(n, k, a).unwrap())
}

fn dicke(n_max: usize) -> impl Strategy<Value = DickeVector> {
    (2..=n_max)
        .prop_flat_map(|n| prop::collection::vec(-1.0..1.0f64, n + 1))
        .prop_filter_map("zero vector", |v| {
            let n = v.len() - 1;
            DickeVector::normalized(n, v).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn full_tensor_round_trip(v in dicke(12)) {
        let back = full_tensor(&v).unwrap().project().unwrap();
        for (p, q) in back.amps().iter().zip(v.amps()) {
            prop_assert!((p - q).abs() < 1e-12);
        }
    }

    #[test]
    fn embedded_states_are_exchange_symmetric(v in dicke(9)) {
        prop_assert!(full_tensor(&v).unwrap().exchange_asymmetry() < 1e-12);
    }

    #[test]
    fn family_is_canonical_spinor_pair(p in family(30)) {
        let via_spinors = two_spinor_expansion(
            &Spinor::zero(),
            &Spinor::canonical(p.a()).unwrap(),
            p.n(),
            p.k(),
        ).unwrap();
        for (x, y) in canonical_amplitudes(&p).amps().iter().zip(via_spinors.amps()) {
            prop_assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn amplitudes_are_continuous(p in family(40), a in 0.05..0.95f64) {
        let h = 1e-4;
        let lo = canonical_amplitudes(&p.with_a(a).unwrap());
        let hi = canonical_amplitudes(&p.with_a(a + h).unwrap());
        let step = lo.amps().iter().zip(hi.amps()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        prop_assert!(step <= 10.0 * h, "step {step}");
    }

    #[test]
    fn reductions_agree(p in family(11)) {
        let closed = reduced_closed_form(&p);
        let state = canonical_amplitudes(&p);
        let ladder = reduced_dicke_trace(&state).unwrap();
        let brute = reduced_bruteforce(&full_tensor(&state).unwrap()).unwrap();
        prop_assert!(closed.max_diff(&ladder) < 1e-10);
        prop_assert!(closed.max_diff(&brute) < 1e-10);
    }

    #[test]
    fn reduced_density_is_a_state(p in family(400)) {
        let rho = reduced_closed_form(&p);
        prop_assert!((rho.trace() - 1.0).abs() < 1e-12);
        prop_assert!(rho.min_eigenvalue() >= -1e-10);
    }

    #[test]
    fn any_retained_pair_gives_the_same_matrix(p in family(9), i in 0usize..9, j in 0usize..9) {
        prop_assume!(i != j && i < p.n() && j < p.n());
        let full = full_tensor(&canonical_amplitudes(&p)).unwrap();
        let base = reduced_pair(&full, 0, 1).unwrap();
        let other = reduced_pair(&full, i, j).unwrap();
        prop_assert!((other - base).iter().all(|z| z.norm() < 1e-12));
    }

    #[test]
    fn generic_and_family_xi_agree(p in family(300)) {
        let generic = xi(&p).unwrap();
        let closed = xi_closed_form_family(&p).unwrap();
        prop_assert_eq!(generic.degenerate, closed.degenerate);
        if let (Some(x), Some(y)) = (generic.xi, closed.xi) {
            prop_assert!((x - y).abs() < 1e-12, "{x} vs {y}");
        }
    }

    #[test]
    fn rotation_about_y_leaves_xi_unchanged(p in family(60), phi in -PI..PI) {
        let bc = bloch_correlation(&reduced_closed_form(&p));
        let before = xi_from_bloch(&bc, p.n()).unwrap();
        prop_assume!(!before.degenerate);
        let rot = Rotation3::from_axis_angle(&Vector3::y_axis(), phi);
        let after = xi_from_bloch(&bc.rotated(rot.matrix()), p.n()).unwrap();
        prop_assert!((before.xi.unwrap() - after.xi.unwrap()).abs() < 1e-10);
        let n0 = Vector3::from(before.n_min.unwrap());
        let n1 = Vector3::from(after.n_min.unwrap());
        prop_assert!(((rot * n0).dot(&n1).abs() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn arbitrary_rotation_leaves_xi_unchanged(
        p in family(60),
        axis in (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64),
        phi in -PI..PI,
    ) {
        let axis = Vector3::new(axis.0, axis.1, axis.2);
        prop_assume!(axis.norm() > 0.1);
        let bc = bloch_correlation(&reduced_closed_form(&p));
        let before = xi_from_bloch(&bc, p.n()).unwrap();
        prop_assume!(!before.degenerate);
        let rot = Rotation3::from_axis_angle(&Unit::new_normalize(axis), phi);
        let rotated = bc.rotated(rot.matrix());
        prop_assert!(mean_spin_triad(&rotated).unwrap().orthonormality_error() < 1e-12);
        let after = xi_from_bloch(&rotated, p.n()).unwrap();
        prop_assert!((before.xi.unwrap() - after.xi.unwrap()).abs() < 1e-10);
    }

    #[test]
    fn family_mean_spin_is_in_the_xz_plane(p in family(500)) {
        let bc = bloch_correlation(&reduced_closed_form(&p));
        prop_assert!(bc.s.y.abs() < 1e-12);
        if let Ok(triad) = mean_spin_triad(&bc) {
            prop_assert!((triad.n1.transpose() * bc.t * triad.n2)[0].abs() < 1e-12);
        }
    }

    #[test]
    fn coherent_endpoint_is_not_squeezed(n in 2usize..2000, k_frac in 0.0..1.0f64) {
        let k = 1 + ((n / 2 - 1) as f64 * k_frac) as usize;
        let rep = xi(&FamilyParams::new(n, k, 1.0).unwrap()).unwrap();
        prop_assert!((rep.xi.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dicke_vector_json_round_trip(v in dicke(20)) {
        let text = serde_json::to_string(&v).unwrap();
        let back: DickeVector = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, v);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn csv_rows_refeed_to_the_same_xi(
        ns in prop::collection::btree_set(2usize..60, 1..4),
        steps in 2usize..30,
        mode in prop::sample::select(vec![Mode::Closed, Mode::Generic]),
    ) {
        let config = SweepConfig {
            n_list: ns.into_iter().collect(),
            k: KSelection::All { max: Some(4) },
            a_grid: AGrid { start: 0.0, stop: 1.0, steps },
            mode,
            jobs: Some(1),
            ..SweepConfig::default()
        };
        let table = run_sweep(&config).unwrap();
        let mut bytes = Vec::new();
        emit_csv(&table, &mut bytes).unwrap();
        let parsed = parse_csv(std::str::from_utf8(&bytes).unwrap()).unwrap();
        prop_assert_eq!(parsed.rows.len(), table.rows.len());
        for row in &parsed.rows {
            let rep = xi_closed_form_family(&FamilyParams::new(row.n, row.k, row.a).unwrap()).unwrap();
            prop_assert_eq!(rep.degenerate, row.degenerate);
            if let (Some(x), Some(y)) = (rep.xi, row.xi) {
                prop_assert!((x - y).abs() < 1e-12, "N={} k={} a={}: {x} vs {y}", row.n, row.k, row.a);
            }
        }
    }
}
