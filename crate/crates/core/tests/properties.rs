use std::f64::consts::{FRAC_PI_2, PI};

use brody_core::brody::brody_step;
use brody_core::complexgeom::{fs_distance, torus_reduce, ProjPoint};
use brody_core::greenpoly::{polyhedron_membership, power_map, power_preimage_identity_check};
use brody_core::holomap::PolyMap;
use brody_core::lelong::{area_in_ball_with, BallCurve};
use brody_core::lengtharea::{empirical_current, length_area_inequality_check, radial_profile, Hemispheres};
use brody_core::poly::Poly;
use brody_core::winkelmann::{
    distance_to_p, fs_term, generic_offset, golden_slope, lift_deriv_norm, line_disc, LineDiscScenario,
    CHART_RADIUS,
};
use brody_core::{c64, C64};
use proptest::prelude::*;

fn cplx() -> impl Strategy<Value = C64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| c64(a, b))
}

fn point(dim: usize) -> impl Strategy<Value = ProjPoint> {
    prop::collection::vec(cplx(), dim).prop_filter_map("zero vector", |v| ProjPoint::new(v).ok())
}

fn poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(cplx(), 1..=max_degree + 1).prop_map(Poly::new)
}

fn poly_map(max_degree: usize) -> impl Strategy<Value = PolyMap> {
    (poly(max_degree), poly(max_degree), poly(max_degree))
        .prop_filter_map("degenerate or constant", |(a, b, c)| {
            PolyMap::new(vec![a, b, c], 1.0).ok().filter(|f| !f.is_constant())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fs_distance_is_a_bounded_symmetric_projective_invariant(
        p in point(3), q in point(3), s in cplx().prop_filter("nonzero", |s| s.norm() > 1e-3)
    ) {
        let d = fs_distance(&p, &q);
        prop_assert!((0.0..=FRAC_PI_2 + 1e-15).contains(&d));
        prop_assert!((d - fs_distance(&q, &p)).abs() < 1e-14);
        prop_assert!(fs_distance(&p, &p) < 1e-7);
        let scaled = ProjPoint::new(q.coords().iter().map(|c| c * s).collect()).unwrap();
        prop_assert!((fs_distance(&p, &scaled) - d).abs() < 1e-12);
    }

    #[test]
    fn fs_triangle_inequality(p in point(3), q in point(3), r in point(3)) {
        prop_assert!(fs_distance(&p, &r) <= fs_distance(&p, &q) + fs_distance(&q, &r) + 1e-12);
    }

    #[test]
    fn membership_shrinks_as_epsilon_grows(z in point(5), a in 0.01..1.0f64, b in 0.01..1.0f64) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let m_hi = polyhedron_membership(&z, hi).unwrap();
        let m_lo = polyhedron_membership(&z, lo).unwrap();
        prop_assert!(m_lo.margin >= m_hi.margin);
        if m_hi.member {
            prop_assert!(m_lo.member);
        }
    }

    #[test]
    fn power_preimage_identity(z in point(5), eps in 0.05..0.95f64, n in 1u32..6) {
        prop_assert_eq!(power_preimage_identity_check(eps, n, &[z]).unwrap(), 0);
    }

    #[test]
    fn power_maps_compose(z in point(5), m in 1u32..4, n in 1u32..4) {
        let a = power_map(m, &power_map(n, &z).unwrap()).unwrap();
        let b = power_map(m * n, &z).unwrap();
        prop_assert!(fs_distance(&a, &b) < 1e-7);
    }

    #[test]
    fn torus_reduction_is_idempotent(a in cplx(), b in cplx(), i in -5i32..5, j in -5i32..5) {
        let (p, d) = torus_reduce([a, b]);
        let (q, e) = torus_reduce([p.z1(), p.z2()]);
        prop_assert_eq!(p, q);
        prop_assert!((d - e).abs() < 1e-12);
        prop_assert!(d <= 1.0 + 1e-12);
        let shifted = [a + c64(i as f64, 0.0), b + c64(0.0, j as f64)];
        prop_assert!((torus_reduce(shifted).1 - d).abs() < 1e-9);
    }

    #[test]
    fn line_disc_metric_model(z in cplx().prop_filter("in disc", |z| z.norm() < 1.0), n in 1u32..300) {
        let s = LineDiscScenario::new(golden_slope(), n, generic_offset()).unwrap();
        let flat = s.flat_deriv_norm();
        prop_assert!((flat - n as f64 * (1.0 + golden_slope().powi(2)).sqrt()).abs() < 1e-9 * flat);
        let lift = lift_deriv_norm(&s, z);
        prop_assert!(lift >= flat);
        if distance_to_p(&s, z) >= CHART_RADIUS {
            prop_assert_eq!(fs_term(&s, z), 0.0);
            prop_assert_eq!(lift, flat);
        }
        let rep = line_disc(&s, z).rep();
        prop_assert!(rep.iter().all(|x| (0.0..1.0).contains(x)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn cauchy_schwarz_on_random_maps(f in poly_map(3)) {
        let p = radial_profile(&f, 64, 128).unwrap();
        prop_assert!(length_area_inequality_check(&p) <= 1e-4);
        prop_assert!(p.a_of_r.windows(2).all(|w| w[1] >= w[0]));
    }

    #[test]
    fn current_has_unit_mass(f in poly_map(3)) {
        let c = empirical_current(&f, &Hemispheres, 32, 32).unwrap();
        prop_assert!((c.total_mass() - 1.0).abs() < 1e-12);
        prop_assert!(c.masses.iter().all(|&m| m >= 0.0));
    }

    #[test]
    fn brody_step_normalizes(f in poly_map(4)) {
        let (_, rep) = brody_step(&f).unwrap();
        prop_assert!(rep.basepoint.norm() < 1.0);
        prop_assert!((rep.deriv_at_zero - 1.0).abs() < 1e-9);
        prop_assert!(rep.sup_deriv_on_rescaled <= 2.0 + 1e-6);
        prop_assert!(rep.extremal_value >= rep.deriv_at_origin * (1.0 - 1e-12));
    }

    #[test]
    fn lelong_area_is_unitarily_invariant(
        a in 0.0..PI, b in 0.0..PI, c in 0.0..PI, c1 in -0.5..0.5f64, c2 in -0.5..0.5f64
    ) {
        // U = diag(e^{ib}, e^{ic}) · rotation(a)
        let (s, co) = a.sin_cos();
        let eb = C64::from_polar(1.0, b);
        let ec = C64::from_polar(1.0, c);
        let u = vec![vec![eb * co, -eb * s], vec![ec * s, ec * co]];
        let curve = BallCurve::new(
            vec![Poly::from_real(&[0.0, 1.0, c1]), Poly::from_real(&[0.0, c2, 1.0])],
            0.6,
            2.0,
        ).unwrap();
        let moved = curve.transform(&u).unwrap();
        let x = area_in_ball_with(&curve, 0.5, 128, 128).unwrap();
        let y = area_in_ball_with(&moved, 0.5, 128, 128).unwrap();
        prop_assert!((x - y).abs() < 1e-8 * x);
        prop_assert!(x >= PI * 0.25 * (1.0 - 1e-9));
    }
}
