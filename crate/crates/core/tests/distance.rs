mod common;

use amalgam_core::curves::{intersection_in_surface, is_trivial, NormalCurve};
use amalgam_core::distance::{diameter_upper_bound, estimate_distance, hempel_upper_bound, Certificate, TORUS_WARNING};
use amalgam_core::normal::parse_arc_vector;
use amalgam_core::BoundaryTriangulation;
use common::oracles::{curves_up_to_weight, surface};
use proptest::prelude::*;

fn curve(surf: &BoundaryTriangulation, rows: &str) -> NormalCurve {
    let text = format!("nc {}\n{}\n", surf.triangle_count(), rows.replace('/', "\n"));
    NormalCurve::new(surf, parse_arc_vector(&text).unwrap()).unwrap()
}

// Curves on the genus-2 boundary of the handlebody fixture.
const SHORT: &str = "0 0 0/0 0 0/0 1 0/0 1 0/0 0 1/0 1 0";
const DISJOINT: &str = "0 0 0/0 2 0/0 2 0/1 1 1/0 0 2/1 1 1";
const AROUND_VERTEX: &str = "1 1 1/2 0 0/1 0 1/1 0 1/1 1 0/0 1 0";
const FILL_A: &str = "0 0 0/0 1 0/0 1 0/0 0 1/0 0 1/0 0 1";
const FILL_B: &str = "1 0 1/0 0 2/0 1 1/0 2 0/1 0 0/2 0 0";
const CROSS_ONCE: &str = "0 0 0/0 1 0/0 0 0/1 0 0/0 0 0/1 0 0";

fn essential_curves(surf: &BoundaryTriangulation, weight: u64) -> Vec<NormalCurve> {
    curves_up_to_weight(surf, weight)
        .into_iter()
        .map(|a| NormalCurve::new(surf, a).unwrap())
        .filter(|c| c.component_count() == 1 && !is_trivial(surf, c).unwrap())
        .collect()
}

#[test]
fn hempel_examples() {
    assert_eq!(hempel_upper_bound(1), 2.0);
    assert_eq!(hempel_upper_bound(8), 8.0);
    assert_eq!(hempel_upper_bound(0), 1.0);
}

#[test]
fn isotopic_pair_has_distance_zero() {
    let surf = surface("handlebody-2.tri");
    let a = curve(&surf, SHORT);
    let e = estimate_distance(&surf, &a, &a).unwrap();
    assert_eq!((e.lower, e.upper), (0, 0.0));
    // Different normal forms, isotopic through the vertex.
    let b = curve(&surf, AROUND_VERTEX);
    assert_ne!(a.arcs, b.arcs);
    let e = estimate_distance(&surf, &a, &b).unwrap();
    assert_eq!((e.lower, e.upper), (0, 0.0));
    assert_eq!(e.certificates, vec![Certificate::Isotopic]);
}

#[test]
fn disjoint_pair_has_distance_one() {
    let surf = surface("handlebody-2.tri");
    let e = estimate_distance(&surf, &curve(&surf, SHORT), &curve(&surf, DISJOINT)).unwrap();
    assert_eq!((e.lower, e.upper, e.intersection), (1, 1.0, 0));
    assert!(e.certificates.contains(&Certificate::Disjoint));
    assert!(e.warnings.is_empty());
}

#[test]
fn filling_pair_with_four_crossings() {
    let surf = surface("handlebody-2.tri");
    let (a, b) = (curve(&surf, FILL_A), curve(&surf, FILL_B));
    let e = estimate_distance(&surf, &a, &b).unwrap();
    assert_eq!(e.intersection, 4);
    assert_eq!((e.lower, e.upper, e.upper_ceiling), (3, 6.0, 6));
    assert!(e.certificates.contains(&Certificate::Filling));
    // Filling: no short essential curve misses both.
    for c in essential_curves(&surf, 8) {
        let both = intersection_in_surface(&surf, &c, &a).unwrap() + intersection_in_surface(&surf, &c, &b).unwrap();
        assert!(both > 0);
    }
}

#[test]
fn single_crossing_gives_tier_two() {
    let surf = surface("handlebody-2.tri");
    let e = estimate_distance(&surf, &curve(&surf, SHORT), &curve(&surf, CROSS_ONCE)).unwrap();
    assert_eq!((e.lower, e.upper, e.intersection), (2, 2.0, 1));
}

#[test]
fn torus_pairs_carry_a_warning() {
    let surf = surface("lst-1-2.tri");
    let curves = essential_curves(&surf, 6);
    let mut crossing = 0;
    for a in &curves {
        for b in &curves {
            let e = estimate_distance(&surf, a, b).unwrap();
            assert!(e.warnings.iter().any(|w| w == TORUS_WARNING));
            assert!(e.lower <= 2);
            if e.intersection > 0 {
                crossing += 1;
            }
        }
    }
    assert!(crossing > 0);
}

#[test]
fn trivial_input_is_rejected() {
    let surf = surface("handlebody-2.tri");
    let link = NormalCurve::new(&surf, amalgam_core::BoundaryArcVector::vertex_link(surf.triangle_count())).unwrap();
    assert!(estimate_distance(&surf, &link, &curve(&surf, SHORT)).is_err());
    assert!(diameter_upper_bound(&surf, &[]).is_err());
}

#[test]
fn diameter_examples() {
    let surf = surface("handlebody-2.tri");
    let a = curve(&surf, SHORT);
    assert_eq!(diameter_upper_bound(&surf, std::slice::from_ref(&a)).unwrap(), 0.0);
    let b = curve(&surf, DISJOINT);
    assert!(diameter_upper_bound(&surf, &[a.clone(), b.clone()]).unwrap() <= 1.0);
    let c = curve(&surf, FILL_A);
    let d = curve(&surf, FILL_B);
    let small = diameter_upper_bound(&surf, &[a.clone(), b.clone(), c.clone()]).unwrap();
    let large = diameter_upper_bound(&surf, &[a, b, c, d]).unwrap();
    assert!(small <= large);
    assert_eq!(large, 6.0);
}

#[test]
fn estimate_invariants_on_short_curves() {
    let surf = surface("handlebody-2.tri");
    let curves = essential_curves(&surf, 8);
    for (i, a) in curves.iter().enumerate() {
        for b in &curves[i..] {
            let e = estimate_distance(&surf, a, b).unwrap();
            let f = estimate_distance(&surf, b, a).unwrap();
            assert_eq!(e, f);
            assert!(e.lower as f64 <= e.upper);
            assert_eq!(e.lower == 0, e.certificates.contains(&Certificate::Isotopic));
            if e.lower >= 2 {
                assert!(e.intersection > 0);
            }
            if e.lower >= 3 {
                assert!(e.certificates.contains(&Certificate::Filling));
            }
        }
    }
}

proptest! {
    #[test]
    fn hempel_is_monotone(k in 0u64..100_000) {
        prop_assert!(hempel_upper_bound(k) <= hempel_upper_bound(k + 1));
    }
}
