mod common;

use amalgam_core::curves::{
    component_triviality, geometric_intersection, intersection_in_surface, intersection_profile, is_trivial, isotopic,
    neighborhood_pattern, sign_sequences, spiral_counts_all, stabilization_threshold, twist_sum, NormalCurve,
};
use amalgam_core::hilbert::{fundamental_solutions, Classification, EnumOptions};
use amalgam_core::normal::{is_admissible, SurfaceContext};
use amalgam_core::{BoundaryArcVector, BoundaryTriangulation};
use common::oracles::{curves_up_to_weight, exhaustive_bigon_reduction, fixture, surface, torus_intersection};

struct Pair {
    fixture: &'static str,
    s: NormalCurve,
    a: NormalCurve,
}

/// Boundaries of fundamental solutions paired with boundaries of
/// fundamental annuli whose sum with them is admissible.
fn compatible_annulus_pairs(name: &'static str) -> (BoundaryTriangulation, Vec<Pair>) {
    let tri = fixture(name);
    let surf = surface(name);
    let ctx = SurfaceContext::new(&tri);
    let set = fundamental_solutions(&tri, &EnumOptions::default()).unwrap();
    let annuli: Vec<_> = set.of_class(Classification::Annulus).collect();
    let mut out = Vec::new();
    for s in &set.solutions {
        let arcs = ctx.boundary_arcs(&s.vector);
        if arcs.is_zero() {
            continue;
        }
        for a in &annuli {
            if !is_admissible(&s.vector.checked_add(&a.vector).unwrap()) {
                continue;
            }
            out.push(Pair {
                fixture: name,
                s: NormalCurve::new(&surf, arcs.clone()).unwrap(),
                a: NormalCurve::new(&surf, ctx.boundary_arcs(&a.vector)).unwrap(),
            });
        }
    }
    (surf, out)
}

#[test]
fn spiral_counts_are_conserved() {
    let mut total = 0;
    let mut crossing = 0;
    for name in ["lst-1-2.tri", "lst-1-3.tri", "lst-2-3.tri", "lst-1-4.tri", "trefoil.tri", "handlebody-2.tri"] {
        let (surf, pairs) = compatible_annulus_pairs(name);
        for p in &pairs {
            assert_eq!(p.a.component_count(), 2, "{}", p.fixture);
            let c = spiral_counts_all(&surf, &p.s, &p.a).unwrap();
            assert_eq!(c[0].positive + c[1].positive, c[0].negative + c[1].negative, "{}", p.fixture);
            if c.iter().any(|x| x.positive + x.negative > 0) {
                crossing += 1;
            }
        }
        total += pairs.len();
    }
    assert!(total > 600);
    assert!(crossing > 300);
}

fn probes(surf: &BoundaryTriangulation, curves: &[&NormalCurve]) -> Vec<NormalCurve> {
    let mut out = vec![NormalCurve::new(surf, BoundaryArcVector::vertex_link(surf.triangle_count())).unwrap()];
    for c in curves {
        for (i, t) in component_triviality(surf, c).unwrap().into_iter().enumerate() {
            if !t {
                out.push(c.component_curve(surf, i).unwrap());
            }
        }
    }
    out
}

#[test]
fn twisting_stabilizes_along_parallel_annulus_boundaries() {
    let (surf, pairs) = compatible_annulus_pairs("handlebody-2.tri");
    let (mut stable, mut nonparallel) = (0, 0);
    for p in &pairs {
        let counts = spiral_counts_all(&surf, &p.s, &p.a).unwrap();
        if counts[0].positive == counts[0].negative {
            continue;
        }
        let threshold = stabilization_threshold(&counts);
        // Neighborhood of each boundary component after enough copies.
        for (signs, c) in sign_sequences(&surf, &p.s, &p.a).unwrap().iter().zip(&counts) {
            let pattern = neighborhood_pattern(signs, threshold.max(1));
            assert_eq!(pattern.spirals, c.positive.abs_diff(c.negative));
            assert_eq!(pattern.parallel, 2 * c.positive.min(c.negative));
        }
        let (a1, a2) = (p.a.component_curve(&surf, 0).unwrap(), p.a.component_curve(&surf, 1).unwrap());
        if !isotopic(&surf, &a1, &a2).unwrap() {
            nonparallel += 1;
            continue;
        }
        let probes = probes(&surf, &[&p.s, &p.a]);
        let first =
            intersection_profile(&surf, &twist_sum(&surf, &p.s, &p.a, threshold, &probes).unwrap().curve, &probes)
                .unwrap();
        for m in threshold..=threshold + 5 {
            let r = twist_sum(&surf, &p.s, &p.a, m, &probes).unwrap();
            assert_eq!(r.threshold, threshold);
            assert_eq!(r.profile, first, "m = {m}");
            assert!(r.stable);
        }
        stable += 1;
    }
    assert!(stable > 100);
    // Annuli that are not boundary-parallel twist without bound; they are
    // reported by the curve set builder.
    assert!(nonparallel > 0);
}

#[test]
fn equal_spiral_counts_leave_a_parallel_component() {
    let (surf, pairs) = compatible_annulus_pairs("handlebody-2.tri");
    let mut seen = 0;
    for p in pairs.iter().filter(|p| {
        let c = spiral_counts_all(&surf, &p.s, &p.a).unwrap();
        c[0].positive == c[0].negative && c[0].positive > 0
    }) {
        let a1 = p.a.component_curve(&surf, 0).unwrap();
        let r = twist_sum(&surf, &p.s, &p.a, 3, &[]).unwrap();
        let parallel = (0..r.curve.component_count()).any(|i| {
            let part = r.curve.component_curve(&surf, i).unwrap();
            !is_trivial(&surf, &part).unwrap() && intersection_in_surface(&surf, &part, &a1).unwrap() == 0
        });
        assert!(parallel);
        seen += 1;
    }
    assert!(seen > 0);
}

#[test]
fn torus_intersection_matches_bigon_oracle() {
    let surf = surface("lst-1-2.tri");
    let curves: Vec<NormalCurve> =
        curves_up_to_weight(&surf, 8).into_iter().map(|a| NormalCurve::new(&surf, a).unwrap()).collect();
    assert!(curves.len() > 20);
    for (i, a) in curves.iter().enumerate() {
        for b in &curves[i..] {
            let g = geometric_intersection(&surf, a, b).unwrap();
            assert_eq!(g, exhaustive_bigon_reduction(&surf, a, b));
            assert_eq!(g, geometric_intersection(&surf, b, a).unwrap());
            assert_eq!(intersection_in_surface(&surf, a, b).unwrap() as i64, torus_intersection(&surf, a, b));
        }
    }
}

#[test]
fn self_intersection_is_zero_and_links_are_trivial() {
    let surf = surface("handlebody-2.tri");
    for arcs in curves_up_to_weight(&surf, 8) {
        let c = NormalCurve::new(&surf, arcs).unwrap();
        assert_eq!(geometric_intersection(&surf, &c, &c).unwrap(), 0);
    }
    let link = BoundaryArcVector::vertex_link(6);
    for m in 1..=3 {
        let c = NormalCurve::new(&surf, link.scaled(m).unwrap()).unwrap();
        assert_eq!(c.component_count(), m as usize);
        assert!(component_triviality(&surf, &c).unwrap().iter().all(|&t| t));
    }
}
