//! Independent reference computations used by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use amalgam_core::curves::{NormalCurve, Overlay};
use amalgam_core::triangulation::{boundary_surface, parse_triangulation, BoundaryTriangulation, Triangulation};
use amalgam_core::BoundaryArcVector;

pub fn fixture_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn fixture(name: &str) -> Triangulation {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture file");
    parse_triangulation(&text).expect("fixture parses")
}

pub fn surface(name: &str) -> BoundaryTriangulation {
    boundary_surface(&fixture(name)).expect("boundary surface")
}

/// Every nonzero arc vector satisfying the edge matching with at most
/// `max_weight` edge intersections.
pub fn curves_up_to_weight(surf: &BoundaryTriangulation, max_weight: u64) -> Vec<BoundaryArcVector> {
    let m = surf.triangle_count();
    let mut out = Vec::new();
    let mut counts = vec![[0u64; 3]; m];
    fn rec(
        surf: &BoundaryTriangulation,
        slot: usize,
        left: u64,
        counts: &mut Vec<[u64; 3]>,
        out: &mut Vec<BoundaryArcVector>,
        max_weight: u64,
    ) {
        if slot == counts.len() * 3 {
            let v = BoundaryArcVector { counts: counts.clone() };
            if !v.is_zero() && v.check_matching(surf).is_ok() && v.weight(surf) <= max_weight {
                out.push(v);
            }
            return;
        }
        for x in 0..=left {
            counts[slot / 3][slot % 3] = x;
            rec(surf, slot + 1, left - x, counts, out, max_weight);
        }
        counts[slot / 3][slot % 3] = 0;
    }
    // Every arc meets two edge points and every edge point two arc ends.
    rec(surf, 0, max_weight, &mut counts, &mut out, max_weight);
    out
}

/// Points of a curve on each edge of the surface.
pub fn edge_weights(surf: &BoundaryTriangulation, arcs: &BoundaryArcVector) -> Vec<i64> {
    surf.edges.iter().map(|s| arcs.side_points(s[0].0, s[0].1) as i64).collect()
}

/// Intersection number in the once-punctured torus from edge weights.
///
/// The three edges of a one-vertex torus are closed curves, any two a
/// basis and the third their sum or difference. A curve's intersections
/// with the first two edges give its coordinates up to one global sign
/// convention, fixed by the third weight. Vertex-linking components meet
/// every edge twice and are removed first.
pub fn torus_intersection(surf: &BoundaryTriangulation, c1: &NormalCurve, c2: &NormalCurve) -> i64 {
    assert_eq!(surf.edge_count(), 3);
    let coords = |c: &NormalCurve| -> (i64, i64) {
        let links = c
            .components
            .iter()
            .filter(|comp| comp.arcs(surf.triangle_count()).counts.iter().all(|x| *x == [1, 1, 1]))
            .count() as i64;
        let w: Vec<i64> = edge_weights(surf, &c.arcs).iter().map(|x| x - 2 * links).collect();
        let (a, b) = (w[0], w[1]);
        if a > 0 && b > 0 && w[2] == a + b {
            (a, b)
        } else {
            (a, -b)
        }
    };
    let (a1, b1) = coords(c1);
    let (a2, b2) = coords(c2);
    (a1 * b2 - a2 * b1).abs()
}

/// Minimum crossing count over every sequence of trivial bigon removals.
pub fn exhaustive_bigon_reduction(surf: &BoundaryTriangulation, c1: &NormalCurve, c2: &NormalCurve) -> usize {
    let start = Overlay::new(surf, vec![c1.clone(), c2.clone()]);
    let mut seen: HashSet<Vec<Vec<u8>>> = HashSet::new();
    let mut stack = vec![start];
    let mut best = usize::MAX;
    while let Some(ov) = stack.pop() {
        if !seen.insert(ov.shuffle().to_vec()) {
            continue;
        }
        let arr = ov.arrange();
        let bigons = ov.trivial_bigons(&arr);
        if bigons.is_empty() {
            best = best.min(arr.crossing_count());
            continue;
        }
        for b in &bigons {
            let mut next = ov.clone();
            next.apply(b);
            stack.push(next);
        }
    }
    best
}

/// Admissible solutions with every coordinate at most `bound`, reduced to
/// those not dominating another nonzero admissible solution. Works directly
/// on the matching equations by depth-first search with row checks.
pub fn bounded_minimal_solutions(tri: &Triangulation, bound: u64) -> Vec<amalgam_core::NormalVector> {
    use amalgam_core::normal::{build_matching_system, is_admissible, oct_index, quad_index, tri_index};
    let sys = build_matching_system(tri);
    let n = tri.size();
    let mut found: HashSet<Vec<u64>> = HashSet::new();
    // 0 = no exceptional piece, 1..=3 quads, 4..=6 octagons.
    let mut pattern = vec![0usize; n];
    loop {
        if pattern.iter().filter(|&&p| p >= 4).count() <= 1 {
            let mut vars = Vec::new();
            for (t, &p) in pattern.iter().enumerate() {
                for v in 0..4u8 {
                    vars.push(tri_index(t, v));
                }
                match p {
                    0 => {}
                    1..=3 => vars.push(quad_index(t, p - 1)),
                    _ => vars.push(oct_index(t, p - 4)),
                }
            }
            let position: std::collections::HashMap<usize, usize> =
                vars.iter().enumerate().map(|(i, &c)| (c, i)).collect();
            // Rows checked once their last variable is set; rows touching a
            // forbidden column need that column's terms dropped (zero).
            let mut rows_at: Vec<Vec<usize>> = vec![Vec::new(); vars.len()];
            for (r, row) in sys.rows.iter().enumerate() {
                let last = row.iter().filter_map(|(c, _)| position.get(c)).max();
                if let Some(&l) = last {
                    rows_at[l].push(r);
                }
            }
            let mut x = vec![0u64; sys.columns];
            dfs(0, &vars, &rows_at, &sys, bound, &mut x, &mut found);
        }
        let mut i = 0;
        while i < n {
            pattern[i] += 1;
            if pattern[i] < 7 {
                break;
            }
            pattern[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    fn dfs(
        i: usize,
        vars: &[usize],
        rows_at: &[Vec<usize>],
        sys: &amalgam_core::MatchingSystem,
        bound: u64,
        x: &mut Vec<u64>,
        found: &mut HashSet<Vec<u64>>,
    ) {
        if i == vars.len() {
            if x.iter().any(|&c| c > 0) {
                found.insert(x.clone());
            }
            return;
        }
        let is_oct = (vars[i] % 10) >= 7;
        let top = if is_oct { bound.min(1) } else { bound };
        for val in 0..=top {
            x[vars[i]] = val;
            let ok = rows_at[i].iter().all(|&r| sys.rows[r].iter().map(|&(c, k)| k * x[c] as i64).sum::<i64>() == 0);
            if ok {
                dfs(i + 1, vars, rows_at, sys, bound, x, found);
            }
        }
        x[vars[i]] = 0;
    }
    let all: Vec<Vec<u64>> =
        found.into_iter().filter(|v| is_admissible(&amalgam_core::NormalVector { coords: v.clone() })).collect();
    let mut out: Vec<Vec<u64>> = all
        .iter()
        .filter(|x| !all.iter().any(|y| y != *x && y.iter().zip(x.iter()).all(|(a, b)| a <= b)))
        .cloned()
        .collect();
    out.sort();
    out.into_iter().map(|coords| amalgam_core::NormalVector { coords }).collect()
}

/// Points where the pieces of tetrahedron `t` meet the edge `{a, b}`,
/// counted from the piece shapes: a triangle meets the three edges at its
/// vertex, a quad the four edges joining its two vertex pairs, an octagon
/// those four once and the two edges inside its pairs twice.
fn oracle_edge_points(x: &amalgam_core::NormalVector, t: usize, a: u8, b: u8) -> u64 {
    let c = &x.coords[10 * t..10 * t + 10];
    let mut n = c[a as usize] + c[b as usize];
    let pairs: [[[u8; 2]; 2]; 3] = [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]];
    for (q, [p, r]) in pairs.iter().enumerate() {
        let inside = (p.contains(&a) && p.contains(&b)) || (r.contains(&a) && r.contains(&b));
        if inside {
            n += 2 * c[7 + q];
        } else {
            n += c[4 + q] + c[7 + q];
        }
    }
    n
}

/// Normal arcs around corner `v` of face `f`, recovered from the points
/// on the three edges of the face.
fn oracle_corner_arcs(x: &amalgam_core::NormalVector, t: usize, f: u8, v: u8) -> i64 {
    let others: Vec<u8> = (0..4).filter(|&u| u != f && u != v).collect();
    let (a, b) = (others[0], others[1]);
    let twice = oracle_edge_points(x, t, v, a) as i64 + oracle_edge_points(x, t, v, b) as i64
        - oracle_edge_points(x, t, a, b) as i64;
    twice / 2
}

/// Whether arc counts agree across every interior face, computed from
/// gluing permutations and edge points only.
pub fn matching_by_edges(tri: &Triangulation, x: &amalgam_core::NormalVector) -> bool {
    use amalgam_core::triangulation::Gluing;
    for t in 0..tri.size() {
        for f in 0..4u8 {
            if let Gluing::Glued { tet, face, perm } = tri.gluing(t, f) {
                debug_assert_eq!(perm.apply(f), face);
                for v in (0..4).filter(|&v| v != f) {
                    if oracle_corner_arcs(x, t, f, v) != oracle_corner_arcs(x, tet, face, perm.apply(v)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
