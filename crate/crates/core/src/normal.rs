//! Normal and almost normal coordinates, matching equations, Euler
//! characteristic, weight, Haken sums and boundary arcs.
//!
//! Each tetrahedron carries ten coordinates: four triangles (indexed by the
//! vertex they cut off), three quadrilaterals and three octagons, both indexed
//! by the vertex pairings 01|23, 02|13, 03|12.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::triangulation::{compute_orbits, BoundaryTriangulation, SkeletonOrbits, Triangulation, EDGE_VERTICES};

pub const COORDS_PER_TET: usize = 10;

/// The three vertex pairings `{a,b} | {c,d}` with `a = 0`.
pub const PAIRINGS: [[u8; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];

/// The vertex paired with `x` in pairing `q`.
#[inline]
pub fn partner(q: usize, x: u8) -> u8 {
    let p = PAIRINGS[q];
    match p.iter().position(|&y| y == x).unwrap() {
        0 => p[1],
        1 => p[0],
        2 => p[3],
        _ => p[2],
    }
}

/// Whether pairing `q` puts `a` and `b` on opposite sides.
#[inline]
pub fn separates(q: usize, a: u8, b: u8) -> bool {
    partner(q, a) != b
}

#[inline]
pub fn tri_index(t: usize, v: u8) -> usize {
    COORDS_PER_TET * t + v as usize
}

#[inline]
pub fn quad_index(t: usize, q: usize) -> usize {
    COORDS_PER_TET * t + 4 + q
}

#[inline]
pub fn oct_index(t: usize, q: usize) -> usize {
    COORDS_PER_TET * t + 7 + q
}

/// Nonnegative integer coordinates of a (possibly almost) normal surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalVector {
    pub coords: Vec<u64>,
}

impl NormalVector {
    pub fn zero(tets: usize) -> Self {
        NormalVector { coords: vec![0; COORDS_PER_TET * tets] }
    }

    pub fn from_coords(coords: Vec<u64>) -> Result<Self> {
        if !coords.len().is_multiple_of(COORDS_PER_TET) || coords.is_empty() {
            return Err(Error::Dimension { expected: COORDS_PER_TET, found: coords.len() });
        }
        Ok(NormalVector { coords })
    }

    /// One triangle at every vertex of every tetrahedron.
    pub fn vertex_link(tets: usize) -> Self {
        let mut v = Self::zero(tets);
        for t in 0..tets {
            for c in 0..4 {
                v.coords[tri_index(t, c)] = 1;
            }
        }
        v
    }

    pub fn tets(&self) -> usize {
        self.coords.len() / COORDS_PER_TET
    }

    pub fn tri(&self, t: usize, v: u8) -> u64 {
        self.coords[tri_index(t, v)]
    }

    pub fn quad(&self, t: usize, q: usize) -> u64 {
        self.coords[quad_index(t, q)]
    }

    pub fn oct(&self, t: usize, q: usize) -> u64 {
        self.coords[oct_index(t, q)]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    pub fn octagon_count(&self) -> u64 {
        (0..self.tets()).map(|t| (0..3).map(|q| self.oct(t, q)).sum::<u64>()).sum()
    }

    /// The unique positive quad or octagon in tetrahedron `t`, as
    /// `(pairing, is_octagon, count)`, assuming admissibility.
    pub fn exceptional(&self, t: usize) -> Option<(usize, bool, u64)> {
        for q in 0..3 {
            if self.quad(t, q) > 0 {
                return Some((q, false, self.quad(t, q)));
            }
            if self.oct(t, q) > 0 {
                return Some((q, true, self.oct(t, q)));
            }
        }
        None
    }

    pub fn checked_add(&self, other: &NormalVector) -> Result<NormalVector> {
        if self.coords.len() != other.coords.len() {
            return Err(Error::Dimension { expected: self.coords.len(), found: other.coords.len() });
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.checked_add(*b).ok_or_else(|| Error::ResourceCap("coordinate overflow".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(NormalVector { coords })
    }

    pub fn scaled(&self, m: u64) -> Result<NormalVector> {
        let coords = self
            .coords
            .iter()
            .map(|a| a.checked_mul(m).ok_or_else(|| Error::ResourceCap("coordinate overflow".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(NormalVector { coords })
    }

    /// Whether `self - other` is nonnegative.
    pub fn dominates(&self, other: &NormalVector) -> bool {
        self.coords.iter().zip(&other.coords).all(|(a, b)| a >= b)
    }
}

/// Number of arcs of type `v` (cutting off vertex `v`) on face `f` of
/// tetrahedron `t`.
pub fn arc_count(x: &NormalVector, t: usize, f: u8, v: u8) -> u64 {
    debug_assert!(v != f);
    let mut n = x.tri(t, v);
    for q in 0..3 {
        if partner(q, f) == v {
            n += x.quad(t, q);
        } else {
            n += x.oct(t, q);
        }
    }
    n
}

/// Linear coefficients of [`arc_count`] as `(column, 1)` entries.
fn arc_columns(t: usize, f: u8, v: u8) -> Vec<usize> {
    let mut cols = vec![tri_index(t, v)];
    for q in 0..3 {
        if partner(q, f) == v {
            cols.push(quad_index(t, q));
        } else {
            cols.push(oct_index(t, q));
        }
    }
    cols
}

/// Number of times the tetrahedron pieces of `x` meet edge `e` of `t`.
pub fn edge_points(x: &NormalVector, t: usize, e: usize) -> u64 {
    let (a, b) = EDGE_VERTICES[e];
    let mut n = x.tri(t, a) + x.tri(t, b);
    for q in 0..3 {
        if separates(q, a, b) {
            n += x.quad(t, q) + x.oct(t, q);
        } else {
            n += 2 * x.oct(t, q);
        }
    }
    n
}

/// Sparse integer equations `Σ coeff·x[col] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingSystem {
    pub columns: usize,
    pub rows: Vec<Vec<(usize, i64)>>,
}

impl MatchingSystem {
    pub fn evaluate(&self, x: &[u64]) -> Vec<i128> {
        self.rows.iter().map(|row| row.iter().map(|&(c, k)| k as i128 * x[c] as i128).sum()).collect()
    }

    pub fn is_satisfied(&self, x: &NormalVector) -> bool {
        x.coords.len() == self.columns && self.evaluate(&x.coords).iter().all(|&r| r == 0)
    }

    /// Dense rows, for algorithms that want them.
    pub fn dense(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|row| {
                let mut d = vec![0; self.columns];
                for &(c, k) in row {
                    d[c] += k;
                }
                d
            })
            .collect()
    }
}

pub fn build_matching_system(tri: &Triangulation) -> MatchingSystem {
    let mut rows = Vec::new();
    for (t, f, t2, f2, p) in tri.interior_faces() {
        for v in 0..4u8 {
            if v == f {
                continue;
            }
            let mut row: Vec<(usize, i64)> = Vec::new();
            for c in arc_columns(t, f, v) {
                row.push((c, 1));
            }
            for c in arc_columns(t2, f2, p.apply(v)) {
                row.push((c, -1));
            }
            row.sort();
            rows.push(row);
        }
    }
    MatchingSystem { columns: COORDS_PER_TET * tri.size(), rows }
}

pub fn is_admissible(x: &NormalVector) -> bool {
    let mut octagons = 0u64;
    for t in 0..x.tets() {
        let positive = (0..3).filter(|&q| x.quad(t, q) > 0).count() + (0..3).filter(|&q| x.oct(t, q) > 0).count();
        if positive > 1 {
            return false;
        }
        octagons += (0..3).map(|q| x.oct(t, q)).sum::<u64>();
    }
    octagons <= 1
}

fn check_surface(tri: &Triangulation, sys: &MatchingSystem, x: &NormalVector) -> Result<()> {
    if x.tets() != tri.size() {
        return Err(Error::Dimension { expected: COORDS_PER_TET * tri.size(), found: x.coords.len() });
    }
    if !is_admissible(x) {
        return Err(Error::NotSurface("inadmissible vector".into()));
    }
    if !sys.is_satisfied(x) {
        return Err(Error::NotSurface("matching equations fail".into()));
    }
    Ok(())
}

/// Precomputed data for surface computations on one triangulation.
#[derive(Clone, Debug)]
pub struct SurfaceContext {
    pub tri: Triangulation,
    pub system: MatchingSystem,
    pub orbits: SkeletonOrbits,
    pub boundary_faces: Vec<(usize, u8)>,
}

impl SurfaceContext {
    pub fn new(tri: &Triangulation) -> Self {
        SurfaceContext {
            tri: tri.clone(),
            system: build_matching_system(tri),
            orbits: compute_orbits(tri),
            boundary_faces: tri.boundary_faces(),
        }
    }

    pub fn check(&self, x: &NormalVector) -> Result<()> {
        check_surface(&self.tri, &self.system, x)
    }

    pub fn is_surface(&self, x: &NormalVector) -> bool {
        self.check(x).is_ok()
    }

    pub fn euler_characteristic(&self, x: &NormalVector) -> Result<i64> {
        self.check(x)?;
        let faces: u64 = x.coords.iter().sum();
        let mut arcs = 0u64;
        for t in 0..x.tets() {
            for v in 0..4u8 {
                arcs += 3 * x.tri(t, v);
            }
            for q in 0..3 {
                arcs += 4 * x.quad(t, q) + 8 * x.oct(t, q);
            }
        }
        let mut boundary_arcs = 0u64;
        for &(t, f) in &self.boundary_faces {
            for v in 0..4u8 {
                if v != f {
                    boundary_arcs += arc_count(x, t, f, v);
                }
            }
        }
        let edges = (arcs + boundary_arcs) / 2;
        let vertices = self.weight_unchecked(x);
        Ok(vertices as i64 - edges as i64 + faces as i64)
    }

    fn weight_unchecked(&self, x: &NormalVector) -> u64 {
        self.orbits
            .edge_orbits
            .iter()
            .map(|orbit| {
                let (t, e) = orbit[0];
                edge_points(x, t, e as usize)
            })
            .sum()
    }

    pub fn weight(&self, x: &NormalVector) -> Result<u64> {
        self.check(x)?;
        Ok(self.weight_unchecked(x))
    }

    pub fn haken_sum(&self, x: &NormalVector, y: &NormalVector) -> Result<NormalVector> {
        let s = x.checked_add(y)?;
        if !is_admissible(&s) {
            return Err(Error::Incompatible("sum has conflicting quad or octagon types".into()));
        }
        Ok(s)
    }

    /// Arc counts on each boundary triangle, in the order of
    /// [`Triangulation::boundary_faces`], indexed by local corner.
    pub fn boundary_arcs(&self, x: &NormalVector) -> BoundaryArcVector {
        let counts = self
            .boundary_faces
            .iter()
            .map(|&(t, f)| {
                let mut c = [0u64; 3];
                let mut j = 0;
                for v in 0..4u8 {
                    if v != f {
                        c[j] = arc_count(x, t, f, v);
                        j += 1;
                    }
                }
                c
            })
            .collect();
        BoundaryArcVector { counts }
    }

    /// Splits a surface into its connected components via the piece graph.
    pub fn split_components(&self, x: &NormalVector) -> Result<Vec<NormalVector>> {
        self.check(x)?;
        Ok(PieceGraph::new(&self.tri, x).components())
    }
}

/// Pieces of a surface vector and their adjacency across interior faces.
struct PieceGraph<'a> {
    x: &'a NormalVector,
    /// First piece id in each tetrahedron: triangles by vertex, then copies
    /// of the exceptional piece.
    base: Vec<[usize; 5]>,
    parent: Vec<usize>,
    piece_coord: Vec<usize>,
}

impl<'a> PieceGraph<'a> {
    fn new(tri: &Triangulation, x: &'a NormalVector) -> Self {
        let n = x.tets();
        let mut base = vec![[0usize; 5]; n];
        let mut piece_coord = Vec::new();
        for t in 0..n {
            for v in 0..4u8 {
                base[t][v as usize] = piece_coord.len();
                for _ in 0..x.tri(t, v) {
                    piece_coord.push(tri_index(t, v));
                }
            }
            base[t][4] = piece_coord.len();
            if let Some((q, oct, count)) = x.exceptional(t) {
                let col = if oct { oct_index(t, q) } else { quad_index(t, q) };
                for _ in 0..count {
                    piece_coord.push(col);
                }
            }
        }
        let parent = (0..piece_coord.len()).collect();
        let mut g = PieceGraph { x, base, parent, piece_coord };
        for (t, f, t2, f2, p) in tri.interior_faces() {
            for v in 0..4u8 {
                if v == f {
                    continue;
                }
                for i in 0..arc_count(x, t, f, v) {
                    let a = g.arc_piece(t, f, v, i);
                    let b = g.arc_piece(t2, f2, p.apply(v), i);
                    g.union(a, b);
                }
            }
        }
        g
    }

    /// The piece owning arc `i` (counted from vertex `v`) of type `v` on face `f`.
    fn arc_piece(&self, t: usize, _f: u8, v: u8, i: u64) -> usize {
        let tris = self.x.tri(t, v);
        if i < tris {
            return self.base[t][v as usize] + i as usize;
        }
        let j = i - tris;
        let (q, oct, count) = self.x.exceptional(t).expect("arc without piece");
        let copy = if oct {
            0
        } else {
            // Copies are stacked from the side of the pair containing vertex 0.
            let same_side_as_zero = v == 0 || partner(q, 0) == v;
            if same_side_as_zero {
                j
            } else {
                count - 1 - j
            }
        };
        self.base[t][4] + copy as usize
    }

    fn find(&mut self, a: usize) -> usize {
        let mut r = a;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = a;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi] = lo;
        }
    }

    fn components(mut self) -> Vec<NormalVector> {
        let mut out: Vec<NormalVector> = Vec::new();
        let mut slot = vec![usize::MAX; self.piece_coord.len()];
        for p in 0..self.piece_coord.len() {
            let r = self.find(p);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(NormalVector::zero(self.x.tets()));
            }
            out[slot[r]].coords[self.piece_coord[p]] += 1;
        }
        out
    }
}

pub fn euler_characteristic(tri: &Triangulation, x: &NormalVector) -> Result<i64> {
    SurfaceContext::new(tri).euler_characteristic(x)
}

pub fn weight(tri: &Triangulation, x: &NormalVector) -> Result<u64> {
    SurfaceContext::new(tri).weight(x)
}

pub fn haken_sum(x: &NormalVector, y: &NormalVector) -> Result<NormalVector> {
    let s = x.checked_add(y)?;
    if !is_admissible(&s) {
        return Err(Error::Incompatible("sum has conflicting quad or octagon types".into()));
    }
    Ok(s)
}

pub fn boundary_arcs(tri: &Triangulation, x: &NormalVector) -> BoundaryArcVector {
    SurfaceContext::new(tri).boundary_arcs(x)
}

/// Arc counts per boundary triangle, indexed by the local corner cut off.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundaryArcVector {
    pub counts: Vec<[u64; 3]>,
}

impl BoundaryArcVector {
    pub fn zero(triangles: usize) -> Self {
        BoundaryArcVector { counts: vec![[0; 3]; triangles] }
    }

    /// One arc of every type: the link of the boundary vertex when the
    /// surface has one vertex.
    pub fn vertex_link(triangles: usize) -> Self {
        BoundaryArcVector { counts: vec![[1; 3]; triangles] }
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|c| c.iter().all(|&x| x == 0))
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|c| c.iter().sum::<u64>()).sum()
    }

    pub fn checked_add(&self, other: &BoundaryArcVector) -> Result<BoundaryArcVector> {
        if self.counts.len() != other.counts.len() {
            return Err(Error::Dimension { expected: self.counts.len(), found: other.counts.len() });
        }
        let mut counts = self.counts.clone();
        for (c, o) in counts.iter_mut().zip(&other.counts) {
            for j in 0..3 {
                c[j] = c[j].checked_add(o[j]).ok_or_else(|| Error::ResourceCap("coordinate overflow".into()))?;
            }
        }
        Ok(BoundaryArcVector { counts })
    }

    pub fn scaled(&self, m: u64) -> Result<BoundaryArcVector> {
        let mut counts = self.counts.clone();
        for c in counts.iter_mut() {
            for x in c.iter_mut() {
                *x = x.checked_mul(m).ok_or_else(|| Error::ResourceCap("coordinate overflow".into()))?;
            }
        }
        Ok(BoundaryArcVector { counts })
    }

    /// Number of curve points on side `k` of triangle `i`.
    pub fn side_points(&self, i: usize, k: u8) -> u64 {
        let c = self.counts[i];
        c.iter().enumerate().filter(|&(j, _)| j != k as usize).map(|(_, &x)| x).sum()
    }

    /// Checks that glued sides carry equal point counts.
    pub fn check_matching(&self, surf: &BoundaryTriangulation) -> Result<()> {
        if self.counts.len() != surf.triangle_count() {
            return Err(Error::Dimension { expected: surf.triangle_count(), found: self.counts.len() });
        }
        for (e, sides) in surf.edges.iter().enumerate() {
            let [(i, k), (j, l)] = *sides;
            if self.side_points(i, k) != self.side_points(j, l) {
                return Err(Error::EdgeMismatch(e));
            }
        }
        Ok(())
    }

    /// Intersections with the edges of the boundary triangulation.
    pub fn weight(&self, surf: &BoundaryTriangulation) -> u64 {
        surf.edges.iter().map(|s| self.side_points(s[0].0, s[0].1)).sum()
    }
}

pub fn parse_normal_vector(text: &str) -> Result<NormalVector> {
    let rows = parse_rows(text, "nv", COORDS_PER_TET)?;
    NormalVector::from_coords(rows.into_iter().flatten().collect())
}

/// Parses every `nv` block in a file (as written by `enumerate`).
pub fn parse_normal_vectors(text: &str) -> Result<Vec<NormalVector>> {
    let mut out = Vec::new();
    let mut block = String::new();
    for line in text.lines() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.starts_with("nv") && !block.trim().is_empty() {
            out.push(parse_normal_vector(&block)?);
            block.clear();
        }
        block.push_str(line);
        block.push('\n');
    }
    if block.lines().any(|l| !l.split('#').next().unwrap_or("").trim().is_empty()) {
        out.push(parse_normal_vector(&block)?);
    }
    Ok(out)
}

pub fn serialize_normal_vector(x: &NormalVector) -> String {
    let mut out = format!("nv {}\n", x.tets());
    for t in 0..x.tets() {
        let row: Vec<String> =
            x.coords[COORDS_PER_TET * t..COORDS_PER_TET * (t + 1)].iter().map(u64::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn parse_arc_vector(text: &str) -> Result<BoundaryArcVector> {
    let rows = parse_rows(text, "nc", 3)?;
    Ok(BoundaryArcVector { counts: rows.into_iter().map(|r| [r[0], r[1], r[2]]).collect() })
}

/// Parses every `nc` block in a file.
pub fn parse_arc_vectors(text: &str) -> Result<Vec<BoundaryArcVector>> {
    let mut out = Vec::new();
    let mut block = String::new();
    for line in text.lines() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.starts_with("nc") && !block.trim().is_empty() {
            out.push(parse_arc_vector(&block)?);
            block.clear();
        }
        block.push_str(line);
        block.push('\n');
    }
    if block.lines().any(|l| !l.split('#').next().unwrap_or("").trim().is_empty()) {
        out.push(parse_arc_vector(&block)?);
    }
    Ok(out)
}

pub fn serialize_arc_vector(a: &BoundaryArcVector) -> String {
    let mut out = format!("nc {}\n", a.counts.len());
    for c in &a.counts {
        let _ = writeln!(out, "{} {} {}", c[0], c[1], c[2]);
    }
    out
}

fn parse_rows(text: &str, tag: &str, width: usize) -> Result<Vec<Vec<u64>>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let mut head = header.split_whitespace();
    if head.next() != Some(tag) {
        return Err(Error::Parse { line: line_no, msg: format!("expected `{tag} <n>`") });
    }
    let n: usize =
        head.next().and_then(|s| s.parse().ok()).ok_or(Error::Parse { line: line_no, msg: "bad row count".into() })?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (line_no, line) = lines.next().ok_or(Error::Parse { line: line_no, msg: format!("expected {n} rows") })?;
        let row = line
            .split_whitespace()
            .map(|s| s.parse::<u64>().map_err(|_| Error::Parse { line: line_no, msg: format!("bad integer `{s}`") }))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != width {
            return Err(Error::Parse { line: line_no, msg: format!("expected {width} integers, found {}", row.len()) });
        }
        rows.push(row);
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse { line: line_no, msg: "unexpected extra line".into() });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::parse_triangulation;

    fn lst() -> Triangulation {
        parse_triangulation("tri 2\n1:3:3120 1:2:0213 b b\n1:1:1230 1:0:3012 0:1:0213 0:0:3120\n").unwrap()
    }

    #[test]
    fn pairings() {
        assert_eq!(partner(0, 0), 1);
        assert_eq!(partner(1, 3), 1);
        assert_eq!(partner(2, 2), 1);
        assert!(separates(0, 0, 2));
        assert!(!separates(2, 0, 3));
    }

    #[test]
    fn vertex_link_basics() {
        let tri = lst();
        let ctx = SurfaceContext::new(&tri);
        assert_eq!(ctx.system.rows.len(), 3 * tri.interior_faces().len());
        let link = NormalVector::vertex_link(2);
        assert!(ctx.is_surface(&link));
        assert_eq!(ctx.euler_characteristic(&link).unwrap(), 1);
        assert_eq!(ctx.euler_characteristic(&NormalVector::zero(2)).unwrap(), 0);
        assert_eq!(ctx.boundary_arcs(&link), BoundaryArcVector::vertex_link(2));
        assert_eq!(ctx.split_components(&link).unwrap().len(), 1);
    }

    #[test]
    fn admissibility() {
        let mut x = NormalVector::zero(2);
        x.coords[quad_index(0, 0)] = 1;
        assert!(is_admissible(&x));
        x.coords[quad_index(0, 1)] = 1;
        assert!(!is_admissible(&x));
        let mut y = NormalVector::zero(2);
        y.coords[oct_index(0, 0)] = 1;
        y.coords[oct_index(1, 2)] = 1;
        assert!(!is_admissible(&y));
    }

    #[test]
    fn text_round_trip() {
        let x = NormalVector::vertex_link(2);
        assert_eq!(parse_normal_vector(&serialize_normal_vector(&x)).unwrap(), x);
        let a = BoundaryArcVector::vertex_link(2);
        assert_eq!(parse_arc_vector(&serialize_arc_vector(&a)).unwrap(), a);
        assert!(parse_normal_vector("nv 1\n1 2 3\n").is_err());
    }
}
