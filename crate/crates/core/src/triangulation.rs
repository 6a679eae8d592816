//! Tetrahedra, face gluings, skeleton orbits and the induced boundary surface.
//!
//! Face `f` of a tetrahedron is the face opposite vertex `f`. A gluing of
//! `(t, f)` to `(t', f')` carries a permutation `p` of vertex labels with
//! `p[f] = f'`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Tetrahedron edges in the fixed order 01, 02, 03, 12, 13, 23.
pub const EDGE_VERTICES: [(u8, u8); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn edge_index(a: u8, b: u8) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("not an edge: {a}{b}"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gluing {
    Boundary,
    Glued { tet: usize, face: u8, perm: Perm },
}

/// A validated triangulation of a compact 3-manifold with nonempty boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    gluings: Vec<[Gluing; 4]>,
}

impl Triangulation {
    pub fn new(gluings: Vec<[Gluing; 4]>) -> Result<Self> {
        if gluings.is_empty() {
            return Err(Error::Invalid("no tetrahedra".into()));
        }
        let n = gluings.len();
        let mut any_boundary = false;
        for (t, faces) in gluings.iter().enumerate() {
            for f in 0..4u8 {
                match faces[f as usize] {
                    Gluing::Boundary => any_boundary = true,
                    Gluing::Glued { tet, face, perm } => {
                        if tet >= n || face > 3 || perm.apply(f) != face {
                            return Err(Error::NonInvolutive { tet: t, face: f });
                        }
                        if tet == t && face == f {
                            return Err(Error::SelfGluing { tet: t, face: f });
                        }
                        match gluings[tet][face as usize] {
                            Gluing::Glued { tet: back, face: bf, perm: bp }
                                if back == t && bf == f && bp == perm.inverse() => {}
                            _ => return Err(Error::NonInvolutive { tet: t, face: f }),
                        }
                    }
                }
            }
        }
        let tri = Triangulation { gluings };
        if tri.dual_components() != 1 {
            return Err(Error::Disconnected);
        }
        if !any_boundary {
            return Err(Error::Closed);
        }
        Ok(tri)
    }

    pub fn size(&self) -> usize {
        self.gluings.len()
    }

    pub fn gluing(&self, tet: usize, face: u8) -> Gluing {
        self.gluings[tet][face as usize]
    }

    pub fn gluings(&self) -> &[[Gluing; 4]] {
        &self.gluings
    }

    fn dual_components(&self) -> usize {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(t) = queue.pop_front() {
                for g in &self.gluings[t] {
                    if let Gluing::Glued { tet, .. } = *g {
                        if !seen[tet] {
                            seen[tet] = true;
                            queue.push_back(tet);
                        }
                    }
                }
            }
        }
        count
    }

    /// Interior face pairs `(t, f, t', f', p)` with `(t, f) < (t', f')`.
    pub fn interior_faces(&self) -> Vec<(usize, u8, usize, u8, Perm)> {
        let mut out = Vec::new();
        for t in 0..self.size() {
            for f in 0..4u8 {
                if let Gluing::Glued { tet, face, perm } = self.gluing(t, f) {
                    if (t, f) < (tet, face) {
                        out.push((t, f, tet, face, perm));
                    }
                }
            }
        }
        out
    }

    pub fn boundary_faces(&self) -> Vec<(usize, u8)> {
        let mut out = Vec::new();
        for t in 0..self.size() {
            for f in 0..4u8 {
                if self.gluing(t, f) == Gluing::Boundary {
                    out.push((t, f));
                }
            }
        }
        out
    }

    /// Relabels tetrahedron `t` as `tet_map[t]` and its vertex `v` as
    /// `vertex_maps[t][v]`.
    pub fn relabeled(&self, tet_map: &[usize], vertex_maps: &[Perm]) -> Result<Triangulation> {
        let n = self.size();
        if tet_map.len() != n || vertex_maps.len() != n {
            return Err(Error::Dimension { expected: n, found: tet_map.len().min(vertex_maps.len()) });
        }
        let mut out = vec![[Gluing::Boundary; 4]; n];
        for t in 0..n {
            let vm = vertex_maps[t];
            for f in 0..4u8 {
                let new_face = vm.apply(f);
                out[tet_map[t]][new_face as usize] = match self.gluing(t, f) {
                    Gluing::Boundary => Gluing::Boundary,
                    Gluing::Glued { tet, face, perm } => Gluing::Glued {
                        tet: tet_map[tet],
                        face: vertex_maps[tet].apply(face),
                        perm: vertex_maps[tet].compose(perm).compose(vm.inverse()),
                    },
                };
            }
        }
        Triangulation::new(out)
    }

    pub fn orbits(&self) -> SkeletonOrbits {
        compute_orbits(self)
    }

    pub fn is_one_vertex(&self) -> bool {
        is_one_vertex(self)
    }
}

/// Parses the `tri <n>` text format.
pub fn parse_triangulation(text: &str) -> Result<Triangulation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let mut head = header.split_whitespace();
    if head.next() != Some("tri") {
        return Err(Error::Parse { line: line_no, msg: "expected `tri <n>`".into() });
    }
    let n: usize = head
        .next()
        .and_then(|s| s.parse().ok())
        .filter(|&n| n > 0)
        .ok_or(Error::Parse { line: line_no, msg: "bad tetrahedron count".into() })?;
    if head.next().is_some() {
        return Err(Error::Parse { line: line_no, msg: "trailing tokens".into() });
    }
    let mut gluings = Vec::with_capacity(n);
    for _ in 0..n {
        let (line_no, line) =
            lines.next().ok_or(Error::Parse { line: line_no, msg: format!("expected {n} tetrahedron lines") })?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 4 {
            return Err(Error::Parse { line: line_no, msg: format!("expected 4 tokens, found {}", tokens.len()) });
        }
        let mut faces = [Gluing::Boundary; 4];
        for (f, tok) in tokens.iter().enumerate() {
            faces[f] =
                parse_token(tok).ok_or(Error::Parse { line: line_no, msg: format!("malformed token `{tok}`") })?;
        }
        gluings.push(faces);
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse { line: line_no, msg: "unexpected extra line".into() });
    }
    Triangulation::new(gluings)
}

fn parse_token(tok: &str) -> Option<Gluing> {
    if tok == "b" {
        return Some(Gluing::Boundary);
    }
    let mut parts = tok.split(':');
    let tet = parts.next()?.parse().ok()?;
    let face: u8 = parts.next()?.parse().ok()?;
    let p = parts.next()?.as_bytes();
    if parts.next().is_some() || p.len() != 4 || face > 3 {
        return None;
    }
    let mut images = [0u8; 4];
    for i in 0..4 {
        images[i] = p[i].checked_sub(b'0')?;
    }
    Some(Gluing::Glued { tet, face, perm: Perm::new(images)? })
}

pub fn serialize_triangulation(tri: &Triangulation) -> String {
    let mut out = format!("tri {}\n", tri.size());
    for faces in tri.gluings() {
        let tokens: Vec<String> = faces
            .iter()
            .map(|g| match g {
                Gluing::Boundary => "b".to_string(),
                Gluing::Glued { tet, face, perm } => format!("{tet}:{face}:{perm}"),
            })
            .collect();
        let _ = writeln!(out, "{}", tokens.join(" "));
    }
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.0[hi] = lo;
        }
    }
    /// Dense class ids numbered by first appearance.
    fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.0.len();
        let mut id = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut count = 0;
        for x in 0..n {
            let r = self.find(x);
            if id[r] == usize::MAX {
                id[r] = count;
                count += 1;
            }
            out[x] = id[r];
        }
        (out, count)
    }
}

/// Vertex and edge classes of a triangulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonOrbits {
    pub vertex_of: Vec<[usize; 4]>,
    pub vertex_orbits: Vec<Vec<(usize, u8)>>,
    pub vertex_boundary: Vec<bool>,
    pub edge_of: Vec<[usize; 6]>,
    pub edge_orbits: Vec<Vec<(usize, u8)>>,
    pub edge_boundary: Vec<bool>,
}

pub fn compute_orbits(tri: &Triangulation) -> SkeletonOrbits {
    let n = tri.size();
    let mut vuf = UnionFind::new(4 * n);
    let mut euf = UnionFind::new(6 * n);
    for (t, f, t2, _f2, p) in tri.interior_faces() {
        for v in 0..4u8 {
            if v != f {
                vuf.union(4 * t + v as usize, 4 * t2 + p.apply(v) as usize);
            }
        }
        for (e, &(a, b)) in EDGE_VERTICES.iter().enumerate() {
            if a != f && b != f {
                euf.union(6 * t + e, 6 * t2 + edge_index(p.apply(a), p.apply(b)));
            }
        }
    }
    let (vid, vcount) = vuf.classes();
    let (eid, ecount) = euf.classes();
    let mut vertex_of = vec![[0; 4]; n];
    let mut vertex_orbits = vec![Vec::new(); vcount];
    let mut vertex_boundary = vec![false; vcount];
    let mut edge_of = vec![[0; 6]; n];
    let mut edge_orbits = vec![Vec::new(); ecount];
    let mut edge_boundary = vec![false; ecount];
    for t in 0..n {
        for v in 0..4u8 {
            let o = vid[4 * t + v as usize];
            vertex_of[t][v as usize] = o;
            vertex_orbits[o].push((t, v));
        }
        for e in 0..6 {
            let o = eid[6 * t + e];
            edge_of[t][e] = o;
            edge_orbits[o].push((t, e as u8));
        }
    }
    for (t, f) in tri.boundary_faces() {
        for v in 0..4u8 {
            if v != f {
                vertex_boundary[vertex_of[t][v as usize]] = true;
            }
        }
        for (e, &(a, b)) in EDGE_VERTICES.iter().enumerate() {
            if a != f && b != f {
                edge_boundary[edge_of[t][e]] = true;
            }
        }
    }
    SkeletonOrbits { vertex_of, vertex_orbits, vertex_boundary, edge_of, edge_orbits, edge_boundary }
}

pub fn is_one_vertex(tri: &Triangulation) -> bool {
    let orbits = compute_orbits(tri);
    orbits.vertex_orbits.len() == 1 && orbits.vertex_boundary[0]
}

/// How side `k` of a boundary triangle is glued to its partner side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SideGluing {
    pub tri: usize,
    pub side: u8,
    /// True when the partner's low-to-high corner direction runs against ours.
    pub reversed: bool,
}

/// The triangulated boundary surface. Triangle `i` is boundary face
/// `faces[i]`; its local corners are the face's vertex labels in ascending
/// order and side `k` is opposite local corner `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryTriangulation {
    pub faces: Vec<(usize, u8)>,
    pub corners: Vec<[u8; 3]>,
    pub sides: Vec<[SideGluing; 3]>,
    /// Whether local order 0, 1, 2 is counter-clockwise in the chosen orientation.
    pub ccw: Vec<bool>,
    pub edge_of: Vec<[usize; 3]>,
    /// Each edge as its two sides, canonical side first.
    pub edges: Vec<[(usize, u8); 2]>,
    pub vertex_of: Vec<[usize; 3]>,
    pub vertex_count: usize,
}

/// Local corner indices `(lo, hi)` bounding side `k`.
#[inline]
pub fn side_corners(k: u8) -> (u8, u8) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

impl BoundaryTriangulation {
    pub fn triangle_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count() as i64 + self.triangle_count() as i64
    }

    pub fn genus(&self) -> usize {
        ((2 - self.euler_characteristic()) / 2) as usize
    }

    /// Whether side `(i, k)` runs against the canonical direction of its edge.
    pub fn side_reversed(&self, i: usize, k: u8) -> bool {
        let e = self.edge_of[i][k as usize];
        self.edges[e][0] != (i, k) && self.sides[i][k as usize].reversed
    }

    /// Local corners in counter-clockwise order.
    pub fn ccw_order(&self, i: usize) -> [u8; 3] {
        if self.ccw[i] {
            [0, 1, 2]
        } else {
            [0, 2, 1]
        }
    }
}

pub fn boundary_surface(tri: &Triangulation) -> Result<BoundaryTriangulation> {
    let faces = tri.boundary_faces();
    let m = faces.len();
    let mut index = vec![[usize::MAX; 4]; tri.size()];
    for (i, &(t, f)) in faces.iter().enumerate() {
        index[t][f as usize] = i;
    }
    let corners: Vec<[u8; 3]> = faces
        .iter()
        .map(|&(_, f)| {
            let mut c = [0u8; 3];
            let mut j = 0;
            for v in 0..4u8 {
                if v != f {
                    c[j] = v;
                    j += 1;
                }
            }
            c
        })
        .collect();
    let local = |i: usize, label: u8| corners[i].iter().position(|&c| c == label).unwrap() as u8;

    let mut sides = vec![[SideGluing { tri: 0, side: 0, reversed: false }; 3]; m];
    for i in 0..m {
        let (t0, f0) = faces[i];
        for k in 0..3u8 {
            let (lo, hi) = side_corners(k);
            let (a0, b0) = (corners[i][lo as usize], corners[i][hi as usize]);
            // Walk around the tetrahedron edge until the other boundary face.
            let (mut t, mut f, mut a, mut b) = (t0, f0, a0, b0);
            loop {
                let g = (0..4u8).find(|&x| x != a && x != b && x != f).unwrap();
                match tri.gluing(t, g) {
                    Gluing::Boundary => {
                        f = g;
                        break;
                    }
                    Gluing::Glued { tet, face, perm } => {
                        t = tet;
                        f = face;
                        a = perm.apply(a);
                        b = perm.apply(b);
                    }
                }
            }
            let j = index[t][f as usize];
            let (la, lb) = (local(j, a), local(j, b));
            let side = 3 - la - lb;
            sides[i][k as usize] = SideGluing { tri: j, side, reversed: la > lb };
        }
    }

    let mut edge_of = vec![[usize::MAX; 3]; m];
    let mut edges = Vec::new();
    for i in 0..m {
        for k in 0..3u8 {
            if edge_of[i][k as usize] == usize::MAX {
                let s = sides[i][k as usize];
                edge_of[i][k as usize] = edges.len();
                edge_of[s.tri][s.side as usize] = edges.len();
                edges.push([(i, k), (s.tri, s.side)]);
            }
        }
    }

    let mut uf = UnionFind::new(3 * m);
    for i in 0..m {
        for k in 0..3u8 {
            let s = sides[i][k as usize];
            let (lo, hi) = side_corners(k);
            let (plo, phi) = side_corners(s.side);
            let (mlo, mhi) = if s.reversed { (phi, plo) } else { (plo, phi) };
            uf.union(3 * i + lo as usize, 3 * s.tri + mlo as usize);
            uf.union(3 * i + hi as usize, 3 * s.tri + mhi as usize);
        }
    }
    let (vid, vertex_count) = uf.classes();
    let vertex_of = (0..m).map(|i| [vid[3 * i], vid[3 * i + 1], vid[3 * i + 2]]).collect();

    // Orientation: side k runs lo->hi along the boundary of the local order
    // 0,1,2 exactly when k != 1. Glued sides must be traversed oppositely.
    let dir = |k: u8| if k == 1 { -1i32 } else { 1 };
    let mut sign = vec![0i32; m];
    let mut components = 0;
    for start in 0..m {
        if sign[start] != 0 {
            continue;
        }
        components += 1;
        sign[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for k in 0..3u8 {
                let s = sides[i][k as usize];
                let r = if s.reversed { -1 } else { 1 };
                let want = -sign[i] * dir(k) * dir(s.side) * r;
                if sign[s.tri] == 0 {
                    sign[s.tri] = want;
                    queue.push_back(s.tri);
                } else if sign[s.tri] != want {
                    return Err(Error::NonOrientableBoundary);
                }
            }
        }
    }
    if components != 1 {
        return Err(Error::DisconnectedBoundary(components));
    }
    Ok(BoundaryTriangulation {
        faces,
        corners,
        sides,
        ccw: sign.iter().map(|&s| s == 1).collect(),
        edge_of,
        edges,
        vertex_of,
        vertex_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const LST: &str = "tri 2\n1:3:3120 1:2:0213 b b\n1:1:1230 1:0:3012 0:1:0213 0:0:3120\n";

    #[test]
    fn ball_has_sphere_boundary() {
        let tri = parse_triangulation("tri 1\nb b b b\n").unwrap();
        let orbits = tri.orbits();
        assert_eq!(orbits.vertex_orbits.len(), 4);
        assert_eq!(orbits.edge_orbits.len(), 6);
        assert!(orbits.vertex_boundary.iter().all(|&b| b));
        assert!(!tri.is_one_vertex());
        let s = boundary_surface(&tri).unwrap();
        assert_eq!((s.triangle_count(), s.edge_count(), s.vertex_count), (4, 6, 4));
        assert_eq!(s.genus(), 0);
    }

    #[test]
    fn layered_solid_torus() {
        let tri = parse_triangulation(LST).unwrap();
        assert!(tri.is_one_vertex());
        let s = boundary_surface(&tri).unwrap();
        assert_eq!(s.triangle_count(), 2);
        assert_eq!(s.euler_characteristic(), 0);
        assert_eq!(s.genus(), 1);
        assert_eq!(parse_triangulation(&serialize_triangulation(&tri)).unwrap(), tri);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_triangulation("tri 1\n0:1:1023 b b b\n"), Err(Error::NonInvolutive { .. })));
        assert!(matches!(parse_triangulation("tri 1\nb b b x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_triangulation("tri 1\nb b b\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_triangulation("tri 2\nb b b b\nb b b b\n"), Err(Error::Disconnected)));
        assert!(matches!(parse_triangulation("tri 1\n0:0:0123 b b b\n"), Err(Error::SelfGluing { .. })));
        assert!(matches!(parse_triangulation("tri 1\n0:1:1023 0:0:1023 0:3:0132 0:2:0132\n"), Err(Error::Closed)));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n\ntri 1 # one tetrahedron\nb b b b # all boundary\n";
        assert_eq!(parse_triangulation(text).unwrap().size(), 1);
    }
}
