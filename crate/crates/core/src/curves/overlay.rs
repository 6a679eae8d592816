//! Two normal curves in normal position, and the planar map they cut the
//! boundary surface into.
//!
//! Each curve has its own canonical point order along every edge; an
//! overlay adds a shuffle saying how the two orders interleave. Chords of
//! different curves inside a triangle cross exactly when their endpoints
//! interleave around the triangle. Removing a bigon that avoids the vertex
//! is a normal isotopy, realised by swapping adjacent points of the two
//! curves on every edge segment inside the bigon.

use std::collections::HashSet;

use super::{side_position, NormalCurve};
use crate::triangulation::{side_corners, BoundaryTriangulation};

const NONE: usize = usize::MAX;

/// Entry side, component and step of one arc.
type ArcSlot = (u8, u8, usize, usize);

#[derive(Clone, Debug)]
pub struct Overlay<'s> {
    surf: &'s BoundaryTriangulation,
    curves: Vec<NormalCurve>,
    /// Per edge, the curve owning each point in canonical direction.
    shuffle: Vec<Vec<u8>>,
}

/// A bigon avoiding the vertex, given by the edge positions to swap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bigon {
    pub region: usize,
    pub crossings: [usize; 2],
    /// `(edge, p)`: swap canonical positions `p` and `p + 1`.
    pub swaps: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Site {
    Corner(u8),
    Point { side: u8, q: usize },
}

#[derive(Clone, Debug)]
pub struct Chord {
    pub tri: usize,
    pub curve: u8,
    pub comp: usize,
    /// Position of the arc within its component.
    pub step: usize,
    pub corner: u8,
    pub entry: u8,
    pub exit: u8,
    /// Circular positions of the entry and exit points.
    pub start: usize,
    pub end: usize,
    /// Crossings in order from `start`.
    pub crossings: Vec<usize>,
    /// First dart id of each segment (forward = even, backward = odd).
    pub segments: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Crossing {
    pub tri: usize,
    /// Chords of curve 0 and curve 1.
    pub chords: [usize; 2],
    /// Outgoing darts in counter-clockwise order: first curve forward,
    /// second curve toward the left, first curve backward, second curve
    /// toward the right.
    pub darts: [usize; 4],
    /// Whether the resolution that keeps the sum normal turns right when
    /// travelling along the first curve.
    pub positive: bool,
}

#[derive(Clone, Debug, Default)]
pub struct FaceInfo {
    pub outer: bool,
    pub surface_vertices: Vec<usize>,
    pub segments: Vec<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct RegionInfo {
    pub chi: i64,
    pub surface_vertices: usize,
    pub faces: Vec<usize>,
    pub segments: Vec<usize>,
}

/// The planar map of an overlay.
#[derive(Clone, Debug)]
pub struct Arrangement {
    pub origin: Vec<usize>,
    pub sigma: Vec<usize>,
    /// Chord of each dart, or `NONE` for triangle boundary darts.
    pub dart_chord: Vec<usize>,
    pub face_of: Vec<usize>,
    pub faces: Vec<FaceInfo>,
    pub chords: Vec<Chord>,
    pub crossings: Vec<Crossing>,
    /// Crossing id of each vertex, or `NONE` for boundary sites.
    pub vertex_crossing: Vec<usize>,
    /// For a boundary point vertex: the chord dart leaving it.
    pub inward: Vec<usize>,
    /// For a boundary point vertex: the matching vertex across the edge.
    pub across: Vec<usize>,
    pub region_of_face: Vec<usize>,
    pub regions: Vec<RegionInfo>,
    /// `(edge, canonical segment index)` of each segment id.
    pub segment_site: Vec<(usize, usize)>,
    pub curve_count: usize,
}

impl Arrangement {
    #[inline]
    pub fn twin(d: usize) -> usize {
        d ^ 1
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn region_of_dart(&self, d: usize) -> usize {
        self.region_of_face[self.face_of[d]]
    }

    /// Whether chord dart `d` runs along the chord's traversal direction.
    pub fn dart_forward(&self, d: usize) -> bool {
        d.is_multiple_of(2)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let n = self.0[y];
            self.0[y] = r;
            y = n;
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
}

impl<'s> Overlay<'s> {
    /// Canonical overlay: on every edge, the points of the first curve come
    /// before those of the second in canonical direction.
    pub fn new(surf: &'s BoundaryTriangulation, curves: Vec<NormalCurve>) -> Self {
        assert!(!curves.is_empty() && curves.len() <= 2, "an overlay holds one or two curves");
        let shuffle = surf
            .edges
            .iter()
            .map(|sides| {
                let (i, k) = sides[0];
                let mut s = Vec::new();
                for (c, curve) in curves.iter().enumerate() {
                    s.extend(std::iter::repeat_n(c as u8, curve.arcs.side_points(i, k) as usize));
                }
                s
            })
            .collect();
        Overlay { surf, curves, shuffle }
    }

    pub fn surface(&self) -> &'s BoundaryTriangulation {
        self.surf
    }

    pub fn curves(&self) -> &[NormalCurve] {
        &self.curves
    }

    pub fn shuffle(&self) -> &[Vec<u8>] {
        &self.shuffle
    }

    pub fn arrange(&self) -> Arrangement {
        Builder::new(self).build()
    }

    /// Bigons whose region is a disk avoiding every surface vertex.
    pub fn trivial_bigons(&self, arr: &Arrangement) -> Vec<Bigon> {
        let coarse = super::CoarseMap::from_arrangement(arr);
        coarse
            .bigons(false)
            .into_iter()
            .map(|(darts, region)| {
                let r = &arr.regions[region];
                let mut swaps: Vec<(usize, usize)> = r
                    .segments
                    .iter()
                    .map(|&s| {
                        let (e, idx) = arr.segment_site[s];
                        debug_assert!(idx >= 1 && idx < self.shuffle[e].len());
                        (e, idx - 1)
                    })
                    .collect();
                swaps.sort();
                swaps.dedup();
                let crossings = [coarse.vertex_of_dart[darts[0]], coarse.vertex_of_dart[darts[1]]];
                Bigon { region, crossings, swaps }
            })
            .collect()
    }

    /// Slides the two sides of a bigon past each other.
    pub fn apply(&mut self, bigon: &Bigon) {
        for &(e, p) in &bigon.swaps {
            let s = &mut self.shuffle[e];
            debug_assert_ne!(s[p], s[p + 1], "bigon segment joins points of one curve");
            s.swap(p, p + 1);
        }
    }

    /// Removes bigons avoiding the vertex until none remain.
    pub fn reduce_trivial(&mut self) -> Arrangement {
        loop {
            let arr = self.arrange();
            let bigons = self.trivial_bigons(&arr);
            if bigons.is_empty() {
                return arr;
            }
            let mut used: HashSet<(usize, usize)> = HashSet::new();
            let mut used_crossings: HashSet<usize> = HashSet::new();
            for b in &bigons {
                if b.crossings.iter().any(|x| used_crossings.contains(x)) {
                    continue;
                }
                let touched: Vec<(usize, usize)> = b.swaps.iter().flat_map(|&(e, p)| [(e, p), (e, p + 1)]).collect();
                if touched.iter().any(|t| used.contains(t)) {
                    continue;
                }
                used.extend(touched);
                used_crossings.extend(b.crossings);
                self.apply(b);
            }
        }
    }
}

struct Builder<'a, 's> {
    ov: &'a Overlay<'s>,
    /// Per edge and curve: combined canonical position of each curve point.
    combined: Vec<Vec<Vec<usize>>>,
}

impl<'a, 's> Builder<'a, 's> {
    fn new(ov: &'a Overlay<'s>) -> Self {
        let nc = ov.curves.len();
        let mut combined = Vec::with_capacity(ov.shuffle.len());
        for s in &ov.shuffle {
            let mut seen = vec![0usize; nc];
            let mut comb = vec![Vec::new(); nc];
            for (q, &c) in s.iter().enumerate() {
                comb[c as usize].push(q);
                seen[c as usize] += 1;
            }
            combined.push(comb);
        }
        Builder { ov, combined }
    }

    fn build(self) -> Arrangement {
        let surf = self.ov.surf;
        let curves = &self.ov.curves;
        let m = surf.triangle_count();

        let mut origin: Vec<usize> = Vec::new();
        let mut dart_chord: Vec<usize> = Vec::new();
        let mut vertex_crossing: Vec<usize> = Vec::new();
        let mut rotation: Vec<Vec<usize>> = Vec::new();
        let mut inward: Vec<usize> = Vec::new();
        let mut chords: Vec<Chord> = Vec::new();
        let mut crossings: Vec<Crossing> = Vec::new();
        // Per triangle and side: vertex id of each combined point, low to high.
        let mut side_vertex: Vec<[Vec<usize>; 3]> = Vec::with_capacity(m);
        // Per triangle: (boundary edge forward dart, side, ccw segment index).
        let mut boundary_edges: Vec<Vec<(usize, u8, usize)>> = Vec::with_capacity(m);
        let mut vertex_site: Vec<(usize, Site)> = Vec::new();

        let new_edge = |origin: &mut Vec<usize>, dart_chord: &mut Vec<usize>, a: usize, b: usize, chord: usize| {
            let d = origin.len();
            origin.push(a);
            origin.push(b);
            dart_chord.push(chord);
            dart_chord.push(chord);
            d
        };

        // Per-curve arc data: entry side, component and step of every arc.
        let arc_info: Vec<Vec<[Vec<ArcSlot>; 3]>> = curves
            .iter()
            .map(|c| {
                let mut info: Vec<[Vec<ArcSlot>; 3]> = (0..m)
                    .map(|i| [0, 1, 2].map(|j| vec![(0u8, 0u8, 0usize, 0usize); c.arcs.counts[i][j] as usize]))
                    .collect();
                for (ci, comp) in c.components.iter().enumerate() {
                    for (si, s) in comp.steps.iter().enumerate() {
                        info[s.tri][s.corner as usize][s.index as usize] = (s.entry, s.exit, ci, si);
                    }
                }
                info
            })
            .collect();

        for i in 0..m {
            let order = surf.ccw_order(i);
            // Circular layout of the triangle boundary.
            let mut sites: Vec<Site> = Vec::new();
            let mut side_base = [0usize; 3];
            let mut side_ccw_from_lo = [true; 3];
            let mut side_len = [0usize; 3];
            for s in 0..3 {
                let x = order[s];
                let y = order[(s + 1) % 3];
                let k = 3 - x - y;
                sites.push(Site::Corner(x));
                let e = surf.edge_of[i][k as usize];
                let n = self.ov.shuffle[e].len();
                let (lo, _) = side_corners(k);
                side_base[k as usize] = sites.len();
                side_ccw_from_lo[k as usize] = x == lo;
                side_len[k as usize] = n;
                for t in 0..n {
                    let q = if x == lo { t } else { n - 1 - t };
                    sites.push(Site::Point { side: k, q });
                }
            }
            let len = sites.len();
            let circ = |k: u8, q: usize| -> usize {
                let k = k as usize;
                side_base[k] + if side_ccw_from_lo[k] { q } else { side_len[k] - 1 - q }
            };

            // Boundary vertices.
            let vbase = vertex_crossing.len();
            for (t, &site) in sites.iter().enumerate() {
                vertex_crossing.push(NONE);
                rotation.push(Vec::new());
                inward.push(NONE);
                vertex_site.push((i, site));
                let _ = t;
            }
            let mut sv: [Vec<usize>; 3] = [Vec::new(), Vec::new(), Vec::new()];
            for k in 0..3u8 {
                sv[k as usize] = (0..side_len[k as usize]).map(|q| vbase + circ(k, q)).collect();
            }
            side_vertex.push(sv);

            // Boundary edges, CCW.
            let mut bedges = Vec::with_capacity(len);
            for t in 0..len {
                let d = new_edge(&mut origin, &mut dart_chord, vbase + t, vbase + (t + 1) % len, NONE);
                // Segment: the side containing the open edge.
                let (k, seg) = match (sites[t], sites[(t + 1) % len]) {
                    (Site::Corner(x), Site::Corner(y)) => (3 - x - y, 0),
                    (Site::Corner(_), Site::Point { side, .. }) => (side, 0),
                    (Site::Point { side, q }, _) => {
                        let pos = if side_ccw_from_lo[side as usize] { q } else { side_len[side as usize] - 1 - q };
                        (side, pos + 1)
                    }
                };
                let lh = if side_ccw_from_lo[k as usize] { seg } else { side_len[k as usize] - seg };
                bedges.push((d, k, lh));
            }
            boundary_edges.push(bedges);

            // Chords.
            let chord_base = chords.len();
            for (c, curve) in curves.iter().enumerate() {
                for j in 0..3u8 {
                    for idx in 0..curve.arcs.counts[i][j as usize] {
                        let (entry, exit, comp, step) = arc_info[c][i][j as usize][idx as usize];
                        let point = |k: u8| -> usize {
                            let e = surf.edge_of[i][k as usize];
                            let rev = surf.side_reversed(i, k);
                            let nc = curve.arcs.side_points(i, k) as usize;
                            let p_side = side_position(curve.arcs.counts[i], k, j, idx) as usize;
                            let p_canon = if rev { nc - 1 - p_side } else { p_side };
                            let q_canon = self.combined[e][c][p_canon];
                            let n = self.ov.shuffle[e].len();
                            let q = if rev { n - 1 - q_canon } else { q_canon };
                            circ(k, q)
                        };
                        chords.push(Chord {
                            tri: i,
                            curve: c as u8,
                            comp,
                            step,
                            corner: j,
                            entry,
                            exit,
                            start: point(entry),
                            end: point(exit),
                            crossings: Vec::new(),
                            segments: Vec::new(),
                        });
                    }
                }
            }

            // Crossings between the two curves' chords.
            let inside = |x: usize, s: usize, e: usize| -> bool {
                let dx = (x + len - s) % len;
                let de = (e + len - s) % len;
                dx > 0 && dx < de
            };
            let chord_end = chords.len();
            let (first, second): (Vec<usize>, Vec<usize>) =
                (chord_base..chord_end).partition(|&h| chords[h].curve == 0);
            let mut keyed: Vec<Vec<(usize, usize)>> = vec![Vec::new(); chord_end - chord_base];
            let mut local_crossings = Vec::new();
            for &a in &first {
                let (sa, ea) = (chords[a].start, chords[a].end);
                for &b in &second {
                    let (sb, eb) = (chords[b].start, chords[b].end);
                    let sb_in = inside(sb, sa, ea);
                    let eb_in = inside(eb, sa, ea);
                    if sb_in == eb_in {
                        continue;
                    }
                    let x = crossings.len() + local_crossings.len();
                    let b_right = if sb_in { sb } else { eb };
                    let a_right = if inside(sa, sb, eb) { sa } else { ea };
                    keyed[a - chord_base].push(((b_right + len - sa) % len, x));
                    keyed[b - chord_base].push(((a_right + len - sb) % len, x));
                    let b_left = if sb_in { eb } else { sb };
                    // The normal resolution joins each half of `a` to the
                    // half of `b` ending on a different side.
                    let (ca, cb) = (&chords[a], &chords[b]);
                    let straight = cb.entry != ca.entry && cb.exit != ca.exit;
                    debug_assert!(straight != (cb.exit != ca.entry && cb.entry != ca.exit));
                    let joined_to_start = if straight { sb } else { eb };
                    let positive = inside(joined_to_start, sa, ea);
                    local_crossings.push((a, b, b_left == eb, positive));
                }
            }
            for &(a, b, _, positive) in &local_crossings {
                crossings.push(Crossing { tri: i, chords: [a, b], darts: [NONE; 4], positive });
                vertex_crossing.push(crossings.len() - 1);
                rotation.push(Vec::new());
                inward.push(NONE);
                vertex_site.push((i, Site::Corner(3)));
            }
            let crossing_vertex_base = vertex_crossing.len() - local_crossings.len();
            let crossing_base = crossings.len() - local_crossings.len();
            for h in chord_base..chord_end {
                let mut ks = std::mem::take(&mut keyed[h - chord_base]);
                ks.sort();
                chords[h].crossings = ks.into_iter().map(|(_, x)| x).collect();
            }

            // Chord segments and rotations.
            for h in chord_base..chord_end {
                let verts: Vec<usize> = std::iter::once(vbase + chords[h].start)
                    .chain(chords[h].crossings.iter().map(|&x| crossing_vertex_base + (x - crossing_base)))
                    .chain(std::iter::once(vbase + chords[h].end))
                    .collect();
                let mut segs = Vec::with_capacity(verts.len() - 1);
                for w in verts.windows(2) {
                    segs.push(new_edge(&mut origin, &mut dart_chord, w[0], w[1], h));
                }
                inward[vbase + chords[h].start] = segs[0];
                inward[vbase + chords[h].end] = segs[segs.len() - 1] + 1;
                chords[h].segments = segs;
            }
            for (lx, &(a, b, b_left_is_end, _)) in local_crossings.iter().enumerate() {
                let x = crossing_base + lx;
                let pa = chords[a].crossings.iter().position(|&y| y == x).unwrap();
                let pb = chords[b].crossings.iter().position(|&y| y == x).unwrap();
                let a_fwd = chords[a].segments[pa + 1];
                let a_bwd = chords[a].segments[pa] + 1;
                let b_fwd = chords[b].segments[pb + 1];
                let b_bwd = chords[b].segments[pb] + 1;
                let (b_left, b_right) = if b_left_is_end { (b_fwd, b_bwd) } else { (b_bwd, b_fwd) };
                let darts = [a_fwd, b_left, a_bwd, b_right];
                crossings[x].darts = darts;
                rotation[crossing_vertex_base + lx] = darts.to_vec();
            }
            for t in 0..len {
                let v = vbase + t;
                let fwd = boundary_edges[i][t].0;
                let bwd = boundary_edges[i][(t + len - 1) % len].0 + 1;
                rotation[v] = match sites[t] {
                    Site::Corner(_) => vec![fwd, bwd],
                    Site::Point { .. } => vec![fwd, inward[v], bwd],
                };
            }
        }

        let darts = origin.len();
        let mut sigma = vec![NONE; darts];
        for rot in &rotation {
            for (p, &d) in rot.iter().enumerate() {
                sigma[d] = rot[(p + 1) % rot.len()];
            }
        }
        debug_assert!(sigma.iter().all(|&s| s != NONE));

        // Faces.
        let mut face_of = vec![NONE; darts];
        let mut faces: Vec<FaceInfo> = Vec::new();
        for d0 in 0..darts {
            if face_of[d0] != NONE {
                continue;
            }
            let f = faces.len();
            let mut info = FaceInfo::default();
            let mut d = d0;
            loop {
                face_of[d] = f;
                let v = origin[d];
                if vertex_crossing[v] == NONE {
                    if let (i, Site::Corner(j)) = vertex_site[v] {
                        info.surface_vertices.push(surf.vertex_of[i][j as usize]);
                    }
                }
                d = sigma[d ^ 1];
                if d == d0 {
                    break;
                }
            }
            info.surface_vertices.sort();
            info.surface_vertices.dedup();
            faces.push(info);
        }
        for i in 0..m {
            let outer = face_of[boundary_edges[i][0].0];
            faces[outer].outer = true;
            debug_assert!(boundary_edges[i].iter().all(|&(d, _, _)| face_of[d] == outer));
        }

        // Segments: global ids per edge and canonical index.
        let mut seg_base = Vec::with_capacity(surf.edge_count());
        let mut segment_site = Vec::new();
        for (e, s) in self.ov.shuffle.iter().enumerate() {
            seg_base.push(segment_site.len());
            for idx in 0..=s.len() {
                segment_site.push((e, idx));
            }
        }
        let mut seg_faces: Vec<Vec<usize>> = vec![Vec::new(); segment_site.len()];
        for i in 0..m {
            for &(d, k, lh) in &boundary_edges[i] {
                let e = surf.edge_of[i][k as usize];
                let n = self.ov.shuffle[e].len();
                let canon = if surf.side_reversed(i, k) { n - lh } else { lh };
                let s = seg_base[e] + canon;
                let f = face_of[d + 1];
                faces[f].segments.push(s);
                seg_faces[s].push(f);
            }
        }

        // Regions.
        let mut uf = UnionFind((0..faces.len()).collect());
        for fs in &seg_faces {
            debug_assert_eq!(fs.len(), 2);
            uf.union(fs[0], fs[1]);
        }
        let mut region_of_face = vec![NONE; faces.len()];
        let mut regions: Vec<RegionInfo> = Vec::new();
        let mut root_region = vec![NONE; faces.len()];
        for f in 0..faces.len() {
            if faces[f].outer {
                continue;
            }
            let r = uf.find(f);
            if root_region[r] == NONE {
                root_region[r] = regions.len();
                regions.push(RegionInfo::default());
            }
            region_of_face[f] = root_region[r];
            regions[root_region[r]].faces.push(f);
        }
        for (s, fs) in seg_faces.iter().enumerate() {
            let r = region_of_face[fs[0]];
            regions[r].segments.push(s);
        }
        for r in regions.iter_mut() {
            let mut verts: Vec<usize> =
                r.faces.iter().flat_map(|&f| faces[f].surface_vertices.iter().copied()).collect();
            verts.sort();
            verts.dedup();
            r.surface_vertices = verts.len();
            r.chi = r.faces.len() as i64 - r.segments.len() as i64 + verts.len() as i64;
        }

        // Matching boundary points across edges.
        let mut across = vec![NONE; vertex_crossing.len()];
        for i in 0..m {
            for k in 0..3u8 {
                let g = surf.sides[i][k as usize];
                let n = side_vertex[i][k as usize].len();
                for q in 0..n {
                    let q2 = if g.reversed { n - 1 - q } else { q };
                    across[side_vertex[i][k as usize][q]] = side_vertex[g.tri][g.side as usize][q2];
                }
            }
        }

        Arrangement {
            origin,
            sigma,
            dart_chord,
            face_of,
            faces,
            chords,
            crossings,
            vertex_crossing,
            inward,
            across,
            region_of_face,
            regions,
            segment_site,
            curve_count: curves.len(),
        }
    }
}
