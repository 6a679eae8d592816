//! The crossing graph of two curves: one vertex per crossing, edges along
//! the curves, faces grouped into complementary regions. Bigon removal is
//! done here by surgery, which works for bigons that contain the vertex.

use super::overlay::Arrangement;

const NONE: usize = usize::MAX;

/// Which bigons may be removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionMode {
    /// Only bigons avoiding the surface vertex (minimal position in the
    /// punctured surface).
    Trivial,
    /// Every bigon (minimal position in the closed surface).
    Full,
}

#[derive(Clone, Debug)]
pub struct CoarseMap {
    /// Dart pairing along curve segments.
    pub alpha: Vec<usize>,
    /// First dart and degree of every vertex (4 for crossings, 2 for beads).
    pub vertex_start: Vec<usize>,
    pub vertex_degree: Vec<usize>,
    pub vertex_alive: Vec<bool>,
    pub vertex_of_dart: Vec<usize>,
    /// Curve, component and direction of the strand each dart runs along.
    pub curve: Vec<u8>,
    pub comp: Vec<usize>,
    pub forward: Vec<bool>,
    /// Handedness per crossing vertex (beads: false).
    pub positive: Vec<bool>,
    /// Arrangement region to the right of each dart, before merging.
    region_raw: Vec<usize>,
    region_parent: Vec<usize>,
    pub region_chi: Vec<i64>,
    pub region_vertices: Vec<usize>,
}

impl CoarseMap {
    pub fn from_arrangement(arr: &Arrangement) -> Self {
        let nx = arr.crossings.len();
        let mut map = CoarseMap {
            alpha: vec![NONE; 4 * nx],
            vertex_start: (0..nx).map(|x| 4 * x).collect(),
            vertex_degree: vec![4; nx],
            vertex_alive: vec![true; nx],
            vertex_of_dart: (0..4 * nx).map(|d| d / 4).collect(),
            curve: vec![0; 4 * nx],
            comp: vec![0; 4 * nx],
            forward: vec![false; 4 * nx],
            positive: arr.crossings.iter().map(|c| c.positive).collect(),
            region_raw: vec![NONE; 4 * nx],
            region_parent: (0..arr.regions.len()).collect(),
            region_chi: arr.regions.iter().map(|r| r.chi).collect(),
            region_vertices: arr.regions.iter().map(|r| r.surface_vertices).collect(),
        };
        // Fine dart at a crossing -> coarse dart.
        let mut coarse_of = std::collections::HashMap::with_capacity(4 * nx);
        for (x, c) in arr.crossings.iter().enumerate() {
            for (s, &d) in c.darts.iter().enumerate() {
                coarse_of.insert(d, 4 * x + s);
            }
        }
        for (x, c) in arr.crossings.iter().enumerate() {
            for (s, &d0) in c.darts.iter().enumerate() {
                let cd = 4 * x + s;
                let ch = &arr.chords[arr.dart_chord[d0]];
                map.curve[cd] = ch.curve;
                map.comp[cd] = ch.comp;
                map.forward[cd] = arr.dart_forward(d0);
                map.region_raw[cd] = arr.region_of_dart(d0);
                if map.alpha[cd] != NONE {
                    continue;
                }
                let end = follow(arr, d0, |d| coarse_of.contains_key(&d));
                let other = coarse_of[&end];
                map.alpha[cd] = other;
                map.alpha[other] = cd;
            }
        }
        // Components without crossings become beads.
        let mut crossed = std::collections::HashSet::new();
        for c in &arr.crossings {
            for &h in &c.chords {
                let ch = &arr.chords[h];
                crossed.insert((ch.curve, ch.comp));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for ch in &arr.chords {
            if ch.step != 0 || crossed.contains(&(ch.curve, ch.comp)) || !seen.insert((ch.curve, ch.comp)) {
                continue;
            }
            let d = ch.segments[0];
            map.add_bead(ch.curve, ch.comp, true, arr.region_of_dart(d), arr.region_of_dart(d ^ 1));
        }
        map
    }

    fn add_bead(&mut self, curve: u8, comp: usize, forward: bool, right: usize, left: usize) -> usize {
        let v = self.vertex_start.len();
        let d = self.alpha.len();
        self.vertex_start.push(d);
        self.vertex_degree.push(2);
        self.vertex_alive.push(true);
        self.positive.push(false);
        for (k, r) in [right, left].into_iter().enumerate() {
            self.alpha.push(d + 1 - k);
            self.vertex_of_dart.push(v);
            self.curve.push(curve);
            self.comp.push(comp);
            self.forward.push(forward == (k == 0));
            self.region_raw.push(r);
        }
        v
    }

    pub fn is_bead(&self, v: usize) -> bool {
        self.vertex_degree[v] == 2
    }

    pub fn sigma(&self, d: usize) -> usize {
        let v = self.vertex_of_dart[d];
        let s = self.vertex_start[v];
        s + (d - s + 1) % self.vertex_degree[v]
    }

    pub fn phi(&self, d: usize) -> usize {
        self.sigma(self.alpha[d])
    }

    fn root(&self, mut r: usize) -> usize {
        while self.region_parent[r] != r {
            r = self.region_parent[r];
        }
        r
    }

    /// Region to the right of a dart.
    pub fn region(&self, d: usize) -> usize {
        self.root(self.region_raw[d])
    }

    pub fn crossing_count(&self) -> usize {
        (0..self.vertex_start.len()).filter(|&v| self.vertex_alive[v] && !self.is_bead(v)).count()
    }

    pub fn alive_darts(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alpha.len()).filter(move |&d| self.vertex_alive[self.vertex_of_dart[d]])
    }

    /// Face cycles of live darts.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.alpha.len()];
        let mut out = Vec::new();
        for d0 in self.alive_darts() {
            if seen[d0] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut d = d0;
            while !seen[d] {
                seen[d] = true;
                cyc.push(d);
                d = self.phi(d);
            }
            out.push(cyc);
        }
        out
    }

    /// Live regions (roots) with their face cycles.
    pub fn region_cycles(&self) -> Vec<(usize, Vec<Vec<usize>>)> {
        let mut by_region: std::collections::BTreeMap<usize, Vec<Vec<usize>>> = Default::default();
        for c in self.cycles() {
            by_region.entry(self.region(c[0])).or_default().push(c);
        }
        by_region.into_iter().collect()
    }

    /// Bigon faces: regions that are disks bounded by a single two-crossing
    /// cycle, optionally allowed to contain the vertex.
    pub fn bigons(&self, allow_vertex: bool) -> Vec<([usize; 2], usize)> {
        let mut out = Vec::new();
        for (r, cycles) in self.region_cycles() {
            if self.region_chi[r] != 1 || (!allow_vertex && self.region_vertices[r] > 0) || cycles.len() != 1 {
                continue;
            }
            let c = &cycles[0];
            if c.len() != 2 {
                continue;
            }
            let (v1, v2) = (self.vertex_of_dart[c[0]], self.vertex_of_dart[c[1]]);
            if v1 == v2 || self.is_bead(v1) || self.is_bead(v2) {
                continue;
            }
            out.push(([c[0], c[1]], r));
        }
        out
    }

    /// Slides one side of a bigon across the other.
    pub fn remove_bigon(&mut self, bigon: [usize; 2]) {
        let [d1, d2] = bigon;
        let x = self.vertex_of_dart[d1];
        let y = self.vertex_of_dart[d2];
        let a1 = self.alpha[d1];
        let a2 = self.alpha[d2];
        let sig2 = |m: &Self, d: usize| m.sigma(m.sigma(d));
        let pax = sig2(self, d1);
        let pay = sig2(self, a1);
        let pbx = sig2(self, a2);
        let pby = sig2(self, d2);
        let tip_x = self.region(pax);
        let tip_y = self.region(pby);
        let bigon_region = self.region(d1);
        let across = self.region(a1);
        // Merge the two tip regions through the gap.
        if tip_x == tip_y {
            self.region_chi[tip_x] -= 1;
        } else {
            let (keep, gone) = if tip_x < tip_y { (tip_x, tip_y) } else { (tip_y, tip_x) };
            self.region_chi[keep] += self.region_chi[gone] - 1;
            self.region_vertices[keep] += self.region_vertices[gone];
            self.region_parent[gone] = keep;
        }
        // The swept bigon joins the region across the moving strand.
        let moved = self.region_vertices[bigon_region];
        self.region_vertices[bigon_region] = 0;
        let across = self.root(across);
        self.region_vertices[across] += moved;
        self.vertex_alive[x] = false;
        self.vertex_alive[y] = false;
        for (p, q) in [(pax, pay), (pbx, pby)] {
            if self.alpha[p] == q {
                let (curve, comp, fwd) = (self.curve[p], self.comp[p], self.forward[p]);
                let (rp, rq) = (self.region_raw[p], self.region_raw[q]);
                self.add_bead(curve, comp, fwd, rp, rq);
            } else {
                let (fp, fq) = (self.alpha[p], self.alpha[q]);
                self.alpha[fp] = fq;
                self.alpha[fq] = fp;
            }
        }
    }

    /// Removes bigons allowed by `mode` until none remain.
    pub fn reduce(&mut self, mode: ReductionMode) {
        let allow = mode == ReductionMode::Full;
        loop {
            let bigons = self.bigons(allow);
            if bigons.is_empty() {
                return;
            }
            let mut used = std::collections::HashSet::new();
            for (b, _) in bigons {
                let vs = [self.vertex_of_dart[b[0]], self.vertex_of_dart[b[1]]];
                if vs.iter().any(|v| used.contains(v)) {
                    continue;
                }
                // Strand ends touched by the surgery must not belong to
                // another pending bigon.
                let ends: Vec<usize> = [b[0], self.alpha[b[0]], b[1], self.alpha[b[1]]]
                    .iter()
                    .map(|&d| self.vertex_of_dart[self.alpha[self.sigma(self.sigma(d))]])
                    .collect();
                if ends.iter().any(|v| used.contains(v)) {
                    continue;
                }
                used.extend(vs);
                used.extend(ends);
                self.remove_bigon(b);
            }
        }
    }
}

/// Walks along a chord from fine dart `d` across triangles until reaching
/// a dart for which `stop` holds at the far end; returns that far dart.
pub(crate) fn follow(arr: &Arrangement, d: usize, stop: impl Fn(usize) -> bool) -> usize {
    let mut d = d;
    loop {
        let back = d ^ 1;
        if stop(back) {
            return back;
        }
        let v = arr.origin[back];
        debug_assert_eq!(arr.vertex_crossing[v], usize::MAX);
        let w = arr.across[v];
        d = arr.inward[w];
    }
}
