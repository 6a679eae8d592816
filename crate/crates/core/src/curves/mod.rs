//! Normal curves on the boundary surface.
//!
//! A curve is stored as arc counts per boundary triangle together with its
//! components, each a cyclic sequence of arcs in traversal order. Arc `idx`
//! of type `j` in a triangle is the `idx`-th arc cutting off corner `j`,
//! counted outward from the corner.

mod coarse;
mod overlay;
mod projection;
mod regions;
mod twist;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::normal::BoundaryArcVector;
use crate::triangulation::{side_corners, BoundaryTriangulation};

pub use coarse::{CoarseMap, ReductionMode};
pub use overlay::{Bigon, Overlay};
pub use projection::{puncture_projection, ArcPath, Projectable};
pub use regions::{
    annulus_region, classify_arc, classify_region_arcs, component_triviality, fills, geometric_intersection,
    intersection_in_surface, is_trivial, isotopic, region_arcs, AnnulusRegion, ArcType, RegionArc, RegionDiagnostics,
};
pub use twist::{
    intersection_profile, neighborhood_pattern, sign_sequences, spiral_counts, spiral_counts_all,
    stabilization_threshold, twist_sum, NeighborhoodPattern, SpiralCounts, TwistResult,
};

/// Hard limit on the number of arcs a single curve may have.
pub const MAX_ARCS: u64 = 20_000_000;

/// One arc of a component, with the sides it enters and leaves through.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcStep {
    pub tri: usize,
    pub corner: u8,
    pub index: u64,
    pub entry: u8,
    pub exit: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub steps: Vec<ArcStep>,
}

impl Component {
    pub fn arcs(&self, triangles: usize) -> BoundaryArcVector {
        let mut a = BoundaryArcVector::zero(triangles);
        for s in &self.steps {
            a.counts[s.tri][s.corner as usize] += 1;
        }
        a
    }
}

/// A normal multicurve with its canonical component decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalCurve {
    pub arcs: BoundaryArcVector,
    pub components: Vec<Component>,
}

/// Position, counted low-to-high along side `k`, of the endpoint of arc
/// `(j, idx)`.
#[inline]
pub(crate) fn side_position(counts: [u64; 3], k: u8, j: u8, idx: u64) -> u64 {
    let (lo, hi) = side_corners(k);
    if j == lo {
        idx
    } else {
        debug_assert_eq!(j, hi);
        counts[lo as usize] + (counts[hi as usize] - 1 - idx)
    }
}

/// The arc whose endpoint sits at position `pos` on side `k`.
#[inline]
pub(crate) fn arc_at(counts: [u64; 3], k: u8, pos: u64) -> (u8, u64) {
    let (lo, hi) = side_corners(k);
    if pos < counts[lo as usize] {
        (lo, pos)
    } else {
        (hi, counts[hi as usize] - 1 - (pos - counts[lo as usize]))
    }
}

/// The other side at corner `j` besides `k`.
#[inline]
pub(crate) fn other_side(j: u8, k: u8) -> u8 {
    3 - j - k
}

impl NormalCurve {
    pub fn new(surf: &BoundaryTriangulation, arcs: BoundaryArcVector) -> Result<Self> {
        arcs.check_matching(surf)?;
        let total = arcs.total();
        if total > MAX_ARCS {
            return Err(Error::ResourceCap(format!("curve has {total} arcs")));
        }
        let m = surf.triangle_count();
        let mut offset = vec![[0u64; 3]; m];
        let mut acc = 0u64;
        for i in 0..m {
            for j in 0..3 {
                offset[i][j] = acc;
                acc += arcs.counts[i][j];
            }
        }
        let mut visited = vec![false; total as usize];
        let mut components = Vec::new();
        for i in 0..m {
            for j in 0..3u8 {
                for idx in 0..arcs.counts[i][j as usize] {
                    if visited[(offset[i][j as usize] + idx) as usize] {
                        continue;
                    }
                    let exit0 = if j == 0 { 1 } else { 0 };
                    let mut steps = Vec::new();
                    let (mut ti, mut tj, mut tidx, mut exit) = (i, j, idx, exit0);
                    loop {
                        let id = (offset[ti][tj as usize] + tidx) as usize;
                        if visited[id] {
                            break;
                        }
                        visited[id] = true;
                        let entry = other_side(tj, exit);
                        steps.push(ArcStep { tri: ti, corner: tj, index: tidx, entry, exit });
                        let pos = side_position(arcs.counts[ti], exit, tj, tidx);
                        let g = surf.sides[ti][exit as usize];
                        let n = arcs.side_points(ti, exit);
                        let pos2 = if g.reversed { n - 1 - pos } else { pos };
                        let (nj, nidx) = arc_at(arcs.counts[g.tri], g.side, pos2);
                        ti = g.tri;
                        tj = nj;
                        tidx = nidx;
                        exit = other_side(nj, g.side);
                    }
                    debug_assert!(steps.first().map(|s| (s.tri, s.corner, s.index)) == Some((ti, tj, tidx)));
                    components.push(Component { steps });
                }
            }
        }
        Ok(NormalCurve { arcs, components })
    }

    pub fn empty(surf: &BoundaryTriangulation) -> Self {
        NormalCurve { arcs: BoundaryArcVector::zero(surf.triangle_count()), components: Vec::new() }
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Component `c` as a curve in its own right.
    pub fn component_curve(&self, surf: &BoundaryTriangulation, c: usize) -> Result<NormalCurve> {
        NormalCurve::new(surf, self.components[c].arcs(surf.triangle_count()))
    }

    pub fn weight(&self, surf: &BoundaryTriangulation) -> u64 {
        self.arcs.weight(surf)
    }

    /// Whether the arc vector equals one arc of every type in every triangle.
    pub fn is_vertex_link_vector(&self) -> bool {
        self.arcs.counts.iter().all(|c| *c == [1, 1, 1])
    }

    /// Haken sum of arc vectors.
    pub fn sum(&self, surf: &BoundaryTriangulation, other: &NormalCurve) -> Result<NormalCurve> {
        NormalCurve::new(surf, self.arcs.checked_add(&other.arcs)?)
    }
}

/// Component decomposition of an arc vector.
pub fn components(surf: &BoundaryTriangulation, arcs: &BoundaryArcVector) -> Result<NormalCurve> {
    NormalCurve::new(surf, arcs.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::{boundary_surface, parse_triangulation};

    fn torus() -> BoundaryTriangulation {
        let tri = parse_triangulation("tri 1\n0:1:1230 0:0:3012 b b\n").unwrap();
        boundary_surface(&tri).unwrap()
    }

    #[test]
    fn vertex_link_is_one_component() {
        let s = torus();
        let c = NormalCurve::new(&s, BoundaryArcVector::vertex_link(2)).unwrap();
        assert_eq!(c.component_count(), 1);
        assert_eq!(c.components[0].steps.len(), 6);
        let c3 = NormalCurve::new(&s, BoundaryArcVector::vertex_link(2).scaled(3).unwrap()).unwrap();
        assert_eq!(c3.component_count(), 3);
        assert_eq!(NormalCurve::new(&s, BoundaryArcVector::zero(2)).unwrap().component_count(), 0);
    }

    #[test]
    fn mismatched_counts_rejected() {
        let s = torus();
        let bad = BoundaryArcVector { counts: vec![[1, 0, 0], [0, 0, 0]] };
        assert!(matches!(NormalCurve::new(&s, bad), Err(Error::EdgeMismatch(_))));
    }
}
