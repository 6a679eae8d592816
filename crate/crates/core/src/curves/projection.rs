//! Closing arcs based at the vertex into closed curves.
//!
//! An arc leaves the vertex at a corner, crosses a sequence of sides and
//! returns to the vertex at another corner. Cutting a small disk around
//! the vertex makes it a properly embedded arc; joining its endpoints
//! around the disk gives a closed curve, which is then pulled tight.

use serde::{Deserialize, Serialize};

use super::NormalCurve;
use crate::error::{Error, Result};
use crate::normal::BoundaryArcVector;
use crate::triangulation::BoundaryTriangulation;

/// An arc from the vertex back to the vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcPath {
    pub start_tri: usize,
    pub start_corner: u8,
    /// Sides crossed, each given in the triangle being left.
    pub exits: Vec<u8>,
    pub end_corner: u8,
}

impl ArcPath {
    /// The edge on side `k` of triangle `tri`, pushed into that triangle.
    pub fn along_side(tri: usize, k: u8) -> ArcPath {
        let (lo, hi) = crate::triangulation::side_corners(k);
        ArcPath { start_tri: tri, start_corner: lo, exits: Vec::new(), end_corner: hi }
    }
}

/// Input to the projection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Projectable {
    Arc(ArcPath),
    Closed(NormalCurve),
}

fn local(surf: &BoundaryTriangulation, tri: usize, corner: u8) -> usize {
    surf.ccw_order(tri).iter().position(|&c| c == corner).expect("corner label")
}

/// The closed curve through the vertex disk, in normal form.
pub fn puncture_projection(surf: &BoundaryTriangulation, input: &Projectable) -> Result<NormalCurve> {
    let arc = match input {
        Projectable::Closed(c) => return Ok(c.clone()),
        Projectable::Arc(a) => a,
    };
    let m = surf.triangle_count();
    if arc.start_tri >= m || arc.start_corner > 2 || arc.end_corner > 2 || arc.exits.iter().any(|&k| k > 2) {
        return Err(Error::Invalid("arc refers to a missing triangle, corner or side".into()));
    }
    // Events: (triangle left, side crossed).
    let mut events: Vec<(usize, u8)> = Vec::new();
    let mut tri = arc.start_tri;
    for &k in &arc.exits {
        events.push((tri, k));
        tri = surf.sides[tri][k as usize].tri;
    }
    let end = (tri, arc.end_corner);
    let start = (arc.start_tri, arc.start_corner);
    if surf.vertex_of[end.0][end.1 as usize] != surf.vertex_of[start.0][start.1 as usize] {
        return Err(Error::Invalid("arc endpoints lie at different vertices".into()));
    }
    // Counter-clockwise around the vertex from the end back to the start.
    let mut cur = end;
    let mut steps = 0;
    while cur != start {
        let order = surf.ccw_order(cur.0);
        let l = local(surf, cur.0, cur.1);
        let exit = order[(l + 1) % 3];
        events.push((cur.0, exit));
        let g = surf.sides[cur.0][exit as usize];
        let lg = local(surf, g.tri, g.side);
        cur = (g.tri, surf.ccw_order(g.tri)[(lg + 1) % 3]);
        steps += 1;
        if steps > 3 * m {
            return Err(Error::Invalid("walk around the vertex did not close".into()));
        }
    }
    let reduced = free_reduce(surf, events);
    if reduced.is_empty() {
        return Err(Error::Invalid("arc is not essential".into()));
    }
    let mut arcs = BoundaryArcVector::zero(m);
    let n = reduced.len();
    for i in 0..n {
        let (t, exit) = reduced[i];
        let (pt, pk) = reduced[(i + n - 1) % n];
        let g = surf.sides[pt][pk as usize];
        debug_assert_eq!(g.tri, t);
        debug_assert_ne!(g.side, exit);
        arcs.counts[t][(3 - g.side - exit) as usize] += 1;
    }
    let curve = NormalCurve::new(surf, arcs)?;
    if curve.components.iter().all(|c| c.arcs(m).counts.iter().all(|x| *x == [1, 1, 1])) && surf.vertex_count == 1 {
        return Err(Error::Invalid("arc is not essential".into()));
    }
    Ok(curve)
}

/// Cancels crossings of a side immediately followed by crossing back.
fn free_reduce(surf: &BoundaryTriangulation, events: Vec<(usize, u8)>) -> Vec<(usize, u8)> {
    let backtracks = |a: (usize, u8), b: (usize, u8)| {
        let g = surf.sides[a.0][a.1 as usize];
        g.tri == b.0 && g.side == b.1
    };
    let mut stack: Vec<(usize, u8)> = Vec::with_capacity(events.len());
    for e in events {
        if stack.last().is_some_and(|&top| backtracks(top, e)) {
            stack.pop();
        } else {
            stack.push(e);
        }
    }
    // Cancel across the seam of the cycle.
    let mut lo = 0;
    while stack.len() - lo >= 2 && backtracks(stack[stack.len() - 1], stack[lo]) {
        stack.pop();
        lo += 1;
    }
    stack.split_off(lo)
}
