//! Complementary regions of one or two curves: triviality, intersection
//! numbers, filling, annulus regions and the arc types inside them.

use serde::{Deserialize, Serialize};

use super::coarse::{CoarseMap, ReductionMode};
use super::overlay::{Arrangement, Overlay};
use super::NormalCurve;
use crate::error::{Error, Result};
use crate::triangulation::BoundaryTriangulation;

fn same_surface(surf: &BoundaryTriangulation, c: &NormalCurve) -> Result<()> {
    if c.arcs.counts.len() != surf.triangle_count() {
        return Err(Error::Dimension { expected: surf.triangle_count(), found: c.arcs.counts.len() });
    }
    Ok(())
}

/// Arrangement of a single curve.
fn single(surf: &BoundaryTriangulation, c: &NormalCurve) -> Arrangement {
    Overlay::new(surf, vec![c.clone()]).arrange()
}

/// Whether a connected curve bounds a disk in the boundary surface.
pub fn is_trivial(surf: &BoundaryTriangulation, c: &NormalCurve) -> Result<bool> {
    same_surface(surf, c)?;
    if c.component_count() != 1 {
        return Err(Error::Invalid(format!("expected one component, found {}", c.component_count())));
    }
    let arr = single(surf, c);
    let trivial = arr.regions.iter().any(|r| r.chi == 1);
    if surf.vertex_count == 1 {
        debug_assert_eq!(trivial, c.is_vertex_link_vector(), "trivial curve is not the vertex link");
    }
    Ok(trivial)
}

/// Triviality of every component.
pub fn component_triviality(surf: &BoundaryTriangulation, c: &NormalCurve) -> Result<Vec<bool>> {
    (0..c.component_count()).map(|i| is_trivial(surf, &c.component_curve(surf, i)?)).collect()
}

fn reduced(surf: &BoundaryTriangulation, c1: &NormalCurve, c2: &NormalCurve, mode: ReductionMode) -> Result<CoarseMap> {
    same_surface(surf, c1)?;
    same_surface(surf, c2)?;
    let mut ov = Overlay::new(surf, vec![c1.clone(), c2.clone()]);
    let arr = ov.reduce_trivial();
    let mut map = CoarseMap::from_arrangement(&arr);
    if mode == ReductionMode::Full {
        map.reduce(ReductionMode::Full);
    }
    Ok(map)
}

/// Crossings left after removing every bigon that avoids the vertex.
pub fn geometric_intersection(surf: &BoundaryTriangulation, c1: &NormalCurve, c2: &NormalCurve) -> Result<usize> {
    same_surface(surf, c1)?;
    same_surface(surf, c2)?;
    let mut ov = Overlay::new(surf, vec![c1.clone(), c2.clone()]);
    Ok(ov.reduce_trivial().crossing_count())
}

/// Minimal intersection in the closed boundary surface, where bigons around
/// the vertex may be removed as well.
pub fn intersection_in_surface(surf: &BoundaryTriangulation, c1: &NormalCurve, c2: &NormalCurve) -> Result<usize> {
    Ok(reduced(surf, c1, c2, ReductionMode::Full)?.crossing_count())
}

/// Whether every complementary region of the reduced union is a disk.
pub fn fills(surf: &BoundaryTriangulation, c1: &NormalCurve, c2: &NormalCurve) -> Result<bool> {
    let map = reduced(surf, c1, c2, ReductionMode::Full)?;
    if map.crossing_count() == 0 {
        return Ok(false);
    }
    Ok(map.region_cycles().iter().all(|(r, _)| map.region_chi[*r] == 1))
}

/// Whether two curves are isotopic in the closed surface: disjoint after
/// reduction and cobounding an annulus, component by component.
pub fn isotopic(surf: &BoundaryTriangulation, c1: &NormalCurve, c2: &NormalCurve) -> Result<bool> {
    if c1.arcs == c2.arcs {
        return Ok(true);
    }
    if c1.component_count() != 1 || c2.component_count() != 1 {
        return Err(Error::Invalid("isotopy test expects connected curves".into()));
    }
    let map = reduced(surf, c1, c2, ReductionMode::Full)?;
    if map.crossing_count() > 0 {
        return Ok(false);
    }
    Ok(map.region_cycles().iter().any(|(r, cycles)| {
        map.region_chi[*r] == 0
            && cycles.len() == 2
            && cycles.iter().all(|c| c.len() == 1)
            && map.curve[cycles[0][0]] != map.curve[cycles[1][0]]
    }))
}

/// A complementary region of a two-component curve with Euler
/// characteristic zero touching both components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnulusRegion {
    pub region: usize,
    pub chi: i64,
    pub contains_vertex: bool,
    pub cells: usize,
    /// Whether the region lies to the right of each component, travelled
    /// in its traversal direction.
    pub right_of: [bool; 2],
}

pub fn annulus_region(surf: &BoundaryTriangulation, c: &NormalCurve) -> Result<Vec<AnnulusRegion>> {
    same_surface(surf, c)?;
    if c.component_count() != 2 {
        return Err(Error::Invalid(format!("expected two components, found {}", c.component_count())));
    }
    let arr = single(surf, c);
    let mut touches = vec![[false; 2]; arr.regions.len()];
    let mut right = vec![[false; 2]; arr.regions.len()];
    for ch in &arr.chords {
        for &s in &ch.segments {
            touches[arr.region_of_dart(s)][ch.comp] = true;
            touches[arr.region_of_dart(s ^ 1)][ch.comp] = true;
        }
        if ch.step == 0 {
            right[arr.region_of_dart(ch.segments[0])][ch.comp] = true;
        }
    }
    Ok(arr
        .regions
        .iter()
        .enumerate()
        .filter(|(r, info)| info.chi == 0 && touches[*r] == [true, true])
        .map(|(r, info)| AnnulusRegion {
            region: r,
            chi: info.chi,
            contains_vertex: info.surface_vertices > 0,
            cells: info.faces.len(),
            right_of: right[r],
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArcType {
    TypeI,
    TypeII,
}

/// A stretch of another curve inside an annulus region, between two
/// crossings with its boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionArc {
    pub from: usize,
    pub to: usize,
    pub start_positive: bool,
    pub end_positive: bool,
    pub curve_component: usize,
}

/// Arcs of `s` inside the annulus region `gamma` of the two-component
/// curve `a`, after removing bigons that avoid the vertex.
pub fn region_arcs(
    surf: &BoundaryTriangulation,
    a: &NormalCurve,
    gamma: &AnnulusRegion,
    s: &NormalCurve,
) -> Result<Vec<RegionArc>> {
    same_surface(surf, s)?;
    if a.component_count() != 2 {
        return Err(Error::Invalid(format!("expected two components, found {}", a.component_count())));
    }
    let map = reduced(surf, a, s, ReductionMode::Trivial)?;
    let mut out = Vec::new();
    for v in 0..map.vertex_start.len() {
        if !map.vertex_alive[v] || map.is_bead(v) {
            continue;
        }
        let start = map.vertex_start[v];
        let comp = map.comp[start];
        let d = start + if gamma.right_of[comp] { 3 } else { 1 };
        let e = map.alpha[d];
        if e < d {
            continue;
        }
        let w = map.vertex_of_dart[e];
        out.push(RegionArc {
            from: comp,
            to: map.comp[map.vertex_start[w]],
            start_positive: map.positive[v],
            end_positive: map.positive[w],
            curve_component: map.comp[d],
        });
    }
    Ok(out)
}

/// Type I arcs turn opposite ways at their two ends: together with the
/// boundary they form the Reeb pattern.
pub fn classify_arc(arc: &RegionArc) -> Result<ArcType> {
    if arc.from == arc.to {
        return Err(Error::Invalid("arc has both endpoints on the same boundary component".into()));
    }
    Ok(if arc.start_positive != arc.end_positive { ArcType::TypeI } else { ArcType::TypeII })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionDiagnostics {
    pub type_i: usize,
    pub type_ii: usize,
    pub boundary_parallel: usize,
    /// Turn direction of type I arcs at the first component.
    pub coherence: Option<bool>,
    pub contains_vertex: bool,
    /// A Reeb pattern in a region missing the vertex.
    pub reeb_without_vertex: bool,
}

/// Classifies every arc of `s` in `gamma`. Type I arcs of both coherences
/// would carry a trivial circle; that is reported as an error.
pub fn classify_region_arcs(
    surf: &BoundaryTriangulation,
    a: &NormalCurve,
    gamma: &AnnulusRegion,
    s: &NormalCurve,
) -> Result<RegionDiagnostics> {
    let mut diag = RegionDiagnostics {
        type_i: 0,
        type_ii: 0,
        boundary_parallel: 0,
        coherence: None,
        contains_vertex: gamma.contains_vertex,
        reeb_without_vertex: false,
    };
    let mut coherences = [false; 2];
    for arc in region_arcs(surf, a, gamma, s)? {
        if arc.from == arc.to {
            diag.boundary_parallel += 1;
            continue;
        }
        match classify_arc(&arc)? {
            ArcType::TypeI => {
                diag.type_i += 1;
                let c = if arc.from == 0 { arc.start_positive } else { arc.end_positive };
                coherences[c as usize] = true;
            }
            ArcType::TypeII => diag.type_ii += 1,
        }
    }
    if coherences[0] && coherences[1] {
        return Err(Error::Invalid("type I arcs of opposite coherence: the region carries a trivial circle".into()));
    }
    if diag.type_i > 0 {
        diag.coherence = Some(coherences[1]);
        diag.reeb_without_vertex = !gamma.contains_vertex;
    }
    Ok(diag)
}
