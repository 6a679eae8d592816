//! Bounds on curve complex distances between boundary curves.
//!
//! Lower bounds come in tiers, each backed by a test on the pair: 0 when the
//! curves are isotopic, 1 when they are not, 2 when they cannot be made
//! disjoint, 3 when together they fill the surface. Upper bounds use
//! Hempel's logarithmic estimate in the minimal intersection number.

use serde::{Deserialize, Serialize};

use crate::curves::{fills, intersection_in_surface, is_trivial, isotopic, NormalCurve};
use crate::error::{Error, Result};
use crate::triangulation::BoundaryTriangulation;

/// `2 + 2 log₂ k` for `k ≥ 1`, and 1 for disjoint curves.
pub fn hempel_upper_bound(k: u64) -> f64 {
    if k == 0 {
        1.0
    } else {
        2.0 + 2.0 * (k as f64).log2()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Certificate {
    Isotopic,
    NotIsotopic,
    Disjoint,
    Intersecting,
    Filling,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceEstimate {
    pub lower: u8,
    pub upper: f64,
    pub upper_ceiling: u64,
    /// Minimal intersection number in the boundary surface.
    pub intersection: usize,
    pub certificates: Vec<Certificate>,
    pub warnings: Vec<String>,
}

pub const TORUS_WARNING: &str =
    "boundary is a torus: the curve complex convention differs there, so the filling tier is not used";

fn check_essential(surf: &BoundaryTriangulation, c: &NormalCurve) -> Result<()> {
    if c.component_count() != 1 {
        return Err(Error::Invalid(format!("expected a connected curve, found {} components", c.component_count())));
    }
    if is_trivial(surf, c)? {
        return Err(Error::Invalid("curve bounds a disk".into()));
    }
    Ok(())
}

pub fn estimate_distance(surf: &BoundaryTriangulation, c1: &NormalCurve, c2: &NormalCurve) -> Result<DistanceEstimate> {
    check_essential(surf, c1)?;
    check_essential(surf, c2)?;
    // A fixed argument order makes the estimate symmetric.
    let (a, b) = if c1.arcs <= c2.arcs { (c1, c2) } else { (c2, c1) };
    let mut warnings = Vec::new();
    let genus = surf.genus();
    if genus < 2 {
        warnings.push(TORUS_WARNING.to_string());
    }
    if isotopic(surf, a, b)? {
        return Ok(DistanceEstimate {
            lower: 0,
            upper: 0.0,
            upper_ceiling: 0,
            intersection: 0,
            certificates: vec![Certificate::Isotopic],
            warnings,
        });
    }
    let k = intersection_in_surface(surf, a, b)?;
    let mut certificates = vec![Certificate::NotIsotopic];
    let mut lower = 1;
    if k == 0 {
        certificates.push(Certificate::Disjoint);
    } else {
        certificates.push(Certificate::Intersecting);
        lower = 2;
        if genus >= 2 && fills(surf, a, b)? {
            certificates.push(Certificate::Filling);
            lower = 3;
        }
    }
    let upper = hempel_upper_bound(k as u64).max(lower as f64);
    Ok(DistanceEstimate { lower, upper, upper_ceiling: upper.ceil() as u64, intersection: k, certificates, warnings })
}

/// Largest pairwise upper bound over a finite set of essential curves.
pub fn diameter_upper_bound(surf: &BoundaryTriangulation, curves: &[NormalCurve]) -> Result<f64> {
    if curves.is_empty() {
        return Err(Error::Invalid("empty curve set".into()));
    }
    for c in curves {
        check_essential(surf, c)?;
    }
    let mut best = 0.0f64;
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            best = best.max(estimate_distance(surf, &curves[i], &curves[j])?.upper);
        }
    }
    Ok(best)
}

/// Diameter bound through a hub curve: the sum of the two largest upper
/// bounds from the hub. Linear in the number of curves.
pub fn hub_diameter_bound(surf: &BoundaryTriangulation, curves: &[NormalCurve], hub: usize) -> Result<f64> {
    let h = curves.get(hub).ok_or_else(|| Error::Invalid("hub index out of range".into()))?;
    let mut top = [0.0f64; 2];
    for (i, c) in curves.iter().enumerate() {
        if i == hub {
            continue;
        }
        let u = estimate_distance(surf, h, c)?.upper;
        if u > top[0] {
            top = [u, top[0]];
        } else if u > top[1] {
            top[1] = u;
        }
    }
    Ok(top[0] + top[1])
}
