//! Spiral types along annulus boundaries and twisting by annulus sums.
//!
//! A crossing of a curve `s` with a component of an annulus boundary is
//! positive when the normal resolution of the crossing turns right as one
//! travels along the annulus boundary. Reversing the boundary direction
//! swaps left and right and also swaps the half of the crossing one
//! arrives on, so the type does not depend on the direction.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::overlay::{Arrangement, Overlay};
use super::regions::{intersection_in_surface, is_trivial};
use super::NormalCurve;
use crate::error::{Error, Result};
use crate::triangulation::BoundaryTriangulation;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpiralCounts {
    pub positive: u64,
    pub negative: u64,
}

impl SpiralCounts {
    pub fn max(&self) -> u64 {
        self.positive.max(self.negative)
    }
}

fn reduced_overlay(surf: &BoundaryTriangulation, a: &NormalCurve, s: &NormalCurve) -> Arrangement {
    Overlay::new(surf, vec![a.clone(), s.clone()]).reduce_trivial()
}

/// Crossing types along each component of `a`, in traversal order.
pub fn sign_sequences(surf: &BoundaryTriangulation, s: &NormalCurve, a: &NormalCurve) -> Result<Vec<Vec<bool>>> {
    check(surf, s)?;
    check(surf, a)?;
    let arr = reduced_overlay(surf, a, s);
    let mut chords: Vec<&super::overlay::Chord> = arr.chords.iter().filter(|c| c.curve == 0).collect();
    chords.sort_by_key(|c| (c.comp, c.step));
    let mut out = vec![Vec::new(); a.component_count()];
    for ch in chords {
        out[ch.comp].extend(ch.crossings.iter().map(|&x| arr.crossings[x].positive));
    }
    Ok(out)
}

/// Positive and negative crossings of `s` with every component of `a`.
pub fn spiral_counts_all(surf: &BoundaryTriangulation, s: &NormalCurve, a: &NormalCurve) -> Result<Vec<SpiralCounts>> {
    Ok(sign_sequences(surf, s, a)?
        .into_iter()
        .map(|seq| {
            let positive = seq.iter().filter(|&&p| p).count() as u64;
            SpiralCounts { positive, negative: seq.len() as u64 - positive }
        })
        .collect())
}

/// Spiral counts of `s` along a connected curve.
pub fn spiral_counts(surf: &BoundaryTriangulation, s: &NormalCurve, alpha: &NormalCurve) -> Result<SpiralCounts> {
    if alpha.component_count() != 1 {
        return Err(Error::Invalid(format!("expected one component, found {}", alpha.component_count())));
    }
    Ok(spiral_counts_all(surf, s, alpha)?[0])
}

/// Number of annulus copies after which twisting no longer creates new
/// patterns.
pub fn stabilization_threshold(counts: &[SpiralCounts]) -> u64 {
    counts.iter().map(SpiralCounts::max).max().unwrap_or(0)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodPattern {
    /// Arcs running from one side of the annulus to the other.
    pub spirals: u64,
    /// Arcs returning to the side they started from.
    pub parallel: u64,
    pub closed: u64,
}

/// Resolves `copies` parallel core curves against transverse strands
/// whose crossing types are `signs`, in cyclic order along the core.
pub fn neighborhood_pattern(signs: &[bool], copies: u64) -> NeighborhoodPattern {
    let k = signs.len();
    let m = copies as usize;
    if k == 0 {
        return NeighborhoodPattern { spirals: 0, parallel: 0, closed: copies };
    }
    // Segments: strand (t, h) for h in 0..=m joins level h to level h + 1;
    // copy (h, t) for h in 1..=m joins strand t to strand t + 1.
    let strand = |t: usize, h: usize| t * (m + 1) + h;
    let copy_base = k * (m + 1);
    let copy = |h: usize, t: usize| copy_base + (h - 1) * k + t;
    let total = copy_base + m * k;
    let mut used = vec![false; total];

    // Port at a crossing: 0 down, 1 up, 2 back, 3 forward.
    let partner = |t: usize, port: u8| -> u8 {
        match (signs[t], port) {
            (true, 0) => 2,
            (true, 2) => 0,
            (true, 1) => 3,
            (true, 3) => 1,
            (false, 0) => 3,
            (false, 3) => 0,
            (false, 1) => 2,
            (false, 2) => 1,
            _ => unreachable!(),
        }
    };
    // Leaving crossing (t, h) through `port`: the segment and the port of
    // the next crossing, or None at an endpoint (with top flag).
    let leave = |t: usize, h: usize, port: u8| -> (usize, std::result::Result<(usize, usize, u8), bool>) {
        match port {
            0 => (strand(t, h - 1), if h == 1 { Err(false) } else { Ok((t, h - 1, 1)) }),
            1 => (strand(t, h), if h == m { Err(true) } else { Ok((t, h + 1, 0)) }),
            2 => {
                let p = (t + k - 1) % k;
                (copy(h, p), Ok((p, h, 3)))
            }
            _ => (copy(h, t), Ok(((t + 1) % k, h, 2))),
        }
    };
    let walk = |used: &mut Vec<bool>, mut t: usize, mut h: usize, mut port: u8| -> Option<bool> {
        loop {
            let out = partner(t, port);
            let (seg, next) = leave(t, h, out);
            if used[seg] {
                return None;
            }
            used[seg] = true;
            match next {
                Err(top) => return Some(top),
                Ok((t2, h2, p2)) => {
                    t = t2;
                    h = h2;
                    port = p2;
                }
            }
        }
    };

    let mut pat = NeighborhoodPattern::default();
    for bottom in [true, false] {
        for t in 0..k {
            let first = if bottom { strand(t, 0) } else { strand(t, m) };
            if used[first] {
                continue;
            }
            used[first] = true;
            let reached_top = if m == 0 {
                true
            } else if bottom {
                walk(&mut used, t, 1, 0).expect("open arc closed up")
            } else {
                walk(&mut used, t, m, 1).expect("open arc closed up")
            };
            if reached_top == bottom {
                pat.spirals += 1;
            } else {
                pat.parallel += 1;
            }
        }
    }
    for h in 1..=m {
        for t in 0..k {
            if used[copy(h, t)] {
                continue;
            }
            used[copy(h, t)] = true;
            let r = walk(&mut used, (t + 1) % k, h, 2);
            debug_assert!(r.is_none());
            pat.closed += 1;
        }
    }
    pat
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistResult {
    pub curve: NormalCurve,
    pub copies: u64,
    pub counts: Vec<SpiralCounts>,
    pub threshold: u64,
    pub stable: bool,
    /// Distinct intersection profiles of the essential components.
    pub profile: Vec<Vec<usize>>,
}

fn check(surf: &BoundaryTriangulation, c: &NormalCurve) -> Result<()> {
    if c.arcs.counts.len() != surf.triangle_count() {
        return Err(Error::Incompatible(format!(
            "curve has {} triangles, surface has {}",
            c.arcs.counts.len(),
            surf.triangle_count()
        )));
    }
    Ok(())
}

/// Intersection numbers of every essential component with the probes,
/// as a sorted set.
pub fn intersection_profile(
    surf: &BoundaryTriangulation,
    c: &NormalCurve,
    probes: &[NormalCurve],
) -> Result<Vec<Vec<usize>>> {
    let mut seen = BTreeSet::new();
    let mut out = BTreeSet::new();
    for comp in &c.components {
        let arcs = comp.arcs(surf.triangle_count());
        if !seen.insert(arcs.counts.clone()) {
            continue;
        }
        let curve = NormalCurve::new(surf, arcs)?;
        if is_trivial(surf, &curve)? {
            continue;
        }
        let row = probes.iter().map(|p| intersection_in_surface(surf, &curve, p)).collect::<Result<Vec<_>>>()?;
        out.insert(row);
    }
    Ok(out.into_iter().collect())
}

/// `s` plus `copies` copies of the annulus boundary `a`, with a stability
/// flag certified against the probe curves.
pub fn twist_sum(
    surf: &BoundaryTriangulation,
    s: &NormalCurve,
    a: &NormalCurve,
    copies: u64,
    probes: &[NormalCurve],
) -> Result<TwistResult> {
    check(surf, s)?;
    check(surf, a)?;
    let arcs = s.arcs.checked_add(&a.arcs.scaled(copies)?)?;
    let curve = NormalCurve::new(surf, arcs)?;
    let counts = spiral_counts_all(surf, s, a)?;
    let threshold = stabilization_threshold(&counts);
    let profile = intersection_profile(surf, &curve, probes)?;
    let stable = if copies >= threshold {
        let next = NormalCurve::new(surf, curve.arcs.checked_add(&a.arcs)?)?;
        intersection_profile(surf, &next, probes)? == profile
    } else {
        false
    };
    Ok(TwistResult { curve, copies, counts, threshold, stable, profile })
}
