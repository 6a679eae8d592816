//! Boundary curve sets of bounded-complexity surfaces, the gate constant for
//! a pair of manifolds, and evaluation of a gluing against it.
//!
//! Everything runs on a canonical relabeling of the input, so isomorphic
//! inputs give identical reports. Curves in reports are written in the
//! coordinates of the canonical triangulation embedded in the report.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::cache::Cache;
use crate::curves::{
    component_triviality, intersection_profile, isotopic, spiral_counts_all, stabilization_threshold, NormalCurve,
};
use crate::distance::{diameter_upper_bound, estimate_distance, hub_diameter_bound, TORUS_WARNING};
use crate::error::{Error, Result};
use crate::hilbert::{check_zero_efficiency, fundamental_solutions_cached, Classification, EnumOptions, Verdict};
use crate::normal::{BoundaryArcVector, NormalVector, SurfaceContext};
use crate::perm::Perm;
use crate::triangulation::{
    boundary_surface, parse_triangulation, serialize_triangulation, BoundaryTriangulation, Gluing, Triangulation,
};

pub const SCHEMA_VERSION: u32 = 1;

/// The relabeling of `tri` with lexicographically smallest text among those
/// reached by breadth-first search with identity gluing permutations.
pub fn canonical_form(tri: &Triangulation) -> Triangulation {
    let n = tri.size();
    let mut best: Option<(String, Triangulation)> = None;
    for start in 0..n {
        for p in Perm::all() {
            let mut tet_map = vec![usize::MAX; n];
            let mut maps = vec![Perm::new([0, 1, 2, 3]).unwrap(); n];
            let mut order = vec![start];
            tet_map[start] = 0;
            maps[start] = p;
            let mut i = 0;
            while i < order.len() {
                let t = order[i];
                let inv = maps[t].inverse();
                for f in 0..4u8 {
                    if let Gluing::Glued { tet, perm, .. } = tri.gluing(t, inv.apply(f)) {
                        if tet_map[tet] == usize::MAX {
                            tet_map[tet] = order.len();
                            maps[tet] = maps[t].compose(perm.inverse());
                            order.push(tet);
                        }
                    }
                }
                i += 1;
            }
            let relabeled = tri.relabeled(&tet_map, &maps).expect("relabeling a valid triangulation");
            let text = serialize_triangulation(&relabeled);
            if best.as_ref().is_none_or(|(b, _)| text < *b) {
                best = Some((text, relabeled));
            }
        }
    }
    best.expect("nonempty triangulation").1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusRecord {
    pub heegaard_genus: u64,
    pub boundary_genus: u64,
    pub source: String,
}

/// Combines a user-supplied Heegaard genus with the boundary genus.
pub fn heegaard_genus_input(tri: &Triangulation, user: Option<u64>) -> Result<GenusRecord> {
    let heegaard_genus = user.ok_or_else(|| Error::Invalid("missing Heegaard genus".into()))?;
    let boundary_genus = boundary_surface(tri)?.genus() as u64;
    if heegaard_genus < boundary_genus {
        return Err(Error::Invalid(format!(
            "Heegaard genus {heegaard_genus} is below the boundary genus {boundary_genus}"
        )));
    }
    Ok(GenusRecord { heegaard_genus, boundary_genus, source: "user".into() })
}

/// `2(g1 + g2 - gF) - 2`.
pub fn euler_bound(g1: u64, g2: u64, boundary_genus: u64) -> Result<u64> {
    let glued = (g1 + g2).checked_sub(boundary_genus).filter(|&g| g >= 1);
    glued.map(|g| 2 * g - 2).ok_or_else(|| Error::Invalid("genus data give a negative bound".into()))
}

mod nc_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::normal::{parse_arc_vector, serialize_arc_vector, BoundaryArcVector};

    pub fn serialize<S: Serializer>(a: &BoundaryArcVector, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&serialize_arc_vector(a))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BoundaryArcVector, D::Error> {
        let text = String::deserialize(d)?;
        parse_arc_vector(&text).map_err(serde::de::Error::custom)
    }
}

/// How a curve was generated: fundamental solution indices with
/// coefficients, and optionally a number of copies of an annulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub combination: Vec<(usize, u64)>,
    pub annulus: Option<usize>,
    pub copies: u64,
    pub stable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CkCurve {
    #[serde(with = "nc_text")]
    pub nc: BoundaryArcVector,
    pub weight: u64,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CkStats {
    pub fundamental: usize,
    pub family: usize,
    pub annuli: usize,
    /// Annuli whose boundary components are not isotopic in the boundary,
    /// so the annulus is not boundary-parallel.
    pub nonparallel_annuli: usize,
    pub combinations: usize,
    pub depth_limit: u64,
    pub max_depth: u64,
    /// Admissible combinations one step past the depth limit that the
    /// bound on coefficient sums excludes.
    pub excluded_deeper: usize,
    pub twists: usize,
    pub unstable_twists: usize,
    /// Curves dropped for having two or more trivial components.
    pub discarded_trivial: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CkResult {
    pub triangulation: String,
    pub k: u64,
    pub boundary_genus: u64,
    pub curves: Vec<CkCurve>,
    pub diameter_bound: f64,
    pub diameter_ceiling: u64,
    pub diameter_method: DiameterMethod,
    pub degenerate: bool,
    pub efficiency: Verdict,
    pub stats: CkStats,
    pub warnings: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiameterMethod {
    /// Largest bound over all pairs.
    Pairwise,
    /// Two largest bounds from the best of a few low-weight hub curves.
    Hub,
}

#[derive(Clone, Debug)]
pub struct CkOptions {
    pub enumeration: EnumOptions,
    /// Build even when the 0-efficiency check does not pass.
    pub allow_inefficient: bool,
    pub max_combinations: usize,
    /// Twists tried past the threshold while waiting for stability.
    pub extra_twists: u64,
    /// Largest curve set whose diameter is bounded pairwise.
    pub pairwise_limit: usize,
    pub cache: Option<Cache>,
}

impl Default for CkOptions {
    fn default() -> Self {
        CkOptions {
            enumeration: EnumOptions::default(),
            allow_inefficient: false,
            max_combinations: 200_000,
            extra_twists: 5,
            pairwise_limit: 150,
            cache: None,
        }
    }
}

/// Per-tetrahedron exceptional piece and octagon total of a running sum.
#[derive(Clone)]
struct Support {
    pieces: Vec<Option<(usize, bool)>>,
    octagons: u64,
}

impl Support {
    fn new(tets: usize) -> Self {
        Support { pieces: vec![None; tets], octagons: 0 }
    }

    fn add(&self, x: &NormalVector, times: u64) -> Option<Support> {
        let mut out = self.clone();
        out.octagons += x.octagon_count() * times;
        if out.octagons > 1 {
            return None;
        }
        for t in 0..x.tets() {
            if let Some((q, oct, _)) = x.exceptional(t) {
                match out.pieces[t] {
                    None => out.pieces[t] = Some((q, oct)),
                    Some(p) if p == (q, oct) => {}
                    Some(_) => return None,
                }
            }
        }
        Some(out)
    }
}

struct Member {
    index: usize,
    vector: NormalVector,
    chi: i64,
    arcs: BoundaryArcVector,
}

struct Combination {
    coefs: Vec<(usize, u64)>,
    support: Support,
    arcs: BoundaryArcVector,
}

/// All admissible multisets of family members with coefficient sum at most
/// `limit` and Euler characteristic at least `-k`.
fn combinations(
    family: &[Member],
    tets: usize,
    triangles: usize,
    limit: u64,
    k: u64,
    cap: usize,
    stats: &mut CkStats,
) -> Result<Vec<Combination>> {
    struct Walk<'a> {
        family: &'a [Member],
        limit: u64,
        k: i64,
        cap: usize,
        out: Vec<Combination>,
        stats: &'a mut CkStats,
    }
    impl Walk<'_> {
        fn go(
            &mut self,
            from: usize,
            depth: u64,
            chi: i64,
            picks: &mut Vec<usize>,
            support: &Support,
            arcs: &BoundaryArcVector,
        ) -> Result<()> {
            for j in from..self.family.len() {
                let m = &self.family[j];
                let Some(next) = support.add(&m.vector, 1) else {
                    continue;
                };
                let chi2 = chi + m.chi;
                if depth + 1 > self.limit {
                    // The path to this point is admissible; count what the
                    // depth bound cuts off.
                    if chi2 >= -self.k {
                        self.stats.excluded_deeper += 1;
                    }
                    continue;
                }
                let arcs2 = arcs.checked_add(&m.arcs)?;
                picks.push(m.index);
                if chi2 >= -self.k {
                    let mut coefs: BTreeMap<usize, u64> = BTreeMap::new();
                    for &p in picks.iter() {
                        *coefs.entry(p).or_default() += 1;
                    }
                    self.stats.max_depth = self.stats.max_depth.max(depth + 1);
                    self.out.push(Combination {
                        coefs: coefs.into_iter().collect(),
                        support: next.clone(),
                        arcs: arcs2.clone(),
                    });
                    if self.out.len() > self.cap {
                        return Err(Error::ResourceCap(format!("more than {} surface combinations", self.cap)));
                    }
                }
                self.go(j, depth + 1, chi2, picks, &next, &arcs2)?;
                picks.pop();
            }
            Ok(())
        }
    }
    let mut walk = Walk { family, limit, k: k as i64, cap, out: Vec::new(), stats };
    walk.go(0, 0, 0, &mut Vec::new(), &Support::new(tets), &BoundaryArcVector::zero(triangles))?;
    Ok(walk.out)
}

/// Essential components of a curve after stripping at most one trivial
/// component; `None` when two or more are trivial.
fn essential_components(surf: &BoundaryTriangulation, c: &NormalCurve) -> Result<Option<Vec<NormalCurve>>> {
    let trivial = component_triviality(surf, c)?;
    if trivial.iter().filter(|&&t| t).count() >= 2 {
        return Ok(None);
    }
    let mut out = Vec::new();
    for (i, t) in trivial.into_iter().enumerate() {
        if !t {
            out.push(c.component_curve(surf, i)?);
        }
    }
    Ok(Some(out))
}

/// The vertex link and the essential boundary components of the annuli.
fn probe_curves(surf: &BoundaryTriangulation, annuli: &[NormalCurve]) -> Result<Vec<NormalCurve>> {
    let mut seen = BTreeSet::new();
    let mut probes = Vec::new();
    let link = BoundaryArcVector::vertex_link(surf.triangle_count());
    seen.insert(link.counts.clone());
    probes.push(NormalCurve::new(surf, link)?);
    for c in annuli {
        for comp in essential_components(surf, c)?.unwrap_or_default() {
            if seen.insert(comp.arcs.counts.clone()) {
                probes.push(comp);
            }
        }
    }
    Ok(probes)
}

/// The curve set of surfaces with Euler characteristic at least `-k`,
/// with its diameter bound.
pub fn build_ck(tri: &Triangulation, k: u64, opts: &CkOptions) -> Result<CkResult> {
    let tri = canonical_form(tri);
    if !tri.is_one_vertex() {
        return Err(Error::Invalid("triangulation has more than one vertex".into()));
    }
    let surf = boundary_surface(&tri)?;
    let ctx = SurfaceContext::new(&tri);
    let mut warnings = Vec::new();
    let efficiency = check_zero_efficiency(&tri, &opts.enumeration)?.verdict;
    if efficiency != Verdict::Pass {
        if !opts.allow_inefficient {
            return Err(Error::Invalid(format!("0-efficiency check gave {efficiency}")));
        }
        warnings.push(format!("0-efficiency check gave {efficiency}; continuing by user override"));
    }
    if surf.genus() < 2 {
        warnings.push(TORUS_WARNING.to_string());
    }
    let set = fundamental_solutions_cached(&tri, &opts.enumeration, opts.cache.as_ref())?;
    let vectors = set.vectors();
    let mut stats = CkStats { fundamental: vectors.len(), depth_limit: 2 + k, ..Default::default() };

    let family: Vec<Member> = set
        .solutions
        .iter()
        .enumerate()
        .filter(|(_, s)| {
            s.boundary_components > 0 && !matches!(s.class, Classification::Annulus | Classification::VertexLinkDisk)
        })
        .map(|(index, s)| Member { index, vector: s.vector.clone(), chi: s.chi, arcs: ctx.boundary_arcs(&s.vector) })
        .collect();
    let annuli: Vec<(usize, &NormalVector, NormalCurve)> = set
        .solutions
        .iter()
        .enumerate()
        .filter(|(_, s)| s.class == Classification::Annulus)
        .map(|(i, s)| Ok((i, &s.vector, NormalCurve::new(&surf, ctx.boundary_arcs(&s.vector))?)))
        .collect::<Result<_>>()?;
    stats.family = family.len();
    stats.annuli = annuli.len();
    for (_, _, boundary) in &annuli {
        let parallel = boundary.component_count() == 2
            && isotopic(&surf, &boundary.component_curve(&surf, 0)?, &boundary.component_curve(&surf, 1)?)?;
        if !parallel {
            stats.nonparallel_annuli += 1;
        }
    }
    if stats.nonparallel_annuli > 0 {
        warnings.push(format!(
            "{} fundamental annuli have non-parallel boundary components, so the manifold is not simple or an annulus is not boundary-parallel",
            stats.nonparallel_annuli
        ));
    }

    let combos = combinations(&family, tri.size(), surf.triangle_count(), 2 + k, k, opts.max_combinations, &mut stats)?;
    stats.combinations = combos.len();
    let boundaries: Vec<NormalCurve> = annuli.iter().map(|a| a.2.clone()).collect();
    let probes = probe_curves(&surf, &boundaries)?;

    let mut curves: BTreeMap<Vec<[u64; 3]>, CkCurve> = BTreeMap::new();
    let mut keep = |c: &NormalCurve, provenance: &Provenance, stats: &mut CkStats| -> Result<()> {
        match essential_components(&surf, c)? {
            None => stats.discarded_trivial += 1,
            Some(parts) => {
                for p in parts {
                    curves.entry(p.arcs.counts.clone()).or_insert_with(|| CkCurve {
                        weight: p.weight(&surf),
                        nc: p.arcs.clone(),
                        provenance: provenance.clone(),
                    });
                }
            }
        }
        Ok(())
    };
    // Combinations with the same boundary and the same compatible annuli
    // generate the same curves.
    let mut done = BTreeSet::new();
    for combo in &combos {
        let compatible: Vec<usize> =
            (0..annuli.len()).filter(|&a| combo.support.add(annuli[a].1, 1).is_some()).collect();
        if !done.insert((combo.arcs.counts.clone(), compatible.clone())) {
            continue;
        }
        let s = NormalCurve::new(&surf, combo.arcs.clone())?;
        let base = Provenance { combination: combo.coefs.clone(), annulus: None, copies: 0, stable: true };
        keep(&s, &base, &mut stats)?;
        for &a in &compatible {
            let (index, _, ref boundary) = annuli[a];
            stats.twists += 1;
            let threshold = stabilization_threshold(&spiral_counts_all(&surf, &s, boundary)?);
            let twisted = |m: u64| -> Result<NormalCurve> {
                NormalCurve::new(&surf, s.arcs.checked_add(&boundary.arcs.scaled(m)?)?)
            };
            let mut stable = false;
            let mut previous: Option<Vec<Vec<usize>>> = None;
            for m in 1..=threshold.max(1) + opts.extra_twists {
                let c = twisted(m)?;
                // Stable once two consecutive profiles from the threshold on agree.
                if m >= threshold {
                    let profile = intersection_profile(&surf, &c, &probes)?;
                    stable = previous.as_ref() == Some(&profile);
                    previous = Some(profile);
                }
                let prov = Provenance { combination: combo.coefs.clone(), annulus: Some(index), copies: m, stable };
                keep(&c, &prov, &mut stats)?;
                if stable {
                    break;
                }
            }
            if !stable {
                stats.unstable_twists += 1;
            }
        }
    }
    let curves: Vec<CkCurve> = curves.into_values().collect();
    let degenerate = curves.is_empty();
    let (diameter_bound, diameter_method) = if degenerate {
        warnings.push("no essential boundary curves: the curve set is degenerate".into());
        (0.0, DiameterMethod::Pairwise)
    } else {
        let cs = curves.iter().map(|c| NormalCurve::new(&surf, c.nc.clone())).collect::<Result<Vec<_>>>()?;
        if cs.len() <= opts.pairwise_limit {
            (diameter_upper_bound(&surf, &cs)?, DiameterMethod::Pairwise)
        } else {
            let mut hubs: Vec<usize> = (0..cs.len()).collect();
            hubs.sort_by_key(|&i| (curves[i].weight, i));
            let mut best = f64::INFINITY;
            for &h in hubs.iter().take(3) {
                best = best.min(hub_diameter_bound(&surf, &cs, h)?);
            }
            warnings.push(format!("{} curves: diameter bounded through a hub curve", cs.len()));
            (best, DiameterMethod::Hub)
        }
    };
    if stats.unstable_twists > 0 {
        warnings.push(format!("{} annulus twists did not stabilize within the extra range", stats.unstable_twists));
    }
    Ok(CkResult {
        triangulation: serialize_triangulation(&tri),
        k,
        boundary_genus: surf.genus() as u64,
        curves,
        diameter_bound,
        diameter_ceiling: diameter_bound.ceil() as u64,
        diameter_method,
        degenerate,
        efficiency,
        stats,
        warnings,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GateGenus {
    pub g1: u64,
    pub g2: u64,
    pub boundary_genus: u64,
    pub glued_genus: u64,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Derivation {
    #[serde(rename = "D1")]
    pub d1: f64,
    #[serde(rename = "D2")]
    pub d2: f64,
    pub slack: u64,
    pub formula: String,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GateCertificate {
    pub schema_version: u32,
    pub kind: String,
    pub genus: GateGenus,
    pub k: u64,
    pub sides: [CkResult; 2],
    #[serde(rename = "N")]
    pub n: f64,
    pub derivation: Derivation,
    pub assumptions: Vec<String>,
}

pub fn standing_assumptions() -> Vec<String> {
    [
        "Heegaard genera are user input and are not verified",
        "the manifolds are assumed simple; this is not verified",
        "fundamental annuli are assumed boundary-parallel and incompressible; this is not verified",
        "the annulus family is the fundamental annuli with boundary-level bigon reduction only, so the curve sets and N are relative to the implemented family",
        "almost normal surfaces use at most one octagon; tubed pieces are not enumerated",
        "distance upper bounds are logarithmic bounds in the intersection number, not exact distances",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

/// Gate constant `N = D1 + D2 + k` for gluing the boundaries of two
/// manifolds.
pub fn build_gate(
    tri1: &Triangulation,
    tri2: &Triangulation,
    g1: Option<u64>,
    g2: Option<u64>,
    opts: &CkOptions,
) -> Result<GateCertificate> {
    let r1 = heegaard_genus_input(tri1, g1)?;
    let r2 = heegaard_genus_input(tri2, g2)?;
    if r1.boundary_genus != r2.boundary_genus {
        return Err(Error::Invalid(format!(
            "boundary genus mismatch: {} and {}",
            r1.boundary_genus, r2.boundary_genus
        )));
    }
    let gf = r1.boundary_genus;
    let k = euler_bound(r1.heegaard_genus, r2.heegaard_genus, gf)?;
    let c1 = build_ck(tri1, k, opts)?;
    let c2 = build_ck(tri2, k, opts)?;
    for (i, c) in [&c1, &c2].iter().enumerate() {
        if c.degenerate {
            return Err(Error::Invalid(format!("curve set of manifold {} is empty", i + 1)));
        }
    }
    let mut assumptions = standing_assumptions();
    for (i, c) in [&c1, &c2].iter().enumerate() {
        assumptions.push(format!("0-efficiency of manifold {}: {}", i + 1, c.efficiency));
    }
    let (d1, d2) = (c1.diameter_bound, c2.diameter_bound);
    Ok(GateCertificate {
        schema_version: SCHEMA_VERSION,
        kind: "gate".into(),
        genus: GateGenus {
            g1: r1.heegaard_genus,
            g2: r2.heegaard_genus,
            boundary_genus: gf,
            glued_genus: r1.heegaard_genus + r2.heegaard_genus - gf,
            source: "user".into(),
        },
        k,
        n: d1 + d2 + k as f64,
        derivation: Derivation {
            d1,
            d2,
            slack: k,
            formula: "N = D1 + D2 + k, k = 2(g1 + g2 - gF) - 2".into(),
            label: "derived".into(),
        },
        sides: [c1, c2],
        assumptions,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum GateVerdict {
    GuaranteedAmalgamation,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub schema_version: u32,
    pub kind: String,
    #[serde(rename = "N")]
    pub n: f64,
    /// Smallest certified lower tier over all pairs.
    pub lower: u8,
    /// Smallest upper bound over all pairs.
    pub upper: f64,
    pub pairs: usize,
    pub verdict: GateVerdict,
    /// `N - lower` when inconclusive.
    pub gap: Option<f64>,
    pub assumptions: Vec<String>,
}

/// Compares the declared images of the first curve set with the second
/// curve set, in the coordinates of the second canonical triangulation.
pub fn evaluate_gluing(cert: &GateCertificate, images: &[BoundaryArcVector]) -> Result<EvaluationReport> {
    let side1 = &cert.sides[0];
    let side2 = &cert.sides[1];
    if images.len() != side1.curves.len() {
        return Err(Error::Invalid(format!("expected {} image curves, found {}", side1.curves.len(), images.len())));
    }
    let tri2 = parse_triangulation(&side2.triangulation)?;
    let surf = boundary_surface(&tri2)?;
    let targets = side2.curves.iter().map(|c| NormalCurve::new(&surf, c.nc.clone())).collect::<Result<Vec<_>>>()?;
    let mut lower = u8::MAX;
    let mut upper = f64::INFINITY;
    let mut pairs = 0;
    for img in images {
        let c = NormalCurve::new(&surf, img.clone())?;
        for t in &targets {
            let e = estimate_distance(&surf, &c, t)?;
            lower = lower.min(e.lower);
            upper = upper.min(e.upper);
            pairs += 1;
        }
    }
    if pairs == 0 {
        return Err(Error::Invalid("no curve pairs to compare".into()));
    }
    let guaranteed = lower as f64 > cert.n;
    Ok(EvaluationReport {
        schema_version: SCHEMA_VERSION,
        kind: "evaluation".into(),
        n: cert.n,
        lower,
        upper,
        pairs,
        verdict: if guaranteed { GateVerdict::GuaranteedAmalgamation } else { GateVerdict::Inconclusive },
        gap: if guaranteed { None } else { Some(cert.n - lower as f64) },
        assumptions: cert.assumptions.clone(),
    })
}
