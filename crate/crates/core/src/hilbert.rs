//! Fundamental and vertex solutions of the admissible solution cone.
//!
//! Admissible vectors use at most one quad or octagon type per tetrahedron
//! and at most one octagon overall, so their supports fall into finitely
//! many coordinate faces. Each face is a plain polyhedral cone: its extreme
//! rays come from double description and its Hilbert basis from the lattice
//! points of the simplicial cones those rays span.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::curves::NormalCurve;
use crate::error::{Error, Result};
use crate::normal::{oct_index, quad_index, tri_index, MatchingSystem, NormalVector, SurfaceContext, COORDS_PER_TET};
use crate::triangulation::{boundary_surface, BoundaryTriangulation, Triangulation};

/// What a face allows in one tetrahedron besides its triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PieceChoice {
    NoQuad,
    Quad(u8),
    Octagon(u8),
}

/// A coordinate face of the cone that contains only admissible vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SupportFace {
    pub choices: Vec<PieceChoice>,
}

impl SupportFace {
    /// Global coordinate indices allowed by the face, ascending.
    pub fn columns(&self) -> Vec<usize> {
        let mut cols = Vec::with_capacity(5 * self.choices.len());
        for (t, c) in self.choices.iter().enumerate() {
            for v in 0..4u8 {
                cols.push(tri_index(t, v));
            }
            match *c {
                PieceChoice::NoQuad => {}
                PieceChoice::Quad(q) => cols.push(quad_index(t, q as usize)),
                PieceChoice::Octagon(q) => cols.push(oct_index(t, q as usize)),
            }
        }
        cols.sort_unstable();
        cols
    }

    pub fn octagon_column(&self) -> Option<usize> {
        self.choices.iter().enumerate().find_map(|(t, c)| match *c {
            PieceChoice::Octagon(q) => Some(oct_index(t, q as usize)),
            _ => None,
        })
    }

    pub fn contains(&self, x: &NormalVector) -> bool {
        if x.tets() != self.choices.len() {
            return false;
        }
        let cols: HashSet<usize> = self.columns().into_iter().collect();
        x.coords.iter().enumerate().all(|(i, &c)| c == 0 || cols.contains(&i))
    }

    pub fn is_maximal(&self) -> bool {
        self.choices.iter().all(|c| *c != PieceChoice::NoQuad)
    }
}

/// The smallest face holding the support of an admissible vector.
pub fn support_face_of(x: &NormalVector) -> Result<SupportFace> {
    if !crate::normal::is_admissible(x) {
        return Err(Error::NotSurface("inadmissible vector".into()));
    }
    let choices = (0..x.tets())
        .map(|t| match x.exceptional(t) {
            None => PieceChoice::NoQuad,
            Some((q, false, _)) => PieceChoice::Quad(q as u8),
            Some((q, true, _)) => PieceChoice::Octagon(q as u8),
        })
        .collect();
    Ok(SupportFace { choices })
}

/// Faces choosing a quad type in every tetrahedron, or an octagon in exactly
/// one tetrahedron and quads elsewhere. With `octagons` false only the
/// former.
pub fn maximal_support_faces(tets: usize, octagons: bool) -> Vec<SupportFace> {
    let mut out = Vec::new();
    let slots: Vec<Option<usize>> =
        if octagons { std::iter::once(None).chain((0..tets).map(Some)).collect() } else { vec![None] };
    for oct_tet in slots {
        let total = 3usize.pow(tets as u32);
        for code in 0..total {
            let mut c = code;
            let choices = (0..tets)
                .map(|t| {
                    let q = (c % 3) as u8;
                    c /= 3;
                    if Some(t) == oct_tet {
                        PieceChoice::Octagon(q)
                    } else {
                        PieceChoice::Quad(q)
                    }
                })
                .collect();
            out.push(SupportFace { choices });
        }
    }
    out
}

/// Limits for the enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumOptions {
    /// Maximum number of rays or candidate vectors in one face.
    pub cap: usize,
    /// Include faces with an octagon.
    pub octagons: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { cap: 200_000, octagons: true }
    }
}

/// The matching equations restricted to a face, as dense rows over the
/// face's columns, without zero or repeated rows.
fn restrict(sys: &MatchingSystem, cols: &[usize]) -> Vec<Vec<i64>> {
    let mut local = vec![usize::MAX; sys.columns];
    for (i, &c) in cols.iter().enumerate() {
        local[c] = i;
    }
    let mut rows = BTreeSet::new();
    for row in &sys.rows {
        let mut dense = vec![0i64; cols.len()];
        for &(c, k) in row {
            if local[c] != usize::MAX {
                dense[local[c]] += k;
            }
        }
        if dense.iter().any(|&k| k != 0) {
            // A row and its negation define the same equation.
            let first = dense.iter().find(|&&k| k != 0).copied().unwrap();
            if first < 0 {
                dense.iter_mut().for_each(|k| *k = -*k);
            }
            rows.insert(dense);
        }
    }
    rows.into_iter().collect()
}

/// Hilbert basis of the face cone `rows · x = 0, x ≥ 0`.
///
/// Every basis element is an extreme ray or lies in the half-open
/// parallelepiped of some simplicial cone spanned by `rank` independent
/// rays: a coefficient of one or more would let the ray split off. The
/// candidates are collected over all such simplicial cones and reduced to
/// the elements not dominating another.
fn face_hilbert_basis(rows: &[Vec<i64>], dim: usize, cap: usize) -> Result<Vec<Vec<u64>>> {
    let rays = face_rays(rows, dim, cap)?;
    if rays.is_empty() {
        return Ok(Vec::new());
    }
    let rank = ray_rank(&rays, dim);
    let mut candidates: BTreeSet<Vec<u64>> = rays.iter().cloned().collect();
    for subset in combinations(rays.len(), rank) {
        let gens: Vec<&Vec<u64>> = subset.iter().map(|&i| &rays[i]).collect();
        parallelepiped_points(&gens, dim, cap, &mut candidates)?;
        if candidates.len() > cap {
            return Err(Error::ResourceCap(format!("more than {cap} candidate vectors in one face")));
        }
    }
    let mut sorted: Vec<Vec<u64>> = candidates.into_iter().collect();
    sorted.sort_by_key(|x| x.iter().sum::<u64>());
    let mut basis: Vec<Vec<u64>> = Vec::new();
    for x in sorted {
        if !basis.iter().any(|b| b.iter().zip(&x).all(|(p, q)| p <= q)) {
            basis.push(x);
        }
    }
    Ok(basis)
}

/// Index sets of size `k` from `0..n`, in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn overflow() -> Error {
    Error::ResourceCap("integer overflow in lattice computation".into())
}

/// Adds the nonzero lattice points `Σ λ_i g_i`, `0 ≤ λ_i < 1`, to `out`.
/// Skips dependent generator sets.
///
/// Row and column operations bring the generator matrix `G` to diagonal
/// form `A = P G Q`. A rational combination `λ G` is integral exactly when
/// `ν = λ P⁻¹` has `ν_i a_ii` integral, so the points come from
/// `ν_i = t_i / a_ii` and `λ = ν P` reduced modulo one.
fn parallelepiped_points(gens: &[&Vec<u64>], dim: usize, cap: usize, out: &mut BTreeSet<Vec<u64>>) -> Result<()> {
    let k = gens.len();
    let mut a: Vec<Vec<i128>> = gens.iter().map(|g| g.iter().map(|&x| x as i128).collect()).collect();
    let mut p: Vec<Vec<i128>> = (0..k).map(|i| (0..k).map(|j| (i == j) as i128).collect()).collect();
    for t in 0..k {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..k {
                for j in t..dim {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return Ok(());
            };
            a.swap(t, bi);
            p.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let pivot = a[t][t];
            let mut clean = true;
            for i in t + 1..k {
                let q = a[i][t] / pivot;
                if q != 0 {
                    for j in 0..dim {
                        a[i][j] =
                            a[i][j].checked_sub(q.checked_mul(a[t][j]).ok_or_else(overflow)?).ok_or_else(overflow)?;
                    }
                    for j in 0..k {
                        p[i][j] =
                            p[i][j].checked_sub(q.checked_mul(p[t][j]).ok_or_else(overflow)?).ok_or_else(overflow)?;
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..dim {
                let q = a[t][j] / pivot;
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] =
                            row[j].checked_sub(q.checked_mul(row[t]).ok_or_else(overflow)?).ok_or_else(overflow)?;
                    }
                }
                clean &= a[t][j] == 0;
            }
            if clean {
                break;
            }
        }
    }
    let diag: Vec<i128> = (0..k).map(|i| a[i][i].abs()).collect();
    let count = diag.iter().try_fold(1i128, |acc, &d| acc.checked_mul(d)).ok_or_else(overflow)?;
    if count > cap as i128 {
        return Err(Error::ResourceCap(format!("simplicial cone of index {count}")));
    }
    let denom = diag.iter().fold(1i128, |l, &d| l.lcm(&d));
    let mut t = vec![0i128; k];
    loop {
        // λ scaled by `denom`, reduced into [0, denom).
        let mut lambda = vec![0i128; k];
        for i in 0..k {
            if t[i] == 0 {
                continue;
            }
            let scale = t[i] * (denom / diag[i]);
            for j in 0..k {
                lambda[j] += scale * p[i][j];
            }
        }
        if lambda.iter().any(|&l| l.rem_euclid(denom) != 0) {
            let x: Vec<u64> = (0..dim)
                .map(|c| {
                    let num: i128 = (0..k).map(|i| lambda[i].rem_euclid(denom) * gens[i][c] as i128).sum();
                    debug_assert_eq!(num % denom, 0);
                    (num / denom) as u64
                })
                .collect();
            out.insert(x);
        }
        let mut i = 0;
        while i < k {
            t[i] += 1;
            if t[i] < diag[i] {
                break;
            }
            t[i] = 0;
            i += 1;
        }
        if i == k {
            return Ok(());
        }
    }
}

/// Rank over the rationals, by fraction-free elimination.
fn ray_rank(rays: &[Vec<u64>], dim: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rays.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let (a, b) = (m[rank][col].clone(), m[i][col].clone());
            for j in 0..dim {
                m[i][j] = &m[i][j] * &a - &m[rank][j] * &b;
            }
        }
        rank += 1;
    }
    rank
}

fn to_global(tets: usize, cols: &[usize], local: impl Iterator<Item = u64>) -> NormalVector {
    let mut v = NormalVector::zero(tets);
    for (c, x) in cols.iter().zip(local) {
        v.coords[*c] = x;
    }
    v
}

fn tets_of(sys: &MatchingSystem) -> usize {
    sys.columns / COORDS_PER_TET
}

/// Hilbert basis of the admissible cone: the union of the bases of the
/// maximal faces, without elements using two or more octagons, sorted
/// lexicographically.
pub fn hilbert_basis(sys: &MatchingSystem, opts: &EnumOptions) -> Result<Vec<NormalVector>> {
    let tets = tets_of(sys);
    let mut all = BTreeSet::new();
    for face in maximal_support_faces(tets, opts.octagons) {
        let cols = face.columns();
        let rows = restrict(sys, &cols);
        let oct = face.octagon_column().map(|c| cols.iter().position(|&x| x == c).unwrap());
        for x in face_hilbert_basis(&rows, cols.len(), opts.cap)? {
            if oct.is_some_and(|j| x[j] > 1) {
                continue;
            }
            all.insert(to_global(tets, &cols, x.into_iter()).coords);
        }
    }
    Ok(all.into_iter().map(|coords| NormalVector { coords }).collect())
}

/// Extreme rays of `rows · x = 0, x ≥ 0` as primitive integer vectors.
fn extreme_rays(rows: &[Vec<i64>], dim: usize, cap: usize) -> Result<Vec<Vec<BigInt>>> {
    if dim > 128 {
        return Err(Error::ResourceCap(format!("face of dimension {dim} exceeds 128")));
    }
    struct Ray {
        v: Vec<BigInt>,
        zero: u128,
    }
    let full: u128 = if dim == 128 { u128::MAX } else { (1u128 << dim) - 1 };
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let mut v = vec![BigInt::zero(); dim];
            v[j] = BigInt::from(1);
            Ray { v, zero: full & !(1u128 << j) }
        })
        .collect();
    for row in rows {
        let vals: Vec<BigInt> = rays.iter().map(|r| r.v.iter().zip(row).map(|(x, &k)| x * k).sum::<BigInt>()).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut next: Vec<Vec<BigInt>> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let z = rays[p].zero & rays[n].zero;
                let blocked = rays.iter().enumerate().any(|(i, r)| i != p && i != n && z & !r.zero == 0);
                if blocked {
                    continue;
                }
                let v: Vec<BigInt> =
                    rays[n].v.iter().zip(&rays[p].v).map(|(xn, xp)| &vals[p] * xn - &vals[n] * xp).collect();
                next.push(primitive(v));
                if next.len() > cap {
                    return Err(Error::ResourceCap(format!("more than {cap} rays")));
                }
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len());
        for (i, r) in rays.into_iter().enumerate() {
            if vals[i].is_zero() {
                kept.push(r);
            }
        }
        kept.extend(next.into_iter().map(|v| {
            let zero = v.iter().enumerate().fold(0u128, |m, (j, x)| if x.is_zero() { m | 1u128 << j } else { m });
            Ray { v, zero }
        }));
        rays = kept;
    }
    Ok(rays.into_iter().map(|r| r.v).collect())
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g == BigInt::from(1) {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

fn face_rays(rows: &[Vec<i64>], dim: usize, cap: usize) -> Result<Vec<Vec<u64>>> {
    extreme_rays(rows, dim, cap)?
        .into_iter()
        .map(|ray| {
            ray.iter()
                .map(|x| x.to_u64().ok_or_else(|| Error::ResourceCap("vertex solution coordinate overflow".into())))
                .collect()
        })
        .collect()
}

/// Admissible extreme rays of the cone, over normal faces only, sorted.
pub fn vertex_solutions(sys: &MatchingSystem, opts: &EnumOptions) -> Result<Vec<NormalVector>> {
    let tets = tets_of(sys);
    let mut all = BTreeSet::new();
    for face in maximal_support_faces(tets, false) {
        let cols = face.columns();
        let rows = restrict(sys, &cols);
        for ray in face_rays(&rows, cols.len(), opts.cap)? {
            all.insert(to_global(tets, &cols, ray.into_iter()).coords);
        }
    }
    Ok(all.into_iter().map(|coords| NormalVector { coords }).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Classification {
    VertexLinkDisk,
    OtherDisk,
    Sphere,
    Annulus,
    ClosedOther,
    Other,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedSolution {
    pub vector: NormalVector,
    pub class: Classification,
    pub chi: i64,
    pub boundary_components: usize,
    pub octagons: u64,
}

/// Classifies a connected surface. `surf` is the boundary surface, or
/// `None` for a closed manifold.
pub fn classify(
    ctx: &SurfaceContext,
    surf: Option<&BoundaryTriangulation>,
    x: &NormalVector,
) -> Result<ClassifiedSolution> {
    let chi = ctx.euler_characteristic(x)?;
    if x.is_zero() {
        return Err(Error::NotSurface("zero vector".into()));
    }
    let parts = ctx.split_components(x)?;
    if parts.len() != 1 {
        return Err(Error::Invalid(format!("surface has {} components", parts.len())));
    }
    let arcs = ctx.boundary_arcs(x);
    let boundary_components = match surf {
        _ if arcs.is_zero() => 0,
        Some(s) => NormalCurve::new(s, arcs)?.component_count(),
        None => return Err(Error::Invalid("boundary arcs without a boundary surface".into())),
    };
    let triangles_only = (0..x.tets()).all(|t| x.exceptional(t).is_none());
    let class = if triangles_only {
        // A connected surface made of triangles is the link of one vertex.
        if boundary_components > 0 && chi == 1 {
            Classification::VertexLinkDisk
        } else if boundary_components == 0 && chi == 2 {
            Classification::Sphere
        } else {
            Classification::Other
        }
    } else if chi == 1 && boundary_components == 1 {
        Classification::OtherDisk
    } else if chi == 2 && boundary_components == 0 {
        Classification::Sphere
    } else if chi == 0 && boundary_components == 2 {
        Classification::Annulus
    } else if boundary_components == 0 {
        Classification::ClosedOther
    } else {
        Classification::Other
    };
    Ok(ClassifiedSolution { vector: x.clone(), class, chi, boundary_components, octagons: x.octagon_count() })
}

/// The boundary surface, or `None` when the manifold is closed.
pub fn optional_boundary(tri: &Triangulation) -> Result<Option<BoundaryTriangulation>> {
    match boundary_surface(tri) {
        Ok(s) => Ok(Some(s)),
        Err(Error::Closed) => Ok(None),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionSet {
    pub solutions: Vec<ClassifiedSolution>,
    pub one_vertex: bool,
    pub warnings: Vec<String>,
}

impl SolutionSet {
    pub fn vectors(&self) -> Vec<NormalVector> {
        self.solutions.iter().map(|s| s.vector.clone()).collect()
    }

    pub fn of_class(&self, class: Classification) -> impl Iterator<Item = &ClassifiedSolution> {
        self.solutions.iter().filter(move |s| s.class == class)
    }
}

/// Classifies each vector after splitting it into components.
fn classify_all(
    ctx: &SurfaceContext,
    surf: Option<&BoundaryTriangulation>,
    xs: &[NormalVector],
) -> Result<Vec<ClassifiedSolution>> {
    let mut out = Vec::new();
    for x in xs {
        for part in ctx.split_components(x)? {
            out.push(classify(ctx, surf, &part)?);
        }
    }
    Ok(out)
}

pub fn fundamental_solutions(tri: &Triangulation, opts: &EnumOptions) -> Result<SolutionSet> {
    let ctx = SurfaceContext::new(tri);
    let surf = optional_boundary(tri)?;
    let basis = hilbert_basis(&ctx.system, opts)?;
    let one_vertex = tri.is_one_vertex();
    let mut warnings = Vec::new();
    if !one_vertex {
        warnings.push(format!("triangulation has {} vertices", ctx.orbits.vertex_orbits.len()));
    }
    let solutions = classify_all(&ctx, surf.as_ref(), &basis)?;
    Ok(SolutionSet { solutions, one_vertex, warnings })
}

/// Enumeration through the on-disk cache.
pub fn fundamental_solutions_cached(
    tri: &Triangulation,
    opts: &EnumOptions,
    cache: Option<&crate::cache::Cache>,
) -> Result<SolutionSet> {
    let Some(cache) = cache else {
        return fundamental_solutions(tri, opts);
    };
    let key = crate::cache::Cache::key(&[
        "fundamental-v1",
        &crate::triangulation::serialize_triangulation(tri),
        if opts.octagons { "oct" } else { "std" },
    ]);
    if let Some(set) = cache.load::<SolutionSet>(&key) {
        return Ok(set);
    }
    let set = fundamental_solutions(tri, opts)?;
    cache.store(&key, &set)?;
    Ok(set)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EfficiencyReport {
    pub verdict: Verdict,
    pub scope: String,
    pub one_vertex: bool,
    pub vertex_solutions: usize,
    pub disks: Vec<NormalVector>,
    pub spheres: Vec<NormalVector>,
    pub projective_planes: Vec<NormalVector>,
    /// Closed surfaces of Euler characteristic zero (tori or Klein bottles).
    pub closed_chi_zero: Vec<NormalVector>,
}

/// Looks for non-vertex-linking normal disks, normal spheres and normal
/// projective planes among the vertex solutions.
pub fn check_zero_efficiency(tri: &Triangulation, opts: &EnumOptions) -> Result<EfficiencyReport> {
    let ctx = SurfaceContext::new(tri);
    let surf = optional_boundary(tri)?;
    let vertices = vertex_solutions(&ctx.system, opts)?;
    let one_vertex = tri.is_one_vertex();
    let mut report = EfficiencyReport {
        verdict: Verdict::Pass,
        scope: String::new(),
        one_vertex,
        vertex_solutions: vertices.len(),
        disks: Vec::new(),
        spheres: Vec::new(),
        projective_planes: Vec::new(),
        closed_chi_zero: Vec::new(),
    };
    for s in classify_all(&ctx, surf.as_ref(), &vertices)? {
        match (s.class, s.chi, s.boundary_components) {
            (Classification::OtherDisk, _, _) => report.disks.push(s.vector),
            (Classification::Sphere, _, _) if !(one_vertex && surf.is_none() && is_link(&s.vector)) => {
                report.spheres.push(s.vector)
            }
            (_, 1, 0) => report.projective_planes.push(s.vector),
            (_, 0, 0) => report.closed_chi_zero.push(s.vector),
            _ => {}
        }
    }
    let offending = !report.disks.is_empty() || !report.spheres.is_empty() || !report.projective_planes.is_empty();
    report.verdict = if offending {
        Verdict::Fail
    } else if one_vertex {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    report.scope = format!(
        "{} normal vertex solutions over {} quad faces; disks other than the vertex link, spheres and projective planes{}",
        report.vertex_solutions,
        3usize.pow(tri.size() as u32),
        if one_vertex { "" } else { "; several vertices, so vertex solutions need not detect every such surface" }
    );
    Ok(report)
}

fn is_link(x: &NormalVector) -> bool {
    (0..x.tets()).all(|t| x.exceptional(t).is_none())
}
