use std::path::{Path, PathBuf};

use amalgam_core::cache::{write_atomic, Cache};
use amalgam_core::curves::{
    component_triviality, geometric_intersection, intersection_in_surface, twist_sum, NormalCurve,
};
use amalgam_core::distance::{diameter_upper_bound, estimate_distance};
use amalgam_core::gate::{
    build_ck, build_gate, evaluate_gluing, heegaard_genus_input, standing_assumptions, CkOptions, GateCertificate,
    SCHEMA_VERSION,
};
use amalgam_core::hilbert::{check_zero_efficiency, fundamental_solutions_cached};
use amalgam_core::normal::{
    parse_arc_vector, parse_arc_vectors, parse_normal_vector, serialize_arc_vector, serialize_normal_vector,
    SurfaceContext,
};
use amalgam_core::triangulation::{boundary_surface, parse_triangulation};
use amalgam_core::{BoundaryArcVector, BoundaryTriangulation, EnumOptions, Triangulation};
use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

/// Normal surfaces, boundary curves and gluing gate constants for
/// triangulated 3-manifolds with boundary.
#[derive(Parser, Debug)]
#[command(name = "amalgam", version, about)]
struct Cli {
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Cache directory (default: $AMALGAM_CACHE_DIR, $XDG_CACHE_HOME/amalgam or ~/.cache/amalgam)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Do not read or write the enumeration cache
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a triangulation file
    Validate { tri: PathBuf },
    /// Genus and triangle count of the boundary surface
    Boundary { tri: PathBuf },
    /// Euler characteristic of a normal surface
    Chi { tri: PathBuf, nv: PathBuf },
    /// Boundary curve of a normal surface, as an arc vector
    BoundaryArcs { tri: PathBuf, nv: PathBuf },
    /// Fundamental normal and almost normal surfaces
    Enumerate {
        tri: PathBuf,
        #[command(flatten)]
        enumeration: EnumArgs,
        /// Write the solutions here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// 0-efficiency check
    Efficiency {
        tri: PathBuf,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
    /// Components of a boundary curve and their triviality
    Curves { tri: PathBuf, nc: PathBuf },
    /// Intersection numbers of two boundary curves
    Intersect { tri: PathBuf, nc1: PathBuf, nc2: PathBuf },
    /// A curve plus copies of an annulus boundary, with spiral counts and stability
    Twist { tri: PathBuf, nc_s: PathBuf, nc_a: PathBuf, m: u64 },
    /// Curve complex distance bounds for two connected essential curves
    Distance { tri: PathBuf, nc1: PathBuf, nc2: PathBuf },
    /// Diameter bound of a set of curves given as consecutive `nc` blocks
    Diameter { tri: PathBuf, curves: PathBuf },
    /// Boundary curves of surfaces with Euler characteristic at least -k
    Ck {
        tri: PathBuf,
        #[arg(long)]
        k: u64,
        /// Heegaard genus of the manifold, recorded in the report
        #[arg(long)]
        genus: Option<u64>,
        #[command(flatten)]
        build: BuildArgs,
    },
    /// Gate constant for gluing the boundaries of two manifolds
    Gate {
        tri1: PathBuf,
        tri2: PathBuf,
        #[arg(long)]
        g1: Option<u64>,
        #[arg(long)]
        g2: Option<u64>,
        #[command(flatten)]
        build: BuildArgs,
    },
    /// Compare declared images of the first curve set with the second
    Evaluate {
        cert: PathBuf,
        /// Files of `nc` blocks, one image per curve of the first set, in order,
        /// written against the second canonical triangulation in the certificate
        #[arg(long, num_args = 1.., required = true)]
        images: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct EnumArgs {
    /// Bound on rays and candidates per support face
    #[arg(long, default_value_t = EnumOptions::default().cap)]
    cap: usize,
    /// Normal surfaces only, no octagons
    #[arg(long)]
    no_octagons: bool,
}

impl EnumArgs {
    fn options(&self) -> EnumOptions {
        EnumOptions { cap: self.cap, octagons: !self.no_octagons }
    }
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[command(flatten)]
    enumeration: EnumArgs,
    /// Continue when the 0-efficiency check does not pass
    #[arg(long)]
    allow_inefficient: bool,
    /// Bound on surface combinations
    #[arg(long, default_value_t = CkOptions::default().max_combinations)]
    max_combinations: usize,
    /// Write the report here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

impl BuildArgs {
    fn options(&self, cache: Option<Cache>) -> CkOptions {
        CkOptions {
            enumeration: self.enumeration.options(),
            allow_inefficient: self.allow_inefficient,
            max_combinations: self.max_combinations,
            cache,
            ..Default::default()
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_tri(path: &Path) -> Result<Triangulation> {
    parse_triangulation(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_surface(path: &Path) -> Result<(Triangulation, BoundaryTriangulation)> {
    let tri = load_tri(path)?;
    let surf = boundary_surface(&tri)?;
    Ok((tri, surf))
}

fn load_curve(surf: &BoundaryTriangulation, path: &Path) -> Result<NormalCurve> {
    let arcs = parse_arc_vector(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    Ok(NormalCurve::new(surf, arcs)?)
}

fn emit(value: &Value, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match out {
        Some(p) => write_atomic(p, text.as_bytes()).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn report(json: bool, value: Value, text: String) -> Result<()> {
    if json {
        emit(&value, None)
    } else {
        print!("{text}");
        Ok(())
    }
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let cache = if cli.no_cache { None } else { cli.cache_dir.clone().map(Cache::at).or_else(Cache::from_env) };
    let json = cli.json;
    match cli.command {
        Command::Validate { tri } => {
            let t = load_tri(&tri)?;
            let orbits = t.orbits();
            let vertices = orbits.vertex_orbits.len();
            let value = json!({
                "valid": true,
                "tetrahedra": t.size(),
                "vertices": vertices,
                "one_vertex": t.is_one_vertex(),
                "boundary_faces": t.boundary_faces().len(),
            });
            let text = format!(
                "valid: {} tetrahedra, {} vertices, {} boundary faces, one-vertex: {}\n",
                t.size(),
                vertices,
                t.boundary_faces().len(),
                t.is_one_vertex()
            );
            report(json, value, text)
        }
        Command::Boundary { tri } => {
            let (_, surf) = load_surface(&tri)?;
            let value = json!({
                "genus": surf.genus(),
                "triangles": surf.triangle_count(),
                "edges": surf.edge_count(),
                "vertices": surf.vertex_count,
                "euler_characteristic": surf.euler_characteristic(),
            });
            report(json, value, format!("genus {}\ntriangles {}\n", surf.genus(), surf.triangle_count()))
        }
        Command::Chi { tri, nv } => {
            let t = load_tri(&tri)?;
            let x = parse_normal_vector(&read(&nv)?)?;
            let chi = SurfaceContext::new(&t).euler_characteristic(&x)?;
            report(json, json!({ "chi": chi }), format!("{chi}\n"))
        }
        Command::BoundaryArcs { tri, nv } => {
            let t = load_tri(&tri)?;
            let x = parse_normal_vector(&read(&nv)?)?;
            let ctx = SurfaceContext::new(&t);
            ctx.check(&x)?;
            let arcs = ctx.boundary_arcs(&x);
            report(json, json!({ "nc": serialize_arc_vector(&arcs) }), serialize_arc_vector(&arcs))
        }
        Command::Enumerate { tri, enumeration, out } => {
            let t = load_tri(&tri)?;
            let set = fundamental_solutions_cached(&t, &enumeration.options(), cache.as_ref())?;
            if json {
                return emit(&serde_json::to_value(&set)?, out.as_deref());
            }
            let mut text = format!("# {} fundamental solutions\n", set.solutions.len());
            for w in &set.warnings {
                text += &format!("# warning: {w}\n");
            }
            for s in &set.solutions {
                text += &format!("# class={} chi={} bdry={}\n", s.class, s.chi, s.boundary_components);
                text += &serialize_normal_vector(&s.vector);
            }
            match out {
                Some(p) => write_atomic(&p, text.as_bytes()).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Efficiency { tri, enumeration } => {
            let t = load_tri(&tri)?;
            let r = check_zero_efficiency(&t, &enumeration.options())?;
            let text = format!(
                "{}\nscope: {}\none-vertex: {}\nvertex solutions: {}\nnon-vertex-linking disks: {}\nspheres: {}\nprojective planes: {}\nclosed chi=0: {}\n",
                r.verdict,
                r.scope,
                r.one_vertex,
                r.vertex_solutions,
                r.disks.len(),
                r.spheres.len(),
                r.projective_planes.len(),
                r.closed_chi_zero.len()
            );
            report(json, serde_json::to_value(&r)?, text)
        }
        Command::Curves { tri, nc } => {
            let (_, surf) = load_surface(&tri)?;
            let c = load_curve(&surf, &nc)?;
            let trivial = component_triviality(&surf, &c)?;
            let mut rows = Vec::new();
            let mut text = format!("{} components\n", trivial.len());
            for (i, t) in trivial.iter().enumerate() {
                let part = c.component_curve(&surf, i)?;
                let w = part.weight(&surf);
                text += &format!("component {i}: weight {w} {}\n", if *t { "trivial" } else { "essential" });
                rows.push(json!({ "weight": w, "trivial": t, "nc": serialize_arc_vector(&part.arcs) }));
            }
            report(json, json!({ "components": rows, "weight": c.weight(&surf) }), text)
        }
        Command::Intersect { tri, nc1, nc2 } => {
            let (_, surf) = load_surface(&tri)?;
            let (a, b) = (load_curve(&surf, &nc1)?, load_curve(&surf, &nc2)?);
            let punctured = geometric_intersection(&surf, &a, &b)?;
            let closed = intersection_in_surface(&surf, &a, &b)?;
            let value = json!({ "punctured": punctured, "closed": closed });
            report(json, value, format!("punctured surface: {punctured}\nclosed surface: {closed}\n"))
        }
        Command::Twist { tri, nc_s, nc_a, m } => {
            let (_, surf) = load_surface(&tri)?;
            let (s, a) = (load_curve(&surf, &nc_s)?, load_curve(&surf, &nc_a)?);
            let mut probes = vec![NormalCurve::new(&surf, BoundaryArcVector::vertex_link(surf.triangle_count()))?];
            for c in [&s, &a] {
                for (i, t) in component_triviality(&surf, c)?.into_iter().enumerate() {
                    let part = c.component_curve(&surf, i)?;
                    if !t && !probes.iter().any(|p| p.arcs == part.arcs) {
                        probes.push(part);
                    }
                }
            }
            let r = twist_sum(&surf, &s, &a, m, &probes)?;
            let counts: Vec<Value> =
                r.counts.iter().map(|c| json!({ "positive": c.positive, "negative": c.negative })).collect();
            let value = json!({
                "nc": serialize_arc_vector(&r.curve.arcs),
                "copies": r.copies,
                "spiral_counts": counts,
                "threshold": r.threshold,
                "stable": r.stable,
                "profile": r.profile,
            });
            let spirals: Vec<String> = r.counts.iter().map(|c| format!("+{} -{}", c.positive, c.negative)).collect();
            let text = format!(
                "{}# spirals per annulus component: {}\n# threshold {} stable {}\n",
                serialize_arc_vector(&r.curve.arcs),
                spirals.join(", "),
                r.threshold,
                r.stable
            );
            report(json, value, text)
        }
        Command::Distance { tri, nc1, nc2 } => {
            let (_, surf) = load_surface(&tri)?;
            let e = estimate_distance(&surf, &load_curve(&surf, &nc1)?, &load_curve(&surf, &nc2)?)?;
            let certs: Vec<String> = e.certificates.iter().map(|c| format!("{c:?}")).collect();
            let mut text = format!(
                "lower {}\nupper {} (ceiling {})\nintersection {}\ncertificates {}\n",
                e.lower,
                e.upper,
                e.upper_ceiling,
                e.intersection,
                certs.join(" ")
            );
            for w in &e.warnings {
                text += &format!("warning: {w}\n");
            }
            report(json, serde_json::to_value(&e)?, text)
        }
        Command::Diameter { tri, curves } => {
            let (_, surf) = load_surface(&tri)?;
            let set = parse_arc_vectors(&read(&curves)?)?
                .into_iter()
                .map(|a| NormalCurve::new(&surf, a))
                .collect::<amalgam_core::Result<Vec<_>>>()?;
            let d = diameter_upper_bound(&surf, &set)?;
            report(json, json!({ "curves": set.len(), "diameter_bound": d }), format!("{d}\n"))
        }
        Command::Ck { tri, k, genus, build } => {
            let t = load_tri(&tri)?;
            let record = genus.map(|g| heegaard_genus_input(&t, Some(g))).transpose()?;
            let result = build_ck(&t, k, &build.options(cache))?;
            let mut value = json!({
                "schema_version": SCHEMA_VERSION,
                "kind": "ck",
                "genus": record,
                "assumptions": standing_assumptions(),
            });
            if let (Value::Object(map), Value::Object(rest)) = (&mut value, serde_json::to_value(&result)?) {
                map.extend(rest);
            }
            emit(&value, build.out.as_deref())
        }
        Command::Gate { tri1, tri2, g1, g2, build } => {
            let (a, b) = (load_tri(&tri1)?, load_tri(&tri2)?);
            let cert = build_gate(&a, &b, g1, g2, &build.options(cache))?;
            emit(&serde_json::to_value(&cert)?, build.out.as_deref())
        }
        Command::Evaluate { cert, images, out } => {
            let cert: GateCertificate = serde_json::from_str(&read(&cert)?)
                .with_context(|| format!("parsing certificate {}", cert.display()))?;
            if cert.schema_version != SCHEMA_VERSION {
                bail!("certificate schema version {} is not {}", cert.schema_version, SCHEMA_VERSION);
            }
            let mut arcs = Vec::new();
            for p in &images {
                arcs.extend(parse_arc_vectors(&read(p)?).with_context(|| format!("parsing {}", p.display()))?);
            }
            let r = evaluate_gluing(&cert, &arcs)?;
            emit(&serde_json::to_value(&r)?, out.as_deref())
        }
    }
}
