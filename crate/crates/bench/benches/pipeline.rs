use amalgam_bench::fixture;
use amalgam_core::curves::{intersection_in_surface, NormalCurve};
use amalgam_core::gate::{build_ck, CkOptions};
use amalgam_core::hilbert::{fundamental_solutions, vertex_solutions};
use amalgam_core::normal::{parse_arc_vector, SurfaceContext};
use amalgam_core::triangulation::boundary_surface;
use amalgam_core::EnumOptions;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumeration");
    g.sample_size(10);
    for name in ["lst-1-4.tri", "trefoil.tri", "handlebody-2.tri"] {
        let tri = fixture(name);
        g.bench_function(format!("fundamental/{name}"), |b| {
            b.iter(|| fundamental_solutions(black_box(&tri), &EnumOptions::default()).unwrap())
        });
        let ctx = SurfaceContext::new(&tri);
        g.bench_function(format!("vertex/{name}"), |b| {
            b.iter(|| vertex_solutions(black_box(&ctx.system), &EnumOptions::default()).unwrap())
        });
    }
    g.finish();
}

fn intersection(c: &mut Criterion) {
    let tri = fixture("handlebody-2.tri");
    let surf = boundary_surface(&tri).unwrap();
    let curve = |rows: &str| {
        let text = format!("nc 6\n{}\n", rows.replace('/', "\n"));
        NormalCurve::new(&surf, parse_arc_vector(&text).unwrap()).unwrap()
    };
    let a = curve("0 0 0/0 1 0/0 1 0/0 0 1/0 0 1/0 0 1");
    let b = curve("3 0 3/0 1 6/0 4 3/0 6 1/3 0 1/6 0 1");
    c.bench_function("intersection/handlebody-2", |bch| {
        bch.iter(|| intersection_in_surface(&surf, black_box(&a), black_box(&b)).unwrap())
    });
}

fn curve_sets(c: &mut Criterion) {
    let mut g = c.benchmark_group("ck");
    g.sample_size(10);
    let opts = CkOptions { allow_inefficient: true, ..Default::default() };
    let lst = fixture("lst-1-3.tri");
    g.bench_function("lst-1-3/k=2", |b| b.iter(|| build_ck(black_box(&lst), 2, &opts).unwrap()));
    let knot = fixture("trefoil.tri");
    g.bench_function("trefoil/k=2", |b| b.iter(|| build_ck(black_box(&knot), 2, &CkOptions::default()).unwrap()));
    g.finish();
}

criterion_group!(benches, enumeration, intersection, curve_sets);
criterion_main!(benches);
