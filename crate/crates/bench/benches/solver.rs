use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use eqdom::{solve, Budget, ConstraintSet, Family, GraphClassSpec};

fn families(c: &mut Criterion) {
    let cases = [
        ("path", GraphClassSpec::new(Family::Path(14))),
        ("cycle", GraphClassSpec::new(Family::Cycle(12))),
        ("wheel", GraphClassSpec::new(Family::Wheel(11))),
        ("helm", GraphClassSpec::new(Family::Helm(5))),
        ("bistar", GraphClassSpec::new(Family::BiStar(4, 6))),
        (
            "complement-cycle",
            GraphClassSpec::complemented(Family::Cycle(10)),
        ),
    ];
    let mut group = c.benchmark_group("chi-ed");
    for (name, spec) in cases {
        let g = spec.build().unwrap();
        group.bench_with_input(BenchmarkId::new(name, g.n()), &g, |b, g| {
            b.iter(|| {
                solve(
                    black_box(g),
                    ConstraintSet::EQUITABLE_DOMINATOR,
                    Budget::default(),
                )
                .unwrap()
            })
        });
    }
    group.finish();
}

fn invariants(c: &mut Criterion) {
    let g = Family::Path(12).build().unwrap();
    let mut group = c.benchmark_group("path-12");
    for cs in ConstraintSet::ALL {
        group.bench_function(cs.name(), |b| {
            b.iter(|| solve(black_box(&g), cs, Budget::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, families, invariants);
criterion_main!(benches);
