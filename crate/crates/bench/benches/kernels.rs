use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use iafn::autfn::{compose, invert};
use iafn::checks::{j_span, m3_rows};
use iafn::intlinalg::smith_normal_form;
use iafn::mccool::{graded_johnson_rank, subgroup_h};
use iafn_bench::mixed_endo;

fn smith(c: &mut Criterion) {
    let j4 = j_span(4).unwrap();
    c.bench_function("snf J^4 (324 x 315)", |b| b.iter(|| smith_normal_form(black_box(&j4))));
    let j5 = j_span(5).unwrap();
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    g.bench_function("snf J^5 (1944 x 1554)", |b| b.iter(|| smith_normal_form(black_box(&j5))));
    g.bench_function("span J^5", |b| b.iter(|| j_span(black_box(5)).unwrap()));
    g.finish();
}

fn automorphisms(c: &mut Criterion) {
    for d in [4, 6] {
        let f = mixed_endo(d);
        let g = invert(&f);
        c.bench_function(&format!("compose n=3 D={d}"), |b| b.iter(|| compose(black_box(&f), black_box(&g)).unwrap()));
        c.bench_function(&format!("invert n=3 D={d}"), |b| b.iter(|| invert(black_box(&f))));
    }
}

fn commutators(c: &mut Criterion) {
    let mut g = c.benchmark_group("weight-c");
    g.sample_size(10);
    g.bench_function("M3 rows c=3", |b| b.iter(|| m3_rows(black_box(3)).unwrap()));
    g.bench_function("H rank c=4", |b| b.iter(|| graded_johnson_rank(&subgroup_h(), black_box(4)).unwrap()));
    g.finish();
}

criterion_group!(benches, smith, automorphisms, commutators);
criterion_main!(benches);
