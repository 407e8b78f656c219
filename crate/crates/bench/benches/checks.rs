use std::hint::black_box;

use brandt_core::constructions::{brandt, cyclic_group, symmetric_group_3};
use brandt_core::rewrite::cell_decompose;
use brandt_core::words::{identity_holds, ln_identity};
use brandt_core::{classify, find_isomorphism, Word};
use criterion::{criterion_group, criterion_main, Criterion};

fn identity_checks(c: &mut Criterion) {
    let g = cyclic_group(2).unwrap().direct_product(&symmetric_group_3());
    let s = brandt(&g, 2).unwrap().semigroup;
    let l2 = ln_identity(2);
    c.bench_function("L2 in B(Z2xS3,2)", |b| b.iter(|| identity_holds(black_box(&s), &l2, None).unwrap()));
    let mut slow = c.benchmark_group("slow");
    slow.sample_size(10);
    let l3 = ln_identity(3);
    slow.bench_function("L3 in B(Z2xS3,2)", |b| b.iter(|| identity_holds(black_box(&s), &l3, None).unwrap()));
    slow.finish();
}

fn structure(c: &mut Criterion) {
    let s = brandt(&symmetric_group_3(), 3).unwrap().semigroup;
    let t = brandt(&symmetric_group_3(), 3).unwrap().semigroup;
    c.bench_function("classify B(S3,3)", |b| b.iter(|| classify(black_box(&s))));
    c.bench_function("isomorphism B(S3,3)", |b| b.iter(|| find_isomorphism(black_box(&s), &t).unwrap()));
}

fn rewriting(c: &mut Criterion) {
    let w = Word::letters("xyzxzyyxzxy");
    c.bench_function("cell_decompose 11 letters", |b| b.iter(|| cell_decompose(black_box(&w), 2).unwrap()));
}

criterion_group!(benches, identity_checks, structure, rewriting);
criterion_main!(benches);
