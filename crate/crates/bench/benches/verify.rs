use std::hint::black_box;
use std::sync::Arc;

use alphacut_core::catalog;
use alphacut_core::enumerate::enumerate_lattices;
use alphacut_core::generate::random_fuzzy_set;
use alphacut_core::localic::{verify_cut_family, CheckOptions};
use alphacut_core::{Arrow, Base};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in [6, 7] {
        group.bench_with_input(BenchmarkId::new("all", n), &n, |b, &n| {
            b.iter(|| enumerate_lattices(n, false).unwrap().count())
        });
        group.bench_with_input(BenchmarkId::new("distributive", n), &n, |b, &n| {
            b.iter(|| enumerate_lattices(n, true).unwrap().count())
        });
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let lattices: Vec<_> = enumerate_lattices(7, false).unwrap().collect();
    c.bench_function("classify/all 7-element lattices", |b| {
        b.iter(|| {
            for l in &lattices {
                black_box(l.classify());
            }
        })
    });
}

fn cut_families(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_cut_family");
    let options = CheckOptions::default();
    for (name, lattice) in [("m5", catalog::m5()), ("b3", catalog::b3())] {
        let lattice = Arc::new(lattice);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let sets: Vec<_> = (0..16)
            .map(|_| random_fuzzy_set(&mut rng, &lattice, &Base::numbered(5)))
            .collect();
        group.bench_function(name, |b| {
            b.iter(|| {
                for a in &sets {
                    black_box(verify_cut_family(a, Arrow::GodelLike, &options).unwrap());
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, classification, cut_families);
criterion_main!(benches);
