//! Compares the rayon-backed default paths against the single-threaded
//! fallbacks on the two enumeration-heavy operations. Build with default
//! features so the parallel side actually fans out:
//!
//!     cargo bench -p wspectra

use criterion::{criterion_group, criterion_main, Criterion};

use wspectra::constructions::binary_full_spectrum;
use wspectra::search::{random_linear_search, random_linear_search_seq};

fn spectrum(c: &mut Criterion) {
    // 65535 projective classes over 16 distinct columns.
    let code = binary_full_spectrum(16).unwrap();
    let mut group = c.benchmark_group("weight_spectrum");
    group.sample_size(20);
    group.bench_function("parallel", |b| {
        b.iter(|| code.weight_spectrum().unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| code.weight_spectrum_seq().unwrap())
    });
    group.finish();
}

fn random_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_linear_search");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| random_linear_search(500, 3, 3, 32, 7, 1 << 20).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| random_linear_search_seq(500, 3, 3, 32, 7, 1 << 20).unwrap())
    });
    group.finish();
}

criterion_group!(benches, spectrum, random_search);
criterion_main!(benches);
