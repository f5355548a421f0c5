use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stochpoly::batch::{decompose_all, decompose_centro_all, oracle_extreme_count, Strategy};
use stochpoly::sample::{random_centro_stochastic, random_stochastic};

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn decomposition(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let plain: Vec<_> = (0..200).map(|_| random_stochastic(&mut rng, 8, 8, 50)).collect();
    let centro: Vec<_> = (0..200).map(|_| random_centro_stochastic(&mut rng, 7, 6, 50)).collect();

    let mut group = c.benchmark_group("decompose_200");
    for (name, strategy) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new("stochastic_8x8", name), &strategy, |b, &s| {
            b.iter(|| decompose_all(&plain, s))
        });
        group.bench_with_input(BenchmarkId::new("centro_7x6", name), &strategy, |b, &s| {
            b.iter(|| decompose_centro_all(&centro, s))
        });
    }
    group.finish();
}

fn oracle_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_extreme_count");
    group.sample_size(10);
    for (name, strategy) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new("centro_5x4", name), &strategy, |b, &s| {
            b.iter(|| oracle_extreme_count(5, 4, true, s))
        });
        group.bench_with_input(BenchmarkId::new("stochastic_4x4", name), &strategy, |b, &s| {
            b.iter(|| oracle_extreme_count(4, 4, false, s))
        });
    }
    group.finish();
}

criterion_group!(benches, decomposition, oracle_sweep);
criterion_main!(benches);
