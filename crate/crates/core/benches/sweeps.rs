//! Sylow sweeps and pr* on a one-thread pool against the default pool.
//! Built without the `parallel` feature, both runs are sequential.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sylprob_core::probability::{omega_set, pr_star_all};
use sylprob_core::{build, GroupExpression, PermutationGroup};

fn group(s: &str) -> PermutationGroup {
    build(&GroupExpression::parse(s).unwrap()).unwrap()
}

fn pools() -> Vec<(String, rayon::ThreadPool)> {
    let n = rayon::current_num_threads().max(2);
    [1, n]
        .into_iter()
        .map(|t| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build().unwrap();
            (format!("{t}-threads"), pool)
        })
        .collect()
}

fn omega(c: &mut Criterion) {
    let mut grp = c.benchmark_group("omega_2_3");
    grp.sample_size(10);
    for name in ["Sym(5)", "PSL2(8)", "Alt(6)"] {
        let g = group(name);
        for (label, pool) in pools() {
            grp.bench_with_input(BenchmarkId::new(label, name), &g, |b, g| {
                b.iter(|| pool.install(|| omega_set(g, 2, 3).unwrap()))
            });
        }
    }
    grp.finish();
}

fn prstar(c: &mut Criterion) {
    let mut grp = c.benchmark_group("pr_star");
    grp.sample_size(10);
    for name in ["Sym(6)", "PSL2(13)", "Sym(5) * Sym(3)"] {
        let g = group(name);
        for (label, pool) in pools() {
            grp.bench_with_input(BenchmarkId::new(label, name), &g, |b, g| {
                b.iter(|| pool.install(|| pr_star_all(g).unwrap()))
            });
        }
    }
    grp.finish();
}

criterion_group!(benches, omega, prstar);
criterion_main!(benches);
