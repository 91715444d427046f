//! Sweep benchmarks comparing the rayon data-parallel path against a
//! single-thread pool (the sequential fallback executes the same loops when
//! the `parallel` feature is off).

use criterion::{criterion_group, criterion_main, Criterion};

use satcomb::cartan::parse_type_string;
use satcomb::{check, tables, RootDatum};

fn datum(spec: &str) -> RootDatum {
    let (t, iso) = parse_type_string(spec).unwrap();
    RootDatum::build(t, iso).unwrap()
}

/// Benches one closure under the default pool and under a 1-thread pool.
fn seq_vs_par<F: Fn() + Sync>(c: &mut Criterion, group: &str, run: F) {
    let mut g = c.benchmark_group(group);
    g.sample_size(10);
    #[cfg(feature = "parallel")]
    {
        let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        g.bench_function("seq", |b| b.iter(|| single.install(&run)));
        g.bench_function("par", |b| b.iter(&run));
    }
    #[cfg(not(feature = "parallel"))]
    g.bench_function("seq", |b| b.iter(&run));
    g.finish();
}

fn kostka_sweep(c: &mut Criterion) {
    let d = datum("A3:sc");
    seq_vs_par(c, "kostka_verify_a3_shell12", || {
        let report = tables::verify_kostka_weight_identity(&d, 12).unwrap();
        assert!(report.violations.is_empty());
    });
}

fn path_tensor_sweep(c: &mut Criterion) {
    let d = datum("A2:adj");
    seq_vs_par(c, "path_tensor_a2adj_len4", || {
        let (ok, _) = check::path_tensor_sweep(&d, 4);
        assert!(ok);
    });
}

fn selfcheck_sweep(c: &mut Criterion) {
    let types: Vec<String> = ["A1:sc", "A1:adj", "A2:sc", "A2:adj", "B2:sc", "A3:sc", "G2:sc"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    seq_vs_par(c, "selfcheck_shell8", || {
        let report = check::run_selfcheck(&types, 8).unwrap();
        assert_eq!(report.failures(), 0);
    });
}

criterion_group!(benches, kostka_sweep, path_tensor_sweep, selfcheck_sweep);
criterion_main!(benches);
