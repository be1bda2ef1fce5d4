use std::hint::black_box;

use caforge_core::ca::is_ca_with;
use caforge_core::exactnum::rat;
use caforge_core::search::exhaustive_integer_root_search_with;
use caforge_core::sieve::{delta_sieve_with, SieveOptions};
use caforge_core::{Execution, Poly};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn sieve(c: &mut Criterion) {
    let mut group = c.benchmark_group("delta_sieve_p31_m3");
    for (name, exec) in MODES {
        for modular in [false, true] {
            let id = BenchmarkId::new(name, if modular { "mod_p" } else { "exact" });
            group.bench_function(id, |b| {
                b.iter(|| {
                    delta_sieve_with(
                        black_box(31),
                        3,
                        SieveOptions {
                            exec,
                            shards: None,
                            modular,
                        },
                    )
                    .unwrap()
                })
            });
        }
    }
    group.finish();
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("integer_root_search_n6_b4");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| exhaustive_integer_root_search_with(black_box(6), 4, exec).unwrap())
        });
    }
    group.finish();
}

fn resultants(c: &mut Criterion) {
    let f = Poly::from_roots(&[
        (rat(0, 1), 3),
        (rat(1, 1), 2),
        (rat(-2, 3), 4),
        (rat(5, 7), 3),
        (rat(3, 2), 2),
    ]);
    let mut group = c.benchmark_group("is_ca_degree14");
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| is_ca_with(black_box(&f), exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, sieve, search, resultants);
criterion_main!(benches);
