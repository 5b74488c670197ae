use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hallprim::partitions::partitions_of;
use hallprim::symfunc::HallLittlewood;
use hallprim::RatFunc;
use hallprim_bench::sample_ratfuncs;

fn ratfunc_arithmetic(c: &mut Criterion) {
    let xs = sample_ratfuncs(6);
    c.bench_function("ratfunc sum and product", |b| {
        b.iter(|| {
            let mut acc = RatFunc::zero(hallprim::Var::T);
            for x in &xs {
                acc = &(&acc + x) * x;
            }
            black_box(acc)
        })
    });
}

fn hall_littlewood_degree_six(c: &mut Criterion) {
    c.bench_function("hall-littlewood P, all partitions of 6", |b| {
        b.iter(|| {
            let hl = HallLittlewood::new(6);
            for lambda in partitions_of(6) {
                black_box(hl.p(&lambda).unwrap());
            }
        })
    });
}

criterion_group!(benches, ratfunc_arithmetic, hall_littlewood_degree_six);
criterion_main!(benches);
