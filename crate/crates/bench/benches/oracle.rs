use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hallprim::cyclic_fq::{aut_count_bruteforce, invariant_subspace_count, realize};
use hallprim_bench::classes_of_dim;

fn subspace_enumeration(c: &mut Criterion) {
    let classes = classes_of_dim(2, 4);
    c.bench_function("invariant subspaces, m=2, dim 4, q=2", |b| {
        b.iter(|| {
            for cls in &classes {
                black_box(invariant_subspace_count(cls, 2).unwrap());
            }
        })
    });
}

fn decomposition(c: &mut Criterion) {
    let modules: Vec<_> = classes_of_dim(3, 6).iter().map(|c| realize(c, 3).unwrap()).collect();
    c.bench_function("decompose, m=3, dim 6, q=3", |b| {
        b.iter(|| {
            for m in &modules {
                black_box(m.decompose().unwrap());
            }
        })
    });
}

fn automorphisms(c: &mut Criterion) {
    let classes = classes_of_dim(1, 3);
    c.bench_function("automorphisms by enumeration, dim 3, q=3", |b| {
        b.iter(|| {
            for cls in &classes {
                black_box(aut_count_bruteforce(cls, 3).unwrap());
            }
        })
    });
}

criterion_group!(benches, subspace_enumeration, decomposition, automorphisms);
criterion_main!(benches);
