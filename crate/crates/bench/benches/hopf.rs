use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hopfkit::exact_seq::five_term;
use hopfkit::groups::schur_multiplier;
use hopfkit::subquot::huq_commutator;
use hopfkit::{group_algebra, zoo, Field, FinGroup, HopfSubalgebra};

fn schur(c: &mut Criterion) {
    let mut group = c.benchmark_group("schur_multiplier");
    group.sample_size(10);
    let c4 = FinGroup::cyclic(4);
    let cases = [
        ("S3", FinGroup::symmetric3()),
        ("Q8", FinGroup::quaternion()),
        ("D4", FinGroup::dihedral(4)),
        ("C4xC4", FinGroup::direct_product(&c4, &c4)),
    ];
    for (name, g) in cases {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| schur_multiplier(black_box(g), 16).unwrap())
        });
    }
    group.finish();
}

fn commutator(c: &mut Criterion) {
    let mut group = c.benchmark_group("huq_commutator");
    for (name, g) in [
        ("S3", FinGroup::symmetric3()),
        ("Q8", FinGroup::quaternion()),
    ] {
        let whole = HopfSubalgebra::whole(Arc::new(group_algebra(&g, Field::Rational)));
        group.bench_function(name, |b| {
            b.iter(|| huq_commutator(&whole, black_box(&whole)).unwrap())
        });
    }
    group.finish();
}

fn five_term_sequence(c: &mut Criterion) {
    let mut group = c.benchmark_group("five_term");
    group.sample_size(20);
    for (name, phi) in [("Q8->C2xC2", zoo::q8_to_v4()), ("S3->C2", zoo::s3_to_c2())] {
        group.bench_function(name, |b| {
            b.iter(|| {
                five_term(black_box(&phi), Field::Rational, 16)
                    .unwrap()
                    .sequence
                    .check_exactness()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, schur, commutator, five_term_sequence);
criterion_main!(benches);
