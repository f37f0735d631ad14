use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use mbe_bench::all_words;
use mbe_core::identities::mbe_residual;
use mbe_core::ncalgebra::{normal_order, GenSymbol};
use mbe_core::plane::build_plane_system;
use mbe_core::rtt::solve_family;
use mbe_core::{Deformation, DeformationSpec};

fn normal_ordering(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_order");
    for id in Deformation::ALL {
        let sys = id.spec().group_system();
        let words = all_words(&GenSymbol::GROUP, 3);
        group.bench_function(format!("group_deg3_{id}"), |b| b.iter(|| normal_order(black_box(&words), &sys)));
    }
    let plane = build_plane_system(&Deformation::Pq.spec(), &DeformationSpec::k_symbol()).unwrap();
    let words = all_words(&GenSymbol::PLANE, 3);
    group.bench_function("plane_deg3_pq", |b| b.iter(|| normal_order(black_box(&words), &plane.rules)));
    group.finish();
}

fn mbe_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("mbe_residual");
    for id in Deformation::ALL {
        let d = id.spec();
        let k = DeformationSpec::k_symbol();
        group.bench_function(id.name(), |b| b.iter(|| mbe_residual(black_box(&d), &k)));
    }
    group.finish();
}

fn rtt_solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("rtt_solve");
    group.sample_size(10);
    for id in Deformation::ALL {
        let d = id.spec();
        group.bench_function(id.name(), |b| b.iter(|| solve_family(black_box(&d))));
    }
    group.finish();
}

criterion_group!(benches, normal_ordering, mbe_check, rtt_solve);
criterion_main!(benches);
