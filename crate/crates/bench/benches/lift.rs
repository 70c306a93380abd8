use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use monodromy_bench::{hermitian_fixture, spin_loop};
use monodromy_core::spin::preset_c_a;
use monodromy_core::{evolve_state, hermitian_eig, lift_path, unitary_eig, unitary_from_hermitian, StateVector, SpinModel};

fn bench_eig(c: &mut Criterion) {
    let mut group = c.benchmark_group("eig");
    for n in [2usize, 4, 8] {
        let h = hermitian_fixture(n);
        let u = unitary_from_hermitian(&h, 0.7).unwrap();
        group.bench_with_input(BenchmarkId::new("hermitian", n), &h, |b, h| {
            b.iter(|| hermitian_eig(black_box(h)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("unitary", n), &u, |b, u| {
            b.iter(|| unitary_eig(black_box(u)).unwrap())
        });
    }
    group.finish();
}

fn bench_lift(c: &mut Criterion) {
    let mut group = c.benchmark_group("lift");
    for segments in [16usize, 128, 1024] {
        let (path, frame) = spin_loop(segments);
        group.bench_with_input(BenchmarkId::new("circle", segments), &(path, frame), |b, (p, f)| {
            b.iter(|| lift_path(&SpinModel, black_box(p), f).unwrap())
        });
    }
    group.finish();
}

fn bench_evolve(c: &mut Criterion) {
    let path = preset_c_a();
    let (_, frame) = spin_loop(16);
    let psi0 = StateVector::from_projector(&frame.projectors()[0]);
    c.bench_function("evolve/C_a/1024", |b| {
        b.iter(|| evolve_state(&SpinModel, black_box(&path), &psi0, 1024).unwrap())
    });
}

criterion_group!(benches, bench_eig, bench_lift, bench_evolve);
criterion_main!(benches);
