use commcert::exactalg::random::Sampler;
use commcert::mdecomp::{decompose_nxn, quaternion_decompose};
use commcert::{RingDescriptor, Scalar};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrices(c: &mut Criterion) {
    let rings = [
        RingDescriptor::Integers,
        RingDescriptor::Rationals,
        RingDescriptor::prime_field(5).unwrap(),
        RingDescriptor::polynomial(RingDescriptor::Rationals, "x").unwrap(),
    ];
    let mut group = c.benchmark_group("decompose_nxn");
    for ring in &rings {
        for n in [2, 4, 6] {
            let a = Sampler::default().matrix(ring, n, &mut ChaCha8Rng::seed_from_u64(1));
            group.bench_with_input(BenchmarkId::new(ring.to_string(), n), &a, |b, a| {
                b.iter(|| decompose_nxn(a).unwrap())
            });
        }
    }
    group.finish();
}

fn verify(c: &mut Criterion) {
    let a = Sampler::default().matrix(&RingDescriptor::Rationals, 6, &mut ChaCha8Rng::seed_from_u64(2));
    let cert = decompose_nxn(&a).unwrap();
    c.bench_function("verify M6(Q)", |b| b.iter(|| cert.verify()));
}

fn quaternions(c: &mut Criterion) {
    let d = Scalar::quaternion(Sampler::default().quaternion(&mut ChaCha8Rng::seed_from_u64(3)));
    c.bench_function("quaternion_decompose", |b| b.iter(|| quaternion_decompose(&d).unwrap()));
}

criterion_group!(benches, matrices, verify, quaternions);
criterion_main!(benches);
