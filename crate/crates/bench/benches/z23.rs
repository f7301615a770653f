use commcert::exactalg::random::Sampler;
use commcert::z23::{verify_unit, z23_witness, z23_xi6, Z23Element};
use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn z23(c: &mut Criterion) {
    c.bench_function("z23_witness", |b| b.iter(z23_witness));
    c.bench_function("verify_unit 101", |b| b.iter(|| verify_unit(101).unwrap()));
    let a = Z23Element::random(&mut ChaCha8Rng::seed_from_u64(6), &Sampler::new(1000, 0));
    c.bench_function("z23_xi6", |b| b.iter(|| z23_xi6(&a).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = z23
}
criterion_main!(benches);
