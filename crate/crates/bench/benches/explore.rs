use commcert::explore::{check_section2, parse_ring_spec, xi_exact};
use criterion::{criterion_group, criterion_main, Criterion};

fn build(c: &mut Criterion) {
    c.bench_function("build M2(Z4)", |b| b.iter(|| parse_ring_spec("M2(Z4)").unwrap()));
}

fn saturation(c: &mut Criterion) {
    for spec in ["M2(F2)", "M2(Z4)", "U3(F2)"] {
        let r = parse_ring_spec(spec).unwrap();
        c.bench_function(&format!("xi_exact {spec}"), |b| b.iter(|| xi_exact(&r, 4)));
    }
}

fn conditions(c: &mut Criterion) {
    let r = parse_ring_spec("M2(Z4)").unwrap();
    c.bench_function("check_section2 M2(Z4)", |b| b.iter(|| check_section2(&r).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = build, saturation, conditions
}
criterion_main!(benches);
