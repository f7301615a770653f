//! Acceptance run: each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use commcert::cert::Certificate;
use commcert::exactalg::random::Sampler;
use commcert::explore::{
    check_section2, example22_check, parse_ring_spec, radical_power_check, xi_exact, XiValue,
};
use commcert::freealg::check_identities;
use commcert::mdecomp::{decompose_nxn, quaternion_decompose, quaternion_terms};
use commcert::rewrite::{pipeline_12d, xi3_decompose, SingleWitness, UnitSummand};
use commcert::z23::{verify_unit, z23_xi6, Z23Element};
use commcert::{
    split_subring_witness, subring_witness, witness_triple, DirectSum, Matrix, RingDescriptor, RingElement,
    Scalar,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn rng(stream: u64, index: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(0xacce97);
    r.set_stream(stream);
    r.set_word_pos(u128::from(index) << 20);
    r
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_cert<E: RingElement>(cert: &Certificate<E>, target: &E, max_pairs: usize, what: &str) -> Result<(), String> {
    ensure(cert.target == *target, || format!("{what}: certificate target differs from input"))?;
    ensure(cert.verify().is_valid(), || format!("{what}: {}", cert.verify()))?;
    ensure(cert.single_count() == 0, || format!("{what}: unexpected single commutators"))?;
    ensure(cert.pair_count() <= max_pairs, || format!("{what}: {} pair terms > {max_pairs}", cert.pair_count()))
}

fn matrix_rings() -> Outcome {
    let rings = [
        RingDescriptor::Integers,
        RingDescriptor::Rationals,
        RingDescriptor::integers_mod(6).unwrap(),
        RingDescriptor::prime_field(5).unwrap(),
        RingDescriptor::polynomial(RingDescriptor::Rationals, "x").unwrap(),
    ];
    let sampler = Sampler::new(1_000_000, 8);
    let jobs: Vec<(usize, usize, u64)> = (0..rings.len())
        .flat_map(|r| (2..=6).flat_map(move |n| (0..500).map(move |i| (r, n, i))))
        .collect();
    jobs.par_iter().try_for_each(|&(r, n, i)| {
        let ring = &rings[r];
        let a = sampler.matrix(ring, n, &mut rng(1 + r as u64 * 10 + n as u64, i));
        let cert = decompose_nxn(&a).map_err(|e| e.to_string())?;
        check_cert(&cert, &a, 2, &format!("{ring} n={n} sample {i}"))
    })?;
    Ok(format!("{} matrices over Z, Q, Z6, F5, Q[x], n = 2..6", jobs.len()))
}

fn witness_triples() -> Outcome {
    for n in 2..=12 {
        let t = witness_triple(n).map_err(|e| e.to_string())?;
        t.check().map_err(|e| e.to_string())?;
        ensure(t.bracket_uv.is_unimodular(), || format!("n = {n}: det [u,v] is not ±1"))?;
    }
    Ok("n = 2..12, all four invariants".into())
}

fn three_products() -> Outcome {
    let sampler = Sampler::new(1_000_000, 0);
    let sum_witness = subring_witness(&[2, 3]).map_err(|e| e.to_string())?;
    (0..200u64).into_par_iter().try_for_each(|i| {
        let mut r = rng(100, i);
        let a = DirectSum::new(vec![
            sampler.matrix(&RingDescriptor::Integers, 2, &mut r),
            sampler.matrix(&RingDescriptor::Integers, 3, &mut r),
        ])
        .unwrap();
        let cert = xi3_decompose(&a, &sum_witness).map_err(|e| e.to_string())?;
        check_cert(&cert, &a, 3, &format!("M2(Z)+M3(Z) sample {i}"))
    })?;
    let q = RingDescriptor::Rationals;
    let w5 = witness_triple(5).and_then(|t| t.unit_witness_over(&q)).map_err(|e| e.to_string())?;
    (0..200u64).into_par_iter().try_for_each(|i| {
        let a = sampler.matrix(&q, 5, &mut rng(101, i));
        let cert = xi3_decompose(&a, &w5).map_err(|e| e.to_string())?;
        check_cert(&cert, &a, 3, &format!("M5(Q) sample {i}"))
    })?;
    Ok("200 in M2(Z)+M3(Z), 200 in M5(Q)".into())
}

fn twelve_d_pipeline() -> Outcome {
    let sampler = Sampler::new(1_000_000, 0);
    let q = RingDescriptor::Rationals;
    let single: SingleWitness<Matrix> =
        witness_triple(3).and_then(|t| t.unit_witness_over(&q)).map_err(|e| e.to_string())?;
    let d1 = vec![single.as_summand()];
    (0..100u64).into_par_iter().try_for_each(|i| {
        let a = sampler.matrix(&q, 3, &mut rng(200, i));
        let cert = pipeline_12d(&a, &d1).map_err(|e| e.to_string())?;
        check_cert(&cert, &a, 12, &format!("M3(Q) d=1 sample {i}"))
    })?;
    let d2: Vec<UnitSummand<DirectSum>> =
        split_subring_witness(&[2, 3], &RingDescriptor::Integers).map_err(|e| e.to_string())?;
    ensure(d2.len() == 2, || "expected a two-summand witness".into())?;
    (0..100u64).into_par_iter().try_for_each(|i| {
        let mut r = rng(201, i);
        let a = DirectSum::new(vec![
            sampler.matrix(&RingDescriptor::Integers, 2, &mut r),
            sampler.matrix(&RingDescriptor::Integers, 3, &mut r),
        ])
        .unwrap();
        let cert = pipeline_12d(&a, &d2).map_err(|e| e.to_string())?;
        check_cert(&cert, &a, 24, &format!("M2(Z)+M3(Z) d=2 sample {i}"))
    })?;
    Ok("100 with d = 1 in M3(Q), 100 with d = 2 in M2(Z)+M3(Z)".into())
}

fn brute_force_xi() -> Outcome {
    let m2f2 = parse_ring_spec("M2(F2)").map_err(|e| e.to_string())?;
    let xi = xi_exact(&m2f2, 4);
    ensure(xi == XiValue::Exact(1), || format!("xi(M2(F2)) = {xi:?}, expected 1"))?;
    let m2z4 = parse_ring_spec("M2(Z4)").map_err(|e| e.to_string())?;
    let xi4 = xi_exact(&m2z4, 4);
    match xi4 {
        XiValue::Exact(n) if n <= 2 => Ok(format!("xi(M2(F2)) = 1, xi(M2(Z4)) = {n}")),
        other => Err(format!("xi(M2(Z4)) = {other:?}, expected at most 2")),
    }
}

fn quaternions() -> Outcome {
    let one = Scalar::parse(&RingDescriptor::Quaternions, "1").map_err(|e| e.to_string())?;
    let raw = quaternion_terms(&one).map_err(|e| e.to_string())?;
    let values: Vec<Scalar> = raw.iter().map(|t| t.value()).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    ensure(values[0].is_zero() && values[1].is_one(), || format!("d = 1 gives term values {values:?}"))?;
    let sampler = Sampler::new(1_000_000, 0);
    (0..200u64).into_par_iter().try_for_each(|i| {
        let d = Scalar::quaternion(sampler.quaternion(&mut rng(300, i)));
        let cert = quaternion_decompose(&d).map_err(|e| e.to_string())?;
        check_cert(&cert, &d, 2, &format!("quaternion sample {i}"))
    })?;
    Ok("term values (0, 1) for d = 1; 200 random quaternions".into())
}

fn dimension_drop() -> Outcome {
    let report = verify_unit(101).map_err(|e| e.to_string())?;
    ensure(report.passed(1e-12), || format!("{report:?}"))?;
    let sampler = Sampler::new(1000, 0);
    (0..20u64).into_par_iter().try_for_each(|i| {
        let a = Z23Element::random(&mut rng(400, i), &sampler);
        ensure(a.is_admissible(), || format!("sample {i} is not admissible"))?;
        let cert = z23_xi6(&a).map_err(|e| e.to_string())?;
        check_cert(&cert, &a, 6, &format!("Z23 sample {i}"))?;
        for t in &cert.terms {
            for w in t.witnesses() {
                ensure(w.p().is_admissible() && w.q().is_admissible(), || {
                    format!("sample {i}: inadmissible witness entry")
                })?;
            }
        }
        Ok::<(), String>(())
    })?;
    Ok(format!("exact halves and sum; residual {:.1e} on 101 points; 20 random elements", report.max_residual))
}

fn identities() -> Outcome {
    let results = check_identities().map_err(|e| e.to_string())?;
    Ok(format!("{} identities expand to zero difference", results.len()))
}

fn finite_rings() -> Outcome {
    for spec in ["Z6", "M2(F2)", "M2(Z4)", "U2(F2)", "U3(F2)"] {
        let r = parse_ring_spec(spec).map_err(|e| e.to_string())?;
        let rep = check_section2(&r).map_err(|e| e.to_string())?;
        ensure(!rep.semiprime || rep.agree, || format!("{spec}: {rep:?}"))?;
    }
    for q in [2, 4] {
        let rep = example22_check(q).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("F{q}: {rep:?}"))?;
    }
    for spec in ["U2(F2)", "M2(F2)"] {
        let r = parse_ring_spec(spec).map_err(|e| e.to_string())?;
        radical_power_check(&r).map_err(|e| e.to_string())?;
    }
    Ok("5 rings, abelian non-central Lie ideal over F2 and F4, radical powers".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 matrix rings: at most 2 products", matrix_rings, Duration::from_secs(10)),
        ("2 witness triples", witness_triples, Duration::from_secs(1)),
        ("3 matrix subrings: at most 3 products", three_products, Duration::from_secs(5)),
        ("4 unit-sum pipeline: at most 12d products", twelve_d_pipeline, Duration::from_secs(5)),
        ("5 brute-force xi", brute_force_xi, Duration::from_secs(1)),
        ("6 quaternions: at most 2 products", quaternions, Duration::from_secs(1)),
        ("7 dimension-drop unit and 6 products", dimension_drop, Duration::from_secs(5)),
        ("8 free-algebra identities", identities, Duration::from_secs(1)),
        ("9 finite-ring commutativity checks", finite_rings, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= limit => format!("PASS  {name}: {detail} ({:.2}s)", elapsed.as_secs_f64()),
            Ok(detail) => {
                failed += 1;
                format!("FAIL  {name}: {detail}, but took {:.2}s > {}s", elapsed.as_secs_f64(), limit.as_secs())
            }
            Err(reason) => {
                failed += 1;
                format!("FAIL  {name}: {reason} ({:.2}s)", elapsed.as_secs_f64())
            }
        };
        println!("{verdict}");
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
