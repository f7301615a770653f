use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use commcert::cert::{Certificate, CommutatorWitness};
use commcert::exactalg::random::Sampler;
use commcert::explore::{
    check_section2, commutator_set, parse_ring_spec, radical_power_check, xi_exact, FiniteRing, XiValue,
};
use commcert::freealg::identity_suite;
use commcert::mdecomp::{decompose_direct_sum, decompose_nxn, quaternion_decompose};
use commcert::rewrite::{xi3_decompose, xi_upper_bound};
use commcert::witness::subring_witness_over;
use commcert::z23::{verify_unit, z23_xi6, Z23Element};
use commcert::{witness_triple, DirectSum, Matrix, RingDescriptor, RingElement, Scalar, Verdict};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, EXIT_FAILED};
use crate::json::{decode_certificate, encode_certificate, to_pretty, Codec, ElementJson, WitnessJson};
use crate::spec::{parse_algebra, parse_structure, AlgebraSpec};

#[derive(Debug, Parser)]
#[command(name = "commcert", version, about = "Certificates writing ring elements as sums of products of commutators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a matrix, direct-sum, quaternion or Z23 element as at most two (six for Z23) products of commutators.
    Decompose(DecomposeArgs),
    /// Recompute every commutator in a certificate file and check the sum.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Print the integer witness triple for M_n and its checks.
    Witness {
        #[arg(long)]
        n: usize,
    },
    /// Three-product decomposition from a unit witness.
    Xi3 {
        #[arg(long)]
        ring: String,
        /// Only `auto` (the built-in witness) is supported.
        #[arg(long, default_value = "auto")]
        witness: String,
        #[arg(long)]
        element: PathBuf,
    },
    /// Known upper bounds on the number of products needed in a ring.
    Bound {
        #[arg(long)]
        ring: String,
    },
    /// Exhaustive checks over a finite ring: M<n>(R), U<n>(R), Z<m>, F<p>, F4 or tables:<file>.
    Brute {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 4)]
        xi_cap: usize,
    },
    /// The dimension-drop algebra.
    Z23 {
        #[command(subcommand)]
        command: Z23Command,
    },
    /// Expand the free-algebra identity suite.
    Identities {
        /// Print a text table instead of JSON.
        #[arg(long)]
        table: bool,
    },
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub ring: String,
    /// Element file (matrix, direct sum or Z23 JSON).
    #[arg(long, required_unless_present = "random", conflicts_with = "random")]
    pub matrix: Option<PathBuf>,
    /// Verify before printing; exit 2 if verification fails.
    #[arg(long)]
    pub check: bool,
    /// Decompose this many random elements instead of a file.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Z23Command {
    /// Exact and numeric check of the unit decomposition.
    VerifyUnit {
        #[arg(long, default_value_t = 101)]
        grid: usize,
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
    },
    /// Six-product certificate for an admissible element.
    Xi6 {
        #[arg(long)]
        element: PathBuf,
    },
}

/// Result JSON plus exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn json<T: Serialize>(v: &T, passed: bool) -> Self {
        Self {
            stdout: to_pretty(v),
            code: if passed { 0 } else { EXIT_FAILED },
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::malformed("io_error", format!("{}: {e}", path.display())))
}

fn read_element<E: Codec>(path: &Path) -> Result<E, CliError> {
    let v: Value = serde_json::from_str(&read(path)?)?;
    E::decode_value(v)
}

fn mismatch(what: String) -> CliError {
    CliError::malformed("ring_mismatch", what)
}

fn expect_matrix(m: &Matrix, n: usize, ring: &RingDescriptor) -> Result<(), CliError> {
    if m.ring() != ring {
        return Err(mismatch(format!("element is over {}, --ring says {ring}", m.ring())));
    }
    if m.n() != n {
        return Err(CliError::malformed(
            "shape_mismatch",
            format!("element is {0}x{0}, --ring says {n}x{n}", m.n()),
        ));
    }
    Ok(())
}

fn expect_blocks(d: &DirectSum, blocks: &[(usize, RingDescriptor)]) -> Result<(), CliError> {
    if d.parts().len() != blocks.len() {
        return Err(CliError::malformed(
            "shape_mismatch",
            format!("element has {} blocks, --ring has {}", d.parts().len(), blocks.len()),
        ));
    }
    d.parts().iter().zip(blocks).try_for_each(|(m, (n, r))| expect_matrix(m, *n, r))
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Valid => serde_json::json!({ "valid": true }),
        Verdict::Invalid(reason) => serde_json::json!({ "valid": false, "reason": reason }),
    }
}

/// Quaternion certificates travel as 1x1 matrices, which have the same commutators.
fn quaternion_as_matrix(d: &Scalar) -> Result<Certificate<Matrix>, CliError> {
    let lift = |s: &Scalar| Matrix::new(s.ring().clone(), 1, vec![s.value().clone()]).expect("1x1");
    Ok(quaternion_decompose(d)?.map(lift)?)
}

enum Decomposed {
    Matrix(Certificate<Matrix>),
    DirectSum(Certificate<DirectSum>),
    Z23(Certificate<Z23Element>),
}

impl Decomposed {
    fn verify(&self) -> Verdict {
        match self {
            Decomposed::Matrix(c) => c.verify(),
            Decomposed::DirectSum(c) => c.verify(),
            Decomposed::Z23(c) => c.verify(),
        }
    }

    fn encode(&self) -> crate::json::CertificateJson<ElementJson> {
        match self {
            Decomposed::Matrix(c) => encode_certificate(c),
            Decomposed::DirectSum(c) => encode_certificate(c),
            Decomposed::Z23(c) => encode_certificate(c),
        }
    }
}

fn decompose_file(spec: &AlgebraSpec, path: &Path) -> Result<Decomposed, CliError> {
    Ok(match spec {
        AlgebraSpec::Matrix { n, ring } => {
            let m: Matrix = read_element(path)?;
            expect_matrix(&m, *n, ring)?;
            Decomposed::Matrix(decompose_nxn(&m)?)
        }
        AlgebraSpec::DirectSum(blocks) => {
            let d: DirectSum = read_element(path)?;
            expect_blocks(&d, blocks)?;
            Decomposed::DirectSum(decompose_direct_sum(&d)?)
        }
        AlgebraSpec::Quaternions => {
            let m: Matrix = read_element(path)?;
            expect_matrix(&m, 1, &RingDescriptor::Quaternions)?;
            Decomposed::Matrix(quaternion_as_matrix(&m.entry(0, 0))?)
        }
        AlgebraSpec::Z23 => Decomposed::Z23(z23_xi6(&read_element(path)?)?),
    })
}

fn decompose_random(spec: &AlgebraSpec, seed: u64, index: u64) -> Result<Decomposed, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let s = Sampler::default();
    Ok(match spec {
        AlgebraSpec::Matrix { n, ring } => Decomposed::Matrix(decompose_nxn(&s.matrix(ring, *n, &mut rng))?),
        AlgebraSpec::DirectSum(blocks) => {
            let parts = blocks.iter().map(|(n, r)| s.matrix(r, *n, &mut rng)).collect();
            Decomposed::DirectSum(decompose_direct_sum(&DirectSum::new(parts)?)?)
        }
        AlgebraSpec::Quaternions => Decomposed::Matrix(quaternion_as_matrix(&Scalar::quaternion(s.quaternion(&mut rng)))?),
        AlgebraSpec::Z23 => Decomposed::Z23(z23_xi6(&Z23Element::random(&mut rng, &s))?),
    })
}

fn decompose(args: &DecomposeArgs) -> Result<Output, CliError> {
    let spec = parse_algebra(&args.ring)?;
    let certs = match (&args.matrix, args.random) {
        (_, Some(count)) => (0..count as u64)
            .into_par_iter()
            .map(|i| decompose_random(&spec, args.seed, i))
            .collect::<Result<Vec<_>, _>>()?,
        (Some(path), None) => vec![decompose_file(&spec, path)?],
        (None, None) => return Err(CliError::malformed("usage", "decompose needs --matrix or --random")),
    };
    if args.check {
        if let Some(bad) = certs.iter().map(Decomposed::verify).find(|v| !v.is_valid()) {
            return Ok(Output::json(&verdict_json(&bad), false));
        }
    }
    let encoded: Vec<_> = certs.iter().map(Decomposed::encode).collect();
    Ok(match args.random {
        Some(_) => Output::json(&encoded, true),
        None => Output::json(&encoded[0], true),
    })
}

fn verify(path: &Path) -> Result<Output, CliError> {
    let verdict = decode_certificate(&read(path)?)?.verify();
    Ok(Output::json(&verdict_json(&verdict), verdict.is_valid()))
}

#[derive(Serialize)]
struct WitnessReport {
    n: usize,
    u: WitnessJson<ElementJson>,
    v: WitnessJson<ElementJson>,
    w: WitnessJson<ElementJson>,
    bracket_uv: ElementJson,
    s: ElementJson,
    checks: WitnessChecks,
}

#[derive(Serialize)]
struct WitnessChecks {
    brackets_recomputed: bool,
    det_bracket_uv: String,
    det_is_unit: bool,
    vw_equals_v: bool,
    s_bracket_u_vw_is_one: bool,
    passed: bool,
}

fn witness(n: usize) -> Result<Output, CliError> {
    let t = witness_triple(n)?;
    let pair = |c: &CommutatorWitness<Matrix>| WitnessJson {
        p: c.p().encode(),
        q: c.q().encode(),
    };
    let brackets_recomputed = [&t.u, &t.v, &t.w].iter().all(|c| c.is_consistent())
        && t.u.value().commutator(t.v.value())? == t.bracket_uv;
    let vw = t.v.value().try_mul(t.w.value())?;
    let unit = t.s.try_mul(&t.u.value().commutator(&vw)?)?.is_one();
    let det = t.bracket_uv.det()?;
    let checks = WitnessChecks {
        brackets_recomputed,
        det_bracket_uv: t.bracket_uv.ring().format_value(&det),
        det_is_unit: t.bracket_uv.is_unimodular(),
        vw_equals_v: vw == *t.v.value(),
        s_bracket_u_vw_is_one: unit,
        passed: t.check().is_ok(),
    };
    let passed = checks.passed && checks.brackets_recomputed && checks.det_is_unit && checks.vw_equals_v && unit;
    let report = WitnessReport {
        n,
        u: pair(&t.u),
        v: pair(&t.v),
        w: pair(&t.w),
        bracket_uv: t.bracket_uv.encode(),
        s: t.s.encode(),
        checks,
    };
    Ok(Output::json(&report, passed))
}

fn xi3(ring: &str, witness: &str, element: &Path) -> Result<Output, CliError> {
    if witness != "auto" {
        return Err(CliError::malformed("unsupported_witness", format!("--witness {witness:?}: only \"auto\" is supported")));
    }
    let cert = match parse_algebra(ring)? {
        AlgebraSpec::Matrix { n, ring } => {
            let m: Matrix = read_element(element)?;
            expect_matrix(&m, n, &ring)?;
            let w = witness_triple(n)?.unit_witness_over(&ring)?;
            Decomposed::Matrix(xi3_decompose(&m, &w)?)
        }
        AlgebraSpec::DirectSum(blocks) => {
            let d: DirectSum = read_element(element)?;
            expect_blocks(&d, &blocks)?;
            let base = &blocks[0].1;
            if blocks.iter().any(|(_, r)| r != base) {
                return Err(mismatch("the built-in witness needs one coefficient ring for all blocks".into()));
            }
            let sizes: Vec<usize> = blocks.iter().map(|b| b.0).collect();
            Decomposed::DirectSum(xi3_decompose(&d, &subring_witness_over(&sizes, base)?)?)
        }
        AlgebraSpec::Quaternions | AlgebraSpec::Z23 => {
            return Err(CliError::malformed("unsupported_ring", format!("{ring}: no built-in unit witness")))
        }
    };
    Ok(Output::json(&cert.encode(), true))
}

#[derive(Serialize)]
struct BoundJson {
    value: u64,
    rule: &'static str,
    algorithm: Option<&'static str>,
}

fn bound(ring: &str) -> Result<Output, CliError> {
    let report = xi_upper_bound(&parse_structure(ring)?)?;
    let body = serde_json::json!({
        "ring": ring.trim(),
        "structure": format!("{:?}", report.structure),
        "best": report.best().value,
        "bounds": report
            .bounds
            .iter()
            .map(|b| BoundJson { value: b.value, rule: b.rule, algorithm: b.algorithm })
            .collect::<Vec<_>>(),
    });
    Ok(Output::json(&body, true))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TablesFile {
    #[serde(default)]
    name: Option<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

fn finite_ring(spec: &str) -> Result<FiniteRing, CliError> {
    match spec.trim().strip_prefix("tables:") {
        Some(path) => {
            let t: TablesFile = serde_json::from_str(&read(Path::new(path))?)?;
            Ok(FiniteRing::from_tables(t.name.unwrap_or_else(|| spec.trim().to_string()), t.add, t.mul)?)
        }
        None => Ok(parse_ring_spec(spec)?),
    }
}

#[derive(Serialize)]
struct BruteReport {
    ring: String,
    size: usize,
    commutative: bool,
    xi: Option<usize>,
    xi_status: &'static str,
    xi_cap: usize,
    commutator_set_size: usize,
    semiprime: bool,
    conditions: [bool; 4],
    conditions_agree: bool,
    commutator_ideal_size: usize,
    commutator_ideal_nil: bool,
    radical_powers: RadicalJson,
}

#[derive(Serialize)]
struct RadicalJson {
    ideal_size: usize,
    span_size: usize,
    histogram: BTreeMap<usize, usize>,
    max_exponent: usize,
}

fn brute(spec: &str, xi_cap: usize) -> Result<Output, CliError> {
    let r = finite_ring(spec)?;
    let (xi, xi_status) = match xi_exact(&r, xi_cap) {
        XiValue::Exact(n) => (Some(n), "exact"),
        XiValue::NotGenerated => (None, "not-generated"),
        XiValue::CapReached(_) => (None, "cap-reached"),
    };
    let s2 = check_section2(&r)?;
    let rad = radical_power_check(&r)?;
    let report = BruteReport {
        ring: r.name().to_string(),
        size: r.size(),
        commutative: r.is_commutative(),
        xi,
        xi_status,
        xi_cap,
        commutator_set_size: commutator_set(&r).count_ones(..),
        semiprime: s2.semiprime,
        conditions: s2.conditions,
        conditions_agree: s2.agree,
        commutator_ideal_size: s2.commutator_ideal_size,
        commutator_ideal_nil: s2.commutator_ideal_nil,
        radical_powers: RadicalJson {
            ideal_size: rad.ideal_size,
            span_size: rad.span_size,
            histogram: rad.histogram,
            max_exponent: rad.max_exponent,
        },
    };
    Ok(Output::json(&report, true))
}

fn z23(cmd: &Z23Command) -> Result<Output, CliError> {
    match cmd {
        Z23Command::VerifyUnit { grid, tolerance } => {
            let r = verify_unit(*grid)?;
            let passed = r.passed(*tolerance);
            let body = serde_json::json!({
                "first_half": r.first_half,
                "second_half": r.second_half,
                "sum_is_one": r.sum_is_one,
                "all_admissible": r.all_admissible,
                "grid_points": r.grid_points,
                "max_residual": r.max_residual,
                "tolerance": tolerance,
                "passed": passed,
            });
            Ok(Output::json(&body, passed))
        }
        Z23Command::Xi6 { element } => {
            let a: Z23Element = read_element(element)?;
            Ok(Output::json(&encode_certificate(&z23_xi6(&a)?), true))
        }
    }
}

#[derive(Serialize)]
struct IdentityJson {
    name: &'static str,
    rules: Vec<&'static str>,
    lhs_terms: usize,
    rhs_terms: usize,
    residual_terms: usize,
    passed: bool,
}

fn identities(table: bool) -> Result<Output, CliError> {
    let rows: Vec<IdentityJson> = identity_suite()
        .into_iter()
        .map(|r| IdentityJson {
            passed: r.passed(),
            name: r.name,
            rules: r.rules,
            lhs_terms: r.lhs_terms,
            rhs_terms: r.rhs_terms,
            residual_terms: r.residual_terms,
        })
        .collect();
    let passed = rows.iter().all(|r| r.passed);
    if !table {
        return Ok(Output::json(&serde_json::json!({ "passed": passed, "identities": rows }), passed));
    }
    let mut out = format!("{:<22} {:<8} {:>5} {:>5} {:>8}  result\n", "identity", "rules", "lhs", "rhs", "residual");
    for r in &rows {
        let rules = if r.rules.is_empty() { "-".to_string() } else { r.rules.join(",") };
        out += &format!(
            "{:<22} {:<8} {:>5} {:>5} {:>8}  {}\n",
            r.name,
            rules,
            r.lhs_terms,
            r.rhs_terms,
            r.residual_terms,
            if r.passed { "PASS" } else { "FAIL" }
        );
    }
    Ok(Output {
        stdout: out,
        code: if passed { 0 } else { EXIT_FAILED },
    })
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Decompose(args) => decompose(args),
        Command::Verify { certificate } => verify(certificate),
        Command::Witness { n } => witness(*n),
        Command::Xi3 { ring, witness, element } => xi3(ring, witness, element),
        Command::Bound { ring } => bound(ring),
        Command::Brute { ring, xi_cap } => brute(ring, *xi_cap),
        Command::Z23 { command } => z23(command),
        Command::Identities { table } => identities(*table),
    }
}
