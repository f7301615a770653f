//! The dimension-drop algebra `Z₂,₃`: continuous `f: [0,1] → M₂ ⊗ M₃` with
//! `f(0) ∈ M₂ ⊗ 1` and `f(1) ∈ 1 ⊗ M₃`.
//!
//! Elements are modelled exactly as polynomials in `T = t^{1/16}` and
//! `S = (1−t)^{1/16}` with coefficients in `M₆(Q)`, reduced by
//! `S¹⁶ = 1 − T¹⁶` to S-degree below 16. Kronecker products use row index
//! `3i + k` for `e_i ⊗ e_k`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;
use rand::Rng;

use crate::cert::{Certificate, CommutatorWitness};
use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::exactalg::random::Sampler;
use crate::exactalg::{Matrix, RingDescriptor, Value};
use crate::rewrite::{unit_sum_decompose, SingleWitness};
use crate::witness::witness_triple;

/// Exponent denominator: `T = t^{1/ROOT}`, `S = (1−t)^{1/ROOT}`.
pub const ROOT: u32 = 16;

/// `Σ T^i S^j · M_{ij}` in canonical form: `j < ROOT`, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Z23Element {
    terms: BTreeMap<(u32, u32), Matrix>,
}

fn q() -> RingDescriptor {
    RingDescriptor::Rationals
}

/// `a ⊗ b` for a 2×2 and a 3×3 matrix, as a rational 6×6 matrix.
pub fn kron(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.n() != 2 || b.n() != 3 {
        return Err(Error::ShapeMismatch(format!("kron needs 2x2 ⊗ 3x3, got {}x{0} ⊗ {}x{1}", a.n(), b.n())));
    }
    let (a, b) = (a.embed(&q())?, b.embed(&q())?);
    let ring = q();
    Ok(Matrix::from_fn(&ring, 6, |r, c| ring.mul(a.get(r / 3, c / 3), b.get(r % 3, c % 3))))
}

/// `1₂ ⊗ m`.
pub fn right_factor(m: &Matrix) -> Matrix {
    kron(&Matrix::identity(&RingDescriptor::Integers, 2), m).expect("3x3 integer or rational matrix")
}

/// `m ⊗ 1₃`.
pub fn left_factor(m: &Matrix) -> Matrix {
    kron(m, &Matrix::identity(&RingDescriptor::Integers, 3)).expect("2x2 integer or rational matrix")
}

impl Z23Element {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Matrix::identity(&q(), 6)).expect("6x6")
    }

    pub fn constant(m: Matrix) -> Result<Self> {
        Self::monomial(0, 0, m)
    }

    /// `T^t · S^s · m`, reduced.
    pub fn monomial(t: u32, s: u32, m: Matrix) -> Result<Self> {
        Self::from_monomials([(t, s, m)])
    }

    pub fn from_monomials(monomials: impl IntoIterator<Item = (u32, u32, Matrix)>) -> Result<Self> {
        let mut out = Self::zero();
        for (t, s, m) in monomials {
            if m.n() != 6 {
                return Err(Error::ShapeMismatch(format!("Z23 coefficients are 6x6, got {0}x{0}", m.n())));
            }
            out.add_monomial(t, s, m.embed(&q())?);
        }
        Ok(out)
    }

    /// `h = t·1₆ = T¹⁶·1₆`.
    pub fn h() -> Self {
        Self::monomial(ROOT, 0, Matrix::identity(&q(), 6)).expect("6x6")
    }

    /// Monomials `(T-exponent, S-exponent, coefficient)` in canonical order.
    pub fn monomials(&self) -> impl Iterator<Item = (u32, u32, &Matrix)> {
        self.terms.iter().map(|(&(t, s), m)| (t, s, m))
    }

    fn add_monomial(&mut self, t: u32, s: u32, m: Matrix) {
        if s >= ROOT {
            // S^ROOT = 1 − T^ROOT
            self.add_monomial(t, s - ROOT, m.clone());
            self.add_monomial(t + ROOT, s - ROOT, m.neg());
            return;
        }
        let slot = self.terms.entry((t, s)).or_insert_with(|| Matrix::zero(&q(), 6));
        *slot = slot.try_add(&m).expect("6x6 rational");
        if slot.is_zero() {
            self.terms.remove(&(t, s));
        }
    }

    /// Value at `t = 0`, i.e. `T = 0`, `S = 1`.
    pub fn at_zero(&self) -> Matrix {
        self.sum_where(|t, _| t == 0)
    }

    /// Value at `t = 1`, i.e. `T = 1`, `S = 0`.
    pub fn at_one(&self) -> Matrix {
        self.sum_where(|_, s| s == 0)
    }

    fn sum_where(&self, keep: impl Fn(u32, u32) -> bool) -> Matrix {
        self.monomials()
            .filter(|&(t, s, _)| keep(t, s))
            .fold(Matrix::zero(&q(), 6), |acc, (_, _, m)| acc.try_add(m).expect("6x6"))
    }

    pub fn boundary_check(&self) -> Boundary {
        let start = self.at_zero();
        if !is_left_pattern(&start) {
            return Boundary::Violation { end: Endpoint::Zero, value: start };
        }
        let end = self.at_one();
        if !is_right_pattern(&end) {
            return Boundary::Violation { end: Endpoint::One, value: end };
        }
        Boundary::Admissible
    }

    pub fn is_admissible(&self) -> bool {
        self.boundary_check() == Boundary::Admissible
    }

    /// Numeric value at `t` with `T = t^{1/16}`, `S = (1−t)^{1/16}`.
    pub fn eval(&self, t: f64) -> Result<[[f64; 6]; 6]> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::OutOfDomain(t.to_string()));
        }
        let (tt, ss) = (t.powf(1.0 / ROOT as f64), (1.0 - t).powf(1.0 / ROOT as f64));
        let mut out = [[0.0; 6]; 6];
        for (i, j, m) in self.monomials() {
            let w = tt.powi(i as i32) * ss.powi(j as i32);
            let f = to_f64(m);
            for r in 0..6 {
                for c in 0..6 {
                    out[r][c] += w * f[r][c];
                }
            }
        }
        Ok(out)
    }

    /// Exact value at an endpoint.
    pub fn eval_endpoint(&self, one: bool) -> Matrix {
        if one {
            self.at_one()
        } else {
            self.at_zero()
        }
    }

    /// A random admissible element: a scalar plus terms vanishing at one or
    /// both endpoints with the right tensor shape at the other.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, sampler: &Sampler) -> Self {
        let z = RingDescriptor::Integers;
        let ring = q();
        let scalar = Matrix::identity(&ring, 6).scale_left(&sampler.value(&ring, rng));
        let mut out = Self::constant(scalar).expect("6x6");
        let exp = |rng: &mut R| rng.gen_range(1..=2 * ROOT);
        let add = |out: &mut Self, t, s, m: Matrix| *out = out.try_add(&Self::monomial(t, s, m).expect("6x6")).expect("Z23");
        for _ in 0..rng.gen_range(0..3) {
            let m = right_factor(&sampler.matrix(&z, 3, rng));
            let t = exp(rng);
            add(&mut out, t, 0, m);
        }
        for _ in 0..rng.gen_range(0..3) {
            let m = left_factor(&sampler.matrix(&z, 2, rng));
            let s = exp(rng);
            add(&mut out, 0, s, m);
        }
        for _ in 0..rng.gen_range(0..3) {
            let m = sampler.matrix(&ring, 6, rng);
            let (t, s) = (exp(rng), exp(rng));
            add(&mut out, t, s, m);
        }
        out
    }
}

fn to_f64(m: &Matrix) -> [[f64; 6]; 6] {
    let mut out = [[0.0; 6]; 6];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            *slot = match m.get(r, c) {
                Value::Rat(v) => v.to_f64().unwrap_or(f64::NAN),
                Value::Int(v) => v.to_f64().unwrap_or(f64::NAN),
                _ => f64::NAN,
            };
        }
    }
    out
}

/// `m = m₂ ⊗ 1₃`: every 3×3 block is a scalar multiple of the identity.
fn is_left_pattern(m: &Matrix) -> bool {
    let ring = m.ring();
    (0..2).all(|i| {
        (0..2).all(|j| {
            let s = m.get(3 * i, 3 * j);
            (0..3).all(|k| (0..3).all(|l| {
                let v = m.get(3 * i + k, 3 * j + l);
                if k == l { v == s } else { ring.is_zero(v) }
            }))
        })
    })
}

/// `m = 1₂ ⊗ m₃`: off-diagonal blocks vanish and the diagonal blocks agree.
fn is_right_pattern(m: &Matrix) -> bool {
    let ring = m.ring();
    (0..3).all(|k| {
        (0..3).all(|l| {
            ring.is_zero(m.get(k, 3 + l)) && ring.is_zero(m.get(3 + k, l)) && m.get(k, l) == m.get(3 + k, 3 + l)
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Zero,
    One,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Boundary {
    Admissible,
    Violation { end: Endpoint, value: Matrix },
}

impl RingElement for Z23Element {
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (t, s, m) in rhs.monomials() {
            out.add_monomial(t, s, m.clone());
        }
        Ok(out)
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (t1, s1, m1) in self.monomials() {
            for (t2, s2, m2) in rhs.monomials() {
                out.add_monomial(t1 + t2, s1 + s2, m1.try_mul(m2)?);
            }
        }
        Ok(out)
    }

    fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, m)| (*k, m.neg())).collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn zero_like(&self) -> Self {
        Self::zero()
    }

    fn one_like(&self) -> Self {
        Self::one()
    }
}

impl fmt::Display for Z23Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.monomials().map(|(t, s, m)| format!("T^{t} S^{s} {m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The elements with `1 = a[q, rs] + b[x, yz]`, each of `q, r, s, x, y, z` a
/// commutator of admissible elements.
#[derive(Clone, Debug, PartialEq)]
pub struct Z23Witness {
    pub a: Z23Element,
    pub q: CommutatorWitness<Z23Element>,
    pub r: CommutatorWitness<Z23Element>,
    pub s: CommutatorWitness<Z23Element>,
    pub b: Z23Element,
    pub x: CommutatorWitness<Z23Element>,
    pub y: CommutatorWitness<Z23Element>,
    pub z: CommutatorWitness<Z23Element>,
}

impl Z23Witness {
    /// `(a, q, r, s)` and `(b, x, y, z)` as unit-witness summands.
    pub fn halves(&self) -> [SingleWitness<Z23Element>; 2] {
        [
            SingleWitness {
                s: self.a.clone(),
                u: self.q.clone(),
                v: self.r.clone(),
                w: self.s.clone(),
            },
            SingleWitness {
                s: self.b.clone(),
                u: self.x.clone(),
                v: self.y.clone(),
                w: self.z.clone(),
            },
        ]
    }

    /// Every element and every generating pair entry.
    pub fn elements(&self) -> Vec<&Z23Element> {
        let mut out = vec![&self.a, &self.b];
        for w in [&self.q, &self.r, &self.s, &self.x, &self.y, &self.z] {
            out.extend([w.p(), w.q(), w.value()]);
        }
        out
    }
}

/// `q = T⁴(1⊗u) = [T²(1⊗p), T²(1⊗p')]` for `u = [p, p']`, and so on.
pub fn z23_witness() -> Z23Witness {
    let three = witness_triple(3).expect("n = 3");
    let two = witness_triple(2).expect("n = 2");
    let lift = |t: u32, s: u32, m: Matrix| Z23Element::monomial(t, s, m).expect("6x6");
    let bracket = |w: &CommutatorWitness<Matrix>, t: u32, s: u32, tensor: &dyn Fn(&Matrix) -> Matrix| {
        CommutatorWitness::new(lift(t, s, tensor(w.p())), lift(t, s, tensor(w.q()))).expect("Z23")
    };
    Z23Witness {
        a: lift(ROOT / 2, 0, right_factor(&three.s)),
        q: bracket(&three.u, ROOT / 8, 0, &right_factor),
        r: bracket(&three.v, ROOT / 16, 0, &right_factor),
        s: bracket(&three.w, ROOT / 16, 0, &right_factor),
        b: lift(0, ROOT / 2, left_factor(&two.s)),
        x: bracket(&two.u, 0, ROOT / 8, &left_factor),
        y: bracket(&two.v, 0, ROOT / 16, &left_factor),
        z: bracket(&two.w, 0, ROOT / 16, &left_factor),
    }
}

/// Exact and numeric checks of `1 = a[q, rs] + b[x, yz]`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitReport {
    /// `a[q, rs] = h`.
    pub first_half: bool,
    /// `b[x, yz] = 1 − h`.
    pub second_half: bool,
    pub sum_is_one: bool,
    pub all_admissible: bool,
    pub grid_points: usize,
    /// Largest entrywise deviation from `1₆` of the identity evaluated numerically factor by factor.
    pub max_residual: f64,
}

impl UnitReport {
    pub fn passed(&self, tolerance: f64) -> bool {
        self.first_half && self.second_half && self.sum_is_one && self.all_admissible && self.max_residual <= tolerance
    }
}

type Num = [[f64; 6]; 6];

fn nmul(a: &Num, b: &Num) -> Num {
    let mut out = [[0.0; 6]; 6];
    for i in 0..6 {
        for k in 0..6 {
            for j in 0..6 {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn nsub(a: &Num, b: &Num) -> Num {
    let mut out = *a;
    for i in 0..6 {
        for j in 0..6 {
            out[i][j] -= b[i][j];
        }
    }
    out
}

pub fn verify_unit(grid_points: usize) -> Result<UnitReport> {
    let w = z23_witness();
    let [first, second] = w.halves();
    let (h1, h2) = (first.value()?, second.value()?);
    let h = Z23Element::h();
    let one = Z23Element::one();
    let mut max_residual = 0.0f64;
    for k in 0..grid_points {
        let t = if grid_points == 1 { 0.0 } else { k as f64 / (grid_points - 1) as f64 };
        let ev = |e: &Z23Element| e.eval(t);
        let half = |c: &Z23Element, p: &CommutatorWitness<Z23Element>, q1: &CommutatorWitness<Z23Element>, q2: &CommutatorWitness<Z23Element>| -> Result<Num> {
            // numeric brackets from the generating pairs
            let br = |cw: &CommutatorWitness<Z23Element>| -> Result<Num> {
                let (p, q) = (ev(cw.p())?, ev(cw.q())?);
                Ok(nsub(&nmul(&p, &q), &nmul(&q, &p)))
            };
            let (p, q) = (br(p)?, nmul(&br(q1)?, &br(q2)?));
            Ok(nmul(&ev(c)?, &nsub(&nmul(&p, &q), &nmul(&q, &p))))
        };
        let a = half(&w.a, &w.q, &w.r, &w.s)?;
        let b = half(&w.b, &w.x, &w.y, &w.z)?;
        for i in 0..6 {
            for j in 0..6 {
                let target = if i == j { 1.0 } else { 0.0 };
                max_residual = max_residual.max((a[i][j] + b[i][j] - target).abs());
            }
        }
    }
    Ok(UnitReport {
        first_half: h1 == h,
        second_half: h2 == one.try_sub(&h)?,
        sum_is_one: h1.try_add(&h2)? == one,
        all_admissible: w.elements().iter().all(|e| e.is_admissible()),
        grid_points,
        max_residual,
    })
}

/// At most six products of two commutators summing to an admissible `a`.
pub fn z23_xi6(a: &Z23Element) -> Result<Certificate<Z23Element>> {
    if let Boundary::Violation { end, value } = a.boundary_check() {
        return Err(Error::InadmissibleInput(format!("value at {end:?} is {value}")));
    }
    let mut cert = unit_sum_decompose(a, &z23_witness().halves())?;
    cert.provenance = "z23-xi6".into();
    debug_assert!(cert.pair_count() <= 6);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn z(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64_rows(&RingDescriptor::Integers, rows).unwrap()
    }

    #[test]
    fn defining_relation() {
        let one = Matrix::identity(&q(), 6);
        let t = Z23Element::monomial(ROOT, 0, one.clone()).unwrap();
        let s = Z23Element::monomial(0, ROOT, one).unwrap();
        assert_eq!(t.try_add(&s).unwrap(), Z23Element::one());
    }

    #[test]
    fn monomial_product_reduces() {
        let one = Matrix::identity(&q(), 6);
        let a = Z23Element::monomial(1, 10, one.clone()).unwrap();
        let b = Z23Element::monomial(2, 9, one.clone()).unwrap();
        let expected = Z23Element::from_monomials([(3, 3, one.clone()), (3 + ROOT, 3, one.neg())]).unwrap();
        assert_eq!(a.try_mul(&b).unwrap(), expected);
        assert!(a.try_mul(&b).unwrap().monomials().all(|(_, s, _)| s < ROOT));
    }

    #[test]
    fn addition_commutes_syntactically() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let s = Sampler::new(9, 1);
        let x = Z23Element::random(&mut rng, &s);
        let y = Z23Element::random(&mut rng, &s);
        assert_eq!(x.try_add(&y).unwrap(), y.try_add(&x).unwrap());
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(Z23Element::one().boundary_check(), Boundary::Admissible);
        let left = Z23Element::constant(left_factor(&z(&[&[0, 1], &[0, 0]]))).unwrap();
        assert_eq!(left.at_zero(), left_factor(&z(&[&[0, 1], &[0, 0]])));
        // fine at t = 0 but not of the form 1 ⊗ m at t = 1
        assert!(matches!(left.boundary_check(), Boundary::Violation { end: Endpoint::One, .. }));
        let right = Z23Element::constant(right_factor(&Matrix::unit(&RingDescriptor::Integers, 3, 0, 1))).unwrap();
        assert!(matches!(right.boundary_check(), Boundary::Violation { end: Endpoint::Zero, .. }));
    }

    #[test]
    fn witness_halves() {
        let w = z23_witness();
        let [first, second] = w.halves();
        assert_eq!(first.value().unwrap(), Z23Element::h());
        assert_eq!(second.value().unwrap(), Z23Element::one().try_sub(&Z23Element::h()).unwrap());
        for e in w.elements() {
            assert!(e.is_admissible(), "{e}");
        }
        let three = witness_triple(3).unwrap();
        let vw = three.v.value().try_mul(three.w.value()).unwrap();
        let bracket = w.q.value().commutator(&w.r.value().try_mul(w.s.value()).unwrap()).unwrap();
        let expected = Z23Element::monomial(ROOT / 2, 0, right_factor(&three.u.value().commutator(&vw).unwrap())).unwrap();
        assert_eq!(bracket, expected);
    }

    #[test]
    fn unit_report() {
        let report = verify_unit(101).unwrap();
        assert!(report.passed(1e-12), "{report:?}");
    }

    #[test]
    fn eval_h_and_domain() {
        let v = Z23Element::h().eval(0.5).unwrap();
        for (i, row) in v.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert!((x - if i == j { 0.5 } else { 0.0 }).abs() < 1e-12);
            }
        }
        assert!(matches!(Z23Element::h().eval(1.5), Err(Error::OutOfDomain(_))));
        assert_eq!(Z23Element::h().eval_endpoint(false), Matrix::zero(&q(), 6));
    }

    #[test]
    fn xi6_examples() {
        let one = z23_xi6(&Z23Element::one()).unwrap();
        assert!(one.verify().is_valid());
        assert_eq!(one.pair_count(), 6);
        assert!(z23_xi6(&Z23Element::zero()).unwrap().terms.is_empty());
        let h = z23_xi6(&Z23Element::h()).unwrap();
        assert!(h.verify().is_valid());
        assert!(h.pair_count() <= 6);
        for t in &h.terms {
            for w in t.witnesses() {
                assert!(w.p().is_admissible() && w.q().is_admissible());
            }
        }
        let bad = Z23Element::constant(right_factor(&Matrix::unit(&RingDescriptor::Integers, 3, 0, 1))).unwrap();
        assert!(matches!(z23_xi6(&bad), Err(Error::InadmissibleInput(_))));
    }

    #[test]
    fn random_elements_are_admissible() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..20 {
            let e = Z23Element::random(&mut rng, &Sampler::new(20, 1));
            assert!(e.is_admissible());
            let cert = z23_xi6(&e).unwrap();
            assert!(cert.verify().is_valid());
            assert!(cert.pair_count() <= 6);
        }
    }
}
