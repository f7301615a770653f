//! Coefficient rings and the exact payloads of their elements.
//!
//! A [`RingDescriptor`] does all arithmetic on bare [`Value`]s. Matrices store
//! one descriptor and a flat vector of values, so per-entry arithmetic never
//! clones or compares descriptors. A value is only meaningful together with
//! the descriptor it was produced by.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::quaternion::Quaternion;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    Rationals,
    IntegersMod(u64),
    PrimeField(u64),
    Polynomial { base: Box<RingDescriptor>, var: String },
    /// Quaternions over the rationals.
    Quaternions,
}

/// Canonical payload of a coefficient-ring element.
///
/// Fractions are reduced with positive denominator, residues lie in `[0, m)`,
/// polynomial coefficient lists carry no trailing zeros (zero is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Int(BigInt),
    Rat(BigRational),
    Residue(u64),
    Poly(Vec<Value>),
    Quat(Box<Quaternion>),
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn modinv(a: u64, m: u64) -> Option<u64> {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(m));
    if !e.gcd.is_one() {
        return None;
    }
    e.x.mod_floor(&BigInt::from(m)).to_u64()
}

impl RingDescriptor {
    pub fn integers_mod(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidRing(format!("Z/{m}: modulus must be at least 2")));
        }
        Ok(RingDescriptor::IntegersMod(m))
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("GF({p}): {p} is not prime")));
        }
        Ok(RingDescriptor::PrimeField(p))
    }

    /// Polynomials in one variable over `Z`, `Q`, `Z/m` or `GF(p)`.
    pub fn polynomial(base: RingDescriptor, var: impl Into<String>) -> Result<Self> {
        match base {
            RingDescriptor::Polynomial { .. } | RingDescriptor::Quaternions => {
                Err(Error::InvalidRing(format!(
                    "polynomial coefficients must be Z, Q, Z/m or GF(p), got {base}"
                )))
            }
            _ => {
                let var = var.into();
                if var.is_empty() || !var.chars().all(|c| c.is_ascii_alphabetic()) {
                    return Err(Error::InvalidRing(format!("bad variable name {var:?}")));
                }
                Ok(RingDescriptor::Polynomial {
                    base: Box::new(base),
                    var,
                })
            }
        }
    }

    pub fn is_commutative(&self) -> bool {
        !matches!(self, RingDescriptor::Quaternions)
    }

    /// True when exact division is available, which Bareiss elimination needs.
    pub fn is_integral_domain(&self) -> bool {
        match self {
            RingDescriptor::Integers | RingDescriptor::Rationals | RingDescriptor::PrimeField(_) => {
                true
            }
            RingDescriptor::IntegersMod(m) => is_prime(*m),
            RingDescriptor::Polynomial { base, .. } => base.is_integral_domain(),
            RingDescriptor::Quaternions => false,
        }
    }

    pub fn zero(&self) -> Value {
        match self {
            RingDescriptor::Integers => Value::Int(BigInt::zero()),
            RingDescriptor::Rationals => Value::Rat(BigRational::zero()),
            RingDescriptor::IntegersMod(_) | RingDescriptor::PrimeField(_) => Value::Residue(0),
            RingDescriptor::Polynomial { .. } => Value::Poly(Vec::new()),
            RingDescriptor::Quaternions => Value::Quat(Box::new(Quaternion::zero())),
        }
    }

    pub fn one(&self) -> Value {
        self.from_int(&BigInt::one())
    }

    /// Image of an integer under the unit map `Z -> ring`.
    pub fn from_int(&self, n: &BigInt) -> Value {
        match self {
            RingDescriptor::Integers => Value::Int(n.clone()),
            RingDescriptor::Rationals => Value::Rat(BigRational::from_integer(n.clone())),
            RingDescriptor::IntegersMod(m) | RingDescriptor::PrimeField(m) => {
                Value::Residue(n.mod_floor(&BigInt::from(*m)).to_u64().unwrap())
            }
            RingDescriptor::Polynomial { base, .. } => {
                let c = base.from_int(n);
                if base.is_zero(&c) {
                    Value::Poly(Vec::new())
                } else {
                    Value::Poly(vec![c])
                }
            }
            RingDescriptor::Quaternions => Value::Quat(Box::new(Quaternion::real(
                BigRational::from_integer(n.clone()),
            ))),
        }
    }

    pub fn from_i64(&self, n: i64) -> Value {
        self.from_int(&BigInt::from(n))
    }

    /// Whether `v` is a well-formed canonical payload for this ring.
    pub fn contains(&self, v: &Value) -> bool {
        match (self, v) {
            (RingDescriptor::Integers, Value::Int(_)) => true,
            (RingDescriptor::Rationals, Value::Rat(r)) => {
                r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
            }
            (RingDescriptor::IntegersMod(m), Value::Residue(r))
            | (RingDescriptor::PrimeField(m), Value::Residue(r)) => r < m,
            (RingDescriptor::Polynomial { base, .. }, Value::Poly(cs)) => {
                cs.iter().all(|c| base.contains(c)) && cs.last().is_none_or(|c| !base.is_zero(c))
            }
            (RingDescriptor::Quaternions, Value::Quat(_)) => true,
            _ => false,
        }
    }

    pub fn is_zero(&self, v: &Value) -> bool {
        match v {
            Value::Int(n) => n.is_zero(),
            Value::Rat(r) => r.is_zero(),
            Value::Residue(r) => *r == 0,
            Value::Poly(cs) => cs.is_empty(),
            Value::Quat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self, v: &Value) -> bool {
        *v == self.one()
    }

    pub fn add(&self, a: &Value, b: &Value) -> Value {
        match (self, a, b) {
            (_, Value::Int(x), Value::Int(y)) => Value::Int(x + y),
            (_, Value::Rat(x), Value::Rat(y)) => {
                if x.is_zero() {
                    Value::Rat(y.clone())
                } else if y.is_zero() {
                    Value::Rat(x.clone())
                } else {
                    Value::Rat(x + y)
                }
            }
            (RingDescriptor::IntegersMod(m) | RingDescriptor::PrimeField(m), Value::Residue(x), Value::Residue(y)) => {
                Value::Residue(((*x as u128 + *y as u128) % *m as u128) as u64)
            }
            (RingDescriptor::Polynomial { base, .. }, Value::Poly(x), Value::Poly(y)) => {
                let n = x.len().max(y.len());
                let zero = base.zero();
                let cs = (0..n)
                    .map(|i| base.add(x.get(i).unwrap_or(&zero), y.get(i).unwrap_or(&zero)))
                    .collect();
                Value::Poly(base.trim(cs))
            }
            (_, Value::Quat(x), Value::Quat(y)) => Value::Quat(Box::new(&**x + &**y)),
            _ => unreachable!("value does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Value) -> Value {
        match (self, a) {
            (_, Value::Int(x)) => Value::Int(-x),
            (_, Value::Rat(x)) => Value::Rat(-x),
            (RingDescriptor::IntegersMod(m) | RingDescriptor::PrimeField(m), Value::Residue(x)) => {
                Value::Residue(if *x == 0 { 0 } else { m - x })
            }
            (RingDescriptor::Polynomial { base, .. }, Value::Poly(x)) => {
                Value::Poly(x.iter().map(|c| base.neg(c)).collect())
            }
            (_, Value::Quat(x)) => Value::Quat(Box::new(-&**x)),
            _ => unreachable!("value does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Value, b: &Value) -> Value {
        self.add(a, &self.neg(b))
    }

    /// `a * b` in this order (matters for quaternions).
    pub fn mul(&self, a: &Value, b: &Value) -> Value {
        match (self, a, b) {
            (_, Value::Int(x), Value::Int(y)) => Value::Int(x * y),
            (_, Value::Rat(x), Value::Rat(y)) => {
                // unit factors are common in the sparse matrices used by the decompositions
                if x.is_one() {
                    Value::Rat(y.clone())
                } else if y.is_one() {
                    Value::Rat(x.clone())
                } else {
                    Value::Rat(x * y)
                }
            }
            (RingDescriptor::IntegersMod(m) | RingDescriptor::PrimeField(m), Value::Residue(x), Value::Residue(y)) => {
                Value::Residue(mulmod(*x, *y, *m))
            }
            (RingDescriptor::Polynomial { base, .. }, Value::Poly(x), Value::Poly(y)) => {
                if x.is_empty() || y.is_empty() {
                    return Value::Poly(Vec::new());
                }
                let mut cs = vec![base.zero(); x.len() + y.len() - 1];
                for (i, xi) in x.iter().enumerate() {
                    if base.is_zero(xi) {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate() {
                        if base.is_zero(yj) {
                            continue;
                        }
                        cs[i + j] = base.add(&cs[i + j], &base.mul(xi, yj));
                    }
                }
                Value::Poly(base.trim(cs))
            }
            (_, Value::Quat(x), Value::Quat(y)) => Value::Quat(Box::new(&**x * &**y)),
            _ => unreachable!("value does not belong to {self}"),
        }
    }

    fn trim(&self, mut cs: Vec<Value>) -> Vec<Value> {
        while cs.last().is_some_and(|c| self.is_zero(c)) {
            cs.pop();
        }
        cs
    }

    fn is_nilpotent(&self, v: &Value) -> bool {
        match (self, v) {
            (RingDescriptor::IntegersMod(m), Value::Residue(r)) => {
                // r is nilpotent mod m iff every prime factor of m divides r.
                let mut rest = *m;
                let mut p = 2;
                while p * p <= rest {
                    if rest % p == 0 {
                        if r % p != 0 {
                            return false;
                        }
                        while rest % p == 0 {
                            rest /= p;
                        }
                    }
                    p += 1;
                }
                rest == 1 || r % rest == 0
            }
            _ => self.is_zero(v),
        }
    }

    /// Two-sided inverse when one exists.
    pub fn try_invert(&self, a: &Value) -> Option<Value> {
        match (self, a) {
            (RingDescriptor::Integers, Value::Int(x)) => {
                (x.abs().is_one()).then(|| Value::Int(x.clone()))
            }
            (RingDescriptor::Rationals, Value::Rat(x)) => {
                (!x.is_zero()).then(|| Value::Rat(x.recip()))
            }
            (RingDescriptor::IntegersMod(m) | RingDescriptor::PrimeField(m), Value::Residue(x)) => {
                modinv(*x, *m).map(Value::Residue)
            }
            (RingDescriptor::Polynomial { base, .. }, Value::Poly(cs)) => {
                // Units of B[x] are c + N with c a unit of B and N nilpotent;
                // invert as c⁻¹ Σ (−c⁻¹N)^k, a finite sum.
                let c = cs.first()?;
                let c_inv = base.try_invert(c)?;
                if !cs[1..].iter().all(|coef| base.is_nilpotent(coef)) {
                    return None;
                }
                let c_inv_poly = Value::Poly(vec![c_inv]);
                let mut tail = cs.clone();
                tail[0] = base.zero();
                let tail = Value::Poly(base.trim(tail));
                let step = self.neg(&self.mul(&c_inv_poly, &tail));
                let mut sum = self.one();
                let mut power = self.one();
                loop {
                    power = self.mul(&power, &step);
                    if self.is_zero(&power) {
                        break;
                    }
                    sum = self.add(&sum, &power);
                }
                Some(self.mul(&sum, &c_inv_poly))
            }
            (RingDescriptor::Quaternions, Value::Quat(q)) => {
                q.inverse().map(|inv| Value::Quat(Box::new(inv)))
            }
            _ => unreachable!("value does not belong to {self}"),
        }
    }

    /// `a / b` when `b` divides `a` exactly; used by fraction-free elimination.
    pub(crate) fn exact_div(&self, a: &Value, b: &Value) -> Option<Value> {
        match (self, a, b) {
            (RingDescriptor::Integers, Value::Int(x), Value::Int(y)) => {
                if y.is_zero() {
                    return None;
                }
                let (q, r) = x.div_rem(y);
                r.is_zero().then_some(Value::Int(q))
            }
            (RingDescriptor::Polynomial { base, .. }, Value::Poly(x), Value::Poly(y)) => {
                let lead = y.last()?;
                let mut rem = x.clone();
                if rem.len() < y.len() {
                    return rem.is_empty().then(|| Value::Poly(Vec::new()));
                }
                let mut quot = vec![base.zero(); rem.len() - y.len() + 1];
                for shift in (0..quot.len()).rev() {
                    let top = &rem[shift + y.len() - 1];
                    if base.is_zero(top) {
                        continue;
                    }
                    let q = base.exact_div(top, lead)?;
                    for (i, yc) in y.iter().enumerate() {
                        rem[shift + i] = base.sub(&rem[shift + i], &base.mul(&q, yc));
                    }
                    quot[shift] = q;
                }
                rem.iter()
                    .all(|c| base.is_zero(c))
                    .then(|| Value::Poly(base.trim(quot)))
            }
            _ => self.try_invert(b).map(|inv| self.mul(a, &inv)),
        }
    }

    pub fn format_value(&self, v: &Value) -> String {
        match (self, v) {
            (_, Value::Int(n)) => n.to_string(),
            (_, Value::Rat(r)) => r.to_string(),
            (_, Value::Residue(r)) => r.to_string(),
            (_, Value::Quat(q)) => q.to_string(),
            (RingDescriptor::Polynomial { base, var }, Value::Poly(cs)) => {
                if cs.is_empty() {
                    return "0".to_string();
                }
                let mut out = String::new();
                for (deg, c) in cs.iter().enumerate().rev() {
                    if base.is_zero(c) {
                        continue;
                    }
                    let mut coef = base.format_value(c);
                    let negative = coef.starts_with('-');
                    if negative {
                        coef.remove(0);
                    }
                    if negative {
                        out.push('-');
                    } else if !out.is_empty() {
                        out.push('+');
                    }
                    let monomial = match deg {
                        0 => String::new(),
                        1 => var.clone(),
                        d => format!("{var}^{d}"),
                    };
                    if monomial.is_empty() {
                        out.push_str(&coef);
                    } else if coef == "1" {
                        out.push_str(&monomial);
                    } else {
                        out.push_str(&format!("{coef}*{monomial}"));
                    }
                }
                out
            }
            _ => unreachable!("value does not belong to {self}"),
        }
    }

    pub fn parse_value(&self, s: &str) -> Result<Value> {
        let s = s.trim();
        let bad = || Error::Parse(format!("{s:?} is not an element of {self}"));
        match self {
            RingDescriptor::Integers => s.parse::<BigInt>().map(Value::Int).map_err(|_| bad()),
            RingDescriptor::Rationals => parse_rational(s).map(Value::Rat).ok_or_else(bad),
            RingDescriptor::IntegersMod(_) | RingDescriptor::PrimeField(_) => s
                .parse::<BigInt>()
                .map(|n| self.from_int(&n))
                .map_err(|_| bad()),
            RingDescriptor::Quaternions => {
                let mut parts: [BigRational; 4] = Default::default();
                for term in split_signed_terms(s).ok_or_else(bad)? {
                    let (body, slot) = match term.chars().last() {
                        Some('i') => (&term[..term.len() - 1], 1),
                        Some('j') => (&term[..term.len() - 1], 2),
                        Some('k') => (&term[..term.len() - 1], 3),
                        _ => (term.as_str(), 0),
                    };
                    let body = body.strip_suffix('*').unwrap_or(body);
                    let coef = match body {
                        "" | "+" => BigRational::one(),
                        "-" => -BigRational::one(),
                        b => parse_rational(b).ok_or_else(bad)?,
                    };
                    parts[slot] += coef;
                }
                let [w, x, y, z] = parts;
                Ok(Value::Quat(Box::new(Quaternion::new(w, x, y, z))))
            }
            RingDescriptor::Polynomial { base, var } => {
                let mut acc = self.zero();
                for term in split_signed_terms(s).ok_or_else(bad)? {
                    let (coef_str, deg) = match term.find(var.as_str()) {
                        None => (term.as_str(), 0usize),
                        Some(pos) => {
                            let coef = term[..pos].strip_suffix('*').unwrap_or(&term[..pos]);
                            let rest = &term[pos + var.len()..];
                            let deg = if rest.is_empty() {
                                1
                            } else {
                                rest.strip_prefix('^')
                                    .and_then(|d| d.parse().ok())
                                    .ok_or_else(bad)?
                            };
                            (coef, deg)
                        }
                    };
                    let coef = match coef_str {
                        "" | "+" => base.one(),
                        "-" => base.neg(&base.one()),
                        c => base.parse_value(c.strip_prefix('+').unwrap_or(c))?,
                    };
                    let mut cs = vec![base.zero(); deg + 1];
                    cs[deg] = coef;
                    acc = self.add(&acc, &Value::Poly(base.trim(cs)));
                }
                Ok(acc)
            }
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.strip_prefix('+').unwrap_or(s);
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Splits `a+b-c` into `["a", "+b", "-c"]`, keeping signs with their terms.
fn split_signed_terms(s: &str) -> Option<Vec<String>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut prev: Option<char> = None;
    for c in s.chars() {
        let splits = (c == '+' || c == '-')
            && !current.is_empty()
            && !matches!(prev, Some('*') | Some('^') | Some('/'));
        if splits {
            terms.push(std::mem::take(&mut current));
        }
        current.push(c);
        prev = Some(c);
    }
    terms.push(current);
    (!terms.iter().any(|t| t == "+" || t == "-")).then_some(terms)
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::Rationals => write!(f, "Q"),
            RingDescriptor::IntegersMod(m) => write!(f, "Z{m}"),
            RingDescriptor::PrimeField(p) => write!(f, "F{p}"),
            RingDescriptor::Polynomial { base, var } => write!(f, "{base}[{var}]"),
            RingDescriptor::Quaternions => write!(f, "Quat"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Value {
        Value::Rat(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn constructors_validate() {
        assert!(RingDescriptor::integers_mod(1).is_err());
        assert!(RingDescriptor::integers_mod(6).is_ok());
        assert!(RingDescriptor::prime_field(6).is_err());
        assert!(RingDescriptor::prime_field(5).is_ok());
        assert!(RingDescriptor::polynomial(RingDescriptor::Quaternions, "x").is_err());
        assert!(RingDescriptor::polynomial(RingDescriptor::Rationals, "x1").is_err());
    }

    #[test]
    fn fractions_add_exactly() {
        let q = RingDescriptor::Rationals;
        assert_eq!(q.add(&rat(1, 2), &rat(1, 3)), rat(5, 6));
        assert_eq!(q.parse_value("-4/6").unwrap(), rat(-2, 3));
    }

    #[test]
    fn residues_reduce() {
        let z6 = RingDescriptor::integers_mod(6).unwrap();
        assert_eq!(z6.mul(&Value::Residue(4), &Value::Residue(5)), Value::Residue(2));
        assert_eq!(z6.parse_value("-1").unwrap(), Value::Residue(5));
        assert_eq!(z6.try_invert(&Value::Residue(5)), Some(Value::Residue(5)));
        assert_eq!(z6.try_invert(&Value::Residue(2)), None);
    }

    #[test]
    fn integer_units() {
        let z = RingDescriptor::Integers;
        assert_eq!(z.try_invert(&z.from_i64(-1)), Some(z.from_i64(-1)));
        assert_eq!(z.try_invert(&z.from_i64(2)), None);
    }

    #[test]
    fn polynomial_round_trip_and_arithmetic() {
        let qx = RingDescriptor::polynomial(RingDescriptor::Rationals, "x").unwrap();
        let p = qx.parse_value("3*x^2-1").unwrap();
        assert_eq!(qx.format_value(&p), "3*x^2-1");
        let r = qx.parse_value("-1/2*x+x^3").unwrap();
        assert_eq!(qx.format_value(&r), "x^3-1/2*x");
        let prod = qx.mul(&p, &r);
        assert_eq!(qx.format_value(&prod), "3*x^5-5/2*x^3+1/2*x");
        assert_eq!(qx.exact_div(&prod, &p), Some(r.clone()));
        assert!(qx.try_invert(&p).is_none());
        assert_eq!(qx.try_invert(&qx.parse_value("2").unwrap()), Some(qx.parse_value("1/2").unwrap()));
    }

    #[test]
    fn nilpotent_polynomial_units_invert() {
        let z4x = RingDescriptor::polynomial(RingDescriptor::integers_mod(4).unwrap(), "x").unwrap();
        let u = z4x.parse_value("1+2*x").unwrap();
        let inv = z4x.try_invert(&u).unwrap();
        assert!(z4x.is_one(&z4x.mul(&u, &inv)));
        assert!(z4x.try_invert(&z4x.parse_value("1+x").unwrap()).is_none());
    }

    #[test]
    fn quaternion_parse_forms() {
        let h = RingDescriptor::Quaternions;
        let v = h.parse_value("1+2i-j+0k").unwrap();
        assert_eq!(h.format_value(&v), "1+2i-1j+0k");
        let w = h.parse_value("-1/2i").unwrap();
        assert_eq!(h.format_value(&w), "0-1/2i+0j+0k");
        let i = h.parse_value("i").unwrap();
        let j = h.parse_value("j").unwrap();
        assert_eq!(h.mul(&i, &j), h.parse_value("k").unwrap());
    }
}
