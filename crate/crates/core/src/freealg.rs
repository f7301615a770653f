//! Noncommutative polynomials with integer coefficients over single-letter
//! generators, and a suite of expansion identities.
//!
//! Hypotheses such as `u² = 0` are imposed by deletion rules: a rule `w`
//! annihilates every monomial containing `w` as a factor. Rules only delete,
//! so reduction is terminating and confluent.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A monomial, ordered by length and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(String);

impl Word {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreePoly {
    terms: BTreeMap<Word, BigInt>,
}

impl FreePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial("", c)
    }

    pub fn var(g: char) -> Self {
        Self::monomial(&g.to_string(), 1)
    }

    /// `c·word`.
    pub fn monomial(word: &str, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(Word(word.to_string()), BigInt::from(c));
        p
    }

    fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&str, &BigInt)> {
        self.terms.iter().map(|(w, c)| (w.as_str(), c))
    }

    pub fn bracket(&self, rhs: &Self) -> Self {
        self * rhs - rhs * self
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Deletes every monomial containing one of `rules` as a factor.
    pub fn reduce(&self, rules: &[&str]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| !rules.iter().any(|r| w.0.contains(r)))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

impl Add for &FreePoly {
    type Output = FreePoly;
    fn add(self, rhs: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Neg for &FreePoly {
    type Output = FreePoly;
    fn neg(self) -> FreePoly {
        FreePoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Sub for &FreePoly {
    type Output = FreePoly;
    fn sub(self, rhs: &FreePoly) -> FreePoly {
        self + &-rhs
    }
}

impl Mul for &FreePoly {
    type Output = FreePoly;
    fn mul(self, rhs: &FreePoly) -> FreePoly {
        let mut out = FreePoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(Word(format!("{}{}", w1.0, w2.0)), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FreePoly {
            type Output = FreePoly;
            fn $m(self, rhs: FreePoly) -> FreePoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FreePoly> for FreePoly {
            type Output = FreePoly;
            fn $m(self, rhs: &FreePoly) -> FreePoly {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for FreePoly {
    type Output = FreePoly;
    fn neg(self) -> FreePoly {
        -&self
    }
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else if k > 0 { "+" } else { "" };
            let mag = c.abs();
            let word = if w.0.is_empty() { "1" } else { &w.0 };
            if mag.is_one() {
                write!(f, "{sign}{word}")?;
            } else if w.0.is_empty() {
                write!(f, "{sign}{mag}")?;
            } else {
                write!(f, "{sign}{mag}*{word}")?;
            }
        }
        Ok(())
    }
}

/// One checked identity: `lhs − rhs` reduces to zero modulo `rules`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: &'static str,
    pub rules: Vec<&'static str>,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// Monomials left in `lhs − rhs` after reduction.
    pub residual_terms: usize,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.residual_terms == 0
    }
}

fn check(name: &'static str, lhs: FreePoly, rhs: FreePoly, rules: &[&'static str]) -> IdentityResult {
    let residual = (&lhs - &rhs).reduce(rules);
    IdentityResult {
        name,
        rules: rules.to_vec(),
        lhs_terms: lhs.reduce(rules).len(),
        rhs_terms: rhs.reduce(rules).len(),
        residual_terms: residual.len(),
    }
}

/// The expansion identities behind the commutativity and rewriting arguments.
pub fn identity_suite() -> Vec<IdentityResult> {
    let v = FreePoly::var;
    let br = |p: &FreePoly, q: &FreePoly| p.bracket(q);
    let (a, b, c, x, y, z) = (v('a'), v('b'), v('c'), v('x'), v('y'), v('z'));
    let (p, q, r, s, t, u) = (v('p'), v('q'), v('r'), v('s'), v('t'), v('u'));
    let ua = &u * &a;
    let au = &a * &u;
    vec![
        check(
            "jacobi",
            br(&br(&x, &y), &a),
            br(&x, &br(&y, &a)) + br(&y, &br(&a, &x)),
            &[],
        ),
        check(
            "bracket-square",
            br(&x, &y).pow(2),
            &x * &(&y * &x * &y - &y * &y * &x) - &y * &(&x * &x * &y - &x * &y * &x),
            &[],
        ),
        check(
            "two-sided-bracket",
            &a * &br(&x, &y) * &b,
            &a * &br(&br(&x, &y), &b) + &a * &b * &br(&x, &y),
            &[],
        ),
        check(
            "two-sided-jacobi",
            &a * &br(&x, &y) * &b,
            &a * &br(&br(&b, &y), &x) + &a * &br(&br(&x, &b), &y) + &a * &b * &br(&x, &y),
            &[],
        ),
        check(
            "left-split",
            &a * &br(&x, &y),
            br(&(&a * &x), &y) + br(&y, &a) * &x,
            &[],
        ),
        check(
            "product-rule",
            br(&a, &(&x * &y)),
            br(&a, &x) * &y + &x * &br(&a, &y),
            &[],
        ),
        check(
            "three-product-form",
            &c * &br(&p, &(&q * &r)),
            br(&(&c * &p), &q) * &r + &q * &br(&(&c * &p), &r) + br(&(&q * &r), &c) * &p,
            &[],
        ),
        check(
            "split-bracket-right",
            br(&b, &(&y * &z)),
            br(&b, &y) * &z + &y * &br(&b, &z),
            &[],
        ),
        check(
            "square-zero-cube",
            (&s + &t).pow(3),
            (&s - &t) * br(&t, &s),
            &["ss", "tt"],
        ),
        check("nil-index-four", (&ua - &au).pow(3) * &ua, ua.pow(4), &["uu"]),
    ]
}

/// Runs [`identity_suite`], failing on the first identity that does not hold.
pub fn check_identities() -> Result<Vec<IdentityResult>> {
    let results = identity_suite();
    if let Some(bad) = results.iter().find(|r| !r.passed()) {
        return Err(Error::IdentityFailed(format!("{} leaves {} monomials", bad.name, bad.residual_terms)));
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let (x, y) = (FreePoly::var('x'), FreePoly::var('y'));
        assert!(x.bracket(&x).is_zero());
        assert!((x.bracket(&y) + y.bracket(&x)).is_zero());
        assert_eq!((&x + &y).pow(2).to_string(), "xx+xy+yx+yy");
        assert_eq!((FreePoly::constant(2) - x.clone()).to_string(), "2-x");
    }

    #[test]
    fn reduce_examples() {
        let (u, a) = (FreePoly::var('u'), FreePoly::var('a'));
        assert!((&u * &u * &a).reduce(&["uu"]).is_zero());
        let uau = &u * &a * &u;
        assert_eq!(uau.reduce(&["uu"]), uau);
        let p = (&u + &a).pow(4);
        assert_eq!(p.reduce(&["uu"]).reduce(&["uu"]), p.reduce(&["uu"]));
    }

    #[test]
    fn nil_index_four_expansion() {
        let (u, a) = (FreePoly::var('u'), FreePoly::var('a'));
        let ua = &u * &a;
        let lhs = (&ua - &(&a * &u)).pow(3) * &ua;
        // (ua − au)³ has 2³ signed words before the trailing ua
        assert_eq!(lhs.len(), 8);
        assert!((lhs - ua.pow(4)).reduce(&["uu"]).is_zero());
    }

    #[test]
    fn suite_passes() {
        let results = check_identities().unwrap();
        assert_eq!(results.len(), 10);
        let jacobi = &results[0];
        assert_eq!(jacobi.lhs_terms, 4);
    }

    #[test]
    fn broken_identity_is_reported() {
        let (x, y) = (FreePoly::var('x'), FreePoly::var('y'));
        let r = check("wrong", x.bracket(&y), &x * &y, &[]);
        assert!(!r.passed());
        assert_eq!(r.residual_terms, 1);
    }

    #[test]
    fn shortlex_order() {
        let p = FreePoly::monomial("b", 1) + FreePoly::monomial("aa", 1) + FreePoly::monomial("c", 1);
        let words: Vec<&str> = p.terms().map(|(w, _)| w).collect();
        assert_eq!(words, vec!["b", "c", "aa"]);
    }
}
