//! Certificates: explicit sums of products of commutators, and their verifier.
//!
//! A certificate claims `target = Σ terms`, where each term is either a product
//! `[p₁,q₁]·[p₂,q₂]` of two commutators or a single commutator `[p,q]`. Every
//! commutator is stored as its generating pair `(p, q)`. The cached value is
//! kept for display and for building further terms, but [`Certificate::verify`]
//! recomputes it from the pair and never trusts the cache.

use std::fmt;

use crate::element::RingElement;
use crate::error::{Error, Result};

/// A commutator `[p, q]` together with the pair that generates it.
#[derive(Clone, Debug, PartialEq)]
pub struct CommutatorWitness<E> {
    p: E,
    q: E,
    value: E,
}

impl<E: RingElement> CommutatorWitness<E> {
    pub fn new(p: E, q: E) -> Result<Self> {
        let value = p.commutator(&q)?;
        Ok(Self { p, q, value })
    }

    /// Builds a witness with a caller-supplied cache. Only useful for
    /// exercising the verifier on corrupted data.
    pub fn with_cached_value(p: E, q: E, value: E) -> Self {
        Self { p, q, value }
    }

    pub fn p(&self) -> &E {
        &self.p
    }

    pub fn q(&self) -> &E {
        &self.q
    }

    pub fn value(&self) -> &E {
        &self.value
    }

    pub fn recompute(&self) -> Result<E> {
        self.p.commutator(&self.q)
    }

    /// Whether the cached value equals `pq − qp`.
    pub fn is_consistent(&self) -> bool {
        self.recompute().is_ok_and(|v| v == self.value)
    }

    /// Errors with `NotACommutator` when the cache disagrees with the pair.
    pub fn ensure_consistent(&self) -> Result<()> {
        if self.is_consistent() {
            Ok(())
        } else {
            Err(Error::NotACommutator(format!("{:?} is not [p, q] for its stored pair", self.value)))
        }
    }

    /// Applies a ring homomorphism to both entries of the pair and recomputes
    /// the value.
    pub fn map<F: RingElement>(&self, f: impl Fn(&E) -> F) -> Result<CommutatorWitness<F>> {
        CommutatorWitness::new(f(&self.p), f(&self.q))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CertificateTerm<E> {
    PairProduct {
        left: CommutatorWitness<E>,
        right: CommutatorWitness<E>,
    },
    SingleCommutator(CommutatorWitness<E>),
}

impl<E: RingElement> CertificateTerm<E> {
    pub fn pair(left: CommutatorWitness<E>, right: CommutatorWitness<E>) -> Self {
        CertificateTerm::PairProduct { left, right }
    }

    pub fn single(w: CommutatorWitness<E>) -> Self {
        CertificateTerm::SingleCommutator(w)
    }

    /// Value from the cached witness values.
    pub fn value(&self) -> Result<E> {
        match self {
            CertificateTerm::PairProduct { left, right } => left.value().try_mul(right.value()),
            CertificateTerm::SingleCommutator(w) => Ok(w.value().clone()),
        }
    }

    /// Value recomputed from the generating pairs.
    fn recomputed_value(&self) -> Result<E> {
        match self {
            CertificateTerm::PairProduct { left, right } => {
                left.recompute()?.try_mul(&right.recompute()?)
            }
            CertificateTerm::SingleCommutator(w) => w.recompute(),
        }
    }

    pub fn witnesses(&self) -> Vec<&CommutatorWitness<E>> {
        match self {
            CertificateTerm::PairProduct { left, right } => vec![left, right],
            CertificateTerm::SingleCommutator(w) => vec![w],
        }
    }

    pub fn is_pair(&self) -> bool {
        matches!(self, CertificateTerm::PairProduct { .. })
    }

    pub fn map<F: RingElement>(&self, f: impl Fn(&E) -> F) -> Result<CertificateTerm<F>> {
        Ok(match self {
            CertificateTerm::PairProduct { left, right } => CertificateTerm::PairProduct {
                left: left.map(&f)?,
                right: right.map(&f)?,
            },
            CertificateTerm::SingleCommutator(w) => CertificateTerm::SingleCommutator(w.map(&f)?),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(String),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => write!(f, "valid"),
            Verdict::Invalid(reason) => write!(f, "invalid: {reason}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate<E> {
    pub target: E,
    pub terms: Vec<CertificateTerm<E>>,
    /// Which algorithm produced the certificate.
    pub provenance: String,
}

impl<E: RingElement> Certificate<E> {
    pub fn new(target: E, terms: Vec<CertificateTerm<E>>, provenance: impl Into<String>) -> Self {
        Self {
            target,
            terms,
            provenance: provenance.into(),
        }
    }

    pub fn verify(&self) -> Verdict {
        for (idx, term) in self.terms.iter().enumerate() {
            for w in term.witnesses() {
                match w.recompute() {
                    Ok(v) if v == *w.value() => {}
                    Ok(_) => {
                        return Verdict::Invalid(format!(
                            "term {idx}: cached commutator value differs from [p, q]"
                        ))
                    }
                    Err(e) => return Verdict::Invalid(format!("term {idx}: {e}")),
                }
            }
        }
        let sum = self
            .terms
            .iter()
            .try_fold(self.target.zero_like(), |acc, t| acc.try_add(&t.recomputed_value()?));
        match sum {
            Ok(s) if s == self.target => Verdict::Valid,
            Ok(_) => Verdict::Invalid("sum mismatch".into()),
            Err(e) => Verdict::Invalid(e.to_string()),
        }
    }

    pub fn pair_count(&self) -> usize {
        self.terms.iter().filter(|t| t.is_pair()).count()
    }

    pub fn single_count(&self) -> usize {
        self.terms.len() - self.pair_count()
    }

    /// Drops zero-valued terms; the verified sum is unchanged.
    pub fn normalized(mut self) -> Self {
        self.terms.retain(|t| t.value().map_or(true, |v| !v.is_zero()));
        self
    }

    /// Transports the certificate along a map that preserves sums, products
    /// and hence commutators (an embedding, a projection, a conjugation).
    pub fn map<F: RingElement>(&self, f: impl Fn(&E) -> F) -> Result<Certificate<F>> {
        Ok(Certificate {
            target: f(&self.target),
            terms: self.terms.iter().map(|t| t.map(&f)).collect::<Result<_>>()?,
            provenance: self.provenance.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Matrix, RingDescriptor};

    fn z(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64_rows(&RingDescriptor::Integers, rows).unwrap()
    }

    fn two_by_two_certificate() -> Certificate<Matrix> {
        // (1 2; 3 4) = diag(1,-1)·(0 2; -3 0) + (0 1; 1 0)·(0 4; 1 0)
        let ring = RingDescriptor::Integers;
        let e = |i, j| Matrix::unit(&ring, 2, i, j);
        let t1 = CertificateTerm::pair(
            CommutatorWitness::new(e(0, 1), e(1, 0)).unwrap(),
            CommutatorWitness::new(e(0, 0), z(&[&[0, 2], &[3, 0]])).unwrap(),
        );
        let t2 = CertificateTerm::pair(
            CommutatorWitness::new(e(0, 0), z(&[&[0, 1], &[-1, 0]])).unwrap(),
            CommutatorWitness::new(e(0, 0), z(&[&[0, 4], &[-1, 0]])).unwrap(),
        );
        Certificate::new(z(&[&[1, 2], &[3, 4]]), vec![t1, t2], "hand")
    }

    #[test]
    fn empty_certificate_of_zero() {
        let c = Certificate::<Matrix>::new(Matrix::zero(&RingDescriptor::Integers, 3), vec![], "empty");
        assert_eq!(c.verify(), Verdict::Valid);
        assert_eq!(c.pair_count(), 0);
    }

    #[test]
    fn worked_two_by_two() {
        let c = two_by_two_certificate();
        assert_eq!(c.verify(), Verdict::Valid);
        assert_eq!(c.pair_count(), 2);
        assert_eq!(c.single_count(), 0);
    }

    #[test]
    fn perturbed_target_is_rejected() {
        let mut c = two_by_two_certificate();
        c.target = z(&[&[2, 2], &[3, 4]]);
        assert_eq!(c.verify(), Verdict::Invalid("sum mismatch".into()));
    }

    #[test]
    fn forged_cache_is_rejected() {
        let mut c = two_by_two_certificate();
        let ring = RingDescriptor::Integers;
        let forged = CommutatorWitness::with_cached_value(
            Matrix::identity(&ring, 2),
            Matrix::unit(&ring, 2, 0, 1),
            z(&[&[1, 2], &[3, 4]]),
        );
        c.terms = vec![CertificateTerm::single(forged)];
        assert!(!c.verify().is_valid());
    }

    #[test]
    fn ring_mismatch_is_invalid_not_panic() {
        let mut c = two_by_two_certificate();
        c.target = c.target.embed(&RingDescriptor::Rationals).unwrap();
        assert!(matches!(c.verify(), Verdict::Invalid(reason) if reason.contains("ring mismatch")));
    }

    #[test]
    fn order_independent() {
        let mut c = two_by_two_certificate();
        c.terms.reverse();
        assert!(c.verify().is_valid());
    }
}
