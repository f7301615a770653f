//! Random exact elements for property tests, benchmarks and the CLI's `--random` mode.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use super::{Matrix, Quaternion, RingDescriptor, Scalar, Value};

/// Bounds for random coefficients.
#[derive(Clone, Copy, Debug)]
pub struct Sampler {
    /// Integers and numerators are drawn from `[-bound, bound]`, denominators from `[1, bound]`.
    pub bound: i64,
    /// Maximum degree of random polynomials.
    pub max_degree: usize,
}

impl Default for Sampler {
    fn default() -> Self {
        Self {
            bound: 1_000_000,
            max_degree: 8,
        }
    }
}

impl Sampler {
    pub fn new(bound: i64, max_degree: usize) -> Self {
        assert!(bound >= 1);
        Self { bound, max_degree }
    }

    fn rational<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let num = rng.gen_range(-self.bound..=self.bound);
        let den = rng.gen_range(1..=self.bound);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn value<R: Rng + ?Sized>(&self, ring: &RingDescriptor, rng: &mut R) -> Value {
        match ring {
            RingDescriptor::Integers => Value::Int(BigInt::from(rng.gen_range(-self.bound..=self.bound))),
            RingDescriptor::Rationals => Value::Rat(self.rational(rng)),
            RingDescriptor::IntegersMod(m) | RingDescriptor::PrimeField(m) => {
                Value::Residue(rng.gen_range(0..*m))
            }
            RingDescriptor::Polynomial { base, .. } => {
                let degree = rng.gen_range(0..=self.max_degree);
                (0..=degree).fold(ring.zero(), |acc, d| {
                    let mut cs = vec![base.zero(); d + 1];
                    cs[d] = self.value(base, rng);
                    let term = if base.is_zero(&cs[d]) {
                        ring.zero()
                    } else {
                        Value::Poly(cs)
                    };
                    ring.add(&acc, &term)
                })
            }
            RingDescriptor::Quaternions => Value::Quat(Box::new(self.quaternion(rng))),
        }
    }

    pub fn quaternion<R: Rng + ?Sized>(&self, rng: &mut R) -> Quaternion {
        Quaternion::new(self.rational(rng), self.rational(rng), self.rational(rng), self.rational(rng))
    }

    pub fn scalar<R: Rng + ?Sized>(&self, ring: &RingDescriptor, rng: &mut R) -> Scalar {
        Scalar::from_parts(ring.clone(), self.value(ring, rng))
    }

    pub fn matrix<R: Rng + ?Sized>(&self, ring: &RingDescriptor, n: usize, rng: &mut R) -> Matrix {
        Matrix::from_fn(ring, n, |_, _| self.value(ring, rng))
    }
}
