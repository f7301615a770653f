use std::fmt::Debug;

use crate::error::Result;

/// An element of a working ring that certificates can be built over.
///
/// Binary operations are fallible because ring and shape compatibility is a
/// runtime property (two matrices may live over different coefficient rings).
pub trait RingElement: Clone + PartialEq + Debug {
    fn try_add(&self, rhs: &Self) -> Result<Self>;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Additive identity of the ring `self` lives in.
    fn zero_like(&self) -> Self;
    /// Multiplicative identity of the ring `self` lives in.
    fn one_like(&self) -> Self;

    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.neg())
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// `[self, rhs] = self·rhs − rhs·self`.
    fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.try_mul(rhs)?.try_sub(&rhs.try_mul(self)?)
    }

    /// Folds `try_mul` over `factors`, left to right.
    fn product(first: &Self, rest: &[&Self]) -> Result<Self> {
        rest.iter().try_fold(first.clone(), |acc, f| acc.try_mul(f))
    }
}
