use std::fmt;

use super::matrix::Matrix;
use crate::element::RingElement;
use crate::error::{Error, Result};

/// Element of `M_{n_1}(S_1) ⊕ … ⊕ M_{n_m}(S_m)`; all operations act coordinatewise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectSum {
    parts: Vec<Matrix>,
}

impl DirectSum {
    pub fn new(parts: Vec<Matrix>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptySum);
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[Matrix] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Matrix> {
        self.parts
    }

    /// Summand sizes `(n_1, …, n_m)`.
    pub fn shape(&self) -> Vec<usize> {
        self.parts.iter().map(Matrix::n).collect()
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&Matrix, &Matrix) -> Result<Matrix>) -> Result<Self> {
        if self.parts.len() != rhs.parts.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} summands vs {}",
                self.parts.len(),
                rhs.parts.len()
            )));
        }
        let parts = self
            .parts
            .iter()
            .zip(&rhs.parts)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(Self { parts })
    }

    fn map(&self, f: impl Fn(&Matrix) -> Matrix) -> Self {
        Self {
            parts: self.parts.iter().map(f).collect(),
        }
    }
}

/// `direct_sum_embed`: the tuple of matrices as one element of the product ring.
pub fn direct_sum_embed(parts: Vec<Matrix>) -> Result<DirectSum> {
    DirectSum::new(parts)
}

impl RingElement for DirectSum {
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, Matrix::try_add)
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, Matrix::try_sub)
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, Matrix::try_mul)
    }

    fn neg(&self) -> Self {
        self.map(Matrix::neg)
    }

    fn is_zero(&self) -> bool {
        self.parts.iter().all(Matrix::is_zero)
    }

    fn zero_like(&self) -> Self {
        self.map(Matrix::zero_like)
    }

    fn one_like(&self) -> Self {
        self.map(Matrix::one_like)
    }
}

impl fmt::Display for DirectSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(" ⊕ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::RingDescriptor;

    #[test]
    fn unit_of_product_ring() {
        let z = RingDescriptor::Integers;
        let one = direct_sum_embed(vec![Matrix::identity(&z, 2), Matrix::identity(&z, 3)]).unwrap();
        assert!(one.is_one());
        assert_eq!(one.shape(), vec![2, 3]);
        assert_eq!(direct_sum_embed(vec![]), Err(Error::EmptySum));
    }

    #[test]
    fn commutator_is_coordinatewise() {
        let z = RingDescriptor::Integers;
        let p = direct_sum_embed(vec![Matrix::unit(&z, 2, 0, 1), Matrix::unit(&z, 3, 0, 2)]).unwrap();
        let q = direct_sum_embed(vec![Matrix::unit(&z, 2, 1, 0), Matrix::unit(&z, 3, 2, 1)]).unwrap();
        let bracket = p.commutator(&q).unwrap();
        for (k, part) in bracket.parts().iter().enumerate() {
            let expected = p.parts()[k].commutator(&q.parts()[k]).unwrap();
            assert_eq!(*part, expected);
        }
    }

    #[test]
    fn mismatched_summand_counts() {
        let z = RingDescriptor::Integers;
        let a = direct_sum_embed(vec![Matrix::identity(&z, 2)]).unwrap();
        let b = direct_sum_embed(vec![Matrix::identity(&z, 2), Matrix::identity(&z, 2)]).unwrap();
        assert!(matches!(a.try_mul(&b), Err(Error::ShapeMismatch(_))));
    }
}
