//! Determinants, adjugates and adjugate inverses over commutative rings.

use super::matrix::Matrix;
use super::ring::{RingDescriptor, Value};
use crate::error::{Error, Result};

/// Subset expansion is exponential in `n`; this bounds its table size.
const MAX_EXPANSION_SIZE: usize = 20;

impl Matrix {
    /// Exact determinant. Fraction-free elimination over integral domains,
    /// division-free cofactor expansion otherwise.
    pub fn det(&self) -> Result<Value> {
        let ring = self.ring();
        if !ring.is_commutative() {
            return Err(Error::NoncommutativeCoefficients);
        }
        if ring.is_integral_domain() {
            Ok(self.det_bareiss())
        } else {
            self.det_expansion()
        }
    }

    pub(crate) fn det_bareiss(&self) -> Value {
        let ring = self.ring();
        let n = self.n();
        let mut m: Vec<Vec<Value>> = self.rows().map(|r| r.to_vec()).collect();
        let mut negate = false;
        let mut prev = ring.one();
        for k in 0..n.saturating_sub(1) {
            if ring.is_zero(&m[k][k]) {
                match (k + 1..n).find(|&i| !ring.is_zero(&m[i][k])) {
                    Some(i) => {
                        m.swap(i, k);
                        negate = !negate;
                    }
                    None => return ring.zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = ring.sub(
                        &ring.mul(&m[i][j], &m[k][k]),
                        &ring.mul(&m[i][k], &m[k][j]),
                    );
                    m[i][j] = ring
                        .exact_div(&num, &prev)
                        .expect("Bareiss division is exact over an integral domain");
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            ring.neg(&d)
        } else {
            d
        }
    }

    /// Laplace expansion along rows with minors memoized by column subset.
    pub(crate) fn det_expansion(&self) -> Result<Value> {
        let ring = self.ring();
        let n = self.n();
        if n > MAX_EXPANSION_SIZE {
            return Err(Error::ShapeMismatch(format!(
                "cofactor expansion supports n <= {MAX_EXPANSION_SIZE}, got {n}"
            )));
        }
        // minors[mask] = det of rows 0..popcount(mask) restricted to the columns in mask
        let mut minors = vec![ring.zero(); 1 << n];
        minors[0] = ring.one();
        for mask in 0usize..(1 << n) {
            let row = mask.count_ones() as usize;
            if row == n || ring.is_zero(&minors[mask]) {
                continue;
            }
            for j in (0..n).filter(|j| mask & (1 << j) == 0) {
                let a = self.get(row, j);
                if ring.is_zero(a) {
                    continue;
                }
                let larger = (mask >> (j + 1)).count_ones();
                let mut term = ring.mul(a, &minors[mask]);
                if larger % 2 == 1 {
                    term = ring.neg(&term);
                }
                let target = mask | (1 << j);
                minors[target] = ring.add(&minors[target], &term);
            }
        }
        Ok(minors[(1 << n) - 1].clone())
    }

    pub fn adjugate(&self) -> Result<Matrix> {
        let ring = self.ring().clone();
        if !ring.is_commutative() {
            return Err(Error::NoncommutativeCoefficients);
        }
        let n = self.n();
        if n == 1 {
            return Ok(Matrix::identity(&ring, 1));
        }
        let mut adj = Matrix::zero(&ring, n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(j, i).det()?;
                let c = if (i + j) % 2 == 1 { ring.neg(&c) } else { c };
                adj.set(i, j, c);
            }
        }
        Ok(adj)
    }

    /// `det⁻¹ · adj` when the determinant is a unit of the coefficient ring.
    pub fn adjugate_inverse(&self) -> Result<Matrix> {
        let det = self.det()?;
        let inv = self.ring().try_invert(&det).ok_or(Error::NotInvertible)?;
        Ok(self.adjugate()?.scale_left(&inv))
    }

    pub fn is_unimodular(&self) -> bool {
        let ring: &RingDescriptor = self.ring();
        self.det().ok().is_some_and(|d| ring.try_invert(&d).is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::RingElement;

    fn z(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64_rows(&RingDescriptor::Integers, rows).unwrap()
    }

    /// Permutation-sum determinant: the textbook definition, as an oracle.
    fn leibniz(m: &Matrix) -> Value {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let ring = m.ring();
        let n = m.n();
        let mut acc = ring.zero();
        for p in perms(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let mut term = ring.one();
            for (i, &pi) in p.iter().enumerate() {
                term = ring.mul(&term, m.get(i, pi));
            }
            if inversions % 2 == 1 {
                term = ring.neg(&term);
            }
            acc = ring.add(&acc, &term);
        }
        acc
    }

    #[test]
    fn small_determinants() {
        let ring = RingDescriptor::Integers;
        assert_eq!(z(&[&[1, 0], &[0, -1]]).det().unwrap(), ring.from_i64(-1));
        assert_eq!(Matrix::identity(&ring, 4).det().unwrap(), ring.one());
        let bracket = z(&[&[0, 1, 0], &[0, 0, -1], &[-1, 0, 0]]);
        assert_eq!(leibniz(&bracket), ring.one());
        assert_eq!(bracket.det().unwrap(), ring.one());
    }

    #[test]
    fn both_algorithms_match_leibniz() {
        let m = z(&[&[2, -1, 0, 3], &[1, 4, 2, 0], &[0, 0, 5, -2], &[7, 1, 1, 1]]);
        let expected = leibniz(&m);
        assert_eq!(m.det_bareiss(), expected);
        assert_eq!(m.det_expansion().unwrap(), expected);

        let z6 = RingDescriptor::integers_mod(6).unwrap();
        let m6 = m.embed(&z6).unwrap();
        assert_eq!(m6.det().unwrap(), leibniz(&m6));
    }

    #[test]
    fn bareiss_pivots_past_zero() {
        let m = z(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(m.det().unwrap(), leibniz(&m));
    }

    #[test]
    fn adjugate_inverse_integer_cases() {
        let d = z(&[&[1, 0], &[0, -1]]);
        assert_eq!(d.adjugate_inverse().unwrap(), d);

        let bracket = z(&[&[0, 1, 0], &[0, 0, -1], &[-1, 0, 0]]);
        let inv = bracket.adjugate_inverse().unwrap();
        assert!(inv.try_mul(&bracket).unwrap().is_one());
        assert!(bracket.try_mul(&inv).unwrap().is_one());

        let two = Matrix::identity(&RingDescriptor::Integers, 2).scale_left(&RingDescriptor::Integers.from_i64(2));
        assert_eq!(two.adjugate_inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn quaternion_matrices_have_no_determinant() {
        let m = Matrix::identity(&RingDescriptor::Quaternions, 2);
        assert_eq!(m.det(), Err(Error::NoncommutativeCoefficients));
    }
}
