use std::fmt;

use num_bigint::BigInt;

use super::ring::{RingDescriptor, Value};
use super::scalar::Scalar;
use crate::element::RingElement;
use crate::error::{Error, Result};

/// Square `n × n` matrix over a coefficient ring, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: RingDescriptor,
    n: usize,
    entries: Vec<Value>,
}

impl Matrix {
    pub fn new(ring: RingDescriptor, n: usize, entries: Vec<Value>) -> Result<Self> {
        if n == 0 {
            return Err(Error::SizeTooSmall { min: 1, got: 0 });
        }
        if entries.len() != n * n {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|v| !ring.contains(v)) {
            return Err(Error::Parse(format!("{bad:?} is not a canonical element of {ring}")));
        }
        Ok(Self { ring, n, entries })
    }

    pub fn from_fn(ring: &RingDescriptor, n: usize, mut f: impl FnMut(usize, usize) -> Value) -> Self {
        assert!(n > 0, "matrix size must be positive");
        let entries = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        Self {
            ring: ring.clone(),
            n,
            entries,
        }
    }

    pub fn zero(ring: &RingDescriptor, n: usize) -> Self {
        Self::from_fn(ring, n, |_, _| ring.zero())
    }

    pub fn identity(ring: &RingDescriptor, n: usize) -> Self {
        Self::from_fn(ring, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    /// Matrix unit `e_{i,j}` (0-based).
    pub fn unit(ring: &RingDescriptor, n: usize, i: usize, j: usize) -> Self {
        Self::from_fn(ring, n, |r, c| if (r, c) == (i, j) { ring.one() } else { ring.zero() })
    }

    pub fn diagonal(ring: &RingDescriptor, diag: &[Value]) -> Self {
        Self::from_fn(ring, diag.len(), |i, j| if i == j { diag[i].clone() } else { ring.zero() })
    }

    /// Integer matrix mapped into `ring` by the unit map.
    pub fn from_i64_rows(ring: &RingDescriptor, rows: &[&[i64]]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("rows of unequal length".into()));
        }
        if n == 0 {
            return Err(Error::SizeTooSmall { min: 1, got: 0 });
        }
        Ok(Self::from_fn(ring, n, |i, j| ring.from_i64(rows[i][j])))
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Value {
        &self.entries[i * self.n + j]
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        Scalar::from_parts(self.ring.clone(), self.get(i, j).clone())
    }

    pub fn entries(&self) -> &[Value] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Value]> {
        self.entries.chunks(self.n)
    }

    fn check(&self, rhs: &Self) -> Result<()> {
        if self.ring != rhs.ring {
            return Err(Error::ring_mismatch(&self.ring, &rhs.ring));
        }
        if self.n != rhs.n {
            return Err(Error::ShapeMismatch(format!("{0}x{0} vs {1}x{1}", self.n, rhs.n)));
        }
        Ok(())
    }

    /// Maps an integer matrix into `ring` entrywise.
    pub fn embed(&self, ring: &RingDescriptor) -> Result<Self> {
        if self.ring == *ring {
            return Ok(self.clone());
        }
        if self.ring != RingDescriptor::Integers {
            return Err(Error::ring_mismatch(&self.ring, ring));
        }
        Ok(Self::from_fn(ring, self.n, |i, j| match self.get(i, j) {
            Value::Int(v) => ring.from_int(v),
            _ => unreachable!(),
        }))
    }

    /// Left multiplication by a scalar of the coefficient ring.
    pub fn scale_left(&self, c: &Value) -> Self {
        Self::from_fn(&self.ring, self.n, |i, j| self.ring.mul(c, self.get(i, j)))
    }

    /// Keeps the columns for which `keep` holds and zeroes the rest.
    pub fn keep_columns(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self::from_fn(&self.ring, self.n, |i, j| {
            if keep(j) {
                self.get(i, j).clone()
            } else {
                self.ring.zero()
            }
        })
    }

    pub fn column_is_zero(&self, j: usize) -> bool {
        (0..self.n).all(|i| self.ring.is_zero(self.get(i, j)))
    }

    /// `J a J` with `J` the anti-diagonal permutation, i.e. both indices reversed.
    ///
    /// An involutive ring automorphism; maps "first k columns zero" to
    /// "last k columns zero".
    pub fn reversal_conjugate(&self) -> Self {
        let n = self.n;
        Self::from_fn(&self.ring, n, |i, j| self.get(n - 1 - i, n - 1 - j).clone())
    }

    pub fn block_diag(blocks: &[Matrix]) -> Result<Self> {
        let first = blocks.first().ok_or(Error::EmptySum)?;
        if let Some(b) = blocks.iter().find(|b| b.ring != first.ring) {
            return Err(Error::ring_mismatch(&first.ring, &b.ring));
        }
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut out = Self::zero(&first.ring, n);
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    out.entries[(offset + i) * n + offset + j] = b.get(i, j).clone();
                }
            }
            offset += b.n;
        }
        Ok(out)
    }

    /// Matrix product skipping zero entries, so products with the sparse
    /// shift, unit and diagonal matrices used by the decompositions stay cheap.
    fn mul_unchecked(&self, rhs: &Self) -> Self {
        let n = self.n;
        let ring = &self.ring;
        let mut out = vec![ring.zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if ring.is_zero(b) {
                        continue;
                    }
                    let prod = ring.mul(a, b);
                    let slot = &mut out[i * n + j];
                    *slot = if ring.is_zero(slot) { prod } else { ring.add(slot, &prod) };
                }
            }
        }
        Self {
            ring: ring.clone(),
            n,
            entries: out,
        }
    }

    pub fn trace(&self) -> Value {
        (0..self.n).fold(self.ring.zero(), |acc, i| self.ring.add(&acc, self.get(i, i)))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(&self.ring, self.n), |acc, _| acc.mul_unchecked(self))
    }

    /// Sub-matrix with row `row` and column `col` removed.
    pub(crate) fn minor(&self, row: usize, col: usize) -> Self {
        let n = self.n;
        let entries = (0..n)
            .filter(|&i| i != row)
            .flat_map(|i| (0..n).filter(move |&j| j != col).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Self {
            ring: self.ring.clone(),
            n: n - 1,
            entries,
        }
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: Value) {
        self.entries[i * self.n + j] = v;
    }

    pub fn from_bigint_rows(ring: &RingDescriptor, rows: &[Vec<BigInt>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("rows must form a non-empty square".into()));
        }
        Ok(Self::from_fn(ring, n, |i, j| ring.from_int(&rows[i][j])))
    }
}

impl RingElement for Matrix {
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let ring = &self.ring;
        Ok(Self::from_fn(ring, self.n, |i, j| ring.add(self.get(i, j), rhs.get(i, j))))
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let ring = &self.ring;
        Ok(Self::from_fn(ring, self.n, |i, j| ring.sub(self.get(i, j), rhs.get(i, j))))
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    fn neg(&self) -> Self {
        Self::from_fn(&self.ring, self.n, |i, j| self.ring.neg(self.get(i, j)))
    }

    fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| self.ring.is_zero(v))
    }

    fn zero_like(&self) -> Self {
        Self::zero(&self.ring, self.n)
    }

    fn one_like(&self) -> Self {
        Self::identity(&self.ring, self.n)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .map(|r| {
                r.iter()
                    .map(|v| self.ring.format_value(v))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}
