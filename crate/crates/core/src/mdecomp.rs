//! Every matrix of size `n ≥ 2` over a unital ring as a sum of at most two
//! products of two commutators, and the same for rational quaternions.
//!
//! For `n ≥ 3` let `x`, `y` be the lower and upper shift matrices and
//! `c = Σₖ xᵏ a yᵏ`. Then `[cy, x] = a − c·eₙₙ`, so `[cy, x]·d = a·d` for any
//! `d` with vanishing last row. Taking `d = diag(1,−1,…,1,−1,0[,0])`, itself a
//! commutator, gives every matrix whose last `pₙ` columns are zero as one
//! product. A general matrix splits into such a matrix plus one whose first
//! `pₙ` columns are zero; the latter is handled by conjugating with the
//! reversal permutation `J`.

use crate::cert::{Certificate, CertificateTerm, CommutatorWitness};
use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::exactalg::{DirectSum, Matrix, Quaternion, RingDescriptor, Scalar};

/// Shift matrices and the diagonal commutator `d` for one size and ring.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftFrame {
    pub n: usize,
    /// `Σⱼ e_{j+1,j}`.
    pub x: Matrix,
    /// `Σⱼ e_{j,j+1}`.
    pub y: Matrix,
    pub d: Matrix,
    pub d_witness: CommutatorWitness<Matrix>,
    /// Number of trailing zeros on the diagonal of `d`.
    pub p_n: usize,
}

impl ShiftFrame {
    pub fn new(ring: &RingDescriptor, n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::SizeTooSmall { min: 3, got: n });
        }
        let p_n = if n % 2 == 1 { 1 } else { 2 };
        let m = n - p_n;
        let sum_units = |pairs: &mut dyn Iterator<Item = (usize, usize)>| {
            pairs.fold(Matrix::zero(ring, n), |acc, (i, j)| {
                acc.try_add(&Matrix::unit(ring, n, i, j)).expect("same ring and size")
            })
        };
        let x = sum_units(&mut (0..n - 1).map(|j| (j + 1, j)));
        let y = sum_units(&mut (0..n - 1).map(|j| (j, j + 1)));
        let upper = sum_units(&mut (0..m / 2).map(|k| (2 * k, 2 * k + 1)));
        let lower = sum_units(&mut (0..m / 2).map(|k| (2 * k + 1, 2 * k)));
        let d_witness = CommutatorWitness::new(upper, lower)?;
        Ok(Self {
            n,
            x,
            y,
            d: d_witness.value().clone(),
            d_witness,
            p_n,
        })
    }

    /// `c = a + x a y + … + xⁿ⁻¹ a yⁿ⁻¹`.
    /// Entrywise, `c[i][j] = Σₖ a[i−k][j−k]` over `k ≤ min(i, j)`.
    pub fn shift_sum(&self, a: &Matrix) -> Result<Matrix> {
        if a.n() != self.n {
            return Err(Error::ShapeMismatch(format!("{0}x{0} vs frame of size {1}", a.n(), self.n)));
        }
        let ring = a.ring();
        Ok(Matrix::from_fn(ring, self.n, |i, j| {
            (0..=i.min(j)).fold(ring.zero(), |acc, k| ring.add(&acc, a.get(i - k, j - k)))
        }))
    }
}

/// `a = diag(1,−1)·(0 b; −c 0) + (0 1; 1 0)·(0 d; a 0)` for `a = (a b; c d)`.
pub fn decompose_2x2(m: &Matrix) -> Result<Certificate<Matrix>> {
    if m.n() != 2 {
        return Err(Error::ShapeMismatch(format!("expected 2x2, got {0}x{0}", m.n())));
    }
    let ring = m.ring();
    let e = |i, j| Matrix::unit(ring, 2, i, j);
    let anti = |top: crate::exactalg::Value, bottom: crate::exactalg::Value| {
        Matrix::new(ring.clone(), 2, vec![ring.zero(), top, bottom, ring.zero()])
    };
    let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    let first = CertificateTerm::pair(
        CommutatorWitness::new(e(0, 1), e(1, 0))?,
        CommutatorWitness::new(e(0, 0), anti(b.clone(), c.clone())?)?,
    );
    let second = CertificateTerm::pair(
        CommutatorWitness::new(e(0, 0), anti(ring.one(), ring.neg(&ring.one()))?)?,
        CommutatorWitness::new(e(0, 0), anti(d.clone(), ring.neg(a))?)?,
    );
    Ok(Certificate::new(m.clone(), vec![first, second], "matrix-2x2").normalized())
}

/// One product `[c·y, x]·d` with value `b·d`.
pub fn zero_tail_product(b: &Matrix, frame: &ShiftFrame) -> Result<CertificateTerm<Matrix>> {
    if b.n() != frame.n {
        return Err(Error::ShapeMismatch(format!("{0}x{0} vs frame of size {1}", b.n(), frame.n)));
    }
    let c = frame.shift_sum(b)?;
    Ok(CertificateTerm::pair(
        CommutatorWitness::new(c.try_mul(&frame.y)?, frame.x.clone())?,
        frame.d_witness.clone(),
    ))
}

/// At most two products of two commutators summing to `a`, `n ≥ 2`.
pub fn decompose_nxn(a: &Matrix) -> Result<Certificate<Matrix>> {
    match a.n() {
        0 | 1 => Err(Error::SizeTooSmall { min: 2, got: a.n() }),
        2 => decompose_2x2(a),
        n => {
            let frame = ShiftFrame::new(a.ring(), n)?;
            let m = n - frame.p_n;
            let head = a.keep_columns(|j| j < m);
            let tail = a.keep_columns(|j| j >= m).reversal_conjugate();
            // d² agrees with the identity on the first m columns
            let first = zero_tail_product(&head.try_mul(&frame.d)?, &frame)?;
            let second = zero_tail_product(&tail.try_mul(&frame.d)?, &frame)?.map(Matrix::reversal_conjugate)?;
            Ok(Certificate::new(a.clone(), vec![first, second], "matrix-shift").normalized())
        }
    }
}

/// Coordinatewise [`decompose_nxn`], padding short summands with zero products.
pub fn decompose_direct_sum(a: &DirectSum) -> Result<Certificate<DirectSum>> {
    let certs: Vec<Certificate<Matrix>> = a.parts().iter().map(decompose_nxn).collect::<Result<_>>()?;
    let zero_pair = |m: &Matrix| {
        let z = m.zero_like();
        CommutatorWitness::new(z.clone(), z).expect("same ring")
    };
    let pick = |slot: usize, left: bool| -> Result<CommutatorWitness<DirectSum>> {
        let (ps, qs): (Vec<Matrix>, Vec<Matrix>) = certs
            .iter()
            .zip(a.parts())
            .map(|(c, part)| {
                let w = match c.terms.get(slot) {
                    Some(CertificateTerm::PairProduct { left: l, right: r }) => {
                        if left { l.clone() } else { r.clone() }
                    }
                    Some(CertificateTerm::SingleCommutator(_)) => unreachable!("matrix certificates are pair-only"),
                    None => zero_pair(part),
                };
                (w.p().clone(), w.q().clone())
            })
            .unzip();
        CommutatorWitness::new(DirectSum::new(ps)?, DirectSum::new(qs)?)
    };
    let slots = certs.iter().map(|c| c.terms.len()).max().unwrap_or(0);
    let terms = (0..slots)
        .map(|k| Ok(CertificateTerm::pair(pick(k, true)?, pick(k, false)?)))
        .collect::<Result<_>>()?;
    Ok(Certificate::new(a.clone(), terms, "direct-sum").normalized())
}

/// The fixed commutators `v = [i, j] = 2k` and `w = [j, k] = 2i`.
pub fn quaternion_frame() -> (CommutatorWitness<Scalar>, CommutatorWitness<Scalar>) {
    let q = Scalar::quaternion;
    let v = CommutatorWitness::new(q(Quaternion::i()), q(Quaternion::j())).expect("quaternions");
    let w = CommutatorWitness::new(q(Quaternion::j()), q(Quaternion::k())).expect("quaternions");
    (v, w)
}

/// The two products `[(d·a·v)·w⁻¹, w]·w` and `[w, d·a]·v`, `a = [v, w]⁻¹`,
/// before zero terms are dropped.
pub fn quaternion_terms(d: &Scalar) -> Result<[CertificateTerm<Scalar>; 2]> {
    if *d.ring() != RingDescriptor::Quaternions {
        return Err(Error::ring_mismatch(d.ring(), RingDescriptor::Quaternions));
    }
    let (v, w) = quaternion_frame();
    let a = v.value().commutator(w.value())?.try_invert().ok_or(Error::NotInvertible)?;
    let w_inv = w.value().try_invert().ok_or(Error::NotInvertible)?;
    let da = d.try_mul(&a)?;
    let left = Scalar::product(&da, &[v.value(), &w_inv])?;
    Ok([
        CertificateTerm::pair(CommutatorWitness::new(left, w.value().clone())?, w.clone()),
        CertificateTerm::pair(CommutatorWitness::new(w.value().clone(), da)?, v),
    ])
}

/// `d = [(d·a·v)·w⁻¹, w]·w + [w, d·a]·v` with `a = [v, w]⁻¹`.
pub fn quaternion_decompose(d: &Scalar) -> Result<Certificate<Scalar>> {
    let terms = quaternion_terms(d)?.to_vec();
    Ok(Certificate::new(d.clone(), terms, "division-ring").normalized())
}
