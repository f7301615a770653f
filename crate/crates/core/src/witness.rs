//! Integer matrices `u, v, w`, each an explicit commutator, with `[u,v]`
//! invertible over `Z` and `v·w = v`.
//!
//! Sizes 2 and 3 use fixed matrices; larger sizes are block-diagonal
//! compositions of those, with `n = 2k + 3ℓ`, `ℓ = n mod 2`. Such a triple gives
//! `1 = s·[u, v·w]` with `s = [u,v]⁻¹`, which is exactly what the three-term
//! decomposition in [`crate::rewrite`] consumes.

use crate::cert::CommutatorWitness;
use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::exactalg::{DirectSum, Matrix, RingDescriptor};
use crate::rewrite::{SingleWitness, UnitSummand};

#[derive(Clone, Debug, PartialEq)]
pub struct WitnessTriple {
    pub n: usize,
    pub u: CommutatorWitness<Matrix>,
    pub v: CommutatorWitness<Matrix>,
    pub w: CommutatorWitness<Matrix>,
    pub bracket_uv: Matrix,
    /// Exact inverse of `bracket_uv`.
    pub s: Matrix,
}

fn int(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64_rows(&RingDescriptor::Integers, rows).expect("static matrix")
}

fn pair(p: Matrix, q: Matrix) -> CommutatorWitness<Matrix> {
    CommutatorWitness::new(p, q).expect("same ring and size")
}

type Pairs = [(Matrix, Matrix); 3];

fn pairs_2() -> Pairs {
    let z = RingDescriptor::Integers;
    let e = |i, j| Matrix::unit(&z, 2, i, j);
    let u = pair(e(0, 1), e(1, 1));
    let v = pair(e(1, 0), e(0, 0));
    [
        (u.p().clone(), u.q().clone()),
        (v.p().clone(), v.q().clone()),
        (u.value().clone(), v.value().clone()),
    ]
}

fn pairs_3() -> Pairs {
    let shift_down = int(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
    [
        (
            int(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 0]]),
            int(&[&[0, 0, 1], &[1, 0, 0], &[0, 0, 0]]),
        ),
        (shift_down.clone(), int(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 0]])),
        (int(&[&[0, 1, 0], &[0, 0, 2], &[0, 0, 0]]), shift_down),
    ]
}

/// Block sizes used for `n`: `k` blocks of size 2 followed by `ℓ ∈ {0, 1}` blocks of size 3.
pub fn block_sizes(n: usize) -> Vec<usize> {
    let threes = n % 2;
    let twos = (n - 3 * threes) / 2;
    std::iter::repeat_n(2, twos).chain(std::iter::repeat_n(3, threes)).collect()
}

/// The witness triple in `M_n(Z)`, `n ≥ 2`.
pub fn witness_triple(n: usize) -> Result<WitnessTriple> {
    if n < 2 {
        return Err(Error::SizeTooSmall { min: 2, got: n });
    }
    let pairs = match n {
        2 => pairs_2(),
        3 => pairs_3(),
        _ => {
            let blocks: Vec<Pairs> = block_sizes(n)
                .into_iter()
                .map(|b| if b == 2 { pairs_2() } else { pairs_3() })
                .collect();
            let diag = |slot: usize, first: bool| {
                let parts: Vec<Matrix> = blocks
                    .iter()
                    .map(|b| if first { b[slot].0.clone() } else { b[slot].1.clone() })
                    .collect();
                Matrix::block_diag(&parts).expect("blocks share a ring")
            };
            [
                (diag(0, true), diag(0, false)),
                (diag(1, true), diag(1, false)),
                (diag(2, true), diag(2, false)),
            ]
        }
    };
    let [u, v, w] = pairs.map(|(p, q)| pair(p, q));
    let bracket_uv = u.value().commutator(v.value())?;
    let s = bracket_uv
        .adjugate_inverse()
        .map_err(|_| Error::InvalidWitness(format!("[u,v] is not unimodular for n = {n}")))?;
    let triple = WitnessTriple {
        n,
        u,
        v,
        w,
        bracket_uv,
        s,
    };
    triple.check()?;
    Ok(triple)
}

impl WitnessTriple {
    /// Checks every defining property directly, trusting nothing cached.
    pub fn check(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::InvalidWitness(format!("n = {}: {what}", self.n)));
        for (name, w) in [("u", &self.u), ("v", &self.v), ("w", &self.w)] {
            if !w.is_consistent() {
                return fail(&format!("{name} is not the bracket of its pair"));
            }
        }
        let z = RingDescriptor::Integers;
        let det = self.bracket_uv.det()?;
        if det != z.from_i64(1) && det != z.from_i64(-1) {
            return fail("det [u,v] is not ±1");
        }
        if self.u.value().commutator(self.v.value())? != self.bracket_uv {
            return fail("stored [u,v] is wrong");
        }
        if !self.s.try_mul(&self.bracket_uv)?.is_one() {
            return fail("s·[u,v] ≠ 1");
        }
        let v = self.v.value();
        if v.try_mul(self.w.value())? != *v {
            return fail("v·w ≠ v");
        }
        let vw = v.try_mul(self.w.value())?;
        if !self.s.try_mul(&self.u.value().commutator(&vw)?)?.is_one() {
            return fail("s·[u, v·w] ≠ 1");
        }
        Ok(())
    }

    /// `det [u,v]`, always ±1.
    pub fn det_bracket(&self) -> i64 {
        if self.bracket_uv.det().ok() == Some(RingDescriptor::Integers.from_i64(1)) {
            1
        } else {
            -1
        }
    }

    /// The unit witness `1 = s·[u, v·w]` mapped into `M_n(ring)` by the unit map.
    pub fn unit_witness_over(&self, ring: &RingDescriptor) -> Result<SingleWitness<Matrix>> {
        let embed = |m: &Matrix| m.embed(ring).expect("integer matrix");
        Ok(SingleWitness {
            s: embed(&self.s),
            u: self.u.map(embed)?,
            v: self.v.map(embed)?,
            w: self.w.map(embed)?,
        })
    }

    pub fn unit_witness(&self) -> SingleWitness<Matrix> {
        self.unit_witness_over(&RingDescriptor::Integers).expect("identity embedding")
    }
}

/// Coordinatewise witness `1 = s·[u, v·w]` in `M_{n_1}(Z) ⊕ … ⊕ M_{n_m}(Z)`.
pub fn subring_witness(parts: &[usize]) -> Result<SingleWitness<DirectSum>> {
    subring_witness_over(parts, &RingDescriptor::Integers)
}

/// As [`subring_witness`], with summand `j` over `rings[j]` (or one ring for all).
pub fn subring_witness_over(parts: &[usize], ring: &RingDescriptor) -> Result<SingleWitness<DirectSum>> {
    if parts.is_empty() {
        return Err(Error::EmptySum);
    }
    let per_summand: Vec<SingleWitness<Matrix>> = parts
        .iter()
        .map(|&n| witness_triple(n)?.unit_witness_over(ring))
        .collect::<Result<_>>()?;
    let gather = |pick: &dyn Fn(&SingleWitness<Matrix>) -> Matrix| {
        DirectSum::new(per_summand.iter().map(pick).collect())
    };
    let lift = |pick: &dyn Fn(&SingleWitness<Matrix>) -> &CommutatorWitness<Matrix>| -> Result<_> {
        CommutatorWitness::new(
            gather(&|w| pick(w).p().clone())?,
            gather(&|w| pick(w).q().clone())?,
        )
    };
    Ok(SingleWitness {
        s: gather(&|w| w.s.clone())?,
        u: lift(&|w| &w.u)?,
        v: lift(&|w| &w.v)?,
        w: lift(&|w| &w.w)?,
    })
}

/// `1 = Σⱼ aⱼ[xⱼ, yⱼzⱼ]bⱼ` in `⊕ⱼ M_{n_j}(ring)` with one summand per
/// coordinate: summand `j` is the witness of `M_{n_j}` placed in slot `j`.
pub fn split_subring_witness(parts: &[usize], ring: &RingDescriptor) -> Result<Vec<UnitSummand<DirectSum>>> {
    if parts.is_empty() {
        return Err(Error::EmptySum);
    }
    let singles: Vec<SingleWitness<Matrix>> = parts
        .iter()
        .map(|&n| witness_triple(n)?.unit_witness_over(ring))
        .collect::<Result<_>>()?;
    let zeros: Vec<Matrix> = parts.iter().map(|&n| Matrix::zero(ring, n)).collect();
    let place = |j: usize, m: &Matrix| {
        let mut v = zeros.clone();
        v[j] = m.clone();
        DirectSum::new(v)
    };
    let lift = |j: usize, w: &CommutatorWitness<Matrix>| CommutatorWitness::new(place(j, w.p())?, place(j, w.q())?);
    singles
        .iter()
        .enumerate()
        .map(|(j, w)| {
            Ok(UnitSummand {
                a: place(j, &w.s)?,
                x: lift(j, &w.u)?,
                y: lift(j, &w.v)?,
                z: lift(j, &w.w)?,
                b: DirectSum::new(parts.iter().map(|&n| Matrix::identity(ring, n)).collect())?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> Matrix {
        int(rows)
    }

    #[test]
    fn size_two_matches_the_explicit_matrices() {
        let t = witness_triple(2).unwrap();
        assert_eq!(*t.u.value(), z(&[&[0, 1], &[0, 0]]));
        assert_eq!(*t.v.value(), z(&[&[0, 0], &[1, 0]]));
        assert_eq!(*t.w.value(), z(&[&[1, 0], &[0, -1]]));
        assert_eq!(t.bracket_uv, *t.w.value());
        assert_eq!(t.det_bracket(), -1);
    }

    #[test]
    fn size_three_matches_the_explicit_matrices() {
        let t = witness_triple(3).unwrap();
        assert_eq!(*t.u.value(), z(&[&[0, 0, 1], &[1, 0, 0], &[0, 0, 0]]));
        assert_eq!(*t.v.value(), z(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(*t.w.value(), z(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -2]]));
        assert_eq!(t.bracket_uv, z(&[&[0, 1, 0], &[0, 0, -1], &[-1, 0, 0]]));
        assert_eq!(t.det_bracket(), 1);
    }

    #[test]
    fn size_five_is_two_plus_three() {
        assert_eq!(block_sizes(5), vec![2, 3]);
        let t = witness_triple(5).unwrap();
        assert_eq!(t.det_bracket(), -1);
        let two = witness_triple(2).unwrap();
        let three = witness_triple(3).unwrap();
        let expected = Matrix::block_diag(&[two.v.value().clone(), three.v.value().clone()]).unwrap();
        assert_eq!(*t.v.value(), expected);
    }

    #[test]
    fn block_sizes_cover_n() {
        for n in 2..40 {
            let sizes = block_sizes(n);
            assert_eq!(sizes.iter().sum::<usize>(), n);
            assert!(sizes.iter().filter(|&&b| b == 3).count() <= 1);
        }
    }

    #[test]
    fn too_small() {
        assert_eq!(witness_triple(1), Err(Error::SizeTooSmall { min: 2, got: 1 }));
    }

    #[test]
    fn subring_witnesses() {
        for parts in [&[2][..], &[2, 3], &[3, 3, 2]] {
            let w = subring_witness(parts).unwrap();
            w.check().unwrap();
            assert_eq!(w.s.shape(), parts.to_vec());
        }
        assert!(matches!(subring_witness(&[]), Err(Error::EmptySum)));
        let single = subring_witness(&[2]).unwrap();
        let direct = witness_triple(2).unwrap().unit_witness();
        assert_eq!(single.s.parts()[0], direct.s);
    }

    #[test]
    fn split_witness_sums_to_one() {
        let terms = split_subring_witness(&[2, 3], &RingDescriptor::Integers).unwrap();
        assert_eq!(terms.len(), 2);
        crate::rewrite::UnitWitness::SumOfD(terms).check().unwrap();
    }
}
