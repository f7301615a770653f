//! Mechanical rewriting of `c·[p, q₁q₂]`-shaped elements into products of
//! commutators.
//!
//! Every function here instantiates one ring identity at the level of
//! concrete elements and returns the individual terms, so callers can check
//! the identity numerically and assemble certificates:
//!
//! * `a[x,y]b = a[[b,y],x] + a[[x,b],y] + ab[x,y]` ([`lemma31_expand`])
//! * `a[x,y] = [ax,y] + [y,a]x` ([`lemma32_split`])
//! * `c[p,q₁q₂] = [cp,q₁]q₂ + q₁[cp,q₂] + [q₁q₂,c]p` ([`lemma33_core`])
//!
//! With a unit witness `1 = s[u, vw]` (all of `u, v, w` commutators) the last
//! identity at `c = a·s` writes any `a` as three products of commutators
//! ([`xi3_decompose`]); with `1 = Σⱼ aⱼ[xⱼ, yⱼzⱼ]bⱼ` the first identity and a
//! product rule reduce each summand to four `c[p,q₁q₂]` terms, so twelve
//! products per summand ([`pipeline_12d`]).

use crate::cert::{Certificate, CertificateTerm, CommutatorWitness};
use crate::element::RingElement;
use crate::error::{Error, Result};

/// `1 = s·[u, v·w]` with `u, v, w` commutators.
#[derive(Clone, Debug, PartialEq)]
pub struct SingleWitness<E> {
    pub s: E,
    pub u: CommutatorWitness<E>,
    pub v: CommutatorWitness<E>,
    pub w: CommutatorWitness<E>,
}

/// One summand `a·[x, y·z]·b` of a unit decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitSummand<E> {
    pub a: E,
    pub x: CommutatorWitness<E>,
    pub y: CommutatorWitness<E>,
    pub z: CommutatorWitness<E>,
    pub b: E,
}

#[derive(Clone, Debug, PartialEq)]
pub enum UnitWitness<E> {
    Single(SingleWitness<E>),
    /// `1 = Σⱼ aⱼ·[xⱼ, yⱼ·zⱼ]·bⱼ`.
    SumOfD(Vec<UnitSummand<E>>),
}

impl<E: RingElement> SingleWitness<E> {
    /// `s·[u, v·w]`.
    pub fn value(&self) -> Result<E> {
        let vw = self.v.value().try_mul(self.w.value())?;
        self.s.try_mul(&self.u.value().commutator(&vw)?)
    }

    pub fn check(&self) -> Result<()> {
        for w in [&self.u, &self.v, &self.w] {
            w.ensure_consistent()?;
        }
        if !self.value()?.is_one() {
            return Err(Error::InvalidWitness("s·[u, v·w] ≠ 1".into()));
        }
        Ok(())
    }

    /// The same data as a one-summand decomposition with `b = 1`.
    pub fn as_summand(&self) -> UnitSummand<E> {
        UnitSummand {
            a: self.s.clone(),
            x: self.u.clone(),
            y: self.v.clone(),
            z: self.w.clone(),
            b: self.s.one_like(),
        }
    }
}

impl<E: RingElement> UnitSummand<E> {
    pub fn value(&self) -> Result<E> {
        let yz = self.y.value().try_mul(self.z.value())?;
        E::product(&self.a, &[&self.x.value().commutator(&yz)?, &self.b])
    }
}

impl<E: RingElement> UnitWitness<E> {
    pub fn summands(&self) -> Vec<UnitSummand<E>> {
        match self {
            UnitWitness::Single(w) => vec![w.as_summand()],
            UnitWitness::SumOfD(terms) => terms.clone(),
        }
    }

    pub fn check(&self) -> Result<()> {
        match self {
            UnitWitness::Single(w) => w.check(),
            UnitWitness::SumOfD(terms) => check_summands(terms),
        }
    }
}

fn check_summands<E: RingElement>(terms: &[UnitSummand<E>]) -> Result<()> {
    let first = terms.first().ok_or(Error::EmptySum)?;
    let mut total = first.a.zero_like();
    for t in terms {
        for w in [&t.x, &t.y, &t.z] {
            w.ensure_consistent()?;
        }
        total = total.try_add(&t.value()?)?;
    }
    if !total.is_one() {
        return Err(Error::InvalidWitness("Σ aⱼ[xⱼ, yⱼzⱼ]bⱼ ≠ 1".into()));
    }
    Ok(())
}

/// `left · [p, q]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaledBracket<E> {
    pub left: E,
    pub p: E,
    pub q: E,
}

impl<E: RingElement> ScaledBracket<E> {
    pub fn value(&self) -> Result<E> {
        self.left.try_mul(&self.p.commutator(&self.q)?)
    }
}

/// `a[x,y]b = a[[b,y],x] + a[[x,b],y] + ab[x,y]`.
pub fn lemma31_expand<E: RingElement>(a: &E, x: &E, y: &E, b: &E) -> Result<[ScaledBracket<E>; 3]> {
    Ok([
        ScaledBracket {
            left: a.clone(),
            p: b.commutator(y)?,
            q: x.clone(),
        },
        ScaledBracket {
            left: a.clone(),
            p: x.commutator(b)?,
            q: y.clone(),
        },
        ScaledBracket {
            left: a.try_mul(b)?,
            p: x.clone(),
            q: y.clone(),
        },
    ])
}

/// `a[x,y] = [ax, y] + [y, a]·x`: a single commutator plus a bracket times `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct LeftSplit<E> {
    pub single: CommutatorWitness<E>,
    pub bracket: CommutatorWitness<E>,
    pub right: E,
}

impl<E: RingElement> LeftSplit<E> {
    pub fn values(&self) -> Result<[E; 2]> {
        Ok([self.single.value().clone(), self.bracket.value().try_mul(&self.right)?])
    }
}

pub fn lemma32_split<E: RingElement>(a: &E, x: &E, y: &E) -> Result<LeftSplit<E>> {
    Ok(LeftSplit {
        single: CommutatorWitness::new(a.try_mul(x)?, y.clone())?,
        bracket: CommutatorWitness::new(y.clone(), a.clone())?,
        right: x.clone(),
    })
}

/// `c[p, q₁q₂] = [cp, q₁]·q₂ + q₁·[cp, q₂] + [q₁q₂, c]·p`, each a product of
/// two commutators because `p, q₁, q₂` are.
pub fn lemma33_core<E: RingElement>(
    c: &E,
    p: &CommutatorWitness<E>,
    q1: &CommutatorWitness<E>,
    q2: &CommutatorWitness<E>,
) -> Result<[CertificateTerm<E>; 3]> {
    for w in [p, q1, q2] {
        w.ensure_consistent()?;
    }
    let cp = c.try_mul(p.value())?;
    let q1q2 = q1.value().try_mul(q2.value())?;
    Ok([
        CertificateTerm::pair(CommutatorWitness::new(cp.clone(), q1.value().clone())?, q2.clone()),
        CertificateTerm::pair(q1.clone(), CommutatorWitness::new(cp, q2.value().clone())?),
        CertificateTerm::pair(CommutatorWitness::new(q1q2, c.clone())?, p.clone()),
    ])
}

/// `a = Σⱼ (a·sⱼ)[uⱼ, vⱼwⱼ]`, three products per witness, given `Σⱼ sⱼ[uⱼ, vⱼwⱼ] = 1`.
pub fn unit_sum_decompose<E: RingElement>(a: &E, witnesses: &[SingleWitness<E>]) -> Result<Certificate<E>> {
    let first = witnesses.first().ok_or(Error::EmptySum)?;
    let mut total = first.s.zero_like();
    for w in witnesses {
        for cw in [&w.u, &w.v, &w.w] {
            cw.ensure_consistent()?;
        }
        total = total.try_add(&w.value()?)?;
    }
    if !total.is_one() {
        return Err(Error::InvalidWitness("Σ sⱼ[uⱼ, vⱼwⱼ] ≠ 1".into()));
    }
    let mut terms = Vec::with_capacity(3 * witnesses.len());
    for w in witnesses {
        let c = a.try_mul(&w.s)?;
        terms.extend(lemma33_core(&c, &w.u, &w.v, &w.w)?);
    }
    debug_assert!(terms.len() <= 3 * witnesses.len());
    Ok(Certificate::new(a.clone(), terms, "unit-sum").normalized())
}

/// `a = [(as)u, v]·w + v·[(as)u, w] + [vw, as]·u` for a witness `1 = s[u, vw]`.
pub fn xi3_decompose<E: RingElement>(a: &E, w: &SingleWitness<E>) -> Result<Certificate<E>> {
    w.check()?;
    let mut cert = unit_sum_decompose(a, std::slice::from_ref(w))?;
    cert.provenance = "xi3".into();
    Ok(cert)
}

/// `a = [(as)u, v] + [v, as]·u`, valid because `v·w = v` makes `1 = s[u, v]`.
pub fn mixed_decompose<E: RingElement>(a: &E, w: &SingleWitness<E>) -> Result<Certificate<E>> {
    for cw in [&w.u, &w.v] {
        cw.ensure_consistent()?;
    }
    if !w.s.try_mul(&w.u.value().commutator(w.v.value())?)?.is_one() {
        return Err(Error::InvalidWitness("s·[u, v] ≠ 1".into()));
    }
    let c = a.try_mul(&w.s)?;
    let terms = vec![
        CertificateTerm::single(CommutatorWitness::new(c.try_mul(w.u.value())?, w.v.value().clone())?),
        CertificateTerm::pair(CommutatorWitness::new(w.v.value().clone(), c)?, w.u.clone()),
    ];
    Ok(Certificate::new(a.clone(), terms, "mixed").normalized())
}

/// `c·[p, q₁·q₂]` with all three of `p, q₁, q₂` commutators.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductBracket<E> {
    pub c: E,
    pub p: CommutatorWitness<E>,
    pub q1: CommutatorWitness<E>,
    pub q2: CommutatorWitness<E>,
}

impl<E: RingElement> ProductBracket<E> {
    pub fn value(&self) -> Result<E> {
        let q = self.q1.value().try_mul(self.q2.value())?;
        self.c.try_mul(&self.p.value().commutator(&q)?)
    }
}

/// Rewrites `m·[x, y·z]·b` as four `c[p, q₁q₂]` terms:
///
/// `m[x,yz]b = mb[x,yz] + m[[x,b],yz] − m[x,[b,y]z] − m[x,y[b,z]]`,
///
/// the three-term expansion with its first term split by `[b,yz] = [b,y]z + y[b,z]`.
pub fn expand_two_sided<E: RingElement>(
    m: &E,
    x: &CommutatorWitness<E>,
    y: &CommutatorWitness<E>,
    z: &CommutatorWitness<E>,
    b: &E,
) -> Result<[ProductBracket<E>; 4]> {
    let neg_m = m.neg();
    Ok([
        ProductBracket {
            c: m.try_mul(b)?,
            p: x.clone(),
            q1: y.clone(),
            q2: z.clone(),
        },
        ProductBracket {
            c: m.clone(),
            p: CommutatorWitness::new(x.value().clone(), b.clone())?,
            q1: y.clone(),
            q2: z.clone(),
        },
        ProductBracket {
            c: neg_m.clone(),
            p: x.clone(),
            q1: CommutatorWitness::new(b.clone(), y.value().clone())?,
            q2: z.clone(),
        },
        ProductBracket {
            c: neg_m,
            p: x.clone(),
            q1: y.clone(),
            q2: CommutatorWitness::new(b.clone(), z.value().clone())?,
        },
    ])
}

/// At most `12d` products of commutators for `a`, given `1 = Σⱼ₌₁ᵈ aⱼ[xⱼ, yⱼzⱼ]bⱼ`.
pub fn pipeline_12d<E: RingElement>(a: &E, summands: &[UnitSummand<E>]) -> Result<Certificate<E>> {
    check_summands(summands)?;
    let mut terms = Vec::with_capacity(12 * summands.len());
    for t in summands {
        let m = a.try_mul(&t.a)?;
        for pb in expand_two_sided(&m, &t.x, &t.y, &t.z, &t.b)? {
            terms.extend(lemma33_core(&pb.c, &pb.p, &pb.q1, &pb.q2)?);
        }
    }
    debug_assert_eq!(terms.len(), 12 * summands.len());
    Ok(Certificate::new(a.clone(), terms, "pipeline-12d").normalized())
}

/// Structural description of a unital ring for [`xi_upper_bound`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingStructure {
    /// `M_n(S)` for a unital `S`.
    MatrixRing { n: usize },
    /// `M_{n_1}(S_1) ⊕ … ⊕ M_{n_m}(S_m)`.
    DirectSumOfMatrixRings(Vec<usize>),
    /// A noncommutative division ring, e.g. the rational quaternions.
    DivisionRing,
    /// A unital ring containing `⊕ M_{n_j}` unitally.
    ContainsMatrixSubrings(Vec<usize>),
    /// A unital ring containing a unital subring `S` with `ξ(S) ≤ xi`.
    ContainsSubring { xi: u64 },
    /// A unital ring containing the dimension-drop algebra `Z₂,₃` unitally.
    ContainsDimensionDrop,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: u64,
    pub rule: &'static str,
    /// The function producing certificates within the bound, if any.
    pub algorithm: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub structure: RingStructure,
    pub bounds: Vec<Bound>,
}

impl BoundReport {
    pub fn best(&self) -> &Bound {
        self.bounds.iter().min_by_key(|b| b.value).expect("reports are never empty")
    }
}

/// `15·ξ(S)³` for a unital subring `S`.
pub fn subring_bound(xi: u64) -> u64 {
    15 * xi.pow(3)
}

/// Upper bounds on `ξ` applicable to a ring of the given shape.
pub fn xi_upper_bound(structure: &RingStructure) -> Result<BoundReport> {
    let unknown = || Error::UnknownStructure(format!("{structure:?}"));
    let all_at_least_two = |ns: &[usize]| !ns.is_empty() && ns.iter().all(|&n| n >= 2);
    let matrix = Bound {
        value: 2,
        rule: "matrix-ring",
        algorithm: Some("mdecomp::decompose_nxn"),
    };
    let subring = Bound {
        value: 3,
        rule: "matrix-subring",
        algorithm: Some("rewrite::xi3_decompose"),
    };
    let via_matrix_subring = Bound {
        value: subring_bound(2),
        rule: "unital-subring",
        algorithm: None,
    };
    let bounds = match structure {
        RingStructure::MatrixRing { n } if *n >= 2 => vec![matrix, subring, via_matrix_subring],
        RingStructure::DirectSumOfMatrixRings(ns) if all_at_least_two(ns) => vec![
            Bound {
                algorithm: Some("mdecomp::decompose_direct_sum"),
                ..matrix
            },
            subring,
            via_matrix_subring,
        ],
        RingStructure::DivisionRing => vec![Bound {
            value: 2,
            rule: "division-ring",
            algorithm: Some("mdecomp::quaternion_decompose"),
        }],
        RingStructure::ContainsMatrixSubrings(ns) if all_at_least_two(ns) => vec![subring, via_matrix_subring],
        RingStructure::ContainsSubring { xi } if *xi >= 1 => vec![Bound {
            value: subring_bound(*xi),
            rule: "unital-subring",
            algorithm: None,
        }],
        RingStructure::ContainsDimensionDrop => vec![Bound {
            value: 6,
            rule: "dimension-drop-subring",
            algorithm: Some("z23::z23_xi6"),
        }],
        _ => return Err(unknown()),
    };
    Ok(BoundReport {
        structure: structure.clone(),
        bounds,
    })
}
