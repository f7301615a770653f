use std::collections::BTreeMap;

use super::closure::{
    additive_closure, commutator_set, full, ideal_closure, image2, is_nil, is_semiprime, product_set, Subset,
};
use super::finite::{matrix_ring, Coefficients, FiniteRing};
use crate::error::{Error, Result};

/// Commutativity conditions on `R` for `L = [R,R]`:
/// (1) `R` commutative, (2) `[L, R] = 0`, (3) `[L, L²] = 0`, (4) `[L, L] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section2Report {
    pub ring: String,
    pub size: usize,
    pub semiprime: bool,
    pub conditions: [bool; 4],
    /// All four agree (only required for semiprime rings).
    pub agree: bool,
    pub commutator_ideal_size: usize,
    pub commutator_ideal_nil: bool,
}

/// Evaluates the four conditions exhaustively. By bilinearity it suffices to
/// test brackets of single commutators, e.g. `[c, c₁c₂] = 0` for (3).
///
/// Errors with `CounterexampleFound` if a semiprime ring has disagreeing
/// conditions, or if (3) holds while the commutator ideal is not nil.
pub fn check_section2(r: &FiniteRing) -> Result<Section2Report> {
    let all = full(r);
    let l0 = commutator_set(r);
    let vanishes = |s: &Subset| s.ones().all(|x| x == r.zero());
    let l0_sq = product_set(r, &l0, &l0);
    let conditions = [
        vanishes(&l0),
        vanishes(&image2(r, &l0, &all, |c, x| r.commutator(c, x))),
        vanishes(&image2(r, &l0, &l0_sq, |c, x| r.commutator(c, x))),
        vanishes(&image2(r, &l0, &l0, |c, x| r.commutator(c, x))),
    ];
    let semiprime = is_semiprime(r);
    let agree = conditions.iter().all(|&c| c == conditions[0]);
    let ideal = ideal_closure(r, &l0, true);
    let report = Section2Report {
        ring: r.name().to_string(),
        size: r.size(),
        semiprime,
        conditions,
        agree,
        commutator_ideal_size: ideal.count_ones(..),
        commutator_ideal_nil: is_nil(r, &ideal),
    };
    if semiprime && !agree {
        return Err(Error::CounterexampleFound(format!(
            "semiprime {} with conditions {conditions:?}",
            r.name()
        )));
    }
    if conditions[2] && !report.commutator_ideal_nil {
        return Err(Error::CounterexampleFound(format!(
            "{}: [[R,R],[R,R]²] = 0 but the commutator ideal is not nil",
            r.name()
        )));
    }
    Ok(report)
}

/// Whether `L` is a Lie ideal, abelian, and central.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieReport {
    pub size: usize,
    pub additive_subgroup: bool,
    /// `[R, L] ⊆ L`.
    pub lie_ideal: bool,
    /// `[L, L] = 0`.
    pub abelian: bool,
    /// `[L, R] = 0`.
    pub central: bool,
}

pub fn lie_report(r: &FiniteRing, l: &Subset) -> LieReport {
    let all = full(r);
    let vanishes = |s: &Subset| s.ones().all(|x| x == r.zero());
    LieReport {
        size: l.count_ones(..),
        additive_subgroup: additive_closure(r, l) == *l,
        lie_ideal: image2(r, &all, l, |x, y| r.commutator(x, y)).is_subset(l),
        abelian: vanishes(&image2(r, l, l, |x, y| r.commutator(x, y))),
        central: vanishes(&image2(r, l, &all, |x, y| r.commutator(x, y))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Example22Report {
    pub field_size: usize,
    /// `L = {(μ λ; λ μ)}`.
    pub symmetric: LieReport,
    /// Scalar matrices, which are central.
    pub control: LieReport,
}

impl Example22Report {
    pub fn passed(&self) -> bool {
        let s = &self.symmetric;
        s.additive_subgroup && s.lie_ideal && s.abelian && !s.central && self.control.central
    }
}

/// In `M₂(F)` with `char F = 2`, `L = {(μ λ; λ μ)}` is an abelian Lie ideal
/// that is not central.
pub fn example22_check(field_size: usize) -> Result<Example22Report> {
    let coeff = match field_size {
        2 => Coefficients::prime_field(2)?,
        4 => Coefficients::f4(),
        _ => return Err(Error::InvalidRing(format!("field of size {field_size} is not F2 or F4"))),
    };
    let r = matrix_ring(&coeff, 2, false)?;
    let names: Vec<String> = (0..field_size)
        .map(|c| matrix_ring(&coeff, 1, false).map(|f| f.label(c).to_string()))
        .collect::<Result<_>>()?;
    let subset = |pick: &dyn Fn(&str, &str) -> String| -> Subset {
        let mut s = Subset::with_capacity(r.size());
        for mu in &names {
            for lambda in &names {
                s.insert(r.find(&pick(mu, lambda)).expect("matrix in ring"));
            }
        }
        s
    };
    let symmetric = subset(&|mu, la| format!("[{mu},{la};{la},{mu}]"));
    let scalar = subset(&|mu, _| format!("[{mu},0;0,{mu}]"));
    Ok(Example22Report {
        field_size,
        symmetric: lie_report(&r, &symmetric),
        control: lie_report(&r, &scalar),
    })
}

/// For each `a` in the commutator ideal `J = Ã[R,R]Ã`, the least `m` with
/// `aᵐ` in the additive span of `[R,R]₁^{·2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalPowerReport {
    pub ring: String,
    pub ideal_size: usize,
    pub span_size: usize,
    /// `m ↦` number of elements of `J` whose least exponent is `m`.
    pub histogram: BTreeMap<usize, usize>,
    pub max_exponent: usize,
}

pub fn radical_power_check(r: &FiniteRing) -> Result<RadicalPowerReport> {
    let l0 = commutator_set(r);
    let span = additive_closure(r, &product_set(r, &l0, &l0));
    let ideal = ideal_closure(r, &l0, true);
    let mut histogram = BTreeMap::new();
    for a in ideal.ones() {
        let mut p = a;
        let m = (1..=r.size() + 1)
            .find(|_| {
                let hit = span.contains(p);
                p = r.mul(p, a);
                hit
            })
            .ok_or_else(|| {
                Error::CounterexampleFound(format!("{}: no power of {} lies in the span", r.name(), r.label(a)))
            })?;
        *histogram.entry(m).or_insert(0) += 1;
    }
    Ok(RadicalPowerReport {
        ring: r.name().to_string(),
        ideal_size: ideal.count_ones(..),
        span_size: span.count_ones(..),
        max_exponent: histogram.keys().copied().max().unwrap_or(0),
        histogram,
    })
}
