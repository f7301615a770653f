use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use super::finite::FiniteRing;

/// A subset of a finite ring, as a bit set over element indices.
pub type Subset = FixedBitSet;

pub fn singleton(r: &FiniteRing, x: usize) -> Subset {
    let mut s = Subset::with_capacity(r.size());
    s.insert(x);
    s
}

/// `{f(x, y) : x ∈ xs, y ∈ ys}`, computed in parallel over `xs`.
pub fn image2(r: &FiniteRing, xs: &Subset, ys: &Subset, f: impl Fn(usize, usize) -> usize + Sync) -> Subset {
    let ys: Vec<usize> = ys.ones().collect();
    let xs: Vec<usize> = xs.ones().collect();
    xs.par_iter()
        .fold(
            || Subset::with_capacity(r.size()),
            |mut acc, &x| {
                for &y in &ys {
                    acc.insert(f(x, y));
                }
                acc
            },
        )
        .reduce(
            || Subset::with_capacity(r.size()),
            |mut a, b| {
                a.union_with(&b);
                a
            },
        )
}

pub fn full(r: &FiniteRing) -> Subset {
    let mut s = Subset::with_capacity(r.size());
    s.insert_range(..);
    s
}

/// `[R, R]₁ = {xy − yx}`.
pub fn commutator_set(r: &FiniteRing) -> Subset {
    let all = full(r);
    image2(r, &all, &all, |x, y| r.commutator(x, y))
}

/// `X · Y = {xy}`.
pub fn product_set(r: &FiniteRing, xs: &Subset, ys: &Subset) -> Subset {
    image2(r, xs, ys, |x, y| r.mul(x, y))
}

/// `X + Y = {x + y}`.
pub fn sumset(r: &FiniteRing, xs: &Subset, ys: &Subset) -> Subset {
    image2(r, xs, ys, |x, y| r.add(x, y))
}

/// The additive subgroup generated by `gens`.
pub fn additive_closure(r: &FiniteRing, gens: &Subset) -> Subset {
    let mut closed = singleton(r, r.zero());
    let gens: Vec<usize> = gens.ones().collect();
    let mut frontier = vec![r.zero()];
    while let Some(x) = frontier.pop() {
        for &g in &gens {
            let y = r.add(x, g);
            if !closed.put(y) {
                frontier.push(y);
            }
        }
    }
    closed
}

/// Outcome of the sumset saturation `Σᴺ L₀^{·2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiValue {
    /// Least `N` with `Σᴺ [R,R]₁^{·2} = R`.
    Exact(usize),
    /// The saturation stabilised at a proper subset.
    NotGenerated,
    /// `Σ^cap` is still a proper subset that keeps growing.
    CapReached(usize),
}

/// `ξ(R)` by iterating `Σᴺ⁺¹ = Σᴺ + L₀^{·2}` until it fills `R` or stops growing.
pub fn xi_exact(r: &FiniteRing, cap: usize) -> XiValue {
    let l0 = commutator_set(r);
    let pairs = product_set(r, &l0, &l0);
    let mut current = pairs.clone();
    for n in 1..=cap {
        if current.count_ones(..) == r.size() {
            return XiValue::Exact(n);
        }
        let next = sumset(r, &current, &pairs);
        if next == current {
            return XiValue::NotGenerated;
        }
        current = next;
    }
    XiValue::CapReached(cap)
}

/// Smallest ideal containing `seed`: the additive span of `R·seed·R`, or with
/// `unital_hull` of `seed + R·seed + seed·R + R·seed·R`, i.e. `Ã·seed·Ã`.
pub fn ideal_closure(r: &FiniteRing, seed: &Subset, unital_hull: bool) -> Subset {
    let all = full(r);
    let left = product_set(r, &all, seed);
    let mut gens = product_set(r, &left, &all);
    if unital_hull {
        gens.union_with(seed);
        gens.union_with(&left);
        gens.union_with(&product_set(r, seed, &all));
    }
    additive_closure(r, &gens)
}

/// Least `k ≥ 1` with `xᵏ = 0`, if any.
pub fn nilpotency_index(r: &FiniteRing, x: usize) -> Option<usize> {
    let mut p = x;
    for k in 1..=r.size() {
        if p == r.zero() {
            return Some(k);
        }
        p = r.mul(p, x);
    }
    None
}

pub fn is_nil(r: &FiniteRing, s: &Subset) -> bool {
    s.ones().all(|x| nilpotency_index(r, x).is_some())
}

/// `aRa = {0}` implies `a = 0`.
pub fn is_semiprime(r: &FiniteRing) -> bool {
    (0..r.size())
        .into_par_iter()
        .filter(|&a| a != r.zero())
        .all(|a| (0..r.size()).any(|x| r.mul(r.mul(a, x), a) != r.zero()))
}

#[cfg(test)]
mod tests {
    use super::super::finite::parse_ring_spec;
    use super::*;

    fn labels(r: &FiniteRing, s: &Subset) -> Vec<String> {
        s.ones().map(|x| r.label(x).to_string()).collect()
    }

    #[test]
    fn commutator_sets() {
        let z4 = parse_ring_spec("Z4").unwrap();
        assert_eq!(labels(&z4, &commutator_set(&z4)), vec!["0"]);
        let u2 = parse_ring_spec("U2(F2)").unwrap();
        let mut l = labels(&u2, &commutator_set(&u2));
        l.sort();
        assert_eq!(l, vec!["[0,0;0,0]", "[0,1;0,0]"]);
        let m2 = parse_ring_spec("M2(F2)").unwrap();
        let l0 = commutator_set(&m2);
        // every commutator has trace zero in characteristic 2 as well
        assert!(l0.count_ones(..) <= 8);
        for x in l0.ones() {
            let lab = m2.label(x);
            assert_eq!(lab.as_bytes()[1], lab.as_bytes()[7], "{lab}");
        }
    }

    #[test]
    fn xi_values() {
        assert_eq!(xi_exact(&parse_ring_spec("M2(F2)").unwrap(), 4), XiValue::Exact(1));
        assert_eq!(xi_exact(&parse_ring_spec("Z4").unwrap(), 4), XiValue::NotGenerated);
        match xi_exact(&parse_ring_spec("M2(Z4)").unwrap(), 4) {
            XiValue::Exact(n) => assert!(n <= 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ideal_closures() {
        let u2 = parse_ring_spec("U2(F2)").unwrap();
        let zero = singleton(&u2, u2.zero());
        assert_eq!(ideal_closure(&u2, &zero, true), zero);
        let j = ideal_closure(&u2, &commutator_set(&u2), true);
        assert_eq!(j.count_ones(..), 2);
        assert!(is_nil(&u2, &j));
        let m2 = parse_ring_spec("M2(F2)").unwrap();
        let j = ideal_closure(&m2, &commutator_set(&m2), false);
        assert_eq!(j.count_ones(..), 16);
        assert!(!is_nil(&m2, &j));
    }

    #[test]
    fn semiprimeness() {
        assert!(is_semiprime(&parse_ring_spec("M2(F2)").unwrap()));
        assert!(is_semiprime(&parse_ring_spec("Z6").unwrap()));
        assert!(!is_semiprime(&parse_ring_spec("U2(F2)").unwrap()));
        assert!(!is_semiprime(&parse_ring_spec("Z4").unwrap()));
    }

    #[test]
    fn saturation_is_monotone() {
        let r = parse_ring_spec("M2(Z4)").unwrap();
        let l0 = commutator_set(&r);
        let p = product_set(&r, &l0, &l0);
        let mut cur = p.clone();
        for _ in 0..3 {
            let next = sumset(&r, &cur, &p);
            assert!(cur.is_subset(&next));
            cur = next;
        }
    }
}
