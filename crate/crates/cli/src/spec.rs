//! `--ring` strings for the algebraic commands.
//!
//! ```text
//! algebra := block ('+' block)* | "H" | "Quat" | "Z23"
//! block   := 'M' n '(' coeff ')'
//! coeff   := "Z" | "Q" | 'Z' m | 'F' p | "GF(" p ")" | "Quat" | "H" | coeff '[' var ']'
//! ```
//!
//! `bound` additionally accepts `contains(M2+M3)`, `contains(xi=K)` and
//! `contains(Z23)` for rings known only through a unital subring.

use commcert::rewrite::RingStructure;
use commcert::RingDescriptor;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Matrix { n: usize, ring: RingDescriptor },
    DirectSum(Vec<(usize, RingDescriptor)>),
    Quaternions,
    Z23,
}

fn bad(spec: &str, why: &str) -> CliError {
    CliError::malformed("unknown_ring_spec", format!("{spec:?}: {why}"))
}

fn number<T: std::str::FromStr>(s: &str) -> Option<T> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn parse_coefficients(spec: &str) -> Result<RingDescriptor, CliError> {
    let s = spec.trim();
    if let Some(body) = s.strip_suffix(']') {
        let open = body.rfind('[').ok_or_else(|| bad(spec, "unbalanced brackets"))?;
        let base = parse_coefficients(&body[..open])?;
        return RingDescriptor::polynomial(base, &body[open + 1..]).map_err(CliError::from);
    }
    let ring = match s {
        "Z" => RingDescriptor::Integers,
        "Q" => RingDescriptor::Rationals,
        "H" | "Quat" => RingDescriptor::Quaternions,
        _ => {
            if let Some(p) = s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
                RingDescriptor::prime_field(number(p).ok_or_else(|| bad(spec, "bad characteristic"))?)?
            } else if let Some(m) = s.strip_prefix('Z').and_then(number) {
                RingDescriptor::integers_mod(m)?
            } else if let Some(p) = s.strip_prefix('F').and_then(number) {
                RingDescriptor::prime_field(p)?
            } else {
                return Err(bad(spec, "expected Z, Q, Z<m>, F<p>, GF(p), H or R[x]"));
            }
        }
    };
    Ok(ring)
}

fn parse_block(spec: &str) -> Result<(usize, RingDescriptor), CliError> {
    let s = spec.trim();
    let rest = s.strip_prefix('M').ok_or_else(|| bad(spec, "expected M<n>(R)"))?;
    let open = rest.find('(').ok_or_else(|| bad(spec, "expected M<n>(R)"))?;
    let n: usize = number(&rest[..open]).ok_or_else(|| bad(spec, "bad matrix size"))?;
    let inner = rest[open + 1..].strip_suffix(')').ok_or_else(|| bad(spec, "unbalanced parentheses"))?;
    if n == 0 {
        return Err(bad(spec, "matrix size must be positive"));
    }
    Ok((n, parse_coefficients(inner)?))
}

/// Splits on `+` at parenthesis depth zero.
fn split_top(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '+' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

pub fn parse_algebra(spec: &str) -> Result<AlgebraSpec, CliError> {
    let s = spec.trim();
    match s {
        "H" | "Quat" => return Ok(AlgebraSpec::Quaternions),
        "Z23" => return Ok(AlgebraSpec::Z23),
        _ => {}
    }
    let blocks = split_top(s).into_iter().map(parse_block).collect::<Result<Vec<_>, _>>()?;
    Ok(match <[_; 1]>::try_from(blocks) {
        Ok([(n, ring)]) => AlgebraSpec::Matrix { n, ring },
        Err(blocks) => AlgebraSpec::DirectSum(blocks),
    })
}

pub fn parse_structure(spec: &str) -> Result<RingStructure, CliError> {
    let s = spec.trim();
    if let Some(inner) = s.strip_prefix("contains(").and_then(|r| r.strip_suffix(')')) {
        let inner = inner.trim();
        if inner == "Z23" {
            return Ok(RingStructure::ContainsDimensionDrop);
        }
        if let Some(xi) = inner.strip_prefix("xi=") {
            return Ok(RingStructure::ContainsSubring {
                xi: number(xi.trim()).ok_or_else(|| bad(spec, "bad xi value"))?,
            });
        }
        let sizes = split_top(inner)
            .into_iter()
            .map(|b| b.trim().strip_prefix('M').and_then(number).ok_or_else(|| bad(spec, "expected M<n>+…")))
            .collect::<Result<_, _>>()?;
        return Ok(RingStructure::ContainsMatrixSubrings(sizes));
    }
    Ok(match parse_algebra(s)? {
        AlgebraSpec::Matrix { n, .. } => RingStructure::MatrixRing { n },
        AlgebraSpec::DirectSum(blocks) => RingStructure::DirectSumOfMatrixRings(blocks.into_iter().map(|b| b.0).collect()),
        AlgebraSpec::Quaternions => RingStructure::DivisionRing,
        AlgebraSpec::Z23 => RingStructure::ContainsDimensionDrop,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_names_round_trip() {
        for name in ["Z", "Q", "Z6", "F5", "Q[x]", "F7[t]", "Quat"] {
            assert_eq!(parse_coefficients(name).unwrap().to_string(), name);
        }
        assert_eq!(parse_coefficients("GF(5)").unwrap(), RingDescriptor::PrimeField(5));
        assert_eq!(parse_coefficients("H").unwrap(), RingDescriptor::Quaternions);
        for bad in ["", "Z1", "F6", "R", "Q[x", "Quat[x]", "Z-3"] {
            assert!(parse_coefficients(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn algebras() {
        assert_eq!(
            parse_algebra("M3(Z)").unwrap(),
            AlgebraSpec::Matrix { n: 3, ring: RingDescriptor::Integers }
        );
        assert_eq!(
            parse_algebra("M2(Z) + M3(Q[x])").unwrap(),
            AlgebraSpec::DirectSum(vec![
                (2, RingDescriptor::Integers),
                (3, RingDescriptor::polynomial(RingDescriptor::Rationals, "x").unwrap()),
            ])
        );
        assert_eq!(parse_algebra("H").unwrap(), AlgebraSpec::Quaternions);
        assert_eq!(parse_algebra("Z23").unwrap(), AlgebraSpec::Z23);
        for bad in ["M0(Z)", "M(Z)", "M2Z", "M2(Z", "N2(Z)", "M2(Z)+"] {
            assert!(parse_algebra(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn structures() {
        assert_eq!(parse_structure("M4(Q)").unwrap(), RingStructure::MatrixRing { n: 4 });
        assert_eq!(
            parse_structure("M2(Z)+M3(Z)").unwrap(),
            RingStructure::DirectSumOfMatrixRings(vec![2, 3])
        );
        assert_eq!(parse_structure("Quat").unwrap(), RingStructure::DivisionRing);
        assert_eq!(parse_structure("contains(M2+M3)").unwrap(), RingStructure::ContainsMatrixSubrings(vec![2, 3]));
        assert_eq!(parse_structure("contains(xi=2)").unwrap(), RingStructure::ContainsSubring { xi: 2 });
        assert_eq!(parse_structure("contains(Z23)").unwrap(), RingStructure::ContainsDimensionDrop);
        assert!(parse_structure("contains(xi=)").is_err());
    }
}
