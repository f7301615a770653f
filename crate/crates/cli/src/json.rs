//! File formats. Ring elements are written as strings (`"3"`, `"-1/2"`,
//! `"1+2i-1j+0k"`, `"3*x^2-1"`) so no integer is ever squeezed through a float;
//! sizes and exponents are plain JSON numbers.

use commcert::cert::{Certificate, CertificateTerm, CommutatorWitness};
use commcert::z23::Z23Element;
use commcert::{DirectSum, Matrix, RingDescriptor, RingElement};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RingJson {
    Z,
    Q,
    Zmod { m: String },
    GF { p: String },
    Poly { base: Box<RingJson>, var: String },
    Quat,
    /// Only as the `ring` of a direct-sum certificate.
    DirectSum { blocks: Vec<BlockJson> },
    /// Only as the `ring` of a dimension-drop certificate.
    Z23,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockJson {
    pub n: usize,
    pub ring: RingJson,
}

impl RingJson {
    pub fn from_descriptor(r: &RingDescriptor) -> Self {
        match r {
            RingDescriptor::Integers => RingJson::Z,
            RingDescriptor::Rationals => RingJson::Q,
            RingDescriptor::IntegersMod(m) => RingJson::Zmod { m: m.to_string() },
            RingDescriptor::PrimeField(p) => RingJson::GF { p: p.to_string() },
            RingDescriptor::Polynomial { base, var } => RingJson::Poly {
                base: Box::new(Self::from_descriptor(base)),
                var: var.clone(),
            },
            RingDescriptor::Quaternions => RingJson::Quat,
        }
    }

    pub fn to_descriptor(&self) -> Result<RingDescriptor, CliError> {
        let modulus = |s: &str| {
            s.parse::<u64>()
                .map_err(|_| CliError::malformed("malformed_json", format!("bad modulus {s:?}")))
        };
        Ok(match self {
            RingJson::Z => RingDescriptor::Integers,
            RingJson::Q => RingDescriptor::Rationals,
            RingJson::Zmod { m } => RingDescriptor::integers_mod(modulus(m)?)?,
            RingJson::GF { p } => RingDescriptor::prime_field(modulus(p)?)?,
            RingJson::Poly { base, var } => RingDescriptor::polynomial(base.to_descriptor()?, var.as_str())?,
            RingJson::Quat => RingDescriptor::Quaternions,
            RingJson::DirectSum { .. } | RingJson::Z23 => {
                return Err(CliError::malformed("invalid_ring", "matrix entries need a coefficient ring"))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub ring: RingJson,
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialJson {
    #[serde(rename = "tExp16")]
    pub t_exp: u32,
    #[serde(rename = "sExp16")]
    pub s_exp: u32,
    pub matrix: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DirectSumJson {
    pub blocks: Vec<MatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Z23Json {
    pub monomials: Vec<MonomialJson>,
}

/// Any serialized element; decoding dispatches on the object's keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ElementJson {
    Matrix(MatrixJson),
    DirectSum(DirectSumJson),
    Z23(Z23Json),
}

fn from_value<T: DeserializeOwned>(v: Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(CliError::from)
}

impl ElementJson {
    pub fn from_value(v: Value) -> Result<Self, CliError> {
        let obj = v
            .as_object()
            .ok_or_else(|| CliError::malformed("malformed_json", "an element must be a JSON object"))?;
        if obj.contains_key("blocks") {
            from_value(v).map(ElementJson::DirectSum)
        } else if obj.contains_key("monomials") {
            from_value(v).map(ElementJson::Z23)
        } else {
            from_value(v).map(ElementJson::Matrix)
        }
    }
}

/// Elements that can appear in a certificate file.
pub trait Codec: RingElement + Sized {
    fn encode(&self) -> ElementJson;
    fn decode(e: ElementJson) -> Result<Self, CliError>;
    fn ring_json(&self) -> RingJson;

    fn decode_value(v: Value) -> Result<Self, CliError> {
        Self::decode(ElementJson::from_value(v)?)
    }
}

fn wrong_kind(expected: &str) -> CliError {
    CliError::malformed("shape_mismatch", format!("expected {expected}"))
}

pub fn encode_matrix(m: &Matrix) -> MatrixJson {
    MatrixJson {
        ring: RingJson::from_descriptor(m.ring()),
        n: m.n(),
        entries: m.rows().map(|r| r.iter().map(|v| m.ring().format_value(v)).collect()).collect(),
    }
}

pub fn decode_matrix(j: &MatrixJson) -> Result<Matrix, CliError> {
    let ring = j.ring.to_descriptor()?;
    if j.n == 0 || j.entries.len() != j.n || j.entries.iter().any(|r| r.len() != j.n) {
        return Err(CliError::malformed(
            "shape_mismatch",
            format!("entries do not form a {0}x{0} matrix", j.n),
        ));
    }
    let values = j
        .entries
        .iter()
        .flatten()
        .map(|s| ring.parse_value(s))
        .collect::<commcert::Result<Vec<_>>>()?;
    Ok(Matrix::new(ring, j.n, values)?)
}

impl Codec for Matrix {
    fn encode(&self) -> ElementJson {
        ElementJson::Matrix(encode_matrix(self))
    }

    fn decode(e: ElementJson) -> Result<Self, CliError> {
        match e {
            ElementJson::Matrix(m) => decode_matrix(&m),
            _ => Err(wrong_kind("a matrix")),
        }
    }

    fn ring_json(&self) -> RingJson {
        RingJson::from_descriptor(self.ring())
    }
}

impl Codec for DirectSum {
    fn encode(&self) -> ElementJson {
        ElementJson::DirectSum(DirectSumJson {
            blocks: self.parts().iter().map(encode_matrix).collect(),
        })
    }

    fn decode(e: ElementJson) -> Result<Self, CliError> {
        match e {
            ElementJson::DirectSum(d) => {
                Ok(DirectSum::new(d.blocks.iter().map(decode_matrix).collect::<Result<_, _>>()?)?)
            }
            _ => Err(wrong_kind("a direct sum")),
        }
    }

    fn ring_json(&self) -> RingJson {
        RingJson::DirectSum {
            blocks: self
                .parts()
                .iter()
                .map(|m| BlockJson {
                    n: m.n(),
                    ring: m.ring_json(),
                })
                .collect(),
        }
    }
}

impl Codec for Z23Element {
    fn encode(&self) -> ElementJson {
        ElementJson::Z23(Z23Json {
            monomials: self
                .monomials()
                .map(|(t, s, m)| MonomialJson {
                    t_exp: t,
                    s_exp: s,
                    matrix: encode_matrix(m),
                })
                .collect(),
        })
    }

    fn decode(e: ElementJson) -> Result<Self, CliError> {
        match e {
            ElementJson::Z23(z) => {
                let monomials = z
                    .monomials
                    .iter()
                    .map(|m| Ok((m.t_exp, m.s_exp, decode_matrix(&m.matrix)?)))
                    .collect::<Result<Vec<_>, CliError>>()?;
                Ok(Z23Element::from_monomials(monomials)?)
            }
            _ => Err(wrong_kind("a Z23 element")),
        }
    }

    fn ring_json(&self) -> RingJson {
        RingJson::Z23
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessJson<T> {
    pub p: T,
    pub q: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TermJson<T> {
    Pair { l: WitnessJson<T>, r: WitnessJson<T> },
    Single { w: WitnessJson<T> },
}

/// Commutator values are never stored; the reader recomputes them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson<T> {
    pub ring: RingJson,
    pub target: T,
    pub terms: Vec<TermJson<T>>,
    pub provenance: String,
}

pub fn encode_certificate<E: Codec>(c: &Certificate<E>) -> CertificateJson<ElementJson> {
    let w = |w: &CommutatorWitness<E>| WitnessJson {
        p: w.p().encode(),
        q: w.q().encode(),
    };
    CertificateJson {
        ring: c.target.ring_json(),
        target: c.target.encode(),
        terms: c
            .terms
            .iter()
            .map(|t| match t {
                CertificateTerm::PairProduct { left, right } => TermJson::Pair { l: w(left), r: w(right) },
                CertificateTerm::SingleCommutator(x) => TermJson::Single { w: w(x) },
            })
            .collect(),
        provenance: c.provenance.clone(),
    }
}

/// A certificate over whichever ring its file names.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyCertificate {
    Matrix(Certificate<Matrix>),
    DirectSum(Certificate<DirectSum>),
    Z23(Certificate<Z23Element>),
}

fn decode_typed<E: Codec>(c: CertificateJson<Value>) -> Result<Certificate<E>, CliError> {
    let ring = c.ring;
    let element = |v: Value| -> Result<E, CliError> {
        let e = E::decode_value(v)?;
        if e.ring_json() != ring {
            return Err(CliError::malformed(
                "ring_mismatch",
                "an element does not belong to the certificate's ring",
            ));
        }
        Ok(e)
    };
    let witness = |w: WitnessJson<Value>| -> Result<CommutatorWitness<E>, CliError> {
        Ok(CommutatorWitness::new(element(w.p)?, element(w.q)?)?)
    };
    let target = element(c.target)?;
    let terms = c
        .terms
        .into_iter()
        .map(|t| match t {
            TermJson::Pair { l, r } => Ok(CertificateTerm::pair(witness(l)?, witness(r)?)),
            TermJson::Single { w } => Ok(CertificateTerm::single(witness(w)?)),
        })
        .collect::<Result<_, CliError>>()?;
    Ok(Certificate::new(target, terms, c.provenance))
}

pub fn decode_certificate(text: &str) -> Result<AnyCertificate, CliError> {
    let c: CertificateJson<Value> = serde_json::from_str(text)?;
    Ok(match c.ring {
        RingJson::DirectSum { .. } => AnyCertificate::DirectSum(decode_typed(c)?),
        RingJson::Z23 => AnyCertificate::Z23(decode_typed(c)?),
        _ => AnyCertificate::Matrix(decode_typed(c)?),
    })
}

impl AnyCertificate {
    pub fn encode(&self) -> CertificateJson<ElementJson> {
        match self {
            AnyCertificate::Matrix(c) => encode_certificate(c),
            AnyCertificate::DirectSum(c) => encode_certificate(c),
            AnyCertificate::Z23(c) => encode_certificate(c),
        }
    }

    pub fn verify(&self) -> commcert::Verdict {
        match self {
            AnyCertificate::Matrix(c) => c.verify(),
            AnyCertificate::DirectSum(c) => c.verify(),
            AnyCertificate::Z23(c) => c.verify(),
        }
    }
}

pub fn to_pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_json_shape() {
        let poly = RingDescriptor::polynomial(RingDescriptor::integers_mod(6).unwrap(), "x").unwrap();
        let j = serde_json::to_string(&RingJson::from_descriptor(&poly)).unwrap();
        assert_eq!(j, r#"{"kind":"Poly","base":{"kind":"Zmod","m":"6"},"var":"x"}"#);
        let back: RingJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.to_descriptor().unwrap(), poly);
        let bad: RingJson = serde_json::from_str(r#"{"kind":"GF","p":"6"}"#).unwrap();
        assert_eq!(bad.to_descriptor().unwrap_err().code, "invalid_ring");
    }

    #[test]
    fn matrix_round_trip() {
        let m = Matrix::from_i64_rows(&RingDescriptor::Rationals, &[&[1, -2], &[0, 7]]).unwrap();
        let text = to_pretty(&encode_matrix(&m));
        let back: MatrixJson = serde_json::from_str(&text).unwrap();
        assert_eq!(decode_matrix(&back).unwrap(), m);
    }

    #[test]
    fn matrix_shape_errors() {
        let j: MatrixJson =
            serde_json::from_str(r#"{"ring":{"kind":"Z"},"n":2,"entries":[["1","2"],["3"]]}"#).unwrap();
        assert_eq!(decode_matrix(&j).unwrap_err().code, "shape_mismatch");
        let j: MatrixJson = serde_json::from_str(r#"{"ring":{"kind":"Z"},"n":1,"entries":[["x"]]}"#).unwrap();
        assert_eq!(decode_matrix(&j).unwrap_err().code, "parse_error");
    }

    #[test]
    fn element_dispatch() {
        let v: Value = serde_json::from_str(r#"{"monomials":[]}"#).unwrap();
        assert_eq!(Z23Element::decode_value(v).unwrap(), Z23Element::zero());
        let v: Value = serde_json::from_str(r#"{"blocks":[]}"#).unwrap();
        assert_eq!(DirectSum::decode_value(v).unwrap_err().code, "empty_sum");
        let v: Value = serde_json::from_str("[1]").unwrap();
        assert_eq!(Matrix::decode_value(v).unwrap_err().code, "malformed_json");
    }
}
