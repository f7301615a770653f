use std::collections::HashMap;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest ring the explorer will tabulate.
pub const MAX_SIZE: usize = 4096;
/// Rings up to this size have their axioms checked on every triple.
pub const EXHAUSTIVE_LIMIT: usize = 512;
/// Random triples checked for larger rings.
pub const SAMPLED_TRIPLES: usize = 1_000_000;

/// A finite ring given by addition and multiplication tables on `0..size`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
    one: Option<usize>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("size", &self.size)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish()
    }
}

impl FiniteRing {
    /// Builds a ring from `size × size` tables, row-major, checking the ring axioms.
    pub fn from_tables(name: impl Into<String>, add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let size = add.len();
        let flatten = |t: Vec<Vec<usize>>, what: &str| -> Result<Vec<u16>> {
            if t.len() != size || t.iter().any(|row| row.len() != size) {
                return Err(Error::InvalidTables(format!("{what} table is not {size}x{size}")));
            }
            t.into_iter()
                .flatten()
                .map(|v| {
                    if v < size {
                        Ok(v as u16)
                    } else {
                        Err(Error::InvalidTables(format!("{what} table entry {v} out of range")))
                    }
                })
                .collect()
        };
        if size == 0 || size > MAX_SIZE {
            return Err(Error::InvalidTables(format!("size {size} outside 1..={MAX_SIZE}")));
        }
        let (add, mul) = (flatten(add, "add")?, flatten(mul, "mul")?);
        let labels = (0..size).map(|i| i.to_string()).collect();
        Self::assemble(name.into(), size, add, mul, labels)
    }

    fn assemble(name: String, size: usize, add: Vec<u16>, mul: Vec<u16>, labels: Vec<String>) -> Result<Self> {
        let at = |t: &[u16], x: usize, y: usize| t[x * size + y] as usize;
        let zero = (0..size)
            .find(|&z| (0..size).all(|x| at(&add, z, x) == x && at(&add, x, z) == x))
            .ok_or_else(|| Error::InvalidTables("no additive identity".into()))?;
        let neg = (0..size)
            .map(|x| {
                (0..size)
                    .find(|&y| at(&add, x, y) == zero)
                    .map(|y| y as u16)
                    .ok_or_else(|| Error::InvalidTables(format!("element {x} has no additive inverse")))
            })
            .collect::<Result<Vec<u16>>>()?;
        let one = (0..size).find(|&o| (0..size).all(|x| at(&mul, o, x) == x && at(&mul, x, o) == x));
        let ring = Self {
            name,
            size,
            add,
            mul,
            neg,
            zero,
            one,
            labels,
        };
        ring.validate()?;
        Ok(ring)
    }

    fn check_triple(&self, x: usize, y: usize, z: usize) -> std::result::Result<(), String> {
        let (a, m) = (|p, q| self.add(p, q), |p, q| self.mul(p, q));
        if a(x, y) != a(y, x) {
            return Err(format!("addition not commutative at ({x}, {y})"));
        }
        if a(a(x, y), z) != a(x, a(y, z)) {
            return Err(format!("addition not associative at ({x}, {y}, {z})"));
        }
        if m(m(x, y), z) != m(x, m(y, z)) {
            return Err(format!("multiplication not associative at ({x}, {y}, {z})"));
        }
        if m(x, a(y, z)) != a(m(x, y), m(x, z)) || m(a(x, y), z) != a(m(x, z), m(y, z)) {
            return Err(format!("distributivity fails at ({x}, {y}, {z})"));
        }
        Ok(())
    }

    /// Exhaustive up to [`EXHAUSTIVE_LIMIT`], sampled above.
    fn validate(&self) -> Result<()> {
        let n = self.size;
        let outcome = if n <= EXHAUSTIVE_LIMIT {
            (0..n).into_par_iter().try_for_each(|x| {
                for y in 0..n {
                    for z in 0..n {
                        self.check_triple(x, y, z)?;
                    }
                }
                Ok(())
            })
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed);
            (0..SAMPLED_TRIPLES)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect::<Vec<_>>()
                .into_par_iter()
                .try_for_each(|(x, y, z)| self.check_triple(x, y, z))
        };
        outcome.map_err(Error::InvalidTables)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size + y] as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.size + y] as usize
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.sub(self.mul(x, y), self.mul(y, x))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|x| (x + 1..self.size).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Row-major tables, for serialization.
    pub fn tables(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let rows = |t: &[u16]| t.chunks(self.size).map(|r| r.iter().map(|&v| v as usize).collect()).collect();
        (rows(&self.add), rows(&self.mul))
    }
}

/// A finite commutative coefficient ring: `Z/m`, `F_p`, or `F_4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficients {
    name: String,
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    names: Vec<String>,
}

impl Coefficients {
    pub fn integers_mod(m: usize) -> Result<Self> {
        if !(2..=MAX_SIZE).contains(&m) {
            return Err(Error::InvalidRing(format!("Z{m}: modulus must lie in 2..={MAX_SIZE}")));
        }
        Ok(Self {
            name: format!("Z{m}"),
            size: m,
            add: (0..m * m).map(|k| (k / m + k % m) % m).collect(),
            mul: (0..m * m).map(|k| (k / m) * (k % m) % m).collect(),
            names: (0..m).map(|i| i.to_string()).collect(),
        })
    }

    pub fn prime_field(p: usize) -> Result<Self> {
        if crate::exactalg::RingDescriptor::prime_field(p as u64).is_err() {
            return Err(Error::InvalidRing(format!("F{p}: {p} is not prime")));
        }
        let mut c = Self::integers_mod(p)?;
        c.name = format!("F{p}");
        Ok(c)
    }

    /// `F_2[α]/(α² + α + 1)`, with `i = i₀ + 2·i₁` standing for `i₀ + i₁α`.
    pub fn f4() -> Self {
        let mul_poly = |a: usize, b: usize| {
            // (a0 + a1 α)(b0 + b1 α) with α² = α + 1
            let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
            let c2 = a1 & b1;
            let c1 = (a0 & b1) ^ (a1 & b0) ^ c2;
            let c0 = (a0 & b0) ^ c2;
            c0 | (c1 << 1)
        };
        Self {
            name: "F4".into(),
            size: 4,
            add: (0..16).map(|k| (k / 4) ^ (k % 4)).collect(),
            mul: (0..16).map(|k| mul_poly(k / 4, k % 4)).collect(),
            names: ["0", "1", "a", "a+1"].map(String::from).to_vec(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }
}

/// `n × n` matrices over `coeff`, all of them or only the upper-triangular ones.
pub fn matrix_ring(coeff: &Coefficients, n: usize, upper_only: bool) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::InvalidRing("matrix size must be positive".into()));
    }
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !upper_only || i <= j)
        .collect();
    let q = coeff.size;
    let size = (q as f64).powi(slots.len() as i32);
    if size > MAX_SIZE as f64 {
        return Err(Error::InvalidRing(format!("ring would have {size} elements (limit {MAX_SIZE})")));
    }
    let size = size as usize;
    // element k has entry slots[s] equal to digit s of k in base q
    let decode = |k: usize| {
        let mut m = vec![0usize; n * n];
        let mut rest = k;
        for &(i, j) in &slots {
            m[i * n + j] = rest % q;
            rest /= q;
        }
        m
    };
    let elements: Vec<Vec<usize>> = (0..size).map(decode).collect();
    let index: HashMap<&[usize], usize> = elements.iter().enumerate().map(|(k, m)| (m.as_slice(), k)).collect();
    let lookup = |m: &[usize]| index[m] as u16;
    let mut add = vec![0u16; size * size];
    let mut mul = vec![0u16; size * size];
    add.par_chunks_mut(size).zip(mul.par_chunks_mut(size)).enumerate().for_each(|(x, (arow, mrow))| {
        let a = &elements[x];
        let mut buf = vec![0usize; n * n];
        for (y, b) in elements.iter().enumerate() {
            for k in 0..n * n {
                buf[k] = coeff.add(a[k], b[k]);
            }
            arow[y] = lookup(&buf);
            for i in 0..n {
                for j in 0..n {
                    buf[i * n + j] = (0..n).fold(0, |acc, k| coeff.add(acc, coeff.mul(a[i * n + k], b[k * n + j])));
                }
            }
            mrow[y] = lookup(&buf);
        }
    });
    let labels = elements
        .iter()
        .map(|m| {
            if n == 1 {
                return coeff.names[m[0]].clone();
            }
            let rows: Vec<String> = m.chunks(n).map(|r| r.iter().map(|&c| coeff.names[c].as_str()).collect::<Vec<_>>().join(",")).collect();
            format!("[{}]", rows.join(";"))
        })
        .collect();
    let name = match (n, upper_only) {
        (1, _) => coeff.name.clone(),
        (_, false) => format!("M{n}({})", coeff.name),
        (_, true) => format!("U{n}({})", coeff.name),
    };
    FiniteRing::assemble(name, size, add, mul, labels)
}

fn parse_coefficients(s: &str) -> Result<Coefficients> {
    let bad = || Error::Parse(format!("unknown coefficient ring {s:?}"));
    if s == "F4" {
        return Ok(Coefficients::f4());
    }
    let (head, num) = s.split_at(1.min(s.len()));
    let k: usize = num.parse().map_err(|_| bad())?;
    match head {
        "Z" => Coefficients::integers_mod(k),
        "F" => Coefficients::prime_field(k),
        _ => Err(bad()),
    }
}

/// Parses `M<n>(R)`, `U<n>(R)` or a bare coefficient ring `R ∈ {Z<m>, F<p>, F4}`.
pub fn parse_ring_spec(spec: &str) -> Result<FiniteRing> {
    let spec = spec.trim();
    let bad = || Error::Parse(format!("unknown ring spec {spec:?}; expected M<n>(R), U<n>(R), Z<m>, F<p> or F4"));
    if let Some(open) = spec.find('(') {
        let inner = spec[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let (kind, n) = spec[..open].split_at(1.min(open));
        let n: usize = n.parse().map_err(|_| bad())?;
        let coeff = parse_coefficients(inner)?;
        return match kind {
            "M" => matrix_ring(&coeff, n, false),
            "U" => matrix_ring(&coeff, n, true),
            _ => Err(bad()),
        };
    }
    matrix_ring(&parse_coefficients(spec)?, 1, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for (spec, size) in [("Z6", 6), ("F4", 4), ("M2(F2)", 16), ("U2(F2)", 8), ("U3(F2)", 64), ("M2(Z4)", 256)] {
            let r = parse_ring_spec(spec).unwrap();
            assert_eq!(r.size(), size, "{spec}");
            assert!(r.one().is_some());
            assert_eq!(r.name(), spec);
        }
    }

    #[test]
    fn f4_is_a_field() {
        let r = parse_ring_spec("F4").unwrap();
        let one = r.one().unwrap();
        for x in 1..4 {
            assert!((0..4).any(|y| r.mul(x, y) == one));
        }
        let a = r.find("a").unwrap();
        // α² = α + 1
        assert_eq!(r.label(r.mul(a, a)), "a+1");
    }

    #[test]
    fn rejects_bad_specs() {
        for spec in ["M2(F6)", "X2(F2)", "M(F2)", "Z1", "M9(Z9)", ""] {
            assert!(parse_ring_spec(spec).is_err(), "{spec}");
        }
    }

    #[test]
    fn rejects_bad_tables() {
        // multiplication x·y = 1 for all: not distributive
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![1, 1], vec![1, 1]];
        assert!(matches!(FiniteRing::from_tables("bad", add.clone(), mul), Err(Error::InvalidTables(_))));
        let ok = FiniteRing::from_tables("F2", add, vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(ok.one(), Some(1));
        assert!(FiniteRing::from_tables("ragged", vec![vec![0]], vec![vec![0, 0]]).is_err());
    }

    #[test]
    fn tables_round_trip() {
        let r = parse_ring_spec("U2(F2)").unwrap();
        let (add, mul) = r.tables();
        let back = FiniteRing::from_tables("U2(F2)", add, mul).unwrap();
        assert_eq!(back.size(), r.size());
        assert_eq!(back.tables(), r.tables());
    }
}
