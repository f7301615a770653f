//! Rational quaternions `w + xi + yj + zk` with `i² = j² = k² = ijk = −1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: BigRational,
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

impl Quaternion {
    pub fn new(w: BigRational, x: BigRational, y: BigRational, z: BigRational) -> Self {
        Self { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        Self::new(r(w), r(x), r(y), r(z))
    }

    pub fn real(w: BigRational) -> Self {
        Self::new(w, Zero::zero(), Zero::zero(), Zero::zero())
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn components(&self) -> [&BigRational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm_squared(&self) -> BigRational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.w * c, &self.x * c, &self.y * c, &self.z * c)
    }

    /// `q⁻¹ = q̄ / |q|²`; `None` only for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_squared();
        if n.is_zero() {
            return None;
        }
        Some(self.conjugate().scale(&n.recip()))
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        &(self * rhs) - &(rhs * self)
    }
}

impl Zero for Quaternion {
    fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl One for Quaternion {
    fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w + &rhs.w,
            &self.x + &rhs.x,
            &self.y + &rhs.y,
            &self.z + &rhs.z,
        )
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w - &rhs.w,
            &self.x - &rhs.x,
            &self.y - &rhs.y,
            &self.z - &rhs.z,
        )
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    // Hamilton product.
    fn mul(self, r: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&r.w, &r.x, &r.y, &r.z);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        &self + &rhs
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        &self - &rhs
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        &self * &rhs
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

/// Always prints all four parts, e.g. `1/2-3i+0j+1k`.
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.w)?;
        for (c, unit) in [(&self.x, 'i'), (&self.y, 'j'), (&self.z, 'k')] {
            if c.is_negative() {
                write!(f, "-{}{}", -c, unit)?;
            } else {
                write!(f, "+{}{}", c, unit)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(w, x, y, z)
    }

    #[test]
    fn unit_table() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let minus_one = q(-1, 0, 0, 0);
        assert_eq!(&i * &i, minus_one);
        assert_eq!(&j * &j, minus_one);
        assert_eq!(&k * &k, minus_one);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&(&i * &j) * &k, minus_one);
    }

    #[test]
    fn inverse_of_two_i() {
        let two_i = q(0, 2, 0, 0);
        let inv = two_i.inverse().unwrap();
        let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        assert_eq!(inv, Quaternion::new(Zero::zero(), half, Zero::zero(), Zero::zero()));
        assert!((&two_i * &inv).is_one());
        assert!(Quaternion::zero().inverse().is_none());
    }

    #[test]
    fn display_keeps_all_parts() {
        assert_eq!(q(1, 2, -1, 0).to_string(), "1+2i-1j+0k");
    }
}
