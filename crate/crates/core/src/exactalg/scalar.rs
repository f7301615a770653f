use std::fmt;

use super::quaternion::Quaternion;
use super::ring::{RingDescriptor, Value};
use crate::element::RingElement;
use crate::error::{Error, Result};

/// A coefficient-ring element bundled with its ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    ring: RingDescriptor,
    value: Value,
}

impl Scalar {
    pub fn new(ring: RingDescriptor, value: Value) -> Result<Self> {
        if !ring.contains(&value) {
            return Err(Error::Parse(format!("{value:?} is not a canonical element of {ring}")));
        }
        Ok(Self { ring, value })
    }

    pub(crate) fn from_parts(ring: RingDescriptor, value: Value) -> Self {
        debug_assert!(ring.contains(&value));
        Self { ring, value }
    }

    pub fn parse(ring: &RingDescriptor, s: &str) -> Result<Self> {
        let value = ring.parse_value(s)?;
        Ok(Self::from_parts(ring.clone(), value))
    }

    pub fn from_i64(ring: &RingDescriptor, n: i64) -> Self {
        Self::from_parts(ring.clone(), ring.from_i64(n))
    }

    pub fn quaternion(q: Quaternion) -> Self {
        Self::from_parts(RingDescriptor::Quaternions, Value::Quat(Box::new(q)))
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn as_quaternion(&self) -> Option<&Quaternion> {
        match &self.value {
            Value::Quat(q) => Some(q),
            _ => None,
        }
    }

    fn check(&self, rhs: &Self) -> Result<()> {
        if self.ring != rhs.ring {
            return Err(Error::ring_mismatch(&self.ring, &rhs.ring));
        }
        Ok(())
    }

    pub fn try_invert(&self) -> Option<Self> {
        self.ring
            .try_invert(&self.value)
            .map(|v| Self::from_parts(self.ring.clone(), v))
    }
}

impl RingElement for Scalar {
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(Self::from_parts(self.ring.clone(), self.ring.add(&self.value, &rhs.value)))
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(Self::from_parts(self.ring.clone(), self.ring.mul(&self.value, &rhs.value)))
    }

    fn neg(&self) -> Self {
        Self::from_parts(self.ring.clone(), self.ring.neg(&self.value))
    }

    fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.value)
    }

    fn zero_like(&self) -> Self {
        Self::from_parts(self.ring.clone(), self.ring.zero())
    }

    fn one_like(&self) -> Self {
        Self::from_parts(self.ring.clone(), self.ring.one())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format_value(&self.value))
    }
}
