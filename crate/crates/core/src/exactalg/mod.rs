//! Exact coefficient rings, scalars, and square matrices over them.

mod det;
mod directsum;
mod matrix;
mod quaternion;
mod ring;
mod scalar;

pub mod random;

pub use directsum::{direct_sum_embed, DirectSum};
pub use matrix::Matrix;
pub use quaternion::Quaternion;
pub use ring::{RingDescriptor, Value};
pub use scalar::Scalar;
