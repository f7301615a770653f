//! Exact construction and verification of certificates writing ring elements
//! as sums of products of pairs of commutators.

pub mod cert;
pub mod element;
pub mod error;
pub mod exactalg;
pub mod explore;
pub mod freealg;
pub mod mdecomp;
pub mod rewrite;
pub mod witness;
pub mod z23;

pub use cert::{Certificate, CertificateTerm, CommutatorWitness, Verdict};
pub use element::RingElement;
pub use error::{Error, Result};
pub use exactalg::{DirectSum, Matrix, Quaternion, RingDescriptor, Scalar, Value};
pub use rewrite::{SingleWitness, UnitSummand, UnitWitness};
pub use witness::{split_subring_witness, subring_witness, witness_triple, WitnessTriple};
