//! Exhaustive computations in small finite rings given by tables: the
//! commutator set, sumset saturation for `ξ`, ideal closures, nil and
//! semiprimeness tests, and checks of commutativity criteria.

mod checks;
mod closure;
mod finite;

pub use checks::{
    check_section2, example22_check, lie_report, radical_power_check, Example22Report, LieReport,
    RadicalPowerReport, Section2Report,
};
pub use closure::{
    additive_closure, commutator_set, full, ideal_closure, is_nil, is_semiprime, nilpotency_index, product_set,
    singleton, sumset, xi_exact, Subset, XiValue,
};
pub use finite::{
    matrix_ring, parse_ring_spec, Coefficients, FiniteRing, EXHAUSTIVE_LIMIT, MAX_SIZE, SAMPLED_TRIPLES,
};
