//! Criterion benchmarks for commcert; see `benches/`.
