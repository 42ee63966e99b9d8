//! Criterion benchmarks for the metaplectic crate; see `benches/`.
