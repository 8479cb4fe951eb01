//! Criterion benchmarks for `antiramsey-core`; see `benches/`.
