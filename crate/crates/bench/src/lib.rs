//! Criterion benchmarks for the decision pipeline; see `benches/`.
