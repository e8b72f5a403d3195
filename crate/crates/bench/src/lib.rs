//! Criterion benchmarks for jpl-core live under `benches/`.
