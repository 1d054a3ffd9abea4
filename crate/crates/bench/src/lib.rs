//! Criterion benchmarks for the pipeline live under `benches/`.
