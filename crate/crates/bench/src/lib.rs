//! Criterion benchmarks for the enumeration and Picard-rank kernels; see `benches/`.
