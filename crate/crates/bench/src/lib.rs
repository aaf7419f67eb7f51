//! Benchmarks for alphacut-core; see `benches/`.
