//! Benchmark-only crate.
//!
//! This package exists to host the criterion benchmarks in `benches/`;
//! all benchmarked functionality lives in `sniplab-core`.
