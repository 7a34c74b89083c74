//! This crate only hosts the criterion benchmarks in `benches/`; run them
//! with `cargo bench -p spinstar-bench`.
