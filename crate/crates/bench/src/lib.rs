//! Benchmark-only crate; see `benches/chsh.rs`.
