//! Empty library target; this package only carries criterion benchmarks.
//! Run them with `cargo bench -p arcstat-bench`.
