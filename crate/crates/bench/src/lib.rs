//! Shared fixtures for the criterion benchmarks.

/// Evenly spaced probabilities strictly inside (0, 1).
pub fn probability_grid(len: usize) -> Vec<f64> {
    (0..len).map(|i| (i as f64 + 0.5) / len as f64).collect()
}

/// Points spread over `[lo, hi]`.
pub fn linear_grid(lo: f64, hi: f64, len: usize) -> Vec<f64> {
    let step = (hi - lo) / (len.max(2) - 1) as f64;
    (0..len).map(|i| lo + step * i as f64).collect()
}
