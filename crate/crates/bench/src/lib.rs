//! Shared inputs for the criterion benchmarks.

use fusionkit_core::{BoxConfig, Level};

/// Box configurations of increasing size used across benchmarks.
pub fn box_configs() -> Vec<(&'static str, BoxConfig)> {
    [
        ("2x2", vec![2, 2]),
        ("1x8", vec![1; 8]),
        ("3x4", vec![4, 4, 4]),
        ("4x4", vec![4, 4, 4, 4]),
        ("5x4", vec![4, 4, 4, 4, 4]),
    ]
    .into_iter()
    .map(|(name, sizes)| (name, BoxConfig::new(sizes).expect("nonempty")))
    .collect()
}

pub fn level(l: u32) -> Level {
    Level::new(l).expect("positive level")
}
