//! Stochastic Kronecker (R-MAT) power-law graph generator.
//!
//! Each edge descends `scale` levels of the 2×2 initiator, picking a
//! quadrant with probabilities `(a, b, c, d)`. Output depends only on
//! `(scale, edge_factor, seed)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::Triples;

/// Largest accepted scale (2^26 vertices).
pub const MAX_SCALE: u32 = 26;

/// Initiator probabilities `(a, b, c, d)`.
pub const INITIATOR: [f64; 4] = [0.57, 0.19, 0.19, 0.05];

/// Edge weights are drawn uniformly from `1..=MAX_WEIGHT`.
pub const MAX_WEIGHT: i64 = 100;

/// Default edges per vertex.
pub const DEFAULT_EDGE_FACTOR: usize = 16;

/// `2^scale × 2^scale` triples holding `edge_factor · 2^scale` weighted
/// edges. Duplicates and self-loops are kept; combine them when building.
pub fn kronecker_generate(scale: u32, edge_factor: usize, seed: u64) -> Result<Triples<i64>> {
    if scale > MAX_SCALE {
        return Err(Error::ScaleTooLarge { scale, cap: MAX_SCALE });
    }
    if scale == 0 || edge_factor == 0 {
        return Err(Error::InvalidArgument("scale and edge factor must both be at least 1".into()));
    }
    let n = 1usize << scale;
    let m = edge_factor * n;
    let [a, b, c, _] = INITIATOR;
    let (ab, abc) = (a + b, a + b + c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Triples::new(n, n);
    t.i.reserve(m);
    t.j.reserve(m);
    t.v.reserve(m);
    for _ in 0..m {
        let (mut row, mut col) = (0usize, 0usize);
        for _ in 0..scale {
            let p: f64 = rng.random();
            let (down, right) = if p < a {
                (0, 0)
            } else if p < ab {
                (0, 1)
            } else if p < abc {
                (1, 0)
            } else {
                (1, 1)
            };
            row = (row << 1) | down;
            col = (col << 1) | right;
        }
        let w = rng.random_range(1..=MAX_WEIGHT);
        t.push(row, col, w);
    }
    Ok(t)
}
