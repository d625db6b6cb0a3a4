use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::GenError;
use crate::instance::{Instance, Objective};
use crate::tile::Tile;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomParams {
    pub seed: u64,
    pub n: usize,
    pub min_len: usize,
    pub max_len: usize,
    /// Each tile draws its interior numeral probability from this range.
    pub min_density: f64,
    pub max_density: f64,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            seed: 0,
            n: 4,
            min_len: 1,
            max_len: 6,
            min_density: 0.2,
            max_density: 0.8,
        }
    }
}

/// Seeded random instance. Every tile has numerals at both ends; each
/// interior cell is a numeral independently with the tile's density.
pub fn random(params: &RandomParams) -> Result<Instance, GenError> {
    let p = params;
    if p.n == 0 || p.min_len == 0 || p.min_len > p.max_len {
        return Err(GenError::InvalidParameter(format!(
            "need n >= 1 and 1 <= min_len <= max_len, got n={}, lengths {}..={}",
            p.n, p.min_len, p.max_len
        )));
    }
    if !(0.0..=1.0).contains(&p.min_density) || !(p.min_density..=1.0).contains(&p.max_density) {
        return Err(GenError::InvalidParameter(format!(
            "densities must satisfy 0 <= min <= max <= 1, got {}..={}",
            p.min_density, p.max_density
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let tiles = (0..p.n)
        .map(|_| {
            let len = rng.gen_range(p.min_len..=p.max_len);
            let density = rng.gen_range(p.min_density..=p.max_density);
            let interior: Vec<usize> = (1..len.saturating_sub(1)).filter(|_| rng.gen_bool(density)).collect();
            let numerals = std::iter::once(0).chain(interior).chain(std::iter::once(len - 1));
            Tile::new(len, numerals).expect("ends are numerals")
        })
        .collect();
    Ok(Instance::new(tiles, Objective::MinLength).expect("n >= 1"))
}
