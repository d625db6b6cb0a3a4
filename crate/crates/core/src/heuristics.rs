//! Leftmost-fit greedy placement under different tile orderings.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::Occupancy;
use crate::instance::Instance;
use crate::placement::Placement;
use crate::tile::{fits_at, Tile};

pub const DEFAULT_RESTARTS: usize = 10;

/// The order in which tiles are fed to [`leftmost_fit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderStrategy {
    /// Queue order as given.
    None,
    /// Ascending numeral count.
    IncFreq,
    /// Descending numeral count (Ziegler's algorithm).
    DecFreq,
    /// Ascending numerals per cell.
    IncDens,
    /// Descending numerals per cell.
    DecDens,
    /// Best of `restarts` seeded shuffles.
    Random { restarts: usize, seed: u64 },
}

impl OrderStrategy {
    /// The five orderings that do not depend on a seed.
    pub const DETERMINISTIC: [OrderStrategy; 5] = [
        OrderStrategy::None,
        OrderStrategy::IncFreq,
        OrderStrategy::DecFreq,
        OrderStrategy::IncDens,
        OrderStrategy::DecDens,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            OrderStrategy::None => "none",
            OrderStrategy::IncFreq => "incfreq",
            OrderStrategy::DecFreq => "decfreq",
            OrderStrategy::IncDens => "incdens",
            OrderStrategy::DecDens => "decdens",
            OrderStrategy::Random { .. } => "random",
        }
    }

    /// Tile indices in feeding order. Sorting is stable, so ties keep queue
    /// order. For [`OrderStrategy::Random`] this is the first restart's order.
    pub fn order(&self, inst: &Instance) -> Vec<usize> {
        let tiles = inst.tiles();
        let mut idx: Vec<usize> = (0..tiles.len()).collect();
        let by_freq = |a: &usize, b: &usize| tiles[*a].numeral_count().cmp(&tiles[*b].numeral_count());
        let by_dens = |a: &usize, b: &usize| cmp_density(&tiles[*a], &tiles[*b]);
        match *self {
            OrderStrategy::None => {}
            OrderStrategy::IncFreq => idx.sort_by(by_freq),
            OrderStrategy::DecFreq => idx.sort_by(|a, b| by_freq(b, a)),
            OrderStrategy::IncDens => idx.sort_by(by_dens),
            OrderStrategy::DecDens => idx.sort_by(|a, b| by_dens(b, a)),
            OrderStrategy::Random { seed, .. } => shuffle(&mut idx, seed, 0),
        }
        idx
    }
}

impl fmt::Display for OrderStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderStrategy {
    type Err = String;

    /// Parses a strategy name; `random` gets the default restart count and
    /// seed 0.
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "none" => OrderStrategy::None,
            "incfreq" => OrderStrategy::IncFreq,
            "decfreq" => OrderStrategy::DecFreq,
            "incdens" => OrderStrategy::IncDens,
            "decdens" => OrderStrategy::DecDens,
            "random" => OrderStrategy::Random {
                restarts: DEFAULT_RESTARTS,
                seed: 0,
            },
            _ => return Err(format!("unknown order `{s}`")),
        })
    }
}

/// Compares numerals/length exactly, without going through floats.
fn cmp_density(a: &Tile, b: &Tile) -> Ordering {
    (a.numeral_count() * b.len()).cmp(&(b.numeral_count() * a.len()))
}

fn shuffle(idx: &mut [usize], seed: u64, restart: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart);
    idx.shuffle(&mut rng);
}

/// Places the tiles of `inst` in the given order, each at the smallest
/// offset where it fits. The first tile lands at offset 0.
///
/// The returned placement lists starts in the instance's queue order.
pub fn leftmost_fit(inst: &Instance, order: &[usize]) -> Placement {
    let tiles = inst.tiles();
    let mut occ = Occupancy::new();
    let mut starts = vec![0; tiles.len()];
    for &i in order {
        let tile = &tiles[i];
        let s = (0..).find(|&s| fits_at(&occ, tile, s)).unwrap();
        tile.cells().or_into_at(s, &mut occ);
        starts[i] = s;
    }
    Placement::new(inst, starts)
}

/// Runs leftmost-fit after ordering the tiles by `strat`.
///
/// For [`OrderStrategy::Random`], restart `r` shuffles with stream `r` of a
/// ChaCha8 generator seeded with `seed`; the restart with the smallest
/// objective value wins, ties going to the earliest restart.
pub fn solve_greedy(inst: &Instance, strat: OrderStrategy) -> Placement {
    match strat {
        OrderStrategy::Random { restarts, seed } => {
            let mut best: Option<(u64, Placement)> = None;
            for r in 0..restarts.max(1) {
                let mut idx: Vec<usize> = (0..inst.n()).collect();
                shuffle(&mut idx, seed, r as u64);
                let p = leftmost_fit(inst, &idx);
                let v = objective_value(inst, &p);
                if best.as_ref().is_none_or(|(bv, _)| v < *bv) {
                    best = Some((v, p));
                }
            }
            best.unwrap().1
        }
        _ => leftmost_fit(inst, &strat.order(inst)),
    }
}

fn objective_value(inst: &Instance, p: &Placement) -> u64 {
    p.metrics(inst)
        .expect("leftmost-fit placements are valid")
        .value(inst.objective())
}
