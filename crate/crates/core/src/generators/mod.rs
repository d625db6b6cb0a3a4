//! Instance builders: greedy lower-bound families, the benchmark families,
//! reduction gadgets, and seeded random instances.

mod families;
mod random;
mod reductions;

pub use families::{exp2, exp3, lower_bound, ziegler_adversary, Family, TypeShape, YShape};
pub use random::{random, RandomParams};
pub use reductions::{
    clique_reduction, coupled_tasks, inapprox_gadget, sidon_set, CliqueGraph, CliqueReduction, CoupledTask,
};

use crate::tile::Tile;

/// Builds a tile from runs of numerals and wildcards.
#[derive(Default)]
struct Pattern {
    numerals: Vec<usize>,
    len: usize,
}

impl Pattern {
    fn new() -> Pattern {
        Pattern::default()
    }

    fn num(mut self) -> Pattern {
        self.numerals.push(self.len);
        self.len += 1;
        self
    }

    fn nums(mut self, k: usize) -> Pattern {
        for _ in 0..k {
            self = self.num();
        }
        self
    }

    fn gap(mut self, k: usize) -> Pattern {
        self.len += k;
        self
    }

    /// `k` repetitions of one numeral followed by `gap` wildcards.
    fn periods(mut self, k: usize, gap: usize) -> Pattern {
        for _ in 0..k {
            self = self.num().gap(gap);
        }
        self
    }

    fn tile(self) -> Tile {
        Tile::new(self.len, self.numerals).expect("generated patterns start and end with a numeral")
    }
}
