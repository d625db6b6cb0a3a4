//! Packing sparse rows with a single numeral symbol into the shortest
//! gap-free superposition.
//!
//! ```
//! use tilepack::{Instance, Objective, Tile};
//! use tilepack::heuristics::{solve_greedy, OrderStrategy};
//!
//! let tiles = ["#..#", "#.#", "#...#"].map(|p| Tile::parse(p).unwrap());
//! let inst = Instance::new(tiles.to_vec(), Objective::MinLength).unwrap();
//! let placement = solve_greedy(&inst, OrderStrategy::None);
//! assert_eq!(placement.render(&inst), "132123");
//! ```

pub mod bitset;
pub mod error;
pub mod exact;
pub mod generators;
pub mod heuristics;
pub mod instance;
pub mod merge;
pub mod placement;
pub mod tile;

pub use bitset::Occupancy;
pub use error::{GenError, ParseError, ParseErrorKind, SolveError, TileError};
pub use instance::{Instance, Objective, TileType};
pub use placement::{Metric, Metrics, Placement, Violation};
pub use tile::{fits_at, insertion_offsets, Tile};

// The guide's code blocks run as doctests.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/instances.md")]
    mod instances {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/heuristics.md")]
    mod heuristics {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
