//! Exact solvers.
//!
//! * [`dp_general`]: suffix-window DP keyed by per-type counts, for any
//!   instance and both objectives.
//! * [`dp_single_type`]: the same DP specialised to one tile type.
//! * [`dp_doubling`]: combines optimal segments of `2^e` copies of one tile.
//! * [`brute_force`]: exhaustive offset search, the ground truth for tests.
//! * [`disjoint_shifts`]: shifts that make copies of one tile pairwise
//!   disjoint, for decision instances with a shift bound.

mod brute;
mod doubling;
mod general;
mod shifts;
mod single;

pub use brute::{brute_force, BruteGuard};
pub use doubling::dp_doubling;
pub use general::dp_general;
pub use shifts::disjoint_shifts;
pub use single::dp_single_type;

use crate::error::SolveError;
use crate::placement::Placement;

/// Environment variable overriding [`Limits::state_cap`].
pub const STATE_CAP_ENV: &str = "TILEPACK_STATE_CAP";

/// Budgets for the DP solvers. Exceeding one yields
/// [`SolveError::CapExceeded`] instead of running out of memory.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest window width (in cells) for the suffix-window DPs.
    pub window_bits: usize,
    /// Largest window width for the doubling DP, whose table is `16^w`.
    pub doubling_bits: usize,
    /// Largest number of stored DP entries summed over all levels.
    pub state_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            window_bits: 20,
            doubling_bits: 6,
            state_cap: 1 << 24,
        }
    }
}

impl Limits {
    /// Defaults, with the state cap taken from `TILEPACK_STATE_CAP` if set
    /// to a positive integer.
    pub fn from_env() -> Limits {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(STATE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&c| c > 0)
        {
            limits.state_cap = cap;
        }
        limits
    }

    pub fn with_state_cap(mut self, cap: u64) -> Limits {
        self.state_cap = cap;
        self
    }

    fn check_window(&self, what: &'static str, width: usize, max_bits: usize) -> Result<(), SolveError> {
        if width > max_bits {
            let states = if width >= 64 { u64::MAX } else { 1u64 << width };
            return Err(SolveError::CapExceeded {
                what,
                states,
                cap: 1u64 << max_bits,
            });
        }
        Ok(())
    }

    fn check_states(&self, what: &'static str, states: u64) -> Result<(), SolveError> {
        if states > self.state_cap {
            return Err(SolveError::CapExceeded {
                what,
                states,
                cap: self.state_cap,
            });
        }
        Ok(())
    }
}

/// Counters collected while filling a DP table.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DpStats {
    /// Entries stored over the whole run.
    pub states: u64,
    /// Largest number of entries in a single level.
    pub peak_level_states: u64,
    /// Largest number of level hash tables alive at once.
    pub peak_live_levels: usize,
}

/// An optimal value with a placement achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// Trimmed length or largest start offset, per the objective solved.
    pub value: u64,
    pub placement: Placement,
    pub stats: DpStats,
}
