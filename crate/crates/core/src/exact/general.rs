use std::collections::HashMap;

use super::{DpStats, Limits, Solution};
use crate::error::SolveError;
use crate::instance::{Instance, Objective};
use crate::merge::SuffixState;
use crate::placement::Placement;

/// A DP key: the per-type counts used so far (as a mixed-radix rank), the
/// occupancy of the last `w` cells, and for the max-shift objective the
/// distance from the current length back to the latest start.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Key {
    rank: u64,
    window: SuffixState,
    anchor: u8,
}

#[derive(Clone, Copy, Debug)]
struct Back {
    pred: u32,
    ty: u16,
    shift: u8,
}

struct Radix {
    counts: Vec<usize>,
    strides: Vec<u64>,
}

impl Radix {
    fn new(counts: Vec<usize>) -> Result<Radix, SolveError> {
        let mut strides = Vec::with_capacity(counts.len());
        let mut total: u64 = 1;
        for &c in &counts {
            strides.push(total);
            total = total.checked_mul(c as u64 + 1).ok_or(SolveError::CapExceeded {
                what: "count vectors",
                states: u64::MAX,
                cap: u64::MAX,
            })?;
        }
        Ok(Radix { counts, strides })
    }

    fn used(&self, rank: u64, ty: usize) -> usize {
        ((rank / self.strides[ty]) % (self.counts[ty] as u64 + 1)) as usize
    }
}

/// Optimal placement of all tiles of `inst` under its objective.
///
/// Tiles are appended left to right; each new tile starts inside the last
/// `w` cells or directly after them, where `w` is the longest tile. For the
/// max-shift objective starts are additionally kept non-decreasing, so the
/// latest start is the largest one.
///
/// Level `i` holds the entries for placements of `i` tiles. Only the
/// previous level's table and the one being filled are alive at a time;
/// compact back-pointers are kept for every level to rebuild the witness.
/// Iteration is over sorted keys with ascending type and shift, and an entry
/// is replaced only by a strictly better value, so the witness does not
/// depend on hash order.
pub fn dp_general(inst: &Instance, limits: &Limits) -> Result<Solution, SolveError> {
    let w = inst.max_tile_len();
    limits.check_window("window", w, limits.window_bits.min(SuffixState::MAX_WIDTH))?;
    if inst.types().len() > u16::MAX as usize {
        return Err(SolveError::Unsupported("at most 65535 tile types"));
    }
    let maxshift = inst.objective() == Objective::MinMaxShift;
    let radix = Radix::new(inst.types().iter().map(|t| t.count).collect())?;
    let shapes: Vec<(u64, usize)> = inst.types().iter().map(|t| (t.shape.mask(), t.shape.len())).collect();

    let mut stats = DpStats {
        states: 1,
        peak_level_states: 1,
        peak_live_levels: 1,
    };
    let mut frontier: Vec<(Key, u64)> = vec![(
        Key {
            rank: 0,
            window: SuffixState::initial(w),
            anchor: 0,
        },
        0,
    )];
    let mut backs: Vec<Vec<Back>> = Vec::with_capacity(inst.n());

    for _level in 0..inst.n() {
        let mut table: HashMap<Key, (u64, Back)> = HashMap::new();
        stats.peak_live_levels = stats.peak_live_levels.max(2);
        for (pred, &(key, lambda)) in frontier.iter().enumerate() {
            for (ty, &(mask, len)) in shapes.iter().enumerate() {
                if radix.used(key.rank, ty) == radix.counts[ty] {
                    continue;
                }
                for (shift, window, growth) in key.window.merges(mask, len) {
                    if maxshift && shift + (key.anchor as usize) < w {
                        continue;
                    }
                    let next = Key {
                        rank: key.rank + radix.strides[ty],
                        window,
                        anchor: if maxshift { (w - shift + growth) as u8 } else { 0 },
                    };
                    let value = lambda + growth as u64;
                    let back = Back {
                        pred: pred as u32,
                        ty: ty as u16,
                        shift: shift as u8,
                    };
                    table
                        .entry(next)
                        .and_modify(|e| {
                            if value < e.0 {
                                *e = (value, back);
                            }
                        })
                        .or_insert((value, back));
                }
            }
            limits.check_states("dp states", stats.states + table.len() as u64)?;
        }
        let mut level: Vec<(Key, (u64, Back))> = table.into_iter().collect();
        level.sort_unstable_by_key(|e| e.0);
        stats.states += level.len() as u64;
        stats.peak_level_states = stats.peak_level_states.max(level.len() as u64);
        backs.push(level.iter().map(|e| e.1 .1).collect());
        frontier = level.into_iter().map(|(k, (v, _))| (k, v)).collect();
    }

    let score = |&(key, lambda): &(Key, u64)| {
        if maxshift {
            lambda - key.anchor as u64
        } else {
            lambda
        }
    };
    let (best, value) = frontier
        .iter()
        .enumerate()
        .map(|(i, e)| (i, score(e)))
        .min_by_key(|&(i, v)| (v, i))
        .expect("the last level is never empty");

    let mut moves = Vec::with_capacity(inst.n());
    let mut idx = best;
    for level in backs.iter().rev() {
        let b = level[idx];
        moves.push((b.ty as usize, b.shift as usize));
        idx = b.pred as usize;
    }
    moves.reverse();
    let placement = replay(inst, w, &moves);
    debug_assert_eq!(placement.metrics(inst).map(|m| m.value(inst.objective())), Ok(value));
    Ok(Solution {
        value,
        placement,
        stats,
    })
}

/// Turns a sequence of (type, window shift) moves into starts, assigning
/// each move to the next unused occurrence of its type.
fn replay(inst: &Instance, w: usize, moves: &[(usize, usize)]) -> Placement {
    let mut next_occ = vec![0; inst.types().len()];
    let mut starts = vec![0; inst.n()];
    let mut lambda = 0;
    let mut window = SuffixState::initial(w);
    for &(ty, shift) in moves {
        let tt = &inst.types()[ty];
        let (_, state, growth) = window
            .merges(tt.shape.mask(), tt.shape.len())
            .find(|&(s, _, _)| s == shift)
            .expect("recorded shift is feasible");
        starts[tt.occurrences[next_occ[ty]]] = lambda + shift - w;
        next_occ[ty] += 1;
        lambda += growth;
        window = state;
    }
    Placement::new(inst, starts)
}
