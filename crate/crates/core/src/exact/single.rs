use super::{DpStats, Limits, Solution};
use crate::error::SolveError;
use crate::instance::{Instance, Objective};
use crate::merge::SuffixState;
use crate::placement::Placement;
use crate::tile::Tile;

const UNSEEN: u32 = u32::MAX;

/// Optimal placement of `n` copies of `tile`.
///
/// With one tile type the count vector is just the level, so the table is
/// a dense array over the `2^|t|` windows. All copies share one length, so
/// the latest start always belongs to the copy ending last, and the max
/// shift equals the optimal length minus `|t|`: both objectives come out of
/// the same table.
pub fn dp_single_type(n: usize, tile: &Tile, objective: Objective, limits: &Limits) -> Result<Solution, SolveError> {
    if n == 0 {
        return Err(SolveError::Unsupported("at least one copy"));
    }
    let w = tile.len();
    limits.check_window("window", w, limits.window_bits.min(32))?;
    let size = 1usize << w;
    limits.check_states("dp table", size as u64)?;
    let mask = tile.mask();

    let mut cur = vec![UNSEEN; size];
    let mut next = vec![UNSEEN; size];
    let start = SuffixState::initial(w).bits() as u32;
    cur[start as usize] = 0;
    let mut touched = vec![start];
    // back[level] holds (window, predecessor window, shift), sorted by window.
    let mut back: Vec<Vec<(u32, u32, u8)>> = Vec::with_capacity(n);
    let mut stats = DpStats {
        states: 1,
        peak_level_states: 1,
        peak_live_levels: 1,
    };

    for _level in 0..n {
        let mut reached: Vec<u32> = Vec::new();
        for &win in &touched {
            let lambda = cur[win as usize];
            for (_, succ, growth) in SuffixState::from_bits(win as u64, w).merges(mask, w) {
                let s = succ.bits() as usize;
                let value = lambda + growth as u32;
                if next[s] == UNSEEN {
                    reached.push(s as u32);
                }
                if value < next[s] {
                    next[s] = value;
                }
            }
        }
        reached.sort_unstable();
        // Second pass for back-pointers: the first (window, shift) in
        // iteration order that attains the minimum.
        let mut pred = vec![(0u32, 0u8); reached.len()];
        let mut done = vec![false; reached.len()];
        for &win in &touched {
            let lambda = cur[win as usize];
            for (shift, succ, growth) in SuffixState::from_bits(win as u64, w).merges(mask, w) {
                let s = succ.bits() as u32;
                let i = reached.binary_search(&s).unwrap();
                if !done[i] && lambda + growth as u32 == next[s as usize] {
                    done[i] = true;
                    pred[i] = (win, shift as u8);
                }
            }
        }
        back.push(reached.iter().zip(&pred).map(|(&s, &(p, sh))| (s, p, sh)).collect());
        stats.states += reached.len() as u64;
        stats.peak_level_states = stats.peak_level_states.max(reached.len() as u64);
        stats.peak_live_levels = 2;
        limits.check_states("dp states", stats.states)?;

        for &win in &touched {
            cur[win as usize] = UNSEEN;
        }
        std::mem::swap(&mut cur, &mut next);
        touched = reached;
    }

    let (&best_win, length) = touched
        .iter()
        .map(|w| (w, cur[*w as usize]))
        .min_by_key(|&(w, v)| (v, *w))
        .expect("every level is reachable");

    let mut shifts = Vec::with_capacity(n);
    let mut win = best_win;
    for level in back.iter().rev() {
        let i = level.binary_search_by_key(&win, |e| e.0).unwrap();
        shifts.push(level[i].2 as usize);
        win = level[i].1;
    }
    shifts.reverse();

    let mut starts = Vec::with_capacity(n);
    let mut lambda = 0;
    for s in shifts {
        let start = lambda + s - w;
        starts.push(start);
        lambda = lambda.max(start + w);
    }
    let inst = Instance::from_counts([(n, tile)], objective).expect("n >= 1");
    let placement = Placement::new(&inst, starts);
    let value = match objective {
        Objective::MinLength => length as u64,
        Objective::MinMaxShift => length as u64 - w as u64,
    };
    debug_assert_eq!(placement.metrics(&inst).map(|m| m.value(objective)), Ok(value));
    Ok(Solution {
        value,
        placement,
        stats,
    })
}
