use super::{DpStats, Solution};
use crate::error::SolveError;
use crate::instance::{Instance, Objective};
use crate::placement::Placement;

/// Size limits for [`brute_force`], which enumerates up to
/// `(offset_cap + 1)^n` offset vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteGuard {
    pub max_tiles: usize,
    pub max_offset_cap: usize,
}

impl Default for BruteGuard {
    fn default() -> Self {
        BruteGuard {
            max_tiles: 7,
            max_offset_cap: 16,
        }
    }
}

impl BruteGuard {
    pub fn unlimited() -> BruteGuard {
        BruteGuard {
            max_tiles: usize::MAX,
            max_offset_cap: usize::MAX,
        }
    }
}

struct Search<'a> {
    inst: &'a Instance,
    cap: usize,
    maxshift: bool,
    cells: Vec<bool>,
    starts: Vec<usize>,
    best: u64,
    best_starts: Option<Vec<usize>>,
    visited: u64,
}

/// Exhaustive search over every offset in `0..=offset_cap` for every tile.
///
/// The result is optimal among placements whose starts all lie within the
/// cap; `offset_cap = total_length - shortest tile` covers every gap-free
/// placement. Copies of one type take non-decreasing offsets, and branches
/// whose partial value already reaches the best found are cut.
pub fn brute_force(inst: &Instance, offset_cap: usize, guard: &BruteGuard) -> Result<Solution, SolveError> {
    if inst.n() > guard.max_tiles {
        return Err(SolveError::CapExceeded {
            what: "brute-force tiles",
            states: inst.n() as u64,
            cap: guard.max_tiles as u64,
        });
    }
    if offset_cap > guard.max_offset_cap {
        return Err(SolveError::CapExceeded {
            what: "brute-force offset cap",
            states: offset_cap as u64,
            cap: guard.max_offset_cap as u64,
        });
    }
    let mut search = Search {
        inst,
        cap: offset_cap,
        maxshift: inst.objective() == Objective::MinMaxShift,
        cells: vec![false; offset_cap + inst.max_tile_len() + 1],
        starts: vec![0; inst.n()],
        best: u64::MAX,
        best_starts: None,
        visited: 0,
    };
    search.descend(0, usize::MAX, 0, 0);
    let starts = search.best_starts.expect("concatenation fits within the cap");
    let placement = Placement::new(inst, starts).trim();
    Ok(Solution {
        value: search.best,
        placement,
        stats: DpStats {
            states: search.visited,
            ..DpStats::default()
        },
    })
}

impl Search<'_> {
    fn value(&self, min_start: usize, max_start: usize, max_end: usize) -> u64 {
        if self.maxshift {
            (max_start - min_start) as u64
        } else {
            (max_end - min_start) as u64
        }
    }

    fn descend(&mut self, i: usize, min_start: usize, max_start: usize, max_end: usize) {
        self.visited += 1;
        if i == self.inst.n() {
            let v = self.value(min_start, max_start, max_end);
            if v < self.best {
                self.best = v;
                self.best_starts = Some(self.starts.clone());
            }
            return;
        }
        let tile = &self.inst.tiles()[i];
        let ty = self.inst.type_of(i);
        let lo = self.inst.types()[ty]
            .occurrences
            .iter()
            .take_while(|&&j| j < i)
            .last()
            .map_or(0, |&j| self.starts[j]);
        for s in lo..=self.cap {
            let (mn, mx, end) = (min_start.min(s), max_start.max(s), max_end.max(s + tile.len()));
            if self.value(mn, mx, end) >= self.best {
                continue;
            }
            if tile.numerals().iter().any(|&o| self.cells[s + o]) {
                continue;
            }
            for &o in tile.numerals() {
                self.cells[s + o] = true;
            }
            self.starts[i] = s;
            self.descend(i + 1, mn, mx, end);
            for &o in tile.numerals() {
                self.cells[s + o] = false;
            }
        }
    }
}
