use std::collections::HashMap;

use super::{DpStats, Limits, Solution};
use crate::error::SolveError;
use crate::instance::{Instance, Objective};
use crate::placement::Placement;
use crate::tile::Tile;

/// A gap-free placement of `2^e` (or, while assembling the answer, any
/// number of) copies, summarised by its first and last `w` cells.
///
/// Segments of length at least `2w` compose through their boundary masks
/// alone, so only the shortest one per `(first, last)` pair matters. Shorter
/// segments have overlapping windows and keep their exact length in the key.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct SegKey {
    first: u64,
    last: u64,
    short_len: Option<u64>,
}

#[derive(Clone, Copy, Debug)]
enum Origin {
    Tile,
    Join { left: u32, right: u32, shift: u8 },
}

#[derive(Clone, Copy, Debug)]
struct Node {
    key: SegKey,
    len: u64,
    origin: Origin,
}

struct Doubling {
    w: usize,
    full: u64,
    nodes: Vec<Node>,
    /// `min_shift[r][l]`: smallest shift placing first-window `l` over
    /// last-window `r` without collision.
    min_shift: Vec<Vec<u8>>,
    cap: u64,
}

type Table = Vec<u32>;

/// Optimal placement of `n` copies of `tile` by repeated doubling.
///
/// `D[0]` is the single tile and `D[e]` joins two `D[e-1]` segments at every
/// collision-free overlap; the answer joins the powers of two in the binary
/// expansion of `n`. Joining two long segments only needs the smallest
/// feasible shift between the left segment's last window and the right
/// segment's first window, which turns that case into a min-plus product
/// over the boundary masks.
pub fn dp_doubling(n: usize, tile: &Tile, objective: Objective, limits: &Limits) -> Result<Solution, SolveError> {
    if n == 0 {
        return Err(SolveError::Unsupported("at least one copy"));
    }
    let w = tile.len();
    if w > limits.doubling_bits {
        return Err(SolveError::CapExceeded {
            what: "doubling window",
            states: 1u64.checked_shl(4 * w as u32).unwrap_or(u64::MAX),
            cap: 1u64 << (4 * limits.doubling_bits).min(63),
        });
    }
    let full = (1u64 << w) - 1;
    let min_shift = (0..=full)
        .map(|r| {
            (0..=full)
                .map(|l| (0..=w).find(|&s| (l << s) & r & full == 0).unwrap() as u8)
                .collect()
        })
        .collect();
    let mut dp = Doubling {
        w,
        full,
        nodes: Vec::new(),
        min_shift,
        cap: limits.state_cap,
    };
    let mask = tile.mask();
    dp.nodes.push(Node {
        key: SegKey {
            first: mask,
            last: mask,
            short_len: Some(w as u64),
        },
        len: w as u64,
        origin: Origin::Tile,
    });

    let mut power: Table = vec![0];
    let mut acc: Option<Table> = None;
    let mut rest = n;
    while rest > 0 {
        if rest & 1 == 1 {
            acc = Some(match acc {
                None => power.clone(),
                // Blocks may follow each other in any size order.
                Some(prev) => dp.join(&power, &prev)?,
            });
        }
        rest >>= 1;
        if rest > 0 {
            power = dp.join(&power, &power)?;
        }
    }

    let table = acc.unwrap();
    let &best = table
        .iter()
        .min_by_key(|&&id| (dp.nodes[id as usize].len, dp.nodes[id as usize].key))
        .unwrap();
    let length = dp.nodes[best as usize].len;

    let mut starts = Vec::with_capacity(n);
    dp.collect_starts(best, 0, &mut starts);
    let inst = Instance::from_counts([(n, tile)], objective).expect("n >= 1");
    let placement = Placement::new(&inst, starts);
    let value = match objective {
        Objective::MinLength => length,
        Objective::MinMaxShift => length - w as u64,
    };
    debug_assert_eq!(placement.metrics(&inst).map(|m| m.value(objective)), Ok(value));
    Ok(Solution {
        value,
        placement,
        stats: DpStats {
            states: dp.nodes.len() as u64,
            peak_level_states: 0,
            peak_live_levels: 0,
        },
    })
}

impl Doubling {
    fn is_long(&self, node: &Node) -> bool {
        node.key.short_len.is_none()
    }

    /// Joins every segment of `a` with every segment of `b` placed after it.
    fn join(&mut self, a: &Table, b: &Table) -> Result<Table, SolveError> {
        let w = self.w;
        let mut best: HashMap<SegKey, (u64, u32, u32, u8)> = HashMap::new();
        let mut offer = |key: SegKey, len: u64, left: u32, right: u32, shift: u8| {
            best.entry(key)
                .and_modify(|e| {
                    if len < e.0 {
                        *e = (len, left, right, shift);
                    }
                })
                .or_insert((len, left, right, shift));
        };

        let a_long: Vec<u32> = a
            .iter()
            .copied()
            .filter(|&id| self.is_long(&self.nodes[id as usize]))
            .collect();
        let (b_long, b_short): (Vec<u32>, Vec<u32>) = b.iter().partition(|&&id| self.is_long(&self.nodes[id as usize]));

        // Any pair involving a short segment: try every shift.
        for &ia in a {
            let na = self.nodes[ia as usize];
            let partners: &[u32] = if self.is_long(&na) { &b_short } else { b };
            for &ib in partners {
                let nb = self.nodes[ib as usize];
                for s in 0..=w {
                    if (nb.key.first << s) & na.key.last & self.full != 0 {
                        continue;
                    }
                    let (key, len) = self.joined(&na, &nb, s);
                    offer(key, len, ia, ib, s as u8);
                }
            }
        }

        // Long followed by long: the result keeps a's first window and b's
        // last window, so only the minimal shift per boundary pair counts.
        // Step one: best (len + shift) per (a.first, b.first).
        let mut by_first: HashMap<u64, Vec<u32>> = HashMap::new();
        for &ib in &b_long {
            by_first.entry(self.nodes[ib as usize].key.first).or_default().push(ib);
        }
        let mut b_firsts: Vec<u64> = by_first.keys().copied().collect();
        b_firsts.sort_unstable();
        let mut mid: HashMap<(u64, u64), (u64, u32, u8)> = HashMap::new();
        for &ia in &a_long {
            let na = self.nodes[ia as usize];
            for &lb in &b_firsts {
                let s = self.min_shift[na.key.last as usize][lb as usize];
                let v = na.len + s as u64;
                mid.entry((na.key.first, lb))
                    .and_modify(|e| {
                        if v < e.0 {
                            *e = (v, ia, s);
                        }
                    })
                    .or_insert((v, ia, s));
            }
        }
        // Step two: add b's length.
        let mut mids: Vec<_> = mid.into_iter().collect();
        mids.sort_unstable_by_key(|e| e.0);
        for ((first, lb), (v, ia, s)) in mids {
            for &ib in &by_first[&lb] {
                let nb = self.nodes[ib as usize];
                let key = SegKey {
                    first,
                    last: nb.key.last,
                    short_len: None,
                };
                offer(key, v + nb.len - w as u64, ia, ib, s);
            }
        }

        let mut entries: Vec<(SegKey, (u64, u32, u32, u8))> = best.into_iter().collect();
        entries.sort_unstable_by_key(|e| e.0);
        let total = self.nodes.len() as u64 + entries.len() as u64;
        if total > self.cap {
            return Err(SolveError::CapExceeded {
                what: "doubling states",
                states: total,
                cap: self.cap,
            });
        }
        let mut table = Vec::with_capacity(entries.len());
        for (key, (len, left, right, shift)) in entries {
            table.push(self.nodes.len() as u32);
            self.nodes.push(Node {
                key,
                len,
                origin: Origin::Join { left, right, shift },
            });
        }
        Ok(table)
    }

    /// Boundary windows and length of `b` placed `s` cells into `a`'s last
    /// window.
    fn joined(&self, a: &Node, b: &Node, s: usize) -> (SegKey, u64) {
        let w = self.w as u64;
        let s = s as u64;
        let offset = a.len - w + s;
        let len = a.len + b.len - w + s;
        let mut first = a.key.first;
        if offset < w {
            first |= (b.key.first << offset) & self.full;
        }
        let drop = b.len - w + s;
        let mut last = b.key.last;
        if drop < w {
            last |= a.key.last >> drop;
        }
        let short_len = (len < 2 * w).then_some(len);
        (SegKey { first, last, short_len }, len)
    }

    fn collect_starts(&self, id: u32, base: usize, out: &mut Vec<usize>) {
        let node = self.nodes[id as usize];
        match node.origin {
            Origin::Tile => out.push(base),
            Origin::Join { left, right, shift } => {
                let left_len = self.nodes[left as usize].len as usize;
                self.collect_starts(left, base, out);
                self.collect_starts(right, base + left_len - self.w + shift as usize, out);
            }
        }
    }
}
