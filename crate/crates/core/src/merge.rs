//! The gap-free merge of a partial string with a tile, on labeled strings and
//! on occupancy windows.

use std::fmt;

/// A partial string: `None` is the wildcard, `Some(c)` a numeral symbol.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialString {
    cells: Vec<Option<char>>,
}

impl PartialString {
    /// Parses text where `*`, `.` and `⋆` are wildcards and every other
    /// character is a numeral.
    pub fn parse(text: &str) -> PartialString {
        PartialString {
            cells: text
                .chars()
                .map(|c| match c {
                    '*' | '.' | '⋆' => None,
                    c => Some(c),
                })
                .collect(),
        }
    }

    pub fn from_cells(cells: Vec<Option<char>>) -> PartialString {
        PartialString { cells }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Option<char>] {
        &self.cells
    }

    fn numeral(&self, i: usize) -> bool {
        matches!(self.cells.get(i), Some(Some(_)))
    }
}

impl fmt::Display for PartialString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cells {
            write!(f, "{}", c.unwrap_or('*'))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartialString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// One element of `A ⋈ B`: `B` superimposed on `A` starting at `shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Merge {
    pub merged: PartialString,
    pub shift: usize,
    /// Cells appended beyond the end of `A`.
    pub growth: usize,
}

/// All gap-free superpositions of `b` onto `a`, by ascending shift.
///
/// Shift `s` ranges over `0..=|a|` and qualifies when no cell holds a numeral
/// in both strings. `s = |a|` (plain concatenation) always qualifies, so the
/// result is never empty.
pub fn merge_set(a: &PartialString, b: &PartialString) -> Vec<Merge> {
    let la = a.len();
    let lb = b.len();
    (0..=la)
        .filter(|&s| (s..la).all(|i| !(a.numeral(i) && b.numeral(i - s))))
        .map(|s| {
            let len = la.max(lb + s);
            let cells = (0..len)
                .map(|i| {
                    if a.numeral(i) {
                        a.cells[i]
                    } else if i >= s && b.numeral(i - s) {
                        b.cells[i - s]
                    } else {
                        None
                    }
                })
                .collect();
            Merge {
                merged: PartialString { cells },
                shift: s,
                growth: len - la,
            }
        })
        .collect()
}

/// Occupancy of the last `width` cells of a placement that only grows to
/// the right. Bit `j` is cell `len - width + j`.
///
/// Cells left of the placement's first cell are stored as occupied: a new
/// tile never starts before an earlier one's window, and blocking them keeps
/// the accounting of the placement length exact while it is shorter than
/// the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuffixState {
    bits: u64,
    width: u8,
}

impl SuffixState {
    pub const MAX_WIDTH: usize = 63;

    /// The window of the empty placement.
    pub fn initial(width: usize) -> SuffixState {
        assert!(width <= Self::MAX_WIDTH, "window width {width} too large");
        SuffixState {
            bits: full(width),
            width: width as u8,
        }
    }

    pub fn from_bits(bits: u64, width: usize) -> SuffixState {
        assert!(width <= Self::MAX_WIDTH);
        SuffixState {
            bits: bits & full(width),
            width: width as u8,
        }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn width(self) -> usize {
        self.width as usize
    }

    /// Merges a tile (numeral mask, length) at every collision-free shift.
    ///
    /// Yields `(shift, successor, growth)` by ascending shift, where the
    /// tile's first cell lands on window cell `shift`.
    pub fn merges(self, tile_mask: u64, tile_len: usize) -> impl Iterator<Item = (usize, SuffixState, usize)> {
        let w = self.width();
        debug_assert!(tile_len <= w);
        let window = self.bits as u128;
        let tile = tile_mask as u128;
        (0..=w).filter_map(move |s| {
            let shifted = tile << s;
            if shifted & window != 0 {
                return None;
            }
            let growth = (tile_len + s).saturating_sub(w);
            let next = ((window | shifted) >> growth) as u64 & full(w);
            Some((
                s,
                SuffixState {
                    bits: next,
                    width: w as u8,
                },
                growth,
            ))
        })
    }
}

fn full(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}
