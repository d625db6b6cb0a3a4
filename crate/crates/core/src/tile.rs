//! Tiles: trimmed partial strings with a single numeral symbol.
//!
//! A tile is written over the alphabet `#` (numeral) and `.` (wildcard), and
//! must start and end with a numeral. Offsets are 0-based.

use std::fmt;
use std::str::FromStr;

use crate::bitset::Occupancy;
use crate::error::TileError;

/// One row of the sparse matrix, trimmed to its first and last numeral.
#[derive(Clone)]
pub struct Tile {
    length: usize,
    numerals: Vec<usize>,
    cells: Occupancy,
    label: u32,
}

impl Tile {
    /// Builds a tile from its length and numeral offsets.
    pub fn new(length: usize, numerals: impl IntoIterator<Item = usize>) -> Result<Tile, TileError> {
        let mut numerals: Vec<usize> = numerals.into_iter().collect();
        numerals.sort_unstable();
        numerals.dedup();
        if length == 0 || numerals.is_empty() {
            return Err(TileError::EmptyInput);
        }
        if let Some(&bad) = numerals.iter().find(|&&o| o >= length) {
            return Err(TileError::OffsetOutOfRange { offset: bad, length });
        }
        if numerals[0] != 0 || *numerals.last().unwrap() != length - 1 {
            return Err(TileError::UntrimmedTile);
        }
        let cells = numerals.iter().copied().collect();
        Ok(Tile {
            length,
            numerals,
            cells,
            label: 0,
        })
    }

    /// Parses a `#`/`.` pattern such as `#..#`.
    pub fn parse(text: &str) -> Result<Tile, TileError> {
        if text.is_empty() {
            return Err(TileError::EmptyInput);
        }
        let mut numerals = Vec::new();
        let mut length = 0;
        for (pos, ch) in text.chars().enumerate() {
            match ch {
                '#' => numerals.push(pos),
                '.' => {}
                _ => return Err(TileError::BadCharacter { ch, pos }),
            }
            length = pos + 1;
        }
        if numerals.is_empty() {
            return Err(TileError::UntrimmedTile);
        }
        Tile::new(length, numerals)
    }

    /// A run of `length` numerals with no wildcards.
    pub fn solid(length: usize) -> Tile {
        Tile::new(length, 0..length).expect("solid tiles are trimmed")
    }

    pub fn len(&self) -> usize {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn numerals(&self) -> &[usize] {
        &self.numerals
    }

    pub fn numeral_count(&self) -> usize {
        self.numerals.len()
    }

    /// Numerals per cell.
    pub fn density(&self) -> f64 {
        self.numerals.len() as f64 / self.length as f64
    }

    pub fn cells(&self) -> &Occupancy {
        &self.cells
    }

    pub fn label(&self) -> u32 {
        self.label
    }

    pub fn with_label(mut self, label: u32) -> Tile {
        self.label = label;
        self
    }

    /// Two tiles share a type iff their lengths and numeral offsets agree.
    pub fn same_type(&self, other: &Tile) -> bool {
        self.length == other.length && self.numerals == other.numerals
    }

    /// The numeral offsets as a bit mask. Only valid for `len() <= 64`.
    pub fn mask(&self) -> u64 {
        debug_assert!(self.length <= 64);
        self.numerals.iter().fold(0, |m, &o| m | 1 << o)
    }

    pub fn pattern(&self) -> String {
        let mut s = vec!['.'; self.length];
        for &o in &self.numerals {
            s[o] = '#';
        }
        s.into_iter().collect()
    }
}

/// Equality ignores the label: it compares tile types.
impl PartialEq for Tile {
    fn eq(&self, other: &Tile) -> bool {
        self.same_type(other)
    }
}

impl Eq for Tile {}

impl fmt::Debug for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tile({}", self.pattern())?;
        if self.label != 0 {
            write!(f, " #{}", self.label)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pattern())
    }
}

impl FromStr for Tile {
    type Err = TileError;

    fn from_str(s: &str) -> Result<Tile, TileError> {
        Tile::parse(s)
    }
}

/// True iff `tile` placed at `start` collides with no occupied cell.
///
/// Cells at or beyond `occ.len()` are free: the placement grows as needed.
pub fn fits_at(occ: &Occupancy, tile: &Tile, start: usize) -> bool {
    tile.cells().disjoint_at(start, occ)
}

/// All offsets in `0..=max_offset` where `tile` fits, ascending.
pub fn insertion_offsets(occ: &Occupancy, tile: &Tile, max_offset: usize) -> Vec<usize> {
    (0..=max_offset).filter(|&s| fits_at(occ, tile, s)).collect()
}
