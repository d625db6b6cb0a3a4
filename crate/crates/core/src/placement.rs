//! Placements: per-occurrence start offsets and the cells they cover.

use std::fmt;

use crate::bitset::Occupancy;
use crate::error::{ParseError, ParseErrorKind};
use crate::instance::{Instance, Objective};

/// Start offsets of every tile occurrence (in the instance's queue order),
/// plus the union of the cells they cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Placement {
    starts: Vec<usize>,
    occupancy: Occupancy,
    length: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Metrics {
    /// Length after removing leading and trailing empty cells.
    pub trimmed_length: usize,
    /// Largest start relative to the earliest start.
    pub max_shift: usize,
    /// One past the last covered cell, in untrimmed coordinates.
    pub max_end: usize,
    /// Empty cells strictly inside the trimmed span.
    pub hole_count: usize,
}

impl Metrics {
    pub fn value(&self, objective: Objective) -> u64 {
        match objective {
            Objective::MinLength => self.trimmed_length as u64,
            Objective::MinMaxShift => self.max_shift as u64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    Length,
    MaxShift,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Two occurrences put a numeral on the same cell.
    Collision {
        cell: usize,
        first: usize,
        second: usize,
    },
    MissingTile {
        tile_type: usize,
        occurrence: usize,
    },
    /// More starts than tile occurrences.
    ExtraStart {
        index: usize,
    },
    BoundExceeded {
        metric: Metric,
        value: u64,
        bound: u64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Collision { cell, first, second } => {
                write!(f, "Collision({cell}) between tiles {} and {}", first + 1, second + 1)
            }
            Violation::MissingTile { tile_type, occurrence } => {
                write!(f, "MissingTile(type {tile_type}, tile {})", occurrence + 1)
            }
            Violation::ExtraStart { index } => write!(f, "ExtraStart({})", index + 1),
            Violation::BoundExceeded { metric, value, bound } => {
                let m = match metric {
                    Metric::Length => "length",
                    Metric::MaxShift => "max_shift",
                };
                write!(f, "BoundExceeded({m}={value} > {bound})")
            }
        }
    }
}

impl Placement {
    /// Lays out the occurrences of `inst` at the given starts.
    ///
    /// Collisions and missing tiles are allowed here; [`Placement::verify`]
    /// reports them. Starts beyond the number of occurrences are kept but
    /// cover no cells.
    pub fn new(inst: &Instance, starts: Vec<usize>) -> Placement {
        let mut occupancy = Occupancy::new();
        let mut length = 0;
        for (tile, &s) in inst.tiles().iter().zip(&starts) {
            tile.cells().or_into_at(s, &mut occupancy);
            length = length.max(s + tile.len());
        }
        Placement {
            starts,
            occupancy,
            length,
        }
    }

    pub fn empty() -> Placement {
        Placement {
            starts: Vec::new(),
            occupancy: Occupancy::new(),
            length: 0,
        }
    }

    pub fn starts(&self) -> &[usize] {
        &self.starts
    }

    pub fn occupancy(&self) -> &Occupancy {
        &self.occupancy
    }

    /// Untrimmed length: one past the furthest tile end.
    pub fn raw_len(&self) -> usize {
        self.length
    }

    /// Removes leading empty cells by moving every start left uniformly.
    ///
    /// Tiles end with a numeral, so there are never trailing empty cells.
    pub fn trim(&self) -> Placement {
        let Some(lead) = self.occupancy.min() else {
            return Placement::empty();
        };
        if lead == 0 {
            return self.clone();
        }
        Placement {
            starts: self.starts.iter().map(|&s| s - lead).collect(),
            occupancy: self.occupancy.iter().map(|c| c - lead).collect(),
            length: self.length - lead,
        }
    }

    pub fn trimmed_len(&self) -> usize {
        match (self.occupancy.min(), self.occupancy.max()) {
            (Some(lo), Some(hi)) => hi - lo + 1,
            _ => 0,
        }
    }

    pub fn hole_count(&self) -> usize {
        self.trimmed_len() - self.occupancy.count()
    }

    /// True iff the trimmed placement has no empty cell. A valid placement
    /// without holes is optimal for the length objective.
    pub fn is_no_holes_certificate(&self) -> bool {
        !self.occupancy.is_empty() && self.hole_count() == 0
    }

    /// Checks the placement against `inst`, including the decision bound.
    pub fn verify(&self, inst: &Instance) -> Result<(), Vec<Violation>> {
        let mut violations = self.structural_violations(inst);
        if violations.is_empty() {
            if let Some(bound) = inst.bound() {
                let (metric, value) = match inst.objective() {
                    Objective::MinLength => (Metric::Length, self.trimmed_len() as u64),
                    Objective::MinMaxShift => (Metric::MaxShift, self.max_shift() as u64),
                };
                if value > bound {
                    violations.push(Violation::BoundExceeded { metric, value, bound });
                }
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    fn structural_violations(&self, inst: &Instance) -> Vec<Violation> {
        let mut violations = Vec::new();
        let n = inst.n();
        for i in self.starts.len()..n {
            violations.push(Violation::MissingTile {
                tile_type: inst.type_of(i),
                occurrence: i,
            });
        }
        for index in n..self.starts.len() {
            violations.push(Violation::ExtraStart { index });
        }
        let mut owner = vec![u32::MAX; self.length];
        for (i, (tile, &s)) in inst.tiles().iter().zip(&self.starts).enumerate() {
            for &o in tile.numerals() {
                let cell = s + o;
                if owner[cell] == u32::MAX {
                    owner[cell] = i as u32;
                } else {
                    violations.push(Violation::Collision {
                        cell,
                        first: owner[cell] as usize,
                        second: i,
                    });
                }
            }
        }
        violations
    }

    fn max_shift(&self) -> usize {
        let lo = self.starts.iter().min().copied().unwrap_or(0);
        let hi = self.starts.iter().max().copied().unwrap_or(0);
        hi - lo
    }

    /// Objective metrics; fails when the placement is structurally invalid.
    pub fn metrics(&self, inst: &Instance) -> Result<Metrics, Vec<Violation>> {
        let v = self.structural_violations(inst);
        if !v.is_empty() {
            return Err(v);
        }
        Ok(Metrics {
            trimmed_length: self.trimmed_len(),
            max_shift: self.max_shift(),
            max_end: self.length,
            hole_count: self.hole_count(),
        })
    }

    /// Renders occupied cells by owner label (`1`-`9`, then `a`-`z`,
    /// `A`-`Z`, cycling) and empty cells as `.`.
    pub fn render(&self, inst: &Instance) -> String {
        let mut cells = vec!['.'; self.length];
        for (tile, &s) in inst.tiles().iter().zip(&self.starts) {
            let sym = label_symbol(tile.label());
            for &o in tile.numerals() {
                cells[s + o] = sym;
            }
        }
        cells.into_iter().collect()
    }

    /// Placement file body: one `start=` line per occurrence, then the
    /// rendered string.
    pub fn to_text(&self, inst: &Instance) -> String {
        let mut out = String::new();
        for s in &self.starts {
            out.push_str(&format!("start={s}\n"));
        }
        out.push_str(&format!("rendered={}\n", self.render(inst)));
        out
    }

    /// Reads the `start=` lines of a placement file; other keys are ignored.
    pub fn parse_starts(text: &str) -> Result<Vec<usize>, ParseError> {
        let mut starts = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split(';').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || ParseError::new(idx + 1, ParseErrorKind::BadStart(line.to_string()));
            let (key, value) = line.split_once('=').ok_or_else(bad)?;
            match key.trim() {
                "start" => starts.push(value.trim().parse().map_err(|_| bad())?),
                "rendered" => {}
                _ => return Err(bad()),
            }
        }
        Ok(starts)
    }
}

fn label_symbol(label: u32) -> char {
    const SYMBOLS: &[u8] = b"123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    if label == 0 {
        return '#';
    }
    SYMBOLS[(label as usize - 1) % SYMBOLS.len()] as char
}
