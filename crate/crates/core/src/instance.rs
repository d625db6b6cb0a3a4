//! Problem instances and their line-based text format.
//!
//! ```text
//! ; comments start with a semicolon
//! objective=minlength bound=6
//! 1 #..#
//! 1 #.#
//! 1 #...#
//! ```
//!
//! Each `<count> <pattern>` line contributes `count` consecutive tile
//! occurrences; the resulting occurrence order is the queue used by the
//! unsorted greedy strategy. Labels `1..=n` follow that order.

use std::fmt;
use std::str::FromStr;

use crate::error::{ParseError, ParseErrorKind, TileError};
use crate::tile::Tile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Objective {
    /// Minimize the trimmed placement length.
    MinLength,
    /// Minimize the largest start offset (tiles right-padded to a common width).
    MinMaxShift,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::MinLength => "minlength",
            Objective::MinMaxShift => "minmaxshift",
        }
    }
}

impl FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "minlength" | "length" => Ok(Objective::MinLength),
            "minmaxshift" | "maxshift" => Ok(Objective::MinMaxShift),
            _ => Err(format!("unknown objective `{s}`")),
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A tile shape together with its multiplicity in an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileType {
    pub shape: Tile,
    pub count: usize,
    /// Indices of the occurrences of this type, in queue order.
    pub occurrences: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    tiles: Vec<Tile>,
    types: Vec<TileType>,
    type_of: Vec<usize>,
    objective: Objective,
    bound: Option<u64>,
    padded_length: Option<usize>,
}

impl Instance {
    /// Builds an instance from tile occurrences in queue order.
    pub fn new(tiles: Vec<Tile>, objective: Objective) -> Result<Instance, ParseErrorKind> {
        if tiles.is_empty() {
            return Err(ParseErrorKind::NoTiles);
        }
        let tiles: Vec<Tile> = tiles
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.with_label(i as u32 + 1))
            .collect();
        let mut types: Vec<TileType> = Vec::new();
        let mut type_of = Vec::with_capacity(tiles.len());
        for (i, t) in tiles.iter().enumerate() {
            let k = match types.iter().position(|ty| ty.shape.same_type(t)) {
                Some(k) => k,
                None => {
                    types.push(TileType {
                        shape: t.clone().with_label(0),
                        count: 0,
                        occurrences: Vec::new(),
                    });
                    types.len() - 1
                }
            };
            types[k].count += 1;
            types[k].occurrences.push(i);
            type_of.push(k);
        }
        Ok(Instance {
            tiles,
            types,
            type_of,
            objective,
            bound: None,
            padded_length: None,
        })
    }

    /// Builds an instance from `(count, shape)` runs.
    pub fn from_counts<'a>(
        runs: impl IntoIterator<Item = (usize, &'a Tile)>,
        objective: Objective,
    ) -> Result<Instance, ParseErrorKind> {
        let tiles = runs
            .into_iter()
            .flat_map(|(c, t)| std::iter::repeat_n(t.clone(), c))
            .collect();
        Instance::new(tiles, objective)
    }

    /// Reads matrix rows as right-padded strings for the max-shift objective.
    ///
    /// `0`, `.`, `*` and `⋆` are zeros; any other character is a one. A
    /// leading run of all-zero columns is dropped (it does not change the
    /// shift problem); rows that still begin with a zero are rejected because
    /// tiles are trimmed.
    pub fn from_matrix_rows(rows: &[&str]) -> Result<Instance, ParseErrorKind> {
        let is_zero = |c: char| matches!(c, '0' | '.' | '*' | '⋆');
        let parsed: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| r.chars().filter(|c| !c.is_whitespace()).map(|c| !is_zero(c)).collect())
            .collect();
        let width = parsed.iter().map(Vec::len).max().unwrap_or(0);
        let lead = parsed
            .iter()
            .map(|r| r.iter().position(|&b| b).unwrap_or(usize::MAX))
            .min()
            .unwrap_or(0);
        let mut tiles = Vec::with_capacity(parsed.len());
        for r in &parsed {
            let Some(first) = r.iter().position(|&b| b) else {
                return Err(TileError::EmptyInput.into());
            };
            if first != lead {
                return Err(TileError::UntrimmedTile.into());
            }
            let last = r.iter().rposition(|&b| b).unwrap();
            let numerals = (first..=last).filter(|&i| r[i]).map(|i| i - lead);
            tiles.push(Tile::new(last - lead + 1, numerals)?);
        }
        Instance::new(tiles, Objective::MinMaxShift)?.with_padded_length(width - lead)
    }

    pub fn with_bound(mut self, bound: Option<u64>) -> Instance {
        self.bound = bound;
        self
    }

    pub fn with_padded_length(mut self, padded: usize) -> Result<Instance, ParseErrorKind> {
        let longest = self.max_tile_len();
        if longest > padded {
            return Err(ParseErrorKind::TileTooLong {
                length: longest,
                padded,
            });
        }
        self.padded_length = Some(padded);
        Ok(self)
    }

    pub fn with_objective(mut self, objective: Objective) -> Instance {
        self.objective = objective;
        self
    }

    /// Tile occurrences in queue order.
    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn types(&self) -> &[TileType] {
        &self.types
    }

    /// Type index of occurrence `i`.
    pub fn type_of(&self, i: usize) -> usize {
        self.type_of[i]
    }

    pub fn objective(&self) -> Objective {
        self.objective
    }

    pub fn bound(&self) -> Option<u64> {
        self.bound
    }

    /// The common row width for the max-shift objective; defaults to the
    /// longest tile when not given.
    pub fn padded_length(&self) -> usize {
        self.padded_length.unwrap_or_else(|| self.max_tile_len())
    }

    pub fn n(&self) -> usize {
        self.tiles.len()
    }

    pub fn max_tile_len(&self) -> usize {
        self.tiles.iter().map(Tile::len).max().unwrap_or(0)
    }

    pub fn total_numerals(&self) -> usize {
        self.tiles.iter().map(Tile::numeral_count).sum()
    }

    /// Sum of all tile lengths: every gap-free placement fits in this span.
    pub fn total_length(&self) -> usize {
        self.tiles.iter().map(Tile::len).sum()
    }

    pub fn parse(text: &str) -> Result<Instance, ParseError> {
        let mut header: Option<(Objective, Option<u64>, Option<usize>)> = None;
        let mut tiles = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split(';').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            last_line = line_no;
            if header.is_none() {
                header = Some(parse_header(line).map_err(|k| ParseError::new(line_no, k))?);
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(count), Some(pattern), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(ParseError::new(line_no, ParseErrorKind::BadTileLine(line.into())));
            };
            let count: usize = count
                .parse()
                .map_err(|_| ParseError::new(line_no, ParseErrorKind::BadTileLine(line.into())))?;
            let tile = Tile::parse(pattern).map_err(|e| ParseError::new(line_no, e))?;
            tiles.extend(std::iter::repeat_n(tile, count));
        }
        let Some((objective, bound, padded)) = header else {
            return Err(ParseError::new(0, ParseErrorKind::MissingHeader));
        };
        let mut inst = Instance::new(tiles, objective)
            .map_err(|k| ParseError::new(last_line, k))?
            .with_bound(bound);
        if let Some(p) = padded {
            inst = inst.with_padded_length(p).map_err(|k| ParseError::new(last_line, k))?;
        }
        Ok(inst)
    }

    /// Canonical text form; consecutive occurrences of one type share a line.
    pub fn to_text(&self) -> String {
        let mut out = format!("objective={}", self.objective.name());
        if let Some(b) = self.bound {
            out.push_str(&format!(" bound={b}"));
        }
        if let Some(p) = self.padded_length {
            out.push_str(&format!(" padded={p}"));
        }
        out.push('\n');
        let mut i = 0;
        while i < self.tiles.len() {
            let mut j = i + 1;
            while j < self.tiles.len() && self.type_of[j] == self.type_of[i] {
                j += 1;
            }
            out.push_str(&format!("{} {}\n", j - i, self.tiles[i].pattern()));
            i = j;
        }
        out
    }
}

fn parse_header(line: &str) -> Result<(Objective, Option<u64>, Option<usize>), ParseErrorKind> {
    let mut objective = None;
    let mut bound = None;
    let mut padded = None;
    for field in line.split_whitespace() {
        let bad = || ParseErrorKind::BadHeader(field.to_string());
        let (key, value) = field.split_once('=').ok_or_else(bad)?;
        match key {
            "objective" => objective = Some(value.parse().map_err(|_| bad())?),
            "bound" => bound = Some(value.parse().map_err(|_| bad())?),
            "padded" => padded = Some(value.parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        }
    }
    let objective = objective.ok_or(ParseErrorKind::MissingHeader)?;
    Ok((objective, bound, padded))
}

impl FromStr for Instance {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Instance::parse(s)
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "; three rows\nobjective=minlength\n1 #..#\n1 #.#\n1 #...#\n";

    #[test]
    fn parses_example_file() {
        let inst = Instance::parse(EXAMPLE).unwrap();
        assert_eq!(inst.n(), 3);
        assert_eq!(inst.types().len(), 3);
        assert_eq!(inst.tiles()[1].label(), 2);
        assert_eq!(inst.total_numerals(), 6);
        assert_eq!(inst.objective(), Objective::MinLength);
    }

    #[test]
    fn groups_types_across_lines() {
        let inst = Instance::parse("objective=minlength\n1 #.#\n2 ##\n1 #.#\n").unwrap();
        assert_eq!(inst.types().len(), 2);
        assert_eq!(inst.types()[0].count, 2);
        assert_eq!(inst.types()[0].occurrences, vec![0, 3]);
        assert_eq!(inst.to_text(), "objective=minlength\n1 #.#\n2 ##\n1 #.#\n");
    }

    #[test]
    fn header_fields() {
        let inst = Instance::parse("objective=minmaxshift bound=2 padded=6\n1 #..#\n").unwrap();
        assert_eq!(inst.bound(), Some(2));
        assert_eq!(inst.padded_length(), 6);
        assert_eq!(inst.to_text(), "objective=minmaxshift bound=2 padded=6\n1 #..#\n");
    }

    #[test]
    fn errors_name_the_line() {
        let err = Instance::parse("objective=minlength\n1 #..#\n2 .#\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.kind, ParseErrorKind::Tile(TileError::UntrimmedTile));
        let err = Instance::parse("objective=minlength\nthree #\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(
            Instance::parse("1 #\n").unwrap_err().kind,
            ParseErrorKind::BadHeader(_)
        ));
        assert_eq!(
            Instance::parse("objective=minlength\n").unwrap_err().kind,
            ParseErrorKind::NoTiles
        );
        assert!(matches!(
            Instance::parse("objective=minmaxshift padded=2\n1 #..#\n")
                .unwrap_err()
                .kind,
            ParseErrorKind::TileTooLong { .. }
        ));
    }

    #[test]
    fn matrix_rows_drop_common_lead() {
        let inst = Instance::from_matrix_rows(&["*1**1*", "*2*2**", "*3***3"]).unwrap();
        let pats: Vec<String> = inst.tiles().iter().map(Tile::pattern).collect();
        assert_eq!(pats, ["#..#", "#.#", "#...#"]);
        assert_eq!(inst.padded_length(), 5);
        assert_eq!(inst.objective(), Objective::MinMaxShift);
        assert!(Instance::from_matrix_rows(&["1*1", "*11"]).is_err());
    }
}
