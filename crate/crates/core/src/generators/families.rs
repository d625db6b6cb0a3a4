use std::str::FromStr;

use super::Pattern;
use crate::bitset::Occupancy;
use crate::error::GenError;
use crate::heuristics::leftmost_fit;
use crate::instance::{Instance, Objective};
use crate::placement::Placement;
use crate::tile::Tile;

/// Measured size of one generated tile type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeShape {
    pub name: &'static str,
    pub length: usize,
    pub numerals: usize,
}

impl TypeShape {
    fn of(name: &'static str, tile: &Tile) -> TypeShape {
        TypeShape {
            name,
            length: tile.len(),
            numerals: tile.numeral_count(),
        }
    }
}

/// A generated instance, the measured shapes of its main tile types, and a
/// reference layout when the family comes with one.
#[derive(Clone, Debug)]
pub struct Family {
    pub instance: Instance,
    pub shapes: Vec<TypeShape>,
    pub layout: Option<Placement>,
}

fn invalid(msg: impl Into<String>) -> GenError {
    GenError::InvalidParameter(msg.into())
}

/// The greedy lower-bound family.
///
/// `X = (x⋆^{δ-2})^{δ+1} x` has period `δ-1`, length `δ²` and `δ+2`
/// numerals; `Y = (y⋆^{δ-1})^δ y` has period `δ`, length `δ²+1` and `δ+1`
/// numerals. There are `δ-1` copies of X and `δ` of Y, queued `Y,X,Y,...,Y`;
/// for `δ = 4` greedy on this queue needs 80 cells.
///
/// The layout stacks the Ys at offsets `0..δ` and the Xs right after them.
/// One copy per residue class fills every cell, so it has no holes and
/// length `2δ² + 2δ - 2`.
pub fn lower_bound(delta: usize) -> Result<Family, GenError> {
    if delta < 4 {
        return Err(invalid(format!("delta must be at least 4, got {delta}")));
    }
    let x = Pattern::new().periods(delta + 1, delta - 2).num().tile();
    let y = Pattern::new().periods(delta, delta - 1).num().tile();
    let mut tiles = Vec::with_capacity(2 * delta - 1);
    for i in 0..2 * delta - 1 {
        tiles.push(if i % 2 == 0 { y.clone() } else { x.clone() });
    }
    let instance = Instance::new(tiles, Objective::MinLength).expect("non-empty");

    let y_block = delta * (delta + 1);
    let mut starts = vec![0; instance.n()];
    for (k, &i) in instance.types()[0].occurrences.iter().enumerate() {
        starts[i] = k;
    }
    for (k, &i) in instance.types()[1].occurrences.iter().enumerate() {
        starts[i] = y_block + k;
    }
    let layout = Placement::new(&instance, starts);
    Ok(Family {
        shapes: vec![TypeShape::of("X", &x), TypeShape::of("Y", &y)],
        instance,
        layout: Some(layout),
    })
}

/// Tiles that make descending-numeral-count ordering alternate between the
/// two periods: `X_x = (x⋆^{δ-2})^{2x+1} x` for `x in 1..=δ-2` and
/// `Y_y = (y⋆^{δ-1})^{2y} y` for `y in 1..=δ-1`, queued
/// `Y_1, X_1, Y_2, X_2, ..., Y_{δ-1}`.
pub fn ziegler_adversary(delta: usize) -> Result<Family, GenError> {
    if delta < 4 {
        return Err(invalid(format!("delta must be at least 4, got {delta}")));
    }
    let mut tiles = Vec::new();
    let mut shapes = Vec::new();
    for i in 1..delta {
        let y = Pattern::new().periods(2 * i, delta - 1).num().tile();
        shapes.push(TypeShape::of("Y", &y));
        tiles.push(y);
        if i <= delta - 2 {
            let x = Pattern::new().periods(2 * i + 1, delta - 2).num().tile();
            shapes.push(TypeShape::of("X", &x));
            tiles.push(x);
        }
    }
    Ok(Family {
        instance: Instance::new(tiles, Objective::MinLength).expect("non-empty"),
        shapes,
        layout: None,
    })
}

/// Which `Y` tile the benchmark families use.
///
/// The literal shape `(y⋆^{g-1})^c y ⋆^c y` has length `c(g+1)+2` and
/// `c+2` numerals, one more of each than `X`. The balanced shape
/// `(y⋆^{g-1})^c ⋆^c y` drops the middle numeral and matches `X` in both.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum YShape {
    #[default]
    Balanced,
    Literal,
}

impl FromStr for YShape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "balanced" => Ok(YShape::Balanced),
            "literal" => Ok(YShape::Literal),
            _ => Err(format!("unknown Y shape `{s}`")),
        }
    }
}

fn xy_tiles(c: usize, g: usize, shape: YShape) -> (Tile, Tile) {
    let x = Pattern::new().periods(c, g).num().tile();
    let y = match shape {
        YShape::Balanced => Pattern::new().periods(c, g - 1).gap(c).num().tile(),
        YShape::Literal => Pattern::new().periods(c, g - 1).num().gap(c).num().tile(),
    };
    (x, y)
}

/// `n` tiles queued `X, Y, X, Y, ...` with `X = (x⋆^g)^c x`.
pub fn exp2(c: usize, g: usize, n: usize, shape: YShape) -> Result<Family, GenError> {
    if c < 2 || g < 2 {
        return Err(invalid(format!("need c >= 2 and g >= 2, got c={c}, g={g}")));
    }
    if n < 2 || !n.is_multiple_of(2) {
        return Err(invalid(format!("n must be even and positive, got {n}")));
    }
    let (x, y) = xy_tiles(c, g, shape);
    let tiles = (0..n).map(|i| if i % 2 == 0 { x.clone() } else { y.clone() }).collect();
    Ok(Family {
        instance: Instance::new(tiles, Objective::MinLength).expect("non-empty"),
        shapes: vec![TypeShape::of("X", &x), TypeShape::of("Y", &y)],
        layout: None,
    })
}

/// `n` tiles queued `X, Y, Z, X, Y, Z, ...` with
/// `Z = z⋆^{c(g-2)} z (⋆^{2g})^c z`, followed by solid filler tiles.
///
/// The fillers come from a leftmost-fit run over the grouped order (all X,
/// then all Y, then all Z): each maximal run of empty cells inside it gets
/// one solid tile of exactly its length. The grouped run plus the fillers is
/// returned as the layout; it has no holes, so it is optimal.
pub fn exp3(c: usize, g: usize, n: usize, shape: YShape) -> Result<Family, GenError> {
    if c < 2 || g < 3 {
        return Err(invalid(format!("need c >= 2 and g >= 3, got c={c}, g={g}")));
    }
    if n < 3 || !n.is_multiple_of(3) {
        return Err(invalid(format!("n must be a positive multiple of 3, got {n}")));
    }
    let (x, y) = xy_tiles(c, g, shape);
    let z = Pattern::new().num().gap(c * (g - 2)).num().gap(2 * g * c).num().tile();
    let body: Vec<Tile> = (0..n)
        .map(|i| match i % 3 {
            0 => x.clone(),
            1 => y.clone(),
            _ => z.clone(),
        })
        .collect();
    let base = Instance::new(body.clone(), Objective::MinLength).expect("non-empty");
    let grouped: Vec<usize> = base
        .types()
        .iter()
        .flat_map(|t| t.occurrences.iter().copied())
        .collect();
    let run = leftmost_fit(&base, &grouped);

    let mut tiles = body;
    let mut starts = run.starts().to_vec();
    for (start, len) in hole_runs(run.occupancy(), run.raw_len()) {
        tiles.push(Tile::solid(len));
        starts.push(start);
    }
    let instance = Instance::new(tiles, Objective::MinLength).expect("non-empty");
    let layout = Placement::new(&instance, starts);
    debug_assert!(layout.is_no_holes_certificate());
    Ok(Family {
        instance,
        shapes: vec![TypeShape::of("X", &x), TypeShape::of("Y", &y), TypeShape::of("Z", &z)],
        layout: Some(layout),
    })
}

/// Maximal runs of empty cells in `0..len`, as `(start, length)`.
fn hole_runs(occ: &Occupancy, len: usize) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut open: Option<usize> = None;
    for cell in 0..=len {
        let empty = cell < len && !occ.contains(cell);
        match (empty, open) {
            (true, None) => open = Some(cell),
            (false, Some(s)) => {
                runs.push((s, cell - s));
                open = None;
            }
            _ => {}
        }
    }
    runs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heuristics::{solve_greedy, OrderStrategy};

    #[test]
    fn lower_bound_four_matches_the_table() {
        let fam = lower_bound(4).unwrap();
        let inst = &fam.instance;
        assert_eq!(inst.n(), 7);
        let y = "#...#...#...#...#";
        let x = "#..#..#..#..#..#";
        for (i, t) in inst.tiles().iter().enumerate() {
            assert_eq!(t.pattern(), if i % 2 == 0 { y } else { x });
        }
        let greedy = solve_greedy(inst, OrderStrategy::None);
        assert_eq!(greedy.trimmed_len(), 80);
        let layout = fam.layout.unwrap();
        assert_eq!(layout.verify(inst), Ok(()));
        assert!(layout.is_no_holes_certificate());
        assert_eq!(layout.trimmed_len(), 38);
        assert_eq!(inst.total_numerals(), 38);
    }

    #[test]
    fn ziegler_order_alternates() {
        let fam = ziegler_adversary(4).unwrap();
        let inst = &fam.instance;
        let counts: Vec<usize> = OrderStrategy::DecFreq
            .order(inst)
            .iter()
            .map(|&i| inst.tiles()[i].numeral_count())
            .collect();
        assert_eq!(counts, vec![7, 6, 5, 4, 3]);
        let names: Vec<&str> = fam.shapes.iter().map(|s| s.name).collect();
        assert_eq!(names, vec!["Y", "X", "Y", "X", "Y"]);
        assert_eq!(inst.tiles()[1].len(), 10);
    }

    #[test]
    fn exp2_shapes() {
        let fam = exp2(2, 2, 4, YShape::Literal).unwrap();
        assert_eq!(fam.instance.tiles()[0].pattern(), "#..#..#");
        assert_eq!(fam.instance.tiles()[1].pattern(), "#.#.#..#");
        let fam = exp2(2, 2, 4, YShape::Balanced).unwrap();
        assert_eq!(fam.instance.tiles()[1].pattern(), "#.#...#");
        assert_eq!(fam.shapes[0].length, fam.shapes[1].length);
        assert_eq!(fam.shapes[0].numerals, fam.shapes[1].numerals);
        assert!(exp2(2, 2, 3, YShape::Balanced).is_err());
    }

    #[test]
    fn exp3_layout_is_certified() {
        for (c, g) in [(2, 3), (3, 3), (4, 4)] {
            let fam = exp3(c, g, 6, YShape::Balanced).unwrap();
            let layout = fam.layout.unwrap();
            assert_eq!(layout.verify(&fam.instance), Ok(()));
            assert!(layout.is_no_holes_certificate());
            assert_eq!(fam.shapes[2].numerals, 3);
            assert_eq!(fam.shapes[2].length, 3 * g * c - 2 * c + 3);
        }
    }
}
