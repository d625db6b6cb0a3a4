use std::collections::{BTreeSet, HashSet};

use super::Pattern;
use crate::error::GenError;
use crate::instance::{Instance, Objective};
use crate::tile::Tile;

/// A task with two sub-tasks separated by an exact delay.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoupledTask {
    pub a: usize,
    pub b: usize,
    pub gap: usize,
}

/// One tile `#^a .^gap #^b` per task; the length bound is the makespan.
pub fn coupled_tasks(tasks: &[CoupledTask], makespan: u64) -> Result<Instance, GenError> {
    if tasks.is_empty() {
        return Err(GenError::InvalidParameter("no tasks".into()));
    }
    let mut tiles = Vec::with_capacity(tasks.len());
    for t in tasks {
        if t.a == 0 || t.b == 0 {
            return Err(GenError::InvalidParameter(format!(
                "sub-task lengths must be positive, got a={}, b={}",
                t.a, t.b
            )));
        }
        tiles.push(Pattern::new().nums(t.a).gap(t.gap).nums(t.b).tile());
    }
    Ok(Instance::new(tiles, Objective::MinLength)
        .expect("non-empty")
        .with_bound(Some(makespan)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueGraph {
    v: usize,
    edges: BTreeSet<(usize, usize)>,
    k: usize,
}

impl CliqueGraph {
    /// Edges are unordered; self-loops and out-of-range endpoints are rejected.
    pub fn new(v: usize, edges: impl IntoIterator<Item = (usize, usize)>, k: usize) -> Result<CliqueGraph, GenError> {
        if k == 0 || k > v {
            return Err(GenError::InvalidParameter(format!(
                "need 1 <= k <= v, got k={k}, v={v}"
            )));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b || a >= v || b >= v {
                return Err(GenError::InvalidParameter(format!("bad edge ({a}, {b}) for v={v}")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(CliqueGraph { v, edges: set, k })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }
}

/// The single-tile decision instance built from a graph, with the data
/// used to build it.
#[derive(Clone, Debug)]
pub struct CliqueReduction {
    pub instance: Instance,
    /// The shift bound `2^{3⌈log2 v⌉}`.
    pub rho: usize,
    /// Vertex labels with distinct pair sums and distinct triple sums.
    pub labels: Vec<u64>,
    /// `|b_i - b_j|` over the edges.
    pub edge_differences: BTreeSet<usize>,
}

/// The `size` smallest-first greedy elements of `[0, bound)` whose sums of
/// two and sums of three (with repetition) are all distinct.
pub fn sidon_set(size: usize, bound: u64) -> Result<Vec<u64>, GenError> {
    let mut set: Vec<u64> = Vec::with_capacity(size);
    let mut pairs: HashSet<u64> = HashSet::new();
    let mut triples: HashSet<u64> = HashSet::new();
    let mut cand = 0;
    while set.len() < size {
        if cand >= bound {
            return Err(GenError::SidonSearchFailed { size, bound });
        }
        let mut new_pairs = vec![2 * cand];
        new_pairs.extend(set.iter().map(|&b| b + cand));
        let mut new_triples = vec![3 * cand];
        for (i, &a) in set.iter().enumerate() {
            new_triples.push(a + 2 * cand);
            for &b in &set[i..] {
                new_triples.push(a + b + cand);
            }
        }
        let fresh = |sums: &[u64], seen: &HashSet<u64>| {
            let mut local = HashSet::new();
            sums.iter().all(|s| !seen.contains(s) && local.insert(*s))
        };
        if fresh(&new_pairs, &pairs) && fresh(&new_triples, &triples) {
            pairs.extend(new_pairs);
            triples.extend(new_triples);
            set.push(cand);
        }
        cand += 1;
    }
    Ok(set)
}

/// Builds `k` copies of one tile whose copies fit with all shifts at most
/// `ρ` iff the graph has a `k`-clique.
///
/// Vertex `i` gets label `b_i`. With `F` the edge label differences and
/// `F̄ = [1..ρ] \ F = {f̄_0 < ... < f̄_{μ-1}}`, the tile has numerals at
/// `2uρ` and `2uρ + f̄_u` for every `u < μ`. Copies at distance `d <= ρ`
/// collide exactly when `d` is in `F̄`, so pairwise distances must be edge
/// differences. Tiles are padded to `2ρμ`. `budget` bounds the tile length.
pub fn clique_reduction(graph: &CliqueGraph, budget: u64) -> Result<CliqueReduction, GenError> {
    let v = graph.v();
    let log = usize::BITS - (v - 1).leading_zeros();
    let rho = 1usize.checked_shl(3 * log).ok_or(GenError::BudgetExceeded {
        needed: u64::MAX,
        budget,
    })?;
    let labels = sidon_set(v, rho as u64)?;
    let edge_differences: BTreeSet<usize> = graph
        .edges()
        .map(|(a, b)| labels[a].abs_diff(labels[b]) as usize)
        .collect();
    let complement: Vec<usize> = (1..=rho).filter(|d| !edge_differences.contains(d)).collect();
    let mu = complement.len();
    let length = (2 * mu - 1) as u64 * rho as u64 + 1;
    if length > budget {
        return Err(GenError::BudgetExceeded { needed: length, budget });
    }
    let numerals = complement
        .iter()
        .enumerate()
        .flat_map(|(u, &f)| [2 * u * rho, 2 * u * rho + f]);
    let tile = Tile::new(length as usize, numerals).expect("largest complement element is rho");
    let instance = Instance::from_counts([(graph.k(), &tile)], Objective::MinMaxShift)
        .expect("k >= 1")
        .with_padded_length(2 * rho * mu)
        .expect("padding exceeds the tile")
        .with_bound(Some(rho as u64));
    Ok(CliqueReduction {
        instance,
        rho,
        labels,
        edge_differences,
    })
}

/// The gap gadget: each base tile `T` becomes `T ⋆^{δ+ρ-|T|} T`, and a guard
/// `G = # ⋆^ρ #^δ ⋆^ρ #` is appended. The bound is `|G| = 2ρ + δ + 2`.
///
/// The two copies inside each new tile sit exactly `δ + ρ` apart, the
/// distance between the two empty windows of `G`, so the new tiles fit
/// inside `G` iff the base tiles fit in a window of `ρ` cells.
pub fn inapprox_gadget(base: &Instance, delta: usize, rho: usize) -> Result<Instance, GenError> {
    if delta < base.max_tile_len() {
        return Err(GenError::InvalidParameter(format!(
            "delta must be at least the longest tile ({}), got {delta}",
            base.max_tile_len()
        )));
    }
    let mut tiles = Vec::with_capacity(base.n() + 1);
    for t in base.tiles() {
        let len = t.len();
        let numerals = t
            .numerals()
            .iter()
            .copied()
            .chain(t.numerals().iter().map(|&o| o + delta + rho));
        tiles.push(Tile::new(delta + rho + len, numerals).expect("copies are trimmed"));
    }
    tiles.push(Pattern::new().num().gap(rho).nums(delta).gap(rho).num().tile());
    Ok(Instance::new(tiles, Objective::MinLength)
        .expect("non-empty")
        .with_bound(Some((2 * rho + delta + 2) as u64)))
}
