//! Acceptance checks, one `[PASS]`/`[FAIL]` line per criterion.
//!
//! Run with `cargo test --test acceptance`. The process exits non-zero if
//! any criterion fails.

use std::cell::Cell;
use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use tilepack::exact::{brute_force, disjoint_shifts, dp_doubling, dp_general, dp_single_type, BruteGuard, Limits};
use tilepack::generators::{
    clique_reduction, coupled_tasks, lower_bound, random, CliqueGraph, CoupledTask, RandomParams, YShape,
};
use tilepack::heuristics::{leftmost_fit, solve_greedy, OrderStrategy, DEFAULT_RESTARTS};
use tilepack::merge::{merge_set, PartialString};
use tilepack::{fits_at, insertion_offsets, Instance, Objective, Occupancy, Placement, Tile};
use tilepack_cli::bench::{run_bench, BenchFamily, BenchRow, BenchSpec};

const LIMIT_EXAMPLES: Duration = Duration::from_secs(1);
const LIMIT_TABLE: Duration = Duration::from_secs(10);
const LIMIT_ORACLE: Duration = Duration::from_secs(120);
const ORACLE_INSTANCES: u64 = 240;
const DOUBLING_TILES: u64 = 60;
const DOUBLING_MAX_N: usize = 64;
const PROPERTY_CASES: u32 = 1000;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    let e = t.elapsed();
    check(e < limit, || format!("took {e:?}, limit {limit:?}"))
}

fn example_instance() -> Instance {
    let tiles = ["#..#", "#.#", "#...#"].map(|p| Tile::parse(p).unwrap());
    Instance::new(tiles.to_vec(), Objective::MinLength).unwrap()
}

fn c1_examples() -> Outcome {
    let t = Instant::now();
    let lim = Limits::default();
    let inst = example_instance();
    let sol = dp_general(&inst, &lim).map_err(|e| e.to_string())?;
    check(sol.value == 6, || format!("example length {} != 6", sol.value))?;
    check(sol.placement.verify(&inst).is_ok(), || "witness does not verify".into())?;
    check(sol.placement.is_no_holes_certificate(), || "witness has holes".into())?;
    let matrix = Instance::from_matrix_rows(&["010010", "010100", "010001"]).map_err(|e| e.to_string())?;
    let shift = dp_general(&matrix, &lim).map_err(|e| e.to_string())?;
    check(shift.value == 2, || format!("matrix max shift {} != 2", shift.value))?;
    within(t, LIMIT_EXAMPLES)?;
    Ok(format!("length 6 (\"{}\"), max shift 2", sol.placement.render(&inst)))
}

fn c2_table() -> Outcome {
    let t = Instant::now();
    let fam = lower_bound(4).map_err(|e| e.to_string())?;
    let inst = &fam.instance;
    let queue: Vec<usize> = (0..inst.n()).collect();
    let greedy = leftmost_fit(inst, &queue).trimmed_len();
    check(greedy == 80, || format!("greedy length {greedy} != 80"))?;
    let opt = dp_general(inst, &Limits::default()).map_err(|e| e.to_string())?;
    let layout = fam.layout.expect("lower-bound family has a layout");
    let certified = layout.verify(inst).is_ok() && layout.is_no_holes_certificate();
    within(t, LIMIT_TABLE)?;
    check(opt.value == 35 && certified && layout.trimmed_len() == 35, || {
        format!(
            "greedy 80 ok; optimum is {} (dp), layout certified={} at length {}, {} numerals in total; expected 35",
            opt.value,
            certified,
            layout.trimmed_len(),
            inst.total_numerals()
        )
    })?;
    Ok("greedy 80, optimum 35".into())
}

fn c3_merge() -> Outcome {
    let a = PartialString::parse("aa*a*a");
    let b = PartialString::parse("b*b");
    let got: BTreeSet<(String, usize)> = merge_set(&a, &b)
        .into_iter()
        .map(|m| (m.merged.to_string(), m.shift))
        .collect();
    let want: BTreeSet<(String, usize)> = [("aababa", 2), ("aa*abab", 4), ("aa*a*ab*b", 6)]
        .into_iter()
        .map(|(s, k)| (s.to_string(), k))
        .collect();
    check(got == want, || format!("got {got:?}"))?;
    Ok("aababa@2, aa*abab@4, aa*a*ab*b@6".into())
}

const DENSITIES: [(f64, f64); 4] = [(0.0, 0.2), (0.2, 0.5), (0.5, 0.8), (0.8, 1.0)];

fn oracle_instance(seed: u64) -> Instance {
    let (lo, hi) = DENSITIES[(seed % 4) as usize];
    random(&RandomParams {
        seed,
        n: 1 + (seed / 4 % 5) as usize,
        min_len: 1,
        max_len: 6,
        min_density: lo,
        max_density: hi,
    })
    .expect("valid parameters")
}

fn exhaustive(inst: &Instance) -> Result<u64, String> {
    let shortest = inst.tiles().iter().map(Tile::len).min().unwrap();
    brute_force(inst, inst.total_length() - shortest, &BruteGuard::unlimited())
        .map(|s| s.value)
        .map_err(|e| e.to_string())
}

fn all_strategies(seed: u64) -> impl Iterator<Item = OrderStrategy> {
    OrderStrategy::DETERMINISTIC.into_iter().chain([OrderStrategy::Random {
        restarts: DEFAULT_RESTARTS,
        seed,
    }])
}

fn c4_oracle() -> Outcome {
    let t = Instant::now();
    for seed in 0..ORACLE_INSTANCES {
        let inst = oracle_instance(seed);
        let dp = dp_general(&inst, &Limits::default()).map_err(|e| e.to_string())?.value;
        let bf = exhaustive(&inst)?;
        check(dp == bf, || format!("seed {seed}: dp {dp} != brute force {bf}"))?;
        for s in all_strategies(seed) {
            let g = solve_greedy(&inst, s).trimmed_len() as u64;
            check(g >= dp, || {
                format!("seed {seed}: {} gives {g} < optimum {dp}", s.name())
            })?;
        }
    }
    within(t, LIMIT_ORACLE)?;
    Ok(format!(
        "{ORACLE_INSTANCES} instances, zero mismatches, {:?}",
        t.elapsed()
    ))
}

fn c5_doubling() -> Outcome {
    let lim = Limits::default();
    let mut tiles = Vec::new();
    for seed in 0..DOUBLING_TILES {
        let inst = oracle_instance(seed * 7 + 1);
        tiles.push(inst.tiles()[0].clone());
    }
    let mut checked = 0;
    for tile in &tiles {
        for n in 1..=DOUBLING_MAX_N {
            let d = dp_doubling(n, tile, Objective::MinLength, &lim).map_err(|e| e.to_string())?;
            let s = dp_single_type(n, tile, Objective::MinLength, &lim).map_err(|e| e.to_string())?;
            check(d.value == s.value, || {
                format!(
                    "tile {} n={n}: doubling {} != single {}",
                    tile.pattern(),
                    d.value,
                    s.value
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{} tiles x n in 1..={DOUBLING_MAX_N}, {checked} pairs agree",
        tiles.len()
    ))
}

fn c6_ratio() -> Outcome {
    let mut ratios = Vec::new();
    for delta in 4..=7 {
        let fam = lower_bound(delta).map_err(|e| e.to_string())?;
        let inst = &fam.instance;
        let layout = fam.layout.expect("layout");
        check(layout.verify(inst).is_ok() && layout.is_no_holes_certificate(), || {
            format!("delta {delta}: layout is not a certificate")
        })?;
        let queue: Vec<usize> = (0..inst.n()).collect();
        let greedy = leftmost_fit(inst, &queue).trimmed_len();
        ratios.push(greedy as f64 / layout.trimmed_len() as f64);
    }
    check(ratios.windows(2).all(|w| w[0] < w[1]), || format!("ratios {ratios:?}"))?;
    let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.3}")).collect();
    Ok(format!("ratios {}", shown.join(" < ")))
}

fn has_clique(v: usize, adj: &[Vec<bool>], k: usize) -> bool {
    (0u32..1 << v).filter(|m| m.count_ones() as usize == k).any(|m| {
        let vs: Vec<usize> = (0..v).filter(|&i| m >> i & 1 == 1).collect();
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| adj[a][b]))
    })
}

fn schedulable(tasks: &[CoupledTask], makespan: usize, busy: &mut Vec<(usize, usize)>) -> bool {
    let Some((t, rest)) = tasks.split_first() else {
        return true;
    };
    let total = t.a + t.gap + t.b;
    if total > makespan {
        return false;
    }
    for s in 0..=makespan - total {
        let ivs = [(s, s + t.a), (s + t.a + t.gap, s + total)];
        if ivs.iter().any(|&(a, b)| busy.iter().any(|&(c, d)| a < d && c < b)) {
            continue;
        }
        busy.extend(ivs);
        if schedulable(rest, makespan, busy) {
            return true;
        }
        busy.truncate(busy.len() - 2);
    }
    false
}

fn c7_reductions() -> Outcome {
    let mut graphs = 0;
    for v in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let mut adj = vec![vec![false; v]; v];
            for &(a, b) in &edges {
                adj[a][b] = true;
                adj[b][a] = true;
            }
            for k in 1..=v {
                let graph = CliqueGraph::new(v, edges.iter().copied(), k).map_err(|e| e.to_string())?;
                let red = clique_reduction(&graph, 1 << 22).map_err(|e| e.to_string())?;
                let yes = disjoint_shifts(&red.instance.tiles()[0], k, red.rho).is_some();
                let truth = has_clique(v, &adj, k);
                check(yes == truth, || {
                    format!("v={v} edges={edges:?} k={k}: reduction {yes}, graph {truth}")
                })?;
                graphs += 1;
            }
        }
    }
    let mut state = 0x9E3779B97F4A7C15u64;
    let mut next = |m: u64| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % m) as usize
    };
    let mut schedules = 0;
    for _ in 0..300 {
        let tasks: Vec<CoupledTask> = (0..1 + next(4))
            .map(|_| CoupledTask {
                a: 1 + next(2),
                b: 1 + next(2),
                gap: next(4),
            })
            .collect();
        let makespan = 2 + next(12);
        let inst = coupled_tasks(&tasks, makespan as u64).map_err(|e| e.to_string())?;
        let opt = brute_force(&inst, inst.total_length(), &BruteGuard::unlimited()).map_err(|e| e.to_string())?;
        let yes = opt.value <= makespan as u64;
        let truth = schedulable(&tasks, makespan, &mut Vec::new());
        check(yes == truth, || {
            format!("{tasks:?} makespan {makespan}: reduction {yes}, scheduler {truth}")
        })?;
        schedules += 1;
    }
    Ok(format!("{graphs} clique cases, {schedules} coupled-task cases"))
}

fn point_values(rows: &[BenchRow], c: usize) -> (Vec<(&'static str, u64)>, Vec<u64>) {
    let at: Vec<&BenchRow> = rows
        .iter()
        .filter(|r| r.point.c == Some(c) && r.value.is_some())
        .collect();
    let det = at
        .iter()
        .filter(|r| r.order != "random")
        .map(|r| (r.order, r.value.unwrap()))
        .collect();
    let rnd = at
        .iter()
        .filter(|r| r.order == "random")
        .map(|r| r.value.unwrap())
        .collect();
    (det, rnd)
}

fn c8_experiments() -> Outcome {
    let seeds: Vec<u64> = (0..5).collect();
    let cs = vec![2, 4, 6, 8, 10];

    let mut spec = BenchSpec::new(BenchFamily::Exp2);
    spec.c = cs.clone();
    spec.g = vec![3];
    spec.n = vec![8];
    spec.seeds = seeds.clone();
    spec.y_shape = YShape::Balanced;
    spec.timing = false;
    let rows = run_bench(&spec);
    let mut better_at = Vec::new();
    for &c in &cs {
        let (det, rnd) = point_values(&rows, c);
        check(det.len() == 5, || {
            format!("exp2 c={c}: {} deterministic rows", det.len())
        })?;
        check(det.iter().all(|d| d.1 == det[0].1), || {
            format!("exp2 c={c}: strategies differ {det:?}")
        })?;
        if rnd.iter().copied().min().is_some_and(|r| r < det[0].1) {
            better_at.push(c);
        }
    }
    check(!better_at.is_empty(), || {
        "exp2: random never beats the tied strategies".into()
    })?;

    let mut spec = BenchSpec::new(BenchFamily::Exp3);
    spec.c = cs.clone();
    spec.g = vec![3];
    spec.n = vec![12];
    spec.seeds = seeds;
    spec.timing = false;
    let rows = run_bench(&spec);
    let top = *cs.last().unwrap();
    let (det, rnd) = point_values(&rows, top);
    let best_random = rnd.iter().copied().min().ok_or("exp3: no random rows")?;
    let worst_det = det.iter().map(|d| d.1).max().ok_or("exp3: no deterministic rows")?;
    check(best_random > worst_det, || {
        format!("exp2 ok (random better at c={better_at:?}); exp3 c={top}: best random {best_random} vs deterministic {det:?}")
    })?;
    Ok(format!(
        "exp2 tied, random better at c={better_at:?}; exp3 c={top}: random {best_random} > {worst_det}"
    ))
}

fn tile_strategy(max_len: usize) -> impl Strategy<Value = Tile> {
    (1..=max_len, any::<u64>()).prop_map(|(len, bits)| {
        let nums = (0..len).filter(|&i| i == 0 || i + 1 == len || bits >> i & 1 == 1);
        Tile::new(len, nums).unwrap()
    })
}

fn instance_strategy(max_n: usize, max_len: usize) -> impl Strategy<Value = Instance> {
    vec(tile_strategy(max_len), 1..=max_n).prop_map(|t| Instance::new(t, Objective::MinLength).unwrap())
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<u32, String> {
    let mut runner = TestRunner::new(Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    });
    let runs = Cell::new(0u32);
    runner
        .run(&strategy, |v| {
            runs.set(runs.get() + 1);
            test(v)
        })
        .map_err(|e| format!("{name}: {e}"))?;
    check(runs.get() >= PROPERTY_CASES, || {
        format!("{name}: only {} cases ran", runs.get())
    })?;
    Ok(runs.get())
}

fn verified_value(inst: &Instance, p: &Placement) -> Result<u64, TestCaseError> {
    let free = inst.clone().with_bound(None);
    p.verify(&free).map_err(|v| TestCaseError::fail(format!("{v:?}")))?;
    Ok(p.metrics(inst).unwrap().value(inst.objective()))
}

fn c9_properties() -> Outcome {
    let mut counts = Vec::new();
    counts.push(run_property(
        "certificate",
        (instance_strategy(5, 6), any::<u64>()),
        |(inst, seed)| {
            let strat = OrderStrategy::Random { restarts: 1, seed };
            let p = solve_greedy(&inst, strat);
            prop_assert!(p.trimmed_len() >= inst.total_numerals());
            prop_assert_eq!(p.is_no_holes_certificate(), p.trimmed_len() == inst.total_numerals());
            Ok(())
        },
    )?);
    counts.push(run_property(
        "trim",
        (instance_strategy(5, 6), vec(0usize..20, 5)),
        |(inst, offs)| {
            let starts: Vec<usize> = offs.into_iter().take(inst.n()).collect();
            let p = Placement::new(&inst, starts);
            let once = p.trim();
            prop_assert_eq!(once.trim(), once.clone());
            prop_assert_eq!(once.trimmed_len(), p.trimmed_len());
            prop_assert_eq!(once.occupancy().min().unwrap_or(0), 0);
            Ok(())
        },
    )?);
    counts.push(run_property(
        "fits",
        (vec(any::<bool>(), 0..80), tile_strategy(12), 0usize..90),
        |(cells, tile, max_offset)| {
            let set: BTreeSet<usize> = (0..cells.len()).filter(|&i| cells[i]).collect();
            let occ = Occupancy::from_cells(set.iter().copied());
            let want: Vec<usize> = (0..=max_offset)
                .filter(|&s| tile.numerals().iter().all(|&o| !set.contains(&(s + o))))
                .collect();
            for s in 0..=max_offset {
                prop_assert_eq!(fits_at(&occ, &tile, s), want.contains(&s));
            }
            prop_assert_eq!(insertion_offsets(&occ, &tile, max_offset), want);
            Ok(())
        },
    )?);
    let lim = Limits::default();
    counts.push(run_property("witnesses", instance_strategy(4, 5), |inst| {
        for objective in [Objective::MinLength, Objective::MinMaxShift] {
            let inst = inst.clone().with_objective(objective);
            for s in all_strategies(7) {
                verified_value(&inst, &solve_greedy(&inst, s))?;
            }
            let dp = dp_general(&inst, &lim).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(verified_value(&inst, &dp.placement)?, dp.value);
            let shortest = inst.tiles().iter().map(Tile::len).min().unwrap();
            let cap = inst.total_length() - shortest;
            let bf =
                brute_force(&inst, cap, &BruteGuard::unlimited()).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(verified_value(&inst, &bf.placement)?, bf.value);
            prop_assert_eq!(bf.value, dp.value);

            let tile = inst.tiles()[0].clone();
            let copies = Instance::from_counts([(inst.n(), &tile)], objective).unwrap();
            for sol in [
                dp_single_type(inst.n(), &tile, objective, &lim),
                dp_doubling(inst.n(), &tile, objective, &lim),
            ] {
                let sol = sol.map_err(|e| TestCaseError::fail(e.to_string()))?;
                prop_assert_eq!(verified_value(&copies, &sol.placement)?, sol.value);
            }
        }
        Ok(())
    })?);
    Ok(format!("cases run per property {counts:?}"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "worked examples", c1_examples),
        (2, "lower-bound table", c2_table),
        (3, "merge operator", c3_merge),
        (4, "exact vs exhaustive oracle", c4_oracle),
        (5, "doubling vs single-type DP", c5_doubling),
        (6, "greedy ratio trend", c6_ratio),
        (7, "reduction soundness", c7_reductions),
        (8, "heuristic experiments", c8_experiments),
        (9, "invariant properties", c9_properties),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {id} {name}: {detail} ({secs:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {detail} ({secs:.2}s)");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
