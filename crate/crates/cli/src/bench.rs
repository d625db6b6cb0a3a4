//! Benchmark sweeps over the generated families, written as CSV.

use std::collections::BTreeMap;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use tilepack::exact::{dp_general, Limits};
use tilepack::generators::{exp2, exp3, lower_bound, ziegler_adversary, Family, YShape};
use tilepack::heuristics::{solve_greedy, OrderStrategy};
use tilepack::{GenError, Instance, Objective, Placement, SolveError};

pub const CSV_HEADER: [&str; 12] = [
    "family",
    "param_c",
    "param_g",
    "param_delta",
    "n",
    "algo",
    "order",
    "seed",
    "objective",
    "value",
    "runtime_ms",
    "status",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BenchFamily {
    Exp2,
    Exp3,
    LowerBound,
    Ziegler,
}

impl BenchFamily {
    pub fn name(self) -> &'static str {
        match self {
            BenchFamily::Exp2 => "exp2",
            BenchFamily::Exp3 => "exp3",
            BenchFamily::LowerBound => "lowerbound",
            BenchFamily::Ziegler => "ziegler",
        }
    }
}

impl FromStr for BenchFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exp2" => Ok(BenchFamily::Exp2),
            "exp3" => Ok(BenchFamily::Exp3),
            "lowerbound" => Ok(BenchFamily::LowerBound),
            "ziegler" => Ok(BenchFamily::Ziegler),
            _ => Err(format!("family `{s}` cannot be benchmarked")),
        }
    }
}

/// One sweep. `c`, `g` and `n` apply to the benchmark families, `delta` to
/// the lower-bound families; every combination is one point.
#[derive(Clone, Debug)]
pub struct BenchSpec {
    pub family: BenchFamily,
    pub c: Vec<usize>,
    pub g: Vec<usize>,
    pub n: Vec<usize>,
    pub delta: Vec<usize>,
    pub seeds: Vec<u64>,
    pub restarts: usize,
    pub y_shape: YShape,
    pub with_exact: bool,
    pub timing: bool,
    pub limits: Limits,
}

impl BenchSpec {
    pub fn new(family: BenchFamily) -> BenchSpec {
        BenchSpec {
            family,
            c: Vec::new(),
            g: Vec::new(),
            n: Vec::new(),
            delta: Vec::new(),
            seeds: vec![0],
            restarts: tilepack::heuristics::DEFAULT_RESTARTS,
            y_shape: YShape::Balanced,
            with_exact: false,
            timing: true,
            limits: Limits::default(),
        }
    }
}

/// Parameters of one sweep point; unused ones are `None`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub family: BenchFamily,
    pub c: Option<usize>,
    pub g: Option<usize>,
    pub delta: Option<usize>,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub point: Point,
    pub algo: &'static str,
    pub order: &'static str,
    pub seed: Option<u64>,
    pub objective: Objective,
    /// The objective recomputed from the verified witness.
    pub value: Option<u64>,
    pub runtime_ms: f64,
    pub status: String,
}

impl BenchRow {
    fn sort_key(&self) -> (Point, &'static str, &'static str, Option<u64>) {
        (self.point, self.algo, self.order, self.seed)
    }
}

fn points(spec: &BenchSpec) -> Vec<Point> {
    let family = spec.family;
    match family {
        BenchFamily::Exp2 | BenchFamily::Exp3 => {
            let mut out = Vec::new();
            for &c in &spec.c {
                for &g in &spec.g {
                    for &n in &spec.n {
                        out.push(Point {
                            family,
                            c: Some(c),
                            g: Some(g),
                            delta: None,
                            n,
                        });
                    }
                }
            }
            out
        }
        BenchFamily::LowerBound | BenchFamily::Ziegler => spec
            .delta
            .iter()
            .map(|&d| Point {
                family,
                c: None,
                g: None,
                delta: Some(d),
                n: match family {
                    BenchFamily::LowerBound => 2 * d - 1,
                    _ => 2 * d - 3,
                },
            })
            .collect(),
    }
}

fn generate(spec: &BenchSpec, p: &Point) -> Result<Family, GenError> {
    match p.family {
        BenchFamily::Exp2 => exp2(p.c.unwrap(), p.g.unwrap(), p.n, spec.y_shape),
        BenchFamily::Exp3 => exp3(p.c.unwrap(), p.g.unwrap(), p.n, spec.y_shape),
        BenchFamily::LowerBound => lower_bound(p.delta.unwrap()),
        BenchFamily::Ziegler => ziegler_adversary(p.delta.unwrap()),
    }
}

/// Runs every strategy on every point. Rows come back sorted by point,
/// algorithm, order and seed, so the output does not depend on run order.
pub fn run_bench(spec: &BenchSpec) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for point in points(spec) {
        let fam = match generate(spec, &point) {
            Ok(f) => f,
            Err(e) => {
                rows.push(BenchRow {
                    point,
                    algo: "gen",
                    order: "",
                    seed: None,
                    objective: Objective::MinLength,
                    value: None,
                    runtime_ms: 0.0,
                    status: format!("error: {e}"),
                });
                continue;
            }
        };
        let inst = &fam.instance;
        let mut push = |algo, order, seed, run: &dyn Fn() -> Result<Placement, SolveError>| {
            let t = Instant::now();
            let result = run();
            let runtime_ms = if spec.timing {
                t.elapsed().as_secs_f64() * 1e3
            } else {
                0.0
            };
            let (value, status) = match result {
                Ok(p) => checked_value(inst, &p),
                Err(SolveError::CapExceeded { .. }) => (None, "cap_exceeded".to_string()),
                Err(e) => (None, format!("error: {e}")),
            };
            rows.push(BenchRow {
                point,
                algo,
                order,
                seed,
                objective: inst.objective(),
                value,
                runtime_ms,
                status,
            });
        };
        for order in OrderStrategy::DETERMINISTIC {
            push("greedy", order.name(), None, &|| Ok(solve_greedy(inst, order)));
        }
        for &seed in &spec.seeds {
            let order = OrderStrategy::Random {
                restarts: spec.restarts,
                seed,
            };
            push("greedy", "random", Some(seed), &|| Ok(solve_greedy(inst, order)));
        }
        if spec.with_exact {
            push("dp", "", None, &|| dp_general(inst, &spec.limits).map(|s| s.placement));
        }
    }
    rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    rows
}

fn checked_value(inst: &Instance, p: &Placement) -> (Option<u64>, String) {
    match p.verify(&inst.clone().with_bound(None)) {
        Ok(()) => {
            let m = p.metrics(inst).expect("verified");
            (Some(m.value(inst.objective())), "ok".to_string())
        }
        Err(v) => (None, format!("invalid: {} violations", v.len())),
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.point.family.name().to_string(),
            opt(r.point.c),
            opt(r.point.g),
            opt(r.point.delta),
            r.point.n.to_string(),
            r.algo.to_string(),
            r.order.to_string(),
            opt(r.seed),
            r.objective.name().to_string(),
            opt(r.value),
            if r.runtime_ms == 0.0 {
                "0".to_string()
            } else {
                format!("{:.3}", r.runtime_ms)
            },
            r.status.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Per-point series for plotting: one row per deterministic order, the
/// exact optimum if present, and the minimum, mean and maximum over the
/// random seeds.
pub fn write_plot_data<W: Write>(rows: &[BenchRow], out: W) -> csv::Result<()> {
    let mut series: BTreeMap<Point, Vec<(String, String)>> = BTreeMap::new();
    let mut random: BTreeMap<Point, Vec<u64>> = BTreeMap::new();
    for r in rows {
        let Some(v) = r.value else { continue };
        if r.order == "random" {
            random.entry(r.point).or_default().push(v);
        } else {
            let name = if r.algo == "dp" { "dp" } else { r.order };
            series
                .entry(r.point)
                .or_default()
                .push((name.to_string(), v.to_string()));
        }
    }
    for (p, vals) in random {
        let s = series.entry(p).or_default();
        let mean = vals.iter().sum::<u64>() as f64 / vals.len() as f64;
        s.push(("random_min".into(), vals.iter().min().unwrap().to_string()));
        s.push(("random_mean".into(), format!("{mean:.3}")));
        s.push(("random_max".into(), vals.iter().max().unwrap().to_string()));
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["family", "param_c", "param_g", "param_delta", "n", "series", "value"])?;
    for (p, vals) in series {
        for (name, v) in vals {
            w.write_record([
                p.family.name().to_string(),
                opt(p.c),
                opt(p.g),
                opt(p.delta),
                p.n.to_string(),
                name,
                v,
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sweep_is_header_only() {
        let spec = BenchSpec::new(BenchFamily::Exp2);
        let rows = run_bench(&spec);
        assert!(rows.is_empty());
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "family,param_c,param_g,param_delta,n,algo,order,seed,objective,value,runtime_ms,status\n"
        );
    }

    #[test]
    fn bad_point_gets_a_status_row() {
        let mut spec = BenchSpec::new(BenchFamily::Exp2);
        spec.c = vec![2];
        spec.g = vec![3];
        spec.n = vec![3, 4];
        let rows = run_bench(&spec);
        assert_eq!(rows[0].algo, "gen");
        assert!(rows[0].status.starts_with("error"));
        assert_eq!(rows.len(), 1 + 5 + 1);
    }
}
