use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use tilepack::exact::{brute_force, dp_doubling, dp_general, dp_single_type, BruteGuard, Limits, Solution};
use tilepack::generators::{
    clique_reduction, coupled_tasks, exp2, exp3, inapprox_gadget, lower_bound, random, ziegler_adversary, CliqueGraph,
    CoupledTask, Family, RandomParams,
};
use tilepack::heuristics::solve_greedy;
use tilepack::{Instance, Objective, Placement, SolveError};

use crate::args::{Algo, BenchArgs, GenArgs, GenFamily, ObjectiveArg, SolveArgs, VerifyArgs};
use crate::bench::{run_bench, write_csv, write_plot_data, BenchSpec};
use crate::error::CliError;
use crate::sweep::parse_list;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn stdout_err(source: std::io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

pub fn load_instance(path: &Path) -> Result<Instance, CliError> {
    Instance::parse(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn limits(state_cap: Option<u64>) -> Limits {
    let limits = Limits::from_env();
    match state_cap {
        Some(cap) => limits.with_state_cap(cap),
        None => limits,
    }
}

fn single_type(inst: &Instance) -> Result<&tilepack::Tile, CliError> {
    if inst.types().len() != 1 {
        return Err(SolveError::Unsupported("a single tile type").into());
    }
    Ok(&inst.tiles()[0])
}

pub fn solve(args: &SolveArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let mut inst = load_instance(&args.instance)?;
    match args.objective {
        Some(ObjectiveArg::Length) => inst = inst.with_objective(Objective::MinLength),
        Some(ObjectiveArg::Maxshift) => inst = inst.with_objective(Objective::MinMaxShift),
        None => {}
    }
    let limits = limits(args.state_cap);
    let solution: Option<Solution> = match args.algo {
        Algo::Greedy => None,
        Algo::Dp => Some(dp_general(&inst, &limits)?),
        Algo::Dp1 => Some(dp_single_type(
            inst.n(),
            single_type(&inst)?,
            inst.objective(),
            &limits,
        )?),
        Algo::Doubling => Some(dp_doubling(inst.n(), single_type(&inst)?, inst.objective(), &limits)?),
        Algo::Brute => {
            let cap = args.offset_cap.unwrap_or_else(|| {
                let shortest = inst.tiles().iter().map(|t| t.len()).min().unwrap_or(0);
                inst.total_length() - shortest
            });
            let guard = if args.unguarded {
                BruteGuard::unlimited()
            } else {
                BruteGuard::default()
            };
            Some(brute_force(&inst, cap, &guard)?)
        }
    };
    let placement = match &solution {
        Some(s) => s.placement.clone(),
        None => solve_greedy(&inst, args.order.strategy(args.restarts, args.seed)),
    };
    // The reported value always comes from the checked witness.
    let metrics = placement.metrics(&inst).map_err(CliError::Invalid)?;
    let value = metrics.value(inst.objective());
    let algo = match args.algo {
        Algo::Greedy => format!("greedy/{}", args.order.strategy(args.restarts, args.seed).name()),
        a => format!("{a:?}").to_lowercase(),
    };
    let io = |r: std::io::Result<()>| r.map_err(stdout_err);
    io(writeln!(out, "value={value}"))?;
    io(writeln!(out, "algo={algo}"))?;
    io(writeln!(out, "objective={}", inst.objective()))?;
    io(writeln!(
        out,
        "trimmed_length={} max_shift={} holes={}",
        metrics.trimmed_length, metrics.max_shift, metrics.hole_count
    ))?;
    if let Some(s) = &solution {
        io(writeln!(
            out,
            "states={} peak_level_states={} peak_live_levels={}",
            s.stats.states, s.stats.peak_level_states, s.stats.peak_live_levels
        ))?;
    }
    if let Some(bound) = inst.bound() {
        io(writeln!(out, "decision={}", if value <= bound { "yes" } else { "no" }))?;
    }
    let text = placement.trim().to_text(&inst);
    match &args.witness {
        Some(path) => write_file(path, &text)?,
        None => io(out.write_all(text.as_bytes()))?,
    }
    Ok(())
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let inst = load_instance(&args.instance)?;
    let starts = Placement::parse_starts(&read(&args.witness)?).map_err(|source| CliError::Parse {
        path: args.witness.clone(),
        source,
    })?;
    let placement = Placement::new(&inst, starts);
    let io = |r: std::io::Result<()>| r.map_err(stdout_err);
    if let Ok(m) = placement.metrics(&inst) {
        io(writeln!(
            out,
            "trimmed_length={} max_shift={} holes={}",
            m.trimmed_length, m.max_shift, m.hole_count
        ))?;
    }
    placement.verify(&inst).map_err(CliError::Invalid)?;
    io(writeln!(out, "Ok"))
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("this family needs --{flag}")))
}

fn parse_tasks(text: &str) -> Result<Vec<CoupledTask>, CliError> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let nums: Vec<usize> = item
                .split(',')
                .map(|x| x.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::Usage(format!("bad task `{item}`, expected a,gap,b")))?;
            match nums[..] {
                [a, gap, b] => Ok(CoupledTask { a, b, gap }),
                _ => Err(CliError::Usage(format!("bad task `{item}`, expected a,gap,b"))),
            }
        })
        .collect()
}

fn parse_edges(text: &str) -> Result<Vec<(usize, usize)>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let bad = || CliError::Usage(format!("bad edge `{item}`, expected a-b"));
            let (a, b) = item.split_once('-').ok_or_else(bad)?;
            Ok((
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

pub fn gen(args: &GenArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let mut comments = Vec::new();
    let mut layout = None;
    let mut from_family = |fam: Family| {
        for s in &fam.shapes {
            comments.push(format!("; {}: length {}, {} numerals", s.name, s.length, s.numerals));
        }
        layout = fam.layout;
        fam.instance
    };
    let inst = match args.family {
        GenFamily::Lowerbound => from_family(lower_bound(need(args.delta, "delta")?)?),
        GenFamily::Ziegler => from_family(ziegler_adversary(need(args.delta, "delta")?)?),
        GenFamily::Exp2 => from_family(exp2(
            need(args.c, "c")?,
            need(args.g, "g")?,
            need(args.n, "n")?,
            args.y_shape,
        )?),
        GenFamily::Exp3 => from_family(exp3(
            need(args.c, "c")?,
            need(args.g, "g")?,
            need(args.n, "n")?,
            args.y_shape,
        )?),
        GenFamily::Coupled => {
            let tasks = parse_tasks(&need(args.tasks.clone(), "tasks")?)?;
            coupled_tasks(&tasks, need(args.makespan, "makespan")?)?
        }
        GenFamily::Clique => {
            let graph = CliqueGraph::new(
                need(args.vertices, "vertices")?,
                parse_edges(&args.edges)?,
                need(args.k, "k")?,
            )?;
            let red = clique_reduction(&graph, args.budget)?;
            comments.push(format!("; rho {}, labels {:?}", red.rho, red.labels));
            red.instance
        }
        GenFamily::Gap => {
            let base = load_instance(&need(args.base.clone(), "base")?)?;
            inapprox_gadget(&base, need(args.delta, "delta")?, need(args.rho, "rho")?)?
        }
        GenFamily::Random => random(&RandomParams {
            seed: args.seed,
            n: args.n.unwrap_or(RandomParams::default().n),
            min_len: args.min_len,
            max_len: args.max_len,
            min_density: args.min_density,
            max_density: args.max_density,
        })?,
    };
    let mut text = String::new();
    for c in &comments {
        text.push_str(c);
        text.push('\n');
    }
    text.push_str(&inst.to_text());
    match &args.out {
        Some(path) => write_file(path, &text)?,
        None => out.write_all(text.as_bytes()).map_err(stdout_err)?,
    }
    if let Some(path) = &args.layout {
        let layout = layout.ok_or_else(|| CliError::Usage("this family has no reference layout".into()))?;
        write_file(path, &layout.to_text(&inst))?;
    }
    Ok(())
}

pub fn bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let list =
        |text: &str, flag: &str| parse_list::<usize>(text).map_err(|e| CliError::Usage(format!("--{flag}: {e}")));
    let mut spec = BenchSpec::new(args.family);
    spec.c = list(&args.c, "c")?;
    spec.g = list(&args.g, "g")?;
    spec.n = list(&args.n, "n")?;
    spec.delta = list(&args.delta, "delta")?;
    spec.seeds = parse_list::<u64>(&args.seeds).map_err(|e| CliError::Usage(format!("--seeds: {e}")))?;
    spec.restarts = args.restarts;
    spec.y_shape = args.y_shape;
    spec.with_exact = args.with_exact;
    spec.timing = !args.no_timing;
    spec.limits = limits(args.state_cap);
    let rows = run_bench(&spec);
    let csv_err = |path: &Path| {
        let path = path.to_path_buf();
        move |e: csv::Error| CliError::Io { path, source: e.into() }
    };
    match &args.out {
        Some(path) => {
            let file = fs::File::create(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            write_csv(&rows, file).map_err(csv_err(path))?;
        }
        None => write_csv(&rows, out).map_err(csv_err(Path::new("<stdout>")))?,
    }
    if let Some(path) = &args.plot_data {
        let file = fs::File::create(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        write_plot_data(&rows, file).map_err(csv_err(path))?;
    }
    Ok(())
}
