use tilepack::exact::{brute_force, dp_general, BruteGuard, Limits};
use tilepack::generators::{exp2, exp3, lower_bound, ziegler_adversary, YShape};
use tilepack::heuristics::{solve_greedy, OrderStrategy};
use tilepack::Instance;

#[test]
fn lower_bound_optimum_is_the_grouped_layout() {
    let fam = lower_bound(4).unwrap();
    let sol = dp_general(&fam.instance, &Limits::default()).unwrap();
    let layout = fam.layout.unwrap();
    assert_eq!(sol.value, layout.trimmed_len() as u64);
    assert_eq!(sol.value, 38);
}

#[test]
fn greedy_ratio_rises_with_delta() {
    let ratios: Vec<f64> = (4..=7)
        .map(|d| {
            let fam = lower_bound(d).unwrap();
            let layout = fam.layout.unwrap();
            assert!(layout.is_no_holes_certificate());
            let greedy = solve_greedy(&fam.instance, OrderStrategy::None).trimmed_len();
            greedy as f64 / layout.trimmed_len() as f64
        })
        .collect();
    assert!(ratios.windows(2).all(|w| w[0] < w[1]), "{ratios:?}");
}

#[test]
fn ziegler_numeral_counts_are_distinct() {
    for d in 4..=9 {
        let fam = ziegler_adversary(d).unwrap();
        let mut counts: Vec<usize> = fam.shapes.iter().map(|s| s.numerals).collect();
        counts.sort_unstable();
        counts.dedup();
        assert_eq!(counts.len(), fam.shapes.len());
        for (i, s) in fam.shapes.iter().enumerate() {
            if s.name == "X" {
                let x = i / 2 + 1;
                assert_eq!(s.length, (2 * x + 1) * (d - 1) + 1);
            }
        }
    }
}

fn brute(inst: &Instance) -> u64 {
    let cap = inst.total_length() - inst.tiles().iter().map(|t| t.len()).min().unwrap();
    brute_force(inst, cap, &BruteGuard::unlimited()).unwrap().value
}

#[test]
fn small_benchmark_instances_against_oracles() {
    for shape in [YShape::Balanced, YShape::Literal] {
        let inst = exp2(2, 2, 2, shape).unwrap().instance;
        let opt = dp_general(&inst, &Limits::default()).unwrap().value;
        assert_eq!(opt, brute(&inst));
        for order in OrderStrategy::DETERMINISTIC {
            assert!(solve_greedy(&inst, order).trimmed_len() as u64 >= opt);
        }
    }
    let fam = exp3(2, 3, 3, YShape::Balanced).unwrap();
    let layout = fam.layout.unwrap();
    let opt = dp_general(&fam.instance, &Limits::default()).unwrap().value;
    assert_eq!(opt, layout.trimmed_len() as u64);
}

#[test]
fn exp2_deterministic_orders_coincide() {
    for c in 2..=6 {
        let inst = exp2(c, 3, 8, YShape::Balanced).unwrap().instance;
        let first = solve_greedy(&inst, OrderStrategy::None);
        for order in OrderStrategy::DETERMINISTIC {
            assert_eq!(solve_greedy(&inst, order), first);
        }
    }
}
