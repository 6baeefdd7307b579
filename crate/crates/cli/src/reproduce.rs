use std::time::Instant;

use clap::ValueEnum;
use palext::color::{delta_e2000, delta_e76, moscow_2014};
use palext::optimize::{solve_joint_simplex, OptimizerConfig};
use palext::voronoi::greedy_sequence;
use palext::{DeltaE2000Weights, Gamut, GreedyMode, LabColor, Palette};

use crate::Failure;

#[derive(Clone, Copy, ValueEnum)]
pub enum Target {
    /// Nearest-neighbour ΔE00 within the Moscow palette.
    Table1,
    /// Five colors by CIE76 greedy extension.
    Table2,
    /// Five colors by the combined (ΔE00-selected) greedy extension.
    Table3,
    /// Two colors placed jointly.
    Joint2,
}

const TABLE1: [f64; 14] = [29.1, 21.7, 19.4, 6.3, 20.4, 14.5, 28.3, 14.5, 9.4, 17.8, 6.3, 11.3, 9.4, 20.4];
const TABLE1_MEAN: f64 = 16.3;
const TABLE2: [(&str, f64, [f64; 3]); 5] = [
    ("Bright green", 114.4, [83.0, -138.0, 91.0]),
    ("Blue", 87.0, [33.0, 80.0, -109.0]),
    ("Sea green", 67.7, [85.0, -106.0, 31.0]),
    ("Cyan", 65.3, [87.0, -78.0, -21.0]),
    ("Bright pink", 56.1, [60.0, 100.0, -64.0]),
];
const TABLE3: [(&str, f64, [f64; 3]); 5] = [
    ("Cyan", 23.9, [87.0, -78.0, -21.0]),
    ("Bright green", 22.0, [83.0, -138.0, 91.0]),
    ("Blue", 19.8, [33.0, 80.0, -109.0]),
    ("Pale lavender", 19.7, [86.0, 23.0, -22.0]),
    ("Rose pink", 19.8, [78.0, 59.0, 12.0]),
];
const JOINT2_MIN: f64 = 21.5;
const JOINT2_REFERENCE: f64 = 22.7;

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn table1() -> bool {
    let p: Palette = moscow_2014();
    let w = DeltaE2000Weights::map_palette();
    println!("{:<16} {:>8} {:>8}  tolerance ±0.05", "color", "computed", "ref");
    let mut all = true;
    let mut sum = 0.0;
    for (i, name) in p.names().iter().enumerate() {
        let d = (0..p.len())
            .filter(|&j| j != i)
            .map(|j| delta_e2000(&p.colors()[i], &p.colors()[j], &w))
            .fold(f64::INFINITY, f64::min);
        sum += d;
        let ok = (d - TABLE1[i]).abs() <= 0.05;
        all &= ok;
        println!("{name:<16} {d:>8.3} {:>8.1}  {}", TABLE1[i], verdict(ok));
    }
    let mean = sum / p.len() as f64;
    let ok = (mean - TABLE1_MEAN).abs() <= 0.05;
    println!("{:<16} {mean:>8.3} {TABLE1_MEAN:>8.1}  {}", "mean", verdict(ok));
    all && ok
}

fn greedy(mode: GreedyMode, rows: &[(&str, f64, [f64; 3]); 5], tol: f64, first_tol: f64) -> Result<bool, Failure> {
    let sol = greedy_sequence(&moscow_2014(), &Gamut::adobe_1998(), 5, mode, &DeltaE2000Weights::default())?;
    let label = if mode == GreedyMode::Cie76 { "min ΔE76" } else { "min ΔE00" };
    println!("step {:>22} {label:>9}   reference ({label} ±{tol})", "computed L a b");
    let mut all = true;
    for (i, (step, (name, want, _))) in sol.steps.iter().zip(rows).enumerate() {
        let got = if mode == GreedyMode::Cie76 { step.min_de76 } else { step.min_de00 };
        let ok = (got - want).abs() <= tol;
        all &= ok;
        let c = step.color;
        println!("{:>4} {:>7.1}{:>7.1}{:>8.1} {got:>9.1}   {name} {want:.1}  {}", i + 1, c.l, c.a, c.b, verdict(ok));
        if i == 0 {
            let r = rows[0].2;
            let d = delta_e76(&c, &LabColor::from_array(r));
            let ok = d <= first_tol;
            all &= ok;
            println!("     step 1 is ΔE76 {d:.2} from {} {} {} (≤ {first_tol})  {}", r[0], r[1], r[2], verdict(ok));
        }
    }
    Ok(all)
}

fn joint2() -> Result<bool, Failure> {
    let cfg = OptimizerConfig::default();
    let out = solve_joint_simplex(&moscow_2014(), &Gamut::adobe_1998(), 2, &cfg, &DeltaE2000Weights::default())?;
    for c in &out.solution.colors {
        println!("color {:>7.1}{:>7.1}{:>8.1}", c.l, c.a, c.b);
    }
    let v = out.solution.achieved_min_de00;
    let ok = v >= JOINT2_MIN;
    println!(
        "min ΔE00 {v:.1} (needs ≥ {JOINT2_MIN}; reference {JOINT2_REFERENCE}), {} restarts, seed {}  {}",
        cfg.restarts,
        cfg.rng_seed,
        verdict(ok)
    );
    Ok(ok)
}

pub fn run(target: Target) -> Result<(), Failure> {
    let start = Instant::now();
    let ok = match target {
        Target::Table1 => table1(),
        Target::Table2 => greedy(GreedyMode::Cie76, &TABLE2, 3.0, 5.0)?,
        Target::Table3 => greedy(GreedyMode::Combined, &TABLE3, 1.5, 6.0)?,
        Target::Joint2 => joint2()?,
    };
    println!("{} ({:.2} s)", if ok { "PASS" } else { "FAIL" }, start.elapsed().as_secs_f64());
    if ok {
        Ok(())
    } else {
        Err(Failure::Solver("computed values are outside tolerance".into()))
    }
}
