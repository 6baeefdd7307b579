#![allow(dead_code)]

pub mod data;

use palext::color::{delta_e2000, delta_e76, min_distance, Lab};
use palext::geometry::{bisector_plane, intersect_three_planes, PlaneKind};
use palext::optimize::{
    coulomb_energy, maximin_objective, solve_ballistic, solve_joint_simplex, solve_monte_carlo, OptimizerConfig,
};
use palext::voronoi::{enumerate_candidates, greedy_sequence, solve_one_cie76};
use palext::{CandidateFilter, DeltaE2000Weights, Gamut, GreedyMode, LabColor, Metric, Palette, Plane};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

pub fn lab(l: f64, a: f64, b: f64) -> LabColor {
    Lab::from_f64(l, a, b)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_lab(r: &mut impl Rng) -> LabColor {
    lab(r.gen_range(0.0..100.0), r.gen_range(-128.0..128.0), r.gen_range(-128.0..128.0))
}

pub fn box_gamut(lo: LabColor, hi: LabColor) -> Gamut {
    let mut c = Vec::new();
    for &l in &[lo.l, hi.l] {
        for &a in &[lo.a, hi.a] {
            for &b in &[lo.b, hi.b] {
                c.push(lab(l, a, b));
            }
        }
    }
    Gamut::build("box", &c).unwrap()
}

/// Random box or tetrahedron with edges of roughly 15–40 Lab units.
pub fn random_gamut(r: &mut impl Rng) -> Gamut {
    let base = lab(r.gen_range(20.0..50.0), r.gen_range(-40.0..0.0), r.gen_range(-40.0..0.0));
    if r.gen_bool(0.5) {
        let size = lab(r.gen_range(15.0..35.0), r.gen_range(15.0..35.0), r.gen_range(15.0..35.0));
        return box_gamut(base, base + size);
    }
    loop {
        let pts: Vec<LabColor> =
            (0..4).map(|_| base + lab(r.gen_range(0.0..40.0), r.gen_range(0.0..40.0), r.gen_range(0.0..40.0))).collect();
        let vol = (pts[1] - pts[0]).cross(&(pts[2] - pts[0])).dot(&(pts[3] - pts[0])).abs() / 6.0;
        if vol > 1500.0 {
            return Gamut::build("tetra", &pts).unwrap();
        }
    }
}

/// A gamut with `k` distinct sites sampled inside it.
pub fn random_instance(seed: u64, k: usize) -> (Gamut, Palette) {
    let mut r = rng(seed);
    let g = random_gamut(&mut r);
    let sites: Vec<LabColor> = (0..k).map(|_| g.sample(&mut r)).collect();
    (g, Palette::from_colors(sites).unwrap())
}

fn nearest_site(x: &LabColor, sites: &[LabColor]) -> f64 {
    sites.iter().map(|s| delta_e76(x, s)).fold(f64::INFINITY, f64::min)
}

/// Maximin ΔE76 over a regular grid clipped to the gamut.
pub fn grid_optimum(g: &Gamut, sites: &[LabColor], step: f64) -> f64 {
    let (lo, hi) = g.bounding_box();
    let n = |lo: f64, hi: f64| ((hi - lo) / step).floor() as usize;
    let mut best = f64::NEG_INFINITY;
    for i in 0..=n(lo.l, hi.l) {
        for j in 0..=n(lo.a, hi.a) {
            for k in 0..=n(lo.b, hi.b) {
                let x = lab(lo.l + i as f64 * step, lo.a + j as f64 * step, lo.b + k as f64 * step);
                if !g.contains(&x, 1e-9) {
                    continue;
                }
                best = best.max(nearest_site(&x, sites));
            }
        }
    }
    best
}

/// Grid search plus the gamut's vertices, which a grid misses at sharp tips.
pub fn grid_and_vertices_optimum(g: &Gamut, sites: &[LabColor], step: f64) -> f64 {
    g.vertices().iter().map(|v| nearest_site(v, sites)).fold(grid_optimum(g, sites, step), f64::max)
}

pub fn small_config(seed: u64) -> OptimizerConfig {
    let mut cfg = OptimizerConfig { rng_seed: seed, restarts: 20, mc_samples: 20_000, ..Default::default() };
    cfg.ballistic.max_steps = 2_000;
    cfg
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn metric_symmetry_identity(seed: u64) -> Check {
    let mut r = rng(seed);
    let w = DeltaE2000Weights::new(r.gen_range(0.5..3.0), r.gen_range(0.5..3.0), r.gen_range(0.5..3.0)).unwrap();
    for _ in 0..200 {
        let (x, y) = (random_lab(&mut r), random_lab(&mut r));
        ensure(delta_e76(&x, &y) == delta_e76(&y, &x), || format!("ΔE76 asymmetric at {x} {y}"))?;
        ensure(delta_e2000(&x, &y, &w) == delta_e2000(&y, &x, &w), || format!("ΔE00 asymmetric at {x} {y}"))?;
        ensure(delta_e76(&x, &x) == 0.0 && delta_e2000(&x, &x, &w) == 0.0, || format!("nonzero self distance at {x}"))?;
        ensure(delta_e2000(&x, &y, &w) >= 0.0, || format!("negative ΔE00 at {x} {y}"))?;
    }
    Ok(())
}

pub fn triangle_and_translation(seed: u64) -> Check {
    let mut r = rng(seed);
    for _ in 0..200 {
        let (x, y, z) = (random_lab(&mut r), random_lab(&mut r), random_lab(&mut r));
        let (xy, yz, xz) = (delta_e76(&x, &y), delta_e76(&y, &z), delta_e76(&x, &z));
        ensure(xz <= xy + yz + 1e-9, || format!("triangle inequality fails: {xz} > {xy} + {yz}"))?;
        let v = random_lab(&mut r);
        let d = delta_e76(&(x + v), &(y + v));
        ensure((d - xy).abs() < 1e-9, || format!("translation changed ΔE76 from {xy} to {d}"))?;
    }
    Ok(())
}

pub fn bisector_equidistance(seed: u64) -> Check {
    let mut r = rng(seed);
    let (p, q) = (random_lab(&mut r), random_lab(&mut r));
    let plane = bisector_plane(&p, &q).map_err(|e| e.to_string())?;
    for _ in 0..1000 {
        let x = plane.project(&(random_lab(&mut r) * 2.0));
        let gap = (delta_e76(&x, &p) - delta_e76(&x, &q)).abs();
        ensure(gap < 1e-6, || format!("point {x} off bisector by {gap}"))?;
    }
    Ok(())
}

pub fn three_plane_residual(seed: u64) -> Check {
    let mut r = rng(seed);
    let planes: Vec<Plane> = (0..3)
        .map(|i| Plane::new(random_lab(&mut r), r.gen_range(-50.0..50.0), PlaneKind::GamutFace(i)).unwrap())
        .collect();
    let n = &planes;
    let det = n[0].normal.dot(&n[1].normal.cross(&n[2].normal));
    match intersect_three_planes(&n[0], &n[1], &n[2]) {
        Some(x) => {
            for p in n {
                let res = (p.normal.dot(&x) - p.offset).abs();
                ensure(res < 1e-8, || format!("residual {res} at {x}"))?;
            }
            Ok(())
        }
        None => ensure(det.abs() < 1e-6, || format!("no intersection reported for det {det}")),
    }
}

pub fn gamut_order_independence(seed: u64) -> Check {
    let mut r = rng(seed);
    let g = random_gamut(&mut r);
    let mut corners = g.corner_source().to_vec();
    corners.shuffle(&mut r);
    let h = Gamut::build("shuffled", &corners).map_err(|e| e.to_string())?;
    ensure(g.faces().len() == h.faces().len(), || "face count depends on corner order".into())?;
    for (f, e) in g.faces().iter().zip(h.faces()) {
        ensure(f.same_set(e, 1e-9), || format!("face {f:?} differs from {e:?}"))?;
    }
    Ok(())
}

pub fn candidate_containment(seed: u64) -> Check {
    let k = 3 + (seed % 4) as usize;
    let (g, p) = random_instance(seed, k);
    for filter in [CandidateFilter::VoronoiVertices, CandidateFilter::AllIntersections] {
        let cands = enumerate_candidates(p.colors(), &g, &DeltaE2000Weights::default(), filter);
        ensure(!cands.is_empty(), || "no candidates".into())?;
        for c in &cands {
            ensure(g.contains(&c.point, 1e-6), || format!("candidate {} outside the gamut", c.point))?;
        }
    }
    Ok(())
}

pub fn argmax_translation_equivariance(seed: u64) -> Check {
    let (g, p) = random_instance(seed, 4);
    let mut r = rng(seed ^ 0x5eed);
    // Instances keep L within 10..90, so this shift stays a valid palette.
    let v = lab(r.gen_range(-10.0..10.0), r.gen_range(-60.0..60.0), r.gen_range(-60.0..60.0));
    let w = DeltaE2000Weights::default();
    let a = solve_one_cie76(&p, &g, &w).map_err(|e| e.to_string())?;
    let moved = Palette::from_colors(p.colors().iter().map(|c| *c + v)).map_err(|e| e.to_string())?;
    let gm = g.translated(&v).map_err(|e| e.to_string())?;
    let b = solve_one_cie76(&moved, &gm, &w).map_err(|e| e.to_string())?;
    ensure((a.min_de76 - b.min_de76).abs() < 1e-6, || format!("objective {} vs {}", a.min_de76, b.min_de76))?;
    let shift = delta_e76(&(a.point + v), &b.point);
    ensure(shift < 1e-5, || format!("argmax {} + {v} != {}", a.point, b.point))
}

pub fn permutation_invariance(seed: u64) -> Check {
    let (g, p) = random_instance(seed, 5);
    let mut colors = p.colors().to_vec();
    colors.shuffle(&mut rng(seed ^ 0xbeef));
    let q = Palette::from_colors(colors).unwrap();
    let w = DeltaE2000Weights::default();
    let a = solve_one_cie76(&p, &g, &w).map_err(|e| e.to_string())?;
    let b = solve_one_cie76(&q, &g, &w).map_err(|e| e.to_string())?;
    ensure(delta_e76(&a.point, &b.point) < 1e-9 && (a.min_de76 - b.min_de76).abs() < 1e-9, || {
        format!("permuted palette gives {} instead of {}", b.point, a.point)
    })
}

pub fn greedy_monotone(seed: u64) -> Check {
    let (g, p) = random_instance(seed, 3);
    let sol = greedy_sequence(&p, &g, 4, GreedyMode::Cie76, &DeltaE2000Weights::default()).map_err(|e| e.to_string())?;
    for w in sol.steps.windows(2) {
        ensure(w[1].min_de76 <= w[0].min_de76 + 1e-9, || format!("step minima rose: {} -> {}", w[0].min_de76, w[1].min_de76))?;
    }
    Ok(())
}

/// Every stochastic m=1 solver stays at or below the exact optimum, returns
/// in-gamut colors and reports its objective faithfully.
pub fn stochastic_dominance(seed: u64) -> Check {
    let (g, p) = random_instance(seed, 4);
    let w = DeltaE2000Weights::default();
    let exact = solve_one_cie76(&p, &g, &w).map_err(|e| e.to_string())?.min_de76;
    let cfg = small_config(seed);
    let mc = solve_monte_carlo(&p, &g, 1, &Metric::Cie76, &cfg, &w).map_err(|e| e.to_string())?;
    let ball = solve_ballistic(&p, &g, 1, &cfg, &w).map_err(|e| e.to_string())?.solution;
    let joint = solve_joint_simplex(&p, &g, 1, &cfg, &w).map_err(|e| e.to_string())?.solution;
    for (name, sol) in [("mc", &mc), ("ballistic", &ball), ("joint", &joint)] {
        ensure(sol.achieved_min_de76 <= exact + 1e-9, || format!("{name} {} beats exact {exact}", sol.achieved_min_de76))?;
        for x in &sol.colors {
            ensure(g.contains(x, 1e-6), || format!("{name} returned {x} outside the gamut"))?;
        }
        let again = maximin_objective(&sol.colors, p.colors(), &Metric::Cie76);
        ensure((again - sol.achieved_min_de76).abs() < 1e-9, || format!("{name} misreports its objective"))?;
    }
    Ok(())
}

pub fn seeded_determinism(seed: u64) -> Check {
    let (g, p) = random_instance(seed, 4);
    let w = DeltaE2000Weights::default();
    let mut cfg = small_config(seed);
    cfg.restarts = 8;
    let run = || -> Result<_, String> {
        let mc = solve_monte_carlo(&p, &g, 2, &Metric::de2000_default(), &cfg, &w).map_err(|e| e.to_string())?;
        let ball = solve_ballistic(&p, &g, 2, &cfg, &w).map_err(|e| e.to_string())?;
        let joint = solve_joint_simplex(&p, &g, 2, &cfg, &w).map_err(|e| e.to_string())?;
        Ok((mc, ball.solution, ball.energies, joint.solution))
    };
    let (a, b) = (run()?, run()?);
    ensure(a.0 == b.0, || "Monte-Carlo differs between runs".into())?;
    ensure(a.1 == b.1 && a.2 == b.2, || "ballistic trajectory differs between runs".into())?;
    ensure(a.3 == b.3, || "joint search differs between runs".into())
}

pub fn ballistic_energy_monotone(seed: u64) -> Check {
    let (g, p) = random_instance(seed, 4);
    let out = solve_ballistic(&p, &g, 2, &small_config(seed), &DeltaE2000Weights::default()).map_err(|e| e.to_string())?;
    for w in out.energies.windows(2) {
        ensure(w[1] <= w[0], || format!("energy rose from {} to {}", w[0], w[1]))?;
    }
    let last = *out.energies.last().unwrap();
    let now = coulomb_energy(&out.solution.colors, p.colors());
    ensure((last - now).abs() <= 1e-12 * now.max(1.0), || "logged energy does not match final state".into())
}

/// Objective of the exact solver against dense grid and sampling oracles.
pub fn oracle_equivalence(seed: u64) -> Check {
    let mut r = rng(seed);
    let k = r.gen_range(3..=6);
    let (g, p) = random_instance(seed, k);
    let w = DeltaE2000Weights::default();
    let exact = solve_one_cie76(&p, &g, &w).map_err(|e| e.to_string())?;
    let (d, _) = min_distance(&exact.point, p.colors(), &Metric::Cie76).map_err(|e| e.to_string())?;
    ensure((d - exact.min_de76).abs() < 1e-9, || "reported objective disagrees with its point".into())?;
    let grid = grid_optimum(&g, p.colors(), 0.5);
    ensure(exact.min_de76 >= grid - 0.5, || format!("exact {} below grid {grid}", exact.min_de76))?;
    let cfg = OptimizerConfig { rng_seed: seed, mc_samples: 100_000, ..Default::default() };
    let mc = solve_monte_carlo(&p, &g, 1, &Metric::Cie76, &cfg, &w).map_err(|e| e.to_string())?;
    ensure(exact.min_de76 >= mc.achieved_min_de76 - 1e-9, || {
        format!("exact {} below Monte-Carlo {}", exact.min_de76, mc.achieved_min_de76)
    })
}

pub type NamedCheck = (&'static str, fn(u64) -> Check);

/// All invariant families, each over the given seeds.
pub fn invariant_suite(seeds: std::ops::Range<u64>) -> Vec<(&'static str, Check)> {
    let checks: [NamedCheck; 12] = [
        ("metric symmetry and identity", metric_symmetry_identity),
        ("ΔE76 triangle inequality and translation invariance", triangle_and_translation),
        ("bisector equidistance", bisector_equidistance),
        ("three-plane intersection residual", three_plane_residual),
        ("gamut independent of corner order", gamut_order_independence),
        ("candidates inside the gamut", candidate_containment),
        ("argmax translation equivariance", argmax_translation_equivariance),
        ("palette permutation invariance", permutation_invariance),
        ("greedy ΔE76 monotonicity", greedy_monotone),
        ("stochastic solvers dominated by the exact solver", stochastic_dominance),
        ("seeded determinism", seeded_determinism),
        ("ballistic energy non-increasing", ballistic_energy_monotone),
    ];
    checks
        .iter()
        .map(|(name, f)| (*name, seeds.clone().try_for_each(|s| f(s).map_err(|e| format!("seed {s}: {e}")))))
        .collect()
}
