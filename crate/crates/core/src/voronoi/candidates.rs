use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::color::{delta_e2000, delta_e76, DeltaE2000Weights, Lab};
use crate::geometry::{bisector_of_sites, intersect_three_planes, Gamut, Plane, PlaneKind};
use crate::scalar::{cmp_scalar, Scalar};

/// Which triple intersections survive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum CandidateFilter {
    /// Only vertices of the gamut-clipped Voronoi diagram: for every bisector
    /// among the three generators, both of its sites are nearest sites of
    /// the point.
    #[default]
    VoronoiVertices,
    /// Every in-gamut intersection of three pool planes.
    AllIntersections,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidatePoint<T> {
    pub point: Lab<T>,
    pub generators: [Plane<T>; 3],
    /// ΔE76 to the nearest site; +∞ with no sites.
    pub min_de76: T,
    pub nearest_index: Option<usize>,
    /// ΔE00 to the nearest site (in the ΔE00 sense; may be a different site).
    pub min_de00: T,
}

/// Bisectors of all site pairs followed by the gamut faces.
pub fn plane_pool<T: Scalar>(sites: &[Lab<T>], gamut: &Gamut<T>) -> Vec<Plane<T>> {
    let mut pool = Vec::with_capacity(sites.len() * sites.len().saturating_sub(1) / 2 + gamut.faces().len());
    for i in 0..sites.len() {
        for j in i + 1..sites.len() {
            // Duplicate sites have no bisector; the remaining planes still
            // produce every vertex they bound.
            if let Ok(p) = bisector_of_sites(&sites[i], &sites[j], i, j) {
                pool.push(p);
            }
        }
    }
    pool.extend_from_slice(gamut.faces());
    pool
}

fn nearest<T: Scalar>(x: &Lab<T>, sites: &[Lab<T>]) -> (T, Option<usize>) {
    let mut best = (T::infinity(), None);
    for (i, s) in sites.iter().enumerate() {
        let d = delta_e76(x, s);
        if d < best.0 {
            best = (d, Some(i));
        }
    }
    best
}

/// Every point where three planes of the pool (site bisectors and gamut
/// faces) meet inside the gamut, scored against `sites`. Sorted by
/// `min_de76` descending, ties by (L, a, b) ascending.
pub fn enumerate_candidates<T: Scalar>(
    sites: &[Lab<T>],
    gamut: &Gamut<T>,
    weights: &DeltaE2000Weights<T>,
    filter: CandidateFilter,
) -> Vec<CandidatePoint<T>> {
    let pool = plane_pool(sites, gamut);
    let n = pool.len();
    let eps = T::containment_eps();

    let raw: Vec<RawCandidate<T>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let pool = &pool;
            (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))).filter_map(move |(i, j, k)| {
                let x = intersect_three_planes(&pool[i], &pool[j], &pool[k])?;
                if !gamut.contains(&x, eps) {
                    return None;
                }
                let (d, idx) = nearest(&x, sites);
                if filter == CandidateFilter::VoronoiVertices {
                    let tol = T::dedup_eps() * d.max(T::one());
                    let on_cell_faces = [i, j, k].iter().all(|&g| match pool[g].kind {
                        PlaneKind::Bisector(a, b) => {
                            delta_e76(&x, &sites[a]) <= d + tol && delta_e76(&x, &sites[b]) <= d + tol
                        }
                        PlaneKind::GamutFace(_) => true,
                    });
                    if !on_cell_faces {
                        return None;
                    }
                }
                Some((x, [i, j, k], d, idx))
            })
        })
        .collect();

    let mut deduped = dedup(raw);
    let mut out: Vec<CandidatePoint<T>> = deduped
        .par_drain(..)
        .map(|(point, g, min_de76, nearest_index)| {
            let min_de00 = sites
                .iter()
                .map(|s| delta_e2000(&point, s, weights))
                .fold(T::infinity(), T::min);
            CandidatePoint { point, generators: g.map(|i| pool[i]), min_de76, nearest_index, min_de00 }
        })
        .collect();
    out.sort_by(|a, b| {
        cmp_scalar(quantize(b.min_de76), quantize(a.min_de76)).then_with(|| a.point.lex_cmp(&b.point))
    });
    out
}

fn quantize<T: Scalar>(v: T) -> T {
    if v.is_finite() {
        (v / T::tie_eps()).round()
    } else {
        v
    }
}

/// Intersection point, generator indices into the pool, ΔE76 to the nearest
/// site and that site's index.
type RawCandidate<T> = (Lab<T>, [usize; 3], T, Option<usize>);

/// Merges points closer than the dedup radius, keeping the first generator
/// triple (in enumeration order) for each.
fn dedup<T: Scalar>(mut raw: Vec<RawCandidate<T>>) -> Vec<RawCandidate<T>> {
    let r = T::dedup_eps();
    raw.sort_by(|a, b| cmp_scalar(a.0.l, b.0.l).then_with(|| a.1.cmp(&b.1)));
    let mut keep: Vec<RawCandidate<T>> = Vec::with_capacity(raw.len());
    let mut window_start = 0;
    for item in raw {
        while window_start < keep.len() && item.0.l - keep[window_start].0.l > r {
            window_start += 1;
        }
        let dup = keep[window_start..].iter_mut().find(|k| (k.0 - item.0).norm() <= r);
        match dup {
            Some(k) => {
                if item.1 < k.1 {
                    *k = item;
                }
            }
            None => keep.push(item),
        }
    }
    keep
}

/// Best element under `score`; values within the tie tolerance of the best
/// are tied and resolved by lexicographically smallest point.
pub(crate) fn select_best<T: Scalar, C>(items: &[C], score: impl Fn(&C) -> T, point: impl Fn(&C) -> Lab<T>) -> Option<&C> {
    let best = items.iter().map(&score).fold(T::neg_infinity(), T::max);
    let tie = T::tie_eps() * best.abs().max(T::one());
    items
        .iter()
        .filter(|c| {
            let s = score(c);
            s >= best - tie || s == best
        })
        .min_by(|a, b| point(a).lex_cmp(&point(b)))
}
