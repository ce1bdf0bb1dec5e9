//! Pair densities, one-sided ε-regularity refutation, typical-vertex
//! filtering and the dominating greedy for dense pairs.
//!
//! Thresholds are compared in the caller's scalar type; with [`crate::Exact`]
//! every `<=` versus `<` boundary is decided exactly.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::generators::rng;
use crate::graph::Graph;
use crate::scalar::{cmp_count, Scalar};

/// Largest side for which the refuter scans every pair of subsets.
pub const EXHAUSTIVE_SIDE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct PairStats<S> {
    pub a: VertexSet,
    pub b: VertexSet,
    pub density: S,
    pub eps: S,
}

pub fn pair_stats<S: Scalar>(g: &Graph, a: &VertexSet, b: &VertexSet, eps: S) -> Result<PairStats<S>> {
    Ok(PairStats { density: density(g, a, b)?, a: a.clone(), b: b.clone(), eps })
}

/// `e(X, Y) / (|X| |Y|)`.
pub fn density<S: Scalar>(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<S> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptySide);
    }
    if x.intersects(y) {
        return Err(Error::OverlappingSides);
    }
    Ok(S::from_count(g.edges_between(x, y)) / S::from_count(x.len() * y.len()))
}

/// Subsets `X ⊆ A`, `Y ⊆ B` whose density deviates from `d(A, B)` by more than ε.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularityWitness<S> {
    pub x: VertexSet,
    pub y: VertexSet,
    pub deviation: S,
}

impl<S: Scalar> RegularityWitness<S> {
    /// Re-derives all three defining inequalities from the graph.
    pub fn recheck(&self, g: &Graph, a: &VertexSet, b: &VertexSet, eps: &S) -> bool {
        if !self.x.is_subset(a) || !self.y.is_subset(b) {
            return false;
        }
        if cmp_count(self.x.len(), eps, a.len()) == Ordering::Less
            || cmp_count(self.y.len(), eps, b.len()) == Ordering::Less
        {
            return false;
        }
        let (Ok(dxy), Ok(dab)) = (density::<S>(g, &self.x, &self.y), density::<S>(g, a, b)) else {
            return false;
        };
        let dev = (dxy - dab).abs();
        dev == self.deviation && dev > *eps
    }
}

/// Integer deviation `|e·|A||B| - E·|X||Y||` over `|X||Y||A||B|`.
#[derive(Clone, Copy)]
struct Deviation {
    num: u128,
    den: u128,
}

impl Deviation {
    fn new(e_xy: usize, sx: usize, sy: usize, e_ab: usize, sa: usize, sb: usize) -> Self {
        let lhs = e_xy as u128 * (sa * sb) as u128;
        let rhs = e_ab as u128 * (sx * sy) as u128;
        Deviation { num: lhs.abs_diff(rhs), den: (sx * sy) as u128 * (sa * sb) as u128 }
    }

    fn gt(&self, other: &Deviation) -> bool {
        self.num * other.den > other.num * self.den
    }

    fn exceeds<S: Scalar>(&self, eps: &S) -> bool {
        // num / den > eps, with den > 0
        let num = S::from_count(self.num as usize);
        let den = S::from_count(self.den as usize);
        num > eps.clone() * den
    }
}

/// Searches for a certificate that `(A, B)` is not ε-regular.
///
/// Sides of at most [`EXHAUSTIVE_SIDE_LIMIT`] vertices are scanned
/// exhaustively and the maximum-deviation witness is returned. Larger pairs
/// are probed with a deterministic family (degree slices, single-vertex
/// neighbourhoods) and `sample_count` seeded random subsets; for every probed
/// `X` the best `Y` of the minimum admissible size (highest and lowest
/// degrees into `X`) is also tried. `None` means no witness was found, which
/// does not certify regularity.
pub fn regularity_refuter<S: Scalar>(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    eps: &S,
    sample_count: usize,
    seed: u64,
) -> Result<Option<RegularityWitness<S>>> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySide);
    }
    if a.intersects(b) {
        return Err(Error::OverlappingSides);
    }
    if *eps <= S::zero() {
        return Err(Error::DegenerateParameters("eps must be positive".into()));
    }
    let found = if a.len() <= EXHAUSTIVE_SIDE_LIMIT && b.len() <= EXHAUSTIVE_SIDE_LIMIT {
        exhaustive_refuter(g, a, b, eps)
    } else {
        sampled_refuter(g, a, b, eps, sample_count, seed)
    };
    let witness = found.map(|(x, y)| {
        let dev = (density::<S>(g, &x, &y).expect("nonempty") - density::<S>(g, a, b).expect("nonempty")).abs();
        RegularityWitness { x, y, deviation: dev }
    });
    if let Some(w) = &witness {
        assert!(w.recheck(g, a, b, eps), "refuter produced an invalid witness");
    }
    Ok(witness)
}

/// Smallest subset size admissible for a side of `total` vertices.
fn min_side<S: Scalar>(eps: &S, total: usize) -> usize {
    (1..=total).find(|&k| cmp_count(k, eps, total) != Ordering::Less).unwrap_or(total)
}

fn exhaustive_refuter<S: Scalar>(g: &Graph, a: &VertexSet, b: &VertexSet, eps: &S) -> Option<(VertexSet, VertexSet)> {
    let av = a.to_vec();
    let bv = b.to_vec();
    let (sa, sb) = (av.len(), bv.len());
    let e_ab = g.edges_between(a, b);
    // nbr[i] = mask over B of the neighbours of av[i]
    let nbr: Vec<u32> = av
        .iter()
        .map(|&x| bv.iter().enumerate().fold(0u32, |m, (j, &y)| if g.has_edge(x, y) { m | 1 << j } else { m }))
        .collect();
    let (kx, ky) = (min_side(eps, sa), min_side(eps, sb));

    // violates[sx][sy][e]
    let mut violates = vec![vec![Vec::new(); sb + 1]; sa + 1];
    for sx in kx..=sa {
        for sy in ky..=sb {
            violates[sx][sy] = (0..=sx * sy).map(|e| Deviation::new(e, sx, sy, e_ab, sa, sb).exceeds(eps)).collect();
        }
    }

    let mut best: Option<(Deviation, u32, u32)> = None;
    let mut col = vec![0usize; sb];
    let mut e_of = vec![0usize; 1 << sb];
    for xm in 1u32..(1 << sa) {
        let sx = xm.count_ones() as usize;
        if sx < kx {
            continue;
        }
        for (j, c) in col.iter_mut().enumerate() {
            *c = (0..sa).filter(|&i| xm >> i & 1 == 1 && nbr[i] >> j & 1 == 1).count();
        }
        for ym in 1u32..(1 << sb) {
            let low = ym.trailing_zeros() as usize;
            e_of[ym as usize] = e_of[(ym & (ym - 1)) as usize] + col[low];
            let sy = ym.count_ones() as usize;
            if sy < ky {
                continue;
            }
            let e = e_of[ym as usize];
            if violates[sx][sy][e] {
                let dev = Deviation::new(e, sx, sy, e_ab, sa, sb);
                if best.as_ref().is_none_or(|(bd, _, _)| dev.gt(bd)) {
                    best = Some((dev, xm, ym));
                }
            }
        }
    }
    best.map(|(_, xm, ym)| {
        let x = VertexSet::from_iter(g.n(), (0..sa).filter(|&i| xm >> i & 1 == 1).map(|i| av[i]));
        let y = VertexSet::from_iter(g.n(), (0..sb).filter(|&j| ym >> j & 1 == 1).map(|j| bv[j]));
        (x, y)
    })
}

fn sampled_refuter<S: Scalar>(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    eps: &S,
    sample_count: usize,
    seed: u64,
) -> Option<(VertexSet, VertexSet)> {
    const NEIGHBOURHOOD_PROBES: usize = 32;
    let n = g.n();
    let av = a.to_vec();
    let bv = b.to_vec();
    let (sa, sb) = (av.len(), bv.len());
    let e_ab = g.edges_between(a, b);
    let (kx, ky) = (min_side(eps, sa), min_side(eps, sb));

    let mut xs: Vec<VertexSet> = vec![a.clone()];
    let mut by_degree = av.clone();
    by_degree.sort_by_key(|&v| (g.neighbors(v).intersection_len(b), v));
    for k in [kx, sa.div_ceil(2).max(kx)] {
        xs.push(VertexSet::from_iter(n, by_degree[..k].iter().copied()));
        xs.push(VertexSet::from_iter(n, by_degree[sa - k..].iter().copied()));
    }
    for &y in bv.iter().take(NEIGHBOURHOOD_PROBES) {
        let inside = g.neighbors(y).intersection(a);
        let outside = a.difference(g.neighbors(y));
        xs.extend([inside, outside].into_iter().filter(|s| s.len() >= kx));
    }
    let mut rng = rng(seed);
    for _ in 0..sample_count {
        let k = rng.gen_range(kx..=sa);
        xs.push(VertexSet::from_iter(n, av.choose_multiple(&mut rng, k).copied()));
    }

    let mut best: Option<(Deviation, VertexSet, VertexSet)> = None;
    let consider = |x: &VertexSet, y: VertexSet, best: &mut Option<(Deviation, VertexSet, VertexSet)>| {
        let e = g.edges_between(x, &y);
        let dev = Deviation::new(e, x.len(), y.len(), e_ab, sa, sb);
        if dev.exceeds(eps) && best.as_ref().is_none_or(|(bd, _, _)| dev.gt(bd)) {
            *best = Some((dev, x.clone(), y));
        }
    };
    for x in &xs {
        let mut ys = bv.clone();
        ys.sort_by_key(|&y| (g.neighbors(y).intersection_len(x), y));
        consider(x, VertexSet::from_iter(n, ys[..ky].iter().copied()), &mut best);
        consider(x, VertexSet::from_iter(n, ys[sb - ky..].iter().copied()), &mut best);
        consider(x, b.clone(), &mut best);
        if rng.gen_bool(0.5) {
            let k = rng.gen_range(ky..=sb);
            consider(x, VertexSet::from_iter(n, bv.choose_multiple(&mut rng, k).copied()), &mut best);
        }
    }
    best.map(|(_, x, y)| (x, y))
}

/// Splits `A` by degree into `Y`: a vertex is atypical when
/// `|N(x) ∩ Y| <= (d - eps) |Y|`. Returns `(typical, atypical)`.
pub fn typical_vertex_filter<S: Scalar>(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    y: &VertexSet,
    d: &S,
    eps: &S,
) -> Result<(VertexSet, VertexSet)> {
    if y.is_empty() {
        return Err(Error::EmptySide);
    }
    if !y.is_subset(b) {
        return Err(Error::ParameterOutOfRange("Y must be a subset of B".into()));
    }
    let threshold = d.clone() - eps.clone();
    let mut typical = VertexSet::new(g.n());
    let mut atypical = VertexSet::new(g.n());
    for x in a.iter() {
        if cmp_count(g.neighbors(x).intersection_len(y), &threshold, y.len()) == Ordering::Greater {
            typical.insert(x);
        } else {
            atypical.insert(x);
        }
    }
    Ok((typical, atypical))
}

/// Smallest `t` with `(1 - (d - 2 eps))^t < eps`, by repeated multiplication.
pub fn t_bound<S: Scalar>(d: &S, eps: &S) -> Result<usize> {
    let two_eps = S::from_count(2) * eps.clone();
    if *eps <= S::zero() || *d <= two_eps {
        return Err(Error::DegenerateParameters(format!("need d > 2 eps > 0, got d = {d}, eps = {eps}")));
    }
    let factor = S::one() - (d.clone() - two_eps);
    let mut power = S::one();
    let mut t = 0;
    while power >= *eps {
        power = power * factor.clone();
        t += 1;
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatingResult {
    /// `u_1, ..., u_j` in pick order.
    pub picks: Vec<usize>,
    /// `B ∩ ⋃ N(u_i)`.
    pub covered: VertexSet,
    pub t_target: usize,
    /// Indices into `picks` of steps where no vertex covered a `γ` fraction of
    /// the uncovered set and the max-coverage fallback was used.
    pub irregular_steps: Vec<usize>,
    /// `|B^(i)|` before each pick and after the last one.
    pub uncovered_sizes: Vec<usize>,
    /// `|covered| >= (1 - eps) |B|`.
    pub reached: bool,
}

/// Greedily picks `u_1, u_2, ...` from `A` until all but an ε fraction of `B`
/// is covered or `t_bound(d, eps)` vertices are chosen.
///
/// Each step takes the smallest-id unpicked vertex covering at least
/// `γ = d - 2 eps` of the still-uncovered part of `B`. If none exists the
/// pair is not behaving regularly; the vertex with the largest coverage is
/// taken instead and the step is flagged.
pub fn dominating_greedy<S: Scalar>(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    d: &S,
    eps: &S,
) -> Result<DominatingResult> {
    let t_target = t_bound(d, eps)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySide);
    }
    if a.intersects(b) {
        return Err(Error::OverlappingSides);
    }
    let gamma = d.clone() - S::from_count(2) * eps.clone();
    let mut uncovered = b.clone();
    let mut picked = VertexSet::new(g.n());
    let mut picks = Vec::new();
    let mut irregular_steps = Vec::new();
    let mut uncovered_sizes = vec![uncovered.len()];
    while cmp_count(uncovered.len(), eps, b.len()) == Ordering::Greater && picks.len() < t_target {
        let good = a
            .iter()
            .filter(|&v| !picked.contains(v))
            .find(|&v| cmp_count(g.neighbors(v).intersection_len(&uncovered), &gamma, uncovered.len()) != Ordering::Less);
        let pick = match good {
            Some(v) => v,
            None => {
                let Some(v) = a
                    .iter()
                    .filter(|&v| !picked.contains(v))
                    .max_by(|&x, &y| {
                        g.neighbors(x)
                            .intersection_len(&uncovered)
                            .cmp(&g.neighbors(y).intersection_len(&uncovered))
                            .then(y.cmp(&x))
                    })
                else {
                    break;
                };
                irregular_steps.push(picks.len());
                v
            }
        };
        picked.insert(pick);
        picks.push(pick);
        uncovered.difference_with(g.neighbors(pick));
        uncovered_sizes.push(uncovered.len());
    }
    let covered = b.difference(&uncovered);
    let reached = cmp_count(covered.len(), &(S::one() - eps.clone()), b.len()) != Ordering::Less;
    Ok(DominatingResult { picks, covered, t_target, irregular_steps, uncovered_sizes, reached })
}

/// `(δ(G)/n - (β + ε)) · k`: the minimum degree any reduced graph on `k`
/// clusters is guaranteed to have.
pub fn reduced_min_degree_bound<S: Scalar>(delta_g: usize, n: usize, beta: &S, eps: &S, k: usize) -> Result<S> {
    if n == 0 || k == 0 {
        return Err(Error::ParameterOutOfRange("n and k must be positive".into()));
    }
    Ok((S::from_count(delta_g) / S::from_count(n) - (beta.clone() + eps.clone())) * S::from_count(k))
}
