use std::fmt;

use crate::bitset::VertexSet;
use crate::generators::FivePartInstance;
use crate::graph::{Color, ColoredGraph, Mode, Tiling, Triangle, TriangleColor};
use crate::regularity::dominating_greedy;
use crate::scalar::{at_least_one_minus_sqrt, at_least_sqrt, Scalar};

/// Which search stage produced a triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FinderPath {
    /// Monochromatic edge inside one colour neighbourhood of a dominating vertex.
    Dominating,
    /// Edge inside `N_R(u) ∩ N_B(v)` for two dominating vertices `u, v`.
    CrossPair,
    /// `P`-`Q`-`S` transversal through a vertex of large colour degree.
    Transversal,
    /// Canonical enumeration of all admissible triangles.
    Enumeration,
}

impl fmt::Display for FinderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FinderPath::Dominating => "dominating",
            FinderPath::CrossPair => "cross_pair",
            FinderPath::Transversal => "transversal",
            FinderPath::Enumeration => "enumeration",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinderResult {
    pub triangle: Option<Triangle>,
    pub path: Option<FinderPath>,
    /// Dominating vertices chosen from `S`.
    pub picks: Vec<usize>,
    /// The enumeration ran out of budget, so `None` is inconclusive.
    pub exhausted: bool,
}

/// The three sets a triangle is distributed over.
struct Parts<'a> {
    p: &'a VertexSet,
    q: &'a VertexSet,
    s: &'a VertexSet,
}

impl Parts<'_> {
    /// At most one vertex in `S`, at most two in each of `P` and `Q`, none elsewhere.
    fn admits(&self, t: &Triangle) -> bool {
        let (cp, cq, cs) = (t.count_in(self.p), t.count_in(self.q), t.count_in(self.s));
        cp + cq + cs == 3 && cs <= 1 && cp <= 2 && cq <= 2
    }
}

/// Looks for a monochromatic triangle with at most one vertex in `S` and at
/// most two in each of `P` and `Q`.
///
/// Stages run in order and the first hit is returned: single-vertex
/// witnesses through up to `t_bound(β - ε, ε)` dominating vertices of `S`,
/// the two-vertex cross form (skipped for sets of at most `alpha_bound`
/// vertices), transversals through `S`-vertices sorted by colour degree, and
/// finally an enumeration in canonical order that inspects at most `budget`
/// vertex pairs. Within a stage the canonical-first hit wins. Sizes of the
/// three sets are not required to be balanced.
///
/// # Panics
/// If the sets are not pairwise disjoint, or a returned triangle fails
/// validation.
#[allow(clippy::too_many_arguments)]
pub fn three_part_mono_finder<S: Scalar>(
    g: &ColoredGraph,
    p: &VertexSet,
    q: &VertexSet,
    s: &VertexSet,
    beta: &S,
    eps: &S,
    alpha_bound: Option<usize>,
    budget: u64,
) -> FinderResult {
    assert!(!p.intersects(q) && !p.intersects(s) && !q.intersects(s), "P, Q, S must be disjoint");
    let parts = Parts { p, q, s };
    let mut pq = p.clone();
    pq.union_with(q);

    let picks = if s.is_empty() || pq.is_empty() {
        Vec::new()
    } else {
        dominating_greedy(g.graph(), s, &pq, &(beta.clone() - eps.clone()), eps).map(|r| r.picks).unwrap_or_default()
    };

    let staged = dominating_stage(g, &picks, &pq)
        .map(|t| (t, FinderPath::Dominating))
        .or_else(|| cross_pair_stage(g, &picks, &pq, alpha_bound).map(|t| (t, FinderPath::CrossPair)))
        .or_else(|| transversal_stage(g, &parts).map(|t| (t, FinderPath::Transversal)));
    let (triangle, path, exhausted) = match staged {
        Some((t, path)) => (Some(t), Some(path), false),
        None => {
            let (t, exhausted) = enumeration_stage(g, &parts, budget);
            let path = t.map(|_| FinderPath::Enumeration);
            (t, path, exhausted)
        }
    };
    if let Some(t) = &triangle {
        let [a, b, c] = t.vertices;
        assert_eq!(g.triangle(a, b, c).map(|x| x.color), Some(t.color), "finder returned a non-triangle");
        assert!(t.color.mono().is_some(), "finder returned a mixed triangle");
        assert!(parts.admits(t), "finder returned a badly distributed triangle");
    }
    FinderResult { triangle, path, picks, exhausted }
}

/// Canonical-first edge of colour `color` inside `set`, as a triangle with `apex`.
fn colored_edge_in(g: &ColoredGraph, apex: usize, set: &VertexSet, color: Color) -> Option<Triangle> {
    set.iter().find_map(|x| {
        g.neighbors_in(x, color)
            .intersection(set)
            .iter()
            .find(|&y| y > x)
            .map(|y| Triangle::new([apex, x, y], TriangleColor::from(color)))
    })
}

fn min_triangle(candidates: impl IntoIterator<Item = Triangle>) -> Option<Triangle> {
    candidates.into_iter().min_by_key(|t| t.vertices)
}

fn dominating_stage(g: &ColoredGraph, picks: &[usize], pq: &VertexSet) -> Option<Triangle> {
    min_triangle(picks.iter().flat_map(|&u| {
        Color::BOTH
            .into_iter()
            .filter_map(move |c| colored_edge_in(g, u, &g.neighbors_in(u, c).intersection(pq), c))
    }))
}

fn cross_pair_stage(g: &ColoredGraph, picks: &[usize], pq: &VertexSet, alpha_bound: Option<usize>) -> Option<Triangle> {
    let mut found = Vec::new();
    for &u in picks {
        for &v in picks {
            if u == v {
                continue;
            }
            let mut common = g.neighbors_in(u, Color::Red).intersection(g.neighbors_in(v, Color::Blue));
            common.intersect_with(pq);
            if alpha_bound.is_some_and(|a| common.len() <= a) {
                continue;
            }
            // a red edge in the common set closes a red triangle with u, a blue one with v
            found.extend(colored_edge_in(g, u, &common, Color::Red));
            found.extend(colored_edge_in(g, v, &common, Color::Blue));
        }
    }
    min_triangle(found)
}

fn transversal_stage(g: &ColoredGraph, parts: &Parts<'_>) -> Option<Triangle> {
    for color in Color::BOTH {
        let mut order: Vec<usize> = parts.s.iter().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors_in(v, color).intersection_len(parts.p)), v));
        for v in order {
            let xs = g.neighbors_in(v, color).intersection(parts.p);
            let ys = g.neighbors_in(v, color).intersection(parts.q);
            if ys.is_empty() {
                continue;
            }
            for x in xs.iter() {
                if let Some(y) = g.neighbors_in(x, color).intersection(&ys).first() {
                    return Some(Triangle::new([v, x, y], TriangleColor::from(color)));
                }
            }
        }
    }
    None
}

fn enumeration_stage(g: &ColoredGraph, parts: &Parts<'_>, budget: u64) -> (Option<Triangle>, bool) {
    let mut within = parts.p.clone();
    within.union_with(parts.q);
    within.union_with(parts.s);
    let mut spent = 0u64;
    for a in within.iter() {
        for b in g.graph().neighbors(a).intersection(&within).iter().filter(|&b| b > a) {
            spent += 1;
            if spent > budget {
                return (None, true);
            }
            let color = g.color(a, b).expect("edge");
            let closing = g.neighbors_in(a, color).intersection(g.neighbors_in(b, color));
            for c in closing.intersection(&within).iter().filter(|&c| c > b) {
                let t = Triangle::new([a, b, c], TriangleColor::from(color));
                if parts.admits(&t) {
                    return (Some(t), false);
                }
            }
        }
    }
    (None, false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FivePartTiling {
    pub tiling: Tiling,
    /// Triangles found on `V1 ∪ V2 ∪ V3` and on `V1' ∪ V4 ∪ V5`.
    pub first_phase: usize,
    pub second_phase: usize,
    /// `|Γ| >= (1 - √ε)·m`.
    pub target_reached: bool,
}

/// Default `β` used by [`five_part_tiler`] when calling the finder.
pub const FIVE_PART_BETA: (i64, i64) = (3, 10);

/// Greedy tiling of a bowtie blow-up.
///
/// First the finder is applied repeatedly with `P = V2`, `Q = V3`, `S = V1`
/// restricted to untouched vertices. If at least `√ε·m` vertices of `V1`
/// remain, the same is done with `P = V4`, `Q = V5` and the remaining part
/// of `V1`. Every triangle therefore meets `V1` in at most one vertex.
pub fn five_part_tiler<S: Scalar>(inst: &FivePartInstance, eps: &S) -> FivePartTiling {
    let g = &inst.colored_graph;
    let m = inst.m;
    let beta = S::ratio(FIVE_PART_BETA.0, FIVE_PART_BETA.1);
    let mut free = VertexSet::full(g.n());
    let mut triangles = Vec::new();

    let phase = |pi: usize, qi: usize, free: &mut VertexSet, triangles: &mut Vec<Triangle>| {
        let mut count = 0;
        loop {
            let p = inst.part(pi).intersection(free);
            let q = inst.part(qi).intersection(free);
            let s = inst.part(0).intersection(free);
            let found = three_part_mono_finder(g, &p, &q, &s, &beta, eps, None, u64::MAX);
            let Some(t) = found.triangle else { break };
            for v in t.vertices {
                free.remove(v);
            }
            triangles.push(t);
            count += 1;
        }
        count
    };
    let first_phase = phase(1, 2, &mut free, &mut triangles);
    let leftover = inst.part(0).intersection_len(&free);
    let second_phase = if leftover > 0 && at_least_sqrt(leftover, eps, m) {
        phase(3, 4, &mut free, &mut triangles)
    } else {
        0
    };
    let target_reached = at_least_one_minus_sqrt(triangles.len(), eps, m);
    FivePartTiling { tiling: Tiling { triangles, mode: Mode::Weak }, first_phase, second_phase, target_reached }
}
