//! Maximum monochromatic triangle tilings.
//!
//! The exact solver is a 3-set packing branch-and-bound over the
//! monochromatic-triangle hypergraph. Branching always happens on the
//! smallest vertex that still lies in a candidate triangle, and candidate
//! triangles are kept in canonical order, so the sequence of incumbents (and
//! the returned optimum) is fully determined by the input.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::generators::rng;
use crate::graph::{Color, ColoredGraph, Mode, Tiling, Triangle, TriangleColor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub tiling: Tiling,
    /// `true` iff the search completed, so no larger tiling of this mode exists.
    pub exact: bool,
    pub nodes_expanded: u64,
    /// Bound computed at the root of the search.
    pub upper_bound_used: usize,
}

impl SolveResult {
    pub fn size(&self) -> usize {
        self.tiling.len()
    }
}

/// Exact maximum tiling within `budget` branch nodes.
pub fn max_mono_tiling_exact(g: &ColoredGraph, mode: Mode, budget: u64) -> SolveResult {
    max_mono_tiling_exact_with(g, mode, budget, false)
}

/// As [`max_mono_tiling_exact`]; with `parallel`, the two color classes of a
/// strong solve run on separate threads. The result is identical either way.
pub fn max_mono_tiling_exact_with(g: &ColoredGraph, mode: Mode, budget: u64, parallel: bool) -> SolveResult {
    let all = g.mono_triangles(None);
    match mode {
        Mode::Weak => {
            let packing = pack_triangles(g.n(), &all, budget);
            packing.into_result(&all, Mode::Weak)
        }
        Mode::Strong => {
            let class = |c: Color| -> Vec<Triangle> {
                all.iter().filter(|t| t.color == TriangleColor::from(c)).copied().collect()
            };
            let (red, blue) = (class(Color::Red), class(Color::Blue));
            let (pr, pb) = if parallel {
                rayon::join(|| pack_triangles(g.n(), &red, budget), || pack_triangles(g.n(), &blue, budget))
            } else {
                (pack_triangles(g.n(), &red, budget), pack_triangles(g.n(), &blue, budget))
            };
            let exact = pr.exact && pb.exact;
            let nodes = pr.nodes + pb.nodes;
            let bound = pr.root_bound.max(pb.root_bound);
            let mut out = if pb.best.len() > pr.best.len() {
                pb.into_result(&blue, Mode::Strong)
            } else {
                pr.into_result(&red, Mode::Strong)
            };
            out.exact = exact;
            out.nodes_expanded = nodes;
            out.upper_bound_used = bound;
            out
        }
    }
}

pub(crate) struct Packing {
    pub best: Vec<usize>,
    pub exact: bool,
    pub nodes: u64,
    pub root_bound: usize,
}

impl Packing {
    fn into_result(self, tris: &[Triangle], mode: Mode) -> SolveResult {
        let mut triangles: Vec<Triangle> = self.best.iter().map(|&i| tris[i]).collect();
        triangles.sort();
        SolveResult {
            tiling: Tiling { triangles, mode },
            exact: self.exact,
            nodes_expanded: self.nodes,
            upper_bound_used: self.root_bound,
        }
    }
}

/// Maximum set of pairwise disjoint triangles from `tris` (indices into it).
pub(crate) fn pack_triangles(n: usize, tris: &[Triangle], budget: u64) -> Packing {
    let mut search = PackingSearch {
        n,
        tris,
        budget,
        nodes: 0,
        aborted: false,
        best: Vec::new(),
        current: Vec::new(),
        root_bound: None,
    };
    let alive: Vec<u32> = (0..tris.len() as u32).collect();
    search.run(alive);
    Packing {
        best: search.best,
        exact: !search.aborted,
        nodes: search.nodes,
        root_bound: search.root_bound.unwrap_or(0),
    }
}

struct PackingSearch<'a> {
    n: usize,
    tris: &'a [Triangle],
    budget: u64,
    nodes: u64,
    aborted: bool,
    best: Vec<usize>,
    current: Vec<usize>,
    root_bound: Option<usize>,
}

impl PackingSearch<'_> {
    fn run(&mut self, alive: Vec<u32>) {
        if self.aborted {
            return;
        }
        if self.nodes >= self.budget {
            self.aborted = true;
            return;
        }
        self.nodes += 1;
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if alive.is_empty() {
            self.root_bound.get_or_insert(0);
            return;
        }
        let coverable = VertexSet::from_iter(
            self.n,
            alive.iter().flat_map(|&i| self.tris[i as usize].vertices),
        );
        let mut bound = coverable.len() / 3;
        if self.current.len() + bound > self.best.len() {
            bound = bound.min(self.vertex_cover_bound(&alive));
        }
        self.root_bound.get_or_insert(bound);
        if self.current.len() + bound <= self.best.len() {
            return;
        }

        let v = coverable.first().expect("alive triangles cover something");
        for &i in alive.iter().filter(|&&i| self.tris[i as usize].contains(v)) {
            let t = self.tris[i as usize];
            let next: Vec<u32> = alive
                .iter()
                .copied()
                .filter(|&j| !self.tris[j as usize].shares_vertex(&t))
                .collect();
            self.current.push(i as usize);
            self.run(next);
            self.current.pop();
            if self.aborted {
                return;
            }
        }
        let next: Vec<u32> = alive
            .iter()
            .copied()
            .filter(|&j| !self.tris[j as usize].contains(v))
            .collect();
        self.run(next);
    }

    /// Greedy cover of the alive triangles by vertices: disjoint triangles
    /// need distinct cover vertices, so the cover size bounds the packing.
    fn vertex_cover_bound(&self, alive: &[u32]) -> usize {
        let mut count = vec![0usize; self.n];
        for &i in alive {
            for v in self.tris[i as usize].vertices {
                count[v] += 1;
            }
        }
        let mut covered = vec![false; alive.len()];
        let mut remaining = alive.len();
        let mut picks = 0;
        while remaining > 0 {
            let (v, _) = count
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
                .expect("n > 0");
            picks += 1;
            for (k, &i) in alive.iter().enumerate() {
                let t = &self.tris[i as usize];
                if !covered[k] && t.contains(v) {
                    covered[k] = true;
                    remaining -= 1;
                    for w in t.vertices {
                        count[w] -= 1;
                    }
                }
            }
        }
        picks
    }
}

/// Greedy tiling followed by seeded local search.
///
/// Greedy takes triangles in canonical order. Each local-search step removes
/// one triangle of the current tiling and tries to re-insert two disjoint
/// monochromatic triangles on the freed vertices (a `(1,2)`-swap); failing
/// that, it swaps in a different triangle (`(1,1)`). The best tiling seen is
/// returned, so the result is never smaller than greedy.
pub fn heuristic_tiling(g: &ColoredGraph, mode: Mode, iters: usize, seed: u64) -> Tiling {
    let all = g.mono_triangles(None);
    match mode {
        Mode::Weak => local_search(g.n(), &all, iters, seed, Mode::Weak),
        Mode::Strong => {
            let mut best: Option<Tiling> = None;
            for c in Color::BOTH {
                let class: Vec<Triangle> =
                    all.iter().filter(|t| t.color == TriangleColor::from(c)).copied().collect();
                let t = local_search(g.n(), &class, iters, seed, Mode::Strong);
                if best.as_ref().is_none_or(|b| t.len() > b.len()) {
                    best = Some(t);
                }
            }
            best.expect("two color classes")
        }
    }
}

/// Canonical-order greedy packing.
pub fn greedy_tiling(g: &ColoredGraph, mode: Mode) -> Tiling {
    let all = g.mono_triangles(None);
    match mode {
        Mode::Weak => {
            let picked = greedy_pack(g.n(), &all);
            Tiling { triangles: picked.iter().map(|&i| all[i]).collect(), mode }
        }
        Mode::Strong => {
            let mut best = Tiling::empty(Mode::Strong);
            for c in Color::BOTH {
                let class: Vec<Triangle> =
                    all.iter().filter(|t| t.color == TriangleColor::from(c)).copied().collect();
                let picked = greedy_pack(g.n(), &class);
                if picked.len() > best.len() {
                    best = Tiling { triangles: picked.iter().map(|&i| class[i]).collect(), mode };
                }
            }
            best
        }
    }
}

fn greedy_pack(n: usize, tris: &[Triangle]) -> Vec<usize> {
    let mut used = VertexSet::new(n);
    let mut out = Vec::new();
    for (i, t) in tris.iter().enumerate() {
        if t.vertices.iter().all(|&v| !used.contains(v)) {
            t.vertices.iter().for_each(|&v| {
                used.insert(v);
            });
            out.push(i);
        }
    }
    out
}

fn local_search(n: usize, tris: &[Triangle], iters: usize, seed: u64, mode: Mode) -> Tiling {
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, t) in tris.iter().enumerate() {
        for v in t.vertices {
            by_vertex[v].push(i);
        }
    }
    let mut current = greedy_pack(n, tris);
    let mut best = current.clone();
    let mut used = VertexSet::from_iter(n, current.iter().flat_map(|&i| tris[i].vertices));
    let mut rng = rng(seed);

    let fits = |used: &VertexSet, i: usize| tris[i].vertices.iter().all(|&v| !used.contains(v));

    for _ in 0..iters {
        if current.is_empty() {
            break;
        }
        let pos = rng.gen_range(0..current.len());
        let removed = current.swap_remove(pos);
        for v in tris[removed].vertices {
            used.remove(v);
        }
        // Triangles through a freed vertex that fit in the uncovered set.
        let mut cands: Vec<usize> = tris[removed]
            .vertices
            .iter()
            .flat_map(|&v| by_vertex[v].iter().copied())
            .filter(|&i| i != removed && fits(&used, i))
            .collect();
        cands.sort_unstable();
        cands.dedup();
        cands.shuffle(&mut rng);

        let mut pair = None;
        'outer: for (a, &i) in cands.iter().enumerate() {
            for &j in &cands[a + 1..] {
                if !tris[i].shares_vertex(&tris[j]) {
                    pair = Some((i, j));
                    break 'outer;
                }
            }
        }
        let inserted: Vec<usize> = match pair {
            Some((i, j)) => vec![i, j],
            None => match cands.first() {
                Some(&i) => vec![i],
                None => vec![removed],
            },
        };
        for i in inserted {
            for v in tris[i].vertices {
                used.insert(v);
            }
            current.push(i);
        }
        // keep the tiling maximal around the freed vertices
        for &v in &tris[removed].vertices {
            if used.contains(v) {
                continue;
            }
            if let Some(&i) = by_vertex[v].iter().find(|&&i| fits(&used, i)) {
                for w in tris[i].vertices {
                    used.insert(w);
                }
                current.push(i);
            }
        }
        if current.len() > best.len() {
            best = current.clone();
        }
    }
    let mut triangles: Vec<Triangle> = best.into_iter().map(|i| tris[i]).collect();
    triangles.sort();
    Tiling { triangles, mode }
}

/// Why a tiling fails verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TilingViolation {
    MissingEdge(Triangle),
    NotMonochromatic(Triangle),
    WrongColorTag(Triangle),
    Overlap(Triangle, Triangle),
    MixedColorsInStrong,
}

pub fn check_tiling(g: &ColoredGraph, t: &Tiling) -> Result<(), TilingViolation> {
    let mut used = VertexSet::new(g.n());
    let mut owner: Vec<Option<Triangle>> = vec![None; g.n()];
    for tri in &t.triangles {
        let [a, b, c] = tri.vertices;
        if a == b || b == c || c >= g.n() {
            return Err(TilingViolation::MissingEdge(*tri));
        }
        let actual = g.triangle(a, b, c).ok_or(TilingViolation::MissingEdge(*tri))?;
        if actual.color == TriangleColor::Mixed {
            return Err(TilingViolation::NotMonochromatic(*tri));
        }
        if actual.color != tri.color {
            return Err(TilingViolation::WrongColorTag(*tri));
        }
        for v in tri.vertices {
            if !used.insert(v) {
                return Err(TilingViolation::Overlap(owner[v].expect("owner recorded"), *tri));
            }
            owner[v] = Some(*tri);
        }
    }
    if t.mode == Mode::Strong {
        if let Some(first) = t.triangles.first() {
            if t.triangles.iter().any(|x| x.color != first.color) {
                return Err(TilingViolation::MixedColorsInStrong);
            }
        }
    }
    Ok(())
}

/// All triangles exist, are monochromatic with a correct tag, are pairwise
/// disjoint, and share one color in strong mode.
pub fn verify_tiling(g: &ColoredGraph, t: &Tiling) -> bool {
    check_tiling(g, t).is_ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PeelStop {
    /// `δ(G) < 3/5 |G|` from the start; nothing removed.
    Precondition,
    /// Reached a state with `δ(G') < 3/5 |G'|`.
    BelowThreshold,
    /// Degree still high but no monochromatic triangle left.
    NoMonoTriangle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PeelStep {
    pub order: usize,
    pub min_degree: usize,
}

#[derive(Debug, Clone)]
pub struct PeelResult {
    pub tiling: Tiling,
    pub residual: VertexSet,
    pub stop: PeelStop,
    /// Order and minimum degree of every visited state, starting with `G`.
    pub trace: Vec<PeelStep>,
    /// For a degree stop after at least one removal: whether the stopping
    /// state satisfies `δ(G') >= 3/5 |G'| - 3`.
    pub window_holds: Option<bool>,
}

fn at_least_three_fifths(min_degree: usize, order: usize) -> bool {
    5 * min_degree >= 3 * order
}

/// Removes the canonically-first monochromatic triangle while the current
/// graph has `δ >= 3/5 · order`.
pub fn peel_to_three_fifths(g: &ColoredGraph) -> PeelResult {
    let mut residual = g.graph().vertex_set();
    let mut triangles = Vec::new();
    let mut trace = Vec::new();
    loop {
        let order = residual.len();
        let min_degree = g.graph().min_degree_within(&residual);
        trace.push(PeelStep { order, min_degree });
        if !at_least_three_fifths(min_degree, order) {
            let stop = if triangles.is_empty() { PeelStop::Precondition } else { PeelStop::BelowThreshold };
            let window_holds = (!triangles.is_empty()).then(|| 5 * min_degree + 15 >= 3 * order);
            debug_assert_ne!(window_holds, Some(false));
            return PeelResult { tiling: Tiling { triangles, mode: Mode::Weak }, residual, stop, trace, window_holds };
        }
        match g.mono_triangles_within(&residual, Some(1)).pop() {
            Some(t) => {
                for v in t.vertices {
                    residual.remove(v);
                }
                triangles.push(t);
            }
            None => {
                return PeelResult {
                    tiling: Tiling { triangles, mode: Mode::Weak },
                    residual,
                    stop: PeelStop::NoMonoTriangle,
                    trace,
                    window_holds: None,
                };
            }
        }
    }
}
