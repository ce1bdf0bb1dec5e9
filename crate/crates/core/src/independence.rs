//! Independence number and triangle-freeness.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceResult {
    pub alpha: usize,
    pub witness: Vec<usize>,
    /// The search finished inside its budget, so `alpha` is the independence number.
    pub exact: bool,
    pub nodes: u64,
}

/// Branch-and-bound maximum independent set.
///
/// Branches on the vertex of highest degree in the remaining candidate set
/// (ties to the smaller id) and prunes with a greedy clique cover. `budget`
/// caps the number of branch nodes; on exhaustion the best set found so far is
/// returned with `exact = false`.
pub fn max_independent_set_exact(g: &Graph, budget: u64) -> IndependenceResult {
    let mut search = MisSearch {
        g,
        budget,
        nodes: 0,
        aborted: false,
        best: greedy_independent_set(g),
        current: Vec::new(),
    };
    search.run(g.vertex_set());
    let mut witness = search.best;
    witness.sort_unstable();
    let set = VertexSet::from_iter(g.n(), witness.iter().copied());
    assert!(
        g.is_independent(&set) && set.len() == witness.len(),
        "independent set witness failed its recheck"
    );
    IndependenceResult {
        alpha: witness.len(),
        witness,
        exact: !search.aborted,
        nodes: search.nodes,
    }
}

/// Minimum-degree greedy, used as the starting incumbent.
fn greedy_independent_set(g: &Graph) -> Vec<usize> {
    let mut cand = g.vertex_set();
    let mut out = Vec::new();
    while !cand.is_empty() {
        let v = cand
            .iter()
            .min_by_key(|&v| (g.neighbors(v).intersection_len(&cand), v))
            .expect("nonempty");
        out.push(v);
        cand.remove(v);
        cand.difference_with(g.neighbors(v));
    }
    out
}

struct MisSearch<'a> {
    g: &'a Graph,
    budget: u64,
    nodes: u64,
    aborted: bool,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl MisSearch<'_> {
    fn run(&mut self, cand: VertexSet) {
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
        if cand.is_empty() {
            return;
        }
        if self.current.len() + clique_cover_size(self.g, &cand) <= self.best.len() {
            return;
        }
        let (v, deg) = cand
            .iter()
            .map(|v| (v, self.g.neighbors(v).intersection_len(&cand)))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("nonempty");
        if deg == 0 {
            let before = self.current.len();
            self.current.extend(cand.iter());
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            self.current.truncate(before);
            return;
        }

        let mut with_v = cand.clone();
        with_v.remove(v);
        with_v.difference_with(self.g.neighbors(v));
        self.current.push(v);
        self.run(with_v);
        self.current.pop();

        let mut without_v = cand;
        without_v.remove(v);
        self.run(without_v);
    }
}

/// Number of cliques in a first-fit clique partition of `cand`; an upper
/// bound on the independence number of `G[cand]`.
fn clique_cover_size(g: &Graph, cand: &VertexSet) -> usize {
    let mut cliques: Vec<VertexSet> = Vec::new();
    for v in cand.iter() {
        match cliques.iter_mut().find(|c| c.is_subset(g.neighbors(v))) {
            Some(c) => {
                c.insert(v);
            }
            None => cliques.push(VertexSet::from_iter(g.n(), [v])),
        }
    }
    cliques.len()
}

/// `true` iff no three vertices are pairwise adjacent.
pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| !g.neighbors(u).intersects(g.neighbors(v)))
}
