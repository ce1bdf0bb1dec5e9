use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Smallest `C` with `C >= 5/2·C_F2 + 10`, `C > 0`, `3/2·k - 5/2·δ + C` a
/// nonnegative integer and `5/2·k - 5/2·δ + C` divisible by 5.
///
/// Writing `a = 3/2·k - 5/2·δ`, admissible values are `C = j - a` with `j`
/// a nonnegative integer and `j ≡ -k (mod 5)`; they are stepped through in
/// increasing order.
pub fn admissible_c<S: Scalar>(k: usize, delta: usize, c_f2: &S) -> Result<S> {
    if 2 * delta <= k || 5 * delta > 3 * k {
        return Err(Error::ParameterOutOfRange(format!(
            "need k/2 < delta <= 3k/5, got k = {k}, delta = {delta}"
        )));
    }
    let a = S::ratio(3 * k as i64 - 5 * delta as i64, 2);
    let lower = S::ratio(5, 2) * c_f2.clone() + S::from_count(10);
    let mut j = (5 - k % 5) % 5;
    loop {
        let c = S::from_count(j) - a.clone();
        if c >= lower && c > S::zero() {
            return Ok(c);
        }
        j += 5;
    }
}

/// `R'`: the base graph on `0..k` plus an independent set `W` on
/// `k..k+|W|`, each `W`-vertex adjacent to all of `0..k`.
#[derive(Debug, Clone)]
pub struct AuxReduction<S> {
    pub base: Graph,
    pub c: S,
    pub k: usize,
    pub delta: usize,
    pub w: VertexSet,
    pub aux: Graph,
    pub aux_min_degree: usize,
}

impl<S: Scalar> AuxReduction<S> {
    pub fn w_size(&self) -> usize {
        self.w.len()
    }

    pub fn order(&self) -> usize {
        self.aux.n()
    }

    /// Whether `δ(R') >= 3/5·|R'| + C_F2`, the degree condition under which
    /// a perfect F2-tiling is guaranteed.
    pub fn degree_hypothesis_holds(&self, c_f2: &S) -> bool {
        S::from_count(self.aux_min_degree) >= S::ratio(3, 5) * S::from_count(self.order()) + c_f2.clone()
    }
}

pub fn auxiliary_reduction<S: Scalar>(r: &Graph, c: &S) -> Result<AuxReduction<S>> {
    let k = r.n();
    if k == 0 {
        return Err(Error::ParameterOutOfRange("base graph has no vertices".into()));
    }
    let delta = r.min_degree();
    let w_exact = S::ratio(3 * k as i64 - 5 * delta as i64, 2) + c.clone();
    if !w_exact.is_integer() || w_exact < S::zero() {
        return Err(Error::ArithmeticConstraintViolated(format!(
            "|W| = 3k/2 - 5delta/2 + C = {w_exact} is not a nonnegative integer"
        )));
    }
    let w_size = w_exact.floor_i64().expect("fits") as usize;
    let order = k + w_size;
    if order % 5 != 0 {
        return Err(Error::ArithmeticConstraintViolated(format!(
            "|V(R')| = 5k/2 - 5delta/2 + C = {order} is not divisible by 5"
        )));
    }
    let mut aux = Graph::empty(order);
    for (u, v) in r.edges() {
        aux.insert_edge(u, v);
    }
    for w in k..order {
        for v in 0..k {
            aux.insert_edge(v, w);
        }
    }
    Ok(AuxReduction {
        base: r.clone(),
        c: c.clone(),
        k,
        delta,
        w: VertexSet::range(order, k..order),
        aux_min_degree: aux.min_degree(),
        aux,
    })
}

/// Two triangles `center, wings[i][0], wings[i][1]` sharing only the center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct F2Copy {
    pub center: usize,
    pub wings: [[usize; 2]; 2],
}

impl F2Copy {
    /// Canonical form: each wing sorted, wings in increasing order.
    pub fn new(center: usize, a: [usize; 2], b: [usize; 2]) -> Self {
        let (mut a, mut b) = (a, b);
        a.sort_unstable();
        b.sort_unstable();
        F2Copy { center, wings: if a <= b { [a, b] } else { [b, a] } }
    }

    pub fn vertices(&self) -> [usize; 5] {
        [self.center, self.wings[0][0], self.wings[0][1], self.wings[1][0], self.wings[1][1]]
    }

    /// Five distinct vertices with all six bowtie edges present in `g`.
    pub fn is_in(&self, g: &Graph) -> bool {
        let v = self.vertices();
        if v.iter().any(|&x| x >= g.n()) {
            return false;
        }
        let distinct = (0..5).all(|i| (i + 1..5).all(|j| v[i] != v[j]));
        distinct
            && self.wings.iter().all(|&[x, y]| g.has_edge(self.center, x) && g.has_edge(self.center, y) && g.has_edge(x, y))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Tiling {
    pub copies: Vec<F2Copy>,
    /// The search finished inside the budget, so `copies` is optimal (or, in
    /// perfect mode, a perfect tiling was found or shown not to exist).
    pub exact: bool,
    pub perfect: bool,
    pub nodes: u64,
}

/// Vertex-disjoint F2 packing by branch and bound.
///
/// Branches on the free vertex of smallest free degree. In perfect mode that
/// vertex must be covered; otherwise it may also be discarded, and the
/// search is pruned with `⌊free/5⌋`. Copies are tried with the lowest total
/// free degree first. When a perfect tiling is required but not found the
/// largest partial packing seen is returned with `perfect == false`.
pub fn f2_tiling_exact(g: &Graph, require_perfect: bool, budget: u64) -> F2Tiling {
    let n = g.n();
    if require_perfect && n % 5 != 0 {
        return F2Tiling { copies: Vec::new(), exact: true, perfect: false, nodes: 0 };
    }
    let mut search = F2Search {
        g,
        require_perfect,
        budget,
        nodes: 0,
        exhausted: false,
        current: Vec::new(),
        best: Vec::new(),
        done: false,
    };
    search.run(VertexSet::full(n));
    let perfect = 5 * search.best.len() == n;
    F2Tiling { exact: !search.exhausted, perfect, nodes: search.nodes, copies: search.best }
}

struct F2Search<'a> {
    g: &'a Graph,
    require_perfect: bool,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    current: Vec<F2Copy>,
    best: Vec<F2Copy>,
    done: bool,
}

impl F2Search<'_> {
    fn run(&mut self, free: VertexSet) {
        if self.done || self.exhausted {
            return;
        }
        if self.nodes >= self.budget {
            self.exhausted = true;
            return;
        }
        self.nodes += 1;
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if free.is_empty() {
            self.done = 5 * self.current.len() == self.g.n();
            return;
        }
        if self.current.len() + free.len() / 5 <= self.best.len() && !self.require_perfect {
            return;
        }
        let free_degree = |v: usize| self.g.neighbors(v).intersection_len(&free);
        let v = free.iter().min_by_key(|&v| (free_degree(v), v)).expect("nonempty");
        let mut options = copies_through(self.g, v, &free);
        options.sort_by_cached_key(|c| (c.vertices().iter().map(|&x| free_degree(x)).sum::<usize>(), *c));
        for copy in options {
            let mut rest = free.clone();
            for x in copy.vertices() {
                rest.remove(x);
            }
            self.current.push(copy);
            self.run(rest);
            self.current.pop();
            if self.done || self.exhausted {
                return;
            }
        }
        if !self.require_perfect {
            let mut rest = free;
            rest.remove(v);
            self.run(rest);
        }
    }
}

/// Every F2 copy inside `free` that contains `v`, in canonical form.
fn copies_through(g: &Graph, v: usize, free: &VertexSet) -> Vec<F2Copy> {
    let mut out = Vec::new();
    // v as the center: two disjoint edges inside N(v)
    let nv = g.neighbors(v).intersection(free);
    let edges_in = |set: &VertexSet| -> Vec<[usize; 2]> {
        set.iter()
            .flat_map(|x| g.neighbors(x).intersection(set).iter().filter(move |&y| y > x).map(move |y| [x, y]).collect::<Vec<_>>())
            .collect()
    };
    let e = edges_in(&nv);
    for (i, a) in e.iter().enumerate() {
        for b in &e[i + 1..] {
            if a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1] {
                out.push(F2Copy::new(v, *a, *b));
            }
        }
    }
    // v in a wing {v, x} around center c
    for c in nv.iter() {
        let nc = g.neighbors(c).intersection(free);
        for x in nv.intersection(&nc).iter() {
            let mut rest = nc.clone();
            rest.remove(v);
            rest.remove(x);
            for other in edges_in(&rest) {
                out.push(F2Copy::new(c, [v, x], other));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct F2Classification<S> {
    /// Copies with exactly two, one and no vertices in `W`.
    pub s: usize,
    pub t: usize,
    pub l: usize,
    /// `2δ - k - 4/5·C`, which `ℓ - s` must equal.
    pub l_minus_s: S,
    /// `2δ - k - C`, a lower bound on `ℓ`.
    pub l_lower: S,
}

/// Counts copies of a perfect F2-tiling of the auxiliary graph by how many
/// `W`-vertices they contain and checks the two vertex-count identities
/// `2s + t = |W|` and `3s + 4t + 5ℓ = k`, then the derived `ℓ - s` value.
///
/// Vertices are `0..w.capacity()`; a copy with three or more `W`-vertices
/// cannot exist in a valid tiling and is reported as an identity violation.
pub fn classify_f2_copies<S: Scalar>(
    copies: &[F2Copy],
    w: &VertexSet,
    k: usize,
    delta: usize,
    c: &S,
) -> Result<F2Classification<S>> {
    let n = w.capacity();
    let mut covered = VertexSet::new(n);
    for copy in copies {
        for x in copy.vertices() {
            if x >= n || !covered.insert(x) {
                return Err(Error::NotPerfect(format!("vertex {x} is repeated or out of range")));
            }
        }
    }
    if covered.len() != n {
        return Err(Error::NotPerfect(format!("{} of {n} vertices covered", covered.len())));
    }
    let (mut s, mut t, mut l) = (0, 0, 0);
    for copy in copies {
        match copy.vertices().iter().filter(|&&x| w.contains(x)).count() {
            0 => l += 1,
            1 => t += 1,
            2 => s += 1,
            more => {
                return Err(Error::CountIdentityViolated(format!(
                    "copy {copy:?} has {more} vertices in an independent set"
                )))
            }
        }
    }
    if 2 * s + t != w.len() {
        return Err(Error::CountIdentityViolated(format!("2s + t = {} but |W| = {}", 2 * s + t, w.len())));
    }
    if 3 * s + 4 * t + 5 * l != k {
        return Err(Error::CountIdentityViolated(format!("3s + 4t + 5l = {} but k = {k}", 3 * s + 4 * t + 5 * l)));
    }
    let base = S::from_count(2 * delta) - S::from_count(k);
    let l_minus_s = base.clone() - S::ratio(4, 5) * c.clone();
    let l_lower = base - c.clone();
    let observed = S::from_count(l) - S::from_count(s);
    if observed != l_minus_s {
        return Err(Error::CountIdentityViolated(format!("l - s = {observed} but 2delta - k - 4C/5 = {l_minus_s}")));
    }
    if S::from_count(l) < l_lower {
        return Err(Error::CountIdentityViolated(format!("l = {l} below 2delta - k - C = {l_lower}")));
    }
    Ok(F2Classification { s, t, l, l_minus_s, l_lower })
}
