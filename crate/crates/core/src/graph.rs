//! Graphs, 2-edge-colorings, monochromatic triangles and tilings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_new_edge(u, v)?;
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.insert_edge(v, (v + 1) % n);
            }
        }
        g
    }

    /// Circulant graph on `Z_n`: `i ~ j` iff `i - j` or `j - i` is in `connections`.
    pub fn circulant(n: usize, connections: &[usize]) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for &c in connections {
                let c = c % n;
                if c == 0 {
                    continue;
                }
                let j = (i + c) % n;
                if !g.has_edge(i, j) {
                    g.insert_edge(i, j);
                }
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).expect("petersen edges are valid")
    }

    /// Two triangles sharing vertex 0: `{0,1,2}` and `{0,3,4}`.
    pub fn bowtie() -> Self {
        Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
            .expect("bowtie edges are valid")
    }

    /// `sides[i]` vertices per part, all cross edges present.
    pub fn complete_multipartite(sides: &[usize]) -> Self {
        let n = sides.iter().sum();
        let part = part_index(sides);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if part[u] != part[v] {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    fn check_new_edge(&self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        Ok(())
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_edge(u, v));
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        if self.adj[u].remove(v) {
            self.adj[v].remove(u);
            self.edge_count -= 1;
        }
    }

    /// Adds `uv`, rejecting loops, duplicates and out-of-range ids.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_new_edge(u, v)?;
        self.insert_edge(u, v);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Minimum degree of the subgraph induced on `within`; 0 if `within` is empty.
    pub fn min_degree_within(&self, within: &VertexSet) -> usize {
        within
            .iter()
            .map(|v| self.adj[v].intersection_len(within))
            .min()
            .unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    /// Number of edges with one end in `x` and the other in `y` (disjoint sets).
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> usize {
        x.iter().map(|v| self.adj[v].intersection_len(y)).sum()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut g = Graph::empty(offset + other.n());
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + offset, v + offset);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

pub(crate) fn part_index(sides: &[usize]) -> Vec<usize> {
    sides
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat(i).take(s))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::Red, Color::Blue];

    pub fn symbol(self) -> char {
        match self {
            Color::Red => 'r',
            Color::Blue => 'b',
        }
    }

    pub fn from_symbol(s: &str) -> Option<Color> {
        match s {
            "r" | "R" | "red" => Some(Color::Red),
            "b" | "B" | "blue" => Some(Color::Blue),
            _ => None,
        }
    }

    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// A graph with every edge colored red or blue.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: Graph,
    red: Vec<VertexSet>,
    blue: Vec<VertexSet>,
}

impl ColoredGraph {
    pub fn new(n: usize, edges: &[(usize, usize, Color)]) -> Result<Self> {
        let mut graph = Graph::empty(n);
        let mut red = vec![VertexSet::new(n); n];
        let mut blue = vec![VertexSet::new(n); n];
        for &(u, v, c) in edges {
            graph.add_edge(u, v)?;
            let side = match c {
                Color::Red => &mut red,
                Color::Blue => &mut blue,
            };
            side[u].insert(v);
            side[v].insert(u);
        }
        Ok(ColoredGraph { graph, red, blue })
    }

    /// Colors every edge of `graph` with `color(u, v)` (called with `u < v`).
    pub fn from_fn(graph: Graph, mut color: impl FnMut(usize, usize) -> Color) -> Self {
        let n = graph.n();
        let mut red = vec![VertexSet::new(n); n];
        let mut blue = vec![VertexSet::new(n); n];
        let edges: Vec<_> = graph.edges().collect();
        for (u, v) in edges {
            let side = match color(u, v) {
                Color::Red => &mut red,
                Color::Blue => &mut blue,
            };
            side[u].insert(v);
            side[v].insert(u);
        }
        ColoredGraph { graph, red, blue }
    }

    pub fn monochrome(graph: Graph, color: Color) -> Self {
        Self::from_fn(graph, |_, _| color)
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        if u >= self.n() {
            None
        } else if self.red[u].contains(v) {
            Some(Color::Red)
        } else if self.blue[u].contains(v) {
            Some(Color::Blue)
        } else {
            None
        }
    }

    /// `N_R(v)` or `N_B(v)`.
    #[inline]
    pub fn neighbors_in(&self, v: usize, color: Color) -> &VertexSet {
        match color {
            Color::Red => &self.red[v],
            Color::Blue => &self.blue[v],
        }
    }

    pub fn edge_count_in(&self, color: Color) -> usize {
        (0..self.n()).map(|v| self.neighbors_in(v, color).len()).sum::<usize>() / 2
    }

    /// Spanning red and blue subgraphs.
    pub fn color_class_views(&self) -> (Graph, Graph) {
        let view = |sets: &[VertexSet]| {
            let edge_count = sets.iter().map(|s| s.len()).sum::<usize>() / 2;
            Graph {
                adj: sets.to_vec(),
                edge_count,
            }
        };
        (view(&self.red), view(&self.blue))
    }

    /// Edges in canonical order with their colors.
    pub fn colored_edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        self.graph
            .edges()
            .map(move |(u, v)| (u, v, self.color(u, v).expect("coloring is total")))
    }

    /// The triangle on `a, b, c` if all three edges exist.
    pub fn triangle(&self, a: usize, b: usize, c: usize) -> Option<Triangle> {
        let ab = self.color(a, b)?;
        let ac = self.color(a, c)?;
        let bc = self.color(b, c)?;
        let color = if ab == ac && ac == bc {
            TriangleColor::from(ab)
        } else {
            TriangleColor::Mixed
        };
        Some(Triangle::new([a, b, c], color))
    }

    /// All monochromatic triangles, lexicographic on sorted vertex triples.
    pub fn mono_triangles(&self, limit: Option<usize>) -> Vec<Triangle> {
        self.mono_triangles_within(&self.graph.vertex_set(), limit)
    }

    /// Monochromatic triangles with all vertices in `within`, canonical order.
    pub fn mono_triangles_within(&self, within: &VertexSet, limit: Option<usize>) -> Vec<Triangle> {
        let limit = limit.unwrap_or(usize::MAX);
        let mut out = Vec::new();
        if limit == 0 {
            return out;
        }
        for a in within.iter() {
            for b in self.graph.neighbors(a).iter().filter(|&b| b > a) {
                if !within.contains(b) {
                    continue;
                }
                let c = self.color(a, b).expect("edge present");
                let mut common = self.neighbors_in(a, c).intersection(self.neighbors_in(b, c));
                common.intersect_with(within);
                for x in common.iter().filter(|&x| x > b) {
                    out.push(Triangle::new([a, b, x], TriangleColor::from(c)));
                    if out.len() >= limit {
                        return out;
                    }
                }
            }
        }
        out
    }

    /// Single-vertex form: a monochromatic triangle through `u`, i.e. a red edge
    /// inside `N_R(u)` or a blue edge inside `N_B(u)`; canonical-first.
    pub fn mono_triangle_through(&self, u: usize) -> Result<Option<Triangle>> {
        self.check_vertex(u)?;
        let mut best: Option<Triangle> = None;
        for color in Color::BOTH {
            let nb = self.neighbors_in(u, color);
            for x in nb.iter() {
                let inner = self.neighbors_in(x, color).intersection(nb);
                if let Some(y) = inner.iter().find(|&y| y > x) {
                    let t = Triangle::new([u, x, y], TriangleColor::from(color));
                    if best.as_ref().is_none_or(|b| t.vertices < b.vertices) {
                        best = Some(t);
                    }
                    break;
                }
            }
        }
        Ok(best)
    }

    /// Monochromatic triangle certified by a neighbourhood argument.
    ///
    /// With only `u`, this is [`Self::mono_triangle_through`]. With `v` as
    /// well, the set `I = N_R(u) ∩ N_B(v)` is scanned for an edge `xy`: a red
    /// edge closes the red triangle `uxy`, a blue one the blue triangle `vxy`.
    /// When `alpha_bound` is given and `|I| <= alpha_bound`, the hypothesis
    /// fails and nothing is searched.
    pub fn neighborhood_witness(
        &self,
        u: usize,
        v: Option<usize>,
        alpha_bound: Option<usize>,
    ) -> Result<Option<Triangle>> {
        self.check_vertex(u)?;
        let Some(v) = v else {
            return self.mono_triangle_through(u);
        };
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::ParameterOutOfRange("the two witness vertices must differ".into()));
        }
        let common = self.neighbors_in(u, Color::Red).intersection(self.neighbors_in(v, Color::Blue));
        if let Some(a) = alpha_bound {
            if common.len() < a + 1 {
                return Ok(None);
            }
        }
        for x in common.iter() {
            if let Some(y) = self.graph.neighbors(x).intersection(&common).iter().find(|&y| y > x) {
                let t = match self.color(x, y).expect("edge present") {
                    Color::Red => Triangle::new([u, x, y], TriangleColor::Red),
                    Color::Blue => Triangle::new([v, x, y], TriangleColor::Blue),
                };
                return Ok(Some(t));
            }
        }
        Ok(None)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColoredGraph")
            .field("n", &self.n())
            .field("edges", &self.colored_edges().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleColor {
    Red,
    Blue,
    Mixed,
}

impl TriangleColor {
    pub fn mono(self) -> Option<Color> {
        match self {
            TriangleColor::Red => Some(Color::Red),
            TriangleColor::Blue => Some(Color::Blue),
            TriangleColor::Mixed => None,
        }
    }
}

impl From<Color> for TriangleColor {
    fn from(c: Color) -> Self {
        match c {
            Color::Red => TriangleColor::Red,
            Color::Blue => TriangleColor::Blue,
        }
    }
}

/// Three vertices (stored sorted) with the color pattern of their edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    pub vertices: [usize; 3],
    pub color: TriangleColor,
}

impl Triangle {
    pub fn new(mut vertices: [usize; 3], color: TriangleColor) -> Self {
        vertices.sort_unstable();
        Triangle { vertices, color }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn shares_vertex(&self, other: &Triangle) -> bool {
        self.vertices.iter().any(|v| other.contains(*v))
    }

    pub fn count_in(&self, set: &VertexSet) -> usize {
        self.vertices.iter().filter(|&&v| set.contains(v)).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Weak,
    Strong,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Weak => "weak",
            Mode::Strong => "strong",
        })
    }
}

/// Vertex-disjoint monochromatic triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    pub triangles: Vec<Triangle>,
    pub mode: Mode,
}

impl Tiling {
    pub fn empty(mode: Mode) -> Self {
        Tiling { triangles: Vec::new(), mode }
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn covered(&self, n: usize) -> VertexSet {
        VertexSet::from_iter(n, self.triangles.iter().flat_map(|t| t.vertices))
    }
}
