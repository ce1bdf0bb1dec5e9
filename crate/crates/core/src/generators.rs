//! Instance generators: extremal constructions with upper-bound certificates,
//! triangle-free parts, random colorings and five-part bowtie fixtures.
//!
//! Every generator is a pure function of its parameters and seed. Randomness
//! comes from a ChaCha stream so the output is identical across platforms.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Graph, TriangleColor};
use crate::independence::max_independent_set_exact;
use crate::scalar::Scalar;

const PART_ALPHA_BUDGET: u64 = 2_000_000;

/// Seeded generator used by every random routine in this module.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent sub-seed for stream `stream` of `seed` (splitmix64 finalizer).
pub fn stream_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed ^ stream.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn check_probability(p: f64, what: &str) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(format!("{what} = {p} is not a probability")))
    }
}

/// Erdős–Rényi `G(n, p)`; pairs visited in lexicographic order.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut rng = rng(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

/// Random graph with minimum degree exactly `delta`: starting from `K_n`,
/// edges are visited in a seeded random order and dropped while both ends
/// have degree above `delta`.
pub fn random_min_degree_graph(n: usize, delta: usize, seed: u64) -> Result<Graph> {
    if n == 0 || delta >= n {
        return Err(Error::ParameterOutOfRange(format!(
            "minimum degree {delta} impossible on {n} vertices"
        )));
    }
    let mut g = Graph::complete(n);
    let mut edges: Vec<_> = g.edges().collect();
    edges.shuffle(&mut rng(seed));
    for (u, v) in edges {
        if g.degree(u) > delta && g.degree(v) > delta {
            g.remove_edge(u, v);
        }
    }
    debug_assert_eq!(g.min_degree(), delta);
    Ok(g)
}

/// Colors each edge red with probability `p_red`, in canonical edge order.
pub fn random_coloring(g: &Graph, p_red: f64, seed: u64) -> Result<ColoredGraph> {
    check_probability(p_red, "p_red")?;
    let mut rng = rng(seed);
    Ok(ColoredGraph::from_fn(g.clone(), |_, _| {
        if rng.gen_bool(p_red) {
            Color::Red
        } else {
            Color::Blue
        }
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartMethod {
    CirculantCatalog,
    TriangleFreeProcess,
}

impl fmt::Display for PartMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartMethod::CirculantCatalog => "circulant_catalog",
            PartMethod::TriangleFreeProcess => "triangle_free_process",
        })
    }
}

impl FromStr for PartMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "circulant_catalog" | "catalog" => Ok(PartMethod::CirculantCatalog),
            "triangle_free_process" | "process" => Ok(PartMethod::TriangleFreeProcess),
            other => Err(Error::ParameterOutOfRange(format!("unknown part method {other:?}"))),
        }
    }
}

/// Known triangle-free graphs with small independence number.
pub fn catalog_graph(n: usize) -> Option<Graph> {
    match n {
        5 => Some(Graph::cycle(5)),
        10 => Some(Graph::petersen()),
        13 => Some(Graph::circulant(13, &[1, 5])),
        _ => None,
    }
}

/// Random maximal triangle-free graph: all pairs in seeded random order,
/// each added unless it would close a triangle.
pub fn triangle_free_process(n: usize, seed: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng(seed));
    for (u, v) in pairs {
        if !g.neighbors(u).intersects(g.neighbors(v)) {
            g.insert_edge(u, v);
        }
    }
    g
}

pub fn triangle_free_low_alpha(n: usize, method: PartMethod, seed: u64) -> Graph {
    match method {
        PartMethod::CirculantCatalog => catalog_graph(n).unwrap_or_else(|| triangle_free_process(n, seed)),
        PartMethod::TriangleFreeProcess => triangle_free_process(n, seed),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// No monochromatic triangle meets `V1`, so at most `⌊(n - |V1|)/3⌋` triangles.
    AvoidV1,
    /// Three parts with `2|V3| <= |V2|`: triangles avoid `V1` and each meets `V3`.
    AvoidV1AndV3Budget,
}

impl CertificateKind {
    pub fn key(self) -> &'static str {
        match self {
            CertificateKind::AvoidV1 => "avoid_v1",
            CertificateKind::AvoidV1AndV3Budget => "avoid_v1_and_v3_budget",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperBoundCertificate {
    pub kind: CertificateKind,
    pub bound: usize,
    /// Part indices (0-based) the argument refers to.
    pub parts_used: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ExtremalInstance {
    pub colored_graph: ColoredGraph,
    pub parts: Vec<Vec<usize>>,
    pub part_of: Vec<usize>,
    pub ell: usize,
    pub delta_target: usize,
    pub delta_actual: usize,
    pub method: PartMethod,
    pub seed: u64,
    pub certificates: Vec<UpperBoundCertificate>,
    /// Independence number reached in each part (reported, not enforced).
    pub part_alpha: Vec<usize>,
}

/// Part sizes of the extremal construction: `ell - 1` parts of size
/// `n - delta` and a last part of size `n - (ell - 1)(n - delta)`.
pub fn extremal_part_sizes(n: usize, delta_target: usize) -> Result<Vec<usize>> {
    if delta_target >= n || 2 * delta_target < n {
        return Err(Error::InfeasibleSizes(format!(
            "need n/2 <= delta_target < n, got n = {n}, delta_target = {delta_target}"
        )));
    }
    let side = n - delta_target;
    let ell = n.div_ceil(side);
    let last = n as i64 - (ell as i64 - 1) * side as i64;
    if last <= 0 {
        return Err(Error::InfeasibleSizes(format!("last part would have size {last}")));
    }
    let mut sizes = vec![side; ell - 1];
    sizes.push(last as usize);
    Ok(sizes)
}

/// Builds the extremal 2-edge-colored graph: triangle-free parts, complete
/// between parts, edges leaving `V1` red and all others blue.
pub fn extremal_instance(n: usize, delta_target: usize, method: PartMethod, seed: u64) -> Result<ExtremalInstance> {
    let sizes = extremal_part_sizes(n, delta_target)?;
    let ell = sizes.len();
    let mut part_of = Vec::with_capacity(n);
    let mut parts = Vec::with_capacity(ell);
    let mut graph = Graph::empty(n);
    let mut part_alpha = Vec::with_capacity(ell);
    let mut offset = 0;
    for (i, &size) in sizes.iter().enumerate() {
        let inner = triangle_free_low_alpha(size, method, stream_seed(seed, i as u64));
        part_alpha.push(max_independent_set_exact(&inner, PART_ALPHA_BUDGET).alpha);
        for (u, v) in inner.edges() {
            graph.insert_edge(u + offset, v + offset);
        }
        parts.push((offset..offset + size).collect::<Vec<_>>());
        part_of.extend(std::iter::repeat(i).take(size));
        offset += size;
    }
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                graph.insert_edge(u, v);
            }
        }
    }
    let colored_graph = ColoredGraph::from_fn(graph, |u, v| {
        if (part_of[u] == 0) != (part_of[v] == 0) {
            Color::Red
        } else {
            Color::Blue
        }
    });

    let mut certificates = vec![UpperBoundCertificate {
        kind: CertificateKind::AvoidV1,
        bound: (n - sizes[0]) / 3,
        parts_used: vec![0],
    }];
    if ell == 3 && 2 * sizes[2] <= sizes[1] {
        debug_assert_eq!(sizes[2], 2 * delta_target - n);
        certificates.push(UpperBoundCertificate {
            kind: CertificateKind::AvoidV1AndV3Budget,
            bound: sizes[2],
            parts_used: vec![0, 1, 2],
        });
    }
    let delta_actual = colored_graph.graph().min_degree();
    Ok(ExtremalInstance {
        colored_graph,
        parts,
        part_of,
        ell,
        delta_target,
        delta_actual,
        method,
        seed,
        certificates,
        part_alpha,
    })
}

impl ExtremalInstance {
    pub fn n(&self) -> usize {
        self.colored_graph.n()
    }

    /// Smallest certified upper bound on any monochromatic tiling.
    pub fn best_bound(&self) -> usize {
        self.certificates.iter().map(|c| c.bound).min().expect("AvoidV1 is always present")
    }

    pub fn part_set(&self, i: usize) -> VertexSet {
        VertexSet::from_iter(self.n(), self.parts[i].iter().copied())
    }

    /// Re-checks the certificate premises by exhaustive scan: no triangle
    /// meeting `V1` is monochromatic, and in the three-part regime every
    /// monochromatic triangle meets `V3`.
    pub fn check_certificates(&self) -> bool {
        let g = &self.colored_graph;
        let v1 = self.part_set(0);
        for a in v1.iter() {
            for (b, c) in g.graph().edges() {
                if b == a || c == a || !g.graph().has_edge(a, b) || !g.graph().has_edge(a, c) {
                    continue;
                }
                if g.triangle(a, b, c).expect("edges present").color != TriangleColor::Mixed {
                    return false;
                }
            }
        }
        let mono = g.mono_triangles(None);
        if mono.iter().any(|t| t.count_in(&v1) > 0) {
            return false;
        }
        if self.certificates.iter().any(|c| c.kind == CertificateKind::AvoidV1AndV3Budget) {
            let v3 = self.part_set(2);
            if mono.iter().any(|t| t.count_in(&v3) == 0) {
                return false;
            }
        }
        true
    }

    /// Key-value sidecar describing the parts and certificates.
    pub fn metadata(&self) -> String {
        let mut s = String::from("# extremal instance metadata\n");
        let join = |xs: &mut dyn Iterator<Item = usize>| xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let _ = writeln!(s, "kind = extremal");
        let _ = writeln!(s, "n = {}", self.n());
        let _ = writeln!(s, "delta_target = {}", self.delta_target);
        let _ = writeln!(s, "delta_actual = {}", self.delta_actual);
        let _ = writeln!(s, "ell = {}", self.ell);
        let _ = writeln!(s, "seed = {}", self.seed);
        let _ = writeln!(s, "method = {}", self.method);
        let _ = writeln!(s, "part_sizes = {}", join(&mut self.parts.iter().map(|p| p.len())));
        let _ = writeln!(s, "part_alpha = {}", join(&mut self.part_alpha.iter().copied()));
        let _ = writeln!(s, "parts = {}", join(&mut self.part_of.iter().copied()));
        for c in &self.certificates {
            let _ = writeln!(s, "certificate.{} = {}", c.kind.key(), c.bound);
        }
        s
    }
}

/// Parses a `key = value` sidecar; `#` lines are comments.
pub fn parse_metadata(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: i + 1,
            msg: "metadata lines are `key = value`".into(),
        })?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

/// Bowtie pairs `(V1,V2), (V2,V3), (V1,V3), (V1,V4), (V4,V5), (V1,V5)`, 0-based.
pub const BOWTIE_PAIRS: [(usize, usize); 6] = [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)];

/// Five parts of size `m` (part `i` is `i*m .. (i+1)*m`) joined along the
/// bowtie pairs.
#[derive(Debug, Clone)]
pub struct FivePartInstance {
    pub colored_graph: ColoredGraph,
    pub m: usize,
    /// Realized edge count for each entry of [`BOWTIE_PAIRS`].
    pub pair_edges: [usize; 6],
}

impl FivePartInstance {
    pub fn part(&self, i: usize) -> VertexSet {
        VertexSet::range(5 * self.m, i * self.m..(i + 1) * self.m)
    }

    pub fn part_of(&self, v: usize) -> usize {
        v / self.m
    }

    /// Exact density of the `k`-th bowtie pair.
    pub fn pair_density<S: Scalar>(&self, k: usize) -> S {
        S::from_count(self.pair_edges[k]) / S::from_count(self.m * self.m)
    }
}

pub fn five_part_instance(m: usize, density: f64, p_red: f64, seed: u64) -> Result<FivePartInstance> {
    if m == 0 {
        return Err(Error::ParameterOutOfRange("part size must be positive".into()));
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::ParameterOutOfRange(format!("density {density} not in (0, 1]")));
    }
    check_probability(p_red, "p_red")?;
    let mut rng = rng(stream_seed(seed, 0));
    let mut g = Graph::empty(5 * m);
    let mut pair_edges = [0; 6];
    for (k, &(i, j)) in BOWTIE_PAIRS.iter().enumerate() {
        for u in i * m..(i + 1) * m {
            for v in j * m..(j + 1) * m {
                if rng.gen_bool(density) {
                    g.insert_edge(u, v);
                    pair_edges[k] += 1;
                }
            }
        }
    }
    let colored_graph = random_coloring(&g, p_red, stream_seed(seed, 1))?;
    Ok(FivePartInstance { colored_graph, m, pair_edges })
}

/// Five-part bowtie blow-up with every listed pair complete and one color.
pub fn complete_five_part(m: usize, color: Color) -> FivePartInstance {
    let mut g = Graph::empty(5 * m);
    for &(i, j) in &BOWTIE_PAIRS {
        for u in i * m..(i + 1) * m {
            for v in j * m..(j + 1) * m {
                g.insert_edge(u, v);
            }
        }
    }
    FivePartInstance {
        colored_graph: ColoredGraph::monochrome(g, color),
        m,
        pair_edges: [m * m; 6],
    }
}
