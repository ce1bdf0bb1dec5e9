//! Brute-force oracles shared by the integration tests. They use only the
//! public colour lookup, never the library's own triangle lists or search.

#![allow(dead_code)]

use tritile::{Color, ColoredGraph, Mode};

/// Monochromatic triangles by scanning all triples, with their colour.
pub fn mono_triples(g: &ColoredGraph) -> Vec<([usize; 3], Color)> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let Some(c1) = g.color(a, b) else { continue };
            for c in b + 1..n {
                if g.color(a, c) == Some(c1) && g.color(b, c) == Some(c1) {
                    out.push(([a, b, c], c1));
                }
            }
        }
    }
    out
}

fn best_packing(tris: &[u64], used: u64) -> usize {
    let mut best = 0;
    for (i, &m) in tris.iter().enumerate() {
        if m & used == 0 {
            best = best.max(1 + best_packing(&tris[i + 1..], used | m));
        }
    }
    best
}

/// Size of the largest set of pairwise disjoint monochromatic triangles,
/// enumerating every packing. For `Strong`, the best single-colour packing.
pub fn max_packing(g: &ColoredGraph, mode: Mode) -> usize {
    assert!(g.n() <= 64);
    let tris = mono_triples(g);
    let masks = |keep: &dyn Fn(Color) -> bool| -> Vec<u64> {
        tris.iter().filter(|(_, c)| keep(*c)).map(|(v, _)| v.iter().fold(0u64, |m, &x| m | 1 << x)).collect()
    };
    match mode {
        Mode::Weak => best_packing(&masks(&|_| true), 0),
        Mode::Strong => {
            let red = best_packing(&masks(&|c| c == Color::Red), 0);
            let blue = best_packing(&masks(&|c| c == Color::Blue), 0);
            red.max(blue)
        }
    }
}

/// Largest independent set by scanning all 2^n subsets.
pub fn alpha_brute_force(g: &tritile::Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let adj: Vec<u32> = (0..n).map(|v| (0..n).filter(|&w| g.has_edge(v, w)).fold(0u32, |m, w| m | 1 << w)).collect();
    (0u32..1 << n)
        .filter(|&mask| (0..n).all(|v| mask >> v & 1 == 0 || adj[v] & mask == 0))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

pub fn triangle_free_brute_force(g: &tritile::Graph) -> bool {
    let n = g.n();
    (0..n).all(|a| {
        (a + 1..n).all(|b| (b + 1..n).all(|c| !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))))
    })
}
