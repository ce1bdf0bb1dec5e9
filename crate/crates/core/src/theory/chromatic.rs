use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Largest graph accepted by [`chromatic_parameters`].
pub const MAX_CHROMATIC_ORDER: usize = 12;

/// A highest common factor that may be infinite (gcd of an empty set).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hcf {
    Finite(usize),
    Infinite,
}

impl Hcf {
    /// gcd of the nonzero entries; `Infinite` when there are none.
    pub fn of(values: impl IntoIterator<Item = usize>) -> Hcf {
        values.into_iter().filter(|&d| d != 0).fold(Hcf::Infinite, |acc, d| acc.gcd(Hcf::Finite(d)))
    }

    /// gcd with `gcd(∞, t) = t` and `gcd(∞, ∞) = ∞`.
    pub fn gcd(self, other: Hcf) -> Hcf {
        match (self, other) {
            (Hcf::Infinite, x) | (x, Hcf::Infinite) => x,
            (Hcf::Finite(a), Hcf::Finite(b)) => Hcf::Finite(a.gcd(&b)),
        }
    }
}

impl fmt::Display for Hcf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hcf::Finite(d) => write!(f, "{d}"),
            Hcf::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChromaticProfile<S> {
    pub order: usize,
    pub chi: usize,
    pub sigma: usize,
    pub chi_cr: S,
    pub hcf_chi: Hcf,
    pub hcf_c: Hcf,
    pub hcf: Hcf,
    pub chi_star: S,
    /// Sorted class sizes of every proper `chi`-coloring, deduplicated.
    pub class_sizes: BTreeSet<Vec<usize>>,
}

/// Enumerates all proper `χ(H)`-colorings of `h` and derives `σ`, `χ_cr`,
/// the hcf parameters and `χ*`.
///
/// For an edgeless graph `|H| - σ = 0`; `χ_cr` is then taken to be 1, which
/// keeps `χ_cr <= χ`.
pub fn chromatic_parameters<S: Scalar>(h: &Graph) -> Result<ChromaticProfile<S>> {
    let n = h.n();
    if n > MAX_CHROMATIC_ORDER {
        return Err(Error::TooLarge { n, max: MAX_CHROMATIC_ORDER });
    }
    if n == 0 {
        return Err(Error::ParameterOutOfRange("graph has no vertices".into()));
    }
    let chi = (1..=n).find(|&k| colorable(h, k)).expect("n colors always suffice");
    let class_sizes = coloring_class_sizes(h, chi);
    let sigma = class_sizes.iter().map(|sizes| sizes[0]).min().expect("at least one coloring");
    let chi_cr = if sigma == n {
        S::one()
    } else {
        S::from_count((chi - 1) * n) / S::from_count(n - sigma)
    };
    let hcf_chi = Hcf::of(class_sizes.iter().flat_map(|sizes| pairwise_differences(sizes)));
    let component_sizes: Vec<usize> = h.components().iter().map(Vec::len).collect();
    let hcf_c = Hcf::of(pairwise_differences(&component_sizes));
    let hcf = hcf_chi.gcd(hcf_c);
    let chi_star = if hcf == Hcf::Finite(1) { chi_cr.clone() } else { S::from_count(chi) };
    Ok(ChromaticProfile { order: n, chi, sigma, chi_cr, hcf_chi, hcf_c, hcf, chi_star, class_sizes })
}

fn pairwise_differences(sizes: &[usize]) -> Vec<usize> {
    sizes.iter().flat_map(|&a| sizes.iter().map(move |&b| a.abs_diff(b))).collect()
}

fn colorable(h: &Graph, k: usize) -> bool {
    let mut found = false;
    let mut colors = vec![usize::MAX; h.n()];
    color_rec(h, k, 0, 0, &mut colors, &mut |_| {
        found = true;
        false
    });
    found
}

fn coloring_class_sizes(h: &Graph, k: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let mut colors = vec![usize::MAX; h.n()];
    color_rec(h, k, 0, 0, &mut colors, &mut |colors| {
        let mut sizes = vec![0; k];
        for &c in colors {
            sizes[c] += 1;
        }
        // a proper chi-coloring uses every color
        if sizes.iter().all(|&s| s > 0) {
            sizes.sort_unstable();
            out.insert(sizes);
        }
        true
    });
    out
}

/// Colorings up to renaming: vertex `v` gets a color at most one above the
/// largest used so far. `visit` returns `false` to stop.
fn color_rec(
    h: &Graph,
    k: usize,
    v: usize,
    used: usize,
    colors: &mut [usize],
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if v == h.n() {
        return visit(colors);
    }
    for c in 0..k.min(used + 1) {
        if h.neighbors(v).iter().any(|u| u < v && colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if !color_rec(h, k, v + 1, used.max(c + 1), colors, visit) {
            return false;
        }
    }
    colors[v] = usize::MAX;
    true
}
