//! Closed-form bounds on the weak monochromatic triangle-tiling number.
//!
//! * `guaranteed_lower`: guaranteed tiling size for graphs without large
//!   independent sets, `2δ - n - γn` on `[n/2, 3n/5]` and `δ/3 - γn` above.
//! * `construction_upper`: size achieved by the extremal construction,
//!   `2δ - n` on `[n/2, 3n/5]` and `δ/3` above.
//! * `bft_weak`: the dense-graph guarantee without the independence
//!   condition: `5δ - 4n` on `[4n/5, 5n/6]`, `⌊(4δ - 3n)/2⌋` up to `7n/8`,
//!   `⌊(2δ - n)/3⌋` beyond, and 0 below `4n/5`.
//!
//! Range boundaries are compared in integers, values are computed in `S`.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::solver::SolveResult;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport<S> {
    pub n: usize,
    pub delta: usize,
    pub gamma: S,
    pub guaranteed_lower: S,
    /// `None` below `n/2`, where the construction does not apply.
    pub construction_upper: Option<S>,
    pub bft_weak: S,
    pub achieved_weak: Option<usize>,
    pub achieved_strong: Option<usize>,
}

pub fn guaranteed_lower<S: Scalar>(n: usize, delta: usize, gamma: &S) -> S {
    let (nn, d) = (S::from_count(n), S::from_count(delta));
    if 2 * delta < n {
        S::zero()
    } else if 5 * delta <= 3 * n {
        S::from_count(2) * d - nn.clone() - gamma.clone() * nn
    } else {
        d / S::from_count(3) - gamma.clone() * nn
    }
}

pub fn construction_upper<S: Scalar>(n: usize, delta: usize) -> Option<S> {
    let (nn, d) = (S::from_count(n), S::from_count(delta));
    if 2 * delta < n {
        None
    } else if 5 * delta <= 3 * n {
        Some(S::from_count(2) * d - nn)
    } else {
        Some(d / S::from_count(3))
    }
}

pub fn bft_weak<S: Scalar>(n: usize, delta: usize) -> S {
    let (nn, d) = (S::from_count(n), S::from_count(delta));
    let k = |c: usize| S::from_count(c);
    if 5 * delta < 4 * n {
        S::zero()
    } else if 6 * delta <= 5 * n {
        k(5) * d - k(4) * nn
    } else if 8 * delta <= 7 * n {
        ((k(4) * d - k(3) * nn) / k(2)).floor()
    } else {
        ((k(2) * d - nn) / k(3)).floor()
    }
}

/// Evaluates all three bound families at `(n, δ)`. `gamma` defaults to 0.
pub fn bound_table<S: Scalar>(
    n: usize,
    delta: usize,
    gamma: Option<S>,
    achieved_weak: Option<&SolveResult>,
    achieved_strong: Option<&SolveResult>,
) -> Result<BoundReport<S>> {
    if n == 0 || delta >= n {
        return Err(Error::ParameterOutOfRange(format!(
            "need 0 <= delta <= n - 1, got n = {n}, delta = {delta}"
        )));
    }
    let gamma = gamma.unwrap_or_else(S::zero);
    if gamma < S::zero() {
        return Err(Error::ParameterOutOfRange("gamma must be non-negative".into()));
    }
    Ok(BoundReport {
        n,
        delta,
        guaranteed_lower: guaranteed_lower(n, delta, &gamma),
        construction_upper: construction_upper(n, delta),
        bft_weak: bft_weak(n, delta),
        gamma,
        achieved_weak: achieved_weak.map(|r| r.size()),
        achieved_strong: achieved_strong.map(|r| r.size()),
    })
}
