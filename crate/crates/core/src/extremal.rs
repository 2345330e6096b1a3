//! The four-block family showing the minimum-degree bound is nearly tight.
//!
//! Both classes split into a small block of size `gl = ⌈γ'n⌉`, with
//! `γ' = (1 − √(2δ − 1))/2`, and the rest:
//!
//! ```text
//!            B_l (gl)     B_e (n - gl)
//! A_l (gl)   empty        complete
//! A_e        complete     circulant, (d - gl)-regular
//! ```
//!
//! The small-block vertices have degree `n − gl > d` and the others have
//! degree exactly `d`. In any `r`-regular spanning subgraph every edge at
//! `A_l ∪ B_l` lands in the large blocks, so the `A_e × B_e` core must carry
//! `(n − 2gl)·r` edges while it only has `(n − gl)(d − gl)`. That caps `r`.

use crate::certificate::{rho_ceil, rho_floor};
use crate::error::{Error, Result};
use crate::factor::max_regular_degree;
use crate::graph::BipartiteGraph;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalParams {
    pub n: usize,
    pub d: usize,
    /// `γn`, the size of `A_l` and of `B_l`.
    pub gl: usize,
    /// Degree of the circulant on `A_e × B_e`.
    pub core_degree: usize,
    /// Exact edge-counting cap on the degree of any regular spanning subgraph.
    pub upper_bound: usize,
    /// `γ' = (1 − √(2δ − 1))/2`.
    pub gamma_prime: f64,
    /// Solution of `(1−p)(1−γ') = γ'(1−p) + δ − γ'`.
    pub p_prime: f64,
    /// Solution of the same equation with `γ = gl/n` in place of `γ'`.
    pub p_tilde: f64,
    /// `p̃` rounded up so that `p₀(1−γ)n` is a whole number of edges.
    pub p_zero: f64,
    /// `(1 − p₀)(1 − γ)n`, the common degree left after the forced removals.
    pub predicted_degree: f64,
}

impl ExtremalParams {
    pub fn delta(&self) -> f64 {
        self.d as f64 / self.n as f64
    }

    /// `ρ₀ n` as a real number.
    pub fn rho_zero_n(&self) -> f64 {
        let delta = self.delta();
        (delta + libm::sqrt(2.0 * delta - 1.0)) / 2.0 * self.n as f64
    }

    /// The analytic bound `(1/n)(1 + c/n)` on `p' − p̃`, with
    /// `c = 2/(√(2δ−1) − 2/n)`. Infinite when `n` is too small for it to apply.
    pub fn p_gap_bound(&self) -> f64 {
        let n = self.n as f64;
        let root = libm::sqrt(2.0 * self.delta() - 1.0);
        if root <= 2.0 / n {
            return f64::INFINITY;
        }
        let c = 2.0 / (root - 2.0 / n);
        (1.0 + c / n) / n
    }
}

/// Block sizes, the counting cap and the real-valued diagnostics for `(n, d)`.
///
/// Requires `n/2 < d < n` and `gl < d < n − gl`; the latter fails for small
/// `n` at a given `δ`.
pub fn derive_params(n: usize, d: usize) -> Result<ExtremalParams> {
    if 2 * d <= n || d >= n {
        return Err(Error::ConstructionInfeasible { n, d });
    }
    let m = n as u128 * (2 * d - n) as u128;
    // ⌈(n − √m)/2⌉ = ⌈(n − isqrt(m))/2⌉ since ⌈n − √m⌉ = n − ⌊√m⌋.
    let gl = (n - m.isqrt() as usize).div_ceil(2);
    if !(gl < d && d < n - gl) {
        return Err(Error::ConstructionInfeasible { n, d });
    }
    let core_degree = d - gl;
    let (big, core) = (n - gl, n - 2 * gl);
    let upper_bound = big * core_degree / core;

    let (nf, delta) = (n as f64, d as f64 / n as f64);
    let gamma_prime = (1.0 - libm::sqrt(2.0 * delta - 1.0)) / 2.0;
    let gamma = gl as f64 / nf;
    let p_prime = (delta + gamma_prime - 1.0) / (2.0 * gamma_prime - 1.0);
    let p_tilde = (delta + gamma - 1.0) / (2.0 * gamma - 1.0);
    // p̃(1−γ)n = (n − d − gl)(n − gl)/(n − 2gl); round up in integers.
    let removed = ((n - d - gl) * big).div_ceil(core);
    let p_zero = removed as f64 / big as f64;
    let predicted_degree = (1.0 - p_zero) * big as f64;

    Ok(ExtremalParams {
        n,
        d,
        gl,
        core_degree,
        upper_bound,
        gamma_prime,
        p_prime,
        p_tilde,
        p_zero,
        predicted_degree,
    })
}

/// `⌊(n − gl)(d − gl)/(n − 2gl)⌋`.
pub fn counting_upper_bound(params: &ExtremalParams) -> usize {
    let ExtremalParams { n, d, gl, .. } = *params;
    if gl == 0 {
        return d;
    }
    (n - gl) * (d - gl) / (n - 2 * gl)
}

/// Builds `G_δ` with A- and B-indices `[0, gl)` forming the small blocks.
pub fn build_extremal(n: usize, d: usize) -> Result<BipartiteGraph> {
    let p = derive_params(n, d)?;
    let gl = p.gl;
    let rest = n - gl;
    let mut g = BipartiteGraph::empty(n);
    for small in 0..gl {
        for large in gl..n {
            g.insert(small, large);
            g.insert(large, small);
        }
    }
    for i in 0..rest {
        for t in 0..p.core_degree {
            g.insert(gl + i, gl + (i + t) % rest);
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalReport {
    pub n: usize,
    pub d: usize,
    pub r_max: usize,
    pub rho_floor: usize,
    pub rho_ceil: usize,
    pub upper_bound: usize,
    /// `rho_floor <= r_max <= rho_ceil`.
    pub bounds_hold: bool,
}

/// Builds `G_δ`, finds its largest regular factor and places it between the
/// guaranteed floor and the counting cap.
///
/// A result below the floor or above the cap is an error: both are proven
/// bounds. Whether `r_max` reaches down to `⌈ρ₀n⌉` is only expected for large
/// `n`, so it is reported in `bounds_hold` rather than enforced.
pub fn tightness_report(n: usize, d: usize) -> Result<ExtremalReport> {
    let params = derive_params(n, d)?;
    let g = build_extremal(n, d)?;
    let r_max = max_regular_degree(&g);
    let floor = rho_floor(n as u64, d as u64)? as usize;
    let ceil = rho_ceil(n as u64, d as u64)? as usize;
    let upper_bound = counting_upper_bound(&params);
    if r_max < floor {
        return Err(Error::TheoremViolation { n, d, r_max, rho_floor: floor });
    }
    if r_max > upper_bound {
        return Err(Error::BoundViolation { n, d, r_max, upper_bound });
    }
    Ok(ExtremalReport {
        n,
        d,
        r_max,
        rho_floor: floor,
        rho_ceil: ceil,
        upper_bound,
        bounds_hold: floor <= r_max && r_max <= ceil,
    })
}
