//! Exhaustive check of the Gale–Ryser f-factor conditions.
//!
//! A bipartite graph has an f-factor iff (i) both classes have the same target
//! sum and (ii) for all `X ⊆ A`, `Y ⊆ B`:
//!
//! ```text
//! Σ_{x∈X} f(x)  <=  e(X, Y) + Σ_{y∈B∖Y} f(y)
//! ```
//!
//! For a fixed `X` the right-hand side is minimized by
//! `Y* = {y : deg_X(y) < f(y)}`, where it equals `Σ_y min(deg_X(y), f(y))`.
//! [`check_condition`] uses that closed form and enumerates only `X`, while
//! [`check_condition_full`] enumerates every pair and exists to keep the
//! closed form honest.
//!
//! Subsets are visited by increasing size, then by increasing bitmask, so the
//! reported witness is reproducible.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::factor::FactorSpec;
use crate::graph::{BipartiteGraph, Side, Vertex, VertexSubset};

/// Largest class size accepted by [`check_condition`].
pub const EXHAUSTIVE_LIMIT: usize = 20;
/// Largest class size accepted by [`check_condition_full`].
pub const FULL_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaleRyserVerdict {
    pub satisfied: bool,
    /// First `(X, Y)` violating condition (ii), with `Y` the smallest minimizer for `X`.
    pub witness: Option<(VertexSubset, VertexSubset)>,
    /// Minimum of RHS − LHS of condition (ii) over all pairs.
    pub slack: i64,
}

/// Condition (i): both classes ask for the same number of edge endpoints.
pub fn check_sum_condition(f: &FactorSpec) -> bool {
    f.sum(Side::A) == f.sum(Side::B)
}

/// All masks over `n` bits, by popcount and then numerically.
pub(crate) fn subsets_by_size(n: usize) -> impl Iterator<Item = u32> {
    debug_assert!(n < 32);
    (0..=n).flat_map(move |k| {
        let limit = 1u64 << n;
        let first = (1u64 << k) - 1;
        core::iter::successors(Some(first), move |&m| {
            if m == 0 {
                return None;
            }
            // Gosper's hack: next larger integer with the same popcount.
            let low = m & m.wrapping_neg();
            let ripple = m + low;
            let next = (((ripple ^ m) >> 2) / low) | ripple;
            (next < limit).then_some(next)
        })
        .map(|m| m as u32)
    })
}

struct Prepared {
    n: usize,
    /// A-neighborhood of each b as a bitmask.
    cols: Vec<u32>,
    fa: Vec<i64>,
    fb: Vec<i64>,
}

fn prepare(g: &BipartiteGraph, f: &FactorSpec, limit: usize) -> Result<Prepared> {
    let n = g.n();
    if f.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: f.n() });
    }
    if !check_sum_condition(f) {
        return Err(Error::SumMismatch { sum_a: f.sum(Side::A), sum_b: f.sum(Side::B) });
    }
    if n > limit {
        return Err(Error::SizeLimit { n, limit });
    }
    let cols = (0..n)
        .map(|b| g.row_bits(Vertex::b(b)).first().copied().unwrap_or(0) as u32)
        .collect();
    let fa = f.targets(Side::A).iter().map(|&t| t as i64).collect();
    let fb = f.targets(Side::B).iter().map(|&t| t as i64).collect();
    Ok(Prepared { n, cols, fa, fb })
}

impl Prepared {
    fn lhs(&self, x: u32) -> i64 {
        (0..self.n).filter(|&a| x >> a & 1 == 1).map(|a| self.fa[a]).sum()
    }

    fn deg_into(&self, x: u32, deg: &mut [i64]) {
        for (d, &col) in deg.iter_mut().zip(&self.cols) {
            *d = (col & x).count_ones() as i64;
        }
    }

    fn verdict(&self, slack: i64, witness: Option<(u32, u32)>) -> GaleRyserVerdict {
        GaleRyserVerdict {
            satisfied: witness.is_none(),
            witness: witness.map(|(x, y)| {
                (VertexSubset::from_mask(Side::A, x as u64), VertexSubset::from_mask(Side::B, y as u64))
            }),
            slack,
        }
    }
}

/// Checks condition (ii) by enumerating `X ⊆ A` and minimizing over `Y` in
/// closed form. Requires `n <= 20` and condition (i).
pub fn check_condition(g: &BipartiteGraph, f: &FactorSpec) -> Result<GaleRyserVerdict> {
    let p = prepare(g, f, EXHAUSTIVE_LIMIT)?;
    let mut deg = alloc::vec![0i64; p.n];
    let mut slack = i64::MAX;
    let mut witness = None;
    for x in subsets_by_size(p.n) {
        p.deg_into(x, &mut deg);
        let rhs: i64 = deg.iter().zip(&p.fb).map(|(&d, &t)| d.min(t)).sum();
        let gap = rhs - p.lhs(x);
        slack = slack.min(gap);
        if gap < 0 && witness.is_none() {
            let y = (0..p.n).filter(|&b| deg[b] < p.fb[b]).fold(0u32, |m, b| m | 1 << b);
            witness = Some((x, y));
        }
    }
    Ok(p.verdict(slack, witness))
}

/// Checks condition (ii) over all `4^n` pairs `(X, Y)`. Requires `n <= 10`.
///
/// Returns the same verdict as [`check_condition`]: for the first failing `X`
/// the reported `Y` is the first minimizer in size-then-mask order.
pub fn check_condition_full(g: &BipartiteGraph, f: &FactorSpec) -> Result<GaleRyserVerdict> {
    let p = prepare(g, f, FULL_LIMIT)?;
    let total_b: i64 = p.fb.iter().sum();
    let mut deg = alloc::vec![0i64; p.n];
    let mut slack = i64::MAX;
    let mut witness = None;
    for x in subsets_by_size(p.n) {
        p.deg_into(x, &mut deg);
        let lhs = p.lhs(x);
        let mut best: Option<(i64, u32)> = None;
        for y in subsets_by_size(p.n) {
            let mut e_xy = 0;
            let mut f_y = 0;
            for b in (0..p.n).filter(|&b| y >> b & 1 == 1) {
                e_xy += deg[b];
                f_y += p.fb[b];
            }
            let rhs = e_xy + (total_b - f_y);
            if best.is_none_or(|(r, _)| rhs < r) {
                best = Some((rhs, y));
            }
        }
        let (rhs, y) = best.expect("at least the empty Y");
        slack = slack.min(rhs - lhs);
        if rhs < lhs && witness.is_none() {
            witness = Some((x, y));
        }
    }
    Ok(p.verdict(slack, witness))
}

/// `min e(X, Y)` over `|X| = i`, `|Y| = j`: the un-normalized minimum edge
/// density between subsets of fixed sizes. Requires `n <= 20`.
///
/// For fixed `X` the best `Y` takes the `j` B-vertices with the fewest
/// neighbors in `X`, so only `X` is enumerated.
pub fn min_edges_between(g: &BipartiteGraph, i: usize, j: usize) -> Result<usize> {
    let n = g.n();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::SizeLimit { n, limit: EXHAUSTIVE_LIMIT });
    }
    if i > n || j > n {
        return Err(Error::IndexOutOfRange { index: i.max(j), n });
    }
    let cols: Vec<u32> = (0..n)
        .map(|b| g.row_bits(Vertex::b(b)).first().copied().unwrap_or(0) as u32)
        .collect();
    let mut deg = alloc::vec![0u32; n];
    let mut best = usize::MAX;
    for x in subsets_by_size(n).filter(|x| x.count_ones() as usize == i) {
        for (d, &col) in deg.iter_mut().zip(&cols) {
            *d = (col & x).count_ones();
        }
        deg.sort_unstable();
        best = best.min(deg[..j].iter().map(|&d| d as usize).sum());
    }
    Ok(best)
}
