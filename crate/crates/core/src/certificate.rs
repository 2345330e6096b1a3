//! Exact minimum-degree certificates for regular factors.
//!
//! With `δ = d/n` and `ρ = r/n`, every real-valued quantity of the argument is
//! multiplied by `n²` so it becomes an integer polynomial in `(n, d, r)` and
//! grid indices `(i, j)`. Several of these are exactly zero at the bound, so
//! nothing here touches floating point.
//!
//! The guaranteed degree is `⌊ρ₀ n⌋` with `ρ₀ = (δ + √(2δ − 1))/2`, which in
//! integers is `⌊(d + √m)/2⌋` with `m = n(2d − n)`. Since `⌊⌊x⌋/2⌋ = ⌊x/2⌋`
//! for real `x ≥ 0`, replacing `√m` by `isqrt(m)` loses nothing.

use crate::error::{Error, Result};

/// An integer triple `(n, d, r)` standing for `δ = d/n` and `ρ = r/n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CertificateInstance {
    n: u64,
    d: u64,
    r: u64,
}

impl CertificateInstance {
    /// Requires `n > 0` and `r <= d <= n`.
    pub fn new(n: u64, d: u64, r: u64) -> Result<Self> {
        if n == 0 || d > n || r > d {
            return Err(Error::InvalidInstance { n, d, r });
        }
        Ok(CertificateInstance { n, d, r })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    fn signed(&self) -> (i128, i128, i128) {
        (self.n as i128, self.d as i128, self.r as i128)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridVerdict {
    pub passed: bool,
    /// Lexicographically smallest `(i, j)` where the bound fails.
    pub failing_point: Option<(u64, u64)>,
    /// Minimum over the grid of RHS − LHS, in `n²`-scaled units.
    pub margin: i128,
}

/// Which algebraic fact certifies the quadratic `p_ρ` on the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateRoute {
    /// `dcr(ρ) <= 0`, so `p_ρ` has no two distinct real roots.
    Discriminant,
    /// `δ = 1/2` with `n ≡ 2 (mod 4)`: `dcr = 1/n² > 0`, but the two roots of
    /// `p_ρ` are the adjacent grid points `n/2 − 1` and `n/2`, so `p_ρ` is
    /// nonnegative on the whole grid.
    RootPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremCertificate {
    pub instance: CertificateInstance,
    pub route: CertificateRoute,
    pub discriminant: i128,
    pub grid: GridVerdict,
}

fn check_domain(n: u64, d: u64) -> Result<u128> {
    if n == 0 || d > n || 2 * d < n {
        return Err(Error::OutOfDomain { n, d });
    }
    Ok(n as u128 * (2 * d - n) as u128)
}

/// `⌊ρ₀ n⌋ = ⌊(d + √(n(2d − n)))/2⌋`. Requires `n/2 <= d <= n`.
pub fn rho_floor(n: u64, d: u64) -> Result<u64> {
    let m = check_domain(n, d)?;
    Ok(((d as u128 + m.isqrt()) / 2) as u64)
}

/// `⌈ρ₀ n⌉`, exact in the same way as [`rho_floor`].
pub fn rho_ceil(n: u64, d: u64) -> Result<u64> {
    let m = check_domain(n, d)?;
    let s = m.isqrt();
    let sum = d as u128 + s;
    Ok(if s * s == m { sum.div_ceil(2) } else { sum / 2 + 1 } as u64)
}

/// `n² · dcr(r/n) = 4r² − 4dr + d² − 2dn + n²`.
pub fn discriminant_scaled(c: &CertificateInstance) -> i128 {
    let (n, d, r) = c.signed();
    4 * r * r - 4 * d * r + d * d - 2 * d * n + n * n
}

/// `n² · p_ρ(i/n) = i² + (d − 2r − n)·i + r·n`.
pub fn p_poly_scaled(c: &CertificateInstance, i: u64) -> i128 {
    let (n, d, r) = c.signed();
    let i = i as i128;
    i * i + (d - 2 * r - n) * i + r * n
}

/// `n² · g(i/n, j/n) = j·(d + i − n) − r·(i + j − n)`.
pub fn g_scaled(c: &CertificateInstance, i: u64, j: u64) -> i128 {
    let (n, d, r) = c.signed();
    let (i, j) = (i as i128, j as i128);
    j * (d + i - n) - r * (i + j - n)
}

macro_rules! scan_grid {
    ($t:ty, $n:expr, $d:expr, $r:expr) => {{
        let (n, d, r): ($t, $t, $t) = ($n, $d, $r);
        let mut margin = <$t>::MAX;
        let mut failing_point = None;
        for i in 0..=n {
            for j in 0..=n {
                let lhs = r * (i + j - n);
                let rhs = (i * (d + j - n)).max(j * (d + i - n)).max(0);
                let gap = rhs - lhs;
                margin = margin.min(gap);
                if gap < 0 && failing_point.is_none() {
                    failing_point = Some((i as u64, j as u64));
                }
            }
        }
        (margin, failing_point)
    }};
}

/// Checks `r(i + j − n) <= max(0, i(d + j − n), j(d + i − n))` at every point
/// of `{0..n}²`.
///
/// The right-hand side is the degree lower bound on `e(X, Y)` for `|X| = i`,
/// `|Y| = j` in any graph with `δ(G) >= d`; the left-hand side is what
/// condition (ii) of the Gale–Ryser criterion needs for an `r`-factor. So a
/// pass certifies that every balanced bipartite graph on `2n` vertices with
/// minimum degree at least `d` has an `r`-regular spanning subgraph.
pub fn grid_check(c: &CertificateInstance) -> GridVerdict {
    let (n, d, r) = c.signed();
    // Every term is bounded by 2n² in magnitude.
    let (margin, failing_point) = if n <= 1 << 30 {
        let (margin, point) = scan_grid!(i64, n as i64, d as i64, r as i64);
        (margin as i128, point)
    } else {
        scan_grid!(i128, n, d, r)
    };
    GridVerdict { passed: failing_point.is_none(), failing_point, margin }
}

/// Certifies that `⌊ρ₀ n⌋`-regular spanning subgraphs exist for every graph
/// with `δ(G) >= d`, following the case split on `δ` and `n mod 4`.
pub fn theorem_certificate(n: u64, d: u64) -> Result<TheoremCertificate> {
    let r = rho_floor(n, d)?;
    let instance = CertificateInstance::new(n, d, r)?;
    let discriminant = discriminant_scaled(&instance);
    let fail = |point, reason| Error::CertificateFailure { n, d, r, point, reason };

    let route = if 2 * d == n && n % 4 == 2 {
        if let Some(i) = (0..=n).find(|&i| p_poly_scaled(&instance, i) < 0) {
            return Err(fail(Some((i, i)), "diagonal polynomial negative"));
        }
        CertificateRoute::RootPair
    } else {
        if discriminant > 0 {
            return Err(fail(None, "discriminant positive"));
        }
        CertificateRoute::Discriminant
    };

    let grid = grid_check(&instance);
    if let Some(point) = grid.failing_point {
        return Err(fail(Some(point), "grid bound violated"));
    }
    Ok(TheoremCertificate { instance, route, discriminant, grid })
}
