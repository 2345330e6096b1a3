use core::fmt;

use crate::graph::Side;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex subset was passed for the wrong color class.
    SideMismatch { expected: Side, found: Side },
    IndexOutOfRange { index: usize, n: usize },
    /// A degree or target exceeds the opposite class size.
    DegreeOutOfRange { degree: usize, n: usize },
    DuplicateEdge { a: usize, b: usize },
    /// Two objects that must share a class size do not.
    SizeMismatch { expected: usize, found: usize },
    NotRegular { degree: usize },
    /// Condition (i) of the Gale–Ryser criterion fails.
    SumMismatch { sum_a: u64, sum_b: u64 },
    /// An exhaustive routine was asked for more than it can enumerate.
    SizeLimit { n: usize, limit: usize },
    /// The minimum-degree hypothesis 2d >= n does not hold.
    OutOfDomain { n: u64, d: u64 },
    InvalidInstance { n: u64, d: u64, r: u64 },
    CertificateFailure {
        n: u64,
        d: u64,
        r: u64,
        point: Option<(u64, u64)>,
        reason: &'static str,
    },
    /// The extremal family does not exist for this (n, d).
    ConstructionInfeasible { n: usize, d: usize },
    /// A flow computation found a regular factor degree below the guaranteed floor.
    TheoremViolation { n: usize, d: usize, r_max: usize, rho_floor: usize },
    BoundViolation { n: usize, d: usize, r_max: usize, upper_bound: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SideMismatch { expected, found } => {
                write!(f, "expected a subset of side {expected}, got side {found}")
            }
            Error::IndexOutOfRange { index, n } => {
                write!(f, "vertex index {index} out of range for class size {n}")
            }
            Error::DegreeOutOfRange { degree, n } => {
                write!(f, "degree {degree} exceeds class size {n}")
            }
            Error::DuplicateEdge { a, b } => write!(f, "duplicate edge ({a}, {b})"),
            Error::SizeMismatch { expected, found } => {
                write!(f, "class size mismatch: expected {expected}, found {found}")
            }
            Error::NotRegular { degree } => write!(f, "graph is not {degree}-regular"),
            Error::SumMismatch { sum_a, sum_b } => write!(
                f,
                "degree sums differ between the classes ({sum_a} on A, {sum_b} on B)"
            ),
            Error::SizeLimit { n, limit } => write!(
                f,
                "class size {n} exceeds the exhaustive enumeration limit of {limit}"
            ),
            Error::OutOfDomain { n, d } => {
                write!(f, "minimum degree {d} is below half of n = {n}")
            }
            Error::InvalidInstance { n, d, r } => write!(
                f,
                "invalid certificate instance n={n} d={d} r={r} (need 0 <= r <= d <= n, n > 0)"
            ),
            Error::CertificateFailure { n, d, r, point, reason } => {
                write!(f, "certificate failed for n={n} d={d} r={r}: {reason}")?;
                if let Some((i, j)) = point {
                    write!(f, " at ({i}, {j})")?;
                }
                Ok(())
            }
            Error::ConstructionInfeasible { n, d } => write!(
                f,
                "extremal construction infeasible for n={n} d={d}: block sizes violate gl < d < n - gl"
            ),
            Error::TheoremViolation { n, d, r_max, rho_floor } => write!(
                f,
                "n={n} d={d}: largest regular factor degree {r_max} is below the guaranteed {rho_floor}"
            ),
            Error::BoundViolation { n, d, r_max, upper_bound } => write!(
                f,
                "n={n} d={d}: largest regular factor degree {r_max} exceeds the counting bound {upper_bound}"
            ),
        }
    }
}

impl core::error::Error for Error {}
