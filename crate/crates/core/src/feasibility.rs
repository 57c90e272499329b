//! Integer feasibility conditions on parameter tuples.
//!
//! For a `rho` net-regular SRSG the all-ones vector is an eigenvector of the
//! sign matrix, of the underlying adjacency matrix and of its complement.
//! Applying the defining matrix identity to it gives
//!
//! ```text
//! rho^2 + (b - a)/2 * rho = (a + b)/2 * r + c (n - r - 1) + r
//! ```
//!
//! which is checked here doubled, in integers.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// `r (r - e - 1) = (n - r - 1) f`, the counting identity of a strongly
/// regular graph with parameters `(n, r, e, f)`.
pub fn srg_feasible(n: i64, r: i64, e: i64, f: i64) -> bool {
    r * (r - e - 1) == (n - r - 1) * f
}

/// `2 * (lhs - rhs)` of the net-degree identity. Zero iff it holds. On a
/// complete graph `n - r - 1 = 0`, so `c` has no effect.
pub fn net_constraint_residual(n: i64, r: i64, rho: i64, a: i64, b: i64, c: i64) -> i64 {
    2 * rho * rho + (b - a) * rho - (a + b) * r - 2 * c * (n - r - 1) - 2 * r
}

/// Numeric restrictions on `(a, b)` for connected non-complete SRSGs of
/// degree 5 and net-degree 1 in C1, C4 or C5.
pub fn prop33_filter(a: i64, b: i64) -> bool {
    a < 3
        && (a != -1 || b <= 0)
        && (a != -2 || b >= -1)
        && a > -3
        && (-2..3).contains(&b)
        && (!(b == 2 || b == -1) || a <= 0)
        && (b != -2 || a >= 1)
}

/// Structural divisibility arguments that drop candidate tuples without a
/// search. Off by default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StructuralFilter {
    /// `r = 5, rho = 3, (a, b) = (3, 0)`: the positive subgraph is a disjoint
    /// union of `K5`, so `5 | n`.
    PositiveK5Blocks,
    /// `r = 5, rho = 1, a = 2, b in {0, 1}`: the positive subgraph is a disjoint
    /// union of `K4`, so `4 | n`.
    PositiveK4Blocks,
    /// `r = 5, rho = 1, b = 1, a in {0, 2}`: the negative subgraph is a disjoint
    /// union of triangles, so `3 | n`.
    NegativeTriangles,
}

impl StructuralFilter {
    pub const ALL: [StructuralFilter; 3] = [
        StructuralFilter::PositiveK5Blocks,
        StructuralFilter::PositiveK4Blocks,
        StructuralFilter::NegativeTriangles,
    ];

    /// True when the tuple survives the filter.
    pub fn keeps(self, n: i64, r: i64, rho: i64, a: i64, b: i64) -> bool {
        match self {
            StructuralFilter::PositiveK5Blocks if (r, rho, a, b) == (5, 3, 3, 0) => n % 5 == 0,
            StructuralFilter::PositiveK4Blocks if r == 5 && rho == 1 && a == 2 && (b == 0 || b == 1) => n % 4 == 0,
            StructuralFilter::NegativeTriangles if r == 5 && rho == 1 && b == 1 && (a == 0 || a == 2) => n % 3 == 0,
            _ => true,
        }
    }
}

/// Bounds for a candidate enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamQuery {
    pub r: i64,
    pub rho: i64,
    pub a_range: (i64, i64),
    pub b_range: (i64, i64),
    pub n_range: (i64, i64),
    pub require_noncomplete: bool,
    pub structural_filters: Vec<StructuralFilter>,
}

impl ParamQuery {
    /// The whole `|a|, |b| <= r - 1` box for orders up to `n_max`.
    pub fn new(r: i64, rho: i64, n_max: i64) -> Self {
        ParamQuery {
            r,
            rho,
            a_range: (-(r - 1), r - 1),
            b_range: (-(r - 1), r - 1),
            n_range: (r + 1, n_max),
            require_noncomplete: false,
            structural_filters: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("empty {0} range")]
    EmptyRange(&'static str),
    #[error("net-degree {rho} incompatible with degree {r}")]
    BadNetDegree { r: i64, rho: i64 },
}

/// Order of a candidate: one fixed order, or every admissible order of a
/// `c = 0` family inside a range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Order {
    Fixed(i64),
    /// every `n` in `from..=to` with `n * r` even; `c = 0` for all of them
    Free {
        from: i64,
        to: i64,
    },
}

/// A parameter tuple allowed by the arithmetic. `c` is `None` on the
/// complete order `n = r + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Candidate {
    pub n: Order,
    pub r: i64,
    pub a: i64,
    pub b: i64,
    pub c: Option<i64>,
}

impl Candidate {
    /// Concrete `(n, c)` pairs, expanding a free order.
    pub fn materialize(&self) -> Vec<(i64, Option<i64>)> {
        match self.n {
            Order::Fixed(n) => vec![(n, self.c)],
            Order::Free { from, to } => (from..=to)
                .filter(|n| n * self.r % 2 == 0)
                .map(|n| (n, Some(0)))
                .collect(),
        }
    }

    pub fn is_stratum(&self) -> bool {
        matches!(self.n, Order::Free { .. })
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.c.map_or_else(|| "null".to_string(), |c| c.to_string());
        match self.n {
            Order::Fixed(n) => write!(f, "({},{},{},{},{})", n, self.r, self.a, self.b, c),
            Order::Free { from, to } => {
                write!(
                    f,
                    "(n,{},{},{},{}) for n in {}..={}",
                    self.r, self.a, self.b, c, from, to
                )
            }
        }
    }
}

/// Enumerates parameter tuples satisfying the net-degree identity inside the
/// query box. `c` is solved for rather than enumerated; pairs `(a, b)` that
/// satisfy the identity with `c = 0` independently of `n` are reported once
/// as a free-order family.
pub fn enumerate_candidates(q: &ParamQuery) -> Result<Vec<Candidate>, QueryError> {
    if q.a_range.0 > q.a_range.1 {
        return Err(QueryError::EmptyRange("a"));
    }
    if q.b_range.0 > q.b_range.1 {
        return Err(QueryError::EmptyRange("b"));
    }
    let n_lo = q.n_range.0.max(q.r + 1);
    if n_lo > q.n_range.1 {
        return Err(QueryError::EmptyRange("n"));
    }
    if q.rho.abs() > q.r || (q.r - q.rho) % 2 != 0 {
        return Err(QueryError::BadNetDegree { r: q.r, rho: q.rho });
    }
    let r = q.r;
    let bound = r - 1;
    let order_ok = |n: i64| n * r % 2 == 0;
    let filters_keep = |n: i64, a: i64, b: i64| q.structural_filters.iter().all(|f| f.keeps(n, r, q.rho, a, b));
    let mut out = Vec::new();

    for a in q.a_range.0.max(-bound)..=q.a_range.1.min(bound) {
        for b in q.b_range.0.max(-bound)..=q.b_range.1.min(bound) {
            // 2c(n - r - 1) = free term
            let free = net_constraint_residual(r + 1, r, q.rho, a, b, 0);
            if !q.require_noncomplete && n_lo == r + 1 && free == 0 && order_ok(r + 1) && filters_keep(r + 1, a, b) {
                out.push(Candidate {
                    n: Order::Fixed(r + 1),
                    r,
                    a,
                    b,
                    c: None,
                });
            }
            let from = n_lo.max(r + 2);
            if from > q.n_range.1 {
                continue;
            }
            // the (a, b) restrictions only concern non-complete graphs
            if r == 5 && q.rho == 1 && !prop33_filter(a, b) {
                continue;
            }
            if free == 0 {
                let any = (from..=q.n_range.1).any(|n| order_ok(n) && filters_keep(n, a, b));
                if !any {
                    continue;
                }
                if q.structural_filters.is_empty() {
                    out.push(Candidate {
                        n: Order::Free { from, to: q.n_range.1 },
                        r,
                        a,
                        b,
                        c: Some(0),
                    });
                } else {
                    // a filtered family is no longer uniform in n
                    for n in (from..=q.n_range.1).filter(|&n| order_ok(n) && filters_keep(n, a, b)) {
                        out.push(Candidate {
                            n: Order::Fixed(n),
                            r,
                            a,
                            b,
                            c: Some(0),
                        });
                    }
                }
                continue;
            }
            for n in from..=q.n_range.1 {
                let denom = 2 * (n - r - 1);
                if free % denom != 0 || !order_ok(n) || !filters_keep(n, a, b) {
                    continue;
                }
                out.push(Candidate {
                    n: Order::Fixed(n),
                    r,
                    a,
                    b,
                    c: Some(free / denom),
                });
            }
        }
    }
    out.sort_by_key(|c| (c.a, c.b, c.n));
    Ok(out)
}
