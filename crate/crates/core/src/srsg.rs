//! The strong-regularity predicate for signed graphs and its companions:
//! class labels, the two walk-parity properties, and a numeric spectrum.
//!
//! A signed graph is strongly regular when the diagonal of the squared sign
//! matrix is a constant `r` and each off-diagonal entry depends only on
//! whether the pair is a positive edge (`a`), a negative edge (`b`) or a
//! non-adjacent pair (`c`). Homogeneous complete graphs and edgeless graphs
//! are excluded.

use std::fmt;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::graph::{bits, SignedGraph};

/// Parameters `(n, r, a, b, c)`. `None` marks a parameter with no pairs to
/// constrain it: `a` without positive edges, `b` without negative edges,
/// `c` on a complete graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SrsgParams {
    pub n: usize,
    pub r: usize,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub c: Option<i64>,
}

impl SrsgParams {
    pub fn new(n: usize, r: usize, a: Option<i64>, b: Option<i64>, c: Option<i64>) -> Self {
        SrsgParams { n, r, a, b, c }
    }

    /// Parameters of the negated graph: `a` and `b` trade places.
    pub fn negated(&self) -> SrsgParams {
        SrsgParams {
            a: self.b,
            b: self.a,
            ..*self
        }
    }
}

impl fmt::Display for SrsgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |x: Option<i64>| x.map_or_else(|| "null".to_string(), |v| v.to_string());
        write!(
            f,
            "({},{},{},{},{})",
            self.n,
            self.r,
            show(self.a),
            show(self.b),
            show(self.c)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassLabel {
    C1,
    C2,
    C3,
    C4,
    C5,
    Homogeneous,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassLabel::C1 => "C1",
            ClassLabel::C2 => "C2",
            ClassLabel::C3 => "C3",
            ClassLabel::C4 => "C4",
            ClassLabel::C5 => "C5",
            ClassLabel::Homogeneous => "Homogeneous",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FailureKind {
    NotRegularDiagonal,
    PositivePairMismatch,
    NegativePairMismatch,
    NonAdjacentMismatch,
    ExcludedHomogeneousCompleteOrEdgeless,
}

/// A pair whose squared-matrix entry disagrees with the value fixed by an
/// earlier pair of the same kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub pair: (usize, usize),
    pub reference: (usize, usize),
    pub expected: i64,
    pub found: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckFailure {
    pub kind: FailureKind,
    pub witness: Option<Witness>,
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.kind)?;
        if let Some(w) = self.witness {
            write!(
                f,
                ": pair {:?} has {} but pair {:?} has {}",
                w.pair, w.found, w.reference, w.expected
            )?;
        }
        Ok(())
    }
}

impl std::error::Error for CheckFailure {}

/// Tests strong regularity, reporting the parameters or the first
/// conflicting pair in lexicographic order.
pub fn check_srsg(g: &SignedGraph) -> Result<SrsgParams, CheckFailure> {
    let n = g.order();
    if g.edge_count() == 0 || (g.is_complete() && g.is_homogeneous()) {
        return Err(CheckFailure {
            kind: FailureKind::ExcludedHomogeneousCompleteOrEdgeless,
            witness: None,
        });
    }

    let r = g.degree(0);
    if let Some(v) = (1..n).find(|&v| g.degree(v) != r) {
        return Err(CheckFailure {
            kind: FailureKind::NotRegularDiagonal,
            witness: Some(Witness {
                pair: (v, v),
                reference: (0, 0),
                expected: r as i64,
                found: g.degree(v) as i64,
            }),
        });
    }

    // (value, first pair) per pair kind: positive, negative, non-adjacent
    let mut seen: [Option<(i64, (usize, usize))>; 3] = [None; 3];
    for u in 0..n {
        for v in u + 1..n {
            let kind = match g.sign(u, v) {
                1 => 0,
                -1 => 1,
                _ => 2,
            };
            let value = g.square_entry(u, v);
            match seen[kind] {
                None => seen[kind] = Some((value, (u, v))),
                Some((expected, reference)) if expected != value => {
                    let kind = [
                        FailureKind::PositivePairMismatch,
                        FailureKind::NegativePairMismatch,
                        FailureKind::NonAdjacentMismatch,
                    ][kind];
                    return Err(CheckFailure {
                        kind,
                        witness: Some(Witness {
                            pair: (u, v),
                            reference,
                            expected,
                            found: value,
                        }),
                    });
                }
                Some(_) => {}
            }
        }
    }
    Ok(SrsgParams {
        n,
        r,
        a: seen[0].map(|s| s.0),
        b: seen[1].map(|s| s.0),
        c: seen[2].map(|s| s.0),
    })
}

/// Five-way class of an inhomogeneous SRSG; one-sign parameter sets map to
/// `Homogeneous`.
pub fn classify_class(p: &SrsgParams) -> ClassLabel {
    let (Some(a), Some(b)) = (p.a, p.b) else {
        return ClassLabel::Homogeneous;
    };
    match (a == -b, p.c) {
        (true, None) => ClassLabel::C1,
        (true, Some(0)) => ClassLabel::C2,
        (true, Some(_)) => ClassLabel::C1,
        (false, None) => ClassLabel::C3,
        (false, Some(c)) if 2 * c == a + b => ClassLabel::C3,
        (false, Some(0)) => ClassLabel::C4,
        (false, Some(_)) => ClassLabel::C5,
    }
}

/// Why the walk-parity property is not applicable to a graph.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize)]
pub enum Lemma2Precondition {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is complete")]
    Complete,
    #[error("graph is not net-regular")]
    NotNetRegular,
    #[error("graph is not strongly regular: {0}")]
    NotStronglyRegular(CheckFailure),
    #[error("class {0} is outside C1, C4, C5")]
    WrongClass(ClassLabel),
}

/// A pair violating the negative-walk parity and split property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityWitness {
    pub pair: (usize, usize),
    pub negative_walks: usize,
    /// common neighbours joined positively to the first vertex and negatively to the second
    pub pos_neg: usize,
    pub neg_pos: usize,
}

/// For a connected, non-complete, net-regular SRSG in C1, C4 or C5: checks
/// that every vertex pair has an even number `2k` of negative 2-walks, with
/// exactly `k` of the `+ -` shape and `k` of the `- +` shape.
///
/// Returns `Ok(None)` when the property holds and `Ok(Some(w))` with the
/// first offending pair otherwise.
pub fn lemma2_check(g: &SignedGraph) -> Result<Option<ParityWitness>, Lemma2Precondition> {
    if !g.is_connected() {
        return Err(Lemma2Precondition::Disconnected);
    }
    if g.is_complete() {
        return Err(Lemma2Precondition::Complete);
    }
    if g.degrees().net_degree().is_none() {
        return Err(Lemma2Precondition::NotNetRegular);
    }
    let p = check_srsg(g).map_err(Lemma2Precondition::NotStronglyRegular)?;
    let class = classify_class(&p);
    if !matches!(class, ClassLabel::C1 | ClassLabel::C4 | ClassLabel::C5) {
        return Err(Lemma2Precondition::WrongClass(class));
    }
    Ok(parity_violation(g))
}

/// The walk-parity scan without the applicability checks.
pub fn parity_violation(g: &SignedGraph) -> Option<ParityWitness> {
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbours(u) & g.neighbours(v);
            let pos_neg = (common & g.pos_neighbours(u) & g.neg_neighbours(v)).count_ones() as usize;
            let neg_pos = (common & g.neg_neighbours(u) & g.pos_neighbours(v)).count_ones() as usize;
            if pos_neg != neg_pos {
                return Some(ParityWitness {
                    pair: (u, v),
                    negative_walks: pos_neg + neg_pos,
                    pos_neg,
                    neg_pos,
                });
            }
        }
    }
    None
}

/// Checks that negation swaps `a` and `b` and keeps the class.
pub fn negation_param_swap(g: &SignedGraph) -> Result<bool, CheckFailure> {
    let p = check_srsg(g)?;
    let Ok(q) = check_srsg(&g.negate()) else {
        return Ok(false);
    };
    Ok(q == p.negated() && classify_class(&q) == classify_class(&p))
}

/// Eigenvalues of the sign matrix, ascending.
pub fn spectrum(g: &SignedGraph) -> Vec<f64> {
    let n = g.order();
    let m = DMatrix::from_fn(n, n, |i, j| g.sign(i, j) as f64);
    let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|x, y| x.total_cmp(y));
    ev
}

/// Largest absolute entry of
/// `2A^2 + (b-a)A - (a+b)A_G - 2c(J - I - A_G) - 2rI`, computed with dense
/// integer matrices. Zero exactly when the matrix identity behind the
/// parameters holds. Undefined parameters contribute nothing: they label
/// pair kinds that do not occur.
pub fn matrix_identity_residual(g: &SignedGraph, p: &SrsgParams) -> i64 {
    let n = g.order();
    let (a, b, c) = (p.a.unwrap_or(0), p.b.unwrap_or(0), p.c.unwrap_or(0));
    let r = p.r as i64;
    let sign: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| g.sign(i, j)).collect()).collect();
    let mut worst = 0;
    for i in 0..n {
        for j in 0..n {
            let sq: i64 = (0..n).map(|k| sign[i][k] * sign[k][j]).sum();
            let adj = sign[i][j].abs();
            let non_adj = (i != j && adj == 0) as i64;
            let diag = (i == j) as i64;
            let lhs = 2 * sq + (b - a) * sign[i][j];
            let rhs = (a + b) * adj + 2 * c * non_adj + 2 * r * diag;
            worst = worst.max((lhs - rhs).abs());
        }
    }
    worst
}

/// Balanced triangles carrying exactly two negative edges.
pub fn balanced_two_negative_triangles(g: &SignedGraph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    let n = g.order();
    for u in 0..n {
        for v in bits(g.neighbours(u)).filter(|&v| v > u) {
            for w in bits(g.neighbours(u) & g.neighbours(v)).filter(|&w| w > v) {
                let negs = [(u, v), (v, w), (u, w)]
                    .iter()
                    .filter(|&&(x, y)| g.sign(x, y) < 0)
                    .count();
                if negs == 2 {
                    out.push((u, v, w));
                }
            }
        }
    }
    out
}
