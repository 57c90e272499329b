//! Signed graphs over at most 64 vertices.
//!
//! Each vertex owns two bitset rows: `adj` marks neighbours in the
//! underlying graph and `neg` marks the subset joined by a negative edge.
//! Every common-neighbour and 2-walk computation reduces to a couple of
//! word operations and a popcount.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported vertex count: one `u64` word per row.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..={MAX_VERTICES}")]
    BadOrder(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// A simple graph whose edges carry a sign.
///
/// Rows are kept symmetric with empty diagonal; all constructors enforce it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    adj: Vec<u64>,
    neg: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeTriple {
    pub d: usize,
    pub dpos: usize,
    pub dneg: usize,
    pub net: i64,
}

/// Per-vertex degrees plus the derived regularity flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub vertices: Vec<DegreeTriple>,
}

impl DegreeProfile {
    /// `Some(r)` when every vertex has total degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.vertices.first()?.d;
        self.vertices.iter().all(|t| t.d == first).then_some(first)
    }

    /// `Some(rho)` when every vertex has net-degree `rho`.
    pub fn net_degree(&self) -> Option<i64> {
        let first = self.vertices.first()?.net;
        self.vertices.iter().all(|t| t.net == first).then_some(first)
    }
}

/// Positive and negative 2-walks between a vertex pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkCounts2 {
    pub pos: usize,
    pub neg: usize,
}

impl WalkCounts2 {
    /// The matching entry of the squared sign matrix.
    pub fn value(&self) -> i64 {
        self.pos as i64 - self.neg as i64
    }
}

#[inline]
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

impl SignedGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        Ok(SignedGraph {
            n,
            adj: vec![0; n],
            neg: vec![0; n],
        })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize, Sign)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v, s) in edges {
            g.try_add_edge(u, v, s)?;
        }
        Ok(g)
    }

    /// All-positive graph from unsigned edges.
    pub fn from_unsigned(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v, Sign::Pos)?;
        }
        Ok(g)
    }

    /// Builds a graph straight from bitset rows. Callers guarantee symmetry.
    pub(crate) fn from_rows(adj: Vec<u64>, neg: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), neg.len());
        let g = SignedGraph { n: adj.len(), adj, neg };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v, Some(Sign::Pos));
            }
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize, s: Sign) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.set_edge(u, v, Some(s));
        Ok(())
    }

    /// Sets or clears the edge `u`-`v`. Panics on out-of-range vertices.
    pub(crate) fn set_edge(&mut self, u: usize, v: usize, s: Option<Sign>) {
        debug_assert!(u != v);
        let (bu, bv) = (1u64 << u, 1u64 << v);
        self.adj[u] &= !bv;
        self.adj[v] &= !bu;
        self.neg[u] &= !bv;
        self.neg[v] &= !bu;
        match s {
            None => {}
            Some(Sign::Pos) => {
                self.adj[u] |= bv;
                self.adj[v] |= bu;
            }
            Some(Sign::Neg) => {
                self.adj[u] |= bv;
                self.adj[v] |= bu;
                self.neg[u] |= bv;
                self.neg[v] |= bu;
            }
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_sign(&self, u: usize, v: usize) -> Option<Sign> {
        if !self.has_edge(u, v) {
            None
        } else if self.neg[u] >> v & 1 == 1 {
            Some(Sign::Neg)
        } else {
            Some(Sign::Pos)
        }
    }

    /// Entry of the sign matrix: -1, 0 or +1.
    pub fn sign(&self, u: usize, v: usize) -> i64 {
        self.edge_sign(u, v).map_or(0, Sign::value)
    }

    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neg_neighbours(&self, v: usize) -> u64 {
        self.neg[v]
    }

    pub fn pos_neighbours(&self, v: usize) -> u64 {
        self.adj[v] & !self.neg[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn rows(&self) -> (&[u64], &[u64]) {
        (&self.adj, &self.neg)
    }

    /// Edges `(u, v, sign)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, Sign)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = self.adj[u] & !((2u64 << u) - 1);
            for v in bits(above) {
                out.push((u, v, self.edge_sign(u, v).unwrap()));
            }
        }
        out
    }

    pub fn degrees(&self) -> DegreeProfile {
        let vertices = (0..self.n)
            .map(|v| {
                let d = self.degree(v);
                let dneg = self.neg[v].count_ones() as usize;
                let dpos = d - dneg;
                DegreeTriple {
                    d,
                    dpos,
                    dneg,
                    net: dpos as i64 - dneg as i64,
                }
            })
            .collect();
        DegreeProfile { vertices }
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    /// True when all edges share one sign (vacuously true when edgeless).
    pub fn is_homogeneous(&self) -> bool {
        let negs: usize = self.neg.iter().map(|r| r.count_ones() as usize).sum();
        negs == 0 || negs == 2 * self.edge_count()
    }

    pub fn negate(&self) -> SignedGraph {
        let neg = (0..self.n).map(|v| self.adj[v] & !self.neg[v]).collect();
        SignedGraph::from_rows(self.adj.clone(), neg)
    }

    /// Flips the sign of every edge with exactly one endpoint in `subset`
    /// (a vertex bitmask).
    pub fn switch(&self, subset: u64) -> SignedGraph {
        let neg = (0..self.n)
            .map(|v| {
                let cross = if subset >> v & 1 == 1 { !subset } else { subset };
                self.neg[v] ^ (self.adj[v] & cross)
            })
            .collect();
        SignedGraph::from_rows(self.adj.clone(), neg)
    }

    /// Same edge set, every edge positive.
    pub fn underlying(&self) -> SignedGraph {
        SignedGraph::from_rows(self.adj.clone(), vec![0; self.n])
    }

    /// The positive edges, as an all-positive graph on the same vertices.
    pub fn positive_part(&self) -> SignedGraph {
        let adj = (0..self.n).map(|v| self.pos_neighbours(v)).collect();
        SignedGraph::from_rows(adj, vec![0; self.n])
    }

    /// The negative edges, reported as an all-positive graph on the same vertices.
    pub fn negative_part(&self) -> SignedGraph {
        SignedGraph::from_rows(self.neg.clone(), vec![0; self.n])
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> SignedGraph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        let mut neg = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = map_bits(self.adj[v], perm);
            neg[perm[v]] = map_bits(self.neg[v], perm);
        }
        SignedGraph::from_rows(adj, neg)
    }

    /// Counts the 2-walks between `u` and `v` by sign. On the diagonal every
    /// closed 2-walk is positive, so the result is `(d(u), 0)`.
    pub fn two_walk_counts(&self, u: usize, v: usize) -> WalkCounts2 {
        if u == v {
            return WalkCounts2 {
                pos: self.degree(u),
                neg: 0,
            };
        }
        let common = self.adj[u] & self.adj[v];
        let neg = (common & (self.neg[u] ^ self.neg[v])).count_ones() as usize;
        WalkCounts2 {
            pos: common.count_ones() as usize - neg,
            neg,
        }
    }

    /// `(u, v)` entry of the squared sign matrix.
    #[inline]
    pub fn square_entry(&self, u: usize, v: usize) -> i64 {
        self.two_walk_counts(u, v).value()
    }

    pub fn is_connected(&self) -> bool {
        let full = if self.n == 64 { !0 } else { (1u64 << self.n) - 1 };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }

    /// Two-colouring test: vertices receive marks so that positive edges join
    /// equal marks and negative edges join opposite ones.
    pub fn is_balanced(&self) -> bool {
        self.balancing_switch().is_some()
    }

    /// A vertex subset whose switching makes every edge positive, if any.
    pub fn balancing_switch(&self) -> Option<u64> {
        let mut mark: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if mark[start].is_some() {
                continue;
            }
            mark[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let mu = mark[u].unwrap();
                for w in bits(self.adj[u]) {
                    let want = mu ^ (self.neg[u] >> w & 1 == 1);
                    match mark[w] {
                        None => {
                            mark[w] = Some(want);
                            queue.push_back(w);
                        }
                        Some(m) if m != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(
            mark.iter()
                .enumerate()
                .filter(|(_, m)| **m == Some(true))
                .fold(0u64, |acc, (v, _)| acc | 1 << v),
        )
    }

    /// Triangles `(u, v, w)` with `u < v < w` whose sign product is -1.
    pub fn unbalanced_triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.adj[u] & !((2u64 << u) - 1)) {
                let common = self.adj[u] & self.adj[v] & !((2u64 << v) - 1);
                for w in bits(common) {
                    if self.sign(u, v) * self.sign(v, w) * self.sign(u, w) < 0 {
                        out.push((u, v, w));
                    }
                }
            }
        }
        out
    }

    fn is_well_formed(&self) -> bool {
        (0..self.n).all(|u| {
            self.adj[u] >> u & 1 == 0
                && self.neg[u] & !self.adj[u] == 0
                && (self.n == 64 || self.adj[u] >> self.n == 0)
                && bits(self.adj[u]).all(|v| self.adj[v] >> u & 1 == 1)
                && bits(self.neg[u]).all(|v| self.neg[v] >> u & 1 == 1)
        })
    }
}

pub(crate) fn map_bits(word: u64, perm: &[usize]) -> u64 {
    bits(word).fold(0, |acc, w| acc | 1 << perm[w])
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph({}; ", self.n)?;
        for (i, (u, v, s)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}{s}{v}")?;
        }
        write!(f, ")")
    }
}
