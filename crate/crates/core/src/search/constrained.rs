//! Parameter-constrained construction of net-regular signed graphs.
//!
//! Instead of enumerating underlying graphs first, this grows the signed
//! graph directly. Each round saturates one vertex of every state (all of
//! its positive and negative edges at once) and discards a state as soon as
//! a pair with a saturated endpoint can no longer reach its target entry of
//! the squared sign matrix. States are deduplicated per round by signed
//! canonical form.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{bits, Sign, SignedGraph};
use crate::srsg::check_srsg;

use super::generate::{has_closed_component, subsets};
use super::Budget;

/// Target squared-matrix entries by pair kind. `None` forbids the kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Target {
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub c: Option<i64>,
}

pub(crate) struct Outcome {
    pub leaves: Vec<CanonicalForm>,
    pub nodes: u64,
    pub checked: u64,
    pub aborted: Option<String>,
}

struct Shape {
    n: usize,
    r: usize,
    /// negative degree of every vertex
    k: usize,
    target: Target,
    all: u64,
}

impl Shape {
    fn saturated(&self, g: &SignedGraph) -> u64 {
        (0..self.n)
            .filter(|&v| g.degree(v) == self.r)
            .fold(0, |m, v| m | 1 << v)
    }

    fn pair_target(&self, g: &SignedGraph, u: usize, w: usize) -> Option<i64> {
        match g.edge_sign(u, w) {
            Some(Sign::Pos) => self.target.a,
            Some(Sign::Neg) => self.target.b,
            None => self.target.c,
        }
    }

    fn pos_room(&self, g: &SignedGraph, v: usize) -> bool {
        g.degree(v) - (g.neg_neighbours(v).count_ones() as usize) < self.r - self.k
    }

    fn neg_room(&self, g: &SignedGraph, v: usize) -> bool {
        (g.neg_neighbours(v).count_ones() as usize) < self.k
    }

    /// Whether every pair with a saturated endpoint can still meet its target.
    fn pairs_viable(&self, g: &SignedGraph, sat: u64) -> bool {
        let open = self.all & !sat;
        for u in bits(sat) {
            for w in 0..self.n {
                if w == u || (sat >> w & 1 == 1 && w < u) {
                    continue;
                }
                let Some(t) = self.pair_target(g, u, w) else {
                    return false;
                };
                let cur = g.square_entry(u, w);
                if sat >> w & 1 == 1 {
                    if cur != t {
                        return false;
                    }
                    continue;
                }
                // neighbours of u that may still be joined to w
                let rem = (g.neighbours(u) & !g.neighbours(w) & open & !(1 << w)).count_ones() as i64;
                if (t - cur).abs() > rem {
                    return false;
                }
            }
        }
        true
    }

    fn degrees_viable(&self, g: &SignedGraph, sat: u64) -> bool {
        let open = self.all & !sat;
        bits(open).all(|u| {
            let free = open & !g.neighbours(u) & !(1 << u);
            let dneg = g.neg_neighbours(u).count_ones() as usize;
            let dpos = g.degree(u) - dneg;
            let pos_partners = bits(free).filter(|&w| self.pos_room(g, w)).count();
            let neg_partners = bits(free).filter(|&w| self.neg_room(g, w)).count();
            let need_pos = self.r - self.k - dpos;
            let need_neg = self.k - dneg;
            need_pos <= pos_partners && need_neg <= neg_partners && need_pos + need_neg <= free.count_ones() as usize
        })
    }

    fn expand(&self, g: &SignedGraph) -> Vec<CanonicalForm> {
        let sat = self.saturated(g);
        let open = self.all & !sat;
        let Some(v) = bits(open).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))) else {
            return Vec::new();
        };
        let dneg = g.neg_neighbours(v).count_ones() as usize;
        let need_neg = self.k - dneg;
        let need_pos = self.r - self.k - (g.degree(v) - dneg);
        let free = open & !g.neighbours(v) & !(1 << v);
        let neg_cand = bits(free)
            .filter(|&w| self.neg_room(g, w))
            .fold(0u64, |m, w| m | 1 << w);
        let pos_cand = bits(free)
            .filter(|&w| self.pos_room(g, w))
            .fold(0u64, |m, w| m | 1 << w);

        let mut out = Vec::new();
        for negs in subsets(neg_cand, need_neg) {
            for poss in subsets(pos_cand & !negs, need_pos) {
                let mut h = g.clone();
                for w in bits(negs) {
                    h.set_edge(v, w, Some(Sign::Neg));
                }
                for w in bits(poss) {
                    h.set_edge(v, w, Some(Sign::Pos));
                }
                let sat = self.saturated(&h);
                if has_closed_component(&h, sat) || !self.degrees_viable(&h, sat) || !self.pairs_viable(&h, sat) {
                    continue;
                }
                out.push(canonical_form(&h));
            }
        }
        out
    }
}

pub(crate) fn search(n: usize, r: usize, k: usize, target: Target, budget: &Budget) -> Outcome {
    let shape = Shape {
        n,
        r,
        k,
        target,
        all: if n == 64 { !0 } else { (1u64 << n) - 1 },
    };
    let start = Instant::now();
    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let mut aborted = None;
    let mut frontier = vec![canonical_form(&SignedGraph::empty(n).unwrap())];
    let mut leaves: HashSet<CanonicalForm> = HashSet::new();
    let mut checked = 0;

    while !frontier.is_empty() {
        let children: HashSet<CanonicalForm> = frontier
            .par_iter()
            .flat_map_iter(|f| {
                let seen = nodes.fetch_add(1, Ordering::Relaxed) + 1;
                if budget.exceeded(seen, start) {
                    stop.store(true, Ordering::Relaxed);
                }
                if stop.load(Ordering::Relaxed) {
                    Vec::new()
                } else {
                    shape.expand(&f.to_graph())
                }
            })
            .collect();
        if stop.load(Ordering::Relaxed) {
            aborted = Some(budget.describe(nodes.load(Ordering::Relaxed), start));
            break;
        }
        frontier = Vec::with_capacity(children.len());
        for c in children {
            let g = c.to_graph();
            if (0..n).all(|v| g.degree(v) == r) {
                checked += 1;
                if g.is_connected() && check_srsg(&g).is_ok() {
                    leaves.insert(c);
                }
            } else {
                frontier.push(c);
            }
        }
    }
    let mut leaves: Vec<CanonicalForm> = leaves.into_iter().collect();
    leaves.sort();
    Outcome {
        leaves,
        nodes: nodes.into_inner(),
        checked,
        aborted,
    }
}
