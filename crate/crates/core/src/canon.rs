//! Canonical labelling of signed graphs by individualization-refinement.
//!
//! The initial partition groups vertices by `(d, d+, d-)`. Refinement splits
//! cells by how many positive and negative neighbours each vertex has in a
//! splitter cell until the partition is equitable. The search branches on
//! the first non-singleton cell; every discrete partition is a candidate
//! labelling and the one with the smallest row serialization wins.
//! Automorphisms discovered at leaves prune sibling branches.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::graph::{bits, map_bits, SignedGraph};

/// Relabelling-invariant key: the sign matrix of the canonically relabelled
/// graph, two words (edge row, negative row) per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    n: usize,
    code: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> SignedGraph {
        let adj = self.code.iter().step_by(2).copied().collect();
        let neg = self.code.iter().skip(1).step_by(2).copied().collect();
        SignedGraph::from_rows(adj, neg)
    }
}

/// Result of a canonical labelling run.
#[derive(Debug, Clone)]
pub struct Labelling {
    /// `perm[v]` is the canonical position of vertex `v`.
    pub perm: Vec<usize>,
    pub form: CanonicalForm,
    /// Generators of the sign-preserving automorphism group.
    pub generators: Vec<Vec<usize>>,
    /// Leaves visited by the search.
    pub leaves: usize,
}

pub fn canonical_form(g: &SignedGraph) -> CanonicalForm {
    canonical_labelling(g).form
}

pub fn signed_isomorphic(g: &SignedGraph, h: &SignedGraph) -> bool {
    g.order() == h.order() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

/// Generators of the automorphism group of `g` (sign-preserving).
pub fn automorphism_generators(g: &SignedGraph) -> Vec<Vec<usize>> {
    canonical_labelling(g).generators
}

pub fn canonical_labelling(g: &SignedGraph) -> Labelling {
    let n = g.order();
    let degs = g.degrees();
    let mut keys: Vec<(usize, usize, usize, usize)> = degs
        .vertices
        .iter()
        .enumerate()
        .map(|(v, t)| (t.d, t.dpos, t.dneg, v))
        .collect();
    keys.sort_unstable();
    let mut cells: Vec<u64> = Vec::new();
    let mut prev = None;
    for &(d, p, q, v) in &keys {
        if prev == Some((d, p, q)) {
            *cells.last_mut().unwrap() |= 1 << v;
        } else {
            cells.push(1 << v);
            prev = Some((d, p, q));
        }
    }

    let pos: Vec<u64> = (0..n).map(|v| g.pos_neighbours(v)).collect();
    let (adj, neg) = g.rows();
    let mut search = Search {
        n,
        adj,
        pos: &pos,
        neg,
        best: None,
        first: None,
        generators: Vec::new(),
        leaves: 0,
        path: Vec::new(),
    };
    refine(&mut cells, &pos, neg);
    search.descend(cells);

    let (code, perm) = search.best.take().expect("search visits at least one leaf");
    Labelling {
        perm,
        form: CanonicalForm { n, code },
        generators: search.generators,
        leaves: search.leaves,
    }
}

struct Search<'a> {
    n: usize,
    adj: &'a [u64],
    pos: &'a [u64],
    neg: &'a [u64],
    best: Option<(Vec<u64>, Vec<usize>)>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
    leaves: usize,
    path: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>) {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut explored = 0u64;
        for v in bits(cell) {
            if explored != 0 && self.equivalent_to_explored(v, explored) {
                continue;
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(&mut child, self.pos, self.neg);
            self.path.push(v);
            self.descend(child);
            self.path.pop();
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the known
    /// automorphisms that fix the current path pointwise.
    fn equivalent_to_explored(&self, v: usize, explored: u64) -> bool {
        let stabilising: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|g| self.path.iter().all(|&p| g[p] == p))
            .collect();
        if stabilising.is_empty() {
            return false;
        }
        // orbit of v under the stabilising generators
        let mut orbit = 1u64 << v;
        let mut frontier = orbit;
        while frontier != 0 {
            let mut next = 0u64;
            for w in bits(frontier) {
                for g in &stabilising {
                    next |= 1 << g[w];
                }
            }
            frontier = next & !orbit;
            orbit |= next;
        }
        orbit & explored != 0
    }

    fn leaf(&mut self, cells: &[u64]) {
        self.leaves += 1;
        let mut perm = vec![0; self.n];
        for (i, c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = i;
        }
        let mut code = vec![0u64; 2 * self.n];
        for v in 0..self.n {
            code[2 * perm[v]] = map_bits(self.adj[v], &perm);
            code[2 * perm[v] + 1] = map_bits(self.neg[v], &perm);
        }

        let Some((first_code, first_perm)) = &self.first else {
            self.first = Some((code.clone(), perm.clone()));
            self.best = Some((code, perm));
            return;
        };
        if *first_code == code {
            let aut = automorphism(first_perm, &perm);
            self.push_generator(aut);
            return;
        }
        let (best_code, best_perm) = self.best.as_ref().unwrap();
        match code.cmp(best_code) {
            Ordering::Less => self.best = Some((code, perm)),
            Ordering::Equal => {
                let aut = automorphism(best_perm, &perm);
                self.push_generator(aut);
            }
            Ordering::Greater => {}
        }
    }

    fn push_generator(&mut self, aut: Vec<usize>) {
        if aut.iter().enumerate().any(|(v, &w)| v != w) && !self.generators.contains(&aut) {
            self.generators.push(aut);
        }
    }
}

/// The automorphism taking the labelling `to` onto `from`: both map the
/// graph to the same code, so `from^-1 . to` preserves it.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; from.len()];
    for (v, &p) in from.iter().enumerate() {
        inv[p] = v;
    }
    to.iter().map(|&p| inv[p]).collect()
}

/// Refines an ordered partition (cells as vertex bitmasks) to an equitable
/// one. New cells are ordered by their neighbour counts, which keeps the
/// result independent of vertex names.
pub(crate) fn refine(cells: &mut Vec<u64>, pos: &[u64], neg: &[u64]) {
    let mut keyed: Vec<(u32, usize)> = Vec::with_capacity(64);
    loop {
        let mut split_any = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut next: Vec<u64> = Vec::with_capacity(cells.len() + 4);
            let mut split_here = false;
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                keyed.clear();
                keyed.extend(bits(cell).map(|v| {
                    let p = (pos[v] & splitter).count_ones();
                    let q = (neg[v] & splitter).count_ones();
                    (p << 8 | q, v)
                }));
                keyed.sort_unstable();
                if keyed[0].0 == keyed[keyed.len() - 1].0 {
                    next.push(cell);
                    continue;
                }
                split_here = true;
                let mut cur = 0u64;
                let mut key = keyed[0].0;
                for &(k, v) in keyed.iter() {
                    if k != key {
                        next.push(cur);
                        cur = 0;
                        key = k;
                    }
                    cur |= 1 << v;
                }
                next.push(cur);
            }
            if split_here {
                *cells = next;
                split_any = true;
            }
            s += 1;
        }
        if !split_any {
            return;
        }
    }
}

/// Orbit of `start` under the group generated by `generators`, acting
/// through `act`.
pub fn orbit<T, F>(start: T, generators: &[Vec<usize>], act: F) -> Vec<T>
where
    T: Clone + Ord,
    F: Fn(&T, &[usize]) -> T,
{
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(start.clone());
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for g in generators {
            let y = act(&x, g);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Number of elements of the group generated by `generators` (small groups
/// only; enumerates the group).
pub fn group_order(n: usize, generators: &[Vec<usize>]) -> usize {
    let id: Vec<usize> = (0..n).collect();
    orbit(id, generators, |p, g| p.iter().map(|&x| g[x]).collect()).len()
}
