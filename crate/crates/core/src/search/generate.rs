//! Connected `r`-regular graphs, one per isomorphism class.
//!
//! Generation proceeds in rounds. A state is a graph of maximum degree
//! `<= r`, stored by canonical form; each round picks one unsaturated vertex
//! (of largest degree) per state and completes its neighbourhood in every
//! possible way. Since the completions of isomorphic states are isomorphic,
//! deduplicating states per round loses nothing, and every `r`-regular graph
//! containing a state is reachable from it whichever vertex is picked.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{bits, Sign, SignedGraph};

use super::SearchError;

/// The `k`-subsets of the set bits of `mask`, as bitmasks.
pub(crate) fn subsets(mask: u64, k: usize) -> Vec<u64> {
    fn rec(items: &[u64], k: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
        } else if items.len() >= k {
            rec(&items[1..], k - 1, acc | items[0], out);
            rec(&items[1..], k, acc, out);
        }
    }
    let items: Vec<u64> = bits(mask).map(|i| 1u64 << i).collect();
    let mut out = Vec::new();
    rec(&items, k, 0, &mut out);
    out
}

/// A component made only of saturated vertices can never grow, so a state
/// holding one smaller than the whole graph has no connected completion.
pub(crate) fn has_closed_component(g: &SignedGraph, saturated: u64) -> bool {
    let n = g.order();
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut unseen = saturated;
    while unseen != 0 {
        let start = unseen.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= g.neighbours(v);
            }
            frontier = next & !comp;
            comp |= next;
        }
        if comp & !saturated == 0 && comp != all {
            return true;
        }
        unseen &= !comp;
    }
    false
}

fn saturated_mask(g: &SignedGraph, r: usize) -> u64 {
    (0..g.order()).filter(|&v| g.degree(v) == r).fold(0, |m, v| m | 1 << v)
}

/// Children of one state, as canonical forms.
fn expand(g: &SignedGraph, r: usize) -> Vec<CanonicalForm> {
    let n = g.order();
    let sat = saturated_mask(g, r);
    let open = (0..n).filter(|v| sat >> v & 1 == 0);
    let Some(v) = open.max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))) else {
        return Vec::new();
    };
    let need = r - g.degree(v);
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let cand = all & !sat & !g.neighbours(v) & !(1 << v);

    let mut out = Vec::new();
    for choice in subsets(cand, need) {
        let mut h = g.clone();
        for w in bits(choice) {
            h.set_edge(v, w, Some(Sign::Pos));
        }
        let sat = saturated_mask(&h, r);
        let open = all & !sat;
        let feasible = bits(open).all(|u| {
            let room = (open & !h.neighbours(u) & !(1 << u)).count_ones() as usize;
            r - h.degree(u) <= room
        });
        if !feasible || has_closed_component(&h, sat) {
            continue;
        }
        out.push(canonical_form(&h));
    }
    out
}

/// All connected `r`-regular graphs on `n` vertices up to isomorphism,
/// as canonical all-positive graphs sorted by canonical form.
pub fn gen_regular(n: usize, r: usize) -> Result<Vec<SignedGraph>, SearchError> {
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(SearchError::BadOrder(n));
    }
    if r >= n.max(2) || n * r % 2 == 1 {
        return Err(SearchError::Parity { n, r });
    }
    if r == 0 {
        // only the single vertex is connected
        return Ok(if n == 1 {
            vec![SignedGraph::empty(1).unwrap()]
        } else {
            Vec::new()
        });
    }

    let mut frontier = vec![canonical_form(&SignedGraph::empty(n).unwrap())];
    let mut done: HashSet<CanonicalForm> = HashSet::new();
    while !frontier.is_empty() {
        let children: HashSet<CanonicalForm> = frontier
            .par_iter()
            .flat_map_iter(|f| expand(&f.to_graph(), r))
            .collect();
        frontier = Vec::with_capacity(children.len());
        for c in children {
            let g = c.to_graph();
            if (0..n).all(|v| g.degree(v) == r) {
                if g.is_connected() {
                    done.insert(c);
                }
            } else {
                frontier.push(c);
            }
        }
    }
    let mut forms: Vec<CanonicalForm> = done.into_iter().collect();
    forms.sort();
    Ok(forms.iter().map(CanonicalForm::to_graph).collect())
}
