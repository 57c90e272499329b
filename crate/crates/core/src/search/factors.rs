//! Spanning `k`-regular subgraphs (`k`-factors) and their orbits under the
//! automorphism group of the host graph.

use std::collections::HashSet;

use crate::canon::{automorphism_generators, orbit};
use crate::graph::{bits, map_bits, SignedGraph};

use super::generate::subsets;

/// A spanning subgraph as one neighbour bitmask per vertex.
pub type Factor = Vec<u64>;

/// Every `k`-factor of the underlying graph of `g`, each exactly once.
///
/// The lowest vertex still short of degree `k` receives all of its missing
/// subgraph edges at once, so each factor is produced along one path.
pub fn k_factors(g: &SignedGraph, k: usize) -> Vec<Factor> {
    let n = g.order();
    let mut out = Vec::new();
    if n * k % 2 == 1 || (0..n).any(|v| g.degree(v) < k) {
        return out;
    }
    let mut rows = vec![0u64; n];
    extend(g, k, &mut rows, 0, &mut out);
    out
}

fn extend(g: &SignedGraph, k: usize, rows: &mut Factor, from: usize, out: &mut Vec<Factor>) {
    let n = g.order();
    let Some(v) = (from..n).find(|&v| (rows[v].count_ones() as usize) < k) else {
        out.push(rows.clone());
        return;
    };
    let need = k - rows[v].count_ones() as usize;
    // partners: later vertices that are still short and not yet joined to v
    let open = (v + 1..n)
        .filter(|&w| (rows[w].count_ones() as usize) < k)
        .fold(0u64, |m, w| m | 1 << w);
    let cand = g.neighbours(v) & open & !rows[v];
    for choice in subsets(cand, need) {
        for w in bits(choice) {
            rows[v] |= 1 << w;
            rows[w] |= 1 << v;
        }
        // every later vertex must still be able to reach degree k
        let viable = (v + 1..n).all(|u| {
            let have = rows[u].count_ones() as usize;
            if have >= k {
                return true;
            }
            let short = (u + 1..n)
                .chain(v + 1..u)
                .filter(|&w| (rows[w].count_ones() as usize) < k)
                .fold(0u64, |m, w| m | 1 << w);
            ((g.neighbours(u) & short & !rows[u]).count_ones() as usize) >= k - have
        });
        if viable {
            extend(g, k, rows, v + 1, out);
        }
        for w in bits(choice) {
            rows[v] &= !(1 << w);
            rows[w] &= !(1 << v);
        }
    }
}

/// Image of a factor under a vertex permutation.
pub fn permute_factor(f: &Factor, perm: &[usize]) -> Factor {
    let mut out = vec![0u64; f.len()];
    for (v, &row) in f.iter().enumerate() {
        out[perm[v]] = map_bits(row, perm);
    }
    out
}

/// One `k`-factor per orbit of the automorphism group of the underlying
/// graph, in enumeration order of the first orbit member. Also returns the
/// total number of factors.
pub fn enumerate_negative_subgraphs(g: &SignedGraph, k: usize) -> (Vec<Factor>, usize) {
    let all = k_factors(g, k);
    let total = all.len();
    let gens = automorphism_generators(&g.underlying());
    if gens.is_empty() {
        return (all, total);
    }
    let mut seen: HashSet<Factor> = HashSet::new();
    let mut reps = Vec::new();
    for f in all {
        if seen.contains(&f) {
            continue;
        }
        for image in orbit(f.clone(), &gens, permute_factor) {
            seen.insert(image);
        }
        reps.push(f);
    }
    (reps, total)
}

/// The signing of `g`'s underlying graph that is negative exactly on `f`.
pub fn sign_by_factor(g: &SignedGraph, f: &Factor) -> SignedGraph {
    let (adj, _) = g.rows();
    SignedGraph::from_rows(adj.to_vec(), f.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{automorphism_generators, orbit};

    fn k55() -> SignedGraph {
        let mut e = Vec::new();
        for u in 0..5 {
            for v in 5..10 {
                e.push((u, v));
            }
        }
        SignedGraph::from_unsigned(10, &e).unwrap()
    }

    #[test]
    fn k6_factor_counts() {
        let k6 = SignedGraph::complete(6).unwrap();
        assert_eq!(k_factors(&k6, 1).len(), 15);
        // 60 hexagons and 10 pairs of triangles
        assert_eq!(k_factors(&k6, 2).len(), 70);
        assert_eq!(k_factors(&k6, 0).len(), 1);
        assert_eq!(k_factors(&k6, 5).len(), 1);
    }

    #[test]
    fn k6_orbits() {
        let k6 = SignedGraph::complete(6).unwrap();
        let (reps, total) = enumerate_negative_subgraphs(&k6, 1);
        assert_eq!((reps.len(), total), (1, 15));
        let (reps, total) = enumerate_negative_subgraphs(&k6, 2);
        assert_eq!((reps.len(), total), (2, 70));
        let mut shapes: Vec<bool> = reps
            .iter()
            .map(|f| sign_by_factor(&k6, f).negative_part().is_connected())
            .collect();
        shapes.sort();
        assert_eq!(shapes, vec![false, true]);
    }

    #[test]
    fn matching_orbit_covers_all_matchings() {
        let k6 = SignedGraph::complete(6).unwrap();
        let gens = automorphism_generators(&k6);
        let (reps, _) = enumerate_negative_subgraphs(&k6, 1);
        let images = orbit(reps[0].clone(), &gens, permute_factor);
        let mut all = k_factors(&k6, 1);
        all.sort();
        assert_eq!(images, all);
    }

    #[test]
    fn k55_matchings() {
        let g = k55();
        let (reps, total) = enumerate_negative_subgraphs(&g, 1);
        assert_eq!((reps.len(), total), (1, 120));
    }

    #[test]
    fn factors_are_spanning_and_regular() {
        let g = k55();
        for f in k_factors(&g, 2) {
            let h = sign_by_factor(&g, &f);
            assert!(h.degrees().vertices.iter().all(|t| t.dneg == 2));
        }
    }
}
