//! Oracles shared by the integration tests. Nothing here goes through the
//! library's walk counting, generation or canonical labelling.
#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::PathBuf;

use sgsr::{Sign, SignedGraph, SrsgParams};

pub fn census_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../census")
}

pub fn sign_matrix(g: &SignedGraph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match g.edge_sign(i, j) {
                    Some(Sign::Pos) => 1,
                    Some(Sign::Neg) => -1,
                    None => 0,
                })
                .collect()
        })
        .collect()
}

pub fn square(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if m[i][k] != 0 {
                for j in 0..n {
                    out[i][j] += m[i][k] * m[k][j];
                }
            }
        }
    }
    out
}

/// Strong regularity read off the dense square of the sign matrix.
pub fn matrix_params(g: &SignedGraph) -> Option<SrsgParams> {
    let a = sign_matrix(g);
    let n = a.len();
    let edges = a.iter().flatten().filter(|&&x| x != 0).count() / 2;
    let negatives = a.iter().flatten().filter(|&&x| x < 0).count() / 2;
    if edges == 0 || (edges == n * (n - 1) / 2 && (negatives == 0 || negatives == edges)) {
        return None;
    }
    let sq = square(&a);
    let r = sq[0][0];
    if (0..n).any(|i| sq[i][i] != r) {
        return None;
    }
    let mut vals: [Option<i64>; 3] = [None; 3];
    for i in 0..n {
        for j in i + 1..n {
            let kind = match a[i][j] {
                1 => 0,
                -1 => 1,
                _ => 2,
            };
            match vals[kind] {
                None => vals[kind] = Some(sq[i][j]),
                Some(v) if v != sq[i][j] => return None,
                _ => {}
            }
        }
    }
    Some(SrsgParams::new(n, r as usize, vals[0], vals[1], vals[2]))
}

pub fn connected(g: &SignedGraph) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            if !seen[v] && g.has_edge(u, v) {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// All labelled simple graphs on `n` vertices that are connected and
/// `r`-regular, by sweeping every edge subset.
pub fn labelled_regular(n: usize, r: usize) -> Vec<SignedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        if (mask.count_ones() as usize) * 2 != n * r {
            continue;
        }
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = SignedGraph::from_unsigned(n, &chosen).unwrap();
        if (0..n).all(|v| g.degree(v) == r) && connected(&g) {
            out.push(g);
        }
    }
    out
}

/// Every signing of the underlying graph of `g`.
pub fn all_signings(g: &SignedGraph) -> impl Iterator<Item = SignedGraph> + '_ {
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v, _)| (u, v)).collect();
    let m = edges.len();
    (0u64..1 << m).map(move |mask| {
        let list: Vec<_> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (u, v, if mask >> i & 1 == 1 { Sign::Neg } else { Sign::Pos }))
            .collect();
        SignedGraph::from_edge_list(g.order(), &list).unwrap()
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Sign-preserving isomorphism by trying every bijection.
pub fn brute_isomorphic(g: &SignedGraph, h: &SignedGraph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (a, b) = (sign_matrix(g), sign_matrix(h));
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|i| (0..n).all(|j| a[i][j] == b[p[i]][p[j]])) {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

/// Size of the automorphism group by trying every bijection.
pub fn brute_group_order(g: &SignedGraph) -> usize {
    let n = g.order();
    let a = sign_matrix(g);
    let mut p: Vec<usize> = (0..n).collect();
    let mut count = 0;
    loop {
        if (0..n).all(|i| (0..n).all(|j| a[i][j] == a[p[i]][p[j]])) {
            count += 1;
        }
        if !next_permutation(&mut p) {
            return count;
        }
    }
}
