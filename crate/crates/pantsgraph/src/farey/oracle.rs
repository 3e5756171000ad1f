//! Brute-force breadth-first search over bounded pieces of the Farey graph.
//!
//! This module is the independent reference for [`super::distance`]. It
//! never calls the continued-fraction code: adjacency is the raw
//! determinant test and distances come from breadth-first search over all
//! slopes within a coordinate bound.
//!
//! Because the Farey graph is infinite, a bounded search is only trusted
//! under an explicit policy: a BFS answer for a pair is *certified* when
//! the found path itself stays within the bound and no shorter path exists
//! within four times the bound.

use std::collections::HashMap;

use super::Slope;

/// Every canonical slope with `max(|p|, q) <= bound`, sorted.
pub fn vertices(bound: u32) -> Vec<Slope> {
    let b = i64::from(bound);
    let mut out = vec![Slope::INFINITY];
    for q in 1..=b {
        for p in -b..=b {
            if gcd(p.unsigned_abs(), q as u64) == 1 {
                out.push(Slope::new(p, q).expect("nonzero"));
            }
        }
    }
    out.retain(|s| s.numerator().abs() <= b && s.denominator() <= b);
    out.sort();
    out.dedup();
    out
}

/// Raw adjacency, kept deliberately separate from the library edge test.
fn adjacent(a: Slope, b: Slope) -> bool {
    (a.numerator() * b.denominator() - a.denominator() * b.numerator()).abs() == 1
}

/// BFS distance from `a` to `b` using only slopes within `bound`,
/// truncated at `max_len`. Also returns the predecessor path when found.
pub fn bfs_path(a: Slope, b: Slope, bound: u32, max_len: u32) -> Option<Vec<Slope>> {
    if a == b {
        return Some(vec![a]);
    }
    let verts = vertices(bound);
    let index: HashMap<Slope, usize> = verts.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let (&ai, &bi) = (index.get(&a)?, index.get(&b)?);
    let mut prev: Vec<Option<usize>> = vec![None; verts.len()];
    let mut dist: Vec<Option<u32>> = vec![None; verts.len()];
    dist[ai] = Some(0);
    let mut frontier = vec![ai];
    for depth in 1..=max_len {
        let mut next = Vec::new();
        for &u in &frontier {
            for (v, &sv) in verts.iter().enumerate() {
                if dist[v].is_none() && adjacent(verts[u], sv) {
                    dist[v] = Some(depth);
                    prev[v] = Some(u);
                    next.push(v);
                }
            }
        }
        if dist[bi].is_some() {
            let mut path = vec![bi];
            while let Some(p) = prev[*path.last().unwrap()] {
                path.push(p);
            }
            path.reverse();
            return Some(path.into_iter().map(|i| verts[i]).collect());
        }
        frontier = next;
        if frontier.is_empty() {
            return None;
        }
    }
    None
}

/// BFS distance within `bound`, up to length `max_len`.
pub fn bfs_distance(a: Slope, b: Slope, bound: u32, max_len: u32) -> Option<u32> {
    bfs_path(a, b, bound, max_len).map(|p| (p.len() - 1) as u32)
}

/// Certified ground-truth distance. A BFS answer at `bound` is accepted
/// only when the witness path verifies edge by edge and no shorter path
/// exists at bound `4 * bound`.
pub fn certified_distance(a: Slope, b: Slope, bound: u32) -> Option<u32> {
    let generous = 2 * i64::from(bound).max(a.numerator().abs()).max(a.denominator())
        .max(b.numerator().abs())
        .max(b.denominator()) as u32;
    let path = bfs_path(a, b, bound, generous)?;
    for w in path.windows(2) {
        if !adjacent(w[0], w[1]) {
            return None;
        }
    }
    let d = (path.len() - 1) as u32;
    if d > 0 && bfs_distance(a, b, 4 * bound, d - 1).is_some() {
        return None;
    }
    Some(d)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
