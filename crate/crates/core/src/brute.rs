//! Brute-force reference checks for small graphs.
//!
//! The partial-cube oracle does not use the Djoković relation. It lists
//! every convex split of the vertex set (both halves closed under shortest
//! paths) and searches for a family of splits cutting every edge exactly
//! once. Such a family exists exactly when the graph is a partial cube, and
//! the sides of the splits then form an isometric labeling.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Label, LabeledGraph};
use crate::partialcube::are_isomorphic;

/// Largest graph the oracle accepts; it enumerates `2^(n-1)` vertex subsets.
pub const ORACLE_LIMIT: usize = 16;

/// An isometric hypercube labeling found by exhaustive search, or `None`
/// when the graph is not a partial cube.
pub fn oracle_labeling(g: &LabeledGraph) -> Result<Option<Vec<Label>>> {
    let n = g.vertex_count();
    if n > ORACLE_LIMIT {
        return Err(Error::SizeLimit(n, ORACLE_LIMIT));
    }
    let d = g.distances()?;
    // interval[u][w]: vertices on some shortest u-w path
    let mut interval = vec![vec![0u32; n]; n];
    for u in 0..n {
        for w in 0..n {
            for x in 0..n {
                if d.get(u, x) + d.get(x, w) == d.get(u, w) {
                    interval[u][w] |= 1 << x;
                }
            }
        }
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let convex = |s: u32| {
        (0..n).filter(|&u| s >> u & 1 == 1).all(|u| (0..n).filter(|&w| s >> w & 1 == 1).all(|w| interval[u][w] & !s == 0))
    };
    // splits are indexed by the side holding vertex 0
    let edges = g.edges();
    let mut splits: Vec<(u32, u64)> = Vec::new();
    for half in 0..1u32 << (n - 1) {
        let s = (half << 1) | 1;
        if s == full || !convex(s) || !convex(full & !s) {
            continue;
        }
        let mut cut = 0u64;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if (s >> u & 1) != (s >> v & 1) {
                cut |= 1 << i;
            }
        }
        splits.push((s, cut));
    }
    let all_edges: u64 = if edges.len() == 64 { u64::MAX } else { (1u64 << edges.len()) - 1 };
    if edges.len() > 64 {
        return Err(Error::SizeLimit(edges.len(), 64));
    }
    let mut chosen = Vec::new();
    if !exact_cover(&splits, all_edges, 0, &mut chosen) {
        return Ok(None);
    }
    let labels = (0..n)
        .map(|v| Label::from_bits(chosen.iter().map(|&k| splits[k].0 >> v & 1 == 0).collect()))
        .collect();
    Ok(Some(labels))
}

fn exact_cover(splits: &[(u32, u64)], all: u64, covered: u64, chosen: &mut Vec<usize>) -> bool {
    if covered == all {
        return true;
    }
    let e = (!covered & all).trailing_zeros();
    for (k, &(_, cut)) in splits.iter().enumerate() {
        if cut >> e & 1 == 1 && cut & covered == 0 {
            chosen.push(k);
            if exact_cover(splits, all, covered | cut, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// All connected cubic graphs on `n` vertices up to isomorphism.
///
/// Grown from `K4` by four operations: joining the midpoints of two
/// distinct edges, blowing a vertex up into a triangle, replacing an edge by
/// a path through a diamond, and bridging two smaller graphs at subdivided
/// edges. The known counts 1, 2, 5, 19, 85 for `n = 4..=12` are checked in
/// the tests.
pub fn connected_cubic_graphs(n: usize) -> Vec<LabeledGraph> {
    let mut levels: Vec<Vec<LabeledGraph>> = vec![Vec::new(); n.max(4) + 1];
    if n < 4 || !n.is_multiple_of(2) {
        return Vec::new();
    }
    levels[4] = vec![crate::graph::named::complete(4)];
    for size in (6..=n).step_by(2) {
        let mut found = Collector::default();
        for g in &levels[size - 2] {
            let m = g.edge_count();
            for i in 0..m {
                for j in i + 1..m {
                    found.add(join_edges(g, i, j));
                }
            }
            for v in 0..g.vertex_count() {
                found.add(truncate_vertex(g, v));
            }
        }
        if size >= 8 {
            for g in &levels[size - 4] {
                for i in 0..g.edge_count() {
                    found.add(insert_diamond(g, i));
                }
            }
        }
        for a in (4..=size - 6).step_by(2) {
            let b = size - 2 - a;
            if b < a {
                break;
            }
            for g in &levels[a] {
                for h in &levels[b] {
                    for i in 0..g.edge_count() {
                        for j in 0..h.edge_count() {
                            found.add(bridge(g, i, h, j));
                        }
                    }
                }
            }
        }
        levels[size] = found.graphs;
    }
    std::mem::take(&mut levels[n])
}

#[derive(Default)]
struct Collector {
    graphs: Vec<LabeledGraph>,
    buckets: HashMap<Vec<(usize, usize)>, Vec<usize>>,
}

impl Collector {
    fn add(&mut self, g: LabeledGraph) {
        let bucket = self.buckets.entry(invariant(&g)).or_default();
        if bucket.iter().any(|&k| are_isomorphic(&self.graphs[k], &g, usize::MAX).unwrap_or(false)) {
            return;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
    }
}

/// Replaces edge `i` by a path through `k` new vertices; returns the edges
/// and the new vertex ids in path order.
fn subdivide(edges: &[(usize, usize)], n: usize, i: usize, k: usize) -> (Vec<(usize, usize)>, Vec<usize>) {
    let (u, v) = edges[i];
    let fresh: Vec<usize> = (n..n + k).collect();
    let mut out: Vec<(usize, usize)> = edges.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
    let mut prev = u;
    for &w in &fresh {
        out.push((prev, w));
        prev = w;
    }
    out.push((prev, v));
    (out, fresh)
}

fn join_edges(g: &LabeledGraph, i: usize, j: usize) -> LabeledGraph {
    let n = g.vertex_count();
    let (e, a) = subdivide(g.edges(), n, i, 1);
    // edge j keeps its index when j < i, and shifts down by one otherwise
    let j = if j > i { j - 1 } else { j };
    let (mut e, b) = subdivide(&e, n + 1, j, 1);
    e.push((a[0], b[0]));
    LabeledGraph::new(n + 2, e).expect("distinct edges give a simple graph")
}

fn truncate_vertex(g: &LabeledGraph, v: usize) -> LabeledGraph {
    let n = g.vertex_count();
    let nb = g.neighbors(v).to_vec();
    let corner = [v, n, n + 1];
    let mut e: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(a, b)| a != v && b != v).collect();
    for k in 0..3 {
        e.push((corner[k], nb[k]));
        e.push((corner[k], corner[(k + 1) % 3]));
    }
    LabeledGraph::new(n + 2, e).expect("triangle blow-up stays simple")
}

fn insert_diamond(g: &LabeledGraph, i: usize) -> LabeledGraph {
    let n = g.vertex_count();
    let (mut e, path) = subdivide(g.edges(), n, i, 2);
    let (p, q) = (path[0], path[1]);
    e.retain(|&x| x != (p, q));
    let (r, s) = (n + 2, n + 3);
    e.extend([(p, r), (p, s), (q, r), (q, s), (r, s)]);
    LabeledGraph::new(n + 4, e).expect("diamond insertion stays simple")
}

fn bridge(g: &LabeledGraph, i: usize, h: &LabeledGraph, j: usize) -> LabeledGraph {
    let n = g.vertex_count();
    let shifted: Vec<(usize, usize)> = h.edges().iter().map(|&(a, b)| (a + n, b + n)).collect();
    let mut all = g.edges().to_vec();
    all.extend(shifted);
    let total = n + h.vertex_count();
    let (e, a) = subdivide(&all, total, i, 1);
    let j = g.edge_count() - 1 + j;
    let (mut e, b) = subdivide(&e, total + 1, j, 1);
    e.push((a[0], b[0]));
    LabeledGraph::new(total + 2, e).expect("bridging stays simple")
}

/// Sorted (eccentricity, distance sum) profile, for bucketing.
fn invariant(g: &LabeledGraph) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = (0..g.vertex_count())
        .map(|s| {
            let d = g.bfs(s);
            (*d.iter().max().unwrap() as usize, d.iter().map(|&x| x as usize).sum())
        })
        .collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::partialcube::verify_labeling;

    #[test]
    fn oracle_on_named_graphs() {
        let q = hypercube(3);
        let l = oracle_labeling(&q).unwrap().unwrap();
        assert!(verify_labeling(&q, &l).unwrap());
        assert!(oracle_labeling(&complete(3)).unwrap().is_none());
        assert!(oracle_labeling(&prism(5)).unwrap().is_none());
        assert_eq!(oracle_labeling(&cycle(8)).unwrap().unwrap()[0].len(), 4);
        let k23 = LabeledGraph::new(5, vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(oracle_labeling(&k23).unwrap().is_none());
    }

    #[test]
    fn oracle_size_guard() {
        assert_eq!(oracle_labeling(&cycle(17)).unwrap_err(), Error::SizeLimit(17, ORACLE_LIMIT));
    }

    #[test]
    fn small_cubic_counts() {
        let counts: Vec<usize> = [4, 6, 8, 10, 12].iter().map(|&n| connected_cubic_graphs(n).len()).collect();
        assert_eq!(counts, [1, 2, 5, 19, 85]);
        assert!(connected_cubic_graphs(8).iter().all(|g| g.is_connected() && crate::partialcube::is_cubic(g)));
    }
}
