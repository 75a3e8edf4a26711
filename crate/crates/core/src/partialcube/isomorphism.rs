use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Distances, LabeledGraph};

pub const DEFAULT_SIZE_LIMIT: usize = 2000;

/// Isomorphism test by backtracking over vertex colors refined from
/// degrees and distance profiles.
pub fn are_isomorphic(g1: &LabeledGraph, g2: &LabeledGraph, limit: usize) -> Result<bool> {
    let n = g1.vertex_count();
    for g in [g1, g2] {
        if g.vertex_count() > limit {
            return Err(Error::SizeLimit(g.vertex_count(), limit));
        }
    }
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    if n == 0 {
        return Ok(true);
    }
    let (d1, d2) = match (g1.distances(), g2.distances()) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(_), Err(_)) => return Ok(disconnected_fallback(g1, g2)),
        _ => return Ok(false),
    };
    let (c1, c2) = refine(g1, &d1, g2, &d2);
    let mut h1: Vec<usize> = c1.clone();
    let mut h2: Vec<usize> = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return Ok(false);
    }
    Ok(Matcher { g1, g2, d1: &d1, d2: &d2, c1: &c1, c2: &c2 }.run())
}

fn disconnected_fallback(g1: &LabeledGraph, g2: &LabeledGraph) -> bool {
    // compare component by component through a connected encoding: join every
    // vertex to a new apex. Apexes are the unique vertices adjacent to all others.
    let add_apex = |g: &LabeledGraph| {
        let n = g.vertex_count();
        let mut e = g.edges().to_vec();
        e.extend((0..n).map(|v| (v, n)));
        LabeledGraph::new(n + 1, e).expect("simple")
    };
    are_isomorphic(&add_apex(g1), &add_apex(g2), usize::MAX).unwrap_or(false)
}

/// Joint color refinement of two graphs so that colors are comparable.
fn refine(g1: &LabeledGraph, d1: &Distances, g2: &LabeledGraph, d2: &Distances) -> (Vec<usize>, Vec<usize>) {
    let n = g1.vertex_count();
    let profile = |g: &LabeledGraph, d: &Distances, v: usize| {
        let mut hist = vec![0usize; n];
        for &x in d.row(v) {
            hist[x as usize] += 1;
        }
        (g.degree(v), hist)
    };
    let mut dict: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
    let mut intern = |key: (usize, Vec<usize>)| {
        let next = dict.len();
        *dict.entry(key).or_insert(next)
    };
    let mut c1: Vec<usize> = (0..n).map(|v| intern(profile(g1, d1, v))).collect();
    let mut c2: Vec<usize> = (0..n).map(|v| intern(profile(g2, d2, v))).collect();
    loop {
        let classes_before = count_distinct(&c1, &c2);
        let mut dict: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut step = |g: &LabeledGraph, c: &[usize]| -> Vec<usize> {
            (0..n)
                .map(|v| {
                    let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&w| c[w]).collect();
                    ns.sort_unstable();
                    let next = dict.len();
                    *dict.entry((c[v], ns)).or_insert(next)
                })
                .collect()
        };
        let n1 = step(g1, &c1);
        let n2 = step(g2, &c2);
        c1 = n1;
        c2 = n2;
        if count_distinct(&c1, &c2) == classes_before {
            return (c1, c2);
        }
    }
}

fn count_distinct(a: &[usize], b: &[usize]) -> usize {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

struct Matcher<'a> {
    g1: &'a LabeledGraph,
    g2: &'a LabeledGraph,
    d1: &'a Distances,
    d2: &'a Distances,
    c1: &'a [usize],
    c2: &'a [usize],
}

impl Matcher<'_> {
    fn run(&self) -> bool {
        let n = self.g1.vertex_count();
        // start from the rarest color, then grow in BFS order
        let mut freq: HashMap<usize, usize> = HashMap::new();
        for &c in self.c1 {
            *freq.entry(c).or_default() += 1;
        }
        let root = (0..n).min_by_key(|&v| (freq[&self.c1[v]], v)).unwrap();
        let mut order = vec![root];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            for &w in self.g1.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend(&order, 0, &mut map, &mut used)
    }

    fn extend(&self, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if depth == order.len() {
            return true;
        }
        let u = order[depth];
        // candidates: neighbors of the image of an already mapped neighbor
        let anchor = self.g1.neighbors(u).iter().copied().find(|&w| map[w] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(w) => self.g2.neighbors(map[w]).to_vec(),
            None => (0..self.g2.vertex_count()).collect(),
        };
        for v in candidates {
            if used[v] || self.c1[u] != self.c2[v] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&x| self.d1.get(u, x) == self.d2.get(v, map[x]));
            if !consistent {
                continue;
            }
            map[u] = v;
            used[v] = true;
            if self.extend(order, depth + 1, map, used) {
                return true;
            }
            map[u] = usize::MAX;
            used[v] = false;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn prism_over_square_is_cube() {
        assert!(are_isomorphic(&prism(4), &hypercube(3), 100).unwrap());
    }

    #[test]
    fn different_orders() {
        assert!(!are_isomorphic(&prism(6), &prism(8), 100).unwrap());
    }

    #[test]
    fn permuted_copy() {
        let g = prism(7);
        let perm: Vec<usize> = (0..14).map(|i| (i * 5 + 3) % 14).collect();
        assert!(are_isomorphic(&g, &g.permuted(&perm), 100).unwrap());
    }

    #[test]
    fn same_degrees_different_graphs() {
        // K_{3,3} and the triangular prism are both cubic on 6 vertices
        let k33 = LabeledGraph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect()).unwrap();
        assert!(!are_isomorphic(&k33, &prism(3), 100).unwrap());
    }

    #[test]
    fn size_limit() {
        assert_eq!(are_isomorphic(&cycle(10), &cycle(10), 5), Err(Error::SizeLimit(10, 5)));
    }

    #[test]
    fn disconnected_graphs() {
        let a = LabeledGraph::new(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let b = LabeledGraph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(!are_isomorphic(&a, &b, 100).unwrap());
        assert!(are_isomorphic(&a, &a.permuted(&[5, 4, 3, 2, 1, 0]), 100).unwrap());
    }
}
