//! Undirected graphs with optional binary vertex labels and edge classes.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Fixed-length bit vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    bits: Vec<bool>,
}

impl Label {
    pub fn zeros(len: usize) -> Self {
        Label { bits: vec![false; len] }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Label { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, v: bool) {
        self.bits[i] = v;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn hamming(&self, other: &Label) -> usize {
        self.bits.iter().zip(&other.bits).filter(|(a, b)| a != b).count()
    }

    pub fn complement(&self) -> Label {
        Label { bits: self.bits.iter().map(|b| !b).collect() }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Label({self})")
    }
}

impl std::str::FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse { line: 0, msg: format!("bad label character {c:?}") }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Label::from_bits)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    pub labels: Option<Vec<Label>>,
    pub classes: Option<Vec<usize>>,
}

impl LabeledGraph {
    /// Simple graph on `n` vertices. Loops and repeated edges are rejected.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            if u >= n || v >= n || u == v {
                return Err(Error::BadParameter(format!("invalid edge ({u}, {v})")));
            }
            if adj[u].contains(&v) {
                return Err(Error::BadParameter(format!("repeated edge ({u}, {v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(LabeledGraph { n, edges, adj, labels: None, classes: None })
    }

    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != self.n || labels.windows(2).any(|w| w[0].len() != w[1].len()) {
            return Err(Error::LabelLengthMismatch);
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_classes(mut self, classes: Vec<usize>) -> Result<Self> {
        if classes.len() != self.edges.len() {
            return Err(Error::BadParameter("one class per edge expected".into()));
        }
        self.classes = Some(classes);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn bfs(&self, s: usize) -> Vec<u32> {
        let mut d = vec![u32::MAX; self.n];
        let mut q = VecDeque::new();
        d[s] = 0;
        q.push_back(s);
        while let Some(u) = q.pop_front() {
            for &w in &self.adj[u] {
                if d[w] == u32::MAX {
                    d[w] = d[u] + 1;
                    q.push_back(w);
                }
            }
        }
        d
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(|&d| d != u32::MAX)
    }

    /// All-pairs shortest-path lengths by breadth-first search.
    pub fn distances(&self) -> Result<Distances> {
        let mut data = Vec::with_capacity(self.n * self.n);
        for s in 0..self.n {
            let row = self.bfs(s);
            if row.contains(&u32::MAX) {
                return Err(Error::Disconnected);
            }
            data.extend(row);
        }
        Ok(Distances { n: self.n, data })
    }

    /// Graph on the same vertices with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> LabeledGraph {
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let mut g = LabeledGraph::new(self.n, edges).expect("permutation keeps the graph simple");
        if let Some(ls) = &self.labels {
            let mut out = vec![Label::zeros(0); self.n];
            for (v, l) in ls.iter().enumerate() {
                out[perm[v]] = l.clone();
            }
            g.labels = Some(out);
        }
        g.classes = self.classes.clone();
        g
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            labels: self.labels.as_ref().map(|ls| ls.iter().map(|l| l.to_string()).collect()),
            classes: self.classes.clone(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Self> {
        let mut g = LabeledGraph::new(j.n, j.edges.iter().map(|e| (e[0], e[1])).collect())?;
        if let Some(ls) = &j.labels {
            let ls = ls.iter().map(|s| s.parse()).collect::<Result<Vec<Label>>>()?;
            g = g.with_labels(ls)?;
        }
        if let Some(cs) = &j.classes {
            g = g.with_classes(cs.clone())?;
        }
        Ok(g)
    }
}

/// Wire form of a graph; field order is part of the format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct Distances {
    n: usize,
    data: Vec<u32>,
}

impl Distances {
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

/// Small named graphs used across tests and checks.
pub mod named {
    use super::*;

    pub fn path(n: usize) -> LabeledGraph {
        LabeledGraph::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
    }

    pub fn cycle(n: usize) -> LabeledGraph {
        LabeledGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    pub fn complete(n: usize) -> LabeledGraph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        LabeledGraph::new(n, e).unwrap()
    }

    /// Prism over the `k`-cycle: outer cycle `0..k`, inner cycle `k..2k`.
    pub fn prism(k: usize) -> LabeledGraph {
        let mut e = Vec::new();
        for i in 0..k {
            e.push((i, (i + 1) % k));
            e.push((k + i, k + (i + 1) % k));
            e.push((i, k + i));
        }
        LabeledGraph::new(2 * k, e).unwrap()
    }

    /// The `d`-dimensional hypercube with its standard labels.
    pub fn hypercube(d: usize) -> LabeledGraph {
        let n = 1usize << d;
        let mut e = Vec::new();
        for v in 0..n {
            for b in 0..d {
                let w = v ^ (1 << b);
                if v < w {
                    e.push((v, w));
                }
            }
        }
        let labels = (0..n).map(|v| Label::from_bits((0..d).map(|b| v >> b & 1 == 1).collect())).collect();
        LabeledGraph::new(n, e).unwrap().with_labels(labels).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn path_distance() {
        assert_eq!(path(3).distances().unwrap().get(0, 2), 2);
    }

    #[test]
    fn hexagon_antipodes() {
        let d = cycle(6).distances().unwrap();
        for v in 0..6 {
            assert_eq!(d.get(v, (v + 3) % 6), 3);
        }
    }

    #[test]
    fn cube_eccentricity() {
        let d = hypercube(3).distances().unwrap();
        for v in 0..8 {
            assert_eq!(d.row(v).iter().max(), Some(&3));
        }
    }

    #[test]
    fn disconnected_detected() {
        let g = LabeledGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.distances().unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn json_roundtrip_and_field_order() {
        let g = hypercube(2).with_classes(vec![0, 1, 1, 0]).unwrap();
        let s = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[0,1],[0,2],[1,3],[2,3]],"labels":["00","10","01","11"],"classes":[0,1,1,0]}"#);
        let back = LabeledGraph::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert!(LabeledGraph::new(2, vec![(0, 0)]).is_err());
        assert!(LabeledGraph::new(2, vec![(0, 1), (1, 0)]).is_err());
    }
}
