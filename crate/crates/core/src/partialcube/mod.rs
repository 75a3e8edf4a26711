//! Partial-cube recognition through the Djoković relation, plus the
//! structural checks used on dual graphs (cubicity, planarity, isomorphism).
//!
//! Two edges `uv` and `xy` are Djoković-related when
//! `d(u,x) + d(v,y) != d(u,y) + d(v,x)`. A connected graph is a partial cube
//! exactly when it is bipartite and this relation is transitive; the classes
//! then give one coordinate each, and every labeling produced here is
//! re-verified against all pairwise distances before it is returned.

mod isomorphism;
mod planarity;

pub use isomorphism::{are_isomorphic, DEFAULT_SIZE_LIMIT};
pub use planarity::is_planar;

use crate::error::{Error, Result};
use crate::graph::{Distances, Label, LabeledGraph};

/// Why a graph failed recognition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `vertex` is equidistant from both ends of `edge`, so the graph has an odd cycle.
    OddCycle { edge: usize, vertex: usize },
    /// `a` is related to both `b` and `c`, but `b` and `c` are unrelated.
    NotTransitive { a: usize, b: usize, c: usize },
    /// Removing the class does not leave exactly two components.
    CutNotSeparating { class: usize, components: usize },
    /// Graph distance and label distance disagree.
    DistanceMismatch { u: usize, v: usize, graph: u32, hamming: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DjokovicClasses {
    /// Class id of every edge, numbered by first appearance in edge order.
    pub edge_class: Vec<usize>,
    /// The first edge of each class.
    pub representatives: Vec<usize>,
}

impl DjokovicClasses {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    PartialCube { labels: Vec<Label>, classes: DjokovicClasses },
    NotPartialCube(Witness),
}

impl Recognition {
    pub fn is_partial_cube(&self) -> bool {
        matches!(self, Recognition::PartialCube { .. })
    }

    pub fn labels(&self) -> Option<&[Label]> {
        match self {
            Recognition::PartialCube { labels, .. } => Some(labels),
            _ => None,
        }
    }

    pub fn class_count(&self) -> Option<usize> {
        match self {
            Recognition::PartialCube { classes, .. } => Some(classes.count()),
            _ => None,
        }
    }
}

fn related(d: &Distances, (u, v): (usize, usize), (x, y): (usize, usize)) -> bool {
    d.get(u, x) + d.get(v, y) != d.get(u, y) + d.get(v, x)
}

/// Partition of the edges into Djoković classes, or a witness that the
/// relation is not an equivalence relation.
pub fn djokovic_classes(g: &LabeledGraph) -> Result<std::result::Result<DjokovicClasses, Witness>> {
    let d = g.distances()?;
    Ok(classes_with(g, &d))
}

fn classes_with(g: &LabeledGraph, d: &Distances) -> std::result::Result<DjokovicClasses, Witness> {
    let edges = g.edges();
    for (i, &(u, v)) in edges.iter().enumerate() {
        for x in 0..g.vertex_count() {
            if d.get(x, u) == d.get(x, v) {
                return Err(Witness::OddCycle { edge: i, vertex: x });
            }
        }
    }
    let m = edges.len();
    let mut edge_class = vec![usize::MAX; m];
    let mut representatives = Vec::new();
    for a in 0..m {
        if edge_class[a] != usize::MAX {
            continue;
        }
        let class = representatives.len();
        representatives.push(a);
        let members: Vec<usize> = (0..m).filter(|&f| related(d, edges[a], edges[f])).collect();
        for &b in &members {
            if edge_class[b] != usize::MAX {
                // b was claimed by an earlier class c, which is unrelated to a
                let c = representatives[edge_class[b]];
                return Err(Witness::NotTransitive { a: b, b: a, c });
            }
            edge_class[b] = class;
        }
        // every member must relate to exactly the same edges
        for &b in &members {
            for f in 0..m {
                let rb = related(d, edges[b], edges[f]);
                let ra = members.binary_search(&f).is_ok();
                match (ra, rb) {
                    (false, true) => return Err(Witness::NotTransitive { a: b, b: a, c: f }),
                    (true, false) => return Err(Witness::NotTransitive { a, b, c: f }),
                    _ => {}
                }
            }
        }
    }
    Ok(DjokovicClasses { edge_class, representatives })
}

/// Recognizes partial cubes and, when successful, returns a verified
/// hypercube labeling: one bit per class in class order, vertex 0 all zeros.
pub fn is_partial_cube(g: &LabeledGraph) -> Result<Recognition> {
    let d = g.distances()?;
    let classes = match classes_with(g, &d) {
        Ok(c) => c,
        Err(w) => return Ok(Recognition::NotPartialCube(w)),
    };
    let n = g.vertex_count();
    let k = classes.count();
    let mut labels = vec![Label::zeros(k); n];
    for (c, &rep) in classes.representatives.iter().enumerate() {
        let (u, v) = g.edges()[rep];
        // the side of vertex 0 gets zeros
        let zero_near_u = d.get(0, u) < d.get(0, v);
        for (x, label) in labels.iter_mut().enumerate() {
            let near_u = d.get(x, u) < d.get(x, v);
            label.set(c, near_u != zero_near_u);
        }
        let comps = components_without(g, &classes.edge_class, c);
        if comps != 2 {
            return Ok(Recognition::NotPartialCube(Witness::CutNotSeparating { class: c, components: comps }));
        }
    }
    if let Some(w) = mismatch(&d, &labels) {
        return Ok(Recognition::NotPartialCube(w));
    }
    Ok(Recognition::PartialCube { labels, classes })
}

fn components_without(g: &LabeledGraph, edge_class: &[usize], class: usize) -> usize {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if edge_class[i] != class {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut seen = vec![false; n];
    let mut comps = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        comps += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    comps
}

fn mismatch(d: &Distances, labels: &[Label]) -> Option<Witness> {
    let n = labels.len();
    for u in 0..n {
        for v in u + 1..n {
            let h = labels[u].hamming(&labels[v]);
            if d.get(u, v) as usize != h {
                return Some(Witness::DistanceMismatch { u, v, graph: d.get(u, v), hamming: h });
            }
        }
    }
    None
}

/// Checks graph distance against Hamming distance for every vertex pair.
pub fn verify_labeling(g: &LabeledGraph, labels: &[Label]) -> Result<bool> {
    if labels.len() != g.vertex_count() || labels.windows(2).any(|w| w[0].len() != w[1].len()) {
        return Err(Error::LabelLengthMismatch);
    }
    let d = g.distances()?;
    Ok(mismatch(&d, labels).is_none())
}

pub fn is_cubic(g: &LabeledGraph) -> bool {
    (0..g.vertex_count()).all(|v| g.degree(v) == 3)
}
