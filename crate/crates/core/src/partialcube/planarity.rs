//! Planarity by incremental path embedding (Demoucron, Malgrange and
//! Pertuiset), run on each biconnected component.

use std::collections::HashSet;

use crate::graph::LabeledGraph;

pub fn is_planar(g: &LabeledGraph) -> bool {
    let n = g.vertex_count();
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    biconnected_components(g).into_iter().all(|block| block_is_planar(g, &block))
}

/// Edge sets of the biconnected components (iterative Tarjan).
fn biconnected_components(g: &LabeledGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // frames: (vertex, parent edge, next adjacency index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, pe, ref mut idx)) = stack.last_mut() {
            if *idx < adj[v].len() {
                let (w, e) = adj[v][*idx];
                *idx += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        out.push(comp);
                    }
                }
            }
        }
    }
    out
}

fn block_is_planar(g: &LabeledGraph, block: &[usize]) -> bool {
    if block.len() < 9 {
        // fewer than nine edges cannot contain a Kuratowski subdivision
        return true;
    }
    let mut verts: Vec<usize> = block.iter().flat_map(|&e| [g.edges()[e].0, g.edges()[e].1]).collect();
    verts.sort_unstable();
    verts.dedup();
    let local = |v: usize| verts.binary_search(&v).unwrap();
    let n = verts.len();
    if block.len() > 3 * n - 6 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &e in block {
        let (u, v) = g.edges()[e];
        let (a, b) = (local(u), local(v));
        adj[a].push(b);
        adj[b].push(a);
    }
    Dmp::new(adj).run()
}

struct Dmp {
    adj: Vec<Vec<usize>>,
    embedded_vertex: Vec<bool>,
    embedded_edge: HashSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

struct Fragment {
    /// Interior vertices; empty for a chord.
    interior: Vec<usize>,
    attachments: Vec<usize>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl Dmp {
    fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        Dmp { adj, embedded_vertex: vec![false; n], embedded_edge: HashSet::new(), faces: Vec::new() }
    }

    fn initial_cycle(&self) -> Vec<usize> {
        // shortest path from v back to u avoiding the edge uv
        let n = self.adj.len();
        let (u, v) = (0, self.adj[0][0]);
        let mut prev = vec![usize::MAX; n];
        prev[v] = v;
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if prev[y] == usize::MAX && !(x == v && y == u) {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        assert!(prev[u] != usize::MAX, "blocks are biconnected");
        let mut cycle = vec![u];
        let mut x = u;
        while x != v {
            x = prev[x];
            cycle.push(x);
        }
        cycle
    }

    fn run(mut self) -> bool {
        let cycle = self.initial_cycle();
        for i in 0..cycle.len() {
            self.embedded_vertex[cycle[i]] = true;
            self.embedded_edge.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
        let mut rev = cycle.clone();
        rev.reverse();
        self.faces = vec![cycle, rev];
        loop {
            let fragments = self.fragments();
            if fragments.is_empty() {
                return true;
            }
            let n = self.adj.len();
            let mut faces_of: Vec<Vec<usize>> = vec![Vec::new(); n];
            for (fi, f) in self.faces.iter().enumerate() {
                for &v in f {
                    faces_of[v].push(fi);
                }
            }
            let mut best: Option<(usize, usize, usize)> = None; // (count, fragment, face)
            for (k, frag) in fragments.iter().enumerate() {
                let admissible: Vec<usize> = faces_of[frag.attachments[0]]
                    .iter()
                    .copied()
                    .filter(|&fi| frag.attachments.iter().all(|a| faces_of[*a].contains(&fi)))
                    .collect();
                if admissible.is_empty() {
                    return false;
                }
                if best.is_none_or(|(c, _, _)| admissible.len() < c) {
                    best = Some((admissible.len(), k, admissible[0]));
                }
                if admissible.len() == 1 {
                    break;
                }
            }
            let (_, k, fi) = best.expect("fragments exist");
            let path = self.fragment_path(&fragments[k]);
            self.embed(fi, &path);
        }
    }

    fn fragments(&self) -> Vec<Fragment> {
        let n = self.adj.len();
        let mut out = Vec::new();
        for u in 0..n {
            if !self.embedded_vertex[u] {
                continue;
            }
            for &v in &self.adj[u] {
                if u < v && self.embedded_vertex[v] && !self.embedded_edge.contains(&key(u, v)) {
                    out.push(Fragment { interior: Vec::new(), attachments: vec![u, v] });
                }
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if self.embedded_vertex[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut interior = vec![s];
            let mut attachments = Vec::new();
            let mut i = 0;
            while i < interior.len() {
                let x = interior[i];
                for &y in &self.adj[x] {
                    if self.embedded_vertex[y] {
                        if !attachments.contains(&y) {
                            attachments.push(y);
                        }
                    } else if !seen[y] {
                        seen[y] = true;
                        interior.push(y);
                    }
                }
                i += 1;
            }
            out.push(Fragment { interior, attachments });
        }
        out
    }

    /// A path through the fragment joining two distinct attachments.
    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        if frag.interior.is_empty() {
            return frag.attachments.clone();
        }
        let start = frag.attachments[0];
        let n = self.adj.len();
        let inside: HashSet<usize> = frag.interior.iter().copied().collect();
        let mut prev = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for &w in &self.adj[start] {
            if inside.contains(&w) && prev[w] == usize::MAX {
                prev[w] = start;
                queue.push_back(w);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if inside.contains(&y) {
                    if prev[y] == usize::MAX {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                } else if self.embedded_vertex[y] && y != start {
                    let mut path = vec![y, x];
                    let mut z = x;
                    while prev[z] != start {
                        z = prev[z];
                        path.push(z);
                    }
                    path.push(start);
                    path.reverse();
                    return path;
                }
            }
        }
        unreachable!("fragments of a biconnected graph have two attachments")
    }

    fn embed(&mut self, fi: usize, path: &[usize]) {
        let face = self.faces[fi].clone();
        let a = path[0];
        let b = *path.last().unwrap();
        let ia = face.iter().position(|&v| v == a).unwrap();
        let ib = face.iter().position(|&v| v == b).unwrap();
        let len = face.len();
        let walk = |from: usize, to: usize| {
            let mut w = vec![face[from]];
            let mut i = from;
            while i != to {
                i = (i + 1) % len;
                w.push(face[i]);
            }
            w
        };
        let inner = &path[1..path.len() - 1];
        let mut f1 = walk(ia, ib);
        f1.extend(inner.iter().rev());
        let mut f2 = walk(ib, ia);
        f2.extend(inner.iter());
        self.faces[fi] = f1;
        self.faces.push(f2);
        for &v in path {
            self.embedded_vertex[v] = true;
        }
        for w in path.windows(2) {
            self.embedded_edge.insert(key(w[0], w[1]));
        }
    }
}
