//! Cell complexes of (pseudo)line arrangements on the sphere.
//!
//! Every projective (pseudo)line lifts to a closed curve on the sphere and
//! every projective vertex to an antipodal pair of sphere vertices. The
//! complex is stored as a half-edge structure: edge `e` owns half-edges
//! `2e` (along the curve's forward direction) and `2e + 1` (against it).
//! Vertex rotations list outgoing half-edges counterclockwise as seen from
//! outside the sphere, and a face is traced with its interior on the left.

mod crossing;
mod lines;

pub use crossing::{build_from_crossing_structure, CrossingStructure, Port};
pub use lines::{build_from_approx_normals, build_from_lines};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geom::HomCoord;

#[derive(Clone, Debug)]
pub struct Vertex {
    pub antipode: usize,
    /// Outgoing half-edges, counterclockwise from outside.
    pub rotation: Vec<usize>,
    /// Exact position when the complex came from integer lines.
    pub point: Option<HomCoord>,
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub curve: usize,
    pub tail: usize,
    pub head: usize,
    pub antipode: usize,
}

#[derive(Clone, Debug)]
pub struct Face {
    /// Boundary half-edges in traversal order, face on the left.
    pub boundary: Vec<usize>,
    pub antipode: usize,
    /// `sides[c]` is true when the face lies left of curve `c`'s forward direction.
    pub sides: Vec<bool>,
}

#[derive(Clone, Debug)]
pub struct SphereComplex {
    curves: usize,
    vertices: Vec<Vertex>,
    curve_cycles: Vec<Vec<usize>>,
    curve_edges: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    half_edge_face: Vec<usize>,
    normals: Option<Vec<HomCoord>>,
    pencil: bool,
}

/// Unassembled sphere data shared by the geometric and combinatorial builders.
#[derive(Clone, Debug)]
pub(crate) struct RawSphere {
    pub curves: usize,
    pub antipode: Vec<usize>,
    /// Per curve, its vertices in forward order.
    pub cycles: Vec<Vec<usize>>,
    /// Per vertex, its ports counterclockwise from outside.
    pub rotation: Vec<Vec<Port>>,
    pub points: Option<Vec<HomCoord>>,
    pub normals: Option<Vec<HomCoord>>,
}

fn inconsistent(msg: impl Into<String>) -> Error {
    Error::InconsistentStructure(msg.into())
}

impl RawSphere {
    pub(crate) fn assemble(self) -> Result<SphereComplex> {
        let nv = self.antipode.len();
        let n = self.curves;
        if self.rotation.len() != nv || self.cycles.len() != n {
            return Err(inconsistent("vertex or curve count mismatch"));
        }
        for (v, &a) in self.antipode.iter().enumerate() {
            if a >= nv || a == v || self.antipode[a] != v {
                return Err(inconsistent(format!("antipodal map is not a free involution at {v}")));
            }
        }

        // position of each vertex on each curve through it
        let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
        for (c, cyc) in self.cycles.iter().enumerate() {
            if cyc.len() < 2 || cyc.len() % 2 != 0 {
                return Err(inconsistent(format!("curve {c} has {} vertices", cyc.len())));
            }
            for (i, &v) in cyc.iter().enumerate() {
                if v >= nv || pos.insert((c, v), i).is_some() {
                    return Err(inconsistent(format!("curve {c} revisits vertex {v}")));
                }
            }
        }

        let mut edges = Vec::new();
        let mut curve_edges = Vec::with_capacity(n);
        for (c, cyc) in self.cycles.iter().enumerate() {
            let len = cyc.len();
            let mut ids = Vec::with_capacity(len);
            for i in 0..len {
                ids.push(edges.len());
                edges.push(Edge { curve: c, tail: cyc[i], head: cyc[(i + 1) % len], antipode: usize::MAX });
            }
            curve_edges.push(ids);
        }
        for (c, cyc) in self.cycles.iter().enumerate() {
            let len = cyc.len();
            for i in 0..len {
                let j = (i + len / 2) % len;
                if cyc[j] != self.antipode[cyc[i]] {
                    return Err(inconsistent(format!("curve {c} is not antipodally symmetric")));
                }
                edges[curve_edges[c][i]].antipode = curve_edges[c][j];
            }
        }

        let mut vertices = Vec::with_capacity(nv);
        for v in 0..nv {
            let ports = &self.rotation[v];
            let k = ports.len() / 2;
            if ports.len() < 4 || !ports.len().is_multiple_of(2) {
                return Err(inconsistent(format!("vertex {v} has {} ports", ports.len())));
            }
            let mut rot = Vec::with_capacity(ports.len());
            for (idx, p) in ports.iter().enumerate() {
                let &i = pos
                    .get(&(p.curve, v))
                    .ok_or_else(|| inconsistent(format!("vertex {v} lists curve {} not through it", p.curve)))?;
                let h = if p.forward {
                    2 * curve_edges[p.curve][i]
                } else {
                    let len = self.cycles[p.curve].len();
                    2 * curve_edges[p.curve][(i + len - 1) % len] + 1
                };
                // curves cross: the two ends of a curve are opposite in the rotation
                let opp = &ports[(idx + k) % ports.len()];
                if opp.curve != p.curve || opp.forward == p.forward {
                    return Err(inconsistent(format!("curve {} does not cross through vertex {v}", p.curve)));
                }
                rot.push(h);
            }
            let through = self.cycles.iter().enumerate().filter(|(c, _)| pos.contains_key(&(*c, v))).count();
            if through != k {
                return Err(inconsistent(format!("rotation at vertex {v} misses a curve")));
            }
            vertices.push(Vertex {
                antipode: self.antipode[v],
                rotation: rot,
                point: self.points.as_ref().map(|p| p[v].clone()),
            });
        }

        let nh = 2 * edges.len();
        let origin = |h: usize| if h.is_multiple_of(2) { edges[h / 2].tail } else { edges[h / 2].head };
        let mut rot_index = vec![usize::MAX; nh];
        for vert in &vertices {
            for (i, &h) in vert.rotation.iter().enumerate() {
                rot_index[h] = i;
            }
        }
        if rot_index.contains(&usize::MAX) {
            return Err(inconsistent("half-edge missing from rotations"));
        }
        let next = |h: usize| {
            let t = h ^ 1;
            let rot = &vertices[origin(t)].rotation;
            rot[(rot_index[t] + rot.len() - 1) % rot.len()]
        };
        let mut half_edge_face = vec![usize::MAX; nh];
        let mut boundaries: Vec<Vec<usize>> = Vec::new();
        for start in 0..nh {
            if half_edge_face[start] != usize::MAX {
                continue;
            }
            let f = boundaries.len();
            let mut walk = Vec::new();
            let mut h = start;
            loop {
                half_edge_face[h] = f;
                walk.push(h);
                h = next(h);
                if h == start {
                    break;
                }
                if half_edge_face[h] != usize::MAX {
                    return Err(inconsistent("face walk does not close"));
                }
            }
            boundaries.push(walk);
        }

        let (v, e, f) = (nv as i64, edges.len() as i64, boundaries.len() as i64);
        if v - e + f != 2 {
            return Err(inconsistent(format!("Euler characteristic {} (V={v}, E={e}, F={f})", v - e + f)));
        }

        // antipodal faces: the map reverses orientation, so the face left of h
        // goes to the face right of the image of h
        let mut face_antipode = vec![usize::MAX; boundaries.len()];
        for (fid, walk) in boundaries.iter().enumerate() {
            for &h in walk {
                let image = 2 * edges[h / 2].antipode + (h % 2);
                let g = half_edge_face[image ^ 1];
                if face_antipode[fid] == usize::MAX {
                    face_antipode[fid] = g;
                } else if face_antipode[fid] != g {
                    return Err(inconsistent("antipodal map does not preserve faces"));
                }
            }
        }
        for (fid, &g) in face_antipode.iter().enumerate() {
            if g == fid || face_antipode[g] != fid {
                return Err(inconsistent("antipodal map on faces is not a free involution"));
            }
        }

        // every pair of curves meets in exactly one antipodal pair
        let mut meets = vec![vec![0usize; n]; n];
        let mut through: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for (c, cyc) in self.cycles.iter().enumerate() {
            for &v in cyc {
                through[v].push(c);
            }
        }
        for list in &through {
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    meets[a][b] += 1;
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if meets[a][b] != 2 {
                    return Err(Error::PairwiseCrossingViolation { a, b, count: meets[a][b] / 2 });
                }
            }
        }
        let pencil = through.iter().any(|l| l.len() == n);

        let sides = curve_sides(n, &edges, &boundaries, &half_edge_face)?;
        let faces = boundaries
            .into_iter()
            .enumerate()
            .map(|(fid, boundary)| Face { boundary, antipode: face_antipode[fid], sides: sides[fid].clone() })
            .collect();

        Ok(SphereComplex {
            curves: n,
            vertices,
            curve_cycles: self.cycles,
            curve_edges,
            edges,
            faces,
            half_edge_face,
            normals: self.normals,
            pencil,
        })
    }
}

/// Side of every face with respect to every curve, found by flooding the
/// faces across edges of all other curves.
fn curve_sides(
    n: usize,
    edges: &[Edge],
    boundaries: &[Vec<usize>],
    half_edge_face: &[usize],
) -> Result<Vec<Vec<bool>>> {
    let nf = boundaries.len();
    let mut sides = vec![vec![false; n]; nf];
    for c in 0..n {
        let mut comp = vec![usize::MAX; nf];
        let mut ncomp = 0;
        for s in 0..nf {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = ncomp;
            let mut stack = vec![s];
            while let Some(f) = stack.pop() {
                for &h in &boundaries[f] {
                    if edges[h / 2].curve == c {
                        continue;
                    }
                    let g = half_edge_face[h ^ 1];
                    if comp[g] == usize::MAX {
                        comp[g] = ncomp;
                        stack.push(g);
                    }
                }
            }
            ncomp += 1;
        }
        if ncomp != 2 {
            return Err(inconsistent(format!("curve {c} splits the sphere into {ncomp} regions")));
        }
        let left = edges
            .iter()
            .enumerate()
            .find(|(_, e)| e.curve == c)
            .map(|(i, _)| comp[half_edge_face[2 * i]])
            .expect("curve has edges");
        for (i, e) in edges.iter().enumerate() {
            if e.curve == c && (comp[half_edge_face[2 * i]] != left || comp[half_edge_face[2 * i + 1]] == left) {
                return Err(inconsistent(format!("curve {c} does not separate its two sides")));
            }
        }
        for f in 0..nf {
            sides[f][c] = comp[f] == left;
        }
    }
    Ok(sides)
}

impl SphereComplex {
    pub fn curve_count(&self) -> usize {
        self.curves
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn curve_cycle(&self, c: usize) -> &[usize] {
        &self.curve_cycles[c]
    }

    pub fn curve_edges(&self, c: usize) -> &[usize] {
        &self.curve_edges[c]
    }

    /// Normals of the input lines, when the complex was built from coordinates.
    pub fn normals(&self) -> Option<&[HomCoord]> {
        self.normals.as_deref()
    }

    /// All curves pass through one antipodal vertex pair.
    pub fn is_pencil(&self) -> bool {
        self.pencil
    }

    pub fn half_edge_origin(&self, h: usize) -> usize {
        let e = &self.edges[h / 2];
        if h.is_multiple_of(2) {
            e.tail
        } else {
            e.head
        }
    }

    pub fn half_edge_face(&self, h: usize) -> usize {
        self.half_edge_face[h]
    }

    pub fn curves_through(&self, v: usize) -> Vec<usize> {
        let mut cs: Vec<usize> = self.vertices[v].rotation.iter().map(|&h| self.edges[h / 2].curve).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    /// Vertices of face `f` in boundary order.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces[f].boundary.iter().map(|&h| self.half_edge_origin(h)).collect()
    }

    /// Every face is bounded by exactly three edges.
    pub fn is_simplicial(&self) -> bool {
        self.faces.iter().all(|f| f.boundary.len() == 3)
    }

    /// Number of triangles of the projective arrangement (half the sphere faces).
    pub fn triangle_count_projective(&self) -> Result<usize> {
        if !self.is_simplicial() {
            return Err(Error::NotSimplicial);
        }
        Ok(self.faces.len() / 2)
    }

    /// Face label as a bit string, one bit per curve.
    pub fn face_label(&self, f: usize) -> String {
        self.faces[f].sides.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}
