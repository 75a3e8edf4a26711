//! Dual graphs of arrangements: one vertex per cell, one edge per pair of
//! cells sharing a side, labeled by the side of each (pseudo)line.

use std::collections::HashMap;

use crate::complex::{build_from_lines, SphereComplex};
use crate::error::{Error, Result};
use crate::geom::HomCoord;
use crate::graph::{Label, LabeledGraph};

/// Dual graph of the faces selected by `keep`, with one label bit and one
/// edge class per curve in `bits`. Edges crossing curves outside `bits`
/// are dropped. Vertices are numbered in label order.
fn dual_of(c: &SphereComplex, keep: impl Fn(usize) -> bool, bits: &[usize]) -> (LabeledGraph, Vec<usize>) {
    let mut faces: Vec<usize> = (0..c.face_count()).filter(|&f| keep(f)).collect();
    let label = |f: usize| Label::from_bits(bits.iter().map(|&b| c.faces()[f].sides[b]).collect());
    faces.sort_by_cached_key(|&f| (label(f), f));
    let index: HashMap<usize, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let class_of: HashMap<usize, usize> = bits.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let mut edges = Vec::new();
    for (e, edge) in c.edges().iter().enumerate() {
        let Some(&class) = class_of.get(&edge.curve) else { continue };
        let (Some(&u), Some(&v)) = (index.get(&c.half_edge_face(2 * e)), index.get(&c.half_edge_face(2 * e + 1)))
        else {
            continue;
        };
        edges.push(((u.min(v), u.max(v)), class));
    }
    edges.sort_unstable();
    let labels = faces.iter().map(|&f| label(f)).collect();
    let g = LabeledGraph::new(faces.len(), edges.iter().map(|e| e.0).collect())
        .expect("two cells share at most one side")
        .with_labels(labels)
        .expect("labels have one bit per curve")
        .with_classes(edges.iter().map(|e| e.1).collect())
        .expect("one class per edge");
    (g, faces)
}

/// The doubled dual `C_A`: one vertex per face of the sphere complex.
///
/// Bit `i` of a label is set when the face lies on the left of curve `i`
/// (for line input, on the positive side of the line's normal). Edge class
/// `i` holds the edges crossing curve `i`.
pub fn spherical_dual(c: &SphereComplex) -> LabeledGraph {
    let bits: Vec<usize> = (0..c.curve_count()).collect();
    dual_of(c, |_| true, &bits).0
}

/// Dual graph `G_A` of an affine arrangement.
///
/// Line `(a, b, c)` is `ax + by + c = 0`. The arrangement is lifted to the
/// sphere together with the line at infinity and only the cells with
/// `z > 0` are kept.
pub fn affine_dual(lines: &[HomCoord]) -> Result<LabeledGraph> {
    let c = affine_complex(lines)?;
    let inf = lines.len();
    let bits: Vec<usize> = (0..inf).collect();
    Ok(dual_of(&c, |f| c.faces()[f].sides[inf], &bits).0)
}

/// Sphere complex of an affine arrangement with the line at infinity
/// appended as the last curve.
pub(crate) fn affine_complex(lines: &[HomCoord]) -> Result<SphereComplex> {
    if lines.is_empty() {
        return Err(Error::BadParameter("at least one line is required".into()));
    }
    let inf = HomCoord::from_i64(0, 0, 1)?;
    if let Some(i) = lines.iter().position(|l| l.projectively_equal(&inf)) {
        return Err(Error::BadParameter(format!("line {i} is the line at infinity")));
    }
    let mut all = lines.to_vec();
    all.push(inf);
    build_from_lines(&all)
}

/// A combinatorial embedding of `C_A` on the sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualEmbedding {
    /// Neighbors of each vertex in cyclic order.
    pub rotation: Vec<Vec<usize>>,
}

impl DualEmbedding {
    /// Face boundaries as vertex cycles.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
        for (u, rot) in self.rotation.iter().enumerate() {
            for (i, &v) in rot.iter().enumerate() {
                pos.insert((u, v), i);
            }
        }
        let mut used: HashMap<(usize, usize), bool> = HashMap::new();
        let mut faces = Vec::new();
        for (u, rot) in self.rotation.iter().enumerate() {
            for &v in rot {
                if used.contains_key(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                while used.insert((a, b), true).is_none() {
                    face.push(a);
                    let rb = &self.rotation[b];
                    let i = pos[&(b, a)];
                    let next = rb[(i + rb.len() - 1) % rb.len()];
                    (a, b) = (b, next);
                }
                faces.push(face);
            }
        }
        faces
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Euler characteristic of the embedding surface; 2 certifies planarity.
    pub fn euler_characteristic(&self) -> i64 {
        self.rotation.len() as i64 - self.edge_count() as i64 + self.faces().len() as i64
    }
}

/// Rotation system of [`spherical_dual`], numbered the same way. Its faces
/// correspond to the vertices of the complex.
pub fn dual_embedding(c: &SphereComplex) -> DualEmbedding {
    let bits: Vec<usize> = (0..c.curve_count()).collect();
    let (_, faces) = dual_of(c, |_| true, &bits);
    let mut index = vec![0; faces.len()];
    for (i, &f) in faces.iter().enumerate() {
        index[f] = i;
    }
    let rotation = faces
        .iter()
        .map(|&f| c.faces()[f].boundary.iter().map(|&h| index[c.half_edge_face(h ^ 1)]).collect())
        .collect();
    DualEmbedding { rotation }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_from_lines;
    use crate::graph::named::*;
    use crate::partialcube::{are_isomorphic, is_cubic, is_partial_cube, verify_labeling};

    fn hc(x: i64, y: i64, z: i64) -> HomCoord {
        HomCoord::from_i64(x, y, z).unwrap()
    }

    #[test]
    fn octahedron_dual_is_cube() {
        let c = build_from_lines(&[hc(1, 0, 0), hc(0, 1, 0), hc(0, 0, 1)]).unwrap();
        let g = spherical_dual(&c);
        assert!(are_isomorphic(&g, &hypercube(3), 100).unwrap());
        assert!(verify_labeling(&g, g.labels.as_ref().unwrap()).unwrap());
        let e = dual_embedding(&c);
        let faces = e.faces();
        assert_eq!(faces.len(), 6);
        assert!(faces.iter().all(|f| f.len() == 4));
        assert_eq!(e.euler_characteristic(), 2);
    }

    #[test]
    fn labels_are_sorted_and_antipodes_complementary() {
        let c = build_from_lines(&[hc(1, 0, 0), hc(0, 1, 0), hc(0, 0, 1), hc(1, 1, 1)]).unwrap();
        let g = spherical_dual(&c);
        let labels = g.labels.as_ref().unwrap();
        assert!(labels.windows(2).all(|w| w[0] < w[1]));
        for l in labels {
            assert!(labels.contains(&l.complement()));
        }
        assert!(is_partial_cube(&g).unwrap().is_partial_cube());
    }

    #[test]
    fn classes_match_label_flips() {
        let c = build_from_lines(&[hc(1, 0, 0), hc(0, 1, 0), hc(1, 1, 0), hc(0, 0, 1)]).unwrap();
        let g = spherical_dual(&c);
        let labels = g.labels.as_ref().unwrap();
        for (&(u, v), &k) in g.edges().iter().zip(g.classes.as_ref().unwrap()) {
            let diff: Vec<usize> = (0..4).filter(|&i| labels[u].get(i) != labels[v].get(i)).collect();
            assert_eq!(diff, vec![k]);
        }
    }

    #[test]
    fn affine_small_cases() {
        let one = affine_dual(&[hc(1, 0, 0)]).unwrap();
        assert_eq!((one.vertex_count(), one.edge_count()), (2, 1));
        let labels: Vec<String> = one.labels.unwrap().iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["0", "1"]);

        let two = affine_dual(&[hc(1, 0, 0), hc(0, 1, 0)]).unwrap();
        assert!(are_isomorphic(&two, &cycle(4), 10).unwrap());

        let three = affine_dual(&[hc(1, 0, 0), hc(0, 1, 0), hc(1, 1, -1)]).unwrap();
        assert_eq!((three.vertex_count(), three.edge_count()), (7, 9));
        assert!(is_partial_cube(&three).unwrap().is_partial_cube());
    }

    #[test]
    fn affine_parallel_lines() {
        // three parallel lines cut the plane into four strips
        let g = affine_dual(&[hc(1, 0, 0), hc(1, 0, -1), hc(1, 0, -2)]).unwrap();
        assert!(are_isomorphic(&g, &path(4), 10).unwrap());
    }

    #[test]
    fn affine_errors() {
        assert_eq!(affine_dual(&[hc(1, 0, 0), hc(2, 0, 0)]).unwrap_err(), Error::DuplicateLine(0, 1));
        assert!(affine_dual(&[hc(0, 0, 3)]).is_err());
        assert!(affine_dual(&[]).is_err());
    }

    #[test]
    fn pencil_embedding_is_an_even_cycle() {
        let c = build_from_lines(&[hc(1, 0, 0), hc(0, 1, 0), hc(1, 1, 0), hc(1, -1, 0)]).unwrap();
        let g = spherical_dual(&c);
        assert!(are_isomorphic(&g, &cycle(8), 10).unwrap());
        let e = dual_embedding(&c);
        assert_eq!(e.euler_characteristic(), 2);
        assert_eq!(e.faces().len(), 2);
    }

    #[test]
    fn embedding_faces_match_complex_vertices() {
        let c = build_from_lines(&[hc(1, 0, 0), hc(0, 1, 0), hc(1, 1, 0), hc(0, 0, 1), hc(1, 0, -1)]).unwrap();
        let e = dual_embedding(&c);
        let mut sizes: Vec<usize> = e.faces().iter().map(Vec::len).collect();
        let mut expected: Vec<usize> = (0..c.vertex_count()).map(|v| 2 * c.curves_through(v).len()).collect();
        sizes.sort_unstable();
        expected.sort_unstable();
        assert_eq!(sizes, expected);
        assert!(is_cubic(&spherical_dual(&c)) == c.is_simplicial());
    }
}
