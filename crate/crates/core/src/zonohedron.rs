//! The zonohedron of a line arrangement: the Minkowski sum of the segments
//! `[-g_i, g_i]` over the primitive normals `g_i` of the lines.
//!
//! Its skeleton is built facet by facet, independently of the sphere
//! complex: every plane spanned by two generators carries two opposite
//! facets, each a zonogon on the generators lying in that plane, offset by
//! the signed sum of all other generators.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{cross, HomCoord};
use crate::graph::{Label, LabeledGraph};

type P3 = [BigInt; 3];

#[derive(Clone, Debug)]
pub struct Zonohedron {
    pub points: Vec<P3>,
    /// Vertex labels are the sign vectors (bit set for `+g_i`), edges join
    /// points differing in one generator.
    pub graph: LabeledGraph,
    /// Facets as vertex cycles, counterclockwise seen from outside.
    pub facets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZonohedronJson {
    pub vertices: Vec<[String; 3]>,
    pub edges: Vec<[usize; 2]>,
    pub facets: Vec<Vec<usize>>,
}

fn coords(h: &HomCoord) -> P3 {
    [h.x().clone(), h.y().clone(), h.z().clone()]
}

fn dot(a: &P3, b: &P3) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn cross3(a: &P3, b: &P3) -> P3 {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

fn add(a: &P3, b: &P3, k: i64) -> P3 {
    [&a[0] + &b[0] * k, &a[1] + &b[1] * k, &a[2] + &b[2] * k]
}

/// Skeleton of the zonohedron of `lines`, given as projective normals.
///
/// Pencils are rejected: all generators are then coplanar and the sum is a
/// flat zonogon.
pub fn zonohedron_skeleton(lines: &[HomCoord]) -> Result<Zonohedron> {
    let n = lines.len();
    if n < 3 {
        return Err(Error::DegenerateInput("at least three lines are required".into()));
    }
    for i in 0..n {
        for j in i + 1..n {
            if lines[i].projectively_equal(&lines[j]) {
                return Err(Error::DuplicateLine(i, j));
            }
        }
    }
    let gens: Vec<P3> = lines.iter().map(coords).collect();
    let spans_space = (0..n).any(|i| (i + 1..n).any(|j| (j + 1..n).any(|k| !dot(&cross3(&gens[i], &gens[j]), &gens[k]).is_zero())));
    if !spans_space {
        return Err(Error::DegenerateInput("all lines pass through one point; the zonotope is flat".into()));
    }

    // one facet pair per distinct plane spanned by two generators
    let mut planes: BTreeMap<HomCoord, ()> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            planes.insert(cross(&lines[i], &lines[j])?.canonical(), ());
        }
    }
    let mut ids: BTreeMap<P3, usize> = BTreeMap::new();
    let mut points: Vec<P3> = Vec::new();
    let mut labels: Vec<Label> = Vec::new();
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for normal in planes.keys() {
        for sign in [1i64, -1] {
            let nv: P3 = coords(normal).map(|c| c * sign);
            let cycle = facet(&gens, &nv);
            let mut idx = Vec::with_capacity(cycle.len());
            for (p, bits) in cycle {
                let next = points.len();
                let id = *ids.entry(p.clone()).or_insert(next);
                if id == next {
                    points.push(p);
                    labels.push(Label::from_bits(bits));
                } else if labels[id].bits() != bits.as_slice() {
                    return Err(Error::InconsistentStructure("zonohedron vertex with two sign vectors".into()));
                }
                idx.push(id);
            }
            facets.push(idx);
        }
    }

    let mut edge_set: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    for f in &facets {
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            edge_set.insert((a.min(b), a.max(b)), ());
        }
    }
    let (v, e, fc) = (points.len() as i64, edge_set.len() as i64, facets.len() as i64);
    if v - e + fc != 2 {
        return Err(Error::InconsistentStructure(format!("zonohedron Euler characteristic {}", v - e + fc)));
    }
    let graph = LabeledGraph::new(points.len(), edge_set.into_keys().collect())?.with_labels(labels)?;
    Ok(Zonohedron { points, graph, facets })
}

/// Vertices of the facet with outer normal `nv`, counterclockwise around
/// `nv`, each with its sign vector.
fn facet(gens: &[P3], nv: &P3) -> Vec<(P3, Vec<bool>)> {
    let mut center: P3 = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
    let mut signs = vec![false; gens.len()];
    let mut inplane: Vec<usize> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let s = dot(nv, g);
        if s.is_zero() {
            inplane.push(i);
        } else {
            signs[i] = s.is_positive();
            center = add(&center, g, if signs[i] { 1 } else { -1 });
        }
    }
    // orient the in-plane generators into one half-plane, then sort by angle
    let turn = |a: &P3, b: &P3| dot(nv, &cross3(a, b));
    let r = &gens[inplane[0]];
    let mut us: Vec<(P3, usize, bool)> = inplane
        .iter()
        .map(|&i| {
            let g = &gens[i];
            if turn(r, g).is_negative() {
                (g.clone().map(|c| -c), i, false)
            } else {
                (g.clone(), i, true)
            }
        })
        .collect();
    us.sort_by(|a, b| turn(&b.0, &a.0).cmp(&BigInt::zero()));
    let mut p = center;
    for (u, i, up) in &us {
        p = add(&p, u, -1);
        signs[*i] = !up;
    }
    let mut out = Vec::with_capacity(2 * us.len());
    for k in [2i64, -2] {
        for (u, i, _) in &us {
            out.push((p.clone(), signs.clone()));
            p = add(&p, u, k);
            signs[*i] = !signs[*i];
        }
    }
    out
}

pub fn emit_off(z: &Zonohedron) -> String {
    let mut out = String::from("OFF\n");
    writeln!(out, "{} {} {}", z.points.len(), z.facets.len(), z.graph.edge_count()).unwrap();
    for p in &z.points {
        writeln!(out, "{} {} {}", p[0], p[1], p[2]).unwrap();
    }
    for f in &z.facets {
        let ids: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{} {}", f.len(), ids.join(" ")).unwrap();
    }
    out
}

impl Zonohedron {
    pub fn to_json(&self) -> ZonohedronJson {
        ZonohedronJson {
            vertices: self.points.iter().map(|p| p.clone().map(|c| format!("{c}/1"))).collect(),
            edges: self.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            facets: self.facets.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_from_lines;
    use crate::duals::spherical_dual;
    use crate::graph::named::hypercube;
    use crate::partialcube::are_isomorphic;

    fn hc(x: i64, y: i64, z: i64) -> HomCoord {
        HomCoord::from_i64(x, y, z).unwrap()
    }

    #[test]
    fn coordinate_planes_give_a_cube() {
        let z = zonohedron_skeleton(&[hc(1, 0, 0), hc(0, 1, 0), hc(0, 0, 1)]).unwrap();
        assert_eq!(z.points.len(), 8);
        assert!(z.points.iter().all(|p| p.iter().all(|c| c.abs() == BigInt::from(1))));
        assert!(are_isomorphic(&z.graph, &hypercube(3), 10).unwrap());
        let off = emit_off(&z);
        assert!(off.starts_with("OFF\n8 6 12\n"));
    }

    #[test]
    fn skeleton_matches_the_dual() {
        let ls = [hc(1, 0, 0), hc(0, 1, 0), hc(0, 0, 1), hc(1, 1, 1), hc(1, 2, 3), hc(1, 1, 0)];
        let z = zonohedron_skeleton(&ls).unwrap();
        let d = spherical_dual(&build_from_lines(&ls).unwrap());
        assert!(are_isomorphic(&z.graph, &d, 200).unwrap());
        // labels agree as sets: sign vectors are the face sides
        let mut a: Vec<String> = z.graph.labels.as_ref().unwrap().iter().map(|l| l.to_string()).collect();
        let mut b: Vec<String> = d.labels.as_ref().unwrap().iter().map(|l| l.to_string()).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn facets_are_outward_and_symmetric() {
        let ls = [hc(1, 0, 0), hc(0, 1, 0), hc(0, 0, 1), hc(1, 1, 1), hc(1, -1, 2)];
        let z = zonohedron_skeleton(&ls).unwrap();
        for f in &z.facets {
            let k = f.len();
            assert_eq!(k % 2, 0);
            let p = |i: usize| &z.points[f[i % k]];
            let mid = add(p(0), p(k / 2), 1);
            for i in 0..k / 2 {
                assert_eq!(add(p(i), p(i + k / 2), 1), mid);
            }
            // the cycle winds counterclockwise about the outward direction mid
            let e1 = add(p(1), p(0), -1);
            let e2 = add(p(2), p(1), -1);
            assert!(dot(&cross3(&e1, &e2), &mid).is_positive());
        }
    }

    #[test]
    fn pencils_and_duplicates_rejected() {
        assert!(matches!(
            zonohedron_skeleton(&[hc(1, 0, 0), hc(0, 1, 0), hc(1, 1, 0)]),
            Err(Error::DegenerateInput(_))
        ));
        assert!(matches!(zonohedron_skeleton(&[hc(1, 0, 0), hc(0, 1, 0)]), Err(Error::DegenerateInput(_))));
        assert_eq!(
            zonohedron_skeleton(&[hc(1, 0, 0), hc(0, 1, 0), hc(0, 0, 1), hc(-2, 0, 0)]).unwrap_err(),
            Error::DuplicateLine(0, 3)
        );
    }
}
