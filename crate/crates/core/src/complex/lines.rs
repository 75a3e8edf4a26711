use std::collections::BTreeMap;

use super::{Port, RawSphere, SphereComplex};
use crate::error::{Error, Result};
use crate::geom::{self, HomCoord};

/// Ordering primitives needed to lay out a great-circle arrangement.
trait Kernel {
    type Point: Clone;

    fn neg(&self, p: &Self::Point) -> Self::Point;
    fn cross(&self, p: &Self::Point, q: &Self::Point) -> Self::Point;
    fn circle_order(&self, normal: &Self::Point, points: &[Self::Point]) -> Result<Vec<usize>>;
}

struct Exact;

impl Kernel for Exact {
    type Point = HomCoord;

    fn neg(&self, p: &HomCoord) -> HomCoord {
        -p
    }

    fn cross(&self, p: &HomCoord, q: &HomCoord) -> HomCoord {
        geom::cross(p, q).expect("distinct directions")
    }

    fn circle_order(&self, normal: &HomCoord, points: &[HomCoord]) -> Result<Vec<usize>> {
        geom::circular_order(normal, points)
    }
}

struct Approx;

fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn unit(a: [f64; 3]) -> [f64; 3] {
    let l = dot3(&a, &a).sqrt();
    [a[0] / l, a[1] / l, a[2] / l]
}

impl Kernel for Approx {
    type Point = [f64; 3];

    fn neg(&self, p: &[f64; 3]) -> [f64; 3] {
        [-p[0], -p[1], -p[2]]
    }

    fn cross(&self, p: &[f64; 3], q: &[f64; 3]) -> [f64; 3] {
        unit(cross3(p, q))
    }

    fn circle_order(&self, normal: &[f64; 3], points: &[[f64; 3]]) -> Result<Vec<usize>> {
        let n = unit(*normal);
        let e1 = unit(points[0]);
        let e2 = cross3(&n, &e1);
        let angle = |p: &[f64; 3]| {
            let t = dot3(p, &e2).atan2(dot3(p, &e1));
            if t < -1e-12 {
                t + std::f64::consts::TAU
            } else {
                t.max(0.0)
            }
        };
        let angles: Vec<f64> = points.iter().map(angle).collect();
        let mut idx: Vec<usize> = (0..points.len()).collect();
        idx.sort_by(|&a, &b| angles[a].total_cmp(&angles[b]));
        for w in idx.windows(2) {
            if angles[w[1]] - angles[w[0]] < 1e-9 {
                return Err(Error::InconsistentStructure("coincident points in approximate ordering".into()));
            }
        }
        Ok(idx)
    }
}

/// Lays out the sphere complex given its normals and the projective vertices
/// (one signed representative and the sorted curves through it).
fn layout<K: Kernel>(
    kernel: &K,
    normals: &[K::Point],
    proj: Vec<(K::Point, Vec<usize>)>,
) -> Result<(RawSphere, Vec<K::Point>)> {
    let n = normals.len();
    let mut points = Vec::with_capacity(2 * proj.len());
    let mut on_curve: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut through: Vec<Vec<usize>> = Vec::with_capacity(2 * proj.len());
    for (p, curves) in proj {
        let v = points.len();
        points.push(p.clone());
        points.push(kernel.neg(&p));
        for &c in &curves {
            on_curve[c].push(v);
            on_curve[c].push(v + 1);
        }
        through.push(curves.clone());
        through.push(curves);
    }
    let antipode: Vec<usize> = (0..points.len()).map(|v| v ^ 1).collect();

    let mut cycles = Vec::with_capacity(n);
    for c in 0..n {
        let pts: Vec<K::Point> = on_curve[c].iter().map(|&v| points[v].clone()).collect();
        let ord = kernel.circle_order(&normals[c], &pts)?;
        cycles.push(ord.into_iter().map(|i| on_curve[c][i]).collect());
    }

    // tangent of curve c at v in its forward direction is n_c x v
    let mut rotation = Vec::with_capacity(points.len());
    for (v, p) in points.iter().enumerate() {
        let mut tangents = Vec::new();
        let mut ports = Vec::new();
        for &c in &through[v] {
            let t = kernel.cross(&normals[c], p);
            tangents.push(kernel.neg(&t));
            ports.push(Port { curve: c, forward: false });
            tangents.push(t);
            ports.push(Port { curve: c, forward: true });
        }
        let ord = kernel.circle_order(p, &tangents)?;
        rotation.push(ord.into_iter().map(|i| ports[i]).collect());
    }

    let raw = RawSphere { curves: n, antipode, cycles, rotation, points: None, normals: None };
    Ok((raw, points))
}

/// Sphere complex of an arrangement of projective lines given by exact normals.
///
/// Concurrences of any order are merged exactly. Lines through a common
/// point are accepted and give a complex of lunes.
pub fn build_from_lines(lines: &[HomCoord]) -> Result<SphereComplex> {
    if lines.len() < 2 {
        return Err(Error::BadParameter("at least two lines are required".into()));
    }
    let mut proj: BTreeMap<HomCoord, Vec<usize>> = BTreeMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = geom::cross(&lines[i], &lines[j]).map_err(|_| Error::DuplicateLine(i, j))?.canonical();
            let e = proj.entry(p).or_default();
            for c in [i, j] {
                if !e.contains(&c) {
                    e.push(c);
                }
            }
        }
    }
    let proj: Vec<(HomCoord, Vec<usize>)> = proj
        .into_iter()
        .map(|(p, mut cs)| {
            cs.sort_unstable();
            (p, cs)
        })
        .collect();
    let (mut raw, points) = layout(&Exact, lines, proj)?;
    raw.points = Some(points);
    raw.normals = Some(lines.to_vec());
    raw.assemble()
}

/// Sphere complex from floating-point normals.
///
/// Used for arrangements with irrational coordinates. Incidences are decided
/// with tolerance `tol`; the result is accepted only if it passes every
/// structural check of the exact builder.
pub fn build_from_approx_normals(normals: &[[f64; 3]], tol: f64) -> Result<SphereComplex> {
    if normals.len() < 2 {
        return Err(Error::BadParameter("at least two lines are required".into()));
    }
    let normals: Vec<[f64; 3]> = normals.iter().map(|&n| unit(n)).collect();
    let canon = |p: [f64; 3]| {
        let k = (0..3).max_by(|&a, &b| p[a].abs().total_cmp(&p[b].abs())).unwrap();
        if p[k] < 0.0 {
            [-p[0], -p[1], -p[2]]
        } else {
            p
        }
    };
    let mut proj: Vec<([f64; 3], Vec<usize>)> = Vec::new();
    for i in 0..normals.len() {
        for j in i + 1..normals.len() {
            let raw = cross3(&normals[i], &normals[j]);
            if dot3(&raw, &raw).sqrt() < tol {
                return Err(Error::DuplicateLine(i, j));
            }
            let p = canon(unit(raw));
            // compare up to sign: ties in the largest coordinate make `canon` unstable
            let found = proj.iter_mut().find(|(q, _)| {
                let d = [p[0] - q[0], p[1] - q[1], p[2] - q[2]];
                let e = [p[0] + q[0], p[1] + q[1], p[2] + q[2]];
                dot3(&d, &d).sqrt() < tol || dot3(&e, &e).sqrt() < tol
            });
            match found {
                Some((_, cs)) => {
                    for c in [i, j] {
                        if !cs.contains(&c) {
                            cs.push(c);
                        }
                    }
                }
                None => proj.push((p, vec![i, j])),
            }
        }
    }
    for (p, cs) in &mut proj {
        cs.sort_unstable();
        for (c, n) in normals.iter().enumerate() {
            if (dot3(p, n).abs() < tol) != cs.contains(&c) {
                return Err(Error::InconsistentStructure("ambiguous approximate incidence".into()));
            }
        }
    }
    let (raw, _) = layout(&Approx, &normals, proj)?;
    raw.assemble()
}
