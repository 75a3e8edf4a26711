use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact point in the plane.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Pt {
    pub x: BigRational,
    pub y: BigRational,
}

impl Pt {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Pt { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        Pt { x: BigRational::from_integer(x.into()), y: BigRational::from_integer(y.into()) }
    }

    pub fn sub(&self, o: &Pt) -> Pt {
        Pt { x: &self.x - &o.x, y: &self.y - &o.y }
    }

    pub fn add(&self, o: &Pt) -> Pt {
        Pt { x: &self.x + &o.x, y: &self.y + &o.y }
    }

    pub fn scale(&self, k: &BigRational) -> Pt {
        Pt { x: &self.x * k, y: &self.y * k }
    }

    pub fn cross(&self, o: &Pt) -> BigRational {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn dot(&self, o: &Pt) -> BigRational {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (self.x.to_f64().unwrap_or(f64::NAN), self.y.to_f64().unwrap_or(f64::NAN))
    }
}

/// Wire form of a point: two `"p/q"` strings.
pub(crate) fn pt_json(p: &Pt) -> [String; 2] {
    [ratio_string(&p.x), ratio_string(&p.y)]
}

pub(crate) fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Counterclockwise angular comparison of nonzero direction vectors,
/// starting from the positive x axis.
pub(crate) fn angle_cmp(a: &Pt, b: &Pt) -> Ordering {
    let half = |p: &Pt| {
        if p.y.is_positive() || (p.y.is_zero() && p.x.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = a.cross(b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// Connected straight-line plane graph with its faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneSubdivision {
    pub points: Vec<Pt>,
    pub edges: Vec<(usize, usize)>,
    /// Bounded faces as counterclockwise vertex cycles.
    pub faces: Vec<Vec<usize>>,
    /// Boundary of the unbounded face, clockwise.
    pub outer: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionJson {
    pub vertices: Vec<[String; 2]>,
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<Vec<usize>>,
    pub outer: Vec<usize>,
}

fn signed_area2(points: &[Pt], cycle: &[usize]) -> BigRational {
    let mut a = BigRational::zero();
    for i in 0..cycle.len() {
        a += points[cycle[i]].cross(&points[cycle[(i + 1) % cycle.len()]]);
    }
    a
}

impl PlaneSubdivision {
    /// Extracts faces from a connected plane graph whose edges are
    /// straight segments meeting only at endpoints.
    pub fn new(points: Vec<Pt>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = points.len();
        let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in &edges {
            rot[u].push(v);
            rot[v].push(u);
        }
        for (u, r) in rot.iter_mut().enumerate() {
            r.sort_by(|&a, &b| angle_cmp(&points[a].sub(&points[u]), &points[b].sub(&points[u])));
            if r.windows(2).any(|w| {
                angle_cmp(&points[w[0]].sub(&points[u]), &points[w[1]].sub(&points[u])) == Ordering::Equal
            }) {
                return Err(Error::InconsistentStructure(format!("overlapping edges at vertex {u}")));
            }
        }
        let mut pos: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (u, r) in rot.iter().enumerate() {
            for (i, &v) in r.iter().enumerate() {
                pos.insert((u, v), i);
            }
        }
        let mut seen: BTreeMap<(usize, usize), ()> = BTreeMap::new();
        let mut cycles = Vec::new();
        for (u, r) in rot.iter().enumerate() {
            for &v in r {
                if seen.contains_key(&(u, v)) {
                    continue;
                }
                let mut cyc = Vec::new();
                let (mut a, mut b) = (u, v);
                while seen.insert((a, b), ()).is_none() {
                    cyc.push(a);
                    // turn to the edge just clockwise of the reverse dart
                    let rb = &rot[b];
                    let i = pos[&(b, a)];
                    let w = rb[(i + rb.len() - 1) % rb.len()];
                    (a, b) = (b, w);
                }
                cycles.push(cyc);
            }
        }
        let v = n as i64;
        let e = edges.len() as i64;
        if v - e + cycles.len() as i64 != 2 && !(e == 0 && v == 1) {
            return Err(Error::InconsistentStructure("plane graph is disconnected or crossing".into()));
        }
        let areas: Vec<BigRational> = cycles.iter().map(|c| signed_area2(&points, c)).collect();
        let outer_idx = (0..cycles.len()).min_by(|&a, &b| areas[a].cmp(&areas[b])).unwrap_or(0);
        let outer = if cycles.is_empty() { vec![0] } else { cycles[outer_idx].clone() };
        let faces = cycles.into_iter().enumerate().filter(|&(i, _)| i != outer_idx).map(|(_, c)| c).collect();
        Ok(PlaneSubdivision { points, edges, faces, outer })
    }

    /// Outer boundary vertices where the boundary turns. When all lines are
    /// parallel the boundary walks a path and doubles back at its two ends,
    /// which count as corners.
    pub fn outer_corners(&self) -> Vec<usize> {
        let o = &self.outer;
        let k = o.len();
        (0..k)
            .filter(|&i| {
                if k > 1 && o[(i + k - 1) % k] == o[(i + 1) % k] {
                    return true;
                }
                let a = &self.points[o[(i + k - 1) % k]];
                let b = &self.points[o[i]];
                let c = &self.points[o[(i + 1) % k]];
                !b.sub(a).cross(&c.sub(b)).is_zero()
            })
            .map(|i| o[i])
            .collect()
    }

    /// Mean of the outer corners.
    pub fn center(&self) -> Pt {
        let cs = self.outer_corners();
        if cs.is_empty() {
            return self.points[0].clone();
        }
        let mut s = Pt::from_i64(0, 0);
        for &c in &cs {
            s = s.add(&self.points[c]);
        }
        s.scale(&BigRational::new(1.into(), (cs.len() as i64).into()))
    }

    pub fn translated(&self, by: &Pt) -> PlaneSubdivision {
        let mut s = self.clone();
        for p in &mut s.points {
            *p = p.add(by);
        }
        s
    }

    /// Corner point set of the outer polygon after moving its center to the origin.
    pub fn centered_outline(&self) -> Vec<Pt> {
        let c = self.center();
        let mut pts: Vec<Pt> = self.outer_corners().iter().map(|&i| self.points[i].sub(&c)).collect();
        pts.sort();
        pts
    }

    pub fn to_json(&self) -> SubdivisionJson {
        SubdivisionJson {
            vertices: self.points.iter().map(pt_json).collect(),
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            faces: self.faces.clone(),
            outer: self.outer.clone(),
        }
    }
}

/// Every bounded face is a strictly convex, centrally symmetric polygon.
pub fn is_zonotopal(s: &PlaneSubdivision) -> bool {
    s.faces.iter().all(|f| face_is_zonotopal(&s.points, f))
}

pub(crate) fn face_is_zonotopal(points: &[Pt], f: &[usize]) -> bool {
    let k = f.len();
    if k < 4 || !k.is_multiple_of(2) {
        return false;
    }
    let p = |i: usize| &points[f[i % k]];
    let convex = (0..k).all(|i| p(i + 1).sub(p(i)).cross(&p(i + 2).sub(p(i + 1))).is_positive());
    let m = k / 2;
    let mid = p(0).add(p(m));
    convex && (1..m).all(|i| p(i).add(p(i + m)) == mid)
}

fn on_segment(p: &Pt, a: &Pt, b: &Pt) -> bool {
    let d = b.sub(a);
    let q = p.sub(a);
    d.cross(&q).is_zero() && !q.dot(&d).is_negative() && q.dot(&d) <= d.dot(&d)
}

/// Proper or touching intersection point of two non-parallel segments.
fn intersection(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> Option<Pt> {
    let r = b.sub(a);
    let s = d.sub(c);
    let den = r.cross(&s);
    if den.is_zero() {
        return None;
    }
    let qp = c.sub(a);
    let t = qp.cross(&s) / &den;
    let u = qp.cross(&r) / &den;
    let unit = |x: &BigRational| !x.is_negative() && *x <= BigRational::from_integer(1.into());
    (unit(&t) && unit(&u)).then(|| a.add(&r.scale(&t)))
}

/// Splits a set of segments at all their mutual intersections and merges
/// collinear overlaps, returning the resulting points and elementary edges.
pub fn arrange_segments(segments: &[(Pt, Pt)]) -> (Vec<Pt>, Vec<(usize, usize)>) {
    let mut ids: BTreeMap<Pt, usize> = BTreeMap::new();
    let mut points = Vec::new();
    let mut id = |p: Pt, points: &mut Vec<Pt>| {
        *ids.entry(p.clone()).or_insert_with(|| {
            points.push(p);
            points.len() - 1
        })
    };
    let mut edges = std::collections::BTreeSet::new();
    for (i, (a, b)) in segments.iter().enumerate() {
        let mut on: Vec<Pt> = vec![a.clone(), b.clone()];
        for (j, (c, d)) in segments.iter().enumerate() {
            if i == j {
                continue;
            }
            if let Some(p) = intersection(a, b, c, d) {
                on.push(p);
            }
            for p in [c, d] {
                if on_segment(p, a, b) {
                    on.push(p.clone());
                }
            }
        }
        let dir = b.sub(a);
        on.sort_by_key(|p| p.sub(a).dot(&dir));
        on.dedup();
        for w in on.windows(2) {
            let u = id(w[0].clone(), &mut points);
            let v = id(w[1].clone(), &mut points);
            edges.insert((u.min(v), u.max(v)));
        }
    }
    (points, edges.into_iter().collect())
}

/// Union of the vertices and edges of two subdivisions with the same outer
/// polygon, as a new subdivision.
pub fn overlay(a: &PlaneSubdivision, b: &PlaneSubdivision) -> Result<PlaneSubdivision> {
    if a.centered_outline() != b.centered_outline() {
        return Err(Error::OuterMismatch);
    }
    let (ca, cb) = (a.center(), b.center());
    let mut segs = Vec::new();
    for (s, c) in [(a, &ca), (b, &cb)] {
        for &(u, v) in &s.edges {
            segs.push((s.points[u].sub(c), s.points[v].sub(c)));
        }
    }
    let (points, edges) = arrange_segments(&segs);
    PlaneSubdivision::new(points, edges)
}
