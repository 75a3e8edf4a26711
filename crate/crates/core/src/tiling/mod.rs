//! Zonotopal tilings: planar drawings of affine duals in which every edge
//! is a translate of its class's direction vector, so every bounded face is
//! a centrally symmetric convex polygon.
//!
//! Class `i` is drawn with the primitive integer normal `(a, b)` of line
//! `ax + by + c = 0`, and a cell with label `l` sits at
//! `sum_i (l_i - 1/2) * (a_i, b_i)`. The tiling is therefore centered at
//! the origin, and two tilings whose lines have the same slopes share the
//! same outer zonogon.

mod glue;
mod subdivision;
mod svg;

pub use glue::{glue, GlueResult, Transform};
pub use subdivision::{arrange_segments, is_zonotopal, overlay, PlaneSubdivision, Pt, SubdivisionJson};
pub use svg::emit_svg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::duals::affine_dual;
use crate::error::{Error, Result};
use crate::geom::HomCoord;
use crate::graph::LabeledGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZonotopalTiling {
    pub graph: LabeledGraph,
    pub subdivision: PlaneSubdivision,
    /// Direction vector of each class.
    pub directions: Vec<[BigInt; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingJson {
    pub vertices: Vec<[String; 2]>,
    /// `[u, v, class]`
    pub edges: Vec<[usize; 3]>,
    pub faces: Vec<Vec<usize>>,
    pub outer: Vec<usize>,
    pub directions: Vec<[String; 2]>,
}

fn primitive_normal(l: &HomCoord) -> Result<[BigInt; 2]> {
    let (a, b) = (l.x().clone(), l.y().clone());
    if a.is_zero() && b.is_zero() {
        return Err(Error::BadParameter("the line at infinity has no affine direction".into()));
    }
    let g = a.gcd(&b);
    Ok([a / &g, b / g])
}

impl ZonotopalTiling {
    /// Drawing of the affine dual of `lines` (each `ax + by + c = 0`).
    pub fn from_affine_arrangement(lines: &[HomCoord]) -> Result<Self> {
        let graph = affine_dual(lines)?;
        let directions = lines.iter().map(primitive_normal).collect::<Result<Vec<_>>>()?;
        let labels = graph.labels.as_ref().expect("dual graphs are labeled");
        let half = BigRational::new(1.into(), 2.into());
        let position = |bits: &[bool]| {
            let mut p = Pt::from_i64(0, 0);
            for (i, &b) in bits.iter().enumerate() {
                let k = if b { half.clone() } else { -half.clone() };
                let d = Pt::new(BigRational::from_integer(directions[i][0].clone()), BigRational::from_integer(directions[i][1].clone()));
                p = p.add(&d.scale(&k));
            }
            p
        };
        let points: Vec<Pt> = labels.iter().map(|l| position(l.bits())).collect();

        // each edge must be a translate of its class direction
        let classes = graph.classes.as_ref().expect("dual graphs carry classes");
        for (&(u, v), &c) in graph.edges().iter().zip(classes) {
            let d = points[v].sub(&points[u]);
            let dir = Pt::new(BigRational::from_integer(directions[c][0].clone()), BigRational::from_integer(directions[c][1].clone()));
            if d != dir && d != dir.scale(&BigRational::from_integer((-1).into())) {
                return Err(Error::InconsistentDrawing(u));
            }
        }
        let mut sorted = points.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            let v = points.iter().position(|p| *p == w[0]).unwrap_or(0);
            return Err(Error::InconsistentDrawing(v));
        }
        let subdivision = PlaneSubdivision::new(points, graph.edges().to_vec())?;
        Ok(ZonotopalTiling { graph, subdivision, directions })
    }

    fn transformed(&self, f: impl Fn(&Pt) -> Pt, dir: impl Fn(&[BigInt; 2]) -> [BigInt; 2]) -> Self {
        let mut points: Vec<Pt> = self.subdivision.points.iter().map(&f).collect();
        let c = PlaneSubdivision { points: points.clone(), ..self.subdivision.clone() }.center();
        let old = self.subdivision.center();
        let shift = old.sub(&c);
        for p in &mut points {
            *p = p.add(&shift);
        }
        let edges = self.subdivision.edges.clone();
        let subdivision = PlaneSubdivision::new(points, edges).expect("similarity keeps the subdivision valid");
        ZonotopalTiling { graph: self.graph.clone(), subdivision, directions: self.directions.iter().map(dir).collect() }
    }

    /// Central reflection `(x, y) -> (-x, -y)` about the outer polygon's center.
    pub fn reflect(&self) -> Self {
        self.transformed(|p| Pt::new(-p.x.clone(), -p.y.clone()), |d| [-d[0].clone(), -d[1].clone()])
    }

    /// Quarter turn `(x, y) -> (-y, x)` about the outer polygon's center.
    pub fn rotate90(&self) -> Self {
        self.transformed(|p| Pt::new(-p.y.clone(), p.x.clone()), |d| [-d[1].clone(), d[0].clone()])
    }

    pub fn to_json(&self) -> TilingJson {
        let classes = self.graph.classes.as_ref().expect("tiling graphs carry classes");
        TilingJson {
            vertices: self.subdivision.points.iter().map(subdivision::pt_json).collect(),
            edges: self.graph.edges().iter().zip(classes).map(|(&(u, v), &c)| [u, v, c]).collect(),
            faces: self.subdivision.faces.clone(),
            outer: self.subdivision.outer.clone(),
            directions: self.directions.iter().map(|d| [d[0].to_string(), d[1].to_string()]).collect(),
        }
    }

    /// Deleting the edges of one class leaves exactly two components.
    pub fn class_is_cut(&self, class: usize) -> bool {
        let classes = self.graph.classes.as_ref().expect("tiling graphs carry classes");
        let edges: Vec<(usize, usize)> =
            self.graph.edges().iter().zip(classes).filter(|(_, &c)| c != class).map(|(&e, _)| e).collect();
        let n = self.graph.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut comps = n;
        for (u, v) in edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        comps == 2
    }
}

/// Outer polygons agree up to translation.
pub fn same_outline(a: &PlaneSubdivision, b: &PlaneSubdivision) -> bool {
    a.centered_outline() == b.centered_outline()
}
