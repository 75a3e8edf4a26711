use std::collections::BTreeMap;
use std::str::FromStr;

use super::subdivision::{is_zonotopal, overlay};
use super::ZonotopalTiling;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    Reflect,
    Rotate90,
}

impl FromStr for Transform {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reflect" => Ok(Transform::Reflect),
            "rotate90" => Ok(Transform::Rotate90),
            _ => Err(Error::BadParameter(format!("unknown transform {s:?}; expected reflect or rotate90"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GlueResult {
    /// Vertices of the first tiling, then those of the transformed second one.
    pub graph: LabeledGraph,
    /// Whether the overlay of the two drawings is itself zonotopal; when it
    /// is not, nothing guarantees that the glued graph is a partial cube.
    pub overlay_zonotopal: bool,
}

/// Joins `t1` to the transformed copy of `t2` by one edge between each pair
/// of outer-polygon corners at the same position. Flat boundary vertices
/// (strips between parallel lines) are not corners and stay unmatched.
pub fn glue(t1: &ZonotopalTiling, t2: &ZonotopalTiling, transform: Transform) -> Result<GlueResult> {
    let t2 = match transform {
        Transform::Reflect => t2.reflect(),
        Transform::Rotate90 => t2.rotate90(),
    };
    let (s1, s2) = (&t1.subdivision, &t2.subdivision);
    let over = overlay(s1, s2)?;
    let (c1, c2) = (s1.center(), s2.center());
    let ring = |s: &super::PlaneSubdivision, c: &super::Pt| {
        let mut m = BTreeMap::new();
        for v in s.outer_corners() {
            m.insert(s.points[v].sub(c), v);
        }
        m
    };
    let (r1, r2) = (ring(s1, &c1), ring(s2, &c2));
    if r1.len() != r2.len() || r1.keys().ne(r2.keys()) {
        return Err(Error::CornerMatchFailure);
    }
    let n1 = t1.graph.vertex_count();
    let mut edges: Vec<(usize, usize)> = t1.graph.edges().to_vec();
    edges.extend(t2.graph.edges().iter().map(|&(u, v)| (u + n1, v + n1)));
    edges.extend(r1.values().zip(r2.values()).map(|(&u, &v)| (u, v + n1)));
    let graph = LabeledGraph::new(n1 + t2.graph.vertex_count(), edges)?;
    Ok(GlueResult { graph, overlay_zonotopal: is_zonotopal(&over) })
}
