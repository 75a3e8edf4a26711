//! Generators for the simplicial families: near-pencils and the regular
//! polygon arrangements `R(m)`, plus the 20-vertex weight 2/3 graph.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::complex::{build_from_approx_normals, build_from_crossing_structure, SphereComplex};
use crate::error::{Error, Result};
use crate::graph::{Label, LabeledGraph};
use crate::pseudoline::WiringDiagram;

/// Incidence tolerance for the floating-point layout of `R(m)`.
const TOLERANCE: f64 = 1e-7;

/// `n - 1` concurrent lines and one more line avoiding their common point.
///
/// Built from the wiring diagram with a single block event of `n - 1`
/// wires, closed up by the line at infinity.
pub fn near_pencil(n: usize) -> Result<SphereComplex> {
    if n < 3 {
        return Err(Error::BadParameter(format!("near-pencil needs n >= 3, got {n}")));
    }
    let w = WiringDiagram::new(n - 1, Vec::new(), vec![(0, n - 2)])?;
    build_from_crossing_structure(&w.to_crossing_structure(true))
}

/// Normals of the sides and symmetry axes of a regular `k`-gon centered at
/// the origin of the plane `z = 1`.
fn polygon_normals(k: usize) -> Vec<[f64; 3]> {
    let sides = (0..k).map(|i| {
        let t = 2.0 * PI * i as f64 / k as f64;
        [t.cos(), t.sin(), -1.0]
    });
    // axis j has direction angle pi j / k
    let axes = (0..k).map(|j| {
        let t = PI * j as f64 / k as f64;
        [-t.sin(), t.cos(), 0.0]
    });
    sides.chain(axes).collect()
}

/// `R(m)` for even `m = 2k`: the `k` side lines of a regular `k`-gon and its
/// `k` axes of symmetry.
pub fn family_r(m: usize) -> Result<SphereComplex> {
    if !m.is_multiple_of(2) || m < 6 {
        return Err(Error::BadParameter(format!("R(m) needs even m >= 6, got {m}")));
    }
    build_from_approx_normals(&polygon_normals(m / 2), TOLERANCE)
}

/// `R(4k + 1)`: `R(4k)` together with the line at infinity.
pub fn family_r_odd(m: usize) -> Result<SphereComplex> {
    if m % 4 != 1 || m < 9 {
        let why = if m % 4 == 3 { " (R(4k+2) plus infinity is not simplicial)" } else { "" };
        return Err(Error::BadParameter(format!("odd R(m) needs m = 4k + 1 with k >= 2, got {m}{why}")));
    }
    let mut normals = polygon_normals((m - 1) / 2);
    normals.push([0.0, 0.0, 1.0]);
    build_from_approx_normals(&normals, TOLERANCE)
}

/// Five-bit vectors with two or three ones, adjacent at Hamming distance one.
pub fn weight23_graph() -> LabeledGraph {
    let verts: Vec<u32> = (0u32..32).filter(|v| matches!(v.count_ones(), 2 | 3)).collect();
    let mut edges = Vec::new();
    for (i, &a) in verts.iter().enumerate() {
        for (j, &b) in verts.iter().enumerate().skip(i + 1) {
            if (a ^ b).count_ones() == 1 {
                edges.push((i, j));
            }
        }
    }
    let labels = verts.iter().map(|&v| Label::from_bits((0..5).map(|b| v >> (4 - b) & 1 == 1).collect())).collect();
    LabeledGraph::new(verts.len(), edges).unwrap().with_labels(labels).unwrap()
}

/// A named family member, as written on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    NearPencil(usize),
    R(usize),
}

impl FamilySpec {
    pub fn build(self) -> Result<SphereComplex> {
        match self {
            FamilySpec::NearPencil(n) => near_pencil(n),
            FamilySpec::R(m) if m % 2 == 0 => family_r(m),
            FamilySpec::R(m) => family_r_odd(m),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParameter(format!("unknown family {s:?}; expected near-pencil:n or R:m"));
        let (name, arg) = s.split_once(':').ok_or_else(bad)?;
        let arg: usize = arg.trim().parse().map_err(|_| bad())?;
        match name.trim() {
            "near-pencil" => Ok(FamilySpec::NearPencil(arg)),
            "R" => Ok(FamilySpec::R(arg)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::NearPencil(n) => write!(f, "near-pencil:{n}"),
            FamilySpec::R(m) => write!(f, "R:{m}"),
        }
    }
}
