//! Exact homogeneous-coordinate kernel over arbitrary-precision integers.
//!
//! A [`HomCoord`] is a primitive integer triple. Read as a line it is the
//! normal `(a, b, c)` of `ax + by + cz = 0`; read as a signed point it is a
//! direction from the origin, i.e. a point of the sphere.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomCoord {
    x: BigInt,
    y: BigInt,
    z: BigInt,
}

impl HomCoord {
    /// Builds a signed primitive triple (common factor removed, sign kept).
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Result<Self> {
        let (x, y, z) = (x.into(), y.into(), z.into());
        if x.is_zero() && y.is_zero() && z.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = x.gcd(&y).gcd(&z);
        Ok(HomCoord { x: &x / &g, y: &y / &g, z: &z / &g })
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new(x, y, z)
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn z(&self) -> &BigInt {
        &self.z
    }

    pub fn coords(&self) -> [&BigInt; 3] {
        [&self.x, &self.y, &self.z]
    }

    /// Unsigned representative: first nonzero coordinate positive.
    pub fn canonical(&self) -> HomCoord {
        let first = self.coords().into_iter().find(|c| !c.is_zero()).expect("nonzero");
        if first.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    pub fn projectively_equal(&self, other: &HomCoord) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn dot(&self, other: &HomCoord) -> BigInt {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn to_f64(&self) -> [f64; 3] {
        use num_traits::ToPrimitive;
        [
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
            self.z.to_f64().unwrap_or(f64::NAN),
        ]
    }
}

impl std::ops::Neg for &HomCoord {
    type Output = HomCoord;

    fn neg(self) -> HomCoord {
        HomCoord { x: -&self.x, y: -&self.y, z: -&self.z }
    }
}

impl std::ops::Neg for HomCoord {
    type Output = HomCoord;

    fn neg(self) -> HomCoord {
        -&self
    }
}

impl fmt::Debug for HomCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl fmt::Display for HomCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.x, self.y, self.z)
    }
}

fn raw_cross(p: &HomCoord, q: &HomCoord) -> [BigInt; 3] {
    [
        &p.y * &q.z - &p.z * &q.y,
        &p.z * &q.x - &p.x * &q.z,
        &p.x * &q.y - &p.y * &q.x,
    ]
}

/// Primitive cross product of two projectively distinct triples.
pub fn cross(p: &HomCoord, q: &HomCoord) -> Result<HomCoord> {
    let [x, y, z] = raw_cross(p, q);
    HomCoord::new(x, y, z).map_err(|_| Error::ParallelInput)
}

/// Sign of `det[a, b, c]`, i.e. of `a · (b × c)`.
pub fn orient(a: &HomCoord, b: &HomCoord, c: &HomCoord) -> i8 {
    let [x, y, z] = raw_cross(b, c);
    sign(&(&a.x * x + &a.y * y + &a.z * z))
}

/// Halfspace test: sign of `p · l`.
pub fn side(p: &HomCoord, l: &HomCoord) -> i8 {
    sign(&p.dot(l))
}

pub(crate) fn sign(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Orders points lying on the great circle with normal `circle`
/// counterclockwise as seen from the tip of the normal.
///
/// Returns indices into `points`; the sequence starts at the lexicographically
/// least point. Points must be pairwise distinct as signed points.
pub fn circular_order(circle: &HomCoord, points: &[HomCoord]) -> Result<Vec<usize>> {
    if points.iter().any(|p| !p.dot(circle).is_zero()) {
        return Err(Error::NotIncident);
    }
    if points.is_empty() {
        return Ok(Vec::new());
    }
    let start = (0..points.len()).min_by(|&a, &b| points[a].cmp(&points[b])).unwrap();
    let reference = &points[start];
    // half 0 covers angles in [0, pi), half 1 covers [pi, 2 pi)
    let half = |p: &HomCoord| -> u8 {
        match orient(circle, reference, p) {
            1 => 0,
            -1 => 1,
            _ => {
                if reference.dot(p).is_positive() {
                    0
                } else {
                    1
                }
            }
        }
    };
    let halves: Vec<u8> = points.iter().map(half).collect();
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| {
        if a == b {
            return Ordering::Equal;
        }
        halves[a].cmp(&halves[b]).then_with(|| match orient(circle, &points[a], &points[b]) {
            1 => Ordering::Less,
            -1 => Ordering::Greater,
            _ => Ordering::Equal,
        })
    });
    // the reference sits at angle zero; a tie can only come from duplicates
    debug_assert_eq!(idx[0], start);
    Ok(idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hc(x: i64, y: i64, z: i64) -> HomCoord {
        HomCoord::from_i64(x, y, z).unwrap()
    }

    fn cyclic_eq(a: &[usize], b: &[usize]) -> bool {
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        let Some(s) = b.iter().position(|&v| v == a[0]) else { return false };
        (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()])
    }

    #[test]
    fn cross_of_axes() {
        assert_eq!(cross(&hc(1, 0, 0), &hc(0, 1, 0)).unwrap(), hc(0, 0, 1));
        assert_eq!(cross(&hc(0, 1, 0), &hc(0, 0, 1)).unwrap(), hc(1, 0, 0));
    }

    #[test]
    fn cross_is_orthogonal_and_primitive() {
        let p = hc(1, 1, -1);
        let q = hc(1, -1, 0);
        let r = cross(&p, &q).unwrap();
        assert!(r.dot(&p).is_zero());
        assert!(r.dot(&q).is_zero());
        // (1,1,-1) x (1,-1,0) = (-1, -1, -2)
        assert_eq!(r, hc(-1, -1, -2));
    }

    #[test]
    fn cross_of_parallel_inputs_fails() {
        assert_eq!(cross(&hc(1, 2, 3), &hc(-2, -4, -6)), Err(Error::ParallelInput));
    }

    #[test]
    fn normalization_keeps_sign() {
        assert_eq!(hc(-2, 4, 0), hc(-1, 2, 0));
        assert_eq!(hc(-2, 4, 0).canonical(), hc(1, -2, 0));
        assert!(HomCoord::from_i64(0, 0, 0).is_err());
    }

    #[test]
    fn side_examples() {
        assert_eq!(side(&hc(0, 0, 1), &hc(0, 0, 1)), 1);
        assert_eq!(side(&hc(1, 0, 0), &hc(0, 0, 1)), 0);
        assert_eq!(side(&hc(1, 2, -5), &hc(1, 1, 1)), -1);
    }

    #[test]
    fn quadrant_order() {
        let pts = vec![hc(1, 0, 0), hc(0, 1, 0), hc(-1, 0, 0), hc(0, -1, 0)];
        let ord = circular_order(&hc(0, 0, 1), &pts).unwrap();
        assert!(cyclic_eq(&ord, &[0, 1, 2, 3]));
        // starts at the lexicographically least point, (-1, 0, 0)
        assert_eq!(ord[0], 2);
    }

    #[test]
    fn two_points_deterministic() {
        let pts = vec![hc(0, 1, 0), hc(0, -1, 0)];
        let ord = circular_order(&hc(0, 0, 1), &pts).unwrap();
        assert_eq!(ord, vec![1, 0]);
    }

    #[test]
    fn off_circle_point_rejected() {
        let pts = vec![hc(1, 0, 0), hc(0, 1, 1)];
        assert_eq!(circular_order(&hc(0, 0, 1), &pts), Err(Error::NotIncident));
    }

    /// Angles measured by atan2 in an orthonormal basis of the circle's plane.
    fn float_angle(normal: &HomCoord, basis: [f64; 3], p: &HomCoord) -> f64 {
        let n = normal.to_f64();
        let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        let n = [n[0] / len, n[1] / len, n[2] / len];
        let bl = (basis[0] * basis[0] + basis[1] * basis[1] + basis[2] * basis[2]).sqrt();
        let e1 = [basis[0] / bl, basis[1] / bl, basis[2] / bl];
        let e2 = [
            n[1] * e1[2] - n[2] * e1[1],
            n[2] * e1[0] - n[0] * e1[2],
            n[0] * e1[1] - n[1] * e1[0],
        ];
        let q = p.to_f64();
        let u = q[0] * e1[0] + q[1] * e1[1] + q[2] * e1[2];
        let v = q[0] * e2[0] + q[1] * e2[1] + q[2] * e2[2];
        let t = v.atan2(u);
        if t < 0.0 {
            t + std::f64::consts::TAU
        } else {
            t
        }
    }

    #[test]
    fn six_points_match_float_oracle() {
        // points where three circles meet the circle (1, 1, 1)
        let circle = hc(1, 1, 1);
        let others = [hc(1, -1, 0), hc(0, 1, -1), hc(1, 2, 4)];
        let mut pts = Vec::new();
        for o in &others {
            let p = cross(&circle, o).unwrap();
            pts.push(-&p);
            pts.push(p);
        }
        let ord = circular_order(&circle, &pts).unwrap();
        let base = pts[ord[0]].to_f64();
        let angles: Vec<f64> = ord.iter().map(|&i| float_angle(&circle, base, &pts[i])).collect();
        for w in angles.windows(2) {
            assert!(w[0] < w[1], "{angles:?}");
        }
    }

    fn arb_coord() -> impl Strategy<Value = HomCoord> {
        (-20i64..20, -20i64..20, -20i64..20)
            .prop_filter("nonzero", |(x, y, z)| (*x, *y, *z) != (0, 0, 0))
            .prop_map(|(x, y, z)| hc(x, y, z))
    }

    proptest! {
        #[test]
        fn cross_antisymmetric_projectively(p in arb_coord(), q in arb_coord()) {
            prop_assume!(!p.projectively_equal(&q));
            let a = cross(&p, &q).unwrap();
            let b = cross(&q, &p).unwrap();
            prop_assert_eq!(a.canonical(), b.canonical());
            prop_assert_eq!(a, -b);
        }

        #[test]
        fn side_is_antipodal(p in arb_coord(), l in arb_coord()) {
            prop_assert_eq!(side(&-&p, &l), -side(&p, &l));
        }

        #[test]
        fn circular_order_rotation_and_reversal(
            circle in arb_coord(),
            others in proptest::collection::vec(arb_coord(), 1..5),
            rot in 0usize..10,
        ) {
            let mut pts: Vec<HomCoord> = Vec::new();
            for o in &others {
                if let Ok(p) = cross(&circle, o) {
                    for q in [p.clone(), -p] {
                        if !pts.contains(&q) {
                            pts.push(q);
                        }
                    }
                }
            }
            prop_assume!(!pts.is_empty());
            let ord = circular_order(&circle, &pts).unwrap();
            let names: Vec<&HomCoord> = ord.iter().map(|&i| &pts[i]).collect();

            let r = rot % pts.len();
            let mut rotated = pts.clone();
            rotated.rotate_left(r);
            let ord2 = circular_order(&circle, &rotated).unwrap();
            let names2: Vec<&HomCoord> = ord2.iter().map(|&i| &rotated[i]).collect();
            prop_assert_eq!(&names, &names2);

            let ord3 = circular_order(&-&circle, &pts).unwrap();
            let mut names3: Vec<&HomCoord> = ord3.iter().map(|&i| &pts[i]).collect();
            names3[1..].reverse();
            prop_assert_eq!(&names, &names3);
        }
    }
}
