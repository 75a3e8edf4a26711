use serde::{Deserialize, Serialize};

use super::{RawSphere, SphereComplex};
use crate::error::{Error, Result};

/// One end of a curve at a vertex: the curve leaves the vertex either along
/// its forward direction or against it.
///
/// Serialized as a signed integer: `curve + 1` for forward, `-(curve + 1)`
/// for backward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i64", try_from = "i64")]
pub struct Port {
    pub curve: usize,
    pub forward: bool,
}

impl From<Port> for i64 {
    fn from(p: Port) -> i64 {
        let v = p.curve as i64 + 1;
        if p.forward {
            v
        } else {
            -v
        }
    }
}

impl TryFrom<i64> for Port {
    type Error = String;

    fn try_from(v: i64) -> std::result::Result<Self, String> {
        if v == 0 {
            return Err("port 0 is not valid".into());
        }
        Ok(Port { curve: (v.unsigned_abs() - 1) as usize, forward: v > 0 })
    }
}

/// Combinatorial projective arrangement, given in local orientation charts.
///
/// `events[e]` is the cyclic order of ports around projective vertex `e` in
/// that vertex's chart. `sequences[c]` lists the events met by curve `c` in
/// forward order; `twists[c][i]` is true when the segment from
/// `sequences[c][i]` to the next event reverses the chart orientation. A
/// pseudoline is one-sided, so each curve has an odd number of twists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingStructure {
    pub curves: usize,
    pub events: Vec<Vec<Port>>,
    pub sequences: Vec<Vec<usize>>,
    pub twists: Vec<Vec<bool>>,
}

impl CrossingStructure {
    /// Reads the projective structure back out of a sphere complex.
    pub fn from_complex(c: &SphereComplex) -> CrossingStructure {
        let nv = c.vertex_count();
        let is_rep = |v: usize| v < c.vertices()[v].antipode;
        let mut event_of = vec![usize::MAX; nv];
        let mut events = Vec::new();
        for v in 0..nv {
            if is_rep(v) {
                event_of[v] = events.len();
                event_of[c.vertices()[v].antipode] = events.len();
                let ports = c.vertices()[v]
                    .rotation
                    .iter()
                    .map(|&h| Port { curve: c.edges()[h / 2].curve, forward: h % 2 == 0 })
                    .collect();
                events.push(ports);
            }
        }
        let mut sequences = Vec::with_capacity(c.curve_count());
        let mut twists = Vec::with_capacity(c.curve_count());
        for k in 0..c.curve_count() {
            let cyc = c.curve_cycle(k);
            let len = cyc.len();
            let half = len / 2;
            let start = (0..len).find(|&i| is_rep(cyc[i])).expect("curve meets a representative");
            let at = |j: usize| cyc[(start + j) % len];
            sequences.push((0..half).map(|j| event_of[at(j)]).collect());
            twists.push((0..half).map(|j| is_rep(at(j)) != is_rep(at(j + 1))).collect());
        }
        CrossingStructure { curves: c.curve_count(), events, sequences, twists }
    }
}

/// Builds the sphere complex as the orientation double cover of a
/// projective crossing structure.
pub fn build_from_crossing_structure(cs: &CrossingStructure) -> Result<SphereComplex> {
    let n = cs.curves;
    let ne = cs.events.len();
    if n < 2 {
        return Err(Error::BadParameter("at least two curves are required".into()));
    }
    if cs.sequences.len() != n || cs.twists.len() != n {
        return Err(Error::InconsistentStructure("one sequence and twist list per curve expected".into()));
    }
    let mut events_of_curve: Vec<Vec<bool>> = vec![vec![false; ne]; n];
    for c in 0..n {
        let seq = &cs.sequences[c];
        if seq.is_empty() || cs.twists[c].len() != seq.len() {
            return Err(Error::InconsistentStructure(format!("curve {c} has malformed sequence")));
        }
        for &e in seq {
            if e >= ne || events_of_curve[c][e] {
                return Err(Error::InconsistentStructure(format!("curve {c} has a bad or repeated event")));
            }
            events_of_curve[c][e] = true;
        }
        if cs.twists[c].iter().filter(|&&t| t).count() % 2 != 1 {
            return Err(Error::InconsistentStructure(format!("curve {c} is two-sided")));
        }
    }
    for (e, ports) in cs.events.iter().enumerate() {
        let mut seen = vec![[false; 2]; n];
        for p in ports {
            if p.curve >= n || !events_of_curve[p.curve][e] || seen[p.curve][p.forward as usize] {
                return Err(Error::InconsistentStructure(format!("event {e} has an invalid port")));
            }
            seen[p.curve][p.forward as usize] = true;
        }
        for (c, s) in seen.iter().enumerate() {
            if events_of_curve[c][e] && !(s[0] && s[1]) {
                return Err(Error::InconsistentStructure(format!("event {e} misses ports of curve {c}")));
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let count = (0..ne).filter(|&e| events_of_curve[a][e] && events_of_curve[b][e]).count();
            if count != 1 {
                return Err(Error::PairwiseCrossingViolation { a, b, count });
            }
        }
    }

    // vertex 2e is event e in its own chart, 2e + 1 its mirror image
    let antipode: Vec<usize> = (0..2 * ne).map(|v| v ^ 1).collect();
    let mut rotation = Vec::with_capacity(2 * ne);
    for ports in &cs.events {
        rotation.push(ports.clone());
        rotation.push(ports.iter().rev().copied().collect());
    }
    let mut cycles = Vec::with_capacity(n);
    for c in 0..n {
        let seq = &cs.sequences[c];
        let len = seq.len();
        let mut sheet = 0usize;
        let mut cyc = Vec::with_capacity(2 * len);
        for i in 0..2 * len {
            cyc.push(2 * seq[i % len] + sheet);
            if cs.twists[c][i % len] {
                sheet ^= 1;
            }
        }
        cycles.push(cyc);
    }
    RawSphere { curves: n, antipode, cycles, rotation, points: None, normals: None }.assemble()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_from_lines;
    use crate::HomCoord;

    fn hc(x: i64, y: i64, z: i64) -> HomCoord {
        HomCoord::from_i64(x, y, z).unwrap()
    }

    #[test]
    fn roundtrip_three_lines() {
        let c = build_from_lines(&[hc(1, 0, 0), hc(0, 1, 0), hc(0, 0, 1)]).unwrap();
        let cs = CrossingStructure::from_complex(&c);
        let d = build_from_crossing_structure(&cs).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count(), d.face_count()), (6, 12, 8));
        assert!(d.is_simplicial());
        assert_eq!(CrossingStructure::from_complex(&d), cs);
    }

    #[test]
    fn port_json_encoding() {
        let p = Port { curve: 2, forward: false };
        assert_eq!(serde_json::to_string(&p).unwrap(), "-3");
        assert_eq!(serde_json::from_str::<Port>("4").unwrap(), Port { curve: 3, forward: true });
        assert!(serde_json::from_str::<Port>("0").is_err());
    }

    #[test]
    fn pair_crossing_twice_is_rejected() {
        let c = build_from_lines(&[hc(1, 0, 0), hc(0, 1, 0), hc(0, 0, 1)]).unwrap();
        let mut cs = CrossingStructure::from_complex(&c);
        // add a second meeting of curves 0 and 1 as an extra event
        let e = cs.events.len();
        cs.events.push(vec![
            Port { curve: 0, forward: true },
            Port { curve: 1, forward: true },
            Port { curve: 0, forward: false },
            Port { curve: 1, forward: false },
        ]);
        cs.sequences[0].push(e);
        cs.twists[0].push(false);
        cs.sequences[1].push(e);
        cs.twists[1].push(false);
        assert_eq!(
            build_from_crossing_structure(&cs).unwrap_err(),
            Error::PairwiseCrossingViolation { a: 0, b: 1, count: 2 }
        );
    }

    #[test]
    fn even_twists_rejected() {
        let c = build_from_lines(&[hc(1, 0, 0), hc(0, 1, 0), hc(0, 0, 1)]).unwrap();
        let mut cs = CrossingStructure::from_complex(&c);
        for t in cs.twists[0].iter_mut() {
            *t = false;
        }
        assert!(matches!(build_from_crossing_structure(&cs), Err(Error::InconsistentStructure(_))));
    }

    #[test]
    fn flipped_rotation_breaks_euler() {
        let c = build_from_lines(&[hc(1, 0, 0), hc(0, 1, 0), hc(0, 0, 1), hc(1, 1, 1)]).unwrap();
        let mut cs = CrossingStructure::from_complex(&c);
        cs.events[0].reverse();
        assert!(build_from_crossing_structure(&cs).is_err());
    }
}
