//! Wiring diagrams of Euclidean pseudoline arrangements.
//!
//! File format (text, `#` starts a comment, `/` may separate lines):
//!
//! ```text
//! n
//! parallel: {1,4} {2,5}      # optional
//! (1 2)
//! (2 3 4)
//! ```
//!
//! The first line gives the number of wires. Wires are numbered `1..=n` by
//! their initial position from the top. Each event is a parenthesised block
//! of consecutive positions whose wires meet at one point and reverse their
//! order there. Wires in a declared parallel class never cross; they meet
//! at infinity instead.

use crate::complex::{CrossingStructure, Port};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WiringDiagram {
    n: usize,
    /// Parallel classes as sorted 0-based wire ids, each of size at least two.
    parallel: Vec<Vec<usize>>,
    /// Blocks of 0-based positions `(first, last)`.
    events: Vec<(usize, usize)>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

impl WiringDiagram {
    pub fn new(n: usize, parallel: Vec<Vec<usize>>, events: Vec<(usize, usize)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadParameter("a wiring diagram needs at least two wires".into()));
        }
        let mut class_of = vec![usize::MAX; n];
        let mut parallel = parallel;
        for (k, class) in parallel.iter_mut().enumerate() {
            class.sort_unstable();
            if class.len() < 2 {
                return Err(Error::BadParameter("a parallel class needs two wires".into()));
            }
            for &w in class.iter() {
                if w >= n || class_of[w] != usize::MAX {
                    return Err(Error::BadParameter(format!("wire {} in more than one class", w + 1)));
                }
                class_of[w] = k;
            }
            if class.windows(2).any(|p| p[1] != p[0] + 1) {
                return Err(Error::BadParameter("parallel classes must be consecutive wires".into()));
            }
        }
        for &(a, b) in &events {
            if a >= b || b >= n {
                return Err(Error::BadParameter(format!("invalid block ({}..{})", a + 1, b + 1)));
            }
        }

        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = vec![vec![0usize; n]; n];
        for &(a, b) in &events {
            for i in a..=b {
                for j in i + 1..=b {
                    let (x, y) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                    count[x][y] += 1;
                }
            }
            perm[a..=b].reverse();
        }
        for a in 0..n {
            for b in a + 1..n {
                let same = class_of[a] != usize::MAX && class_of[a] == class_of[b];
                let want = if same { 0 } else { 1 };
                if count[a][b] != want {
                    return Err(Error::CrossingCountError { a: a + 1, b: b + 1, count: count[a][b] });
                }
            }
        }
        Ok(WiringDiagram { n, parallel, events })
    }

    pub fn wire_count(&self) -> usize {
        self.n
    }

    pub fn events(&self) -> &[(usize, usize)] {
        &self.events
    }

    pub fn parallel_classes(&self) -> &[Vec<usize>] {
        &self.parallel
    }

    /// The same arrangement swept right to left.
    pub fn reversed(&self) -> WiringDiagram {
        let events = self.events.iter().rev().copied().collect();
        // final positions become the initial ones; wires are renamed accordingly
        let mut perm: Vec<usize> = (0..self.n).collect();
        for &(a, b) in &self.events {
            perm[a..=b].reverse();
        }
        let mut new_id = vec![0; self.n];
        for (pos, &w) in perm.iter().enumerate() {
            new_id[w] = pos;
        }
        let parallel = self.parallel.iter().map(|c| c.iter().map(|&w| new_id[w]).collect()).collect();
        WiringDiagram::new(self.n, parallel, events).expect("reversal of a valid diagram")
    }

    /// Projective crossing structure of the diagram.
    ///
    /// The disk holding the diagram is one chart of the projective plane;
    /// a wire closes up through infinity, re-entering at the antipodal end.
    /// Ends of wires at infinity are vertices when several parallel wires
    /// meet there or when the line at infinity is added. With
    /// `add_infinity` the extra curve has index `n` and runs up the right
    /// side and, after wrapping, down the left side.
    pub fn to_crossing_structure(&self, add_infinity: bool) -> CrossingStructure {
        let n = self.n;
        let mut events: Vec<Vec<Port>> = Vec::new();
        let mut sequences: Vec<Vec<usize>> = vec![Vec::new(); n];

        let mut perm: Vec<usize> = (0..n).collect();
        for &(a, b) in &self.events {
            let e = events.len();
            let wires = &perm[a..=b];
            let mut ports: Vec<Port> = wires.iter().map(|&w| Port { curve: w, forward: true }).collect();
            ports.extend(wires.iter().map(|&w| Port { curve: w, forward: false }));
            events.push(ports);
            for &w in wires {
                sequences[w].push(e);
            }
            perm[a..=b].reverse();
        }
        let mut twists: Vec<Vec<bool>> = sequences.iter().map(|s| vec![false; s.len()]).collect();

        // groups of wires meeting at infinity, by final position, bottom to top
        let mut class_of = vec![usize::MAX; n];
        for (k, c) in self.parallel.iter().enumerate() {
            for &w in c {
                class_of[w] = k;
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for pos in (0..n).rev() {
            let w = perm[pos];
            match groups.last_mut() {
                Some(g) if class_of[w] != usize::MAX && class_of[g[0]] == class_of[w] => g.push(w),
                _ => groups.push(vec![w]),
            }
        }

        let mut infinity_seq = Vec::new();
        for g in &groups {
            if g.len() < 2 && !add_infinity {
                continue;
            }
            // g lists the group bottom to top; ports run top to bottom
            let top_down: Vec<usize> = g.iter().rev().copied().collect();
            let mut ports: Vec<Port> = top_down.iter().map(|&w| Port { curve: w, forward: true }).collect();
            if add_infinity {
                ports.push(Port { curve: n, forward: true });
            }
            ports.extend(top_down.iter().map(|&w| Port { curve: w, forward: false }));
            if add_infinity {
                ports.push(Port { curve: n, forward: false });
            }
            let e = events.len();
            events.push(ports);
            for &w in g {
                sequences[w].push(e);
                twists[w].push(false);
            }
            infinity_seq.push(e);
        }
        // each wire closes through infinity, which flips the chart
        for t in twists.iter_mut() {
            *t.last_mut().expect("every wire meets an event") = true;
        }
        let mut curves = n;
        if add_infinity {
            curves += 1;
            let mut t = vec![false; infinity_seq.len()];
            *t.last_mut().expect("nonempty") = true;
            sequences.push(infinity_seq);
            twists.push(t);
        }
        CrossingStructure { curves, events, sequences, twists }
    }
}

/// Parses the wiring file format.
pub fn parse_wiring(text: &str) -> Result<WiringDiagram> {
    let mut n: Option<usize> = None;
    let mut parallel = Vec::new();
    let mut events = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        for line in content.split('/') {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if n.is_none() {
                n = Some(line.parse().map_err(|_| parse_err(lineno, format!("expected wire count, got {line:?}")))?);
                continue;
            }
            if let Some(rest) = line.strip_prefix("parallel:") {
                if !events.is_empty() {
                    return Err(parse_err(lineno, "parallel classes must precede events"));
                }
                parallel.extend(parse_groups(rest, '{', '}', lineno)?);
                continue;
            }
            for block in parse_groups(line, '(', ')', lineno)? {
                if block.windows(2).any(|w| w[1] != w[0] + 1) {
                    return Err(parse_err(lineno, "a block must list consecutive positions in increasing order"));
                }
                if block.len() < 2 {
                    return Err(parse_err(lineno, "a block needs at least two positions"));
                }
                events.push((block[0], *block.last().unwrap()));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(1, "missing wire count"))?;
    if events.iter().any(|&(_, b)| b >= n) || parallel.iter().flatten().any(|&w| w >= n) {
        return Err(parse_err(0, "position or wire out of range"));
    }
    WiringDiagram::new(n, parallel, events).map_err(|e| match e {
        Error::BadParameter(msg) => parse_err(0, msg),
        other => other,
    })
}

/// Parses `(1 2) (3,4)`-style groups into 0-based indices.
fn parse_groups(s: &str, open: char, close: char, lineno: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix(open)
            .ok_or_else(|| parse_err(lineno, format!("expected '{open}' in {rest:?}")))?;
        let end = body.find(close).ok_or_else(|| parse_err(lineno, format!("missing '{close}'")))?;
        let items = body[..end]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(parse_err(lineno, format!("bad index {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(items);
        rest = body[end + 1..].trim_start();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_from_crossing_structure, build_from_lines};
    use crate::duals::spherical_dual;
    use crate::partialcube::are_isomorphic;
    use crate::HomCoord;

    fn hc(x: i64, y: i64, z: i64) -> HomCoord {
        HomCoord::from_i64(x, y, z).unwrap()
    }

    #[test]
    fn simple_three_wires() {
        let w = parse_wiring("3 / (1 2) (2 3) (1 2)").unwrap();
        assert_eq!(w.events().len(), 3);
    }

    #[test]
    fn triple_block() {
        let w = parse_wiring("3\n(1 2 3)\n").unwrap();
        assert_eq!(w.events(), &[(0, 2)]);
    }

    #[test]
    fn missing_crossings() {
        assert!(matches!(parse_wiring("3 / (1 2)"), Err(Error::CrossingCountError { .. })));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_wiring(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_wiring("3 / (1 3)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_wiring("3 / (1 x)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_wiring("3 / (1 2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn three_wires_match_three_lines() {
        let w = parse_wiring("3 / (1 2) (2 3) (1 2)").unwrap();
        let c = build_from_crossing_structure(&w.to_crossing_structure(false)).unwrap();
        let l = build_from_lines(&[hc(1, 0, 0), hc(0, 1, 0), hc(0, 0, 1)]).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count(), c.face_count()), (6, 12, 8));
        assert!(are_isomorphic(&spherical_dual(&c), &spherical_dual(&l), 2000).unwrap());
    }

    #[test]
    fn three_wires_with_infinity() {
        let w = parse_wiring("3 / (1 2) (2 3) (1 2)").unwrap();
        let c = build_from_crossing_structure(&w.to_crossing_structure(true)).unwrap();
        assert_eq!(c.curve_count(), 4);
        assert_eq!(c.face_count(), 14);
        assert!(!c.is_simplicial());
    }

    #[test]
    fn pencil_block_with_infinity_is_near_pencil() {
        let w = parse_wiring("3 / (1 2 3)").unwrap();
        let c = build_from_crossing_structure(&w.to_crossing_structure(true)).unwrap();
        assert!(c.is_simplicial());
        assert_eq!(c.face_count(), 12);
        let l = build_from_lines(&[hc(1, 0, 0), hc(0, 1, 0), hc(1, 1, 0), hc(0, 0, 1)]).unwrap();
        assert!(are_isomorphic(&spherical_dual(&c), &spherical_dual(&l), 2000).unwrap());
    }

    #[test]
    fn parallel_classes_meet_at_infinity() {
        // two parallel wires crossed by a third: lines y=0, y=1, x=0 and infinity
        let w = parse_wiring("3\nparallel: {1,2}\n(2 3)\n(1 2)\n").unwrap();
        let c = build_from_crossing_structure(&w.to_crossing_structure(true)).unwrap();
        let l = build_from_lines(&[hc(0, 1, 0), hc(0, 1, -1), hc(1, 0, 0), hc(0, 0, 1)]).unwrap();
        assert_eq!(c.face_count(), l.face_count());
        assert!(c.is_simplicial());
        assert!(are_isomorphic(&spherical_dual(&c), &spherical_dual(&l), 2000).unwrap());
        // without the line at infinity the parallel wires still meet there
        let c = build_from_crossing_structure(&w.to_crossing_structure(false)).unwrap();
        let l = build_from_lines(&[hc(0, 1, 0), hc(0, 1, -1), hc(1, 0, 0)]).unwrap();
        assert!(are_isomorphic(&spherical_dual(&c), &spherical_dual(&l), 2000).unwrap());
    }

    #[test]
    fn parallel_wires_must_not_cross() {
        assert!(matches!(
            parse_wiring("3\nparallel: {1,2}\n(1 2)\n(2 3)\n(1 2)\n"),
            Err(Error::CrossingCountError { .. })
        ));
    }

    #[test]
    fn reversed_diagram_is_mirror_isomorphic() {
        let w = parse_wiring("4 / (2 3) (1 2) (3 4) (2 3) (1 2) (3 4)").unwrap();
        for inf in [false, true] {
            let a = build_from_crossing_structure(&w.to_crossing_structure(inf)).unwrap();
            let b = build_from_crossing_structure(&w.reversed().to_crossing_structure(inf)).unwrap();
            assert!(are_isomorphic(&spherical_dual(&a), &spherical_dual(&b), 2000).unwrap());
        }
    }
}
