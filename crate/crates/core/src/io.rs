//! Text format for line arrangements: one line `a b c` per projective line
//! `ax + by + cz = 0`; `#` starts a comment; blank lines are ignored.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::geom::HomCoord;

pub fn parse_arrangement(text: &str) -> Result<Vec<HomCoord>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: i + 1, msg };
        let nums = line
            .split_whitespace()
            .map(|t| t.parse::<BigInt>().map_err(|_| err(format!("not an integer: {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let [a, b, c]: [BigInt; 3] = nums.try_into().map_err(|_| err("expected three integers".into()))?;
        lines.push(HomCoord::new(a, b, c).map_err(|_| err("zero line".into()))?);
    }
    Ok(lines)
}

/// Appends the line at infinity `0 0 1` unless it is already present.
pub fn add_infinity(lines: &mut Vec<HomCoord>) {
    let inf = HomCoord::from_i64(0, 0, 1).expect("nonzero");
    if !lines.iter().any(|l| l.projectively_equal(&inf)) {
        lines.push(inf);
    }
}

pub fn format_arrangement(lines: &[HomCoord]) -> String {
    lines.iter().map(|l| format!("{l}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blanks() {
        let text = "# three lines\n1 0 0\n\n0 1 0  # y = 0\n 2 4 -6\n";
        let ls = parse_arrangement(text).unwrap();
        assert_eq!(ls.len(), 3);
        assert_eq!(ls[2], HomCoord::from_i64(1, 2, -3).unwrap());
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(parse_arrangement("1 0 0\n1 2\n").unwrap_err(), Error::Parse { line: 2, msg: "expected three integers".into() });
        assert!(matches!(parse_arrangement("1 x 0").unwrap_err(), Error::Parse { line: 1, .. }));
        assert!(matches!(parse_arrangement("0 0 0").unwrap_err(), Error::Parse { line: 1, .. }));
    }

    #[test]
    fn infinity_added_once() {
        let mut ls = parse_arrangement("1 0 0\n0 1 0").unwrap();
        add_infinity(&mut ls);
        add_infinity(&mut ls);
        assert_eq!(ls.len(), 3);
        assert_eq!(format_arrangement(&ls), "1 0 0\n0 1 0\n0 0 1\n");
    }
}
