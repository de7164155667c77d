//! Reading and writing graphs.
//!
//! Weighted edge lists:
//!
//! ```text
//! # comment
//! n 4
//! 1 2 1
//! 2 3 1/3
//! 3 4 0.25
//! ```
//!
//! Labels are 1-based, `i < j`, each pair at most once; unlisted pairs weigh 0.
//! Weights are integers, fractions `p/q` or decimal strings, all exact.
//!
//! graph6 follows the format used by nauty: the size prefix, then the upper
//! triangle of the adjacency matrix read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte, big-endian,
//! offset by 63.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pairgroup::{edge_count, pair_index, pair_slot, EdgeVector};
use crate::scalar::{format_scalar, parse_scalar, LiteralSyntax, Scalar};

/// Parses a weighted edge list with the default literal syntax.
pub fn parse_weighted(text: &str) -> Result<EdgeVector> {
    parse_weighted_with(text, LiteralSyntax::default())
}

pub fn parse_weighted_with(text: &str, syntax: LiteralSyntax) -> Result<EdgeVector> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut n: Option<usize> = None;
    let mut weights: Vec<Option<Scalar>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(count) = n else {
            if fields.len() != 2 || fields[0] != "n" {
                return Err(err(line_no, format!("expected header `n <count>`, found {line:?}")));
            }
            let count: usize =
                fields[1].parse().map_err(|_| err(line_no, format!("bad vertex count {:?}", fields[1])))?;
            if count < 3 {
                return Err(err(line_no, format!("vertex count {count} is below the minimum of 3")));
            }
            n = Some(count);
            weights = vec![None; edge_count(count)];
            continue;
        };
        if fields.len() != 3 {
            return Err(err(line_no, format!("expected `i j weight`, found {line:?}")));
        }
        let label = |s: &str| -> Result<usize> {
            let v: usize = s.parse().map_err(|_| err(line_no, format!("bad vertex label {s:?}")))?;
            if v == 0 || v > count {
                return Err(err(line_no, format!("vertex label {v} outside 1..={count}")));
            }
            Ok(v)
        };
        let (i, j) = (label(fields[0])?, label(fields[1])?);
        if i >= j {
            return Err(err(line_no, format!("edge ({i}, {j}) must have i < j")));
        }
        let w = parse_scalar(fields[2], syntax)
            .map_err(|_| err(line_no, format!("malformed weight literal {:?}", fields[2])))?;
        let s = pair_index(i, j, count)? - 1;
        if weights[s].is_some() {
            return Err(err(line_no, format!("duplicate edge ({i}, {j})")));
        }
        weights[s] = Some(w);
    }

    let Some(n) = n else {
        return Err(err(text.lines().count().max(1), "missing header `n <count>`".into()));
    };
    EdgeVector::new(n, weights.into_iter().map(|w| w.unwrap_or_else(Scalar::zero)).collect())
}

/// Canonical text: the header, then nonzero edges in pair order.
pub fn emit_weighted(x: &EdgeVector) -> String {
    let n = x.n();
    let mut out = format!("n {n}\n");
    for i in 0..n {
        for j in i + 1..n {
            let w = &x.weights()[pair_slot(i, j, n)];
            if !w.is_zero() {
                out.push_str(&format!("{} {} {}\n", i + 1, j + 1, format_scalar(w)));
            }
        }
    }
    out
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<EdgeVector> {
    let t = text.trim();
    let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
    let bytes = t.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, body) = decode_size(bytes)?;
    if n < 3 {
        return Err(Error::DegenerateSize { n });
    }
    let m = edge_count(n);
    let expected = m.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!("n = {n} needs {expected} data bytes, found {}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1;
    if (m..expected * 6).any(|k| bit(k) != 0) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut weights = vec![Scalar::zero(); m];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) == 1 {
                weights[pair_slot(i, j, n)] = Scalar::one();
            }
            k += 1;
        }
    }
    EdgeVector::new(n, weights)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let short = || Error::Graph6("truncated size prefix".into());
    let first = *bytes.first().ok_or_else(short)?;
    if first != 126 {
        return Ok(((first - 63) as usize, &bytes[1..]));
    }
    if bytes.get(1) == Some(&126) {
        let digits = bytes.get(2..8).ok_or_else(short)?;
        Ok((digits.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize), &bytes[8..]))
    } else {
        let digits = bytes.get(1..4).ok_or_else(short)?;
        Ok((digits.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize), &bytes[4..]))
    }
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
}

/// Encodes a simple graph as graph6 (no header, no trailing newline).
pub fn emit_graph6(x: &EdgeVector) -> Result<String> {
    let n = x.n();
    if let Some((s, w)) = x.weights().iter().enumerate().find(|(_, w)| !crate::scalar::is_zero_or_one(w)) {
        return Err(Error::NotSimple { position: s + 1, weight: format_scalar(w) });
    }
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(x.weights()[pair_slot(i, j, n)].is_one());
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::from_i64;

    #[test]
    fn parse_p4() {
        let x = parse_weighted("n 4\n1 2 1\n2 3 1\n3 4 1\n").unwrap();
        assert_eq!(x, EdgeVector::from_integers(4, &[1, 0, 0, 1, 0, 1]).unwrap());
    }

    #[test]
    fn parse_header_only() {
        assert_eq!(parse_weighted("n 4").unwrap(), EdgeVector::zeros(4).unwrap());
    }

    #[test]
    fn parse_fraction_and_comments() {
        let x = parse_weighted("# a graph\n\nn 4 # four vertices\n1 2 1/3\n").unwrap();
        assert_eq!(x.weights()[0], Scalar::new(1.into(), 3.into()));
        assert!(x.weights()[1..].iter().all(Zero::is_zero));
        let d = parse_weighted_with("n 3\n1 3 0.25", LiteralSyntax::DECIMAL).unwrap();
        assert_eq!(d.weights()[1], Scalar::new(1.into(), 4.into()));
    }

    fn line_of(text: &str) -> usize {
        match parse_weighted(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn parse_errors_are_line_numbered() {
        assert_eq!(line_of("n 4\n1 2 1\n1 2 3\n"), 3);
        assert_eq!(line_of("n 4\n2 1 1\n"), 2);
        assert_eq!(line_of("n 4\n\n1 5 1\n"), 3);
        assert_eq!(line_of("n 4\n1 2 x\n"), 2);
        assert_eq!(line_of("n 2\n"), 1);
        assert_eq!(line_of("1 2 1\n"), 1);
        assert_eq!(line_of("n 4\n1 2\n"), 2);
        assert_eq!(line_of("n 4\n1 1 1\n"), 2);
        assert_eq!(line_of(""), 1);
    }

    #[test]
    fn decimals_rejected_by_default() {
        assert!(parse_weighted("n 3\n1 2 0.5\n").is_err());
    }

    #[test]
    fn emit_p4_and_zero() {
        let p4 = EdgeVector::from_integers(4, &[1, 0, 0, 1, 0, 1]).unwrap();
        assert_eq!(emit_weighted(&p4), "n 4\n1 2 1\n2 3 1\n3 4 1\n");
        assert_eq!(emit_weighted(&EdgeVector::zeros(4).unwrap()), "n 4\n");
    }

    #[test]
    fn graph6_known_strings() {
        let k4 = EdgeVector::from_integers(4, &[1; 6]).unwrap();
        assert_eq!(emit_graph6(&k4).unwrap(), "C~");
        assert_eq!(emit_graph6(&EdgeVector::zeros(4).unwrap()).unwrap(), "C?");
        let p4 = EdgeVector::from_integers(4, &[1, 0, 0, 1, 0, 1]).unwrap();
        assert_eq!(emit_graph6(&p4).unwrap(), "Ch");
        assert_eq!(parse_graph6("Ch\n").unwrap(), p4);
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), k4);
    }

    #[test]
    fn graph6_single_edges_land_on_their_pair() {
        for n in 3..=7 {
            for i in 1..=n {
                for j in i + 1..=n {
                    let x = EdgeVector::basis(n, i, j).unwrap();
                    let back = parse_graph6(&emit_graph6(&x).unwrap()).unwrap();
                    assert_eq!(back, x, "edge ({i},{j}) on n = {n}");
                }
            }
        }
    }

    #[test]
    fn graph6_large_size_prefix() {
        let x = EdgeVector::zeros(63).unwrap();
        let g = emit_graph6(&x).unwrap();
        assert_eq!(&g.as_bytes()[..4], &[126, 63, 63, 126]);
        assert_eq!(parse_graph6(&g).unwrap(), x);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("C~~"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("A_"), Err(Error::DegenerateSize { n: 2 })));
        assert!(matches!(parse_graph6("C\x01"), Err(Error::Graph6(_))));
        // K4 uses all six bits; n = 3 has three padding bits that must be 0.
        assert!(matches!(parse_graph6("B~"), Err(Error::Graph6(_))));
        let w = EdgeVector::new(4, vec![from_i64(2), from_i64(0), from_i64(0), from_i64(0), from_i64(0), from_i64(0)])
            .unwrap();
        assert!(matches!(emit_graph6(&w), Err(Error::NotSimple { position: 1, .. })));
    }
}
