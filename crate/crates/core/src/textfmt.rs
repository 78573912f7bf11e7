//! Line-oriented text formats for the three instance types.
//!
//! `ORC2 N` is followed by N-1 rows of `R`/`B`, row i covering pairs (i, j)
//! for j > i. `ORC3 N` is followed by one `R`/`B` string over the triples
//! (i < j < k) in lexicographic order, wrapped at 80 characters. `LAB N n`
//! is followed by integer rows shaped like the ORC2 rows.

use crate::model::{Color, Instance, PairLabeling, TripleColoring, TwoColoring};
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("missing or malformed header: {0}")]
    BadHeader(String),
    #[error("line {line}: expected {expected} symbols, found {found}")]
    WrongCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid symbol {symbol:?} at line {line}")]
    InvalidSymbol { line: usize, symbol: char },
    #[error("label {label} out of range 1..={n_colors} at line {line}")]
    LabelOutOfRange { line: usize, label: u32, n_colors: u32 },
    #[error("trailing content after the encoded instance")]
    TrailingContent,
}

const WRAP: usize = 80;

pub fn serialize_two(c: &TwoColoring) -> String {
    let n = c.n_vertices();
    let mut out = format!("ORC2 {n}\n");
    for i in 1..n {
        for j in (i + 1)..=n {
            out.push(c.color(i, j).symbol());
        }
        out.push('\n');
    }
    out
}

pub fn serialize_three(c: &TripleColoring) -> String {
    let n = c.n_vertices();
    let mut out = format!("ORC3 {n}\n");
    let mut col = 0;
    for i in 1..n {
        for j in (i + 1)..n {
            for k in (j + 1)..=n {
                out.push(c.color(i, j, k).symbol());
                col += 1;
                if col == WRAP {
                    out.push('\n');
                    col = 0;
                }
            }
        }
    }
    if col > 0 {
        out.push('\n');
    }
    out
}

pub fn serialize_labels(l: &PairLabeling) -> String {
    let n = l.n_vertices();
    let mut out = format!("LAB {n} {}\n", l.n_colors());
    for i in 1..n {
        let mut row = String::new();
        for j in (i + 1)..=n {
            if j > i + 1 {
                row.push(' ');
            }
            write!(row, "{}", l.label(i, j)).unwrap();
        }
        out.push_str(&row);
        out.push('\n');
    }
    out
}

pub fn serialize_instance(inst: &Instance) -> String {
    match inst {
        Instance::Pairs(c) => serialize_two(c),
        Instance::Triples(c) => serialize_three(c),
        Instance::Labels(l) => serialize_labels(l),
    }
}

fn header_fields(text: &str) -> Result<(&str, Vec<u32>, std::str::Lines<'_>), ParseError> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| ParseError::BadHeader("empty input".into()))?;
    let mut parts = header.split_whitespace();
    let tag = parts
        .next()
        .ok_or_else(|| ParseError::BadHeader(header.into()))?;
    let nums: Result<Vec<u32>, _> = parts.map(|p| p.parse::<u32>()).collect();
    let nums = nums.map_err(|_| ParseError::BadHeader(header.into()))?;
    let tag_start = header
        .find(tag)
        .expect("tag is a substring of its own header");
    Ok((&text[tag_start..tag_start + tag.len()], nums, lines))
}

fn symbol_color(ch: char, line: usize) -> Result<Color, ParseError> {
    match ch {
        'R' => Ok(Color::Red),
        'B' => Ok(Color::Blue),
        other => Err(ParseError::InvalidSymbol { line, symbol: other }),
    }
}

pub fn parse_two(text: &str) -> Result<TwoColoring, ParseError> {
    let (tag, nums, mut lines) = header_fields(text)?;
    if tag != "ORC2" || nums.len() != 1 || nums[0] == 0 {
        return Err(ParseError::BadHeader(text.lines().next().unwrap_or("").into()));
    }
    let n = nums[0];
    let mut rows: Vec<Vec<Color>> = Vec::with_capacity(n as usize - 1);
    for i in 1..n {
        let lineno = i as usize + 1;
        let row = lines.next().ok_or(ParseError::WrongCount {
            line: lineno,
            expected: (n - i) as usize,
            found: 0,
        })?;
        let expected = (n - i) as usize;
        if row.chars().count() != expected {
            return Err(ParseError::WrongCount {
                line: lineno,
                expected,
                found: row.chars().count(),
            });
        }
        let parsed: Result<Vec<Color>, _> =
            row.chars().map(|ch| symbol_color(ch, lineno)).collect();
        rows.push(parsed?);
    }
    if lines.any(|l| !l.trim().is_empty()) {
        return Err(ParseError::TrailingContent);
    }
    Ok(TwoColoring::from_fn(n, |i, j| rows[i as usize - 1][(j - i) as usize - 1])
        .expect("parsed dimensions are valid"))
}

pub fn parse_three(text: &str) -> Result<TripleColoring, ParseError> {
    let (tag, nums, lines) = header_fields(text)?;
    if tag != "ORC3" || nums.len() != 1 || nums[0] == 0 {
        return Err(ParseError::BadHeader(text.lines().next().unwrap_or("").into()));
    }
    let n = nums[0];
    let expected = crate::model::n_triples(n as usize);
    let mut symbols: Vec<Color> = Vec::with_capacity(expected);
    let mut consumed_lines = 1usize;
    for line in lines {
        consumed_lines += 1;
        if line.trim().is_empty() {
            continue;
        }
        if symbols.len() >= expected {
            return Err(ParseError::TrailingContent);
        }
        for ch in line.chars() {
            symbols.push(symbol_color(ch, consumed_lines)?);
        }
    }
    if symbols.len() != expected {
        return Err(ParseError::WrongCount {
            line: consumed_lines,
            expected,
            found: symbols.len(),
        });
    }
    // The wire order is lexicographic; storage order is colex.
    let mut it = symbols.into_iter();
    let mut lex: Vec<((u32, u32, u32), Color)> = Vec::with_capacity(expected);
    for i in 1..n {
        for j in (i + 1)..n {
            for k in (j + 1)..=n {
                lex.push(((i, j, k), it.next().unwrap()));
            }
        }
    }
    let mut blue = vec![false; expected];
    for ((i, j, k), color) in lex {
        blue[crate::model::triple_index(i as usize - 1, j as usize - 1, k as usize - 1)] =
            color == Color::Blue;
    }
    Ok(TripleColoring::from_blue_bits(n, blue))
}

pub fn parse_labels(text: &str) -> Result<PairLabeling, ParseError> {
    let (tag, nums, mut lines) = header_fields(text)?;
    if tag != "LAB" || nums.len() != 2 || nums[0] == 0 || nums[1] == 0 {
        return Err(ParseError::BadHeader(text.lines().next().unwrap_or("").into()));
    }
    let (n, n_colors) = (nums[0], nums[1]);
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(n as usize - 1);
    for i in 1..n {
        let lineno = i as usize + 1;
        let expected = (n - i) as usize;
        let row = lines.next().ok_or(ParseError::WrongCount {
            line: lineno,
            expected,
            found: 0,
        })?;
        let mut vals = Vec::with_capacity(expected);
        for tok in row.split_whitespace() {
            let label: u32 = tok.parse().map_err(|_| ParseError::InvalidSymbol {
                line: lineno,
                symbol: tok.chars().next().unwrap_or(' '),
            })?;
            if label == 0 || label > n_colors {
                return Err(ParseError::LabelOutOfRange {
                    line: lineno,
                    label,
                    n_colors,
                });
            }
            vals.push(label);
        }
        if vals.len() != expected {
            return Err(ParseError::WrongCount {
                line: lineno,
                expected,
                found: vals.len(),
            });
        }
        rows.push(vals);
    }
    if lines.any(|l| !l.trim().is_empty()) {
        return Err(ParseError::TrailingContent);
    }
    Ok(PairLabeling::from_fn(n, n_colors, |i, j| {
        rows[i as usize - 1][(j - i) as usize - 1]
    })
    .expect("labels already validated"))
}

/// Parses any of the three formats, dispatching on the header tag.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let tag = text.split_whitespace().next().unwrap_or("");
    match tag {
        "ORC2" => Ok(Instance::Pairs(parse_two(text)?)),
        "ORC3" => Ok(Instance::Triples(parse_three(text)?)),
        "LAB" => Ok(Instance::Labels(parse_labels(text)?)),
        other => Err(ParseError::BadHeader(other.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_fixed_encodings() {
        let all_red = TwoColoring::build(3, &[]).unwrap();
        assert_eq!(serialize_two(&all_red), "ORC2 3\nRR\nR\n");
        assert_eq!(parse_two("ORC2 3\nRR\nR\n").unwrap(), all_red);

        let l = PairLabeling::from_fn(3, 2, |_, _| 1).unwrap();
        assert_eq!(serialize_labels(&l), "LAB 3 2\n1 1\n1\n");
        assert_eq!(parse_labels("LAB 3 2\n1 1\n1\n").unwrap(), l);
    }

    #[test]
    fn invalid_symbol_is_rejected() {
        assert_eq!(
            parse_two("ORC2 3\nRX\nR\n"),
            Err(ParseError::InvalidSymbol { line: 2, symbol: 'X' })
        );
    }

    #[test]
    fn wrong_row_length_is_rejected() {
        assert!(matches!(
            parse_two("ORC2 3\nR\nR\n"),
            Err(ParseError::WrongCount { line: 2, .. })
        ));
    }

    #[test]
    fn orc3_wraps_at_80() {
        let c = TripleColoring::from_fn(12, |i, j, k| {
            if (i + j + k) % 2 == 0 {
                Color::Blue
            } else {
                Color::Red
            }
        })
        .unwrap();
        let text = serialize_three(&c);
        assert!(text.lines().skip(1).all(|l| l.len() <= 80));
        assert_eq!(parse_three(&text).unwrap(), c);
    }

    #[test]
    fn labels_out_of_range_rejected() {
        assert!(matches!(
            parse_labels("LAB 3 2\n1 3\n1\n"),
            Err(ParseError::LabelOutOfRange { label: 3, .. })
        ));
    }

    #[test]
    fn instance_dispatch() {
        assert!(matches!(parse_instance("ORC2 2\nB\n"), Ok(Instance::Pairs(_))));
        assert!(matches!(parse_instance("LAB 2 1\n1\n"), Ok(Instance::Labels(_))));
        assert!(parse_instance("XYZ 3\n").is_err());
    }
}
