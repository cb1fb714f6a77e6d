//! Structured-text import/export of character tables and class functions.
//!
//! Table format:
//! ```text
//! group <kind> <params...>
//! class <id> <size>
//! ...
//! chi <label> <degree>
//! <re> <im>        (one line per class)
//! ...
//! ```
//!
//! Class-function format:
//! ```text
//! group <kind> <params...>
//! classfn <label>
//! <re> <im>        (one line per class)
//! ```
//!
//! Floats are rendered with Rust's shortest round-trip formatting, so an
//! export/import/export cycle is byte-stable.

use std::fmt::Write as _;
use std::sync::Arc;

use num_complex::Complex64;

use super::classfn::ClassFunction;
use super::table::{character_table, CharacterTable};
use super::FiniteGroup;
use crate::error::{Error, Result};

pub fn write_table(t: &CharacterTable) -> String {
    let mut s = String::new();
    writeln!(s, "group {}", t.group.kind_string()).unwrap();
    for (i, c) in t.group.classes().iter().enumerate() {
        writeln!(s, "class {i} {}", c.size).unwrap();
    }
    for (chi, row) in t.chars.iter().enumerate() {
        writeln!(s, "chi {} {}", t.labels[chi], t.degrees[chi]).unwrap();
        for z in row {
            writeln!(s, "{} {}", z.re, z.im).unwrap();
        }
    }
    s
}

pub fn write_classfn(f: &ClassFunction, label: &str) -> String {
    let mut s = String::new();
    writeln!(s, "group {}", f.table.group.kind_string()).unwrap();
    writeln!(s, "classfn {label}").unwrap();
    for z in &f.values {
        writeln!(s, "{} {}", z.re, z.im).unwrap();
    }
    s
}

/// Rebuild a structured group from its `group <kind> <params>` header words.
pub fn group_from_header(words: &[&str]) -> Result<Arc<FiniteGroup>> {
    let parse =
        |w: &str| w.parse::<u64>().map_err(|_| Error::Parse(format!("bad integer '{w}'")));
    match words {
        ["cyclic", n] => FiniteGroup::cyclic(parse(n)?),
        ["abelian", rest @ ..] if !rest.is_empty() => {
            let f: Result<Vec<u64>> = rest.iter().map(|w| parse(w)).collect();
            FiniteGroup::abelian(f?)
        }
        ["dihedral", n] => FiniteGroup::dihedral(parse(n)?),
        ["affine", p] => FiniteGroup::affine(parse(p)?),
        ["symmetric", n] => FiniteGroup::symmetric(parse(n)? as u32),
        _ => Err(Error::Parse(format!(
            "unsupported group header: {}",
            words.join(" ")
        ))),
    }
}

fn parse_complex_line(line: &str) -> Result<Complex64> {
    let mut it = line.split_whitespace();
    let re = it
        .next()
        .ok_or_else(|| Error::Parse("missing real part".into()))?
        .parse::<f64>()
        .map_err(|e| Error::Parse(format!("bad real part: {e}")))?;
    let im = it
        .next()
        .ok_or_else(|| Error::Parse("missing imaginary part".into()))?
        .parse::<f64>()
        .map_err(|e| Error::Parse(format!("bad imaginary part: {e}")))?;
    Ok(Complex64::new(re, im))
}

pub fn parse_table(text: &str) -> Result<Arc<CharacterTable>> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty file".into()))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    if words.first() != Some(&"group") {
        return Err(Error::Parse("expected 'group' header".into()));
    }
    let group = group_from_header(&words[1..])?;
    let nclass = group.class_count();
    // class lines
    let mut rest: Vec<&str> = lines.collect();
    rest.reverse(); // use as a stack
    for i in 0..nclass {
        let line = rest.pop().ok_or_else(|| Error::Parse("missing class line".into()))?;
        let w: Vec<&str> = line.split_whitespace().collect();
        if w.len() != 3 || w[0] != "class" {
            return Err(Error::Parse(format!("bad class line: {line}")));
        }
        let id: usize = w[1].parse().map_err(|_| Error::Parse("bad class id".into()))?;
        let size: u64 = w[2].parse().map_err(|_| Error::Parse("bad class size".into()))?;
        if id != i || size != group.classes()[i].size {
            return Err(Error::Parse(format!(
                "class line {line} disagrees with the generated group"
            )));
        }
    }
    let mut chars = Vec::new();
    let mut degrees = Vec::new();
    let mut labels = Vec::new();
    while let Some(line) = rest.pop() {
        let w: Vec<&str> = line.split_whitespace().collect();
        if w.len() != 3 || w[0] != "chi" {
            return Err(Error::Parse(format!("expected 'chi' line, got: {line}")));
        }
        labels.push(w[1].to_string());
        degrees.push(
            w[2].parse::<u64>()
                .map_err(|_| Error::Parse("bad degree".into()))?,
        );
        let mut row = Vec::with_capacity(nclass);
        for _ in 0..nclass {
            let vline =
                rest.pop().ok_or_else(|| Error::Parse("missing value line".into()))?;
            row.push(parse_complex_line(vline)?);
        }
        chars.push(row);
    }
    if chars.len() != nclass {
        return Err(Error::Parse(format!(
            "expected {nclass} characters, found {}",
            chars.len()
        )));
    }
    let table = CharacterTable { group, chars, degrees, labels };
    table.validate()?;
    Ok(Arc::new(table))
}

pub fn parse_classfn(text: &str) -> Result<(ClassFunction, String)> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty file".into()))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    if words.first() != Some(&"group") {
        return Err(Error::Parse("expected 'group' header".into()));
    }
    let group = group_from_header(&words[1..])?;
    let table = character_table(&group)?;
    let tag_line = lines.next().ok_or_else(|| Error::Parse("missing classfn line".into()))?;
    let w: Vec<&str> = tag_line.split_whitespace().collect();
    if w.len() != 2 || w[0] != "classfn" {
        return Err(Error::Parse(format!("bad classfn line: {tag_line}")));
    }
    let label = w[1].to_string();
    let values: Result<Vec<Complex64>> = lines.map(parse_complex_line).collect();
    let values = values?;
    if values.len() != group.class_count() {
        return Err(Error::Parse(format!(
            "expected {} values, found {}",
            group.class_count(),
            values.len()
        )));
    }
    Ok((ClassFunction::from_values(&table, values)?, label))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_round_trip_bit_stable() {
        for g in [
            FiniteGroup::dihedral(5).unwrap(),
            FiniteGroup::affine(5).unwrap(),
            FiniteGroup::cyclic(8).unwrap(),
            FiniteGroup::symmetric(4).unwrap(),
        ] {
            let t = character_table(&g).unwrap();
            let s1 = write_table(&t);
            let t2 = parse_table(&s1).unwrap();
            let s2 = write_table(&t2);
            assert_eq!(s1, s2);
        }
    }

    #[test]
    fn classfn_round_trip() {
        let g = FiniteGroup::dihedral(7).unwrap();
        let t = character_table(&g).unwrap();
        let f = ClassFunction::from_real(&t, &[3.0, -0.5, 0.125, 1.0, 0.0]).unwrap();
        let s1 = write_classfn(&f, "test");
        let (f2, label) = parse_classfn(&s1).unwrap();
        assert_eq!(label, "test");
        assert_eq!(s1, write_classfn(&f2, "test"));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_table("nonsense").is_err());
        assert!(parse_table("group dihedral 4").is_err()); // even n
        assert!(parse_classfn("group cyclic 3\nclassfn x\n1 0\n").is_err()); // too few values
    }
}
