//! The line-based algebra file format and Graphviz export.
//!
//! ```text
//! # comments and blank lines are ignored
//! kind pointed              # lattice | pointed | rl
//! size 5
//! names: bot a b c top      # optional element names
//! covers: 0 1, 0 2, 2 3     # or `leq:` with arbitrary order pairs
//! one a                     # pointed/rl only; index or name
//! mul:                      # rl only: size rows of size entries
//! 0 0 0 0 0
//! ...
//! ```
//!
//! Elements are written as indices or, when a `names:` line is present, as
//! names. The parser validates the algebra completely before returning it.

use crate::bitset::Elem;
use crate::order::{FiniteLattice, LatticeError, PointedLattice, RelationKind};
use crate::rl::{FiniteRL, RlError};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Rl(#[from] RlError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Any of the three algebra kinds the format can carry.
#[derive(Debug, Clone)]
pub enum Algebra {
    Lattice(FiniteLattice),
    Pointed(PointedLattice),
    Rl(FiniteRL),
}

impl Algebra {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Algebra::Lattice(_) => "lattice",
            Algebra::Pointed(_) => "pointed",
            Algebra::Rl(_) => "rl",
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Algebra::Lattice(l) => l.size(),
            Algebra::Pointed(p) => p.size(),
            Algebra::Rl(r) => r.size(),
        }
    }

    pub fn lattice(&self) -> &FiniteLattice {
        match self {
            Algebra::Lattice(l) => l,
            Algebra::Pointed(p) => p.lattice(),
            Algebra::Rl(r) => r.base().lattice(),
        }
    }

    pub fn unit(&self) -> Option<Elem> {
        match self {
            Algebra::Lattice(_) => None,
            Algebra::Pointed(p) => Some(p.unit()),
            Algebra::Rl(r) => Some(r.unit()),
        }
    }

    /// The pointed view, if the file carried a unit.
    pub fn as_pointed(&self) -> Option<&PointedLattice> {
        match self {
            Algebra::Lattice(_) => None,
            Algebra::Pointed(p) => Some(p),
            Algebra::Rl(r) => Some(r.base()),
        }
    }

    pub fn as_rl(&self) -> Option<&FiniteRL> {
        match self {
            Algebra::Rl(r) => Some(r),
            _ => None,
        }
    }
}

/// A parsed algebra together with its optional element names.
#[derive(Debug, Clone)]
pub struct AlgebraFile {
    pub algebra: Algebra,
    pub names: Option<Vec<String>>,
}

impl AlgebraFile {
    pub fn plain(algebra: Algebra) -> Self {
        AlgebraFile {
            algebra,
            names: None,
        }
    }

    /// The display name of an element: its name if present, else its index.
    pub fn elem_name(&self, e: Elem) -> String {
        match &self.names {
            Some(ns) if e < ns.len() => ns[e].clone(),
            _ => e.to_string(),
        }
    }
}

fn parse_elem(tok: &str, n: usize, names: &Option<Vec<String>>, line: usize) -> Result<Elem, FileError> {
    if let Ok(i) = tok.parse::<usize>() {
        if i < n {
            return Ok(i);
        }
        return Err(FileError::Parse {
            line,
            msg: format!("element index {i} out of range for size {n}"),
        });
    }
    if let Some(ns) = names {
        if let Some(i) = ns.iter().position(|s| s == tok) {
            return Ok(i);
        }
    }
    Err(FileError::Parse {
        line,
        msg: format!("unknown element `{tok}`"),
    })
}

/// Parses the textual format into a fully validated algebra.
pub fn parse_algebra(text: &str) -> Result<AlgebraFile, FileError> {
    let mut kind: Option<(String, usize)> = None;
    let mut size: Option<(usize, usize)> = None;
    let mut names: Option<Vec<String>> = None;
    let mut relation: Option<(RelationKind, Vec<(String, String)>, usize)> = None;
    let mut one: Option<(String, usize)> = None;
    let mut mul_rows: Vec<(Vec<String>, usize)> = Vec::new();
    let mut in_mul = false;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if in_mul {
            mul_rows.push((line.split_whitespace().map(String::from).collect(), lineno));
            continue;
        }
        let (head, rest) = match line.split_once([' ', ':']) {
            Some((h, r)) => (h.trim(), r.trim_start_matches(':').trim()),
            None => (line, ""),
        };
        match head {
            "kind" => kind = Some((rest.to_string(), lineno)),
            "size" => {
                let n = rest.parse::<usize>().map_err(|_| FileError::Parse {
                    line: lineno,
                    msg: format!("bad size `{rest}`"),
                })?;
                size = Some((n, lineno));
            }
            "names" => {
                names = Some(rest.split_whitespace().map(String::from).collect());
            }
            "covers" | "leq" => {
                let rel_kind = if head == "covers" {
                    RelationKind::Covers
                } else {
                    RelationKind::Leq
                };
                let mut pairs = Vec::new();
                for chunk in rest.split(',') {
                    let chunk = chunk.trim();
                    if chunk.is_empty() {
                        continue;
                    }
                    let mut it = chunk.split_whitespace();
                    match (it.next(), it.next(), it.next()) {
                        (Some(a), Some(b), None) => pairs.push((a.to_string(), b.to_string())),
                        _ => {
                            return Err(FileError::Parse {
                                line: lineno,
                                msg: format!("expected `a b` pair, got `{chunk}`"),
                            })
                        }
                    }
                }
                relation = Some((rel_kind, pairs, lineno));
            }
            "one" => one = Some((rest.to_string(), lineno)),
            "mul" => in_mul = true,
            other => {
                return Err(FileError::Parse {
                    line: lineno,
                    msg: format!("unknown directive `{other}`"),
                })
            }
        }
    }

    let (kind, kind_line) = kind.ok_or(FileError::Parse {
        line: 1,
        msg: "missing `kind` line".into(),
    })?;
    let (n, _) = size.ok_or(FileError::Parse {
        line: kind_line,
        msg: "missing `size` line".into(),
    })?;
    if let Some(ns) = &names {
        if ns.len() != n {
            return Err(FileError::Parse {
                line: 1,
                msg: format!("names lists {} elements, size is {n}", ns.len()),
            });
        }
    }
    let (rel_kind, raw_pairs, rel_line) = relation.ok_or(FileError::Parse {
        line: kind_line,
        msg: "missing `covers:` or `leq:` line".into(),
    })?;
    let mut pairs = Vec::with_capacity(raw_pairs.len());
    for (a, b) in &raw_pairs {
        pairs.push((
            parse_elem(a, n, &names, rel_line)?,
            parse_elem(b, n, &names, rel_line)?,
        ));
    }
    let lattice = FiniteLattice::from_relation(n, &pairs, rel_kind)?;

    let unit = match &one {
        Some((tok, line)) => Some(parse_elem(tok, n, &names, *line)?),
        None => None,
    };

    let algebra = match kind.as_str() {
        "lattice" => Algebra::Lattice(lattice),
        "pointed" => {
            let u = unit.ok_or(FileError::Parse {
                line: kind_line,
                msg: "pointed algebras need a `one` line".into(),
            })?;
            Algebra::Pointed(PointedLattice::new(lattice, u)?)
        }
        "rl" => {
            let u = unit.ok_or(FileError::Parse {
                line: kind_line,
                msg: "rl algebras need a `one` line".into(),
            })?;
            if mul_rows.len() != n {
                return Err(FileError::Parse {
                    line: mul_rows.last().map_or(kind_line, |(_, l)| *l),
                    msg: format!("mul table has {} rows, expected {n}", mul_rows.len()),
                });
            }
            let mut mul = Vec::with_capacity(n * n);
            for (row, line) in &mul_rows {
                if row.len() != n {
                    return Err(FileError::Parse {
                        line: *line,
                        msg: format!("mul row has {} entries, expected {n}", row.len()),
                    });
                }
                for tok in row {
                    mul.push(parse_elem(tok, n, &names, *line)?);
                }
            }
            let base = PointedLattice::new(lattice, u)?;
            Algebra::Rl(FiniteRL::new(base, mul)?)
        }
        other => {
            return Err(FileError::Parse {
                line: kind_line,
                msg: format!("unknown kind `{other}`"),
            })
        }
    };
    Ok(AlgebraFile { algebra, names })
}

pub fn read_algebra(path: &Path) -> Result<AlgebraFile, FileError> {
    parse_algebra(&std::fs::read_to_string(path)?)
}

/// Canonical rendering: kind, size, names, sorted covers, unit, mul rows.
pub fn render_algebra(file: &AlgebraFile) -> String {
    let alg = &file.algebra;
    let l = alg.lattice();
    let mut out = String::new();
    out.push_str(&format!("kind {}\n", alg.kind_name()));
    out.push_str(&format!("size {}\n", l.size()));
    if let Some(ns) = &file.names {
        out.push_str(&format!("names: {}\n", ns.join(" ")));
    }
    let covers: Vec<String> = l
        .covers()
        .iter()
        .map(|&(a, b)| format!("{} {}", file.elem_name(a), file.elem_name(b)))
        .collect();
    out.push_str(&format!("covers: {}\n", covers.join(", ")));
    if let Some(u) = alg.unit() {
        out.push_str(&format!("one {}\n", file.elem_name(u)));
    }
    if let Algebra::Rl(rl) = alg {
        out.push_str("mul:\n");
        for a in rl.elems() {
            let row: Vec<String> = rl.elems().map(|b| file.elem_name(rl.mul(a, b))).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn write_algebra(path: &Path, file: &AlgebraFile) -> Result<(), FileError> {
    std::fs::write(path, render_algebra(file))?;
    Ok(())
}

/// Graphviz rendering of the cover relation, bottom-up, with the unit node
/// double-circled.
pub fn export_dot(file: &AlgebraFile) -> String {
    let alg = &file.algebra;
    let l = alg.lattice();
    let unit = alg.unit();
    let mut out = String::new();
    out.push_str("digraph algebra {\n  rankdir=BT;\n  node [shape=circle];\n");
    for e in l.elems() {
        let shape = if Some(e) == unit {
            " shape=doublecircle"
        } else {
            ""
        };
        out.push_str(&format!("  n{e} [label=\"{}\"{shape}];\n", file.elem_name(e)));
    }
    for (a, b) in l.covers() {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures;

    #[test]
    fn parse_pointed_two_chain() {
        let text = "kind pointed\nsize 2\ncovers: 0 1\none 1\n";
        let file = parse_algebra(text).unwrap();
        let p = file.algebra.as_pointed().unwrap();
        assert_eq!(p.unit(), 1);
        assert_eq!(p.top(), 1);
    }

    #[test]
    fn parse_with_names_and_comments() {
        let text = "# pentagon, pointed at the short side's atom\n\
                    kind pointed\n\
                    size 5\n\
                    names: bot a b c top\n\
                    covers: bot a, a top, bot b, b c, c top\n\
                    one: a\n";
        let file = parse_algebra(text).unwrap();
        let p = file.algebra.as_pointed().unwrap();
        assert!(p
            .isomorphism_to(&fixtures::n5_left_pointed())
            .is_some());
    }

    #[test]
    fn parse_rl_file() {
        let text = "kind rl\nsize 2\ncovers: 0 1\none 1\nmul:\n0 0\n0 1\n";
        let file = parse_algebra(text).unwrap();
        let rl = file.algebra.as_rl().unwrap();
        assert_eq!(rl.mul(0, 0), 0);
        assert!(rl.residuation_laws_hold());
    }

    #[test]
    fn bad_inputs_report_lines() {
        let short_row = "kind rl\nsize 2\ncovers: 0 1\none 1\nmul:\n0 0\n0\n";
        match parse_algebra(short_row) {
            Err(FileError::Parse { line, .. }) => assert_eq!(line, 7),
            other => panic!("expected parse error, got {other:?}"),
        }
        let bad = "kind pointed\nsize 2\ncovers: 0 5\none 1\n";
        assert!(matches!(parse_algebra(bad), Err(FileError::Parse { .. })));
        let invalid = "kind pointed\nsize 4\ncovers: 0 2, 0 3, 1 2, 1 3\none 0\n";
        assert!(matches!(
            parse_algebra(invalid),
            Err(FileError::Lattice(LatticeError::NotALattice { .. }))
        ));
    }

    #[test]
    fn render_parse_roundtrip() {
        for p in [
            fixtures::n5_left_pointed(),
            fixtures::m3_plus_one(),
            fixtures::chain(4, 2),
        ] {
            let file = AlgebraFile::plain(Algebra::Pointed(p.clone()));
            let text = render_algebra(&file);
            let back = parse_algebra(&text).unwrap();
            assert!(back
                .algebra
                .as_pointed()
                .unwrap()
                .isomorphism_to(&p)
                .is_some());
        }
        let rl = crate::rl::drastic_crl(&fixtures::chain(4, 2)).unwrap();
        let file = AlgebraFile::plain(Algebra::Rl(rl.clone()));
        let back = parse_algebra(&render_algebra(&file)).unwrap();
        assert_eq!(back.algebra.as_rl().unwrap().mul_table(), rl.mul_table());
    }

    #[test]
    fn dot_export_shape() {
        let file = AlgebraFile::plain(Algebra::Pointed(fixtures::n5_left_pointed()));
        let dot = export_dot(&file);
        assert_eq!(dot.matches("->").count(), 5);
        assert_eq!(dot.matches("doublecircle").count(), 1);
        let two = AlgebraFile::plain(Algebra::Pointed(fixtures::chain(2, 1)));
        let dot = export_dot(&two);
        assert_eq!(dot.matches("->").count(), 1);
    }
}
