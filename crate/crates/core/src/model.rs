//! Model files: an atom declaration followed by named matrices and vectors.
//!
//! ```text
//! # comments run to end of line
//! atoms: 1 2 3
//! matrix A 2x2
//! {1}   {2,3}
//! {2,3} {1}
//! vector b 2
//! {1} {2,3}
//! ```

use std::fmt;

use crate::algebra::{syntax, Algebra};
use crate::bmatrix::BMatrix;
use crate::bvec::BVec;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Matrix(BMatrix),
    Vector(BVec),
}

#[derive(Clone, Debug)]
pub struct ModelFile {
    algebra: Algebra,
    items: Vec<(String, Item)>,
}

impl ModelFile {
    pub fn new(algebra: Algebra) -> Self {
        ModelFile {
            algebra,
            items: Vec::new(),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn items(&self) -> &[(String, Item)] {
        &self.items
    }

    fn check_name(&self, name: &str) -> Result<()> {
        if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '#') {
            return Err(Error::precondition(format!("invalid item name `{name}`")));
        }
        if self.get(name).is_some() {
            return Err(Error::precondition(format!("duplicate item name `{name}`")));
        }
        Ok(())
    }

    pub fn push_matrix(&mut self, name: &str, m: BMatrix) -> Result<()> {
        self.check_name(name)?;
        self.algebra.check_same(m.algebra())?;
        if m.rows() == 0 || m.cols() == 0 {
            return Err(Error::shape("model matrices must be non-empty"));
        }
        self.items.push((name.to_string(), Item::Matrix(m)));
        Ok(())
    }

    pub fn push_vector(&mut self, name: &str, v: BVec) -> Result<()> {
        self.check_name(name)?;
        self.algebra.check_same(v.algebra())?;
        self.items.push((name.to_string(), Item::Vector(v)));
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Item> {
        self.items.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    pub fn matrix(&self, name: &str) -> Result<&BMatrix> {
        match self.get(name) {
            Some(Item::Matrix(m)) => Ok(m),
            Some(Item::Vector(_)) => Err(Error::precondition(format!("`{name}` is a vector, not a matrix"))),
            None => Err(Error::precondition(format!("no matrix named `{name}`"))),
        }
    }

    pub fn vector(&self, name: &str) -> Result<&BVec> {
        match self.get(name) {
            Some(Item::Vector(v)) => Ok(v),
            Some(Item::Matrix(_)) => Err(Error::precondition(format!("`{name}` is a matrix, not a vector"))),
            None => Err(Error::precondition(format!("no vector named `{name}`"))),
        }
    }

    pub fn matrices(&self) -> impl Iterator<Item = (&str, &BMatrix)> {
        self.items.iter().filter_map(|(n, i)| match i {
            Item::Matrix(m) => Some((n.as_str(), m)),
            Item::Vector(_) => None,
        })
    }

    pub fn parse(text: &str) -> Result<ModelFile> {
        Parser::new(text).parse()
    }
}

impl fmt::Display for ModelFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "atoms: {}", self.algebra.atom_names().join(" "))?;
        for (name, item) in &self.items {
            match item {
                Item::Matrix(m) => writeln!(f, "matrix {name} {}x{}\n{m}", m.rows(), m.cols())?,
                Item::Vector(v) => {
                    let entries: Vec<String> = v.entries().iter().map(|e| e.to_string()).collect();
                    writeln!(f, "vector {name} {}\n{}", v.len(), entries.join(" "))?
                }
            }
        }
        Ok(())
    }
}

/// A line with its comment removed, 1-based number kept for errors.
struct Line<'a> {
    number: usize,
    text: &'a str,
}

struct Parser<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
}

fn relocate(err: Error, line: usize, col_offset: usize) -> Error {
    match err {
        Error::Syntax { column, message, .. } => Error::Syntax {
            line,
            column: column + col_offset,
            message,
        },
        other => other,
    }
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| Line {
                number: i + 1,
                text: l.split('#').next().unwrap_or(""),
            })
            .filter(|l| !l.text.trim().is_empty())
            .collect();
        Parser { lines, pos: 0 }
    }

    fn next_line(&mut self, what: &str, after: usize) -> Result<&Line<'a>> {
        let line = self
            .lines
            .get(self.pos)
            .ok_or_else(|| syntax(after + 1, 1, &format!("unexpected end of file, expected {what}")))?;
        self.pos += 1;
        Ok(line)
    }

    fn parse(mut self) -> Result<ModelFile> {
        let first = self.next_line("`atoms:` declaration", 0)?;
        let decl = first.text.trim_start();
        let names = decl
            .strip_prefix("atoms:")
            .ok_or_else(|| syntax(first.number, 1 + first.text.len() - decl.len(), "expected `atoms:` declaration"))?;
        let algebra = Algebra::new(names.split_whitespace()).map_err(|e| match e {
            Error::InvalidAlgebra(m) => syntax(first.number, 1, &m),
            other => other,
        })?;
        let mut model = ModelFile::new(algebra);
        while self.pos < self.lines.len() {
            let header = &self.lines[self.pos];
            self.pos += 1;
            let number = header.number;
            let words: Vec<&str> = header.text.split_whitespace().collect();
            let col = 1 + header.text.len() - header.text.trim_start().len();
            match words.as_slice() {
                ["matrix", name, shape] => {
                    let (n, m) = parse_shape(shape).ok_or_else(|| {
                        syntax(number, col, &format!("bad shape `{shape}`, expected <rows>x<cols>"))
                    })?;
                    let mat = self.matrix_body(&model.algebra, n, m, number)?;
                    model.push_matrix(name, mat).map_err(|e| at_line(e, number))?;
                }
                ["vector", name, len] => {
                    let n = len
                        .parse::<usize>()
                        .ok()
                        .filter(|&n| n > 0)
                        .ok_or_else(|| syntax(number, col, &format!("bad vector length `{len}`")))?;
                    let v = self.vector_body(&model.algebra, n, number)?;
                    model.push_vector(name, v).map_err(|e| at_line(e, number))?;
                }
                _ => {
                    return Err(syntax(
                        number,
                        col,
                        "expected `matrix <name> <rows>x<cols>` or `vector <name> <length>`",
                    ))
                }
            }
        }
        Ok(model)
    }

    fn literals(&self, algebra: &Algebra, line: &Line<'_>) -> Result<Vec<crate::Elem>> {
        let mut out = Vec::new();
        let mut offset = 0;
        while !line.text[offset..].trim().is_empty() {
            let (e, used) = algebra
                .parse_elem_prefix(&line.text[offset..])
                .map_err(|err| relocate(err, line.number, offset))?;
            out.push(e);
            offset += used;
        }
        Ok(out)
    }

    fn matrix_body(&mut self, algebra: &Algebra, n: usize, m: usize, header: usize) -> Result<BMatrix> {
        let mut rows = Vec::with_capacity(n);
        let mut last = header;
        for _ in 0..n {
            let line = self.next_line("matrix row", last)?;
            let (number, text) = (line.number, line.text);
            let row = self.literals(algebra, &Line { number, text })?;
            if row.len() != m {
                return Err(Error::shape(format!(
                    "line {number}: expected {m} entries, found {}",
                    row.len()
                )));
            }
            rows.push(row);
            last = number;
        }
        BMatrix::from_rows(algebra, rows)
    }

    fn vector_body(&mut self, algebra: &Algebra, n: usize, header: usize) -> Result<BVec> {
        let mut entries = Vec::with_capacity(n);
        let mut last = header;
        while entries.len() < n {
            let line = self.next_line("vector entries", last)?;
            let (number, text) = (line.number, line.text);
            let got = self.literals(algebra, &Line { number, text })?;
            if entries.len() + got.len() > n {
                return Err(Error::shape(format!(
                    "line {number}: vector of length {n} has too many entries"
                )));
            }
            entries.extend(got);
            last = number;
        }
        BVec::from_elems(entries)
    }
}

fn parse_shape(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once('x')?;
    let (n, m) = (a.parse().ok()?, b.parse().ok()?);
    (n > 0 && m > 0).then_some((n, m))
}

fn at_line(err: Error, line: usize) -> Error {
    match err {
        Error::Precondition(m) => syntax(line, 1, &m),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_model() {
        let m = ModelFile::parse("atoms: 1 2\nvector v 2\n{1} {2}\n").unwrap();
        assert!(m.vector("v").unwrap().is_stochastic());
        assert!(m.matrix("v").is_err());
        assert!(m.vector("w").is_err());
    }

    #[test]
    fn comments_and_layout() {
        let text = "# header\natoms: a b c  # three atoms\n\nmatrix M 2x2\n{a} {b,c}\n{b,c} {a} # row 2\nvector v 3\n{a}\n{b} {c}\n";
        let m = ModelFile::parse(text).unwrap();
        assert!(m.matrix("M").unwrap().is_unitary());
        assert_eq!(m.vector("v").unwrap().to_string(), "({a},{b},{c})");
    }

    #[test]
    fn round_trip() {
        let text = "atoms: 1 2 3\nmatrix A 2x3\n{1} * {}\n{2,3} {} {1,2}\nvector b 2\n{3} *\n";
        let m = ModelFile::parse(text).unwrap();
        let again = ModelFile::parse(&m.to_string()).unwrap();
        assert_eq!(again.to_string(), m.to_string());
        let (a, b) = (m.matrix("A").unwrap(), again.matrix("A").unwrap());
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(a.get(i, j).atom_indices(), b.get(i, j).atom_indices());
            }
        }
    }

    #[test]
    fn errors_carry_positions() {
        let err = ModelFile::parse("atoms: 1 2\nvector v 2\n{1,} {2}\n").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 3,
                column: 4,
                message: "empty atom name in element literal".into()
            }
        );
        let err = ModelFile::parse("atoms: 1 2\nmatrix A 1x2\n{1}  {9}\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, column: 7, .. }), "{err}");
        assert!(matches!(
            ModelFile::parse("matrix A 1x1\n*\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            ModelFile::parse("atoms: 1\nmatrix A 2x2\n* {}\n"),
            Err(Error::Syntax { line: 4, .. })
        ));
        assert!(matches!(
            ModelFile::parse("atoms: 1\nmatrix A 1x2\n* {} *\n"),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            ModelFile::parse("atoms: 1\nvector v 1\n*\nvector v 1\n*\n"),
            Err(Error::Syntax { line: 4, .. })
        ));
        assert!(matches!(ModelFile::parse("atoms: 1 1\n"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(
            ModelFile::parse("atoms: 1\nmatrix A 0x2\n"),
            Err(Error::Syntax { line: 2, .. })
        ));
    }
}
