//! The algebra file format: a line-oriented, human-writable schema that
//! round-trips canonically.
//!
//! ```text
//! # comments start with '#'
//! format 1
//! name Heis
//! dim 3
//! basis X1 X2 X3
//! bracket X1 X2 = X3            # terms:  c*Xk | Xk | -Xk, joined by '+'
//! derivation alpha              # rows of the matrix follow;
//! row 1 0 0                     # column c is the image of basis vector c
//! row 0 1 0
//! row 0 0 2
//! end
//! presentation h=FILE derivation=NAME   # optional semidirect split
//! ```
//!
//! Unknown keys are rejected. Rationals are written `p/q` or `p`.

use lieclass_core::lie::{Derivation, LieAlgebra};
use lieclass_core::matrix::Matrix;
use lieclass_core::rat::{fmt_rat, parse_rat, Rat};
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, col {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub struct PresentationRef {
    pub h_file: String,
    pub derivation: String,
}

#[derive(Debug)]
pub struct AlgebraFile {
    pub algebra: LieAlgebra,
    pub derivations: BTreeMap<String, Derivation>,
    pub presentation: Option<PresentationRef>,
}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        message: message.into(),
    }
}

/// Column (1-based) of the `n`-th whitespace-separated token of `line`.
fn token_col(line: &str, n: usize) -> usize {
    let mut count = 0;
    let mut in_token = false;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            in_token = false;
        } else if !in_token {
            if count == n {
                return i + 1;
            }
            count += 1;
            in_token = true;
        }
    }
    line.len() + 1
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut name: Option<String> = None;
    let mut dim: Option<usize> = None;
    let mut basis: Option<Vec<String>> = None;
    let mut format_seen = false;
    let mut brackets: Vec<(usize, usize, Vec<(usize, Rat)>)> = Vec::new();
    let mut derivations: Vec<(String, Vec<Vec<Rat>>, usize)> = Vec::new();
    let mut open_derivation: Option<(String, Vec<Vec<Rat>>, usize)> = None;
    let mut presentation: Option<PresentationRef> = None;

    let label_index = |basis: &Option<Vec<String>>, tok: &str, ln: usize, cl: usize| {
        let b = basis
            .as_ref()
            .ok_or_else(|| err(ln, cl, "basis must be declared before brackets"))?;
        b.iter()
            .position(|l| l == tok)
            .ok_or_else(|| err(ln, cl, format!("unknown basis label `{tok}`")))
    };

    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let key = tokens[0];
        if let Some((dname, rows, started_at)) = open_derivation.as_mut() {
            match key {
                "row" => {
                    let mut row = Vec::new();
                    for (tn, tok) in tokens[1..].iter().enumerate() {
                        let r = parse_rat(tok)
                            .map_err(|m| err(ln, token_col(raw, tn + 1), m))?;
                        row.push(r);
                    }
                    let d = dim.ok_or_else(|| err(ln, 1, "dim must precede derivations"))?;
                    if row.len() != d {
                        return Err(err(
                            ln,
                            1,
                            format!("derivation row has {} entries, expected {d}", row.len()),
                        ));
                    }
                    rows.push(row);
                    continue;
                }
                "end" => {
                    let d = dim.unwrap();
                    if rows.len() != d {
                        return Err(err(
                            ln,
                            1,
                            format!(
                                "derivation `{dname}` has {} rows, expected {d}",
                                rows.len()
                            ),
                        ));
                    }
                    let taken = open_derivation.take().unwrap();
                    derivations.push(taken);
                    continue;
                }
                _ => {
                    return Err(err(
                        *started_at,
                        1,
                        format!("derivation `{dname}` not terminated with `end`"),
                    ))
                }
            }
        }
        match key {
            "format" => {
                format_seen = true;
                let v: u32 = tokens
                    .get(1)
                    .ok_or_else(|| err(ln, token_col(raw, 1), "missing format version"))?
                    .parse()
                    .map_err(|_| err(ln, token_col(raw, 1), "bad format version"))?;
                if v != FORMAT_VERSION {
                    return Err(err(ln, token_col(raw, 1), format!("unsupported format {v}")));
                }
            }
            "name" => {
                name = Some(
                    tokens
                        .get(1)
                        .ok_or_else(|| err(ln, token_col(raw, 1), "missing name"))?
                        .to_string(),
                );
            }
            "dim" => {
                dim = Some(
                    tokens
                        .get(1)
                        .ok_or_else(|| err(ln, token_col(raw, 1), "missing dimension"))?
                        .parse()
                        .map_err(|_| err(ln, token_col(raw, 1), "bad dimension"))?,
                );
            }
            "basis" => {
                let labels: Vec<String> = tokens[1..].iter().map(|s| s.to_string()).collect();
                let d = dim.ok_or_else(|| err(ln, 1, "dim must precede basis"))?;
                if labels.len() != d {
                    return Err(err(
                        ln,
                        1,
                        format!("{} basis labels for dimension {d}", labels.len()),
                    ));
                }
                basis = Some(labels);
            }
            "bracket" => {
                // bracket Xi Xj = terms
                if tokens.len() < 5 || tokens[3] != "=" {
                    return Err(err(ln, 1, "expected `bracket Xi Xj = terms`"));
                }
                let i = label_index(&basis, tokens[1], ln, token_col(raw, 1))?;
                let j = label_index(&basis, tokens[2], ln, token_col(raw, 2))?;
                if i >= j {
                    return Err(err(
                        ln,
                        token_col(raw, 1),
                        "brackets must be listed with the lower basis index first",
                    ));
                }
                let rhs = tokens[4..].join(" ");
                let mut terms = Vec::new();
                for part in rhs.split('+') {
                    let part = part.trim();
                    if part.is_empty() {
                        return Err(err(ln, token_col(raw, 4), "empty bracket term"));
                    }
                    let (coeff, label) = match part.split_once('*') {
                        Some((c, l)) => (
                            parse_rat(c).map_err(|m| err(ln, token_col(raw, 4), m))?,
                            l.trim(),
                        ),
                        None => {
                            if let Some(stripped) = part.strip_prefix('-') {
                                (-Rat::one(), stripped.trim())
                            } else {
                                (Rat::one(), part)
                            }
                        }
                    };
                    let k = label_index(&basis, label, ln, token_col(raw, 4))?;
                    terms.push((k, coeff));
                }
                brackets.push((i, j, terms));
            }
            "derivation" => {
                let dname = tokens
                    .get(1)
                    .ok_or_else(|| err(ln, token_col(raw, 1), "missing derivation name"))?
                    .to_string();
                if derivations.iter().any(|(n, _, _)| *n == dname) {
                    return Err(err(ln, token_col(raw, 1), "duplicate derivation name"));
                }
                open_derivation = Some((dname, Vec::new(), ln));
            }
            "presentation" => {
                let mut h_file = None;
                let mut deriv = None;
                for tok in &tokens[1..] {
                    match tok.split_once('=') {
                        Some(("h", v)) => h_file = Some(v.to_string()),
                        Some(("derivation", v)) => deriv = Some(v.to_string()),
                        _ => {
                            return Err(err(
                                ln,
                                1,
                                "presentation takes `h=FILE derivation=NAME`",
                            ))
                        }
                    }
                }
                presentation = Some(PresentationRef {
                    h_file: h_file.ok_or_else(|| err(ln, 1, "presentation missing h="))?,
                    derivation: deriv
                        .ok_or_else(|| err(ln, 1, "presentation missing derivation="))?,
                });
            }
            other => {
                return Err(err(ln, 1, format!("unknown key `{other}`")));
            }
        }
    }
    if let Some((dname, _, started_at)) = open_derivation {
        return Err(err(
            started_at,
            1,
            format!("derivation `{dname}` not terminated with `end`"),
        ));
    }
    if !format_seen {
        return Err(err(1, 1, "missing `format` line"));
    }
    let _ = dim.ok_or_else(|| err(1, 1, "missing `dim`"))?;
    let basis = basis.ok_or_else(|| err(1, 1, "missing `basis`"))?;
    let name = name.unwrap_or_else(|| "unnamed".to_string());
    let algebra = LieAlgebra::new(name, basis, brackets)
        .map_err(|e| err(1, 1, format!("algebra rejected: {e}")))?;
    let mut named = BTreeMap::new();
    for (dname, rows, started_at) in derivations {
        let m = Matrix::from_rows(rows);
        let d = algebra
            .derivation(m)
            .map_err(|e| err(started_at, 1, format!("derivation `{dname}` rejected: {e}")))?;
        named.insert(dname, d);
    }
    Ok(AlgebraFile {
        algebra,
        derivations: named,
        presentation,
    })
}

/// Canonical serialization: parsing then serializing a file reproduces the
/// serializer's output byte for byte.
pub fn serialize_algebra(
    g: &LieAlgebra,
    derivations: &BTreeMap<String, Derivation>,
    presentation: Option<&PresentationRef>,
) -> String {
    let mut out = String::new();
    out.push_str("# lieclass algebra file\n");
    out.push_str("# derivation matrices: column c is the image of basis vector c\n");
    out.push_str(&format!("format {FORMAT_VERSION}\n"));
    out.push_str(&format!("name {}\n", g.name));
    out.push_str(&format!("dim {}\n", g.dim));
    out.push_str(&format!("basis {}\n", g.basis_labels.join(" ")));
    for ((i, j), terms) in g.structure() {
        let rhs: Vec<String> = terms
            .iter()
            .map(|(k, c)| {
                if c.is_one() {
                    g.basis_labels[*k].clone()
                } else {
                    format!("{}*{}", fmt_rat(c), g.basis_labels[*k])
                }
            })
            .collect();
        out.push_str(&format!(
            "bracket {} {} = {}\n",
            g.basis_labels[*i],
            g.basis_labels[*j],
            rhs.join(" + ")
        ));
    }
    for (dname, d) in derivations {
        out.push_str(&format!("derivation {dname}\n"));
        for i in 0..d.matrix.rows {
            let row: Vec<String> = (0..d.matrix.cols)
                .map(|j| fmt_rat(d.matrix.at(i, j)))
                .collect();
            out.push_str(&format!("row {}\n", row.join(" ")));
        }
        out.push_str("end\n");
    }
    if let Some(p) = presentation {
        out.push_str(&format!(
            "presentation h={} derivation={}\n",
            p.h_file, p.derivation
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEIS: &str = "\
format 1
name Heis
dim 3
basis X1 X2 X3
bracket X1 X2 = X3
derivation alpha
row 1 0 0
row 0 1 0
row 0 0 2
end
";

    #[test]
    fn parse_heisenberg_file() {
        let f = parse_algebra_file(HEIS).unwrap();
        assert_eq!(f.algebra.dim, 3);
        assert_eq!(f.derivations.len(), 1);
        assert!(f.derivations.contains_key("alpha"));
    }

    #[test]
    fn canonical_round_trip() {
        let f = parse_algebra_file(HEIS).unwrap();
        let s = serialize_algebra(&f.algebra, &f.derivations, None);
        let f2 = parse_algebra_file(&s).unwrap();
        let s2 = serialize_algebra(&f2.algebra, &f2.derivations, None);
        assert_eq!(s, s2);
    }

    #[test]
    fn two_derivations_attach_to_one_algebra() {
        let text = "\
format 1
name HeisxR3
dim 6
basis X1 X2 X3 X4 X5 X6
bracket X1 X2 = X3
derivation alpha
row 1 0 0 0 0 0
row 0 2 0 0 0 0
row 0 0 3 0 0 0
row 0 0 0 4 0 0
row 0 0 0 0 5 0
row 0 0 0 0 0 9
end
derivation beta
row 4 0 0 0 0 0
row 0 5 0 0 0 0
row 0 0 9 0 0 0
row 0 0 0 1 0 0
row 0 0 0 0 2 0
row 0 0 0 0 0 3
end
";
        let f = parse_algebra_file(text).unwrap();
        assert_eq!(f.derivations.len(), 2);
        assert!(f.derivations.contains_key("alpha") && f.derivations.contains_key("beta"));
    }

    #[test]
    fn malformed_rational_is_a_syntax_error() {
        let bad = HEIS.replace("bracket X1 X2 = X3", "bracket X1 X2 = 1/0*X3");
        let e = parse_algebra_file(&bad).unwrap_err();
        assert!(e.message.contains("denominator"), "{e}");
        assert_eq!(e.line, 5);
    }

    #[test]
    fn unknown_key_rejected() {
        let bad = format!("{HEIS}frobnicate yes\n");
        let e = parse_algebra_file(&bad).unwrap_err();
        assert!(e.message.contains("unknown key"));
    }

    #[test]
    fn jacobi_violation_reported_with_indices() {
        let bad = "\
format 1
name bad
dim 3
basis X1 X2 X3
bracket X1 X2 = X1
bracket X1 X3 = X2
bracket X2 X3 = 2*X3
";
        let e = parse_algebra_file(bad).unwrap_err();
        assert!(e.message.contains("Jacobi"), "{e}");
    }

    #[test]
    fn leibniz_violation_reported() {
        let bad = HEIS.replace("row 0 0 2", "row 0 0 5");
        let e = parse_algebra_file(&bad).unwrap_err();
        assert!(e.message.contains("Leibniz"), "{e}");
        assert_eq!(e.line, 6);
    }
}
