//! Text formats for polynomials, graphs and symmetric matrices.
//!
//! Polynomial files: a `vars <n>` header, then one term per line as
//! `<rational> ; <var>^<exp> <var>^<exp> ...` with variables named
//! x0..x{n-1}. Rationals are `p/q` or plain integers. `#` starts a comment;
//! whitespace is free. Terms with equal monomials accumulate.
//!
//! Graph files: `n <count>` then `e i j` lines with 0-indexed endpoints.
//!
//! Matrix files: `n <count>` then n rows of n rationals (must be symmetric).

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Monomial;
use crate::{QMatrix, QPoly, Rational, SymMatrix};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Strip comments and return (1-based line number, trimmed content) for
/// nonempty lines.
fn content_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = raw.split('#').next().unwrap_or("").trim();
        if stripped.is_empty() {
            None
        } else {
            Some((i + 1, stripped))
        }
    })
}

pub fn parse_rational(s: &str, line: usize) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| parse_err(line, format!("bad rational '{s}': {e}")))
}

/// Comma-separated rationals, e.g. `1,2/3,-1`.
pub fn parse_vector(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|tok| parse_rational(tok, 0))
        .collect()
}

pub fn parse_polynomial(src: &str) -> Result<QPoly> {
    let mut lines = content_lines(src);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty polynomial file"))?;
    let num_vars = parse_header(header, "vars", ln)?;
    let mut poly = QPoly::zero(num_vars);
    for (ln, line) in lines {
        let (coeff_part, mono_part) = line
            .split_once(';')
            .ok_or_else(|| parse_err(ln, "expected '<rational> ; <monomial>'"))?;
        let coeff = parse_rational(coeff_part, ln)?;
        let mut mono = Vec::new();
        for tok in mono_part.split_whitespace() {
            let rest = tok
                .strip_prefix('x')
                .ok_or_else(|| parse_err(ln, format!("bad variable token '{tok}'")))?;
            let (var_s, exp) = match rest.split_once('^') {
                Some((v, e)) => {
                    let exp: u32 = e
                        .parse()
                        .map_err(|_| parse_err(ln, format!("bad exponent in '{tok}'")))?;
                    (v, exp)
                }
                None => (rest, 1),
            };
            let var: u32 = var_s
                .parse()
                .map_err(|_| parse_err(ln, format!("bad variable index in '{tok}'")))?;
            if var as usize >= num_vars {
                return Err(parse_err(
                    ln,
                    format!("variable x{var} out of range (vars {num_vars})"),
                ));
            }
            if exp == 0 {
                return Err(parse_err(ln, format!("zero exponent in '{tok}'")));
            }
            mono.push((var, exp));
        }
        poly.add_term(Monomial::new(mono), coeff);
    }
    Ok(poly)
}

pub fn polynomial_to_text(p: &QPoly) -> String {
    let mut out = format!("vars {}\n", p.num_vars());
    let terms: Vec<_> = p.terms().collect();
    for (m, c) in terms.into_iter().rev() {
        out.push_str(&c.to_string());
        out.push_str(" ;");
        for (v, e) in m.iter() {
            if e == 1 {
                out.push_str(&format!(" x{v}"));
            } else {
                out.push_str(&format!(" x{v}^{e}"));
            }
        }
        out.push('\n');
    }
    out
}

pub fn parse_graph(src: &str) -> Result<Graph> {
    let mut lines = content_lines(src);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty graph file"))?;
    let n = parse_header(header, "n", ln)?;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (ln, line) in lines {
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("e") => {}
            Some(other) => return Err(parse_err(ln, format!("expected 'e i j', got '{other}'"))),
            None => continue,
        }
        let a: u32 = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(ln, "bad edge endpoint"))?;
        let b: u32 = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(ln, "bad edge endpoint"))?;
        if toks.next().is_some() {
            return Err(parse_err(ln, "trailing tokens after edge"));
        }
        if a == b {
            return Err(parse_err(ln, format!("self-loop at vertex {a}")));
        }
        if a as usize >= n || b as usize >= n {
            return Err(parse_err(ln, format!("edge ({a}, {b}) out of range")));
        }
        let norm = (a.min(b), a.max(b));
        if edges.contains(&norm) {
            return Err(parse_err(ln, format!("duplicate edge ({a}, {b})")));
        }
        edges.push(norm);
    }
    Graph::new(n, edges).map_err(|e| parse_err(0, e.to_string()))
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (a, b) in g.edges() {
        out.push_str(&format!("e {a} {b}\n"));
    }
    out
}

pub fn parse_matrix(src: &str) -> Result<QMatrix> {
    let mut lines = content_lines(src);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty matrix file"))?;
    let n = parse_header(header, "n", ln)?;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for (ln, line) in lines {
        let row: Result<Vec<Rational>> = line
            .split_whitespace()
            .map(|tok| parse_rational(tok, ln))
            .collect();
        let row = row?;
        if row.len() != n {
            return Err(parse_err(
                ln,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(parse_err(0, format!("expected {n} rows, found {}", rows.len())));
    }
    SymMatrix::from_rows(&rows)
}

fn parse_header(line: &str, key: &str, ln: usize) -> Result<usize> {
    let mut toks = line.split_whitespace();
    if toks.next() != Some(key) {
        return Err(parse_err(ln, format!("expected '{key} <count>' header")));
    }
    let n = toks
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(ln, format!("bad count in '{key}' header")))?;
    if toks.next().is_some() {
        return Err(parse_err(ln, "trailing tokens after header"));
    }
    Ok(n)
}
