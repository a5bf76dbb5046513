//! Text formats.
//!
//! Graph files: a header `n m`, then `m` lines `u v` with 1-based vertices.
//! Basis files: a header `k m`, then `k` rows of `m` signed exponents
//! (`u_plus - u_minus`). Monomial listings use a header `k` and rows such as
//! `e1*e3^2 - e2*e4`. Lines starting with `#` and blank lines are skipped.

use crate::binomial::Binomial;
use crate::error::{BinomialError, Error, Result};
use crate::graph::{EdgeSubset, Graph};
use crate::graver::{BasisSet, Source};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    Vector,
    #[default]
    Monomial,
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn integers<T: std::str::FromStr>(line: usize, text: &str) -> Result<Vec<T>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<T>()
                .map_err(|_| parse_err(line, format!("bad integer `{tok}`")))
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let header: Vec<usize> = integers(hline, header)?;
    let [n, m] = header[..] else {
        return Err(parse_err(hline, "header must be `n m`"));
    };
    if n == 0 {
        return Err(parse_err(hline, "graph needs at least one vertex"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    let mut last_line = hline;
    for (lno, l) in lines {
        if edges.len() == m {
            return Err(parse_err(lno, format!("more than {m} edge lines")));
        }
        let pair: Vec<usize> = integers(lno, l)?;
        let [u, v] = pair[..] else {
            return Err(parse_err(lno, "edge line must be `u v`"));
        };
        for x in [u, v] {
            if x == 0 || x > n {
                return Err(parse_err(lno, format!("vertex {x} outside 1..={n}")));
            }
        }
        edges.push((u - 1, v - 1));
        edge_lines.push(lno);
        last_line = lno;
    }
    if edges.len() < m {
        return Err(parse_err(
            last_line,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges).map_err(|source| {
        let edge = match source {
            crate::GraphError::SelfLoop { edge }
            | crate::GraphError::DuplicateEdge { edge, .. } => edge,
            _ => 0,
        };
        Error::GraphLine {
            line: edge_lines[edge],
            source,
        }
    })
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// `{e4,e8,e12}`
pub fn edge_set(edges: &EdgeSubset) -> String {
    let labels: Vec<String> = edges.iter().map(|e| format!("e{}", e + 1)).collect();
    format!("{{{}}}", labels.join(","))
}

fn monomial(exps: &[u8]) -> String {
    let factors: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(e, &x)| {
            if x == 1 {
                format!("e{}", e + 1)
            } else {
                format!("e{}^{x}", e + 1)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

pub fn format_monomial(b: &Binomial) -> String {
    format!("{} - {}", monomial(b.plus()), monomial(b.minus()))
}

pub fn format_vector(b: &Binomial) -> String {
    let row: Vec<String> = b.signed_row().iter().map(i32::to_string).collect();
    row.join(" ")
}

pub fn format_binomial(b: &Binomial, style: Style) -> String {
    match style {
        Style::Vector => format_vector(b),
        Style::Monomial => format_monomial(b),
    }
}

/// Vector style is a valid basis file (`k m` header); monomial style starts
/// with the element count alone.
pub fn format_basis(basis: &BasisSet, edge_count: usize, style: Style) -> String {
    let mut out = match style {
        Style::Vector => format!("{} {}\n", basis.len(), edge_count),
        Style::Monomial => format!("{}\n", basis.len()),
    };
    for b in basis {
        out.push_str(&format_binomial(b, style));
        out.push('\n');
    }
    out
}

/// Exponent vectors of a binomial written either as a signed row or in
/// monomial notation. Performs no ideal-membership checks.
pub fn parse_binomial_exponents(
    text: &str,
    edge_count: usize,
    line: usize,
) -> Result<(Vec<u8>, Vec<u8>)> {
    if text.contains('e') {
        parse_monomial_pair(text, edge_count, line)
    } else {
        let row: Vec<i64> = integers(line, text)?;
        if row.len() != edge_count {
            return Err(Error::DimensionMismatch {
                expected: edge_count,
                found: row.len(),
            });
        }
        let mut plus = vec![0u8; edge_count];
        let mut minus = vec![0u8; edge_count];
        for (e, &x) in row.iter().enumerate() {
            let mag = u8::try_from(x.unsigned_abs())
                .map_err(|_| parse_err(line, format!("exponent {x} out of range")))?;
            if x > 0 {
                plus[e] = mag;
            } else {
                minus[e] = mag;
            }
        }
        Ok((plus, minus))
    }
}

fn parse_monomial_pair(text: &str, edge_count: usize, line: usize) -> Result<(Vec<u8>, Vec<u8>)> {
    let (lhs, rhs) = text
        .split_once('-')
        .ok_or_else(|| parse_err(line, "expected `monomial - monomial`"))?;
    Ok((
        parse_side(lhs, edge_count, line)?,
        parse_side(rhs, edge_count, line)?,
    ))
}

fn parse_side(text: &str, edge_count: usize, line: usize) -> Result<Vec<u8>> {
    let mut exps = vec![0u8; edge_count];
    let text = text.trim();
    if text == "1" {
        return Ok(exps);
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (var, power) = match factor.split_once('^') {
            Some((v, p)) => {
                let p: u8 = p
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad exponent in `{factor}`")))?;
                (v.trim(), p)
            }
            None => (factor, 1),
        };
        let index: usize = var
            .strip_prefix('e')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| parse_err(line, format!("bad factor `{factor}`")))?;
        if index == 0 || index > edge_count {
            return Err(parse_err(
                line,
                format!("edge e{index} outside e1..e{edge_count}"),
            ));
        }
        exps[index - 1] = exps[index - 1]
            .checked_add(power)
            .ok_or_else(|| parse_err(line, "exponent overflow"))?;
    }
    Ok(exps)
}

/// Validates a parsed exponent pair as a walk-sized binomial of `g`.
fn validate(g: &Graph, plus: Vec<u8>, minus: Vec<u8>) -> Result<Binomial, BinomialError> {
    for (e, &x) in plus.iter().chain(&minus).enumerate() {
        if x > 2 {
            return Err(BinomialError::ExponentTooLarge {
                edge: e % g.edge_count(),
                exponent: x,
            });
        }
    }
    Binomial::new(g, plus, minus)
}

/// Reads a basis file (vector rows) or a monomial listing, canonicalizing and
/// validating every row against `g`.
pub fn parse_basis(text: &str, g: &Graph) -> Result<BasisSet> {
    let m = g.edge_count();
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let header: Vec<usize> = integers(hline, header)?;
    let k = match header[..] {
        [k, cols] => {
            if cols != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: cols,
                });
            }
            k
        }
        [k] => k,
        _ => return Err(parse_err(hline, "header must be `k m` or `k`")),
    };

    let mut elements = Vec::with_capacity(k);
    let mut last_line = hline;
    for (row, (lno, l)) in lines.enumerate() {
        if row == k {
            return Err(parse_err(lno, format!("more than {k} rows")));
        }
        let (plus, minus) = parse_binomial_exponents(l, m, lno)?;
        let b = validate(g, plus, minus).map_err(|source| Error::InvalidBinomial {
            row: row + 1,
            source,
        })?;
        elements.push(b);
        last_line = lno;
    }
    if elements.len() < k {
        return Err(parse_err(
            last_line,
            format!("expected {k} rows, found {}", elements.len()),
        ));
    }
    Ok(BasisSet::new(elements, Source::Imported))
}
