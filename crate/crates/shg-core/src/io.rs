//! Text formats.
//!
//! Three line-oriented UTF-8 formats with `#` comments:
//!
//! `.shg` — a semihypergroup:
//!
//! ```text
//! semihypergroup
//! elements: a b c
//! table:
//! a * a = a
//! a * b = 1/2 a + 1/2 b
//! ...                      # all n² ordered pairs, any order
//! ```
//!
//! Coefficients are exact integers or fractions `p/q`; an omitted
//! coefficient means 1; floating-point literals are rejected. `.group` is
//! the same shape with product lines `x y = z` and is validated as a group.
//! `.map` declares `from:`/`to:` source and target files followed by
//! `x -> y` assignment lines.
//!
//! Rendering is canonical — elements in declared order, table rows in
//! row-major order, coefficients in lowest terms, unit coefficients and
//! zero terms omitted — so `parse ∘ render` is the identity and
//! `render ∘ parse` is the identity on canonical documents.

use crate::construct::{CayleyTable, TableDefect};
use crate::element::{ElementSet, ElementSetError};
use crate::measure::Measure;
use crate::rational::{parse_rational, Rational, RationalParseError};
use crate::semihypergroup::{AxiomReport, ConvolutionTable, Semihypergroup};
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected the header {0:?}")]
    MissingHeader(&'static str),
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("{0}")]
    Rational(#[from] RationalParseError),
    #[error(transparent)]
    Elements(#[from] ElementSetError),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("pair ({0}, {1}) defined twice")]
    DuplicatePair(String, String),
    #[error("missing table line for pair ({0}, {1})")]
    MissingPair(String, String),
    #[error("malformed term {0:?}: expected `coefficient element` or a bare element")]
    BadTerm(String),
    #[error("malformed line {0:?}")]
    BadLine(String),
    #[error("unexpected extra line {0:?}")]
    Trailing(String),
}

fn err(line: usize, kind: impl Into<ParseErrorKind>) -> ParseError {
    ParseError {
        line,
        kind: kind.into(),
    }
}

/// Numbered significant lines: comments stripped, blanks skipped.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let no_comment = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let trimmed = no_comment.trim();
            (!trimmed.is_empty()).then_some((i + 1, trimmed))
        })
        .collect()
}

fn parse_header<'a>(
    lines: &mut std::slice::Iter<'a, (usize, &'a str)>,
    keyword: &'static str,
) -> Result<(), ParseError> {
    match lines.next() {
        Some(&(_, l)) if l == keyword => Ok(()),
        Some(&(n, _)) => Err(err(n, ParseErrorKind::MissingHeader(keyword))),
        None => Err(err(0, ParseErrorKind::MissingHeader(keyword))),
    }
}

fn parse_elements_line(
    lines: &mut std::slice::Iter<'_, (usize, &str)>,
) -> Result<Arc<ElementSet>, ParseError> {
    let Some(&(n, l)) = lines.next() else {
        return Err(err(0, ParseErrorKind::Expected("an `elements:` line")));
    };
    let Some(rest) = l.strip_prefix("elements:") else {
        return Err(err(n, ParseErrorKind::Expected("an `elements:` line")));
    };
    let es = ElementSet::new(rest.split_whitespace()).map_err(|e| err(n, e))?;
    Ok(Arc::new(es))
}

fn expect_table_line(lines: &mut std::slice::Iter<'_, (usize, &str)>) -> Result<(), ParseError> {
    match lines.next() {
        Some(&(_, "table:")) => Ok(()),
        Some(&(n, _)) => Err(err(n, ParseErrorKind::Expected("a `table:` line"))),
        None => Err(err(0, ParseErrorKind::Expected("a `table:` line"))),
    }
}

/// Parses a term sum `1/2 a + b` into a measure over `carrier`. Terms with
/// a repeated element accumulate.
pub fn parse_measure_expr(
    carrier: &Arc<ElementSet>,
    expr: &str,
    line: usize,
) -> Result<Measure, ParseError> {
    let mut weights = vec![Rational::zero(); carrier.len()];
    for term in expr.split('+') {
        let tokens: Vec<&str> = term.split_whitespace().collect();
        let (coeff, name) = match tokens.as_slice() {
            [name] => (Rational::from_integer(1.into()), *name),
            [coeff, name] => (parse_rational(coeff).map_err(|e| err(line, e))?, *name),
            _ => return Err(err(line, ParseErrorKind::BadTerm(term.trim().to_string()))),
        };
        let i = carrier
            .index_of(name)
            .ok_or_else(|| err(line, ParseErrorKind::UnknownElement(name.to_string())))?;
        weights[i] += coeff;
    }
    Ok(Measure::new(Arc::clone(carrier), weights).expect("length matches"))
}

/// Parsed `.shg` document: the raw table plus the source line of every
/// entry, so axiom failures can name their line.
#[derive(Debug, Clone)]
pub struct ShgDocument {
    pub table: ConvolutionTable,
    /// Source line of entry `(x, y)`, row-major.
    pub entry_lines: Vec<usize>,
}

impl ShgDocument {
    pub fn entry_line(&self, x: usize, y: usize) -> usize {
        self.entry_lines[x * self.table.size() + y]
    }
}

pub fn parse_shg_document(text: &str) -> Result<ShgDocument, ParseError> {
    let lines = significant_lines(text);
    let mut it = lines.iter();
    parse_header(&mut it, "semihypergroup")?;
    let carrier = parse_elements_line(&mut it)?;
    expect_table_line(&mut it)?;
    let n = carrier.len();
    let mut entries: Vec<Option<(Measure, usize)>> = vec![None; n * n];
    for &(ln, l) in it {
        let Some((pair, rhs)) = l.split_once('=') else {
            return Err(err(ln, ParseErrorKind::BadLine(l.to_string())));
        };
        let Some((xs, ys)) = pair.split_once('*') else {
            return Err(err(ln, ParseErrorKind::BadLine(l.to_string())));
        };
        let (xs, ys) = (xs.trim(), ys.trim());
        let lookup = |name: &str| {
            carrier
                .index_of(name)
                .ok_or_else(|| err(ln, ParseErrorKind::UnknownElement(name.to_string())))
        };
        let (x, y) = (lookup(xs)?, lookup(ys)?);
        if entries[x * n + y].is_some() {
            return Err(err(
                ln,
                ParseErrorKind::DuplicatePair(xs.to_string(), ys.to_string()),
            ));
        }
        let m = parse_measure_expr(&carrier, rhs, ln)?;
        entries[x * n + y] = Some((m, ln));
    }
    let mut measures = Vec::with_capacity(n * n);
    let mut entry_lines = Vec::with_capacity(n * n);
    for (k, e) in entries.into_iter().enumerate() {
        match e {
            Some((m, ln)) => {
                measures.push(m);
                entry_lines.push(ln);
            }
            None => {
                return Err(err(
                    0,
                    ParseErrorKind::MissingPair(
                        carrier.name(k / n).to_string(),
                        carrier.name(k % n).to_string(),
                    ),
                ))
            }
        }
    }
    let table = ConvolutionTable::new(carrier, measures).expect("shape enforced");
    Ok(ShgDocument { table, entry_lines })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShgError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{description}")]
    Axioms {
        description: String,
        report: AxiomReport,
    },
}

/// Describes an axiom report against a parsed document, with source lines
/// for entry-level failures.
pub fn describe_axiom_failure(doc: &ShgDocument, report: &AxiomReport) -> String {
    use crate::semihypergroup::ProbabilityViolation;
    let carrier = doc.table.carrier();
    let mut parts = Vec::new();
    match &report.probability {
        Some(ProbabilityViolation::WrongMass { x, y, mass }) => parts.push(format!(
            "entry ({}, {}) at line {} has total mass {mass} instead of 1",
            carrier.name(*x),
            carrier.name(*y),
            doc.entry_line(*x, *y),
        )),
        Some(ProbabilityViolation::NegativeWeight { x, y, at }) => parts.push(format!(
            "entry ({}, {}) at line {} has a negative weight on {}",
            carrier.name(*x),
            carrier.name(*y),
            doc.entry_line(*x, *y),
            carrier.name(*at),
        )),
        None => {}
    }
    if let Some(v) = &report.associativity {
        parts.push(format!(
            "associativity fails at ({}, {}, {}): ({0} * {1}) * {2} = {} but {0} * ({1} * {2}) = {}",
            carrier.name(v.x),
            carrier.name(v.y),
            carrier.name(v.z),
            v.lhs.render(),
            v.rhs.render(),
        ));
    }
    parts.join("; ")
}

/// Parses and fully validates a `.shg` document; axiom failures are
/// reported with the offending line.
pub fn parse_shg(text: &str) -> Result<Semihypergroup, ShgError> {
    let doc = parse_shg_document(text)?;
    let report = doc.table.check_axioms();
    if !report.passed() {
        return Err(ShgError::Axioms {
            description: describe_axiom_failure(&doc, &report),
            report,
        });
    }
    Ok(Semihypergroup::new_unchecked(doc.table))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Defect(#[from] TableDefect),
}

/// Parses a `.group` document and verifies it is a group.
pub fn parse_group(text: &str) -> Result<CayleyTable, GroupError> {
    let lines = significant_lines(text);
    let mut it = lines.iter();
    parse_header(&mut it, "group")?;
    let carrier = parse_elements_line(&mut it)?;
    expect_table_line(&mut it)?;
    let n = carrier.len();
    let mut product: Vec<Option<usize>> = vec![None; n * n];
    for &(ln, l) in it {
        let Some((pair, rhs)) = l.split_once('=') else {
            return Err(err(ln, ParseErrorKind::BadLine(l.to_string())).into());
        };
        let tokens: Vec<&str> = pair.split_whitespace().collect();
        let [xs, ys] = tokens.as_slice() else {
            return Err(err(ln, ParseErrorKind::BadLine(l.to_string())).into());
        };
        let lookup = |name: &str| {
            carrier
                .index_of(name)
                .ok_or_else(|| err(ln, ParseErrorKind::UnknownElement(name.to_string())))
        };
        let (x, y, z) = (lookup(xs)?, lookup(ys)?, lookup(rhs.trim())?);
        if product[x * n + y].is_some() {
            return Err(err(
                ln,
                ParseErrorKind::DuplicatePair(xs.to_string(), ys.to_string()),
            )
            .into());
        }
        product[x * n + y] = Some(z);
    }
    let mut flat = Vec::with_capacity(n * n);
    for (k, p) in product.into_iter().enumerate() {
        match p {
            Some(z) => flat.push(z),
            None => {
                return Err(err(
                    0,
                    ParseErrorKind::MissingPair(
                        carrier.name(k / n).to_string(),
                        carrier.name(k % n).to_string(),
                    ),
                )
                .into())
            }
        }
    }
    Ok(CayleyTable::new(carrier, flat)?)
}

/// Parsed `.map` document; the endpoints are recorded verbatim and bound to
/// actual carriers later.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDocument {
    pub from: String,
    pub to: String,
    pub pairs: Vec<(String, String)>,
}

pub fn parse_map(text: &str) -> Result<MapDocument, ParseError> {
    let lines = significant_lines(text);
    let mut it = lines.iter();
    parse_header(&mut it, "map")?;
    let endpoint = |it: &mut std::slice::Iter<'_, (usize, &str)>,
                    prefix: &'static str,
                    what: &'static str|
     -> Result<String, ParseError> {
        match it.next() {
            Some(&(n, l)) => l
                .strip_prefix(prefix)
                .map(|r| r.trim().to_string())
                .ok_or_else(|| err(n, ParseErrorKind::Expected(what))),
            None => Err(err(0, ParseErrorKind::Expected(what))),
        }
    };
    let from = endpoint(&mut it, "from:", "a `from:` line")?;
    let to = endpoint(&mut it, "to:", "a `to:` line")?;
    let mut pairs = Vec::new();
    for &(ln, l) in it {
        let Some((x, y)) = l.split_once("->") else {
            return Err(err(ln, ParseErrorKind::BadLine(l.to_string())));
        };
        let (x, y) = (x.trim(), y.trim());
        if x.is_empty() || y.is_empty() || x.split_whitespace().count() != 1 {
            return Err(err(ln, ParseErrorKind::BadLine(l.to_string())));
        }
        pairs.push((x.to_string(), y.to_string()));
    }
    Ok(MapDocument { from, to, pairs })
}

/// Whitespace-separated element names, `#` comments allowed. Used for
/// subset files and inline subset arguments.
pub fn parse_name_list(text: &str) -> Vec<String> {
    significant_lines(text)
        .iter()
        .flat_map(|(_, l)| l.split_whitespace())
        .map(str::to_string)
        .collect()
}

/// Canonical `.shg` rendering of a convolution table.
pub fn render_shg(table: &ConvolutionTable) -> String {
    let carrier = table.carrier();
    let mut out = String::from("semihypergroup\n");
    out.push_str(&format!("elements: {}\n", carrier.names().join(" ")));
    out.push_str("table:\n");
    for x in 0..table.size() {
        for y in 0..table.size() {
            out.push_str(&format!(
                "{} * {} = {}\n",
                carrier.name(x),
                carrier.name(y),
                table.entry(x, y).render()
            ));
        }
    }
    out
}

/// Canonical `.group` rendering.
pub fn render_group(g: &CayleyTable) -> String {
    let carrier = g.elements();
    let mut out = String::from("group\n");
    out.push_str(&format!("elements: {}\n", carrier.names().join(" ")));
    out.push_str("table:\n");
    for x in 0..g.size() {
        for y in 0..g.size() {
            out.push_str(&format!(
                "{} {} = {}\n",
                carrier.name(x),
                carrier.name(y),
                carrier.name(g.product(x, y))
            ));
        }
    }
    out
}

/// Canonical `.map` rendering.
pub fn render_map(doc: &MapDocument) -> String {
    let mut out = String::from("map\n");
    out.push_str(&format!("from: {}\n", doc.from));
    out.push_str(&format!("to: {}\n", doc.to));
    for (x, y) in &doc.pairs {
        out.push_str(&format!("{x} -> {y}\n"));
    }
    out
}

/// Resolves a list of names to a subset of a carrier.
pub fn subset_from_names<'a, I: IntoIterator<Item = &'a str>>(
    carrier: &ElementSet,
    names: I,
) -> Result<crate::element::Subset, ParseErrorKind> {
    let mut s = crate::element::Subset::empty(carrier.len());
    for name in names {
        let i = carrier
            .index_of(name)
            .ok_or_else(|| ParseErrorKind::UnknownElement(name.to_string()))?;
        s.insert(i);
    }
    Ok(s)
}

#[allow(dead_code)]
fn _unused(_: &HashMap<(), ()>) {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{builtin_fixture, CayleyTable};
    use crate::rational::rat;

    const REMARK: &str = "\
# three-element counterexample
semihypergroup
elements: a b c
table:
a * a = a
a * b = 1/2 a + 1/2 b
a * c = 1/2 a + 1/2 c
b * a = a
b * b = 1/2 a + 1/2 b
b * c = 1/2 a + 1/2 c
c * a = a
c * b = b
c * c = c
";

    #[test]
    fn parse_the_remark_document() {
        let doc = parse_shg_document(REMARK).unwrap();
        assert_eq!(doc.table.size(), 3);
        assert_eq!(doc.table.entry(1, 2).render(), "1/2 a + 1/2 c");
        assert_eq!(doc.entry_line(1, 2), 10);
        // strict parse reports the associativity failure with both sides
        let errtext = parse_shg(REMARK).unwrap_err().to_string();
        assert!(errtext.contains("associativity fails at (a, a, b)"), "{errtext}");
        // the fixture and the file agree entry for entry
        let fixture = builtin_fixture("remark_5_9").unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(
                    doc.table.entry(x, y).weights(),
                    fixture.convolve_points(x, y).weights()
                );
            }
        }
    }

    #[test]
    fn floats_are_rejected_at_parse_time() {
        let text = REMARK.replace("1/2 a + 1/2 b", "0.5 a + 0.5 b");
        let e = parse_shg_document(&text).unwrap_err();
        assert_eq!(e.line, 6);
        assert!(matches!(
            e.kind,
            ParseErrorKind::Rational(RationalParseError::FloatLiteral(_))
        ));
    }

    #[test]
    fn row_with_wrong_mass_is_an_axiom_error_naming_the_line() {
        let text = REMARK.replace("c * c = c", "c * c = 2 c");
        let e = parse_shg(&text).unwrap_err();
        match e {
            ShgError::Axioms { description, .. } => {
                assert!(description.contains("(c, c)"), "{description}");
                assert!(description.contains("line 13"), "{description}");
                assert!(description.contains("mass 2"), "{description}");
            }
            other => panic!("expected axiom error, got {other:?}"),
        }
    }

    #[test]
    fn structural_errors() {
        // duplicate element
        let e = parse_shg_document(&REMARK.replace("elements: a b c", "elements: a a c"))
            .unwrap_err();
        assert!(matches!(
            e.kind,
            ParseErrorKind::Elements(ElementSetError::DuplicateName(_))
        ));
        // missing pair
        let mut truncated: Vec<&str> = REMARK.lines().collect();
        truncated.pop();
        let e = parse_shg_document(&truncated.join("\n")).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::MissingPair(ref x, ref y) if x == "c" && y == "c"));
        // duplicate pair
        let doubled = format!("{REMARK}c * c = c\n");
        let e = parse_shg_document(&doubled).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::DuplicatePair(_, _)));
        // unknown element in a term
        let e = parse_shg_document(&REMARK.replace("c * b = b", "c * b = z")).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnknownElement(ref z) if z == "z"));
        // bad header
        let e = parse_shg_document("group\nelements: a\ntable:\na * a = a\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::MissingHeader("semihypergroup")));
    }

    #[test]
    fn shg_round_trip_is_canonical() {
        for name in crate::construct::FIXTURE_NAMES {
            let s = builtin_fixture(name).unwrap();
            let rendered = render_shg(s.table());
            let doc = parse_shg_document(&rendered).unwrap();
            assert_eq!(&doc.table, s.table(), "{name}");
            assert_eq!(render_shg(&doc.table), rendered, "{name}");
        }
        // non-canonical spellings normalise: term order, explicit 1s,
        // shuffled lines
        let shuffled = "\
semihypergroup
elements: a b c
table:
c * c = 1 c
b * c = 1/2 c + 1/2 a
a * a = a
a * b = 2/4 a + 1/2 b
a * c = 1/2 a + 1/2 c
b * a = a
b * b = 1/2 a + 1/2 b
c * a = a
c * b = b
";
        let doc = parse_shg_document(shuffled).unwrap();
        assert_eq!(render_shg(&doc.table), REMARK.replacen("# three-element counterexample\n", "", 1));
    }

    #[test]
    fn group_parse_and_round_trip() {
        let z2 = "group\nelements: 0 1\ntable:\n0 0 = 0\n0 1 = 1\n1 0 = 1\n1 1 = 0\n";
        let g = parse_group(z2).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(render_group(&g), z2);
        let s4 = CayleyTable::symmetric(4);
        let again = parse_group(&render_group(&s4)).unwrap();
        assert_eq!(again, s4);
    }

    #[test]
    fn group_validation_failures() {
        // a latin square that is not associative is rejected with a triple
        let text = "group\nelements: 0 1 2 3 4\ntable:\n".to_string()
            + &(0..5)
                .flat_map(|x: i64| (0..5).map(move |y: i64| format!("{x} {y} = {}\n", (x - y).rem_euclid(5))))
                .collect::<String>();
        match parse_group(&text).unwrap_err() {
            GroupError::Defect(TableDefect::NotAssociative { .. }) => {}
            other => panic!("expected associativity defect, got {other:?}"),
        }
        // missing identity
        let text = "group\nelements: u v\ntable:\nu u = u\nu v = u\nv u = v\nv v = v\n";
        assert!(matches!(
            parse_group(text).unwrap_err(),
            GroupError::Defect(TableDefect::NoIdentity)
        ));
    }

    #[test]
    fn map_parse_and_round_trip() {
        let text = "map\nfrom: a.shg\nto: b.shg\na -> p\nb -> p\nc -> p\n";
        let doc = parse_map(text).unwrap();
        assert_eq!(doc.from, "a.shg");
        assert_eq!(doc.to, "b.shg");
        assert_eq!(doc.pairs.len(), 3);
        assert_eq!(render_map(&doc), text);
        assert!(parse_map("map\nfrom: x\nto: y\na b\n").is_err());
        assert!(parse_map("map\nto: y\n").is_err());
    }

    #[test]
    fn name_lists_and_subsets() {
        let names = parse_name_list("e (12) # comment\n(34)\n");
        assert_eq!(names, vec!["e", "(12)", "(34)"]);
        let s = builtin_fixture("remark_5_9").unwrap();
        let sub = subset_from_names(s.carrier(), ["a", "c"].into_iter()).unwrap();
        assert_eq!(sub.indices(), vec![0, 2]);
        assert!(matches!(
            subset_from_names(s.carrier(), ["zz"].into_iter()),
            Err(ParseErrorKind::UnknownElement(_))
        ));
    }

    #[test]
    fn measure_expressions() {
        let s = builtin_fixture("remark_5_9").unwrap();
        let m = parse_measure_expr(s.carrier(), "1/3 a + 2/3 c", 1).unwrap();
        assert_eq!(m.weight(0), &rat(1, 3));
        assert_eq!(m.weight(2), &rat(2, 3));
        // repeated element accumulates
        let m = parse_measure_expr(s.carrier(), "1/4 b + 1/4 b", 1).unwrap();
        assert_eq!(m.weight(1), &rat(1, 2));
        // negative coefficients are allowed in general measures
        let m = parse_measure_expr(s.carrier(), "-1/2 a + 3 b", 1).unwrap();
        assert_eq!(m.weight(0), &rat(-1, 2));
        assert!(parse_measure_expr(s.carrier(), "1/2", 1).is_err());
        assert!(parse_measure_expr(s.carrier(), "1/2 a b", 1).is_err());
    }
}
