//! Plain-text algebra specifications.
//!
//! ```text
//! field = Q
//! vertex 1
//! vertex 2
//! arrow a1: 1 -> 2
//! arrow b2: 2 -> 1
//! relation a1*b2
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::quiver_algebra::{build_algebra, BoundQuiverAlgebra, Quiver, RelationExpr, DEFAULT_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp {p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    /// `Q`, `Fp:p` or `Fp p` with `p` prime.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let p = t
            .strip_prefix("Fp")
            .map(|r| r.trim_start_matches([':', ' ']))
            .and_then(|r| r.parse::<u64>().ok())
            .ok_or_else(|| Error::Invalid(format!("expected `Q` or `Fp:p`, got `{t}`")))?;
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }
}

/// One relation term: integer coefficient and arrow labels in path order.
pub type Term = (i64, Vec<String>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<Vec<Term>>,
}

impl AlgebraSpec {
    pub fn quiver(&self) -> Result<Quiver> {
        Quiver::new(&self.vertices, &self.arrows)
    }

    pub fn relation_exprs(&self, q: &Quiver) -> Result<Vec<RelationExpr>> {
        self.relations.iter().map(|r| relation_expr(q, r)).collect()
    }

    /// Builds the algebra over `F`, ignoring the `field` line.
    pub fn build<F: Field>(&self) -> Result<BoundQuiverAlgebra<F>> {
        let q = self.quiver()?;
        let rels = self.relation_exprs(&q)?;
        build_algebra(&q, &rels, DEFAULT_CAP)
    }
}

fn relation_expr(q: &Quiver, terms: &[Term]) -> Result<RelationExpr> {
    let mut out = Vec::with_capacity(terms.len());
    for (c, labels) in terms {
        let arrows = labels
            .iter()
            .map(|l| q.arrow_index(l).ok_or_else(|| Error::UnknownArrow(l.clone())))
            .collect::<Result<Vec<_>>>()?;
        out.push((*c, arrows));
    }
    Ok(RelationExpr::new(out))
}

fn write_term(f: &mut fmt::Formatter<'_>, c: i64, labels: &[String]) -> fmt::Result {
    if c != 1 {
        write!(f, "{c}*")?;
    }
    write!(f, "{}", labels.join("*"))
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field = {}", self.field)?;
        for v in &self.vertices {
            writeln!(f, "vertex {v}")?;
        }
        for (a, s, t) in &self.arrows {
            writeln!(f, "arrow {a}: {s} -> {t}")?;
        }
        for r in &self.relations {
            write!(f, "relation ")?;
            for (k, (c, labels)) in r.iter().enumerate() {
                if k == 0 {
                    write_term(f, *c, labels)?;
                } else {
                    write!(f, " {} ", if *c < 0 { '-' } else { '+' })?;
                    write_term(f, c.abs(), labels)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Star,
    Plus,
    Minus,
    Colon,
    To,
    Eq,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::To => write!(f, "`->`"),
            Tok::Eq => write!(f, "`=`"),
        }
    }
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, col, message: message.into() }
}

/// Tokens with 1-based columns; `#` starts a comment.
fn tokenize(text: &str, line: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            '#' => break,
            c if c.is_whitespace() => i += 1,
            '*' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            '+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            ':' => {
                out.push((Tok::Colon, col));
                i += 1;
            }
            '=' => {
                out.push((Tok::Eq, col));
                i += 1;
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push((Tok::To, col));
                i += 2;
            }
            '-' => {
                out.push((Tok::Minus, col));
                i += 1;
            }
            c if c.is_alphanumeric() || c == '_' || c == '.' || c == '\'' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || matches!(chars[i], '_' | '.' | '\''))
                {
                    i += 1;
                }
                out.push((Tok::Word(chars[start..i].iter().collect()), col));
            }
            c => return Err(syntax(line, col, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Cursor<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn prev_col(&self) -> usize {
        self.toks[self.pos - 1].1
    }

    fn next(&mut self) -> Option<&'a Tok> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn word(&mut self, what: &str) -> Result<String> {
        let col = self.col();
        match self.next() {
            Some(Tok::Word(w)) => Ok(w.clone()),
            Some(t) => Err(syntax(self.line, col, format!("expected {what}, found {t}"))),
            None => Err(syntax(self.line, col, format!("expected {what}"))),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        let col = self.col();
        match self.next() {
            Some(t) if *t == tok => Ok(()),
            Some(t) => Err(syntax(self.line, col, format!("expected {tok}, found {t}"))),
            None => Err(syntax(self.line, col, format!("expected {tok}"))),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(syntax(self.line, self.col(), format!("unexpected {t}"))),
        }
    }
}

fn is_integer(w: &str) -> bool {
    !w.is_empty() && w.chars().all(|c| c.is_ascii_digit())
}

/// `['-'] [int '*'] arrow ('*' arrow)*`, with the sign already consumed by the caller.
fn parse_term(cur: &mut Cursor<'_>, mut sign: i64) -> Result<Term> {
    if cur.peek() == Some(&Tok::Minus) {
        cur.next();
        sign = -sign;
    }
    let col = cur.col();
    let first = cur.word("a coefficient or arrow label")?;
    let mut labels = Vec::new();
    let coeff = if is_integer(&first) {
        let c: i64 = first.parse().map_err(|_| syntax(cur.line, col, "coefficient out of range"))?;
        cur.expect(Tok::Star)?;
        c
    } else {
        labels.push(first);
        1
    };
    if labels.is_empty() {
        let col = cur.col();
        let w = cur.word("an arrow label")?;
        if is_integer(&w) {
            return Err(syntax(cur.line, col, "arrow labels cannot be integers"));
        }
        labels.push(w);
    }
    while cur.peek() == Some(&Tok::Star) {
        cur.next();
        let star = cur.prev_col();
        match cur.peek() {
            Some(Tok::Word(w)) if !is_integer(w) => {
                labels.push(w.clone());
                cur.next();
            }
            _ => return Err(syntax(cur.line, star, "dangling `*`")),
        }
    }
    Ok((sign * coeff, labels))
}

fn parse_relation(cur: &mut Cursor<'_>) -> Result<Vec<Term>> {
    let mut terms = vec![parse_term(cur, 1)?];
    loop {
        let sign = match cur.peek() {
            Some(Tok::Plus) => 1,
            Some(Tok::Minus) => -1,
            None => break,
            Some(t) => return Err(syntax(cur.line, cur.col(), format!("expected `+` or `-`, found {t}"))),
        };
        cur.next();
        let op = cur.prev_col();
        if cur.peek().is_none() {
            return Err(syntax(cur.line, op, "dangling operator"));
        }
        terms.push(parse_term(cur, sign)?);
    }
    Ok(terms)
}

/// Parses and validates a specification.
pub fn parse_spec(text: &str) -> Result<AlgebraSpec> {
    let mut field = None;
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    let mut arrow_lines = Vec::new();
    let mut relations = Vec::new();
    let mut relation_lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let toks = tokenize(raw, line)?;
        if toks.is_empty() {
            continue;
        }
        let end_col = raw.chars().count() + 1;
        let mut cur = Cursor { toks: &toks, pos: 0, line, end_col };
        let kw_col = cur.col();
        let kw = cur.word("a keyword")?;
        match kw.as_str() {
            "field" => {
                cur.expect(Tok::Eq)?;
                let col = cur.col();
                let name = cur.word("`Q` or `Fp`")?;
                field = Some(match name.as_str() {
                    "Q" => FieldSpec::Rationals,
                    "Fp" => {
                        let col = cur.col();
                        let p = cur.word("a prime")?;
                        let p: u64 = p.parse().map_err(|_| syntax(line, col, "expected a prime"))?;
                        if !is_prime(p) {
                            return Err(syntax(line, col, format!("{p} is not prime")));
                        }
                        FieldSpec::Prime(p)
                    }
                    other => return Err(syntax(line, col, format!("unknown field `{other}`"))),
                });
            }
            "vertex" => vertices.push(cur.word("a vertex label")?),
            "arrow" => {
                let col = cur.col();
                let a = cur.word("an arrow label")?;
                if is_integer(&a) {
                    return Err(syntax(line, col, "arrow labels cannot be integers"));
                }
                cur.expect(Tok::Colon)?;
                let s = cur.word("a source vertex")?;
                cur.expect(Tok::To)?;
                let t = cur.word("a target vertex")?;
                arrows.push((a, s, t));
                arrow_lines.push(line);
            }
            "relation" => {
                relations.push(parse_relation(&mut cur)?);
                relation_lines.push(line);
            }
            other => return Err(syntax(line, kw_col, format!("unknown keyword `{other}`"))),
        }
        cur.finish()?;
    }
    let spec = AlgebraSpec { field: field.unwrap_or(FieldSpec::Rationals), vertices, arrows, relations };
    let q = spec.quiver().map_err(|e| {
        let line = spec
            .arrows
            .iter()
            .position(|(_, s, t)| !spec.vertices.contains(s) || !spec.vertices.contains(t))
            .map_or(1, |i| arrow_lines[i]);
        syntax(line, 1, e.to_string())
    })?;
    for (r, line) in spec.relations.iter().zip(&relation_lines) {
        relation_expr(&q, r)
            .and_then(|e| e.validate(&q))
            .map_err(|e| syntax(*line, 1, e.to_string()))?;
    }
    Ok(spec)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rational;

    #[test]
    fn linear_a3() {
        let s = parse_spec("vertex 1\nvertex 2\nvertex 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n").unwrap();
        assert_eq!((s.vertices.len(), s.arrows.len(), s.relations.len()), (3, 2, 0));
        assert_eq!(s.build::<Rational>().unwrap().dim(), 6);
    }

    #[test]
    fn relations_with_signs_and_coefficients() {
        let text = "field = Fp 7 # comment\nvertex 1\nvertex 2\nvertex 3\n\
                    arrow a1: 1 -> 2\narrow a2: 2 -> 3\narrow b2: 2 -> 1\narrow b3: 3 -> 2\n\
                    relation a1*b2\nrelation a2*b3 - b2*a1\nrelation -2*a2*b3 + 3*b2*a1\n";
        let s = parse_spec(text).unwrap();
        assert_eq!(s.field, FieldSpec::Prime(7));
        assert_eq!(s.relations[1], vec![(1, vec!["a2".into(), "b3".into()]), (-1, vec!["b2".into(), "a1".into()])]);
        assert_eq!(s.relations[2][0].0, -2);
        assert_eq!(parse_spec(&s.to_string()).unwrap(), s);
        assert!(s.to_string().contains("relation a2*b3 - b2*a1\n"));
    }

    #[test]
    fn dangling_operator() {
        let err = parse_spec("vertex 1\narrow a: 1 -> 1\nrelation a*").unwrap_err();
        assert_eq!(err, Error::Syntax { line: 3, col: 11, message: "dangling `*`".into() });
        let err = parse_spec("vertex 1\narrow a: 1 -> 1\nrelation a*a -").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, col: 14, .. }));
    }

    #[test]
    fn semantic_errors_carry_lines() {
        let err = parse_spec("vertex 1\narrow a: 1 -> 2\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }));
        let err = parse_spec("vertex 1\nvertex 2\narrow a: 1 -> 2\n\nrelation a*a\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 5, .. }));
        let err = parse_spec("vertex 1\nrelation c*c\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }));
        assert!(matches!(parse_spec("field = Fp 8"), Err(Error::Syntax { line: 1, col: 12, .. })));
        assert!(matches!(parse_spec("arrow 12: 1 -> 1"), Err(Error::Syntax { line: 1, col: 7, .. })));
    }
}
