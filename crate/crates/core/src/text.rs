//! Text form of ideals.
//!
//! ```text
//! document ::= header? ideal
//! header   ::= 'vars' name (',' name)*
//! ideal    ::= '(' mono (',' mono)* ')'
//! mono     ::= factor ('*' factor)*
//! factor   ::= name ('^' uint)?
//! ```
//!
//! Without a header, names must be `x<k>` and the ring is `x1..xN` with `N`
//! the largest index seen. Whitespace is insignificant.

use std::fmt;

use crate::ideal::{Monomial, MonomialIdeal, VariableSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Unexpected input; `expected` names what the grammar wanted.
    Syntax { expected: String, found: String },
    UnknownVariable(String),
    ZeroExponent,
    ExponentOverflow,
    EmptyGeneratorList,
    InvalidHeader(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax { expected, found } => write!(f, "expected {expected}, found {found}"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            ParseErrorKind::ZeroExponent => write!(f, "exponent literal must be positive"),
            ParseErrorKind::ExponentOverflow => write!(f, "exponent does not fit in 32 bits"),
            ParseErrorKind::EmptyGeneratorList => write!(f, "empty generator list"),
            ParseErrorKind::InvalidHeader(msg) => write!(f, "invalid vars header: {msg}"),
        }
    }
}

/// Result of parsing a document.
#[derive(Debug, Clone)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    /// True when the ring was inferred from `x<k>` names rather than declared.
    pub implicit_vars: bool,
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, column)
    }

    fn error_at(&self, pos: usize, kind: ParseErrorKind) -> ParseError {
        let (line, column) = self.location(pos);
        ParseError { line, column, kind }
    }

    fn syntax(&self, expected: &str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".to_string(),
        };
        self.error_at(self.pos, ParseErrorKind::Syntax { expected: expected.to_string(), found })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, what: &str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(what))
        }
    }

    fn name(&mut self) -> Result<(usize, &'a str), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_alphabetic() || c == '_' => {}
            _ => return Err(self.syntax("variable name")),
        }
        let len = chars
            .find(|(_, c)| !(c.is_alphanumeric() || *c == '_' || *c == '#'))
            .map_or(rest.len(), |(i, _)| i);
        self.pos += len;
        Ok((start, &rest[..len]))
    }

    fn uint(&mut self) -> Result<(usize, u32), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits: &str = {
            let rest = &self.src[start..];
            let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            &rest[..len]
        };
        if digits.is_empty() {
            return Err(self.syntax("exponent"));
        }
        self.pos += digits.len();
        let value = digits
            .parse::<u32>()
            .map_err(|_| self.error_at(start, ParseErrorKind::ExponentOverflow))?;
        Ok((start, value))
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }
}

type RawMonomial<'a> = Vec<(usize, &'a str, u32)>;

fn parse_body<'a>(cur: &mut Cursor<'a>) -> Result<Vec<RawMonomial<'a>>, ParseError> {
    cur.expect('(', "`(`")?;
    cur.skip_ws();
    if cur.peek() == Some(')') {
        return Err(cur.error_at(cur.pos, ParseErrorKind::EmptyGeneratorList));
    }
    let mut monos = Vec::new();
    loop {
        let mut factors = Vec::new();
        loop {
            let (pos, name) = cur.name()?;
            let exp = if cur.eat('^') {
                let (epos, e) = cur.uint()?;
                if e == 0 {
                    return Err(cur.error_at(epos, ParseErrorKind::ZeroExponent));
                }
                e
            } else {
                1
            };
            factors.push((pos, name, exp));
            if !cur.eat('*') {
                break;
            }
        }
        monos.push(factors);
        if cur.eat(',') {
            continue;
        }
        if cur.eat(')') {
            break;
        }
        return Err(cur.syntax("`*`, `,` or `)`"));
    }
    if !cur.at_end() {
        return Err(cur.syntax("end of input"));
    }
    Ok(monos)
}

fn parse_header(cur: &mut Cursor<'_>) -> Result<Option<VariableSet>, ParseError> {
    cur.skip_ws();
    let rest = &cur.src[cur.pos..];
    let is_header = rest.starts_with("vars")
        && rest[4..].chars().next().is_some_and(char::is_whitespace);
    if !is_header {
        return Ok(None);
    }
    let start = cur.pos;
    cur.pos += 4;
    let mut names = Vec::new();
    loop {
        let (_, name) = cur.name()?;
        names.push(name.to_string());
        if !cur.eat(',') {
            break;
        }
    }
    VariableSet::new(names)
        .map(Some)
        .map_err(|e| cur.error_at(start, ParseErrorKind::InvalidHeader(e.to_string())))
}

fn assemble(
    cur: &Cursor<'_>,
    vars: VariableSet,
    monos: &[RawMonomial<'_>],
) -> Result<MonomialIdeal, ParseError> {
    let n = vars.len();
    let mut gens = Vec::with_capacity(monos.len());
    for factors in monos {
        let mut exps = vec![0u32; n];
        for &(pos, name, e) in factors {
            let i = vars
                .index_of(name)
                .ok_or_else(|| cur.error_at(pos, ParseErrorKind::UnknownVariable(name.to_string())))?;
            exps[i] = exps[i]
                .checked_add(e)
                .ok_or_else(|| cur.error_at(pos, ParseErrorKind::ExponentOverflow))?;
        }
        gens.push(Monomial::new(exps));
    }
    Ok(MonomialIdeal::from_gens_unchecked(vars, gens))
}

fn implicit_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Parses a document, using its `vars` header or inferring `x1..xN`.
pub fn parse_ideal(text: &str) -> Result<ParsedIdeal, ParseError> {
    let mut cur = Cursor::new(text);
    let header = parse_header(&mut cur)?;
    let monos = parse_body(&mut cur)?;
    match header {
        Some(vars) => Ok(ParsedIdeal { ideal: assemble(&cur, vars, &monos)?, implicit_vars: false }),
        None => {
            let mut n = 0;
            for &(pos, name, _) in monos.iter().flatten() {
                let k = implicit_index(name)
                    .ok_or_else(|| cur.error_at(pos, ParseErrorKind::UnknownVariable(name.to_string())))?;
                n = n.max(k);
            }
            if n > crate::ideal::MAX_VARS {
                return Err(cur.error_at(0, ParseErrorKind::InvalidHeader(format!("{n} variables exceed the limit"))));
            }
            let vars = VariableSet::indexed(n);
            Ok(ParsedIdeal { ideal: assemble(&cur, vars, &monos)?, implicit_vars: true })
        }
    }
}

/// Parses an ideal over an explicitly given ring. A header in `text`, if present, must match.
pub fn parse_ideal_over(text: &str, vars: &VariableSet) -> Result<MonomialIdeal, ParseError> {
    let mut cur = Cursor::new(text);
    if let Some(declared) = parse_header(&mut cur)? {
        if &declared != vars {
            return Err(cur.error_at(0, ParseErrorKind::InvalidHeader("does not match the given variables".into())));
        }
    }
    let monos = parse_body(&mut cur)?;
    assemble(&cur, vars.clone(), &monos)
}

pub fn render_monomial(vars: &VariableSet, m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { vars.name(i).to_string() } else { format!("{}^{}", vars.name(i), e) })
        .collect();
    parts.join("*")
}

/// `(g1, g2, ...)`; the zero ideal renders as `(0)`.
pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        return "(0)".to_string();
    }
    let gens: Vec<String> = ideal.gens().iter().map(|g| render_monomial(ideal.vars(), g)).collect();
    format!("({})", gens.join(", "))
}

/// Header plus body; always reparses to an equal ideal for proper nonzero ideals.
pub fn render_document(ideal: &MonomialIdeal) -> String {
    format!("vars {}\n{}", ideal.vars().names().join(","), render_ideal(ideal))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_implicit_variables() {
        let p = parse_ideal("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)").unwrap();
        assert!(p.implicit_vars);
        assert_eq!(p.ideal.nvars(), 3);
        assert_eq!(p.ideal.gens().len(), 5);
    }

    #[test]
    fn parses_header() {
        let p = parse_ideal("vars u,x,y,z,w\n(u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)").unwrap();
        assert!(!p.implicit_vars);
        assert_eq!(p.ideal.vars().names(), &["u", "x", "y", "z", "w"]);
        assert_eq!(p.ideal.gens().len(), 6);
    }

    #[test]
    fn empty_list_is_an_error() {
        let e = parse_ideal("()").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::EmptyGeneratorList);
        assert_eq!((e.line, e.column), (1, 2));
    }

    #[test]
    fn zero_exponent_is_an_error() {
        let e = parse_ideal("(x1^0)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ZeroExponent);
        assert_eq!(e.column, 5);
    }

    #[test]
    fn unknown_variable_is_an_error() {
        let e = parse_ideal("vars a,b\n(a*c)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("c".into()));
        assert_eq!((e.line, e.column), (2, 4));
        let e = parse_ideal("(y*x1)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("y".into()));
    }

    #[test]
    fn syntax_errors_name_the_expected_token() {
        let e = parse_ideal("(x1 x2)").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax { ref expected, .. } if expected.contains("`)`")));
        let e = parse_ideal("x1").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax { ref expected, .. } if expected == "`(`"));
    }

    #[test]
    fn whitespace_is_insignificant() {
        let a = parse_ideal("( x1 ^ 2 ,\n x2 * x1 )").unwrap().ideal;
        let b = parse_ideal("(x1^2,x1*x2)").unwrap().ideal;
        assert_eq!(a, b);
    }

    #[test]
    fn render_reparses() {
        let p = parse_ideal("vars a,b#1,c\n(a^2*c, b#1*c)").unwrap().ideal;
        let back = parse_ideal(&render_document(&p)).unwrap().ideal;
        assert_eq!(p, back);
        assert_eq!(render_ideal(&p), "(a^2*c, b#1*c)");
    }
}
