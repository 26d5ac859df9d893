//! Plain-text format for ideals, families and Hilbert polynomials.
//!
//! A document is a list of generators separated by `;` or newlines. `#`
//! starts a comment that runs to the end of the line. Terms are products of
//! rationals and variable powers such as `-3/2*x^2*y`; parentheses group
//! subexpressions. The variables are `x, y, z, t`, plus `a` when a family
//! parameter is allowed.

use std::fmt;

use hilb4n_core::hilbert::HilbertPolynomial;
use hilb4n_core::scalar;
use hilb4n_core::{Ideal, Polynomial, Scalar};
use num_traits::{One, ToPrimitive, Zero};

pub const VARIABLES: [&str; 4] = ["x", "y", "z", "t"];
pub const PARAMETER: &str = "a";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    /// Accept the family parameter `a`.
    pub allow_parameter: bool,
    pub allow_inhomogeneous: bool,
}

#[derive(Clone, Debug)]
pub struct IdealDocument {
    pub variables: Vec<String>,
    pub generators: Vec<Polynomial>,
}

impl IdealDocument {
    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.nvars(), self.generators.clone())
    }

    pub fn names(&self) -> Vec<&str> {
        self.variables.iter().map(String::as_str).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
    Sep,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let chars: Vec<char> = raw.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            match c {
                '#' => break,
                ' ' | '\t' | '\r' => i += 1,
                ';' => {
                    out.push(Token { tok: Tok::Sep, line, column });
                    i += 1;
                }
                '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                    out.push(Token { tok: Tok::Sym(c), line, column });
                    i += 1;
                }
                d if d.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    out.push(Token { tok: Tok::Num(chars[start..i].iter().collect()), line, column });
                }
                a if a.is_alphabetic() => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line, column });
                }
                other => {
                    return Err(ParseError { line, column, message: format!("unexpected character '{other}'") });
                }
            }
        }
        out.push(Token { tok: Tok::Sep, line, column: chars.len() + 1 });
    }
    let (line, column) = out.last().map_or((1, 1), |t| (t.line, t.column));
    out.push(Token { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        self.pos += 1;
        t
    }

    fn err<T>(&self, t: &Token, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { line: t.line, column: t.column, message: message.into() })
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.vars.len();
        let mut acc = Polynomial::zero(n);
        let mut sign = Scalar::one();
        if let Tok::Sym(c @ ('+' | '-')) = self.peek().tok {
            self.bump();
            if c == '-' {
                sign = -sign;
            }
        }
        loop {
            let term = self.term()?;
            acc = &acc + &term.scale(&sign);
            match self.peek().tok {
                Tok::Sym('+') => sign = Scalar::one(),
                Tok::Sym('-') => sign = -Scalar::one(),
                _ => return Ok(acc),
            }
            self.bump();
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Sym('*') {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match &t.tok {
            Tok::Num(s) => match s.parse::<u32>() {
                Ok(e) if e <= 255 => Ok(base.pow(e)),
                _ => self.err(&t, format!("exponent {s} out of range")),
            },
            _ => self.err(&t, "expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.vars.len();
        let t = self.bump();
        match &t.tok {
            Tok::Num(s) => {
                let mut c = scalar::parse(s).expect("digits");
                if self.peek().tok == Tok::Sym('/') {
                    self.bump();
                    let d = self.bump();
                    match &d.tok {
                        Tok::Num(ds) => {
                            let den = scalar::parse(ds).expect("digits");
                            if den.is_zero() {
                                return self.err(&d, "division by zero");
                            }
                            c /= den;
                        }
                        _ => return self.err(&d, "expected a denominator"),
                    }
                }
                Ok(Polynomial::constant(c, n))
            }
            Tok::Ident(name) => match self.vars.iter().position(|v| v == name) {
                Some(i) => Ok(Polynomial::var(i, n)),
                None => self.err(&t, format!("unknown variable '{name}'")),
            },
            Tok::Sym('(') => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::Sym(')') {
                    return self.err(&close, "expected ')'");
                }
                Ok(inner)
            }
            Tok::Sep | Tok::End => self.err(&t, "unexpected end of expression"),
            Tok::Sym(c) => self.err(&t, format!("unexpected '{c}'")),
        }
    }

    /// Generators with the position of their first token.
    fn document(&mut self) -> Result<Vec<(Polynomial, Token)>, ParseError> {
        let mut out = Vec::new();
        loop {
            match self.peek().tok {
                Tok::End => return Ok(out),
                Tok::Sep => {
                    self.bump();
                }
                _ => {
                    let start = self.peek().clone();
                    let p = self.expr()?;
                    let next = self.peek().clone();
                    if !matches!(next.tok, Tok::Sep | Tok::End) {
                        return self.err(&next, "expected ';' or a new line");
                    }
                    out.push((p, start));
                }
            }
        }
    }
}

fn parse_in(text: &str, vars: &[&str]) -> Result<Vec<(Polynomial, Token)>, ParseError> {
    Parser { toks: lex(text)?, pos: 0, vars }.document()
}

/// Parses an ideal document over `x, y, z, t` (and `a` when allowed).
pub fn parse_ideal(text: &str, opts: ParseOptions) -> Result<IdealDocument, ParseError> {
    let mut names: Vec<&str> = VARIABLES.to_vec();
    if opts.allow_parameter {
        names.push(PARAMETER);
    }
    let mut generators = Vec::new();
    for (p, at) in parse_in(text, &names)? {
        if !opts.allow_inhomogeneous && !p.is_homogeneous_in(VARIABLES.len()) {
            return Err(ParseError { line: at.line, column: at.column, message: "inhomogeneous generator".into() });
        }
        if !p.is_zero() {
            generators.push(p);
        }
    }
    Ok(IdealDocument { variables: names.iter().map(|s| s.to_string()).collect(), generators })
}

/// Parses a single polynomial in `n`, e.g. `4*n` or `n^2/2 + 3/2*n + 1`.
pub fn parse_hilbert_polynomial(text: &str) -> Result<HilbertPolynomial, ParseError> {
    let mut parts = parse_in(text, &["n"])?;
    if parts.len() != 1 {
        return Err(ParseError { line: 1, column: 1, message: "expected exactly one polynomial in n".into() });
    }
    let (p, _) = parts.pop().unwrap();
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Scalar::zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exp(0) as usize] = c.clone();
    }
    Ok(HilbertPolynomial::new(coeffs))
}

/// One generator per line; reparses to the same ideal.
pub fn format_ideal(doc: &IdealDocument) -> String {
    let names = doc.names();
    doc.generators.iter().map(|g| g.fmt_with(&names) + "\n").collect()
}

pub fn format_polynomial(p: &Polynomial) -> String {
    let names: Vec<&str> = if p.nvars() > VARIABLES.len() {
        VARIABLES.iter().copied().chain([PARAMETER]).collect()
    } else {
        VARIABLES.to_vec()
    };
    p.fmt_with(&names)
}

/// `4*n`-style text for a Hilbert polynomial.
pub fn format_hilbert_polynomial(p: &HilbertPolynomial) -> String {
    let terms: Vec<_> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (hilb4n_core::Monomial::from_exps(&[k as u32]), c.clone()))
        .collect();
    Polynomial::from_terms(1, terms).fmt_with(&["n"])
}

/// Integer value of a rational, when it is one.
pub fn as_integer(s: &Scalar) -> Option<i64> {
    if s.is_integer() {
        s.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hilb4n_core::borel::catalog;
    use proptest::prelude::{prop_assert, proptest};

    fn ideal(text: &str) -> Ideal {
        parse_ideal(text, ParseOptions::default()).unwrap().ideal()
    }

    #[test]
    fn catalog_text() {
        assert!(ideal("x^2; x*y; y^3").equal(&catalog()[0].ideal));
        assert!(ideal("x^2\nx*y # comment\n\ny^3").equal(&catalog()[0].ideal));
    }

    #[test]
    fn exact_coefficients() {
        let doc = parse_ideal("x*y - 3*z*t", ParseOptions::default()).unwrap();
        assert_eq!(doc.generators.len(), 1);
        let g = &doc.generators[0];
        let zt = hilb4n_core::Monomial::from_exps(&[0, 0, 1, 1]);
        assert_eq!(g.coefficient(&zt), scalar::int(-3));
        let half = parse_ideal("1/2*x - 3/4*(y + z)", ParseOptions::default()).unwrap();
        assert_eq!(half.generators[0].coefficient(&hilb4n_core::Monomial::from_exps(&[0, 1, 0, 0])), scalar::frac(-3, 4));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_ideal("x + y^2", ParseOptions::default()).unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        assert!(e.message.contains("inhomogeneous"));
        let e = parse_ideal("x^2\nx*w", ParseOptions::default()).unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_ideal("x*a", ParseOptions::default()).unwrap_err();
        assert!(e.message.contains("unknown variable"));
        assert!(parse_ideal("x*a - y", ParseOptions { allow_parameter: true, ..Default::default() }).is_ok());
        assert!(parse_ideal("x + y^2", ParseOptions { allow_inhomogeneous: true, ..Default::default() }).is_ok());
        let e = parse_ideal("x y", ParseOptions::default()).unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
        assert!(parse_ideal("x/0", ParseOptions::default()).is_err());
    }

    #[test]
    fn hilbert_polynomials() {
        assert_eq!(parse_hilbert_polynomial("4*n").unwrap(), HilbertPolynomial::from_ints(&[0, 4]));
        assert_eq!(parse_hilbert_polynomial("3*n + 1").unwrap(), HilbertPolynomial::from_ints(&[1, 3]));
        let p = HilbertPolynomial::from_ints(&[1, 3]);
        assert_eq!(format_hilbert_polynomial(&p), "3*n + 1");
        assert_eq!(parse_hilbert_polynomial(&format_hilbert_polynomial(&p)).unwrap(), p);
    }

    proptest! {
        #[test]
        fn round_trip(coeffs in proptest::collection::vec(-9i64..10, 1..12), dens in proptest::collection::vec(1i64..5, 12)) {
            let monos = hilb4n_core::Monomial::all_of_degree(4, 2);
            let terms = coeffs.iter().zip(&dens).zip(&monos).map(|((c, d), m)| (*m, scalar::frac(*c, *d))).collect();
            let doc = IdealDocument { variables: VARIABLES.iter().map(|s| s.to_string()).collect(), generators: vec![Polynomial::from_terms(4, terms)] };
            let text = format_ideal(&doc);
            let back = parse_ideal(&text, ParseOptions::default()).unwrap();
            prop_assert!(back.ideal().equal(&doc.ideal()));
            prop_assert!(back.generators == doc.generators.iter().filter(|g| !g.is_zero()).cloned().collect::<Vec<_>>());
        }
    }
}
