//! Expression grammar for algebra-valued polynomial maps.
//!
//! ```text
//! expr     := sign? term (sign term)* ;        sign := '+' | '-'
//! term     := factor ('*' factor)* ;
//! factor   := rational | variable | basis | variable '^' integer ;
//! rational := integer ('/' positive-integer)? ;
//! variable := 'x' digit ;
//! basis    := 'e' digit+ ;
//! ```
//!
//! Whitespace is insignificant. At most one basis symbol may appear in a
//! term; `e0` is a synonym for 1. In octonion/quaternion/real mode a basis
//! symbol is a single digit within the algebra's range; clifford mode allows
//! multi-digit blades (`e123`) with strictly increasing digits from 1 to 7.

use crate::clifford::Blade;
use crate::poly::{Monomial, Poly, DEGREE_CAP, NVARS};
use crate::polymap::{Algebra, PolyMap};
use crate::scalar::{int, Scalar};
use crate::Error;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(u64),
    Var(usize),
    Basis(Vec<u32>),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Eof,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn next_tok(&mut self) -> Result<(Tok, usize, usize), Error> {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.bump();
        }
        let (line, col) = (self.line, self.col);
        let Some(c) = self.peek() else {
            return Ok((Tok::Eof, line, col));
        };
        let tok = match c {
            b'+' => {
                self.bump();
                Tok::Plus
            }
            b'-' => {
                self.bump();
                Tok::Minus
            }
            b'*' => {
                self.bump();
                Tok::Star
            }
            b'^' => {
                self.bump();
                Tok::Caret
            }
            b'/' => {
                self.bump();
                Tok::Slash
            }
            b'0'..=b'9' => {
                let mut v: u64 = 0;
                while matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                    let d = self.bump().unwrap() - b'0';
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u64))
                        .ok_or_else(|| self.err("integer literal too large"))?;
                }
                Tok::Int(v)
            }
            b'x' => {
                self.bump();
                match self.peek() {
                    Some(d) if d.is_ascii_digit() => {
                        self.bump();
                        let i = (d - b'0') as usize;
                        if i >= NVARS {
                            return Err(Error::Parse {
                                line,
                                col,
                                msg: format!("unknown variable x{i} (variables are x0..x7)"),
                            });
                        }
                        Tok::Var(i)
                    }
                    _ => return Err(Error::Parse { line, col, msg: "expected digit after 'x'".into() }),
                }
            }
            b'e' => {
                self.bump();
                let mut digits = Vec::new();
                while matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                    digits.push((self.bump().unwrap() - b'0') as u32);
                }
                if digits.is_empty() {
                    return Err(Error::Parse { line, col, msg: "expected digit after 'e'".into() });
                }
                Tok::Basis(digits)
            }
            other => {
                return Err(Error::Parse {
                    line,
                    col,
                    msg: format!("unknown symbol '{}'", other as char),
                })
            }
        };
        Ok((tok, line, col))
    }
}

struct Parser<'a, S> {
    lex: Lexer<'a>,
    tok: Tok,
    tok_line: usize,
    tok_col: usize,
    algebra: Algebra,
    out: PolyMap<S>,
}

impl<'a, S: Scalar> Parser<'a, S> {
    fn advance(&mut self) -> Result<(), Error> {
        let (t, l, c) = self.lex.next_tok()?;
        self.tok = t;
        self.tok_line = l;
        self.tok_col = c;
        Ok(())
    }

    fn err_here(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.tok_line, col: self.tok_col, msg: msg.into() }
    }

    /// Resolves a basis token to a component index of the target algebra.
    fn basis_component(&self, digits: &[u32]) -> Result<usize, Error> {
        if digits == [0] {
            return Ok(0);
        }
        match self.algebra {
            Algebra::Real => Err(self.err_here("basis symbols are not allowed in real mode (only e0)")),
            Algebra::Quaternion | Algebra::Octonion => {
                let hi = if self.algebra == Algebra::Quaternion { 3 } else { 7 };
                if digits.len() != 1 || digits[0] > hi {
                    Err(self.err_here(format!(
                        "basis symbol out of range (expected e0..e{hi})"
                    )))
                } else {
                    Ok(digits[0] as usize)
                }
            }
            Algebra::Clifford => {
                let mut mask = 0u8;
                let mut prev = 0u32;
                for &d in digits {
                    if d < 1 || d > 7 {
                        return Err(self.err_here("blade digits must be between 1 and 7"));
                    }
                    if d <= prev {
                        return Err(self.err_here("blade digits must be strictly increasing"));
                    }
                    prev = d;
                    mask |= Blade::generator(d as usize).0;
                }
                Ok(mask as usize)
            }
        }
    }

    fn parse_term(&mut self, sign_negative: bool) -> Result<(), Error> {
        let mut coeff: S = if sign_negative { -S::one() } else { S::one() };
        let mut mono = Monomial::ONE;
        let mut basis: Option<usize> = None;
        loop {
            match std::mem::replace(&mut self.tok, Tok::Eof) {
                Tok::Int(n) => {
                    self.advance()?;
                    let mut value = int::<S>(n as i64);
                    if self.tok == Tok::Slash {
                        self.advance()?;
                        match std::mem::replace(&mut self.tok, Tok::Eof) {
                            Tok::Int(d) if d > 0 => {
                                self.advance()?;
                                value = value / int::<S>(d as i64);
                            }
                            Tok::Int(_) => return Err(self.err_here("denominator must be positive")),
                            _ => return Err(self.err_here("expected integer denominator")),
                        }
                    }
                    coeff = coeff * value;
                }
                Tok::Var(i) => {
                    self.advance()?;
                    let mut exp = 1u32;
                    if self.tok == Tok::Caret {
                        self.advance()?;
                        match std::mem::replace(&mut self.tok, Tok::Eof) {
                            Tok::Int(e) => {
                                self.advance()?;
                                if e > DEGREE_CAP as u64 {
                                    return Err(self.err_here(format!(
                                        "exponent overflow: {e} exceeds the degree cap {DEGREE_CAP}"
                                    )));
                                }
                                exp = e as u32;
                            }
                            _ => return Err(self.err_here("expected integer exponent")),
                        }
                    }
                    mono.0[i] += exp;
                    if mono.degree() > DEGREE_CAP {
                        return Err(self.err_here(format!(
                            "exponent overflow: term degree exceeds the cap {DEGREE_CAP}"
                        )));
                    }
                }
                Tok::Basis(digits) => {
                    self.advance()?;
                    if basis.is_some() {
                        return Err(self.err_here("at most one basis symbol per term"));
                    }
                    basis = Some(self.basis_component(&digits)?);
                }
                _ => return Err(self.err_here("expected a factor (rational, variable, or basis symbol)")),
            }
            if self.tok == Tok::Star {
                self.advance()?;
            } else {
                break;
            }
        }
        let comp = basis.unwrap_or(0);
        let mut p = Poly::zero();
        p.add_term(mono, coeff);
        self.out.add_to_component(comp, &p);
        Ok(())
    }

    fn parse_expr(&mut self) -> Result<(), Error> {
        let mut negative = match self.tok {
            Tok::Minus => {
                self.advance()?;
                true
            }
            Tok::Plus => {
                self.advance()?;
                false
            }
            _ => false,
        };
        loop {
            self.parse_term(negative)?;
            match self.tok {
                Tok::Plus => {
                    negative = false;
                    self.advance()?;
                }
                Tok::Minus => {
                    negative = true;
                    self.advance()?;
                }
                Tok::Eof => return Ok(()),
                _ => return Err(self.err_here("expected '+', '-', or end of input")),
            }
        }
    }
}

/// Parses an expression into a map tagged with the given algebra.
pub fn parse<S: Scalar>(src: &str, algebra: Algebra) -> Result<PolyMap<S>, Error> {
    let mut lex = Lexer::new(src);
    let (tok, tok_line, tok_col) = lex.next_tok()?;
    let mut p = Parser { lex, tok, tok_line, tok_col, algebra, out: PolyMap::zero(algebra) };
    p.parse_expr()?;
    Ok(p.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::{Rat, RatMap, RatPoly};
    use proptest::prelude::*;

    fn parse_oct(src: &str) -> RatMap {
        parse::<Rat>(src, Algebra::Octonion).unwrap()
    }

    #[test]
    fn spec_examples() {
        let f = parse_oct("x2*e1 - x7*e4");
        assert_eq!(*f.component(1), RatPoly::var(2));
        assert_eq!(*f.component(4), RatPoly::var(7).neg());

        let g = parse_oct("x1 - x2*e3");
        assert_eq!(*g.component(0), RatPoly::var(1));
        assert_eq!(*g.component(3), RatPoly::var(2).neg());

        assert!(parse_oct("0").is_zero());
    }

    #[test]
    fn rationals_exponents_and_e0() {
        let f = parse_oct("3/2*x1^2*e5 + e0 - 1/3");
        assert_eq!(
            *f.component(5),
            RatPoly::var(1).mul(&RatPoly::var(1)).scale(&ratio(3, 2))
        );
        assert_eq!(*f.component(0), RatPoly::constant(ratio(2, 3)));
    }

    #[test]
    fn leading_sign_and_whitespace() {
        let f = parse_oct("  -x1\n+ 2*e2 ");
        assert_eq!(*f.component(0), RatPoly::var(1).neg());
        assert_eq!(*f.component(2), RatPoly::constant(int(2)));
    }

    #[test]
    fn clifford_blades() {
        let f = parse::<Rat>("x1*e123 - e47", Algebra::Clifford).unwrap();
        assert_eq!(*f.component(0b0000111), RatPoly::var(1));
        assert_eq!(*f.component(0b1001000), RatPoly::one().neg());
        assert!(matches!(
            parse::<Rat>("e321", Algebra::Clifford),
            Err(Error::Parse { msg, .. }) if msg.contains("strictly increasing")
        ));
    }

    #[test]
    fn error_positions() {
        match parse::<Rat>("x1 + $", Algebra::Octonion) {
            Err(Error::Parse { line, col, msg }) => {
                assert_eq!((line, col), (1, 6));
                assert!(msg.contains("unknown symbol"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse::<Rat>("x9", Algebra::Octonion),
            Err(Error::Parse { msg, .. }) if msg.contains("unknown variable")
        ));
        assert!(matches!(
            parse::<Rat>("x1^70", Algebra::Octonion),
            Err(Error::Parse { msg, .. }) if msg.contains("exponent overflow")
        ));
        assert!(matches!(
            parse::<Rat>("e1*e2", Algebra::Octonion),
            Err(Error::Parse { msg, .. }) if msg.contains("one basis symbol")
        ));
        assert!(matches!(
            parse::<Rat>("e5", Algebra::Quaternion),
            Err(Error::Parse { msg, .. }) if msg.contains("out of range")
        ));
        assert!(matches!(
            parse::<Rat>("1/0", Algebra::Octonion),
            Err(Error::Parse { msg, .. }) if msg.contains("positive")
        ));
    }

    fn arb_map() -> impl Strategy<Value = RatMap> {
        proptest::collection::vec(
            (
                0usize..8,
                proptest::collection::vec(0u32..3, NVARS),
                -6i64..=6,
                1i64..=4,
            ),
            0..8,
        )
        .prop_map(|terms| {
            let mut f = RatMap::zero(Algebra::Octonion);
            for (comp, exps, num, den) in terms {
                let mut p = RatPoly::zero();
                p.add_term(Monomial(std::array::from_fn(|i| exps[i])), ratio(num, den));
                f.add_to_component(comp, &p);
            }
            f
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn render_parse_round_trip(f in arb_map()) {
            let rendered = f.render();
            let back = parse::<Rat>(&rendered, Algebra::Octonion).unwrap();
            prop_assert_eq!(back, f, "render: {}", rendered);
        }
    }
}
