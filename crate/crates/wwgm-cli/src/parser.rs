//! Expression parser for the CLI surface.
//!
//! Grammar: rationals `a/b`, the imaginary unit `i`, mode-dependent symbols,
//! `+ - * ^` and parentheses. `^` takes a nonnegative integer literal.
//! Commutative mode evaluates into a phase-space polynomial over (q, p);
//! operator mode preserves factor order and evaluates into an operator
//! polynomial (`Q`, `P` over the canonical pair; `Ad`, `A` over the boson
//! pair). The formal units `hbar`, `s`, `r` are accepted in every mode.

use wwgm::oppoly::{Algebra, OpPoly};
use wwgm::phasepoly::{Axis, PhasePoly, VarPair};
use wwgm::scalar::{coeff_i, Coeff, Rat, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { offset, message: message.into() })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((start, Tok::Num(input[start..i].to_string())));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((start, Tok::Ident(input[start..i].to_string())));
            }
            other => return err(i, format!("unexpected character `{other}`")),
        }
    }
    Ok(toks)
}

/// Something expressions can evaluate into.
pub trait ParseTarget: Sized + Clone {
    type Ctx: Copy;
    fn constant(ctx: Self::Ctx, c: Coeff) -> Self;
    fn symbol(ctx: Self::Ctx, name: &str) -> Option<Self>;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Result<Self, wwgm::Error>;
    fn pow(&self, k: u32) -> Result<Self, wwgm::Error>;
}

impl ParseTarget for PhasePoly {
    type Ctx = ();
    fn constant(_: (), c: Coeff) -> Self {
        PhasePoly::constant(VarPair::Qp, Scalar::from_coeff(c))
    }
    fn symbol(_: (), name: &str) -> Option<Self> {
        match name {
            "q" => Some(PhasePoly::var(VarPair::Qp, Axis::V1)),
            "p" => Some(PhasePoly::var(VarPair::Qp, Axis::V2)),
            "hbar" => Some(PhasePoly::constant(VarPair::Qp, Scalar::hbar())),
            "s" => Some(PhasePoly::constant(VarPair::Qp, Scalar::sym_s())),
            "r" => Some(PhasePoly::constant(VarPair::Qp, Scalar::sym_r())),
            _ => None,
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Result<Self, wwgm::Error> {
        PhasePoly::mul(self, rhs)
    }
    fn pow(&self, k: u32) -> Result<Self, wwgm::Error> {
        PhasePoly::pow(self, k)
    }
}

impl ParseTarget for OpPoly {
    type Ctx = Algebra;
    fn constant(algebra: Algebra, c: Coeff) -> Self {
        OpPoly::one(algebra).scale(&Scalar::from_coeff(c))
    }
    fn symbol(algebra: Algebra, name: &str) -> Option<Self> {
        match (algebra, name) {
            (Algebra::Qp, "Q") => Some(OpPoly::x(algebra)),
            (Algebra::Qp, "P") => Some(OpPoly::y(algebra)),
            (Algebra::AAdag, "Ad") => Some(OpPoly::x(algebra)),
            (Algebra::AAdag, "A") => Some(OpPoly::y(algebra)),
            (_, "hbar") => Some(OpPoly::one(algebra).scale(&Scalar::hbar())),
            (_, "s") => Some(OpPoly::one(algebra).scale(&Scalar::sym_s())),
            (_, "r") => Some(OpPoly::one(algebra).scale(&Scalar::sym_r())),
            _ => None,
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Result<Self, wwgm::Error> {
        OpPoly::mul(self, rhs)
    }
    fn pow(&self, k: u32) -> Result<Self, wwgm::Error> {
        OpPoly::pow(self, k)
    }
}

struct Parser<'a, V: ParseTarget> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    ctx: V::Ctx,
}

impl<'a, V: ParseTarget> Parser<'a, V> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn lift(&self, at: usize, r: Result<V, wwgm::Error>) -> Result<V, ParseError> {
        r.map_err(|e| ParseError { offset: at, message: e.to_string() })
    }

    fn expr(&mut self) -> Result<V, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<V, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            let at = self.offset();
            self.bump();
            let rhs = self.factor()?;
            acc = self.lift(at, acc.mul(&rhs))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<V, ParseError> {
        let mut negate = false;
        loop {
            match self.peek() {
                Some(Tok::Minus) => {
                    negate = !negate;
                    self.bump();
                }
                Some(Tok::Plus) => {
                    self.bump();
                }
                _ => break,
            }
        }
        let mut v = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let at = self.offset();
            let k = match self.bump() {
                Some(Tok::Num(digits)) => digits
                    .parse::<u32>()
                    .map_err(|_| ParseError { offset: at, message: "exponent too large".into() })?,
                Some(Tok::Minus) => return err(at, "negative exponent"),
                _ => return err(at, "expected a nonnegative integer exponent"),
            };
            v = self.lift(at, v.pow(k))?;
        }
        Ok(if negate { v.neg() } else { v })
    }

    fn primary(&mut self) -> Result<V, ParseError> {
        let at = self.offset();
        match self.bump().cloned() {
            Some(Tok::Num(numer)) => {
                let mut denom = "1".to_string();
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let at_den = self.offset();
                    match self.bump().cloned() {
                        Some(Tok::Num(d)) if d.chars().any(|c| c != '0') => denom = d,
                        Some(Tok::Num(_)) => return err(at_den, "zero denominator"),
                        _ => return err(at_den, "expected a denominator"),
                    }
                }
                let r: Rat = format!("{numer}/{denom}")
                    .parse()
                    .map_err(|_| ParseError { offset: at, message: "malformed rational".into() })?;
                Ok(V::constant(self.ctx, Coeff::new(r, wwgm::scalar::rat(0, 1))))
            }
            Some(Tok::Ident(name)) if name == "i" => Ok(V::constant(self.ctx, coeff_i())),
            Some(Tok::Ident(name)) => match V::symbol(self.ctx, &name) {
                Some(v) => Ok(v),
                None => err(at, format!("unknown symbol `{name}`")),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => err(at, "unclosed parenthesis"),
                }
            }
            _ => err(at, "expected a value"),
        }
    }
}

pub fn parse<V: ParseTarget>(input: &str, ctx: V::Ctx) -> Result<V, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser::<V> { toks: &toks, pos: 0, end: input.len(), ctx };
    let v = p.expr()?;
    if p.pos != toks.len() {
        return err(p.offset(), "unexpected trailing input");
    }
    Ok(v)
}

/// Commutative-mode expression over (q, p).
pub fn parse_phase(input: &str) -> Result<PhasePoly, ParseError> {
    parse::<PhasePoly>(input, ())
}

/// Operator-mode expression; factor order is significant.
pub fn parse_op(input: &str, algebra: Algebra) -> Result<OpPoly, ParseError> {
    parse::<OpPoly>(input, algebra)
}

/// A concrete Gaussian-rational literal such as `1/2`, `-1`, `i`, `(1+i)`.
pub fn parse_gauss(input: &str) -> Result<Coeff, ParseError> {
    let v = parse_phase(input)?;
    let only_constant = v.terms().all(|((a, b), _)| (*a, *b) == (0, 0));
    let value = if only_constant { v.coeff(0, 0).constant() } else { None };
    value.ok_or(ParseError {
        offset: 0,
        message: "expected a concrete Gaussian-rational value".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use wwgm::scalar::rat;

    #[test]
    fn commutative_example() {
        let got = parse_phase("q^2*p - i*hbar*q").unwrap();
        let expected = &PhasePoly::monomial(VarPair::Qp, 2, 1, Scalar::one()).unwrap()
            - &PhasePoly::monomial(VarPair::Qp, 1, 0, Scalar::i_hbar()).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn operator_example_reorders() {
        let got = parse_op("P*Q", Algebra::Qp).unwrap();
        let expected = &OpPoly::monomial(Algebra::Qp, 1, 1, Scalar::one()).unwrap()
            - &OpPoly::one(Algebra::Qp).scale(&Scalar::i_hbar());
        assert_eq!(got, expected);
    }

    #[test]
    fn negative_exponent_rejected_at_offset() {
        let e = parse_phase("q^-1").unwrap_err();
        assert_eq!(e.offset, 2);
        assert!(e.message.contains("negative exponent"));
    }

    #[test]
    fn unknown_symbol_and_mode_separation() {
        let e = parse_phase("Q*P").unwrap_err();
        assert!(e.message.contains("unknown symbol"));
        let e = parse_op("q", Algebra::Qp).unwrap_err();
        assert!(e.message.contains("unknown symbol"));
        let e = parse_op("Q", Algebra::AAdag).unwrap_err();
        assert!(e.message.contains("unknown symbol"));
        assert!(parse_op("Ad*A", Algebra::AAdag).is_ok());
    }

    #[test]
    fn rational_literals() {
        let got = parse_phase("3/4 - 1/4").unwrap();
        assert_eq!(got, PhasePoly::constant(VarPair::Qp, Scalar::from_rat(rat(1, 2))));
        assert!(parse_phase("1/0").is_err());
        // slash outside a rational literal is rejected
        assert!(parse_phase("q/2").is_err());
    }

    #[test]
    fn display_round_trip() {
        let samples = [
            "q^2*p - i*hbar*q",
            "0",
            "1",
            "-q",
            "(1+2*i)*hbar^2*s*q*p",
            "1/2*i*hbar - 3*r^2",
        ];
        for text in samples {
            let v = parse_phase(text).unwrap();
            let round = parse_phase(&v.to_string()).unwrap();
            assert_eq!(v, round, "fixed point fails for {text}");
        }
        let op_samples = ["Q^2*P - i*hbar", "P*Q*P", "-2*Q + (1-i)*P^3"];
        for text in op_samples {
            let v = parse_op(text, Algebra::Qp).unwrap();
            let round = parse_op(&v.to_string(), Algebra::Qp).unwrap();
            assert_eq!(v, round, "fixed point fails for {text}");
        }
        let boson = parse_op("Ad^2*A - 1/3", Algebra::AAdag).unwrap();
        assert_eq!(parse_op(&boson.to_string(), Algebra::AAdag).unwrap(), boson);
    }

    #[test]
    fn gauss_literal() {
        assert_eq!(parse_gauss("1/2").unwrap(), Coeff::new(rat(1, 2), rat(0, 1)));
        assert_eq!(parse_gauss("-i").unwrap(), Coeff::new(rat(0, 1), rat(-1, 1)));
        assert!(parse_gauss("q").is_err());
        assert!(parse_gauss("hbar").is_err());
    }

    #[test]
    fn randomized_round_trip() {
        let mut state = 2024u64;
        let mut next = move || {
            state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^ (z >> 31)
        };
        for _ in 0..60 {
            let mut f = PhasePoly::zero(VarPair::Qp);
            let mut op = OpPoly::zero(Algebra::Qp);
            for _ in 0..=(next() % 4) {
                let coeff = Scalar::term(
                    wwgm::scalar::Powers {
                        hbar: (next() % 3) as u32,
                        s: (next() % 2) as u32,
                        r: (next() % 2) as u32,
                    },
                    Coeff::new(
                        rat((next() % 7) as i64 - 3, 1 + (next() % 3) as i64),
                        rat((next() % 7) as i64 - 3, 1 + (next() % 3) as i64),
                    ),
                );
                let (a, b) = ((next() % 4) as u32, (next() % 4) as u32);
                f = &f + &PhasePoly::monomial(VarPair::Qp, a, b, coeff.clone()).unwrap();
                op = &op + &OpPoly::monomial(Algebra::Qp, a, b, coeff).unwrap();
            }
            assert_eq!(parse_phase(&f.to_string()).unwrap(), f, "printed as {f}");
            assert_eq!(parse_op(&op.to_string(), Algebra::Qp).unwrap(), op, "printed as {op}");
        }
    }
}
