//! Recursive-descent parser for the polynomial grammar.
//!
//! Accepted input: integer and `p/q` coefficients, the variables `x, y` or
//! `u, v`, the operators `+ - * ^` and parentheses. Implicit multiplication
//! is allowed only inside a coefficient-times-monomial term such as `4x^5y`;
//! everything else needs an explicit `*`. Whitespace is ignored. Exponents
//! are non-negative decimal integers.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{BiPoly, VarPair};
use crate::error::{Error, Result};
use crate::rat::BigRat;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

struct Lexer {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
}

impl Lexer {
    fn new(text: &str) -> Result<Lexer> {
        let bytes: Vec<char> = text.chars().collect();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            let start = i;
            match c {
                ' ' | '\t' | '\n' | '\r' => {
                    i += 1;
                    continue;
                }
                '+' => tokens.push((Tok::Plus, start)),
                '-' => tokens.push((Tok::Minus, start)),
                '*' => tokens.push((Tok::Star, start)),
                '^' => tokens.push((Tok::Caret, start)),
                '/' => tokens.push((Tok::Slash, start)),
                '(' => tokens.push((Tok::LParen, start)),
                ')' => tokens.push((Tok::RParen, start)),
                '0'..='9' => {
                    let mut digits = String::new();
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        digits.push(bytes[i]);
                        i += 1;
                    }
                    let n: BigInt = digits.parse().expect("decimal digits");
                    tokens.push((Tok::Int(n), start));
                    continue;
                }
                'a'..='z' | 'A'..='Z' => {
                    tokens.push((Tok::Var(c), start));
                }
                _ => {
                    return Err(Error::Parse {
                        message: format!("unexpected character '{c}'"),
                        position: start,
                    })
                }
            }
            i += 1;
        }
        tokens.push((Tok::End, bytes.len()));
        Ok(Lexer { tokens, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].0
    }

    fn peek_pos(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }
}

struct Parser {
    lex: Lexer,
    pair: Option<VarPair>,
}

impl Parser {
    /// Map a variable name to (pair, slot) and check consistency across the
    /// whole input.
    fn var_slot(&mut self, name: char, position: usize) -> Result<(u32, u32)> {
        let (pair, slot) = match name {
            'x' => (VarPair::XY, 0),
            'y' => (VarPair::XY, 1),
            'u' => (VarPair::UV, 0),
            'v' => (VarPair::UV, 1),
            _ => return Err(Error::UnsupportedVariable { name, position }),
        };
        match self.pair {
            None => self.pair = Some(pair),
            Some(p) if p != pair => {
                return Err(Error::UnsupportedVariable { name, position });
            }
            _ => {}
        }
        Ok(if slot == 0 { (1, 0) } else { (0, 1) })
    }

    fn parse_expr(&mut self) -> Result<BiPoly> {
        let negate = if *self.lex.peek() == Tok::Minus {
            self.lex.next();
            true
        } else {
            false
        };
        let first = self.parse_term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.lex.peek() {
                Tok::Plus => {
                    self.lex.next();
                    let t = self.parse_term()?;
                    acc = acc.add(&t);
                }
                Tok::Minus => {
                    self.lex.next();
                    let t = self.parse_term()?;
                    acc = acc.sub(&t);
                }
                Tok::RParen | Tok::End => return Ok(acc),
                _ => {
                    return Err(Error::Parse {
                        message: "expected '+', '-' or end of expression".into(),
                        position: self.lex.peek_pos(),
                    })
                }
            }
        }
    }

    fn parse_term(&mut self) -> Result<BiPoly> {
        let mut acc = self.parse_factor()?;
        while *self.lex.peek() == Tok::Star {
            self.lex.next();
            let f = self.parse_factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<BiPoly> {
        match self.lex.peek().clone() {
            Tok::LParen => {
                self.lex.next();
                let inner = self.parse_expr()?;
                if *self.lex.peek() != Tok::RParen {
                    return Err(Error::Parse {
                        message: "expected ')'".into(),
                        position: self.lex.peek_pos(),
                    });
                }
                self.lex.next();
                let e = self.parse_opt_exponent()?;
                Ok(inner.pow(e))
            }
            Tok::Int(n) => {
                self.lex.next();
                let coeff = if *self.lex.peek() == Tok::Slash {
                    let slash_pos = self.lex.peek_pos();
                    self.lex.next();
                    match self.lex.next() {
                        (Tok::Int(d), pos) => {
                            if d.is_zero() {
                                return Err(Error::Parse {
                                    message: "zero denominator".into(),
                                    position: pos,
                                });
                            }
                            BigRat::new(n, d)
                        }
                        _ => {
                            return Err(Error::Parse {
                                message: "expected denominator after '/'".into(),
                                position: slash_pos + 1,
                            })
                        }
                    }
                } else {
                    BigRat::from_integer(n)
                };
                if matches!(self.lex.peek(), Tok::Var(_)) {
                    let m = self.parse_monomial()?;
                    Ok(m.scale(&coeff))
                } else {
                    Ok(BiPoly::constant(VarPair::XY, coeff))
                }
            }
            Tok::Var(_) => self.parse_monomial(),
            _ => Err(Error::Parse {
                message: "expected a term".into(),
                position: self.lex.peek_pos(),
            }),
        }
    }

    fn parse_monomial(&mut self) -> Result<BiPoly> {
        let mut acc = BiPoly::one(VarPair::XY);
        while let Tok::Var(name) = *self.lex.peek() {
            let pos = self.lex.peek_pos();
            self.lex.next();
            let (dx, dy) = self.var_slot(name, pos)?;
            let e = self.parse_opt_exponent()?;
            acc = acc.mul(&BiPoly::monomial(VarPair::XY, dx * e, dy * e, BigRat::from_integer(1.into())));
        }
        Ok(acc)
    }

    fn parse_opt_exponent(&mut self) -> Result<u32> {
        if *self.lex.peek() != Tok::Caret {
            return Ok(1);
        }
        self.lex.next();
        match self.lex.next() {
            (Tok::Int(n), pos) => u32::try_from(&n).map_err(|_| Error::Parse {
                message: "exponent too large".into(),
                position: pos,
            }),
            (Tok::Minus, pos) => Err(Error::NegativeExponent { position: pos }),
            (_, pos) => Err(Error::Parse {
                message: "expected exponent".into(),
                position: pos,
            }),
        }
    }
}

/// Parse a polynomial in the variables `x, y` or `u, v`.
///
/// Constant inputs default to the `(x, y)` label. Parsing the canonical
/// printed form of a polynomial gives the polynomial back.
pub fn parse_poly(text: &str) -> Result<BiPoly> {
    let lex = Lexer::new(text)?;
    let mut parser = Parser { lex, pair: None };
    let poly = parser.parse_expr()?;
    if *parser.lex.peek() != Tok::End {
        return Err(Error::Parse {
            message: "unexpected ')'".into(),
            position: parser.lex.peek_pos(),
        });
    }
    let pair = parser.pair.unwrap_or(VarPair::XY);
    Ok(poly.with_vars(pair))
}
