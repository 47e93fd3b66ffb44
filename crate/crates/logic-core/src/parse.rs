//! Recursive-descent parser with byte-offset errors.

use crate::{Formula, LogicError};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Tilde,
    Amp,
    Pipe,
    Arrow,
    Turnstile,
    LParen,
    RParen,
    Comma,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, LogicError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'~' => {
                toks.push((i, Tok::Tilde));
                i += 1;
            }
            b'&' => {
                toks.push((i, Tok::Amp));
                i += 1;
            }
            b'(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            b',' => {
                toks.push((i, Tok::Comma));
                i += 1;
            }
            b'|' => {
                if bytes.get(i + 1) == Some(&b'-') {
                    toks.push((i, Tok::Turnstile));
                    i += 2;
                } else {
                    toks.push((i, Tok::Pipe));
                    i += 1;
                }
            }
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((i, Tok::Arrow));
                    i += 2;
                } else {
                    return Err(LogicError::Syntax {
                        offset: i,
                        message: "expected '->'".into(),
                    });
                }
            }
            b'a'..=b'z' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase()
                        || bytes[i].is_ascii_digit()
                        || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(input[start..i].to_string())));
            }
            _ => {
                return Err(LogicError::Syntax {
                    offset: i,
                    message: format!("unexpected character '{}'", &input[i..i + 1]),
                });
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, message: impl Into<String>) -> LogicError {
        LogicError::Syntax {
            offset: self.offset(),
            message: message.into(),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), LogicError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    // implication, right-associative, loosest binder
    fn formula(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.or_chain()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            let rhs = self.formula()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or_chain(&mut self) -> Result<Formula, LogicError> {
        let mut f = self.and_chain()?;
        while self.peek() == Some(&Tok::Pipe) {
            self.pos += 1;
            f = Formula::or(f, self.and_chain()?);
        }
        Ok(f)
    }

    fn and_chain(&mut self) -> Result<Formula, LogicError> {
        let mut f = self.unary()?;
        while self.peek() == Some(&Tok::Amp) {
            self.pos += 1;
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, LogicError> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(f)
            }
            Some(Tok::Ident(_)) => {
                if let Some(Tok::Ident(name)) = self.bump() {
                    Ok(Formula::atom(name))
                } else {
                    unreachable!()
                }
            }
            _ => Err(self.err("expected formula")),
        }
    }

    // top level: formula, or `p1, p2 |- c`, or `|- c`
    fn top(&mut self) -> Result<Formula, LogicError> {
        if self.peek() == Some(&Tok::Turnstile) {
            self.pos += 1;
            let c = self.formula()?;
            return Ok(Formula::sequent(vec![], c));
        }
        let first = self.formula()?;
        match self.peek() {
            Some(Tok::Comma) | Some(Tok::Turnstile) => {
                let mut premises = vec![first];
                while self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    premises.push(self.formula()?);
                }
                self.expect(Tok::Turnstile, "'|-'")?;
                let c = self.formula()?;
                Ok(Formula::sequent(premises, c))
            }
            _ => Ok(first),
        }
    }
}

/// Parse a formula or top-level sequent.
pub fn parse_formula(input: &str) -> Result<Formula, LogicError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: input.len(),
    };
    let f = p.top()?;
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}
