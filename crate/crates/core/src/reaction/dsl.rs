//! Line-oriented reaction syntax.
//!
//! ```text
//! reaction := side "->" side [ "+" number ("MeV" | "GeV") ]
//! side     := term ( "+" term )*
//! term     := [integer] name
//! name     := id | "anti:" name | "susy:" name | element "-" A
//! ```
//!
//! A trailing sign belongs to the name (`e+`, `pi-`), so `e+ + nu_e` and
//! `e++nu_e` read the same; an unknown `x+` whose stem `x` is known reads as
//! `x +`. `#` starts a comment.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Reaction, ReactionSide};
use crate::registry::{Registry, RegistryError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at column {}: {message}", position + 1)]
    Syntax { position: usize, message: String },
    #[error("unknown particle {name:?} at column {}", position + 1)]
    UnknownParticle { name: String, position: usize },
    #[error("no supersymmetric partner for {name:?} at column {}", position + 1)]
    NoPartner { name: String, position: usize },
}

impl ParseError {
    fn syntax(position: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Name(String),
    Number(String),
    Plus,
    Arrow,
}

fn is_name_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_'
}

fn is_name_char(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_' || b == b':'
}

fn tokenize(line: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = line.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b == b'#' {
            break;
        }
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if b == b'-' && bytes.get(i + 1) == Some(&b'>') {
            out.push((start, Token::Arrow));
            i += 2;
        } else if b == b'+' {
            out.push((start, Token::Plus));
            i += 1;
        } else if b.is_ascii_digit() {
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            out.push((start, Token::Number(line[start..i].to_string())));
        } else if is_name_start(b) {
            while i < bytes.len() && is_name_char(bytes[i]) {
                i += 1;
            }
            match bytes.get(i) {
                // nuclide mass number
                Some(b'-') if bytes.get(i + 1).is_some_and(u8::is_ascii_digit) => {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                Some(b'-') if bytes.get(i + 1) != Some(&b'>') => i += 1,
                Some(b'+') => i += 1,
                _ => {}
            }
            out.push((start, Token::Name(line[start..i].to_string())));
        } else {
            return Err(ParseError::syntax(
                start,
                format!(
                    "unexpected character {:?}",
                    line[start..].chars().next().unwrap_or(' ')
                ),
            ));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    registry: &'a Registry,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn peek_at(&self, offset: usize) -> Option<&Token> {
        self.tokens.get(self.pos + offset).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn energy_ahead(&self) -> bool {
        matches!(
            (self.peek(), self.peek_at(1)),
            (Some(Token::Number(_)), Some(Token::Name(unit))) if unit == "MeV" || unit == "GeV"
        ) && self.tokens.len() == self.pos + 2
    }

    fn term(&mut self, side: &mut ReactionSide) -> Result<(), ParseError> {
        let mut count = 1u32;
        if let Some(Token::Number(text)) = self.peek().cloned() {
            let at = self.position();
            count =
                text.parse().ok().filter(|&c| c >= 1).ok_or_else(|| {
                    ParseError::syntax(at, "multiplicity must be a positive integer")
                })?;
            self.pos += 1;
        }
        match self.next() {
            Some((at, Token::Name(mut name))) => {
                // `p+n` with no spaces: the sign is a separator, not part of the name
                if name.ends_with('+')
                    && self.registry.resolve(&name).is_err()
                    && self.registry.resolve(&name[..name.len() - 1]).is_ok()
                {
                    name.pop();
                    self.tokens.insert(self.pos, (at + name.len(), Token::Plus));
                }
                let particle = self.registry.resolve(&name).map_err(|e| match e {
                    RegistryError::NoPartner(_) => ParseError::NoPartner {
                        name: name.clone(),
                        position: at,
                    },
                    _ => ParseError::UnknownParticle {
                        name: name.clone(),
                        position: at,
                    },
                })?;
                side.add(particle, count);
                Ok(())
            }
            Some((at, _)) => Err(ParseError::syntax(at, "expected a particle name")),
            None => Err(ParseError::syntax(self.end, "expected a particle name")),
        }
    }

    fn side(&mut self, allow_energy: bool) -> Result<(ReactionSide, Option<f64>), ParseError> {
        let mut side = ReactionSide::new();
        self.term(&mut side)?;
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            if allow_energy && self.energy_ahead() {
                let at = self.position();
                let Some((_, Token::Number(value))) = self.next() else {
                    unreachable!()
                };
                let Some((_, Token::Name(unit))) = self.next() else {
                    unreachable!()
                };
                let value: f64 = value
                    .parse()
                    .map_err(|_| ParseError::syntax(at, "malformed energy"))?;
                let mev = if unit == "GeV" { value * 1000.0 } else { value };
                return Ok((side, Some(mev)));
            }
            self.term(&mut side)?;
        }
        Ok((side, None))
    }
}

/// Parses one reaction line, resolving names against `registry`.
pub fn parse(text: &str, registry: &Registry) -> Result<Reaction, ParseError> {
    let tokens = tokenize(text)?;
    let end = text.find('#').unwrap_or(text.len());
    let mut p = Parser {
        tokens,
        pos: 0,
        end,
        registry,
    };
    let (reactants, _) = p.side(false)?;
    match p.next() {
        Some((_, Token::Arrow)) => {}
        Some((at, _)) => return Err(ParseError::syntax(at, "expected '->'")),
        None => return Err(ParseError::syntax(end, "expected '->'")),
    }
    let (products, energy) = p.side(true)?;
    if let Some((at, _)) = p.next() {
        return Err(ParseError::syntax(at, "unexpected trailing input"));
    }
    let mut r = Reaction::new(reactants, products);
    r.energy_release_mev = energy;
    Ok(r)
}

fn render_side(side: &ReactionSide) -> String {
    let parts: Vec<String> = side
        .terms()
        .iter()
        .map(|t| match t.count {
            1 => t.particle.id.clone(),
            n => format!("{n} {}", t.particle.id),
        })
        .collect();
    parts.join(" + ")
}

/// Canonical text form; [`parse`] reads it back to an equal reaction.
pub fn render(r: &Reaction) -> String {
    let mut s = format!(
        "{} -> {}",
        render_side(&r.reactants),
        render_side(&r.products)
    );
    if let Some(e) = r.energy_release_mev {
        s.push_str(&format!(" + {e} MeV"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokenizes_signs_and_nuclides() {
        let toks: Vec<Token> = tokenize("2H-1+e++D-2 -> He-3")
            .unwrap()
            .into_iter()
            .map(|(_, t)| t)
            .collect();
        assert_eq!(
            toks,
            alloc::vec![
                Token::Number("2".into()),
                Token::Name("H-1".into()),
                Token::Plus,
                Token::Name("e+".into()),
                Token::Plus,
                Token::Name("D-2".into()),
                Token::Arrow,
                Token::Name("He-3".into()),
            ]
        );
    }

    #[test]
    fn minus_before_arrow_is_a_sign() {
        let toks: Vec<Token> = tokenize("e--> x")
            .unwrap()
            .into_iter()
            .map(|(_, t)| t)
            .collect();
        assert_eq!(toks[0], Token::Name("e-".into()));
        assert_eq!(toks[1], Token::Arrow);
        let toks: Vec<Token> = tokenize("e->x")
            .unwrap()
            .into_iter()
            .map(|(_, t)| t)
            .collect();
        assert_eq!(toks[0], Token::Name("e".into()));
    }

    #[test]
    fn comments_are_ignored() {
        assert_eq!(tokenize("# nothing").unwrap(), alloc::vec![]);
    }

    #[test]
    fn stray_characters_are_syntax_errors() {
        assert!(matches!(
            tokenize("a -> b ; c"),
            Err(ParseError::Syntax { position: 7, .. })
        ));
    }
}
