//! Textual grammar for represented-space expressions.
//!
//! ```text
//! expr  := atom (('*' | '/') atom)*        (left associative)
//! atom  := 'N' | 'S' | 'w+1' | 'Baire' | 'Cantor' | 'R10'
//!        | 'Fin(' nat ')' | 'Compl(' expr ')' | '(' expr ')'
//! ```
//!
//! `Display` on [`SpaceDesc`] prints in the same grammar, parenthesizing
//! nested binary operands, so printing and parsing round-trip.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::spaces::SpaceDesc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    /// Byte offset in the input where the error was detected.
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at byte {})", self.message, self.position)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Number(u32),
    Star,
    Slash,
    LParen,
    RParen,
    /// The literal atom `w+1`.
    OmegaPlusOne,
}

fn tokenize(input: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '*' => {
                tokens.push((Token::Star, i));
                i += 1;
            }
            '/' => {
                tokens.push((Token::Slash, i));
                i += 1;
            }
            '(' => {
                tokens.push((Token::LParen, i));
                i += 1;
            }
            ')' => {
                tokens.push((Token::RParen, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let n = text.parse::<u32>().map_err(|_| ParseError {
                    message: format!("number out of range: {text}"),
                    position: start,
                })?;
                tokens.push((Token::Number(n), start));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric()) {
                    i += 1;
                }
                let word = &input[start..i];
                if word == "w" && bytes.get(i) == Some(&b'+') {
                    if input[i + 1..].starts_with('1') {
                        tokens.push((Token::OmegaPlusOne, start));
                        i += 2;
                    } else {
                        return Err(ParseError {
                            message: "expected 'w+1'".to_string(),
                            position: start,
                        });
                    }
                } else {
                    tokens.push((Token::Ident(word.to_string()), start));
                }
            }
            other => {
                return Err(ParseError {
                    message: format!("unexpected character '{other}'"),
                    position: i,
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    input_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ParseError> {
        let position = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(ParseError {
                message: format!("expected {what}"),
                position,
            }),
        }
    }

    fn expr(&mut self) -> Result<SpaceDesc, ParseError> {
        let mut left = self.atom()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    let right = self.atom()?;
                    left = SpaceDesc::Product(Box::new(left), Box::new(right));
                }
                Some(Token::Slash) => {
                    self.bump();
                    let right = self.atom()?;
                    left = SpaceDesc::Layered(Box::new(left), Box::new(right));
                }
                _ => return Ok(left),
            }
        }
    }

    fn atom(&mut self) -> Result<SpaceDesc, ParseError> {
        let position = self.here();
        match self.bump() {
            Some(Token::OmegaPlusOne) => Ok(SpaceDesc::OmegaPlusOne),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            Some(Token::Ident(word)) => match word.as_str() {
                "N" => Ok(SpaceDesc::Naturals),
                "S" => Ok(SpaceDesc::Sierpinski),
                "Baire" => Ok(SpaceDesc::Baire),
                "Cantor" => Ok(SpaceDesc::Cantor),
                "R10" => Ok(SpaceDesc::DecimalReal),
                "Fin" => {
                    self.expect(Token::LParen, "'(' after Fin")?;
                    let npos = self.here();
                    let n = match self.bump() {
                        Some(Token::Number(n)) => n,
                        _ => {
                            return Err(ParseError {
                                message: "expected a number in Fin(..)".to_string(),
                                position: npos,
                            })
                        }
                    };
                    if n == 0 {
                        return Err(ParseError {
                            message: "Fin(0) is empty".to_string(),
                            position: npos,
                        });
                    }
                    self.expect(Token::RParen, "')'")?;
                    Ok(SpaceDesc::Finite(n))
                }
                "Compl" => {
                    self.expect(Token::LParen, "'(' after Compl")?;
                    let inner = self.expr()?;
                    self.expect(Token::RParen, "')'")?;
                    Ok(SpaceDesc::FormalCompletion(Box::new(inner)))
                }
                other => Err(ParseError {
                    message: format!("unknown space '{other}'"),
                    position,
                }),
            },
            _ => Err(ParseError {
                message: "expected a space expression".to_string(),
                position,
            }),
        }
    }
}

/// Parse a space expression such as `Compl(N*(w+1))` or `w+1/N`.
pub fn parse_space(input: &str) -> Result<SpaceDesc, ParseError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        input_len: input.len(),
    };
    let space = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(ParseError {
            message: "trailing input after space expression".to_string(),
            position: parser.here(),
        });
    }
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn atoms_parse() {
        assert_eq!(parse_space("N").unwrap(), SpaceDesc::Naturals);
        assert_eq!(parse_space("S").unwrap(), SpaceDesc::Sierpinski);
        assert_eq!(parse_space("w+1").unwrap(), SpaceDesc::OmegaPlusOne);
        assert_eq!(parse_space("Baire").unwrap(), SpaceDesc::Baire);
        assert_eq!(parse_space("Cantor").unwrap(), SpaceDesc::Cantor);
        assert_eq!(parse_space("R10").unwrap(), SpaceDesc::DecimalReal);
        assert_eq!(parse_space("Fin(3)").unwrap(), SpaceDesc::Finite(3));
    }

    #[test]
    fn binary_operators_left_associative() {
        assert_eq!(
            parse_space("N*w+1").unwrap(),
            SpaceDesc::product(SpaceDesc::Naturals, SpaceDesc::OmegaPlusOne)
        );
        assert_eq!(
            parse_space("N/N").unwrap(),
            SpaceDesc::layered(SpaceDesc::Naturals, SpaceDesc::Naturals)
        );
        assert_eq!(
            parse_space("N*N*N").unwrap(),
            SpaceDesc::product(
                SpaceDesc::product(SpaceDesc::Naturals, SpaceDesc::Naturals),
                SpaceDesc::Naturals
            )
        );
        assert_eq!(
            parse_space("N*(N/N)").unwrap(),
            SpaceDesc::product(
                SpaceDesc::Naturals,
                SpaceDesc::layered(SpaceDesc::Naturals, SpaceDesc::Naturals)
            )
        );
    }

    #[test]
    fn completion_parses() {
        assert_eq!(
            parse_space("Compl(N*(w+1))").unwrap(),
            crate::spaces::completion_of(&SpaceDesc::product(
                SpaceDesc::Naturals,
                SpaceDesc::OmegaPlusOne
            ))
        );
    }

    #[test]
    fn display_round_trips() {
        let cases = vec![
            SpaceDesc::Naturals,
            SpaceDesc::Finite(5),
            SpaceDesc::OmegaPlusOne,
            SpaceDesc::layered(SpaceDesc::OmegaPlusOne, SpaceDesc::Naturals),
            SpaceDesc::product(
                SpaceDesc::Naturals,
                SpaceDesc::layered(SpaceDesc::Naturals, SpaceDesc::Finite(2)),
            ),
            crate::spaces::completion_of(&SpaceDesc::layered(
                SpaceDesc::Naturals,
                SpaceDesc::Naturals,
            )),
        ];
        for space in cases {
            let text = space.to_string();
            assert_eq!(parse_space(&text).unwrap(), space, "text was {text}");
        }
    }

    #[test]
    fn errors_carry_position() {
        let err = parse_space("N*").unwrap_err();
        assert_eq!(err.position, 2);
        assert!(parse_space("Fin(0)").is_err());
        assert!(parse_space("N N").is_err());
        assert!(parse_space("Q").is_err());
        assert!(parse_space("w+2").is_err());
    }
}
