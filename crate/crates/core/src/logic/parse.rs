//! Recursive-descent parser for the formula grammar:
//!
//! ```text
//! formula := bicond
//! bicond  := impl ("<->" impl)*
//! impl    := disj ("->" impl)?
//! disj    := conj ("|" conj)*
//! conj    := neg ("&" neg)*
//! neg     := "!" neg | atom | "true" | "false" | "(" formula ")"
//! ```
//!
//! Positions in errors count characters from zero.

use super::{Atom, Formula, LogicError, Result, Universe};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(name) => format!("`{name}`"),
            Token::Not => "`!`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Arrow => "`->`".into(),
            Token::DoubleArrow => "`<->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn syntax(position: usize, message: impl Into<String>) -> LogicError {
    LogicError::Syntax {
        position,
        message: message.into(),
    }
}

fn tokenize(source: &str) -> Result<Vec<(Token, usize)>> {
    let chars: Vec<char> = source.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let start = i;
        let token = match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '!' => Token::Not,
            '&' => Token::And,
            '|' => Token::Or,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Token::Arrow
            }
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                i += 2;
                Token::DoubleArrow
            }
            c if c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_' => {
                while i + 1 < chars.len()
                    && (chars[i + 1].is_ascii_lowercase()
                        || chars[i + 1].is_ascii_digit()
                        || chars[i + 1] == '_')
                {
                    i += 1;
                }
                Token::Ident(chars[start..=i].iter().collect())
            }
            other => return Err(syntax(start, format!("unexpected character `{other}`"))),
        };
        tokens.push((token, start));
        i += 1;
    }
    tokens.push((Token::End, chars.len()));
    Ok(tokens)
}

struct Parser<'u> {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
    universe: Option<&'u Universe>,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.cursor].0
    }

    fn position(&self) -> usize {
        self.tokens[self.cursor].1
    }

    fn bump(&mut self) -> (Token, usize) {
        let item = self.tokens[self.cursor].clone();
        if item.0 != Token::End {
            self.cursor += 1;
        }
        item
    }

    fn eat(&mut self, token: &Token) -> bool {
        if self.peek() == token {
            self.bump();
            true
        } else {
            false
        }
    }

    fn bicond(&mut self) -> Result<Formula> {
        let mut lhs = self.implication()?;
        while self.eat(&Token::DoubleArrow) {
            let rhs = self.implication()?;
            lhs = lhs.iff(rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if self.eat(&Token::Arrow) {
            let rhs = self.implication()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut operands = vec![self.conjunction()?];
        while self.eat(&Token::Or) {
            operands.push(self.conjunction()?);
        }
        Ok(Formula::disjunction(operands))
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut operands = vec![self.negation()?];
        while self.eat(&Token::And) {
            operands.push(self.negation()?);
        }
        Ok(Formula::conjunction(operands))
    }

    fn negation(&mut self) -> Result<Formula> {
        let (token, position) = self.bump();
        match token {
            Token::Not => Ok(self.negation()?.negate()),
            Token::LParen => {
                let inner = self.bicond()?;
                if !self.eat(&Token::RParen) {
                    return Err(syntax(
                        self.position(),
                        format!("expected `)` but found {}", self.peek().describe()),
                    ));
                }
                Ok(inner)
            }
            Token::Ident(name) if name == "true" => Ok(Formula::truth()),
            Token::Ident(name) if name == "false" => Ok(Formula::falsity()),
            Token::Ident(name) => {
                let atom = Atom::new(&name).map_err(|_| syntax(position, "invalid atom name"))?;
                if let Some(universe) = self.universe {
                    if !universe.contains(&atom) {
                        return Err(LogicError::UnknownAtom { name, position });
                    }
                }
                Ok(Formula::Atom(atom))
            }
            other => Err(syntax(
                position,
                format!("expected a formula but found {}", other.describe()),
            )),
        }
    }
}

fn parse(source: &str, universe: Option<&Universe>) -> Result<Formula> {
    if source.trim().is_empty() {
        return Err(syntax(0, "empty formula"));
    }
    let mut parser = Parser {
        tokens: tokenize(source)?,
        cursor: 0,
        universe,
    };
    let formula = parser.bicond()?;
    if *parser.peek() != Token::End {
        return Err(syntax(
            parser.position(),
            format!("unexpected {}", parser.peek().describe()),
        ));
    }
    Ok(formula)
}

/// Parses a formula over an open universe: any well-formed atom name is
/// accepted.
pub fn parse_formula(source: &str) -> Result<Formula> {
    parse(source, None)
}

/// Parses a formula whose atoms must all belong to `universe`.
pub fn parse_formula_in(source: &str, universe: &Universe) -> Result<Formula> {
    parse(source, Some(universe))
}
