//! Regular expressions over an [`Alphabet`].
//!
//! Grammar: `+` is union, postfix `*` is Kleene star, juxtaposition is
//! concatenation, parentheses group. `ε` (or `()`) is the empty word, `∅` the
//! empty language and `.` any single symbol of the alphabet. Whitespace is
//! ignored.

use std::fmt;

use super::{Alphabet, LangError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Regex {
    Empty,
    Epsilon,
    Symbol(char),
    Concat(Box<Regex>, Box<Regex>),
    Union(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Regex, LangError> {
        let tokens: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut p = Parser {
            tokens,
            pos: 0,
            alphabet,
        };
        if p.tokens.is_empty() {
            return Ok(Regex::Epsilon);
        }
        let r = p.union()?;
        if let Some(&(at, c)) = p.tokens.get(p.pos) {
            return Err(LangError::Parse {
                at,
                msg: format!("unexpected '{c}'"),
            });
        }
        Ok(r)
    }

    pub fn concat(a: Regex, b: Regex) -> Regex {
        Regex::Concat(Box::new(a), Box::new(b))
    }

    pub fn union(a: Regex, b: Regex) -> Regex {
        Regex::Union(Box::new(a), Box::new(b))
    }

    pub fn star(a: Regex) -> Regex {
        Regex::Star(Box::new(a))
    }

    pub fn word(w: &str) -> Regex {
        w.chars()
            .map(Regex::Symbol)
            .reduce(Regex::concat)
            .unwrap_or(Regex::Epsilon)
    }

    /// Union of the given symbols, `∅` when there are none.
    pub fn any_of(symbols: impl IntoIterator<Item = char>) -> Regex {
        symbols
            .into_iter()
            .map(Regex::Symbol)
            .reduce(Regex::union)
            .unwrap_or(Regex::Empty)
    }

    /// Top-level union branches, flattened.
    pub fn branches(&self) -> Vec<&Regex> {
        match self {
            Regex::Union(a, b) => {
                let mut v = a.branches();
                v.extend(b.branches());
                v
            }
            other => vec![other],
        }
    }

    pub fn symbols(&self, out: &mut Vec<char>) {
        match self {
            Regex::Symbol(c) => {
                if !out.contains(c) {
                    out.push(*c)
                }
            }
            Regex::Concat(a, b) | Regex::Union(a, b) => {
                a.symbols(out);
                b.symbols(out);
            }
            Regex::Star(a) => a.symbols(out),
            Regex::Empty | Regex::Epsilon => {}
        }
    }
}

/// Symbols appearing literally in a regex text, without validating it.
pub fn literal_symbols(text: &str) -> Vec<char> {
    let mut out = Vec::new();
    for c in text.chars() {
        if !c.is_whitespace() && !"()+*.ε∅".contains(c) && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn prec(r: &Regex) -> u8 {
            match r {
                Regex::Union(..) => 0,
                Regex::Concat(..) => 1,
                _ => 2,
            }
        }
        fn wrap(f: &mut fmt::Formatter<'_>, r: &Regex, min: u8) -> fmt::Result {
            if prec(r) < min {
                write!(f, "({r})")
            } else {
                write!(f, "{r}")
            }
        }
        match self {
            Regex::Empty => write!(f, "∅"),
            Regex::Epsilon => write!(f, "ε"),
            Regex::Symbol(c) => write!(f, "{c}"),
            Regex::Union(a, b) => {
                wrap(f, a, 0)?;
                write!(f, "+")?;
                wrap(f, b, 0)
            }
            Regex::Concat(a, b) => {
                wrap(f, a, 1)?;
                wrap(f, b, 1)
            }
            Regex::Star(a) => {
                match **a {
                    Regex::Symbol(_) | Regex::Epsilon | Regex::Empty => write!(f, "{a}")?,
                    _ => write!(f, "({a})")?,
                }
                write!(f, "*")
            }
        }
    }
}

struct Parser<'a> {
    tokens: Vec<(usize, char)>,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).map(|t| t.1)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|t| t.0)
            .unwrap_or_else(|| self.tokens.last().map(|t| t.0 + 1).unwrap_or(0))
    }

    fn union(&mut self) -> Result<Regex, LangError> {
        let mut r = self.concat()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            let rhs = self.concat()?;
            r = Regex::union(r, rhs);
        }
        Ok(r)
    }

    fn concat(&mut self) -> Result<Regex, LangError> {
        let mut parts = Vec::new();
        while let Some(c) = self.peek() {
            if c == '+' || c == ')' {
                break;
            }
            parts.push(self.starred()?);
        }
        parts.into_iter().reduce(Regex::concat).ok_or(LangError::Parse {
            at: self.here(),
            msg: "empty operand".into(),
        })
    }

    fn starred(&mut self) -> Result<Regex, LangError> {
        let mut r = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            r = Regex::star(r);
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex, LangError> {
        let at = self.here();
        let c = self.peek().ok_or(LangError::Parse {
            at,
            msg: "unexpected end of input".into(),
        })?;
        self.pos += 1;
        match c {
            'ε' => Ok(Regex::Epsilon),
            '∅' => Ok(Regex::Empty),
            '.' => Ok(Regex::any_of(self.alphabet.symbols().iter().copied())),
            '(' => {
                if self.peek() == Some(')') {
                    self.pos += 1;
                    return Ok(Regex::Epsilon);
                }
                let r = self.union()?;
                if self.peek() != Some(')') {
                    return Err(LangError::Parse {
                        at: self.here(),
                        msg: "missing ')'".into(),
                    });
                }
                self.pos += 1;
                Ok(r)
            }
            '*' | ')' | '+' => Err(LangError::Parse {
                at,
                msg: format!("unexpected '{c}'"),
            }),
            s if self.alphabet.contains(s) => Ok(Regex::Symbol(s)),
            s => Err(LangError::UnknownSymbol(s)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new("ab".chars()).unwrap()
    }

    #[test]
    fn precedence() {
        let r = Regex::parse("ab*+b", &ab()).unwrap();
        let expect = Regex::union(
            Regex::concat(Regex::Symbol('a'), Regex::star(Regex::Symbol('b'))),
            Regex::Symbol('b'),
        );
        assert_eq!(r, expect);
    }

    #[test]
    fn display_round_trip() {
        for text in ["(ab)*", "(aa+b)*", "a*b(a+b)*", "ε+b(a+b)*", "(a+ε)*b"] {
            let r = Regex::parse(text, &ab()).unwrap();
            let again = Regex::parse(&r.to_string(), &ab()).unwrap();
            assert_eq!(r, again, "{text}");
        }
    }

    #[test]
    fn errors_carry_position() {
        match Regex::parse("(ab", &ab()) {
            Err(LangError::Parse { at, .. }) => assert_eq!(at, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            Regex::parse("a+*", &ab()),
            Err(LangError::Parse { at: 2, .. })
        ));
        assert!(matches!(
            Regex::parse("ac", &ab()),
            Err(LangError::UnknownSymbol('c'))
        ));
        assert!(Regex::parse("a++b", &ab()).is_err());
    }
}
