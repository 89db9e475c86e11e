//! Parametrised set families such as `1,4,5k` or `k,2k+1`.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! family := term ("," term)*
//! term   := INT | [INT] "k" ["+" INT]
//! ```
//!
//! Error positions are 0-based character offsets into the input.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::set::SubtractionSet;

/// One element `coefficient·k + offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearTerm {
    pub coefficient: u32,
    pub offset: u32,
}

impl LinearTerm {
    pub fn eval(&self, k: u32) -> Option<u32> {
        self.coefficient.checked_mul(k)?.checked_add(self.offset)
    }
}

impl fmt::Display for LinearTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coefficient, self.offset) {
            (0, b) => write!(f, "{b}"),
            (1, 0) => write!(f, "k"),
            (a, 0) => write!(f, "{a}k"),
            (1, b) => write!(f, "k+{b}"),
            (a, b) => write!(f, "{a}k+{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyExpression {
    terms: Vec<LinearTerm>,
}

impl FamilyExpression {
    pub fn terms(&self) -> &[LinearTerm] {
        &self.terms
    }

    /// The set for parameter value `k`. Fails when an element is 0, elements
    /// collide, or arithmetic overflows.
    pub fn instantiate(&self, k: u32) -> Result<SubtractionSet> {
        let mut elements = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let v = t.eval(k).ok_or_else(|| Error::Domain {
                family: "family expression",
                reason: format!("term {t} overflows at k={k}"),
            })?;
            elements.push(v);
        }
        SubtractionSet::new(elements)
    }
}

impl fmt::Display for FamilyExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { chars: src.chars().enumerate().collect(), at: 0, src }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.at += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn position(&self) -> usize {
        self.chars.get(self.at).map_or(self.src.chars().count(), |&(i, _)| i)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.position(), message: message.into() }
    }

    fn int(&mut self) -> Result<Option<u32>> {
        let start = self.position();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.at += 1;
        }
        if digits.is_empty() {
            return Ok(None);
        }
        digits.parse().map(Some).map_err(|_| Error::Parse {
            position: start,
            message: format!("integer {digits} is too large"),
        })
    }

    fn term(&mut self) -> Result<LinearTerm> {
        self.skip_ws();
        let lead = self.int()?;
        self.skip_ws();
        if self.peek() != Some('k') {
            return match lead {
                Some(offset) => Ok(LinearTerm { coefficient: 0, offset }),
                None => Err(self.error("expected an integer or `k`")),
            };
        }
        self.at += 1;
        let coefficient = lead.unwrap_or(1);
        self.skip_ws();
        let mut offset = 0;
        if self.peek() == Some('+') {
            self.at += 1;
            self.skip_ws();
            offset = self.int()?.ok_or_else(|| self.error("expected an integer after `+`"))?;
        }
        if coefficient == 0 && offset == 0 {
            return Err(self.error("term evaluates to 0 for every k"));
        }
        Ok(LinearTerm { coefficient, offset })
    }

    fn family(&mut self) -> Result<FamilyExpression> {
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(',') => {
                    self.at += 1;
                    terms.push(self.term()?);
                }
                Some(c) => return Err(self.error(format!("unexpected character {c:?}"))),
            }
        }
        Ok(FamilyExpression { terms })
    }
}

impl FromStr for FamilyExpression {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).family()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> FamilyExpression {
        s.parse().unwrap()
    }

    fn err_pos(s: &str) -> usize {
        match s.parse::<FamilyExpression>() {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        }
    }

    #[test]
    fn parses_terms() {
        let f = parse("1,4,5k");
        assert_eq!(f.instantiate(2).unwrap().elements(), &[1, 4, 10]);
        let f = parse("k, 2k");
        assert_eq!(f.instantiate(3).unwrap().elements(), &[3, 6]);
        let f = parse("1, 3k+2 ,k+1");
        assert_eq!(f.to_string(), "1,3k+2,k+1");
        assert_eq!(f.instantiate(4).unwrap().elements(), &[1, 5, 14]);
    }

    #[test]
    fn reports_positions() {
        assert_eq!(err_pos(""), 0);
        assert_eq!(err_pos("1,,2"), 2);
        assert_eq!(err_pos("1,4,5n"), 5);
        assert_eq!(err_pos("1,2k+"), 5);
        assert_eq!(err_pos("0k"), 2);
        assert_eq!(err_pos("99999999999"), 0);
    }

    #[test]
    fn invalid_instantiations() {
        let f = parse("1,k");
        assert_eq!(f.instantiate(1), Err(Error::DuplicateElement(1)));
        assert_eq!(f.instantiate(0), Err(Error::ZeroElement));
        assert!(matches!(parse("4000000000k").instantiate(2), Err(Error::Domain { .. })));
    }
}
