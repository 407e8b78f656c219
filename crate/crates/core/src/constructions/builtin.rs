//! Names for builtin semigroups: `E`, `Z<m>`, `S3`, `B2`, `B2^1`,
//! `<a>x<b>`, `B(<g>,<k>)`, `<s>^0`, `<s>^1`, `P(<g>)`, with parentheses
//! for grouping. Products associate to the left.

use thiserror::Error;

use super::{
    adjoin_identity, adjoin_zero, b2, brandt, cyclic_group, powerset_semigroup, symmetric_group_3,
    trivial_group, Brandt, ConstructionError,
};
use crate::group::GroupTable;
use crate::semigroup::{direct_product, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuiltinError {
    #[error("at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("`{0}` needs a group argument")]
    NotAGroup(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// A parsed builtin, keeping whatever extra structure it has.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    Group(GroupTable),
    Brandt(Brandt),
    Semigroup(FiniteSemigroup),
}

impl Builtin {
    pub fn semigroup(&self) -> &FiniteSemigroup {
        match self {
            Builtin::Group(g) => g.carrier(),
            Builtin::Brandt(b) => &b.semigroup,
            Builtin::Semigroup(s) => s,
        }
    }

    pub fn into_semigroup(self) -> FiniteSemigroup {
        match self {
            Builtin::Group(g) => g.into_carrier(),
            Builtin::Brandt(b) => b.semigroup,
            Builtin::Semigroup(s) => s,
        }
    }

    pub fn as_group(&self) -> Option<&GroupTable> {
        match self {
            Builtin::Group(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_brandt(&self) -> Option<&Brandt> {
        match self {
            Builtin::Brandt(b) => Some(b),
            _ => None,
        }
    }
}

pub fn parse_builtin(text: &str) -> Result<Builtin, BuiltinError> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { chars, pos: 0 };
    let value = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: &str) -> BuiltinError {
        BuiltinError::Syntax {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), BuiltinError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn number(&mut self) -> Result<usize, BuiltinError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.error("number too large"))
    }

    fn expr(&mut self) -> Result<Builtin, BuiltinError> {
        let mut acc = self.term()?;
        while self.eat('x') {
            let rhs = self.term()?;
            acc = match (acc, rhs) {
                (Builtin::Group(g), Builtin::Group(h)) => Builtin::Group(g.direct_product(&h)),
                (a, b) => Builtin::Semigroup(direct_product(a.semigroup(), b.semigroup())),
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Builtin, BuiltinError> {
        let mut acc = self.atom()?;
        while self.eat('^') {
            acc = match self.number()? {
                0 => Builtin::Semigroup(adjoin_zero(acc.semigroup())),
                1 => Builtin::Semigroup(adjoin_identity(acc.semigroup())),
                _ => return Err(self.error("only `^0` and `^1` are supported")),
            };
        }
        Ok(acc)
    }

    fn group_arg(&mut self, name: &str) -> Result<GroupTable, BuiltinError> {
        match self.expr()? {
            Builtin::Group(g) => Ok(g),
            _ => Err(BuiltinError::NotAGroup(name.to_string())),
        }
    }

    fn atom(&mut self) -> Result<Builtin, BuiltinError> {
        match self.peek() {
            Some('E') => {
                self.pos += 1;
                Ok(Builtin::Group(trivial_group()))
            }
            Some('Z') => {
                self.pos += 1;
                Ok(Builtin::Group(cyclic_group(self.number()?)?))
            }
            Some('S') => {
                self.pos += 1;
                match self.number()? {
                    3 => Ok(Builtin::Group(symmetric_group_3())),
                    _ => Err(self.error("only S3 is available")),
                }
            }
            Some('B') => {
                self.pos += 1;
                if self.eat('(') {
                    let g = self.group_arg("B")?;
                    self.expect(',')?;
                    let k = self.number()?;
                    self.expect(')')?;
                    Ok(Builtin::Brandt(brandt(&g, k)?))
                } else {
                    match self.number()? {
                        2 => Ok(Builtin::Brandt(b2())),
                        _ => Err(self.error("expected `B2` or `B(<group>,<k>)`")),
                    }
                }
            }
            Some('P') => {
                self.pos += 1;
                self.expect('(')?;
                let g = self.group_arg("P")?;
                self.expect(')')?;
                Ok(Builtin::Semigroup(powerset_semigroup(&g)?.semigroup))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            _ => Err(self.error("expected a builtin name")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn size(text: &str) -> usize {
        parse_builtin(text).unwrap().semigroup().size()
    }

    #[test]
    fn sizes_of_named_semigroups() {
        assert_eq!(size("E"), 1);
        assert_eq!(size("Z4"), 4);
        assert_eq!(size("S3"), 6);
        assert_eq!(size("B2"), 5);
        assert_eq!(size("B2^1"), 6);
        assert_eq!(size("Z2xS3"), 12);
        assert_eq!(size("B(Z2xS3,2)"), 49);
        assert_eq!(size("B(Z2, 2)"), 9);
        assert_eq!(size("Z4^0"), 5);
        assert_eq!(size("P(Z2)"), 6);
        assert_eq!(size("B2xZ2"), 10);
        assert_eq!(size("(Z2xZ2)xZ3"), 12);
    }

    #[test]
    fn keeps_structure() {
        assert!(parse_builtin("Z2xS3").unwrap().as_group().is_some());
        assert!(parse_builtin("B(Z3,3)").unwrap().as_brandt().is_some());
        assert_eq!(parse_builtin("Z4^0").unwrap().semigroup().zero(), Some(0));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_builtin("Q8"), Err(BuiltinError::Syntax { .. })));
        assert!(matches!(parse_builtin("B(B2,2)"), Err(BuiltinError::NotAGroup(_))));
        assert!(matches!(
            parse_builtin("B(Z2,1)"),
            Err(BuiltinError::Construction(ConstructionError::IndexTooSmall(1)))
        ));
        assert!(matches!(parse_builtin("Z2)"), Err(BuiltinError::Syntax { .. })));
        assert!(matches!(parse_builtin("S4"), Err(BuiltinError::Syntax { .. })));
    }
}
