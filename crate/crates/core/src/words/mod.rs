//! Words over a finite alphabet of variables, identities between them, and
//! exhaustive satisfaction checks in finite semigroups.

mod check;
mod families;
mod split;

pub use check::{
    evaluate, group_satisfies_w_eq_1, identity_holds, CheckError, Counterexample, Evaluation,
    Verdict, DEFAULT_BUDGET,
};
pub use families::{
    abelian1, abelian2, abelian_corollary_basis, abelian_positive_basis, commut, exp_n, exp_n_red,
    ln_identity, theorem_basis, trahtman_basis, PositiveBasis,
};
pub use split::{split_identity, Split, SplitError};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A variable: an ASCII letter with an optional numeric suffix (`x`, `y12`).
///
/// Ordered by letter, then by suffix value with the bare letter first, so
/// `y < y1 < y2 < y10`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    letter: u8,
    index: Option<u32>,
}

impl Var {
    pub fn new(letter: char) -> Self {
        assert!(letter.is_ascii_alphabetic(), "variables start with an ASCII letter");
        Var {
            letter: letter as u8,
            index: None,
        }
    }

    pub fn indexed(letter: char, index: u32) -> Self {
        Var {
            index: Some(index),
            ..Var::new(letter)
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter as char)?;
        if let Some(i) = self.index {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl FromStr for Var {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        let w: Word = s.parse()?;
        match w.symbols() {
            [v] => Ok(*v),
            _ => Err(WordError::Syntax {
                pos: 0,
                message: format!("`{s}` is not a single variable"),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("exponent 0 at position {pos}: words cannot be empty")]
    ZeroPower { pos: usize },
    #[error("a word must contain at least one variable")]
    Empty,
}

/// A nonempty sequence of variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    symbols: Vec<Var>,
}

impl Word {
    pub fn new(symbols: Vec<Var>) -> Result<Self, WordError> {
        if symbols.is_empty() {
            Err(WordError::Empty)
        } else {
            Ok(Word { symbols })
        }
    }

    /// Builds a word from single-letter variables, e.g. `Word::letters("xyx")`.
    pub fn letters(text: &str) -> Self {
        Word::new(text.chars().map(Var::new).collect()).expect("nonempty word")
    }

    pub fn var(v: Var) -> Self {
        Word { symbols: vec![v] }
    }

    pub fn symbols(&self) -> &[Var] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Var> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `alf(w)`, the set of variables occurring in the word.
    pub fn alphabet(&self) -> BTreeSet<Var> {
        self.symbols.iter().copied().collect()
    }

    pub fn occurrences(&self, v: Var) -> usize {
        self.symbols.iter().filter(|&&s| s == v).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Word { symbols }
    }

    /// `w^k` for `k >= 1`.
    pub fn pow(&self, k: usize) -> Word {
        assert!(k >= 1, "words cannot be empty");
        Word {
            symbols: self.symbols.repeat(k),
        }
    }

    /// The word read backwards.
    pub fn mirror(&self) -> Word {
        Word {
            symbols: self.symbols.iter().rev().copied().collect(),
        }
    }

    /// Run-length form using `^k`, e.g. `x^2yx^2`.
    pub fn to_compact_string(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.symbols.len() {
            let v = self.symbols[i];
            let run = self.symbols[i..].iter().take_while(|&&s| s == v).count();
            out.push_str(&v.to_string());
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            i += run;
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.symbols {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        parse_word(s)
    }
}

/// A plain identity `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Identity {
    pub lhs: Word,
    pub rhs: Word,
}

impl Identity {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Identity { lhs, rhs }
    }

    /// Variables of both sides, sorted.
    pub fn variables(&self) -> BTreeSet<Var> {
        let mut vars = self.lhs.alphabet();
        vars.extend(self.rhs.alphabet());
        vars
    }

    pub fn mirror(&self) -> Identity {
        Identity::new(self.lhs.mirror(), self.rhs.mirror())
    }

    pub fn reversed(&self) -> Identity {
        Identity::new(self.rhs.clone(), self.lhs.clone())
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl FromStr for Identity {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        parse_identity(s)
    }
}

/// Parses `factor+` where `factor := (var | "(" word ")") ("^" uint)?` and
/// `var := letter digit*`. Whitespace between factors is ignored.
pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let mut p = WordParser::new(text);
    let w = p.word()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(w)
}

/// Parses `word "=" word`.
pub fn parse_identity(text: &str) -> Result<Identity, WordError> {
    let mut p = WordParser::new(text);
    let lhs = p.word()?;
    p.skip_ws();
    if !p.eat('=') {
        return Err(p.error("expected `=`"));
    }
    let rhs = p.word()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(Identity::new(lhs, rhs))
}

struct WordParser {
    chars: Vec<char>,
    pos: usize,
}

impl WordParser {
    fn new(text: &str) -> Self {
        WordParser {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn error(&self, message: &str) -> WordError {
        WordError::Syntax {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
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

    fn digits(&mut self) -> Option<u32> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.chars[start..self.pos].iter().collect::<String>().parse().ok()
    }

    fn word(&mut self) -> Result<Word, WordError> {
        let mut symbols = Vec::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() || c == '(' {
                symbols.extend(self.factor()?);
            } else {
                break;
            }
        }
        if symbols.is_empty() {
            return Err(self.error("expected a variable"));
        }
        Ok(Word { symbols })
    }

    fn factor(&mut self) -> Result<Vec<Var>, WordError> {
        let base = if self.eat('(') {
            let inner = self.word()?;
            if !self.eat(')') {
                return Err(self.error("expected `)`"));
            }
            inner.symbols
        } else {
            let letter = self.chars[self.pos];
            self.pos += 1;
            let index = self.digits();
            vec![Var {
                letter: letter as u8,
                index,
            }]
        };
        if self.eat('^') {
            self.skip_ws();
            let at = self.pos;
            let k = self.digits().ok_or_else(|| self.error("expected an exponent"))?;
            if k == 0 {
                return Err(WordError::ZeroPower { pos: at });
            }
            Ok(base.repeat(k as usize))
        } else {
            Ok(base)
        }
    }
}

/// Whether every variable of `w` lies inside some cell `ypy` (a factor that
/// starts and ends with the same variable). Returns the leftmost violating
/// variable otherwise.
pub fn is_repeated(w: &Word) -> (bool, Option<Var>) {
    let s = w.symbols();
    let covered = |p: usize| {
        s.iter().filter(|&&x| x == s[p]).count() > 1 || s[..p].iter().any(|y| s[p + 1..].contains(y))
    };
    let witness = (0..s.len()).find(|&p| !covered(p)).map(|p| s[p]);
    (witness.is_none(), witness)
}

pub fn mirror(w: &Word) -> Word {
    w.mirror()
}
