//! Single-step rewriting of words by identities, replayable traces, the
//! cell decomposition of repeated words and a bounded derivation search.

mod cells;
mod search;

pub use cells::{cell_decompose, eliminate_single_occurrences, star_word, CellError, CellForm};
pub use search::{derive_bounded, DeriveBounds};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::words::{Identity, Var, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// Replace an instance of the left side by the right side.
    LeftToRight,
    RightToLeft,
}

impl Direction {
    pub fn reverse(self) -> Direction {
        match self {
            Direction::LeftToRight => Direction::RightToLeft,
            Direction::RightToLeft => Direction::LeftToRight,
        }
    }

    fn sides(self, rule: &Identity) -> (&Word, &Word) {
        match self {
            Direction::LeftToRight => (&rule.lhs, &rule.rhs),
            Direction::RightToLeft => (&rule.rhs, &rule.lhs),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::LeftToRight => "ltr",
            Direction::RightToLeft => "rtl",
        })
    }
}

/// Which rule a step used: `x^2 = x^(n+2)`, `xyx = (xy)^(n+1)x`, or the
/// identity at an index of a caller-supplied basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleTag {
    ExpN,
    ExpNRed,
    Basis(usize),
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleTag::ExpN => f.write_str("exp_n"),
            RuleTag::ExpNRed => f.write_str("exp_n_red"),
            RuleTag::Basis(i) => write!(f, "basis[{i}]"),
        }
    }
}

/// Images of rule variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Substitution {
    images: BTreeMap<Var, Word>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, Word)>) -> Self {
        Substitution {
            images: pairs.into_iter().collect(),
        }
    }

    /// Every variable mapped to itself.
    pub fn identity_on(vars: impl IntoIterator<Item = Var>) -> Self {
        Self::from_pairs(vars.into_iter().map(|v| (v, Word::var(v))))
    }

    pub fn insert(&mut self, v: Var, image: Word) {
        self.images.insert(v, image);
    }

    pub fn get(&self, v: Var) -> Option<&Word> {
        self.images.get(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, &Word)> {
        self.images.iter().map(|(&v, w)| (v, w))
    }

    pub fn apply(&self, w: &Word) -> Result<Vec<Var>, RewriteError> {
        let mut out = Vec::new();
        for &v in w.symbols() {
            let image = self.get(v).ok_or(RewriteError::UnboundVariable(v))?;
            out.extend_from_slice(image.symbols());
        }
        Ok(out)
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(v, w)| format!("{v}->{w}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("rule side does not match at position {position}")]
    NoMatch { position: usize },
    #[error("substitution has no image for {0}")]
    UnboundVariable(Var),
    #[error("step {step} does not replay: {reason}")]
    Replay { step: usize, reason: String },
}

/// Replaces the instance of one side of `rule` (under `substitution`)
/// starting at `position` in `w` by the corresponding instance of the other
/// side.
pub fn apply_rule_at(
    w: &Word,
    rule: &Identity,
    position: usize,
    substitution: &Substitution,
    direction: Direction,
) -> Result<Word, RewriteError> {
    let (from, to) = direction.sides(rule);
    let pattern = substitution.apply(from)?;
    let replacement = substitution.apply(to)?;
    let s = w.symbols();
    let end = position + pattern.len();
    if end > s.len() || s[position..end] != pattern[..] {
        return Err(RewriteError::NoMatch { position });
    }
    let mut out = s[..position].to_vec();
    out.extend(replacement);
    out.extend_from_slice(&s[end..]);
    Ok(Word::new(out).expect("replacement is nonempty"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub position: usize,
    pub tag: RuleTag,
    pub rule: Identity,
    pub direction: Direction,
    pub substitution: Substitution,
    pub before: Word,
    pub after: Word,
}

impl fmt::Display for RewriteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} --[{},{},{}]--> {}",
            self.before, self.tag, self.direction, self.position, self.after
        )
    }
}

/// A chain of rewrite steps, each starting from the word the previous one
/// produced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RewriteTrace {
    pub steps: Vec<RewriteStep>,
}

impl RewriteTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies `rule` to `w` and records the step.
    pub(crate) fn push(
        &mut self,
        w: &Word,
        tag: RuleTag,
        rule: &Identity,
        position: usize,
        substitution: Substitution,
        direction: Direction,
    ) -> Word {
        let after = apply_rule_at(w, rule, position, &substitution, direction)
            .expect("rewrites are constructed to match");
        self.steps.push(RewriteStep {
            position,
            tag,
            rule: rule.clone(),
            direction,
            substitution,
            before: w.clone(),
            after: after.clone(),
        });
        after
    }

    pub fn extend(&mut self, other: RewriteTrace) {
        self.steps.extend(other.steps);
    }

    /// Re-applies every step and checks that each one starts where the
    /// previous one ended. Returns the final word, if any step exists.
    pub fn replay(&self) -> Result<Option<Word>, RewriteError> {
        let mut current: Option<&Word> = None;
        for (i, step) in self.steps.iter().enumerate() {
            if current.is_some_and(|c| *c != step.before) {
                return Err(RewriteError::Replay {
                    step: i,
                    reason: "does not start from the previous result".into(),
                });
            }
            let got = apply_rule_at(
                &step.before,
                &step.rule,
                step.position,
                &step.substitution,
                step.direction,
            )
            .map_err(|e| RewriteError::Replay {
                step: i,
                reason: e.to_string(),
            })?;
            if got != step.after {
                return Err(RewriteError::Replay {
                    step: i,
                    reason: format!("produces {got}, recorded {}", step.after),
                });
            }
            current = Some(&step.after);
        }
        Ok(current.cloned())
    }

    /// All steps with their direction flipped, in reverse order.
    pub fn reversed(&self) -> RewriteTrace {
        RewriteTrace {
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| RewriteStep {
                    direction: s.direction.reverse(),
                    before: s.after.clone(),
                    after: s.before.clone(),
                    ..s.clone()
                })
                .collect(),
        }
    }
}

/// One line per step: `step <i>: <before> --[rule,dir,pos]--> <after>`.
impl fmt::Display for RewriteTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            writeln!(f, "step {i}: {step}")?;
        }
        Ok(())
    }
}
