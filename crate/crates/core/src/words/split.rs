use std::collections::BTreeSet;

use thiserror::Error;

use super::check::{identity_holds, CheckError, Counterexample, Evaluation};
use super::{evaluate, Identity, Var, Word};
use crate::constructions::Brandt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("left side does not have the required shape: {0}")]
    HypothesisViolated(String),
    #[error("no valid split: {reason}")]
    NoValidSplit {
        reason: String,
        counterexample: Option<Counterexample>,
    },
    #[error(transparent)]
    Check(#[from] CheckError),
}

/// `lhs = u_left y u_right`, `rhs = v_left y v_right`; an absent fragment is
/// the empty word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub u_left: Option<Word>,
    pub u_right: Option<Word>,
    pub v_left: Option<Word>,
    pub v_right: Option<Word>,
}

fn fragment(symbols: &[Var]) -> Option<Word> {
    Word::new(symbols.to_vec()).ok()
}

fn alphabet(symbols: &[Var]) -> BTreeSet<Var> {
    symbols.iter().copied().collect()
}

fn sub_identity_holds(
    b: &Brandt,
    left: &Option<Word>,
    right: &Option<Word>,
) -> Result<Option<Counterexample>, SplitError> {
    match (left, right) {
        (None, None) => Ok(None),
        (Some(l), Some(r)) => {
            let v = identity_holds(&b.semigroup, &Identity::new(l.clone(), r.clone()), None)?;
            Ok(v.counterexample)
        }
        _ => Err(SplitError::NoValidSplit {
            reason: "one fragment is empty and the other is not".into(),
            counterexample: None,
        }),
    }
}

/// Splits an identity of a Brandt semigroup at the single occurrence of `y`
/// on its left side. Requires `y` to occur once in the left side with the
/// parts before and after it sharing no variable.
///
/// The identity itself is checked first, so `NoValidSplit` is reported
/// exactly when the identity or one of the derived sub-identities fails.
pub fn split_identity(b: &Brandt, id: &Identity, y: Var) -> Result<Split, SplitError> {
    let lhs = id.lhs.symbols();
    let pos = match positions(lhs, y).as_slice() {
        [p] => *p,
        [] => return Err(SplitError::HypothesisViolated(format!("{y} does not occur in {}", id.lhs))),
        _ => return Err(SplitError::HypothesisViolated(format!("{y} occurs more than once in {}", id.lhs))),
    };
    let (before, after) = (&lhs[..pos], &lhs[pos + 1..]);
    let (left_vars, right_vars) = (alphabet(before), alphabet(after));
    if let Some(shared) = left_vars.intersection(&right_vars).next() {
        return Err(SplitError::HypothesisViolated(format!(
            "{shared} occurs on both sides of {y}"
        )));
    }

    let verdict = identity_holds(&b.semigroup, id, None)?;
    if let Some(ce) = verdict.counterexample {
        return Err(SplitError::NoValidSplit {
            reason: format!("{id} fails"),
            counterexample: Some(ce),
        });
    }

    // Evaluation sending the left part to (k,1,k), y to (k,1,l) and the right
    // part to (l,1,l); the right side must take the value (k,1,l) under it.
    let c = &b.coords;
    let one = c.group().identity();
    let (kk, kl, ll) = (c.encode(0, one, 0), c.encode(0, one, 1), c.encode(1, one, 1));
    let mut zeta = Evaluation::new();
    left_vars.iter().for_each(|&v| zeta.set(v, kk));
    right_vars.iter().for_each(|&v| zeta.set(v, ll));
    zeta.set(y, kl);
    let rhs_value = evaluate(&b.semigroup, &id.rhs, &zeta)?;
    if rhs_value != kl {
        return Err(SplitError::NoValidSplit {
            reason: format!("right side takes value {} under the separating evaluation", b.semigroup.label(rhs_value)),
            counterexample: Some(Counterexample {
                evaluation: zeta,
                lhs_value: kl,
                rhs_value,
            }),
        });
    }

    let rhs = id.rhs.symbols();
    let admissible: Vec<usize> = positions(rhs, y)
        .into_iter()
        .filter(|&q| alphabet(&rhs[..q]) == left_vars && alphabet(&rhs[q + 1..]) == right_vars)
        .collect();
    let q = match admissible.as_slice() {
        [q] => *q,
        [] => {
            return Err(SplitError::NoValidSplit {
                reason: format!("no occurrence of {y} in {} separates the alphabets", id.rhs),
                counterexample: None,
            })
        }
        _ => {
            return Err(SplitError::NoValidSplit {
                reason: format!("several occurrences of {y} in {} separate the alphabets", id.rhs),
                counterexample: None,
            })
        }
    };

    let split = Split {
        u_left: fragment(before),
        u_right: fragment(after),
        v_left: fragment(&rhs[..q]),
        v_right: fragment(&rhs[q + 1..]),
    };
    for (l, r) in [(&split.u_left, &split.v_left), (&split.u_right, &split.v_right)] {
        if let Some(ce) = sub_identity_holds(b, l, r)? {
            return Err(SplitError::NoValidSplit {
                reason: "a sub-identity fails".into(),
                counterexample: Some(ce),
            });
        }
    }
    Ok(split)
}

fn positions(symbols: &[Var], v: Var) -> Vec<usize> {
    (0..symbols.len()).filter(|&i| symbols[i] == v).collect()
}
