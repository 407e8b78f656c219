use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use super::{Identity, Var, Word};
use crate::group::GroupTable;
use crate::semigroup::{Element, FiniteSemigroup};

/// Default cap on the number of evaluations an exhaustive check may visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Below this many evaluations the search runs on the calling thread.
const PARALLEL_THRESHOLD: u128 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("variable {0} has no value")]
    UnassignedVariable(Var),
    #[error("exhaustive check needs {required} evaluations, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
}

/// An assignment of semigroup elements to variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Evaluation {
    assignment: BTreeMap<Var, Element>,
}

impl Evaluation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, Element)>) -> Self {
        Evaluation {
            assignment: pairs.into_iter().collect(),
        }
    }

    pub fn set(&mut self, v: Var, x: Element) {
        self.assignment.insert(v, x);
    }

    pub fn get(&self, v: Var) -> Option<Element> {
        self.assignment.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, Element)> + '_ {
        self.assignment.iter().map(|(&v, &x)| (v, x))
    }

    /// `x->(1,1,1) y->(1,1,2)` using the semigroup's labels.
    pub fn describe(&self, s: &FiniteSemigroup) -> String {
        self.iter()
            .map(|(v, x)| format!("{v}->{}", s.label(x)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(v, x)| format!("{v}->{x}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub evaluation: Evaluation,
    pub lhs_value: Element,
    pub rhs_value: Element,
}

/// Result of an exhaustive check. `holds` iff `counterexample` is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
    /// Evaluations visited in lexicographic order up to and including the
    /// counterexample, or all of them when the identity holds.
    pub evaluations_checked: u64,
}

/// Value of `w` under `e`, folding left to right.
pub fn evaluate(s: &FiniteSemigroup, w: &Word, e: &Evaluation) -> Result<Element, CheckError> {
    let mut values = w
        .symbols()
        .iter()
        .map(|&v| e.get(v).ok_or(CheckError::UnassignedVariable(v)));
    let first = values.next().expect("words are nonempty")?;
    values.try_fold(first, |acc, x| Ok(s.mul(acc, x?)))
}

fn compile(w: &Word, vars: &[Var]) -> Vec<usize> {
    w.symbols()
        .iter()
        .map(|v| vars.binary_search(v).expect("variable collected"))
        .collect()
}

#[inline]
fn eval_compiled(s: &FiniteSemigroup, word: &[usize], values: &[Element]) -> Element {
    word[1..]
        .iter()
        .fold(values[word[0]], |acc, &i| s.mul(acc, values[i]))
}

struct Failure {
    values: Vec<Element>,
    pair: (Element, Element),
}

/// Lexicographically first assignment (first variable most significant) in
/// `0..size` for which `failing` reports a pair of unequal values.
fn first_failure<F>(size: usize, nvars: usize, failing: &F) -> Option<Failure>
where
    F: Fn(&[Element]) -> Option<(Element, Element)> + Sync,
{
    let scan = |head: Element| -> Option<Failure> {
        let mut values = vec![0; nvars];
        values[0] = head;
        loop {
            if let Some(pair) = failing(&values) {
                return Some(Failure { values, pair });
            }
            // mixed-radix increment, last variable fastest
            let mut k = nvars;
            loop {
                if k == 1 {
                    return None;
                }
                k -= 1;
                values[k] += 1;
                if values[k] < size {
                    break;
                }
                values[k] = 0;
            }
        }
    };
    if (size as u128).pow(nvars as u32) < PARALLEL_THRESHOLD {
        (0..size).find_map(scan)
    } else {
        (0..size).into_par_iter().find_map_first(scan)
    }
}

fn run_check<F>(
    s: &FiniteSemigroup,
    vars: &[Var],
    budget: Option<u64>,
    failing: F,
) -> Result<Verdict, CheckError>
where
    F: Fn(&[Element]) -> Option<(Element, Element)> + Sync,
{
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let size = s.size() as u128;
    let required = vars
        .iter()
        .try_fold(1u128, |acc, _| acc.checked_mul(size))
        .unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(CheckError::BudgetExceeded { required, budget });
    }
    let found = first_failure(s.size(), vars.len(), &failing);
    Ok(match found {
        None => Verdict {
            holds: true,
            counterexample: None,
            evaluations_checked: required as u64,
        },
        Some(Failure { values, pair }) => {
            let rank = values.iter().fold(0u64, |acc, &x| acc * s.size() as u64 + x as u64);
            Verdict {
                holds: false,
                counterexample: Some(Counterexample {
                    evaluation: Evaluation::from_pairs(vars.iter().copied().zip(values)),
                    lhs_value: pair.0,
                    rhs_value: pair.1,
                }),
                evaluations_checked: rank + 1,
            }
        }
    })
}

/// Checks `id` under every evaluation into `s`, enumerated in lexicographic
/// order over the variables sorted in their natural order. The reported
/// counterexample is the first failing evaluation in that order regardless
/// of how the search is parallelized.
pub fn identity_holds(
    s: &FiniteSemigroup,
    id: &Identity,
    budget: Option<u64>,
) -> Result<Verdict, CheckError> {
    let vars: Vec<Var> = id.variables().into_iter().collect();
    let lhs = compile(&id.lhs, &vars);
    let rhs = compile(&id.rhs, &vars);
    run_check(s, &vars, budget, |values| {
        let a = eval_compiled(s, &lhs, values);
        let b = eval_compiled(s, &rhs, values);
        (a != b).then_some((a, b))
    })
}

/// Checks that every evaluation of `w` in `g` is the identity.
pub fn group_satisfies_w_eq_1(
    g: &GroupTable,
    w: &Word,
    budget: Option<u64>,
) -> Result<Verdict, CheckError> {
    let vars: Vec<Var> = w.alphabet().into_iter().collect();
    let word = compile(w, &vars);
    let one = g.identity();
    run_check(g.carrier(), &vars, budget, |values| {
        let a = eval_compiled(g.carrier(), &word, values);
        (a != one).then_some((a, one))
    })
}
