use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{apply_rule_at, Direction, RewriteStep, RewriteTrace, RuleTag, Substitution};
use crate::words::{Identity, Var, Word};

/// Limits for [`derive_bounded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeriveBounds {
    /// Words expanded across both search directions.
    pub max_steps: usize,
    /// Longest image a rule variable may receive.
    pub max_length: usize,
    /// Longest intermediate word kept.
    pub max_word_length: usize,
}

impl Default for DeriveBounds {
    fn default() -> Self {
        DeriveBounds {
            max_steps: 10_000,
            max_length: 4,
            max_word_length: 12,
        }
    }
}

type Symbols = Vec<Var>;

/// All ways to read `pattern` as a factor of `w` starting at `start`, with
/// images of length `1..=max_len`.
fn matches(pattern: &[Var], w: &[Var], start: usize, max_len: usize) -> Vec<Substitution> {
    fn go(
        pattern: &[Var],
        w: &[Var],
        at: usize,
        max_len: usize,
        bound: &mut BTreeMap<Var, Symbols>,
        out: &mut Vec<Substitution>,
    ) {
        let Some((&v, rest)) = pattern.split_first() else {
            out.push(Substitution::from_pairs(
                bound.iter().map(|(&k, s)| (k, Word::new(s.clone()).expect("nonempty image"))),
            ));
            return;
        };
        if let Some(image) = bound.get(&v) {
            let end = at + image.len();
            if end <= w.len() && w[at..end] == image[..] {
                go(rest, w, end, max_len, bound, out);
            }
            return;
        }
        for len in 1..=max_len.min(w.len() - at) {
            bound.insert(v, w[at..at + len].to_vec());
            go(rest, w, at + len, max_len, bound, out);
        }
        bound.remove(&v);
    }
    let mut out = Vec::new();
    go(pattern, w, start, max_len, &mut BTreeMap::new(), &mut out);
    out
}

/// Every word one rule application away from `w`, in a fixed order.
fn neighbours(
    w: &Word,
    basis: &[Identity],
    fresh_images: &[Var],
    bounds: &DeriveBounds,
) -> Vec<RewriteStep> {
    let s = w.symbols();
    let mut out = Vec::new();
    for (index, rule) in basis.iter().enumerate() {
        for direction in [Direction::LeftToRight, Direction::RightToLeft] {
            let (from, to) = match direction {
                Direction::LeftToRight => (&rule.lhs, &rule.rhs),
                Direction::RightToLeft => (&rule.rhs, &rule.lhs),
            };
            let unbound: Vec<Var> = to.alphabet().difference(&from.alphabet()).copied().collect();
            for position in 0..s.len() {
                for base in matches(from.symbols(), s, position, bounds.max_length) {
                    // variables only on the produced side range over single letters
                    let mut subs = vec![base];
                    for &u in &unbound {
                        subs = subs
                            .into_iter()
                            .flat_map(|sub| {
                                fresh_images.iter().map(move |&img| {
                                    let mut next = sub.clone();
                                    next.insert(u, Word::var(img));
                                    next
                                })
                            })
                            .collect();
                    }
                    for substitution in subs {
                        let Ok(after) = apply_rule_at(w, rule, position, &substitution, direction)
                        else {
                            continue;
                        };
                        if after.len() > bounds.max_word_length || after == *w {
                            continue;
                        }
                        out.push(RewriteStep {
                            position,
                            tag: RuleTag::Basis(index),
                            rule: rule.clone(),
                            direction,
                            substitution,
                            before: w.clone(),
                            after,
                        });
                    }
                }
            }
        }
    }
    out
}

struct Side {
    /// Word -> step that first reached it (absent for the root).
    parent: HashMap<Symbols, Option<RewriteStep>>,
    depth: HashMap<Symbols, usize>,
    frontier: Vec<Word>,
    level: usize,
}

impl Side {
    fn new(root: &Word) -> Self {
        Side {
            parent: HashMap::from([(root.symbols().to_vec(), None)]),
            depth: HashMap::from([(root.symbols().to_vec(), 0)]),
            frontier: vec![root.clone()],
            level: 0,
        }
    }

    /// Steps from the root to `w`.
    fn path_to(&self, w: &[Var]) -> RewriteTrace {
        let mut steps = Vec::new();
        let mut cur = w.to_vec();
        while let Some(Some(step)) = self.parent.get(&cur) {
            cur = step.before.symbols().to_vec();
            steps.push(step.clone());
        }
        steps.reverse();
        RewriteTrace { steps }
    }
}

/// Breadth-first search from both sides of `id` for a chain of single rule
/// applications joining them. Returns a shortest chain found within
/// `bounds`, preferring the lexicographically least meeting word among
/// equally short ones. `None` only means nothing was found within the
/// bounds.
pub fn derive_bounded(
    id: &Identity,
    basis: &[Identity],
    bounds: DeriveBounds,
) -> Option<RewriteTrace> {
    if id.lhs == id.rhs {
        return Some(RewriteTrace::new());
    }
    let fresh: Vec<Var> = id.variables().into_iter().collect();
    let mut sides = [Side::new(&id.lhs), Side::new(&id.rhs)];
    let mut expanded = 0usize;
    loop {
        let a = if sides[0].frontier.len() <= sides[1].frontier.len() { 0 } else { 1 };
        if sides[a].frontier.is_empty() {
            return None;
        }
        let b = 1 - a;
        let mut frontier = std::mem::take(&mut sides[a].frontier);
        frontier.sort();
        let next_level = sides[a].level + 1;
        let mut next = BTreeSet::new();
        let mut best: Option<(usize, Symbols)> = None;
        for w in &frontier {
            expanded += 1;
            if expanded > bounds.max_steps {
                return None;
            }
            for step in neighbours(w, basis, &fresh, &bounds) {
                let key = step.after.symbols().to_vec();
                if sides[a].parent.contains_key(&key) {
                    continue;
                }
                if let Some(&d) = sides[b].depth.get(&key) {
                    let candidate = (next_level + d, key.clone());
                    if best.as_ref().is_none_or(|cur| candidate < *cur) {
                        best = Some(candidate);
                    }
                }
                next.insert(step.after.clone());
                sides[a].depth.insert(key.clone(), next_level);
                sides[a].parent.insert(key, Some(step));
            }
        }
        if let Some((_, meet)) = best {
            let mut forward = sides[0].path_to(&meet);
            forward.extend(sides[1].path_to(&meet).reversed());
            return Some(forward);
        }
        sides[a].frontier = next.into_iter().collect();
        sides[a].level = next_level;
    }
}
