//! Congruences, Rees quotients and quotient semigroups.

use thiserror::Error;

use crate::morphism::Homomorphism;
use crate::semigroup::{Element, ElementSet, FiniteSemigroup, TableError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("partition has {got} entries, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("partition is not compatible with multiplication at ({a},{b})")]
    IncompatiblePartition { a: Element, b: Element },
    #[error("congruence belongs to a different semigroup")]
    ForeignCongruence,
    #[error("the set is not an ideal")]
    NotAnIdeal,
    #[error(transparent)]
    Table(#[from] TableError),
}

/// A partition of a semigroup compatible with multiplication.
///
/// Classes are numbered by first occurrence, so class `0` always contains
/// element `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    base: FiniteSemigroup,
    class_of: Vec<usize>,
    class_count: usize,
}

impl Congruence {
    /// Validates an arbitrary class labelling of `base`.
    pub fn new(base: &FiniteSemigroup, labels: &[usize]) -> Result<Self, CongruenceError> {
        if labels.len() != base.size() {
            return Err(CongruenceError::LengthMismatch {
                got: labels.len(),
                expected: base.size(),
            });
        }
        let mut renumber = std::collections::HashMap::new();
        let class_of: Vec<usize> = labels
            .iter()
            .map(|l| {
                let next = renumber.len();
                *renumber.entry(*l).or_insert(next)
            })
            .collect();
        let class_count = renumber.len();
        let mut representative = vec![usize::MAX; class_count];
        for x in base.elements().rev() {
            representative[class_of[x]] = x;
        }
        // Comparing every element with its class representative on both
        // sides is enough for full compatibility.
        for a in base.elements() {
            let r = representative[class_of[a]];
            for b in base.elements() {
                if class_of[base.mul(a, b)] != class_of[base.mul(r, b)] {
                    return Err(CongruenceError::IncompatiblePartition { a, b });
                }
                if class_of[base.mul(b, a)] != class_of[base.mul(b, r)] {
                    return Err(CongruenceError::IncompatiblePartition { a: b, b: a });
                }
            }
        }
        Ok(Congruence {
            base: base.clone(),
            class_of,
            class_count,
        })
    }

    pub fn equality(base: &FiniteSemigroup) -> Self {
        Congruence {
            base: base.clone(),
            class_of: base.elements().collect(),
            class_count: base.size(),
        }
    }

    pub fn universal(base: &FiniteSemigroup) -> Self {
        Congruence {
            base: base.clone(),
            class_of: vec![0; base.size()],
            class_count: 1,
        }
    }

    /// The Rees congruence collapsing `ideal` to one class.
    pub fn rees(base: &FiniteSemigroup, ideal: &ElementSet) -> Result<Self, CongruenceError> {
        if !base.is_ideal(ideal) {
            return Err(CongruenceError::NotAnIdeal);
        }
        let first = ideal.iter().next().expect("ideals are nonempty");
        let labels: Vec<usize> = base
            .elements()
            .map(|x| if ideal.contains(x) { first } else { x })
            .collect();
        Congruence::new(base, &labels)
    }

    pub fn base(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn class_of(&self, x: Element) -> usize {
        self.class_of[x]
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn related(&self, a: Element, b: Element) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn is_equality(&self) -> bool {
        self.class_count == self.base.size()
    }

    pub fn is_universal(&self) -> bool {
        self.class_count == 1
    }

    pub fn classes(&self) -> Vec<Vec<Element>> {
        let mut classes = vec![Vec::new(); self.class_count];
        for x in self.base.elements() {
            classes[self.class_of[x]].push(x);
        }
        classes
    }
}

/// `S/c` with its natural surjection. Classes keep the numbering of `c`;
/// each class is labelled by its least member.
pub fn quotient_by_congruence(
    s: &FiniteSemigroup,
    c: &Congruence,
) -> Result<(FiniteSemigroup, Homomorphism), CongruenceError> {
    if c.base() != s {
        return Err(CongruenceError::ForeignCongruence);
    }
    let classes = c.classes();
    let reps: Vec<Element> = classes.iter().map(|cl| cl[0]).collect();
    let zero = s.zero().map(|z| c.class_of(z));
    let q = FiniteSemigroup::from_fn(c.class_count(), zero, |a, b| {
        c.class_of(s.mul(reps[a], reps[b]))
    })?
    .with_labels(reps.iter().map(|&r| s.label(r).into_owned()).collect())?;
    let hom = Homomorphism::new(s.clone(), q.clone(), s.elements().map(|x| c.class_of(x)).collect())
        .expect("natural map of a congruence is a homomorphism");
    Ok((q, hom))
}

/// `S/I` for an ideal `I`: the ideal becomes the zero (index 0) and the
/// remaining elements keep their relative order.
pub fn rees_quotient(
    s: &FiniteSemigroup,
    ideal: &ElementSet,
) -> Result<(FiniteSemigroup, Homomorphism), CongruenceError> {
    if !s.is_ideal(ideal) {
        return Err(CongruenceError::NotAnIdeal);
    }
    let mut index = vec![0; s.size()];
    let mut labels = vec![s.label(ideal.iter().next().expect("nonempty")).into_owned()];
    for x in s.elements().filter(|&x| !ideal.contains(x)) {
        index[x] = labels.len();
        labels.push(s.label(x).into_owned());
    }
    let survivors: Vec<Element> = s.elements().filter(|&x| !ideal.contains(x)).collect();
    let rep = |q: usize| if q == 0 { ideal.iter().next().unwrap() } else { survivors[q - 1] };
    let q = FiniteSemigroup::from_fn(labels.len(), Some(0), |a, b| index[s.mul(rep(a), rep(b))])?
        .with_labels(labels)?;
    let hom = Homomorphism::new(s.clone(), q.clone(), index)
        .expect("Rees map is a homomorphism");
    Ok((q, hom))
}
