//! Finite groups as semigroup tables with an identity and inverses.

use thiserror::Error;

use crate::semigroup::{direct_product, Element, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("row {0} of the table is not a permutation")]
    RowNotPermutation(Element),
    #[error("column {0} of the table is not a permutation")]
    ColumnNotPermutation(Element),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("a group has no designated zero")]
    HasZero,
}

/// A group: a semigroup whose table is a Latin square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    carrier: FiniteSemigroup,
    identity: Element,
    inverse: Vec<Element>,
}

impl GroupTable {
    pub fn from_semigroup(carrier: FiniteSemigroup) -> Result<Self, GroupError> {
        if carrier.zero().is_some() && carrier.size() > 1 {
            return Err(GroupError::HasZero);
        }
        let n = carrier.size();
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                seen[carrier.mul(a, b)] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(GroupError::RowNotPermutation(a));
            }
        }
        for b in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for a in 0..n {
                seen[carrier.mul(a, b)] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(GroupError::ColumnNotPermutation(b));
            }
        }
        // An associative Latin square is a group.
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| carrier.mul(e, x) == x && carrier.mul(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| carrier.mul(x, y) == identity)
                    .expect("Latin square rows are surjective")
            })
            .collect();
        Ok(GroupTable {
            carrier,
            identity,
            inverse,
        })
    }

    pub fn carrier(&self) -> &FiniteSemigroup {
        &self.carrier
    }

    pub fn into_carrier(self) -> FiniteSemigroup {
        self.carrier
    }

    pub fn order(&self) -> usize {
        self.carrier.size()
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.carrier.mul(a, b)
    }

    pub fn inv(&self, a: Element) -> Element {
        self.inverse[a]
    }

    pub fn pow(&self, g: Element, k: usize) -> Element {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    /// Least `k >= 1` with `g^k = 1`.
    pub fn element_order(&self, g: Element) -> usize {
        let mut power = g;
        let mut k = 1;
        while power != self.identity {
            power = self.mul(power, g);
            k += 1;
        }
        k
    }

    /// Least `n >= 1` with `g^n = 1` for every `g`: the lcm of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|g| self.element_order(g)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Direct product, with `(g, h)` at index `g*|H| + h`.
    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        GroupTable::from_semigroup(direct_product(&self.carrier, &other.carrier))
            .expect("a product of groups is a group")
    }

    pub fn label(&self, g: Element) -> String {
        self.carrier.label(g).into_owned()
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
