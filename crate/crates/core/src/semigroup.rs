//! Finite semigroups stored as validated multiplication tables.
//!
//! Elements are dense indices `0..size`. A table is accepted only if it is
//! square, in range and associative; every other type in the crate builds on
//! that guarantee.

use std::borrow::Cow;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Index of an element of a [`FiniteSemigroup`].
pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("a semigroup needs at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {size}")]
    NotSquare { row: usize, len: usize, size: usize },
    #[error("entry {value} at row {row}, column {col} is out of range for size {size}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: Element, b: Element, c: Element },
    #[error("designated zero {zero} is out of range for size {size}")]
    ZeroOutOfRange { zero: Element, size: usize },
    #[error("designated zero {zero} does not absorb element {x}")]
    ZeroNotAbsorbing { zero: Element, x: Element },
    #[error("got {got} labels for a semigroup of size {size}")]
    LabelCount { got: usize, size: usize },
    #[error("subset is not closed under multiplication: {a}*{b} = {product} leaves it")]
    NotClosed {
        a: Element,
        b: Element,
        product: Element,
    },
}

/// A finite semigroup given by its multiplication table.
///
/// Equality compares the table and the designated zero; labels are for
/// display only.
#[derive(Clone, Debug)]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<Element>,
    zero: Option<Element>,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.zero == other.zero && self.table == other.table
    }
}

impl Eq for FiniteSemigroup {}

impl FiniteSemigroup {
    /// Validates a raw table (row `a` holds the products `a*b`).
    pub fn from_table(raw: &[Vec<usize>], zero: Option<Element>) -> Result<Self, TableError> {
        let size = raw.len();
        if size == 0 {
            return Err(TableError::Empty);
        }
        let mut table = Vec::with_capacity(size * size);
        for (row, entries) in raw.iter().enumerate() {
            if entries.len() != size {
                return Err(TableError::NotSquare {
                    row,
                    len: entries.len(),
                    size,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= size {
                    return Err(TableError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        size,
                    });
                }
                table.push(value);
            }
        }
        Self::from_flat(size, table, zero)
    }

    /// Builds and validates a table from a product function.
    pub fn from_fn(
        size: usize,
        zero: Option<Element>,
        mut product: impl FnMut(Element, Element) -> Element,
    ) -> Result<Self, TableError> {
        if size == 0 {
            return Err(TableError::Empty);
        }
        let mut table = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                let value = product(a, b);
                if value >= size {
                    return Err(TableError::EntryOutOfRange {
                        row: a,
                        col: b,
                        value,
                        size,
                    });
                }
                table.push(value);
            }
        }
        Self::from_flat(size, table, zero)
    }

    fn from_flat(size: usize, table: Vec<Element>, zero: Option<Element>) -> Result<Self, TableError> {
        let s = FiniteSemigroup {
            size,
            table,
            zero,
            labels: None,
        };
        s.check_associative()?;
        if let Some(z) = zero {
            if z >= size {
                return Err(TableError::ZeroOutOfRange { zero: z, size });
            }
            if let Some(x) = (0..size).find(|&x| s.mul(z, x) != z || s.mul(x, z) != z) {
                return Err(TableError::ZeroNotAbsorbing { zero: z, x });
            }
        }
        Ok(s)
    }

    fn check_associative(&self) -> Result<(), TableError> {
        let n = self.size;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(TableError::NonAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Attaches display labels, one per element.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, TableError> {
        if labels.len() != self.size {
            return Err(TableError::LabelCount {
                got: labels.len(),
                size: self.size,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.size + b]
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size
    }

    /// The designated zero, if the table carries one.
    pub fn zero(&self) -> Option<Element> {
        self.zero
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `x`; falls back to the index.
    pub fn label(&self, x: Element) -> Cow<'_, str> {
        match &self.labels {
            Some(labels) => Cow::Borrowed(labels[x].as_str()),
            None => Cow::Owned(x.to_string()),
        }
    }

    /// Looks an element up by label, or by index when the text is numeric.
    pub fn element_by_label(&self, text: &str) -> Option<Element> {
        if let Some(labels) = &self.labels {
            if let Some(pos) = labels.iter().position(|l| l == text) {
                return Some(pos);
            }
        }
        text.parse::<usize>().ok().filter(|&i| i < self.size)
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// Any two-sided absorbing element, designated or not.
    pub fn absorbing_element(&self) -> Option<Element> {
        if let Some(z) = self.zero {
            return Some(z);
        }
        self.elements()
            .find(|&z| self.elements().all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    /// The zero in the sense of `[0]`-notions: an absorbing element of a
    /// semigroup with at least two elements. A one-element semigroup is
    /// treated as the trivial group.
    pub fn structural_zero(&self) -> Option<Element> {
        if self.size < 2 {
            None
        } else {
            self.absorbing_element()
        }
    }

    pub fn is_idempotent(&self, e: Element) -> bool {
        self.mul(e, e) == e
    }

    pub fn idempotents(&self) -> ElementSet {
        ElementSet::new(self.size, self.elements().filter(|&e| self.is_idempotent(e)))
    }

    /// All `b` with `aba = a` and `bab = b`.
    pub fn inverses_of(&self, a: Element) -> ElementSet {
        ElementSet::new(
            self.size,
            self.elements().filter(|&b| {
                self.mul(self.mul(a, b), a) == a && self.mul(self.mul(b, a), b) == b
            }),
        )
    }

    pub fn is_regular(&self, a: Element) -> bool {
        self.elements()
            .any(|b| self.mul(self.mul(a, b), a) == a && self.mul(self.mul(b, a), b) == b)
    }

    /// The unique inverse of `a`, if `a` has exactly one.
    pub fn unique_inverse(&self, a: Element) -> Option<Element> {
        let inv = self.inverses_of(a);
        if inv.len() == 1 {
            inv.iter().next()
        } else {
            None
        }
    }

    pub fn is_inverse_semigroup(&self) -> bool {
        self.elements().all(|a| self.inverses_of(a).len() == 1)
    }

    /// `x*A` for a set `A` given as a membership mask.
    fn left_translate(&self, x: Element, set: &[bool], out: &mut [bool]) {
        for (a, &inside) in set.iter().enumerate() {
            if inside {
                out[self.mul(x, a)] = true;
            }
        }
    }

    /// `SuS = { s*u*t : s, t in S }`, computed literally; no identity is
    /// adjoined, so `u` itself need not belong to the result.
    pub fn principal_ideal(&self, u: Element) -> ElementSet {
        let n = self.size;
        let mut ut = vec![false; n];
        for t in 0..n {
            ut[self.mul(u, t)] = true;
        }
        let mut sut = vec![false; n];
        for s in 0..n {
            self.left_translate(s, &ut, &mut sut);
        }
        ElementSet::from_mask(&sut).tagged_ideal()
    }

    /// `S¹uS¹`, the least ideal containing `u`.
    pub fn ideal_generated_by(&self, u: Element) -> ElementSet {
        let mut members: BTreeSet<Element> = self.principal_ideal(u).members;
        members.insert(u);
        for s in 0..self.size {
            members.insert(self.mul(s, u));
            members.insert(self.mul(u, s));
        }
        ElementSet {
            universe: self.size,
            members,
            ideal: true,
        }
    }

    /// Whether `set` absorbs multiplication by `S` on both sides.
    pub fn is_ideal(&self, set: &ElementSet) -> bool {
        !set.is_empty()
            && set.iter().all(|u| {
                self.elements()
                    .all(|s| set.contains(self.mul(s, u)) && set.contains(self.mul(u, s)))
            })
    }

    /// `S·S`.
    pub fn square(&self) -> ElementSet {
        ElementSet::new(self.size, self.table.iter().copied())
    }

    /// `[0]`-simplicity: `S = S²` and the only ideals are `S` and `{0}`.
    pub fn is_zero_simple(&self) -> bool {
        if self.square().len() != self.size {
            return false;
        }
        let zero = self.structural_zero();
        self.elements()
            .filter(|&u| Some(u) != zero)
            .all(|u| self.principal_ideal(u).len() == self.size)
    }

    /// `[0]`-simple with a nonzero idempotent that is primitive: the only
    /// idempotents below it are itself and `0`.
    pub fn is_completely_zero_simple(&self) -> bool {
        if !self.is_zero_simple() {
            return false;
        }
        let zero = self.structural_zero();
        let idempotents = self.idempotents().to_vec();
        idempotents.iter().filter(|&&e| Some(e) != zero).any(|&e| {
            idempotents.iter().all(|&f| {
                !(self.mul(e, f) == f && self.mul(f, e) == f) || f == e || Some(f) == zero
            })
        })
    }

    /// The subsemigroup on `members`, reindexed in increasing order.
    ///
    /// Returns the subsemigroup together with the embedding (new index to old).
    pub fn subsemigroup(&self, members: &ElementSet) -> Result<(FiniteSemigroup, Vec<Element>), TableError> {
        let embedding: Vec<Element> = members.iter().collect();
        if embedding.is_empty() {
            return Err(TableError::Empty);
        }
        let mut position = vec![usize::MAX; self.size];
        for (i, &x) in embedding.iter().enumerate() {
            position[x] = i;
        }
        for &a in &embedding {
            for &b in &embedding {
                let p = self.mul(a, b);
                if position[p] == usize::MAX {
                    return Err(TableError::NotClosed { a, b, product: p });
                }
            }
        }
        let zero = self
            .zero
            .filter(|z| members.contains(*z))
            .map(|z| position[z]);
        let sub = FiniteSemigroup::from_fn(embedding.len(), zero, |a, b| {
            position[self.mul(embedding[a], embedding[b])]
        })?;
        let sub = match &self.labels {
            Some(labels) => sub.with_labels(embedding.iter().map(|&x| labels[x].clone()).collect())?,
            None => sub,
        };
        Ok((sub, embedding))
    }

    /// Index-level copy with a different designated zero (or none).
    pub fn with_zero(&self, zero: Option<Element>) -> Result<Self, TableError> {
        let s = Self::from_flat(self.size, self.table.clone(), zero)?;
        Ok(FiniteSemigroup {
            labels: self.labels.clone(),
            ..s
        })
    }

    /// The cyclic subsemigroup of `x` as (index, period): `x^(index+period) = x^index`.
    pub fn index_and_period(&self, x: Element) -> (usize, usize) {
        let mut seen = vec![usize::MAX; self.size];
        let mut power = x;
        let mut k = 1;
        loop {
            if seen[power] != usize::MAX {
                return (seen[power], k - seen[power]);
            }
            seen[power] = k;
            power = self.mul(power, x);
            k += 1;
        }
    }
}

/// Componentwise product; element `(s, t)` has index `s*|T| + t`.
pub fn direct_product(s: &FiniteSemigroup, t: &FiniteSemigroup) -> FiniteSemigroup {
    let m = t.size();
    let zero = match (s.zero(), t.zero()) {
        (Some(a), Some(b)) => Some(a * m + b),
        _ => None,
    };
    let product = FiniteSemigroup::from_fn(s.size() * m, zero, |x, y| {
        s.mul(x / m, y / m) * m + t.mul(x % m, y % m)
    })
    .expect("a product of semigroups is a semigroup");
    let labels = (0..s.size() * m)
        .map(|x| format!("({},{})", s.label(x / m), t.label(x % m)))
        .collect();
    product.with_labels(labels).expect("label count matches")
}

impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.table.chunks(self.size) {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A set of elements of a semigroup of size `universe`, optionally tagged as
/// an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSet {
    universe: usize,
    members: BTreeSet<Element>,
    ideal: bool,
}

impl ElementSet {
    pub fn new(universe: usize, members: impl IntoIterator<Item = Element>) -> Self {
        let members: BTreeSet<Element> = members.into_iter().collect();
        debug_assert!(members.iter().all(|&x| x < universe));
        ElementSet {
            universe,
            members,
            ideal: false,
        }
    }

    pub fn empty(universe: usize) -> Self {
        Self::new(universe, [])
    }

    fn from_mask(mask: &[bool]) -> Self {
        Self::new(
            mask.len(),
            mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i),
        )
    }

    /// Tags the set as an ideal. Empty sets are never tagged.
    pub fn tagged_ideal(mut self) -> Self {
        self.ideal = !self.members.is_empty();
        self
    }

    pub fn is_tagged_ideal(&self) -> bool {
        self.ideal
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members.contains(&x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.universe
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.iter().collect()
    }
}
