//! Homomorphisms between finite semigroups and isomorphism search.

use thiserror::Error;

use crate::semigroup::{Element, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("map has {got} entries but the source has {expected} elements")]
    LengthMismatch { got: usize, expected: usize },
    #[error("image {image} of element {x} is outside the target")]
    OutOfRange { x: Element, image: Element },
    #[error("map is not multiplicative at ({x},{y})")]
    NotMultiplicative { x: Element, y: Element },
    #[error("cannot compose: the first map's target is not the second map's source")]
    NotComposable,
}

/// A validated semigroup homomorphism `source -> target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    source: FiniteSemigroup,
    target: FiniteSemigroup,
    map: Vec<Element>,
}

impl Homomorphism {
    /// Checks `map(x*y) = map(x)*map(y)` for every pair.
    pub fn new(
        source: FiniteSemigroup,
        target: FiniteSemigroup,
        map: Vec<Element>,
    ) -> Result<Self, MorphismError> {
        if map.len() != source.size() {
            return Err(MorphismError::LengthMismatch {
                got: map.len(),
                expected: source.size(),
            });
        }
        if let Some((x, &image)) = map.iter().enumerate().find(|(_, &y)| y >= target.size()) {
            return Err(MorphismError::OutOfRange { x, image });
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(MorphismError::NotMultiplicative { x, y });
                }
            }
        }
        Ok(Homomorphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(s: &FiniteSemigroup) -> Self {
        Homomorphism {
            source: s.clone(),
            target: s.clone(),
            map: s.elements().collect(),
        }
    }

    pub fn source(&self) -> &FiniteSemigroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteSemigroup {
        &self.target
    }

    pub fn map(&self) -> &[Element] {
        &self.map
    }

    pub fn apply(&self, x: Element) -> Element {
        self.map[x]
    }

    /// Elements of the source sent to `y`.
    pub fn fiber(&self, y: Element) -> Vec<Element> {
        self.source.elements().filter(|&x| self.map[x] == y).collect()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        self.map.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.size() == self.target.size() && self.is_injective()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Homomorphism) -> Result<Homomorphism, MorphismError> {
        if self.target != next.source {
            return Err(MorphismError::NotComposable);
        }
        Ok(Homomorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&y| next.map[y]).collect(),
        })
    }
}

/// Isomorphism-invariant data used to prune the search.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Fingerprint {
    idempotent: bool,
    index: usize,
    period: usize,
    right_ideal: usize,
    left_ideal: usize,
    two_sided: usize,
    fixes_left: usize,
    fixes_right: usize,
}

fn fingerprints(s: &FiniteSemigroup) -> Vec<Fingerprint> {
    s.elements()
        .map(|x| {
            let (index, period) = s.index_and_period(x);
            let mut right = vec![false; s.size()];
            let mut left = vec![false; s.size()];
            for t in s.elements() {
                right[s.mul(x, t)] = true;
                left[s.mul(t, x)] = true;
            }
            Fingerprint {
                idempotent: s.is_idempotent(x),
                index,
                period,
                right_ideal: right.iter().filter(|&&b| b).count(),
                left_ideal: left.iter().filter(|&&b| b).count(),
                two_sided: s.principal_ideal(x).len(),
                fixes_left: s.elements().filter(|&t| s.mul(t, x) == x).count(),
                fixes_right: s.elements().filter(|&t| s.mul(x, t) == x).count(),
            }
        })
        .collect()
}

struct Search<'a> {
    s: &'a FiniteSemigroup,
    t: &'a FiniteSemigroup,
    fs: Vec<Fingerprint>,
    ft: Vec<Fingerprint>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    /// Assigns `x -> y` and closes the partial map under products.
    fn assign(&self, map: &mut [Element], used: &mut [Element], x: Element, y: Element) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((a, b)) = queue.pop() {
            if map[a] != UNSET {
                if map[a] != b {
                    return false;
                }
                continue;
            }
            if used[b] != UNSET || self.fs[a] != self.ft[b] {
                return false;
            }
            map[a] = b;
            used[b] = a;
            for c in self.s.elements() {
                let d = map[c];
                if d == UNSET {
                    continue;
                }
                queue.push((self.s.mul(a, c), self.t.mul(b, d)));
                queue.push((self.s.mul(c, a), self.t.mul(d, b)));
            }
        }
        true
    }

    fn extend(&self, map: &mut Vec<Element>, used: &mut Vec<Element>) -> bool {
        let Some(x) = map.iter().position(|&y| y == UNSET) else {
            return true;
        };
        for y in self.t.elements() {
            if used[y] != UNSET || self.fs[x] != self.ft[y] {
                continue;
            }
            let (saved_map, saved_used) = (map.clone(), used.clone());
            if self.assign(map, used, x, y) && self.extend(map, used) {
                return true;
            }
            *map = saved_map;
            *used = saved_used;
        }
        false
    }
}

/// Searches for an isomorphism `s -> t` by backtracking over elements in
/// index order, propagating every forced product. Deterministic: candidate
/// images are tried in increasing index order.
pub fn find_isomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Option<Homomorphism> {
    if s.size() != t.size() {
        return None;
    }
    let search = Search {
        s,
        t,
        fs: fingerprints(s),
        ft: fingerprints(t),
    };
    let mut a = search.fs.clone();
    let mut b = search.ft.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let mut map = vec![UNSET; s.size()];
    let mut used = vec![UNSET; t.size()];
    if !search.extend(&mut map, &mut used) {
        return None;
    }
    let iso = Homomorphism::new(s.clone(), t.clone(), map).expect("search only builds homomorphisms");
    debug_assert!(iso.is_isomorphism());
    Some(iso)
}

pub fn are_isomorphic(s: &FiniteSemigroup, t: &FiniteSemigroup) -> bool {
    find_isomorphism(s, t).is_some()
}
