//! Builders for the concrete semigroups used throughout the crate.

mod builtin;

pub use builtin::{parse_builtin, Builtin, BuiltinError};

use thiserror::Error;

use crate::group::GroupTable;
use crate::morphism::Homomorphism;
use crate::semigroup::{Element, ElementSet, FiniteSemigroup, TableError};

/// Largest group accepted by [`powerset_semigroup`]: `(2^5 - 1) * 5 = 155` elements.
pub const MAX_POWERSET_GROUP: usize = 5;

/// Largest Brandt semigroup [`brandt`] will build.
pub const MAX_BRANDT_SIZE: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("group order must be at least 1, got {0}")]
    InvalidOrder(usize),
    #[error("index set needs at least 2 elements, got {0}")]
    IndexTooSmall(usize),
    #[error("construction would have {size} elements, limit is {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("group of order {order} exceeds the limit {limit}")]
    GroupTooLarge { order: usize, limit: usize },
    #[error("group must have at least 2 elements")]
    GroupTooSmall,
    #[error("bad subset: {0}")]
    BadSubset(String),
    #[error(transparent)]
    Table(#[from] TableError),
}

pub fn trivial_group() -> GroupTable {
    let carrier = FiniteSemigroup::from_table(&[vec![0]], None)
        .and_then(|s| s.with_labels(vec!["1".into()]))
        .expect("trivial table");
    GroupTable::from_semigroup(carrier).expect("trivial group")
}

/// `Z_m` written additively: `i*j = (i+j) mod m`.
pub fn cyclic_group(m: usize) -> Result<GroupTable, ConstructionError> {
    if m < 1 {
        return Err(ConstructionError::InvalidOrder(m));
    }
    let carrier = FiniteSemigroup::from_fn(m, None, |a, b| (a + b) % m)?
        .with_labels((0..m).map(|i| i.to_string()).collect())?;
    Ok(GroupTable::from_semigroup(carrier).expect("cyclic table is a group"))
}

/// Permutations of `{0,1,2}` in lexicographic order of their one-line
/// notation (identity first), composed as `(s*t)(i) = s(t(i))`.
pub fn symmetric_group_3() -> GroupTable {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| PERMS.iter().position(|q| *q == p).unwrap();
    let carrier = FiniteSemigroup::from_fn(6, None, |a, b| {
        let (s, t) = (PERMS[a], PERMS[b]);
        index([s[t[0]], s[t[1]], s[t[2]]])
    })
    .and_then(|s| {
        s.with_labels(
            PERMS
                .iter()
                .map(|p| p.iter().map(|d| d.to_string()).collect())
                .collect(),
        )
    })
    .expect("S3 table");
    GroupTable::from_semigroup(carrier).expect("S3 is a group")
}

pub fn exponent(g: &GroupTable) -> usize {
    g.exponent()
}

/// Coordinates of a Brandt semigroup `B(G, I)` with `I = {0, .., k-1}`.
///
/// The zero is element 0; the triple `(i, g, j)` sits at
/// `1 + (i*|G| + g)*k + j`, i.e. triples in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrandtCoords {
    group: GroupTable,
    index_size: usize,
}

impl BrandtCoords {
    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn index_size(&self) -> usize {
        self.index_size
    }

    pub fn zero(&self) -> Element {
        0
    }

    pub fn size(&self) -> usize {
        self.index_size * self.index_size * self.group.order() + 1
    }

    pub fn encode(&self, i: usize, g: Element, j: usize) -> Element {
        debug_assert!(i < self.index_size && j < self.index_size && g < self.group.order());
        1 + (i * self.group.order() + g) * self.index_size + j
    }

    /// `None` for the zero.
    pub fn decode(&self, x: Element) -> Option<(usize, Element, usize)> {
        if x == 0 {
            return None;
        }
        let r = x - 1;
        let k = self.index_size;
        let j = r % k;
        let ig = r / k;
        Some((ig / self.group.order(), ig % self.group.order(), j))
    }

    /// `(j, g⁻¹, i)` for `(i, g, j)`.
    pub fn inverse(&self, x: Element) -> Element {
        match self.decode(x) {
            None => 0,
            Some((i, g, j)) => self.encode(j, self.group.inv(g), i),
        }
    }
}

/// A Brandt semigroup together with its coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Brandt {
    pub semigroup: FiniteSemigroup,
    pub coords: BrandtCoords,
}

/// `B(G, I)` with `|I| = index_size`, labels `(i,g,j)` with 1-based `i, j`.
pub fn brandt(group: &GroupTable, index_size: usize) -> Result<Brandt, ConstructionError> {
    if index_size < 2 {
        return Err(ConstructionError::IndexTooSmall(index_size));
    }
    let coords = BrandtCoords {
        group: group.clone(),
        index_size,
    };
    let size = coords.size();
    if size > MAX_BRANDT_SIZE {
        return Err(ConstructionError::TooLarge {
            size,
            limit: MAX_BRANDT_SIZE,
        });
    }
    let semigroup = FiniteSemigroup::from_fn(size, Some(0), |a, b| {
        match (coords.decode(a), coords.decode(b)) {
            (Some((i, g, j)), Some((k, h, l))) if j == k => coords.encode(i, group.mul(g, h), l),
            _ => 0,
        }
    })?;
    let labels = (0..size)
        .map(|x| match coords.decode(x) {
            None => "0".to_string(),
            Some((i, g, j)) => format!("({},{},{})", i + 1, group.label(g), j + 1),
        })
        .collect();
    let semigroup = semigroup.with_labels(labels)?;
    Ok(Brandt { semigroup, coords })
}

/// The 5-element Brandt semigroup `B(E, 2)`.
pub fn b2() -> Brandt {
    brandt(&trivial_group(), 2).expect("B2")
}

/// `S⁰`: a fresh absorbing zero at index 0, old elements shifted up by one.
pub fn adjoin_zero(s: &FiniteSemigroup) -> FiniteSemigroup {
    let t = FiniteSemigroup::from_fn(s.size() + 1, Some(0), |a, b| {
        if a == 0 || b == 0 {
            0
        } else {
            s.mul(a - 1, b - 1) + 1
        }
    })
    .expect("adjoining a zero preserves associativity");
    let labels = std::iter::once("0".to_string())
        .chain(s.elements().map(|x| s.label(x).into_owned()))
        .collect();
    t.with_labels(labels).expect("label count")
}

/// `S¹`: a fresh identity appended as the last element. A designated zero
/// keeps its index.
pub fn adjoin_identity(s: &FiniteSemigroup) -> FiniteSemigroup {
    let one = s.size();
    let t = FiniteSemigroup::from_fn(s.size() + 1, s.zero(), |a, b| {
        if a == one {
            b
        } else if b == one {
            a
        } else {
            s.mul(a, b)
        }
    })
    .expect("adjoining an identity preserves associativity");
    let labels = s
        .elements()
        .map(|x| s.label(x).into_owned())
        .chain(std::iter::once("1".to_string()))
        .collect();
    t.with_labels(labels).expect("label count")
}

/// The 6-element Brandt monoid `B2¹`.
pub fn b2_monoid() -> FiniteSemigroup {
    adjoin_identity(&b2().semigroup)
}

/// Coordinates of the power-set semigroup on nonempty subsets of `G` times
/// `G`. Subsets are bitmasks over element indices; `(A, g)` sits at
/// `(mask(A) - 1)*|G| + g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowersetCoords {
    group: GroupTable,
}

impl PowersetCoords {
    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn size(&self) -> usize {
        ((1usize << self.group.order()) - 1) * self.group.order()
    }

    pub fn encode(&self, subset: u32, g: Element) -> Element {
        debug_assert!(subset != 0);
        (subset as usize - 1) * self.group.order() + g
    }

    pub fn decode(&self, x: Element) -> (u32, Element) {
        ((x / self.group.order() + 1) as u32, x % self.group.order())
    }

    /// `gB = { g*b : b in B }`.
    pub fn translate(&self, g: Element, subset: u32) -> u32 {
        (0..self.group.order())
            .filter(|b| subset & (1 << b) != 0)
            .fold(0, |acc, b| acc | 1 << self.group.mul(g, b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Powerset {
    pub semigroup: FiniteSemigroup,
    pub coords: PowersetCoords,
}

/// Nonempty subsets of `G` times `G` under `(A,g)(B,h) = (A ∪ gB, gh)`.
pub fn powerset_semigroup(group: &GroupTable) -> Result<Powerset, ConstructionError> {
    if group.order() > MAX_POWERSET_GROUP {
        return Err(ConstructionError::GroupTooLarge {
            order: group.order(),
            limit: MAX_POWERSET_GROUP,
        });
    }
    let coords = PowersetCoords {
        group: group.clone(),
    };
    let semigroup = FiniteSemigroup::from_fn(coords.size(), None, |x, y| {
        let (a, g) = coords.decode(x);
        let (b, h) = coords.decode(y);
        coords.encode(a | coords.translate(g, b), group.mul(g, h))
    })?;
    let labels = (0..coords.size())
        .map(|x| {
            let (a, g) = coords.decode(x);
            let members: Vec<String> = (0..group.order())
                .filter(|b| a & (1 << b) != 0)
                .map(|b| group.label(b))
                .collect();
            format!("({{{}}},{})", members.join(","), group.label(g))
        })
        .collect();
    let semigroup = semigroup.with_labels(labels)?;
    Ok(Powerset { semigroup, coords })
}

/// The surjection from the power-set semigroup of `G` onto `B(E, G)`, the
/// Brandt semigroup over the trivial group whose index set is the carrier
/// of `G`: `({a}, g) -> (a, 1, g⁻¹a)` and every `(A, g)` with `|A| >= 2`
/// goes to 0.
pub fn phi_homomorphism(group: &GroupTable) -> Result<Homomorphism, ConstructionError> {
    if group.order() < 2 {
        return Err(ConstructionError::GroupTooSmall);
    }
    let source = powerset_semigroup(group)?;
    let target = brandt(&trivial_group(), group.order())?;
    let tc = &target.coords;
    let labels = (0..tc.size())
        .map(|x| match tc.decode(x) {
            None => "0".to_string(),
            Some((i, _, j)) => format!("({},1,{})", group.label(i), group.label(j)),
        })
        .collect();
    let target_semigroup = target.semigroup.with_labels(labels)?;
    let map = source
        .semigroup
        .elements()
        .map(|x| {
            let (subset, g) = source.coords.decode(x);
            if subset.count_ones() == 1 {
                let a = subset.trailing_zeros() as usize;
                tc.encode(a, 0, group.mul(group.inv(g), a))
            } else {
                0
            }
        })
        .collect();
    Ok(Homomorphism::new(source.semigroup, target_semigroup, map)
        .expect("phi is multiplicative"))
}

/// The subsemigroup `{(k,1,l) : k,l in K} ∪ {0}` of a Brandt semigroup over
/// the trivial group, for a 2-element subset `K` of the index set.
pub fn restrict_brandt_to(b: &Brandt, subset: &[usize]) -> Result<FiniteSemigroup, ConstructionError> {
    if b.coords.group().order() != 1 {
        return Err(ConstructionError::BadSubset(
            "structure group must be trivial".into(),
        ));
    }
    if subset.len() != 2 || subset[0] == subset[1] {
        return Err(ConstructionError::BadSubset(format!(
            "expected two distinct indices, got {subset:?}"
        )));
    }
    if let Some(&k) = subset.iter().find(|&&k| k >= b.coords.index_size()) {
        return Err(ConstructionError::BadSubset(format!("index {k} out of range")));
    }
    let mut members = vec![b.coords.zero()];
    for &k in subset {
        for &l in subset {
            members.push(b.coords.encode(k, 0, l));
        }
    }
    let (sub, _) = b
        .semigroup
        .subsemigroup(&ElementSet::new(b.semigroup.size(), members))?;
    Ok(sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::find_isomorphism;

    #[test]
    fn small_groups() {
        assert_eq!(cyclic_group(0), Err(ConstructionError::InvalidOrder(0)));
        assert!(find_isomorphism(cyclic_group(1).unwrap().carrier(), trivial_group().carrier()).is_some());
        let z4 = cyclic_group(4).unwrap();
        assert_eq!((z4.identity(), z4.exponent()), (0, 4));
        assert_eq!(trivial_group().exponent(), 1);
    }

    #[test]
    fn s3_is_non_abelian_of_exponent_6() {
        let s3 = symmetric_group_3();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.exponent(), 6);
        // transpositions 021 and 102: composing both ways gives the two 3-cycles
        let (a, b) = (1, 2);
        assert_eq!(s3.label(s3.mul(a, b)), "201");
        assert_eq!(s3.label(s3.mul(b, a)), "120");
        assert!(!s3.is_abelian());
    }

    #[test]
    fn brandt_sizes_and_coordinates() {
        let b = b2();
        assert_eq!(b.semigroup.size(), 5);
        assert_eq!(b.semigroup.label(2), "(1,1,2)");
        let z2 = cyclic_group(2).unwrap();
        assert_eq!(brandt(&z2, 2).unwrap().semigroup.size(), 9);
        let g12 = z2.direct_product(&symmetric_group_3());
        assert_eq!(brandt(&g12, 2).unwrap().semigroup.size(), 49);
        assert_eq!(brandt(&z2, 1), Err(ConstructionError::IndexTooSmall(1)));
        assert!(matches!(brandt(&g12, 5), Err(ConstructionError::TooLarge { .. })));
        let c = &brandt(&z2, 3).unwrap().coords;
        for x in 1..c.size() {
            let (i, g, j) = c.decode(x).unwrap();
            assert_eq!(c.encode(i, g, j), x);
        }
    }

    #[test]
    fn adjoined_elements() {
        let z2 = cyclic_group(2).unwrap();
        let z2_0 = adjoin_zero(z2.carrier());
        assert_eq!(z2_0.size(), 3);
        assert_eq!(z2_0.zero(), Some(0));
        let e0 = adjoin_zero(trivial_group().carrier());
        assert!(e0.idempotents().is_full());
        let b21 = b2_monoid();
        assert_eq!(b21.size(), 6);
        assert_eq!(b21.zero(), Some(0));
        // E¹¹: hand table of the 3-element chain 0 < 1 < 2 under min-by-rank.
        let chain = adjoin_identity(&adjoin_identity(trivial_group().carrier()));
        assert_eq!(chain.rows(), vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]]);
    }

    #[test]
    fn powerset_sizes() {
        assert_eq!(powerset_semigroup(&trivial_group()).unwrap().semigroup.size(), 1);
        assert_eq!(powerset_semigroup(&cyclic_group(2).unwrap()).unwrap().semigroup.size(), 6);
        assert_eq!(powerset_semigroup(&cyclic_group(3).unwrap()).unwrap().semigroup.size(), 21);
        assert!(matches!(
            powerset_semigroup(&cyclic_group(6).unwrap()),
            Err(ConstructionError::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn phi_on_z2() {
        let z2 = cyclic_group(2).unwrap();
        let phi = phi_homomorphism(&z2).unwrap();
        assert_eq!(phi.source().size(), 6);
        assert_eq!(phi.target().size(), 5);
        assert!(phi.is_surjective());
        assert_eq!(phi.fiber(0).len(), 2);
        for y in 1..5 {
            assert_eq!(phi.fiber(y).len(), 1);
        }
        // ({a}, 1) -> (a,1,a), an idempotent
        let p = powerset_semigroup(&z2).unwrap();
        for a in 0..2 {
            let img = phi.apply(p.coords.encode(1 << a, 0));
            assert!(phi.target().is_idempotent(img));
        }
        // (G, g) -> 0
        for g in 0..2 {
            assert_eq!(phi.apply(p.coords.encode(0b11, g)), 0);
        }
        assert_eq!(phi_homomorphism(&trivial_group()), Err(ConstructionError::GroupTooSmall));
    }

    #[test]
    fn restriction_to_two_indices() {
        let b = brandt(&trivial_group(), 3).unwrap();
        for k in [[0, 1], [0, 2], [1, 2]] {
            let r = restrict_brandt_to(&b, &k).unwrap();
            assert!(find_isomorphism(&r, &b2().semigroup).is_some());
        }
        assert!(matches!(restrict_brandt_to(&b, &[1]), Err(ConstructionError::BadSubset(_))));
        assert!(matches!(
            restrict_brandt_to(&brandt(&cyclic_group(2).unwrap(), 2).unwrap(), &[0, 1]),
            Err(ConstructionError::BadSubset(_))
        ));
    }
}
