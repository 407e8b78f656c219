use std::fmt;

use crate::constructions::{adjoin_zero, brandt};
use crate::group::GroupTable;
use crate::morphism::Homomorphism;
use crate::semigroup::{Element, ElementSet, FiniteSemigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Group,
    GroupWithZero,
    Brandt,
    Other,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Group => "Group",
            Kind::GroupWithZero => "GroupWithZero",
            Kind::Brandt => "Brandt",
            Kind::Other => "Other",
        })
    }
}

/// Outcome of [`classify`]. For every kind but `Other`, `witness` is an
/// isomorphism from the input onto the canonical model: the group itself,
/// `Q^0` built by adjoining a zero, or the Brandt semigroup over
/// `group_part` with `index_size` indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureClass {
    pub kind: Kind,
    pub group_part: Option<GroupTable>,
    pub index_size: Option<usize>,
    pub witness: Option<Homomorphism>,
}

impl StructureClass {
    fn other() -> Self {
        StructureClass {
            kind: Kind::Other,
            group_part: None,
            index_size: None,
            witness: None,
        }
    }

    pub fn q_order(&self) -> Option<usize> {
        self.group_part.as_ref().map(GroupTable::order)
    }
}

/// `kind=<K> |Q|=<m> |J|=<k>`, with `-` for absent values.
impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
        write!(
            f,
            "kind={} |Q|={} |J|={}",
            self.kind,
            show(self.q_order()),
            show(self.index_size)
        )
    }
}

fn checked(source: &FiniteSemigroup, target: FiniteSemigroup, map: Vec<Element>) -> Option<Homomorphism> {
    Homomorphism::new(source.clone(), target, map)
        .ok()
        .filter(Homomorphism::is_isomorphism)
}

/// Recognises groups, groups with zero and Brandt semigroups, building an
/// explicit coordinate isomorphism in each case. Anything else, including
/// inputs for which the constructed map fails to be an isomorphism, is
/// `Other`.
pub fn classify(t: &FiniteSemigroup) -> StructureClass {
    if let Ok(g) = GroupTable::from_semigroup(t.clone()) {
        let witness = Homomorphism::identity(t);
        return StructureClass {
            kind: Kind::Group,
            group_part: Some(g),
            index_size: Some(1),
            witness: Some(witness),
        };
    }
    let Some(zero) = t.structural_zero() else {
        return StructureClass::other();
    };
    let nonzero = ElementSet::new(t.size(), t.elements().filter(|&x| x != zero));
    if let Ok((sub, embedding)) = t.subsemigroup(&nonzero) {
        if let Ok(q) = GroupTable::from_semigroup(sub) {
            let mut map = vec![0; t.size()];
            for (i, &x) in embedding.iter().enumerate() {
                map[x] = i + 1;
            }
            return match checked(t, adjoin_zero(q.carrier()), map) {
                Some(witness) => StructureClass {
                    kind: Kind::GroupWithZero,
                    group_part: Some(q),
                    index_size: Some(1),
                    witness: Some(witness),
                },
                None => StructureClass::other(),
            };
        }
    }
    if !t.is_inverse_semigroup() || !t.is_completely_zero_simple() {
        return StructureClass::other();
    }
    brandt_coordinates(t, zero).unwrap_or_else(StructureClass::other)
}

fn brandt_coordinates(t: &FiniteSemigroup, zero: Element) -> Option<StructureClass> {
    let inv = |x: Element| t.unique_inverse(x).expect("inverse semigroup");
    let idempotents: Vec<Element> = t.idempotents().iter().filter(|&e| e != zero).collect();
    let f1 = *idempotents.first()?;
    let index_of = |e: Element| idempotents.iter().position(|&f| f == e);

    // maximal subgroup at f1
    let local = ElementSet::new(
        t.size(),
        t.elements().filter(|&x| x != zero && t.mul(t.mul(f1, x), f1) == x),
    );
    let (sub, embedding) = t.subsemigroup(&local).ok()?;
    let q = GroupTable::from_semigroup(sub).ok()?;

    // q_j with q_j q_j' = f1 and q_j' q_j = f_j, least index first
    let connecting: Vec<Element> = idempotents
        .iter()
        .map(|&fj| {
            t.elements()
                .find(|&x| x != zero && t.mul(x, inv(x)) == f1 && t.mul(inv(x), x) == fj)
        })
        .collect::<Option<_>>()?;

    let model = brandt(&q, idempotents.len()).ok()?;
    let mut map = vec![model.coords.zero(); t.size()];
    for x in t.elements().filter(|&x| x != zero) {
        let i = index_of(t.mul(x, inv(x)))?;
        let j = index_of(t.mul(inv(x), x))?;
        let g = t.mul(t.mul(connecting[i], x), inv(connecting[j]));
        let g = embedding.iter().position(|&y| y == g)?;
        map[x] = model.coords.encode(i, g, j);
    }
    let witness = checked(t, model.semigroup, map)?;
    Some(StructureClass {
        kind: Kind::Brandt,
        group_part: Some(q),
        index_size: Some(idempotents.len()),
        witness: Some(witness),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{b2, b2_monoid, cyclic_group, symmetric_group_3};
    use crate::morphism::are_isomorphic;

    #[test]
    fn brandt_round_trip() {
        let z3 = cyclic_group(3).unwrap();
        let b = brandt(&z3, 3).unwrap();
        let c = classify(&b.semigroup);
        assert_eq!(c.kind, Kind::Brandt);
        assert_eq!(c.index_size, Some(3));
        assert!(are_isomorphic(c.group_part.as_ref().unwrap().carrier(), z3.carrier()));
        assert!(c.witness.unwrap().is_isomorphism());
        assert_eq!(classify(&b.semigroup).to_string(), "kind=Brandt |Q|=3 |J|=3");
    }

    #[test]
    fn groups_and_groups_with_zero() {
        let z4 = cyclic_group(4).unwrap();
        assert_eq!(classify(z4.carrier()).kind, Kind::Group);
        let c = classify(&adjoin_zero(z4.carrier()));
        assert_eq!(c.kind, Kind::GroupWithZero);
        assert_eq!(c.to_string(), "kind=GroupWithZero |Q|=4 |J|=1");
        assert_eq!(classify(symmetric_group_3().carrier()).kind, Kind::Group);
    }

    #[test]
    fn other_inputs() {
        assert_eq!(classify(&b2_monoid()).kind, Kind::Other);
        let left_zero = FiniteSemigroup::from_table(&[vec![0, 0], vec![1, 1]], None).unwrap();
        let c = classify(&left_zero);
        assert_eq!(c, StructureClass::other());
        assert_eq!(c.to_string(), "kind=Other |Q|=- |J|=-");
    }

    #[test]
    fn b2_is_brandt_over_trivial_group() {
        let c = classify(&b2().semigroup);
        assert_eq!(c.kind, Kind::Brandt);
        assert_eq!((c.q_order(), c.index_size), (Some(1), Some(2)));
    }
}
