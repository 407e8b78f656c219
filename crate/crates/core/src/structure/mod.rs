//! Separation of regular elements by homomorphisms onto inverse completely
//! `[0]`-simple semigroups, `[0]`-minimal ideals, and recognition of groups,
//! groups with zero and Brandt semigroups.

mod classify;

pub use classify::{classify, Kind, StructureClass};

use std::fmt;

use thiserror::Error;

use crate::congruence::{quotient_by_congruence, rees_quotient, Congruence};
use crate::morphism::Homomorphism;
use crate::semigroup::{Element, ElementSet, FiniteSemigroup};
use crate::words::{commut, exp_n_red, identity_holds, CheckError, Counterexample, Identity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("element {0} is not regular")]
    NotRegular(Element),
    #[error("the two elements coincide")]
    NotDistinct,
    #[error("identity {identity} fails")]
    HypothesisFails {
        identity: Identity,
        counterexample: Counterexample,
    },
    #[error("separation failed: {0}")]
    SeparationFailed(String),
    #[error(transparent)]
    Check(#[from] CheckError),
}

/// `I_z = {u : z not in SuS}`, tagged as an ideal when nonempty.
pub fn excluded_set(s: &FiniteSemigroup, z: Element) -> ElementSet {
    let set = ElementSet::new(
        s.size(),
        s.elements().filter(|&u| !s.principal_ideal(u).contains(z)),
    );
    debug_assert!(!s.is_regular(z) || !set.contains(z));
    if set.is_empty() {
        set
    } else {
        set.tagged_ideal()
    }
}

/// `x rho_z y` iff for every `t` in `SzS` the products `xt` and `yt` are
/// equal or both lie in `I_z`.
pub fn rho_z(s: &FiniteSemigroup, z: Element) -> Congruence {
    let excluded = excluded_set(s, z);
    let ideal: Vec<Element> = s.principal_ideal(z).to_vec();
    // class of each x is determined by its reduced right action on SzS
    let signature = |x: Element| -> Vec<Option<Element>> {
        ideal
            .iter()
            .map(|&t| Some(s.mul(x, t)).filter(|p| !excluded.contains(*p)))
            .collect()
    };
    let mut seen: Vec<Vec<Option<Element>>> = Vec::new();
    let labels: Vec<usize> = s
        .elements()
        .map(|x| {
            let sig = signature(x);
            seen.iter().position(|y| *y == sig).unwrap_or_else(|| {
                seen.push(sig);
                seen.len() - 1
            })
        })
        .collect();
    Congruence::new(s, &labels).expect("rho_z is compatible with multiplication")
}

/// `S/rho_z` after first collapsing `I_z` when it has more than one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoQuotient {
    /// The congruence `rho_z` on the Rees-reduced semigroup.
    pub congruence: Congruence,
    /// `S` onto the quotient.
    pub hom: Homomorphism,
    pub quotient_class: StructureClass,
}

pub fn rho_quotient(s: &FiniteSemigroup, z: Element) -> RhoQuotient {
    let excluded = excluded_set(s, z);
    let (reduced, reduce) = if excluded.len() > 1 {
        let (r, hom) = rees_quotient(s, &excluded).expect("I_z is an ideal");
        (r, hom)
    } else {
        (s.clone(), Homomorphism::identity(s))
    };
    let z_reduced = reduce.apply(z);
    let congruence = rho_z(&reduced, z_reduced);
    let (quotient, natural) =
        quotient_by_congruence(&reduced, &congruence).expect("congruence on the same semigroup");
    let hom = reduce.then(&natural).expect("composable by construction");
    let quotient_class = classify(&quotient);
    RhoQuotient {
        congruence,
        hom,
        quotient_class,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationResult {
    pub chosen_z: Element,
    pub hom: Homomorphism,
    pub quotient_class: StructureClass,
}

fn require(s: &FiniteSemigroup, id: Identity) -> Result<(), StructureError> {
    match identity_holds(s, &id, None)?.counterexample {
        None => Ok(()),
        Some(counterexample) => Err(StructureError::HypothesisFails {
            identity: id,
            counterexample,
        }),
    }
}

/// Separates distinct regular elements `a`, `b` of a semigroup satisfying
/// `xyx = (xy)^(n+1)x` and `x^n y^n = y^n x^n` by the natural map onto a
/// quotient by `rho_a` or `rho_b`. `rho_a` is used when `a` is outside
/// `SbS` or when `a` and `b` generate the same ideal, `rho_b` when `b` is
/// outside `SaS`. The separation and the kind of quotient are checked, not
/// assumed.
pub fn separate_regular_pair(
    s: &FiniteSemigroup,
    a: Element,
    b: Element,
    n: usize,
) -> Result<SeparationResult, StructureError> {
    if a == b {
        return Err(StructureError::NotDistinct);
    }
    for x in [a, b] {
        if !s.is_regular(x) {
            return Err(StructureError::NotRegular(x));
        }
    }
    require(s, exp_n_red(n))?;
    require(s, commut(n))?;

    let order = if s.principal_ideal(a).contains(b) && !s.principal_ideal(b).contains(a) {
        [b, a]
    } else {
        [a, b]
    };
    for z in order {
        let rq = rho_quotient(s, z);
        if rq.hom.apply(a) == rq.hom.apply(b) {
            continue;
        }
        if rq.quotient_class.kind == Kind::Other {
            return Err(StructureError::SeparationFailed(format!(
                "quotient by rho_{z} is not a group, group with zero or Brandt semigroup"
            )));
        }
        return Ok(SeparationResult {
            chosen_z: z,
            hom: rq.hom,
            quotient_class: rq.quotient_class,
        });
    }
    Err(StructureError::SeparationFailed(format!(
        "neither rho_{a} nor rho_{b} separates {a} and {b}"
    )))
}

/// Minimal nonzero ideals, or the least ideal when `s` has no zero. Each is
/// a principal ideal `S^1 u S^1`, listed by least generator.
pub fn zero_minimal_ideals(s: &FiniteSemigroup) -> Vec<ElementSet> {
    let zero = s.structural_zero();
    let mut principal: Vec<ElementSet> = Vec::new();
    for u in s.elements().filter(|&u| Some(u) != zero) {
        let j = s.ideal_generated_by(u);
        if !principal.contains(&j) {
            principal.push(j);
        }
    }
    principal
        .iter()
        .filter(|j| !principal.iter().any(|k| k != *j && k.is_subset(j)))
        .cloned()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReport {
    pub ideal: ElementSet,
    /// Whether the ideal holds a nonzero element regular in the whole
    /// semigroup.
    pub has_regular: bool,
    pub inverse: bool,
    pub completely_zero_simple: bool,
}

impl IdealReport {
    /// Ideals without a regular element impose nothing.
    pub fn holds(&self) -> bool {
        !self.has_regular || (self.inverse && self.completely_zero_simple)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalIdealReport {
    pub ideals: Vec<IdealReport>,
}

impl MinimalIdealReport {
    pub fn holds(&self) -> bool {
        self.ideals.iter().all(IdealReport::holds)
    }
}

impl fmt::Display for MinimalIdealReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.ideals {
            writeln!(
                f,
                "ideal {:?} regular={} inverse={} completely_0_simple={}",
                r.ideal.to_vec(),
                r.has_regular,
                r.inverse,
                r.completely_zero_simple
            )?;
        }
        Ok(())
    }
}

/// For a semigroup satisfying `xyx = (xy)^(n+1)x` and `x^n y^n = y^n x^n`,
/// checks that every `[0]`-minimal ideal containing a nonzero regular
/// element is an inverse completely `[0]`-simple semigroup.
pub fn verify_lemma4(s: &FiniteSemigroup, n: usize) -> Result<MinimalIdealReport, StructureError> {
    require(s, exp_n_red(n))?;
    require(s, commut(n))?;
    let zero = s.structural_zero();
    let ideals = zero_minimal_ideals(s)
        .into_iter()
        .map(|ideal| {
            let has_regular = ideal.iter().any(|u| Some(u) != zero && s.is_regular(u));
            let (sub, _) = s.subsemigroup(&ideal).expect("ideals are closed");
            IdealReport {
                has_regular,
                inverse: sub.is_inverse_semigroup(),
                completely_zero_simple: sub.is_completely_zero_simple(),
                ideal,
            }
        })
        .collect();
    Ok(MinimalIdealReport { ideals })
}
