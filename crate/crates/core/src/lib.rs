//! Finite semigroups, Brandt semigroups and their plain identities.
//!
//! Semigroups are multiplication tables over `0..n`. On top of them sit
//! constructions (groups, Brandt semigroups, adjoined zero and identity, the
//! power-set semigroup of a group), exhaustive identity checking, rewriting
//! of words into products of cells, and the separation of regular elements
//! by homomorphisms onto groups, groups with zero and Brandt semigroups.

pub mod congruence;
pub mod constructions;
pub mod group;
pub mod morphism;
pub mod rewrite;
pub mod semigroup;
pub mod structure;
pub mod table_file;
pub mod words;

pub use congruence::{quotient_by_congruence, rees_quotient, Congruence, CongruenceError};
pub use constructions::{parse_builtin, Builtin, BuiltinError};
pub use constructions::{Brandt, BrandtCoords, ConstructionError};
pub use group::{GroupError, GroupTable};
pub use morphism::{are_isomorphic, find_isomorphism, Homomorphism, MorphismError};
pub use rewrite::{apply_rule_at, CellForm, Direction, RewriteError, RewriteTrace, RuleTag, Substitution};
pub use semigroup::{direct_product, Element, ElementSet, FiniteSemigroup, TableError};
pub use structure::{classify, Kind, StructureClass, StructureError};
pub use table_file::{parse_table_file, write_table_file, TableFileError};
pub use words::{
    identity_holds, parse_identity, parse_word, CheckError, Counterexample, Evaluation, Identity,
    Var, Verdict, Word, WordError,
};
