//! Finite automata toolkit for measuring the quotient complexity of
//! prefix-convex languages and operations on them.
//!
//! The pipeline behind every measurement is complete, determinize, minimize,
//! count. Witness DFAs for each class come from [`witness`], operations from
//! [`constructions`], atoms from [`atoms`], and closed-form bounds from
//! [`bounds`].

pub mod atoms;
pub mod automata;
pub mod bitset;
pub mod bounds;
pub mod constructions;
pub mod convexity;
pub mod error;
pub mod transform;
pub mod witness;

pub use atoms::{atom_complexity, atoms_report, AtomComplexity, AtomReport};
pub use automata::{equivalent, joint_alphabet, Dfa, LanguageClass, Nfa};
pub use bitset::StateSet;
pub use bounds::{atom_bound, bound, Bound, BoundQuery, Measure};
pub use constructions::{boolean, concat, measure, reverse, star, BooleanOp, Op};
pub use convexity::{classify, classify_report, is_prefix_convex, ClassReport};
pub use error::{Error, Result};
pub use transform::{compose, SemigroupSize, Transformation};
pub use witness::{apply_dialect, theorem_operands, witness, Dialect, Family, WitnessParams};
