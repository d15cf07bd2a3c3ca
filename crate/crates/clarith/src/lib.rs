//! clarith: proof transformations and program extraction for classical
//! first-order arithmetic.
//!
//! The crate is organized around a small trusted kernel and a collection of
//! translations and interpretations on top of it:
//!
//! - [`logic`]: terms, formulas, negation-normal form, the classical
//!   negation operator, atomic complements.
//! - [`kernel`]: checked natural-deduction proofs for minimal,
//!   intuitionistic and classical logic with arithmetic axiom schemas.
//! - [`dnt`]: the double-negation translations (Gödel-Gentzen, Kuroda,
//!   Krivine, M, awk), proof translation into minimal logic, and synthesis
//!   of kernel-checked equivalence proofs.
//! - [`prt`]: the calculus of primitive recursive functionals of finite
//!   type (types, typechecking, normalization, sum elimination).
//! - [`interp`]: realizability and Dialectica interpretations at the level
//!   of formulas.
//! - [`extraction`]: realizer and witness extraction from kernel proofs,
//!   including the two Π₂ witnessing pipelines.
//! - [`nci`]: Herbrand normal form and the no-counterexample
//!   interpretation.
//! - [`oracle`]: independent semantic oracles (finite classical models,
//!   a propositional Kripke decision procedure, brute-force witness
//!   search) used by the test batteries.

pub mod gen;
pub mod logic;
pub mod sexp;

pub mod prt;

pub mod oracle;

pub mod kernel;

pub mod dnt;

pub mod interp;

pub mod extraction;

pub mod nci;
