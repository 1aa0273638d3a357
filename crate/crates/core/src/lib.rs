//! Finite-algebra toolkit for the positive fragment of Łukasiewicz logic.
//!
//! The crate decides whether a finite algebra over the signature
//! `{⊕, ⊙, ∨, ∧, 0, 1}` is a positive MV-algebra: it checks the MV-monoidal
//! equations E1–E7 and the cancellation quasi-equation
//! `x⊕z = y⊕z  &  x⊙z = y⊙z  ⟹  x = y`, which together axiomatize the
//! quasi-variety of positive MV-algebras.
//!
//! Supporting machinery:
//!
//! * [`algebra`] — finite operation-table algebras, a JSON file format, and a
//!   canonical fingerprint;
//! * [`term`] — the term language over the signature, with a small parser;
//! * [`axioms`] — the named axiom catalogue (E1–E7 expanded, cancellation);
//! * [`checker`] — the brute-force quasi-equation engine and the classifier;
//! * [`lmonoid`] — windowed unital commutative distributive ℓ-monoids and the
//!   unit-interval construction Γ;
//! * [`constructions`] — Łukasiewicz chains, the three-element Chang-quotient
//!   witness, products, subalgebras, congruences, quotients, and a
//!   backtracking embedding search;
//! * [`mcnaughton`] — exact piecewise-linear semantics of one-variable terms
//!   on [0,1] and desk-scale free-algebra enumeration;
//! * [`sample`] — random generators used by randomized test sweeps.

pub mod algebra;
pub mod axioms;
pub mod checker;
pub mod constructions;
pub mod lmonoid;
pub mod mcnaughton;
pub mod sample;
pub mod term;

pub use algebra::{AlgebraError, Element, FiniteAlgebra, OpTable};
pub use checker::{
    check_cancellation, check_mvm, classify, classify_with, holds, CheckConfig, CheckError,
    ClassificationReport, Verdict, Violation,
};
pub use term::{Equation, Op, QuasiEquation, Term, TermError};
