//! Shared helpers for the integration suites: an independent grid-vector
//! enumeration of one-variable term functions (no piecewise-linear machinery
//! involved), raw term enumeration, and violation re-evaluation.
//!
//! Each test binary uses a subset of these.
#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};
use posmv::axioms::full_catalogue;
use posmv::{FiniteAlgebra, Op, Term, Violation};
use std::collections::BTreeSet;

/// Map a violation's element names back to carrier indices.
pub fn assignment_indices(a: &FiniteAlgebra, v: &Violation) -> Vec<usize> {
    v.assignment
        .iter()
        .map(|name| a.element_index(name).expect("witness names live in the carrier"))
        .collect()
}

/// Re-evaluate the named catalogue axiom under the stored assignment: every
/// premise must hold and the conclusion must fail with exactly the stored
/// values. Uses the tree-walking evaluator, which is a separate code path
/// from the engine's compiled scan.
pub fn violation_reproduces(a: &FiniteAlgebra, v: &Violation) -> bool {
    let axiom = full_catalogue()
        .iter()
        .find(|ax| ax.id == v.axiom_id)
        .expect("violation refers to a catalogue axiom");
    let env = assignment_indices(a, v);
    for p in &axiom.quasi.premises {
        let l = a.eval_term(&p.lhs, &env).unwrap();
        let r = a.eval_term(&p.rhs, &env).unwrap();
        if l != r {
            return false;
        }
    }
    let l = a.eval_term(&axiom.quasi.conclusion.lhs, &env).unwrap();
    let r = a.eval_term(&axiom.quasi.conclusion.rhs, &env).unwrap();
    l != r
        && a.element_name(l) == v.lhs_value
        && a.element_name(r) == v.rhs_value
}

/// All one-variable terms with exactly `d` operation nodes, for d = 0..=depth.
pub fn terms_by_depth(depth: usize) -> Vec<Vec<Term>> {
    let mut levels: Vec<Vec<Term>> = vec![vec![Term::Zero, Term::One, Term::Var(0)]];
    for d in 1..=depth {
        let mut level = Vec::new();
        for i in 0..d {
            let j = d - 1 - i;
            for l in &levels[i] {
                for r in &levels[j] {
                    for op in Op::ALL {
                        level.push(Term::app(op, l.clone(), r.clone()));
                    }
                }
            }
        }
        levels.push(level);
    }
    levels
}

type GridVec = Vec<BigRational>;

fn grid_combine(op: Op, f: &GridVec, g: &GridVec) -> GridVec {
    let one = BigRational::one();
    f.iter()
        .zip(g)
        .map(|(a, b)| match op {
            Op::Oplus => (a + b).min(one.clone()),
            Op::Odot => (a + b - &one).max(BigRational::zero()),
            Op::Join => a.clone().max(b.clone()),
            Op::Meet => a.clone().min(b.clone()),
        })
        .collect()
}

/// Independent fingerprint-based enumeration: distinct value vectors on the
/// grid {0, 1/D, …, 1} reachable by terms with at most d operations, for
/// d = 0..=depth. Pointwise combination of representative vectors is exact
/// because grid evaluation commutes with the term operations.
pub fn grid_distinct_counts(depth: usize, denominator: u64) -> Vec<u64> {
    let points: Vec<BigRational> = (0..=denominator)
        .map(|k| BigRational::new(k.into(), denominator.into()))
        .collect();
    let zero: GridVec = points.iter().map(|_| BigRational::zero()).collect();
    let one: GridVec = points.iter().map(|_| BigRational::one()).collect();
    let base = vec![zero, one, points];

    let mut seen: BTreeSet<GridVec> = base.iter().cloned().collect();
    let mut levels: Vec<Vec<GridVec>> = vec![base];
    let mut counts = vec![seen.len() as u64];
    for d in 1..=depth {
        let mut level = Vec::new();
        for i in 0..d {
            let j = d - 1 - i;
            for fi in 0..levels[i].len() {
                for gj in 0..levels[j].len() {
                    for op in Op::ALL {
                        let h = grid_combine(op, &levels[i][fi], &levels[j][gj]);
                        if seen.insert(h.clone()) {
                            level.push(h);
                        }
                    }
                }
            }
        }
        levels.push(level);
        counts.push(seen.len() as u64);
    }
    counts
}
