//! Cross-module property tests: evaluator laws, order structure, witness
//! soundness, engine agreement, and quasi-variety closure.

mod support;

use num_rational::BigRational;
use posmv::axioms::cancellation;
use posmv::checker::{check_cancellation, check_mvm, classify, holds, CheckConfig, Verdict};
use posmv::constructions::{
    boolean2, chang_quotient_witness, congruences, find_embedding, luk_chain, mv_chain,
    mv_product, positive_reduct, product, quotient, subalgebra_generated, EmbeddingSearch,
};
use posmv::lmonoid::WindowedLMonoid;
use posmv::mcnaughton::{eval_term_unit, pl_of_term};
use posmv::sample::{random_positive_mv, random_total_algebra};
use posmv::{FiniteAlgebra, Op, Term};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn term_strategy(max_vars: usize) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        Just(Term::One),
        (0..max_vars).prop_map(Term::Var),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        (
            prop_oneof![
                Just(Op::Oplus),
                Just(Op::Odot),
                Just(Op::Join),
                Just(Op::Meet)
            ],
            inner.clone(),
            inner,
        )
            .prop_map(|(op, l, r)| Term::app(op, l, r))
    })
}

proptest! {
    /// eval is compositional: evaluating an application equals applying the
    /// table to the evaluated arguments.
    #[test]
    fn eval_term_is_compositional(
        op in prop_oneof![Just(Op::Oplus), Just(Op::Odot), Just(Op::Join), Just(Op::Meet)],
        l in term_strategy(3),
        r in term_strategy(3),
        env in proptest::collection::vec(0..4usize, 3),
    ) {
        let a = luk_chain(3);
        let t = Term::app(op, l.clone(), r.clone());
        let whole = a.eval_term(&t, &env).unwrap();
        let (lv, rv) = (a.eval_term(&l, &env).unwrap(), a.eval_term(&r, &env).unwrap());
        let expect = match op {
            Op::Oplus => a.oplus(lv, rv),
            Op::Odot => a.odot(lv, rv),
            Op::Join => a.join(lv, rv),
            Op::Meet => a.meet(lv, rv),
        };
        prop_assert_eq!(whole, expect);
    }

    /// The exact PL form of a one-variable term agrees with direct rational
    /// evaluation everywhere on a grid.
    #[test]
    fn pl_form_matches_rational_semantics(t in term_strategy(1), k in 0i64..=60) {
        let f = pl_of_term(&t).unwrap();
        let x = BigRational::new(k.into(), 60.into());
        prop_assert_eq!(f.eval(&x), eval_term_unit(&t, std::slice::from_ref(&x)).unwrap());
    }
}

fn order_is_partial(a: &FiniteAlgebra) {
    let n = a.size();
    for x in 0..n {
        assert!(a.leq(x, x), "reflexivity at {x}");
        for y in 0..n {
            if a.leq(x, y) && a.leq(y, x) {
                assert_eq!(x, y, "antisymmetry");
            }
            for z in 0..n {
                if a.leq(x, y) && a.leq(y, z) {
                    assert!(a.leq(x, z), "transitivity at ({x},{y},{z})");
                }
            }
        }
    }
}

#[test]
fn derived_order_is_a_partial_order_on_lattice_algebras() {
    order_is_partial(&boolean2());
    order_is_partial(&luk_chain(4));
    order_is_partial(&chang_quotient_witness());
    order_is_partial(&product(&luk_chain(2), &luk_chain(2)).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..20 {
        order_is_partial(&random_positive_mv(&mut rng, 6));
    }
}

#[test]
fn reported_violations_reproduce_under_reevaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut reproduced = 0;
    for round in 0..60 {
        let size = 1 + round % 4;
        let a = random_total_algebra(&mut rng, size);
        for v in check_mvm(&a) {
            assert!(support::violation_reproduces(&a, &v), "stale witness {v}");
            reproduced += 1;
        }
        if let Some(v) = check_cancellation(&a) {
            let env = support::assignment_indices(&a, &v);
            let (x, y, z) = (env[0], env[1], env[2]);
            assert_eq!(a.oplus(x, z), a.oplus(y, z));
            assert_eq!(a.odot(x, z), a.odot(y, z));
            assert_ne!(x, y);
        }
    }
    assert!(reproduced > 50, "sweep produced too few violations to be meaningful");
}

/// The generic engine on the cancellation quasi-equation and the
/// hand-specialized triple loop agree on verdict and first witness.
#[test]
fn engine_and_hand_loop_agree_on_cancellation() {
    let cfg = CheckConfig::default();
    let c = cancellation();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for round in 0..120 {
        let size = 1 + round % 5;
        let a = random_total_algebra(&mut rng, size);
        let engine = holds(&a, &c.quasi, &c.id, &cfg).unwrap();
        let hand = check_cancellation(&a);
        assert_eq!(engine, hand, "disagreement on {}", a.fingerprint());
    }
}

#[test]
fn positive_mv_is_closed_under_square_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..25 {
        let a = random_positive_mv(&mut rng, 4);
        assert_eq!(classify(&a).verdict, Verdict::PositiveMV);
        let sq = product(&a, &a).unwrap();
        assert_eq!(classify(&sq).verdict, Verdict::PositiveMV);
    }
}

#[test]
fn positive_mv_is_closed_under_generated_subalgebras() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for _ in 0..20 {
        let a = random_positive_mv(&mut rng, 5);
        for seed_mask in 0..(1u32 << a.size()) {
            let seeds: Vec<usize> = (0..a.size()).filter(|i| seed_mask & (1 << i) != 0).collect();
            let sub = subalgebra_generated(&a, &seeds);
            assert_eq!(classify(&sub).verdict, Verdict::PositiveMV);
        }
    }
}

/// MV-monoidal algebras form a variety: quotients of clean algebras are clean.
/// Positive MV-algebras do not: the Chang-quotient witness certifies it.
#[test]
fn quotients_keep_e_axioms_but_can_break_cancellation() {
    for a in [boolean2(), luk_chain(2), luk_chain(3), chang_quotient_witness()] {
        assert!(check_mvm(&a).is_empty());
        for c in congruences(&a).unwrap() {
            let q = quotient(&a, &c).unwrap();
            assert!(check_mvm(&q).is_empty(), "quotient broke an E axiom");
        }
    }
    assert_eq!(classify(&chang_quotient_witness()).verdict, Verdict::MVMOnly);
}

#[test]
fn gamma_images_satisfy_the_e_axioms_across_windows() {
    for d in 1..=6 {
        for n in 1..=3 {
            let m = WindowedLMonoid::new(d, n).unwrap();
            assert!(m.check_m_axioms().is_empty(), "window d={d} N={n}");
            assert!(check_mvm(&m.gamma()).is_empty(), "Γ image d={d} N={n}");
            let report = m.check_cancellativity_equivalence();
            assert_eq!(report.cond_unit_interval, report.cond_gamma);
            assert!(report.cond_general);
        }
    }
}

/// Whenever the embedding oracle places `a` inside the positive reduct of an
/// MV-algebra, the classifier must call `a` positive. The converse direction
/// is not asserted: finite targets can be too small.
#[test]
fn embedding_oracle_agrees_one_directionally_with_classifier() {
    let mut targets = Vec::new();
    for n in 1..=5 {
        targets.push(positive_reduct(&mv_chain(n)));
    }
    targets.push(positive_reduct(
        &mv_product(&mv_chain(1), &mv_chain(2)).unwrap(),
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut found = 0;
    for _ in 0..30 {
        let a = random_positive_mv(&mut rng, 4);
        for b in &targets {
            if let EmbeddingSearch::Found(e) = find_embedding(&a, b) {
                assert!(e.is_valid(&a, b));
                assert_eq!(classify(&a).verdict, Verdict::PositiveMV);
                found += 1;
            }
        }
    }
    assert!(found > 0, "oracle never fired; sweep is vacuous");
}
