//! Brute-force quasi-equation checking and the positive-MV classifier.
//!
//! `holds` enumerates every assignment of carrier elements to the variables
//! of a quasi-equation. Assignment number `n` maps variable `x_i` to the
//! element with index `(n / |A|^i) mod |A|`, so `x0` varies fastest; the
//! first reported violation is the least assignment in this enumeration,
//! making counterexamples deterministic across runs and worker counts.

use crate::algebra::{Element, FiniteAlgebra};
use crate::axioms::{self, Axiom};
use crate::term::{Equation, Op, QuasiEquation, Term};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// Knobs for the assignment-enumeration engine.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    /// Refuse instances needing more assignments than this (per quasi-equation).
    pub assignment_budget: u64,
    /// Worker threads for a single `holds` scan. The reported violation is the
    /// least one regardless of the worker count.
    pub jobs: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            assignment_budget: 100_000_000,
            jobs: 1,
        }
    }
}

#[derive(Debug, Error)]
pub enum CheckError {
    #[error("budget error: instance too large ({needed} assignments exceed budget {budget})")]
    BudgetExceeded { needed: u128, budget: u64 },
}

/// A failed axiom instance: the assignment and the two conclusion values.
///
/// Re-evaluating the axiom's conclusion under `assignment` reproduces
/// `lhs_value ≠ rhs_value` with every premise satisfied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom_id: String,
    /// Element names, indexed by variable.
    pub assignment: Vec<String>,
    pub lhs_value: String,
    pub rhs_value: String,
}

/// Display names for variable indices: x, y, z below arity 4, x3, x4, … above.
pub fn var_display_name(i: usize, arity: usize) -> String {
    if arity <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{i}")
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom {} violated at ", self.axiom_id)?;
        let k = self.assignment.len();
        for (i, v) in self.assignment.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}={v}", var_display_name(i, k))?;
        }
        if self.assignment.is_empty() {
            write!(f, "the empty assignment")?;
        }
        write!(f, ": lhs={}, rhs={}", self.lhs_value, self.rhs_value)
    }
}

fn decode_assignment(n: usize, mut idx: u64, env: &mut [Element]) {
    for slot in env.iter_mut() {
        *slot = (idx % n as u64) as Element;
        idx /= n as u64;
    }
}

/// Postfix instruction form of a term; the scan evaluates each equation many
/// times, and a flat program avoids re-walking the boxed tree.
#[derive(Debug, Clone, Copy)]
enum Instr {
    PushZero,
    PushOne,
    PushVar(usize),
    Apply(Op),
}

fn compile_term(t: &Term, out: &mut Vec<Instr>) {
    match t {
        Term::Zero => out.push(Instr::PushZero),
        Term::One => out.push(Instr::PushOne),
        Term::Var(i) => out.push(Instr::PushVar(*i)),
        Term::App(op, l, r) => {
            compile_term(l, out);
            compile_term(r, out);
            out.push(Instr::Apply(*op));
        }
    }
}

struct CompiledEquation {
    lhs: Vec<Instr>,
    rhs: Vec<Instr>,
}

fn compile_equation(eq: &Equation) -> CompiledEquation {
    let mut lhs = Vec::new();
    compile_term(&eq.lhs, &mut lhs);
    let mut rhs = Vec::new();
    compile_term(&eq.rhs, &mut rhs);
    CompiledEquation { lhs, rhs }
}

fn run_program(a: &FiniteAlgebra, prog: &[Instr], env: &[Element], stack: &mut Vec<Element>) -> Element {
    stack.clear();
    for instr in prog {
        match instr {
            Instr::PushZero => stack.push(a.zero()),
            Instr::PushOne => stack.push(a.one()),
            Instr::PushVar(i) => stack.push(env[*i]),
            Instr::Apply(op) => {
                let r = stack.pop().expect("well-formed program");
                let l = stack.pop().expect("well-formed program");
                stack.push(match op {
                    Op::Oplus => a.oplus(l, r),
                    Op::Odot => a.odot(l, r),
                    Op::Join => a.join(l, r),
                    Op::Meet => a.meet(l, r),
                });
            }
        }
    }
    stack.pop().expect("program leaves one value")
}

/// Scan `[lo, hi)` for the least assignment that satisfies the premises and
/// falsifies the conclusion.
fn scan_range(
    a: &FiniteAlgebra,
    q: &QuasiEquation,
    k: usize,
    lo: u64,
    hi: u64,
) -> Option<(u64, Vec<Element>, Element, Element)> {
    let n = a.size();
    let premises: Vec<CompiledEquation> = q.premises.iter().map(compile_equation).collect();
    let conclusion = compile_equation(&q.conclusion);
    let mut env = vec![0usize; k];
    let mut stack = Vec::with_capacity(16);
    for idx in lo..hi {
        decode_assignment(n, idx, &mut env);
        let premises_hold = premises.iter().all(|p| {
            run_program(a, &p.lhs, &env, &mut stack) == run_program(a, &p.rhs, &env, &mut stack)
        });
        if !premises_hold {
            continue;
        }
        let l = run_program(a, &conclusion.lhs, &env, &mut stack);
        let r = run_program(a, &conclusion.rhs, &env, &mut stack);
        if l != r {
            return Some((idx, env.clone(), l, r));
        }
    }
    None
}

/// Check a quasi-equation over all assignments. Returns `None` when it holds,
/// or the first `Violation` (least assignment, `x0` fastest).
pub fn holds(
    a: &FiniteAlgebra,
    q: &QuasiEquation,
    axiom_id: &str,
    cfg: &CheckConfig,
) -> Result<Option<Violation>, CheckError> {
    let k = q.var_count();
    let n = a.size() as u128;
    let needed = n.pow(k as u32);
    if needed > cfg.assignment_budget as u128 {
        return Err(CheckError::BudgetExceeded {
            needed,
            budget: cfg.assignment_budget,
        });
    }
    let total = needed as u64;
    let jobs = cfg.jobs.max(1).min(total.max(1) as usize);

    let found = if jobs == 1 {
        scan_range(a, q, k, 0, total)
    } else {
        let chunk = total.div_ceil(jobs as u64);
        let mut firsts = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs as u64)
                .map(|w| {
                    let lo = w * chunk;
                    let hi = total.min(lo + chunk);
                    scope.spawn(move || scan_range(a, q, k, lo, hi))
                })
                .collect();
            handles
                .into_iter()
                .filter_map(|h| h.join().expect("scan worker panicked"))
                .collect::<Vec<_>>()
        });
        firsts.sort_by_key(|(idx, ..)| *idx);
        firsts.into_iter().next()
    };

    Ok(found.map(|(_, env, l, r)| Violation {
        axiom_id: axiom_id.to_string(),
        assignment: env.iter().map(|&e| a.element_name(e).to_string()).collect(),
        lhs_value: a.element_name(l).to_string(),
        rhs_value: a.element_name(r).to_string(),
    }))
}

/// Check every axiom in a catalogue, collecting the first violation of each
/// failing axiom.
pub fn check_axioms<'a>(
    a: &FiniteAlgebra,
    axioms: impl IntoIterator<Item = &'a Axiom>,
    cfg: &CheckConfig,
) -> Result<Vec<Violation>, CheckError> {
    let mut violations = Vec::new();
    for axiom in axioms {
        if let Some(v) = holds(a, &axiom.quasi, &axiom.id, cfg)? {
            violations.push(v);
        }
    }
    Ok(violations)
}

/// Check the MV-monoidal axioms E1–E7 (default engine configuration).
pub fn check_mvm(a: &FiniteAlgebra) -> Vec<Violation> {
    check_mvm_with(a, &CheckConfig::default()).expect("default budget covers E1-E7 instances")
}

/// Check E1–E7 under an explicit configuration.
pub fn check_mvm_with(a: &FiniteAlgebra, cfg: &CheckConfig) -> Result<Vec<Violation>, CheckError> {
    check_axioms(a, axioms::mvm_axioms(), cfg)
}

/// Hand-specialized cancellation check: a direct triple loop over the tables,
/// independent of the term engine. The loop nesting (`z` outermost, `x`
/// innermost) visits triples in the same order the engine enumerates
/// assignments, so both report the same first witness.
pub fn check_cancellation(a: &FiniteAlgebra) -> Option<Violation> {
    let n = a.size();
    for z in 0..n {
        for y in 0..n {
            for x in 0..n {
                if a.oplus(x, z) == a.oplus(y, z) && a.odot(x, z) == a.odot(y, z) && x != y {
                    return Some(Violation {
                        axiom_id: "cancellation".to_string(),
                        assignment: vec![
                            a.element_name(x).to_string(),
                            a.element_name(y).to_string(),
                            a.element_name(z).to_string(),
                        ],
                        lhs_value: a.element_name(x).to_string(),
                        rhs_value: a.element_name(y).to_string(),
                    });
                }
            }
        }
    }
    None
}

/// Classification outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Some E1–E7 instance fails.
    NotMVM,
    /// E1–E7 hold but cancellation fails: MV-monoidal, not positive MV.
    MVMOnly,
    /// E1–E7 and cancellation all hold.
    PositiveMV,
}

impl Verdict {
    /// Process exit code used by the CLI: 0, 2 or 3.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::PositiveMV => 0,
            Verdict::MVMOnly => 2,
            Verdict::NotMVM => 3,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NotMVM => "NotMVM",
            Verdict::MVMOnly => "MVMOnly",
            Verdict::PositiveMV => "PositiveMV",
        })
    }
}

/// Verdict plus the witnessing violations (empty iff `PositiveMV`).
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
}

/// Classify with the default engine configuration.
pub fn classify(a: &FiniteAlgebra) -> ClassificationReport {
    classify_with(a, &CheckConfig::default()).expect("default budget covers E1-E7 instances")
}

/// Run E1–E7, then (if clean) the hand-specialized cancellation loop.
pub fn classify_with(
    a: &FiniteAlgebra,
    cfg: &CheckConfig,
) -> Result<ClassificationReport, CheckError> {
    let violations = check_mvm_with(a, cfg)?;
    if !violations.is_empty() {
        return Ok(ClassificationReport {
            verdict: Verdict::NotMVM,
            violations,
        });
    }
    match check_cancellation(a) {
        Some(v) => Ok(ClassificationReport {
            verdict: Verdict::MVMOnly,
            violations: vec![v],
        }),
        None => Ok(ClassificationReport {
            verdict: Verdict::PositiveMV,
            violations: Vec::new(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::OpTable;
    use crate::constructions::{boolean2, chang_quotient_witness, luk_chain};
    use crate::term::QuasiEquation;

    /// Exhaustive hand check of E4 on the Boolean chain, independent of the
    /// engine: table lookups only.
    #[test]
    fn e4_holds_on_boolean_chain() {
        let a = boolean2();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    let lhs = a.odot(a.oplus(x, y), a.oplus(a.odot(x, y), z));
                    let rhs = a.oplus(a.odot(x, a.oplus(y, z)), a.odot(y, z));
                    assert_eq!(lhs, rhs, "E4 at ({x},{y},{z})");
                }
            }
        }
        let e4 = crate::axioms::mvm_axioms()
            .into_iter()
            .find(|ax| ax.id == "E4")
            .unwrap();
        let out = holds(&a, &e4.quasi, "E4", &CheckConfig::default()).unwrap();
        assert_eq!(out, None);
    }

    #[test]
    fn cancellation_fails_on_chang_witness_at_eps_0_eps() {
        let a = chang_quotient_witness();
        let c = crate::axioms::cancellation();
        let v = holds(&a, &c.quasi, &c.id, &CheckConfig::default())
            .unwrap()
            .expect("witness violates cancellation");
        assert_eq!(v.assignment, vec!["ε", "0", "ε"]);
        assert_eq!((v.lhs_value.as_str(), v.rhs_value.as_str()), ("ε", "0"));
        // The hand loop agrees exactly.
        assert_eq!(check_cancellation(&a), Some(v));
    }

    #[test]
    fn vacuous_premises_make_quasi_equations_hold() {
        let a = boolean2();
        let q = QuasiEquation::parse("0 = 1 => x = y").unwrap();
        assert_eq!(holds(&a, &q, "vacuous", &CheckConfig::default()).unwrap(), None);
    }

    #[test]
    fn budget_guard_refuses_large_instances() {
        let a = luk_chain(9);
        let q = QuasiEquation::parse("x = y").unwrap();
        let cfg = CheckConfig {
            assignment_budget: 99,
            jobs: 1,
        };
        let err = holds(&a, &q, "eq", &cfg).unwrap_err();
        assert!(err.to_string().starts_with("budget error:"), "{err}");
    }

    #[test]
    fn check_mvm_clean_on_chains_and_witness() {
        assert!(check_mvm(&luk_chain(5)).is_empty());
        assert!(check_mvm(&chang_quotient_witness()).is_empty());
    }

    #[test]
    fn broken_oplus_is_flagged_as_not_mvm() {
        // oplus replaced by the meet table: x ⊕ 0 = x fails at x = 1.
        let a = boolean2();
        let meet = OpTable::from_fn(2, |x, y| a.meet(x, y));
        let broken = FiniteAlgebra::new(
            vec!["0".into(), "1".into()],
            0,
            1,
            meet,
            OpTable::from_fn(2, |x, y| a.odot(x, y)),
            OpTable::from_fn(2, |x, y| a.join(x, y)),
            OpTable::from_fn(2, |x, y| a.meet(x, y)),
        )
        .unwrap();
        let violations = check_mvm(&broken);
        let unit = violations
            .iter()
            .find(|v| v.axiom_id == "E2.oplus-unit")
            .expect("identity violation reported");
        assert_eq!(unit.assignment, vec!["1"]);
        assert_eq!(classify(&broken).verdict, Verdict::NotMVM);
    }

    #[test]
    fn classify_verdicts() {
        assert_eq!(classify(&luk_chain(2)).verdict, Verdict::PositiveMV);
        let report = classify(&chang_quotient_witness());
        assert_eq!(report.verdict, Verdict::MVMOnly);
        assert_eq!(report.violations[0].assignment, vec!["ε", "0", "ε"]);
    }

    #[test]
    fn luk_chain_cancellation_is_clean() {
        assert_eq!(check_cancellation(&luk_chain(3)), None);
    }

    #[test]
    fn one_element_algebra_cancels() {
        let t = OpTable::from_fn(1, |_, _| 0);
        let a = FiniteAlgebra::new(vec!["*".into()], 0, 0, t.clone(), t.clone(), t.clone(), t)
            .unwrap();
        assert_eq!(check_cancellation(&a), None);
        assert_eq!(classify(&a).verdict, Verdict::PositiveMV);
    }

    #[test]
    fn parallel_scan_reports_least_witness() {
        let a = chang_quotient_witness();
        let c = crate::axioms::cancellation();
        for jobs in [1, 2, 3, 7] {
            let cfg = CheckConfig {
                jobs,
                ..CheckConfig::default()
            };
            let v = holds(&a, &c.quasi, &c.id, &cfg).unwrap().unwrap();
            assert_eq!(v.assignment, vec!["ε", "0", "ε"], "jobs={jobs}");
        }
    }
}
