//! Unital commutative distributive ℓ-monoids over bounded carriers, their
//! M-axiom checks, the unit-interval construction Γ, and the three-way
//! cancellativity equivalence.
//!
//! The structures of interest are infinite; a *windowed* carrier keeps the
//! grid rationals `k/d` with `|k/d| ≤ N` and treats `+` as partial (defined
//! when the sum stays in the window). Quantified checks skip assignments
//! whose sums leave the window, so a windowed pass is evidence, not proof,
//! for the infinite structure — except for the Γ route, which is exact:
//! once the window covers `[−1, 2]` the unit-interval algebra and its
//! operations are fully determined.

use crate::algebra::{Element, FiniteAlgebra, OpTable};
use crate::checker::{check_cancellation, Violation};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MonoidError {
    #[error("validation error: denominator and radius must both be at least 1")]
    InvalidWindow,
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("validation error: {0}")]
    Invalid(String),
    #[error("validation error: {0} + {1} is undefined but needed on the unit interval")]
    UndefinedSum(String, String),
}

/// Carrier access shared by the grid window and table-backed monoids.
trait Carrier {
    fn len(&self) -> usize;
    /// Partial addition on carrier positions.
    fn plus(&self, x: usize, y: usize) -> Option<usize>;
    fn sup(&self, x: usize, y: usize) -> usize;
    fn inf(&self, x: usize, y: usize) -> usize;
    fn zero(&self) -> usize;
    fn one(&self) -> usize;
    fn neg_one(&self) -> usize;
    fn label(&self, x: usize) -> String;
}

/// The grid rationals `{k/d : −N ≤ k/d ≤ N}` with truncation-free `+`,
/// `∨ = max`, `∧ = min` and constants `0`, `1`, `−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowedLMonoid {
    denominator: u32,
    radius: u32,
}

impl WindowedLMonoid {
    pub fn new(denominator: u32, radius: u32) -> Result<Self, MonoidError> {
        if denominator < 1 || radius < 1 {
            return Err(MonoidError::InvalidWindow);
        }
        Ok(WindowedLMonoid {
            denominator,
            radius,
        })
    }

    pub fn denominator(&self) -> u32 {
        self.denominator
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Largest numerator in the window: `N·d`.
    pub fn span(&self) -> i64 {
        self.denominator as i64 * self.radius as i64
    }

    /// The archimedean bound certified by construction: every carrier element
    /// is squeezed between `n` copies of `−1` and `n` copies of `1` for
    /// `n = N·d`.
    pub fn archimedean_bound(&self) -> u64 {
        self.span() as u64
    }

    /// Carrier numerators in ascending order (the implicit denominator is `d`).
    pub fn numerators(&self) -> impl Iterator<Item = i64> {
        -self.span()..=self.span()
    }

    pub fn rational_name(&self, numerator: i64) -> String {
        Ratio::new(numerator, self.denominator as i64).to_string()
    }

    /// Windowed addition on numerators.
    pub fn add(&self, x: i64, y: i64) -> Option<i64> {
        let s = x + y;
        (s.abs() <= self.span()).then_some(s)
    }

    /// Check M1–M3, U1 and U2 over all in-window instances, skipping
    /// assignments whose sums leave the window. U3 holds by construction
    /// (see [`WindowedLMonoid::archimedean_bound`]) and contributes no check.
    pub fn check_m_axioms(&self) -> Vec<Violation> {
        check_m_axioms_impl(&WindowCarrier(*self))
    }

    /// The unit-interval algebra `Γ`: carrier `{k/d : 0 ≤ k ≤ d}` with
    /// `x ⊕ y = (x+y) ∧ 1` and `x ⊙ y = (x+y−1) ∨ 0`.
    ///
    /// Sums of unit-interval elements live in `[0, 2]`, so the evaluation
    /// internally widens the window to radius `max(N, 2)`; the truncated
    /// results always land back in `[0, 1]`.
    pub fn gamma(&self) -> FiniteAlgebra {
        let d = self.denominator as usize;
        let elements = (0..=d)
            .map(|k| self.rational_name(k as i64))
            .collect();
        let oplus = OpTable::from_fn(d + 1, |x, y| (x + y).min(d));
        let odot = OpTable::from_fn(d + 1, |x, y| (x + y).saturating_sub(d));
        let join = OpTable::from_fn(d + 1, |x, y| x.max(y));
        let meet = OpTable::from_fn(d + 1, |x, y| x.min(y));
        FiniteAlgebra::new(elements, 0, d, oplus, odot, join, meet)
            .expect("unit-interval tables are valid")
    }

    /// Evaluate the three cancellativity conditions and assert the
    /// equivalences that hold exactly on windows: the unit-interval condition
    /// coincides with the Γ condition, and general windowed cancellativity
    /// implies both.
    pub fn check_cancellativity_equivalence(&self) -> CancellativityReport {
        let span = self.span();
        let d = self.denominator as i64;

        let mut cond_general = true;
        let mut general_witness = None;
        'general: for z in -span..=span {
            for y in -span..=span {
                for x in -span..=span {
                    let (Some(xz), Some(yz)) = (self.add(x, z), self.add(y, z)) else {
                        continue;
                    };
                    if xz == yz && x != y {
                        cond_general = false;
                        general_witness = Some([
                            self.rational_name(x),
                            self.rational_name(y),
                            self.rational_name(z),
                        ]);
                        break 'general;
                    }
                }
            }
        }

        // Unit-interval sums live in [0, 2]; evaluate them in the ambient
        // grid so the condition is exact even for radius 1.
        let mut cond_unit_interval = true;
        let mut unit_witness = None;
        'unit: for z in 0..=d {
            for y in 0..=d {
                for x in 0..=d {
                    if x + z == y + z && x != y {
                        cond_unit_interval = false;
                        unit_witness = Some([
                            self.rational_name(x),
                            self.rational_name(y),
                            self.rational_name(z),
                        ]);
                        break 'unit;
                    }
                }
            }
        }

        let gamma_witness = check_cancellation(&self.gamma());
        let cond_gamma = gamma_witness.is_none();

        assert_eq!(
            cond_unit_interval, cond_gamma,
            "unit-interval and Γ cancellativity must coincide on windows"
        );
        assert!(
            !cond_general || cond_unit_interval,
            "general cancellativity must imply the unit-interval condition"
        );

        CancellativityReport {
            windowed: true,
            cond_general,
            cond_unit_interval,
            cond_gamma,
            general_witness,
            unit_witness,
            gamma_witness,
        }
    }
}

/// The three equivalent cancellativity conditions, evaluated independently.
///
/// `cond_general` quantifies over in-window triples only and is therefore
/// *windowed evidence* (strictly weaker than cancellativity of the infinite
/// structure); the unit-interval and Γ conditions are exact.
#[derive(Debug, Clone, Serialize)]
pub struct CancellativityReport {
    pub windowed: bool,
    pub cond_general: bool,
    pub cond_unit_interval: bool,
    pub cond_gamma: bool,
    pub general_witness: Option<[String; 3]>,
    pub unit_witness: Option<[String; 3]>,
    pub gamma_witness: Option<Violation>,
}

struct WindowCarrier(WindowedLMonoid);

impl WindowCarrier {
    fn numerator(&self, pos: usize) -> i64 {
        pos as i64 - self.0.span()
    }

    fn position(&self, numerator: i64) -> usize {
        (numerator + self.0.span()) as usize
    }
}

impl Carrier for WindowCarrier {
    fn len(&self) -> usize {
        (2 * self.0.span() + 1) as usize
    }

    fn plus(&self, x: usize, y: usize) -> Option<usize> {
        self.0
            .add(self.numerator(x), self.numerator(y))
            .map(|s| self.position(s))
    }

    fn sup(&self, x: usize, y: usize) -> usize {
        x.max(y)
    }

    fn inf(&self, x: usize, y: usize) -> usize {
        x.min(y)
    }

    fn zero(&self) -> usize {
        self.position(0)
    }

    fn one(&self) -> usize {
        self.position(self.0.denominator as i64)
    }

    fn neg_one(&self) -> usize {
        self.position(-(self.0.denominator as i64))
    }

    fn label(&self, x: usize) -> String {
        self.0.rational_name(self.numerator(x))
    }
}

/// A user-supplied monoid with explicit (possibly partial) tables: the same
/// file format as algebras, with a `plus` table (null = undefined) and a
/// `neg_one` constant replacing `oplus`/`odot`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableLMonoid {
    elements: Vec<String>,
    zero: Element,
    one: Element,
    neg_one: Element,
    plus: Vec<Option<Element>>,
    join: OpTable,
    meet: OpTable,
}

#[derive(Deserialize)]
struct MonoidFile {
    elements: Vec<String>,
    zero: String,
    one: String,
    neg_one: String,
    plus: Vec<Vec<Option<String>>>,
    join: Vec<Vec<String>>,
    meet: Vec<Vec<String>>,
}

impl TableLMonoid {
    pub fn from_json(source: &str) -> Result<Self, MonoidError> {
        let file: MonoidFile = serde_json::from_str(source)?;
        let n = file.elements.len();
        if n == 0 {
            return Err(MonoidError::Invalid("carrier is empty".into()));
        }
        for (i, name) in file.elements.iter().enumerate() {
            if file.elements[..i].contains(name) {
                return Err(MonoidError::Invalid(format!("duplicate element '{name}'")));
            }
        }
        let resolve = |name: &str, place: &str| -> Result<Element, MonoidError> {
            file.elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| MonoidError::Invalid(format!("unknown element '{name}' in {place}")))
        };
        let zero = resolve(&file.zero, "zero")?;
        let one = resolve(&file.one, "one")?;
        let neg_one = resolve(&file.neg_one, "neg_one")?;
        if file.plus.len() != n || file.plus.iter().any(|r| r.len() != n) {
            return Err(MonoidError::Invalid(format!(
                "plus table must be {n}x{n}"
            )));
        }
        let mut plus = Vec::with_capacity(n * n);
        for (x, row) in file.plus.iter().enumerate() {
            for (y, cell) in row.iter().enumerate() {
                plus.push(match cell {
                    Some(name) => Some(resolve(
                        name,
                        &format!("plus({},{})", file.elements[x], file.elements[y]),
                    )?),
                    None => None,
                });
            }
        }
        let total = |label: &str, rows: &Vec<Vec<String>>| -> Result<OpTable, MonoidError> {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(MonoidError::Invalid(format!("{label} table must be {n}x{n}")));
            }
            let mut cells = Vec::with_capacity(n * n);
            for (x, row) in rows.iter().enumerate() {
                for (y, cell) in row.iter().enumerate() {
                    cells.push(resolve(
                        cell,
                        &format!("{label}({},{})", file.elements[x], file.elements[y]),
                    )?);
                }
            }
            Ok(OpTable::from_fn(n, |x, y| cells[x * n + y]))
        };
        let join = total("join", &file.join)?;
        let meet = total("meet", &file.meet)?;
        Ok(TableLMonoid {
            elements: file.elements,
            zero,
            one,
            neg_one,
            plus,
            join,
            meet,
        })
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn element_name(&self, x: Element) -> &str {
        &self.elements[x]
    }

    pub fn add(&self, x: Element, y: Element) -> Option<Element> {
        self.plus[x * self.size() + y]
    }

    fn leq(&self, x: Element, y: Element) -> bool {
        self.join.get(x, y) == y
    }

    pub fn check_m_axioms(&self) -> Vec<Violation> {
        check_m_axioms_impl(&TableCarrier(self))
    }

    /// Best-effort archimedean certificate: the least `n` such that every
    /// element lies between the reachable sums of `n` copies of `−1` and of
    /// `1`. `None` when the partial table cannot certify the bound; callers
    /// decide whether to warn or reject.
    pub fn archimedean_certificate(&self) -> Option<u64> {
        let chain = |step: Element| -> Vec<Element> {
            let mut acc = vec![step];
            while let Some(&last) = acc.last() {
                match self.add(last, step) {
                    Some(next) if !acc.contains(&next) => acc.push(next),
                    _ => break,
                }
            }
            acc
        };
        let ups = chain(self.one);
        let downs = chain(self.neg_one);
        let mut needed = 1u64;
        for x in 0..self.size() {
            let up = ups.iter().position(|&u| self.leq(x, u));
            let down = downs.iter().position(|&d| self.leq(d, x));
            match (up, down) {
                (Some(u), Some(d)) => needed = needed.max(u as u64 + 1).max(d as u64 + 1),
                _ => return None,
            }
        }
        Some(needed)
    }

    /// The unit-interval algebra, when every needed sum is defined and stays
    /// where the truncation formulas put it.
    pub fn gamma(&self) -> Result<FiniteAlgebra, MonoidError> {
        let unit: Vec<Element> = (0..self.size())
            .filter(|&x| self.leq(self.zero, x) && self.leq(x, self.one))
            .collect();
        let pos = |x: Element| -> Result<usize, MonoidError> {
            unit.iter()
                .position(|&u| u == x)
                .ok_or_else(|| {
                    MonoidError::Invalid(format!(
                        "operation leaves the unit interval at {}",
                        self.element_name(x)
                    ))
                })
        };
        let sum = |x: Element, y: Element| -> Result<Element, MonoidError> {
            self.add(x, y).ok_or_else(|| {
                MonoidError::UndefinedSum(
                    self.element_name(x).to_string(),
                    self.element_name(y).to_string(),
                )
            })
        };
        let m = unit.len();
        let mut oplus = Vec::with_capacity(m * m);
        let mut odot = Vec::with_capacity(m * m);
        for &x in &unit {
            for &y in &unit {
                let s = sum(x, y)?;
                oplus.push(pos(self.meet.get(s, self.one))?);
                let shifted = sum(s, self.neg_one)?;
                odot.push(pos(self.join.get(shifted, self.zero))?);
            }
        }
        let elements = unit
            .iter()
            .map(|&x| self.element_name(x).to_string())
            .collect();
        let join = OpTable::from_fn(m, |i, j| {
            unit.iter()
                .position(|&u| u == self.join.get(unit[i], unit[j]))
                .expect("join of unit elements stays in the interval")
        });
        let meet = OpTable::from_fn(m, |i, j| {
            unit.iter()
                .position(|&u| u == self.meet.get(unit[i], unit[j]))
                .expect("meet of unit elements stays in the interval")
        });
        let algebra = FiniteAlgebra::new(
            elements,
            pos(self.zero)?,
            pos(self.one)?,
            OpTable::from_fn(m, |i, j| oplus[i * m + j]),
            OpTable::from_fn(m, |i, j| odot[i * m + j]),
            join,
            meet,
        )
        .map_err(|e| MonoidError::Invalid(e.to_string()))?;
        Ok(algebra)
    }
}

struct TableCarrier<'a>(&'a TableLMonoid);

impl Carrier for TableCarrier<'_> {
    fn len(&self) -> usize {
        self.0.size()
    }

    fn plus(&self, x: usize, y: usize) -> Option<usize> {
        self.0.add(x, y)
    }

    fn sup(&self, x: usize, y: usize) -> usize {
        self.0.join.get(x, y)
    }

    fn inf(&self, x: usize, y: usize) -> usize {
        self.0.meet.get(x, y)
    }

    fn zero(&self) -> usize {
        self.0.zero
    }

    fn one(&self) -> usize {
        self.0.one
    }

    fn neg_one(&self) -> usize {
        self.0.neg_one
    }

    fn label(&self, x: usize) -> String {
        self.0.elements[x].clone()
    }
}

fn violation<C: Carrier>(c: &C, id: &str, env: &[usize], lhs: usize, rhs: usize) -> Violation {
    Violation {
        axiom_id: id.to_string(),
        assignment: env.iter().map(|&e| c.label(e)).collect(),
        lhs_value: c.label(lhs),
        rhs_value: c.label(rhs),
    }
}

/// Check M1 (distributive lattice), M2 (commutative monoid), M3 (distribution
/// of `+` over `∨` and `∧` on both sides), U1 and U2. Equations touching `+`
/// are checked only on assignments where every sum is defined; the first
/// violation per axiom is reported.
fn check_m_axioms_impl<C: Carrier>(c: &C) -> Vec<Violation> {
    let n = c.len();
    let mut out = Vec::new();

    // Equation tables: (id, arity, lhs, rhs) with partial evaluation.
    type Eval<C> = Box<dyn Fn(&C, &[usize]) -> Option<usize>>;
    let pair = |id: &'static str, k: usize, lhs: Eval<C>, rhs: Eval<C>| (id, k, lhs, rhs);
    #[rustfmt::skip]
    let equations: Vec<(&'static str, usize, Eval<C>, Eval<C>)> = vec![
        pair("M1.join-comm", 2,
            Box::new(|c, e| Some(c.sup(e[0], e[1]))),
            Box::new(|c, e| Some(c.sup(e[1], e[0])))),
        pair("M1.join-assoc", 3,
            Box::new(|c, e| Some(c.sup(e[0], c.sup(e[1], e[2])))),
            Box::new(|c, e| Some(c.sup(c.sup(e[0], e[1]), e[2])))),
        pair("M1.join-idem", 1,
            Box::new(|c, e| Some(c.sup(e[0], e[0]))),
            Box::new(|_, e| Some(e[0]))),
        pair("M1.meet-comm", 2,
            Box::new(|c, e| Some(c.inf(e[0], e[1]))),
            Box::new(|c, e| Some(c.inf(e[1], e[0])))),
        pair("M1.meet-assoc", 3,
            Box::new(|c, e| Some(c.inf(e[0], c.inf(e[1], e[2])))),
            Box::new(|c, e| Some(c.inf(c.inf(e[0], e[1]), e[2])))),
        pair("M1.meet-idem", 1,
            Box::new(|c, e| Some(c.inf(e[0], e[0]))),
            Box::new(|_, e| Some(e[0]))),
        pair("M1.absorb-join", 2,
            Box::new(|c, e| Some(c.sup(e[0], c.inf(e[0], e[1])))),
            Box::new(|_, e| Some(e[0]))),
        pair("M1.absorb-meet", 2,
            Box::new(|c, e| Some(c.inf(e[0], c.sup(e[0], e[1])))),
            Box::new(|_, e| Some(e[0]))),
        pair("M1.distrib-meet", 3,
            Box::new(|c, e| Some(c.inf(e[0], c.sup(e[1], e[2])))),
            Box::new(|c, e| Some(c.sup(c.inf(e[0], e[1]), c.inf(e[0], e[2]))))),
        pair("M1.distrib-join", 3,
            Box::new(|c, e| Some(c.sup(e[0], c.inf(e[1], e[2])))),
            Box::new(|c, e| Some(c.inf(c.sup(e[0], e[1]), c.sup(e[0], e[2]))))),
        pair("M2.plus-comm", 2,
            Box::new(|c, e| c.plus(e[0], e[1])),
            Box::new(|c, e| c.plus(e[1], e[0]))),
        pair("M2.plus-assoc", 3,
            Box::new(|c, e| c.plus(e[0], e[1]).and_then(|s| c.plus(s, e[2]))),
            Box::new(|c, e| c.plus(e[1], e[2]).and_then(|s| c.plus(e[0], s)))),
        pair("M2.plus-unit", 1,
            Box::new(|c, e| c.plus(e[0], c.zero())),
            Box::new(|_, e| Some(e[0]))),
        pair("M3.plus-join-left", 3,
            Box::new(|c, e| c.plus(e[0], c.sup(e[1], e[2]))),
            Box::new(|c, e| Some(c.sup(c.plus(e[0], e[1])?, c.plus(e[0], e[2])?)))),
        pair("M3.plus-join-right", 3,
            Box::new(|c, e| c.plus(c.sup(e[1], e[2]), e[0])),
            Box::new(|c, e| Some(c.sup(c.plus(e[1], e[0])?, c.plus(e[2], e[0])?)))),
        pair("M3.plus-meet-left", 3,
            Box::new(|c, e| c.plus(e[0], c.inf(e[1], e[2]))),
            Box::new(|c, e| Some(c.inf(c.plus(e[0], e[1])?, c.plus(e[0], e[2])?)))),
        pair("M3.plus-meet-right", 3,
            Box::new(|c, e| c.plus(c.inf(e[1], e[2]), e[0])),
            Box::new(|c, e| Some(c.inf(c.plus(e[1], e[0])?, c.plus(e[2], e[0])?)))),
    ];

    for (id, k, lhs, rhs) in &equations {
        'axiom: for idx in 0..n.pow(*k as u32) {
            let mut env = vec![0usize; *k];
            let mut rem = idx;
            for slot in env.iter_mut() {
                *slot = rem % n;
                rem /= n;
            }
            if let (Some(l), Some(r)) = (lhs(c, &env), rhs(c, &env)) {
                if l != r {
                    out.push(violation(c, id, &env, l, r));
                    break 'axiom;
                }
            }
        }
    }

    // U1: −1 + 1 = 0 is a single ground instance and must be defined.
    match c.plus(c.neg_one(), c.one()) {
        Some(s) if s == c.zero() => {}
        Some(s) => out.push(violation(c, "U1", &[], s, c.zero())),
        None => out.push(Violation {
            axiom_id: "U1".to_string(),
            assignment: Vec::new(),
            lhs_value: "undefined".to_string(),
            rhs_value: c.label(c.zero()),
        }),
    }
    // U2: −1 ≤ 0 ≤ 1 in the derived order.
    if c.sup(c.neg_one(), c.zero()) != c.zero() {
        out.push(violation(c, "U2", &[], c.neg_one(), c.zero()));
    } else if c.sup(c.zero(), c.one()) != c.one() {
        out.push(violation(c, "U2", &[], c.zero(), c.one()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::check_mvm;
    use crate::constructions::luk_chain;

    #[test]
    fn integer_window_satisfies_m_axioms() {
        let m = WindowedLMonoid::new(1, 3).unwrap();
        assert!(m.check_m_axioms().is_empty());
        assert_eq!(m.archimedean_bound(), 3);
    }

    #[test]
    fn half_integer_window_satisfies_m_axioms() {
        let m = WindowedLMonoid::new(2, 2).unwrap();
        assert!(m.check_m_axioms().is_empty());
    }

    #[test]
    fn invalid_window_is_rejected() {
        assert!(WindowedLMonoid::new(0, 2).is_err());
        assert!(WindowedLMonoid::new(2, 0).is_err());
    }

    #[test]
    fn gamma_of_integers_is_the_boolean_chain() {
        let m = WindowedLMonoid::new(1, 2).unwrap();
        let g = m.gamma();
        assert_eq!(g.size(), 2);
        assert_eq!(g.fingerprint(), crate::constructions::boolean2().fingerprint());
    }

    #[test]
    fn gamma_of_halves_matches_luk_chain_2() {
        let m = WindowedLMonoid::new(2, 2).unwrap();
        let g = m.gamma();
        let h = g.element_index("1/2").unwrap();
        assert_eq!(g.oplus(h, h), g.one());
        assert_eq!(g.odot(h, h), g.zero());
        assert_eq!(g.fingerprint(), luk_chain(2).fingerprint());
    }

    #[test]
    fn gamma_counts_grid_points() {
        for n in 1..=12 {
            let m = WindowedLMonoid::new(n, 2).unwrap();
            assert_eq!(m.gamma().size(), n as usize + 1);
        }
    }

    #[test]
    fn gamma_images_are_mv_monoidal() {
        for d in 1..=6 {
            for r in 1..=3 {
                let m = WindowedLMonoid::new(d, r).unwrap();
                assert!(check_mvm(&m.gamma()).is_empty(), "d={d} N={r}");
            }
        }
    }

    #[test]
    fn cancellativity_conditions_agree_on_windows() {
        let m = WindowedLMonoid::new(1, 3).unwrap();
        let report = m.check_cancellativity_equivalence();
        assert!(report.cond_general && report.cond_unit_interval && report.cond_gamma);

        let m = WindowedLMonoid::new(4, 2).unwrap();
        let report = m.check_cancellativity_equivalence();
        assert!(report.cond_general && report.cond_unit_interval && report.cond_gamma);
        // Γ cancellation agrees with the standard chain of the same size.
        assert_eq!(
            check_cancellation(&m.gamma()),
            check_cancellation(&luk_chain(4))
        );
    }

    #[test]
    fn window_elements_are_separated_by_unit_truncations() {
        // Two distinct window elements differ in ((x − n) ∨ 0) ∧ 1 for some
        // integer |n| ≤ N.
        let m = WindowedLMonoid::new(3, 2).unwrap();
        let d = m.denominator() as i64;
        let trunc = |x: i64, n: i64| (x - n * d).clamp(0, d);
        for x in m.numerators() {
            for y in m.numerators() {
                if x == y {
                    continue;
                }
                let separated = (-(m.radius() as i64)..=m.radius() as i64)
                    .any(|n| trunc(x, n) != trunc(y, n));
                assert!(separated, "{x} and {y} not separated");
            }
        }
    }

    fn broken_monoid_json() -> String {
        // Integers −1..1 with 1+1 redefined to 1 (and otherwise saturating).
        r#"{"elements":["-1","0","1"],"zero":"0","one":"1","neg_one":"-1",
            "plus":[[null,"-1","0"],["-1","0","1"],["0","1","1"]],
            "join":[["-1","0","1"],["0","0","1"],["1","1","1"]],
            "meet":[["-1","-1","-1"],["-1","0","0"],["-1","0","1"]]}"#
            .to_string()
    }

    #[test]
    fn corrupted_plus_table_violates_m2() {
        let m = TableLMonoid::from_json(&broken_monoid_json()).unwrap();
        let violations = m.check_m_axioms();
        assert!(
            violations.iter().any(|v| v.axiom_id.starts_with("M2.")),
            "expected an M2 violation, got {violations:?}"
        );
    }

    #[test]
    fn table_monoid_gamma_and_certificate() {
        // The integer window −2..2 as a table: wide enough for the sums the
        // unit-interval operations need.
        let src = r#"{"elements":["-2","-1","0","1","2"],"zero":"0","one":"1","neg_one":"-1",
            "plus":[[null,null,"-2","-1","0"],
                    [null,"-2","-1","0","1"],
                    ["-2","-1","0","1","2"],
                    ["-1","0","1","2",null],
                    ["0","1","2",null,null]],
            "join":[["-2","-1","0","1","2"],
                    ["-1","-1","0","1","2"],
                    ["0","0","0","1","2"],
                    ["1","1","1","1","2"],
                    ["2","2","2","2","2"]],
            "meet":[["-2","-2","-2","-2","-2"],
                    ["-2","-1","-1","-1","-1"],
                    ["-2","-1","0","0","0"],
                    ["-2","-1","0","1","1"],
                    ["-2","-1","0","1","2"]]}"#;
        let m = TableLMonoid::from_json(src).unwrap();
        assert!(m.check_m_axioms().is_empty());
        assert_eq!(m.archimedean_certificate(), Some(2));
        let g = m.gamma().unwrap();
        assert_eq!(g.size(), 2);
        assert!(check_mvm(&g).is_empty());
    }

    #[test]
    fn radius_one_table_cannot_express_gamma() {
        // The honest integer window −1..1: ⊕ needs 1+1, which leaves the
        // window, so the unit-interval algebra is not determined.
        let src = r#"{"elements":["-1","0","1"],"zero":"0","one":"1","neg_one":"-1",
            "plus":[[null,"-1","0"],["-1","0","1"],["0","1",null]],
            "join":[["-1","0","1"],["0","0","1"],["1","1","1"]],
            "meet":[["-1","-1","-1"],["-1","0","0"],["-1","0","1"]]}"#;
        let m = TableLMonoid::from_json(src).unwrap();
        assert!(m.check_m_axioms().is_empty());
        assert!(matches!(m.gamma(), Err(MonoidError::UndefinedSum(_, _))));
    }

    #[test]
    fn undefined_needed_sum_is_reported() {
        // 1 + (−1) undefined makes ⊙ uncomputable on the unit interval.
        let src = r#"{"elements":["-1","0","1"],"zero":"0","one":"1","neg_one":"-1",
            "plus":[[null,"-1","0"],["-1","0","1"],["0",null,null]],
            "join":[["-1","0","1"],["0","0","1"],["1","1","1"]],
            "meet":[["-1","-1","-1"],["-1","0","0"],["-1","0","1"]]}"#;
        let m = TableLMonoid::from_json(src).unwrap();
        assert!(matches!(m.gamma(), Err(MonoidError::UndefinedSum(_, _))));
    }
}
