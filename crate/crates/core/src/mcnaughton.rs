//! Exact semantics of terms over the standard algebra on [0,1]:
//! one-variable terms become piecewise-linear functions with rational
//! breakpoints and integer coefficients, evaluated and combined exactly;
//! terms in several variables are compared through grid fingerprints.

use crate::term::{Op, Term, TermError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use thiserror::Error;

/// Exact arbitrary-precision rational: canonical reduced form with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Error)]
pub enum McError {
    #[error("input error: variable x{0} used; exact piecewise-linear form covers one variable")]
    MultiVariable(usize),
    #[error("validation error: {0}")]
    InvalidFunction(String),
    #[error("budget error: {0}")]
    Budget(String),
    #[error("input error: {0}")]
    Term(#[from] TermError),
}

fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(n.into(), d.into())
}

/// One affine piece of a [`PLFunction`], with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub lo: Rational,
    pub hi: Rational,
    pub slope: BigInt,
    pub intercept: BigInt,
}

/// A continuous piecewise-linear function [0,1] → [0,1] with rational
/// breakpoints `0 = b₀ < … < b_k = 1` and integer slopes and intercepts.
/// Stored as breakpoints with their values, in canonical form (no interior
/// breakpoint where adjacent pieces share a slope), so structural equality
/// is function equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PLFunction {
    breakpoints: Vec<Rational>,
    values: Vec<Rational>,
}

impl PLFunction {
    pub fn constant_zero() -> Self {
        PLFunction {
            breakpoints: vec![Rational::zero(), Rational::one()],
            values: vec![Rational::zero(), Rational::zero()],
        }
    }

    pub fn constant_one() -> Self {
        PLFunction {
            breakpoints: vec![Rational::zero(), Rational::one()],
            values: vec![Rational::one(), Rational::one()],
        }
    }

    pub fn identity() -> Self {
        PLFunction {
            breakpoints: vec![Rational::zero(), Rational::one()],
            values: vec![Rational::zero(), Rational::one()],
        }
    }

    /// Build from `(x, f(x))` samples containing every breakpoint.
    /// Validates the invariants and drops collinear interior points.
    pub fn from_points(points: Vec<(Rational, Rational)>) -> Result<Self, McError> {
        if points.len() < 2 {
            return Err(McError::InvalidFunction("need at least the two endpoints".into()));
        }
        let mut bp = Vec::with_capacity(points.len());
        let mut vals = Vec::with_capacity(points.len());
        for (x, v) in points {
            bp.push(x);
            vals.push(v);
        }
        if bp.first() != Some(&Rational::zero()) || bp.last() != Some(&Rational::one()) {
            return Err(McError::InvalidFunction("domain must span [0,1]".into()));
        }
        if bp.windows(2).any(|w| w[0] >= w[1]) {
            return Err(McError::InvalidFunction("breakpoints must strictly increase".into()));
        }
        if vals
            .iter()
            .any(|v| v.is_negative() || *v > Rational::one())
        {
            return Err(McError::InvalidFunction("values must lie in [0,1]".into()));
        }
        // Drop interior points collinear with the surviving left neighbour
        // and the next raw point.
        let mut cbp: Vec<Rational> = vec![bp[0].clone()];
        let mut cvals: Vec<Rational> = vec![vals[0].clone()];
        for i in 1..bp.len() {
            if i < bp.len() - 1 {
                let anchor = cbp.len() - 1;
                let left = (&vals[i] - &cvals[anchor]) * (&bp[i + 1] - &bp[i]);
                let right = (&vals[i + 1] - &vals[i]) * (&bp[i] - &cbp[anchor]);
                if left == right {
                    continue;
                }
            }
            cbp.push(bp[i].clone());
            cvals.push(vals[i].clone());
        }
        let f = PLFunction {
            breakpoints: cbp,
            values: cvals,
        };
        f.check_integer_coefficients()?;
        Ok(f)
    }

    fn check_integer_coefficients(&self) -> Result<(), McError> {
        for i in 0..self.breakpoints.len() - 1 {
            let slope = (&self.values[i + 1] - &self.values[i])
                / (&self.breakpoints[i + 1] - &self.breakpoints[i]);
            if !slope.is_integer() {
                return Err(McError::InvalidFunction(format!(
                    "slope {slope} on piece {i} is not an integer"
                )));
            }
            let intercept = &self.values[i] - &slope * &self.breakpoints[i];
            if !intercept.is_integer() {
                return Err(McError::InvalidFunction(format!(
                    "intercept {intercept} on piece {i} is not an integer"
                )));
            }
        }
        Ok(())
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn piece_count(&self) -> usize {
        self.breakpoints.len() - 1
    }

    /// The affine pieces with their exact integer coefficients.
    pub fn pieces(&self) -> Vec<Piece> {
        (0..self.piece_count())
            .map(|i| {
                let slope = (&self.values[i + 1] - &self.values[i])
                    / (&self.breakpoints[i + 1] - &self.breakpoints[i]);
                let intercept = &self.values[i] - &slope * &self.breakpoints[i];
                Piece {
                    lo: self.breakpoints[i].clone(),
                    hi: self.breakpoints[i + 1].clone(),
                    slope: slope.to_integer(),
                    intercept: intercept.to_integer(),
                }
            })
            .collect()
    }

    /// Exact evaluation at `x ∈ [0,1]`.
    pub fn eval(&self, x: &Rational) -> Rational {
        debug_assert!(!x.is_negative() && *x <= Rational::one());
        let i = self
            .breakpoints
            .partition_point(|b| b <= x)
            .clamp(1, self.breakpoints.len() - 1)
            - 1;
        let slope = (&self.values[i + 1] - &self.values[i])
            / (&self.breakpoints[i + 1] - &self.breakpoints[i]);
        &self.values[i] + slope * (x - &self.breakpoints[i])
    }

    /// A continuous one-variable PL function is order-preserving iff no piece
    /// has negative slope, i.e. the breakpoint values never decrease.
    pub fn is_nondecreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] <= w[1])
    }
}

impl PartialOrd for PLFunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical enumeration order: breakpoint count first, then the
/// (breakpoint, slope, intercept) sequence lexicographically.
impl Ord for PLFunction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.breakpoints
            .len()
            .cmp(&other.breakpoints.len())
            .then_with(|| {
                for (a, b) in self.pieces().into_iter().zip(other.pieces()) {
                    let step = a
                        .lo
                        .cmp(&b.lo)
                        .then_with(|| a.slope.cmp(&b.slope))
                        .then_with(|| a.intercept.cmp(&b.intercept));
                    if step != Ordering::Equal {
                        return step;
                    }
                }
                Ordering::Equal
            })
    }
}

/// Apply a connective pointwise, introducing exact breakpoints at the
/// crossings the truncation or comparison creates.
pub fn pl_binary(op: Op, f: &PLFunction, g: &PLFunction) -> PLFunction {
    // Merged breakpoint grid.
    let mut grid: Vec<Rational> = f
        .breakpoints
        .iter()
        .chain(g.breakpoints.iter())
        .cloned()
        .collect();
    grid.sort();
    grid.dedup();

    // On each cell both f and g are affine; insert the interior point where
    // the relevant affine comparison changes sign.
    let mut cuts: Vec<Rational> = Vec::new();
    for w in grid.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        let (dlo, dhi) = match op {
            // min(f+g, 1) and max(f+g−1, 0) both break where f+g = 1.
            Op::Oplus | Op::Odot => (
                f.eval(lo) + g.eval(lo) - Rational::one(),
                f.eval(hi) + g.eval(hi) - Rational::one(),
            ),
            // max(f,g) and min(f,g) break where f = g.
            Op::Join | Op::Meet => (f.eval(lo) - g.eval(lo), f.eval(hi) - g.eval(hi)),
        };
        if (dlo.is_negative() && dhi.is_positive()) || (dlo.is_positive() && dhi.is_negative()) {
            let cut = lo + (hi - lo) * (-&dlo) / (&dhi - &dlo);
            cuts.push(cut);
        }
    }
    grid.extend(cuts);
    grid.sort();
    grid.dedup();

    let one = Rational::one();
    let points = grid
        .into_iter()
        .map(|x| {
            let (fx, gx) = (f.eval(&x), g.eval(&x));
            let v = match op {
                Op::Oplus => (fx + gx).min(one.clone()),
                Op::Odot => (fx + gx - &one).max(Rational::zero()),
                Op::Join => fx.max(gx),
                Op::Meet => fx.min(gx),
            };
            (x, v)
        })
        .collect();
    PLFunction::from_points(points).expect("pointwise combination preserves the invariants")
}

/// The exact PL function denoted by a term in the single variable `x0`.
pub fn pl_of_term(t: &Term) -> Result<PLFunction, McError> {
    match t {
        Term::Zero => Ok(PLFunction::constant_zero()),
        Term::One => Ok(PLFunction::constant_one()),
        Term::Var(0) => Ok(PLFunction::identity()),
        Term::Var(i) => Err(McError::MultiVariable(*i)),
        Term::App(op, l, r) => Ok(pl_binary(*op, &pl_of_term(l)?, &pl_of_term(r)?)),
    }
}

/// Evaluate a term at a rational point of [0,1]^k under the standard
/// semantics: `⊕ = min{x+y, 1}`, `⊙ = max{x+y−1, 0}`, `∨ = max`, `∧ = min`.
pub fn eval_term_unit(t: &Term, point: &[Rational]) -> Result<Rational, TermError> {
    match t {
        Term::Zero => Ok(Rational::zero()),
        Term::One => Ok(Rational::one()),
        Term::Var(i) => point.get(*i).cloned().ok_or(TermError::UnboundVariable(*i)),
        Term::App(op, l, r) => {
            let lv = eval_term_unit(l, point)?;
            let rv = eval_term_unit(r, point)?;
            Ok(match op {
                Op::Oplus => (lv + rv).min(Rational::one()),
                Op::Odot => (lv + rv - Rational::one()).max(Rational::zero()),
                Op::Join => lv.max(rv),
                Op::Meet => lv.min(rv),
            })
        }
    }
}

/// Default cap on `(D+1)^n` grid entries.
pub const DEFAULT_GRID_BUDGET: u64 = 1_000_000;

/// Evaluations of a term at every grid point `(k₀/D, …, k_{n−1}/D)`,
/// ordered with the last variable fastest (`x0` most significant).
///
/// Fingerprints are a semi-decision for `n ≥ 2`: unequal fingerprints prove
/// the functions differ; equal fingerprints only prove agreement on the grid.
/// For `n = 1` and `D` a common multiple of all breakpoint denominators the
/// fingerprint determines the function.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GridFingerprint {
    nvars: usize,
    denominator: u64,
    values: Vec<Rational>,
}

impl GridFingerprint {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Value at the grid point with the given per-variable indices.
    pub fn value_at(&self, indices: &[usize]) -> &Rational {
        assert_eq!(indices.len(), self.nvars);
        let side = self.denominator as usize + 1;
        let mut idx = 0;
        for &i in indices {
            assert!(i < side);
            idx = idx * side + i;
        }
        &self.values[idx]
    }
}

pub fn grid_fingerprint(t: &Term, nvars: usize, denominator: u64) -> Result<GridFingerprint, McError> {
    grid_fingerprint_bounded(t, nvars, denominator, DEFAULT_GRID_BUDGET)
}

pub fn grid_fingerprint_bounded(
    t: &Term,
    nvars: usize,
    denominator: u64,
    budget: u64,
) -> Result<GridFingerprint, McError> {
    if nvars < 1 || denominator < 1 {
        return Err(McError::InvalidFunction(
            "grid fingerprints need nvars ≥ 1 and D ≥ 1".into(),
        ));
    }
    if t.var_count() > nvars {
        return Err(McError::MultiVariable(t.var_count() - 1));
    }
    let side = denominator as u128 + 1;
    let total = side.pow(nvars as u32);
    if total > budget as u128 {
        return Err(McError::Budget(format!(
            "grid has {total} points, budget is {budget}"
        )));
    }
    let side = side as usize;
    let mut values = Vec::with_capacity(total as usize);
    let mut point = vec![Rational::zero(); nvars];
    for flat in 0..total as usize {
        let mut rem = flat;
        // Last variable fastest.
        for v in (0..nvars).rev() {
            point[v] = rat((rem % side) as i64, denominator as i64);
            rem /= side;
        }
        values.push(eval_term_unit(t, &point)?);
    }
    Ok(GridFingerprint {
        nvars,
        denominator,
        values,
    })
}

/// Least common multiple of all breakpoint denominators: a denominator at
/// which grid fingerprints of one-variable functions are injective on the
/// given set.
pub fn safe_denominator<'a>(funcs: impl IntoIterator<Item = &'a PLFunction>) -> BigInt {
    let mut l = BigInt::one();
    for f in funcs {
        for b in f.breakpoints() {
            l = l.lcm(b.denom());
        }
    }
    l
}

/// Number of syntactic terms over `{x0, 0, 1}` with exactly `d` operation
/// nodes, for `d = 0, …, depth`.
pub fn term_counts(depth: usize) -> Vec<u128> {
    let mut c: Vec<u128> = vec![3];
    for d in 1..=depth {
        let mut total = 0u128;
        for i in 0..d {
            total += c[i] * c[d - 1 - i];
        }
        c.push(4 * total);
    }
    c
}

#[derive(Debug, Clone)]
pub struct FreeConfig {
    /// Largest admissible enumeration depth.
    pub max_depth: usize,
    /// Refuse when the syntactic term count at some level exceeds this.
    pub term_budget: u128,
}

impl Default for FreeConfig {
    fn default() -> Self {
        FreeConfig {
            max_depth: 5,
            term_budget: 100_000_000,
        }
    }
}

/// Per-depth enumeration statistics. `terms_generated` counts syntactic
/// terms with exactly that many operation nodes; `distinct_functions` counts
/// pairwise-distinct functions reachable at that depth or less.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthRow {
    pub depth: usize,
    pub terms_generated: u128,
    pub distinct_functions: u64,
}

/// Result of [`enumerate_free`]: the distinct functions by first-discovery
/// depth, plus per-depth counts.
#[derive(Debug, Clone)]
pub struct FreeEnumeration {
    rows: Vec<DepthRow>,
    levels: Vec<Vec<PLFunction>>,
}

impl FreeEnumeration {
    pub fn rows(&self) -> &[DepthRow] {
        &self.rows
    }

    /// Functions first discovered at the given depth, in discovery order.
    pub fn level(&self, depth: usize) -> &[PLFunction] {
        &self.levels[depth]
    }

    pub fn functions(&self) -> impl Iterator<Item = &PLFunction> {
        self.levels.iter().flatten()
    }

    pub fn total_distinct(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }
}

/// Enumerate all one-variable functions denoted by terms with at most
/// `depth` operation nodes, deduplicated by exact PL equality.
///
/// Works on representatives: a function reachable with `d` operations splits
/// as `op` applied to functions reachable with `i` and `j` operations,
/// `i + j = d − 1`, so combining the distinct functions of earlier levels
/// finds every function of the current level without enumerating raw terms.
pub fn enumerate_free(depth: usize) -> Result<FreeEnumeration, McError> {
    enumerate_free_with(depth, &FreeConfig::default())
}

pub fn enumerate_free_with(depth: usize, cfg: &FreeConfig) -> Result<FreeEnumeration, McError> {
    if depth > cfg.max_depth {
        return Err(McError::Budget(format!(
            "depth {depth} exceeds the configured bound {}",
            cfg.max_depth
        )));
    }
    let counts = term_counts(depth);
    if let Some(&worst) = counts.iter().max() {
        if worst > cfg.term_budget {
            return Err(McError::Budget(format!(
                "term count {worst} exceeds the budget {}",
                cfg.term_budget
            )));
        }
    }

    let base = vec![
        PLFunction::constant_zero(),
        PLFunction::constant_one(),
        PLFunction::identity(),
    ];
    let mut seen: BTreeSet<PLFunction> = base.iter().cloned().collect();
    let mut levels: Vec<Vec<PLFunction>> = vec![base];
    let mut rows = vec![DepthRow {
        depth: 0,
        terms_generated: counts[0],
        distinct_functions: seen.len() as u64,
    }];

    for d in 1..=depth {
        let mut level = Vec::new();
        for i in 0..d {
            let j = d - 1 - i;
            for fi in 0..levels[i].len() {
                for gj in 0..levels[j].len() {
                    for op in Op::ALL {
                        let h = pl_binary(op, &levels[i][fi], &levels[j][gj]);
                        if seen.insert(h.clone()) {
                            level.push(h);
                        }
                    }
                }
            }
        }
        levels.push(level);
        rows.push(DepthRow {
            depth: d,
            terms_generated: counts[d],
            distinct_functions: seen.len() as u64,
        });
    }
    Ok(FreeEnumeration { rows, levels })
}
