//! Generators and combinators: Łukasiewicz chains, the three-element
//! Chang-quotient witness, finite MV-algebras and their positive reducts,
//! finite products, generated subalgebras, congruence enumeration, quotients,
//! and a backtracking embedding search.

use crate::algebra::{AlgebraError, Element, FiniteAlgebra, OpTable};
use num_rational::Ratio;
use thiserror::Error;

/// Guard on `congruences`: Bell(8) = 4140 partitions is the practical limit.
pub const MAX_CONGRUENCE_CARRIER: usize = 8;
/// Default guard on product carrier size.
pub const DEFAULT_PRODUCT_LIMIT: usize = 4096;
/// Default guard on embedding-search nodes.
pub const DEFAULT_EMBED_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("budget error: product carrier would have {size} elements (limit {limit})")]
    ProductTooLarge { size: usize, limit: usize },
    #[error("budget error: congruence enumeration limited to carriers of size {max}, got {got}")]
    CarrierTooLarge { max: usize, got: usize },
    #[error("input error: partition is not compatible with the operations")]
    IncompatiblePartition,
    #[error("input error: {0}")]
    Algebra(#[from] AlgebraError),
    #[error("input error: invalid MV-algebra: {0}")]
    InvalidMv(String),
}

fn ratio_name(num: i64, den: i64) -> String {
    Ratio::new(num, den).to_string()
}

/// The (n+1)-element Łukasiewicz chain `{0, 1/n, …, 1}` with truncated
/// addition `x ⊕ y = min{x+y, 1}` and `x ⊙ y = max{x+y−1, 0}`.
pub fn luk_chain(n: u32) -> FiniteAlgebra {
    assert!(n >= 1, "luk_chain requires n >= 1");
    let n = n as usize;
    let elements: Vec<String> = (0..=n).map(|k| ratio_name(k as i64, n as i64)).collect();
    let oplus = OpTable::from_fn(n + 1, |x, y| (x + y).min(n));
    let odot = OpTable::from_fn(n + 1, |x, y| (x + y).saturating_sub(n));
    let join = OpTable::from_fn(n + 1, |x, y| x.max(y));
    let meet = OpTable::from_fn(n + 1, |x, y| x.min(y));
    FiniteAlgebra::new(elements, 0, n, oplus, odot, join, meet).expect("chain tables are valid")
}

/// The two-element Boolean chain `{0, 1}` with its classical tables, written
/// out explicitly (⊕ = ∨ and ⊙ = ∧ on this carrier).
pub fn boolean2() -> FiniteAlgebra {
    let or = OpTable::from_fn(2, |x, y| x | y);
    let and = OpTable::from_fn(2, |x, y| x & y);
    FiniteAlgebra::new(
        vec!["0".into(), "1".into()],
        0,
        1,
        or.clone(),
        and.clone(),
        or,
        and,
    )
    .expect("boolean tables are valid")
}

/// The three-element algebra `{0, ε, 1}` with `ε ⊕ ε = ε` and `ε ⊙ ε = 0`:
/// the quotient of the positive subreduct of the Chang algebra that collapses
/// all nonzero infinitesimals. It satisfies E1–E7 but not cancellation.
pub fn chang_quotient_witness() -> FiniteAlgebra {
    const ZERO: Element = 0;
    const EPS: Element = 1;
    const ONE: Element = 2;
    let oplus = OpTable::from_fn(3, |x, y| match (x, y) {
        (ZERO, v) | (v, ZERO) => v,
        (ONE, _) | (_, ONE) => ONE,
        _ => EPS,
    });
    let odot = OpTable::from_fn(3, |x, y| match (x, y) {
        (ONE, v) | (v, ONE) => v,
        (ZERO, _) | (_, ZERO) => ZERO,
        _ => ZERO, // ε ⊙ ε = 0
    });
    let join = OpTable::from_fn(3, |x, y| x.max(y));
    let meet = OpTable::from_fn(3, |x, y| x.min(y));
    FiniteAlgebra::new(
        vec!["0".into(), "ε".into(), "1".into()],
        ZERO,
        ONE,
        oplus,
        odot,
        join,
        meet,
    )
    .expect("witness tables are valid")
}

/// A finite MV-algebra: a positive-signature algebra together with a
/// negation table satisfying the MV axioms, with the derived tables
/// `1 = ¬0`, `x ⊙ y = ¬(¬x ⊕ ¬y)`, `x ∨ y = (x ⊙ ¬y) ⊕ y`,
/// `x ∧ y = ¬(¬x ∨ ¬y)` stored coherently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMVAlgebra {
    algebra: FiniteAlgebra,
    neg: Vec<Element>,
}

impl FiniteMVAlgebra {
    /// Validate the MV axioms and derived-table coherence.
    pub fn new(algebra: FiniteAlgebra, neg: Vec<Element>) -> Result<Self, ConstructError> {
        let n = algebra.size();
        let fail = |msg: String| Err(ConstructError::InvalidMv(msg));
        if neg.len() != n || neg.iter().any(|&x| x >= n) {
            return fail("negation table does not cover the carrier".into());
        }
        let name = |x: Element| algebra.element_name(x);
        // <A, ⊕, 0> is a commutative monoid.
        for x in 0..n {
            if algebra.oplus(x, algebra.zero()) != x {
                return fail(format!("x ⊕ 0 = x fails at x={}", name(x)));
            }
            for y in 0..n {
                if algebra.oplus(x, y) != algebra.oplus(y, x) {
                    return fail(format!("⊕ not commutative at ({},{})", name(x), name(y)));
                }
                for z in 0..n {
                    if algebra.oplus(algebra.oplus(x, y), z) != algebra.oplus(x, algebra.oplus(y, z))
                    {
                        return fail(format!(
                            "⊕ not associative at ({},{},{})",
                            name(x),
                            name(y),
                            name(z)
                        ));
                    }
                }
            }
        }
        let top = neg[algebra.zero()];
        if algebra.one() != top {
            return fail("stored 1 differs from ¬0".into());
        }
        for x in 0..n {
            if neg[neg[x]] != x {
                return fail(format!("¬¬x = x fails at x={}", name(x)));
            }
            if algebra.oplus(x, top) != top {
                return fail(format!("x ⊕ ¬0 = ¬0 fails at x={}", name(x)));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let lhs = algebra.oplus(neg[algebra.oplus(neg[x], y)], y);
                let rhs = algebra.oplus(neg[algebra.oplus(neg[y], x)], x);
                if lhs != rhs {
                    return fail(format!(
                        "¬(¬x ⊕ y) ⊕ y = ¬(¬y ⊕ x) ⊕ x fails at ({},{})",
                        name(x),
                        name(y)
                    ));
                }
                let odot = neg[algebra.oplus(neg[x], neg[y])];
                if algebra.odot(x, y) != odot {
                    return fail(format!("stored ⊙ differs from ¬(¬x ⊕ ¬y) at ({},{})", name(x), name(y)));
                }
                let join = algebra.oplus(algebra.odot(x, neg[y]), y);
                if algebra.join(x, y) != join {
                    return fail(format!("stored ∨ differs from (x ⊙ ¬y) ⊕ y at ({},{})", name(x), name(y)));
                }
                let meet = neg[algebra.join(neg[x], neg[y])];
                if algebra.meet(x, y) != meet {
                    return fail(format!("stored ∧ differs from ¬(¬x ∨ ¬y) at ({},{})", name(x), name(y)));
                }
            }
        }
        Ok(FiniteMVAlgebra { algebra, neg })
    }

    /// Build from the ⊕ table and negation alone, deriving ⊙, ∨, ∧ and 1.
    pub fn from_oplus_neg(
        elements: Vec<String>,
        zero: Element,
        oplus: OpTable,
        neg: Vec<Element>,
    ) -> Result<Self, ConstructError> {
        let n = elements.len();
        if neg.len() != n || neg.iter().any(|&x| x >= n) || zero >= n {
            return Err(ConstructError::InvalidMv(
                "negation table does not cover the carrier".into(),
            ));
        }
        let one = neg[zero];
        let odot = OpTable::from_fn(n, |x, y| neg[oplus.get(neg[x], neg[y])]);
        let join = OpTable::from_fn(n, |x, y| oplus.get(odot.get(x, neg[y]), y));
        let meet = OpTable::from_fn(n, |x, y| neg[join.get(neg[x], neg[y])]);
        let algebra = FiniteAlgebra::new(elements, zero, one, oplus, odot, join, meet)?;
        FiniteMVAlgebra::new(algebra, neg)
    }

    pub fn neg(&self, x: Element) -> Element {
        self.neg[x]
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn size(&self) -> usize {
        self.algebra.size()
    }
}

/// The Łukasiewicz chain with negation `¬(k/n) = (n−k)/n`.
pub fn mv_chain(n: u32) -> FiniteMVAlgebra {
    let algebra = luk_chain(n);
    let size = algebra.size();
    let neg = (0..size).map(|k| size - 1 - k).collect();
    FiniteMVAlgebra::new(algebra, neg).expect("chain negation is valid")
}

/// Componentwise product of MV-algebras.
pub fn mv_product(a: &FiniteMVAlgebra, b: &FiniteMVAlgebra) -> Result<FiniteMVAlgebra, ConstructError> {
    let prod = product(a.algebra(), b.algebra())?;
    let nb = b.size();
    let neg = (0..prod.size())
        .map(|p| {
            let (x, y) = (p / nb, p % nb);
            a.neg(x) * nb + b.neg(y)
        })
        .collect();
    FiniteMVAlgebra::new(prod, neg)
}

/// Forget the negation; the result is a positive MV-algebra by construction.
pub fn positive_reduct(m: &FiniteMVAlgebra) -> FiniteAlgebra {
    m.algebra().clone()
}

/// Componentwise product on the cartesian carrier, elements named `(a,b)`.
pub fn product(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<FiniteAlgebra, ConstructError> {
    product_bounded(a, b, DEFAULT_PRODUCT_LIMIT)
}

pub fn product_bounded(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    limit: usize,
) -> Result<FiniteAlgebra, ConstructError> {
    let (na, nb) = (a.size(), b.size());
    let size = na * nb;
    if size > limit {
        return Err(ConstructError::ProductTooLarge { size, limit });
    }
    let elements = (0..na)
        .flat_map(|x| {
            (0..nb).map(move |y| (x, y))
        })
        .map(|(x, y)| format!("({},{})", a.element_name(x), b.element_name(y)))
        .collect();
    let pair = |p: Element| (p / nb, p % nb);
    let table = |fa: fn(&FiniteAlgebra, Element, Element) -> Element| {
        OpTable::from_fn(size, |p, q| {
            let (px, py) = pair(p);
            let (qx, qy) = pair(q);
            fa(a, px, qx) * nb + fa(b, py, qy)
        })
    };
    let algebra = FiniteAlgebra::new(
        elements,
        a.zero() * nb + b.zero(),
        a.one() * nb + b.one(),
        table(FiniteAlgebra::oplus),
        table(FiniteAlgebra::odot),
        table(FiniteAlgebra::join),
        table(FiniteAlgebra::meet),
    )?;
    Ok(algebra)
}

/// Least subalgebra containing `seed ∪ {0, 1}`, with tables restricted to the
/// closed carrier. Element names (and their relative order) come from the
/// parent, so the carrier itself records the inclusion map.
pub fn subalgebra_generated(a: &FiniteAlgebra, seed: &[Element]) -> FiniteAlgebra {
    let n = a.size();
    let mut member = vec![false; n];
    member[a.zero()] = true;
    member[a.one()] = true;
    for &s in seed {
        member[s] = true;
    }
    loop {
        let current: Vec<Element> = (0..n).filter(|&x| member[x]).collect();
        let mut grew = false;
        for &x in &current {
            for &y in &current {
                for val in [a.oplus(x, y), a.odot(x, y), a.join(x, y), a.meet(x, y)] {
                    if !member[val] {
                        member[val] = true;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    let carrier: Vec<Element> = (0..n).filter(|&x| member[x]).collect();
    restrict(a, &carrier)
}

/// Restrict `a` to a carrier already known to be closed.
fn restrict(a: &FiniteAlgebra, carrier: &[Element]) -> FiniteAlgebra {
    let index_of = |x: Element| {
        carrier
            .iter()
            .position(|&c| c == x)
            .expect("carrier is closed under the operations")
    };
    let m = carrier.len();
    let elements = carrier
        .iter()
        .map(|&x| a.element_name(x).to_string())
        .collect();
    let table = |f: fn(&FiniteAlgebra, Element, Element) -> Element| {
        OpTable::from_fn(m, |i, j| index_of(f(a, carrier[i], carrier[j])))
    };
    FiniteAlgebra::new(
        elements,
        index_of(a.zero()),
        index_of(a.one()),
        table(FiniteAlgebra::oplus),
        table(FiniteAlgebra::odot),
        table(FiniteAlgebra::join),
        table(FiniteAlgebra::meet),
    )
    .expect("restriction of a valid algebra is valid")
}

/// A partition of the carrier compatible with all four binary operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    /// Class index per element, in restricted-growth form: `class[0] = 0` and
    /// every class index is at most one more than all earlier ones.
    class: Vec<usize>,
    blocks: usize,
}

impl Congruence {
    /// Build from a class map (normalized to restricted-growth form).
    pub fn from_classes(class_of: &[usize]) -> Self {
        let width = class_of.iter().copied().max().map_or(0, |m| m + 1);
        let mut relabel: Vec<Option<usize>> = vec![None; width];
        let mut class = Vec::with_capacity(class_of.len());
        let mut blocks = 0;
        for &c in class_of {
            let label = *relabel[c].get_or_insert_with(|| {
                let l = blocks;
                blocks += 1;
                l
            });
            class.push(label);
        }
        Congruence { class, blocks }
    }

    pub fn class_of(&self, x: Element) -> usize {
        self.class[x]
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    pub fn carrier_size(&self) -> usize {
        self.class.len()
    }

    /// Blocks as element lists, ordered by least member.
    pub fn blocks(&self) -> Vec<Vec<Element>> {
        let mut blocks = vec![Vec::new(); self.blocks];
        for (x, &c) in self.class.iter().enumerate() {
            blocks[c].push(x);
        }
        blocks
    }

    pub fn is_identity(&self) -> bool {
        self.blocks == self.class.len()
    }

    pub fn is_total(&self) -> bool {
        self.blocks == 1
    }

    /// Compatibility: congruent arguments give congruent results under every
    /// binary operation.
    pub fn is_compatible(&self, a: &FiniteAlgebra) -> bool {
        let n = a.size();
        if n != self.class.len() {
            return false;
        }
        let ops = [
            FiniteAlgebra::oplus,
            FiniteAlgebra::odot,
            FiniteAlgebra::join,
            FiniteAlgebra::meet,
        ];
        for x in 0..n {
            for y in 0..n {
                if self.class[x] != self.class[y] {
                    continue;
                }
                for z in 0..n {
                    for f in ops {
                        if self.class[f(a, x, z)] != self.class[f(a, y, z)]
                            || self.class[f(a, z, x)] != self.class[f(a, z, y)]
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Enumerate all congruences of `a` (including identity and total) by
/// restricted-growth-string partition search with early pruning of prefixes
/// that already violate compatibility.
pub fn congruences(a: &FiniteAlgebra) -> Result<Vec<Congruence>, ConstructError> {
    let n = a.size();
    if n > MAX_CONGRUENCE_CARRIER {
        return Err(ConstructError::CarrierTooLarge {
            max: MAX_CONGRUENCE_CARRIER,
            got: n,
        });
    }
    let mut found = Vec::new();
    let mut class = vec![0usize; n];
    rgs_search(a, &mut class, 1, &mut found);
    Ok(found)
}

fn rgs_search(a: &FiniteAlgebra, class: &mut Vec<usize>, next: usize, out: &mut Vec<Congruence>) {
    let n = a.size();
    if next == n {
        let c = Congruence::from_classes(class);
        if c.is_compatible(a) {
            out.push(c);
        }
        return;
    }
    let max_used = class[..next].iter().copied().max().unwrap_or(0);
    for label in 0..=max_used + 1 {
        class[next] = label;
        if prefix_consistent(a, class, next) {
            rgs_search(a, class, next + 1, out);
        }
    }
    class[next] = 0;
}

/// Sound prefix pruning: among elements decided so far, any pair already in
/// one class must have class-equal operation results whenever those results
/// are also decided.
fn prefix_consistent(a: &FiniteAlgebra, class: &[usize], last: usize) -> bool {
    let ops = [
        FiniteAlgebra::oplus,
        FiniteAlgebra::odot,
        FiniteAlgebra::join,
        FiniteAlgebra::meet,
    ];
    for x in 0..=last {
        if class[x] != class[last] || x == last {
            continue;
        }
        for z in 0..=last {
            for f in ops {
                let (rx, rl) = (f(a, x, z), f(a, last, z));
                if rx <= last && rl <= last && class[rx] != class[rl] {
                    return false;
                }
                let (sx, sl) = (f(a, z, x), f(a, z, last));
                if sx <= last && sl <= last && class[sx] != class[sl] {
                    return false;
                }
            }
        }
    }
    true
}

/// Quotient by a compatible partition. Block elements are named
/// `{member,…}` with members in declared order.
pub fn quotient(a: &FiniteAlgebra, c: &Congruence) -> Result<FiniteAlgebra, ConstructError> {
    if c.carrier_size() != a.size() || !c.is_compatible(a) {
        return Err(ConstructError::IncompatiblePartition);
    }
    let blocks = c.blocks();
    let elements = blocks
        .iter()
        .map(|b| {
            let names: Vec<&str> = b.iter().map(|&x| a.element_name(x)).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    let rep: Vec<Element> = blocks.iter().map(|b| b[0]).collect();
    let m = blocks.len();
    let table = |f: fn(&FiniteAlgebra, Element, Element) -> Element| {
        OpTable::from_fn(m, |i, j| c.class_of(f(a, rep[i], rep[j])))
    };
    let q = FiniteAlgebra::new(
        elements,
        c.class_of(a.zero()),
        c.class_of(a.one()),
        table(FiniteAlgebra::oplus),
        table(FiniteAlgebra::odot),
        table(FiniteAlgebra::join),
        table(FiniteAlgebra::meet),
    )?;
    Ok(q)
}

/// An injective homomorphism preserving ⊕, ⊙, ∨, ∧, 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    /// Image in `b` of each element of `a`, by declared index.
    pub map: Vec<Element>,
}

impl Embedding {
    pub fn pairs<'a>(&self, a: &'a FiniteAlgebra, b: &'a FiniteAlgebra) -> Vec<(&'a str, &'a str)> {
        self.map
            .iter()
            .enumerate()
            .map(|(x, &fx)| (a.element_name(x), b.element_name(fx)))
            .collect()
    }

    /// Full preservation re-check, usable as an independent certificate.
    pub fn is_valid(&self, a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
        let n = a.size();
        if self.map.len() != n || self.map.iter().any(|&y| y >= b.size()) {
            return false;
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && self.map[x] == self.map[y] {
                    return false;
                }
            }
        }
        if self.map[a.zero()] != b.zero() || self.map[a.one()] != b.one() {
            return false;
        }
        for x in 0..n {
            for y in 0..n {
                if self.map[a.oplus(x, y)] != b.oplus(self.map[x], self.map[y])
                    || self.map[a.odot(x, y)] != b.odot(self.map[x], self.map[y])
                    || self.map[a.join(x, y)] != b.join(self.map[x], self.map[y])
                    || self.map[a.meet(x, y)] != b.meet(self.map[x], self.map[y])
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Outcome of the embedding search. Budget exhaustion is reported separately
/// from a completed search that found nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingSearch {
    Found(Embedding),
    Absent,
    BudgetExceeded,
}

/// Backtracking search for an embedding of `a` into `b` with the default
/// node budget. Constants are fixed first (`0 ↦ 0`, `1 ↦ 1`); remaining
/// elements are assigned in declared order, candidates tried in declared
/// order, so the first embedding found is the lexicographically least one.
pub fn find_embedding(a: &FiniteAlgebra, b: &FiniteAlgebra) -> EmbeddingSearch {
    find_embedding_bounded(a, b, DEFAULT_EMBED_BUDGET)
}

pub fn find_embedding_bounded(a: &FiniteAlgebra, b: &FiniteAlgebra, budget: u64) -> EmbeddingSearch {
    if a.size() > b.size() {
        return EmbeddingSearch::Absent;
    }
    const UNSET: usize = usize::MAX;
    // Constants must map to constants; 0 = 1 on either side only matches
    // 0 = 1 on the other.
    if (a.zero() == a.one()) != (b.zero() == b.one()) {
        return EmbeddingSearch::Absent;
    }
    let mut map = vec![UNSET; a.size()];
    map[a.zero()] = b.zero();
    map[a.one()] = b.one();
    let todo: Vec<Element> = (0..a.size())
        .filter(|&x| x != a.zero() && x != a.one())
        .collect();
    let mut nodes = 0u64;
    match assign(a, b, &todo, 0, &mut map, &mut nodes, budget) {
        Some(true) => EmbeddingSearch::Found(Embedding {
            map,
        }),
        Some(false) => EmbeddingSearch::Absent,
        None => EmbeddingSearch::BudgetExceeded,
    }
}

fn assign(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    todo: &[Element],
    next: usize,
    map: &mut Vec<Element>,
    nodes: &mut u64,
    budget: u64,
) -> Option<bool> {
    const UNSET: usize = usize::MAX;
    if next == todo.len() {
        return Some(true);
    }
    let x = todo[next];
    for candidate in 0..b.size() {
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        if map.contains(&candidate) {
            continue;
        }
        if !consistent(a, b, map, x, candidate) {
            continue;
        }
        map[x] = candidate;
        match assign(a, b, todo, next + 1, map, nodes, budget) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => {
                map[x] = UNSET;
                return None;
            }
        }
        map[x] = UNSET;
    }
    Some(false)
}

/// Check the partial map extended with `x ↦ c` against every constraint whose
/// participants are all mapped: the derived order, and each operation triple
/// `(u, v, f(u,v))` with all three assigned and `x` involved as an argument
/// or as the result.
fn consistent(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[Element], x: Element, c: Element) -> bool {
    const UNSET: usize = usize::MAX;
    let get = |e: Element| -> Element {
        if e == x {
            c
        } else {
            map[e]
        }
    };
    let mapped = |e: Element| e == x || map[e] != UNSET;
    // Order consistency first: it is forced by ∨/∧ preservation and prunes cheaply.
    for u in 0..a.size() {
        if !mapped(u) {
            continue;
        }
        if a.leq(u, x) != b.leq(get(u), c) || a.leq(x, u) != b.leq(c, get(u)) {
            return false;
        }
    }
    let ops: [(
        fn(&FiniteAlgebra, Element, Element) -> Element,
        fn(&FiniteAlgebra, Element, Element) -> Element,
    ); 4] = [
        (FiniteAlgebra::oplus, FiniteAlgebra::oplus),
        (FiniteAlgebra::odot, FiniteAlgebra::odot),
        (FiniteAlgebra::join, FiniteAlgebra::join),
        (FiniteAlgebra::meet, FiniteAlgebra::meet),
    ];
    for u in 0..a.size() {
        if !mapped(u) {
            continue;
        }
        for v in 0..a.size() {
            if !mapped(v) {
                continue;
            }
            for (fa, fb) in ops {
                let out = fa(a, u, v);
                if u != x && v != x && out != x {
                    continue;
                }
                if mapped(out) && fb(b, get(u), get(v)) != get(out) {
                    return false;
                }
            }
        }
    }
    true
}

/// Two algebras are isomorphic iff they have the same size and one embeds in
/// the other.
pub fn is_isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    a.size() == b.size() && matches!(find_embedding(a, b), EmbeddingSearch::Found(_))
}
