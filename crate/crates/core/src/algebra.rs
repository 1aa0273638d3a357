//! Finite algebras over the signature `{⊕, ⊙, ∨, ∧, 0, 1}`.
//!
//! Elements are opaque names; the order in which they are declared fixes the
//! iteration order everywhere (assignment enumeration, counterexample
//! reporting, fingerprints), so all output is deterministic.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of an element in the declared carrier order.
pub type Element = usize;

/// Errors raised while loading or validating an algebra.
#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("validation error: carrier is empty")]
    EmptyCarrier,
    #[error("validation error: duplicate element '{0}'")]
    DuplicateElement(String),
    #[error("validation error: unknown element '{name}' in {place}")]
    UnknownElement { name: String, place: String },
    #[error("validation error: missing entry {table}({row},{col})")]
    MissingEntry {
        table: &'static str,
        row: String,
        col: String,
    },
    #[error("validation error: {table} has more {what} than carrier elements")]
    ExtraEntries { table: &'static str, what: &'static str },
}

/// A total binary operation on `{0, …, size−1}`, stored row-major:
/// the row index is the left argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTable {
    size: usize,
    cells: Vec<Element>,
}

impl OpTable {
    /// Tabulate `f` over all pairs.
    pub fn from_fn(size: usize, f: impl Fn(Element, Element) -> Element) -> Self {
        let mut cells = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                cells.push(f(x, y));
            }
        }
        OpTable { size, cells }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Element {
        self.cells[x * self.size + y]
    }

    fn in_range(&self) -> bool {
        self.cells.iter().all(|&c| c < self.size)
    }
}

/// A finite algebra `⟨A, ⊕, ⊙, ∨, ∧, 0, 1⟩` with total operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    elements: Vec<String>,
    zero: Element,
    one: Element,
    oplus: OpTable,
    odot: OpTable,
    join: OpTable,
    meet: OpTable,
}

/// Serde view of the on-disk JSON schema. Tables hold element names;
/// the row index is the left argument in declared element order.
#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    elements: Vec<String>,
    zero: String,
    one: String,
    oplus: Vec<Vec<String>>,
    odot: Vec<Vec<String>>,
    join: Vec<Vec<String>>,
    meet: Vec<Vec<String>>,
}

impl FiniteAlgebra {
    /// Build an algebra from index-based tables, validating every invariant.
    pub fn new(
        elements: Vec<String>,
        zero: Element,
        one: Element,
        oplus: OpTable,
        odot: OpTable,
        join: OpTable,
        meet: OpTable,
    ) -> Result<Self, AlgebraError> {
        let n = elements.len();
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        for (i, name) in elements.iter().enumerate() {
            if elements[..i].contains(name) {
                return Err(AlgebraError::DuplicateElement(name.clone()));
            }
        }
        for (who, idx) in [("zero", zero), ("one", one)] {
            if idx >= n {
                return Err(AlgebraError::UnknownElement {
                    name: format!("#{idx}"),
                    place: who.to_string(),
                });
            }
        }
        for (name, table) in [
            ("oplus", &oplus),
            ("odot", &odot),
            ("join", &join),
            ("meet", &meet),
        ] {
            if table.size != n || !table.in_range() {
                return Err(AlgebraError::UnknownElement {
                    name: "out-of-range index".to_string(),
                    place: name.to_string(),
                });
            }
        }
        Ok(FiniteAlgebra {
            elements,
            zero,
            one,
            oplus,
            odot,
            join,
            meet,
        })
    }

    /// Parse and validate an algebra from the JSON file format.
    pub fn from_json(source: &str) -> Result<Self, AlgebraError> {
        let file: AlgebraFile = serde_json::from_str(source)?;
        let elements = file.elements;
        if elements.is_empty() {
            return Err(AlgebraError::EmptyCarrier);
        }
        for (i, name) in elements.iter().enumerate() {
            if elements[..i].contains(name) {
                return Err(AlgebraError::DuplicateElement(name.clone()));
            }
        }
        let resolve = |name: &str, place: &str| -> Result<Element, AlgebraError> {
            elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| AlgebraError::UnknownElement {
                    name: name.to_string(),
                    place: place.to_string(),
                })
        };
        let zero = resolve(&file.zero, "zero")?;
        let one = resolve(&file.one, "one")?;
        let table = |label: &'static str, rows: &[Vec<String>]| -> Result<OpTable, AlgebraError> {
            let n = elements.len();
            if rows.len() > n {
                return Err(AlgebraError::ExtraEntries {
                    table: label,
                    what: "rows",
                });
            }
            let mut cells = Vec::with_capacity(n * n);
            for (x, row) in rows.iter().enumerate() {
                if row.len() > n {
                    return Err(AlgebraError::ExtraEntries {
                        table: label,
                        what: "columns",
                    });
                }
                if row.len() < n {
                    return Err(AlgebraError::MissingEntry {
                        table: label,
                        row: elements[x].clone(),
                        col: elements[row.len()].clone(),
                    });
                }
                for (y, cell) in row.iter().enumerate() {
                    let place = format!("{label}({},{})", elements[x], elements[y]);
                    cells.push(resolve(cell, &place)?);
                }
            }
            if rows.len() < n {
                return Err(AlgebraError::MissingEntry {
                    table: label,
                    row: elements[rows.len()].clone(),
                    col: elements[0].clone(),
                });
            }
            Ok(OpTable { size: n, cells })
        };
        let oplus = table("oplus", &file.oplus)?;
        let odot = table("odot", &file.odot)?;
        let join = table("join", &file.join)?;
        let meet = table("meet", &file.meet)?;
        FiniteAlgebra::new(elements, zero, one, oplus, odot, join, meet)
    }

    /// Canonical serialization: the JSON file format with elements in declared
    /// order and tables row-major. Loading it back yields an identical algebra.
    pub fn to_json(&self) -> String {
        let name = |i: &Element| self.elements[*i].clone();
        let rows = |t: &OpTable| -> Vec<Vec<String>> {
            (0..self.size())
                .map(|x| (0..self.size()).map(|y| name(&t.get(x, y))).collect())
                .collect()
        };
        let file = AlgebraFile {
            elements: self.elements.clone(),
            zero: name(&self.zero),
            one: name(&self.one),
            oplus: rows(&self.oplus),
            odot: rows(&self.odot),
            join: rows(&self.join),
            meet: rows(&self.meet),
        };
        serde_json::to_string(&file).expect("algebra serialization cannot fail")
    }

    /// Stable canonical fingerprint. Equal fingerprints imply identical
    /// labelled algebras (same names, same tables, cell by cell).
    pub fn fingerprint(&self) -> String {
        self.to_json()
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    pub fn element_name(&self, x: Element) -> &str {
        &self.elements[x]
    }

    pub fn element_index(&self, name: &str) -> Option<Element> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn zero(&self) -> Element {
        self.zero
    }

    pub fn one(&self) -> Element {
        self.one
    }

    #[inline]
    pub fn oplus(&self, x: Element, y: Element) -> Element {
        self.oplus.get(x, y)
    }

    #[inline]
    pub fn odot(&self, x: Element, y: Element) -> Element {
        self.odot.get(x, y)
    }

    #[inline]
    pub fn join(&self, x: Element, y: Element) -> Element {
        self.join.get(x, y)
    }

    #[inline]
    pub fn meet(&self, x: Element, y: Element) -> Element {
        self.meet.get(x, y)
    }

    /// The order derived from the lattice reduct: `x ≤ y` iff `x ∨ y = y`.
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.join(x, y) == y
    }
}
