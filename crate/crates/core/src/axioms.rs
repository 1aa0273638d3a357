//! The named axiom catalogue: the MV-monoidal equations E1–E7 (expanded into
//! an explicit equational base) and the cancellation quasi-equation.
//!
//! The catalogue is read from `data/mvm-axioms.txt`, which uses the same term
//! syntax the CLI accepts; the file is the source of truth for the axiom set.

use crate::term::{QuasiEquation, TermError};
use std::sync::OnceLock;

/// A named quasi-equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axiom {
    pub id: String,
    pub quasi: QuasiEquation,
}

const CATALOGUE_SRC: &str = include_str!("../data/mvm-axioms.txt");
const CANCELLATION_ID: &str = "cancellation";

/// Parse an axiom file: one `id: [premises =>] lhs = rhs` per line,
/// `#` starts a comment, blank lines are skipped.
pub fn parse_axiom_file(src: &str) -> Result<Vec<Axiom>, TermError> {
    let mut axioms: Vec<Axiom> = Vec::new();
    for (lineno, raw) in src.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (id, body) = line.split_once(':').ok_or(TermError::Parse {
            pos: lineno,
            msg: "expected 'id: equation'".to_string(),
        })?;
        let id = id.trim().to_string();
        if axioms.iter().any(|a| a.id == id) {
            return Err(TermError::Parse {
                pos: lineno,
                msg: format!("duplicate axiom id '{id}'"),
            });
        }
        axioms.push(Axiom {
            id,
            quasi: QuasiEquation::parse(body)?,
        });
    }
    Ok(axioms)
}

fn catalogue() -> &'static Vec<Axiom> {
    static CATALOGUE: OnceLock<Vec<Axiom>> = OnceLock::new();
    CATALOGUE.get_or_init(|| {
        parse_axiom_file(CATALOGUE_SRC).expect("built-in axiom catalogue must parse")
    })
}

/// The equational axioms E1–E7, in catalogue order.
pub fn mvm_axioms() -> Vec<&'static Axiom> {
    catalogue()
        .iter()
        .filter(|a| a.id != CANCELLATION_ID)
        .collect()
}

/// The cancellation quasi-equation `x+z = y+z, x.z = y.z => x = y`.
pub fn cancellation() -> &'static Axiom {
    catalogue()
        .iter()
        .find(|a| a.id == CANCELLATION_ID)
        .expect("catalogue contains the cancellation axiom")
}

/// The full built-in catalogue (E axioms followed by cancellation).
pub fn full_catalogue() -> &'static [Axiom] {
    catalogue()
}
