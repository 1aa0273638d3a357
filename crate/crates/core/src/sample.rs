//! Random generators for randomized test sweeps.

use crate::algebra::{FiniteAlgebra, OpTable};
use crate::constructions::{luk_chain, product, subalgebra_generated};
use rand::Rng;

/// A random total algebra over the signature: arbitrary tables and constants.
/// Valid as a structure, but almost never MV-monoidal; useful for
/// cross-checking engines on adversarial input.
pub fn random_total_algebra<R: Rng + ?Sized>(rng: &mut R, size: usize) -> FiniteAlgebra {
    assert!(size >= 1);
    let elements = (0..size).map(|i| format!("e{i}")).collect();
    let random_table = |rng: &mut R| {
        let cells: Vec<usize> = (0..size * size).map(|_| rng.random_range(0..size)).collect();
        OpTable::from_fn(size, |x, y| cells[x * size + y])
    };
    let oplus = random_table(rng);
    let odot = random_table(rng);
    let join = random_table(rng);
    let meet = random_table(rng);
    let zero = rng.random_range(0..size);
    let one = rng.random_range(0..size);
    FiniteAlgebra::new(elements, zero, one, oplus, odot, join, meet)
        .expect("random total tables are structurally valid")
}

/// A random positive MV-algebra with at most `max_size` elements: a generated
/// subalgebra of a random Łukasiewicz chain or of a product of two chains.
pub fn random_positive_mv<R: Rng + ?Sized>(rng: &mut R, max_size: usize) -> FiniteAlgebra {
    assert!(max_size >= 2);
    for _ in 0..64 {
        let parent = if rng.random_bool(0.5) {
            luk_chain(rng.random_range(1..=5))
        } else {
            let a = luk_chain(rng.random_range(1..=3));
            let b = luk_chain(rng.random_range(1..=3));
            product(&a, &b).expect("chain products stay under the size limit")
        };
        let seed_count = rng.random_range(0..=2);
        let seeds: Vec<usize> = (0..seed_count)
            .map(|_| rng.random_range(0..parent.size()))
            .collect();
        let sub = subalgebra_generated(&parent, &seeds);
        if sub.size() <= max_size {
            return sub;
        }
    }
    // The constants-only subalgebra always fits.
    subalgebra_generated(&luk_chain(1), &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::{classify, Verdict};
    use rand::SeedableRng;

    #[test]
    fn random_positive_mv_classifies_positive() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..25 {
            let a = random_positive_mv(&mut rng, 4);
            assert!(a.size() <= 4);
            assert_eq!(classify(&a).verdict, Verdict::PositiveMV);
        }
    }

    #[test]
    fn random_total_algebra_is_well_formed() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for size in 1..=5 {
            let a = random_total_algebra(&mut rng, size);
            assert_eq!(a.size(), size);
        }
    }
}
