//! Seeded random elements, subspaces and ideals for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lie::LieAlgebra;
use crate::linalg::{int, Scalar, Subspace, Vector};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Vector with integer entries in `[-bound, bound]`.
pub fn random_vector(rng: &mut SeededRng, n: usize, bound: i64) -> Vector {
    (0..n).map(|_| int(rng.gen_range(-bound..=bound))).collect()
}

/// Vector supported on a random subset of coordinates, so that small ideals
/// are hit more often than with dense vectors.
pub fn random_sparse_vector(rng: &mut SeededRng, n: usize, bound: i64) -> Vector {
    if n == 0 {
        return Vec::new();
    }
    let density = rng.gen_range(1..=n.max(1));
    let mut v: Vec<Scalar> = vec![int(0); n];
    for _ in 0..density {
        let i = rng.gen_range(0..n);
        v[i] = int(rng.gen_range(-bound..=bound));
    }
    v
}

/// Span of `k` random vectors, `k` uniform in `0..=n`.
pub fn random_subspace(rng: &mut SeededRng, n: usize) -> Subspace {
    let k = rng.gen_range(0..=n);
    Subspace::span(n, (0..k).map(|_| random_sparse_vector(rng, n, 3)))
}

/// Ideal closure of one or two random elements.
pub fn random_ideal(l: &LieAlgebra, rng: &mut SeededRng) -> Subspace {
    let n = l.dim();
    let count = rng.gen_range(1..=2);
    let s = Subspace::span(n, (0..count).map(|_| random_sparse_vector(rng, n, 3)));
    l.ideal_closure(&s).expect("ambient subspace")
}

pub fn gen_range(rng: &mut SeededRng, lo: i64, hi: i64) -> i64 {
    rng.gen_range(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::oscillator_d4;

    #[test]
    fn seeds_reproduce() {
        let a = random_vector(&mut rng(5), 6, 4);
        assert_eq!(a, random_vector(&mut rng(5), 6, 4));
        assert!(a.iter().all(|x| x.numer().magnitude() <= &4u8.into() && x.is_integer()));
        assert!(random_sparse_vector(&mut rng(1), 0, 3).is_empty());
    }

    #[test]
    fn random_ideals_are_ideals() {
        let d4 = oscillator_d4();
        let mut r = rng(11);
        for _ in 0..20 {
            assert!(d4.algebra().is_ideal(&random_ideal(d4.algebra(), &mut r)).unwrap());
        }
    }
}
