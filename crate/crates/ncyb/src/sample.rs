//! Seeded random exact data.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::LabeledMat;
use crate::ring::{qrat, QRat};

/// Deterministic source of small random rationals.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream for the `k`-th sub-task of `seed`.
    pub fn split(seed: u64, k: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k.wrapping_add(1));
        Sampler { rng }
    }

    /// Integer in `[-9, 9] \ {0}`.
    pub fn small(&mut self) -> i64 {
        let v = self.rng.gen_range(1..=9);
        if self.rng.gen_bool(0.5) {
            -v
        } else {
            v
        }
    }

    /// `a / b` with `a, b` in `[-9, 9] \ {0}`.
    pub fn rat(&mut self) -> QRat {
        let (a, b) = (self.small(), self.small());
        qrat(a, b)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn rat_mat(&mut self, r: usize, c: usize) -> LabeledMat<QRat> {
        LabeledMat::from_fn(r, c, |_, _| self.rat())
    }

    /// Matrix whose entries are `d × d` rational matrices.
    pub fn op_mat(&mut self, r: usize, c: usize, d: usize) -> LabeledMat<LabeledMat<QRat>> {
        LabeledMat::from_fn(r, c, |_, _| self.rat_mat(d, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};

    #[test]
    fn entries_in_range() {
        let mut s = Sampler::new(3);
        for _ in 0..200 {
            let x = s.rat();
            assert!(!x.is_zero());
            assert!(x.numer().abs() <= 9.into() && *x.denom() <= 9.into());
        }
    }

    #[test]
    fn deterministic() {
        let a: Vec<QRat> = (0..5).map({
            let mut s = Sampler::new(11);
            move |_| s.rat()
        })
        .collect();
        let b: Vec<QRat> = (0..5).map({
            let mut s = Sampler::new(11);
            move |_| s.rat()
        })
        .collect();
        assert_eq!(a, b);
    }
}
