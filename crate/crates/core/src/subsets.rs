use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// How subsets of an `n`-element collection are quantified: every subset
/// when `n <= exhaustive_max`, otherwise the empty set, the full set, every
/// singleton, and `samples` subsets drawn from a generator seeded by `seed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetPolicy {
    pub exhaustive_max: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SubsetPolicy {
    fn default() -> Self {
        SubsetPolicy {
            exhaustive_max: 6,
            samples: 512,
            seed: 0,
        }
    }
}

impl SubsetPolicy {
    pub fn with_seed(seed: u64) -> Self {
        SubsetPolicy {
            seed,
            ..SubsetPolicy::default()
        }
    }

    pub fn is_exhaustive(&self, n: usize) -> bool {
        n <= self.exhaustive_max && n < 64
    }

    /// Index sets of the subsets to check, each sorted ascending.
    pub fn subsets(&self, n: usize) -> Vec<Vec<usize>> {
        let members =
            |mask: u64| -> Vec<usize> { (0..n).filter(|&i| mask >> i & 1 == 1).collect() };
        if self.is_exhaustive(n) {
            return (0..1u64 << n).map(members).collect();
        }
        let mut out = vec![Vec::new(), (0..n).collect()];
        out.extend((0..n).map(|i| vec![i]));
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        for _ in 0..self.samples {
            out.push((0..n).filter(|_| rng.gen_bool(0.5)).collect());
        }
        out
    }
}
