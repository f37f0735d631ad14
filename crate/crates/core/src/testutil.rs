use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalars::{Rational, Var};

/// Random small nonzero rationals for the given parameters, reproducible by seed.
pub fn random_point(vars: &[Var], seed: u64) -> Vec<(Var, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vars.iter()
        .map(|&v| {
            let mut n: i64 = 0;
            while n == 0 {
                n = rng.gen_range(-40..=40);
            }
            let d: i64 = rng.gen_range(1..=17);
            (v, Rational::new(n.into(), d.into()))
        })
        .collect()
}

/// Textbook Gaussian elimination over ℚ.
pub fn plain_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                for j in c..cols {
                    let t = &f * &m[rank][j];
                    m[r][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}
