//! Randomized search for low-weight codewords (Lee–Brickell, p = 2).

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::codes::{Codeword, LinearCode};

use super::packed::{Layout, MultipleTable};
use super::{DistanceError, DistanceResult, Status};

/// Repeats: random column permutation, systematic form on the permuted
/// leading columns, then every projective message of weight 1 or 2. Stops
/// once a codeword of weight `<= target` is found or `budget` codeword
/// evaluations are spent. The outcome is a function of `seed`.
pub fn low_weight_witness(
    code: &LinearCode,
    target: usize,
    budget: u64,
    seed: u64,
) -> Result<DistanceResult, DistanceError> {
    if target == 0 {
        return Err(DistanceError::ZeroTarget);
    }
    let k = code.k();
    if k == 0 {
        return Err(DistanceError::ZeroCode);
    }
    let n = code.n();
    let field = code.field();
    let layout = Layout::new(field, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut columns: Vec<usize> = (0..n).collect();
    let mut state = State { work: 0, budget, target, best: u32::MAX, best_vec: Vec::new() };
    let len = layout.len();
    'rounds: while state.work < budget {
        columns.shuffle(&mut rng);
        let sys = code.generator().systematic_form(Some(&columns));
        let table = MultipleTable::new(&layout, field, sys.matrix.row_vecs());
        for i in 0..k {
            let row = table.entry(i, 0);
            if state.consider(layout.weight(row), || row.to_vec(), 1) {
                break 'rounds;
            }
        }
        for i in 0..k - 1 {
            let a = table.entry(i, 0);
            let mut block = table.rows_from(i + 1);
            let count = ((block.len() / len) as u64).min(budget - state.work);
            block = &block[..count as usize * len];
            let (wt, j) = layout.scan_min(a, block);
            let sum = || {
                let mut v = layout.zero();
                layout.add_into(&mut v, a, &block[j * len..(j + 1) * len]);
                v
            };
            if state.consider(wt, sum, count) {
                break 'rounds;
            }
        }
    }
    let State { work, best, best_vec, .. } = state;
    let (upper, witness) = if best_vec.is_empty() {
        (n - k + 1, None)
    } else {
        (best as usize, Some(Codeword::new(layout.unpack(&best_vec))))
    };
    Ok(DistanceResult {
        lower: 1,
        upper,
        status: if upper == 1 { Status::Exact } else { Status::WitnessOnly },
        witness,
        work,
    })
}

struct State {
    work: u64,
    budget: u64,
    target: usize,
    best: u32,
    best_vec: Vec<u64>,
}

impl State {
    /// Records `spent` evaluations whose lightest result has weight `wt`.
    /// Returns true when the search should stop.
    fn consider(&mut self, wt: u32, vector: impl FnOnce() -> Vec<u64>, spent: u64) -> bool {
        self.work += spent;
        if wt < self.best {
            self.best = wt;
            self.best_vec = vector();
        }
        self.best as usize <= self.target || self.work >= self.budget
    }
}
