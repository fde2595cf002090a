//! Brouwer–Zimmermann minimum distance.

use rayon::prelude::*;

use crate::codes::{Codeword, LinearCode};
use super::packed::{Layout, MultipleTable};
use super::{DistanceError, DistanceResult, Status};

pub const DEFAULT_BZ_BUDGET: u64 = 1_000_000_000;

/// A systematic generator whose information set meets the earlier ones in
/// as few columns as possible. `rho` is `k` minus the number of columns it
/// owns exclusively.
struct InfoMatrix {
    rho: usize,
    table: MultipleTable,
}

fn info_matrices(code: &LinearCode, layout: &Layout) -> Vec<InfoMatrix> {
    let n = code.n();
    let k = code.k();
    let mut used = vec![false; n];
    let mut out = Vec::new();
    loop {
        let unused: Vec<usize> = (0..n).filter(|&c| !used[c]).collect();
        if unused.is_empty() {
            break;
        }
        let sys = code.generator().systematic_form(Some(&unused));
        let owned: Vec<usize> = sys.info_cols.iter().copied().take_while(|&c| !used[c]).collect();
        if owned.is_empty() {
            break;
        }
        for &c in &owned {
            used[c] = true;
        }
        let table = MultipleTable::new(layout, code.field(), sys.matrix.row_vecs());
        out.push(InfoMatrix { rho: k - owned.len(), table });
    }
    out
}

fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let mut c: u128 = 1;
    for i in 0..r.min(n - r) {
        c = c * (n - i) as u128 / (i + 1) as u128;
        if c > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    c as u64
}

/// Projective messages of weight `w` in `k` coordinates: the first nonzero
/// coefficient is fixed to 1.
fn round_cost(k: usize, w: usize, q: u32) -> u64 {
    let mut cost = binomial(k, w);
    for _ in 1..w {
        cost = cost.saturating_mul(q as u64 - 1);
    }
    cost
}

/// Lower bound once matrices `0..=j` have finished round `w` and the rest
/// have finished round `w - 1`.
fn lower_bound(matrices: &[InfoMatrix], w: usize, j: usize) -> usize {
    matrices
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let reach = if i <= j { w + 1 } else { w };
            reach.saturating_sub(m.rho)
        })
        .sum()
}

struct Search<'a> {
    layout: &'a Layout,
    table: &'a MultipleTable,
    w: usize,
    stack: Vec<u64>,
    best: u32,
    best_vec: Vec<u64>,
}

impl Search<'_> {
    /// `t` terms are placed; their sum is stack slot `t - 1`.
    fn dfs(&mut self, t: usize, start: usize) {
        let len = self.layout.len();
        let k = self.table.rows();
        if t == self.w {
            let wt = self.layout.weight(&self.stack[(t - 1) * len..t * len]);
            if wt < self.best {
                self.best = wt;
                self.best_vec = self.stack[(t - 1) * len..t * len].to_vec();
            }
            return;
        }
        if t + 1 == self.w {
            let prev = &self.stack[(t - 1) * len..t * len];
            let block = self.table.rows_from(start);
            let (wt, i) = self.layout.scan_min(prev, block);
            if wt < self.best {
                self.best = wt;
                let mut v = vec![0; len];
                self.layout.add_into(&mut v, prev, &block[i * len..(i + 1) * len]);
                self.best_vec = v;
            }
            return;
        }
        for i in start..=k - (self.w - t) {
            for s in 0..self.table.per_row() {
                let (done, rest) = self.stack.split_at_mut(t * len);
                self.layout.add_into(&mut rest[..len], &done[(t - 1) * len..], self.table.entry(i, s));
                self.dfs(t + 1, i + 1);
            }
        }
    }
}

/// Lightest codeword among all projective messages of weight `w`, found
/// in a fixed order so the outcome does not depend on the thread count.
fn enumerate_round(layout: &Layout, table: &MultipleTable, w: usize) -> (u32, Vec<u64>) {
    let k = table.rows();
    let len = layout.len();
    (0..=k - w)
        .into_par_iter()
        .map(|first| {
            let mut search = Search {
                layout,
                table,
                w,
                stack: vec![0; w * len],
                best: u32::MAX,
                best_vec: Vec::new(),
            };
            search.stack[..len].copy_from_slice(table.entry(first, 0));
            search.dfs(1, first + 1);
            (search.best, first, search.best_vec)
        })
        .min_by_key(|(wt, first, _)| (*wt, *first))
        .map(|(wt, _, v)| (wt, v))
        .expect("at least one message")
}

/// Brouwer–Zimmermann: enumerate messages of growing weight against
/// several information sets until the lower bound meets the lightest
/// codeword seen. A `(matrix, round)` step is only started if it fits in
/// the remaining `budget` of codeword evaluations.
pub fn min_distance_bz(code: &LinearCode, budget: u64) -> Result<DistanceResult, DistanceError> {
    let k = code.k();
    if k == 0 {
        return Err(DistanceError::ZeroCode);
    }
    let n = code.n();
    let q = code.field().order();
    let layout = Layout::new(code.field(), n);
    let mut result = DistanceResult {
        lower: 1,
        upper: n - k + 1,
        status: Status::BoundsOnly,
        witness: None,
        work: 0,
    };
    let finish = |mut r: DistanceResult| {
        r.lower = r.lower.min(r.upper);
        if r.lower == r.upper {
            r.status = Status::Exact;
        }
        Ok(r)
    };
    if budget == 0 {
        return finish(result);
    }
    let matrices = info_matrices(code, &layout);
    let mut best_vec: Option<Vec<u64>> = None;
    for w in 1..=k {
        for (j, m) in matrices.iter().enumerate() {
            if w < m.rho {
                continue;
            }
            let cost = round_cost(k, w, q);
            if result.work.saturating_add(cost) > budget {
                if let Some(v) = best_vec {
                    result.witness = Some(Codeword::new(layout.unpack(&v)));
                }
                return finish(result);
            }
            let (wt, v) = enumerate_round(&layout, &m.table, w);
            result.work += cost;
            if (wt as usize) < result.upper || best_vec.is_none() && wt as usize == result.upper {
                result.upper = wt as usize;
                best_vec = Some(v);
            }
            result.lower = result.lower.max(lower_bound(&matrices, w, j));
            // every codeword has been seen once a full-rank matrix ends round k
            if w == k && m.rho == 0 {
                result.lower = result.upper;
            }
            if result.lower >= result.upper {
                result.witness = best_vec.map(|v| Codeword::new(layout.unpack(&v)));
                return finish(result);
            }
        }
    }
    unreachable!("round k on the first matrix sees every codeword")
}
