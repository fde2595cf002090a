#![allow(dead_code)]

use std::path::PathBuf;

use plotkin_core::codes::LinearCode;
use plotkin_core::galois::{Elem, Field};
use plotkin_core::matrix::Mat;
use rand::Rng;

/// Workspace root, where `recipes/` and `fixtures/` live.
pub fn repo_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn random_rows(rng: &mut impl Rng, q: u32, n: usize, k: usize) -> Vec<Vec<Elem>> {
    (0..k).map(|_| (0..n).map(|_| Elem(rng.gen_range(0..q) as u16)).collect()).collect()
}

/// A random code of dimension exactly `k`.
pub fn random_code(rng: &mut impl Rng, q: u32, n: usize, k: usize) -> LinearCode {
    let f = Field::gf(q).unwrap();
    loop {
        let c = LinearCode::from_generator(Mat::from_rows(&f, &random_rows(rng, q, n, k)).unwrap()).unwrap();
        if c.k() == k {
            return c;
        }
    }
}

/// Every message, encoded by hand: `q^k` vectors of length `n`.
pub fn all_words(code: &LinearCode) -> Vec<Vec<Elem>> {
    let f = code.field();
    let q = f.order() as usize;
    let g = code.generator();
    let total = q.pow(code.k() as u32);
    (0..total)
        .map(|mut m| {
            let mut word = vec![Elem::ZERO; code.n()];
            for r in 0..code.k() {
                let c = Elem((m % q) as u16);
                m /= q;
                for (w, &x) in word.iter_mut().zip(g.row(r)) {
                    *w = f.add(*w, f.mul(c, x));
                }
            }
            word
        })
        .collect()
}

/// Minimum nonzero weight by listing every codeword.
pub fn brute_distance(code: &LinearCode) -> usize {
    all_words(code)
        .iter()
        .map(|w| w.iter().filter(|x| !x.is_zero()).count())
        .filter(|&w| w > 0)
        .min()
        .unwrap_or(0)
}

/// A random codeword.
pub fn sample_word(rng: &mut impl Rng, code: &LinearCode) -> Vec<Elem> {
    let q = code.field().order();
    let msg: Vec<Elem> = (0..code.k()).map(|_| Elem(rng.gen_range(0..q) as u16)).collect();
    code.encode(&msg).symbols
}
