//! Minimum-distance engines.
//!
//! * [`min_distance_exhaustive`] and [`weight_distribution`] walk every
//!   message in reflected Gray order, one packed row addition per codeword.
//! * [`min_distance_bz`] is the Brouwer–Zimmermann algorithm over disjoint
//!   information sets, with a deterministic evaluation budget.
//! * [`low_weight_witness`] is a seeded Lee–Brickell search for light
//!   codewords, giving upper bounds on codes too large for exact methods.

mod bz;
mod packed;
mod witness;

use std::fmt;

use thiserror::Error;

use crate::codes::{Codeword, DistanceInfo, LinearCode};
use crate::galois::Elem;

pub use bz::{min_distance_bz, DEFAULT_BZ_BUDGET};
pub use witness::low_weight_witness;

use packed::Layout;

/// Largest `q^k` the exhaustive engines accept by default.
pub const EXHAUSTIVE_CEILING: u64 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistanceError {
    #[error("q^k = {q}^{k} exceeds the enumeration ceiling {ceiling}")]
    TooLarge { q: u32, k: usize, ceiling: u64 },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("target weight must be at least 1")]
    ZeroTarget,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Exact,
    BoundsOnly,
    WitnessOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Exact => "Exact",
            Status::BoundsOnly => "BoundsOnly",
            Status::WitnessOnly => "WitnessOnly",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub lower: usize,
    pub upper: usize,
    pub status: Status,
    /// A codeword of weight `upper`, when one was seen.
    pub witness: Option<Codeword>,
    /// Codeword evaluations performed.
    pub work: u64,
}

impl DistanceResult {
    pub fn info(&self) -> DistanceInfo {
        DistanceInfo::between(self.lower, self.upper)
    }

    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }
}

impl fmt::Display for DistanceResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Status::Exact => write!(f, "Exact d={}", self.upper)?,
            _ => write!(f, "{} d>={} d<={}", self.status, self.lower, self.upper)?,
        }
        write!(f, " (work {})", self.work)
    }
}

fn message_count(q: u32, k: usize, ceiling: u64) -> Result<u64, DistanceError> {
    u32::try_from(k)
        .ok()
        .and_then(|k| (q as u64).checked_pow(k))
        .filter(|&total| total <= ceiling)
        .ok_or(DistanceError::TooLarge { q, k, ceiling })
}

/// Visits every nonzero codeword once, in reflected mixed-radix Gray order
/// (Knuth's Algorithm H). Each step adds one scaled generator row.
fn gray_walk(code: &LinearCode, mut visit: impl FnMut(&Layout, &[u64])) {
    let field = code.field();
    let q = field.order() as usize;
    let k = code.k();
    let layout = Layout::new(field, code.n());
    // delta[j][a][dir]: packed (e(a +- 1) - e(a)) * row j
    let rows: Vec<Vec<Vec<u64>>> = (0..k).map(|r| layout.multiples(field, code.generator().row(r))).collect();
    let step = |r: usize, from: usize, to: usize| -> &[u64] {
        let d = field.sub(Elem(to as u16), Elem(from as u16));
        &rows[r][d.value() as usize - 1]
    };
    let mut acc = layout.zero();
    let mut digits = vec![0usize; k];
    let mut up = vec![true; k];
    let mut focus: Vec<usize> = (0..=k).collect();
    loop {
        let j = focus[0];
        focus[0] = 0;
        if j == k {
            break;
        }
        let from = digits[j];
        let to = if up[j] { from + 1 } else { from - 1 };
        digits[j] = to;
        layout.add_assign(&mut acc, step(j, from, to));
        visit(&layout, &acc);
        if to == 0 || to == q - 1 {
            up[j] = !up[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
    }
}

/// Exact minimum distance by enumerating all `q^k - 1` nonzero codewords.
pub fn min_distance_exhaustive(code: &LinearCode) -> Result<DistanceResult, DistanceError> {
    min_distance_exhaustive_with_ceiling(code, EXHAUSTIVE_CEILING)
}

pub fn min_distance_exhaustive_with_ceiling(
    code: &LinearCode,
    ceiling: u64,
) -> Result<DistanceResult, DistanceError> {
    if code.k() == 0 {
        return Err(DistanceError::ZeroCode);
    }
    let total = message_count(code.field().order(), code.k(), ceiling)?;
    let mut best = u32::MAX;
    let mut witness = Vec::new();
    gray_walk(code, |layout, v| {
        let w = layout.weight(v);
        if w < best {
            best = w;
            witness = layout.unpack(v);
        }
    });
    let d = best as usize;
    Ok(DistanceResult {
        lower: d,
        upper: d,
        status: Status::Exact,
        witness: Some(Codeword::new(witness)),
        work: total - 1,
    })
}

/// Number of codewords of each weight `0..=n`.
pub fn weight_distribution(code: &LinearCode) -> Result<Vec<u64>, DistanceError> {
    message_count(code.field().order(), code.k(), EXHAUSTIVE_CEILING)?;
    let mut counts = vec![0u64; code.n() + 1];
    counts[0] = 1;
    gray_walk(code, |layout, v| counts[layout.weight(v) as usize] += 1);
    Ok(counts)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::codes::tests::{brute_distance, code, hamming7};
    use crate::galois::Field;
    use crate::matrix::Mat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_code(rng: &mut impl Rng, q: u32, n: usize, k: usize) -> LinearCode {
        let f = Field::gf(q).unwrap();
        loop {
            let rows: Vec<Vec<Elem>> =
                (0..k).map(|_| (0..n).map(|_| Elem(rng.gen_range(0..q) as u16)).collect()).collect();
            let c = LinearCode::from_generator(Mat::from_rows(&f, &rows).unwrap()).unwrap();
            if c.k() > 0 {
                return c;
            }
        }
    }

    #[test]
    fn hamming_exhaustive() {
        let r = min_distance_exhaustive(&hamming7()).unwrap();
        assert_eq!((r.lower, r.upper, r.status, r.work), (3, 3, Status::Exact, 15));
        let w = r.witness.unwrap();
        assert_eq!(w.weight, 3);
        assert!(hamming7().contains(&w.symbols).unwrap());
    }

    #[test]
    fn repetition_and_errors() {
        for q in [2, 3, 4, 9] {
            let f = Field::gf(q).unwrap();
            let rep = LinearCode::from_generator(Mat::from_rows(&f, &[vec![Elem(1); 11]]).unwrap()).unwrap();
            assert_eq!(min_distance_exhaustive(&rep).unwrap().upper, 11);
            let z = LinearCode::zero(&f, 4);
            assert_eq!(min_distance_exhaustive(&z).unwrap_err(), DistanceError::ZeroCode);
        }
        let f = Field::gf(4).unwrap();
        let big = LinearCode::from_generator(Mat::identity(&f, 13)).unwrap();
        assert!(matches!(min_distance_exhaustive(&big), Err(DistanceError::TooLarge { .. })));
        assert!(min_distance_exhaustive_with_ceiling(&big, 1 << 26).is_ok());
    }

    #[test]
    fn weight_distributions() {
        assert_eq!(weight_distribution(&hamming7()).unwrap(), vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!(weight_distribution(&hamming7().dual()).unwrap(), vec![1, 0, 0, 0, 7, 0, 0, 0]);
        let rep = code(2, &[&[1, 1, 1, 1, 1]]);
        assert_eq!(weight_distribution(&rep).unwrap(), vec![1, 0, 0, 0, 0, 1]);
        let f = Field::gf(3).unwrap();
        assert_eq!(weight_distribution(&LinearCode::zero(&f, 2)).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn gray_walk_visits_every_codeword() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let c = random_code(&mut rng, q, 6, 3);
            let mut seen: Vec<Vec<Elem>> = Vec::new();
            gray_walk(&c, |layout, v| seen.push(layout.unpack(v)));
            let mut all: Vec<Vec<Elem>> =
                c.codewords().into_iter().filter(|w| w.weight > 0).map(|w| w.symbols).collect();
            seen.sort();
            all.sort();
            assert_eq!(seen, all, "q={q}");
        }
    }

    #[test]
    fn exhaustive_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let q = [2, 3, 4, 5, 7, 8, 9][rng.gen_range(0..7)];
            let n = rng.gen_range(1..10);
            let k = rng.gen_range(1..=n.min(4));
            let c = random_code(&mut rng, q, n, k);
            assert_eq!(min_distance_exhaustive(&c).unwrap().upper, brute_distance(&c));
            let dist = weight_distribution(&c).unwrap();
            assert_eq!(dist.iter().sum::<u64>(), (q as u64).pow(c.k() as u32));
        }
    }
}
