//! Linear codes and the constructions used to build new codes from old:
//! Plotkin sum, shortening, puncturing, extension, duals, cyclic and BCH
//! codes.
//!
//! Every construction propagates what is known about the minimum distance
//! ([`DistanceInfo`]) and never claims more than it can justify.

mod cyclic;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::galois::{CosetError, Elem, Field, FieldError, PolyError};
use crate::matrix::{Mat, MatrixError};

pub use cyclic::{bch_code, bch_generator, cyclic_code, generator_from_zeros};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("generator matrix has no columns")]
    EmptyGenerator,
    #[error("codes have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("codes live over different fields ({0} and {1})")]
    FieldMismatch(String, String),
    #[error("position {position} is outside 1..={n}")]
    PositionOutOfRange { position: usize, n: usize },
    #[error("cannot remove {count} of {n} positions")]
    TooManyPositions { count: usize, n: usize },
    #[error("{g} does not divide x^{n}-1")]
    NotDivisor { g: String, n: usize },
    #[error("generator polynomial is zero")]
    ZeroPolynomial,
    #[error("generator polynomial is over {0}, code field is {1}")]
    PolyField(String, String),
    #[error("designed distance {delta} outside 2..={n}")]
    DesignedDistance { delta: usize, n: usize },
    #[error("word has length {0}, code has length {1}")]
    WordLength(usize, usize),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// What is known about a code's minimum distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DistanceInfo {
    Exact(usize),
    Bounds { lo: usize, hi: usize },
    #[default]
    Unknown,
}

impl DistanceInfo {
    /// Bounds, collapsing to `Exact` when they meet.
    pub fn between(lo: usize, hi: usize) -> DistanceInfo {
        if lo >= hi {
            DistanceInfo::Exact(hi)
        } else {
            DistanceInfo::Bounds { lo, hi }
        }
    }

    pub fn bounds(self) -> Option<(usize, usize)> {
        match self {
            DistanceInfo::Exact(d) => Some((d, d)),
            DistanceInfo::Bounds { lo, hi } => Some((lo, hi)),
            DistanceInfo::Unknown => None,
        }
    }

    pub fn lower(self) -> Option<usize> {
        self.bounds().map(|b| b.0)
    }

    /// Intersects two consistent pieces of knowledge.
    pub fn refine(self, other: DistanceInfo) -> DistanceInfo {
        match (self.bounds(), other.bounds()) {
            (Some((l1, h1)), Some((l2, h2))) => DistanceInfo::between(l1.max(l2), h1.min(h2)),
            (Some(_), None) => self,
            (None, _) => other,
        }
    }
}

impl fmt::Display for DistanceInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DistanceInfo::Exact(d) => write!(f, "d={d}"),
            DistanceInfo::Bounds { lo, hi } => write!(f, "d>={lo} d<={hi}"),
            DistanceInfo::Unknown => write!(f, "d=?"),
        }
    }
}

/// A vector of a code together with its Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Codeword {
    pub weight: usize,
    pub symbols: Vec<Elem>,
}

impl Codeword {
    pub fn new(symbols: Vec<Elem>) -> Codeword {
        let weight = symbols.iter().filter(|x| !x.is_zero()).count();
        Codeword { weight, symbols }
    }
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    generator: Mat,
    distance: DistanceInfo,
}

impl LinearCode {
    /// Builds a code from any spanning matrix. Dependent rows are dropped
    /// (the first independent rows are kept).
    pub fn from_generator(rows: Mat) -> Result<LinearCode, CodeError> {
        if rows.cols() == 0 {
            return Err(CodeError::EmptyGenerator);
        }
        let keep = rows.independent_rows();
        let generator = if keep.len() == rows.rows() { rows } else { rows.select_rows(&keep) };
        Ok(LinearCode { generator, distance: DistanceInfo::Unknown })
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode { generator: Mat::zeros(field, 0, n), distance: DistanceInfo::Unknown }
    }

    /// Attaches externally established distance knowledge.
    pub fn with_distance(mut self, distance: DistanceInfo) -> LinearCode {
        self.distance = distance;
        self
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Mat {
        &self.generator
    }

    pub fn distance(&self) -> DistanceInfo {
        self.distance
    }

    fn singleton(&self) -> usize {
        self.n() - self.k() + 1
    }

    pub fn encode(&self, message: &[Elem]) -> Codeword {
        Codeword::new(self.generator.combine(message))
    }

    /// Parity-check matrix (a generator of the dual).
    pub fn parity_check(&self) -> Mat {
        self.generator.nullspace()
    }

    pub fn contains(&self, word: &[Elem]) -> Result<bool, CodeError> {
        if word.len() != self.n() {
            return Err(CodeError::WordLength(word.len(), self.n()));
        }
        let h = self.parity_check();
        let f = self.field();
        Ok((0..h.rows()).all(|r| {
            h.row(r).iter().zip(word).fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b))).is_zero()
        }))
    }

    /// Same row space (order and basis may differ).
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field() == other.field()
            && self.n() == other.n()
            && self.k() == other.k()
            && self.generator.vstack(&other.generator).map(|m| m.rank() == self.k()).unwrap_or(false)
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<(), CodeError> {
        if self.field() != other.field() {
            return Err(CodeError::FieldMismatch(self.field().to_string(), other.field().to_string()));
        }
        if self.n() != other.n() {
            return Err(CodeError::LengthMismatch(self.n(), other.n()));
        }
        Ok(())
    }

    /// Validates 1-based positions and converts them to sorted 0-based ones.
    fn positions(&self, positions: &[usize]) -> Result<Vec<usize>, CodeError> {
        let n = self.n();
        let mut set = BTreeSet::new();
        for &p in positions {
            if p == 0 || p > n {
                return Err(CodeError::PositionOutOfRange { position: p, n });
            }
            set.insert(p - 1);
        }
        if set.len() >= n {
            return Err(CodeError::TooManyPositions { count: set.len(), n });
        }
        Ok(set.into_iter().collect())
    }

    /// The (u | u+v) construction, generated by `[[G1 | G1], [0 | G2]]`.
    pub fn plotkin_sum(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode, CodeError> {
        c1.check_compatible(c2)?;
        let f = c1.field();
        let top = c1.generator.hstack(&c1.generator)?;
        let bottom = Mat::zeros(f, c2.k(), c2.n()).hstack(&c2.generator)?;
        let generator = top.vstack(&bottom)?;
        let distance = match (c1.k(), c2.k()) {
            (0, 0) => DistanceInfo::Unknown,
            (0, _) => c2.distance,
            (_, 0) => match c1.distance.bounds() {
                Some((lo, hi)) => DistanceInfo::between(2 * lo, 2 * hi),
                None => DistanceInfo::Unknown,
            },
            _ => match (c1.distance, c2.distance) {
                (DistanceInfo::Exact(d1), DistanceInfo::Exact(d2)) => {
                    DistanceInfo::Exact((2 * d1).min(d2))
                }
                (a, b) => match (a.bounds(), b.bounds()) {
                    (Some((l1, h1)), Some((l2, h2))) => {
                        DistanceInfo::between((2 * l1).min(l2), (2 * h1).min(h2))
                    }
                    _ => DistanceInfo::Unknown,
                },
            },
        };
        Ok(LinearCode { generator, distance })
    }

    /// Keeps the codewords vanishing on `positions` (1-based) and deletes
    /// those coordinates. The dimension is computed, not assumed.
    pub fn shorten(&self, positions: &[usize]) -> Result<LinearCode, CodeError> {
        let s = self.positions(positions)?;
        let sys = self.generator.systematic_form(Some(&s));
        let on_s = sys.info_cols.iter().take_while(|c| s.binary_search(c).is_ok()).count();
        let keep_cols: Vec<usize> = (0..self.n()).filter(|c| s.binary_search(c).is_err()).collect();
        let rows: Vec<usize> = (on_s..sys.rank).collect();
        let generator = sys.matrix.select_rows(&rows).select_columns(&keep_cols);
        let mut code = LinearCode { generator, distance: DistanceInfo::Unknown };
        if code.k() > 0 {
            if let Some(lo) = self.distance.lower() {
                code.distance = DistanceInfo::between(lo, code.singleton());
            }
        }
        Ok(code)
    }

    /// Deletes the coordinates `positions` (1-based) from every codeword.
    pub fn puncture(&self, positions: &[usize]) -> Result<LinearCode, CodeError> {
        let s = self.positions(positions)?;
        let keep_cols: Vec<usize> = (0..self.n()).filter(|c| s.binary_search(c).is_err()).collect();
        let mut code = LinearCode::from_generator(self.generator.select_columns(&keep_cols))?;
        if let Some((lo, hi)) = self.distance.bounds() {
            if lo > s.len() && code.k() > 0 {
                code.distance = DistanceInfo::between(lo - s.len(), hi.min(code.singleton()));
            }
        }
        Ok(code)
    }

    /// Appends an overall parity coordinate so every codeword sums to zero.
    pub fn extend(&self) -> LinearCode {
        let f = self.field().clone();
        let parity = Mat::from_rows(
            &f,
            &(0..self.k())
                .map(|r| {
                    let sum = self.generator.row(r).iter().fold(Elem::ZERO, |a, &x| f.add(a, x));
                    vec![f.neg(sum)]
                })
                .collect::<Vec<_>>(),
        )
        .expect("one column per row");
        let generator = if self.k() == 0 {
            Mat::zeros(&f, 0, self.n() + 1)
        } else {
            self.generator.hstack(&parity).expect("same row count")
        };
        let binary = f.order() == 2;
        let distance = match self.distance.bounds() {
            _ if self.k() == 0 => DistanceInfo::Unknown,
            // binary extended codes have only even weights
            Some((lo, hi)) if binary => DistanceInfo::between(lo + lo % 2, hi + hi % 2),
            Some((lo, hi)) => DistanceInfo::between(lo, (hi + 1).min(self.n() + 1 - self.k() + 1)),
            None => DistanceInfo::Unknown,
        };
        LinearCode { generator, distance }
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode { generator: self.generator.nullspace(), distance: DistanceInfo::Unknown }
    }

    /// All `q^k` codewords, in no particular order. Intended for small codes.
    pub fn codewords(&self) -> Vec<Codeword> {
        let f = self.field();
        let q = f.order() as usize;
        let k = self.k();
        let total = q.checked_pow(k as u32).expect("code too large to enumerate");
        let mut out = Vec::with_capacity(total);
        let mut msg = vec![Elem::ZERO; k];
        for mut i in 0..total {
            for m in msg.iter_mut() {
                *m = Elem((i % q) as u16);
                i /= q;
            }
            out.push(self.encode(&msg));
        }
        out
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}] over {}", self.n(), self.k(), self.field())
    }
}
