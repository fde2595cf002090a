//! Dense matrices over GF(q): echelon forms, rank, nullspace, systematic
//! form, and the generator-matrix text format.
//!
//! The text format is a header line `q n k` followed by `k` lines of `n`
//! space-separated element values. `#` starts a comment.

use std::fmt::Write as _;

use thiserror::Error;

use crate::galois::{Elem, Field, FieldError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("rows have different lengths ({0} vs {1})")]
    Ragged(usize, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// A generator in systematic form: row `i < rank` is the unit vector on
/// `info_cols[i]` when restricted to `info_cols`; rows from `rank` on are zero.
#[derive(Clone, Debug)]
pub struct Systematic {
    pub matrix: Mat,
    pub info_cols: Vec<usize>,
    pub rank: usize,
}

impl Mat {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<Mat, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(MatrixError::Ragged(cols, r.len()));
            }
            for &x in r {
                field.elem(x.value() as u32)?;
            }
            data.extend_from_slice(r);
        }
        Ok(Mat { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Builds from raw integer values, validating each against the field.
    pub fn from_values(field: &Field, rows: &[&[u16]]) -> Result<Mat, MatrixError> {
        let rows: Vec<Vec<Elem>> =
            rows.iter().map(|r| r.iter().map(|&v| Elem(v)).collect()).collect();
        Mat::from_rows(field, &rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: Elem) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            let row = other.combine(self.row(r));
            out.data[r * other.cols..(r + 1) * other.cols].copy_from_slice(&row);
        }
        Ok(out)
    }

    /// The linear combination `sum coeffs[i] * row(i)`.
    pub fn combine(&self, coeffs: &[Elem]) -> Vec<Elem> {
        assert_eq!(coeffs.len(), self.rows, "message length must equal the row count");
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.cols];
        for (r, &c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        out
    }

    pub fn vstack(&self, other: &Mat) -> Result<Mat, MatrixError> {
        if self.cols != other.cols {
            return Err(MatrixError::Dimension(format!("{} vs {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn hstack(&self, other: &Mat) -> Result<Mat, MatrixError> {
        if self.rows != other.rows {
            return Err(MatrixError::Dimension(format!("{} vs {} rows", self.rows, other.rows)));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(Mat { field: self.field.clone(), rows: self.rows, cols, data })
    }

    /// Keeps the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Mat { field: self.field.clone(), rows: rows.len(), cols: self.cols, data }
    }

    /// Row-reduces in place, visiting columns in `order`. Returns the pivot
    /// columns in the order they were found; pivot rows are `0..rank`.
    fn eliminate(&mut self, order: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut multiples: Vec<Vec<Elem>> = Vec::new();
        for c in order {
            let rank = pivots.len();
            if rank == self.rows {
                break;
            }
            let Some(pr) = (rank..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            if pr != rank {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(self.get(rank, c)).expect("pivot is nonzero");
            for j in 0..cols {
                let v = self.get(rank, j);
                self.set(rank, j, f.mul(v, inv));
            }
            // multiples[s] = s * pivot row, for every scalar s
            let pivot_row = self.row(rank).to_vec();
            multiples.clear();
            multiples.extend(f.elements().map(|s| pivot_row.iter().map(|&x| f.mul(s, x)).collect()));
            for r in 0..self.rows {
                if r == rank {
                    continue;
                }
                let s = self.get(r, c);
                if s.is_zero() {
                    continue;
                }
                let m = &multiples[s.value() as usize];
                let row = &mut self.data[r * cols..(r + 1) * cols];
                for (x, &y) in row.iter_mut().zip(m) {
                    *x = f.sub(*x, y);
                }
            }
            pivots.push(c);
        }
        pivots
    }

    /// Reduced row-echelon form with leftmost-column, topmost-row pivoting.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.eliminate(0..self.cols);
        Rref { matrix: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis (as rows) of `{x : self * x^T = 0}`.
    pub fn nullspace(&self) -> Mat {
        let Rref { matrix, rank, pivots } = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Mat::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, Elem::ONE);
            for (r, &pc) in pivots.iter().enumerate().take(rank) {
                out.set(i, pc, f.neg(matrix.get(r, fc)));
            }
        }
        out
    }

    /// Systematic form. Pivots are taken from `preferred` (in its order)
    /// first, then from the remaining columns left to right.
    pub fn systematic_form(&self, preferred: Option<&[usize]>) -> Systematic {
        let mut order: Vec<usize> = Vec::with_capacity(self.cols);
        let mut used = vec![false; self.cols];
        for &c in preferred.unwrap_or(&[]) {
            if c < self.cols && !used[c] {
                used[c] = true;
                order.push(c);
            }
        }
        order.extend((0..self.cols).filter(|&c| !used[c]));
        let mut m = self.clone();
        let info_cols = m.eliminate(order);
        Systematic { rank: info_cols.len(), matrix: m, info_cols }
    }

    /// Indices of a maximal independent subset of rows, chosen greedily from
    /// the top.
    pub fn independent_rows(&self) -> Vec<usize> {
        let f = &self.field;
        // echelon basis kept as (pivot column, row normalized at the pivot)
        let mut basis: Vec<(usize, Vec<Elem>)> = Vec::new();
        let mut keep = Vec::new();
        for r in 0..self.rows {
            let mut v = self.row(r).to_vec();
            for (pc, b) in &basis {
                let s = v[*pc];
                if !s.is_zero() {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = f.sub(*x, f.mul(s, y));
                    }
                }
            }
            if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
                let inv = f.inv(v[pc]).expect("nonzero");
                v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                basis.push((pc, v));
                keep.push(r);
            }
        }
        keep
    }

    /// Serializes in the generator-matrix text format.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} {}", self.field.order(), self.cols, self.rows);
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    /// Parses the generator-matrix text format, building GF(q) with its
    /// default presentation.
    pub fn parse(text: &str) -> Result<Mat, MatrixError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) =
            lines.next().ok_or(MatrixError::Parse { line: 1, message: "missing header".into() })?;
        let nums = parse_ints(hline, header)?;
        let [q, n, k] = nums[..] else {
            return Err(MatrixError::Parse { line: hline, message: "header must be `q n k`".into() });
        };
        let field = Field::gf(q as u32)
            .map_err(|e| MatrixError::Parse { line: hline, message: e.to_string() })?;
        let mut data = Vec::with_capacity(n as usize * k as usize);
        let mut count = 0;
        for (line, body) in lines {
            if count == k {
                return Err(MatrixError::Parse { line, message: format!("more than {k} rows") });
            }
            let row = parse_ints(line, body)?;
            if row.len() != n as usize {
                return Err(MatrixError::Parse {
                    line,
                    message: format!("expected {n} entries, found {}", row.len()),
                });
            }
            for v in row {
                if v >= q {
                    return Err(MatrixError::Parse {
                        line,
                        message: format!("{v} is not an element of GF({q})"),
                    });
                }
                data.push(Elem(v as u16));
            }
            count += 1;
        }
        if count != k {
            return Err(MatrixError::Parse {
                line: text.lines().count(),
                message: format!("expected {k} rows, found {count}"),
            });
        }
        Ok(Mat { field, rows: k as usize, cols: n as usize, data })
    }
}

fn parse_ints(line: usize, body: &str) -> Result<Vec<u64>, MatrixError> {
    body.split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| MatrixError::Parse { line, message: format!("bad integer `{t}`") })
        })
        .collect()
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat over {} ({}x{})", self.field, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}
