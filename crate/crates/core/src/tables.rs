//! Bounds tables: best known lower and upper bounds on the minimum distance
//! of `[n,k]` codes over GF(q), read from plain-text snapshots.
//!
//! One entry per line, `q n k d_low d_high`, with `-` for an unknown upper
//! bound. `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

/// Largest length (and dimension) tabulated for each field order.
pub fn length_limit(q: u32) -> Option<usize> {
    match q {
        2 => Some(256),
        3 => Some(243),
        4 => Some(256),
        5 => Some(130),
        7 => Some(100),
        8 | 9 => Some(130),
        _ => None,
    }
}

/// Field orders with a length limit, ascending.
pub const FIELD_ORDERS: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub d_low: usize,
    pub d_high: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundsTable {
    entries: BTreeMap<(u32, usize, usize), Bounds>,
}

impl BoundsTable {
    pub fn new() -> BoundsTable {
        BoundsTable::default()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<BoundsTable, TableError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|source| TableError::Io { path: path.display().to_string(), source })?;
        BoundsTable::parse(&text)
    }

    pub fn parse(text: &str) -> Result<BoundsTable, TableError> {
        let mut table = BoundsTable::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let err = |message: String| TableError::Line { line, message };
            let fields: Vec<&str> = body.split_whitespace().collect();
            let [q, n, k, lo, hi] = fields[..] else {
                return Err(err(format!("expected `q n k d_low d_high`, found {} fields", fields.len())));
            };
            let int = |s: &str| s.parse::<usize>().map_err(|_| err(format!("bad integer `{s}`")));
            let q = int(q)? as u32;
            let (n, k, d_low) = (int(n)?, int(k)?, int(lo)?);
            let d_high = if hi == "-" { None } else { Some(int(hi)?) };
            table.insert(q, n, k, Bounds { d_low, d_high }).map_err(err)?;
        }
        Ok(table)
    }

    /// Adds an entry after checking it against the table invariants.
    pub fn insert(&mut self, q: u32, n: usize, k: usize, b: Bounds) -> Result<(), String> {
        let limit = length_limit(q).ok_or_else(|| format!("no table for q = {q}"))?;
        if k < 1 || k > n || n > limit {
            return Err(format!("need 1 <= k <= n <= {limit}, got n = {n}, k = {k}"));
        }
        let singleton = n - k + 1;
        if b.d_low < 1 || b.d_low > singleton {
            return Err(format!("d_low = {} outside 1..={singleton}", b.d_low));
        }
        if let Some(hi) = b.d_high {
            if hi < b.d_low || hi > singleton {
                return Err(format!("d_high = {hi} outside {}..={singleton}", b.d_low));
            }
        }
        if self.entries.insert((q, n, k), b).is_some() {
            return Err(format!("duplicate entry ({q}, {n}, {k})"));
        }
        Ok(())
    }

    pub fn query(&self, q: u32, n: usize, k: usize) -> Option<Bounds> {
        self.entries.get(&(q, n, k)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in `(q, n, k)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((u32, usize, usize), Bounds)> + '_ {
        self.entries.iter().map(|(&key, &b)| (key, b))
    }

    /// Entries of length `n` over GF(q), by increasing `k`.
    pub fn row(&self, q: u32, n: usize) -> impl Iterator<Item = (usize, Bounds)> + '_ {
        self.entries.range((q, n, 0)..=(q, n, usize::MAX)).map(|(&(_, _, k), &b)| (k, b))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for ((q, n, k), b) in self.iter() {
            let hi = b.d_high.map_or("-".to_string(), |h| h.to_string());
            let _ = writeln!(s, "{q} {n} {k} {} {hi}", b.d_low);
        }
        s
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), TableError> {
        let path = path.as_ref();
        std::fs::write(path, self.to_text())
            .map_err(|source| TableError::Io { path: path.display().to_string(), source })
    }
}
