//! Plotkin scans over a bounds table.
//!
//! For two table entries `[n,k1,d1]` and `[n,k2,d2]` the Plotkin sum is a
//! `[2n, k1+k2, min(2 d1, d2)]` code. A scan compares that guaranteed
//! distance with the table entry at length `2n`; shortening the sum by `s`
//! positions gives `[2n-s, k1+k2-s, >= min(2 d1, d2)]`, compared the same way.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::tables::{length_limit, BoundsTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    Improves,
    Matches,
    Below,
    NoTableEntry,
}

impl Class {
    fn of(d: usize, d_low: usize, d_high: Option<usize>) -> Class {
        if d == d_low {
            Class::Matches
        } else if d > d_low && d_high.is_none_or(|h| d <= h) {
            Class::Improves
        } else {
            Class::Below
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Improves => "Improves",
            Class::Matches => "Matches",
            Class::Below => "Below",
            Class::NoTableEntry => "NoTableEntry",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub q: u32,
    /// Ingredient length.
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    /// Positions removed by shortening the sum (0 for the sum itself).
    pub shortened: usize,
    pub plotkin_d: usize,
    pub table_d_low: Option<usize>,
    pub table_d_high: Option<usize>,
    pub class: Class,
}

impl Finding {
    pub fn length(&self) -> usize {
        2 * self.n - self.shortened
    }

    pub fn dimension(&self) -> usize {
        self.k1 + self.k2 - self.shortened
    }

    /// `(q, length, dimension)` of the resulting code.
    pub fn cell(&self) -> (u32, usize, usize) {
        (self.q, self.length(), self.dimension())
    }
}

pub const TSV_HEADER: &str = "q\t2n\tk\tplotkin_d\ttable_d_low\ttable_d_high\tclass\tn\tk1\tk2\tshortened";

impl Finding {
    pub fn to_tsv(&self) -> String {
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.q,
            self.length(),
            self.dimension(),
            self.plotkin_d,
            opt(self.table_d_low),
            opt(self.table_d_high),
            self.class,
            self.n,
            self.k1,
            self.k2,
            self.shortened
        )
    }
}

pub fn findings_tsv(findings: &[Finding]) -> String {
    let mut s = String::from(TSV_HEADER);
    s.push('\n');
    for f in findings {
        s.push_str(&f.to_tsv());
        s.push('\n');
    }
    s
}

/// Default ingredient lengths: the first half of the table.
pub fn default_range(q: u32) -> RangeInclusive<usize> {
    1..=length_limit(q).unwrap_or(0) / 2
}

/// Every ordered pair of entries at each ingredient length in `range`
/// (default: [`default_range`]), sorted by `(n, k1, k2)`.
pub fn plotkin_scan(table: &BoundsTable, q: u32, range: Option<RangeInclusive<usize>>) -> Vec<Finding> {
    let Some(limit) = length_limit(q) else {
        return Vec::new();
    };
    let range = range.unwrap_or_else(|| default_range(q));
    let lengths: Vec<usize> = range.filter(|&n| n >= 1 && 2 * n <= limit).collect();
    lengths
        .into_par_iter()
        .flat_map_iter(|n| {
            let row: Vec<(usize, usize)> = table.row(q, n).map(|(k, b)| (k, b.d_low)).collect();
            let mut out = Vec::new();
            for &(k1, d1) in &row {
                for &(k2, d2) in &row {
                    let plotkin_d = (2 * d1).min(d2);
                    let (table_d_low, table_d_high, class) = match table.query(q, 2 * n, k1 + k2) {
                        Some(b) => (Some(b.d_low), b.d_high, Class::of(plotkin_d, b.d_low, b.d_high)),
                        None => (None, None, Class::NoTableEntry),
                    };
                    out.push(Finding { q, n, k1, k2, shortened: 0, plotkin_d, table_d_low, table_d_high, class });
                }
            }
            out
        })
        .collect()
}

/// Shortenings of each finding that land on a table entry. Shortening
/// keeps the guaranteed distance, so these are classified the same way.
pub fn shortenings(table: &BoundsTable, findings: &[Finding]) -> Vec<Finding> {
    let mut out = Vec::new();
    for f in findings.iter().filter(|f| f.shortened == 0) {
        for s in 1..f.k1 + f.k2 {
            let (n, k) = (2 * f.n - s, f.k1 + f.k2 - s);
            if let Some(b) = table.query(f.q, n, k) {
                out.push(Finding {
                    shortened: s,
                    table_d_low: Some(b.d_low),
                    table_d_high: b.d_high,
                    class: Class::of(f.plotkin_d, b.d_low, b.d_high),
                    ..f.clone()
                });
            }
        }
    }
    out
}

/// The best classification reached at each `(q, length, dimension)` cell,
/// ignoring cells without a table entry. Earlier findings win ties.
pub fn best_by_cell(findings: &[Finding]) -> BTreeMap<(u32, usize, usize), Finding> {
    let mut out: BTreeMap<(u32, usize, usize), Finding> = BTreeMap::new();
    for f in findings.iter().filter(|f| f.class != Class::NoTableEntry) {
        match out.get(&f.cell()) {
            Some(best) if best.class <= f.class => {}
            _ => {
                out.insert(f.cell(), f.clone());
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stats {
    pub q: u32,
    /// Cells `(n, k)` with even `n` and `1 <= k <= n <= limit`.
    pub total_even: u64,
    /// Those cells whose table `d_low` some Plotkin sum of table entries
    /// at length `n/2` reaches.
    pub achievable: u64,
}

impl Stats {
    /// Percentage to two decimals, rounded half up.
    pub fn percent(&self) -> String {
        if self.total_even == 0 {
            return "0.00".to_string();
        }
        let hundredths = (self.achievable * 20_000 + self.total_even) / (2 * self.total_even);
        format!("{}.{:02}", hundredths / 100, hundredths % 100)
    }
}

pub fn stats(table: &BoundsTable, q: u32) -> Stats {
    let limit = length_limit(q).unwrap_or(0);
    let half = limit / 2;
    let total_even = (half * (half + 1)) as u64;
    let achievable = (1..=half)
        .into_par_iter()
        .map(|m| {
            let row: Vec<(usize, usize)> = table.row(q, m).map(|(k, b)| (k, b.d_low)).collect();
            // best guaranteed Plotkin distance per total dimension
            let mut best = vec![0usize; 2 * m + 1];
            for &(k1, d1) in &row {
                for &(k2, d2) in &row {
                    let d = (2 * d1).min(d2);
                    best[k1 + k2] = best[k1 + k2].max(d);
                }
            }
            table.row(q, 2 * m).filter(|&(k, b)| best[k] >= b.d_low).count() as u64
        })
        .sum();
    Stats { q, total_even, achievable }
}
