//! Bit-packed codeword vectors.
//!
//! Each element is split into its base-p digits, one digit plane per
//! position of the extension degree. For p = 2 a plane is a bitset and
//! addition is XOR. For odd p every coordinate gets one byte lane and the
//! lanes are added modulo p in parallel.

use crate::galois::{Elem, Field};

const LANE_HIGH: u64 = 0x8080_8080_8080_8080;
const LANE_LOW7: u64 = 0x7f7f_7f7f_7f7f_7f7f;
const LANE_ONE: u64 = 0x0101_0101_0101_0101;

#[derive(Clone, Debug)]
pub(crate) struct Layout {
    p: u32,
    planes: usize,
    words: usize,
    n: usize,
    /// `128 - p` in every byte lane (odd p only)
    lanes_bias: u64,
}

impl Layout {
    pub(crate) fn new(field: &Field, n: usize) -> Layout {
        let p = field.characteristic();
        let planes = field.prime_degree() as usize;
        let per_word = if p == 2 { 64 } else { 8 };
        assert!(p < 128, "byte lanes need p < 128");
        Layout {
            p,
            planes,
            words: n.div_ceil(per_word).max(1),
            n,
            lanes_bias: LANE_ONE * (128 - p as u64),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.planes * self.words
    }

    pub(crate) fn zero(&self) -> Vec<u64> {
        vec![0; self.len()]
    }

    fn slot(&self, i: usize) -> (usize, u32) {
        if self.p == 2 {
            (i / 64, (i % 64) as u32)
        } else {
            (i / 8, (i % 8) as u32 * 8)
        }
    }

    pub(crate) fn pack(&self, v: &[Elem]) -> Vec<u64> {
        debug_assert_eq!(v.len(), self.n);
        let mut out = self.zero();
        for (i, x) in v.iter().enumerate() {
            let (w, shift) = self.slot(i);
            let mut value = x.value() as u64;
            for plane in 0..self.planes {
                let digit = value % self.p as u64;
                value /= self.p as u64;
                out[plane * self.words + w] |= digit << shift;
            }
        }
        out
    }

    pub(crate) fn unpack(&self, v: &[u64]) -> Vec<Elem> {
        let mask = if self.p == 2 { 1 } else { 0xff };
        (0..self.n)
            .map(|i| {
                let (w, shift) = self.slot(i);
                let mut value = 0u64;
                for plane in (0..self.planes).rev() {
                    value = value * self.p as u64 + ((v[plane * self.words + w] >> shift) & mask);
                }
                Elem(value as u16)
            })
            .collect()
    }

    #[inline(always)]
    fn lane_add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        let wrap = ((s + self.lanes_bias) & LANE_HIGH) >> 7;
        s - wrap * self.p as u64
    }

    #[inline]
    pub(crate) fn add_assign(&self, dst: &mut [u64], src: &[u64]) {
        if self.p == 2 {
            for (d, s) in dst.iter_mut().zip(src) {
                *d ^= s;
            }
        } else {
            for (d, &s) in dst.iter_mut().zip(src) {
                *d = self.lane_add(*d, s);
            }
        }
    }

    #[inline]
    pub(crate) fn add_into(&self, dst: &mut [u64], a: &[u64], b: &[u64]) {
        if self.p == 2 {
            for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
                *d = x ^ y;
            }
        } else {
            for ((d, &x), &y) in dst.iter_mut().zip(a).zip(b) {
                *d = self.lane_add(x, y);
            }
        }
    }

    #[inline]
    pub(crate) fn weight(&self, v: &[u64]) -> u32 {
        let mut total = 0;
        for w in 0..self.words {
            let mut any = 0;
            for plane in 0..self.planes {
                any |= v[plane * self.words + w];
            }
            total += self.nonzero_count(any);
        }
        total
    }

    /// Weight of `a + b` without storing the sum.
    #[inline]
    pub(crate) fn weight_of_sum(&self, a: &[u64], b: &[u64]) -> u32 {
        let mut total = 0;
        for w in 0..self.words {
            let mut any = 0;
            for plane in 0..self.planes {
                let i = plane * self.words + w;
                any |= if self.p == 2 { a[i] ^ b[i] } else { self.lane_add(a[i], b[i]) };
            }
            total += self.nonzero_count(any);
        }
        total
    }

    #[inline(always)]
    fn nonzero_count(&self, any: u64) -> u32 {
        if self.p == 2 {
            any.count_ones()
        } else {
            ((any + LANE_LOW7) & LANE_HIGH).count_ones()
        }
    }

    /// Packed `s * v` for every nonzero scalar `s`, indexed by `s - 1`.
    pub(crate) fn multiples(&self, field: &Field, v: &[Elem]) -> Vec<Vec<u64>> {
        field
            .nonzero()
            .map(|s| self.pack(&v.iter().map(|&x| field.mul(s, x)).collect::<Vec<_>>()))
            .collect()
    }

    /// Minimum weight of `prev + c` over the consecutive vectors `c` in
    /// `block`, with the index of the first vector attaining it.
    pub(crate) fn scan_min(&self, prev: &[u64], block: &[u64]) -> (u32, usize) {
        macro_rules! specialized {
            ($(($planes:literal, $words:literal)),*) => {
                match (self.planes, self.words) {
                    $(($planes, $words) => {
                        if self.p == 2 {
                            scan_binary::<$planes, $words>(prev, block)
                        } else {
                            scan_odd::<$planes, $words>(self.p as u64, self.lanes_bias, prev, block)
                        }
                    })*
                    _ => self.scan_generic(prev, block),
                }
            };
        }
        specialized!(
            (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9),
            (1, 10), (1, 11), (1, 12), (1, 13), (1, 14), (1, 15), (1, 16), (1, 17),
            (2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (2, 9),
            (2, 10), (2, 11), (2, 12), (2, 13), (2, 14), (2, 15), (2, 16), (2, 17),
            (3, 1), (3, 2), (3, 3), (3, 4)
        )
    }

    fn scan_generic(&self, prev: &[u64], block: &[u64]) -> (u32, usize) {
        let mut best = (u32::MAX, 0);
        for (i, c) in block.chunks_exact(self.len()).enumerate() {
            let wt = self.weight_of_sum(prev, c);
            if wt < best.0 {
                best = (wt, i);
            }
        }
        best
    }
}

#[inline(always)]
fn scan_binary<const P: usize, const W: usize>(prev: &[u64], block: &[u64]) -> (u32, usize) {
    let prev = &prev[..P * W];
    let mut best = (u32::MAX, 0);
    for (i, c) in block.chunks_exact(P * W).enumerate() {
        let mut total = 0;
        for w in 0..W {
            let mut any = 0;
            for p in 0..P {
                any |= prev[p * W + w] ^ c[p * W + w];
            }
            total += any.count_ones();
        }
        if total < best.0 {
            best = (total, i);
        }
    }
    best
}

#[inline(always)]
fn scan_odd<const P: usize, const W: usize>(
    p: u64,
    bias: u64,
    prev: &[u64],
    block: &[u64],
) -> (u32, usize) {
    let prev = &prev[..P * W];
    let mut best = (u32::MAX, 0);
    for (i, c) in block.chunks_exact(P * W).enumerate() {
        let mut total = 0;
        for w in 0..W {
            let mut any = 0;
            for j in 0..P {
                let s = prev[j * W + w] + c[j * W + w];
                let wrap = ((s + bias) & LANE_HIGH) >> 7;
                any |= s - wrap * p;
            }
            total += ((any + LANE_LOW7) & LANE_HIGH).count_ones();
        }
        if total < best.0 {
            best = (total, i);
        }
    }
    best
}

/// Packed multiples of a list of rows, stored back to back: entry
/// `(row, s)` holds `s * row` for the `s`-th nonzero scalar.
#[derive(Clone, Debug)]
pub(crate) struct MultipleTable {
    len: usize,
    per_row: usize,
    data: Vec<u64>,
}

impl MultipleTable {
    pub(crate) fn new(layout: &Layout, field: &Field, rows: impl IntoIterator<Item = Vec<Elem>>) -> MultipleTable {
        let mut data = Vec::new();
        for row in rows {
            for m in layout.multiples(field, &row) {
                data.extend_from_slice(&m);
            }
        }
        MultipleTable { len: layout.len(), per_row: field.order() as usize - 1, data }
    }

    pub(crate) fn rows(&self) -> usize {
        self.data.len() / (self.len * self.per_row)
    }

    pub(crate) fn per_row(&self) -> usize {
        self.per_row
    }

    /// `s * row` for the scalar with index `s` (value `s + 1`).
    pub(crate) fn entry(&self, row: usize, s: usize) -> &[u64] {
        let at = (row * self.per_row + s) * self.len;
        &self.data[at..at + self.len]
    }

    /// All entries of rows `start..`, back to back.
    pub(crate) fn rows_from(&self, start: usize) -> &[u64] {
        &self.data[start * self.per_row * self.len..]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(q: u32, n: usize) {
        let f = Field::gf(q).unwrap();
        let layout = Layout::new(&f, n);
        let a: Vec<Elem> = (0..n).map(|i| Elem(((i * 7 + 3) % q as usize) as u16)).collect();
        let b: Vec<Elem> = (0..n).map(|i| Elem(((i * i + 1) % q as usize) as u16)).collect();
        let (pa, pb) = (layout.pack(&a), layout.pack(&b));
        assert_eq!(layout.unpack(&pa), a);
        let sum: Vec<Elem> = a.iter().zip(&b).map(|(&x, &y)| f.add(x, y)).collect();
        let mut ps = pa.clone();
        layout.add_assign(&mut ps, &pb);
        assert_eq!(layout.unpack(&ps), sum, "q={q} n={n}");
        let weight = sum.iter().filter(|x| !x.is_zero()).count() as u32;
        assert_eq!(layout.weight(&ps), weight);
        assert_eq!(layout.weight_of_sum(&pa, &pb), weight);
        let mut into = layout.zero();
        layout.add_into(&mut into, &pa, &pb);
        assert_eq!(into, ps);
    }

    #[test]
    fn matches_field_arithmetic() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 121] {
            for n in [1, 7, 8, 9, 63, 64, 65, 130] {
                check(q, n);
            }
        }
    }

    #[test]
    fn scan_matches_weights() {
        for q in [2, 3, 4, 8, 9, 27, 25, 64] {
            let f = Field::gf(q).unwrap();
            for n in [5, 40, 63, 130, 200] {
                let layout = Layout::new(&f, n);
                let rows: Vec<Vec<Elem>> = (0..6)
                    .map(|r| (0..n).map(|i| Elem(((i * (r + 2) + r * r) % q as usize) as u16)).collect())
                    .collect();
                let table = MultipleTable::new(&layout, &f, rows.clone());
                assert_eq!(table.rows(), 6);
                let prev = layout.pack(&rows[0]);
                for start in 0..6 {
                    let (wt, i) = layout.scan_min(&prev, table.rows_from(start));
                    let expect = (0..(6 - start) * table.per_row())
                        .map(|j| layout.weight_of_sum(&prev, table.entry(start + j / table.per_row(), j % table.per_row())))
                        .enumerate()
                        .min_by_key(|&(j, w)| (w, j))
                        .unwrap();
                    assert_eq!((wt, i), (expect.1, expect.0), "q={q} n={n}");
                }
            }
        }
    }

    #[test]
    fn multiples_of_a_vector() {
        let f = Field::gf(9).unwrap();
        let layout = Layout::new(&f, 5);
        let v = [Elem(1), Elem(0), Elem(4), Elem(8), Elem(3)];
        let m = layout.multiples(&f, &v);
        assert_eq!(m.len(), 8);
        assert_eq!(layout.unpack(&m[0]), v);
        for (s, packed) in f.nonzero().zip(&m) {
            let expect: Vec<Elem> = v.iter().map(|&x| f.mul(s, x)).collect();
            assert_eq!(layout.unpack(packed), expect);
        }
    }
}
