//! Finite fields GF(p^e) backed by discrete log/antilog tables.
//!
//! A field is either a prime field GF(p) or a simple extension of another
//! field (its *base*) by a monic irreducible modulus. Elements are encoded as
//! integers: an element `c_0 + c_1 y + ... + c_{m-1} y^{m-1}` of an extension
//! of degree `m` over a base of order `r` has value `sum c_i * r^i`, where `y`
//! is the residue class of `x` modulo the modulus. Since base elements are
//! themselves encoded the same way, every value is the base-`p` digit string
//! of the element's coordinates, and addition is digitwise mod `p`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use super::poly::Poly;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// A field element in the integer encoding described at module level.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a supported prime characteristic (need a prime below 128)")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field order {base}^{degree} exceeds 2^16")]
    OrderOverflow { base: u32, degree: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must be monic of degree {expected}")]
    BadModulus { expected: u32 },
    #[error("modulus {0} is reducible")]
    Reducible(String),
    #[error("modulus coefficients must come from GF({0})")]
    ModulusField(u32),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("value {value} is not an element of GF({order})")]
    OutOfRange { value: u32, order: u32 },
    #[error("GF({sub}) does not embed into GF({ext})")]
    NotSubfield { sub: u32, ext: u32 },
}

/// A finite field. Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

struct FieldData {
    p: u32,
    order: u32,
    /// Degree over `base` (1 for prime fields).
    degree: u32,
    base: Option<Field>,
    /// Monic modulus over `base`, lowest degree first. Empty for prime fields.
    modulus: Vec<Elem>,
    exp: Vec<Elem>,
    log: Vec<u32>,
    neg: Vec<Elem>,
    /// Full addition table for orders up to 256.
    add: Vec<Elem>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.order == other.0.order
                && self.0.degree == other.0.degree
                && self.0.modulus == other.0.modulus
                && self.0.base == other.0.base)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.order)?;
        if let Some(base) = &self.0.base {
            let m = Poly::new(base, self.0.modulus.clone());
            write!(f, "[{:?} / {}]", base, m)?;
        }
        Ok(())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.order)
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn checked_pow(base: u32, degree: u32) -> Result<u32, FieldError> {
    let mut acc: u64 = 1;
    for _ in 0..degree {
        acc *= base as u64;
        if acc > MAX_ORDER as u64 {
            return Err(FieldError::OrderOverflow { base, degree });
        }
    }
    Ok(acc as u32)
}

fn add_digits(p: u32, mut x: u32, mut y: u32) -> u32 {
    if p == 2 {
        return x ^ y;
    }
    let (mut out, mut place) = (0, 1);
    while x > 0 || y > 0 {
        out += ((x % p + y % p) % p) * place;
        place *= p;
        x /= p;
        y /= p;
    }
    out
}

fn neg_digits(p: u32, mut x: u32) -> u32 {
    if p == 2 {
        return x;
    }
    let (mut out, mut place) = (0, 1);
    while x > 0 {
        out += ((p - x % p) % p) * place;
        place *= p;
        x /= p;
    }
    out
}

/// Canonical moduli for GF(4), GF(8) and GF(9), lowest degree first.
fn canonical_modulus(p: u32, e: u32) -> Option<Vec<u16>> {
    match (p, e) {
        (2, 2) => Some(vec![1, 1, 1]),
        (2, 3) => Some(vec![1, 1, 0, 1]),
        (3, 2) => Some(vec![2, 2, 1]),
        _ => None,
    }
}

/// Multiplication in `base[y]/(modulus)` on encoded values, used only while
/// the tables of a new field are being built.
struct SlowMul<'a> {
    base: &'a Field,
    modulus: &'a [Elem],
}

impl SlowMul<'_> {
    fn coords(&self, mut x: u32) -> Vec<Elem> {
        let r = self.base.order();
        let m = self.modulus.len() - 1;
        let mut out = vec![Elem::ZERO; m];
        for c in out.iter_mut() {
            *c = Elem((x % r) as u16);
            x /= r;
        }
        out
    }

    fn mul(&self, x: u32, y: u32) -> u32 {
        let f = self.base;
        let m = self.modulus.len() - 1;
        let (a, b) = (self.coords(x), self.coords(y));
        let mut prod = vec![Elem::ZERO; 2 * m - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(ai, bj));
            }
        }
        // reduce by the monic modulus from the top down
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c.is_zero() {
                continue;
            }
            for (i, &mi) in self.modulus[..m].iter().enumerate() {
                let idx = top - m + i;
                prod[idx] = f.sub(prod[idx], f.mul(c, mi));
            }
            prod[top] = Elem::ZERO;
        }
        let r = f.order();
        prod[..m].iter().rev().fold(0, |acc, c| acc * r + c.0 as u32)
    }
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Field, FieldError> {
        if !is_prime(p) || p >= 128 {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self::build(p, p, 1, None, Vec::new(), |x, y| (x * y) % p))
    }

    /// GF(p^e). Without an explicit modulus, GF(4), GF(8) and GF(9) use
    /// x^2+x+1, x^3+x+1 and x^2+2x+2; other orders use the smallest monic
    /// irreducible of degree `e` over GF(p).
    ///
    /// `modulus` lists coefficients over GF(p), lowest degree first.
    pub fn new(p: u32, e: u32, modulus: Option<&[u16]>) -> Result<Field, FieldError> {
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let prime = Field::prime(p)?;
        checked_pow(p, e)?;
        if e == 1 && modulus.is_none() {
            return Ok(prime);
        }
        let modulus = match modulus {
            Some(m) => m.to_vec(),
            None => match canonical_modulus(p, e) {
                Some(m) => m,
                None => {
                    return Field::extension(&prime, e);
                }
            },
        };
        if modulus.len() != e as usize + 1 {
            return Err(FieldError::BadModulus { expected: e });
        }
        let coeffs: Vec<Elem> = modulus.iter().map(|&c| Elem(c)).collect();
        Field::extension_with(&prime, coeffs)
    }

    /// GF(q) for a prime power q, with the default modulus.
    pub fn gf(q: u32) -> Result<Field, FieldError> {
        let factors = prime_factors(q);
        if factors.len() != 1 {
            return Err(FieldError::NotPrimePower(q));
        }
        let p = factors[0];
        let mut e = 0;
        let mut r = q;
        while r > 1 {
            r /= p;
            e += 1;
        }
        Field::new(p, e, None)
    }

    /// Degree-`m` extension of `base`, using the lexicographically smallest
    /// monic irreducible of degree `m` (coefficients compared from the top
    /// degree down, in the integer encoding).
    pub fn extension(base: &Field, m: u32) -> Result<Field, FieldError> {
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        checked_pow(base.order(), m)?;
        if m == 1 {
            return Ok(base.clone());
        }
        let modulus = Poly::smallest_irreducible(base, m as usize);
        Field::extension_with(base, modulus.coeffs().to_vec())
    }

    /// Extension of `base` by an explicit monic irreducible modulus.
    pub fn extension_with(base: &Field, modulus: Vec<Elem>) -> Result<Field, FieldError> {
        let degree = modulus.len().saturating_sub(1) as u32;
        if degree == 0 || modulus.last() != Some(&Elem::ONE) {
            return Err(FieldError::BadModulus { expected: degree.max(1) });
        }
        if modulus.iter().any(|c| c.0 as u32 >= base.order()) {
            return Err(FieldError::ModulusField(base.order()));
        }
        let order = checked_pow(base.order(), degree)?;
        let poly = Poly::new(base, modulus.clone());
        if !poly.is_irreducible() {
            return Err(FieldError::Reducible(poly.to_string()));
        }
        let slow = SlowMul { base, modulus: &modulus };
        Ok(Self::build(
            base.characteristic(),
            order,
            degree,
            Some(base.clone()),
            modulus.clone(),
            |x, y| slow.mul(x, y),
        ))
    }

    fn build(
        p: u32,
        order: u32,
        degree: u32,
        base: Option<Field>,
        modulus: Vec<Elem>,
        mul: impl Fn(u32, u32) -> u32,
    ) -> Field {
        let group = order - 1;
        let pow = |mut g: u32, mut k: u32| {
            let mut acc = 1;
            while k > 0 {
                if k & 1 == 1 {
                    acc = mul(acc, g);
                }
                g = mul(g, g);
                k >>= 1;
            }
            acc
        };
        let factors = prime_factors(group);
        let generator = (1..order)
            .find(|&g| factors.iter().all(|&r| pow(g, group / r) != 1))
            .expect("irreducible modulus yields a cyclic multiplicative group");
        let mut exp = Vec::with_capacity(group as usize);
        let mut log = vec![u32::MAX; order as usize];
        let mut x = 1;
        for i in 0..group {
            exp.push(Elem(x as u16));
            log[x as usize] = i;
            x = mul(x, generator);
        }
        let neg = (0..order).map(|x| Elem(neg_digits(p, x) as u16)).collect();
        let add = if order <= 256 {
            (0..order * order)
                .map(|i| Elem(add_digits(p, i / order, i % order) as u16))
                .collect()
        } else {
            Vec::new()
        };
        Field(Arc::new(FieldData { p, order, degree, base, modulus, exp, log, neg, add }))
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// Degree over the base field (1 for prime fields).
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    /// Absolute degree `e` with `order = p^e`.
    pub fn prime_degree(&self) -> u32 {
        let mut e = 0;
        let mut r = self.0.order;
        while r > 1 {
            r /= self.0.p;
            e += 1;
        }
        e
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.base.is_none()
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    /// Modulus over the base field; `None` for prime fields.
    pub fn modulus(&self) -> Option<Poly> {
        self.0.base.as_ref().map(|b| Poly::new(b, self.0.modulus.clone()))
    }

    /// The fixed primitive element: the smallest value of multiplicative
    /// order `q - 1`.
    pub fn primitive(&self) -> Elem {
        self.0.exp[1 % self.0.exp.len()]
    }

    pub fn elem(&self, value: u32) -> Result<Elem, FieldError> {
        if value < self.0.order {
            Ok(Elem(value as u16))
        } else {
            Err(FieldError::OutOfRange { value, order: self.0.order })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.order).map(|v| Elem(v as u16))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Elem> {
        (1..self.0.order).map(|v| Elem(v as u16))
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        let d = &self.0;
        if d.p == 2 {
            Elem(x.0 ^ y.0)
        } else if !d.add.is_empty() {
            d.add[x.0 as usize * d.order as usize + y.0 as usize]
        } else {
            Elem(add_digits(d.p, x.0 as u32, y.0 as u32) as u16)
        }
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.0.neg[x.0 as usize]
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x.is_zero() || y.is_zero() {
            return Elem::ZERO;
        }
        let d = &self.0;
        let group = d.exp.len() as u32;
        let s = d.log[x.0 as usize] + d.log[y.0 as usize];
        d.exp[(if s >= group { s - group } else { s }) as usize]
    }

    pub fn inv(&self, x: Elem) -> Result<Elem, FieldError> {
        if x.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let d = &self.0;
        let group = d.exp.len() as u32;
        let l = d.log[x.0 as usize];
        Ok(d.exp[((group - l) % group) as usize])
    }

    pub fn div(&self, x: Elem, y: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^k`, with `0^0 = 1`.
    pub fn pow(&self, x: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem::ONE;
        }
        if x.is_zero() {
            return Elem::ZERO;
        }
        let group = self.0.exp.len() as u64;
        let l = self.0.log[x.0 as usize] as u64;
        self.0.exp[((l * (k % group)) % group) as usize]
    }

    /// `g^k` for the primitive element `g`; `k` is reduced mod `q - 1`.
    pub fn exp(&self, k: u64) -> Elem {
        self.0.exp[(k % self.0.exp.len() as u64) as usize]
    }

    /// Discrete log to the primitive element; `None` for zero.
    pub fn log(&self, x: Elem) -> Option<u32> {
        if x.is_zero() {
            None
        } else {
            Some(self.0.log[x.0 as usize])
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: Elem) -> Option<u32> {
        let l = self.log(x)?;
        let group = self.0.exp.len() as u32;
        Some(group / gcd(group, l))
    }

    /// Table `img` with `img[x]` the image of `x` under a fixed embedding of
    /// `sub` into `self`. Towers built over `sub` use the natural inclusion;
    /// otherwise the generator of `sub` maps to the smallest root of its
    /// (embedded) modulus.
    pub fn embedding(&self, sub: &Field) -> Result<Vec<Elem>, FieldError> {
        let err = FieldError::NotSubfield { sub: sub.order(), ext: self.order() };
        if sub == self {
            return Ok(sub.elements().collect());
        }
        if sub.characteristic() != self.characteristic()
            || !self.prime_degree().is_multiple_of(sub.prime_degree())
        {
            return Err(err);
        }
        if self.base() == Some(sub) || sub.is_prime_field() {
            return Ok(sub.elements().collect());
        }
        let sub_base = sub.base().expect("non-prime field has a base");
        let inner = self.embedding(sub_base)?;
        let modulus: Vec<Elem> = sub.0.modulus.iter().map(|c| inner[c.0 as usize]).collect();
        let image = Poly::new(self, modulus);
        let root = self.elements().find(|&r| image.eval(r).is_zero()).ok_or(err)?;
        let r = sub_base.order();
        let m = sub.degree();
        Ok(sub
            .elements()
            .map(|x| {
                let (mut v, mut acc, mut power) = (x.0 as u32, Elem::ZERO, Elem::ONE);
                for _ in 0..m {
                    acc = self.add(acc, self.mul(inner[(v % r) as usize], power));
                    power = self.mul(power, root);
                    v /= r;
                }
                acc
            })
            .collect())
    }

    /// Inverse lookup for an embedding table.
    pub(crate) fn invert_embedding(table: &[Elem]) -> HashMap<Elem, Elem> {
        table.iter().enumerate().map(|(i, &e)| (e, Elem(i as u16))).collect()
    }
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
