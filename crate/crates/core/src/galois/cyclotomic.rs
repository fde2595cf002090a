//! Cyclotomic cosets and minimal polynomials.

use std::collections::BTreeSet;

use thiserror::Error;

use super::field::{gcd, Elem, Field, FieldError};
use super::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CosetError {
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: u32, q: u32 },
    #[error("exponent {i} out of range for length {n}")]
    ExponentRange { i: u32, n: u32 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// The orbit `{i * q^j mod n}`, sorted ascending.
pub fn cyclotomic_coset(n: u32, q: u32, i: u32) -> Result<Vec<u32>, CosetError> {
    if n == 0 || gcd(n, q) != 1 {
        return Err(CosetError::NotCoprime { n, q });
    }
    if i >= n {
        return Err(CosetError::ExponentRange { i, n });
    }
    let mut orbit = BTreeSet::new();
    let mut x = i as u64;
    while orbit.insert(x as u32) {
        x = x * q as u64 % n as u64;
    }
    Ok(orbit.into_iter().collect())
}

/// All cyclotomic cosets of `q` modulo `n`, ordered by their least element.
pub fn cyclotomic_cosets(n: u32, q: u32) -> Result<Vec<Vec<u32>>, CosetError> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for i in 0..n {
        if !seen[i as usize] {
            let coset = cyclotomic_coset(n, q, i)?;
            for &j in &coset {
                seen[j as usize] = true;
            }
            out.push(coset);
        }
    }
    Ok(out)
}

/// Multiplicative order of `q` modulo `n` (requires `gcd(n, q) = 1`).
pub fn multiplicative_order(q: u32, n: u32) -> Result<u32, CosetError> {
    if n == 0 || gcd(n, q) != 1 {
        return Err(CosetError::NotCoprime { n, q });
    }
    if n == 1 {
        return Ok(1);
    }
    let mut x = q as u64 % n as u64;
    let mut m = 1;
    while x != 1 {
        x = x * q as u64 % n as u64;
        m += 1;
    }
    Ok(m)
}

/// Minimal polynomial over `base` of `g^i`, where `g` is the primitive
/// element of `ext`.
pub fn minimal_polynomial(base: &Field, ext: &Field, i: u32) -> Result<Poly, CosetError> {
    let embed = ext.embedding(base)?;
    let group = ext.order() - 1;
    let coset = cyclotomic_coset(group, base.order(), i % group)?;
    let mut prod = Poly::one(ext);
    for j in coset {
        let root = ext.exp(j as u64);
        prod = prod.mul(&Poly::new(ext, vec![ext.neg(root), Elem::ONE]));
    }
    let back = Field::invert_embedding(&embed);
    let not_sub = FieldError::NotSubfield { sub: base.order(), ext: ext.order() };
    let coeffs = prod
        .coeffs()
        .iter()
        .map(|c| back.get(c).copied().ok_or(not_sub.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::new(base, coeffs))
}
