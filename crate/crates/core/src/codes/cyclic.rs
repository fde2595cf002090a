//! Cyclic and BCH codes.

use crate::galois::{
    cyclotomic_coset, minimal_polynomial, multiplicative_order, CosetError, Elem, Field, Poly,
};
use crate::matrix::Mat;

use super::{CodeError, DistanceInfo, LinearCode};

/// The cyclic code of length `n` generated by `g`, which must divide
/// `x^n - 1`. A non-monic `g` is normalized first.
pub fn cyclic_code(field: &Field, n: usize, g: &Poly) -> Result<LinearCode, CodeError> {
    if n == 0 {
        return Err(CodeError::EmptyGenerator);
    }
    if g.field() != field {
        return Err(CodeError::PolyField(g.field().to_string(), field.to_string()));
    }
    let Some(deg) = g.degree() else {
        return Err(CodeError::ZeroPolynomial);
    };
    let g = g.monic();
    if deg > n || !g.divides(&Poly::x_n_minus_one(field, n))? {
        return Err(CodeError::NotDivisor { g: g.to_string(), n });
    }
    let k = n - deg;
    let mut rows = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = vec![Elem::ZERO; n];
        row[i..=i + deg].copy_from_slice(g.coeffs());
        rows.push(row);
    }
    let generator = if k == 0 { Mat::zeros(field, 0, n) } else { Mat::from_rows(field, &rows)? };
    Ok(LinearCode { generator, distance: DistanceInfo::Unknown })
}

/// Generator polynomial of the BCH code with zeros `beta^b, ..., beta^(b+delta-2)`,
/// where `beta` is `g^((Q-1)/n)` for the primitive element `g` of the
/// degree-`ord_n(q)` extension of `field`.
pub fn bch_generator(field: &Field, n: usize, delta: usize, b: usize) -> Result<Poly, CodeError> {
    if delta < 2 || delta > n {
        return Err(CodeError::DesignedDistance { delta, n });
    }
    let zeros: Vec<usize> = (b..b + delta - 1).collect();
    generator_from_zeros(field, n, &zeros)
}

/// The smallest generator polynomial vanishing at `beta^j` for every `j` in
/// `zeros` (taken mod `n`), i.e. the product of the minimal polynomials of
/// the cyclotomic cosets they meet.
pub fn generator_from_zeros(field: &Field, n: usize, zeros: &[usize]) -> Result<Poly, CodeError> {
    let q = field.order();
    let n32 = u32::try_from(n).map_err(|_| CosetError::NotCoprime { n: u32::MAX, q })?;
    let m = multiplicative_order(q, n32)?;
    let ext = Field::extension(field, m)?;
    let step = (ext.order() - 1) / n32;
    let mut covered = vec![false; n];
    let mut g = Poly::one(field);
    for &j in zeros {
        let r = j % n;
        if covered[r] {
            continue;
        }
        for c in cyclotomic_coset(n32, q, r as u32)? {
            covered[c as usize] = true;
        }
        g = g.mul(&minimal_polynomial(field, &ext, r as u32 * step)?);
    }
    Ok(g)
}

/// The BCH code of length `n`, designed distance `delta` and first
/// consecutive zero `b`.
pub fn bch_code(field: &Field, n: usize, delta: usize, b: usize) -> Result<LinearCode, CodeError> {
    let g = bch_generator(field, n, delta, b)?;
    let mut code = cyclic_code(field, n, &g)?;
    if code.k() > 0 {
        code.distance = DistanceInfo::between(delta, code.singleton());
    }
    Ok(code)
}
