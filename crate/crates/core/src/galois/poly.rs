//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use thiserror::Error;

use super::field::{Elem, Field};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomials live over different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("column {column}: {message}")]
    Parse { column: usize, message: String },
}

/// Coefficients are stored lowest degree first, with no trailing zeros; the
/// zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last() == Some(&Elem::ZERO) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::new(field, vec![Elem::ONE])
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(field: &Field, c: Elem, k: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; k + 1];
        coeffs[k] = c;
        Poly::new(field, coeffs)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(field: &Field, n: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; n + 1];
        coeffs[0] = field.neg(Elem::ONE);
        coeffs[n] = Elem::ONE;
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Elem::ONE
    }

    /// Scales to a monic polynomial; the zero polynomial is returned as is.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("leading coefficient is nonzero");
        self.scale(inv)
    }

    fn check(&self, other: &Poly) {
        assert!(
            self.field == other.field,
            "{}",
            PolyError::FieldMismatch(self.field.to_string(), other.field.to_string())
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Poly::new(f, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Poly::new(f, coeffs)
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Elem::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::new(&self.field, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.check(divisor);
        let f = &self.field;
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[top - dd] = c;
            for (i, &di) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                rem[idx] = f.sub(rem[idx], f.mul(c, di));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn divides(&self, other: &Poly) -> Result<bool, PolyError> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check(other);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let g = self.gcd(other);
        let (q, _) = self.mul(other).divmod(&g).expect("gcd is nonzero");
        q.monic()
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Irreducibility by trial division against every monic polynomial of
    /// degree at most half the degree.
    pub fn is_irreducible(&self) -> bool {
        let Some(deg) = self.degree() else { return false };
        if deg == 0 {
            return false;
        }
        for d in 1..=deg / 2 {
            for candidate in monic_of_degree(&self.field, d) {
                if self.rem(&candidate).expect("monic").is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// The smallest monic irreducible of degree `m`, comparing coefficient
    /// vectors from the top degree down.
    pub fn smallest_irreducible(field: &Field, m: usize) -> Poly {
        monic_of_degree(field, m)
            .find(|p| p.is_irreducible())
            .expect("irreducible polynomials exist in every degree")
    }

    /// Replaces every coefficient through `map`, landing in `target`.
    pub fn map_coeffs(&self, target: &Field, map: impl Fn(Elem) -> Elem) -> Poly {
        Poly::new(target, self.coeffs.iter().map(|&c| map(c)).collect())
    }
}

/// All monic polynomials of degree `d`, in increasing order of the integer
/// whose base-`q` digits are the coefficients (constant term least
/// significant).
pub(crate) fn monic_of_degree(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.order() as u64;
    let count = q.pow(d as u32);
    (0..count).map(move |mut v| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(Elem((v % q) as u16));
            v /= q;
        }
        coeffs.push(Elem::ONE);
        Poly::new(field, coeffs)
    })
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.field, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: &Field, s: &str) -> Poly {
        Poly::parse(f, s).unwrap()
    }

    #[test]
    fn divmod_gf2() {
        let f = Field::gf(2).unwrap();
        let (q, r) = p(&f, "x^2+1").divmod(&p(&f, "x+1")).unwrap();
        assert_eq!(q, p(&f, "x+1"));
        assert!(r.is_zero());
    }

    #[test]
    fn divmod_identity_holds() {
        let f = Field::gf(9).unwrap();
        let n = p(&f, "a^3*x^7+x^5+a*x^2+2");
        let d = p(&f, "a*x^3+x+a^5");
        let (q, r) = n.divmod(&d).unwrap();
        assert!(r.degree().unwrap_or(0) < 3);
        assert_eq!(q.mul(&d).add(&r), n);
    }

    #[test]
    fn division_by_zero() {
        let f = Field::gf(3).unwrap();
        assert_eq!(p(&f, "x").divmod(&Poly::zero(&f)).unwrap_err(), PolyError::DivisionByZero);
    }

    #[test]
    fn gcd_gf3() {
        let f = Field::gf(3).unwrap();
        // x^2 - 1 = x^2 + 2, x - 1 = x + 2
        assert_eq!(p(&f, "x^2+2").gcd(&p(&f, "x+2")), p(&f, "x+2"));
        assert_eq!(p(&f, "2*x+1").gcd(&Poly::zero(&f)), p(&f, "x+2"));
    }

    #[test]
    fn lcm_of_coprime_is_product() {
        let f = Field::gf(2).unwrap();
        let (a, b) = (p(&f, "x^3+x+1"), p(&f, "x^3+x^2+1"));
        assert_eq!(a.lcm(&b), a.mul(&b));
        assert_eq!(a.lcm(&a), a);
    }

    #[test]
    fn irreducibility() {
        let f = Field::gf(2).unwrap();
        assert!(p(&f, "x^3+x+1").is_irreducible());
        assert!(!p(&f, "x^3+1").is_irreducible());
        assert!(!p(&f, "x^4+x^2+1").is_irreducible());
        assert_eq!(Poly::smallest_irreducible(&f, 3), p(&f, "x^3+x+1"));
        let f3 = Field::gf(3).unwrap();
        assert_eq!(Poly::smallest_irreducible(&f3, 2), p(&f3, "x^2+1"));
        let f4 = Field::gf(4).unwrap();
        assert_eq!(Poly::smallest_irreducible(&f4, 3), p(&f4, "x^3+a"));
    }

    #[test]
    fn eval_horner() {
        let f = Field::gf(4).unwrap();
        let g = p(&f, "x^2+x+1");
        assert!(g.eval(Elem(2)).is_zero());
        assert!(g.eval(Elem(3)).is_zero());
        assert_eq!(g.eval(Elem(1)), Elem(1));
    }
}
