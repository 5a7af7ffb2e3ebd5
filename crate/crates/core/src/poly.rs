//! Dense univariate polynomials over a [`FieldCtx`].

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};

/// A polynomial in canonical form: constant term first, no trailing zero
/// coefficients. The zero polynomial has no coefficients.
#[derive(Clone, Debug)]
pub struct Poly<'f> {
    field: &'f FieldCtx,
    coeffs: Vec<FieldElem>,
}

impl PartialEq for Poly<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Poly<'_> {}

impl<'f> Poly<'f> {
    pub fn from_coeffs(field: &'f FieldCtx, coeffs: Vec<FieldElem>) -> Result<Self> {
        if !coeffs.iter().all(|c| field.contains(c)) {
            return Err(Error::CtxMismatch);
        }
        let mut p = Poly { field, coeffs };
        p.normalize();
        Ok(p)
    }

    pub fn zero(field: &'f FieldCtx) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: &'f FieldCtx, c: FieldElem) -> Self {
        Self::monomial(field, c, 0)
    }

    /// `c * X^degree`.
    pub fn monomial(field: &'f FieldCtx, c: FieldElem, degree: usize) -> Self {
        let mut coeffs = alloc::vec![field.zero(); degree + 1];
        coeffs[degree] = c;
        let mut p = Poly { field, coeffs };
        p.normalize();
        p
    }

    /// `X - r`.
    pub fn linear_root(field: &'f FieldCtx, r: &FieldElem) -> Self {
        Poly {
            field,
            coeffs: alloc::vec![field.neg(r), field.one()],
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(FieldElem::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &'f FieldCtx {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Coefficient of `X^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs
            .get(i)
            .copied()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn same_field(&self, other: &Poly<'_>) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::CtxMismatch)
        }
    }

    pub fn eval(&self, x: &FieldElem) -> Result<FieldElem> {
        if !self.field.contains(x) {
            return Err(Error::CtxMismatch);
        }
        Ok(self.eval_unchecked(x))
    }

    /// Horner evaluation, for callers that already know `x` is in the field.
    pub(crate) fn eval_unchecked(&self, x: &FieldElem) -> FieldElem {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn add(&self, other: &Poly<'_>) -> Result<Poly<'f>> {
        self.same_field(other)?;
        let f = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        let mut p = Poly { field: f, coeffs };
        p.normalize();
        Ok(p)
    }

    pub fn neg(&self) -> Poly<'f> {
        Poly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly<'_>) -> Result<Poly<'f>> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElem) -> Poly<'f> {
        let mut p = Poly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|x| self.field.mul(x, c)).collect(),
        };
        p.normalize();
        p
    }

    pub fn mul(&self, other: &Poly<'_>) -> Result<Poly<'f>> {
        self.same_field(other)?;
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(f));
        }
        let mut coeffs = alloc::vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(&coeffs[i + j], &f.mul(a, b));
            }
        }
        let mut p = Poly { field: f, coeffs };
        p.normalize();
        Ok(p)
    }

    pub fn pow(&self, mut e: u32) -> Poly<'f> {
        let mut acc = Poly::constant(self.field, self.field.one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    /// Returns `(quotient, remainder)` with `deg(remainder) < deg(divisor)`.
    pub fn divmod(&self, divisor: &Poly<'_>) -> Result<(Poly<'f>, Poly<'f>)> {
        self.same_field(divisor)?;
        let f = self.field;
        let dlen = divisor.coeffs.len();
        let lead_inv = f.inv(divisor.coeffs.last().ok_or(Error::DivisionByZero)?)?;
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = alloc::vec![f.zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dlen - 1], &lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k] = c;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = f.sub(&rem[k + i], &f.mul(&c, d));
            }
        }
        let mut quot = Poly {
            field: f,
            coeffs: quot,
        };
        let mut rem = Poly {
            field: f,
            coeffs: rem,
        };
        quot.normalize();
        rem.normalize();
        Ok((quot, rem))
    }

    /// Division by `X - r` when `r` is a root, by synthetic division.
    fn deflate(&self, r: &FieldElem) -> Option<Poly<'f>> {
        let f = self.field;
        let n = self.coeffs.len();
        if n < 2 {
            return None;
        }
        let mut quot = alloc::vec![f.zero(); n - 1];
        let mut carry = f.zero();
        for k in (1..n).rev() {
            carry = f.add(&self.coeffs[k], &f.mul(&carry, r));
            quot[k - 1] = carry;
        }
        let rem = f.add(&self.coeffs[0], &f.mul(&carry, r));
        rem.is_zero().then_some(Poly {
            field: f,
            coeffs: quot,
        })
    }

    /// `P(X + c)`.
    pub fn shift(&self, c: &FieldElem) -> Poly<'f> {
        let f = self.field;
        let step = Poly {
            field: f,
            coeffs: alloc::vec![*c, f.one()],
        };
        self.coeffs.iter().rev().fold(Poly::zero(f), |acc, a| {
            acc.mul(&step)
                .and_then(|m| m.add(&Poly::constant(f, *a)))
                .expect("same field")
        })
    }

    /// `X^d P(1/X)` for `d >= deg(P)`.
    pub fn reciprocal(&self, d: usize) -> Result<Poly<'f>> {
        if self.degree().is_some_and(|deg| deg > d) {
            return Err(Error::BadParams(
                "reciprocal degree below polynomial degree",
            ));
        }
        let coeffs = (0..=d).map(|i| self.coeff(d - i)).collect();
        let mut p = Poly {
            field: self.field,
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    /// Every root in the field with its exact multiplicity, sorted by
    /// encoding. Found by scanning the whole field.
    pub fn roots_with_multiplicity(&self) -> Result<Vec<(FieldElem, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        for x in self.field.elements() {
            if !self.eval_unchecked(&x).is_zero() {
                continue;
            }
            let mut mult = 0;
            let mut cur = self.clone();
            while let Some(q) = cur.deflate(&x) {
                mult += 1;
                cur = q;
            }
            out.push((x, mult));
        }
        Ok(out)
    }

    /// True iff the multiplicities of the nonzero roots sum to the degree.
    pub fn splits_completely_in_units(&self) -> Result<bool> {
        let roots = self.roots_with_multiplicity()?;
        let total: u32 = roots
            .iter()
            .filter(|(r, _)| !r.is_zero())
            .map(|(_, m)| m)
            .sum();
        Ok(Some(total as usize) == self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f27() -> FieldCtx {
        FieldCtx::new(3, 3, Some(3)).unwrap()
    }

    fn ints<'f>(f: &'f FieldCtx, cs: &[i64]) -> Poly<'f> {
        Poly::from_coeffs(f, cs.iter().map(|&c| f.from_int(c)).collect()).unwrap()
    }

    #[test]
    fn evaluation() {
        let f = f27();
        let x4 = Poly::monomial(&f, f.one(), 4);
        assert_eq!(x4.eval(&f.zero()).unwrap(), f.zero());
        let p = ints(&f, &[1, 1, 0, 1, 1]);
        assert_eq!(p.eval(&f.from_int(-1)).unwrap(), f.zero());
        let c = f.decode(17).unwrap();
        let cp = Poly::constant(&f, c);
        for x in f.elements() {
            assert_eq!(cp.eval(&x).unwrap(), c);
        }
        let other = FieldCtx::new(5, 3, None).unwrap();
        assert_eq!(p.eval(&other.from_int(4)), Err(Error::CtxMismatch));
    }

    #[test]
    fn products_and_division() {
        let f = f27();
        let prod = ints(&f, &[1, 1]).mul(&ints(&f, &[-1, 1])).unwrap();
        assert_eq!(prod, ints(&f, &[-1, 0, 1]));
        // binomial coefficients 4, 6, 4 are 1, 0, 1 mod 3
        assert_eq!(ints(&f, &[1, 1]).pow(4), ints(&f, &[1, 1, 0, 1, 1]));
        let p = ints(&f, &[2, 0, 1, 1]);
        let (q, r) = p.divmod(&p).unwrap();
        assert_eq!(q, ints(&f, &[1]));
        assert!(r.is_zero());
        assert_eq!(p.divmod(&Poly::zero(&f)), Err(Error::DivisionByZero));
    }

    #[test]
    fn roots() {
        let f = f27();
        let r = ints(&f, &[-1, 0, 1]).roots_with_multiplicity().unwrap();
        assert_eq!(r, [(f.one(), 1), (f.from_int(-1), 1)]);
        let r = ints(&f, &[1, 1, 0, 1, 1])
            .roots_with_multiplicity()
            .unwrap();
        assert_eq!(r, [(f.from_int(-1), 4)]);
        assert_eq!(
            Poly::zero(&f).roots_with_multiplicity(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn splitting() {
        let f = f27();
        assert!(ints(&f, &[-1, 0, 1]).splits_completely_in_units().unwrap());
        assert!(!ints(&f, &[0, 0, 1]).splits_completely_in_units().unwrap());
        // roots of X^2 + 1 live in F_9, which is not inside F_27

        assert!(!ints(&f, &[1, 0, 1]).splits_completely_in_units().unwrap());
    }

    #[test]
    fn shift_and_reciprocal() {
        let f = f27();
        let p = ints(&f, &[0, 0, 0, 0, 1]);
        assert_eq!(p.shift(&f.one()), ints(&f, &[1, 1, 0, 1, 1]));
        let c = f.decode(11).unwrap();
        let shifted = p.shift(&c);
        for x in f.elements() {
            assert_eq!(shifted.eval(&x).unwrap(), p.eval(&f.add(&x, &c)).unwrap());
        }
        assert_eq!(
            ints(&f, &[1, 2, 0, 1]).reciprocal(3).unwrap(),
            ints(&f, &[1, 0, 2, 1])
        );
        assert!(ints(&f, &[1, 2, 0, 1]).reciprocal(2).is_err());
    }
}
