//! Planarity of polynomials: the definition checked exhaustively, and the two
//! known monomial criteria.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};
use crate::poly::Poly;

/// A collision of the difference map `x -> P(x + s) - P(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlanarWitness {
    pub shift: FieldElem,
    pub x: FieldElem,
    pub x_other: FieldElem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarReport {
    pub is_planar: bool,
    /// First collision found: smallest shift, then smallest second point.
    pub witness: Option<PlanarWitness>,
}

/// Tests whether every difference map of `poly` is a bijection of its field.
pub fn is_planar(poly: &Poly<'_>) -> PlanarReport {
    let field = poly.field();
    let values: Vec<FieldElem> = field.elements().map(|x| poly.eval_unchecked(&x)).collect();
    is_planar_table(field, &values)
}

/// Planarity of a function given by its value table, indexed by encoding.
pub(crate) fn is_planar_table(field: &FieldCtx, values: &[FieldElem]) -> PlanarReport {
    let order = field.order() as usize;
    debug_assert_eq!(values.len(), order);
    // seen[v] holds 1 + encoding of the first x whose difference is v
    let mut seen = alloc::vec![0u64; order];
    for s in field.units() {
        seen.iter_mut().for_each(|slot| *slot = 0);
        for (i, x) in field.elements().enumerate() {
            let xs = field.encode(&field.add(&x, &s)) as usize;
            let diff = field.sub(&values[xs], &values[i]);
            let slot = &mut seen[field.encode(&diff) as usize];
            if *slot != 0 {
                let first = field.decode(*slot - 1).expect("in range");
                return PlanarReport {
                    is_planar: false,
                    witness: Some(PlanarWitness {
                        shift: s,
                        x: first,
                        x_other: x,
                    }),
                };
            }
            *slot = i as u64 + 1;
        }
    }
    PlanarReport {
        is_planar: true,
        witness: None,
    }
}

/// Re-checks that a witness really collides under `poly`.
pub fn witness_holds(poly: &Poly<'_>, w: &PlanarWitness) -> bool {
    let f = poly.field();
    let diff = |x: &FieldElem| {
        let shifted = poly.eval_unchecked(&f.add(x, &w.shift));
        f.sub(&shifted, &poly.eval_unchecked(x))
    };
    !w.shift.is_zero() && w.x != w.x_other && diff(&w.x) == diff(&w.x_other)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `X^{q^alpha + 1}` is planar over `F_{q^e}` iff `e / gcd(alpha, e)` is odd.
pub fn predict_monomial_qa1(q: u64, alpha: u32, e: u32) -> Result<bool> {
    let odd_prime_power = crate::gf::prime_power(q).is_some_and(|(p, _)| p != 2);
    if !odd_prime_power || alpha == 0 || e == 0 {
        return Err(Error::BadParams("need odd prime power q and alpha, e >= 1"));
    }
    Ok((e as u64 / gcd(alpha as u64, e as u64)) % 2 == 1)
}

/// `X^{(3^alpha + 1)/2}` is planar over `F_{3^e}` iff `gcd(alpha, 2e) = 1`.
pub fn predict_monomial_char3(alpha: u32, e: u32) -> Result<bool> {
    if alpha == 0 || e == 0 {
        return Err(Error::BadParams("need alpha, e >= 1"));
    }
    Ok(gcd(alpha as u64, 2 * e as u64) == 1)
}

/// Exponent `(3^alpha + 1) / 2` of the characteristic-3 family.
pub fn char3_exponent(alpha: u32) -> Result<u64> {
    let pow = 3u64
        .checked_pow(alpha)
        .ok_or(Error::BadParams("alpha too large"))?;
    Ok(pow.div_ceil(2))
}

/// Field `F_{q^e}` as a plain context.
pub fn extension_of(q: u64, e: u32) -> Result<FieldCtx> {
    let (p, m) = crate::gf::prime_power(q).ok_or(Error::BadOrder(q))?;
    FieldCtx::new(p, (m * e) as usize, None)
}

/// Smallest positive exponent inducing the same function as `X^{exponent}`
/// on the field: `((exponent - 1) mod (p^n - 1)) + 1`.
pub fn function_exponent(field: &FieldCtx, exponent: u64) -> u64 {
    if exponent == 0 {
        return 0;
    }
    (exponent - 1) % (field.order() - 1) + 1
}

/// The monomial `X^{exponent}` as a polynomial of literal degree.
pub fn monomial(field: &FieldCtx, exponent: u64) -> Poly<'_> {
    Poly::monomial(field, field.one(), exponent as usize)
}
