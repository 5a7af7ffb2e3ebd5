//! The polynomial `f_a(X) = X^{q+1} + a^{-1}(X^q + X) + N(a^{-1})(Tr(a) - 2a)`
//! over `F_{q^3}` and the auxiliary polynomials that explain its roots.
//!
//! With `c = -a^{-q}` a root of `f_a`, the shifted polynomial factors as
//! `f_a(X + c) = X h(X)` where `h(X) = X^q + (a^{-1} - a^{-q}) X^{q-1} +
//! (a^{-1} - a^{-q^2})`. Its reciprocal is `L(X) + 1` for the linearized
//! polynomial `L(X) = (a^{-1} - a^{-q^2}) X^q + (a^{-1} - a^{-q}) X`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};
use crate::poly::Poly;

#[derive(Clone, Debug)]
pub struct FaObjects<'f> {
    pub a: FieldElem,
    pub fa: Poly<'f>,
    /// `-a^{-q}`.
    pub canonical_root: FieldElem,
    pub h: Poly<'f>,
    /// Absent when `a` lies in `F_q`, where `h = X^q` and `L` vanishes.
    pub l: Option<Poly<'f>>,
}

fn subfield_order(field: &FieldCtx) -> Result<u64> {
    field.subfield_order().ok_or(Error::NoTower)
}

/// The constant term `N(a^{-1})(Tr(a) - 2a)` of `f_a`.
pub fn fa_constant(field: &FieldCtx, a: &FieldElem) -> Result<FieldElem> {
    let a_inv = field.inv(a).map_err(|_| Error::ZeroParameter)?;
    let tr_minus = field.sub(&field.trace3(a)?, &field.scale(2, a));
    Ok(field.mul(&field.norm3(&a_inv)?, &tr_minus))
}

/// `f_a` alone, without the identity checks of [`build_fa`].
pub fn fa_poly<'f>(field: &'f FieldCtx, a: &FieldElem) -> Result<Poly<'f>> {
    let q = subfield_order(field)? as usize;
    if a.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let a_inv = field.inv(a)?;
    let mut coeffs = alloc::vec![field.zero(); q + 2];
    coeffs[q + 1] = field.one();
    coeffs[q] = a_inv;
    coeffs[1] = field.add(&coeffs[1], &a_inv);
    coeffs[0] = fa_constant(field, a)?;
    Poly::from_coeffs(field, coeffs)
}

/// Builds `f_a`, its canonical root, `h` and `L`, and checks the identities
/// that tie them together.
pub fn build_fa<'f>(field: &'f FieldCtx, a: &FieldElem) -> Result<FaObjects<'f>> {
    let q = subfield_order(field)?;
    let fa = fa_poly(field, a)?;
    let a_inv = field.inv(a)?;
    let a_inv_q = field.frobenius_q(&a_inv)?;
    let a_inv_qq = field.frobenius_q(&a_inv_q)?;
    let canonical_root = field.neg(&a_inv_q);

    let qs = q as usize;
    let c_high = field.sub(&a_inv, &a_inv_q);
    let c_low = field.sub(&a_inv, &a_inv_qq);
    let mut h = alloc::vec![field.zero(); qs + 1];
    h[qs] = field.one();
    h[qs - 1] = field.add(&h[qs - 1], &c_high);
    h[0] = field.add(&h[0], &c_low);
    let h = Poly::from_coeffs(field, h)?;

    if !fa.eval_unchecked(&canonical_root).is_zero() {
        return Err(Error::IdentityFailed("f_a(-a^-q) = 0"));
    }
    let x = Poly::monomial(field, field.one(), 1);
    if fa.shift(&canonical_root) != x.mul(&h)? {
        return Err(Error::IdentityFailed("f_a(X - a^-q) = X h(X)"));
    }

    let l = if field.in_subfield(a)? {
        if h != Poly::monomial(field, field.one(), qs) {
            return Err(Error::IdentityFailed("h = X^q for a in F_q"));
        }
        None
    } else {
        let mut l = alloc::vec![field.zero(); qs + 1];
        l[qs] = c_low;
        l[1] = field.add(&l[1], &c_high);
        let l = Poly::from_coeffs(field, l)?;
        let l_plus_one = l.add(&Poly::constant(field, field.one()))?;
        if h.reciprocal(qs)? != l_plus_one {
            return Err(Error::IdentityFailed("X^q h(1/X) = L(X) + 1"));
        }
        Some(l)
    };

    Ok(FaObjects {
        a: *a,
        fa,
        canonical_root,
        h,
        l,
    })
}

/// Outcome of checking the splitting behaviour of `f_a` for one `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingReport {
    pub a: FieldElem,
    pub a_in_subfield: bool,
    pub roots: Vec<(FieldElem, u32)>,
    pub splits_in_units: bool,
    pub pass: bool,
}

/// For `a` in `F_q^*`, `f_a` must be `(X + a^{-q})^{q+1}`; otherwise it must
/// have `q + 1` distinct nonzero roots.
pub fn verify_splitting(field: &FieldCtx, a: &FieldElem) -> Result<SplittingReport> {
    let q = subfield_order(field)?;
    let objs = build_fa(field, a)?;
    let roots = objs.fa.roots_with_multiplicity()?;
    let splits_in_units = roots
        .iter()
        .filter(|(r, _)| !r.is_zero())
        .map(|&(_, m)| m as u64)
        .sum::<u64>()
        == q + 1;
    let a_in_subfield = field.in_subfield(a)?;
    let pattern = if a_in_subfield {
        roots.len() == 1 && roots[0] == (objs.canonical_root, (q + 1) as u32)
    } else {
        roots.len() as u64 == q + 1 && roots.iter().all(|&(r, m)| m == 1 && !r.is_zero())
    };
    Ok(SplittingReport {
        a: *a,
        a_in_subfield,
        roots,
        splits_in_units,
        pass: splits_in_units && pattern,
    })
}

fn require_outside_subfield(field: &FieldCtx, a: &FieldElem) -> Result<()> {
    if a.is_zero() || field.in_subfield(a)? {
        return Err(Error::SubfieldParameter);
    }
    Ok(())
}

/// The kernel of `L`: `{t (a^{-1} - a^{-q^2}) : t in F_q}`, ordered by `t`.
pub fn l_roots(field: &FieldCtx, a: &FieldElem) -> Result<Vec<FieldElem>> {
    require_outside_subfield(field, a)?;
    let a_inv = field.inv(a)?;
    let a_inv_qq = field.frobenius_q(&field.frobenius_q(&a_inv)?)?;
    let base = field.sub(&a_inv, &a_inv_qq);
    Ok(field
        .subfield_elements()?
        .iter()
        .map(|t| field.mul(t, &base))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberCheck {
    /// `L(x) in F_q` exactly when `Tr(x) = 0`, for every `x`.
    pub trace_equivalence: bool,
    /// `|{x : L(x) = t}|` for each `t` in `F_q`, ordered by `t`.
    pub fiber_sizes: Vec<(FieldElem, u64)>,
    pub pass: bool,
}

/// Checks that `L` maps exactly the trace-zero elements into `F_q`, each
/// value of `F_q` being hit `q` times.
pub fn check_l_fiber_trace(field: &FieldCtx, a: &FieldElem) -> Result<FiberCheck> {
    require_outside_subfield(field, a)?;
    let q = subfield_order(field)?;
    let l = build_fa(field, a)?.l.ok_or(Error::SubfieldParameter)?;
    let subfield = field.subfield_elements()?;
    let mut sizes = alloc::vec![0u64; subfield.len()];
    let mut trace_equivalence = true;
    for x in field.elements() {
        let lx = l.eval_unchecked(&x);
        let in_sub = field.in_subfield(&lx)?;
        trace_equivalence &= in_sub == field.trace3(&x)?.is_zero();
        if in_sub {
            let idx = subfield
                .iter()
                .position(|t| *t == lx)
                .expect("subfield element");
            sizes[idx] += 1;
        }
    }
    let pass = trace_equivalence && sizes.iter().all(|&s| s == q);
    Ok(FiberCheck {
        trace_equivalence,
        fiber_sizes: subfield.into_iter().zip(sizes).collect(),
        pass,
    })
}
