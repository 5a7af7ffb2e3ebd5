//! Arithmetic in `F_{p^n}` over a polynomial basis.
//!
//! A [`FieldCtx`] fixes the prime, the degree and the modulus. Elements are
//! plain coefficient vectors ([`FieldElem`]) that carry no reference to their
//! field, so every operation goes through the context. When the context is
//! built with a subfield order `q` (`n = 3m`, `q = p^m`) it also provides the
//! relative Frobenius `x -> x^q` and the cubic norm and trace down to `F_q`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 16;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 32;

/// A field element as coefficients over `F_p`, constant term first.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    coeffs: [u32; MAX_DEGREE],
    len: u8,
}

impl FieldElem {
    fn zeroed(n: usize) -> Self {
        FieldElem {
            coeffs: [0; MAX_DEGREE],
            len: n as u8,
        }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs[..self.len as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs()).finish()
    }
}

/// A concrete finite field `F_{p^n}`, optionally viewed as `F_{q^3}`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldCtx {
    p: u64,
    n: usize,
    /// Monic modulus, constant term first, length `n + 1`.
    modulus: Vec<u64>,
    q_sub: Option<u64>,
    order: u64,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("n", &self.n)
            .field("modulus", &self.modulus)
            .field("q_sub", &self.q_sub)
            .finish()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut rest, mut m) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

impl FieldCtx {
    /// Builds `F_{p^n}` with the smallest monic irreducible modulus, ordered
    /// by base-`p` encoding with the constant term least significant.
    pub fn new(p: u64, n: usize, q_sub: Option<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::BadParams("extension degree must be in 1..=16"));
        }
        let order = checked_pow(p, n as u32).filter(|&o| o <= MAX_ORDER);
        let order = order.ok_or(Error::FieldTooLarge)?;
        if let Some(q) = q_sub {
            let tower = n.is_multiple_of(3) && checked_pow(p, (n / 3) as u32) == Some(q);
            if !tower {
                return Err(Error::BadTower { n, q_sub: q });
            }
        }
        let modulus = smallest_irreducible(p, n).ok_or(Error::NoIrreducible { p, n })?;
        Ok(FieldCtx {
            p,
            n,
            modulus,
            q_sub,
            order,
        })
    }

    /// `F_{q^3}` for an odd prime power `q`.
    pub fn cubic_extension(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::BadOrder(q))?;
        Self::new(p, 3 * m as usize, Some(q))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// The number of elements, `p^n`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Monic modulus, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn subfield_order(&self) -> Option<u64> {
        self.q_sub
    }

    fn tower(&self) -> Result<u64> {
        self.q_sub.ok_or(Error::NoTower)
    }

    /// True if `x` has the shape of an element of this field.
    pub fn contains(&self, x: &FieldElem) -> bool {
        x.len as usize == self.n && x.coeffs().iter().all(|&c| (c as u64) < self.p)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::zeroed(self.n)
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    /// The image of an integer in the prime field.
    pub fn from_int(&self, k: i64) -> FieldElem {
        let mut e = self.zero();
        e.coeffs[0] = k.rem_euclid(self.p as i64) as u32;
        e
    }

    /// Builds an element from coefficients (constant term first); missing
    /// high coefficients are zero and every entry is reduced mod `p`.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() > self.n {
            return Err(Error::CtxMismatch);
        }
        let mut e = self.zero();
        for (slot, &c) in e.coeffs.iter_mut().zip(coeffs) {
            *slot = (c % self.p) as u32;
        }
        Ok(e)
    }

    /// Base-`p` integer with the constant term as least significant digit.
    pub fn encode(&self, x: &FieldElem) -> u64 {
        x.coeffs()
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p + c as u64)
    }

    pub fn decode(&self, mut i: u64) -> Result<FieldElem> {
        if i >= self.order {
            return Err(Error::OutOfRange(i));
        }
        let mut e = self.zero();
        for slot in e.coeffs[..self.n].iter_mut() {
            *slot = (i % self.p) as u32;
            i /= self.p;
        }
        Ok(e)
    }

    /// All elements in increasing encoding.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let mut next = self.zero();
        let mut remaining = self.order;
        core::iter::from_fn(move || {
            if remaining == 0 {
                return None;
            }
            remaining -= 1;
            let current = next;
            for slot in next.coeffs[..self.n].iter_mut() {
                *slot += 1;
                if (*slot as u64) < self.p {
                    break;
                }
                *slot = 0;
            }
            Some(current)
        })
    }

    /// Nonzero elements in increasing encoding.
    pub fn units(&self) -> impl Iterator<Item = FieldElem> + '_ {
        self.elements().skip(1)
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        debug_assert!(self.contains(a) && self.contains(b));
        let mut r = self.zero();
        for i in 0..self.n {
            let s = a.coeffs[i] as u64 + b.coeffs[i] as u64;
            r.coeffs[i] = if s >= self.p { s - self.p } else { s } as u32;
        }
        r
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        let mut r = self.zero();
        for i in 0..self.n {
            let c = a.coeffs[i] as u64;
            r.coeffs[i] = if c == 0 { 0 } else { self.p - c } as u32;
        }
        r
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        debug_assert!(self.contains(a) && self.contains(b));
        let (n, p) = (self.n, self.p);
        let mut prod = [0u64; 2 * MAX_DEGREE - 1];
        for i in 0..n {
            let ai = a.coeffs[i] as u64;
            if ai == 0 {
                continue;
            }
            for j in 0..n {
                let t = ai * b.coeffs[j] as u64 % p;
                prod[i + j] = (prod[i + j] + t) % p;
            }
        }
        // X^n = -(m_0 + m_1 X + ... + m_{n-1} X^{n-1})
        for k in (n..2 * n - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            let neg_c = p - c;
            for i in 0..n {
                let t = neg_c * self.modulus[i] % p;
                prod[k - n + i] = (prod[k - n + i] + t) % p;
            }
            prod[k] = 0;
        }
        let mut r = self.zero();
        for i in 0..n {
            r.coeffs[i] = prod[i] as u32;
        }
        r
    }

    /// Multiplies by an integer from the prime field.
    pub fn scale(&self, k: i64, a: &FieldElem) -> FieldElem {
        self.mul(&self.from_int(k), a)
    }

    /// `a^e`, with the exponent reduced mod `p^n - 1` for nonzero `a`.
    /// `pow(0, 0) = 1`.
    pub fn pow(&self, a: &FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return self.one();
        }
        if a.is_zero() {
            return self.zero();
        }
        let mut e = e % (self.order - 1);
        let mut base = *a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order - 2))
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `x^q` for the tower `F_{q^3} / F_q`.
    pub fn frobenius_q(&self, x: &FieldElem) -> Result<FieldElem> {
        let q = self.tower()?;
        Ok(self.pow(x, q))
    }

    /// `N(x) = x^{1 + q + q^2}`.
    pub fn norm3(&self, x: &FieldElem) -> Result<FieldElem> {
        let q = self.tower()?;
        Ok(self.pow(x, 1 + q + q * q))
    }

    /// `Tr(x) = x + x^q + x^{q^2}`.
    pub fn trace3(&self, x: &FieldElem) -> Result<FieldElem> {
        let xq = self.frobenius_q(x)?;
        let xqq = self.frobenius_q(&xq)?;
        Ok(self.add(&self.add(x, &xq), &xqq))
    }

    /// Membership in the embedded subfield `F_q`, i.e. `x^q = x`.
    pub fn in_subfield(&self, x: &FieldElem) -> Result<bool> {
        Ok(self.frobenius_q(x)? == *x)
    }

    /// The `q` elements of the embedded `F_q`, in increasing encoding.
    pub fn subfield_elements(&self) -> Result<Vec<FieldElem>> {
        let q = self.tower()?;
        let mut out = Vec::with_capacity(q as usize);
        for x in self.elements() {
            if self.in_subfield(&x)? {
                out.push(x);
            }
        }
        Ok(out)
    }
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    (0..exp).try_fold(1u64, |acc, _| acc.checked_mul(base))
}

// Polynomials over F_p as coefficient vectors, used only for the modulus
// search. Constant term first, no trailing zeros.

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn prime_poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = alloc::vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj % p) % p;
        }
    }
    prime_poly_rem(prod, m, p)
}

/// Remainder modulo a monic `m`.
fn prime_poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let n = m.len() - 1;
    trim(&mut a);
    while a.len() > n {
        let k = a.len() - 1;
        let c = a[k];
        for i in 0..=n {
            let t = c * m[i] % p;
            a[k - n + i] = (a[k - n + i] + p - t) % p;
        }
        trim(&mut a);
    }
    a
}

fn prime_poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // make b monic, then reduce a
        let lead_inv = mod_pow(*b.last().unwrap(), p - 2, p);
        for c in b.iter_mut() {
            *c = *c * lead_inv % p;
        }
        let r = prime_poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `X^{p^k} mod m`, by `k` successive `p`-th powers.
fn frobenius_of_x(m: &[u64], p: u64, k: usize) -> Vec<u64> {
    let mut cur = prime_poly_rem(alloc::vec![0, 1], m, p);
    for _ in 0..k {
        let mut base = cur.clone();
        let mut acc = alloc::vec![1u64];
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = prime_poly_mulmod(&acc, &base, m, p);
            }
            base = prime_poly_mulmod(&base, &base, m, p);
            e >>= 1;
        }
        cur = acc;
    }
    cur
}

/// Irreducibility of a monic `m` of degree `n` over `F_p`: `X^{p^n} = X` mod
/// `m`, and `gcd(X^{p^k} - X, m) = 1` for every proper divisor `k` of `n`.
pub(crate) fn is_irreducible(m: &[u64], p: u64) -> bool {
    let n = m.len() - 1;
    let x = prime_poly_rem(alloc::vec![0, 1], m, p);
    if frobenius_of_x(m, p, n) != x {
        return false;
    }
    (1..n).filter(|k| n.is_multiple_of(*k)).all(|k| {
        let mut d = frobenius_of_x(m, p, k);
        d.resize(d.len().max(2), 0);
        d[1] = (d[1] + p - 1) % p;
        let g = prime_poly_gcd(m.to_vec(), d, p);
        g.len() == 1
    })
}

fn smallest_irreducible(p: u64, n: usize) -> Option<Vec<u64>> {
    let count = checked_pow(p, n as u32)?;
    (0..count).find_map(|mut low| {
        let mut m = alloc::vec![0u64; n + 1];
        for slot in m[..n].iter_mut() {
            *slot = low % p;
            low /= p;
        }
        m[n] = 1;
        is_irreducible(&m, p).then_some(m)
    })
}
