use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Budget, Error, Result};

/// A field element, stored as the base-`p` packing `c_0 + c_1 p + ... ` of its
/// coordinates in the polynomial basis `1, t, ..., t^{e-1}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fel(u8);

impl Fel {
    pub const ZERO: Fel = Fel(0);
    pub const ONE: Fel = Fel(1);

    /// The packed code; doubles as a canonical ordering key.
    #[inline]
    pub fn code(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Shared handle to an immutable field context.
pub type Field = Arc<FieldCtx>;

/// The field `F_q`, `q = p^e`, with precomputed operation tables.
pub struct FieldCtx {
    p: u32,
    e: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    budget: Budget,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e
    }
}

impl Eq for FieldCtx {}

pub fn is_prime(n: u32) -> bool {
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

/// Builds `F_{p^e}` with the default [`Budget`].
pub fn make_field(p: u32, e: u32) -> Result<Field> {
    make_field_with_budget(p, e, Budget::default())
}

/// Builds the field of order `q`, which must be a prime power.
pub fn field_of_order(q: u32, budget: Budget) -> Result<Field> {
    let p = (2..=q.max(2)).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let (mut rest, mut e) = (q, 0);
    while rest > 1 && rest % p == 0 {
        rest /= p;
        e += 1;
    }
    if q < 2 || rest != 1 {
        return Err(Error::InvalidInput(alloc::format!("{q} is not a prime power")));
    }
    make_field_with_budget(p, e, budget)
}

/// Builds `F_{p^e}`. For `e > 1` the modulus is the least monic irreducible of
/// degree `e` over `Z/p`, comparing coefficient tuples from the top degree
/// down.
pub fn make_field_with_budget(p: u32, e: u32, budget: Budget) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::BadDegree(e));
    }
    let limit = budget.max_q.min(Budget::HARD_MAX_Q) as u64;
    let mut q: u64 = 1;
    for _ in 0..e {
        q = q.saturating_mul(p as u64);
    }
    if q > limit {
        return Err(Error::BudgetExceeded { what: "field order", needed: q, limit });
    }
    let q = q as u32;
    let modulus = if e > 1 { Some(least_irreducible(p, e as usize)) } else { None };

    let qs = q as usize;
    let digits: Vec<Vec<u32>> = (0..q).map(|c| unpack(c, p, e as usize)).collect();
    let mut add = vec![0u8; qs * qs];
    let mut mul = vec![0u8; qs * qs];
    for a in 0..qs {
        for b in 0..qs {
            let s: Vec<u32> = digits[a].iter().zip(&digits[b]).map(|(x, y)| (x + y) % p).collect();
            add[a * qs + b] = pack(&s, p) as u8;
            let prod = match &modulus {
                None => vec![(digits[a][0] * digits[b][0]) % p],
                Some(m) => zp_mulmod(&digits[a], &digits[b], m, p),
            };
            mul[a * qs + b] = pack(&prod, p) as u8;
        }
    }
    let mut neg = vec![0u8; qs];
    let mut inv = vec![0u8; qs];
    for a in 0..qs {
        neg[a] = (0..qs).find(|&b| add[a * qs + b] == 0).unwrap_or(0) as u8;
        if a != 0 {
            inv[a] = (0..qs).find(|&b| mul[a * qs + b] == 1).unwrap_or(0) as u8;
        }
    }
    Ok(Arc::new(FieldCtx { p, e, q, modulus, add, mul, neg, inv, budget }))
}

impl FieldCtx {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Ascending residues of the defining modulus (leading 1 included), or
    /// `None` for a prime field.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    #[inline]
    pub fn zero(&self) -> Fel {
        Fel::ZERO
    }

    #[inline]
    pub fn one(&self) -> Fel {
        Fel::ONE
    }

    #[inline]
    pub fn add(&self, a: Fel, b: Fel) -> Fel {
        Fel(self.add[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fel, b: Fel) -> Fel {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fel, b: Fel) -> Fel {
        Fel(self.mul[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: Fel) -> Fel {
        Fel(self.neg[a.0 as usize])
    }

    pub fn inv(&self, a: Fel) -> Result<Fel> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Fel(self.inv[a.0 as usize]))
    }

    /// Inverse of a value already known to be nonzero.
    #[inline]
    pub(crate) fn inv_nz(&self, a: Fel) -> Fel {
        debug_assert!(!a.is_zero());
        Fel(self.inv[a.0 as usize])
    }

    pub fn pow(&self, a: Fel, mut n: u64) -> Fel {
        let mut base = a;
        let mut acc = Fel::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Image of an integer under `Z → F_p ⊆ F_q`.
    pub fn from_int(&self, n: i64) -> Fel {
        Fel(n.rem_euclid(self.p as i64) as u8)
    }

    /// The generator `t` of the polynomial basis (equal to 0 in a prime field
    /// only if `e = 1`; there it is simply not meaningful).
    pub fn generator(&self) -> Fel {
        if self.e > 1 {
            Fel(self.p as u8)
        } else {
            Fel::ONE
        }
    }

    /// Element from its packed code.
    pub fn from_code(&self, code: u32) -> Result<Fel> {
        if code >= self.q {
            return Err(Error::InvalidInput(alloc::format!("element code {code} not below q = {}", self.q)));
        }
        Ok(Fel(code as u8))
    }

    /// Coordinates `c_0..c_{e-1}` in the polynomial basis.
    pub fn coeffs(&self, a: Fel) -> Vec<u32> {
        unpack(a.0 as u32, self.p, self.e as usize)
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<Fel> {
        if c.len() != self.e as usize || c.iter().any(|&r| r >= self.p) {
            return Err(Error::InvalidInput(alloc::format!(
                "expected {} residues below {}, got {:?}",
                self.e,
                self.p,
                c
            )));
        }
        Ok(Fel(pack(c, self.p) as u8))
    }

    /// All elements in code order (`0, 1, ...`).
    pub fn elements(&self) -> impl Iterator<Item = Fel> + '_ {
        (0..self.q).map(|c| Fel(c as u8))
    }

    pub fn is_same(&self, other: &FieldCtx) -> bool {
        self == other
    }
}

fn unpack(mut code: u32, p: u32, e: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(e);
    for _ in 0..e {
        out.push(code % p);
        code /= p;
    }
    out
}

fn pack(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &r| acc * p + r)
}

// Dense polynomial helpers over Z/p, only used to bootstrap the extension.

fn zp_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn zp_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    zp_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = zp_inv(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = (r[top] * lead_inv) % p;
        let shift = top - dm;
        for (i, &mc) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * mc % p) % p;
        }
        zp_trim(&mut r);
    }
    r
}

fn zp_inv(a: u32, p: u32) -> u32 {
    (1..p).find(|&b| (a * b) % p == 1).unwrap_or(0)
}

fn zp_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = zp_rem(&prod, m, p);
    r.resize(m.len() - 1, 0);
    r
}

/// Monic polynomials of degree `d` over `Z/p` in increasing order of their
/// coefficient tuples read from the top down.
fn zp_monic(d: usize, p: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(d as u32);
    (0..count).map(move |mut k| {
        let mut c = vec![0u32; d + 1];
        c[d] = 1;
        for slot in c.iter_mut().take(d) {
            *slot = (k % p as u64) as u32;
            k /= p as u64;
        }
        c
    })
}

fn least_irreducible(p: u32, e: usize) -> Vec<u32> {
    zp_monic(e, p)
        .find(|f| (1..=e / 2).all(|d| zp_monic(d, p).all(|g| !zp_rem(f, &g, p).is_empty())))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_by_order() {
        for (q, p, e) in [(2, 2, 1), (4, 2, 2), (9, 3, 2), (13, 13, 1)] {
            let f = field_of_order(q, Budget::default()).unwrap();
            assert_eq!((f.p(), f.e()), (p, e));
        }
        for q in [0, 1, 6, 12] {
            assert!(field_of_order(q, Budget::default()).is_err());
        }
    }

    #[test]
    fn prime_field_has_no_modulus() {
        let f = make_field(2, 1).unwrap();
        assert_eq!(f.q(), 2);
        assert!(f.modulus().is_none());
    }

    #[test]
    fn f4_modulus_is_t2_t_1() {
        let f = make_field(2, 2).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 1, 1][..]));
    }

    #[test]
    fn standard_moduli() {
        assert_eq!(make_field(2, 3).unwrap().modulus(), Some(&[1, 1, 0, 1][..]));
        assert_eq!(make_field(3, 2).unwrap().modulus(), Some(&[1, 0, 1][..]));
        assert_eq!(make_field(2, 4).unwrap().modulus(), Some(&[1, 1, 0, 0, 1][..]));
        assert_eq!(make_field(5, 2).unwrap().modulus(), Some(&[2, 0, 1][..]));
    }

    #[test]
    fn rejects_non_prime_and_oversized() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(make_field(2, 7), Err(Error::BudgetExceeded { .. })));
        assert!(matches!(make_field(3, 0), Err(Error::BadDegree(0))));
    }

    #[test]
    fn small_arithmetic() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(f2.add(Fel::ONE, Fel::ONE), Fel::ZERO);
        let f4 = make_field(2, 2).unwrap();
        let t = f4.generator();
        assert_eq!(f4.coeffs(f4.mul(t, t)), vec![1, 1]);
        let f3 = make_field(3, 1).unwrap();
        let two = f3.from_int(2);
        assert_eq!(f3.inv(two).unwrap(), two);
        assert_eq!(f3.inv(Fel::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)] {
            let f = make_field(p, e).unwrap();
            let els: Vec<Fel> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), Fel::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fel::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            // multiplicative group is cyclic of order q-1: a^(q-1) = 1
            for &a in els.iter().skip(1) {
                assert_eq!(f.pow(a, (f.q() - 1) as u64), Fel::ONE);
            }
        }
    }

    #[test]
    fn coefficient_round_trip() {
        let f = make_field(3, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.from_coeffs(&f.coeffs(a)).unwrap(), a);
        }
        assert!(f.from_coeffs(&[3, 0]).is_err());
        assert!(f.from_coeffs(&[1]).is_err());
    }
}
