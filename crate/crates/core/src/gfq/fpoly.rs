use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{Fel, FieldCtx, Matrix};
use crate::budget::sat_pow;
use crate::{Error, Result};

/// Univariate polynomial over `F_q`, ascending coefficients, no trailing
/// zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FPoly {
    coeffs: Vec<Fel>,
}

impl Ord for FPoly {
    /// Degree first, then coefficients from the top degree down by element
    /// code.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for FPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FPoly {
    pub fn zero() -> Self {
        FPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        FPoly { coeffs: vec![Fel::ONE] }
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        FPoly { coeffs: vec![Fel::ZERO, Fel::ONE] }
    }

    /// `t - c`
    pub fn linear(c: Fel, f: &FieldCtx) -> Self {
        FPoly { coeffs: vec![f.neg(c), Fel::ONE] }
    }

    pub fn from_coeffs(mut coeffs: Vec<Fel>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Fel] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Fel::ONE)
    }

    pub fn add(&self, other: &FPoly, f: &FieldCtx) -> FPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or_default();
                let b = other.coeffs.get(i).copied().unwrap_or_default();
                f.add(a, b)
            })
            .collect();
        FPoly::from_coeffs(c)
    }

    pub fn sub(&self, other: &FPoly, f: &FieldCtx) -> FPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or_default();
                let b = other.coeffs.get(i).copied().unwrap_or_default();
                f.sub(a, b)
            })
            .collect();
        FPoly::from_coeffs(c)
    }

    pub fn mul(&self, other: &FPoly, f: &FieldCtx) -> FPoly {
        if self.is_zero() || other.is_zero() {
            return FPoly::zero();
        }
        let mut c = vec![Fel::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        FPoly::from_coeffs(c)
    }

    pub fn pow(&self, n: u32, f: &FieldCtx) -> FPoly {
        let mut acc = FPoly::one();
        for _ in 0..n {
            acc = acc.mul(self, f);
        }
        acc
    }

    /// Quotient and remainder. Fails on a zero divisor.
    pub fn divrem(&self, d: &FPoly, f: &FieldCtx) -> Result<(FPoly, FPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv_nz(d.coeffs[dd]);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((FPoly::zero(), self.clone()));
        }
        let mut quot = vec![Fel::ZERO; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = f.mul(r[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[top - dd] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let k = top - dd + i;
                r[k] = f.sub(r[k], f.mul(c, dc));
            }
        }
        r.truncate(dd);
        Ok((FPoly::from_coeffs(quot), FPoly::from_coeffs(r)))
    }

    pub fn rem(&self, d: &FPoly, f: &FieldCtx) -> Result<FPoly> {
        Ok(self.divrem(d, f)?.1)
    }

    pub fn divides(&self, other: &FPoly, f: &FieldCtx) -> bool {
        !self.is_zero() && other.rem(self, f).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn make_monic(&self, f: &FieldCtx) -> FPoly {
        match self.coeffs.last() {
            None => FPoly::zero(),
            Some(&l) => {
                let inv = f.inv_nz(l);
                FPoly::from_coeffs(self.coeffs.iter().map(|&c| f.mul(inv, c)).collect())
            }
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &FPoly, f: &FieldCtx) -> FPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic(f)
    }

    fn mulmod(&self, other: &FPoly, m: &FPoly, f: &FieldCtx) -> FPoly {
        self.mul(other, f).rem(m, f).expect("nonzero modulus")
    }

    /// `self^e mod m`
    pub fn powmod(&self, mut e: u64, m: &FPoly, f: &FieldCtx) -> FPoly {
        let mut base = self.rem(m, f).expect("nonzero modulus");
        let mut acc = FPoly::one().rem(m, f).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mulmod(&base, m, f);
            }
        }
        acc
    }

    /// Ben-Or test: `p` of degree `n` is irreducible iff
    /// `gcd(p, t^{q^i} − t) = 1` for `1 ≤ i ≤ n/2`.
    pub fn is_irreducible(&self, f: &FieldCtx) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        let p = self.make_monic(f);
        let t = FPoly::t();
        let mut x = t.rem(&p, f).expect("nonzero");
        for _ in 1..=n / 2 {
            x = x.powmod(f.q() as u64, &p, f);
            if p.gcd(&x.sub(&t, f), f).degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_matrix(&self, a: &Matrix, f: &FieldCtx) -> Matrix {
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(a, f);
            for i in 0..n {
                let v = f.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }

    pub fn eval(&self, x: Fel, f: &FieldCtx) -> Fel {
        self.coeffs.iter().rev().fold(Fel::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Companion matrix of a monic polynomial: ones on the subdiagonal and the
    /// negated coefficients in the last column.
    pub fn companion(&self, f: &FieldCtx) -> Matrix {
        let n = self.degree().unwrap_or(0);
        let mut m = Matrix::zeros(n, n);
        for i in 1..n {
            m.set(i, i - 1, Fel::ONE);
        }
        for i in 0..n {
            m.set(i, n - 1, f.neg(self.coeffs[i]));
        }
        m
    }

    /// Distinct monic irreducible factors with multiplicities, in increasing
    /// order.
    pub fn factor(&self, f: &FieldCtx) -> Vec<(FPoly, u32)> {
        let mut rest = self.make_monic(f);
        let mut out = Vec::new();
        let mut d = 1;
        while rest.degree().is_some_and(|n| n >= 2 * d) {
            for g in MonicPolys::new(f, d) {
                let mut mult = 0;
                loop {
                    let (qt, r) = rest.divrem(&g, f).expect("monic divisor");
                    if !r.is_zero() {
                        break;
                    }
                    rest = qt;
                    mult += 1;
                }
                if mult > 0 {
                    out.push((g, mult));
                }
                if rest.degree().is_none_or(|n| n < 2 * d) {
                    break;
                }
            }
            d += 1;
        }
        if rest.degree().is_some_and(|n| n >= 1) {
            match out.iter_mut().find(|(g, _)| *g == rest) {
                Some((_, m)) => *m += 1,
                None => out.push((rest, 1)),
            }
        }
        out.sort();
        out
    }
}

/// All monic polynomials of a fixed degree, in the [`FPoly`] order.
pub struct MonicPolys<'a> {
    f: &'a FieldCtx,
    degree: usize,
    next: u64,
    count: u64,
}

impl<'a> MonicPolys<'a> {
    pub fn new(f: &'a FieldCtx, degree: usize) -> Self {
        MonicPolys { f, degree, next: 0, count: sat_pow(f.q() as u64, degree) }
    }

    pub fn total(&self) -> u64 {
        self.count
    }
}

impl Iterator for MonicPolys<'_> {
    type Item = FPoly;

    fn next(&mut self) -> Option<FPoly> {
        if self.next >= self.count {
            return None;
        }
        let q = self.f.q() as u64;
        let mut k = self.next;
        self.next += 1;
        let mut c = vec![Fel::ZERO; self.degree + 1];
        c[self.degree] = Fel::ONE;
        for slot in c.iter_mut().take(self.degree) {
            *slot = self.f.from_code((k % q) as u32).expect("code below q");
            k /= q;
        }
        Some(FPoly { coeffs: c })
    }
}

/// Sorted list of the monic irreducible polynomials of degree `d`.
pub fn monic_irreducibles(f: &FieldCtx, d: usize) -> Result<Vec<FPoly>> {
    if d == 0 {
        return Err(Error::InvalidInput("irreducible polynomials need degree at least 1".into()));
    }
    let polys = MonicPolys::new(f, d);
    f.budget().check_candidates("monic polynomials", polys.total())?;
    Ok(polys.filter(|p| p.is_irreducible(f)).collect())
}
