//! Exact univariate polynomials over `Q` and interpolation through exact
//! samples.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

/// Polynomial in `T` with rational coefficients, ascending, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `T`.
    pub fn t() -> Self {
        RatPoly { coeffs: vec![Rational::zero(), Rational::one()] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
    }

    /// `T^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = Rational::one();
        RatPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        RatPoly::from_coeffs(c)
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(c)
    }

    pub fn pow(&self, n: u32) -> RatPoly {
        (0..n).fold(RatPoly::one(), |acc, _| acc.mul(self))
    }

    /// Substitutes `T ↦ T^d`.
    pub fn compose_pow(&self, d: usize) -> RatPoly {
        assert!(d >= 1, "T^0 substitution is not a polynomial map of degree ≥ 1");
        let mut c = vec![Rational::zero(); self.coeffs.len().saturating_sub(1) * d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i * d] = a.clone();
        }
        RatPoly::from_coeffs(c)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(BigInt::from(x)))
    }

    /// Quotient and remainder by a nonzero polynomial.
    pub fn divrem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = &r[top] / lead;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                let k = top - dd + i;
                r[k] -= &c * dc;
            }
            quot[top - dd] = c;
        }
        r.truncate(dd);
        Ok((RatPoly::from_coeffs(quot), RatPoly::from_coeffs(r)))
    }

    /// `self / d` when the division is exact.
    pub fn exact_div(&self, d: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::Inconsistent { point: 0, expected: "exact division".into(), found: r.to_string() });
        }
        Ok(q)
    }

    /// True iff every coefficient is an integer.
    pub fn is_integer_poly(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients as `"num/den"` strings, ascending degree.
    pub fn to_fraction_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| alloc::format!("{}/{}", c.numer(), c.denom())).collect()
    }

    /// Parses `"num/den"` or `"num"` strings, ascending degree.
    pub fn from_fraction_strings<S: AsRef<str>>(items: &[S]) -> Result<RatPoly> {
        let mut c = Vec::with_capacity(items.len());
        for s in items {
            c.push(parse_rational(s.as_ref())?);
        }
        Ok(RatPoly::from_coeffs(c))
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidInput(alloc::format!("not a rational: {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl fmt::Display for RatPoly {
    /// Human form, highest degree first: `2T^2+2T+1`, `(1/2)T^2-(1/2)T`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let body = if a.is_integer() { a.numer().to_string() } else { alloc::format!("({}/{})", a.numer(), a.denom()) };
            match k {
                0 => write!(f, "{body}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{body}")?;
                    }
                    if k == 1 {
                        write!(f, "T")?;
                    } else {
                        write!(f, "T^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The unique polynomial of degree at most `degree_bound` through the first
/// `degree_bound + 1` samples. Every later sample must lie on it exactly.
///
/// Built in Newton form from divided differences, returned in coefficient
/// form.
pub fn interpolate(samples: &[(i64, Rational)], degree_bound: usize) -> Result<RatPoly> {
    let needed = degree_bound + 1;
    if samples.len() < needed {
        return Err(Error::InsufficientSamples { needed, got: samples.len() });
    }
    for (i, (x, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::InvalidInput(alloc::format!("repeated sample point {x}")));
        }
    }
    let base = &samples[..needed];
    // divided differences, in place
    let mut dd: Vec<Rational> = base.iter().map(|(_, v)| v.clone()).collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = base[i].0 - base[i - level].0;
            dd[i] = num / Rational::from_integer(BigInt::from(den));
        }
    }
    // Horner on the Newton basis
    let mut poly = RatPoly::zero();
    for i in (0..needed).rev() {
        let factor = RatPoly::from_coeffs(vec![Rational::from_integer(BigInt::from(-base[i].0)), Rational::one()]);
        poly = poly.mul(&factor).add(&RatPoly::constant(dd[i].clone()));
    }
    for (x, v) in &samples[needed..] {
        let got = poly.eval_int(*x);
        if &got != v {
            return Err(Error::Inconsistent { point: *x, expected: got.to_string(), found: v.to_string() });
        }
    }
    Ok(poly)
}
