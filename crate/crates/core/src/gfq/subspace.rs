use alloc::vec;
use alloc::vec::Vec;

use super::{Fel, FieldCtx, Matrix};
use crate::Result;

/// A subspace of `F_q^n`, held as its unique reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the rows of `m`.
    pub fn span(m: &Matrix, f: &FieldCtx) -> Self {
        let mut r = m.clone();
        let pivots = r.rref_in_place(f);
        let rank = pivots.len();
        let rows: Vec<Vec<Fel>> = (0..rank).map(|i| r.row(i).to_vec()).collect();
        let basis = Matrix::from_rows(m.cols(), &rows).expect("row lengths agree");
        Subspace { basis, pivots }
    }

    /// Span of a list of vectors of length `ambient`.
    pub fn span_vectors(ambient: usize, vs: &[Vec<Fel>], f: &FieldCtx) -> Result<Self> {
        let m = Matrix::from_rows(ambient, vs)?;
        Ok(Self::span(&m, f))
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot columns in ascending order; the standard basis vectors at
    /// these positions span a complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        (0..self.ambient()).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// `v` minus its projection along the echelon basis; zero iff `v` lies in
    /// the subspace, and zero at every pivot column in any case.
    pub fn reduce(&self, v: &[Fel], f: &FieldCtx) -> Vec<Fel> {
        let mut r = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = r[pc];
            if c.is_zero() {
                continue;
            }
            for (x, &b) in r.iter_mut().zip(self.basis.row(i)) {
                *x = f.sub(*x, f.mul(c, b));
            }
        }
        r
    }

    pub fn contains(&self, v: &[Fel], f: &FieldCtx) -> bool {
        self.reduce(v, f).iter().all(|x| x.is_zero())
    }

    /// Coordinates of a member vector in the echelon basis (read off the
    /// pivot columns).
    pub fn coords(&self, v: &[Fel]) -> Vec<Fel> {
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    /// Coordinates of `v + U` in the quotient basis given by the complement
    /// columns.
    pub fn quotient_coords(&self, v: &[Fel], f: &FieldCtx) -> Vec<Fel> {
        let r = self.reduce(v, f);
        self.complement_columns().into_iter().map(|c| r[c]).collect()
    }
}

/// Gaussian binomial `[n choose m]_q`, saturating at `u64::MAX`.
pub fn gaussian_binomial(n: usize, m: usize, q: u64) -> u64 {
    if m > n {
        return 0;
    }
    // product formula in u128, exact while it fits
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..m {
        let a = (q as u128).checked_pow((n - i) as u32).map(|x| x - 1);
        let b = (q as u128).checked_pow((i + 1) as u32).map(|x| x - 1);
        match (a.and_then(|a| num.checked_mul(a)), b.and_then(|b| den.checked_mul(b))) {
            (Some(nn), Some(dd)) => {
                let g = gcd(nn, dd);
                num = nn / g;
                den = dd / g;
            }
            _ => return u64::MAX,
        }
    }
    u64::try_from(num / den).unwrap_or(u64::MAX)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Every `m`-dimensional subspace of `F_q^n` exactly once, as its echelon
/// basis. Order: pivot sets lexicographically, then the free entries
/// lexicographically (first free entry most significant).
pub struct Subspaces<'a> {
    f: &'a FieldCtx,
    n: usize,
    m: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    counter: Vec<u32>,
    done: bool,
}

impl<'a> Subspaces<'a> {
    pub fn new(n: usize, m: usize, f: &'a FieldCtx) -> Result<Self> {
        f.budget().check_subspaces("subspaces", gaussian_binomial(n, m, f.q() as u64))?;
        let mut s = Subspaces {
            f,
            n,
            m,
            pivots: (0..m).collect(),
            free: Vec::new(),
            counter: Vec::new(),
            done: m > n,
        };
        s.reset_free();
        Ok(s)
    }

    fn reset_free(&mut self) {
        self.free.clear();
        for (i, &pc) in self.pivots.iter().enumerate() {
            for c in pc + 1..self.n {
                if !self.pivots.contains(&c) {
                    self.free.push((i, c));
                }
            }
        }
        self.counter = vec![0; self.free.len()];
    }

    fn advance_pivots(&mut self) -> bool {
        let (n, m) = (self.n, self.m);
        let mut i = m;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < n - m + i {
                self.pivots[i] += 1;
                for j in i + 1..m {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn current(&self) -> Subspace {
        let mut b = Matrix::zeros(self.m, self.n);
        for (i, &pc) in self.pivots.iter().enumerate() {
            b.set(i, pc, Fel::ONE);
        }
        for (&(r, c), &v) in self.free.iter().zip(&self.counter) {
            b.set(r, c, self.f.from_code(v).expect("code below q"));
        }
        Subspace { basis: b, pivots: self.pivots.clone() }
    }
}

impl Iterator for Subspaces<'_> {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let out = self.current();
        let q = self.f.q();
        let mut k = self.counter.len();
        loop {
            if k == 0 {
                if self.advance_pivots() {
                    self.reset_free();
                } else {
                    self.done = true;
                }
                break;
            }
            k -= 1;
            self.counter[k] += 1;
            if self.counter[k] < q {
                break;
            }
            self.counter[k] = 0;
        }
        Some(out)
    }
}
