//! Quivers, dimension vectors, the Euler form, `δ` and the defect.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Rational, Result};

/// Finite quiver. Arrow `a` is `(tail, head)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    n_vertices: usize,
    arrows: Vec<(usize, usize)>,
    name: Option<String>,
}

/// One non-negative integer per vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimVec(pub Vec<usize>);

impl DimVec {
    pub fn zero(n: usize) -> Self {
        DimVec(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &DimVec) -> DimVec {
        assert_eq!(self.len(), other.len());
        DimVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, if non-negative.
    pub fn checked_sub(&self, other: &DimVec) -> Option<DimVec> {
        if self.len() != other.len() {
            return None;
        }
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(DimVec)
    }

    /// Componentwise `≤`.
    pub fn le(&self, other: &DimVec) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Every dimension vector `e` with `0 ≤ e ≤ self`, in lexicographic order.
    pub fn below(&self) -> Vec<DimVec> {
        let mut out = vec![DimVec::zero(self.len())];
        for (i, &d) in self.0.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (d + 1));
            for v in &out {
                for k in 0..=d {
                    let mut w = v.clone();
                    w.0[i] = k;
                    next.push(w);
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i]
    }
}

impl fmt::Display for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<usize>> for DimVec {
    fn from(v: Vec<usize>) -> Self {
        DimVec(v)
    }
}

impl Quiver {
    pub fn new(n_vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(t, h)) = arrows.iter().find(|&&(t, h)| t >= n_vertices || h >= n_vertices) {
            return Err(Error::InvalidInput(alloc::format!(
                "arrow ({t},{h}) out of range for {n_vertices} vertices"
            )));
        }
        Ok(Quiver { n_vertices, arrows, name: None })
    }

    fn preset(n_vertices: usize, arrows: Vec<(usize, usize)>, name: String) -> Self {
        Quiver { n_vertices, arrows, name: Some(name) }
    }

    /// One vertex, one loop.
    pub fn jordan() -> Self {
        Self::preset(1, vec![(0, 0)], "jordan".into())
    }

    /// `1 → 2 → ... → n`.
    pub fn a_n(n: usize) -> Self {
        assert!(n >= 1);
        Self::preset(n, (0..n - 1).map(|i| (i, i + 1)).collect(), alloc::format!("a{n}"))
    }

    /// Oriented cycle `1 → 2 → ... → n → 1`; `cyclic(1)` is the Jordan
    /// quiver.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        if n == 1 {
            return Self::jordan();
        }
        Self::preset(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), alloc::format!("cyclic{n}"))
    }

    /// Two parallel arrows `1 ⇉ 2`.
    pub fn kronecker() -> Self {
        Self::preset(2, vec![(0, 1), (0, 1)], "kronecker".into())
    }

    /// Looks up a preset by name: `jordan`, `kronecker`, `a<n>`, `cyclic<n>`.
    pub fn from_preset(name: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(alloc::format!("unknown quiver preset {name:?}"));
        match name {
            "jordan" => Ok(Self::jordan()),
            "kronecker" => Ok(Self::kronecker()),
            _ => {
                let parse = |s: &str| s.trim_start_matches('_').parse::<usize>().ok().filter(|&n| n >= 1);
                if let Some(rest) = name.strip_prefix("cyclic") {
                    parse(rest).map(Self::cyclic).ok_or_else(bad)
                } else if let Some(rest) = name.strip_prefix('a') {
                    parse(rest).map(Self::a_n).ok_or_else(bad)
                } else {
                    Err(bad())
                }
            }
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn is_jordan(&self) -> bool {
        self.n_vertices == 1 && self.arrows.len() == 1
    }

    pub fn is_kronecker(&self) -> bool {
        self.n_vertices == 2 && self.arrows == [(0, 1), (0, 1)]
    }

    pub fn is_connected(&self) -> bool {
        if self.n_vertices == 0 {
            return true;
        }
        let mut seen = vec![false; self.n_vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(t, h) in &self.arrows {
                for (a, b) in [(t, h), (h, t)] {
                    if a == v && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// True iff there is an oriented cycle (including loops).
    pub fn has_oriented_cycle(&self) -> bool {
        // Kahn's algorithm
        let mut indeg = vec![0usize; self.n_vertices];
        for &(_, h) in &self.arrows {
            indeg[h] += 1;
        }
        let mut stack: Vec<usize> = (0..self.n_vertices).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for &(t, h) in &self.arrows {
                if t == v {
                    indeg[h] -= 1;
                    if indeg[h] == 0 {
                        stack.push(h);
                    }
                }
            }
        }
        removed < self.n_vertices
    }

    fn check_dims(&self, d: &DimVec) -> Result<()> {
        if d.len() != self.n_vertices {
            return Err(Error::DimensionMismatch(alloc::format!(
                "dimension vector {d} for a quiver with {} vertices",
                self.n_vertices
            )));
        }
        Ok(())
    }

    /// `⟨d,e⟩ = Σ_i d_i e_i − Σ_a d_{t(a)} e_{h(a)}`.
    pub fn euler_form(&self, d: &DimVec, e: &DimVec) -> Result<i64> {
        self.check_dims(d)?;
        self.check_dims(e)?;
        let diag: i64 = d.0.iter().zip(&e.0).map(|(&a, &b)| (a * b) as i64).sum();
        let arrows: i64 = self.arrows.iter().map(|&(t, h)| (d.0[t] * e.0[h]) as i64).sum();
        Ok(diag - arrows)
    }

    /// Gram matrix of the symmetrized form `(d,e) = ⟨d,e⟩ + ⟨e,d⟩`.
    fn symmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.n_vertices;
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(t, h) in &self.arrows {
            m[t][h] -= 1;
            m[h][t] -= 1;
        }
        m
    }

    /// Minimal strictly positive integer vector spanning the radical of the
    /// symmetrized Euler form. Fails unless the radical is one-dimensional and
    /// contains such a vector.
    pub fn delta(&self) -> Result<DimVec> {
        let n = self.n_vertices;
        let mut m: Vec<Vec<Rational>> = self
            .symmetrized()
            .into_iter()
            .map(|r| r.into_iter().map(|x| Rational::from_integer(BigInt::from(x))).collect())
            .collect();
        // row reduce over Q
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            let Some(pr) = (r..n).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(pr, r);
            let inv = Rational::one() / m[r][c].clone();
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..n {
                if i != r && !m[i][c].is_zero() {
                    let fac = m[i][c].clone();
                    for j in 0..n {
                        let v = &m[r][j] * &fac;
                        m[i][j] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        if free.len() != 1 {
            return Err(Error::NotAffine);
        }
        let fc = free[0];
        let mut v = vec![Rational::zero(); n];
        v[fc] = Rational::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[i][fc].clone();
        }
        // clear denominators, then divide by the gcd
        let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let mut ints: Vec<BigInt> = ints.into_iter().map(|x| x / &g).collect();
        if ints.iter().all(|x| !x.is_positive()) {
            ints = ints.into_iter().map(|x| -x).collect();
        }
        if ints.iter().any(|x| !x.is_positive()) {
            return Err(Error::NotAffine);
        }
        Ok(DimVec(ints.into_iter().map(|x| x.to_usize().expect("small")).collect()))
    }

    /// `∂(e) = ⟨δ, e⟩`.
    pub fn defect(&self, e: &DimVec) -> Result<i64> {
        let delta = self.delta()?;
        self.euler_form(&delta, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dv(v: &[usize]) -> DimVec {
        DimVec(v.to_vec())
    }

    #[test]
    fn euler_form_examples() {
        let j = Quiver::jordan();
        for n in 0..4 {
            for m in 0..4 {
                assert_eq!(j.euler_form(&dv(&[n]), &dv(&[m])).unwrap(), 0);
            }
        }
        assert_eq!(Quiver::a_n(2).euler_form(&dv(&[1, 0]), &dv(&[0, 1])).unwrap(), -1);
        assert_eq!(Quiver::kronecker().euler_form(&dv(&[1, 0]), &dv(&[0, 1])).unwrap(), -2);
        assert!(Quiver::kronecker().euler_form(&dv(&[1]), &dv(&[0, 1])).is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(Quiver::kronecker().delta().unwrap(), dv(&[1, 1]));
        assert_eq!(Quiver::cyclic(3).delta().unwrap(), dv(&[1, 1, 1]));
        assert_eq!(Quiver::jordan().delta().unwrap(), dv(&[1]));
        assert_eq!(Quiver::a_n(2).delta(), Err(Error::NotAffine));
        // D̃_4, subspace orientation: δ = (2,1,1,1,1)
        let d4 = Quiver::new(5, vec![(1, 0), (2, 0), (3, 0), (4, 0)]).unwrap();
        assert_eq!(d4.delta().unwrap(), dv(&[2, 1, 1, 1, 1]));
    }

    /// δ by brute force: the smallest nonzero vector (by total) with
    /// ⟨δ,e⟩ + ⟨e,δ⟩ = 0 against every unit vector.
    fn delta_oracle(q: &Quiver) -> DimVec {
        let n = q.n_vertices();
        let bound = DimVec(vec![3; n]);
        let units: Vec<DimVec> = (0..n).map(|i| {
            let mut e = DimVec::zero(n);
            e.0[i] = 1;
            e
        }).collect();
        bound
            .below()
            .into_iter()
            .filter(|d| !d.is_zero())
            .filter(|d| units.iter().all(|e| q.euler_form(d, e).unwrap() + q.euler_form(e, d).unwrap() == 0))
            .min_by_key(|d| d.total())
            .unwrap()
    }

    #[test]
    fn delta_matches_oracle() {
        for q in [Quiver::kronecker(), Quiver::cyclic(2), Quiver::cyclic(3), Quiver::jordan()] {
            assert_eq!(q.delta().unwrap(), delta_oracle(&q));
        }
    }

    #[test]
    fn defect_examples() {
        let k = Quiver::kronecker();
        assert_eq!(k.defect(&dv(&[0, 1])).unwrap(), -1);
        assert_eq!(k.defect(&dv(&[1, 0])).unwrap(), 1);
        assert_eq!(k.defect(&dv(&[2, 2])).unwrap(), 0);
        // preprojectives (r, r+1) have defect -1, preinjectives (r+1, r) +1
        for r in 0..5 {
            assert_eq!(k.defect(&dv(&[r, r + 1])).unwrap(), -1);
            assert_eq!(k.defect(&dv(&[r + 1, r])).unwrap(), 1);
        }
        assert_eq!(Quiver::a_n(3).defect(&dv(&[1, 0, 0])), Err(Error::NotAffine));
    }

    #[test]
    fn presets_and_structure() {
        assert_eq!(Quiver::from_preset("a3").unwrap(), Quiver::a_n(3));
        assert_eq!(Quiver::from_preset("cyclic2").unwrap(), Quiver::cyclic(2));
        assert!(Quiver::from_preset("e8").is_err());
        assert!(Quiver::kronecker().is_connected());
        assert!(!Quiver::new(2, vec![]).unwrap().is_connected());
        assert!(Quiver::jordan().has_oriented_cycle());
        assert!(!Quiver::a_n(3).has_oriented_cycle());
        assert!(Quiver::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn below_lists_box() {
        let b = dv(&[1, 2]).below();
        assert_eq!(b.len(), 6);
        assert!(b.iter().all(|e| e.le(&dv(&[1, 2]))));
    }

    proptest! {
        #[test]
        fn euler_form_is_bilinear(d in prop::collection::vec(0usize..5, 2), d2 in prop::collection::vec(0usize..5, 2),
                                  e in prop::collection::vec(0usize..5, 2)) {
            for q in [Quiver::kronecker(), Quiver::a_n(2), Quiver::cyclic(2)] {
                let (d, d2, e) = (DimVec(d.clone()), DimVec(d2.clone()), DimVec(e.clone()));
                prop_assert_eq!(
                    q.euler_form(&d.add(&d2), &e).unwrap(),
                    q.euler_form(&d, &e).unwrap() + q.euler_form(&d2, &e).unwrap()
                );
                prop_assert_eq!(
                    q.euler_form(&e, &d.add(&d2)).unwrap(),
                    q.euler_form(&e, &d).unwrap() + q.euler_form(&e, &d2).unwrap()
                );
            }
        }
    }
}
