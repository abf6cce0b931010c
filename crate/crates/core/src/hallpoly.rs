//! Partitions, `a_λ`, Loewy partitions and universal Hall polynomials.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::count::{decompose, hall_number, iso_classes_filtered, is_indecomposable, ClassFilter};
use crate::gfq::{is_prime, make_field_with_budget, FPoly, Field};
use crate::quiver::{DimVec, Quiver};
use crate::rep::{direct_sum, hom_dim, jordan_module, jordan_type, Rep};
use crate::upoly::interpolate;
use crate::{Budget, Error, RatPoly, Rational, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(alloc::format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Exponent vector `(l_1, ..., l_n)`: `l_i` parts equal `i`.
    pub fn exponents(&self) -> Vec<usize> {
        let mut l = vec![0; self.largest()];
        for &p in &self.0 {
            l[p - 1] += 1;
        }
        l
    }

    pub fn from_exponents(l: &[usize]) -> Self {
        let mut parts = Vec::new();
        for (i, &m) in l.iter().enumerate().rev() {
            parts.extend(core::iter::repeat_n(i + 1, m));
        }
        Partition(parts)
    }

    pub fn conjugate(&self) -> Self {
        Partition((1..=self.largest()).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `Σ_{i,j} min(i,j) l_i l_j`, the dimension of the endomorphism ring of
    /// the module of type `λ`.
    pub fn n_end(&self) -> usize {
        self.conjugate().0.iter().map(|c| c * c).sum()
    }

    /// Every partition of `n`, largest parts first, in decreasing
    /// lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `a_λ(T) = T^{Σ min(i,j) l_i l_j} Π_i (1 − T^{-1}) ⋯ (1 − T^{-l_i})`,
/// the order of `Aut M(λ, t)` as a polynomial in `q`.
pub fn a_lambda_poly(lambda: &Partition) -> RatPoly {
    // rewrite each (1 − T^{-k}) as (T^k − 1)/T^k
    let l = lambda.exponents();
    let shift: usize = l.iter().map(|&li| li * (li + 1) / 2).sum();
    let mut out = RatPoly::monomial(lambda.n_end() - shift);
    for &li in &l {
        for k in 1..=li {
            out = out.mul(&RatPoly::monomial(k).sub(&RatPoly::one()));
        }
    }
    out
}

/// `λ ∪ μ`: exponent vectors add.
pub fn cup(lambda: &Partition, mu: &Partition) -> Partition {
    let mut parts = lambda.0.clone();
    parts.extend_from_slice(&mu.0);
    Partition::from_parts(parts)
}

/// Reverse lexicographic order on exponent vectors: `λ < μ` iff at the
/// largest `i` where `l_i ≠ m_i` we have `l_i > m_i`. So `(2) < (1,1)`.
pub fn reverse_lex_less(lambda: &Partition, mu: &Partition) -> bool {
    let (l, m) = (lambda.exponents(), mu.exponents());
    let n = l.len().max(m.len());
    for i in (0..n).rev() {
        let (a, b) = (l.get(i).copied().unwrap_or(0), m.get(i).copied().unwrap_or(0));
        if a != b {
            return a > b;
        }
    }
    false
}

/// Loewy lengths of the indecomposable summands of a nilpotent module over
/// a cyclic quiver (the Jordan quiver included).
pub fn loewy_partition(m: &Rep) -> Result<Partition> {
    if !m.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    if m.quiver().is_jordan() {
        let jt = jordan_type(m.mat(0), m.field());
        return Ok(jt.0.into_iter().next().map(|(_, l)| l).unwrap_or_default());
    }
    let mut parts = Vec::new();
    for x in decompose(m)? {
        parts.push(x.loewy_length()?);
    }
    Ok(Partition::from_parts(parts))
}

/// Prime powers `2, 3, 4, 5, 7, 8, 9, 11, ...` up to `max_q`, as `(p, e, q)`.
pub fn prime_powers(max_q: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for q in 2..=max_q {
        let p = (2..=q).find(|&p| q % p == 0).expect("q >= 2");
        if !is_prime(p) {
            continue;
        }
        let (mut r, mut e) = (q, 0);
        while r % p == 0 {
            r /= p;
            e += 1;
        }
        if r == 1 {
            out.push((p, e, q));
        }
    }
    out
}

/// Samples `sample(field)` at prime powers in increasing order, skipping
/// fields where a budget is exceeded, until `degree_bound + 2` values are in
/// hand, and interpolates. A negative bound means the function must vanish.
fn sample_and_interpolate(
    degree_bound: i64,
    budget: &Budget,
    mut sample: impl FnMut(&Field) -> Result<Option<Rational>>,
) -> Result<RatPoly> {
    let bound = degree_bound.max(0) as usize;
    let needed = bound + 2;
    let mut samples = Vec::new();
    for (p, e, q) in prime_powers(budget.max_q) {
        if samples.len() == needed {
            break;
        }
        let field = make_field_with_budget(p, e, *budget)?;
        match sample(&field) {
            Ok(Some(v)) => samples.push((q as i64, v)),
            Ok(None) | Err(Error::BudgetExceeded { .. }) => continue,
            Err(err) => return Err(err),
        }
    }
    if samples.len() < needed {
        return Err(Error::InsufficientSamples { needed, got: samples.len() });
    }
    let poly = interpolate(&samples, bound)?;
    if degree_bound < 0 && !poly.is_zero() {
        return Err(Error::Inconsistent {
            point: samples[0].0,
            expected: "0".into(),
            found: format!("{}", samples[0].1),
        });
    }
    Ok(poly)
}

fn count_to_rational(c: crate::Count) -> Rational {
    Rational::from_integer(BigInt::from(c))
}

/// `⌊(deg a_ν − deg a_λ − deg a_μ) / 2⌋`, the degree bound for the classical
/// Hall polynomial `F_{λμ}^ν`.
pub fn classical_degree_bound(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let d = nu.n_end() as i64 - lambda.n_end() as i64 - mu.n_end() as i64;
    d.div_euclid(2)
}

/// The classical Hall polynomial `F_{λμ}^ν`: the number of submodules of
/// type `μ` in the nilpotent `F_q[t]`-module of type `ν` with quotient of
/// type `λ`, reconstructed by exact counting at several `q` and
/// interpolation.
pub fn classical_hall_poly(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<RatPoly> {
    classical_hall_poly_with(lambda, mu, nu, &Budget::default())
}

pub fn classical_hall_poly_with(lambda: &Partition, mu: &Partition, nu: &Partition, budget: &Budget) -> Result<RatPoly> {
    if nu.size() != lambda.size() + mu.size() {
        return Ok(RatPoly::zero());
    }
    let bound = classical_degree_bound(lambda, mu, nu);
    sample_and_interpolate(bound, budget, |field| {
        let t = FPoly::t();
        let (m, n, x) = (jordan_module(lambda, &t, field)?, jordan_module(mu, &t, field)?, jordan_module(nu, &t, field)?);
        Ok(Some(count_to_rational(hall_number(&m, &n, &x)?)))
    })
}

/// `F_{M M^m}^{M^{m+1}} = 1 + T + ⋯ + T^m` for exceptional `M`.
pub fn exceptional_poly(m: usize) -> RatPoly {
    (0..=m).fold(RatPoly::zero(), |acc, k| acc.add(&RatPoly::monomial(k)))
}

/// Label of an indecomposable in a [`DiscreteClass`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    /// Dynkin quivers: the dimension vector (a positive root).
    Root(DimVec),
    /// Nilpotent cyclic quivers: the uniserial module with simple top at
    /// `top` and Loewy length `length`.
    Uniserial { top: usize, length: usize },
}

/// Field-independent class: a multiset of indecomposable labels, the
/// direct sum of the labelled modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteClass {
    pub quiver: Quiver,
    pub labels: Vec<ClassLabel>,
}

impl DiscreteClass {
    pub fn new(quiver: Quiver, labels: Vec<ClassLabel>) -> Self {
        DiscreteClass { quiver, labels }
    }

    pub fn dims(&self) -> DimVec {
        let n = self.quiver.n_vertices();
        let mut d = DimVec::zero(n);
        for l in &self.labels {
            d = d.add(&label_dims(l, n));
        }
        d
    }

    /// The representative over `field`.
    pub fn instantiate(&self, field: &Field) -> Result<Rep> {
        let n = self.quiver.n_vertices();
        let mut out = Rep::zero(self.quiver.clone(), field.clone(), DimVec::zero(n))?;
        for l in &self.labels {
            out = direct_sum(&out, &instantiate_label(&self.quiver, l, field)?)?;
        }
        Ok(out)
    }
}

fn label_dims(l: &ClassLabel, n: usize) -> DimVec {
    match l {
        ClassLabel::Root(d) => d.clone(),
        ClassLabel::Uniserial { top, length } => {
            let mut d = DimVec::zero(n);
            for k in 0..*length {
                d.0[(top + k) % n] += 1;
            }
            d
        }
    }
}

/// The unique indecomposable with the given label over `field`.
pub fn instantiate_label(q: &Quiver, l: &ClassLabel, field: &Field) -> Result<Rep> {
    let n = q.n_vertices();
    let d = label_dims(l, n);
    if d.len() != n {
        return Err(Error::BadLabel(format!("{l:?} on a quiver with {n} vertices")));
    }
    let filter = match l {
        ClassLabel::Root(_) => ClassFilter::All,
        ClassLabel::Uniserial { top, .. } => {
            if *top >= n {
                return Err(Error::BadLabel(format!("{l:?}: no vertex {top}")));
            }
            ClassFilter::Nilpotent
        }
    };
    let table = iso_classes_filtered(q, &d, field, filter)?;
    let mut found = Vec::new();
    for e in table.entries() {
        if !is_indecomposable(&e.rep)? {
            continue;
        }
        let keep = match l {
            ClassLabel::Root(_) => true,
            ClassLabel::Uniserial { top, length } => {
                let mut want_top = DimVec::zero(n);
                want_top.0[*top] = 1;
                e.rep.top_dims() == want_top && e.rep.loewy_length()? == *length
            }
        };
        if keep {
            found.push(e.rep.clone());
        }
    }
    match found.len() {
        1 => Ok(found.pop().expect("one element")),
        0 => Err(Error::BadLabel(format!("no indecomposable for {l:?}"))),
        k => Err(Error::BadLabel(format!("{k} indecomposables for {l:?}"))),
    }
}

/// Degree bound for `F_{MN}^X` over discrete classes: the smaller of
/// `Σ_i e_i (c_i − e_i)` (the dimension of the ambient product of
/// Grassmannians, `e = dim N`, `c = dim X`) and
/// `[M,N]¹ − [M,N] + [X,X] − [M,M] − [N,N]` (one term of Riedtmann's sum
/// is at most the whole sum).
pub fn discrete_degree_bound(m: &Rep, n: &Rep, x: &Rep) -> Result<i64> {
    let grass: i64 = n.dims().0.iter().zip(&x.dims().0).map(|(&e, &c)| (e * (c - e)) as i64).sum();
    let hom = hom_dim(m, n)? as i64;
    let euler = m.quiver().euler_form(m.dims(), n.dims())?;
    let ext = hom - euler;
    let ried = ext - hom + hom_dim(x, x)? as i64 - hom_dim(m, m)? as i64 - hom_dim(n, n)? as i64;
    Ok(grass.min(ried))
}

/// Universal Hall polynomial `F_{μν}^ξ` for discrete classes over a Dynkin
/// or nilpotent cyclic quiver, by exact counting at several `q` and
/// interpolation.
pub fn universal_hall_poly(mu: &DiscreteClass, nu: &DiscreteClass, xi: &DiscreteClass, budget: &Budget) -> Result<RatPoly> {
    if mu.quiver != nu.quiver || mu.quiver != xi.quiver {
        return Err(Error::Mismatch("discrete classes on different quivers".into()));
    }
    if mu.dims().add(&nu.dims()) != xi.dims() {
        return Ok(RatPoly::zero());
    }
    let mut bound = None;
    // the bound is field independent; compute it at the first usable field
    for (p, e, _) in prime_powers(budget.max_q) {
        let field = make_field_with_budget(p, e, *budget)?;
        match (mu.instantiate(&field), nu.instantiate(&field), xi.instantiate(&field)) {
            (Ok(m), Ok(n), Ok(x)) => {
                bound = Some(discrete_degree_bound(&m, &n, &x)?);
                break;
            }
            (Err(Error::BudgetExceeded { .. }), _, _)
            | (_, Err(Error::BudgetExceeded { .. }), _)
            | (_, _, Err(Error::BudgetExceeded { .. })) => continue,
            (Err(err), _, _) | (_, Err(err), _) | (_, _, Err(err)) => return Err(err),
        }
    }
    let bound = bound.ok_or(Error::InsufficientSamples { needed: 1, got: 0 })?;
    sample_and_interpolate(bound, budget, |field| {
        let (m, n, x) = (mu.instantiate(field)?, nu.instantiate(field)?, xi.instantiate(field)?);
        Ok(Some(count_to_rational(hall_number(&m, &n, &x)?)))
    })
}
