//! Segre symbols, their counting polynomials, Segre Hall polynomials and
//! Kronecker decomposition classes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::count::{for_each_invariant_subspace, hall_number};
use crate::gfq::{make_field_with_budget, monic_irreducibles, FPoly, Field, FieldCtx};
use crate::hallpoly::{a_lambda_poly, classical_hall_poly_with, prime_powers, Partition};
use crate::quiver::{DimVec, Quiver};
use crate::rep::{direct_sum, is_isomorphic, jordan_module, kronecker_preset, kronecker_regular, sub_quotient, KroneckerKind, P1Point, Rep};
use crate::upoly::interpolate;
use crate::verify::CheckReport;
use crate::{Budget, Error, RatPoly, Rational, Result};

/// Multiset of `(λ, d)` pairs with `λ` nonempty and `d ≥ 1`, stored sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SegreSymbol(Vec<(Partition, usize)>);

impl SegreSymbol {
    pub fn new(mut entries: Vec<(Partition, usize)>) -> Result<Self> {
        if let Some((l, d)) = entries.iter().find(|(l, d)| l.is_empty() || *d == 0) {
            return Err(Error::InvalidInput(format!("bad Segre entry ({l}, {d})")));
        }
        entries.sort();
        Ok(SegreSymbol(entries))
    }

    pub fn empty() -> Self {
        SegreSymbol(Vec::new())
    }

    pub fn entries(&self) -> &[(Partition, usize)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ |λ_i| d_i`, the dimension of every module in the class.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|(l, d)| l.size() * d).sum()
    }

    /// Distinct degrees, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        self.0.iter().map(|(_, d)| *d).sorted().dedup().collect()
    }

    /// The partitions of degree `d` (`σ(d)`).
    pub fn part(&self, d: usize) -> Vec<Partition> {
        self.0.iter().filter(|(_, e)| *e == d).map(|(l, _)| l.clone()).collect()
    }

    /// Every Segre symbol of weight `w`.
    pub fn all_of_weight(w: usize) -> Vec<SegreSymbol> {
        let mut atoms = Vec::new();
        for d in 1..=w {
            for s in 1..=w / d {
                for l in Partition::all_of(s) {
                    atoms.push((l, d));
                }
            }
        }
        atoms.sort();
        fn rec(atoms: &[(Partition, usize)], start: usize, left: usize, cur: &mut Vec<(Partition, usize)>, out: &mut Vec<SegreSymbol>) {
            if left == 0 {
                out.push(SegreSymbol(cur.clone()));
                return;
            }
            for i in start..atoms.len() {
                let wt = atoms[i].0.size() * atoms[i].1;
                if wt <= left {
                    cur.push(atoms[i].clone());
                    rec(atoms, i, left - wt, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(&atoms, 0, w, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for SegreSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (l, d)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({l},{d})")?;
        }
        write!(f, "}}")
    }
}

/// Möbius function.
fn mobius(mut n: usize) -> i64 {
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            out = -out;
        }
        p += 1;
    }
    if n > 1 {
        out = -out;
    }
    out
}

/// `φ_d(T) = (1/d) Σ_{e | d} μ(e) T^{d/e}`, the number of monic irreducible
/// polynomials of degree `d` over `F_T`.
pub fn phi_poly(d: usize) -> RatPoly {
    assert!(d >= 1);
    let mut out = RatPoly::zero();
    for e in (1..=d).filter(|e| d.is_multiple_of(*e)) {
        let c = Rational::from_integer(BigInt::from(mobius(e)));
        out = out.add(&RatPoly::monomial(d / e).scale(&c));
    }
    out.scale(&Rational::new(BigInt::from(1), BigInt::from(d)))
}

/// Number of closed points of degree `d` on `P¹`: `T + 1` for `d = 1`,
/// `φ_d` otherwise.
pub fn p1_points_poly(d: usize) -> RatPoly {
    if d == 1 {
        RatPoly::from_ints(&[1, 1])
    } else {
        phi_poly(d)
    }
}

/// `Π (multiplicity)!` over the distinct partitions in the list.
pub fn z_sigma(parts: &[Partition]) -> u64 {
    parts
        .iter()
        .sorted()
        .chunk_by(|p| *p)
        .into_iter()
        .map(|(_, g)| (1..=g.count() as u64).product::<u64>())
        .product()
}

/// `(φ − start)(φ − start − 1) ⋯ (φ − start − r + 1)`.
fn falling(phi: &RatPoly, start: usize, r: usize) -> RatPoly {
    (0..r).fold(RatPoly::one(), |acc, k| acc.mul(&phi.sub(&RatPoly::from_ints(&[(start + k) as i64]))))
}

fn n_poly_with(sigma: &SegreSymbol, points: impl Fn(usize) -> RatPoly) -> RatPoly {
    let mut out = RatPoly::one();
    for d in sigma.degrees() {
        let parts = sigma.part(d);
        let z = Rational::from_integer(BigInt::from(z_sigma(&parts)));
        out = out.mul(&falling(&points(d), 0, parts.len()).scale(&(Rational::from_integer(BigInt::from(1)) / z)));
    }
    out
}

/// `n_σ`: the number of classes in `S(σ, F_q)` for the Jordan quiver.
pub fn n_sigma_poly(sigma: &SegreSymbol) -> RatPoly {
    n_poly_with(sigma, phi_poly)
}

/// `n_σ` with points taken on `P¹` (regular Kronecker modules).
pub fn n_sigma_poly_p1(sigma: &SegreSymbol) -> RatPoly {
    n_poly_with(sigma, p1_points_poly)
}

/// `a_σ(T) = Π_i a_{λ_i}(T^{d_i})`.
pub fn a_sigma_poly(sigma: &SegreSymbol) -> RatPoly {
    sigma.0.iter().fold(RatPoly::one(), |acc, (l, d)| acc.mul(&a_lambda_poly(l).compose_pow(*d)))
}

/// All ways to put the partitions of `parts` on distinct elements of
/// `points`, up to permuting equal partitions. Each result lists
/// `(partition, point)` in the order of the sorted distinct partitions.
pub fn place<P: Clone>(parts: &[Partition], points: &[P]) -> Vec<Vec<(Partition, P)>> {
    let groups: Vec<(Partition, usize)> =
        parts.iter().sorted().chunk_by(|p| (*p).clone()).into_iter().map(|(p, g)| (p, g.count())).collect();
    fn rec<P: Clone>(
        groups: &[(Partition, usize)],
        free: Vec<usize>,
        points: &[P],
        cur: &mut Vec<(Partition, P)>,
        out: &mut Vec<Vec<(Partition, P)>>,
    ) {
        let Some(((p, k), rest)) = groups.split_first() else {
            out.push(cur.clone());
            return;
        };
        for chosen in free.iter().copied().combinations(*k) {
            let remaining: Vec<usize> = free.iter().copied().filter(|i| !chosen.contains(i)).collect();
            let before = cur.len();
            cur.extend(chosen.iter().map(|&i| (p.clone(), points[i].clone())));
            rec(rest, remaining, points, cur, out);
            cur.truncate(before);
        }
    }
    let mut out = Vec::new();
    rec(&groups, (0..points.len()).collect(), points, &mut Vec::new(), &mut out);
    out
}

/// Distinct arrangements of a multiset of partitions on positions
/// `0..len`, each returned as the partition at every position.
fn arrangements(parts: &[Partition], len: usize) -> Vec<Vec<Partition>> {
    let positions: Vec<usize> = (0..len).collect();
    place(parts, &positions)
        .into_iter()
        .map(|pl| {
            let mut v = vec![Partition::empty(); len];
            for (p, i) in pl {
                v[i] = p;
            }
            v
        })
        .collect()
}

fn too_small(degree: usize, needed: usize, available: usize) -> Error {
    Error::FieldTooSmall { degree, needed, available }
}

/// Every class in `S(σ, F_q)` as a concrete Jordan-quiver module.
pub fn enumerate_class(sigma: &SegreSymbol, field: &Field) -> Result<Vec<Rep>> {
    let mut out = vec![Rep::zero(Quiver::jordan(), field.clone(), DimVec(vec![0]))?];
    for d in sigma.degrees() {
        let parts = sigma.part(d);
        let points = monic_irreducibles(field, d)?;
        if points.len() < parts.len() {
            return Err(too_small(d, parts.len(), points.len()));
        }
        let mut next = Vec::new();
        for pl in place(&parts, &points) {
            let mut m = Rep::zero(Quiver::jordan(), field.clone(), DimVec(vec![0]))?;
            for (l, p) in &pl {
                m = direct_sum(&m, &jordan_module(l, p, field)?)?;
            }
            for base in &out {
                next.push(direct_sum(base, &m)?);
            }
        }
        out = next;
    }
    Ok(out)
}

type ClassicalCache = BTreeMap<(Partition, Partition, Partition), RatPoly>;

fn classical(cache: &mut ClassicalCache, l: &Partition, m: &Partition, n: &Partition, budget: &Budget) -> Result<RatPoly> {
    let key = (l.clone(), m.clone(), n.clone());
    if let Some(p) = cache.get(&key) {
        return Ok(p.clone());
    }
    let p = if l.is_empty() && m.is_empty() && n.is_empty() {
        RatPoly::one()
    } else {
        classical_hall_poly_with(l, m, n, budget)?
    };
    cache.insert(key, p.clone());
    Ok(p)
}

fn all_degrees(syms: &[&SegreSymbol]) -> Vec<usize> {
    syms.iter().flat_map(|s| s.degrees()).sorted().dedup().collect()
}

fn padded(mut v: Vec<Partition>, len: usize) -> Option<Vec<Partition>> {
    if v.len() > len {
        return None;
    }
    v.resize(len, Partition::empty());
    Some(v)
}

/// `F_{ρσ}^τ`: for every `T ∈ S(τ, F_q)`, `Σ_{R ∈ S(ρ), S ∈ S(σ)} F_{RS}^T`.
///
/// Splits by degree; within degree `d`, pads `ρ(d)` and `σ(d)` to the length
/// of `τ(d)` and sums `Π_i F_{λ_{r(i)} μ_{s(i)}}^{ν_i}(T^d)` over distinct
/// arrangements `r`, `s`.
pub fn segre_hall_poly(rho: &SegreSymbol, sigma: &SegreSymbol, tau: &SegreSymbol) -> Result<RatPoly> {
    segre_hall_poly_with(rho, sigma, tau, &Budget::default())
}

pub fn segre_hall_poly_with(rho: &SegreSymbol, sigma: &SegreSymbol, tau: &SegreSymbol, budget: &Budget) -> Result<RatPoly> {
    let mut cache = ClassicalCache::new();
    let mut out = RatPoly::one();
    for d in all_degrees(&[rho, sigma, tau]) {
        let nus = tau.part(d);
        let m = nus.len();
        let (Some(lams), Some(mus)) = (padded(rho.part(d), m), padded(sigma.part(d), m)) else {
            return Ok(RatPoly::zero());
        };
        let mut sum = RatPoly::zero();
        for r in arrangements(&lams, m) {
            for s in arrangements(&mus, m) {
                let mut term = RatPoly::one();
                for i in 0..m {
                    term = term.mul(&classical(&mut cache, &r[i], &s[i], &nus[i], budget)?);
                    if term.is_zero() {
                        break;
                    }
                }
                sum = sum.add(&term);
            }
        }
        out = out.mul(&sum.compose_pow(d));
        if out.is_zero() {
            break;
        }
    }
    Ok(out)
}

/// Sub-multisets of `of` with `n` elements that are also contained in
/// `within`.
fn common_submultisets(of: &[Partition], within: &[Partition], n: usize) -> Vec<Vec<Partition>> {
    let groups: Vec<(Partition, usize)> =
        of.iter().sorted().chunk_by(|p| (*p).clone()).into_iter().map(|(p, g)| (p, g.count())).collect();
    let cap = |p: &Partition| within.iter().filter(|x| *x == p).count();
    fn rec(groups: &[(Partition, usize)], left: usize, cap: &dyn Fn(&Partition) -> usize, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        let Some(((p, c), rest)) = groups.split_first() else {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        };
        for k in 0..=(*c).min(cap(p)).min(left) {
            let before = cur.len();
            cur.extend(core::iter::repeat_n(p.clone(), k));
            rec(rest, left - k, cap, cur, out);
            cur.truncate(before);
        }
    }
    let mut out = Vec::new();
    rec(&groups, n, &cap, &mut Vec::new(), &mut out);
    out
}

fn minus(from: &[Partition], take: &[Partition]) -> Vec<Partition> {
    let mut rest = from.to_vec();
    for t in take {
        let i = rest.iter().position(|x| x == t).expect("sub-multiset");
        rest.remove(i);
    }
    rest
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Fixed {
    R,
    S,
}

/// Shared body of the fixed-`R` and fixed-`S` sums: within one degree, the
/// summands of `T` away from the support of the fixed module form a common
/// part `ξ` of `T` and the free module, counted by
/// `N_ξ = (φ_d − m) ⋯ (φ_d − m − n + 1) / z_ξ`.
fn fixed_sum(rho: &SegreSymbol, sigma: &SegreSymbol, tau: &SegreSymbol, which: Fixed, budget: &Budget) -> Result<RatPoly> {
    let mut cache = ClassicalCache::new();
    let (fixed, free) = match which {
        Fixed::R => (rho, sigma),
        Fixed::S => (sigma, rho),
    };
    let mut out = RatPoly::one();
    for d in all_degrees(&[rho, sigma, tau]) {
        let fixed_parts = fixed.part(d);
        let free_parts = free.part(d);
        let nus = tau.part(d);
        let m = fixed_parts.len();
        let Some(n) = nus.len().checked_sub(m) else { return Ok(RatPoly::zero()) };
        let mut sum = RatPoly::zero();
        for xi in common_submultisets(&nus, &free_parts, n) {
            let tau_rest = minus(&nus, &xi);
            let Some(free_rest) = padded(minus(&free_parts, &xi), m) else { continue };
            let mut inner = RatPoly::zero();
            for t in arrangements(&tau_rest, m) {
                for s in arrangements(&free_rest, m) {
                    let mut term = RatPoly::one();
                    for i in 0..m {
                        let f = match which {
                            Fixed::R => classical(&mut cache, &fixed_parts[i], &s[i], &t[i], budget)?,
                            Fixed::S => classical(&mut cache, &s[i], &fixed_parts[i], &t[i], budget)?,
                        };
                        term = term.mul(&f);
                        if term.is_zero() {
                            break;
                        }
                    }
                    inner = inner.add(&term);
                }
            }
            let n_xi = falling(&phi_poly(d), m, n).scale(&Rational::new(BigInt::from(1), BigInt::from(z_sigma(&xi))));
            sum = sum.add(&inner.compose_pow(d).mul(&n_xi));
        }
        out = out.mul(&sum);
        if out.is_zero() {
            break;
        }
    }
    Ok(out)
}

/// `Σ_{S ∈ S(σ), T ∈ S(τ)} F_{RS}^T` for any fixed `R ∈ S(ρ, F_q)`.
pub fn fixed_r_poly(rho: &SegreSymbol, sigma: &SegreSymbol, tau: &SegreSymbol) -> Result<RatPoly> {
    fixed_sum(rho, sigma, tau, Fixed::R, &Budget::default())
}

/// `Σ_{R ∈ S(ρ), T ∈ S(τ)} F_{RS}^T` for any fixed `S ∈ S(σ, F_q)`.
pub fn fixed_s_poly(rho: &SegreSymbol, sigma: &SegreSymbol, tau: &SegreSymbol) -> Result<RatPoly> {
    fixed_sum(rho, sigma, tau, Fixed::S, &Budget::default())
}

fn q_rat(f: &FieldCtx) -> Rational {
    Rational::from_integer(BigInt::from(f.q()))
}

fn count_rat(c: u64) -> Rational {
    Rational::from_integer(BigInt::from(c))
}

/// Brute-force check of the three sums over Segre classes against the
/// symbolic polynomials, for every choice of the fixed module.
pub fn segre_sum_check(rho: &SegreSymbol, sigma: &SegreSymbol, tau: &SegreSymbol, field: &Field) -> Result<Vec<CheckReport>> {
    let (rs, ss, ts) = (enumerate_class(rho, field)?, enumerate_class(sigma, field)?, enumerate_class(tau, field)?);
    let mut table = vec![vec![vec![0u64; ts.len()]; ss.len()]; rs.len()];
    for (i, r) in rs.iter().enumerate() {
        for (j, s) in ss.iter().enumerate() {
            for (k, t) in ts.iter().enumerate() {
                let h = hall_number(r, s, t)?;
                table[i][j][k] = u64::try_from(h).map_err(|_| Error::Internal("Hall number overflow".into()))?;
            }
        }
    }
    let q = q_rat(field);
    let f_poly = segre_hall_poly_with(rho, sigma, tau, field.budget())?;
    let (fr, fs) = (fixed_sum(rho, sigma, tau, Fixed::R, field.budget())?, fixed_sum(rho, sigma, tau, Fixed::S, field.budget())?);
    let (nr, ns, nt) = (n_sigma_poly(rho).eval(&q), n_sigma_poly(sigma).eval(&q), n_sigma_poly(tau).eval(&q));
    let f_val = f_poly.eval(&q);
    let inst = |what: &str, idx: usize| format!("rho={rho} sigma={sigma} tau={tau} q={} {what}#{idx}", field.q());
    let mut out = Vec::new();
    for k in 0..ts.len() {
        let sum: u64 = (0..rs.len()).flat_map(|i| (0..ss.len()).map(move |j| (i, j))).map(|(i, j)| table[i][j][k]).sum();
        out.push(CheckReport::new("segre_fixed_t", inst("T", k), count_rat(sum), f_val.clone()));
    }
    for i in 0..rs.len() {
        let sum: u64 = table[i].iter().flatten().sum();
        out.push(CheckReport::new("segre_fixed_r", inst("R", i), &nt * &f_val, &nr * count_rat(sum)));
        out.push(CheckReport::new("segre_fixed_r_poly", inst("R", i), count_rat(sum), fr.eval(&q)));
    }
    for j in 0..ss.len() {
        let sum: u64 = (0..rs.len()).map(|i| table[i][j].iter().sum::<u64>()).sum();
        out.push(CheckReport::new("segre_fixed_s", inst("S", j), &nt * &f_val, &ns * count_rat(sum)));
        out.push(CheckReport::new("segre_fixed_s_poly", inst("S", j), count_rat(sum), fs.eval(&q)));
    }
    Ok(out)
}

/// Kronecker decomposition symbol: preprojectives `P_r`, preinjectives
/// `I_r`, and a Segre symbol for the homogeneous regular part over `P¹`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecompSymbol {
    pub p: Vec<usize>,
    pub i: Vec<usize>,
    pub regular: SegreSymbol,
}

impl DecompSymbol {
    pub fn new(mut p: Vec<usize>, mut i: Vec<usize>, regular: SegreSymbol) -> Self {
        p.sort_unstable();
        i.sort_unstable();
        DecompSymbol { p, i, regular }
    }

    pub fn dims(&self) -> DimVec {
        let mut d = [0usize, 0];
        for &r in &self.p {
            d[0] += r;
            d[1] += r + 1;
        }
        for &r in &self.i {
            d[0] += r + 1;
            d[1] += r;
        }
        let w = self.regular.weight();
        DimVec(vec![d[0] + w, d[1] + w])
    }
}

impl fmt::Display for DecompSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.p.iter().map(|r| format!("P{r}")).join(",");
        let i = self.i.iter().map(|r| format!("I{r}")).join(",");
        write!(f, "([{p}],[{i}],{})", self.regular)
    }
}

/// Closed points of `P¹` of degree `d`: `t − a` for `a ∈ F_q` and `∞` when
/// `d = 1`, the monic irreducibles otherwise.
pub fn p1_points(field: &Field, d: usize) -> Result<Vec<P1Point>> {
    if d == 1 {
        let mut pts: Vec<P1Point> = field.elements().map(|a| P1Point::Finite(FPoly::linear(a, field))).collect();
        pts.push(P1Point::Infinity);
        return Ok(pts);
    }
    Ok(monic_irreducibles(field, d)?.into_iter().map(P1Point::Finite).collect())
}

/// `n_α`: the number of classes in `S(α, F_q)`.
pub fn n_alpha_poly(alpha: &DecompSymbol) -> RatPoly {
    n_sigma_poly_p1(&alpha.regular)
}

/// Every class in `S(α, F_q)` for the Kronecker quiver.
pub fn decomp_enumerate(alpha: &DecompSymbol, field: &Field) -> Result<Vec<Rep>> {
    let mut base = Rep::zero(Quiver::kronecker(), field.clone(), DimVec(vec![0, 0]))?;
    for &r in &alpha.p {
        base = direct_sum(&base, &kronecker_preset(KroneckerKind::P, r, field)?)?;
    }
    for &r in &alpha.i {
        base = direct_sum(&base, &kronecker_preset(KroneckerKind::I, r, field)?)?;
    }
    let mut out = vec![base];
    for d in alpha.regular.degrees() {
        let parts = alpha.regular.part(d);
        let points = p1_points(field, d)?;
        if points.len() < parts.len() {
            return Err(too_small(d, parts.len(), points.len()));
        }
        let mut next = Vec::new();
        for pl in place(&parts, &points) {
            let mut m = Rep::zero(Quiver::kronecker(), field.clone(), DimVec(vec![0, 0]))?;
            for (l, x) in &pl {
                m = direct_sum(&m, &kronecker_regular(l, x, field)?)?;
            }
            for b in &out {
                next.push(direct_sum(b, &m)?);
            }
        }
        out = next;
    }
    Ok(out)
}

/// Like [`decomp_enumerate`], but an empty class when the field has too few
/// points.
fn decomp_enumerate_or_empty(alpha: &DecompSymbol, field: &Field) -> Result<Vec<Rep>> {
    match decomp_enumerate(alpha, field) {
        Err(Error::FieldTooSmall { .. }) => Ok(Vec::new()),
        other => other,
    }
}

/// `Σ_{A ∈ S(α), B ∈ S(β)} F_{AB}^C` for one `C`, by one pass over the
/// subrepresentations of `C` of dimension `dim β`.
pub fn decomp_class_sum(alphas: &[Rep], betas: &[Rep], c: &Rep, e: &DimVec) -> Result<u64> {
    let mut count = 0u64;
    if alphas.is_empty() || betas.is_empty() || !e.le(c.dims()) {
        return Ok(0);
    }
    for_each_invariant_subspace(c, e, |u| {
        let (sub, quo) = sub_quotient(c, u)?;
        let mut hit = false;
        for b in betas {
            if is_isomorphic(&sub, b)? {
                hit = true;
                break;
            }
        }
        if hit {
            for a in alphas {
                if is_isomorphic(&quo, a)? {
                    count += 1;
                    break;
                }
            }
        }
        Ok(())
    })?;
    Ok(count)
}

/// `F_{αβ}^γ` for Kronecker decomposition symbols: the class sum
/// `Σ_{A ∈ S(α), B ∈ S(β)} F_{AB}^C`, checked to be the same for every
/// `C ∈ S(γ, F_q)`, sampled at prime powers and interpolated. The degree
/// bound is `Σ_i e_i (c_i − e_i)` with `e = dim β`, `c = dim γ`: the sum
/// counts some of the subrepresentations of `C` of dimension `e`.
pub fn decomp_hall_poly(alpha: &DecompSymbol, beta: &DecompSymbol, gamma: &DecompSymbol, budget: &Budget) -> Result<RatPoly> {
    let (e, c) = (beta.dims(), gamma.dims());
    if alpha.dims().add(&e) != c {
        return Ok(RatPoly::zero());
    }
    let bound: usize = e.0.iter().zip(&c.0).map(|(&a, &b)| a * (b - a)).sum();
    let needed = bound + 2;
    let mut samples = Vec::new();
    for (p, ex, q) in prime_powers(budget.max_q) {
        if samples.len() == needed {
            break;
        }
        let field = make_field_with_budget(p, ex, *budget)?;
        let attempt = (|| -> Result<Option<u64>> {
            let cs = decomp_enumerate_or_empty(gamma, &field)?;
            if cs.is_empty() {
                return Ok(None);
            }
            let (alphas, betas) = (decomp_enumerate_or_empty(alpha, &field)?, decomp_enumerate_or_empty(beta, &field)?);
            let mut value = None;
            for cc in &cs {
                let v = decomp_class_sum(&alphas, &betas, cc, &e)?;
                match value {
                    None => value = Some(v),
                    Some(w) if w != v => {
                        return Err(Error::NotUniversal(format!(
                            "class sum {w} versus {v} for two modules of {gamma} over F_{q}"
                        )))
                    }
                    _ => {}
                }
            }
            Ok(value)
        })();
        match attempt {
            Ok(Some(v)) => samples.push((q as i64, count_rat(v))),
            Ok(None) | Err(Error::BudgetExceeded { .. }) => continue,
            Err(err) => return Err(err),
        }
    }
    if samples.len() < needed {
        return Err(Error::InsufficientSamples { needed, got: samples.len() });
    }
    interpolate(&samples, bound)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{is_indecomposable, iso_classes};
    use crate::make_field;
    use crate::rep::aut_size;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn sym(entries: &[(&[usize], usize)]) -> SegreSymbol {
        SegreSymbol::new(entries.iter().map(|(l, d)| (part(l), *d)).collect()).unwrap()
    }

    fn ints(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn frac(num: &[i64], den: i64) -> RatPoly {
        ints(num).scale(&Rational::new(BigInt::from(1), BigInt::from(den)))
    }

    fn example() -> (SegreSymbol, SegreSymbol, SegreSymbol) {
        (
            sym(&[(&[1, 1], 1), (&[1, 1, 1], 1), (&[2, 1], 1)]),
            sym(&[(&[1], 1), (&[1], 1)]),
            sym(&[(&[1, 1, 1], 1), (&[2, 1, 1], 1), (&[2, 1], 1)]),
        )
    }

    #[test]
    fn symbol_validation() {
        assert!(SegreSymbol::new(vec![(Partition::empty(), 1)]).is_err());
        assert!(SegreSymbol::new(vec![(part(&[1]), 0)]).is_err());
        assert_eq!(sym(&[(&[2], 1), (&[1], 1)]), sym(&[(&[1], 1), (&[2], 1)]));
        assert_eq!(example().2.weight(), 10);
        // weight 2: {(2),1}, {(1,1),1}, {(1),1}², {(1),2}
        assert_eq!(SegreSymbol::all_of_weight(2).len(), 4);
    }

    #[test]
    fn phi_matches_irreducible_counts() {
        assert_eq!(phi_poly(1), RatPoly::t());
        assert_eq!(phi_poly(2), frac(&[0, -1, 1], 2));
        assert_eq!(phi_poly(3), frac(&[0, -1, 0, 1], 3));
        for q in [2u32, 3, 4, 5] {
            let (p, e) = match q {
                4 => (2, 2),
                _ => (q, 1),
            };
            let f = make_field(p, e).unwrap();
            for d in 1..=4 {
                let n = monic_irreducibles(&f, d).unwrap().len();
                assert_eq!(phi_poly(d).eval_int(q as i64), count_rat(n as u64), "q={q} d={d}");
            }
        }
    }

    #[test]
    fn counting_polynomials() {
        assert_eq!(z_sigma(&[part(&[1]), part(&[1])]), 2);
        assert_eq!(z_sigma(&[part(&[1]), part(&[2])]), 1);
        assert_eq!(z_sigma(&[part(&[1]), part(&[1]), part(&[1])]), 6);
        let (rho, sigma, tau) = example();
        assert_eq!(n_sigma_poly(&sigma), frac(&[0, -1, 1], 2));
        assert_eq!(n_sigma_poly(&rho), ints(&[0, 2, -3, 1]));
        assert_eq!(n_sigma_poly(&tau), ints(&[0, 2, -3, 1]));
        assert_eq!(a_sigma_poly(&sym(&[(&[1], 2)])), ints(&[-1, 0, 1]));
        assert_eq!(n_sigma_poly_p1(&sym(&[(&[1], 1), (&[1], 1)])), frac(&[0, 1, 1], 2));
    }

    #[test]
    fn enumerate_small_classes() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(enumerate_class(&sym(&[(&[1], 1)]), &f2).unwrap().len(), 2);
        assert_eq!(enumerate_class(&sym(&[(&[1], 1), (&[1], 1)]), &f2).unwrap().len(), 1);
        assert!(matches!(enumerate_class(&example().0, &f2), Err(Error::FieldTooSmall { .. })));
    }

    #[test]
    fn class_counts_and_automorphisms() {
        for (p, e) in [(2, 1), (3, 1), (2, 2)] {
            let f = make_field(p, e).unwrap();
            let q = count_rat(f.q() as u64);
            for w in 1..=4 {
                for s in SegreSymbol::all_of_weight(w) {
                    let expected = n_sigma_poly(&s).eval(&q);
                    let class = match enumerate_class(&s, &f) {
                        Ok(c) => c,
                        Err(Error::FieldTooSmall { .. }) => Vec::new(),
                        Err(err) => panic!("{err}"),
                    };
                    assert_eq!(count_rat(class.len() as u64), expected, "{s} q={}", f.q());
                    let a = a_sigma_poly(&s).eval(&q);
                    for m in &class {
                        let got = aut_size(m).unwrap();
                        assert_eq!(Rational::from_integer(got.into()), a, "{s} q={}", f.q());
                    }
                }
            }
        }
    }

    #[test]
    fn class_members_are_pairwise_distinct() {
        let f = make_field(3, 1).unwrap();
        let class = enumerate_class(&sym(&[(&[1], 1), (&[1], 1), (&[1], 1)]), &f).unwrap();
        assert_eq!(class.len(), 1);
        let class = enumerate_class(&sym(&[(&[1], 1), (&[2], 1)]), &f).unwrap();
        assert_eq!(class.len(), 6);
        for i in 0..class.len() {
            for j in 0..i {
                assert!(!is_isomorphic(&class[i], &class[j]).unwrap());
            }
        }
    }

    #[test]
    fn example_polynomials() {
        let (rho, sigma, tau) = example();
        let f = ints(&[1, 2, 2]);
        assert_eq!(segre_hall_poly(&rho, &sigma, &tau).unwrap(), f);
        assert_eq!(fixed_r_poly(&rho, &sigma, &tau).unwrap(), f);
        assert_eq!(fixed_s_poly(&rho, &sigma, &tau).unwrap(), f.mul(&ints(&[-4, 2])));
        let one = sym(&[(&[1], 1)]);
        assert_eq!(segre_hall_poly(&one, &one, &sym(&[(&[1, 1], 1)])).unwrap(), ints(&[1, 1]));
        assert!(segre_hall_poly(&one, &one, &sym(&[(&[1], 1)])).unwrap().is_zero());
    }

    #[test]
    fn example_sums_at_three() {
        let (rho, sigma, tau) = example();
        let f = make_field(3, 1).unwrap();
        let reports = segre_sum_check(&rho, &sigma, &tau, &f).unwrap();
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(r.pass, "{} {}: {} vs {}", r.identity, r.instance, r.lhs, r.rhs);
            match r.identity.as_str() {
                "segre_fixed_t" | "segre_fixed_r_poly" => assert_eq!(r.lhs, count_rat(25)),
                "segre_fixed_s_poly" => assert_eq!(r.lhs, count_rat(50)),
                _ => {}
            }
        }
    }

    #[test]
    fn sums_match_brute_force_small_weights() {
        let syms: Vec<SegreSymbol> = (1..=3).flat_map(SegreSymbol::all_of_weight).collect();
        for p in [2, 3] {
            let f = make_field(p, 1).unwrap();
            for rho in &syms {
                for sigma in syms.iter().filter(|s| s.weight() + rho.weight() <= 4) {
                    for tau in SegreSymbol::all_of_weight(rho.weight() + sigma.weight()) {
                        let reports = match segre_sum_check(rho, sigma, &tau, &f) {
                            Ok(r) => r,
                            Err(Error::FieldTooSmall { .. }) => continue,
                            Err(err) => panic!("{err}"),
                        };
                        for r in reports {
                            assert!(r.pass, "{} {}: {} vs {}", r.identity, r.instance, r.lhs, r.rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kronecker_tubes_of_dimension_delta() {
        for (p, e) in [(2, 1), (3, 1)] {
            let f = make_field(p, e).unwrap();
            let table = iso_classes(&Quiver::kronecker(), &DimVec(vec![1, 1]), &f).unwrap();
            let mut regular = 0;
            for entry in table.entries() {
                if is_indecomposable(&entry.rep).unwrap() {
                    regular += 1;
                }
            }
            assert_eq!(regular, f.q() + 1);
            let pts = p1_points(&f, 1).unwrap();
            assert_eq!(pts.len() as u32, f.q() + 1);
        }
    }

    #[test]
    fn decomposition_symbol_enumeration() {
        let f = make_field(2, 1).unwrap();
        let alpha = DecompSymbol::new(vec![], vec![], sym(&[(&[1], 1), (&[1], 1)]));
        assert_eq!(alpha.dims(), DimVec(vec![2, 2]));
        assert_eq!(decomp_enumerate(&alpha, &f).unwrap().len(), 3);
        let a2 = DecompSymbol::new(vec![], vec![], sym(&[(&[1], 2)]));
        assert_eq!(decomp_enumerate(&a2, &f).unwrap().len(), 1);
        let pi2 = DecompSymbol::new(vec![2], vec![], SegreSymbol::empty());
        assert_eq!(pi2.dims(), DimVec(vec![2, 3]));
    }

    #[test]
    fn remark_two_polynomials() {
        let budget = Budget::default();
        let pi0 = DecompSymbol::new(vec![0], vec![], SegreSymbol::empty());
        let pi2 = DecompSymbol::new(vec![2], vec![], SegreSymbol::empty());
        let cases = [
            (sym(&[(&[1], 1), (&[1], 1)]), frac(&[0, 1, 1], 2), false),
            (sym(&[(&[2], 1)]), ints(&[1, 1]), true),
            (sym(&[(&[1], 2)]), frac(&[0, -1, 1], 2), false),
        ];
        for (reg, expected, integral) in cases {
            let alpha = DecompSymbol::new(vec![], vec![], reg);
            let got = decomp_hall_poly(&alpha, &pi0, &pi2, &budget).unwrap();
            assert_eq!(got, expected, "{alpha}");
            assert_eq!(got.is_integer_poly(), integral);
        }
    }

    #[test]
    fn preinjective_by_preprojective_gives_regulars() {
        let i0 = DecompSymbol::new(vec![], vec![0], SegreSymbol::empty());
        let p0 = DecompSymbol::new(vec![0], vec![], SegreSymbol::empty());
        let r = DecompSymbol::new(vec![], vec![], sym(&[(&[1], 1)]));
        assert_eq!(decomp_hall_poly(&i0, &p0, &r, &Budget::default()).unwrap(), RatPoly::one());
        assert!(decomp_hall_poly(&p0, &i0, &r, &Budget::default()).unwrap().is_zero());
    }
}
