use alloc::vec;
use alloc::vec::Vec;

use crate::gfq::{FPoly, Fel, Matrix, Subspace, Subspaces};
use crate::hallpoly::Partition;
use crate::quiver::DimVec;
use crate::rep::{aut_size, is_isomorphic, is_invariant, jordan_type, sub_quotient, JordanType, Rep};
use crate::{Count, Result};

use super::subreps::for_each_invariant_subspace;

/// `F_{MN}^X`: the number of subrepresentations `U ≤ X` with `U ≅ N` and
/// `X/U ≅ M`.
///
/// On the Jordan quiver `X` is split into primary components and the count
/// is a product over components.
pub fn hall_number(m: &Rep, n: &Rep, x: &Rep) -> Result<Count> {
    check_setting(m, n, x)?;
    if m.dims().add(n.dims()) != *x.dims() {
        return Ok(Count::from(0u32));
    }
    if x.quiver().is_jordan() {
        return hall_number_jordan(m, n, x);
    }
    hall_number_by_enumeration(m, n, x)
}

fn check_setting(m: &Rep, n: &Rep, x: &Rep) -> Result<()> {
    // hom_basis performs the quiver and field checks
    let z = Rep::zero(x.quiver().clone(), x.field().clone(), DimVec::zero(x.dims().len()))?;
    crate::rep::hom_basis(&z, m)?;
    crate::rep::hom_basis(&z, n)?;
    Ok(())
}

/// `F_{MN}^X` by enumerating every subrepresentation of dimension `dim N`.
pub fn hall_number_by_enumeration(m: &Rep, n: &Rep, x: &Rep) -> Result<Count> {
    check_setting(m, n, x)?;
    if m.dims().add(n.dims()) != *x.dims() {
        return Ok(Count::from(0u32));
    }
    let mut count = 0u64;
    for_each_invariant_subspace(x, n.dims(), |u| {
        let (sub, quo) = sub_quotient(x, u)?;
        if is_isomorphic(&sub, n)? && is_isomorphic(&quo, m)? {
            count += 1;
        }
        Ok(())
    })?;
    Ok(Count::from(count))
}

fn component<'a>(t: &'a JordanType, p: &FPoly) -> Option<&'a Partition> {
    t.0.iter().find(|(g, _)| g == p).map(|(_, l)| l)
}

fn hall_number_jordan(m: &Rep, n: &Rep, x: &Rep) -> Result<Count> {
    let f = &**x.field();
    let (tm, tn, tx) = (jordan_type(m.mat(0), f), jordan_type(n.mat(0), f), jordan_type(x.mat(0), f));
    let empty = Partition::empty();
    for (p, _) in tm.0.iter().chain(&tn.0) {
        if component(&tx, p).is_none() {
            return Ok(Count::from(0u32));
        }
    }
    let a = x.mat(0);
    let mut total = Count::from(1u32);
    for (p, nu) in &tx.0 {
        let lam = component(&tm, p).unwrap_or(&empty);
        let mu = component(&tn, p).unwrap_or(&empty);
        if nu.size() != lam.size() + mu.size() {
            return Ok(Count::from(0u32));
        }
        // generalized kernel of p(A) as a subrepresentation
        let gk = p.eval_matrix(a, f).pow(nu.largest() as u64, f);
        let xp = sub_quotient(x, &[Subspace::span(&gk.kernel_basis(f), f)])?.0;
        let count = count_primary(&xp, p, lam, mu)?;
        if count == 0 {
            return Ok(Count::from(0u32));
        }
        total *= count;
    }
    Ok(total)
}

/// Counts `U ≤ X` of type `(p, μ)` with quotient of type `(p, λ)`, where
/// `X` is `p`-primary. Any such `U` satisfies `p(A)^{λ_1} X ⊆ U ⊆ ker
/// p(A)^{μ_1}`, so only subspaces between those two are visited.
fn count_primary(x: &Rep, p: &FPoly, lam: &Partition, mu: &Partition) -> Result<u64> {
    let f = &**x.field();
    let deg = p.degree().expect("nonconstant");
    let b = p.eval_matrix(x.mat(0), f);
    let n = x.total_dim();
    let lower = Subspace::span(&b.pow(lam.largest() as u64, f).transpose(), f);
    let upper = Subspace::span(&b.pow(mu.largest() as u64, f).kernel_basis(f), f);
    let target = deg * mu.size();
    if (0..lower.dim()).any(|i| !upper.contains(lower.basis().row(i), f))
        || lower.dim() > target
        || upper.dim() < target
    {
        return Ok(0);
    }
    // rows of `upper` reduced modulo `lower` span a complement of `lower` in `upper`
    let reduced: Vec<Vec<Fel>> = (0..upper.dim()).map(|i| lower.reduce(upper.basis().row(i), f)).collect();
    let comp = Subspace::span(&Matrix::from_rows(n, &reduced)?, f);
    let want_sub = if mu.is_empty() { JordanType(vec![]) } else { JordanType(vec![(p.clone(), mu.clone())]) };
    let want_quo = if lam.is_empty() { JordanType(vec![]) } else { JordanType(vec![(p.clone(), lam.clone())]) };
    let mut count = 0u64;
    for w in Subspaces::new(comp.dim(), target - lower.dim(), f)? {
        let mut rows: Vec<Vec<Fel>> = (0..lower.dim()).map(|i| lower.basis().row(i).to_vec()).collect();
        let lifted = w.basis().mul(comp.basis(), f);
        rows.extend((0..lifted.rows()).map(|i| lifted.row(i).to_vec()));
        let u = [Subspace::span(&Matrix::from_rows(n, &rows)?, f)];
        if !is_invariant(x, &u) {
            continue;
        }
        let (sub, quo) = sub_quotient(x, &u)?;
        if jordan_type(sub.mat(0), f) == want_sub && jordan_type(quo.mat(0), f) == want_quo {
            count += 1;
        }
    }
    Ok(count)
}

/// `P_{MN}^X = F_{MN}^X · a_M · a_N`.
pub fn p_number(m: &Rep, n: &Rep, x: &Rep) -> Result<Count> {
    let h = hall_number(m, n, x)?;
    if h == Count::from(0u32) {
        return Ok(h);
    }
    Ok(h * aut_size(m)? * aut_size(n)?)
}

/// Number of subrepresentations of `X` with dimension vector `e`.
pub fn grassmannian_count(x: &Rep, e: &DimVec) -> Result<Count> {
    let mut count = 0u64;
    for_each_invariant_subspace(x, e, |_| {
        count += 1;
        Ok(())
    })?;
    Ok(Count::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{direct_sum, jordan_module, kronecker_preset, KroneckerKind};
    use crate::{make_field, Quiver};

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn c(n: u32) -> Count {
        Count::from(n)
    }

    #[test]
    fn examples() {
        let f = make_field(2, 1).unwrap();
        let s = Rep::simple(Quiver::jordan(), f.clone(), 0).unwrap();
        let z = Rep::zero(Quiver::jordan(), f.clone(), DimVec(vec![2])).unwrap();
        let j2 = jordan_module(&part(&[2]), &FPoly::t(), &f).unwrap();
        assert_eq!(hall_number(&s, &s, &z).unwrap(), c(3));
        assert_eq!(hall_number(&s, &s, &j2).unwrap(), c(1));
        assert_eq!(hall_number(&s, &z, &j2).unwrap(), c(0));
        assert_eq!(p_number(&s, &s, &z).unwrap(), c(3));
        let f3 = make_field(3, 1).unwrap();
        let s3 = Rep::simple(Quiver::jordan(), f3.clone(), 0).unwrap();
        let z3 = Rep::zero(Quiver::jordan(), f3, DimVec(vec![2])).unwrap();
        assert_eq!(p_number(&s3, &s3, &z3).unwrap(), c(16));
        assert_eq!(p_number(&s, &s, &j2).unwrap(), c(1));
    }

    #[test]
    fn grassmannian_examples() {
        for (q, want) in [(2u32, 7u32), (3, 13)] {
            let f = make_field(q, 1).unwrap();
            let p2 = kronecker_preset(KroneckerKind::P, 2, &f).unwrap();
            assert_eq!(grassmannian_count(&p2, &DimVec(vec![0, 1])).unwrap(), c(want));
            assert_eq!(grassmannian_count(&p2, &DimVec(vec![2, 3])).unwrap(), c(1));
            assert_eq!(grassmannian_count(&p2, &DimVec(vec![0, 0])).unwrap(), c(1));
        }
    }

    #[test]
    fn jordan_fast_path_matches_enumeration() {
        for (p, e) in [(2, 1), (3, 1), (2, 2)] {
            let f = make_field(p, e).unwrap();
            let one = FPoly::linear(f.one(), &f);
            let t = FPoly::t();
            let irr = if f.q() == 2 {
                FPoly::from_coeffs(vec![Fel::ONE, Fel::ONE, Fel::ONE])
            } else {
                crate::gfq::monic_irreducibles(&f, 2).unwrap().remove(0)
            };
            let mods = [
                jordan_module(&part(&[1]), &t, &f).unwrap(),
                jordan_module(&part(&[1]), &one, &f).unwrap(),
                jordan_module(&part(&[2]), &t, &f).unwrap(),
                jordan_module(&part(&[1, 1]), &t, &f).unwrap(),
                jordan_module(&part(&[1]), &irr, &f).unwrap(),
                direct_sum(&jordan_module(&part(&[1]), &t, &f).unwrap(), &jordan_module(&part(&[1]), &one, &f).unwrap())
                    .unwrap(),
            ];
            let xs = [
                jordan_module(&part(&[2, 1]), &t, &f).unwrap(),
                jordan_module(&part(&[1, 1, 1]), &t, &f).unwrap(),
                direct_sum(&jordan_module(&part(&[2]), &t, &f).unwrap(), &jordan_module(&part(&[1]), &one, &f).unwrap())
                    .unwrap(),
                direct_sum(&jordan_module(&part(&[1]), &t, &f).unwrap(), &jordan_module(&part(&[1]), &irr, &f).unwrap())
                    .unwrap(),
            ];
            for x in &xs {
                for m in &mods {
                    for n in &mods {
                        assert_eq!(hall_number(m, n, x).unwrap(), hall_number_by_enumeration(m, n, x).unwrap());
                    }
                }
            }
            // a non-canonical basis of the same module
            let x = &xs[0];
            let g = Matrix::from_rows(3, &[vec![f.one(), f.one(), f.zero()], vec![f.zero(), f.one(), f.one()], vec![f.zero(), f.zero(), f.one()]])
                .unwrap();
            let conj = g.mul(x.mat(0), &f).mul(&g.inverse(&f).unwrap(), &f);
            let y = Rep::new(Quiver::jordan(), f.clone(), x.dims().clone(), vec![conj]).unwrap();
            for m in &mods {
                for n in &mods {
                    assert_eq!(hall_number(m, n, &y).unwrap(), hall_number(m, n, x).unwrap());
                }
            }
        }
    }
}
