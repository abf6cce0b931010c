use alloc::vec::Vec;

use crate::gfq::{FieldCtx, Matrix, Subspace};
use crate::rep::{hom_basis, search_coords, sub_quotient, Rep};
use crate::Result;

/// How an endomorphism behaves under Fitting's lemma.
enum Kind {
    Nilpotent,
    Invertible,
    /// Neither: `M = ker φ^n ⊕ im φ^n` is a proper splitting.
    Splits,
}

fn kind(phi: &[Matrix], n: usize, f: &FieldCtx) -> Kind {
    if phi.iter().all(|m| m.is_invertible(f)) {
        return Kind::Invertible;
    }
    if phi.iter().all(|m| m.pow(n as u64, f).is_zero()) {
        return Kind::Nilpotent;
    }
    Kind::Splits
}

fn fitting_split(m: &Rep, phi: &[Matrix]) -> Result<(Rep, Rep)> {
    let f = &**m.field();
    let n = m.total_dim() as u64;
    let mut ker = Vec::with_capacity(phi.len());
    let mut img = Vec::with_capacity(phi.len());
    for p in phi {
        let pn = p.pow(n, f);
        ker.push(Subspace::span(&pn.kernel_basis(f), f));
        img.push(Subspace::span(&pn.transpose(), f));
    }
    Ok((sub_quotient(m, &ker)?.0, sub_quotient(m, &img)?.0))
}

enum Split {
    /// Local endomorphism ring with residue field `F_{q^f}`.
    Local(u32),
    Parts(Rep, Rep),
}

/// Looks for an endomorphism that is neither nilpotent nor invertible:
/// basis elements, pairwise sums, pseudo-random combinations, and finally
/// all of `End(M)` within the budget. The exhaustive pass also counts the
/// nilpotent elements, which for a local ring form the radical.
fn split(m: &Rep) -> Result<Split> {
    let f = &**m.field();
    let n = m.total_dim();
    let end = hom_basis(m, m)?;
    let k = end.dim();
    let basis = end.elements();
    for i in 0..k {
        if let Kind::Splits = kind(&basis[i], n, f) {
            let (a, b) = fitting_split(m, &basis[i])?;
            return Ok(Split::Parts(a, b));
        }
        for j in i + 1..k {
            let s: Vec<Matrix> = basis[i].iter().zip(&basis[j]).map(|(x, y)| x.add(y, f)).collect();
            if let Kind::Splits = kind(&s, n, f) {
                let (a, b) = fitting_split(m, &s)?;
                return Ok(Split::Parts(a, b));
            }
        }
    }
    let mut found = None;
    search_coords(f, k, 64, None, |c| {
        let phi = end.combine(c, f);
        if let Kind::Splits = kind(&phi, n, f) {
            found = Some(phi);
            return true;
        }
        false
    })?;
    let mut nilpotent = 0u64;
    if found.is_none() {
        search_coords(f, k, 0, Some("endomorphism coordinates"), |c| {
            let phi = end.combine(c, f);
            match kind(&phi, n, f) {
                Kind::Splits => {
                    found = Some(phi);
                    return true;
                }
                Kind::Nilpotent => nilpotent += 1,
                Kind::Invertible => {}
            }
            false
        })?;
    }
    if let Some(phi) = found {
        let (a, b) = fitting_split(m, &phi)?;
        return Ok(Split::Parts(a, b));
    }
    // q^{k - f} nilpotent elements
    let q = f.q() as u64;
    let mut rad = 0u32;
    let mut x = nilpotent;
    while x > 1 {
        x /= q;
        rad += 1;
    }
    Ok(Split::Local(k as u32 - rad))
}

/// Indecomposable summands, each with the degree `f` of the residue field
/// `End(X)/rad End(X) ≅ F_{q^f}`.
pub(crate) fn decompose_local(m: &Rep) -> Result<Vec<(Rep, u32)>> {
    let mut out = Vec::new();
    let mut stack = alloc::vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        match split(&x)? {
            Split::Local(fdeg) => out.push((x, fdeg)),
            Split::Parts(a, b) => {
                stack.push(b);
                stack.push(a);
            }
        }
    }
    Ok(out)
}

/// Krull–Schmidt decomposition into indecomposable summands.
pub fn decompose(m: &Rep) -> Result<Vec<Rep>> {
    Ok(decompose_local(m)?.into_iter().map(|(x, _)| x).collect())
}

/// True iff `M` is nonzero and `End(M)` is local.
pub fn is_indecomposable(m: &Rep) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(matches!(split(m)?, Split::Local(_)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hallpoly::Partition;
    use crate::rep::{direct_sum, is_isomorphic, jordan_module, kronecker_preset, KroneckerKind};
    use crate::{make_field, DimVec, FPoly, Quiver};
    use alloc::vec;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    /// Idempotent oracle: M is indecomposable iff the only idempotents of
    /// End(M) are 0 and 1.
    fn has_nontrivial_idempotent(m: &Rep) -> bool {
        let f = &**m.field();
        let end = hom_basis(m, m).unwrap();
        let mut found = false;
        search_coords(f, end.dim(), 0, Some("test"), |c| {
            let e = end.combine(c, f);
            let sq: Vec<Matrix> = e.iter().map(|x| x.mul(x, f)).collect();
            let zero = e.iter().all(|x| x.is_zero());
            let one = e.iter().all(|x| *x == Matrix::identity(x.rows()));
            if sq == e && !zero && !one {
                found = true;
            }
            found
        })
        .unwrap();
        found
    }

    #[test]
    fn examples() {
        let f = make_field(2, 1).unwrap();
        let s = Rep::simple(Quiver::jordan(), f.clone(), 0).unwrap();
        assert!(is_indecomposable(&s).unwrap());
        let ss = direct_sum(&s, &s).unwrap();
        assert!(!is_indecomposable(&ss).unwrap());
        assert_eq!(decompose(&ss).unwrap().len(), 2);
        let k = Quiver::kronecker();
        for l in [0i64, 1] {
            let r = Rep::new(
                k.clone(),
                f.clone(),
                DimVec(vec![1, 1]),
                vec![Matrix::identity(1), Matrix::from_rows(1, &[vec![f.from_int(l)]]).unwrap()],
            )
            .unwrap();
            assert!(is_indecomposable(&r).unwrap());
        }
        let j2 = jordan_module(&part(&[2]), &FPoly::t(), &f).unwrap();
        let parts = decompose(&direct_sum(&s, &j2).unwrap()).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().any(|p| is_isomorphic(p, &s).unwrap()));
        assert!(parts.iter().any(|p| is_isomorphic(p, &j2).unwrap()));
        assert_eq!(decompose(&j2).unwrap(), vec![j2]);
        assert!(decompose(&Rep::zero(k, f, DimVec(vec![0, 0])).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn fitting_agrees_with_idempotents() {
        for (p, e) in [(2, 1), (3, 1), (2, 2)] {
            let f = make_field(p, e).unwrap();
            let irr = FPoly::from_coeffs(vec![f.one(), f.one(), f.one()]);
            let mut cases = vec![
                jordan_module(&part(&[2, 1]), &FPoly::t(), &f).unwrap(),
                jordan_module(&part(&[3]), &FPoly::t(), &f).unwrap(),
                kronecker_preset(KroneckerKind::P, 2, &f).unwrap(),
                direct_sum(
                    &kronecker_preset(KroneckerKind::P, 0, &f).unwrap(),
                    &kronecker_preset(KroneckerKind::I, 0, &f).unwrap(),
                )
                .unwrap(),
            ];
            if irr.is_irreducible(&f) {
                cases.push(jordan_module(&part(&[1]), &irr, &f).unwrap());
                cases.push(jordan_module(&part(&[1, 1]), &irr, &f).unwrap());
            }
            for m in &cases {
                assert_eq!(is_indecomposable(m).unwrap(), !has_nontrivial_idempotent(m), "{m:?}");
            }
        }
    }

    #[test]
    fn residue_degrees() {
        let f = make_field(2, 1).unwrap();
        let irr = FPoly::from_coeffs(vec![f.one(), f.one(), f.one()]);
        let m = jordan_module(&part(&[2]), &irr, &f).unwrap();
        let pieces = decompose_local(&m).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].1, 2);
        let s = decompose_local(&jordan_module(&part(&[1, 1, 1]), &FPoly::t(), &f).unwrap()).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.iter().all(|(_, d)| *d == 1));
    }
}
