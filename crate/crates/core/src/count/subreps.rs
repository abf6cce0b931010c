use alloc::vec::Vec;

use crate::gfq::{gaussian_binomial, Subspace, Subspaces};
use crate::quiver::DimVec;
use crate::rep::Rep;
use crate::{Error, Result};

fn arrow_ok(x: &Rep, a: usize, ut: &Subspace, uh: &Subspace) -> bool {
    let f = &**x.field();
    let m = x.mat(a);
    (0..ut.dim()).all(|i| uh.contains(&m.mul_vec(ut.basis().row(i), f), f))
}

/// Calls `visit` once for every subrepresentation `U ≤ X` with
/// `dim U = e`, in a fixed order (vertex 0 slowest).
pub fn for_each_invariant_subspace(
    x: &Rep,
    e: &DimVec,
    mut visit: impl FnMut(&[Subspace]) -> Result<()>,
) -> Result<()> {
    if !e.le(x.dims()) {
        return Err(Error::DimensionMismatch(alloc::format!("{e} is not below {}", x.dims())));
    }
    let f = &**x.field();
    let q = f.q() as u64;
    let total = x
        .dims()
        .0
        .iter()
        .zip(&e.0)
        .fold(1u64, |acc, (&d, &k)| acc.saturating_mul(gaussian_binomial(d, k, q)));
    f.budget().check_subspaces("invariant subspace tuples", total)?;

    // arrows to check once vertex i is assigned: those whose later endpoint is i
    let n = x.dims().len();
    let mut due: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for (a, &(t, h)) in x.quiver().arrows().iter().enumerate() {
        due[t.max(h)].push(a);
    }
    let mut chosen: Vec<Subspace> = Vec::with_capacity(n);
    rec(x, e, &due, &mut chosen, &mut visit)
}

fn rec(
    x: &Rep,
    e: &DimVec,
    due: &[Vec<usize>],
    chosen: &mut Vec<Subspace>,
    visit: &mut impl FnMut(&[Subspace]) -> Result<()>,
) -> Result<()> {
    let i = chosen.len();
    if i == e.len() {
        return visit(chosen);
    }
    let f = &**x.field();
    for u in Subspaces::new(x.dims().get(i), e.get(i), f)? {
        chosen.push(u);
        let ok = due[i].iter().all(|&a| {
            let (t, h) = x.quiver().arrows()[a];
            arrow_ok(x, a, &chosen[t], &chosen[h])
        });
        if ok {
            rec(x, e, due, chosen, visit)?;
        }
        chosen.pop();
    }
    Ok(())
}

/// Every subrepresentation of `X` with dimension vector `e`.
pub fn invariant_subspaces(x: &Rep, e: &DimVec) -> Result<Vec<Vec<Subspace>>> {
    let mut out = Vec::new();
    for_each_invariant_subspace(x, e, |u| {
        out.push(u.to_vec());
        Ok(())
    })?;
    Ok(out)
}
