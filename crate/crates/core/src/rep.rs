//! Representations, Hom spaces, automorphism counts and isomorphism tests.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::budget::sat_pow;
use crate::gfq::{FPoly, Fel, Field, FieldCtx, Matrix, Subspace};
use crate::hallpoly::Partition;
use crate::quiver::{DimVec, Quiver};
use crate::{Count, Error, Result};

/// A representation: one vector space `F_q^{d_i}` per vertex and one matrix
/// of shape `d_{h(a)} × d_{t(a)}` per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    quiver: Quiver,
    field: Field,
    dims: DimVec,
    mats: Vec<Matrix>,
}

impl Rep {
    pub fn new(quiver: Quiver, field: Field, dims: DimVec, mats: Vec<Matrix>) -> Result<Self> {
        if dims.len() != quiver.n_vertices() {
            return Err(Error::DimensionMismatch(format!(
                "dimension vector {dims} for {} vertices",
                quiver.n_vertices()
            )));
        }
        if mats.len() != quiver.arrows().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} arrows",
                mats.len(),
                quiver.arrows().len()
            )));
        }
        for (a, (&(t, h), m)) in quiver.arrows().iter().zip(&mats).enumerate() {
            if m.rows() != dims.get(h) || m.cols() != dims.get(t) {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {a} needs a {}x{} matrix, got {}x{}",
                    dims.get(h),
                    dims.get(t),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Rep { quiver, field, dims, mats })
    }

    /// All structure maps zero.
    pub fn zero(quiver: Quiver, field: Field, dims: DimVec) -> Result<Self> {
        let mats = quiver.arrows().iter().map(|&(t, h)| Matrix::zeros(dims.get(h), dims.get(t))).collect();
        Self::new(quiver, field, dims, mats)
    }

    /// Simple module at vertex `v` (one-dimensional there, zero maps).
    pub fn simple(quiver: Quiver, field: Field, v: usize) -> Result<Self> {
        if v >= quiver.n_vertices() {
            return Err(Error::InvalidInput(format!("vertex {v} out of range")));
        }
        let mut d = DimVec::zero(quiver.n_vertices());
        d.0[v] = 1;
        Self::zero(quiver, field, d)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dims(&self) -> &DimVec {
        &self.dims
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn mat(&self, arrow: usize) -> &Matrix {
        &self.mats[arrow]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.total()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_zero()
    }

    fn same_setting(&self, other: &Rep) -> Result<()> {
        if self.quiver != other.quiver {
            return Err(Error::Mismatch("representations of different quivers".into()));
        }
        if !self.field.is_same(&other.field) {
            return Err(Error::Mismatch("representations over different fields".into()));
        }
        Ok(())
    }

    /// Radical layers: `V_0 = M`, `V_{k+1} = Σ_a M_a(V_k)`, per vertex, until
    /// the sequence stabilizes. The last entry is the stable layer.
    pub fn radical_layers(&self) -> Vec<Vec<Subspace>> {
        let f = &*self.field;
        let mut cur: Vec<Subspace> = self.dims.0.iter().map(|&d| Subspace::full(d)).collect();
        let mut out = vec![cur.clone()];
        loop {
            let mut gens: Vec<Vec<Vec<Fel>>> = vec![Vec::new(); self.dims.len()];
            for (&(t, h), m) in self.quiver.arrows().iter().zip(&self.mats) {
                for i in 0..cur[t].dim() {
                    gens[h].push(m.mul_vec(cur[t].basis().row(i), f));
                }
            }
            let next: Vec<Subspace> = gens
                .iter()
                .zip(&self.dims.0)
                .map(|(g, &d)| Subspace::span_vectors(d, g, f).expect("lengths match"))
                .collect();
            if next == cur {
                return out;
            }
            out.push(next.clone());
            cur = next;
        }
    }

    /// True iff every sufficiently long path acts as zero.
    pub fn is_nilpotent(&self) -> bool {
        self.radical_layers().last().is_some_and(|l| l.iter().all(|s| s.dim() == 0))
    }

    /// Number of nonzero radical layers of a nilpotent module.
    pub fn loewy_length(&self) -> Result<usize> {
        let layers = self.radical_layers();
        if !layers.last().is_some_and(|l| l.iter().all(|s| s.dim() == 0)) {
            return Err(Error::NotNilpotent);
        }
        Ok(layers.len() - 1)
    }

    /// Dimension vector of the top `M / rad M`.
    pub fn top_dims(&self) -> DimVec {
        let layers = self.radical_layers();
        let rad = layers.get(1).unwrap_or(&layers[0]);
        if layers.len() == 1 {
            // stable from the start: rad M = M
            return DimVec::zero(self.dims.len());
        }
        DimVec(self.dims.0.iter().zip(rad).map(|(d, s)| d - s.dim()).collect())
    }

    /// Matrix of a path given as a list of arrows in the order traversed.
    pub fn path_matrix(&self, path: &[usize]) -> Matrix {
        let f = &*self.field;
        let (t0, _) = self.quiver.arrows()[path[0]];
        let mut acc = Matrix::identity(self.dims.get(t0));
        for &a in path {
            acc = self.mats[a].mul(&acc, f);
        }
        acc
    }
}

/// Basis of `Hom(M, N)`: each element is a tuple of vertex matrices
/// `φ_i : M_i → N_i` with `φ_{h(a)} M_a = N_a φ_{t(a)}`.
#[derive(Clone, Debug)]
pub struct HomBasis {
    src_dims: DimVec,
    tgt_dims: DimVec,
    basis: Vec<Vec<Matrix>>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn elements(&self) -> &[Vec<Matrix>] {
        &self.basis
    }

    pub fn source_dims(&self) -> &DimVec {
        &self.src_dims
    }

    pub fn target_dims(&self) -> &DimVec {
        &self.tgt_dims
    }

    /// `Σ_j c_j · basis_j`.
    pub fn combine(&self, coeffs: &[Fel], f: &FieldCtx) -> Vec<Matrix> {
        let mut out: Vec<Matrix> =
            self.src_dims.0.iter().zip(&self.tgt_dims.0).map(|(&s, &t)| Matrix::zeros(t, s)).collect();
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, m) in out.iter_mut().zip(b) {
                o.add_scaled(*c, m, f);
            }
        }
        out
    }
}

/// Solves the intertwiner system for `Hom(M, N)`.
pub fn hom_basis(m: &Rep, n: &Rep) -> Result<HomBasis> {
    m.same_setting(n)?;
    let f = &*m.field;
    let nv = m.dims.len();
    // unknown block for vertex i: N_i × M_i, row-major
    let mut offset = vec![0; nv + 1];
    for i in 0..nv {
        offset[i + 1] = offset[i] + n.dims.get(i) * m.dims.get(i);
    }
    let unknowns = offset[nv];
    let var = |i: usize, r: usize, c: usize| offset[i] + r * m.dims.get(i) + c;
    let mut rows: Vec<Vec<Fel>> = Vec::new();
    for (a, &(t, h)) in m.quiver.arrows().iter().enumerate() {
        let (ma, na) = (&m.mats[a], &n.mats[a]);
        // (φ_h M_a − N_a φ_t)[r][c] = 0
        for r in 0..n.dims.get(h) {
            for c in 0..m.dims.get(t) {
                let mut row = vec![Fel::ZERO; unknowns];
                for k in 0..m.dims.get(h) {
                    let v = var(h, r, k);
                    row[v] = f.add(row[v], ma.get(k, c));
                }
                for k in 0..n.dims.get(t) {
                    let v = var(t, k, c);
                    row[v] = f.sub(row[v], na.get(r, k));
                }
                rows.push(row);
            }
        }
    }
    let sys = Matrix::from_rows(unknowns, &rows)?;
    let ker = sys.kernel_basis(f);
    let basis = (0..ker.rows())
        .map(|k| {
            let v = ker.row(k);
            (0..nv)
                .map(|i| {
                    Matrix::from_vec(n.dims.get(i), m.dims.get(i), v[offset[i]..offset[i + 1]].to_vec())
                        .expect("block sizes agree")
                })
                .collect()
        })
        .collect();
    Ok(HomBasis { src_dims: m.dims.clone(), tgt_dims: n.dims.clone(), basis })
}

/// `[M, N] = dim Hom(M, N)`.
pub fn hom_dim(m: &Rep, n: &Rep) -> Result<usize> {
    Ok(hom_basis(m, n)?.dim())
}

/// Checks `φ_{h(a)} M_a = N_a φ_{t(a)}` for every arrow.
pub fn is_intertwiner(m: &Rep, n: &Rep, phi: &[Matrix]) -> bool {
    let f = &*m.field;
    phi.len() == m.dims.len()
        && m.quiver.arrows().iter().enumerate().all(|(a, &(t, h))| {
            phi[h].mul(&m.mats[a], f) == n.mats[a].mul(&phi[t], f)
        })
}

/// `[M, N]¹ = [M, N] − ⟨dim M, dim N⟩`.
pub fn ext_dim(m: &Rep, n: &Rep) -> Result<usize> {
    let hom = hom_dim(m, n)? as i64;
    let euler = m.quiver.euler_form(&m.dims, &n.dims)?;
    usize::try_from(hom - euler)
        .map_err(|_| Error::Internal(format!("negative ext dimension {} (hom {hom}, euler {euler})", hom - euler)))
}

pub fn direct_sum(m: &Rep, n: &Rep) -> Result<Rep> {
    m.same_setting(n)?;
    let mats = m.mats.iter().zip(&n.mats).map(|(a, b)| a.block_diag(b)).collect();
    Rep::new(m.quiver.clone(), m.field.clone(), m.dims.add(&n.dims), mats)
}

/// `M^{⊕k}`.
pub fn direct_power(m: &Rep, k: usize) -> Result<Rep> {
    let mut out = Rep::zero(m.quiver.clone(), m.field.clone(), DimVec::zero(m.dims.len()))?;
    for _ in 0..k {
        out = direct_sum(&out, m)?;
    }
    Ok(out)
}

/// True iff `M_a(U_{t(a)}) ⊆ U_{h(a)}` for every arrow.
pub fn is_invariant(x: &Rep, u: &[Subspace]) -> bool {
    let f = &*x.field;
    u.len() == x.dims.len()
        && x.quiver.arrows().iter().zip(&x.mats).all(|(&(t, h), m)| {
            (0..u[t].dim()).all(|i| u[h].contains(&m.mul_vec(u[t].basis().row(i), f), f))
        })
}

/// Restriction to an invariant subspace tuple and the induced quotient.
///
/// The sub is written in the echelon basis of each `U_i`; the quotient in the
/// standard basis vectors at the non-pivot columns.
pub fn sub_quotient(x: &Rep, u: &[Subspace]) -> Result<(Rep, Rep)> {
    if u.len() != x.dims.len() || u.iter().zip(&x.dims.0).any(|(s, &d)| s.ambient() != d) {
        return Err(Error::DimensionMismatch("subspace tuple does not match the representation".into()));
    }
    let f = &*x.field;
    let mut sub_mats = Vec::with_capacity(x.mats.len());
    let mut quo_mats = Vec::with_capacity(x.mats.len());
    for (&(t, h), m) in x.quiver.arrows().iter().zip(&x.mats) {
        let mut sm = Matrix::zeros(u[h].dim(), u[t].dim());
        for j in 0..u[t].dim() {
            let img = m.mul_vec(u[t].basis().row(j), f);
            if !u[h].contains(&img, f) {
                return Err(Error::NotInvariant);
            }
            for (i, c) in u[h].coords(&img).into_iter().enumerate() {
                sm.set(i, j, c);
            }
        }
        sub_mats.push(sm);
        let (ct, ch) = (u[t].complement_columns(), u[h].complement_columns());
        let mut qm = Matrix::zeros(ch.len(), ct.len());
        for (j, &c) in ct.iter().enumerate() {
            for (i, v) in u[h].quotient_coords(&m.column(c), f).into_iter().enumerate() {
                qm.set(i, j, v);
            }
        }
        quo_mats.push(qm);
    }
    let sub_dims = DimVec(u.iter().map(Subspace::dim).collect());
    let quo_dims = x.dims.checked_sub(&sub_dims).expect("subspace fits");
    Ok((
        Rep::new(x.quiver.clone(), x.field.clone(), sub_dims, sub_mats)?,
        Rep::new(x.quiver.clone(), x.field.clone(), quo_dims, quo_mats)?,
    ))
}

/// `M(λ, p) = ⊕_r (F_q[t]/(p^r))^{l_r}` on the Jordan quiver, as a block
/// diagonal of companion matrices of `p^{λ_i}`.
pub fn jordan_module(lambda: &Partition, p: &FPoly, field: &Field) -> Result<Rep> {
    let f = &**field;
    if !p.is_monic() || !p.is_irreducible(f) {
        return Err(Error::Reducible);
    }
    let mut m = Matrix::zeros(0, 0);
    for &part in lambda.parts() {
        m = m.block_diag(&p.pow(part as u32, f).companion(f));
    }
    let n = m.rows();
    Rep::new(Quiver::jordan(), field.clone(), DimVec(vec![n]), vec![m])
}

/// Indecomposable Kronecker preprojective or preinjective family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KroneckerKind {
    /// `P_r`, dimension `(r, r+1)`.
    P,
    /// `I_r`, dimension `(r+1, r)`.
    I,
}

/// `P_r` or `I_r` with the standard shift matrices.
pub fn kronecker_preset(kind: KroneckerKind, r: usize, field: &Field) -> Result<Rep> {
    let q = Quiver::kronecker();
    let (d1, d2) = match kind {
        KroneckerKind::P => (r, r + 1),
        KroneckerKind::I => (r + 1, r),
    };
    let mut a = Matrix::zeros(d2, d1);
    let mut b = Matrix::zeros(d2, d1);
    for i in 0..r {
        match kind {
            // [I_r; 0] and [0; I_r]
            KroneckerKind::P => {
                a.set(i, i, Fel::ONE);
                b.set(i + 1, i, Fel::ONE);
            }
            // [I_r | 0] and [0 | I_r]
            KroneckerKind::I => {
                a.set(i, i, Fel::ONE);
                b.set(i, i + 1, Fel::ONE);
            }
        }
    }
    Rep::new(q, field.clone(), DimVec(vec![d1, d2]), vec![a, b])
}

/// A closed point of `P¹`: a monic irreducible polynomial or `∞`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum P1Point {
    Finite(FPoly),
    Infinity,
}

impl P1Point {
    pub fn degree(&self) -> usize {
        match self {
            P1Point::Finite(p) => p.degree().unwrap_or(0),
            P1Point::Infinity => 1,
        }
    }
}

/// Regular Kronecker module of type `λ` in the tube at `point`: for each part
/// `r`, `(I, C(p^r))` at a finite point and `(N_r, I)` at infinity.
pub fn kronecker_regular(lambda: &Partition, point: &P1Point, field: &Field) -> Result<Rep> {
    let f = &**field;
    let mut a = Matrix::zeros(0, 0);
    let mut b = Matrix::zeros(0, 0);
    for &r in lambda.parts() {
        let (x, y) = match point {
            P1Point::Finite(p) => {
                if !p.is_monic() || !p.is_irreducible(f) {
                    return Err(Error::Reducible);
                }
                let c = p.pow(r as u32, f).companion(f);
                (Matrix::identity(c.rows()), c)
            }
            P1Point::Infinity => (FPoly::t().pow(r as u32, f).companion(f), Matrix::identity(r)),
        };
        a = a.block_diag(&x);
        b = b.block_diag(&y);
    }
    let n = a.rows();
    Rep::new(Quiver::kronecker(), field.clone(), DimVec(vec![n, n]), vec![a, b])
}

/// Primary type of a square matrix: each monic irreducible factor `p` of the
/// characteristic polynomial with the partition of its Jordan blocks.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JordanType(pub Vec<(FPoly, Partition)>);

pub fn jordan_type(a: &Matrix, f: &FieldCtx) -> JordanType {
    let cp = FPoly::from_coeffs(a.char_poly(f));
    let n = a.rows();
    let mut out = Vec::new();
    for (p, mult) in cp.factor(f) {
        let deg = p.degree().expect("nonconstant factor");
        let b = p.eval_matrix(a, f);
        // number of parts ≥ j is (dim ker p(A)^j − dim ker p(A)^{j−1}) / deg p
        let mut conj = Vec::new();
        let mut pow = Matrix::identity(n);
        let mut prev = 0;
        for _ in 0..mult {
            pow = pow.mul(&b, f);
            let k = n - pow.rank(f);
            if k == prev {
                break;
            }
            conj.push((k - prev) / deg);
            prev = k;
        }
        out.push((p, Partition::from_parts(conj).conjugate()));
    }
    JordanType(out)
}

/// Deterministic candidate coordinate vectors for searches over a space
/// `F_q^k`: `random` pseudo-random vectors, then (if `exhaustive`) every
/// vector in lexicographic code order.
pub(crate) fn search_coords(
    f: &FieldCtx,
    k: usize,
    random: usize,
    exhaustive: Option<&'static str>,
    mut visit: impl FnMut(&[Fel]) -> bool,
) -> Result<bool> {
    let q = f.q();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ k as u64);
    let mut c = vec![Fel::ZERO; k];
    for _ in 0..random {
        for x in c.iter_mut() {
            *x = f.from_code(rng.next_u32() % q).expect("code below q");
        }
        if visit(&c) {
            return Ok(true);
        }
    }
    let Some(what) = exhaustive else { return Ok(false) };
    f.budget().check_candidates(what, sat_pow(q as u64, k))?;
    let mut codes = vec![0u32; k];
    loop {
        for (x, &cd) in c.iter_mut().zip(&codes) {
            *x = f.from_code(cd).expect("code below q");
        }
        if visit(&c) {
            return Ok(true);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == k {
                return Ok(false);
            }
            codes[i] += 1;
            if codes[i] < q {
                break;
            }
            codes[i] = 0;
            i += 1;
        }
    }
}

fn all_invertible(phi: &[Matrix], f: &FieldCtx) -> bool {
    phi.iter().all(|m| m.is_invertible(f))
}

/// `|Aut(M)|` by direct enumeration of `End(M)`.
pub fn aut_size_exhaustive(m: &Rep) -> Result<Count> {
    let f = &*m.field;
    let end = hom_basis(m, m)?;
    let mut count = 0u64;
    search_coords(f, end.dim(), 0, Some("endomorphism coordinates"), |c| {
        if all_invertible(&end.combine(c, f), f) {
            count += 1;
        }
        false
    })?;
    Ok(Count::from(count))
}

/// `|GL_m(F_Q)|`.
pub fn gl_order(m: usize, big_q: &BigUint) -> BigUint {
    let qm = big_q.pow(m as u32);
    (0..m).map(|i| &qm - big_q.pow(i as u32)).product()
}

/// `|Aut(M)| = a_M`.
///
/// Enumerates `End(M)` when that fits the candidate budget. Otherwise splits
/// `M = ⊕ X_i^{m_i}` into indecomposables with local endomorphism rings of
/// residue fields `F_{q^{f_i}}` and uses
/// `a_M = q^{dim rad End M} · Π |GL_{m_i}(F_{q^{f_i}})|`.
pub fn aut_size(m: &Rep) -> Result<Count> {
    let f = &*m.field;
    let end_dim = hom_dim(m, m)?;
    if sat_pow(f.q() as u64, end_dim) <= f.budget().max_candidates {
        return aut_size_exhaustive(m);
    }
    aut_size_structured(m, end_dim)
}

pub(crate) fn aut_size_structured(m: &Rep, end_dim: usize) -> Result<Count> {
    let f = &*m.field;
    let pieces = crate::count::decompose_local(m)?;
    // group isomorphic summands
    let mut groups: Vec<(Rep, u32, usize)> = Vec::new();
    for (x, fdeg) in pieces {
        let mut found = false;
        for g in groups.iter_mut() {
            if g.0.dims == x.dims && is_isomorphic(&g.0, &x)? {
                g.2 += 1;
                found = true;
                break;
            }
        }
        if !found {
            groups.push((x, fdeg, 1));
        }
    }
    let q = BigUint::from(f.q());
    let semisimple: usize = groups.iter().map(|(_, fd, mult)| mult * mult * *fd as usize).sum();
    let rad = end_dim
        .checked_sub(semisimple)
        .ok_or_else(|| Error::Internal("endomorphism radical of negative dimension".into()))?;
    let mut out = q.pow(rad as u32);
    for (_, fd, mult) in &groups {
        out *= gl_order(*mult, &q.pow(*fd));
    }
    Ok(out)
}

/// Cheap isomorphism invariants: ranks of path matrices up to a cap, and
/// for every pair of vertices joined by exactly two arrows the ranks of the
/// pencil `αA + βB` at every point of `P¹(F_q)`.
pub(crate) fn rank_invariants(m: &Rep) -> Vec<usize> {
    const PATH_CAP: usize = 512;
    let f = &*m.field;
    let arrows = m.quiver.arrows();
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    let mut seen = 0;
    for _ in 0..m.total_dim().max(1) {
        if frontier.is_empty() || seen > PATH_CAP {
            break;
        }
        let mut next = Vec::new();
        for p in &frontier {
            out.push(m.path_matrix(p).rank(f));
            seen += 1;
            let (_, h) = arrows[*p.last().expect("nonempty")];
            for (a, &(t, _)) in arrows.iter().enumerate() {
                if t == h && next.len() + seen < PATH_CAP {
                    let mut np = p.clone();
                    np.push(a);
                    next.push(np);
                }
            }
        }
        frontier = next;
    }
    for i in 0..arrows.len() {
        for j in i + 1..arrows.len() {
            if arrows[i] != arrows[j] || arrows.iter().filter(|&&x| x == arrows[i]).count() != 2 {
                continue;
            }
            let (a, b) = (&m.mats[i], &m.mats[j]);
            out.push(a.rank(f));
            for alpha in f.elements() {
                out.push(a.scale(alpha, f).add(b, f).rank(f));
            }
        }
    }
    out
}

/// Whether `M ≅ N`.
///
/// On the Jordan quiver the primary type of the matrix decides. Elsewhere,
/// rank invariants and Hom dimensions reject first, then `Hom(M, N)` is
/// searched for an invertible element (pseudo-random candidates, then all of
/// it within the budget).
pub fn is_isomorphic(m: &Rep, n: &Rep) -> Result<bool> {
    m.same_setting(n)?;
    if m.dims != n.dims {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let f = &*m.field;
    if m.quiver.is_jordan() {
        return Ok(jordan_type(&m.mats[0], f) == jordan_type(&n.mats[0], f));
    }
    if m.mats == n.mats {
        return Ok(true);
    }
    if rank_invariants(m) != rank_invariants(n) {
        return Ok(false);
    }
    let hmn = hom_basis(m, n)?;
    let hmm = hom_dim(m, m)?;
    if hmm != hmn.dim() || hom_dim(n, n)? != hmm || hom_dim(n, m)? != hmm {
        return Ok(false);
    }
    search_coords(f, hmn.dim(), 64, Some("isomorphism search"), |c| all_invertible(&hmn.combine(c, f), f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::make_field;
    use proptest::prelude::*;

    fn fe(f: &FieldCtx, v: i64) -> Fel {
        f.from_int(v)
    }

    fn mat(f: &FieldCtx, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, &rows.iter().map(|r| r.iter().map(|&x| fe(f, x)).collect()).collect::<Vec<_>>())
            .unwrap()
    }

    fn jordan(field: &Field, rows: &[&[i64]]) -> Rep {
        let m = mat(field, rows);
        Rep::new(Quiver::jordan(), field.clone(), DimVec(vec![m.rows()]), vec![m]).unwrap()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn shapes_are_checked() {
        let f = make_field(2, 1).unwrap();
        let bad = Rep::new(Quiver::a_n(2), f.clone(), DimVec(vec![1, 2]), vec![Matrix::zeros(1, 2)]);
        assert!(matches!(bad, Err(Error::DimensionMismatch(_))));
        assert!(Rep::new(Quiver::a_n(2), f, DimVec(vec![1, 2]), vec![Matrix::zeros(2, 1)]).is_ok());
    }

    #[test]
    fn hom_examples() {
        let f = make_field(3, 1).unwrap();
        let s = Rep::simple(Quiver::jordan(), f.clone(), 0).unwrap();
        assert_eq!(hom_dim(&s, &s).unwrap(), 1);
        let z = jordan(&f, &[&[0, 0], &[0, 0]]);
        assert_eq!(hom_dim(&z, &z).unwrap(), 4);
        let s1 = Rep::simple(Quiver::a_n(2), f.clone(), 0).unwrap();
        let s2 = Rep::simple(Quiver::a_n(2), f.clone(), 1).unwrap();
        assert_eq!(hom_dim(&s1, &s2).unwrap(), 0);
        let g = make_field(2, 1).unwrap();
        assert!(hom_basis(&s, &Rep::simple(Quiver::jordan(), g, 0).unwrap()).is_err());
        assert!(hom_basis(&s, &s1).is_err());
    }

    #[test]
    fn hom_basis_elements_intertwine() {
        let f = make_field(2, 1).unwrap();
        let p2 = kronecker_preset(KroneckerKind::P, 2, &f).unwrap();
        let p1 = kronecker_preset(KroneckerKind::P, 1, &f).unwrap();
        let h = hom_basis(&p1, &p2).unwrap();
        // Hom(P_1, P_2) has dimension 2 (the preprojective component)
        assert_eq!(h.dim(), 2);
        for phi in h.elements() {
            assert!(is_intertwiner(&p1, &p2, phi));
        }
        assert_eq!(hom_dim(&p2, &p1).unwrap(), 0);
    }

    #[test]
    fn ext_examples() {
        let f = make_field(2, 1).unwrap();
        let s1 = Rep::simple(Quiver::a_n(2), f.clone(), 0).unwrap();
        let s2 = Rep::simple(Quiver::a_n(2), f.clone(), 1).unwrap();
        assert_eq!(ext_dim(&s1, &s2).unwrap(), 1);
        assert_eq!(ext_dim(&s2, &s1).unwrap(), 0);
        let s = Rep::simple(Quiver::jordan(), f, 0).unwrap();
        assert_eq!(ext_dim(&s, &s).unwrap(), 1);
    }

    #[test]
    fn aut_examples() {
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(aut_size(&Rep::simple(Quiver::jordan(), f3, 0).unwrap()).unwrap(), Count::from(2u32));
        let f2 = make_field(2, 1).unwrap();
        let t = FPoly::t();
        assert_eq!(aut_size(&jordan_module(&part(&[1, 1]), &t, &f2).unwrap()).unwrap(), Count::from(6u32));
        assert_eq!(aut_size(&jordan_module(&part(&[2]), &t, &f2).unwrap()).unwrap(), Count::from(2u32));
    }

    #[test]
    fn structured_aut_matches_exhaustive() {
        for (p, e) in [(2, 1), (3, 1), (2, 2)] {
            let f = make_field(p, e).unwrap();
            let cases = [
                jordan(&f, &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]),
                jordan(&f, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]),
                jordan(&f, &[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]),
                jordan(&f, &[&[0, 1, 0], &[1, 1, 0], &[0, 0, 0]]),
                jordan(&f, &[&[0, 1, 0, 0], &[1, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 1]]),
                direct_sum(
                    &kronecker_preset(KroneckerKind::P, 1, &f).unwrap(),
                    &kronecker_preset(KroneckerKind::I, 0, &f).unwrap(),
                )
                .unwrap(),
                direct_power(&kronecker_preset(KroneckerKind::P, 0, &f).unwrap(), 2).unwrap(),
                kronecker_regular(&part(&[1, 1]), &P1Point::Infinity, &f).unwrap(),
            ];
            for m in &cases {
                let end = hom_dim(m, m).unwrap();
                if sat_pow(f.q() as u64, end) > 1 << 20 {
                    continue;
                }
                assert_eq!(aut_size_structured(m, end).unwrap(), aut_size_exhaustive(m).unwrap(), "{m:?}");
            }
        }
    }

    #[test]
    fn structured_aut_beyond_budget() {
        // End of a scalar 4×4 over F_4 has 4^16 elements
        let f = make_field(2, 2).unwrap();
        let z = Rep::zero(Quiver::jordan(), f.clone(), DimVec(vec![4])).unwrap();
        assert_eq!(aut_size(&z).unwrap(), gl_order(4, &BigUint::from(4u32)));
    }

    #[test]
    fn isomorphism_examples() {
        let f = make_field(2, 1).unwrap();
        let z = jordan(&f, &[&[0, 0], &[0, 0]]);
        let j2 = jordan(&f, &[&[0, 0], &[1, 0]]);
        assert!(is_isomorphic(&z, &z).unwrap());
        assert!(!is_isomorphic(&z, &j2).unwrap());
        let k = Quiver::kronecker();
        let a = Rep::new(k.clone(), f.clone(), DimVec(vec![1, 1]), vec![mat(&f, &[&[1]]), mat(&f, &[&[0]])]).unwrap();
        let b = Rep::new(k.clone(), f.clone(), DimVec(vec![1, 1]), vec![mat(&f, &[&[1]]), mat(&f, &[&[1]])]).unwrap();
        assert!(!is_isomorphic(&a, &b).unwrap());
        let f3 = make_field(3, 1).unwrap();
        let c = Rep::new(k.clone(), f3.clone(), DimVec(vec![1, 1]), vec![mat(&f3, &[&[2]]), mat(&f3, &[&[2]])])
            .unwrap();
        let d = Rep::new(k, f3.clone(), DimVec(vec![1, 1]), vec![mat(&f3, &[&[1]]), mat(&f3, &[&[1]])]).unwrap();
        assert!(is_isomorphic(&c, &d).unwrap());
    }

    #[test]
    fn direct_sum_examples() {
        let f = make_field(2, 1).unwrap();
        let q = Quiver::a_n(2);
        let s1 = Rep::simple(q.clone(), f.clone(), 0).unwrap();
        let s2 = Rep::simple(q.clone(), f.clone(), 1).unwrap();
        let zero = Rep::zero(q, f.clone(), DimVec(vec![0, 0])).unwrap();
        assert_eq!(direct_sum(&s1, &zero).unwrap(), s1);
        assert_eq!(direct_sum(&s1, &s2).unwrap().dims(), &DimVec(vec![1, 1]));
        let s = Rep::simple(Quiver::jordan(), f, 0).unwrap();
        assert_eq!(aut_size(&direct_sum(&s, &s).unwrap()).unwrap(), Count::from(6u32));
    }

    #[test]
    fn sub_quotient_examples() {
        let f = make_field(3, 1).unwrap();
        let j2 = jordan(&f, &[&[0, 0], &[1, 0]]);
        let (sub, quo) = sub_quotient(&j2, &[Subspace::zero(2)]).unwrap();
        assert!(sub.is_zero());
        assert_eq!(quo, j2);
        let (sub, quo) = sub_quotient(&j2, &[Subspace::full(2)]).unwrap();
        assert_eq!(sub, j2);
        assert!(quo.is_zero());
        // the image of t is spanned by e_2
        let line = Subspace::span_vectors(2, &[vec![Fel::ZERO, Fel::ONE]], &f).unwrap();
        let (sub, quo) = sub_quotient(&j2, &[line]).unwrap();
        let s = Rep::simple(Quiver::jordan(), f.clone(), 0).unwrap();
        assert!(is_isomorphic(&sub, &s).unwrap());
        assert!(is_isomorphic(&quo, &s).unwrap());
        let bad = Subspace::span_vectors(2, &[vec![Fel::ONE, Fel::ZERO]], &f).unwrap();
        assert_eq!(sub_quotient(&j2, &[bad]), Err(Error::NotInvariant));
    }

    #[test]
    fn jordan_module_examples() {
        let f = make_field(2, 1).unwrap();
        let m = jordan_module(&part(&[1]), &FPoly::t(), &f).unwrap();
        assert_eq!(m.mat(0), &Matrix::zeros(1, 1));
        let j = jordan_module(&part(&[2]), &FPoly::t(), &f).unwrap();
        assert_eq!(j.mat(0), &mat(&f, &[&[0, 0], &[1, 0]]));
        let p = FPoly::from_coeffs(vec![Fel::ONE, Fel::ONE, Fel::ONE]);
        let c = jordan_module(&part(&[1]), &p, &f).unwrap();
        assert_eq!(c.mat(0), &mat(&f, &[&[0, 1], &[1, 1]]));
        let red = FPoly::from_coeffs(vec![Fel::ZERO, Fel::ONE, Fel::ONE]);
        assert_eq!(jordan_module(&part(&[1]), &red, &f), Err(Error::Reducible));
    }

    #[test]
    fn jordan_type_recovers_construction() {
        let f = make_field(2, 1).unwrap();
        let p = FPoly::from_coeffs(vec![Fel::ONE, Fel::ONE, Fel::ONE]);
        let a = jordan_module(&part(&[2, 1]), &p, &f).unwrap();
        let b = jordan_module(&part(&[3, 1, 1]), &FPoly::t(), &f).unwrap();
        let s = direct_sum(&a, &b).unwrap();
        let jt = jordan_type(s.mat(0), &f);
        assert_eq!(jt, JordanType(vec![(FPoly::t(), part(&[3, 1, 1])), (p, part(&[2, 1]))]));
    }

    #[test]
    fn kronecker_presets() {
        let f = make_field(2, 1).unwrap();
        let k = Quiver::kronecker();
        let p0 = kronecker_preset(KroneckerKind::P, 0, &f).unwrap();
        assert_eq!(p0.dims(), &DimVec(vec![0, 1]));
        let p2 = kronecker_preset(KroneckerKind::P, 2, &f).unwrap();
        assert_eq!(p2.dims(), &DimVec(vec![2, 3]));
        assert_eq!(ext_dim(&p2, &p2).unwrap(), 0);
        let i0 = kronecker_preset(KroneckerKind::I, 0, &f).unwrap();
        assert_eq!(i0.dims(), &DimVec(vec![1, 0]));
        for r in 0..4 {
            let p = kronecker_preset(KroneckerKind::P, r, &f).unwrap();
            let i = kronecker_preset(KroneckerKind::I, r, &f).unwrap();
            assert_eq!(k.defect(p.dims()).unwrap(), -1);
            assert_eq!(k.defect(i.dims()).unwrap(), 1);
            assert_eq!(ext_dim(&p, &p).unwrap(), 0);
            assert_eq!(ext_dim(&i, &i).unwrap(), 0);
            assert_eq!(hom_dim(&p, &p).unwrap(), 1);
            assert_eq!(hom_dim(&i, &i).unwrap(), 1);
        }
    }

    #[test]
    fn radical_data() {
        let f = make_field(2, 1).unwrap();
        let j = jordan_module(&part(&[3]), &FPoly::t(), &f).unwrap();
        assert!(j.is_nilpotent());
        assert_eq!(j.loewy_length().unwrap(), 3);
        assert_eq!(j.top_dims(), DimVec(vec![1]));
        let one = jordan(&f, &[&[1]]);
        assert!(!one.is_nilpotent());
        assert_eq!(one.loewy_length(), Err(Error::NotNilpotent));
    }

    #[test]
    fn exceptional_power_aut_is_gl() {
        // Aut(M ⊕ M) ≅ GL_2(F_q) for exceptional M
        for q in [2u32, 3] {
            let f = make_field(q, 1).unwrap();
            for r in 0..3 {
                for kind in [KroneckerKind::P, KroneckerKind::I] {
                    let m = kronecker_preset(kind, r, &f).unwrap();
                    let mm = direct_sum(&m, &m).unwrap();
                    assert_eq!(aut_size(&mm).unwrap(), gl_order(2, &BigUint::from(q)));
                }
            }
        }
    }

    #[test]
    fn kronecker_split_pairs_are_multiplicative() {
        // a_X = a_{X_t} a_{X_f} q^{[X_f, X_t]} with X_t preinjective and X_f
        // preprojective or regular; Hom(X_t, X_f) = 0 so the cross term is
        // the full Hom space in the other direction.
        let f = make_field(2, 1).unwrap();
        let q = BigUint::from(2u32);
        let tors = [kronecker_preset(KroneckerKind::I, 0, &f).unwrap(), kronecker_preset(KroneckerKind::I, 1, &f).unwrap()];
        let free = [
            kronecker_preset(KroneckerKind::P, 0, &f).unwrap(),
            kronecker_preset(KroneckerKind::P, 1, &f).unwrap(),
            kronecker_regular(&part(&[1]), &P1Point::Infinity, &f).unwrap(),
        ];
        for t in &tors {
            for fr in &free {
                let x = direct_sum(fr, t).unwrap();
                assert_eq!(hom_dim(t, fr).unwrap(), 0);
                let cross = hom_dim(fr, t).unwrap();
                let want = aut_size(t).unwrap() * aut_size(fr).unwrap() * q.pow(cross as u32);
                assert_eq!(aut_size(&x).unwrap(), want);
                // and ⟨X_f, X_t⟩ = [X_f, X_t] since Ext(X_f, X_t) = 0
                let euler = Quiver::kronecker().euler_form(fr.dims(), t.dims()).unwrap();
                assert_eq!(euler, cross as i64);
            }
        }
    }

    fn arb_rep(q: Quiver, max: usize) -> impl Strategy<Value = Rep> {
        let n = q.n_vertices();
        prop::collection::vec(0..=max, n).prop_flat_map(move |dims| {
            let q = q.clone();
            let sizes: Vec<usize> = q.arrows().iter().map(|&(t, h)| dims[t] * dims[h]).collect();
            let total: usize = sizes.iter().sum();
            prop::collection::vec(0u32..3, total).prop_map(move |codes| {
                let f = make_field(3, 1).unwrap();
                let mut it = codes.into_iter();
                let mats = q
                    .arrows()
                    .iter()
                    .map(|&(t, h)| {
                        let data = (0..dims[t] * dims[h]).map(|_| f.from_code(it.next().unwrap()).unwrap()).collect();
                        Matrix::from_vec(dims[h], dims[t], data).unwrap()
                    })
                    .collect();
                Rep::new(q.clone(), f, DimVec(dims.clone()), mats).unwrap()
            })
        })
    }

    fn arb_pair() -> impl Strategy<Value = (Rep, Rep)> {
        prop_oneof![
            Just(Quiver::jordan()),
            Just(Quiver::a_n(2)),
            Just(Quiver::a_n(3)),
            Just(Quiver::cyclic(2)),
            Just(Quiver::kronecker())
        ]
        .prop_flat_map(|q| (arb_rep(q.clone(), 2), arb_rep(q, 2)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn euler_form_is_hom_minus_ext((m, n) in arb_pair()) {
            let euler = m.quiver().euler_form(m.dims(), n.dims()).unwrap();
            let hom = hom_dim(&m, &n).unwrap() as i64;
            let ext = ext_dim(&m, &n).unwrap() as i64;
            prop_assert_eq!(hom - ext, euler);
        }

        #[test]
        fn isomorphism_is_symmetric_and_respects_sums((m, n) in arb_pair()) {
            prop_assert_eq!(is_isomorphic(&m, &n).unwrap(), is_isomorphic(&n, &m).unwrap());
            let mn = direct_sum(&m, &n).unwrap();
            let nm = direct_sum(&n, &m).unwrap();
            prop_assert!(is_isomorphic(&mn, &nm).unwrap());
        }
    }
}
