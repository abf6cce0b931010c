use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::budget::sat_pow;
use crate::gfq::{Field, Matrix};
use crate::hallpoly::Partition;
use crate::quiver::{DimVec, Quiver};
use crate::rep::{aut_size, gl_order, hom_dim, is_isomorphic, jordan_module, jordan_type, rank_invariants, sub_quotient, JordanType, Rep};
use crate::{Count, Error, FPoly, Result};

use super::subreps::for_each_invariant_subspace;

/// Which representations an [`IsoClassTable`] keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassFilter {
    All,
    /// Only representations on which long paths vanish.
    Nilpotent,
}

/// Bucket key: complete on the Jordan quiver, a necessary condition
/// elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum IsoKey {
    Jordan(JordanType),
    Ranks(Vec<usize>, usize),
}

fn iso_key(m: &Rep) -> Result<IsoKey> {
    if m.quiver().is_jordan() {
        return Ok(IsoKey::Jordan(jordan_type(m.mat(0), m.field())));
    }
    Ok(IsoKey::Ranks(rank_invariants(m), hom_dim(m, m)?))
}

/// One isomorphism class: its representative, the number of
/// representations on the fixed vector spaces isomorphic to it, and `|Aut|`.
#[derive(Clone, Debug)]
pub struct ClassEntry {
    pub rep: Rep,
    pub orbit: Count,
    pub aut: Count,
}

/// Complete list of isomorphism classes with a fixed dimension vector.
#[derive(Clone, Debug)]
pub struct IsoClassTable {
    quiver: Quiver,
    field: Field,
    dims: DimVec,
    filter: ClassFilter,
    entries: Vec<ClassEntry>,
    buckets: BTreeMap<IsoKey, Vec<usize>>,
}

fn stream_size(q: &Quiver, d: &DimVec, field: &Field) -> (usize, u64) {
    let entries: usize = q.arrows().iter().map(|&(t, h)| d.get(t) * d.get(h)).sum();
    (entries, sat_pow(field.q() as u64, entries))
}

/// `Π_i |GL_{d_i}(F_q)|`.
pub(crate) fn group_order(d: &DimVec, q: u32) -> Count {
    let q = BigUint::from(q);
    d.0.iter().map(|&di| gl_order(di, &q)).product()
}

impl IsoClassTable {
    fn empty(quiver: Quiver, field: Field, dims: DimVec, filter: ClassFilter) -> Self {
        IsoClassTable { quiver, field, dims, filter, entries: Vec::new(), buckets: BTreeMap::new() }
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

    pub fn filter(&self) -> ClassFilter {
        self.filter
    }

    pub fn entries(&self) -> &[ClassEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Index of the class of `m`, if it is in the table.
    pub fn find(&self, m: &Rep) -> Result<Option<usize>> {
        if m.dims() != &self.dims {
            return Ok(None);
        }
        self.find_keyed(m, &iso_key(m)?)
    }

    fn find_keyed(&self, m: &Rep, key: &IsoKey) -> Result<Option<usize>> {
        let Some(bucket) = self.buckets.get(key) else { return Ok(None) };
        if matches!(key, IsoKey::Jordan(_)) {
            return Ok(bucket.first().copied());
        }
        for &i in bucket {
            if is_isomorphic(&self.entries[i].rep, m)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    fn insert(&mut self, rep: Rep, key: IsoKey, orbit: Count) -> Result<usize> {
        let aut = aut_size(&rep)?;
        let i = self.entries.len();
        self.buckets.entry(key).or_default().push(i);
        self.entries.push(ClassEntry { rep, orbit, aut });
        Ok(i)
    }

    /// Σ of the orbit sizes.
    pub fn orbit_total(&self) -> Count {
        self.entries.iter().map(|e| &e.orbit).sum()
    }

    /// Checks `orbit · |Aut| = Π |GL_{d_i}|` for every class, and for the
    /// unfiltered table `Σ orbit = q^{Σ_a d_t d_h}`.
    pub fn check_invariants(&self) -> Result<()> {
        let g = group_order(&self.dims, self.field.q());
        for e in &self.entries {
            if &e.orbit * &e.aut != g {
                return Err(Error::Mismatch(format!(
                    "orbit {} times automorphisms {} is not |GL| = {g} for {:?}",
                    e.orbit, e.aut, e.rep
                )));
            }
        }
        if self.filter == ClassFilter::All {
            let (n, _) = stream_size(&self.quiver, &self.dims, &self.field);
            let want = BigUint::from(self.field.q()).pow(n as u32);
            if self.orbit_total() != want {
                return Err(Error::Mismatch(format!("orbit sizes sum to {} not {want}", self.orbit_total())));
            }
        }
        Ok(())
    }
}

/// Every isomorphism class of representations of `q` with dimension vector
/// `d`, by streaming all matrix tuples in lexicographic order. The first
/// member of each class is its representative.
pub fn iso_classes(q: &Quiver, d: &DimVec, field: &Field) -> Result<IsoClassTable> {
    iso_classes_filtered(q, d, field, ClassFilter::All)
}

pub fn iso_classes_filtered(q: &Quiver, d: &DimVec, field: &Field, filter: ClassFilter) -> Result<IsoClassTable> {
    if d.len() != q.n_vertices() {
        return Err(Error::DimensionMismatch(format!("{d} for {} vertices", q.n_vertices())));
    }
    let f = &**field;
    let (n_entries, total) = stream_size(q, d, field);
    f.budget().check_candidates("representations", total)?;
    let shapes: Vec<(usize, usize)> = q.arrows().iter().map(|&(t, h)| (d.get(h), d.get(t))).collect();
    let mut table = IsoClassTable::empty(q.clone(), field.clone(), d.clone(), filter);
    let mut orbits: Vec<u64> = Vec::new();
    let mut codes = vec![0u32; n_entries];
    let qq = f.q();
    loop {
        let mut it = codes.iter();
        let mats: Vec<Matrix> = shapes
            .iter()
            .map(|&(r, c)| {
                let data = (0..r * c).map(|_| f.from_code(*it.next().expect("enough codes")).expect("code below q")).collect();
                Matrix::from_vec(r, c, data).expect("shape")
            })
            .collect();
        let rep = Rep::new(q.clone(), field.clone(), d.clone(), mats)?;
        if filter == ClassFilter::All || rep.is_nilpotent() {
            let key = iso_key(&rep)?;
            match table.find_keyed(&rep, &key)? {
                Some(i) => orbits[i] += 1,
                None => {
                    table.insert(rep, key, Count::zero())?;
                    orbits.push(1);
                }
            }
        }
        // odometer, last entry fastest
        let mut k = n_entries;
        loop {
            if k == 0 {
                for (e, o) in table.entries.iter_mut().zip(orbits) {
                    e.orbit = Count::from(o);
                }
                return Ok(table);
            }
            k -= 1;
            codes[k] += 1;
            if codes[k] < qq {
                break;
            }
            codes[k] = 0;
        }
    }
}

/// A class in a [`ClassUniverse`]: dimension vector and index in its table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassId {
    pub dims: DimVec,
    pub index: usize,
}

/// Isomorphism-class tables for every dimension vector below a bound.
#[derive(Clone, Debug)]
pub struct ClassUniverse {
    quiver: Quiver,
    field: Field,
    bound: DimVec,
    tables: BTreeMap<DimVec, IsoClassTable>,
}

impl ClassUniverse {
    /// Streams a table for every `d ≤ bound`.
    pub fn build(quiver: &Quiver, field: &Field, bound: &DimVec, filter: ClassFilter) -> Result<Self> {
        let mut tables = BTreeMap::new();
        for d in bound.below() {
            tables.insert(d.clone(), iso_classes_filtered(quiver, &d, field, filter)?);
        }
        Ok(ClassUniverse { quiver: quiver.clone(), field: field.clone(), bound: bound.clone(), tables })
    }

    /// Builds tables from known class representatives (duplicates up to
    /// isomorphism are dropped). Orbit sizes are `Π|GL_{d_i}| / |Aut|`.
    /// The caller is responsible for completeness with respect to whatever
    /// subcategory the universe is meant to cover.
    pub fn from_reps(quiver: &Quiver, field: &Field, bound: &DimVec, reps: Vec<Rep>) -> Result<Self> {
        let mut tables: BTreeMap<DimVec, IsoClassTable> = BTreeMap::new();
        for d in bound.below() {
            tables.insert(d.clone(), IsoClassTable::empty(quiver.clone(), field.clone(), d, ClassFilter::Nilpotent));
        }
        for rep in reps {
            let Some(t) = tables.get_mut(rep.dims()) else {
                return Err(Error::DimensionMismatch(format!("{} is not below {bound}", rep.dims())));
            };
            let key = iso_key(&rep)?;
            if t.find_keyed(&rep, &key)?.is_none() {
                let i = t.insert(rep, key, Count::zero())?;
                let g = group_order(&t.dims, field.q());
                let e = &mut t.entries[i];
                e.orbit = g / &e.aut;
            }
        }
        Ok(ClassUniverse { quiver: quiver.clone(), field: field.clone(), bound: bound.clone(), tables })
    }

    /// Nilpotent modules over the Jordan quiver, one per partition of each
    /// `n ≤ max_n`.
    pub fn jordan_nilpotent(field: &Field, max_n: usize) -> Result<Self> {
        let mut reps = Vec::new();
        for n in 0..=max_n {
            for lam in Partition::all_of(n) {
                reps.push(jordan_module(&lam, &FPoly::t(), field)?);
            }
        }
        Self::from_reps(&Quiver::jordan(), field, &DimVec(vec![max_n]), reps)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn bound(&self) -> &DimVec {
        &self.bound
    }

    pub fn table(&self, d: &DimVec) -> Option<&IsoClassTable> {
        self.tables.get(d)
    }

    pub fn tables(&self) -> impl Iterator<Item = &IsoClassTable> {
        self.tables.values()
    }

    /// All classes, by dimension vector then index.
    pub fn ids(&self) -> Vec<ClassId> {
        self.tables
            .iter()
            .flat_map(|(d, t)| (0..t.len()).map(move |index| ClassId { dims: d.clone(), index }))
            .collect()
    }

    pub fn ids_with_dims(&self, d: &DimVec) -> Vec<ClassId> {
        self.tables
            .get(d)
            .map(|t| (0..t.len()).map(|index| ClassId { dims: d.clone(), index }).collect())
            .unwrap_or_default()
    }

    pub fn entry(&self, id: &ClassId) -> &ClassEntry {
        &self.tables[&id.dims].entries[id.index]
    }

    pub fn rep(&self, id: &ClassId) -> &Rep {
        &self.entry(id).rep
    }

    pub fn aut(&self, id: &ClassId) -> &Count {
        &self.entry(id).aut
    }

    /// The class of `m`; an error if `m` is outside the universe.
    pub fn classify(&self, m: &Rep) -> Result<ClassId> {
        let t = self
            .tables
            .get(m.dims())
            .ok_or_else(|| Error::Mismatch(format!("dimension {} outside the class universe", m.dims())))?;
        match t.find(m)? {
            Some(index) => Ok(ClassId { dims: m.dims().clone(), index }),
            None => Err(Error::Mismatch(format!("no class for {m:?}"))),
        }
    }

    /// Zero module class.
    pub fn zero_id(&self) -> ClassId {
        ClassId { dims: DimVec::zero(self.bound.len()), index: 0 }
    }
}

/// All Hall numbers `F_{MN}^X` inside a [`ClassUniverse`], computed by one
/// pass over the subrepresentations of each `X`.
#[derive(Clone, Debug)]
pub struct HallTensor {
    numbers: BTreeMap<(ClassId, ClassId, ClassId), u64>,
}

impl HallTensor {
    pub fn build(u: &ClassUniverse) -> Result<Self> {
        let mut numbers = BTreeMap::new();
        for x in u.ids() {
            let xr = u.rep(&x);
            for e in x.dims.below() {
                for_each_invariant_subspace(xr, &e, |sub| {
                    let (s, qt) = sub_quotient(xr, sub)?;
                    let n = u.classify(&s)?;
                    let m = u.classify(&qt)?;
                    *numbers.entry((m, n, x.clone())).or_insert(0) += 1;
                    Ok(())
                })?;
            }
        }
        Ok(HallTensor { numbers })
    }

    /// `F_{MN}^X` (`M` the quotient, `N` the sub).
    pub fn get(&self, m: &ClassId, n: &ClassId, x: &ClassId) -> u64 {
        // avoid cloning the key for the lookup
        self.numbers.get(&(m.clone(), n.clone(), x.clone())).copied().unwrap_or(0)
    }

    /// Every nonzero entry as `((M, N, X), F)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (&(ClassId, ClassId, ClassId), &u64)> {
        self.numbers.iter()
    }
}
