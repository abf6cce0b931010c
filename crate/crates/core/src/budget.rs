//! Enumeration limits.

/// Hard limits on the size of exhaustive enumerations.
///
/// Every enumeration checks its predicted size against these before starting
/// and fails with [`crate::Error::BudgetExceeded`] rather than truncating.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest field order `q` a [`crate::FieldCtx`] may be built for.
    pub max_q: u32,
    /// Largest number of candidates (Hom coordinates, representation tuples,
    /// polynomials) a single enumeration may visit.
    pub max_candidates: u64,
    /// Largest number of subspace tuples an invariant-subspace enumeration
    /// may visit.
    pub max_subspaces: u64,
}

impl Budget {
    pub const DEFAULT_MAX_Q: u32 = 64;
    pub const DEFAULT_MAX_CANDIDATES: u64 = 1 << 22;
    pub const DEFAULT_MAX_SUBSPACES: u64 = 1 << 22;

    /// Field orders are stored in a byte; this is the absolute ceiling.
    pub const HARD_MAX_Q: u32 = 256;

    pub fn check_candidates(&self, what: &'static str, needed: u64) -> crate::Result<()> {
        if needed > self.max_candidates {
            return Err(crate::Error::BudgetExceeded { what, needed, limit: self.max_candidates });
        }
        Ok(())
    }

    pub fn check_subspaces(&self, what: &'static str, needed: u64) -> crate::Result<()> {
        if needed > self.max_subspaces {
            return Err(crate::Error::BudgetExceeded { what, needed, limit: self.max_subspaces });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_q: Self::DEFAULT_MAX_Q,
            max_candidates: Self::DEFAULT_MAX_CANDIDATES,
            max_subspaces: Self::DEFAULT_MAX_SUBSPACES,
        }
    }
}

/// `base^exp`, saturating at `u64::MAX`.
pub(crate) fn sat_pow(base: u64, exp: usize) -> u64 {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
        if acc == u64::MAX {
            break;
        }
    }
    acc
}
