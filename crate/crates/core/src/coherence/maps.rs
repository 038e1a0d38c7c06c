use alloc::vec::Vec;

use super::object::{BiHomObject, Endo};
use crate::combinat::{bar, flip_map, z_of, IndexSeq};
use crate::error::{Error, Result};
use crate::exactlin::{DenseMap, Field};

/// The four families of coherence endomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coherence {
    /// `Phi`: exponents from `bar(k_p) - 1`, acting by `alpha`, `beta`.
    BigPhi,
    /// `phi`: exponents from `Z(k_p)`, acting by `alpha`, `beta`.
    SmallPhi,
    /// `Psi`: as `Phi`, acting by `kappa`, `nu`.
    BigPsi,
    /// `psi`: as `phi`, acting by `kappa`, `nu`.
    SmallPsi,
}

impl Coherence {
    fn weight(self, k: usize) -> u64 {
        match self {
            Coherence::BigPhi | Coherence::BigPsi => (bar(k) - 1) as u64,
            Coherence::SmallPhi | Coherence::SmallPsi => z_of(k) as u64,
        }
    }

    /// Endomorphisms raised to the (left, right) exponents.
    pub fn endos(self) -> (Endo, Endo) {
        match self {
            Coherence::BigPhi | Coherence::SmallPhi => (Endo::Alpha, Endo::Beta),
            Coherence::BigPsi | Coherence::SmallPsi => (Endo::Kappa, Endo::Nu),
        }
    }
}

/// Per group `i` and slot `j < k_i`, the exponent pair: the first acts by
/// `alpha` (or `kappa`) and sums over groups after `i`, the second by `beta`
/// (or `nu`) over groups before `i`.
pub fn phi_exponents(k: &IndexSeq, which: Coherence) -> Vec<Vec<(u64, u64)>> {
    let w: Vec<u64> = k.items().iter().map(|&x| which.weight(x)).collect();
    let total: u64 = w.iter().sum();
    let mut before = 0;
    let mut out = Vec::with_capacity(k.len());
    for (i, &ki) in k.items().iter().enumerate() {
        let after = total - before - w[i];
        out.push(alloc::vec![(after, before); ki]);
        before += w[i];
    }
    out
}

/// The coherence endomorphism on `(x)_i (x)_j objs[i][j]`.
pub fn coherence_map(k: &IndexSeq, which: Coherence, field: Field, objs: &[Vec<BiHomObject>]) -> Result<DenseMap> {
    if objs.len() != k.len() {
        return Err(Error::LengthMismatch { expected: k.len(), found: objs.len() });
    }
    let exps = phi_exponents(k, which);
    let (left, right) = which.endos();
    let mut factors = Vec::new();
    for (i, (group, ex)) in objs.iter().zip(&exps).enumerate() {
        if group.len() != ex.len() {
            return Err(Error::GroupShapeMismatch { group: i, expected: ex.len(), found: group.len() });
        }
        for (obj, &(a, b)) in group.iter().zip(ex) {
            if obj.field() != field {
                return Err(Error::FieldMismatch);
            }
            let l = obj.endo(left).ok_or(Error::MissingEndomorphism(left.name()))?;
            let r = obj.endo(right).ok_or(Error::MissingEndomorphism(right.name()))?;
            factors.push(l.pow(a)?.compose(&r.pow(b)?)?);
        }
    }
    DenseMap::kron_all(field, &factors)
}

/// `xi^p_n` from `(x)_{j<n} (x)_{i<p} grid[i][j]` to
/// `(x)_{i<p} (x)_{j<n} grid[i][j]`; `grid` has `p` rows of length `n`.
pub fn xi_map(n: usize, p: usize, field: Field, grid: &[Vec<BiHomObject>]) -> Result<DenseMap> {
    if grid.len() != p || grid.iter().any(|r| r.len() != n) {
        return Err(Error::ShapeMismatch(alloc::format!("xi grid must be {p} rows of {n}")));
    }
    if grid.iter().flatten().any(|o| o.field() != field) {
        return Err(Error::FieldMismatch);
    }
    let dims: Vec<Vec<usize>> = (0..n).map(|j| (0..p).map(|i| grid[i][j].dim()).collect()).collect();
    flip_map(p, n, field, &dims)
}

/// Identity on the tensor product of `objs`.
pub fn identity_on(field: Field, objs: &[BiHomObject]) -> DenseMap {
    DenseMap::identity(field, objs.iter().map(BiHomObject::dim).product())
}
