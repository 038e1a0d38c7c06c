//! Yau twisting of classical structures, its inverse, antipodes and the
//! canonical morphism.

use alloc::format;
use alloc::vec::Vec;

use crate::coherence::{BiHomObject, Endo};
use crate::combinat::Permutation;
use crate::error::{Error, Result};
use crate::exactlin::{solve_linear, DenseMap, Field, Scalar, Solution};
use crate::structures::{CheckReport, DiagramResult, ModuleInst, StructureBundle, StructureKind};

fn kron(field: Field, maps: &[&DenseMap]) -> Result<DenseMap> {
    DenseMap::kron_all(field, maps.iter().copied())
}

/// A bundle whose endomorphisms are morphisms of every present structure map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainStructure(StructureBundle);

impl PlainStructure {
    pub fn new(bundle: StructureBundle) -> Result<PlainStructure> {
        PlainStructure::validate(&bundle)?;
        Ok(PlainStructure(bundle))
    }

    /// Checks `e mu = mu (e (x) e)`, `e eta = eta`, `delta e = (e (x) e) delta`
    /// and `eps e = eps` for every endomorphism `e` of the carrier.
    pub fn validate(b: &StructureBundle) -> Result<()> {
        let f = b.field();
        for (e, m) in b.object().present() {
            let mm = kron(f, &[m, m])?;
            let fail = |what: &str| Err(Error::InvariantViolation(format!("{} does not preserve {what}", e.name())));
            if let Some(mu) = b.mu() {
                if m.compose(mu)? != mu.compose(&mm)? {
                    return fail("mu");
                }
            }
            if let Some(eta) = b.eta() {
                if m.compose(eta)? != *eta {
                    return fail("eta");
                }
            }
            if let Some(delta) = b.delta() {
                if delta.compose(m)? != mm.compose(delta)? {
                    return fail("delta");
                }
            }
            if let Some(eps) = b.epsilon() {
                if eps.compose(m)? != *eps {
                    return fail("epsilon");
                }
            }
        }
        Ok(())
    }

    pub fn bundle(&self) -> &StructureBundle {
        &self.0
    }

    pub fn into_bundle(self) -> StructureBundle {
        self.0
    }
}

/// Which structure maps a twist acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Comonoid,
    Monoid,
    Bimonoid,
}

impl Direction {
    fn co(self) -> bool {
        matches!(self, Direction::Comonoid | Direction::Bimonoid)
    }

    fn mono(self) -> bool {
        matches!(self, Direction::Monoid | Direction::Bimonoid)
    }
}

fn gamma_with(field: Field, first: &DenseMap, second: &DenseMap, n: usize) -> Result<DenseMap> {
    let factors: Vec<DenseMap> = (1..=n)
        .map(|i| first.pow((n - i) as u64)?.compose(&second.pow((i - 1) as u64)?))
        .collect::<Result<_>>()?;
    DenseMap::kron_all(field, &factors)
}

/// `Gamma_n = (x)_{i=1..n} alpha^{n-i} beta^{i-1}` on `obj^{(x) n}`.
pub fn gamma_map(obj: &BiHomObject, n: usize) -> Result<DenseMap> {
    gamma_with(obj.field(), obj.alpha(), obj.beta(), n)
}

/// `delta' = (alpha (x) beta) delta` and/or `mu' = mu (kappa (x) nu)`; units
/// and counits are kept.
pub fn yau_twist(p: &PlainStructure, direction: Direction) -> Result<StructureBundle> {
    let b = &p.0;
    let (f, a) = (b.field(), b.object());
    let mut delta = b.delta().cloned();
    let mut mu = b.mu().cloned();
    if direction.co() {
        let d = b.need_delta()?;
        delta = Some(gamma_map(a, 2)?.compose(d)?);
    }
    if direction.mono() {
        let m = b.need_mu()?;
        let ((_, k), (_, n)) = a.monoid_pair();
        mu = Some(m.compose(&gamma_with(f, k, n, 2)?)?);
    }
    StructureBundle::new(a.clone(), mu, b.eta().cloned(), delta, b.epsilon().cloned())
}

fn inverse(m: &DenseMap, e: Endo) -> Result<DenseMap> {
    m.invert()?.ok_or(Error::NotInvertible(e.name()))
}

/// `mu~ = mu (kappa^-1 (x) nu^-1)`, `delta~ = (alpha^-1 (x) beta^-1) delta`.
pub fn untwist(b: &StructureBundle) -> Result<PlainStructure> {
    let (f, a) = (b.field(), b.object());
    let mu = match b.mu() {
        Some(m) => {
            let ((ek, k), (en, n)) = a.monoid_pair();
            Some(m.compose(&kron(f, &[&inverse(k, ek)?, &inverse(n, en)?])?)?)
        }
        None => None,
    };
    let delta = match b.delta() {
        Some(d) => {
            let pre = kron(f, &[&inverse(a.alpha(), Endo::Alpha)?, &inverse(a.beta(), Endo::Beta)?])?;
            Some(pre.compose(d)?)
        }
        None => None,
    };
    PlainStructure::new(StructureBundle::new(a.clone(), mu, b.eta().cloned(), delta, b.epsilon().cloned())?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AntipodeMethod {
    /// Solve the BiHom antipode equations directly.
    Direct,
    /// Solve the classical equations of the untwisted structure.
    ViaUntwist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AntipodeVerdict {
    Unique,
    NoAntipode,
    /// The system has many solutions; `chi` holds one witness.
    NonUnique,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeResult {
    pub method: AntipodeMethod,
    pub verdict: AntipodeVerdict,
    pub chi: Option<DenseMap>,
    /// `chi` satisfies both BiHom antipode equations.
    pub both_sided: bool,
}

/// Both sides `mu w (1 (x) chi) delta` and `mu w (chi (x) 1) delta`.
fn sides(mu: &DenseMap, w: &DenseMap, delta: &DenseMap, chi: &DenseMap) -> Result<(DenseMap, DenseMap)> {
    let f = mu.field();
    let id = DenseMap::identity(f, chi.dst_dim());
    let left = DenseMap::compose_all(&[mu, w, &kron(f, &[&id, chi])?, delta])?;
    let right = DenseMap::compose_all(&[mu, w, &kron(f, &[chi, &id])?, delta])?;
    Ok((left, right))
}

/// `(beta nu) (x) (alpha kappa)`.
fn bihom_weight(b: &StructureBundle) -> Result<DenseMap> {
    let a = b.object();
    let ((_, k), (_, n)) = a.monoid_pair();
    kron(b.field(), &[&a.beta().compose(n)?, &a.alpha().compose(k)?])
}

fn eta_eps(b: &StructureBundle) -> Result<DenseMap> {
    b.need_eta()?.compose(b.need_epsilon()?)
}

fn solve_chi(b: &StructureBundle, w: &DenseMap) -> Result<(AntipodeVerdict, Option<DenseMap>)> {
    let (f, d) = (b.field(), b.dim());
    let (mu, delta) = (b.need_mu()?, b.need_delta()?);
    let target = eta_eps(b)?;
    let unknowns = d * d;
    let mut per_unknown = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let e = DenseMap::from_fn(f, d, d, |r, c| if r * d + c == u { f.one() } else { f.zero() })?;
        per_unknown.push(sides(mu, w, delta, &e)?);
    }
    let mut system: Vec<(Vec<Scalar>, Scalar)> = Vec::with_capacity(2 * unknowns);
    for side in 0..2 {
        for r in 0..d {
            for c in 0..d {
                let row = per_unknown.iter().map(|(l, rt)| if side == 0 { l.get(r, c) } else { rt.get(r, c) }).collect();
                system.push((row, target.get(r, c)));
            }
        }
    }
    Ok(match solve_linear(f, &system, unknowns)? {
        Solution::Inconsistent => (AntipodeVerdict::NoAntipode, None),
        Solution::Unique(x) => (AntipodeVerdict::Unique, Some(DenseMap::from_scalars(f, d, d, x)?)),
        Solution::Underdetermined(x) => (AntipodeVerdict::NonUnique, Some(DenseMap::from_scalars(f, d, d, x)?)),
    })
}

/// Compares both sides of the BiHom antipode equation for `chi` with `eta eps`.
pub fn check_antipode(b: &StructureBundle, chi: &DenseMap) -> Result<CheckReport> {
    let (left, right) = sides(b.need_mu()?, &bihom_weight(b)?, b.need_delta()?, chi)?;
    let target = eta_eps(b)?;
    Ok(CheckReport::new(
        StructureKind::Antipode,
        alloc::vec![
            DiagramResult::compare("antipode left", "antipode.left", &left, &target),
            DiagramResult::compare("antipode right", "antipode.right", &right, &target),
        ],
    ))
}

/// Finds `chi` with `mu (beta nu (x) alpha kappa)(1 (x) chi) delta = eta eps`
/// and the mirrored equation.
pub fn antipode_solve(b: &StructureBundle, method: AntipodeMethod) -> Result<AntipodeResult> {
    let (verdict, chi) = match method {
        AntipodeMethod::Direct => solve_chi(b, &bihom_weight(b)?)?,
        AntipodeMethod::ViaUntwist => {
            let plain = untwist(b)?.into_bundle();
            solve_chi(&plain, &DenseMap::identity(b.field(), b.dim() * b.dim()))?
        }
    };
    let both_sided = match &chi {
        Some(c) => check_antipode(b, c)?.passed(),
        None => false,
    };
    Ok(AntipodeResult { method, verdict, chi, both_sided })
}

/// `(rho (x) 1 (x) 1)(1 (x) sigma (x) 1)(1 (x) 1 (x) delta)` on `x (x) y (x) a`,
/// where `sigma` swaps `y` and `a`; also reports invertibility.
pub fn canonical_morphism(x: &ModuleInst, y: &BiHomObject, b: &StructureBundle) -> Result<(DenseMap, bool)> {
    if x.over != *b {
        return Err(Error::MixedStructures);
    }
    if y.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let f = b.field();
    let (dx, dy, da) = (x.carrier.dim(), y.dim(), b.dim());
    let (ix, iy, ia) = (DenseMap::identity(f, dx), DenseMap::identity(f, dy), DenseMap::identity(f, da));
    let split = kron(f, &[&ix, &iy, b.need_delta()?])?;
    let sigma = Permutation::new(alloc::vec![0, 2, 1, 3])?.to_dense_map(f, &[dx, dy, da, da])?;
    let act = kron(f, &[&x.action, &iy, &ia])?;
    let m = DenseMap::compose_all(&[&act, &sigma, &split])?;
    let invertible = m.invert()?.is_some();
    Ok((m, invertible))
}
