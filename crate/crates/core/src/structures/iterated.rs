use alloc::format;
use alloc::vec::Vec;

use super::bundle::StructureBundle;
use super::checks::{kron, monoid_endos, path};
use super::report::{CheckReport, DiagramResult, StructureKind};
use crate::coherence::{coherence_map, BiHomObject, Coherence};
use crate::combinat::IndexSeq;
use crate::error::{Error, Result};
use crate::exactlin::DenseMap;

/// Which recursion builds the iterated maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Splits off the first factor: `delta_{i+1} = Phi_{1,i} (1 (x) delta_i) delta`.
    Iterative,
    /// Splits the first factor of the previous map: `delta_{i+1} = Phi_{2,1..1} (delta (x) 1..1) delta_i`.
    Alternative,
}

fn copies(a: &BiHomObject, k: &[usize]) -> Vec<Vec<BiHomObject>> {
    k.iter().map(|&n| alloc::vec![a.clone(); n]).collect()
}

fn split_first(i: usize) -> IndexSeq {
    IndexSeq::new(alloc::vec![1, i])
}

fn split_head(i: usize) -> IndexSeq {
    let mut v = alloc::vec![1; i];
    v[0] = 2;
    IndexSeq(v)
}

/// Copy of the carrier whose second pair is its monoid-side pair.
fn monoid_view(a: &BiHomObject) -> Result<BiHomObject> {
    let (k, n) = monoid_endos(a);
    BiHomObject::with_four(a.alpha().clone(), a.beta().clone(), k.clone(), n.clone())
}

/// The iterated comultiplication `a -> a^{(x) n}`; `delta_0` is the counit.
pub fn delta_n(b: &StructureBundle, n: usize, variant: Variant) -> Result<DenseMap> {
    if n == 0 {
        return b.need_epsilon().cloned();
    }
    let (f, a) = (b.field(), b.object());
    let id = DenseMap::identity(f, a.dim());
    let mut d = id.clone();
    for i in 1..n {
        let delta = b.need_delta()?;
        d = match variant {
            Variant::Iterative => {
                let k = split_first(i);
                let phi = coherence_map(&k, Coherence::BigPhi, f, &copies(a, k.items()))?;
                path(&[&phi, &kron(f, &[&id, &d])?, delta])?
            }
            Variant::Alternative => {
                let k = split_head(i);
                let phi = coherence_map(&k, Coherence::BigPhi, f, &copies(a, k.items()))?;
                let rest = DenseMap::identity(f, a.dim().pow(i as u32 - 1));
                path(&[&phi, &kron(f, &[delta, &rest])?, &d])?
            }
        };
    }
    Ok(d)
}

/// The iterated multiplication `a^{(x) n} -> a`; `mu_0` is the unit.
pub fn mu_n(b: &StructureBundle, n: usize, variant: Variant) -> Result<DenseMap> {
    if n == 0 {
        return b.need_eta().cloned();
    }
    let f = b.field();
    let a = monoid_view(b.object())?;
    let id = DenseMap::identity(f, a.dim());
    let mut m = id.clone();
    for i in 1..n {
        let mu = b.need_mu()?;
        m = match variant {
            Variant::Iterative => {
                let k = split_first(i);
                let psi = coherence_map(&k, Coherence::BigPsi, f, &copies(&a, k.items()))?;
                path(&[mu, &kron(f, &[&id, &m])?, &psi])?
            }
            Variant::Alternative => {
                let k = split_head(i);
                let psi = coherence_map(&k, Coherence::BigPsi, f, &copies(&a, k.items()))?;
                let rest = DenseMap::identity(f, a.dim().pow(i as u32 - 1));
                path(&[&m, &kron(f, &[mu, &rest])?, &psi])?
            }
        };
    }
    Ok(m)
}

/// `maps[i]` is the `i`-fold iterated map; index 0 only when the (co)unit exists.
struct Family {
    maps: Vec<Option<DenseMap>>,
    unit_name: &'static str,
}

impl Family {
    fn build(b: &StructureBundle, up_to: usize, co: bool) -> Result<Family> {
        let unit = if co { b.epsilon() } else { b.eta() };
        let mut maps = alloc::vec![unit.cloned()];
        for n in 1..=up_to {
            maps.push(Some(if co { delta_n(b, n, Variant::Iterative)? } else { mu_n(b, n, Variant::Iterative)? }));
        }
        Ok(Family { maps, unit_name: if co { "epsilon" } else { "eta" } })
    }

    fn get(&self, n: usize) -> Result<&DenseMap> {
        self.maps[n].as_ref().ok_or(Error::MissingMap(self.unit_name))
    }
}

fn coassoc_report(b: &StructureBundle, k: &IndexSeq, fam: &Family) -> Result<CheckReport> {
    let (f, a) = (b.field(), b.object());
    let (n, total, padded) = (k.len(), k.total(), k.total() + k.zeros());
    let groups = copies(a, k.items());
    let big = coherence_map(k, Coherence::BigPhi, f, &groups)?;
    let small = coherence_map(k, Coherence::SmallPhi, f, &groups)?;
    let slotwise: Vec<&DenseMap> = k.items().iter().map(|&kp| fam.get(kp)).collect::<Result<_>>()?;
    let brackets: Vec<DenseMap> = k
        .items()
        .iter()
        .map(|&kp| if kp > 0 { Ok(DenseMap::identity(f, a.dim().pow(kp as u32))) } else { fam.get(0).cloned() })
        .collect::<Result<_>>()?;
    let left = path(&[&big, &kron(f, &slotwise)?, fam.get(n)?])?;
    let middle = DenseMap::kron_all(f, &brackets)?.compose(fam.get(padded)?)?;
    let right = small.compose(fam.get(total)?)?;
    Ok(CheckReport::new(
        StructureKind::GeneralizedCoassoc,
        alloc::vec![
            DiagramResult::compare(format!("left region k={:?}", k.items()), "iterated.coassociativity.left", &left, &middle),
            DiagramResult::compare(format!("right region k={:?}", k.items()), "iterated.coassociativity.right", &right, &middle),
        ],
    ))
}

fn assoc_report(b: &StructureBundle, k: &IndexSeq, fam: &Family) -> Result<CheckReport> {
    let f = b.field();
    let a = monoid_view(b.object())?;
    let (n, total, padded) = (k.len(), k.total(), k.total() + k.zeros());
    let groups = copies(&a, k.items());
    let big = coherence_map(k, Coherence::BigPsi, f, &groups)?;
    let small = coherence_map(k, Coherence::SmallPsi, f, &groups)?;
    let slotwise: Vec<&DenseMap> = k.items().iter().map(|&kp| fam.get(kp)).collect::<Result<_>>()?;
    let brackets: Vec<DenseMap> = k
        .items()
        .iter()
        .map(|&kp| if kp > 0 { Ok(DenseMap::identity(f, a.dim().pow(kp as u32))) } else { fam.get(0).cloned() })
        .collect::<Result<_>>()?;
    let left = path(&[fam.get(n)?, &kron(f, &slotwise)?, &big])?;
    let middle = fam.get(padded)?.compose(&DenseMap::kron_all(f, &brackets)?)?;
    let right = fam.get(total)?.compose(&small)?;
    Ok(CheckReport::new(
        StructureKind::GeneralizedAssoc,
        alloc::vec![
            DiagramResult::compare(format!("left region k={:?}", k.items()), "iterated.associativity.left", &left, &middle),
            DiagramResult::compare(format!("right region k={:?}", k.items()), "iterated.associativity.right", &right, &middle),
        ],
    ))
}

fn needed(k: &IndexSeq) -> usize {
    k.len().max(k.total() + k.zeros())
}

/// Compares `Phi_k (x)_p delta_{k_p} delta_n` and `phi_k delta_K` with the
/// padded path through `delta_{K+Z}`; zero entries use the counit.
pub fn check_generalized_coassoc(b: &StructureBundle, k: &IndexSeq) -> Result<CheckReport> {
    coassoc_report(b, k, &Family::build(b, needed(k), true)?)
}

/// Dual of [`check_generalized_coassoc`] with `mu_n`, `Psi`, `psi` and the unit.
pub fn check_generalized_assoc(b: &StructureBundle, k: &IndexSeq) -> Result<CheckReport> {
    assoc_report(b, k, &Family::build(b, needed(k), false)?)
}

/// Runs [`check_generalized_coassoc`] on every sequence with `K + Z <= limit`.
/// Sequences containing zeros are skipped when there is no counit.
pub fn coassoc_sweep(b: &StructureBundle, limit: usize) -> Result<Vec<(IndexSeq, CheckReport)>> {
    let fam = Family::build(b, limit, true)?;
    sweep(limit, b.epsilon().is_some(), |k| coassoc_report(b, k, &fam))
}

/// Runs [`check_generalized_assoc`] on every sequence with `K + Z <= limit`.
pub fn assoc_sweep(b: &StructureBundle, limit: usize) -> Result<Vec<(IndexSeq, CheckReport)>> {
    let fam = Family::build(b, limit, false)?;
    sweep(limit, b.eta().is_some(), |k| assoc_report(b, k, &fam))
}

fn sweep(
    limit: usize,
    with_unit: bool,
    check: impl Fn(&IndexSeq) -> Result<CheckReport>,
) -> Result<Vec<(IndexSeq, CheckReport)>> {
    IndexSeq::enumerate_up_to(limit)
        .into_iter()
        .filter(|k| with_unit || (!k.is_empty() && k.zeros() == 0))
        .map(|k| check(&k).map(|r| (k, r)))
        .collect()
}
