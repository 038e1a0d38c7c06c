use alloc::format;
use alloc::vec::Vec;

use super::bundle::{ComoduleInst, HopfModuleInst, ModuleInst, StructureBundle};
use super::report::{CheckReport, DiagramResult, Diagrams, StructureKind};
use crate::coherence::{xi_map, BiHomObject};
use crate::error::Result;
use crate::exactlin::{DenseMap, Field};

pub(crate) fn kron(field: Field, maps: &[&DenseMap]) -> Result<DenseMap> {
    DenseMap::kron_all(field, maps.iter().copied())
}

pub(crate) fn path(maps: &[&DenseMap]) -> Result<DenseMap> {
    DenseMap::compose_all(maps)
}

/// `(kappa, nu)` of an object, falling back to `(alpha, beta)`.
pub(crate) fn monoid_endos(o: &BiHomObject) -> (&DenseMap, &DenseMap) {
    let ((_, k), (_, n)) = o.monoid_pair();
    (k, n)
}

fn semigroup_diagrams(b: &StructureBundle) -> Diagrams {
    let (f, mu) = (b.field(), b.need_mu()?);
    let id = DenseMap::identity(f, b.dim());
    let (kappa, nu) = monoid_endos(b.object());
    let lhs = path(&[mu, &kron(f, &[mu, &id])?, &kron(f, &[&id, &id, nu])?])?;
    let rhs = path(&[mu, &kron(f, &[&id, mu])?, &kron(f, &[kappa, &id, &id])?])?;
    let mut out = alloc::vec![DiagramResult::compare("BiHom associativity", "semigroup.associativity", &lhs, &rhs)];
    for (e, m) in b.object().present() {
        out.push(DiagramResult::compare(
            format!("multiplication commutes with {}", e.name()),
            format!("semigroup.endomorphism.{}", e.name()),
            &m.compose(mu)?,
            &mu.compose(&kron(f, &[m, m])?)?,
        ));
    }
    Ok(out)
}

fn cosemigroup_diagrams(b: &StructureBundle) -> Diagrams {
    let (f, delta) = (b.field(), b.need_delta()?);
    let id = DenseMap::identity(f, b.dim());
    let (alpha, beta) = (b.object().alpha(), b.object().beta());
    let lhs = path(&[&kron(f, &[&id, &id, beta])?, &kron(f, &[delta, &id])?, delta])?;
    let rhs = path(&[&kron(f, &[alpha, &id, &id])?, &kron(f, &[&id, delta])?, delta])?;
    let mut out = alloc::vec![DiagramResult::compare("BiHom coassociativity", "cosemigroup.coassociativity", &lhs, &rhs)];
    for (e, m) in b.object().present() {
        out.push(DiagramResult::compare(
            format!("comultiplication commutes with {}", e.name()),
            format!("cosemigroup.endomorphism.{}", e.name()),
            &delta.compose(m)?,
            &kron(f, &[m, m])?.compose(delta)?,
        ));
    }
    Ok(out)
}

fn unit_diagrams(b: &StructureBundle) -> Diagrams {
    let (f, mu, eta) = (b.field(), b.need_mu()?, b.need_eta()?);
    let id = DenseMap::identity(f, b.dim());
    let (kappa, nu) = monoid_endos(b.object());
    let mut out = alloc::vec![
        DiagramResult::compare("left unit", "monoid.unit.left", &mu.compose(&kron(f, &[eta, &id])?)?, nu),
        DiagramResult::compare("right unit", "monoid.unit.right", &mu.compose(&kron(f, &[&id, eta])?)?, kappa),
    ];
    for (e, m) in b.object().present() {
        out.push(DiagramResult::compare(
            format!("unit fixed by {}", e.name()),
            format!("monoid.unit.{}", e.name()),
            &m.compose(eta)?,
            eta,
        ));
    }
    Ok(out)
}

fn counit_diagrams(b: &StructureBundle) -> Diagrams {
    let (f, delta, eps) = (b.field(), b.need_delta()?, b.need_epsilon()?);
    let id = DenseMap::identity(f, b.dim());
    let (alpha, beta) = (b.object().alpha(), b.object().beta());
    let mut out = alloc::vec![
        DiagramResult::compare("left counit", "comonoid.counit.left", &kron(f, &[eps, &id])?.compose(delta)?, beta),
        DiagramResult::compare("right counit", "comonoid.counit.right", &kron(f, &[&id, eps])?.compose(delta)?, alpha),
    ];
    for (e, m) in b.object().present() {
        out.push(DiagramResult::compare(
            format!("counit fixed by {}", e.name()),
            format!("comonoid.counit.{}", e.name()),
            &eps.compose(m)?,
            eps,
        ));
    }
    Ok(out)
}

fn compatibility_diagram(b: &StructureBundle) -> Result<DiagramResult> {
    let (f, mu, delta) = (b.field(), b.need_mu()?, b.need_delta()?);
    let a = b.object();
    let xi = xi_map(2, 2, f, &[alloc::vec![a.clone(), a.clone()], alloc::vec![a.clone(), a.clone()]])?;
    let lhs = delta.compose(mu)?;
    let rhs = path(&[&kron(f, &[mu, mu])?, &xi, &kron(f, &[delta, delta])?])?;
    Ok(DiagramResult::compare(
        "multiplication-comultiplication compatibility",
        "bisemigroup.compatibility",
        &lhs,
        &rhs,
    ))
}

fn bimonoid_unit_diagrams(b: &StructureBundle) -> Diagrams {
    let f = b.field();
    let (mu, eta, delta, eps) = (b.need_mu()?, b.need_eta()?, b.need_delta()?, b.need_epsilon()?);
    Ok(alloc::vec![
        DiagramResult::compare("counit multiplicative", "bimonoid.counit-mu", &eps.compose(mu)?, &kron(f, &[eps, eps])?),
        DiagramResult::compare("unit comultiplicative", "bimonoid.delta-unit", &delta.compose(eta)?, &kron(f, &[eta, eta])?),
        DiagramResult::compare("counit on unit", "bimonoid.counit-unit", &eps.compose(eta)?, &DenseMap::identity(f, 1)),
    ])
}

fn report(kind: StructureKind, parts: impl IntoIterator<Item = Diagrams>) -> Result<CheckReport> {
    let mut all = Vec::new();
    for p in parts {
        all.extend(p?);
    }
    Ok(CheckReport::new(kind, all))
}

pub fn check_semigroup(b: &StructureBundle) -> Result<CheckReport> {
    report(StructureKind::Semigroup, [semigroup_diagrams(b)])
}

pub fn check_cosemigroup(b: &StructureBundle) -> Result<CheckReport> {
    report(StructureKind::Cosemigroup, [cosemigroup_diagrams(b)])
}

pub fn check_monoid(b: &StructureBundle) -> Result<CheckReport> {
    report(StructureKind::Monoid, [semigroup_diagrams(b), unit_diagrams(b)])
}

pub fn check_comonoid(b: &StructureBundle) -> Result<CheckReport> {
    report(StructureKind::Comonoid, [cosemigroup_diagrams(b), counit_diagrams(b)])
}

pub fn check_bisemigroup(b: &StructureBundle) -> Result<CheckReport> {
    let compat = compatibility_diagram(b).map(|d| alloc::vec![d]);
    report(StructureKind::Bisemigroup, [semigroup_diagrams(b), cosemigroup_diagrams(b), compat])
}

pub fn check_bimonoid(b: &StructureBundle) -> Result<CheckReport> {
    let compat = compatibility_diagram(b).map(|d| alloc::vec![d]);
    report(
        StructureKind::Bimonoid,
        [
            semigroup_diagrams(b),
            cosemigroup_diagrams(b),
            compat,
            unit_diagrams(b),
            counit_diagrams(b),
            bimonoid_unit_diagrams(b),
        ],
    )
}

fn module_diagrams(m: &ModuleInst) -> Diagrams {
    let (b, x, rho) = (&m.over, &m.carrier, &m.action);
    let (f, mu) = (b.field(), b.need_mu()?);
    let (ix, ia) = (DenseMap::identity(f, x.dim()), DenseMap::identity(f, b.dim()));
    let (kappa_x, _) = monoid_endos(x);
    let (_, nu_a) = monoid_endos(b.object());
    let lhs = path(&[rho, &kron(f, &[rho, &ia])?, &kron(f, &[&ix, &ia, nu_a])?])?;
    let rhs = path(&[rho, &kron(f, &[&ix, mu])?, &kron(f, &[kappa_x, &ia, &ia])?])?;
    let mut out = alloc::vec![DiagramResult::compare("module associativity", "module.associativity", &lhs, &rhs)];
    if let Some(eta) = b.eta() {
        out.push(DiagramResult::compare("module unit", "module.unit", &rho.compose(&kron(f, &[&ix, eta])?)?, kappa_x));
    }
    for (e, ex) in x.present() {
        if let Some(ea) = b.object().endo(e) {
            out.push(DiagramResult::compare(
                format!("action commutes with {}", e.name()),
                format!("module.endomorphism.{}", e.name()),
                &rho.compose(&kron(f, &[ex, ea])?)?,
                &ex.compose(rho)?,
            ));
        }
    }
    Ok(out)
}

fn comodule_diagrams(c: &ComoduleInst) -> Diagrams {
    let (b, x, rho) = (&c.over, &c.carrier, &c.coaction);
    let (f, delta) = (b.field(), b.need_delta()?);
    let (ix, ia) = (DenseMap::identity(f, x.dim()), DenseMap::identity(f, b.dim()));
    let lhs = path(&[&kron(f, &[x.alpha(), &ia, &ia])?, &kron(f, &[&ix, delta])?, rho])?;
    let rhs = path(&[&kron(f, &[&ix, &ia, b.object().beta()])?, &kron(f, &[rho, &ia])?, rho])?;
    let mut out = alloc::vec![DiagramResult::compare("comodule coassociativity", "comodule.coassociativity", &lhs, &rhs)];
    if let Some(eps) = b.epsilon() {
        out.push(DiagramResult::compare(
            "comodule counit",
            "comodule.counit",
            &kron(f, &[&ix, eps])?.compose(rho)?,
            x.alpha(),
        ));
    }
    for (e, ex) in x.present() {
        if let Some(ea) = b.object().endo(e) {
            out.push(DiagramResult::compare(
                format!("coaction commutes with {}", e.name()),
                format!("comodule.endomorphism.{}", e.name()),
                &rho.compose(ex)?,
                &kron(f, &[ex, ea])?.compose(rho)?,
            ));
        }
    }
    Ok(out)
}

pub fn check_module(m: &ModuleInst) -> Result<CheckReport> {
    report(StructureKind::Module, [module_diagrams(m)])
}

pub fn check_comodule(c: &ComoduleInst) -> Result<CheckReport> {
    report(StructureKind::Comodule, [comodule_diagrams(c)])
}

pub fn check_hopf_module(h: &HopfModuleInst) -> Result<CheckReport> {
    let compat = (|| {
        let (b, x) = (&h.over, &h.carrier);
        let (f, mu, delta) = (b.field(), b.need_mu()?, b.need_delta()?);
        let a = b.object();
        let xi = xi_map(2, 2, f, &[alloc::vec![x.clone(), a.clone()], alloc::vec![a.clone(), a.clone()]])?;
        let lhs = h.coaction.compose(&h.action)?;
        let rhs = path(&[&kron(f, &[&h.action, mu])?, &xi, &kron(f, &[&h.coaction, delta])?])?;
        Ok(alloc::vec![DiagramResult::compare("Hopf module compatibility", "hopf-module.compatibility", &lhs, &rhs)])
    })();
    report(StructureKind::HopfModule, [module_diagrams(&h.module()), comodule_diagrams(&h.comodule()), compat])
}
