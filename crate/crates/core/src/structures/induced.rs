use alloc::vec::Vec;

use super::bundle::{ModuleInst, StructureBundle};
use super::checks::{kron, path};
use super::iterated::{delta_n, Variant};
use crate::coherence::{nprod, xi_map, BiHomObject};
use crate::error::{Error, Result};
use crate::exactlin::DenseMap;

/// Tensor product of modules over a bimonoid, acting by
/// `((x)_i rho_i) . xi^n_2 . (1 (x) delta_n)`. With no modules the carrier
/// is the unit and the action is the counit.
pub fn induced_module_action(over: &StructureBundle, mods: &[ModuleInst]) -> Result<ModuleInst> {
    if mods.iter().any(|m| m.over != *over) {
        return Err(Error::MixedStructures);
    }
    let (f, a) = (over.field(), over.object());
    let carriers: Vec<BiHomObject> = mods.iter().map(|m| m.carrier.clone()).collect();
    let x = nprod(f, &carriers)?;
    let grid: Vec<Vec<BiHomObject>> = carriers.iter().map(|c| alloc::vec![c.clone(), a.clone()]).collect();
    let xi = xi_map(2, mods.len(), f, &grid)?;
    let actions: Vec<&DenseMap> = mods.iter().map(|m| &m.action).collect();
    let split = kron(f, &[&DenseMap::identity(f, x.dim()), &delta_n(over, mods.len(), Variant::Iterative)?])?;
    let action = path(&[&kron(f, &actions)?, &xi, &split])?;
    ModuleInst::new(x, action, over.clone())
}
