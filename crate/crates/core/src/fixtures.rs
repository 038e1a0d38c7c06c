//! Small named structures used by tests, examples and the command line.

use alloc::vec::Vec;

use crate::coherence::BiHomObject;
use crate::error::Result;
use crate::exactlin::{DenseMap, Field, Scalar};
use crate::structures::StructureBundle;
use crate::twist::{yau_twist, Direction, PlainStructure};

/// `F[C_n]` with `g^i g^j = g^{i+j}`, grouplike basis and identity endomorphisms.
pub fn cyclic_group_algebra(field: Field, order: usize) -> Result<StructureBundle> {
    group_algebra_on(BiHomObject::trivial(field, order))
}

fn group_algebra_on(object: BiHomObject) -> Result<StructureBundle> {
    let (f, n) = (object.field(), object.dim());
    let mult: Vec<usize> = (0..n * n).map(|ij| (ij / n + ij % n) % n).collect();
    let diag: Vec<usize> = (0..n).map(|i| i * n + i).collect();
    StructureBundle::new(
        object,
        Some(DenseMap::from_basis_images(f, n, &mult)?),
        Some(DenseMap::from_basis_images(f, n, &[0])?),
        Some(DenseMap::from_basis_images(f, n * n, &diag)?),
        Some(DenseMap::from_fn(f, 1, n, |_, _| f.one())?),
    )
}

/// Linearization of `g^i -> g^{e i}` on `F[C_n]`.
pub fn power_map(field: Field, order: usize, e: usize) -> Result<DenseMap> {
    let images: Vec<usize> = (0..order).map(|i| i * e % order).collect();
    DenseMap::from_basis_images(field, order, &images)
}

pub fn f7() -> Field {
    Field::prime(7).expect("7 is prime")
}

/// `F_7[C_3]` with identity endomorphisms.
pub fn c3_classical() -> Result<StructureBundle> {
    cyclic_group_algebra(f7(), 3)
}

/// `F_7[C_3]` with all four endomorphisms `g -> g^2`, before twisting.
pub fn c3_squared_plain() -> Result<PlainStructure> {
    let s = power_map(f7(), 3, 2)?;
    let obj = BiHomObject::with_four(s.clone(), s.clone(), s.clone(), s)?;
    PlainStructure::new(group_algebra_on(obj)?)
}

/// The Yau twist of [`c3_squared_plain`] as a bimonoid.
pub fn c3_twisted() -> Result<StructureBundle> {
    yau_twist(&c3_squared_plain()?, Direction::Bimonoid)
}

/// The monoid algebra of `{e, z}` with `z z = z`, both basis vectors
/// grouplike. A bialgebra without antipode.
pub fn idempotent_bialgebra(field: Field) -> Result<StructureBundle> {
    StructureBundle::new(
        BiHomObject::trivial(field, 2),
        Some(DenseMap::from_basis_images(field, 2, &[0, 1, 1, 1])?),
        Some(DenseMap::from_basis_images(field, 2, &[0])?),
        Some(DenseMap::from_basis_images(field, 4, &[0, 3])?),
        Some(DenseMap::from_fn(field, 1, 2, |_, _| field.one())?),
    )
}

/// `m` with `by` added to entry `(row, col)`.
pub fn perturb(m: &DenseMap, row: usize, col: usize, by: &Scalar) -> Result<DenseMap> {
    let f = m.field();
    let bump = DenseMap::from_fn(f, m.dst_dim(), m.src_dim(), |r, c| if (r, c) == (row, col) { by.clone() } else { f.zero() })?;
    m.add(&bump)
}
