//! Seeded random instances for the randomized suites.

use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::Rng;

use super::figures::{DuoidalInstance, LaxInstance};
use super::object::BiHomObject;
use crate::combinat::{DoubleSeq, IndexSeq};
use crate::exactlin::{DenseMap, Field, Scalar};

/// How the commuting endomorphisms of a random object are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndoStyle {
    /// Independent random diagonal matrices.
    Diagonal,
    /// Random polynomials of degree at most 2 in one shared random matrix.
    Polynomial,
}

/// Size limits for random index data and objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: usize,
    pub max_m: usize,
    pub max_k: usize,
    pub max_dim: usize,
}

pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R, field: Field) -> Scalar {
    match field.modulus() {
        Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
        None => {
            let n: i64 = rng.gen_range(-4..=4);
            let d: i64 = rng.gen_range(1..=3);
            field.from_ratio(BigInt::from(n), BigInt::from(d)).expect("nonzero denominator")
        }
    }
}

pub fn random_map<R: Rng + ?Sized>(rng: &mut R, field: Field, dst: usize, src: usize) -> DenseMap {
    DenseMap::from_fn(field, dst, src, |_, _| random_scalar(rng, field)).expect("field-consistent entries")
}

fn random_diagonal<R: Rng + ?Sized>(rng: &mut R, field: Field, dim: usize) -> DenseMap {
    let d: Vec<Scalar> = (0..dim).map(|_| random_scalar(rng, field)).collect();
    DenseMap::diagonal(field, &d).expect("field-consistent entries")
}

fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, field: Field, base: &DenseMap) -> DenseMap {
    let dim = base.dst_dim();
    let mut acc = DenseMap::zero(field, dim, dim);
    let mut power = DenseMap::identity(field, dim);
    for _ in 0..3 {
        let c = random_scalar(rng, field);
        acc = acc.add(&power.scale(&c).expect("same field")).expect("same shape");
        power = power.compose(base).expect("square");
    }
    acc
}

/// A random object with four commuting endomorphisms.
pub fn random_object<R: Rng + ?Sized>(rng: &mut R, field: Field, dim: usize, style: EndoStyle) -> BiHomObject {
    let endos: Vec<DenseMap> = match style {
        EndoStyle::Diagonal => (0..4).map(|_| random_diagonal(rng, field, dim)).collect(),
        EndoStyle::Polynomial => {
            let base = random_map(rng, field, dim, dim);
            (0..4).map(|_| random_polynomial(rng, field, &base)).collect()
        }
    };
    let [a, b, k, n]: [DenseMap; 4] = endos.try_into().expect("four maps");
    BiHomObject::with_four(a, b, k, n).expect("commuting by construction")
}

fn random_sized_object<R: Rng + ?Sized>(rng: &mut R, field: Field, max_dim: usize, style: EndoStyle) -> BiHomObject {
    let dim = rng.gen_range(1..=max_dim);
    random_object(rng, field, dim, style)
}

pub fn random_double_seq<R: Rng + ?Sized>(rng: &mut R, max_n: usize, max_m: usize, max_k: usize) -> DoubleSeq {
    let n = rng.gen_range(0..=max_n);
    DoubleSeq::from_rows(
        (0..n)
            .map(|_| {
                let m = rng.gen_range(0..=max_m);
                (0..m).map(|_| rng.gen_range(0..=max_k)).collect()
            })
            .collect(),
    )
}

pub fn random_lax_instance<R: Rng + ?Sized>(rng: &mut R, field: Field, b: Bounds, style: EndoStyle) -> LaxInstance {
    let shape = random_double_seq(rng, b.max_n, b.max_m, b.max_k);
    let objects = shape
        .rows()
        .iter()
        .map(|row| {
            row.items()
                .iter()
                .map(|&k| (0..k).map(|_| random_sized_object(rng, field, b.max_dim, style)).collect())
                .collect()
        })
        .collect();
    LaxInstance { field, objects }
}

/// `n` in `0..=max_n`, `p` in `0..=max_m`, each `k_i` in `0..=max_k`.
pub fn random_duoidal_instance<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    b: Bounds,
    style: EndoStyle,
) -> DuoidalInstance {
    let n = rng.gen_range(0..=b.max_n);
    let p = rng.gen_range(0..=b.max_m);
    let k = IndexSeq((0..p).map(|_| rng.gen_range(0..=b.max_k)).collect());
    let grid = (0..k.total())
        .map(|_| (0..n).map(|_| random_sized_object(rng, field, b.max_dim, style)).collect())
        .collect();
    DuoidalInstance { field, n, k, grid }
}
