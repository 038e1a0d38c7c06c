use alloc::vec::Vec;

use super::field::{Field, Scalar, Value};
use super::kernel::{self, Arith, Fp, Q};
use crate::error::{Error, Result};

/// Classification of a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Scalar>),
    /// No solution exists.
    Inconsistent,
    /// Infinitely many solutions; carries the one with all free unknowns zero.
    Underdetermined(Vec<Scalar>),
}

/// Solves `sum_j row[j] * x_j = rhs` for every `(row, rhs)` in `system`.
pub fn solve_linear(field: Field, system: &[(Vec<Scalar>, Scalar)], unknowns: usize) -> Result<Solution> {
    for (i, (row, rhs)) in system.iter().enumerate() {
        if row.len() != unknowns {
            return Err(Error::RowLengthMismatch { row: i, expected: unknowns, found: row.len() });
        }
        if rhs.field != field || row.iter().any(|s| s.field != field) {
            return Err(Error::FieldMismatch);
        }
    }
    let solution = match field.modulus() {
        None => solve_generic(&Q, system, unknowns, |s| match &s.value {
            Value::Q(q) => q.clone(),
            Value::P(_) => unreachable!(),
        })
        .map(|v| v.into_iter().map(|q| Scalar { field, value: Value::Q(q) }).collect()),
        Some(p) => solve_generic(&Fp(p), system, unknowns, |s| match &s.value {
            Value::P(v) => *v,
            Value::Q(_) => unreachable!(),
        })
        .map(|v| v.into_iter().map(|x| Scalar { field, value: Value::P(x) }).collect()),
    };
    Ok(match solution {
        Classified::Unique(v) => Solution::Unique(v),
        Classified::Inconsistent => Solution::Inconsistent,
        Classified::Under(v) => Solution::Underdetermined(v),
    })
}

enum Classified<T> {
    Unique(T),
    Inconsistent,
    Under(T),
}

impl<T> Classified<T> {
    fn map<U>(self, f: impl FnOnce(T) -> U) -> Classified<U> {
        match self {
            Classified::Unique(t) => Classified::Unique(f(t)),
            Classified::Inconsistent => Classified::Inconsistent,
            Classified::Under(t) => Classified::Under(f(t)),
        }
    }
}

fn solve_generic<A: Arith>(
    ar: &A,
    system: &[(Vec<Scalar>, Scalar)],
    unknowns: usize,
    lift: impl Fn(&Scalar) -> A::E,
) -> Classified<Vec<A::E>> {
    let rows = system.len();
    let cols = unknowns + 1;
    let mut m = Vec::with_capacity(rows * cols);
    for (row, rhs) in system {
        m.extend(row.iter().map(&lift));
        m.push(lift(rhs));
    }
    let pivots = kernel::rref(ar, &mut m, rows, cols, cols);
    if pivots.last() == Some(&unknowns) {
        return Classified::Inconsistent;
    }
    let mut x = alloc::vec![ar.zero(); unknowns];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r * cols + unknowns].clone();
    }
    if pivots.len() == unknowns {
        Classified::Unique(x)
    } else {
        Classified::Under(x)
    }
}
