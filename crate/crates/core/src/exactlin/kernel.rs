//! Field-generic dense kernels over flat row-major buffers.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{inv_mod, mul_mod};

pub(crate) trait Arith {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::E) -> Self::E;
    fn mul_add(&self, acc: &mut Self::E, a: &Self::E, b: &Self::E) {
        *acc = self.add(acc, &self.mul(a, b));
    }
}

pub(crate) struct Q;

impl Arith for Q {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn mul_add(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        *acc += a * b;
    }
}

pub(crate) struct Fp(pub u64);

impl Arith for Fp {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.0)
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn inv(&self, a: &u64) -> u64 {
        inv_mod(*a, self.0)
    }
    fn mul_add(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + a * b) % self.0;
    }
}

pub(crate) fn identity<A: Arith>(ar: &A, n: usize) -> Vec<A::E> {
    let mut out = vec![ar.zero(); n * n];
    for i in 0..n {
        out[i * n + i] = ar.one();
    }
    out
}

/// `a` is `rows x inner`, `b` is `inner x cols`.
pub(crate) fn compose<A: Arith>(
    ar: &A,
    a: &[A::E],
    rows: usize,
    inner: usize,
    b: &[A::E],
    cols: usize,
) -> Vec<A::E> {
    let mut out = vec![ar.zero(); rows * cols];
    for i in 0..rows {
        let out_row = &mut out[i * cols..(i + 1) * cols];
        for k in 0..inner {
            let x = &a[i * inner + k];
            if ar.is_zero(x) {
                continue;
            }
            let b_row = &b[k * cols..(k + 1) * cols];
            for (o, y) in out_row.iter_mut().zip(b_row) {
                if !ar.is_zero(y) {
                    ar.mul_add(o, x, y);
                }
            }
        }
    }
    out
}

pub(crate) fn kron<A: Arith>(
    ar: &A,
    a: &[A::E],
    (ar_rows, ar_cols): (usize, usize),
    b: &[A::E],
    (br_rows, br_cols): (usize, usize),
) -> Vec<A::E> {
    let cols = ar_cols * br_cols;
    let mut out = vec![ar.zero(); ar_rows * br_rows * cols];
    for i in 0..ar_rows {
        for j in 0..ar_cols {
            let x = &a[i * ar_cols + j];
            if ar.is_zero(x) {
                continue;
            }
            for k in 0..br_rows {
                let row = i * br_rows + k;
                for l in 0..br_cols {
                    let y = &b[k * br_cols + l];
                    if !ar.is_zero(y) {
                        out[row * cols + j * br_cols + l] = ar.mul(x, y);
                    }
                }
            }
        }
    }
    out
}

/// Gauss-Jordan elimination in place, pivoting only in columns `< limit`.
/// Returns the pivot columns in order.
pub(crate) fn rref<A: Arith>(ar: &A, m: &mut [A::E], rows: usize, cols: usize, limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..limit {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !ar.is_zero(&m[r * cols + col])) else {
            continue;
        };
        if p != rank {
            for c in 0..cols {
                m.swap(p * cols + c, rank * cols + c);
            }
        }
        let s = ar.inv(&m[rank * cols + col]);
        for c in col..cols {
            m[rank * cols + c] = ar.mul(&m[rank * cols + c], &s);
        }
        for r in 0..rows {
            if r == rank || ar.is_zero(&m[r * cols + col]) {
                continue;
            }
            let f = ar.neg(&m[r * cols + col]);
            for c in col..cols {
                let pivot_entry = m[rank * cols + c].clone();
                if !ar.is_zero(&pivot_entry) {
                    let mut v = m[r * cols + c].clone();
                    ar.mul_add(&mut v, &f, &pivot_entry);
                    m[r * cols + c] = v;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}
