use crate::combinat::{bar, hat_of, tilde_of, totals, z_of, DoubleSeq};
use crate::error::{Error, Result};

/// Both sides of the four exponent identities at one slot, in the printed
/// `beta` form and the mirrored `alpha` form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentCheck {
    /// The slot holds no objects (`k_ij = 0`).
    pub vacuous: bool,
    /// `(lhs, rhs)` per identity, `beta` exponents.
    pub beta: [(usize, usize); 4],
    /// `(lhs, rhs)` per identity, `alpha` exponents.
    pub alpha: [(usize, usize); 4],
}

impl ExponentCheck {
    /// Whether identity `r` holds in both forms; vacuous slots hold trivially.
    pub fn holds(&self, r: usize) -> bool {
        self.vacuous || (self.beta[r].0 == self.beta[r].1 && self.alpha[r].0 == self.alpha[r].1)
    }

    pub fn all_hold(&self) -> bool {
        (0..4).all(|r| self.holds(r))
    }
}

/// Evaluates the four identities at the 1-based slot `(i, j)` of `k`.
pub fn check_exponent_identities(k: &DoubleSeq, i: usize, j: usize) -> Result<ExponentCheck> {
    let n = k.rows().len();
    if i == 0 || i > n || j == 0 || j > k.rows()[i - 1].len() {
        return Err(Error::SlotOutOfRange { i, j });
    }
    let (i0, j0) = (i - 1, j - 1);
    Ok(ExponentCheck {
        vacuous: k.get(i0, j0) == 0,
        beta: sides(k, i0, j0, false),
        alpha: sides(k, i0, j0, true),
    })
}

// Mirroring replaces the ranges p < i, q < j by p > i, q > j.
fn sides(k: &DoubleSeq, i: usize, j: usize, mirror: bool) -> [(usize, usize); 4] {
    let t = totals(k);
    let (tk, hk) = (tilde_of(k), hat_of(k));
    let n = k.rows().len();
    let rows: alloc::vec::Vec<usize> = if mirror { (i + 1..n).collect() } else { (0..i).collect() };
    let cols = |len: usize| if mirror { j + 1..len } else { 0..j.min(len) };
    let row = |d: &DoubleSeq, p: usize| d.rows()[p].items().to_vec();
    let sum_p = |f: &dyn Fn(usize) -> usize| rows.iter().map(|&p| f(p)).sum::<usize>();
    let sum_q = |r: &[usize], f: &dyn Fn(usize) -> usize| cols(r.len()).map(|q| f(r[q])).sum::<usize>();
    let sum_pq = |d: &DoubleSeq, f: &dyn Fn(usize) -> usize| sum_p(&|p| row(d, p).iter().map(|&x| f(x)).sum());
    let m = |p: usize| t.m.items()[p];
    let kz = |p: usize| t.row_k[p] + t.row_z[p];
    let bm1 = |x: usize| bar(x) - 1;

    let id1 = (
        sum_p(&|p| bm1(m(p))) + sum_pq(&tk, &bm1) + sum_q(&row(&tk, i), &bm1),
        sum_q(&row(k, i), &bm1) + sum_p(&|p| bm1(kz(p))),
    );
    let id2 = (
        sum_q(&row(k, i), &z_of) + sum_p(&|p| bm1(kz(p))),
        sum_p(&|p| bm1(t.row_k[p])) + sum_pq(&hk, &z_of) + sum_q(&row(&hk, i), &z_of),
    );
    let id3 = (
        sum_p(&|p| z_of(m(p))) + sum_pq(&tk, &bm1) + sum_q(&row(&tk, i), &bm1),
        sum_pq(k, &bm1) + sum_q(&row(k, i), &bm1) + sum_p(&|p| z_of(kz(p))),
    );
    let id4 = (
        sum_p(&|p| t.row_z[p]) + sum_q(&row(k, i), &z_of) + sum_p(&|p| z_of(kz(p))),
        sum_p(&|p| z_of(t.row_k[p])) + sum_pq(&hk, &z_of) + sum_q(&row(&hk, i), &z_of),
    );
    [id1, id2, id3, id4]
}
