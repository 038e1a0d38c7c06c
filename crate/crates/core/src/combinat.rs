//! Index bookkeeping: `Z`, `bar`, derived double sequences, flip
//! permutations and padding.
//!
//! Positions are 0-based throughout.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactlin::{DenseMap, Field};

/// `Z(m)`: 1 when `m = 0`, else 0.
pub fn z_of(m: usize) -> usize {
    usize::from(m == 0)
}

/// `m + Z(m)`.
pub fn bar(m: usize) -> usize {
    m + z_of(m)
}

/// A finite sequence `(k_1, ..., k_n)` of non-negative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSeq(pub Vec<usize>);

impl IndexSeq {
    pub fn new(items: impl Into<Vec<usize>>) -> IndexSeq {
        IndexSeq(items.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn items(&self) -> &[usize] {
        &self.0
    }

    /// `sum k_i`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of zero entries.
    pub fn zeros(&self) -> usize {
        self.0.iter().map(|&k| z_of(k)).sum()
    }

    /// `(bar k_1, ..., bar k_n)`.
    pub fn barred(&self) -> IndexSeq {
        IndexSeq(self.0.iter().map(|&k| bar(k)).collect())
    }

    /// Every sequence with `sum bar(k_i) <= limit`, in lexicographic order.
    pub fn enumerate_up_to(limit: usize) -> Vec<IndexSeq> {
        fn go(prefix: &mut Vec<usize>, budget: usize, out: &mut Vec<IndexSeq>) {
            out.push(IndexSeq(prefix.clone()));
            for k in 0..=budget {
                if bar(k) <= budget {
                    prefix.push(k);
                    go(prefix, budget - bar(k), out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), limit, &mut out);
        out.sort();
        out
    }
}

impl From<Vec<usize>> for IndexSeq {
    fn from(v: Vec<usize>) -> IndexSeq {
        IndexSeq(v)
    }
}

/// A ragged double sequence `k_ij`; row `i` has length `m_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DoubleSeq(pub Vec<IndexSeq>);

impl DoubleSeq {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> DoubleSeq {
        DoubleSeq(rows.into_iter().map(IndexSeq).collect())
    }

    pub fn rows(&self) -> &[IndexSeq] {
        &self.0
    }

    /// `(m_1, ..., m_n)`.
    pub fn row_lengths(&self) -> IndexSeq {
        IndexSeq(self.0.iter().map(IndexSeq::len).collect())
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.0[i].0[j]
    }

    /// Row-wise concatenation.
    pub fn flatten(&self) -> IndexSeq {
        IndexSeq(self.0.iter().flat_map(|r| r.0.iter().copied()).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Totals {
    /// `K_i`.
    pub row_k: Vec<usize>,
    /// `Z_i`.
    pub row_z: Vec<usize>,
    pub k: usize,
    pub z: usize,
    /// Row lengths `(m_1, ..., m_n)`.
    pub m: IndexSeq,
    /// `Z + sum_i Z(m_i)`.
    pub tilde_z: usize,
}

pub fn totals(d: &DoubleSeq) -> Totals {
    let row_k: Vec<usize> = d.0.iter().map(IndexSeq::total).collect();
    let row_z: Vec<usize> = d.0.iter().map(IndexSeq::zeros).collect();
    let k = row_k.iter().sum();
    let z = row_z.iter().sum();
    let m = d.row_lengths();
    let tilde_z = z + m.zeros();
    Totals { row_k, row_z, k, z, m, tilde_z }
}

/// `tilde k`: a row is kept when `m_i > 0` and becomes `(0)` otherwise.
pub fn tilde_of(d: &DoubleSeq) -> DoubleSeq {
    DoubleSeq(
        d.0.iter()
            .map(|row| if row.is_empty() { IndexSeq(vec![0]) } else { row.clone() })
            .collect(),
    )
}

/// `hat k`: a row is kept when `K_i > 0`, becomes `(1, 0, ..., 0)` when
/// `K_i = 0 < m_i`, and `(1)` when `m_i = 0`.
pub fn hat_of(d: &DoubleSeq) -> DoubleSeq {
    DoubleSeq(
        d.0.iter()
            .map(|row| {
                if row.total() > 0 {
                    row.clone()
                } else if row.is_empty() {
                    IndexSeq(vec![1])
                } else {
                    let mut r = vec![0; row.len()];
                    r[0] = 1;
                    IndexSeq(r)
                }
            })
            .collect(),
    )
}

/// A bijection of `{0, ..., size-1}`; `images[i]` is where position `i` goes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || core::mem::replace(&mut seen[i], true) {
                return Err(Error::ShapeMismatch("not a bijection".into()));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(size: usize) -> Permutation {
        Permutation { images: (0..size).collect() }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self . other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.size() != other.size() {
            return Err(Error::LengthMismatch { expected: self.size(), found: other.size() });
        }
        Ok(Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Rearranges `items` so that `items[i]` lands at `images[i]`.
    pub fn apply<T: Clone>(&self, items: &[T]) -> Result<Vec<T>> {
        if items.len() != self.size() {
            return Err(Error::LengthMismatch { expected: self.size(), found: items.len() });
        }
        let mut out: Vec<Option<T>> = vec![None; items.len()];
        for (i, x) in items.iter().enumerate() {
            out[self.images[i]] = Some(x.clone());
        }
        Ok(out.into_iter().flatten().collect())
    }

    /// Block sum: `perms[0]` on the first positions, `perms[1]` on the next, ...
    pub fn concat(perms: &[Permutation]) -> Permutation {
        let mut images = Vec::new();
        let mut offset = 0;
        for p in perms {
            images.extend(p.images.iter().map(|&i| i + offset));
            offset += p.size();
        }
        Permutation { images }
    }

    /// The permutation moving contiguous blocks, block `i` of length
    /// `sizes[i]` travelling as position `i` does.
    pub fn lift(&self, sizes: &[usize]) -> Result<Permutation> {
        if sizes.len() != self.size() {
            return Err(Error::LengthMismatch { expected: self.size(), found: sizes.len() });
        }
        let mut out_sizes = vec![0; sizes.len()];
        for (i, &s) in sizes.iter().enumerate() {
            out_sizes[self.images[i]] = s;
        }
        let offsets = |v: &[usize]| {
            v.iter()
                .scan(0, |acc, &s| {
                    let o = *acc;
                    *acc += s;
                    Some(o)
                })
                .collect::<Vec<_>>()
        };
        let (in_off, out_off) = (offsets(sizes), offsets(&out_sizes));
        let mut images = vec![0; sizes.iter().sum()];
        for (i, &s) in sizes.iter().enumerate() {
            for t in 0..s {
                images[in_off[i] + t] = out_off[self.images[i]] + t;
            }
        }
        Ok(Permutation { images })
    }

    /// The 0/1 matrix permuting tensor factors; input factor `i` has
    /// dimension `slot_dims[i]`.
    pub fn to_dense_map(&self, field: Field, slot_dims: &[usize]) -> Result<DenseMap> {
        if slot_dims.len() != self.size() {
            return Err(Error::LengthMismatch { expected: self.size(), found: slot_dims.len() });
        }
        let out_dims = self.apply(slot_dims)?;
        let total: usize = slot_dims.iter().product();
        let mut out_stride = vec![1usize; out_dims.len()];
        for i in (0..out_dims.len().saturating_sub(1)).rev() {
            out_stride[i] = out_stride[i + 1] * out_dims[i + 1];
        }
        let mut images = Vec::with_capacity(total);
        for flat in 0..total {
            let mut rest = flat;
            let mut target = 0;
            for i in (0..slot_dims.len()).rev() {
                let digit = rest % slot_dims[i];
                rest /= slot_dims[i];
                target += digit * out_stride[self.images[i]];
            }
            images.push(target);
        }
        DenseMap::from_basis_images(field, total, &images)
    }
}

/// `tau_np`: `p` rows of length `n` become `n` rows of length `p`; input
/// position `i*n + j` goes to `j*p + i`.
pub fn flip_perm(n: usize, p: usize) -> Permutation {
    let mut images = vec![0; n * p];
    for i in 0..p {
        for j in 0..n {
            images[i * n + j] = j * p + i;
        }
    }
    Permutation { images }
}

/// `tau_np` as a matrix; `block_dims[i][j]` is the dimension of input slot
/// `(i, j)` (`p` rows of length `n`).
pub fn flip_map(n: usize, p: usize, field: Field, block_dims: &[Vec<usize>]) -> Result<DenseMap> {
    if block_dims.len() != p || block_dims.iter().any(|r| r.len() != n) {
        return Err(Error::ShapeMismatch("flip block dims must be p rows of n".into()));
    }
    let dims: Vec<usize> = block_dims.iter().flatten().copied().collect();
    flip_perm(n, p).to_dense_map(field, &dims)
}

/// The functor `[k]`: slot `i` contributes its `k_i` objects, or one copy of
/// `unit` when `k_i = 0`.
pub fn pad<T: Clone>(objects_per_slot: &[Vec<T>], k: &IndexSeq, unit: &T) -> Result<Vec<T>> {
    if objects_per_slot.len() != k.len() {
        return Err(Error::LengthMismatch { expected: k.len(), found: objects_per_slot.len() });
    }
    let mut out = Vec::new();
    for (objs, &ki) in objects_per_slot.iter().zip(k.items()) {
        if objs.len() != ki {
            return Err(Error::LengthMismatch { expected: ki, found: objs.len() });
        }
        if ki == 0 {
            out.push(unit.clone());
        } else {
            out.extend(objs.iter().cloned());
        }
    }
    Ok(out)
}

/// Cuts `flat` into consecutive groups of sizes `k_i`.
pub fn split<T: Clone>(flat: &[T], k: &IndexSeq) -> Result<Vec<Vec<T>>> {
    if flat.len() != k.total() {
        return Err(Error::LengthMismatch { expected: k.total(), found: flat.len() });
    }
    let mut out = Vec::with_capacity(k.len());
    let mut at = 0;
    for &ki in k.items() {
        out.push(flat[at..at + ki].to_vec());
        at += ki;
    }
    Ok(out)
}

/// `pad(split(flat, k), k, unit)`.
pub fn pad_flat<T: Clone>(flat: &[T], k: &IndexSeq, unit: &T) -> Result<Vec<T>> {
    pad(&split(flat, k)?, k, unit)
}
