use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use super::field::{Field, Scalar, Value};
use super::kernel::{self, Arith, Fp, Q};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Entries {
    Q(Vec<BigRational>),
    P(Vec<u64>),
}

/// A linear map `F^src -> F^dst` stored as a dense row-major
/// `dst x src` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DenseMap {
    field: Field,
    dst: usize,
    src: usize,
    entries: Entries,
}

impl DenseMap {
    pub fn zero(field: Field, dst: usize, src: usize) -> DenseMap {
        let entries = match field.modulus() {
            None => Entries::Q(alloc::vec![Q.zero(); dst * src]),
            Some(_) => Entries::P(alloc::vec![0; dst * src]),
        };
        DenseMap { field, dst, src, entries }
    }

    pub fn identity(field: Field, n: usize) -> DenseMap {
        let entries = match field.modulus() {
            None => Entries::Q(kernel::identity(&Q, n)),
            Some(p) => Entries::P(kernel::identity(&Fp(p), n)),
        };
        DenseMap { field, dst: n, src: n, entries }
    }

    /// Builds a map from row-major scalars.
    pub fn from_scalars(field: Field, dst: usize, src: usize, values: Vec<Scalar>) -> Result<DenseMap> {
        if values.len() != dst * src {
            return Err(Error::DimensionMismatch { expected: dst * src, found: values.len() });
        }
        if values.iter().any(|s| s.field != field) {
            return Err(Error::FieldMismatch);
        }
        let entries = match field.modulus() {
            None => Entries::Q(
                values
                    .into_iter()
                    .map(|s| match s.value {
                        Value::Q(q) => q,
                        Value::P(_) => unreachable!(),
                    })
                    .collect(),
            ),
            Some(_) => Entries::P(
                values
                    .into_iter()
                    .map(|s| match s.value {
                        Value::P(v) => v,
                        Value::Q(_) => unreachable!(),
                    })
                    .collect(),
            ),
        };
        Ok(DenseMap { field, dst, src, entries })
    }

    /// Builds a map from row-major integers, reduced into `field`.
    pub fn from_i64(field: Field, dst: usize, src: usize, values: &[i64]) -> Result<DenseMap> {
        DenseMap::from_scalars(field, dst, src, values.iter().map(|&v| field.from_i64(v)).collect())
    }

    pub fn from_fn(field: Field, dst: usize, src: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Result<DenseMap> {
        let mut values = Vec::with_capacity(dst * src);
        for r in 0..dst {
            for c in 0..src {
                values.push(f(r, c));
            }
        }
        DenseMap::from_scalars(field, dst, src, values)
    }

    /// Linearization of a map of basis vectors: column `c` is `e_{images[c]}`.
    pub fn from_basis_images(field: Field, dst: usize, images: &[usize]) -> Result<DenseMap> {
        let mut m = DenseMap::zero(field, dst, images.len());
        for (c, &r) in images.iter().enumerate() {
            if r >= dst {
                return Err(Error::DimensionMismatch { expected: dst, found: r + 1 });
            }
            m.set_one(r, c);
        }
        Ok(m)
    }

    pub fn diagonal(field: Field, diag: &[Scalar]) -> Result<DenseMap> {
        let n = diag.len();
        DenseMap::from_fn(field, n, n, |r, c| if r == c { diag[r].clone() } else { field.zero() })
    }

    fn set_one(&mut self, r: usize, c: usize) {
        let idx = r * self.src + c;
        match &mut self.entries {
            Entries::Q(v) => v[idx] = Q.one(),
            Entries::P(v) => v[idx] = 1,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dst_dim(&self) -> usize {
        self.dst
    }

    pub fn src_dim(&self) -> usize {
        self.src
    }

    pub fn is_square(&self) -> bool {
        self.dst == self.src
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        let idx = r * self.src + c;
        let value = match &self.entries {
            Entries::Q(v) => Value::Q(v[idx].clone()),
            Entries::P(v) => Value::P(v[idx]),
        };
        Scalar { field: self.field, value }
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        (0..self.src).map(|c| self.get(r, c)).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.dst).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.entries {
            Entries::Q(v) => v.iter().all(|x| Q.is_zero(x)),
            Entries::P(v) => v.iter().all(|&x| x == 0),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == DenseMap::identity(self.field, self.dst)
    }

    /// `self . g` (apply `g` first).
    pub fn compose(&self, g: &DenseMap) -> Result<DenseMap> {
        if self.field != g.field {
            return Err(Error::FieldMismatch);
        }
        if self.src != g.dst {
            return Err(Error::DimensionMismatch { expected: self.src, found: g.dst });
        }
        let entries = match (&self.entries, &g.entries) {
            (Entries::Q(a), Entries::Q(b)) => Entries::Q(kernel::compose(&Q, a, self.dst, self.src, b, g.src)),
            (Entries::P(a), Entries::P(b)) => {
                Entries::P(kernel::compose(&self.fp(), a, self.dst, self.src, b, g.src))
            }
            _ => return Err(Error::FieldMismatch),
        };
        Ok(DenseMap { field: self.field, dst: self.dst, src: g.src, entries })
    }

    /// Kronecker product; index of `f (x) g` is `i_f * dim_g + i_g`.
    pub fn kron(&self, g: &DenseMap) -> Result<DenseMap> {
        if self.field != g.field {
            return Err(Error::FieldMismatch);
        }
        let shapes = ((self.dst, self.src), (g.dst, g.src));
        let entries = match (&self.entries, &g.entries) {
            (Entries::Q(a), Entries::Q(b)) => Entries::Q(kernel::kron(&Q, a, shapes.0, b, shapes.1)),
            (Entries::P(a), Entries::P(b)) => Entries::P(kernel::kron(&self.fp(), a, shapes.0, b, shapes.1)),
            _ => return Err(Error::FieldMismatch),
        };
        Ok(DenseMap { field: self.field, dst: self.dst * g.dst, src: self.src * g.src, entries })
    }

    /// Kronecker product of a list; the empty product is the 1x1 identity.
    pub fn kron_all<'a>(field: Field, maps: impl IntoIterator<Item = &'a DenseMap>) -> Result<DenseMap> {
        maps.into_iter().try_fold(DenseMap::identity(field, 1), |acc, m| acc.kron(m))
    }

    /// `maps[0] . maps[1] . ... . maps[last]`.
    pub fn compose_all(maps: &[&DenseMap]) -> Result<DenseMap> {
        let (last, rest) = maps.split_last().ok_or(Error::ShapeMismatch("empty composite".into()))?;
        rest.iter().rev().try_fold((*last).clone(), |acc, m| m.compose(&acc))
    }

    pub fn add(&self, g: &DenseMap) -> Result<DenseMap> {
        if self.field != g.field {
            return Err(Error::FieldMismatch);
        }
        if (self.dst, self.src) != (g.dst, g.src) {
            return Err(Error::DimensionMismatch { expected: self.dst * self.src, found: g.dst * g.src });
        }
        let entries = match (&self.entries, &g.entries) {
            (Entries::Q(a), Entries::Q(b)) => Entries::Q(a.iter().zip(b).map(|(x, y)| x + y).collect()),
            (Entries::P(a), Entries::P(b)) => {
                let ar = self.fp();
                Entries::P(a.iter().zip(b).map(|(x, y)| ar.add(x, y)).collect())
            }
            _ => return Err(Error::FieldMismatch),
        };
        Ok(self.with_entries(entries))
    }

    pub fn scale(&self, s: &Scalar) -> Result<DenseMap> {
        if s.field != self.field {
            return Err(Error::FieldMismatch);
        }
        let entries = match (&self.entries, &s.value) {
            (Entries::Q(a), Value::Q(q)) => Entries::Q(a.iter().map(|x| x * q).collect()),
            (Entries::P(a), Value::P(v)) => {
                let ar = self.fp();
                Entries::P(a.iter().map(|x| ar.mul(x, v)).collect())
            }
            _ => return Err(Error::FieldMismatch),
        };
        Ok(self.with_entries(entries))
    }

    pub fn sub(&self, g: &DenseMap) -> Result<DenseMap> {
        self.add(&g.scale(&self.field.from_i64(-1))?)
    }

    pub fn transpose(&self) -> DenseMap {
        let (d, s) = (self.dst, self.src);
        let entries = match &self.entries {
            Entries::Q(a) => Entries::Q((0..d * s).map(|i| a[(i % d) * s + i / d].clone()).collect()),
            Entries::P(a) => Entries::P((0..d * s).map(|i| a[(i % d) * s + i / d]).collect()),
        };
        DenseMap { field: self.field, dst: s, src: d, entries }
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Result<DenseMap> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.dst, cols: self.src });
        }
        let mut acc = DenseMap::identity(self.field, self.dst);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base)?;
            }
        }
        Ok(acc)
    }

    /// Two-sided inverse by Gaussian elimination; `None` if singular.
    pub fn invert(&self) -> Result<Option<DenseMap>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.dst, cols: self.src });
        }
        let n = self.dst;
        let entries = match &self.entries {
            Entries::Q(a) => invert_generic(&Q, a, n).map(Entries::Q),
            Entries::P(a) => invert_generic(&self.fp(), a, n).map(Entries::P),
        };
        Ok(entries.map(|entries| self.with_entries(entries)))
    }

    pub fn commutes_with(&self, g: &DenseMap) -> Result<bool> {
        Ok(self.compose(g)? == g.compose(self)?)
    }

    /// First `(row, col)` where two equally shaped maps differ.
    pub fn first_difference(&self, g: &DenseMap) -> Option<(usize, usize)> {
        if (self.dst, self.src, self.field) != (g.dst, g.src, g.field) {
            return Some((0, 0));
        }
        (0..self.dst)
            .flat_map(|r| (0..self.src).map(move |c| (r, c)))
            .find(|&(r, c)| self.get(r, c) != g.get(r, c))
    }

    fn fp(&self) -> Fp {
        Fp(self.field.modulus().unwrap_or(1))
    }

    fn with_entries(&self, entries: Entries) -> DenseMap {
        DenseMap { field: self.field, dst: self.dst, src: self.src, entries }
    }
}

fn invert_generic<A: Arith>(ar: &A, a: &[A::E], n: usize) -> Option<Vec<A::E>> {
    let cols = 2 * n;
    let mut m = alloc::vec![ar.zero(); n * cols];
    for r in 0..n {
        for c in 0..n {
            m[r * cols + c] = a[r * n + c].clone();
        }
        m[r * cols + n + r] = ar.one();
    }
    if kernel::rref(ar, &mut m, n, cols, n).len() < n {
        return None;
    }
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        out.extend_from_slice(&m[r * cols + n..(r + 1) * cols]);
    }
    Some(out)
}

impl fmt::Display for DenseMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dst {
            f.write_str("[")?;
            for c in 0..self.src {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
