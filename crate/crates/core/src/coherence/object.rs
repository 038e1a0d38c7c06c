use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactlin::{DenseMap, Field};

/// Names the four structure endomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endo {
    Alpha,
    Beta,
    Kappa,
    Nu,
}

impl Endo {
    pub const ALL: [Endo; 4] = [Endo::Alpha, Endo::Beta, Endo::Kappa, Endo::Nu];

    pub fn name(self) -> &'static str {
        match self {
            Endo::Alpha => "alpha",
            Endo::Beta => "beta",
            Endo::Kappa => "kappa",
            Endo::Nu => "nu",
        }
    }
}

/// A carrier `F^dim` with commuting endomorphisms `alpha`, `beta` and
/// optionally `kappa`, `nu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiHomObject {
    dim: usize,
    field: Field,
    alpha: DenseMap,
    beta: DenseMap,
    kappa: Option<DenseMap>,
    nu: Option<DenseMap>,
}

impl BiHomObject {
    /// Object with two endomorphisms.
    pub fn new(alpha: DenseMap, beta: DenseMap) -> Result<BiHomObject> {
        BiHomObject::build(alpha, beta, None)
    }

    /// Object with all four endomorphisms.
    pub fn with_four(alpha: DenseMap, beta: DenseMap, kappa: DenseMap, nu: DenseMap) -> Result<BiHomObject> {
        BiHomObject::build(alpha, beta, Some((kappa, nu)))
    }

    /// Object whose endomorphisms are all the identity.
    pub fn trivial(field: Field, dim: usize) -> BiHomObject {
        let id = DenseMap::identity(field, dim);
        BiHomObject {
            dim,
            field,
            alpha: id.clone(),
            beta: id.clone(),
            kappa: Some(id.clone()),
            nu: Some(id),
        }
    }

    /// The monoidal unit: `F` with identity endomorphisms.
    pub fn unit(field: Field) -> BiHomObject {
        BiHomObject::trivial(field, 1)
    }

    fn build(alpha: DenseMap, beta: DenseMap, rest: Option<(DenseMap, DenseMap)>) -> Result<BiHomObject> {
        let field = alpha.field();
        let dim = alpha.dst_dim();
        let (kappa, nu) = match rest {
            Some((k, n)) => (Some(k), Some(n)),
            None => (None, None),
        };
        let obj = BiHomObject { dim, field, alpha, beta, kappa, nu };
        let present = obj.present();
        for (_, m) in &present {
            if m.field() != field {
                return Err(Error::FieldMismatch);
            }
            if !m.is_square() {
                return Err(Error::NotSquare { rows: m.dst_dim(), cols: m.src_dim() });
            }
            if m.dst_dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: m.dst_dim() });
            }
        }
        for (a, (na, ma)) in present.iter().enumerate() {
            for (nb, mb) in &present[a + 1..] {
                if !ma.commutes_with(mb)? {
                    return Err(Error::NonCommuting { left: na.name(), right: nb.name() });
                }
            }
        }
        Ok(obj)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn alpha(&self) -> &DenseMap {
        &self.alpha
    }

    pub fn beta(&self) -> &DenseMap {
        &self.beta
    }

    pub fn kappa(&self) -> Option<&DenseMap> {
        self.kappa.as_ref()
    }

    pub fn nu(&self) -> Option<&DenseMap> {
        self.nu.as_ref()
    }

    pub fn endo(&self, e: Endo) -> Option<&DenseMap> {
        match e {
            Endo::Alpha => Some(&self.alpha),
            Endo::Beta => Some(&self.beta),
            Endo::Kappa => self.kappa.as_ref(),
            Endo::Nu => self.nu.as_ref(),
        }
    }

    /// True when `kappa` and `nu` are present.
    pub fn has_four(&self) -> bool {
        self.kappa.is_some()
    }

    /// All present endomorphisms in the order alpha, beta, kappa, nu.
    pub fn present(&self) -> Vec<(Endo, &DenseMap)> {
        Endo::ALL.iter().filter_map(|&e| self.endo(e).map(|m| (e, m))).collect()
    }

    /// Pair acting on the monoid side: `(kappa, nu)` when present, else
    /// `(alpha, beta)`.
    pub fn monoid_pair(&self) -> ((Endo, &DenseMap), (Endo, &DenseMap)) {
        match (&self.kappa, &self.nu) {
            (Some(k), Some(n)) => ((Endo::Kappa, k), (Endo::Nu, n)),
            _ => ((Endo::Alpha, &self.alpha), (Endo::Beta, &self.beta)),
        }
    }

    /// Pair acting on the comonoid side: always `(alpha, beta)`.
    pub fn comonoid_pair(&self) -> ((Endo, &DenseMap), (Endo, &DenseMap)) {
        ((Endo::Alpha, &self.alpha), (Endo::Beta, &self.beta))
    }

    /// Same carrier with two endomorphisms only.
    pub fn forget_second_pair(&self) -> BiHomObject {
        BiHomObject { kappa: None, nu: None, ..self.clone() }
    }
}

/// The n-fold tensor product: carriers and each endomorphism are Kronecker
/// products. `kappa`/`nu` survive only if every factor carries them.
pub fn nprod(field: Field, objs: &[BiHomObject]) -> Result<BiHomObject> {
    if let [only] = objs {
        return if only.field == field { Ok(only.clone()) } else { Err(Error::FieldMismatch) };
    }
    if objs.iter().any(|o| o.field != field) {
        return Err(Error::FieldMismatch);
    }
    let kron = |f: &dyn Fn(&BiHomObject) -> &DenseMap| DenseMap::kron_all(field, objs.iter().map(f));
    let four = objs.iter().all(BiHomObject::has_four);
    let (kappa, nu) = if four {
        (
            Some(kron(&|o| o.kappa.as_ref().unwrap())?),
            Some(kron(&|o| o.nu.as_ref().unwrap())?),
        )
    } else {
        (None, None)
    };
    Ok(BiHomObject {
        dim: objs.iter().map(|o| o.dim).product(),
        field,
        alpha: kron(&|o| &o.alpha)?,
        beta: kron(&|o| &o.beta)?,
        kappa,
        nu,
    })
}
