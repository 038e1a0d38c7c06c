use crate::coherence::BiHomObject;
use crate::error::{Error, Result};
use crate::exactlin::{DenseMap, Field};

/// A carrier with optional multiplication, unit, comultiplication and counit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureBundle {
    object: BiHomObject,
    mu: Option<DenseMap>,
    eta: Option<DenseMap>,
    delta: Option<DenseMap>,
    epsilon: Option<DenseMap>,
}

fn conform(m: &DenseMap, field: Field, dst: usize, src: usize) -> Result<()> {
    if m.field() != field {
        return Err(Error::FieldMismatch);
    }
    if m.dst_dim() != dst {
        return Err(Error::DimensionMismatch { expected: dst, found: m.dst_dim() });
    }
    if m.src_dim() != src {
        return Err(Error::DimensionMismatch { expected: src, found: m.src_dim() });
    }
    Ok(())
}

impl StructureBundle {
    pub fn new(
        object: BiHomObject,
        mu: Option<DenseMap>,
        eta: Option<DenseMap>,
        delta: Option<DenseMap>,
        epsilon: Option<DenseMap>,
    ) -> Result<StructureBundle> {
        let (f, d) = (object.field(), object.dim());
        let shapes = [(&mu, d, d * d), (&eta, d, 1), (&delta, d * d, d), (&epsilon, 1, d)];
        for (m, dst, src) in shapes {
            if let Some(m) = m {
                conform(m, f, dst, src)?;
            }
        }
        Ok(StructureBundle { object, mu, eta, delta, epsilon })
    }

    pub fn object(&self) -> &BiHomObject {
        &self.object
    }

    pub fn field(&self) -> Field {
        self.object.field()
    }

    pub fn dim(&self) -> usize {
        self.object.dim()
    }

    pub fn mu(&self) -> Option<&DenseMap> {
        self.mu.as_ref()
    }

    pub fn eta(&self) -> Option<&DenseMap> {
        self.eta.as_ref()
    }

    pub fn delta(&self) -> Option<&DenseMap> {
        self.delta.as_ref()
    }

    pub fn epsilon(&self) -> Option<&DenseMap> {
        self.epsilon.as_ref()
    }

    pub(crate) fn need_mu(&self) -> Result<&DenseMap> {
        self.mu.as_ref().ok_or(Error::MissingMap("mu"))
    }

    pub(crate) fn need_eta(&self) -> Result<&DenseMap> {
        self.eta.as_ref().ok_or(Error::MissingMap("eta"))
    }

    pub(crate) fn need_delta(&self) -> Result<&DenseMap> {
        self.delta.as_ref().ok_or(Error::MissingMap("delta"))
    }

    pub(crate) fn need_epsilon(&self) -> Result<&DenseMap> {
        self.epsilon.as_ref().ok_or(Error::MissingMap("epsilon"))
    }
}

/// A right action `x (x) a -> x` of a structure on `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleInst {
    pub carrier: BiHomObject,
    pub action: DenseMap,
    pub over: StructureBundle,
}

impl ModuleInst {
    pub fn new(carrier: BiHomObject, action: DenseMap, over: StructureBundle) -> Result<ModuleInst> {
        let (x, a) = (carrier.dim(), over.dim());
        if carrier.field() != over.field() {
            return Err(Error::FieldMismatch);
        }
        conform(&action, over.field(), x, x * a)?;
        Ok(ModuleInst { carrier, action, over })
    }

    /// `(a, mu)` over its own multiplication.
    pub fn regular(over: &StructureBundle) -> Result<ModuleInst> {
        ModuleInst::new(over.object().clone(), over.need_mu()?.clone(), over.clone())
    }
}

/// A right coaction `x -> x (x) a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleInst {
    pub carrier: BiHomObject,
    pub coaction: DenseMap,
    pub over: StructureBundle,
}

impl ComoduleInst {
    pub fn new(carrier: BiHomObject, coaction: DenseMap, over: StructureBundle) -> Result<ComoduleInst> {
        let (x, a) = (carrier.dim(), over.dim());
        if carrier.field() != over.field() {
            return Err(Error::FieldMismatch);
        }
        conform(&coaction, over.field(), x * a, x)?;
        Ok(ComoduleInst { carrier, coaction, over })
    }

    /// `(a, delta)` over its own comultiplication.
    pub fn regular(over: &StructureBundle) -> Result<ComoduleInst> {
        ComoduleInst::new(over.object().clone(), over.need_delta()?.clone(), over.clone())
    }
}

/// An object that is both a module and a comodule over one structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfModuleInst {
    pub carrier: BiHomObject,
    pub action: DenseMap,
    pub coaction: DenseMap,
    pub over: StructureBundle,
}

impl HopfModuleInst {
    pub fn new(carrier: BiHomObject, action: DenseMap, coaction: DenseMap, over: StructureBundle) -> Result<HopfModuleInst> {
        let m = ModuleInst::new(carrier, action, over)?;
        let c = ComoduleInst::new(m.carrier.clone(), coaction, m.over.clone())?;
        Ok(HopfModuleInst { carrier: m.carrier, action: m.action, coaction: c.coaction, over: m.over })
    }

    /// `(a, mu, delta)`.
    pub fn regular(over: &StructureBundle) -> Result<HopfModuleInst> {
        HopfModuleInst::new(over.object().clone(), over.need_mu()?.clone(), over.need_delta()?.clone(), over.clone())
    }

    pub fn module(&self) -> ModuleInst {
        ModuleInst { carrier: self.carrier.clone(), action: self.action.clone(), over: self.over.clone() }
    }

    pub fn comodule(&self) -> ComoduleInst {
        ComoduleInst { carrier: self.carrier.clone(), coaction: self.coaction.clone(), over: self.over.clone() }
    }
}
