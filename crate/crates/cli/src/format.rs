//! The JSON instance file and its validated in-memory form.

use std::collections::BTreeMap;

use bihom_core::coherence::BiHomObject;
use bihom_core::exactlin::{DenseMap, Field};
use bihom_core::structures::{ComoduleInst, HopfModuleInst, ModuleInst, StructureBundle};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const FORMAT_VERSION: &str = "1";

/// Row-major matrix of scalar strings.
pub type MatrixRows = Vec<Vec<String>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Rational,
    Prime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldEntry {
    pub kind: FieldKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectEntry {
    pub alpha: MatrixRows,
    pub beta: MatrixRows,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<MatrixRows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<MatrixRows>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<MatrixRows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<MatrixRows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<MatrixRows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<MatrixRows>,
    pub object: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<MatrixRows>,
    pub carrier: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<MatrixRows>,
    pub over: String,
}

/// On-disk form. Keys are emitted in sorted order and scalars in lowest
/// terms, so equal instances serialize to equal bytes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field: FieldEntry,
    pub format_version: String,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleEntry>,
    #[serde(default)]
    pub objects: BTreeMap<String, ObjectEntry>,
    #[serde(default)]
    pub structures: BTreeMap<String, StructureEntry>,
}

/// A module entry, by which of action and coaction it carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleData {
    Module(ModuleInst),
    Comodule(ComoduleInst),
    Hopf(HopfModuleInst),
}

/// Resolved and validated contents of an instance file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub field: Field,
    pub objects: BTreeMap<String, BiHomObject>,
    pub structures: BTreeMap<String, StructureBundle>,
    pub modules: BTreeMap<String, ModuleData>,
}

fn invalid(context: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(format!("{context}: {e}"))
}

pub fn matrix_to_rows(m: &DenseMap) -> MatrixRows {
    (0..m.dst_dim()).map(|r| m.row(r).iter().map(|s| s.to_canonical()).collect()).collect()
}

fn parse_matrix(field: Field, rows: &MatrixRows, dst: usize, src: usize, context: &str) -> CliResult<DenseMap> {
    if rows.len() != dst {
        return Err(invalid(context, format!("expected {dst} rows, found {}", rows.len())));
    }
    let mut values = Vec::with_capacity(dst * src);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != src {
            return Err(invalid(context, format!("row {r} has {} entries, expected {src}", row.len())));
        }
        for text in row {
            values.push(field.parse(text).map_err(|e| invalid(context, e))?);
        }
    }
    DenseMap::from_scalars(field, dst, src, values).map_err(|e| invalid(context, e))
}

impl FieldEntry {
    pub fn of(field: Field) -> FieldEntry {
        match field.modulus() {
            None => FieldEntry { kind: FieldKind::Rational, modulus: None },
            Some(p) => FieldEntry { kind: FieldKind::Prime, modulus: Some(p) },
        }
    }

    pub fn resolve(&self) -> CliResult<Field> {
        match (self.kind, self.modulus) {
            (FieldKind::Rational, None) => Ok(Field::RATIONALS),
            (FieldKind::Rational, Some(_)) => Err(CliError::Invalid("rational field takes no modulus".into())),
            (FieldKind::Prime, Some(p)) => Field::prime(p).map_err(|e| invalid("field", e)),
            (FieldKind::Prime, None) => Err(CliError::Invalid("prime field needs a modulus".into())),
        }
    }
}

impl ObjectEntry {
    pub fn of(o: &BiHomObject) -> ObjectEntry {
        ObjectEntry {
            alpha: matrix_to_rows(o.alpha()),
            beta: matrix_to_rows(o.beta()),
            dim: o.dim(),
            kappa: o.kappa().map(matrix_to_rows),
            nu: o.nu().map(matrix_to_rows),
        }
    }

    fn resolve(&self, field: Field, name: &str) -> CliResult<BiHomObject> {
        let d = self.dim;
        if d == 0 {
            return Err(invalid(&format!("object {name}"), "dimension must be positive"));
        }
        let m = |rows: &MatrixRows, which: &str| parse_matrix(field, rows, d, d, &format!("object {name}.{which}"));
        let (alpha, beta) = (m(&self.alpha, "alpha")?, m(&self.beta, "beta")?);
        let obj = match (&self.kappa, &self.nu) {
            (None, None) => BiHomObject::new(alpha, beta),
            (Some(k), Some(n)) => BiHomObject::with_four(alpha, beta, m(k, "kappa")?, m(n, "nu")?),
            _ => return Err(invalid(&format!("object {name}"), "kappa and nu must be given together")),
        };
        obj.map_err(|e| invalid(&format!("object {name}"), e))
    }
}

impl StructureEntry {
    pub fn of(object: &str, b: &StructureBundle) -> StructureEntry {
        StructureEntry {
            delta: b.delta().map(matrix_to_rows),
            epsilon: b.epsilon().map(matrix_to_rows),
            eta: b.eta().map(matrix_to_rows),
            mu: b.mu().map(matrix_to_rows),
            object: object.to_string(),
        }
    }

    fn resolve(&self, field: Field, objects: &BTreeMap<String, BiHomObject>, name: &str) -> CliResult<StructureBundle> {
        let obj = objects
            .get(&self.object)
            .ok_or_else(|| invalid(&format!("structure {name}"), format!("unknown object `{}`", self.object)))?;
        let d = obj.dim();
        let m = |rows: &Option<MatrixRows>, which: &str, dst: usize, src: usize| {
            rows.as_ref()
                .map(|s| parse_matrix(field, s, dst, src, &format!("structure {name}.{which}")))
                .transpose()
        };
        StructureBundle::new(
            obj.clone(),
            m(&self.mu, "mu", d, d * d)?,
            m(&self.eta, "eta", d, 1)?,
            m(&self.delta, "delta", d * d, d)?,
            m(&self.epsilon, "epsilon", 1, d)?,
        )
        .map_err(|e| invalid(&format!("structure {name}"), e))
    }
}

impl ModuleEntry {
    fn resolve(
        &self,
        field: Field,
        objects: &BTreeMap<String, BiHomObject>,
        structures: &BTreeMap<String, StructureBundle>,
        name: &str,
    ) -> CliResult<ModuleData> {
        let ctx = format!("module {name}");
        let x = objects.get(&self.carrier).ok_or_else(|| invalid(&ctx, format!("unknown object `{}`", self.carrier)))?;
        let b = structures.get(&self.over).ok_or_else(|| invalid(&ctx, format!("unknown structure `{}`", self.over)))?;
        let (dx, da) = (x.dim(), b.dim());
        let act = self.action.as_ref().map(|s| parse_matrix(field, s, dx, dx * da, &format!("{ctx}.action"))).transpose()?;
        let coact =
            self.coaction.as_ref().map(|s| parse_matrix(field, s, dx * da, dx, &format!("{ctx}.coaction"))).transpose()?;
        let (x, b) = (x.clone(), b.clone());
        let data = match (act, coact) {
            (Some(a), None) => ModuleInst::new(x, a, b).map(ModuleData::Module),
            (None, Some(c)) => ComoduleInst::new(x, c, b).map(ModuleData::Comodule),
            (Some(a), Some(c)) => HopfModuleInst::new(x, a, c, b).map(ModuleData::Hopf),
            (None, None) => return Err(invalid(&ctx, "needs an action or a coaction")),
        };
        data.map_err(|e| invalid(&ctx, e))
    }
}

impl InstanceFile {
    pub fn new(field: Field) -> InstanceFile {
        InstanceFile {
            field: FieldEntry::of(field),
            format_version: FORMAT_VERSION.to_string(),
            modules: BTreeMap::new(),
            objects: BTreeMap::new(),
            structures: BTreeMap::new(),
        }
    }

    pub fn from_json(text: &str) -> CliResult<InstanceFile> {
        Ok(serde_json::from_str(text)?)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance files always serialize");
        s.push('\n');
        s
    }

    pub fn resolve(&self) -> CliResult<Instance> {
        if self.format_version != FORMAT_VERSION {
            return Err(CliError::Invalid(format!("unsupported format_version `{}`", self.format_version)));
        }
        let field = self.field.resolve()?;
        let objects = self
            .objects
            .iter()
            .map(|(n, o)| Ok((n.clone(), o.resolve(field, n)?)))
            .collect::<CliResult<BTreeMap<_, _>>>()?;
        let structures = self
            .structures
            .iter()
            .map(|(n, s)| Ok((n.clone(), s.resolve(field, &objects, n)?)))
            .collect::<CliResult<BTreeMap<_, _>>>()?;
        let modules = self
            .modules
            .iter()
            .map(|(n, m)| Ok((n.clone(), m.resolve(field, &objects, &structures, n)?)))
            .collect::<CliResult<BTreeMap<_, _>>>()?;
        Ok(Instance { field, objects, structures, modules })
    }

    /// The same instance with every scalar in canonical form.
    pub fn canonical(&self) -> CliResult<InstanceFile> {
        let inst = self.resolve()?;
        let mut out = InstanceFile::new(inst.field);
        for (n, o) in &inst.objects {
            out.objects.insert(n.clone(), ObjectEntry::of(o));
        }
        for (n, b) in &inst.structures {
            out.structures.insert(n.clone(), StructureEntry::of(&self.structures[n].object, b));
        }
        for (n, m) in &inst.modules {
            let entry = &self.modules[n];
            let (action, coaction) = match m {
                ModuleData::Module(m) => (Some(&m.action), None),
                ModuleData::Comodule(c) => (None, Some(&c.coaction)),
                ModuleData::Hopf(h) => (Some(&h.action), Some(&h.coaction)),
            };
            out.modules.insert(
                n.clone(),
                ModuleEntry {
                    action: action.map(matrix_to_rows),
                    carrier: entry.carrier.clone(),
                    coaction: coaction.map(matrix_to_rows),
                    over: entry.over.clone(),
                },
            );
        }
        Ok(out)
    }

    pub fn add_object(&mut self, name: &str, o: &BiHomObject) {
        self.objects.insert(name.to_string(), ObjectEntry::of(o));
    }

    pub fn add_structure(&mut self, name: &str, object: &str, b: &StructureBundle) {
        self.structures.insert(name.to_string(), StructureEntry::of(object, b));
    }

    pub fn add_module(&mut self, name: &str, carrier: &str, over: &str, action: Option<&DenseMap>, coaction: Option<&DenseMap>) {
        self.modules.insert(
            name.to_string(),
            ModuleEntry {
                action: action.map(matrix_to_rows),
                carrier: carrier.to_string(),
                coaction: coaction.map(matrix_to_rows),
                over: over.to_string(),
            },
        );
    }

    /// Replaces the maps of structure `name`, keeping its object.
    pub fn replace_structure(&mut self, name: &str, b: &StructureBundle) -> CliResult<()> {
        let rows = self
            .structures
            .get_mut(name)
            .ok_or_else(|| CliError::UnknownName { kind: "structure", name: name.to_string() })?;
        *rows = StructureEntry::of(&rows.object.clone(), b);
        Ok(())
    }
}

/// Parses, validates and canonicalizes an instance file.
pub fn load(text: &str) -> CliResult<(InstanceFile, Instance)> {
    let file = InstanceFile::from_json(text)?.canonical()?;
    let inst = file.resolve()?;
    Ok((file, inst))
}
