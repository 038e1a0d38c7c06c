//! Builtin instance files shipped under `fixtures/`.

use bihom_core::coherence::BiHomObject;
use bihom_core::exactlin::{DenseMap, Field};
use bihom_core::fixtures::{c3_classical, c3_squared_plain, c3_twisted, cyclic_group_algebra, f7, idempotent_bialgebra, perturb};
use bihom_core::structures::StructureBundle;
use bihom_core::Result;

use crate::format::InstanceFile;

fn single(name: &str, b: &StructureBundle, regular: bool) -> InstanceFile {
    let mut file = InstanceFile::new(b.field());
    file.add_object("carrier", b.object());
    file.add_structure(name, "carrier", b);
    if regular {
        file.add_module("regular", "carrier", name, b.mu(), b.delta());
    }
    file
}

/// `Q[C_2]` written in the basis `1 + g, 1 - g`.
pub fn c2_sum_basis() -> Result<StructureBundle> {
    let q = Field::RATIONALS;
    let b = cyclic_group_algebra(q, 2)?;
    let half = q.parse("1/2")?;
    let p = DenseMap::from_i64(q, 2, 2, &[1, 1, 1, -1])?;
    let p_inv = p.scale(&half)?;
    let pp = p.kron(&p)?;
    let pp_inv = p_inv.kron(&p_inv)?;
    StructureBundle::new(
        BiHomObject::trivial(q, 2),
        Some(DenseMap::compose_all(&[&p_inv, b.mu().expect("present"), &pp])?),
        Some(p_inv.compose(b.eta().expect("present"))?),
        Some(DenseMap::compose_all(&[&pp_inv, b.delta().expect("present"), &p])?),
        Some(b.epsilon().expect("present").compose(&p)?),
    )
}

fn edited(file: &InstanceFile, pointer: &str, value: serde_json::Value) -> String {
    edited_text(&file.to_json(), pointer, value)
}

// Writes `value` at a JSON pointer, bypassing validation.
fn edited_text(text: &str, pointer: &str, value: serde_json::Value) -> String {
    let mut v: serde_json::Value = serde_json::from_str(text).expect("valid json");
    *v.pointer_mut(pointer).expect("pointer exists") = value;
    let mut out = serde_json::to_string_pretty(&v).expect("serializable");
    out.push('\n');
    out
}

/// Every builtin fixture as `(file stem, contents)`.
pub fn fixtures() -> Result<Vec<(&'static str, String)>> {
    let twisted = c3_twisted()?;
    let plain = c3_squared_plain()?;
    let bumped = perturb(twisted.mu().expect("present"), 0, 0, &f7().one())?;
    let perturbed = StructureBundle::new(
        twisted.object().clone(),
        Some(bumped),
        twisted.eta().cloned(),
        twisted.delta().cloned(),
        twisted.epsilon().cloned(),
    )?;
    let good = single("hopf", &twisted, true);
    let bad_fraction = edited(&good, "/structures/hopf/mu/0/0", "3/0".into());
    let bad_reference = edited(&good, "/structures/hopf/object", "missing".into());
    let noncommuting = {
        let base = single("bialgebra", &idempotent_bialgebra(f7())?, false);
        let v = edited(&base, "/objects/carrier/alpha/0/1", "1".into());
        edited_text(&v, "/objects/carrier/beta/1/0", "1".into())
    };
    Ok(vec![
        ("c3_twisted", good.to_json()),
        ("c3_classical", single("hopf", &c3_classical()?, true).to_json()),
        ("c3_plain", single("hopf", plain.bundle(), false).to_json()),
        ("c3_perturbed_mu", single("hopf", &perturbed, false).to_json()),
        ("idempotent", single("bialgebra", &idempotent_bialgebra(f7())?, false).to_json()),
        ("q_c2_sum_basis", single("hopf", &c2_sum_basis()?, true).to_json()),
        ("bad_fraction", bad_fraction),
        ("bad_reference", bad_reference),
        ("noncommuting", noncommuting),
    ])
}
