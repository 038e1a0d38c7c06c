//! Instance-level checks of the axiom diagrams of the concrete lax, oplax
//! and duoidal structures.
//!
//! Each diagram is a [`Script`]: a table of labelled edges between named
//! nodes and a list of regions, each region a pair of edge paths with common
//! ends. Scripts are plain data; [`run_script`] checks path consistency,
//! builds each edge once and compares the two composites exactly.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::maps::{coherence_map, xi_map, Coherence};
use super::object::{nprod, BiHomObject};
use crate::combinat::{hat_of, pad, pad_flat, split, tilde_of, totals, DoubleSeq, IndexSeq};
use crate::error::{Error, Result};
use crate::exactlin::{DenseMap, Field};

#[derive(Clone, Copy, Debug)]
pub struct Edge {
    pub label: &'static str,
    pub from: &'static str,
    pub to: &'static str,
}

/// Two paths with common source and target; edges listed in the order they
/// are traversed.
#[derive(Clone, Copy, Debug)]
pub struct Region {
    pub name: &'static str,
    pub left: &'static [&'static str],
    pub right: &'static [&'static str],
}

#[derive(Clone, Copy, Debug)]
pub struct Script {
    pub edges: &'static [Edge],
    pub regions: &'static [Region],
}

const fn e(label: &'static str, from: &'static str, to: &'static str) -> Edge {
    Edge { label, from, to }
}

const fn r(name: &'static str, left: &'static [&'static str], right: &'static [&'static str]) -> Region {
    Region { name, left, right }
}

/// The lax-monoidal axiom diagram. Node names: `TL` = n(m_i)(k_ij),
/// `TM` = (M+Z(m))[m](k_ij), `TR` = M(k_ij), `MID` = (K+tildeZ)[tilde k],
/// `LL` = n(K_i+Z_i)[k], `LR` = (K+Z)[k], `BL` = n(K_i), `BM` = (K+Z(K_i))[K_i],
/// `BR` = K; `FLAT` and `UNIT` carry the normality triangles.
pub static LAX_SCRIPT: Script = Script {
    edges: &[
        e("Phi_m.1", "TL", "TM"),
        e("phi_m.1", "TR", "TM"),
        e("Phi_tilde", "TM", "MID"),
        e("1.Phi_rows", "TL", "LL"),
        e("1.phi_rows", "BL", "LL"),
        e("Phi_KZ.1", "LL", "MID"),
        e("phi_KZ.1", "LR", "MID"),
        e("Phi_k", "TR", "LR"),
        e("phi_k", "BR", "LR"),
        e("Phi_K", "BL", "BM"),
        e("phi_K", "BR", "BM"),
        e("phi_hat.1", "BM", "MID"),
        e("iota.1", "FLAT", "FLAT1"),
        e("Phi_n", "FLAT1", "FLAT"),
        e("1.iota^n", "FLAT", "FLATN"),
        e("Phi_1..1", "FLATN", "FLAT"),
        e("id", "FLAT", "FLAT"),
        e("phi_0", "UNIT", "UNIT1"),
        e("iota.1@unit", "UNIT", "UNIT1"),
    ],
    regions: &[
        r("top left", &["Phi_m.1", "Phi_tilde"], &["1.Phi_rows", "Phi_KZ.1"]),
        r("top right", &["phi_m.1", "Phi_tilde"], &["Phi_k", "phi_KZ.1"]),
        r("bottom left", &["1.phi_rows", "Phi_KZ.1"], &["Phi_K", "phi_hat.1"]),
        r("bottom right", &["phi_k", "phi_KZ.1"], &["phi_K", "phi_hat.1"]),
        r("unit triangle Phi_n", &["iota.1", "Phi_n"], &["id"]),
        r("unit triangle Phi_1..1", &["1.iota^n", "Phi_1..1"], &["id"]),
        r("phi_0 = iota.1", &["phi_0"], &["iota.1@unit"]),
    ],
};

/// The duoidal axiom diagrams: upper square pair (`U*` nodes), lower square
/// pair (`L*` nodes) and the two normality triangles.
pub static DUOIDAL_SCRIPT: Script = Script {
    edges: &[
        e("1.Phi_k^n.1", "UTL", "UTM"),
        e("1.phi_k^n.1", "UTR", "UTM"),
        e("xi^p_n.1.1", "UTL", "UX"),
        e("1.xi^k_n", "UX", "UBL"),
        e("Phi_k.1", "UBL", "UBM"),
        e("phi_k.1", "UBR", "UBM"),
        e("xi^K_n", "UTR", "UBR"),
        e("xi^(K+Z)_n.1", "UTM", "UY"),
        e("1.[[k]]", "UY", "UBM"),
        e("1.Psi_k^n", "LTM", "LTL"),
        e("1.psi_k^n", "LTM", "LTR"),
        e("xi^n_p.1", "LX", "LTL"),
        e("1.xi^n_k.1", "LBL", "LX"),
        e("Psi_k.1.1", "LBM", "LBL"),
        e("psi_k.1.1", "LBM", "LBR"),
        e("xi^n_K", "LBR", "LTR"),
        e("1.[[k]].1", "LBM", "LY"),
        e("xi^n_(K+Z).1", "LY", "LTM"),
        e("xi^n_1", "T1", "T1B"),
        e("1.upsilon^n", "T1B", "T1C"),
        e("upsilon.1", "T1", "T1C"),
        e("1.iota^n", "T2", "T2B"),
        e("xi^1_n", "T2B", "T2C"),
        e("iota.1", "T2", "T2C"),
    ],
    regions: &[
        r("upper left", &["1.Phi_k^n.1", "xi^(K+Z)_n.1", "1.[[k]]"], &["xi^p_n.1.1", "1.xi^k_n", "Phi_k.1"]),
        r("upper right", &["1.phi_k^n.1", "xi^(K+Z)_n.1", "1.[[k]]"], &["xi^K_n", "phi_k.1"]),
        r("lower left", &["Psi_k.1.1", "1.xi^n_k.1", "xi^n_p.1"], &["1.[[k]].1", "xi^n_(K+Z).1", "1.Psi_k^n"]),
        r("lower right", &["psi_k.1.1", "xi^n_K"], &["1.[[k]].1", "xi^n_(K+Z).1", "1.psi_k^n"]),
        r("triangle upsilon", &["xi^n_1", "1.upsilon^n"], &["upsilon.1"]),
        r("triangle iota", &["1.iota^n", "xi^1_n"], &["iota.1"]),
    ],
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FigureLevel {
    /// Lax structure with `Phi`, `phi` acting by `alpha`, `beta`.
    Lax,
    /// The same diagram with arrows reversed, `Psi`, `psi` acting by
    /// `kappa`, `nu`.
    Oplax,
    /// The duoidal squares and triangles.
    Duoidal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionResult {
    pub name: String,
    pub passed: bool,
    /// First differing `(row, col)` when the paths disagree.
    pub counterexample: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureReport {
    pub level: FigureLevel,
    pub regions: Vec<RegionResult>,
}

impl FigureReport {
    pub fn passed(&self) -> bool {
        self.regions.iter().all(|r| r.passed)
    }
}

/// Evaluates every region of `script`. With `reversed` every arrow points the
/// other way, so paths are composed in listed order instead of reverse.
pub fn run_script(
    script: &Script,
    reversed: bool,
    mut build: impl FnMut(&str) -> Result<DenseMap>,
) -> Result<Vec<RegionResult>> {
    let edges: BTreeMap<&str, &Edge> = script.edges.iter().map(|e| (e.label, e)).collect();
    let mut cache: BTreeMap<&str, DenseMap> = BTreeMap::new();
    let mut out = Vec::new();
    for region in script.regions {
        let left = path(&edges, region.left, reversed)?;
        let right = path(&edges, region.right, reversed)?;
        if left != right {
            return Err(Error::ShapeMismatch(alloc::format!("region {} has mismatched ends", region.name)));
        }
        let mut compose = |labels: &[&'static str]| -> Result<DenseMap> {
            let mut acc: Option<DenseMap> = None;
            for &l in labels {
                if !cache.contains_key(l) {
                    cache.insert(l, build(l)?);
                }
                let m = &cache[l];
                acc = Some(match acc {
                    None => m.clone(),
                    Some(a) if reversed => a.compose(m)?,
                    Some(a) => m.compose(&a)?,
                });
            }
            acc.ok_or(Error::ShapeMismatch("empty path".into()))
        };
        let (lm, rm) = (compose(region.left)?, compose(region.right)?);
        let counterexample = lm.first_difference(&rm);
        out.push(RegionResult { name: region.name.to_string(), passed: counterexample.is_none(), counterexample });
    }
    Ok(out)
}

fn path(edges: &BTreeMap<&str, &Edge>, labels: &[&str], reversed: bool) -> Result<(&'static str, &'static str)> {
    let mut ends: Option<(&'static str, &'static str)> = None;
    let ordered: Vec<&str> = if reversed { labels.iter().rev().copied().collect() } else { labels.to_vec() };
    for l in ordered {
        let edge = edges.get(l).ok_or_else(|| Error::ShapeMismatch(alloc::format!("unknown edge {l}")))?;
        let (from, to) = if reversed { (edge.to, edge.from) } else { (edge.from, edge.to) };
        ends = match ends {
            None => Some((from, to)),
            Some((s, t)) if t == from => Some((s, to)),
            Some(_) => return Err(Error::ShapeMismatch(alloc::format!("edge {l} does not continue its path"))),
        };
    }
    ends.ok_or(Error::ShapeMismatch("empty path".into()))
}

/// Objects `a_ijl` indexed by a double sequence `k_ij`.
#[derive(Clone, Debug)]
pub struct LaxInstance {
    pub field: Field,
    pub objects: Vec<Vec<Vec<BiHomObject>>>,
}

impl LaxInstance {
    pub fn shape(&self) -> DoubleSeq {
        DoubleSeq::from_rows(self.objects.iter().map(|row| row.iter().map(Vec::len).collect()).collect())
    }
}

/// Objects `a_rs` for `r < K = sum k_i` (rows grouped by `k`) and `s < n`.
#[derive(Clone, Debug)]
pub struct DuoidalInstance {
    pub field: Field,
    pub n: usize,
    pub k: IndexSeq,
    pub grid: Vec<Vec<BiHomObject>>,
}

pub fn check_lax_figure(level: FigureLevel, inst: &LaxInstance) -> Result<FigureReport> {
    let (big, small, reversed) = match level {
        FigureLevel::Lax => (Coherence::BigPhi, Coherence::SmallPhi, false),
        FigureLevel::Oplax => (Coherence::BigPsi, Coherence::SmallPsi, true),
        FigureLevel::Duoidal => return Err(Error::ShapeMismatch("duoidal level needs a duoidal instance".into())),
    };
    let f = inst.field;
    let a = &inst.objects;
    let k = inst.shape();
    let t = totals(&k);
    let (tk, hk) = (tilde_of(&k), hat_of(&k));
    let unit = BiHomObject::unit(f);
    let flat: Vec<BiHomObject> = a.iter().flatten().flatten().cloned().collect();
    let row_flat = |i: usize| a[i].iter().flatten().cloned().collect::<Vec<_>>();
    let singletons = |v: Vec<BiHomObject>| v.into_iter().map(|o| vec![o]).collect::<Vec<_>>();
    let kz = IndexSeq(t.row_k.iter().zip(&t.row_z).map(|(x, z)| x + z).collect());
    let big_k = IndexSeq(t.row_k.clone());

    let build = |label: &str| -> Result<DenseMap> {
        match label {
            "Phi_m.1" | "phi_m.1" => {
                let groups = a.iter().map(|row| row.iter().map(|c| nprod(f, c)).collect()).collect::<Result<Vec<Vec<_>>>>()?;
                coherence_map(&t.m, if label == "Phi_m.1" { big } else { small }, f, &groups)
            }
            "Phi_tilde" => {
                let groups: Vec<Vec<BiHomObject>> = a
                    .iter()
                    .flat_map(|row| if row.is_empty() { vec![Vec::new()] } else { row.clone() })
                    .collect();
                coherence_map(&tk.flatten(), big, f, &groups)
            }
            "1.Phi_rows" | "1.phi_rows" => {
                let which = if label == "1.Phi_rows" { big } else { small };
                let parts = (0..a.len()).map(|i| coherence_map(&k.rows()[i], which, f, &a[i])).collect::<Result<Vec<_>>>()?;
                DenseMap::kron_all(f, &parts)
            }
            "Phi_KZ.1" | "phi_KZ.1" => {
                let groups = (0..a.len()).map(|i| pad(&a[i], &k.rows()[i], &unit)).collect::<Result<Vec<_>>>()?;
                coherence_map(&kz, if label == "Phi_KZ.1" { big } else { small }, f, &groups)
            }
            "Phi_k" | "phi_k" => {
                let groups: Vec<Vec<BiHomObject>> = a.iter().flatten().cloned().collect();
                coherence_map(&k.flatten(), if label == "Phi_k" { big } else { small }, f, &groups)
            }
            "Phi_K" | "phi_K" => {
                let groups: Vec<Vec<BiHomObject>> = (0..a.len()).map(row_flat).collect();
                coherence_map(&big_k, if label == "Phi_K" { big } else { small }, f, &groups)
            }
            "phi_hat.1" => {
                let mut groups = Vec::new();
                for i in 0..a.len() {
                    let padded = pad_flat(&row_flat(i), &IndexSeq(vec![t.row_k[i]]), &unit)?;
                    groups.extend(split(&padded, &hk.rows()[i])?);
                }
                coherence_map(&hk.flatten(), small, f, &groups)
            }
            "Phi_n" => coherence_map(&IndexSeq(vec![flat.len()]), big, f, core::slice::from_ref(&flat)),
            "Phi_1..1" => coherence_map(&IndexSeq(vec![1; flat.len()]), big, f, &singletons(flat.clone())),
            "iota.1" | "1.iota^n" | "id" => Ok(DenseMap::identity(f, flat.iter().map(BiHomObject::dim).product())),
            "phi_0" => coherence_map(&IndexSeq(vec![0]), small, f, &[Vec::new()]),
            "iota.1@unit" => Ok(DenseMap::identity(f, 1)),
            other => Err(Error::ShapeMismatch(alloc::format!("no builder for {other}"))),
        }
    };
    let mut regions = run_script(&LAX_SCRIPT, reversed, build)?;
    regions.extend(padding_equalities(inst, &k, &unit)?);
    Ok(FigureReport { level, regions })
}

// The object-level equalities along the middle column: [m] after (k_ij)
// against tilde k, and the two padding lemmas.
fn padding_equalities(inst: &LaxInstance, k: &DoubleSeq, unit: &BiHomObject) -> Result<Vec<RegionResult>> {
    let f = inst.field;
    let a = &inst.objects;
    let t = totals(k);
    let (tk, hk) = (tilde_of(k), hat_of(k));
    let products = a.iter().map(|row| row.iter().map(|c| nprod(f, c)).collect()).collect::<Result<Vec<Vec<_>>>>()?;
    let tm = pad(&products, &t.m, unit)?;
    let tm_tilde = a
        .iter()
        .flat_map(|row| if row.is_empty() { vec![Vec::new()] } else { row.clone() })
        .map(|c| nprod(f, &c))
        .collect::<Result<Vec<_>>>()?;
    let tilde_groups: Vec<Vec<BiHomObject>> =
        a.iter().flat_map(|row| if row.is_empty() { vec![Vec::new()] } else { row.clone() }).collect();
    let mid = pad(&tilde_groups, &tk.flatten(), unit)?;
    let mut via_kz = Vec::new();
    let mut via_hat = Vec::new();
    for (i, row) in a.iter().enumerate() {
        let once = pad(row, &k.rows()[i], unit)?;
        via_kz.extend(pad_flat(&once, &IndexSeq(vec![once.len()]), unit)?);
        let flat_row: Vec<BiHomObject> = row.iter().flatten().cloned().collect();
        let padded = pad_flat(&flat_row, &IndexSeq(vec![t.row_k[i]]), unit)?;
        via_hat.extend(pad_flat(&padded, &hk.rows()[i], unit)?);
    }
    let eq = |name: &str, ok: bool| RegionResult { name: name.to_string(), passed: ok, counterexample: None };
    Ok(vec![
        eq("[m] after (k) equals (tilde k)", tm == tm_tilde),
        eq("padding lemma via [K_i+Z_i]", mid == via_kz),
        eq("padding lemma via [hat k]", mid == via_hat),
    ])
}

pub fn check_duoidal_figure(inst: &DuoidalInstance) -> Result<FigureReport> {
    let f = inst.field;
    let n = inst.n;
    let ks = &inst.k;
    let p = ks.len();
    let big_k = ks.total();
    if inst.grid.len() != big_k || inst.grid.iter().any(|row| row.len() != n) {
        return Err(Error::ShapeMismatch(alloc::format!("grid must be {big_k} rows of {n}")));
    }
    let unit = BiHomObject::unit(f);
    let blocks: Vec<Vec<Vec<BiHomObject>>> = split(&inst.grid, ks)?;
    // a[r][s] read by column: block i as k_i x n.
    let column = |s: usize, i: usize| blocks[i].iter().map(|row| row[s].clone()).collect::<Vec<_>>();
    let transpose = |g: &[Vec<BiHomObject>]| -> Vec<Vec<BiHomObject>> {
        let cols = g.first().map_or(n, Vec::len);
        (0..cols).map(|j| g.iter().map(|row| row[j].clone()).collect()).collect()
    };
    let padded_rows = || pad(&blocks, ks, &vec![unit.clone(); n]);
    let row_products = || inst.grid.iter().map(|row| nprod(f, row)).collect::<Result<Vec<_>>>();
    let col_products = || (0..n).map(|s| nprod(f, &inst.grid.iter().map(|row| row[s].clone()).collect::<Vec<_>>())).collect::<Result<Vec<_>>>();
    let total_dim: usize = inst.grid.iter().flatten().map(BiHomObject::dim).product();
    let brackets = |lower: bool| -> Result<DenseMap> {
        let mut parts = Vec::new();
        for (i, &ki) in ks.items().iter().enumerate() {
            if ki > 0 {
                parts.push(DenseMap::identity(f, blocks[i].iter().flatten().map(BiHomObject::dim).product()));
            } else if lower {
                parts.push(xi_map(0, n, f, &vec![Vec::new(); n])?);
            } else {
                parts.push(xi_map(n, 0, f, &[])?);
            }
        }
        DenseMap::kron_all(f, &parts)
    };

    let build = |label: &str| -> Result<DenseMap> {
        match label {
            "1.Phi_k^n.1" | "1.phi_k^n.1" | "1.Psi_k^n" | "1.psi_k^n" => {
                let which = match label {
                    "1.Phi_k^n.1" => Coherence::BigPhi,
                    "1.phi_k^n.1" => Coherence::SmallPhi,
                    "1.Psi_k^n" => Coherence::BigPsi,
                    _ => Coherence::SmallPsi,
                };
                let parts = (0..n)
                    .map(|s| coherence_map(ks, which, f, &(0..p).map(|i| column(s, i)).collect::<Vec<_>>()))
                    .collect::<Result<Vec<_>>>()?;
                DenseMap::kron_all(f, &parts)
            }
            "xi^p_n.1.1" => {
                let grid = (0..p).map(|i| (0..n).map(|s| nprod(f, &column(s, i))).collect()).collect::<Result<Vec<Vec<_>>>>()?;
                xi_map(n, p, f, &grid)
            }
            "1.xi^k_n" => {
                let parts = (0..p).map(|i| xi_map(n, ks.items()[i], f, &blocks[i])).collect::<Result<Vec<_>>>()?;
                DenseMap::kron_all(f, &parts)
            }
            "Phi_k.1" | "phi_k.1" | "Psi_k.1.1" | "psi_k.1.1" => {
                let which = match label {
                    "Phi_k.1" => Coherence::BigPhi,
                    "phi_k.1" => Coherence::SmallPhi,
                    "Psi_k.1.1" => Coherence::BigPsi,
                    _ => Coherence::SmallPsi,
                };
                coherence_map(ks, which, f, &split(&row_products()?, ks)?)
            }
            "xi^K_n" => xi_map(n, big_k, f, &inst.grid),
            "xi^(K+Z)_n.1" => {
                let rows: Vec<Vec<BiHomObject>> = padded_rows()?;
                xi_map(n, rows.len(), f, &rows)
            }
            "1.[[k]]" => brackets(false),
            "xi^n_p.1" => {
                let grid = (0..n).map(|s| (0..p).map(|i| nprod(f, &column(s, i))).collect()).collect::<Result<Vec<Vec<_>>>>()?;
                xi_map(p, n, f, &grid)
            }
            "1.xi^n_k.1" => {
                let parts = (0..p)
                    .map(|i| xi_map(ks.items()[i], n, f, &transpose(&blocks[i])))
                    .collect::<Result<Vec<_>>>()?;
                DenseMap::kron_all(f, &parts)
            }
            "xi^n_K" => xi_map(big_k, n, f, &transpose(&inst.grid)),
            "1.[[k]].1" => brackets(true),
            "xi^n_(K+Z).1" => {
                let rows: Vec<Vec<BiHomObject>> = padded_rows()?;
                xi_map(rows.len(), n, f, &transpose(&rows))
            }
            "xi^n_1" => {
                let cols = col_products()?;
                xi_map(1, n, f, &cols.into_iter().map(|c| vec![c]).collect::<Vec<_>>())
            }
            "xi^1_n" => xi_map(n, 1, f, &[col_products()?]),
            "1.upsilon^n" | "upsilon.1" | "1.iota^n" | "iota.1" => Ok(DenseMap::identity(f, total_dim)),
            other => Err(Error::ShapeMismatch(alloc::format!("no builder for {other}"))),
        }
    };
    let regions = run_script(&DUOIDAL_SCRIPT, false, build)?;
    Ok(FigureReport { level: FigureLevel::Duoidal, regions })
}
