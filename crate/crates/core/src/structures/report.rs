use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;
use crate::exactlin::{DenseMap, Scalar};

/// What a report was asked to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureKind {
    Semigroup,
    Cosemigroup,
    Monoid,
    Comonoid,
    Bisemigroup,
    Bimonoid,
    Module,
    Comodule,
    HopfModule,
    GeneralizedCoassoc,
    GeneralizedAssoc,
    Antipode,
}

impl StructureKind {
    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Semigroup => "semigroup",
            StructureKind::Cosemigroup => "cosemigroup",
            StructureKind::Monoid => "monoid",
            StructureKind::Comonoid => "comonoid",
            StructureKind::Bisemigroup => "bisemigroup",
            StructureKind::Bimonoid => "bimonoid",
            StructureKind::Module => "module",
            StructureKind::Comodule => "comodule",
            StructureKind::HopfModule => "hopf-module",
            StructureKind::GeneralizedCoassoc => "generalized-coassociativity",
            StructureKind::GeneralizedAssoc => "generalized-associativity",
            StructureKind::Antipode => "antipode",
        }
    }
}

/// First entry where the two paths of a diagram disagree; `col` is the
/// input basis vector and `row` the output coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub row: usize,
    pub col: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "on basis vector e{} coordinate {}: {} vs {}", self.col, self.row, self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramResult {
    pub name: String,
    /// Stable identifier of the law.
    pub anchor: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

impl DiagramResult {
    /// Compares two paths of a diagram entry by entry.
    pub fn compare(name: impl Into<String>, anchor: impl Into<String>, lhs: &DenseMap, rhs: &DenseMap) -> DiagramResult {
        let counterexample = lhs.first_difference(rhs).map(|(row, col)| Counterexample {
            row,
            col,
            lhs: lhs.get(row.min(lhs.dst_dim().saturating_sub(1)), col.min(lhs.src_dim().saturating_sub(1))),
            rhs: rhs.get(row.min(rhs.dst_dim().saturating_sub(1)), col.min(rhs.src_dim().saturating_sub(1))),
        });
        DiagramResult { name: name.into(), anchor: anchor.into(), passed: counterexample.is_none(), counterexample }
    }
}

/// Per-diagram verdicts, ordered by diagram name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub kind: StructureKind,
    pub diagrams: Vec<DiagramResult>,
}

impl CheckReport {
    pub fn new(kind: StructureKind, mut diagrams: Vec<DiagramResult>) -> CheckReport {
        diagrams.sort_by(|a, b| a.name.cmp(&b.name));
        CheckReport { kind, diagrams }
    }

    pub fn passed(&self) -> bool {
        self.diagrams.iter().all(|d| d.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &DiagramResult> {
        self.diagrams.iter().filter(|d| !d.passed)
    }

    pub fn diagram(&self, name: &str) -> Option<&DiagramResult> {
        self.diagrams.iter().find(|d| d.name == name)
    }
}

pub(crate) type Diagrams = Result<Vec<DiagramResult>>;
