//! (Co)monoids, bimonoids and their (co)modules, with exact axiom checkers.

mod bundle;
mod checks;
mod induced;
mod iterated;
mod report;

pub use bundle::{ComoduleInst, HopfModuleInst, ModuleInst, StructureBundle};
pub use checks::{
    check_bimonoid, check_bisemigroup, check_comodule, check_comonoid, check_cosemigroup, check_hopf_module,
    check_module, check_monoid, check_semigroup,
};
pub use induced::induced_module_action;
pub use iterated::{
    assoc_sweep, check_generalized_assoc, check_generalized_coassoc, coassoc_sweep, delta_n, mu_n, Variant,
};
pub use report::{CheckReport, Counterexample, DiagramResult, StructureKind};
