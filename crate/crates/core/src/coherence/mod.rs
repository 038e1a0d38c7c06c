//! Coherence morphisms of the concrete lax, oplax and duoidal structures
//! built from objects with commuting endomorphisms.
//!
//! Unbiased n-fold products are flattened left to right into the binary
//! Kronecker product, so nested products and the unit constraints are
//! literal identities.

mod figures;
mod identities;
mod maps;
mod object;
pub mod sample;

pub use figures::{
    check_duoidal_figure, check_lax_figure, run_script, DuoidalInstance, Edge, FigureLevel, FigureReport,
    LaxInstance, RegionResult, Region, Script, DUOIDAL_SCRIPT, LAX_SCRIPT,
};
pub use identities::{check_exponent_identities, ExponentCheck};
pub use maps::{coherence_map, identity_on, phi_exponents, xi_map, Coherence};
pub use object::{nprod, BiHomObject, Endo};
