//! Exact chart-level computations with Frobenius liftings modulo `p^2`.
//!
//! The crate works on affine charts `A^n` over `F_p` and their flat lifts
//! over `Z/p^2`. A Frobenius lifting is recorded by the images of the
//! coordinates, a Frobenius splitting by the key polynomial `u` of its trace
//! form `f -> Tr(u f)`.

pub mod fano;
pub mod ideal;
pub mod lift;
pub mod parse;
pub mod poly;
pub mod prime;
pub mod random;
pub mod split;
pub mod witt;

pub use ideal::{member_mod_p2, IdealError, IdealPresentation, MonomialOrder, SyzygyBasis};
pub use lift::{BlowupCertificate, ChartLifting, LiftError, XiLogMatrix, XiMatrix};
pub use parse::{parse_poly, ParseError};
pub use poly::{default_var_names, Level, Monomial, MultiPoly, PolyError, Zmod};
pub use prime::Prime;
pub use split::{
    fedder_is_fsplit, group_average, p1_invariant_scan, theorem_iso_check, trace_form_from_map,
    CanonicalLiftElement, CanonicalLiftRing, DivisorReport, GroupAction, SplitError,
    TraceSplitting,
};
pub use witt::{WittError, WittPoly, WittScalar};
