//! Binary quadratic non-Σ operads: Koszul duality, Poincaré series,
//! composition of trees and strong homotopy relations.

mod compose;
mod poincare;
mod quadratic;
mod sh;

pub use compose::{compose_report, dend_compose, nested_composition, ComposeReport, Orientation};
pub use poincare::{
    as_closed_form, dend_closed_form, dias_closed_form, poincare_check, poincare_check_dims, preset_dimensions,
    preset_dual, signed_series, PoincareReport, Series, MAX_POINCARE_DEGREE,
};
pub use quadratic::{preset_quadratic, quadratic_dual, QuadraticData, Slot, PRESETS};
pub use sh::{sh_relation, sh_relations, ShRelation, ShTerm, SignExponent, MAX_SH_DEGREE};
