//! Brute-force checks: postulate suites, assignment extraction, compliant
//! preorders and the lattice properties of propositional-based operators.

mod compliant;
mod enumerate;
mod extract;
mod km;
mod lattice;
mod ra;
mod report;

pub use compliant::{compliant_from_parted, CompliantPreorder, Placement};
pub use enumerate::{
    enumerate_model_sets, enumerate_se_sets, sample_model_set, sample_programs, sample_se_set,
    sample_se_sets, Mode,
};
pub use extract::{extract_assignment, extract_here, extract_preorder};
pub use km::{check_km, check_km_fn, km_violation, replay_km, KM_POSTULATES};
pub use lattice::{
    brave_suite, class_preservation_suite, inconsistent_pairs, lattice_suite, random_selection,
    separating_pair, separating_programs, skeptical_suite, SuiteReport,
};
pub use ra::{check_ra, mutate, ra_violation, replay_ra, RA_POSTULATES};
pub use report::{render_reports, PostulateReport};
