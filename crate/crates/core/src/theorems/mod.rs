//! Closed forms for the pyramid and bull families, their verification sweep,
//! and the component classifier for 2K2-free unit interval graphs.

mod classify;
mod closed;
mod sweep;

pub use classify::{
    check_classification_domain, classify, classify_with, find_structural_root,
    is_2k2_free_unit_interval, CaseStructure, Certificate, Classification, ComponentCertificate,
    StructuralRoot,
};
pub use closed::{
    gb_e_closed, gb_m_closed, gb_mtilde_closed, gp_e_closed, gp_m_closed, gp_mtilde_closed,
    GpCoefficients, MAX_PARAMETER,
};
pub use sweep::{verify_sweep, verify_sweep_with, verify_triple, Family, SweepEntry};
