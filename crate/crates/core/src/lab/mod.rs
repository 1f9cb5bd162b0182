//! Experiment harness: body families, stability scans and verification chains.

pub mod chain;
pub mod families;
pub mod scan;
pub mod sections;

pub use chain::{bs_chain_check, ChainReport};
pub use families::{caps_cut_ball, make_family, FamilySpec, Member};
pub use scan::{fit_exponent, parse_range, stability_scan, StabilityRecord};
pub use sections::{false_centre_scan, section_containment_check, ContainmentReport, FalseCentreReport};
