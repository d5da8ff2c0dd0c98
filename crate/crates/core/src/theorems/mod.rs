//! Verifiers and constructive oracles for the statements about sums of unit
//! vectors.

mod halfplane;
mod helly;
mod ksum;
mod lemmas;
mod report;

pub use halfplane::{halfplane_certificate, halfplane_order, verify_theorem1, Certificate};
pub use helly::{corollary_check, sorted_line_bound, verify_helly, LineInstance};
pub use ksum::{all_ksums, KSum};
pub use lemmas::{claim1_triplets, lemma_conv_check, lemma_main_witness};
pub use report::{TheoremId, VerifyReport};
