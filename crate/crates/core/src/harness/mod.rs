//! Instance generators, the fixed gallery and the seeded suite runner.

pub mod gallery;
pub mod generators;
pub mod suites;

pub use gallery::{evaluate, gallery_case, run_gallery, CaseOutcome, GalleryCase, GALLERY};
pub use generators::{gen_random_ball, gen_unit_vectors, gen_zero_sum_six};
pub use suites::{
    run_suite, run_suite_with, BallSource, Counts, Execution, Mode, Status, SuiteConfig, SuiteKind,
    SuiteReport, TrialRecord,
};
