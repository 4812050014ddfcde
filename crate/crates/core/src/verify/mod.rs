//! Randomized verification of the map identities.

pub mod cube;
pub mod registry;
pub mod report;
pub mod sample;
pub mod suites;

pub use cube::{yb_cube_check, yb_cube_sides};
pub use registry::{find_map, registry, FlatMap, MapKind, RegisteredMap};
pub use report::{Failure, TrialCounts, VerificationReport, SCHEMA_VERSION};
pub use sample::{sample_instance, InstanceKind};
pub use suites::{run_suite, suite_catalog, suite_names, Field, SuiteConfig, SuiteInfo};
