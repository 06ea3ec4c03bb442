mod job;
mod suites;

pub use job::{parse_job, run_job, Command, JobOptions, JobSpec, ModuleSpec, Report};
pub use suites::{run_property_suite, SuiteFailure, SuiteReport, SuiteScale, SUITES};
