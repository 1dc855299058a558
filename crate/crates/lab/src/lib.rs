pub use coverlab::summary as analyze;
pub mod enumerate;
pub mod named;
pub mod report;
pub mod suites;
