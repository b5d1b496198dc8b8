//! k-monoids given by colored alphabets and squares, their principal right
//! ideals and prefix codes, the groups of code bijections they define, and
//! self-similar group actions on them.

pub mod codes;
pub mod element;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod group;
pub mod lattice;
pub mod presentation;
pub mod props;
pub mod report;
pub mod selfsim;

pub use codes::{
    alignment_probe, common_upper, divides, enumerate_below, enumerate_degree, expand_code,
    is_comparable, is_maximal_code, is_prefix_code, AlignmentReport, Code,
};
pub use element::Element;
pub use error::{Error, Result};
pub use group::{identity_element, CodeBijection};
pub use lattice::{Color, Degree};
pub use presentation::{LetterId, Presentation, PresentationBuilder};
pub use report::{Failure, FailureKind, LawReport, ValidationReport};
