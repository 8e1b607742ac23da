//! Exact root-system engine: simple Lie algebras, highest-weight modules,
//! Lagrangian highest-weight orbits, highest-root gradings and real forms.

pub mod classify;
pub mod cli;
pub mod error;
pub mod golden;
pub mod grading;
pub mod groups;
pub mod orbits;
pub mod realforms;
pub mod reptheory;
pub mod rootsys;

pub use error::{LieError, Result};
pub use orbits::OrbitReport;
pub use reptheory::{FormType, IrrepDescriptor, ModuleDescriptor, TensorProduct};
pub use rootsys::{root_system, Family, RootSystem, SimpleType, Weight};
