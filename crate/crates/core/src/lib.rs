//! Nut graphs: exact kernel certificates, the Fowler construction, regular
//! nut graph synthesis and isomorph-free census.

pub mod canon;
pub mod enumeration;
pub mod catalog;
pub mod constructions;
pub mod graph;
pub mod graph6;
pub mod kernel;
pub mod linalg;
pub mod synthesis;

pub use canon::CanonicalForm;
pub use graph::{Graph, GraphError};
pub use graph6::Graph6Error;
pub use kernel::{classify, kernel, ClassTag, GraphClass, KernelCertificate, NutCertificate};
