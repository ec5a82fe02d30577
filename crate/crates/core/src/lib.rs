pub mod complex;
pub mod cone;
pub mod corpus;
pub mod expansion;
pub mod io;
pub mod linalg;
pub mod report;
pub mod rubber;
pub mod trop_maps;

pub use complex::{Axiom, ConeComplex, SubdivisionReport, Violation, Witness};
pub use cone::{Cone, RationalPoint};
pub use expansion::{ExpansionError, ExpansionReport, FibreComplex, TropicalExpansion};
pub use io::{load_input, load_str, to_document, LoadError, Model};
pub use linalg::IntMatrix;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use rubber::{rubber_report, RubberReport};
pub use trop_maps::{check_stability, validate_map, ReasonCode, StabilityVerdict, TropicalMap};
