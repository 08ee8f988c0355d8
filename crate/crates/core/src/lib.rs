//! Cohomology tables and finite-field point counts for spaces of morphisms
//! from curves to complete simplicial toric varieties.
//!
//! The pipeline runs from a [`Fan`] and a [`DegreeVector`]:
//!
//! * [`fan`]: validation, primitive collections, class group, inflation;
//! * [`algebra`]: exact row reduction, graded quotient dimensions, f- and h-vectors;
//! * [`cohomology`]: Betti tables of the target and of the ambient spaces;
//! * [`moduli`]: the genus-0 table, genus-g stable tables, point-count polynomials;
//! * [`oracle`]: a brute-force census of `Mor_d(P^1, X)(F_q)`.

pub mod algebra;
pub mod cohomology;
mod error;
pub mod fan;
pub mod moduli;
pub mod oracle;

pub use algebra::{BettiPolynomial, IntPolynomial, RationalMatrix, WeightedBettiTable};
pub use cohomology::{ambient_betti, target_betti, target_presentation, RingPresentation};
pub use error::{Error, Result};
pub use fan::{
    check_degree_vector, class_group, inflate, primitive_collections, validate_fan, ClassGroup,
    DegreeVector, Fan, FanReport, InflatedComplex, LatticeVector, PrimitiveCollectionSet,
};
pub use moduli::{
    genus0_table, genus_g_stable_table, moduli_dimension, point_count_polynomial, ModuliTable,
    MorphismDimension,
};
pub use oracle::{count_points, require_census_assumptions, BinaryForm, CensusOptions, CensusResult};
