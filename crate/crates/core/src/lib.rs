//! Finite commutative local algebras over GF(p) presented by monomial
//! relations, and the question of whether every ideal is a direct sum of
//! cyclic modules.
//!
//! The usual entry points are [`RingPresentation::parse`], [`Algebra::build`],
//! [`classify_dsc`], [`decompose_ideal`] and [`spec_classify`].

pub mod algebra;
pub mod corpus;
pub mod decomposer;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod structure;

pub use algebra::presentation::{Monomial, RingPresentation};
pub use algebra::{Algebra, BuildOptions, Element};
pub use decomposer::{decompose_ideal, verify_decomposition, Branch, CyclicDecomposition};
pub use error::{Error, Result};
pub use ideal::{Ideal, QuotientMap};
pub use linalg::{Mat, PrimeField, Subspace};
pub use oracle::{IdealCensus, Oracle};
pub use structure::{
    classify_dsc, classify_product, find_m_decomposition, spec_classify, Answer, DscVerdict,
    MDecomposition, SearchBounds, SpecCase, SpecReport,
};
