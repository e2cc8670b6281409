//! Table-defined finite rings, ternion rings over GF(q), and the geometry of
//! free cyclic submodules of R^n generated by non-unimodular vectors.
//!
//! The crate is organized around one pipeline:
//!
//! * [`ring`] — arbitrary finite unital rings given by exhaustive Cayley
//!   tables, with units, zero-divisors, ideal closure, maximal ideals and the
//!   Jacobson radical (computed two independent ways and cross-checked).
//! * [`field`] — GF(p^k) construction for small prime powers, including
//!   irreducible reduction polynomials found by exhaustive search.
//! * [`ternion`] — the ring T(q) of upper-triangular 2x2 matrices over GF(q),
//!   with a canonical element labeling.
//! * [`submodule`] — cyclic submodules of the free left module R^n, freeness
//!   and unimodularity tests, and exhaustive enumeration of the free cyclic
//!   submodules all of whose generators are non-unimodular.
//! * [`classify`] — partition of the enumerated submodules by the number of
//!   radical entries in their generating vectors.
//! * [`projective`] — the core projective space PG(n-1, q) inside J^n, the
//!   line of each submodule, and the induced versus ordinary factorizations
//!   of the core lines.
//! * [`cayley`] — the plain-text Cayley-table file format.
//! * [`report`] — JSON/CSV/DOT serializations of the pipeline outputs.
//! * [`reproduce`] — checks every computed quantity for T(2)^3 against an
//!   embedded reference fixture.

pub mod cayley;
pub mod classify;
pub mod field;
pub mod projective;
pub mod report;
pub mod reproduce;
pub mod ring;
pub mod submodule;
pub mod ternion;

pub use cayley::CayleyError;
pub use classify::{decompose, radical_signature, ClassifyError, RadicalClass};
pub use field::{build_field, FieldError, FieldSpec};
pub use projective::{
    core_line_of, core_point_of, induced_factorization, ordinary_factorization, CoreContext,
    CoreLine, CorePoint, LineFactorization, ProjectiveError,
};
pub use ring::{Elem, FiniteRing, Ideal, RingError, Sidedness};
pub use submodule::{
    enumerate_nonunimodular_free, generate_submodule, is_unimodular, scale, CyclicSubmodule,
    Enumeration, RingVector, SubmoduleError,
};
pub use ternion::{build_ternions, TernionError, TernionRing};
