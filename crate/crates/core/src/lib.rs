//! Numerical semigroup computations through binomial Groebner bases.
//!
//! Given coprime generators `a1 < a2 < ... < ak`, the semigroup
//! `S = <a1,...,ak>` is the set of nonnegative integral combinations of the
//! generators. This crate computes its classical invariants (gaps, Frobenius
//! number, genus, sporadic elements) along two independent routes:
//!
//! * a dynamic-programming oracle over reachability tables
//!   ([`semigroup`]), and
//! * the reduced Groebner basis of the binomial ideal
//!   `I = <y_i - x^{a_i}>` under the x-elimination lexicographic order,
//!   whose staircase complement is in bijection with the gaps and elements
//!   of `S` ([`groebner`], [`staircase`]).
//!
//! Monomial normal forms certify membership: the normal form of `x^N` is a
//! single monomial `x^{s0} y1^{s1} ... yk^{sk}` with
//! `N = s0 + s1*a1 + ... + sk*ak`, and `N` lies in `S` exactly when
//! `s0 = 0`.
//!
//! The [`bounds`] module evaluates exact lattice-point counters over
//! rational simplices and the upper bounds they induce on the number of
//! semigroup elements below a threshold. All arithmetic there is exact
//! (big integers and big rationals); floors are taken only at the end.

pub mod bounds;
pub mod error;
pub mod groebner;
pub mod monomials;
pub mod selftest;
pub mod semigroup;
pub mod staircase;

pub use error::Error;
pub use groebner::{buchberger, Binomial, BuchbergerConfig, GroebnerBasis};
pub use monomials::{ExponentVector, MonomialOrder};
pub use semigroup::{InvariantReport, SemigroupSpec, WilfReport};
pub use staircase::{CertifiedMembership, StaircaseModel};

/// Exact rational scalar used by the lattice-point counters.
pub type Rational = num_rational::BigRational;

/// Arbitrary-size signed integer used for bound values.
pub type Int = num_bigint::BigInt;

/// Arbitrary-size unsigned integer used for counts.
pub type Count = num_bigint::BigUint;
