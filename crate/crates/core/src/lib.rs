//! Exact arithmetic for the distinct monomials of
//! `p_n = x_1 (x_1 + x_2) ... (x_1 + x_2 + ... + x_n)`.
//!
//! * [`monomial`]: the admissible exponent vectors, their order and
//!   streaming enumeration.
//! * [`coefficient`]: closed-form coefficients, Catalan numbers, triangle rows.
//! * [`oracle`]: literal expansion of `p_n`, used as ground truth.
//! * [`bijections`]: exponent vectors, ballot sequences, plane trees and
//!   choice sequences.
//! * [`identities`]: closed-form coefficient identities and their verifiers.
//! * [`maxsearch`]: the maximal coefficient over three search spaces.
//! * [`greedy`]: greedy construction of near-maximal staircase monomials.
//! * [`cli`]: the `pncoef` command-line tool.

pub mod bijections;
pub mod cli;
pub mod coefficient;
pub mod error;
pub mod greedy;
pub mod identities;
pub mod maxsearch;
pub mod monomial;
pub mod oracle;
pub mod partition;

pub use coefficient::{catalan, coefficient, triangle_row, Coefficient, TriangleRow};
pub use error::{Error, Result};
pub use monomial::{compare, enumerate, is_member, Monomial};
