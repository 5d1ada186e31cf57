//! Exact q-series toolkit for characters of affine vertex algebras at admissible level.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: rationals, cyclotomic numbers, Puiseux series, ε-expansions, linear solving.
//! * [`modforms`]: eta, Jacobi and classical thetas, Eisenstein and twisted Eisenstein series.
//! * [`characters`]: symbolic character expressions, spectral flow and specialization.
//! * [`mlde`]: Serre derivatives, modular linear differential operators, verification and fitting.
//! * [`fusion`]: Zhu-algebra fusion rules, bimodule oracles and the Verlinde comparison.
//! * [`uea`]: a normal-ordering engine for affine `sl2` and the twisted Zhu reduction.
//! * [`io`]: JSON and text formats shared by the command-line tool and fixtures.
//! * [`cli`]: the `twistvoa` command line.

pub mod algebra;
pub mod characters;
pub mod cli;
pub mod error;
pub mod fusion;
pub mod io;
pub mod mlde;
pub mod modforms;
pub mod uea;

pub use algebra::{rat, CycNumber, EpsSeries, Monomial, Poly, PuiseuxSeries, Rat};
pub use error::{MathError, Result};
