//! Exact and asymptotic contact statistics of vicious walkers near a wall.
//!
//! The model: `n` walkers on the nonnegative integers, each taking `t` steps of `+1` or
//! `-1`, never colliding (all heights distinct at every integer time) and never passing
//! below the wall at height 0. In the *watermelon* configuration walker `i` runs from
//! height `2i - 2` to height `y + 2i - 2`. Every visit of the lowest walk to the wall —
//! endpoints included — is a *contact*, weighted by a fugacity `kappa`, so each
//! configuration has a partition function that is a polynomial in `kappa` with
//! nonnegative integer coefficients: the contact polynomial.
//!
//! The crate computes that polynomial along several fully independent routes and keeps
//! them honest against each other:
//!
//! * [`oracle`] — brute-force enumeration / transfer-matrix sweep (the ground truth);
//! * [`walks1`] — single-walker formulas via reflection and Catalan generating
//!   functions;
//! * [`lgv`] — determinants of single-walker polynomials (the Lindstrom-Gessel-Viennot
//!   route), a condensation identity, and exact counts of families with a prescribed
//!   number of contacts;
//! * [`formulas`] — closed forms: a single-sum formula for zero deviation, a double-sum
//!   formula for the general case, an expansion whose coefficients count families with
//!   marked contacts, product formulas at fugacity 1 and 2, and convergent series
//!   representations for numerical evaluation at any admissible fugacity;
//! * [`tableaux`] — the bijective route: walker families as semistandard tableaux and a
//!   jeu-de-taquin procedure that transports wall contacts into a shortened top walk,
//!   proving (and here: testing, family by family) the product structure of the
//!   contact counts;
//! * [`stats`] — exact mean number of contacts and its closed forms;
//! * [`asym`] — large-`t` asymptotics of the partition function and the mean in the
//!   three fugacity regimes, with convergence diagnostics against the exact routes.
//!
//! The [`cli`] module backs the `watermelon` binary (subcommands `exact`, `crosscheck`,
//! `contacts`, `asym`, `bijection`); the `examples/` directory shows each capability as
//! a small runnable program.

pub mod asym;
pub mod cli;
pub mod combin;
pub mod error;
pub mod formulas;
pub mod lgv;
pub mod model;
pub mod oracle;
pub mod poly;
pub mod stats;
pub mod tableaux;
pub mod walks1;

pub use error::{Error, Result};
pub use model::{WalkerSpec, WatermelonSpec};
pub use poly::ContactPolynomial;
