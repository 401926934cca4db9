//! Pauli stabilizer codes built from face-3-colored polyhedra.
//!
//! Qubits live on vertices and one check lives on each face; red, green and
//! blue faces carry uniform `X`, `Y` and `Z` checks. The crate provides the
//! supporting pieces: bit-packed Pauli algebra ([`pauli`]), GF(2) linear
//! algebra ([`gf2`]), polyhedron handling ([`polyhedron`]), code
//! construction ([`codegen`], [`stabcode`]), lookup-table decoding
//! ([`decoder`]) and depolarizing Monte Carlo ([`noisesim`]).
//!
//! ```
//! use polycode::{codegen, exec::Exec, polyhedron::Polyhedron, stabcode::StabilizerCode};
//!
//! let rd = Polyhedron::builtin("rhombic_dodecahedron").unwrap();
//! let code = StabilizerCode::from_checks(codegen::checks_from_polyhedron(&rd).unwrap()).unwrap();
//! assert_eq!(code.params(14, Exec::Parallel).unwrap().to_string(), "[[14,3,3]]");
//! ```
//!
//! The `parallel` feature (on by default) runs the distance scan and Monte
//! Carlo shots on rayon. Without it, [`exec::Exec::Parallel`] runs
//! sequentially and produces identical results.

pub mod codegen;
pub mod decoder;
pub mod error;
pub mod exec;
pub mod gf2;
pub mod noisesim;
pub mod pauli;
pub mod polyhedron;
pub mod reference;
pub mod stabcode;

pub use error::{Error, Result};
pub use exec::Exec;
pub use pauli::{Letter, PauliOperator};
pub use polyhedron::Polyhedron;
pub use stabcode::{CodeParams, StabilizerCode};
