//! Combinatorics of k-tableaux: (k+1)-cores, exhaustive enumeration, standard
//! sequences, and the k-charge / k-cocharge statistics in both their
//! signed-step and manifestly non-negative formulations.

pub mod classical;
pub mod cores;
pub mod enumerate;
pub mod error;
pub mod partition;
pub mod poly;
pub mod sequences;
pub mod statistics;
pub mod tableau;
pub mod verify;

pub use classical::{classical_charge, classical_cocharge, kostka_foulkes, kostka_foulkes_table};
pub use cores::{is_n_core, k_interior, n_stat};
pub use enumerate::{enumerate_k_tableaux, enumerate_with, Strategy};
pub use error::{Error, Result};
pub use partition::{Cell, CellSet, Partition, Residue};
pub use poly::TPolynomial;
pub use sequences::{standard_sequences, StandardSequence};
pub use statistics::{charge_table, k_charge, k_cocharge, Formulation, TableauStatistics};
pub use tableau::{KTableau, Violation};
pub use verify::{sweep, Check, SweepConfig, SweepReport};
