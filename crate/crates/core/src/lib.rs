//! Exact tracking of quantum information through Clifford circuits.
//!
//! Pauli operators are kept in the XZ presentation (kappa | xi | zeta) over
//! Z4 x F2^n x F2^n. A flow tableau answers the physical-to-logical question
//! (pullbacks), a Clifford tableau the logical-to-physical one (pushforwards),
//! and the combined tableau keeps both available at once by tracking the
//! pushforward phases next to the flow rows. On top of that sit auxiliary
//! qubit initializations, stabilizer-violation checks for untracked Pauli
//! rotations, a small circuit text format and a tracking driver.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod bits;
pub mod circuit;
pub mod combined;
mod error;
pub mod label;
pub mod pauli;
pub mod stabilizer;
pub mod tableau;

pub use bits::Bits;
pub use circuit::{Circuit, QubitNames, Step, Timeline};
pub use combined::{CombinedTableau, Generator};
pub use error::Error;
pub use label::{parse_label, render_label};
pub use pauli::{PauliVec, XyzRep};
pub use stabilizer::{
    check_rotation, fast_violation_check, init_aux, stabilizer_commutes, AuxMark, AuxRegistry,
    AuxSpec, AuxState, RotationReport,
};
pub use tableau::{Gate, Tableau, TableauKind};
