// Copyright 2026 the coolsim developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! Statevector simulator and analysis toolkit for a measurement-and-reset
//! cooling protocol driven by a linearly scanned bath field and an annealed
//! system-bath coupling.
//!
//! The crate is organized around the stages of the protocol:
//!
//! - [`qstate`]: statevector representation, Pauli-string application,
//!   projective measurement, reset, and stochastic noise jumps.
//! - [`hamiltonian`]: transverse-field Ising problem Hamiltonians on chains
//!   and square lattices, the paired bath and coupling terms, and all
//!   time-dependent schedules (field scan, coupling ramp, annealing).
//! - [`evolve`]: Strang-split propagation of the time-dependent Hamiltonian,
//!   plus a dense-matrix reference propagator for validation.
//! - [`protocol`]: the cooling loop (evolve / measure / reset / anneal),
//!   quantum-trajectory records, and seeded ensemble statistics.
//! - [`analysis`]: exact diagonalization, transition-element tables,
//!   first-order transition amplitudes (static and ramped / Fresnel form),
//!   and the two-level toy model behind the annealing argument.
//! - [`cli`]: config files, experiment drivers, and CSV/manifest output.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod evolve;
pub mod hamiltonian;
pub mod protocol;
pub mod qstate;

pub use error::{Error, Result};
pub use hamiltonian::{HamiltonianTerms, LatticeSpec, ScheduleSet};
pub use protocol::{EnsembleSummary, ProtocolConfig, TrajectoryRecord};
pub use qstate::{NoiseModel, Pauli, PauliString, StateVector};
