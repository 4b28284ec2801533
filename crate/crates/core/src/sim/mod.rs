// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Dense statevector simulation and the verification oracles built on it.

mod matrix;
mod qsphere;
mod state;
mod verify;

pub use matrix::{gate_matrix, Matrix};
pub use qsphere::{ket_label, qsphere_data, write_qsphere_table, QSphereEntry};
pub use state::{simulate, simulate_from, StateVector, SIMULATOR_QUBIT_CAP};
pub use verify::{
    basis_permutation, equivalent_up_to_global_phase, evolve, truth_table, unitary_of, TruthRow,
    UNITARY_QUBIT_CAP,
};
