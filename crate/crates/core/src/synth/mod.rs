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

//! Layout-aware n-bit operator synthesis.
//!
//! A GALA-n operator is `SP1 · AX1 · Core_n(θ) · AX2 · SP2` with every gate
//! of the wrapper on the `out` qubit and every CNOT of the core targeting
//! `out`. `Core_n = Core_{n-1} · CNOT(in → out) · Core_{n-1}` bottoms out at
//! the 4-RZ, 3-CNOT `Core_3`, and the RZ magnitude halves with each level.

mod compose;
mod core;
mod spec;

pub use self::compose::{compose_controlled_v, compose_controlled_v_dagger, compose_fredkin, compose_miller};
pub use self::core::{build_core, build_operator, core_structure, GalaRequest, GalaStructure};
pub use self::spec::{
    builtin_spec, parse_spec_table, table1, table2, Auxiliary, InitialOut, OperatorKind, OperatorSpec, Sign,
    Superposition, Variant,
};
