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

//! Layout-aware synthesis of n-bit quantum Boolean and phase operators
//! (GALA-n), their conventional Toffoli-based counterparts, placement and
//! SWAP routing on device coupling graphs, and the transpilation quantum
//! cost `TQC = N1 + N2 + XC + D`.
//!
//! Every construction is checked with the embedded dense simulator in
//! [`sim`].

pub mod angle;
pub mod baseline;
pub mod circuit;
pub mod error;
pub mod gate;
pub mod layout;
pub mod lower;
pub mod metrics;
pub mod qasm;
pub mod sim;
pub mod synth;
pub mod text;
pub mod tqc;

pub use angle::Angle;
pub use circuit::Circuit;
pub use error::{CircuitError, Error, LayoutError, ParseError, SimError, SynthError, TqcError};
pub use gate::{Gate, GateKind};
pub use lower::{lower_to_native, Basis};
pub use metrics::{depth, gate_counts, is_palindromic_core};
