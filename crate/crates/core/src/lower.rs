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

//! Rewrites macro gates into the native basis.
//!
//! The rewrite table is fixed so gate counts stay predictable; there is no
//! fusion or cancellation pass.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::circuit::Circuit;
use crate::error::ParseError;
use crate::gate::{Gate, GateKind};

/// Native two-qubit gate the output is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    #[default]
    Cnot,
    Ecr,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Cnot => "cnot",
            Basis::Ecr => "ecr",
        })
    }
}

impl FromStr for Basis {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cnot" | "cx" => Ok(Basis::Cnot),
            "ecr" => Ok(Basis::Ecr),
            _ => Err(ParseError::new(0, format!("unknown basis `{s}`"))),
        }
    }
}

fn half_pi() -> Angle {
    Angle::HALF_PI
}

/// `H → RZ(π/2) √X RZ(π/2)`.
pub fn hadamard_sequence(q: usize) -> [Gate; 3] {
    [Gate::rz(half_pi(), q), Gate::sx(q), Gate::rz(half_pi(), q)]
}

/// `√X† → RZ(π) √X RZ(π)`.
pub fn sqrt_x_dagger_sequence(q: usize) -> [Gate; 3] {
    [Gate::rz(Angle::PI, q), Gate::sx(q), Gate::rz(Angle::PI, q)]
}

/// SWAP as three CNOTs with alternating direction.
pub fn swap_sequence(a: usize, b: usize) -> [Gate; 3] {
    [Gate::cnot(a, b), Gate::cnot(b, a), Gate::cnot(a, b)]
}

/// CNOT as one ECR plus local rotations:
/// `ECR(c,t); X(c); RZ(-π/2)(c); √X(t); X(t)`.
pub fn cnot_via_ecr(control: usize, target: usize) -> [Gate; 5] {
    [
        Gate::ecr(control, target),
        Gate::x(control),
        Gate::rz(-half_pi(), control),
        Gate::sx(target),
        Gate::x(target),
    ]
}

/// ECR as one CNOT plus local rotations: `CNOT(a,b); RZ(π/2)(a); X(a); √X(b)`.
pub fn ecr_via_cnot(a: usize, b: usize) -> [Gate; 4] {
    [Gate::cnot(a, b), Gate::rz(half_pi(), a), Gate::x(a), Gate::sx(b)]
}

/// Controlled-√X (or its adjoint) from two CNOTs:
/// `H(t) · CS(c,t) · H(t)` with the controlled phase split into RZs and
/// the first Hadamard's trailing RZ folded into the `T` on the target.
pub fn controlled_sqrt_x_sequence(control: usize, target: usize, dagger: bool) -> Vec<Gate> {
    let quarter = if dagger { -Angle::QUARTER_PI } else { Angle::QUARTER_PI };
    vec![
        Gate::rz(half_pi(), target),
        Gate::sx(target),
        Gate::rz(half_pi() + quarter, target),
        Gate::cnot(control, target),
        Gate::rz(-quarter, target),
        Gate::cnot(control, target),
        Gate::rz(half_pi(), target),
        Gate::sx(target),
        Gate::rz(half_pi(), target),
        Gate::rz(quarter, control),
    ]
}

fn lower_gate(g: &Gate, basis: Basis, out: &mut Vec<Gate>) {
    let q = g.qubits();
    match (g.kind(), basis) {
        (GateKind::I | GateKind::X | GateKind::SqrtX | GateKind::Rz(_), _) => out.push(*g),
        (GateKind::H, _) => out.extend(hadamard_sequence(q[0])),
        (GateKind::SqrtXDagger, _) => out.extend(sqrt_x_dagger_sequence(q[0])),
        (GateKind::Cnot, Basis::Cnot) | (GateKind::Ecr, Basis::Ecr) => out.push(*g),
        (GateKind::Cnot, Basis::Ecr) => out.extend(cnot_via_ecr(q[0], q[1])),
        (GateKind::Ecr, Basis::Cnot) => out.extend(ecr_via_cnot(q[0], q[1])),
        (GateKind::Swap, _) => {
            for c in swap_sequence(q[0], q[1]) {
                lower_gate(&c, basis, out);
            }
        }
        (GateKind::MacroV | GateKind::MacroVDagger, _) => {
            let dagger = g.kind() == GateKind::MacroVDagger;
            for c in controlled_sqrt_x_sequence(q[0], q[1], dagger) {
                lower_gate(&c, basis, out);
            }
        }
    }
}

/// Rewrites every gate into the native set of `basis`. The result is
/// unitary-equivalent to `c` up to global phase, and lowering it again is a
/// no-op.
pub fn lower_to_native(c: &Circuit, basis: Basis) -> Circuit {
    let mut gates = Vec::with_capacity(c.len() * 2);
    for g in c.gates() {
        lower_gate(g, basis, &mut gates);
    }
    c.with_gates_of(gates)
}
