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

//! Gates built on top of the GALA AND core.

use super::core::{build_core, build_operator, check_qubits, GalaRequest};
use super::spec::{builtin_spec, OperatorKind, Variant};
use crate::circuit::Circuit;
use crate::error::SynthError;
use crate::gate::Gate;
use crate::lower::controlled_sqrt_x_sequence;

fn width(qubits: impl IntoIterator<Item = usize>) -> usize {
    qubits.into_iter().max().map_or(0, |m| m + 1)
}

fn controlled_v(n: usize, controls: &[usize], target: usize, dagger: bool) -> Result<Circuit, SynthError> {
    if n < 2 {
        return Err(SynthError::TooFewQubits { what: "controlled-V".into(), min: 2, got: n });
    }
    check_qubits(n, controls, target)?;
    let w = width(controls.iter().copied().chain([target]));
    let mut c = if n == 2 {
        Circuit::from_gates(w, controlled_sqrt_x_sequence(controls[0], target, dagger))?
    } else {
        // Half the AND angle turns the all-ones phase flip into a quarter
        // turn about X; negating it gives V†.
        let and = builtin_spec(OperatorKind::And, Variant::Hadamard);
        let signs = if dagger { and.signs.map(|s| s.flip()) } else { and.signs };
        let core = build_core(n, and.magnitude_at(n).halve(), signs, controls, target)?;
        let mut gates = vec![Gate::h(target)];
        gates.extend_from_slice(core.gates());
        gates.push(Gate::h(target));
        Circuit::from_gates(w, gates)?
    };
    for (i, &q) in controls.iter().enumerate() {
        c.set_label(q, format!("in{i}"))?;
    }
    c.set_label(target, "out")?;
    Ok(c)
}

/// `n-1` controls, `√X` on `target` when all controls are one. The n = 2
/// case is the native controlled-√X sequence.
pub fn compose_controlled_v(n: usize, controls: &[usize], target: usize) -> Result<Circuit, SynthError> {
    controlled_v(n, controls, target, false)
}

pub fn compose_controlled_v_dagger(n: usize, controls: &[usize], target: usize) -> Result<Circuit, SynthError> {
    controlled_v(n, controls, target, true)
}

/// Controlled swap of `out0` and `out1` on `n-2` controls, as a GALA AND
/// between two CNOTs.
pub fn compose_fredkin(n: usize, controls: &[usize], out0: usize, out1: usize) -> Result<Circuit, SynthError> {
    if n < 3 {
        return Err(SynthError::TooFewQubits { what: "fredkin".into(), min: 3, got: n });
    }
    let mut inputs = controls.to_vec();
    inputs.push(out0);
    check_qubits(n, &inputs, out1)?;
    let and = build_operator(&GalaRequest {
        spec: builtin_spec(OperatorKind::And, Variant::Hadamard),
        n,
        inputs: inputs.clone(),
        out: out1,
    })?;
    let mut gates = vec![Gate::cnot(out1, out0)];
    gates.extend_from_slice(and.gates());
    gates.push(Gate::cnot(out1, out0));
    let mut c = Circuit::from_gates(and.num_qubits(), gates)?;
    for (i, &q) in controls.iter().enumerate() {
        c.set_label(q, format!("in{i}"))?;
    }
    c.set_label(out0, "out0")?;
    c.set_label(out1, "out1")?;
    Ok(c)
}

/// Miller gate: swaps `|0,1…1⟩` and `|1,0…0⟩` (out first) and fixes every
/// other basis state.
pub fn compose_miller(n: usize, inputs: &[usize], out: usize) -> Result<Circuit, SynthError> {
    if n < 3 {
        return Err(SynthError::TooFewQubits { what: "miller".into(), min: 3, got: n });
    }
    check_qubits(n, inputs, out)?;
    let and = build_operator(&GalaRequest {
        spec: builtin_spec(OperatorKind::And, Variant::Hadamard),
        n,
        inputs: inputs.to_vec(),
        out,
    })?;
    let fan: Vec<Gate> = inputs.iter().map(|&q| Gate::cnot(out, q)).collect();
    let mut gates = fan.clone();
    gates.extend_from_slice(and.gates());
    gates.extend(fan);
    let mut c = Circuit::from_gates(and.num_qubits(), gates)?;
    for (i, &q) in inputs.iter().enumerate() {
        c.set_label(q, format!("in{i}"))?;
    }
    c.set_label(out, "out")?;
    Ok(c)
}
