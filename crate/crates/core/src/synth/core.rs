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

use serde::{Deserialize, Serialize};

use super::spec::{Auxiliary, OperatorSpec, Sign, Superposition};
use crate::angle::Angle;
use crate::circuit::Circuit;
use crate::error::SynthError;
use crate::gate::Gate;
use crate::metrics::depth;

/// Operator to build and where its qubits live. `inputs[i]` is `in_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalaRequest {
    pub spec: OperatorSpec,
    pub n: usize,
    pub inputs: Vec<usize>,
    pub out: usize,
}

impl GalaRequest {
    /// Inputs on `0..n-1`, `out` on `n-1`.
    pub fn standard(spec: OperatorSpec, n: usize) -> Self {
        GalaRequest { spec, n, inputs: (0..n.saturating_sub(1)).collect(), out: n.saturating_sub(1) }
    }

    fn validate(&self) -> Result<(), SynthError> {
        if self.n < 3 {
            return Err(SynthError::TooFewQubits { what: self.spec.kind.to_string(), min: 3, got: self.n });
        }
        if !self.spec.kind.supports_arity(self.n) {
            return Err(SynthError::UnsupportedArity { op: self.spec.kind.to_string(), n: self.n });
        }
        check_qubits(self.n, &self.inputs, self.out)
    }
}

pub(crate) fn check_qubits(n: usize, inputs: &[usize], out: usize) -> Result<(), SynthError> {
    if inputs.len() + 1 != n {
        return Err(SynthError::InvalidQubits(format!("{} inputs given for n = {n}", inputs.len())));
    }
    let mut seen = inputs.to_vec();
    seen.push(out);
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(SynthError::InvalidQubits("inputs and out must be distinct".into()));
    }
    Ok(())
}

fn core_gates(level: usize, n: usize, angles: &[Angle; 4], inputs: &[usize], out: usize, gates: &mut Vec<Gate>) {
    if level == 3 {
        let (outer, middle) = (inputs[n - 2], inputs[n - 3]);
        gates.push(Gate::rz(angles[0], out));
        gates.push(Gate::cnot(outer, out));
        gates.push(Gate::rz(angles[1], out));
        gates.push(Gate::cnot(middle, out));
        gates.push(Gate::rz(angles[2], out));
        gates.push(Gate::cnot(outer, out));
        gates.push(Gate::rz(angles[3], out));
        return;
    }
    core_gates(level - 1, n, angles, inputs, out, gates);
    gates.push(Gate::cnot(inputs[n - level], out));
    core_gates(level - 1, n, angles, inputs, out, gates);
}

/// `Core_n` with RZ angles `signs[k] · magnitude`, on a register just wide
/// enough for the given qubits.
pub fn build_core(n: usize, magnitude: Angle, signs: [Sign; 4], inputs: &[usize], out: usize) -> Result<Circuit, SynthError> {
    if n < 3 {
        return Err(SynthError::TooFewQubits { what: "core".into(), min: 3, got: n });
    }
    check_qubits(n, inputs, out)?;
    let angles = signs.map(|s| s.apply(magnitude));
    let mut gates = Vec::with_capacity(core_len(n));
    core_gates(n, n, &angles, inputs, out, &mut gates);
    let width = inputs.iter().copied().chain([out]).max().unwrap_or(0) + 1;
    Ok(Circuit::from_gates(width, gates)?)
}

fn core_len(n: usize) -> usize {
    // 7 gates at n = 3, 2·prev + 1 above
    (8usize << (n - 3)) - 1
}

fn push_sp(sp: Superposition, q: usize, c: &mut Vec<Gate>) {
    c.push(match sp {
        Superposition::H => Gate::h(q),
        Superposition::SqrtX => Gate::sx(q),
        Superposition::SqrtXDagger => Gate::sxdg(q),
    });
}

fn push_ax(ax: Auxiliary, q: usize, c: &mut Vec<Gate>) {
    if let Auxiliary::Rz(a) = ax {
        c.push(Gate::rz(a, q));
    }
}

/// Full `SP1 · AX1 · Core_n · AX2 · SP2` operator, labelled `in_i`/`out`.
pub fn build_operator(req: &GalaRequest) -> Result<Circuit, SynthError> {
    req.validate()?;
    let s = &req.spec;
    let core = build_core(req.n, s.magnitude_at(req.n), s.signs, &req.inputs, req.out)?;
    let mut gates = Vec::with_capacity(core.len() + 4);
    push_sp(s.sp1, req.out, &mut gates);
    push_ax(s.ax1, req.out, &mut gates);
    gates.extend_from_slice(core.gates());
    push_ax(s.ax2, req.out, &mut gates);
    push_sp(s.sp2, req.out, &mut gates);
    let mut c = Circuit::from_gates(core.num_qubits(), gates)?;
    for (i, &q) in req.inputs.iter().enumerate() {
        c.set_label(q, format!("in{i}"))?;
    }
    c.set_label(req.out, "out")?;
    Ok(c)
}

/// Gate counts of the core and its wrapper before lowering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GalaStructure {
    pub n: usize,
    pub core_rz: usize,
    pub core_cnot: usize,
    pub core_depth: usize,
    /// Single-qubit wrapper gates on `out` (SP and non-identity AX).
    pub wrapper_gates: usize,
}

/// Structure of the operator `spec` would produce at `n` qubits.
pub fn core_structure(spec: &OperatorSpec, n: usize) -> Result<GalaStructure, SynthError> {
    if n < 3 || !spec.kind.supports_arity(n) {
        return Err(SynthError::UnsupportedArity { op: spec.kind.to_string(), n });
    }
    let core = build_core(n, spec.magnitude_at(n), spec.signs, &(0..n - 1).collect::<Vec<_>>(), n - 1)?;
    let rz = core.count_kind(|k| matches!(k, crate::gate::GateKind::Rz(_)));
    let aux = [spec.ax1, spec.ax2].iter().filter(|a| matches!(a, Auxiliary::Rz(_))).count();
    Ok(GalaStructure {
        n,
        core_rz: rz,
        core_cnot: core.len() - rz,
        core_depth: depth(&core),
        wrapper_gates: 2 + aux,
    })
}
