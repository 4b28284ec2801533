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

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::CircuitError;
use crate::gate::{Gate, GateKind};

/// An ordered gate list over `num_qubits` indexed qubits.
///
/// Qubit 0 is the least-significant bit of basis-state labels. The optional
/// label map names roles such as `in0`, `out`, `out1`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<usize, String>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Circuit { num_qubits, gates: Vec::new(), labels: BTreeMap::new() }
    }

    pub fn from_gates(num_qubits: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self, CircuitError> {
        let mut c = Circuit::new(num_qubits);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Qubit carrying `role`, if labelled.
    pub fn qubit_for(&self, role: &str) -> Option<usize> {
        self.labels.iter().find(|(_, r)| r.as_str() == role).map(|(q, _)| *q)
    }

    pub fn push(&mut self, gate: Gate) -> Result<(), CircuitError> {
        for &q in gate.qubits() {
            if q >= self.num_qubits {
                return Err(CircuitError::QubitOutOfRange { qubit: q, num_qubits: self.num_qubits });
            }
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn set_label(&mut self, qubit: usize, role: impl Into<String>) -> Result<(), CircuitError> {
        let role = role.into();
        if qubit >= self.num_qubits {
            return Err(CircuitError::QubitOutOfRange { qubit, num_qubits: self.num_qubits });
        }
        if self.labels.iter().any(|(q, r)| *r == role && *q != qubit) {
            return Err(CircuitError::DuplicateLabel(role));
        }
        self.labels.insert(qubit, role);
        Ok(())
    }

    /// Appends every gate of `other`; both circuits must be equally wide.
    pub fn append(&mut self, other: &Circuit) -> Result<(), CircuitError> {
        if other.num_qubits != self.num_qubits {
            return Err(CircuitError::WidthMismatch { left: self.num_qubits, right: other.num_qubits });
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Circuit) -> Result<Circuit, CircuitError> {
        let mut c = self.clone();
        c.append(other)?;
        Ok(c)
    }

    /// Same gates, relabelled qubits, on a register of `num_qubits`.
    pub fn remapped(&self, num_qubits: usize, f: impl Fn(usize) -> usize) -> Result<Circuit, CircuitError> {
        let mut c = Circuit::new(num_qubits);
        for g in &self.gates {
            c.push(g.remap(&f))?;
        }
        for (q, role) in &self.labels {
            c.set_label(f(*q), role.clone())?;
        }
        Ok(c)
    }

    pub(crate) fn with_gates_of(&self, gates: Vec<Gate>) -> Circuit {
        Circuit { num_qubits: self.num_qubits, gates, labels: self.labels.clone() }
    }

    pub fn count_kind(&self, pred: impl Fn(GateKind) -> bool) -> usize {
        self.gates.iter().filter(|g| pred(g.kind())).count()
    }

    pub fn is_native(&self) -> bool {
        self.gates.iter().all(|g| g.kind().is_native())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::Angle;

    #[test]
    fn push_rejects_out_of_range() {
        let mut c = Circuit::new(2);
        assert!(c.push(Gate::cnot(0, 1)).is_ok());
        assert_eq!(
            c.push(Gate::x(2)),
            Err(CircuitError::QubitOutOfRange { qubit: 2, num_qubits: 2 })
        );
    }

    #[test]
    fn labels_are_injective_over_roles() {
        let mut c = Circuit::new(3);
        c.set_label(2, "out").unwrap();
        c.set_label(2, "out").unwrap();
        assert!(matches!(c.set_label(1, "out"), Err(CircuitError::DuplicateLabel(_))));
        assert_eq!(c.qubit_for("out"), Some(2));
    }

    #[test]
    fn append_checks_width() {
        let mut a = Circuit::new(2);
        let b = Circuit::from_gates(3, [Gate::rz(Angle::PI, 2)]).unwrap();
        assert!(a.append(&b).is_err());
    }
}
