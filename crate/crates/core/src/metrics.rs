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

//! Gate counting, depth, and structural checks.

use crate::circuit::Circuit;
use crate::error::CircuitError;
use crate::gate::GateKind;

/// `(n1, n2)`: native single-qubit and native two-qubit gate counts.
///
/// Fails on the first non-native gate, naming its index.
pub fn gate_counts(c: &Circuit) -> Result<(usize, usize), CircuitError> {
    let mut n1 = 0;
    let mut n2 = 0;
    for (index, g) in c.gates().iter().enumerate() {
        match g.kind() {
            GateKind::I | GateKind::X | GateKind::SqrtX | GateKind::Rz(_) => n1 += 1,
            GateKind::Cnot | GateKind::Ecr => n2 += 1,
            k => return Err(CircuitError::NonNative { index, kind: k.to_string() }),
        }
    }
    Ok((n1, n2))
}

/// Longest chain of gates where consecutive gates share a qubit.
pub fn depth(c: &Circuit) -> usize {
    let mut frontier = vec![0usize; c.num_qubits()];
    let mut deepest = 0;
    for g in c.gates() {
        let level = g.qubits().iter().map(|&q| frontier[q]).max().unwrap_or(0) + 1;
        for &q in g.qubits() {
            frontier[q] = level;
        }
        deepest = deepest.max(level);
    }
    deepest
}

/// Whether an RZ/CNOT core reads the same forwards and backwards by gate kind,
/// pivoting on a central CNOT.
pub fn is_palindromic_core(c: &Circuit) -> bool {
    let gates = c.gates();
    if gates.len() % 2 == 0 {
        return false;
    }
    if !gates.iter().all(|g| matches!(g.kind(), GateKind::Rz(_) | GateKind::Cnot)) {
        return false;
    }
    if gates[gates.len() / 2].kind() != GateKind::Cnot {
        return false;
    }
    gates
        .iter()
        .zip(gates.iter().rev())
        .all(|(a, b)| a.kind().shape() == b.kind().shape())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::Angle;
    use crate::gate::Gate;

    #[test]
    fn empty_circuit() {
        let c = Circuit::new(3);
        assert_eq!(gate_counts(&c).unwrap(), (0, 0));
        assert_eq!(depth(&c), 0);
    }

    #[test]
    fn serial_cnots() {
        let c = Circuit::from_gates(2, [Gate::cnot(0, 1), Gate::cnot(0, 1), Gate::cnot(1, 0)]).unwrap();
        assert_eq!(depth(&c), 3);
        assert_eq!(gate_counts(&c).unwrap(), (0, 3));
    }

    #[test]
    fn parallel_gates_share_a_layer() {
        let c = Circuit::from_gates(4, [Gate::x(0), Gate::x(1), Gate::cnot(2, 3), Gate::cnot(0, 1)]).unwrap();
        assert_eq!(depth(&c), 2);
    }

    #[test]
    fn non_native_is_reported_by_index() {
        let c = Circuit::from_gates(2, [Gate::x(0), Gate::h(1)]).unwrap();
        assert_eq!(
            gate_counts(&c),
            Err(CircuitError::NonNative { index: 1, kind: "H".into() })
        );
    }

    #[test]
    fn rz_then_cnot_is_not_palindromic() {
        let c = Circuit::from_gates(2, [Gate::rz(Angle::PI, 1), Gate::cnot(0, 1)]).unwrap();
        assert!(!is_palindromic_core(&c));
    }
}
