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

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::error::CircuitError;

/// Gate kinds understood by the toolkit.
///
/// `I`, `X`, `SqrtX`, `Rz`, `Cnot` and `Ecr` are native. Everything else is a
/// macro that [`crate::lower`] rewrites before costs are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GateKind {
    I,
    X,
    SqrtX,
    SqrtXDagger,
    Rz(Angle),
    H,
    /// Two-qubit, operands are (control, target).
    Cnot,
    Swap,
    /// Echoed cross-resonance, `(X⊗I - Y⊗X)/√2` with the first operand on the left.
    Ecr,
    /// Controlled-√X, operands are (control, target).
    MacroV,
    /// Controlled-√X†, operands are (control, target).
    MacroVDagger,
}

impl GateKind {
    pub fn arity(self) -> usize {
        match self {
            GateKind::Cnot
            | GateKind::Swap
            | GateKind::Ecr
            | GateKind::MacroV
            | GateKind::MacroVDagger => 2,
            _ => 1,
        }
    }

    pub fn is_native(self) -> bool {
        matches!(
            self,
            GateKind::I | GateKind::X | GateKind::SqrtX | GateKind::Rz(_) | GateKind::Cnot | GateKind::Ecr
        )
    }

    /// Mnemonic used by the circuit text format.
    pub fn name(self) -> &'static str {
        match self {
            GateKind::I => "I",
            GateKind::X => "X",
            GateKind::SqrtX => "SX",
            GateKind::SqrtXDagger => "SXDG",
            GateKind::Rz(_) => "RZ",
            GateKind::H => "H",
            GateKind::Cnot => "CNOT",
            GateKind::Swap => "SWAP",
            GateKind::Ecr => "ECR",
            GateKind::MacroV => "CV",
            GateKind::MacroVDagger => "CVDG",
        }
    }

    /// Kind with the angle stripped, for structural comparisons.
    pub fn shape(self) -> GateKind {
        match self {
            GateKind::Rz(_) => GateKind::Rz(Angle::ZERO),
            k => k,
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateKind::Rz(a) => write!(f, "RZ({a})"),
            k => f.write_str(k.name()),
        }
    }
}

/// One gate instance: a kind plus its ordered qubit operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gate {
    kind: GateKind,
    qubits: [usize; 2],
}

impl Gate {
    /// Validates arity and operand distinctness.
    pub fn new(kind: GateKind, qubits: &[usize]) -> Result<Self, CircuitError> {
        if qubits.len() != kind.arity() {
            return Err(CircuitError::Arity {
                kind: kind.name().to_string(),
                expected: kind.arity(),
                got: qubits.len(),
            });
        }
        if qubits.len() == 2 && qubits[0] == qubits[1] {
            return Err(CircuitError::DuplicateQubit { kind: kind.name().to_string(), qubit: qubits[0] });
        }
        let mut q = [qubits[0], usize::MAX];
        if qubits.len() == 2 {
            q[1] = qubits[1];
        }
        Ok(Gate { kind, qubits: q })
    }

    pub fn i(q: usize) -> Self {
        Gate { kind: GateKind::I, qubits: [q, usize::MAX] }
    }

    pub fn x(q: usize) -> Self {
        Gate { kind: GateKind::X, qubits: [q, usize::MAX] }
    }

    pub fn sx(q: usize) -> Self {
        Gate { kind: GateKind::SqrtX, qubits: [q, usize::MAX] }
    }

    pub fn sxdg(q: usize) -> Self {
        Gate { kind: GateKind::SqrtXDagger, qubits: [q, usize::MAX] }
    }

    pub fn rz(angle: Angle, q: usize) -> Self {
        Gate { kind: GateKind::Rz(angle), qubits: [q, usize::MAX] }
    }

    pub fn h(q: usize) -> Self {
        Gate { kind: GateKind::H, qubits: [q, usize::MAX] }
    }

    /// Panics if `control == target`.
    pub fn cnot(control: usize, target: usize) -> Self {
        Self::two(GateKind::Cnot, control, target)
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Self::two(GateKind::Swap, a, b)
    }

    pub fn ecr(a: usize, b: usize) -> Self {
        Self::two(GateKind::Ecr, a, b)
    }

    pub fn cv(control: usize, target: usize) -> Self {
        Self::two(GateKind::MacroV, control, target)
    }

    pub fn cvdg(control: usize, target: usize) -> Self {
        Self::two(GateKind::MacroVDagger, control, target)
    }

    fn two(kind: GateKind, a: usize, b: usize) -> Self {
        assert_ne!(a, b, "{} operands must be distinct", kind.name());
        Gate { kind, qubits: [a, b] }
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn qubits(&self) -> &[usize] {
        &self.qubits[..self.kind.arity()]
    }

    pub fn is_two_qubit(&self) -> bool {
        self.kind.arity() == 2
    }

    pub fn acts_on(&self, q: usize) -> bool {
        self.qubits().contains(&q)
    }

    /// Same gate with every operand passed through `f`.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> Gate {
        let mut qubits = self.qubits;
        for q in qubits.iter_mut().take(self.kind.arity()) {
            *q = f(*q);
        }
        Gate { kind: self.kind, qubits }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.name())?;
        let q = self.qubits();
        write!(f, " {}", q[0])?;
        if q.len() == 2 {
            write!(f, ",{}", q[1])?;
        }
        if let GateKind::Rz(a) = self.kind {
            write!(f, " angle={a}")?;
        }
        Ok(())
    }
}
