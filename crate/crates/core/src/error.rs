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

use thiserror::Error;

/// A text-format problem, carrying the 1-based line it was found on
/// (0 when the input has no line structure).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }

    pub(crate) fn at_line(mut self, line: usize) -> Self {
        self.line = line;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("gate {index} ({kind}) is not a native gate")]
    NonNative { index: usize, kind: String },
    #[error("{kind} acts on {expected} qubit(s), got {got}")]
    Arity { kind: String, expected: usize, got: usize },
    #[error("{kind} repeats qubit {qubit}")]
    DuplicateQubit { kind: String, qubit: usize },
    #[error("qubit {qubit} is out of range for a {num_qubits}-qubit circuit")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },
    #[error("role `{0}` labels more than one qubit")]
    DuplicateLabel(String),
    #[error("cannot concatenate a {right}-qubit circuit onto a {left}-qubit circuit")]
    WidthMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("{what} needs at least {min} qubits, got {got}")]
    TooFewQubits { what: String, min: usize, got: usize },
    #[error("{op} is only defined for n = 3 (requested n = {n})")]
    UnsupportedArity { op: String, n: usize },
    #[error("unsupported operator: {0}")]
    UnsupportedOperator(String),
    #[error("invalid qubit assignment: {0}")]
    InvalidQubits(String),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("placement does not cover logical qubit {0}")]
    Unplaced(usize),
    #[error("placement maps two logical qubits onto physical qubit {0}")]
    NotInjective(usize),
    #[error("physical qubit {qubit} does not exist on a {num_physical}-qubit device")]
    NoSuchPhysical { qubit: usize, num_physical: usize },
    #[error("physical qubits {0} and {1} are not connected")]
    Disconnected(usize, usize),
    #[error("self-loop on qubit {0}")]
    SelfLoop(usize),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("{requested} qubits exceeds the simulator cap of {cap}")]
    TooManyQubits { requested: usize, cap: usize },
    #[error("basis state {state} is out of range for {num_qubits} qubits")]
    BadBasisState { state: usize, num_qubits: usize },
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TqcError {
    #[error("report for `{0}` does not describe a GALA operator")]
    NotGala(String),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error(transparent)]
    Synth(#[from] SynthError),
}

/// Any error the toolkit can produce, used at the CLI boundary.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Synth(#[from] SynthError),
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error(transparent)]
    Tqc(#[from] TqcError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
