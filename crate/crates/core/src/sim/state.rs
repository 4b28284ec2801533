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

use num_complex::Complex64;

use super::matrix::{gate_matrix, Matrix};
use crate::circuit::Circuit;
use crate::error::SimError;
use crate::gate::Gate;

/// Largest register [`simulate`] accepts.
pub const SIMULATOR_QUBIT_CAP: usize = 16;

/// Norm drift allowed per gate application; anything larger is a simulator bug.
const NORM_DRIFT_PER_GATE: f64 = 1e-12;

/// Dense state over `num_qubits`; amplitude index bit `q` is qubit `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn basis(num_qubits: usize, state: usize) -> Result<Self, SimError> {
        if num_qubits > SIMULATOR_QUBIT_CAP {
            return Err(SimError::TooManyQubits { requested: num_qubits, cap: SIMULATOR_QUBIT_CAP });
        }
        let dim = 1usize << num_qubits;
        if state >= dim {
            return Err(SimError::BadBasisState { state, num_qubits });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[state] = Complex64::new(1.0, 0.0);
        Ok(StateVector { num_qubits, amplitudes })
    }

    /// Wraps raw amplitudes; the caller is responsible for normalisation.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Self {
        assert!(amplitudes.len().is_power_of_two(), "amplitude count must be a power of two");
        let num_qubits = amplitudes.len().trailing_zeros() as usize;
        StateVector { num_qubits, amplitudes }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn amplitude(&self, state: usize) -> Complex64 {
        self.amplitudes[state]
    }

    pub fn probability(&self, state: usize) -> f64 {
        self.amplitudes[state].norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Probability that measuring `qubit` yields 1.
    pub fn probability_one(&self, qubit: usize) -> f64 {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(i, _)| i >> qubit & 1 == 1)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// Index and probability of the most likely basis state (lowest index on ties).
    pub fn most_likely(&self) -> (usize, f64) {
        let mut best = (0, -1.0);
        for (i, a) in self.amplitudes.iter().enumerate() {
            let p = a.norm_sqr();
            if p > best.1 + 1e-15 {
                best = (i, p);
            }
        }
        best
    }

    pub fn apply(&mut self, gate: &Gate) {
        let m = gate_matrix(gate.kind());
        match gate.qubits() {
            [q] => self.apply_one(&m, *q),
            [a, b] => self.apply_two(&m, *a, *b),
            _ => unreachable!("gates act on one or two qubits"),
        }
    }

    fn apply_one(&mut self, m: &Matrix, q: usize) {
        let bit = 1usize << q;
        let (m00, m01, m10, m11) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
        for i in 0..self.amplitudes.len() {
            if i & bit != 0 {
                continue;
            }
            let a0 = self.amplitudes[i];
            let a1 = self.amplitudes[i | bit];
            self.amplitudes[i] = m00 * a0 + m01 * a1;
            self.amplitudes[i | bit] = m10 * a0 + m11 * a1;
        }
    }

    fn apply_two(&mut self, m: &Matrix, a: usize, b: usize) {
        let (ba, bb) = (1usize << a, 1usize << b);
        // local index = bit(a) * 2 + bit(b)
        let offsets = [0, bb, ba, ba | bb];
        for i in 0..self.amplitudes.len() {
            if i & (ba | bb) != 0 {
                continue;
            }
            let v: [Complex64; 4] = std::array::from_fn(|k| self.amplitudes[i | offsets[k]]);
            for r in 0..4 {
                let mut acc = Complex64::new(0.0, 0.0);
                for (k, vk) in v.iter().enumerate() {
                    acc += m[(r, k)] * vk;
                }
                self.amplitudes[i | offsets[r]] = acc;
            }
        }
    }
}

/// Runs `c` on the basis state `init`.
pub fn simulate(c: &Circuit, init: usize) -> Result<StateVector, SimError> {
    let state = StateVector::basis(c.num_qubits(), init)?;
    simulate_from(c, state)
}

/// Runs `c` on an arbitrary starting state of matching width.
pub fn simulate_from(c: &Circuit, mut state: StateVector) -> Result<StateVector, SimError> {
    if c.num_qubits() > SIMULATOR_QUBIT_CAP {
        return Err(SimError::TooManyQubits { requested: c.num_qubits(), cap: SIMULATOR_QUBIT_CAP });
    }
    assert_eq!(state.num_qubits, c.num_qubits(), "state and circuit widths differ");
    for g in c.gates() {
        if cfg!(debug_assertions) {
            let before = state.norm();
            state.apply(g);
            assert!((state.norm() - before).abs() <= NORM_DRIFT_PER_GATE, "norm drifted applying {g}");
        } else {
            state.apply(g);
        }
    }
    Ok(state)
}
