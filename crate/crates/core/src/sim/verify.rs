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

use num_complex::Complex64;

use super::matrix::Matrix;
use super::state::{simulate, simulate_from, StateVector};
use crate::circuit::Circuit;
use crate::error::SimError;

/// Largest register [`unitary_of`] accepts.
pub const UNITARY_QUBIT_CAP: usize = 10;

/// Full unitary of `c`, built one column (basis input) at a time.
pub fn unitary_of(c: &Circuit) -> Result<Matrix, SimError> {
    let n = c.num_qubits();
    if n > UNITARY_QUBIT_CAP {
        return Err(SimError::TooManyQubits { requested: n, cap: UNITARY_QUBIT_CAP });
    }
    let dim = 1usize << n;
    let mut u = Matrix::zeros(dim);
    for j in 0..dim {
        let s = simulate(c, j)?;
        u.set_column(j, s.amplitudes());
    }
    Ok(u)
}

/// `min_φ ‖U − e^{iφ}V‖_F ≤ tol`, with φ taken from the largest-magnitude
/// entry of `v`.
pub fn equivalent_up_to_global_phase(u: &Matrix, v: &Matrix, tol: f64) -> bool {
    if u.dim() != v.dim() {
        return false;
    }
    let Some((k, _)) = v
        .entries()
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.norm_sqr().total_cmp(&b.1.norm_sqr()))
    else {
        return true;
    };
    let (uk, vk) = (u.entries()[k], v.entries()[k]);
    if vk.norm() == 0.0 {
        return u.frobenius_norm() <= tol;
    }
    if uk.norm() == 0.0 {
        return false;
    }
    let phase = (uk / vk) / (uk / vk).norm();
    u.sub(&v.scale(phase)).frobenius_norm() <= tol
}

/// One truth-table row: most probable `out` bit and how likely it was.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruthRow {
    pub out: u8,
    pub probability: f64,
}

/// Sweeps every assignment of `inputs` (bit `i` of the key drives
/// `inputs[i]`) with `out_qubit` prepared in `initial_out` and every other
/// qubit in |0⟩.
pub fn truth_table(
    c: &Circuit,
    inputs: &[usize],
    out_qubit: usize,
    initial_out: u8,
) -> Result<BTreeMap<usize, TruthRow>, SimError> {
    let mut table = BTreeMap::new();
    for assignment in 0..(1usize << inputs.len()) {
        let mut init = (initial_out as usize & 1) << out_qubit;
        for (i, &q) in inputs.iter().enumerate() {
            init |= (assignment >> i & 1) << q;
        }
        let s = simulate(c, init)?;
        let p1 = s.probability_one(out_qubit);
        let row = if p1 > 0.5 {
            TruthRow { out: 1, probability: p1 }
        } else {
            TruthRow { out: 0, probability: 1.0 - p1 }
        };
        table.insert(assignment, row);
    }
    Ok(table)
}

/// For every basis input, the most likely output basis state and its
/// probability. A classical reversible circuit maps each row with
/// probability 1.
pub fn basis_permutation(c: &Circuit) -> Result<Vec<(usize, f64)>, SimError> {
    (0..1usize << c.num_qubits())
        .map(|x| simulate(c, x).map(|s| s.most_likely()))
        .collect()
}

/// Applies `c` to the superposition given by `amplitudes`.
pub fn evolve(c: &Circuit, amplitudes: Vec<Complex64>) -> Result<StateVector, SimError> {
    simulate_from(c, StateVector::from_amplitudes(amplitudes))
}
