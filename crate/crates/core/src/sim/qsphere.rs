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

use std::f64::consts::TAU;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use super::state::StateVector;

/// Probabilities below this are treated as absent from the q-sphere.
const PRESENCE: f64 = 1e-12;

/// One populated basis state of a q-sphere view.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QSphereEntry {
    pub basis: usize,
    /// Ket label, most significant qubit first: `|q_{n-1} … q_0⟩`.
    pub label: String,
    pub probability: f64,
    /// Phase in `[0, 2π)` relative to the first populated amplitude.
    pub phase: f64,
}

pub fn ket_label(state: usize, num_qubits: usize) -> String {
    let bits: String = (0..num_qubits).rev().map(|q| if state >> q & 1 == 1 { '1' } else { '0' }).collect();
    format!("|{bits}⟩")
}

pub fn qsphere_data(s: &StateVector) -> Vec<QSphereEntry> {
    let mut reference = None;
    let mut out = Vec::new();
    for (i, a) in s.amplitudes().iter().enumerate() {
        let p = a.norm_sqr();
        if p <= PRESENCE {
            continue;
        }
        let base = *reference.get_or_insert(a.arg());
        let mut phase = (a.arg() - base).rem_euclid(TAU);
        // snap values a hair below 2π back to 0
        if TAU - phase < 1e-9 {
            phase = 0.0;
        }
        out.push(QSphereEntry { basis: i, label: ket_label(i, s.num_qubits()), probability: p, phase });
    }
    out
}

/// Tab-separated dump: `basis`, `probability`, `phase` columns with a header.
pub fn write_qsphere_table<W: Write>(mut w: W, entries: &[QSphereEntry]) -> io::Result<()> {
    writeln!(w, "basis\tprobability\tphase")?;
    for e in entries {
        writeln!(w, "{}\t{:.12}\t{:.12}", e.label, e.probability, e.phase)?;
    }
    Ok(())
}
