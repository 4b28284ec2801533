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

use std::collections::BTreeSet;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::map::CouplingMap;
use super::placement::Placement;
use crate::circuit::Circuit;
use crate::error::{LayoutError, SimError};
use crate::gate::Gate;
use crate::sim::{equivalent_up_to_global_phase, unitary_of, Matrix};

/// Routed circuit over physical qubits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Routed {
    pub circuit: Circuit,
    /// Inserted SWAPs.
    pub xc: usize,
    /// Logical-to-physical assignment before the first gate.
    pub initial: Vec<usize>,
    /// `positions[p]` is where the state that started on physical `p` ends.
    pub positions: Vec<usize>,
}

impl Routed {
    /// Logical-to-physical assignment after the last gate.
    pub fn final_layout(&self) -> Vec<usize> {
        self.initial.iter().map(|&p| self.positions[p]).collect()
    }
}

/// Greedy router: a two-qubit gate on non-adjacent qubits moves its first
/// operand along the lexicographically smallest shortest path until it
/// neighbours the second.
pub fn route(c: &Circuit, map: &CouplingMap, p: &Placement) -> Result<Routed, LayoutError> {
    if p.len() < c.num_qubits() {
        return Err(LayoutError::Unplaced(p.len()));
    }
    Placement::new(p.physical.clone(), map).map(|_| ())?;
    let np = map.num_physical();
    let mut l2p = p.physical.clone();
    // which physical position holds the state that started on each one
    let mut holder: Vec<usize> = (0..np).collect();
    let mut out = Circuit::new(np);
    let mut xc = 0;
    for g in c.gates() {
        if g.is_two_qubit() {
            let (a, b) = (g.qubits()[0], g.qubits()[1]);
            let (pa, pb) = (l2p[a], l2p[b]);
            if !map.has_edge(pa, pb) {
                let path = map.shortest_path(pa, pb).ok_or(LayoutError::Disconnected(pa, pb))?;
                for w in path[..path.len() - 1].windows(2) {
                    let (x, y) = (w[0], w[1]);
                    out.push(Gate::swap(x, y))?;
                    xc += 1;
                    for q in l2p.iter_mut() {
                        if *q == x {
                            *q = y;
                        } else if *q == y {
                            *q = x;
                        }
                    }
                    holder.swap(x, y);
                }
            }
        }
        out.push(g.remap(|q| l2p[q]))?;
    }
    for (q, role) in c.labels() {
        out.set_label(p.physical[*q], role.clone())?;
    }
    let mut positions = vec![0; np];
    for (pos, &orig) in holder.iter().enumerate() {
        positions[orig] = pos;
    }
    Ok(Routed { circuit: out, xc, initial: p.physical[..c.num_qubits()].to_vec(), positions })
}

/// Checks `routed` against `original` on the physical qubits it touches,
/// accounting for the final wire permutation.
pub fn routing_equivalent(original: &Circuit, routed: &Routed, tol: f64) -> Result<bool, SimError> {
    let mut touched: BTreeSet<usize> = routed.initial.iter().copied().collect();
    for g in routed.circuit.gates() {
        touched.extend(g.qubits().iter().copied());
    }
    let touched: Vec<usize> = touched.into_iter().collect();
    let local = |p: usize| touched.binary_search(&p).expect("touched qubit");
    let m = touched.len();
    let got = unitary_of(&routed.circuit.remapped(m, local)?)?;
    let embedded = unitary_of(&original.remapped(m, |q| local(routed.initial[q]))?)?;
    // permuting wires moves row x of the embedded unitary to row y
    let dim = 1usize << m;
    let targets: Vec<usize> = touched.iter().map(|&p| local(routed.positions[p])).collect();
    let mut expected = Matrix::zeros(dim);
    for j in 0..dim {
        let col = embedded.column(j);
        let mut moved = vec![Complex64::new(0.0, 0.0); dim];
        for (x, a) in col.into_iter().enumerate() {
            let y = targets.iter().enumerate().fold(0, |y, (i, &t)| y | (x >> i & 1) << t);
            moved[y] = a;
        }
        expected.set_column(j, &moved);
    }
    Ok(equivalent_up_to_global_phase(&got, &expected, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::GateKind;

    #[test]
    fn endpoints_of_a_path_need_one_swap() {
        let m = CouplingMap::path(3);
        let c = Circuit::from_gates(2, [Gate::cnot(0, 1)]).unwrap();
        let p = Placement::new(vec![0, 2], &m).unwrap();
        let r = route(&c, &m, &p).unwrap();
        assert_eq!(r.xc, 1);
        assert_eq!(r.circuit.gates(), [Gate::swap(0, 1), Gate::cnot(1, 2)]);
        assert_eq!(r.final_layout(), [1, 2]);
        assert!(routing_equivalent(&c, &r, 1e-9).unwrap());
    }

    #[test]
    fn single_qubit_count_is_unchanged() {
        let m = CouplingMap::path(4);
        let c = Circuit::from_gates(4, [Gate::h(0), Gate::cnot(0, 3), Gate::rz(crate::Angle::QUARTER_PI, 3), Gate::cnot(3, 0)]).unwrap();
        let r = route(&c, &m, &Placement::new(vec![0, 1, 2, 3], &m).unwrap()).unwrap();
        let ones = |c: &Circuit| c.count_kind(|k| k.arity() == 1);
        assert_eq!(ones(&r.circuit), ones(&c));
        assert_eq!(r.circuit.count_kind(|k| k == GateKind::Swap), r.xc);
        assert!(routing_equivalent(&c, &r, 1e-9).unwrap());
    }

    #[test]
    fn disconnected_pair_is_an_error() {
        let m = CouplingMap::new(3, [(0, 1)]).unwrap();
        let c = Circuit::from_gates(2, [Gate::cnot(0, 1)]).unwrap();
        let p = Placement { physical: vec![0, 2], classification: super::super::Classification::CriticalN, swap_estimate: 0 };
        assert!(matches!(route(&c, &m, &p), Err(LayoutError::Disconnected(..))));
    }
}
