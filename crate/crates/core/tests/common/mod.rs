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

#![allow(dead_code)]

use gala_core::{Angle, Circuit, Gate};
use rand::{Rng, RngCore};

/// Random circuit over every gate kind, with angles on a 1/16 π grid.
pub fn random_circuit(rng: &mut impl RngCore, max_qubits: usize, max_gates: usize) -> Circuit {
    let n = rng.gen_range(2..=max_qubits);
    let len = rng.gen_range(1..=max_gates);
    let mut c = Circuit::new(n);
    for _ in 0..len {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        let g = match rng.gen_range(0..12) {
            0 => Gate::i(a),
            1 => Gate::x(a),
            2 => Gate::sx(a),
            3 => Gate::sxdg(a),
            4 => Gate::h(a),
            5 => Gate::rz(Angle::new(rng.gen_range(-16..=16), 16), a),
            6 | 7 => Gate::cnot(a, b),
            8 => Gate::swap(a, b),
            9 => Gate::ecr(a, b),
            10 => Gate::cv(a, b),
            _ => Gate::cvdg(a, b),
        };
        c.push(g).expect("indices in range");
    }
    c
}
