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

mod common;

use gala_core::layout::{random_connected_placement, route, routing_equivalent, CouplingMap};
use gala_core::qasm::{parse_qasm, to_qasm};
use gala_core::sim::{equivalent_up_to_global_phase, simulate, simulate_from, unitary_of};
use gala_core::synth::{build_core, builtin_spec, OperatorKind, Sign, Variant};
use gala_core::text::{parse_text, to_text};
use gala_core::{depth, gate_counts, lower_to_native, Angle, Basis, Circuit, Gate, GateKind};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn circuit(seed: u64, q: usize, g: usize) -> Circuit {
    common::random_circuit(&mut ChaCha8Rng::seed_from_u64(seed), q, g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn angle_text_round_trips(num in -1000i64..1000, den in 1i64..512) {
        let a = Angle::new(num, den);
        prop_assert_eq!(a.to_string().parse::<Angle>().unwrap(), a);
        prop_assert_eq!(a + Angle::new(2, 1), a);
        prop_assert_eq!((a + Angle::QUARTER_PI) - Angle::QUARTER_PI, a);
        prop_assert!(a.denominator() > 0);
    }

    #[test]
    fn counts_add_over_concatenation(s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = lower_to_native(&circuit(s1, 5, 30), Basis::Cnot);
        let b = lower_to_native(&circuit(s2, 5, 30), Basis::Cnot);
        let w = a.num_qubits().max(b.num_qubits());
        let a = a.remapped(w, |q| q).unwrap();
        let b = b.remapped(w, |q| q).unwrap();
        let (x1, x2) = gate_counts(&a).unwrap();
        let (y1, y2) = gate_counts(&b).unwrap();
        prop_assert_eq!(gate_counts(&a.then(&b).unwrap()).unwrap(), (x1 + y1, x2 + y2));
    }

    #[test]
    fn depth_is_bounded_by_length(seed in any::<u64>()) {
        let c = circuit(seed, 6, 40);
        prop_assert!(depth(&c) <= c.len());
        let chain: Vec<Gate> = c.gates().iter().map(|g| if g.is_two_qubit() { Gate::cnot(0, 1) } else { Gate::x(0) }).collect();
        let chain = Circuit::from_gates(2, chain).unwrap();
        prop_assert_eq!(depth(&chain), chain.len());
    }

    #[test]
    fn lowering_is_idempotent_and_native(seed in any::<u64>(), ecr in any::<bool>()) {
        let basis = if ecr { Basis::Ecr } else { Basis::Cnot };
        let once = lower_to_native(&circuit(seed, 6, 40), basis);
        prop_assert!(once.is_native());
        prop_assert_eq!(lower_to_native(&once, basis), once.clone());
        let wrong = if ecr { GateKind::Cnot } else { GateKind::Ecr };
        prop_assert_eq!(once.count_kind(|k| k == wrong), 0);
    }

    #[test]
    fn lowering_preserves_the_unitary(seed in any::<u64>(), ecr in any::<bool>()) {
        let basis = if ecr { Basis::Ecr } else { Basis::Cnot };
        let c = circuit(seed, 5, 30);
        let u = unitary_of(&c).unwrap();
        prop_assert!(equivalent_up_to_global_phase(&unitary_of(&lower_to_native(&c, basis)).unwrap(), &u, 1e-9));
    }

    #[test]
    fn two_qubit_count_ignores_basis(seed in any::<u64>()) {
        let c = circuit(seed, 6, 40);
        let a = gate_counts(&lower_to_native(&c, Basis::Cnot)).unwrap().1;
        let b = gate_counts(&lower_to_native(&c, Basis::Ecr)).unwrap().1;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn routing_preserves_the_unitary(seed in any::<u64>(), place in any::<u64>()) {
        let c = circuit(seed, 5, 30);
        let map = CouplingMap::path(7);
        let p = random_connected_placement(&map, c.num_qubits(), place).unwrap();
        let r = route(&c, &map, &p).unwrap();
        for g in r.circuit.gates().iter().filter(|g| g.is_two_qubit()) {
            prop_assert!(map.has_edge(g.qubits()[0], g.qubits()[1]));
        }
        prop_assert_eq!(r.circuit.count_kind(|k| k.arity() == 1), c.count_kind(|k| k.arity() == 1));
        prop_assert!(routing_equivalent(&c, &r, 1e-9).unwrap());
    }

    #[test]
    fn text_and_qasm_round_trip(seed in any::<u64>()) {
        let c = lower_to_native(&circuit(seed, 6, 40), Basis::Ecr);
        let t = parse_text(&to_text(&c)).unwrap();
        let q = parse_qasm(&to_qasm(&c)).unwrap();
        prop_assert_eq!(t.gates(), c.gates());
        prop_assert_eq!(q.gates(), c.gates());
    }

    #[test]
    fn simulation_composes(s1 in any::<u64>(), s2 in any::<u64>(), init in 0usize..16) {
        let a = circuit(s1, 4, 20).remapped(4, |q| q).unwrap();
        let b = circuit(s2, 4, 20).remapped(4, |q| q).unwrap();
        let whole = simulate(&a.then(&b).unwrap(), init).unwrap();
        let split = simulate_from(&b, simulate(&a, init).unwrap()).unwrap();
        for (x, y) in whole.amplitudes().iter().zip(split.amplitudes()) {
            prop_assert!((x - y).norm() < 1e-12);
        }
    }
}

/// Signed sum of the core's RZ angles along the all-ones input, kept exact.
fn all_ones_phase(c: &Circuit) -> Angle {
    let mut flipped = false;
    let mut total = Angle::ZERO;
    for g in c.gates() {
        match g.kind() {
            GateKind::Rz(a) => total = total + if flipped { -a } else { a },
            GateKind::Cnot => flipped = !flipped,
            _ => unreachable!(),
        }
    }
    total
}

#[test]
fn magnitude_halves_exactly() {
    let and = builtin_spec(OperatorKind::And, Variant::Hadamard);
    for n in 3..=62 {
        assert_eq!(and.magnitude_at(n), Angle::new(1, 1 << (n - 1)), "n={n}");
    }
}

#[test]
fn core_angles_stay_exact() {
    let and = builtin_spec(OperatorKind::And, Variant::Hadamard);
    for n in 3..=20 {
        let inputs: Vec<usize> = (0..n - 1).collect();
        let c = build_core(n, and.magnitude_at(n), and.signs, &inputs, n - 1).unwrap();
        for g in c.gates() {
            if let GateKind::Rz(a) = g.kind() {
                assert_eq!(a.denominator(), 1 << (n - 1));
            }
        }
        assert_eq!(all_ones_phase(&c), Angle::PI, "n={n}");
    }
    let c = build_core(3, Angle::QUARTER_PI, [Sign::Plus; 4], &[0, 1], 2).unwrap();
    assert_eq!(all_ones_phase(&c), Angle::ZERO);
}
