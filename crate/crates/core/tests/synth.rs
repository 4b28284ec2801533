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

use std::f64::consts::FRAC_PI_2;

use gala_core::sim::{basis_permutation, evolve, simulate, truth_table, unitary_of, equivalent_up_to_global_phase, Matrix};
use gala_core::synth::*;
use gala_core::Circuit;
use num_complex::Complex64;

fn classical(kind: OperatorKind, x: usize, k: usize) -> bool {
    let bit = |i: usize| x >> i & 1 == 1;
    match kind {
        OperatorKind::And => (0..k).all(bit),
        OperatorKind::Nand => !(0..k).all(bit),
        OperatorKind::Or => (0..k).any(bit),
        OperatorKind::Nor => !(0..k).any(bit),
        OperatorKind::Implication => !bit(0) || bit(1),
        OperatorKind::Inhibition => bit(0) && !bit(1),
        OperatorKind::Mcz => unreachable!(),
    }
}

fn passes(spec: &OperatorSpec, n: usize) -> bool {
    let req = GalaRequest::standard(spec.clone(), n);
    let c = build_operator(&req).unwrap();
    if spec.kind == OperatorKind::Mcz {
        return [0u8, 1].iter().all(|&o| {
            truth_table(&c, &req.inputs, req.out, o)
                .unwrap()
                .values()
                .all(|r| r.out == o && r.probability >= 1.0 - 1e-10)
        });
    }
    truth_table(&c, &req.inputs, req.out, 0)
        .unwrap()
        .iter()
        .all(|(&x, r)| (r.out == 1) == classical(spec.kind, x, n - 1) && r.probability >= 1.0 - 1e-10)
}

#[test]
fn table1_boolean_operators_at_three_qubits() {
    for spec in table1().iter().filter(|s| s.kind != OperatorKind::Mcz) {
        assert!(passes(spec, 3), "{}", spec.kind);
    }
}

#[test]
fn nary_operators_up_to_seven_qubits() {
    for kind in [OperatorKind::And, OperatorKind::Nand, OperatorKind::Or, OperatorKind::Nor] {
        for n in 4..=7 {
            assert!(passes(&builtin_spec(kind, Variant::Hadamard), n), "{kind} n={n}");
        }
    }
}

#[test]
fn table2_pass_fail_matches_labels() {
    for spec in table2() {
        assert_eq!(passes(&spec, 3), spec.expected_pass, "{}", spec.kind);
    }
}

#[test]
fn five_qubit_or_truth_table() {
    let c = build_operator(&GalaRequest::standard(builtin_spec(OperatorKind::Or, Variant::Hadamard), 5)).unwrap();
    let t = truth_table(&c, &[0, 1, 2, 3], 4, 0).unwrap();
    assert_eq!(t.len(), 16);
    for (x, r) in t {
        assert_eq!(r.out, u8::from(x != 0));
    }
}

#[test]
fn operators_on_scattered_qubits() {
    let spec = builtin_spec(OperatorKind::And, Variant::Hadamard);
    let req = GalaRequest { spec, n: 4, inputs: vec![5, 1, 3], out: 0 };
    let c = build_operator(&req).unwrap();
    assert_eq!(c.num_qubits(), 6);
    let t = truth_table(&c, &req.inputs, 0, 0).unwrap();
    for (x, r) in t {
        assert_eq!(r.out, u8::from(x == 7));
    }
}

/// Fixed-phase reference for controlled-√X: ideal matrix on (control, target)
/// with the control as the more significant bit of the local index.
fn ideal_controlled(controls: usize, dagger: bool) -> Matrix {
    let half = Complex64::new(0.5, 0.0);
    let (p, m) = if dagger {
        (half - Complex64::i() * 0.5, half + Complex64::i() * 0.5)
    } else {
        (half + Complex64::i() * 0.5, half - Complex64::i() * 0.5)
    };
    let n = controls + 1;
    let dim = 1usize << n;
    let mut u = Matrix::identity(dim);
    // target is qubit `controls` (the top bit); controls are qubits 0..controls
    let all = (1usize << controls) - 1;
    let (a, b) = (all, all | 1 << controls);
    let mut col_a = vec![Complex64::new(0.0, 0.0); dim];
    col_a[a] = p;
    col_a[b] = m;
    let mut col_b = vec![Complex64::new(0.0, 0.0); dim];
    col_b[a] = m;
    col_b[b] = p;
    u.set_column(a, &col_a);
    u.set_column(b, &col_b);
    u
}

#[test]
fn two_qubit_controlled_v_matches_ideal_unitary() {
    let uv = unitary_of(&compose_controlled_v(2, &[0], 1).unwrap()).unwrap();
    let uvd = unitary_of(&compose_controlled_v_dagger(2, &[0], 1).unwrap()).unwrap();
    assert!(equivalent_up_to_global_phase(&uv, &ideal_controlled(1, false), 1e-9));
    assert!(equivalent_up_to_global_phase(&uvd, &ideal_controlled(1, true), 1e-9));
}

#[test]
fn wider_controlled_v_never_disturbs_controls() {
    for n in 3..=5 {
        let controls: Vec<usize> = (0..n - 1).collect();
        let u = unitary_of(&compose_controlled_v(n, &controls, n - 1).unwrap()).unwrap();
        let mask = (1usize << (n - 1)) - 1;
        for x in 0..1usize << n {
            for y in 0..1usize << n {
                if x & mask != y & mask {
                    assert!(u[(y, x)].norm() < 1e-12);
                }
            }
        }
    }
}

fn relative_phase(amplitudes: &[Complex64], lo: usize, hi: usize) -> f64 {
    (amplitudes[hi] / amplitudes[lo]).arg().rem_euclid(std::f64::consts::TAU)
}

#[test]
fn controlled_v_superposition_amplitudes() {
    for n in 2..=5 {
        let controls: Vec<usize> = (0..n - 1).collect();
        let t = n - 1;
        let all = (1usize << (n - 1)) - 1;
        let (lo, hi) = (all, all | 1 << t);
        for (dagger, from0, from1) in [(false, 3.0 * FRAC_PI_2, FRAC_PI_2), (true, FRAC_PI_2, 3.0 * FRAC_PI_2)] {
            let c = if dagger {
                compose_controlled_v_dagger(n, &controls, t).unwrap()
            } else {
                compose_controlled_v(n, &controls, t).unwrap()
            };
            for (init, want) in [(lo, from0), (hi, from1)] {
                let s = simulate(&c, init).unwrap();
                let a = s.amplitudes();
                assert!((s.probability(lo) - 0.5).abs() < 1e-9);
                assert!((s.probability(hi) - 0.5).abs() < 1e-9);
                assert!((relative_phase(a, lo, hi) - want).abs() < 1e-9, "n={n} dagger={dagger}");
            }
            // any zero control leaves the target basis state alone
            for x in 0..all {
                let s = simulate(&c, x).unwrap();
                assert!((s.probability(x) - 1.0).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn fredkin_is_controlled_swap() {
    for n in 3..=4 {
        let controls: Vec<usize> = (0..n - 2).collect();
        let (o0, o1) = (n - 2, n - 1);
        let c = compose_fredkin(n, &controls, o0, o1).unwrap();
        let all = (1usize << (n - 2)) - 1;
        for (x, (y, p)) in basis_permutation(&c).unwrap().into_iter().enumerate() {
            let b0 = x >> o0 & 1;
            let b1 = x >> o1 & 1;
            let want = if x & all == all { (x & all) | b1 << o0 | b0 << o1 } else { x };
            assert_eq!(y, want, "n={n} x={x}");
            assert!((p - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn miller_swaps_the_two_extreme_states() {
    for n in 3..=5 {
        let inputs: Vec<usize> = (0..n - 1).collect();
        let out = n - 1;
        let c = compose_miller(n, &inputs, out).unwrap();
        let ones = (1usize << (n - 1)) - 1;
        let a = ones; // out = 0, inputs all one
        let b = 1 << out; // out = 1, inputs all zero
        for (x, (y, p)) in basis_permutation(&c).unwrap().into_iter().enumerate() {
            let want = if x == a { b } else if x == b { a } else { x };
            assert_eq!(y, want, "n={n} x={x}");
            assert!((p - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn miller_three_qubit_permutation_fixture() {
    let c = compose_miller(3, &[0, 1], 2).unwrap();
    let perm: Vec<usize> = basis_permutation(&c).unwrap().into_iter().map(|(y, _)| y).collect();
    assert_eq!(perm, [0, 1, 2, 4, 3, 5, 6, 7]);
}

#[test]
fn mcz_is_unitary_and_keeps_out() {
    let c = build_operator(&GalaRequest::standard(builtin_spec(OperatorKind::Mcz, Variant::Hadamard), 3)).unwrap();
    let u = unitary_of(&c).unwrap();
    let id = Matrix::identity(8);
    assert!((&u.adjoint() * &u).sub(&id).frobenius_norm() < 1e-9);
    assert!(passes(&builtin_spec(OperatorKind::Mcz, Variant::Hadamard), 3));
}

fn uniform_inputs(c: &Circuit, k: usize) -> Vec<Complex64> {
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << c.num_qubits()];
    let w = 1.0 / ((1usize << k) as f64).sqrt();
    for x in 0..1usize << k {
        amps[x] = Complex64::new(w, 0.0);
    }
    amps
}

#[test]
fn and_output_phases_are_quarter_turns() {
    let c = build_operator(&GalaRequest::standard(builtin_spec(OperatorKind::And, Variant::Hadamard), 3)).unwrap();
    let s = evolve(&c, uniform_inputs(&c, 2)).unwrap();
    let entries = gala_core::sim::qsphere_data(&s);
    assert_eq!(entries.len(), 4);
    let total: f64 = entries.iter().map(|e| e.probability).sum();
    assert!((total - 1.0).abs() < 1e-10);
    for e in &entries {
        let quarter = e.phase / FRAC_PI_2;
        assert!((quarter - quarter.round()).abs() < 1e-9, "{} {}", e.label, e.phase);
        assert_ne!(quarter.round() as i64, 2, "{} carries a phase of pi", e.label);
    }
}

#[test]
fn and_is_a_phase_toffoli() {
    for n in 3..=6 {
        let c = build_operator(&GalaRequest::standard(builtin_spec(OperatorKind::And, Variant::Hadamard), n)).unwrap();
        let ones = (1usize << (n - 1)) - 1;
        for x in 0..1usize << n {
            let y = if x & ones == ones { x ^ 1 << (n - 1) } else { x };
            let s = simulate(&c, x).unwrap();
            assert!(s.amplitude(y).norm() >= 1.0 - 1e-10, "n={n} x={x}");
        }
    }
}

#[test]
fn and_self_destructs_when_a_control_is_zero() {
    let c = build_operator(&GalaRequest::standard(builtin_spec(OperatorKind::And, Variant::Hadamard), 4)).unwrap();
    for x in 0..7 {
        let s = simulate(&c, x).unwrap();
        assert!(1.0 - s.probability_one(3) >= 1.0 - 1e-10);
    }
}

/// Relative phase of each output basis state for the 3-qubit H-variant MCZ,
/// in quarter turns, recorded from simulation.
#[test]
fn mcz_phase_fixture() {
    let c = build_operator(&GalaRequest::standard(builtin_spec(OperatorKind::Mcz, Variant::Hadamard), 3)).unwrap();
    let u = unitary_of(&c).unwrap();
    let reference = u[(0, 0)];
    let quarters: Vec<i64> = (0..8)
        .map(|x| {
            let a = u[(x, x)];
            assert!((a.norm() - 1.0).abs() < 1e-10);
            let q = (a / reference).arg().rem_euclid(std::f64::consts::TAU) / FRAC_PI_2;
            assert!((q - q.round()).abs() < 1e-9);
            q.round() as i64 % 4
        })
        .collect();
    assert_eq!(quarters, MCZ_FIXTURE);
}

const MCZ_FIXTURE: [i64; 8] = [0, 2, 0, 0, 0, 0, 0, 2];
