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

//! Conventional comparison circuits built from multi-controlled X.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::circuit::Circuit;
use crate::error::SynthError;
use crate::gate::Gate;
use crate::synth::OperatorKind;

/// Gates with special output roles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialKind {
    ControlledV,
    ControlledVDagger,
    Fredkin,
    Miller,
}

impl SpecialKind {
    pub fn name(self) -> &'static str {
        match self {
            SpecialKind::ControlledV => "cv",
            SpecialKind::ControlledVDagger => "cvdg",
            SpecialKind::Fredkin => "fredkin",
            SpecialKind::Miller => "miller",
        }
    }

    pub fn min_qubits(self) -> usize {
        match self {
            SpecialKind::ControlledV | SpecialKind::ControlledVDagger => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for SpecialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpecialKind {
    type Err = SynthError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cv" | "controlled-v" => Ok(SpecialKind::ControlledV),
            "cvdg" | "controlled-v-dagger" => Ok(SpecialKind::ControlledVDagger),
            "fredkin" => Ok(SpecialKind::Fredkin),
            "miller" => Ok(SpecialKind::Miller),
            other => Err(SynthError::UnsupportedOperator(other.to_string())),
        }
    }
}

fn distinct(qubits: &[usize]) -> Result<(), SynthError> {
    let mut v = qubits.to_vec();
    v.sort_unstable();
    if v.windows(2).any(|w| w[0] == w[1]) {
        return Err(SynthError::InvalidQubits("qubits must be distinct".into()));
    }
    Ok(())
}

fn width(qubits: &[usize]) -> usize {
    qubits.iter().max().map_or(0, |m| m + 1)
}

fn toffoli(a: usize, b: usize, t: usize, g: &mut Vec<Gate>) {
    let t_ = Angle::QUARTER_PI;
    g.extend([
        Gate::h(t),
        Gate::cnot(b, t),
        Gate::rz(-t_, t),
        Gate::cnot(a, t),
        Gate::rz(t_, t),
        Gate::cnot(b, t),
        Gate::rz(-t_, t),
        Gate::cnot(a, t),
        Gate::rz(t_, b),
        Gate::rz(t_, t),
        Gate::h(t),
        Gate::cnot(a, b),
        Gate::rz(t_, a),
        Gate::rz(-t_, b),
        Gate::cnot(a, b),
    ]);
}

/// Controlled phase `diag(1, 1, 1, e^{iφ})` up to global phase.
fn controlled_phase(phi: Angle, c: usize, t: usize, g: &mut Vec<Gate>) {
    let h = phi.halve();
    g.extend([Gate::rz(h, c), Gate::rz(h, t), Gate::cnot(c, t), Gate::rz(-h, t), Gate::cnot(c, t)]);
}

/// `X^α` (with `α` as a multiple of π, so `π` is X) on `t`, controlled by
/// every qubit in `controls`. Ancilla-free recursion: split off the last
/// control and use `X^{α/2}` twice.
fn mcu(alpha: Angle, controls: &[usize], t: usize, g: &mut Vec<Gate>) {
    match controls {
        [] => unreachable!("at least one control"),
        [c] if alpha == Angle::PI => g.push(Gate::cnot(*c, t)),
        [c] => {
            g.push(Gate::h(t));
            controlled_phase(alpha, *c, t, g);
            g.push(Gate::h(t));
        }
        [rest @ .., last] => {
            let half = alpha.halve();
            mcu(half, &[*last], t, g);
            mcx(rest, *last, g);
            mcu(-half, &[*last], t, g);
            mcx(rest, *last, g);
            mcu(half, rest, t, g);
        }
    }
}

fn mcx(controls: &[usize], t: usize, g: &mut Vec<Gate>) {
    match controls {
        [a, b] => toffoli(*a, *b, t, g),
        _ => mcu(Angle::PI, controls, t, g),
    }
}

fn labelled(w: usize, gates: Vec<Gate>, roles: &[(usize, String)]) -> Result<Circuit, SynthError> {
    let mut c = Circuit::from_gates(w, gates)?;
    for (q, r) in roles {
        c.set_label(*q, r.clone())?;
    }
    Ok(c)
}

fn io_roles(inputs: &[usize], out: usize) -> Vec<(usize, String)> {
    let mut r: Vec<_> = inputs.iter().enumerate().map(|(i, &q)| (q, format!("in{i}"))).collect();
    r.push((out, "out".into()));
    r
}

fn check_io(what: &str, n: usize, min: usize, inputs: &[usize], out: usize) -> Result<(), SynthError> {
    if n < min {
        return Err(SynthError::TooFewQubits { what: what.into(), min, got: n });
    }
    if inputs.len() + 1 != n {
        return Err(SynthError::InvalidQubits(format!("{} inputs given for n = {n}", inputs.len())));
    }
    let mut all = inputs.to_vec();
    all.push(out);
    distinct(&all)
}

/// Multi-controlled X: the 6-CNOT Clifford+T Toffoli at n = 3 and the
/// ancilla-free controlled-root recursion above it.
pub fn build_mcx(n: usize, inputs: &[usize], out: usize) -> Result<Circuit, SynthError> {
    check_io("mcx", n, 3, inputs, out)?;
    let mut g = Vec::new();
    mcx(inputs, out, &mut g);
    let mut all = inputs.to_vec();
    all.push(out);
    labelled(width(&all), g, &io_roles(inputs, out))
}

/// Boolean operator as X gates around [`build_mcx`].
pub fn build_conventional_operator(kind: OperatorKind, n: usize, inputs: &[usize], out: usize) -> Result<Circuit, SynthError> {
    check_io(kind.name(), n, 3, inputs, out)?;
    if !kind.supports_arity(n) {
        return Err(SynthError::UnsupportedArity { op: kind.to_string(), n });
    }
    let (flip_inputs, flip_out): (Vec<usize>, bool) = match kind {
        OperatorKind::And => (vec![], false),
        OperatorKind::Nand => (vec![], true),
        OperatorKind::Or => (inputs.to_vec(), true),
        OperatorKind::Nor => (inputs.to_vec(), false),
        OperatorKind::Implication => (vec![inputs[1]], true),
        OperatorKind::Inhibition => (vec![inputs[1]], false),
        OperatorKind::Mcz => return Err(SynthError::UnsupportedOperator("conventional mcz".into())),
    };
    let mut g: Vec<Gate> = flip_inputs.iter().map(|&q| Gate::x(q)).collect();
    mcx(inputs, out, &mut g);
    g.extend(flip_inputs.iter().map(|&q| Gate::x(q)));
    if flip_out {
        g.push(Gate::x(out));
    }
    let mut all = inputs.to_vec();
    all.push(out);
    labelled(width(&all), g, &io_roles(inputs, out))
}

/// Conventional controlled-V, controlled-V†, Fredkin and Miller.
///
/// `qubits` lists the roles in order: controls then target for CV/CV†,
/// controls then `out0`, `out1` for Fredkin, inputs then `out` for Miller.
pub fn build_conventional_special(kind: SpecialKind, n: usize, qubits: &[usize]) -> Result<Circuit, SynthError> {
    if n < kind.min_qubits() {
        return Err(SynthError::TooFewQubits { what: kind.to_string(), min: kind.min_qubits(), got: n });
    }
    if qubits.len() != n {
        return Err(SynthError::InvalidQubits(format!("{} qubits given for n = {n}", qubits.len())));
    }
    distinct(qubits)?;
    let mut g = Vec::new();
    let roles = match kind {
        SpecialKind::ControlledV | SpecialKind::ControlledVDagger => {
            let (controls, t) = (&qubits[..n - 1], qubits[n - 1]);
            let alpha = if kind == SpecialKind::ControlledV { Angle::HALF_PI } else { -Angle::HALF_PI };
            mcu(alpha, controls, t, &mut g);
            io_roles(controls, t)
        }
        SpecialKind::Fredkin => {
            let (o0, o1) = (qubits[n - 2], qubits[n - 1]);
            g.push(Gate::cnot(o1, o0));
            mcx(&qubits[..n - 1], o1, &mut g);
            g.push(Gate::cnot(o1, o0));
            let mut r: Vec<_> = qubits[..n - 2].iter().enumerate().map(|(i, &q)| (q, format!("in{i}"))).collect();
            r.push((o0, "out0".into()));
            r.push((o1, "out1".into()));
            r
        }
        SpecialKind::Miller => {
            let (inputs, out) = (&qubits[..n - 1], qubits[n - 1]);
            let fan: Vec<Gate> = inputs.iter().map(|&q| Gate::cnot(out, q)).collect();
            g.extend(fan.iter().copied());
            mcx(inputs, out, &mut g);
            g.extend(fan);
            io_roles(inputs, out)
        }
    };
    labelled(width(qubits), g, &roles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::GateKind;

    fn cnots(c: &Circuit) -> usize {
        c.count_kind(|k| k == GateKind::Cnot)
    }

    #[test]
    fn toffoli_has_six_cnots() {
        assert_eq!(cnots(&build_mcx(3, &[0, 1], 2).unwrap()), 6);
    }

    #[test]
    fn mcx_cnot_count_is_monotone() {
        let counts: Vec<usize> =
            (3..=7).map(|n| cnots(&build_mcx(n, &(0..n - 1).collect::<Vec<_>>(), n - 1).unwrap())).collect();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]), "{counts:?}");
    }

    #[test]
    fn rejects_mcz_and_wide_implication() {
        assert!(build_conventional_operator(OperatorKind::Mcz, 3, &[0, 1], 2).is_err());
        assert!(matches!(
            build_conventional_operator(OperatorKind::Implication, 4, &[0, 1, 2], 3),
            Err(SynthError::UnsupportedArity { .. })
        ));
        assert!(build_mcx(2, &[0], 1).is_err());
        assert!(build_conventional_special(SpecialKind::Fredkin, 3, &[0, 1, 1]).is_err());
    }

    #[test]
    fn special_labels() {
        let f = build_conventional_special(SpecialKind::Fredkin, 4, &[3, 2, 1, 0]).unwrap();
        assert_eq!(f.qubit_for("out0"), Some(1));
        assert_eq!(f.qubit_for("out1"), Some(0));
        assert_eq!(f.qubit_for("in1"), Some(2));
    }
}
