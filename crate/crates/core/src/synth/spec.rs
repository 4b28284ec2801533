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
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::error::{ParseError, SynthError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OperatorKind {
    And,
    Nand,
    Or,
    Nor,
    Implication,
    Inhibition,
    Mcz,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 7] = [
        OperatorKind::And,
        OperatorKind::Nand,
        OperatorKind::Or,
        OperatorKind::Nor,
        OperatorKind::Implication,
        OperatorKind::Inhibition,
        OperatorKind::Mcz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::And => "and",
            OperatorKind::Nand => "nand",
            OperatorKind::Or => "or",
            OperatorKind::Nor => "nor",
            OperatorKind::Implication => "implication",
            OperatorKind::Inhibition => "inhibition",
            OperatorKind::Mcz => "mcz",
        }
    }

    /// Only the n-ary Boolean kinds generalise past three qubits; the two
    /// binary connectives stay binary.
    pub fn supports_arity(self, n: usize) -> bool {
        match self {
            OperatorKind::Implication | OperatorKind::Inhibition => n == 3,
            _ => n >= 3,
        }
    }

    pub fn is_phase(self) -> bool {
        self == OperatorKind::Mcz
    }

    /// Classical function the `out` bit should take, given the input bits
    /// (`inputs[i]` is `in_i`) and the initial `out` bit. MCZ is a phase
    /// operator, so its measured `out` bit is unchanged.
    pub fn evaluate(self, inputs: &[bool], initial_out: bool) -> bool {
        let all = inputs.iter().all(|&b| b);
        let any = inputs.iter().any(|&b| b);
        let f = match self {
            OperatorKind::And => all,
            OperatorKind::Nand => !all,
            OperatorKind::Or => any,
            OperatorKind::Nor => !any,
            OperatorKind::Implication => !inputs[0] || inputs[1],
            OperatorKind::Inhibition => inputs[0] && !inputs[1],
            OperatorKind::Mcz => return initial_out,
        };
        f ^ initial_out
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = SynthError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "and" => Ok(OperatorKind::And),
            "nand" => Ok(OperatorKind::Nand),
            "or" => Ok(OperatorKind::Or),
            "nor" => Ok(OperatorKind::Nor),
            "implication" | "imp" => Ok(OperatorKind::Implication),
            "inhibition" | "inh" => Ok(OperatorKind::Inhibition),
            "mcz" => Ok(OperatorKind::Mcz),
            other => Err(SynthError::UnsupportedOperator(other.to_string())),
        }
    }
}

/// Which superposition gate pair wraps the core.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `SP1 = SP2 = H`.
    Hadamard,
    /// `SP1 = √X`, `SP2 = √X†`.
    SqrtX,
}

impl FromStr for Variant {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "h" | "hadamard" => Ok(Variant::Hadamard),
            "sx" | "sqrtx" => Ok(Variant::SqrtX),
            _ => Err(ParseError::new(0, format!("unknown variant `{s}`"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Hadamard => "h",
            Variant::SqrtX => "sx",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Superposition {
    H,
    SqrtX,
    SqrtXDagger,
}

/// An auxiliary gate on `out`; `I` is never emitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Auxiliary {
    I,
    Rz(Angle),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(self, a: Angle) -> Angle {
        match self {
            Sign::Plus => a,
            Sign::Minus => -a,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InitialOut {
    Zero,
    One,
    /// Phase operators accept either basis state on `out`.
    Either,
}

impl InitialOut {
    pub fn values(self) -> &'static [u8] {
        match self {
            InitialOut::Zero => &[0],
            InitialOut::One => &[1],
            InitialOut::Either => &[0, 1],
        }
    }
}

/// One row of an operator table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorSpec {
    pub kind: OperatorKind,
    pub variant: Variant,
    /// `|θ|` at n = 3; each extra qubit halves it.
    pub magnitude: Angle,
    /// Signs of RZ1..RZ4 in every embedded 3-qubit core.
    pub signs: [Sign; 4],
    pub sp1: Superposition,
    pub ax1: Auxiliary,
    pub ax2: Auxiliary,
    pub sp2: Superposition,
    pub initial_out: InitialOut,
    pub expected_pass: bool,
}

impl OperatorSpec {
    pub fn experimental(&self) -> bool {
        self.kind.is_phase()
    }

    /// `|θ| = magnitude / 2^{n-3}`.
    pub fn magnitude_at(&self, n: usize) -> Angle {
        let mut a = self.magnitude;
        for _ in 3..n {
            a = a.halve();
        }
        a
    }
}

use Sign::{Minus as M, Plus as P};

const AND_H: [Sign; 4] = [M, P, M, P];
const OR_H: [Sign; 4] = [P, P, P, P];
const IMP_H: [Sign; 4] = [M, M, P, P];
const MCZ: [Sign; 4] = [P, P, M, M];
const AND_SX: [Sign; 4] = [P, P, M, M];
const IMP_SX: [Sign; 4] = [P, M, P, M];

fn row(kind: OperatorKind, variant: Variant, signs: [Sign; 4], ax2: Auxiliary, expected_pass: bool) -> OperatorSpec {
    let (sp1, sp2) = match variant {
        Variant::Hadamard => (Superposition::H, Superposition::H),
        Variant::SqrtX => (Superposition::SqrtX, Superposition::SqrtXDagger),
    };
    let (magnitude, initial_out) = if kind.is_phase() {
        (Angle::HALF_PI, InitialOut::Either)
    } else {
        (Angle::QUARTER_PI, InitialOut::Zero)
    };
    OperatorSpec { kind, variant, magnitude, signs, sp1, ax1: Auxiliary::I, ax2, sp2, initial_out, expected_pass }
}

/// Hadamard-wrapped operators.
pub fn table1() -> Vec<OperatorSpec> {
    use OperatorKind::*;
    let h = Variant::Hadamard;
    let plus = Auxiliary::Rz(Angle::PI);
    let minus = Auxiliary::Rz(-Angle::PI);
    vec![
        row(And, h, AND_H, Auxiliary::I, true),
        row(Nand, h, AND_H, minus, true),
        row(Or, h, OR_H, plus, true),
        row(Nor, h, OR_H, Auxiliary::I, true),
        row(Implication, h, IMP_H, minus, true),
        row(Inhibition, h, IMP_H, Auxiliary::I, true),
        row(Mcz, h, MCZ, Auxiliary::I, true),
    ]
}

/// `√X`/`√X†`-wrapped operators; OR, NOR and MCZ are known not to work.
pub fn table2() -> Vec<OperatorSpec> {
    use OperatorKind::*;
    let sx = Variant::SqrtX;
    let plus = Auxiliary::Rz(Angle::PI);
    let minus = Auxiliary::Rz(-Angle::PI);
    vec![
        row(And, sx, AND_SX, Auxiliary::I, true),
        row(Nand, sx, AND_SX, minus, true),
        row(Or, sx, OR_H, plus, false),
        row(Nor, sx, OR_H, Auxiliary::I, false),
        row(Implication, sx, IMP_SX, minus, true),
        row(Inhibition, sx, IMP_SX, Auxiliary::I, true),
        row(Mcz, sx, MCZ, Auxiliary::I, false),
    ]
}

/// Built-in row for `kind` in `variant`.
pub fn builtin_spec(kind: OperatorKind, variant: Variant) -> OperatorSpec {
    let table = match variant {
        Variant::Hadamard => table1(),
        Variant::SqrtX => table2(),
    };
    table.into_iter().find(|s| s.kind == kind).expect("every kind has a row in both tables")
}

fn parse_sp(tok: &str, line: usize) -> Result<Superposition, ParseError> {
    match tok.to_ascii_uppercase().as_str() {
        "H" => Ok(Superposition::H),
        "SX" => Ok(Superposition::SqrtX),
        "SXDG" => Ok(Superposition::SqrtXDagger),
        _ => Err(ParseError::new(line, format!("unknown superposition gate `{tok}`"))),
    }
}

fn parse_ax(tok: &str, line: usize) -> Result<Auxiliary, ParseError> {
    if tok.eq_ignore_ascii_case("I") {
        return Ok(Auxiliary::I);
    }
    let inner = tok
        .strip_prefix("RZ(")
        .or_else(|| tok.strip_prefix("rz("))
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| ParseError::new(line, format!("unknown auxiliary gate `{tok}`")))?;
    Ok(Auxiliary::Rz(inner.parse::<Angle>().map_err(|e| e.at_line(line))?))
}

/// Parses a whitespace-separated operator table with columns
///
/// `operator variant initial_out SP1 AX1 RZ1 RZ2 RZ3 RZ4 AX2 SP2 expected`
///
/// where RZ columns are n = 3 angles such as `-1/4pi`, AX columns are `I` or
/// `RZ(<angle>)`, `initial_out` is `0`, `1` or `either`, and `expected` is
/// `pass` or `fail`. `#` starts a comment.
pub fn parse_spec_table(src: &str) -> Result<Vec<OperatorSpec>, ParseError> {
    let mut rows = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let cols: Vec<&str> = text.split_whitespace().collect();
        if cols.len() != 12 {
            return Err(ParseError::new(line, format!("expected 12 columns, found {}", cols.len())));
        }
        let kind: OperatorKind = cols[0].parse().map_err(|e: SynthError| ParseError::new(line, e.to_string()))?;
        let variant: Variant = cols[1].parse().map_err(|e: ParseError| e.at_line(line))?;
        let initial_out = match cols[2] {
            "0" => InitialOut::Zero,
            "1" => InitialOut::One,
            "either" | "0|1" => InitialOut::Either,
            other => return Err(ParseError::new(line, format!("bad initial out `{other}`"))),
        };
        let sp1 = parse_sp(cols[3], line)?;
        let ax1 = parse_ax(cols[4], line)?;
        let mut angles = [Angle::ZERO; 4];
        for (k, a) in angles.iter_mut().enumerate() {
            *a = cols[5 + k].parse::<Angle>().map_err(|e| e.at_line(line))?;
        }
        let magnitude = Angle::new(angles[0].numerator().abs(), angles[0].denominator());
        let mut signs = [Sign::Plus; 4];
        for (s, a) in signs.iter_mut().zip(angles) {
            if Angle::new(a.numerator().abs(), a.denominator()) != magnitude || a.numerator() == 0 {
                return Err(ParseError::new(line, "all four RZ angles must share one nonzero magnitude"));
            }
            if a.numerator() < 0 {
                *s = Sign::Minus;
            }
        }
        let ax2 = parse_ax(cols[9], line)?;
        let sp2 = parse_sp(cols[10], line)?;
        let expected_pass = match cols[11] {
            "pass" => true,
            "fail" => false,
            other => return Err(ParseError::new(line, format!("expected `pass` or `fail`, found `{other}`"))),
        };
        rows.push(OperatorSpec { kind, variant, magnitude, signs, sp1, ax1, ax2, sp2, initial_out, expected_pass });
    }
    Ok(rows)
}
