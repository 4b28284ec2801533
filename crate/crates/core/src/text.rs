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

//! Line-oriented circuit text format.
//!
//! ```text
//! qubits 3
//! label 2 out
//! RZ 2 angle=-1/4pi
//! CNOT 1,2
//! ```
//!
//! `#` starts a comment. When the `qubits` header is missing the width is
//! one more than the largest index used.

use crate::angle::Angle;
use crate::circuit::Circuit;
use crate::error::ParseError;
use crate::gate::{Gate, GateKind};

pub fn to_text(c: &Circuit) -> String {
    let mut s = format!("qubits {}\n", c.num_qubits());
    for (q, role) in c.labels() {
        s.push_str(&format!("label {q} {role}\n"));
    }
    for g in c.gates() {
        s.push_str(&g.to_string());
        s.push('\n');
    }
    s
}

fn parse_index(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.trim()
        .parse()
        .map_err(|_| ParseError::new(line, format!("bad qubit index `{tok}`")))
}

fn parse_gate(line_no: usize, head: &str, rest: &[&str]) -> Result<Gate, ParseError> {
    let err = |m: String| ParseError::new(line_no, m);
    let operands = rest.first().ok_or_else(|| err(format!("{head} is missing operands")))?;
    let qubits = operands
        .split(',')
        .map(|t| parse_index(t, line_no))
        .collect::<Result<Vec<_>, _>>()?;
    let mut angle = None;
    for extra in &rest[1..] {
        match extra.strip_prefix("angle=") {
            Some(a) => angle = Some(a.parse::<Angle>().map_err(|e| e.at_line(line_no))?),
            None => return Err(err(format!("unexpected token `{extra}`"))),
        }
    }
    let kind = match head.to_ascii_uppercase().as_str() {
        "I" | "ID" => GateKind::I,
        "X" => GateKind::X,
        "SX" => GateKind::SqrtX,
        "SXDG" => GateKind::SqrtXDagger,
        "RZ" => GateKind::Rz(angle.ok_or_else(|| err("RZ needs angle=<num>/<den>pi".into()))?),
        "H" => GateKind::H,
        "CNOT" | "CX" => GateKind::Cnot,
        "SWAP" => GateKind::Swap,
        "ECR" => GateKind::Ecr,
        "CV" => GateKind::MacroV,
        "CVDG" => GateKind::MacroVDagger,
        other => return Err(err(format!("unknown gate kind `{other}`"))),
    };
    if angle.is_some() && !matches!(kind, GateKind::Rz(_)) {
        return Err(err(format!("{head} takes no angle")));
    }
    Gate::new(kind, &qubits).map_err(|e| err(e.to_string()))
}

pub fn parse_text(src: &str) -> Result<Circuit, ParseError> {
    let mut width = None;
    let mut gates = Vec::new();
    let mut labels = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "qubits" => {
                if width.is_some() || !gates.is_empty() {
                    return Err(ParseError::new(line_no, "`qubits` must appear once, before any gate"));
                }
                let n = toks.get(1).ok_or_else(|| ParseError::new(line_no, "missing qubit count"))?;
                width = Some(parse_index(n, line_no)?);
            }
            "label" => {
                if toks.len() != 3 {
                    return Err(ParseError::new(line_no, "expected `label <qubit> <role>`"));
                }
                labels.push((line_no, parse_index(toks[1], line_no)?, toks[2].to_string()));
            }
            head => gates.push((line_no, parse_gate(line_no, head, &toks[1..])?)),
        }
    }
    let used = gates
        .iter()
        .flat_map(|(_, g)| g.qubits().iter().copied())
        .chain(labels.iter().map(|(_, q, _)| *q))
        .max()
        .map_or(0, |m| m + 1);
    let width = width.unwrap_or(used);
    let mut c = Circuit::new(width);
    for (line_no, g) in gates {
        c.push(g).map_err(|e| ParseError::new(line_no, e.to_string()))?;
    }
    for (line_no, q, role) in labels {
        c.set_label(q, role).map_err(|e| ParseError::new(line_no, e.to_string()))?;
    }
    Ok(c)
}
