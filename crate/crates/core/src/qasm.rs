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

//! OpenQASM 2.0 emitter and a parser for the subset it emits.

use crate::angle::Angle;
use crate::circuit::Circuit;
use crate::error::ParseError;
use crate::gate::{Gate, GateKind};

fn qasm_angle(a: Angle) -> String {
    let (n, d) = (a.numerator(), a.denominator());
    let sign = if n < 0 { "-" } else { "" };
    let m = n.abs();
    match (m, d) {
        (0, _) => "0".into(),
        (1, 1) => format!("{sign}pi"),
        (1, d) => format!("{sign}pi/{d}"),
        (m, 1) => format!("{sign}{m}*pi"),
        (m, d) => format!("{sign}{m}*pi/{d}"),
    }
}

fn parse_qasm_angle(s: &str, line: usize) -> Result<Angle, ParseError> {
    let bad = || ParseError::new(line, format!("unsupported angle expression `{s}`"));
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "0" {
        return Ok(Angle::ZERO);
    }
    let (neg, t) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.as_str()),
    };
    let (num_part, den) = match t.split_once('/') {
        Some((a, d)) => (a, d.parse::<i64>().map_err(|_| bad())?),
        None => (t, 1),
    };
    let num = match num_part {
        "pi" => 1,
        other => other
            .strip_suffix("*pi")
            .ok_or_else(bad)?
            .parse::<i64>()
            .map_err(|_| bad())?,
    };
    if den <= 0 {
        return Err(bad());
    }
    Ok(Angle::new(if neg { -num } else { num }, den))
}

fn mnemonic(kind: GateKind) -> &'static str {
    match kind {
        GateKind::I => "id",
        GateKind::X => "x",
        GateKind::SqrtX => "sx",
        GateKind::SqrtXDagger => "sxdg",
        GateKind::Rz(_) => "rz",
        GateKind::H => "h",
        GateKind::Cnot => "cx",
        GateKind::Swap => "swap",
        GateKind::Ecr => "ecr",
        GateKind::MacroV => "csx",
        GateKind::MacroVDagger => "csxdg",
    }
}

/// Emits the circuit over a single `q` register. Gates missing from
/// `qelib1.inc` are declared `opaque`.
pub fn to_qasm(c: &Circuit) -> String {
    let mut s = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    for (kind, name) in [
        (GateKind::Ecr, "ecr"),
        (GateKind::MacroV, "csx"),
        (GateKind::MacroVDagger, "csxdg"),
    ] {
        if c.gates().iter().any(|g| g.kind() == kind) {
            s.push_str(&format!("opaque {name} a,b;\n"));
        }
    }
    s.push_str(&format!("qreg q[{}];\n", c.num_qubits()));
    for g in c.gates() {
        let args: Vec<String> = g.qubits().iter().map(|q| format!("q[{q}]")).collect();
        match g.kind() {
            GateKind::Rz(a) => s.push_str(&format!("rz({}) {};\n", qasm_angle(a), args.join(","))),
            k => s.push_str(&format!("{} {};\n", mnemonic(k), args.join(","))),
        }
    }
    s
}

fn parse_operand(tok: &str, reg: &str, line: usize) -> Result<usize, ParseError> {
    let inner = tok
        .trim()
        .strip_prefix(reg)
        .and_then(|r| r.strip_prefix('['))
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| ParseError::new(line, format!("bad operand `{tok}`")))?;
    inner.parse().map_err(|_| ParseError::new(line, format!("bad operand `{tok}`")))
}

/// Parses QASM produced by [`to_qasm`]: one `qreg`, no classical bits.
pub fn parse_qasm(src: &str) -> Result<Circuit, ParseError> {
    let mut circuit: Option<(String, Circuit)> = None;
    for (i, raw) in src.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split("//").next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let stmt = line
            .strip_suffix(';')
            .ok_or_else(|| ParseError::new(line_no, "statement must end with `;`"))?
            .trim();
        if stmt.starts_with("OPENQASM") || stmt.starts_with("include") || stmt.starts_with("opaque") {
            continue;
        }
        if let Some(decl) = stmt.strip_prefix("qreg") {
            let decl = decl.trim();
            let (name, size) = decl
                .split_once('[')
                .and_then(|(n, r)| r.strip_suffix(']').map(|s| (n.trim(), s)))
                .ok_or_else(|| ParseError::new(line_no, "malformed qreg"))?;
            let size: usize = size.parse().map_err(|_| ParseError::new(line_no, "malformed qreg size"))?;
            if circuit.is_some() {
                return Err(ParseError::new(line_no, "only one qreg is supported"));
            }
            circuit = Some((name.to_string(), Circuit::new(size)));
            continue;
        }
        let (reg, c) = circuit
            .as_mut()
            .ok_or_else(|| ParseError::new(line_no, "gate before qreg declaration"))?;
        let (head, args) = match (stmt.find('('), stmt.find(char::is_whitespace)) {
            (Some(open), ws) if ws.map_or(true, |w| open < w) => {
                let close = stmt.find(')').ok_or_else(|| ParseError::new(line_no, "unbalanced parenthesis"))?;
                (&stmt[..=close], &stmt[close + 1..])
            }
            (_, Some(w)) => (&stmt[..w], &stmt[w..]),
            _ => return Err(ParseError::new(line_no, format!("missing operands in `{stmt}`"))),
        };
        let (name, param) = match head.split_once('(') {
            Some((n, p)) => (n, Some(p.strip_suffix(')').unwrap_or(p))),
            None => (head, None),
        };
        let qubits = args
            .split(',')
            .map(|t| parse_operand(t, reg, line_no))
            .collect::<Result<Vec<_>, _>>()?;
        let kind = match (name, param) {
            ("id", None) => GateKind::I,
            ("x", None) => GateKind::X,
            ("sx", None) => GateKind::SqrtX,
            ("sxdg", None) => GateKind::SqrtXDagger,
            ("rz", Some(p)) => GateKind::Rz(parse_qasm_angle(p, line_no)?),
            ("h", None) => GateKind::H,
            ("cx", None) => GateKind::Cnot,
            ("swap", None) => GateKind::Swap,
            ("ecr", None) => GateKind::Ecr,
            ("csx", None) => GateKind::MacroV,
            ("csxdg", None) => GateKind::MacroVDagger,
            _ => return Err(ParseError::new(line_no, format!("unsupported instruction `{head}`"))),
        };
        let g = Gate::new(kind, &qubits).map_err(|e| ParseError::new(line_no, e.to_string()))?;
        c.push(g).map_err(|e| ParseError::new(line_no, e.to_string()))?;
    }
    circuit
        .map(|(_, c)| c)
        .ok_or_else(|| ParseError::new(0, "no qreg declared"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_forms() {
        for (n, d, s) in [(0, 1, "0"), (1, 1, "pi"), (-1, 1, "-pi"), (1, 4, "pi/4"), (-3, 8, "-3*pi/8"), (5, 1, "5*pi")] {
            let a = Angle::new(n, d);
            assert_eq!(qasm_angle(a), s);
            let back = parse_qasm_angle(s, 1).unwrap();
            assert_eq!((back.numerator(), back.denominator()), (n, d));
        }
    }

    #[test]
    fn emits_header_and_gates() {
        let c = Circuit::from_gates(3, [Gate::rz(Angle::new(-1, 4), 2), Gate::cnot(1, 2), Gate::ecr(0, 1)]).unwrap();
        let q = to_qasm(&c);
        assert_eq!(
            q,
            "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nopaque ecr a,b;\nqreg q[3];\nrz(-pi/4) q[2];\ncx q[1],q[2];\necr q[0],q[1];\n"
        );
        assert_eq!(parse_qasm(&q).unwrap(), c);
    }

    #[test]
    fn rejects_unknown() {
        let e = parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncz q[0],q[1];\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(parse_qasm("x q[0];\n").is_err());
    }
}
