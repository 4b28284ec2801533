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

mod args;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use gala_core::layout::{heavy_hex_127, load_coupling_map, place_operator, random_connected_placement, route, CouplingMap, Placement};
use gala_core::qasm::{parse_qasm, to_qasm};
use gala_core::sim::{evolve, ket_label, qsphere_data, simulate, truth_table, write_qsphere_table};
use gala_core::synth::{build_operator, builtin_spec, parse_spec_table, GalaRequest, OperatorKind, OperatorSpec, Variant};
use gala_core::text::{parse_text, to_text};
use gala_core::tqc::{analyze, compare, gala_summary, render_comparison, Operator, TqcReport};
use gala_core::{lower_to_native, Circuit, Error, ParseError, SynthError, TqcError};
use num_complex::Complex64;

use args::{Cli, Command, DeviceArgs, Format, OpArgs, OutArgs, SourceArgs, VariantArg};

const MAP_DIR_ENV: &str = "GALA_MAP_DIR";

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

macro_rules! core_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Core(e.into())
            }
        }
    )*};
}
core_from!(ParseError, SynthError, TqcError, gala_core::LayoutError, gala_core::SimError, gala_core::CircuitError, std::io::Error);

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(Error::Io(_)) => 3,
            CliError::Core(Error::Parse(_)) => 4,
            CliError::Core(Error::Synth(SynthError::UnsupportedOperator(_) | SynthError::UnsupportedArity { .. }))
            | CliError::Core(Error::Tqc(TqcError::Synth(SynthError::UnsupportedOperator(_) | SynthError::UnsupportedArity { .. }))) => 5,
            CliError::Core(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Core(Error::Parse(p)) if p.line > 0 => write!(f, "parse error at line {}: {}", p.line, p.message),
            CliError::Core(e) => e.fmt(f),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gala: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn emit(out: &OutArgs, body: &str) -> Result<()> {
    match &out.output {
        Some(p) => std::fs::write(p, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn parse_circuit(src: &str) -> Result<Circuit> {
    let first = src.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with("//") && !l.starts_with('#'));
    if first.is_some_and(|l| l.starts_with("OPENQASM")) {
        Ok(parse_qasm(src)?)
    } else {
        Ok(parse_text(src)?)
    }
}

fn variant(v: VariantArg) -> Variant {
    match v {
        VariantArg::H => Variant::Hadamard,
        VariantArg::Sx => Variant::SqrtX,
    }
}

fn spec_for(op: &OpArgs, kind: OperatorKind) -> Result<OperatorSpec> {
    let v = variant(op.variant);
    match &op.spec_table {
        None => Ok(builtin_spec(kind, v)),
        Some(path) => parse_spec_table(&read(path)?)?
            .into_iter()
            .find(|s| s.kind == kind && s.variant == v)
            .ok_or_else(|| CliError::Usage(format!("{} has no `{kind}` row for variant {v}", path.display()))),
    }
}

fn operator(op: &OpArgs) -> Result<(Operator, usize)> {
    let name = op.op.as_deref().ok_or_else(|| CliError::Usage("give --op or --input".into()))?;
    let n = op.n.ok_or_else(|| CliError::Usage("--op needs --n".into()))?;
    Ok((name.parse::<Operator>()?, n))
}

/// Circuit named by `--op` (GALA unless `--conventional`).
fn build(op: &OpArgs) -> Result<Circuit> {
    let (o, n) = operator(op)?;
    if op.conventional {
        if op.variant != VariantArg::H {
            return Err(CliError::Usage("--variant only applies to GALA operators".into()));
        }
        return Ok(o.build_conventional(n)?);
    }
    match o {
        Operator::Boolean(kind) => Ok(build_operator(&GalaRequest::standard(spec_for(op, kind)?, n))?),
        Operator::Special(_) if op.spec_table.is_some() || op.variant != VariantArg::H => {
            Err(CliError::Usage(format!("--spec-table and --variant only apply to Boolean operators, not {o}")))
        }
        Operator::Special(_) => Ok(o.build_gala(n, Variant::Hadamard)?),
    }
}

fn load(source: &SourceArgs) -> Result<Circuit> {
    match &source.input {
        Some(p) => parse_circuit(&read(p)?),
        None => build(&source.op),
    }
}

fn resolve_map(name: &str) -> Result<CouplingMap> {
    if matches!(name, "heavyhex127" | "heavy-hex-127" | "brisbane") {
        return Ok(heavy_hex_127());
    }
    let direct = PathBuf::from(name);
    if direct.is_file() {
        return Ok(load_coupling_map(direct)?);
    }
    if let Some(dir) = std::env::var_os(MAP_DIR_ENV) {
        let dir = PathBuf::from(dir);
        for candidate in [dir.join(name), dir.join(format!("{name}.map"))] {
            if candidate.is_file() {
                return Ok(load_coupling_map(candidate)?);
            }
        }
    }
    Err(CliError::Core(Error::Io(std::io::Error::new(std::io::ErrorKind::NotFound, format!("no coupling map `{name}`")))))
}

fn placement(c: &Circuit, map: &CouplingMap, device: &DeviceArgs, conventional: bool) -> Result<Placement> {
    if !device.placement.is_empty() {
        if device.placement.len() != c.num_qubits() {
            return Err(CliError::Usage(format!(
                "--placement lists {} qubits, circuit has {}",
                device.placement.len(),
                c.num_qubits()
            )));
        }
        return Ok(Placement::new(device.placement.clone(), map)?);
    }
    if conventional {
        Ok(random_connected_placement(map, c.num_qubits(), device.seed)?)
    } else {
        Ok(place_operator(map, c.num_qubits(), device.target)?)
    }
}

fn parse_init(s: &str) -> Result<usize> {
    let r = match s.strip_prefix("0b") {
        Some(bits) => usize::from_str_radix(bits, 2),
        None => s.parse(),
    };
    r.map_err(|_| CliError::Usage(format!("bad basis state `{s}`")))
}

fn roles(c: &Circuit) -> Result<(Vec<usize>, usize)> {
    let mut inputs = Vec::new();
    while let Some(q) = c.qubit_for(&format!("in{}", inputs.len())) {
        inputs.push(q);
    }
    let out = c
        .qubit_for("out")
        .or_else(|| c.qubit_for("out1"))
        .ok_or_else(|| CliError::Usage("circuit has no `out` label".into()))?;
    if let Some(o0) = c.qubit_for("out0") {
        inputs.push(o0);
    }
    Ok((inputs, out))
}

fn format_circuit(c: &Circuit, f: Format) -> String {
    match f {
        Format::Text => to_text(c),
        Format::Qasm => to_qasm(c),
        Format::Json => json(c),
    }
}

fn pretty_report(r: &TqcReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}  ({} basis{})", r.identity, r.basis, if r.experimental { ", experimental" } else { "" });
    let _ = writeln!(s, "  placement {:?} ({:?})", r.placement.physical, r.placement.classification);
    let _ = writeln!(s, "  N1 {}  N2 {}  XC {}  D {}  TQC {}", r.n1, r.n2, r.xc, r.d, r.tqc);
    s
}

fn run(cli: Cli) -> Result<()> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Build { op, format, out } => {
            let c = build(&op)?;
            emit(&out, &format_circuit(&c, format))
        }
        Command::Lower { source, basis, format, out } => {
            let c = lower_to_native(&load(&source)?, basis);
            emit(&out, &format_circuit(&c, format))
        }
        Command::Route { source, device, out } => {
            let c = load(&source)?;
            let map = resolve_map(&device.map)?;
            let p = placement(&c, &map, &device, source.op.conventional)?;
            let r = route(&c, &map, &p)?;
            if pretty {
                let mut s = format!("xc {}\ninitial {:?}\nfinal {:?}\n", r.xc, r.initial, r.final_layout());
                s.push_str(&to_text(&r.circuit));
                return emit(&out, &s);
            }
            let v = serde_json::json!({
                "xc": r.xc,
                "initial": r.initial,
                "final": r.final_layout(),
                "classification": p.classification,
                "circuit": to_text(&r.circuit),
            });
            emit(&out, &json(&v))
        }
        Command::Simulate { source, init, truth_table: tt, out } => {
            let c = load(&source)?;
            if tt {
                let (inputs, o) = roles(&c)?;
                let initial = match &source.op.op {
                    Some(name) if name.parse::<OperatorKind>().is_ok() && source.op.n.is_some() => {
                        spec_for(&source.op, name.parse::<OperatorKind>()?)?.initial_out.values().to_vec()
                    }
                    _ => vec![0],
                };
                let mut rows = Vec::new();
                let mut s = String::new();
                for out0 in initial {
                    for (x, r) in truth_table(&c, &inputs, o, out0)? {
                        let bits: String = (0..inputs.len()).rev().map(|i| if x >> i & 1 == 1 { '1' } else { '0' }).collect();
                        let _ = writeln!(s, "out0={out0} in={bits} -> {} (p={:.12})", r.out, r.probability);
                        rows.push(serde_json::json!({"initial_out": out0, "inputs": bits, "out": r.out, "probability": r.probability}));
                    }
                }
                return emit(&out, &if pretty { s } else { json(&rows) });
            }
            let st = simulate(&c, parse_init(&init)?)?;
            let entries: Vec<_> = st
                .amplitudes()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.norm_sqr() > 1e-12)
                .map(|(i, a)| (i, ket_label(i, c.num_qubits()), *a))
                .collect();
            if pretty {
                let mut s = String::new();
                for (_, label, a) in &entries {
                    let _ = writeln!(s, "{label}  {:+.6}{:+.6}i  p={:.6}", a.re, a.im, a.norm_sqr());
                }
                return emit(&out, &s);
            }
            let v: Vec<_> = entries
                .iter()
                .map(|(i, label, a)| serde_json::json!({"basis": i, "label": label, "re": a.re, "im": a.im, "probability": a.norm_sqr()}))
                .collect();
            emit(&out, &json(&v))
        }
        Command::Tqc { source, device, basis, out } => {
            let c = load(&source)?;
            let map = resolve_map(&device.map)?;
            let conventional = source.op.conventional;
            let p = placement(&c, &map, &device, conventional)?;
            let identity = match (&source.input, &source.op.op, source.op.n) {
                (Some(path), _, _) => path.display().to_string(),
                (None, Some(op), Some(n)) => format!("{}-{op}-n{n}", if conventional { "conventional" } else { "gala" }),
                _ => "circuit".into(),
            };
            let mut r = analyze(&c, &map, &p, basis, &identity)?;
            if source.input.is_none() && !conventional {
                if let (Operator::Boolean(kind), n) = operator(&source.op)? {
                    let spec = spec_for(&source.op, kind)?;
                    r.experimental = spec.experimental();
                    r.gala = Some(gala_summary(&spec, n)?);
                }
            }
            emit(&out, &if pretty { pretty_report(&r) } else { json(&r) })
        }
        Command::Compare { n, ops, map, basis, seed, out } => {
            let map = resolve_map(&map)?;
            let ops: Vec<Operator> = if ops.is_empty() {
                Operator::TABLE.to_vec()
            } else {
                ops.iter().map(|s| s.parse::<Operator>()).collect::<std::result::Result<_, _>>()?
            };
            if let Some(bad) = ops.iter().find(|o| matches!(o, Operator::Boolean(OperatorKind::Mcz))) {
                return Err(CliError::Core(SynthError::UnsupportedOperator(format!("{bad} has no conventional counterpart")).into()));
            }
            let rows = compare(&ops, n, &map, basis, seed)?;
            emit(&out, &if pretty { render_comparison(&rows) } else { json(&rows) })
        }
        Command::Export { source, format, out } => emit(&out, &format_circuit(&load(&source)?, format)),
        Command::Qsphere { source, init, superpose_inputs, out } => {
            let c = load(&source)?;
            let st = if superpose_inputs {
                let (inputs, _) = roles(&c)?;
                let k = inputs.len();
                let w = Complex64::new(1.0 / ((1usize << k) as f64).sqrt(), 0.0);
                let mut amps = vec![Complex64::new(0.0, 0.0); 1 << c.num_qubits()];
                for x in 0..1usize << k {
                    let idx = inputs.iter().enumerate().fold(0, |acc, (i, &q)| acc | (x >> i & 1) << q);
                    amps[idx] = w;
                }
                evolve(&c, amps)?
            } else {
                simulate(&c, parse_init(&init)?)?
            };
            let entries = qsphere_data(&st);
            if pretty {
                let mut s = String::new();
                for e in &entries {
                    let _ = writeln!(s, "{}  p={:.6}  phase={:.6} ({:.3}π)", e.label, e.probability, e.phase, e.phase / std::f64::consts::PI);
                }
                return emit(&out, &s);
            }
            let mut buf = Vec::new();
            write_qsphere_table(&mut buf, &entries)?;
            emit(&out, &String::from_utf8(buf).expect("utf-8 table"))
        }
    }
}
