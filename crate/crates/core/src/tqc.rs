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

//! Transpilation quantum cost `TQC = N1 + N2 + XC + D` and the GALA versus
//! conventional comparison.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::baseline::{build_conventional_operator, build_conventional_special, SpecialKind};
use crate::circuit::Circuit;
use crate::error::{SynthError, TqcError};
use crate::layout::{find_star_placement, place_operator, random_connected_placement, route, CouplingMap, Placement};
use crate::lower::{lower_to_native, Basis};
use crate::metrics::{depth, gate_counts};
use crate::synth::{
    build_operator, builtin_spec, compose_controlled_v, compose_controlled_v_dagger, compose_fredkin, compose_miller,
    core_structure, GalaRequest, GalaStructure, OperatorKind, OperatorSpec, Variant,
};

pub fn tqc(n1: usize, n2: usize, xc: usize, d: usize) -> usize {
    n1 + n2 + xc + d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub n1: usize,
    pub n2: usize,
    pub depth: usize,
}

impl Counts {
    pub fn of(c: &Circuit) -> Result<Counts, TqcError> {
        let (n1, n2) = gate_counts(c)?;
        Ok(Counts { n1, n2, depth: depth(c) })
    }
}

/// Structure of a GALA operator, kept so larger sizes can be predicted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GalaSummary {
    pub kind: OperatorKind,
    pub variant: Variant,
    pub structure: GalaStructure,
    /// Counts of the operator lowered to the CNOT basis without routing.
    pub unrouted: Counts,
}

pub fn gala_summary(spec: &OperatorSpec, n: usize) -> Result<GalaSummary, TqcError> {
    let c = build_operator(&GalaRequest::standard(spec.clone(), n))?;
    Ok(GalaSummary {
        kind: spec.kind,
        variant: spec.variant,
        structure: core_structure(spec, n)?,
        unrouted: Counts::of(&lower_to_native(&c, Basis::Cnot))?,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TqcReport {
    #[serde(rename = "N1")]
    pub n1: usize,
    #[serde(rename = "N2")]
    pub n2: usize,
    #[serde(rename = "XC")]
    pub xc: usize,
    #[serde(rename = "D")]
    pub d: usize,
    #[serde(rename = "TQC")]
    pub tqc: usize,
    pub basis: Basis,
    pub placement: Placement,
    pub identity: String,
    pub experimental: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gala: Option<GalaSummary>,
}

impl TqcReport {
    pub fn new(n1: usize, n2: usize, xc: usize, d: usize, basis: Basis, placement: Placement, identity: impl Into<String>) -> Self {
        TqcReport { n1, n2, xc, d, tqc: tqc(n1, n2, xc, d), basis, placement, identity: identity.into(), experimental: false, gala: None }
    }

    pub fn is_consistent(&self) -> bool {
        self.tqc == tqc(self.n1, self.n2, self.xc, self.d)
    }
}

/// Routes `c` with `p`, lowers the result to `basis` and counts it.
pub fn analyze(c: &Circuit, map: &CouplingMap, p: &Placement, basis: Basis, identity: &str) -> Result<TqcReport, TqcError> {
    let routed = route(c, map, p)?;
    let lowered = lower_to_native(&routed.circuit, basis);
    let Counts { n1, n2, depth } = Counts::of(&lowered)?;
    Ok(TqcReport::new(n1, n2, routed.xc, depth, basis, p.clone(), identity))
}

/// The operators compared in the cost table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Operator {
    Boolean(OperatorKind),
    Special(SpecialKind),
}

impl Operator {
    pub const TABLE: [Operator; 9] = [
        Operator::Boolean(OperatorKind::And),
        Operator::Boolean(OperatorKind::Nand),
        Operator::Boolean(OperatorKind::Or),
        Operator::Boolean(OperatorKind::Nor),
        Operator::Boolean(OperatorKind::Implication),
        Operator::Boolean(OperatorKind::Inhibition),
        Operator::Special(SpecialKind::ControlledV),
        Operator::Special(SpecialKind::Fredkin),
        Operator::Special(SpecialKind::Miller),
    ];

    /// Arity used in the cost table: the binary connectives always run on
    /// three qubits.
    pub fn table_arity(self, n: usize) -> usize {
        match self {
            Operator::Boolean(OperatorKind::Implication | OperatorKind::Inhibition) => 3,
            _ => n,
        }
    }

    fn standard_qubits(n: usize) -> (Vec<usize>, usize) {
        ((0..n - 1).collect(), n - 1)
    }

    /// GALA construction on logical qubits `0..n`, `out` (or `out1`) last.
    pub fn build_gala(self, n: usize, variant: Variant) -> Result<Circuit, SynthError> {
        let (inputs, out) = Self::standard_qubits(n.max(1));
        match self {
            Operator::Boolean(k) => build_operator(&GalaRequest::standard(builtin_spec(k, variant), n)),
            Operator::Special(SpecialKind::ControlledV) => compose_controlled_v(n, &inputs, out),
            Operator::Special(SpecialKind::ControlledVDagger) => compose_controlled_v_dagger(n, &inputs, out),
            Operator::Special(SpecialKind::Fredkin) => {
                if n < 3 {
                    return Err(SynthError::TooFewQubits { what: "fredkin".into(), min: 3, got: n });
                }
                compose_fredkin(n, &inputs[..n - 2], n - 2, n - 1)
            }
            Operator::Special(SpecialKind::Miller) => compose_miller(n, &inputs, out),
        }
    }

    pub fn build_conventional(self, n: usize) -> Result<Circuit, SynthError> {
        let (inputs, out) = Self::standard_qubits(n.max(1));
        match self {
            Operator::Boolean(k) => build_conventional_operator(k, n, &inputs, out),
            Operator::Special(k) => build_conventional_special(k, n, &(0..n).collect::<Vec<_>>()),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Boolean(k) => k.fmt(f),
            Operator::Special(k) => k.fmt(f),
        }
    }
}

impl FromStr for Operator {
    type Err = SynthError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<OperatorKind>().map(Operator::Boolean).or_else(|_| s.parse::<SpecialKind>().map(Operator::Special))
    }
}

/// Builds the GALA form of `op`, places it (star when possible) and counts it.
pub fn analyze_gala(op: Operator, n: usize, map: &CouplingMap, target: Option<usize>, basis: Basis) -> Result<TqcReport, TqcError> {
    let variant = Variant::Hadamard;
    let c = op.build_gala(n, variant)?;
    let p = place_operator(map, n, target)?;
    let mut r = analyze(&c, map, &p, basis, &format!("gala-{op}-n{n}"))?;
    if let Operator::Boolean(k) = op {
        let spec = builtin_spec(k, variant);
        r.experimental = spec.experimental();
        r.gala = Some(gala_summary(&spec, n)?);
    }
    Ok(r)
}

/// Conventional form of `op` on a seeded random connected region.
pub fn analyze_conventional(op: Operator, n: usize, map: &CouplingMap, seed: u64, basis: Basis) -> Result<TqcReport, TqcError> {
    let c = op.build_conventional(n)?;
    let p = random_connected_placement(map, n, seed)?;
    analyze(&c, map, &p, basis, &format!("conventional-{op}-n{n}"))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub operator: Operator,
    pub n: usize,
    pub gala: TqcReport,
    pub conventional: TqcReport,
    /// Conventional TQC over GALA TQC.
    pub ratio: f64,
}

impl ComparisonRow {
    pub fn gala_cheaper(&self) -> bool {
        self.gala.tqc < self.conventional.tqc
    }
}

/// One row per operator, each run at its table arity for `n`.
pub fn compare(ops: &[Operator], n: usize, map: &CouplingMap, basis: Basis, seed: u64) -> Result<Vec<ComparisonRow>, TqcError> {
    ops.iter()
        .map(|&op| {
            let m = op.table_arity(n);
            let gala = analyze_gala(op, m, map, None, basis)?;
            let conventional = analyze_conventional(op, m, map, seed, basis)?;
            let ratio = conventional.tqc as f64 / gala.tqc.max(1) as f64;
            Ok(ComparisonRow { operator: op, n: m, gala, conventional, ratio })
        })
        .collect()
}

pub fn render_comparison(rows: &[ComparisonRow]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<12} {:>2} | {:>5} {:>5} {:>4} {:>5} {:>6} | {:>5} {:>5} {:>4} {:>5} {:>6} | {:>6}",
        "operator", "n", "N1", "N2", "XC", "D", "TQC", "N1", "N2", "XC", "D", "TQC", "ratio"
    );
    for r in rows {
        let (c, g) = (&r.conventional, &r.gala);
        let _ = writeln!(
            s,
            "{:<12} {:>2} | {:>5} {:>5} {:>4} {:>5} {:>6} | {:>5} {:>5} {:>4} {:>5} {:>6} | {:>6.2}",
            r.operator.to_string(), r.n, c.n1, c.n2, c.xc, c.d, c.tqc, g.n1, g.n2, g.xc, g.d, g.tqc, r.ratio
        );
    }
    s
}

/// Structural counts expected for GALA-n from the GALA-(n-1) report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub n: usize,
    pub core_rz: usize,
    pub core_cnot: usize,
    pub core_depth: usize,
    /// Unrouted CNOT-basis counts.
    pub unrouted: Counts,
    /// `Some(0)` when a star placement exists for `n` on the given map.
    pub xc: Option<usize>,
}

impl Prediction {
    pub fn tqc(&self) -> Option<usize> {
        self.xc.map(|xc| tqc(self.unrouted.n1, self.unrouted.n2, xc, self.unrouted.depth))
    }
}

/// Each extra qubit doubles the core and adds one CNOT; the wrapper is
/// unchanged.
pub fn predict_tqc(prev: &TqcReport, map: Option<&CouplingMap>) -> Result<Prediction, TqcError> {
    let g = prev.gala.as_ref().ok_or_else(|| TqcError::NotGala(prev.identity.clone()))?;
    let s = g.structure;
    let (core_rz, core_cnot, core_depth) = (2 * s.core_rz, 2 * s.core_cnot + 1, 2 * s.core_depth + 1);
    let wrapper_n1 = g.unrouted.n1 - s.core_rz;
    let wrapper_depth = g.unrouted.depth - s.core_depth;
    let n = s.n + 1;
    Ok(Prediction {
        n,
        core_rz,
        core_cnot,
        core_depth,
        unrouted: Counts { n1: core_rz + wrapper_n1, n2: core_cnot, depth: core_depth + wrapper_depth },
        xc: map.and_then(|m| find_star_placement(m, n, None)).map(|_| 0),
    })
}

/// One row of the published cost table: `[N1, N2, XC, D, TQC]`, with
/// `None` where the source is truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PublishedRow {
    pub operator: &'static str,
    pub n: usize,
    pub conventional: [usize; 5],
    pub gala: [Option<usize>; 5],
}

impl PublishedRow {
    pub fn gala_complete(&self) -> Option<[usize; 5]> {
        let mut out = [0; 5];
        for (o, v) in out.iter_mut().zip(self.gala) {
            *o = v?;
        }
        Some(out)
    }
}

const fn full(v: [usize; 5]) -> [Option<usize>; 5] {
    [Some(v[0]), Some(v[1]), Some(v[2]), Some(v[3]), Some(v[4])]
}

pub const PUBLISHED: [PublishedRow; 9] = [
    PublishedRow { operator: "and", n: 4, conventional: [146, 29, 5, 108, 288], gala: [Some(52), Some(7), Some(0), None, None] },
    PublishedRow { operator: "nand", n: 4, conventional: [105, 20, 2, 83, 210], gala: full([52, 7, 0, 41, 100]) },
    PublishedRow { operator: "or", n: 4, conventional: [102, 20, 2, 80, 204], gala: full([52, 7, 0, 41, 100]) },
    PublishedRow { operator: "nor", n: 4, conventional: [103, 20, 2, 83, 208], gala: full([52, 7, 0, 41, 100]) },
    PublishedRow { operator: "implication", n: 3, conventional: [49, 9, 1, 39, 98], gala: full([28, 3, 0, 21, 52]) },
    PublishedRow { operator: "inhibition", n: 3, conventional: [50, 9, 1, 39, 99], gala: full([28, 3, 0, 21, 52]) },
    PublishedRow { operator: "cv", n: 4, conventional: [147, 29, 5, 110, 291], gala: full([53, 7, 0, 42, 102]) },
    PublishedRow { operator: "fredkin", n: 4, conventional: [189, 40, 8, 115, 352], gala: full([56, 9, 0, 46, 111]) },
    PublishedRow { operator: "miller", n: 4, conventional: [151, 29, 3, 113, 296], gala: full([70, 13, 0, 58, 141]) },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::heavy_hex_127;

    #[test]
    fn sums() {
        assert_eq!(tqc(146, 29, 5, 108), 288);
        assert_eq!(tqc(52, 7, 0, 41), 100);
        assert_eq!(tqc(0, 0, 0, 0), 0);
    }

    #[test]
    fn operator_names_round_trip() {
        for op in Operator::TABLE {
            assert_eq!(op.to_string().parse::<Operator>().unwrap(), op);
        }
        assert!("xor".parse::<Operator>().is_err());
    }

    #[test]
    fn report_json_uses_verbatim_field_names() {
        let m = heavy_hex_127();
        let r = analyze_gala(Operator::Boolean(OperatorKind::Nand), 4, &m, Some(4), Basis::Cnot).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for k in ["N1", "N2", "XC", "D", "TQC"] {
            assert!(v.get(k).is_some(), "{k}");
        }
        assert_eq!(r.xc, 0);
        assert!(r.is_consistent());
        let back: TqcReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn prediction_needs_a_gala_report() {
        let m = heavy_hex_127();
        let r = analyze_conventional(Operator::Boolean(OperatorKind::And), 3, &m, 1, Basis::Cnot).unwrap();
        assert!(matches!(predict_tqc(&r, None), Err(TqcError::NotGala(_))));
    }

    #[test]
    fn empty_comparison() {
        assert!(compare(&[], 3, &heavy_hex_127(), Basis::Cnot, 0).unwrap().is_empty());
    }
}
