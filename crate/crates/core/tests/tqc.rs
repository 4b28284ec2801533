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

use gala_core::layout::{find_star_placement, heavy_hex_127, place_operator};
use gala_core::synth::OperatorKind;
use gala_core::tqc::*;
use gala_core::Basis;

#[test]
fn published_rows_add_up() {
    for row in PUBLISHED {
        let [n1, n2, xc, d, t] = row.conventional;
        assert_eq!(tqc(n1, n2, xc, d), t, "{}", row.operator);
        if let Some([n1, n2, xc, d, t]) = row.gala_complete() {
            assert_eq!(tqc(n1, n2, xc, d), t, "{}", row.operator);
        }
    }
    assert!(PUBLISHED[0].gala_complete().is_none());
}

#[test]
fn gala_implication_has_no_crossings() {
    let r = analyze_gala(Operator::Boolean(OperatorKind::Implication), 3, &heavy_hex_127(), None, Basis::Cnot).unwrap();
    assert_eq!(r.xc, 0);
}

#[test]
fn gala_and_pipeline_fixture() {
    let m = heavy_hex_127();
    let op = Operator::Boolean(OperatorKind::And);
    let cx = analyze_gala(op, 4, &m, Some(4), Basis::Cnot).unwrap();
    let ecr = analyze_gala(op, 4, &m, Some(4), Basis::Ecr).unwrap();
    assert_eq!((cx.n1, cx.n2, cx.xc, cx.d, cx.tqc), (14, 7, 0, 21, 42));
    assert_eq!((ecr.n1, ecr.n2, ecr.xc, ecr.d, ecr.tqc), (42, 7, 0, 35, 84));
    assert_eq!(cx.n2, ecr.n2);
}

#[test]
fn conventional_and_needs_swaps() {
    for seed in 0..8 {
        let r = analyze_conventional(Operator::Boolean(OperatorKind::And), 4, &heavy_hex_127(), seed, Basis::Cnot).unwrap();
        assert!(r.xc >= 1);
        assert!(r.is_consistent());
    }
}

#[test]
fn fredkin_gala_is_cheaper() {
    let rows = compare(&[Operator::Special(gala_core::baseline::SpecialKind::Fredkin)], 4, &heavy_hex_127(), Basis::Ecr, 3).unwrap();
    assert!(rows[0].gala_cheaper());
    assert!(rows[0].ratio > 1.0);
}

#[test]
fn table_arity_keeps_binary_connectives_at_three() {
    let rows = compare(&Operator::TABLE, 4, &heavy_hex_127(), Basis::Cnot, 9).unwrap();
    let arities: Vec<usize> = rows.iter().map(|r| r.n).collect();
    assert_eq!(arities, [4, 4, 4, 4, 3, 3, 4, 4, 4]);
}

#[test]
fn predictions_from_three_qubits() {
    let m = heavy_hex_127();
    let r3 = analyze_gala(Operator::Boolean(OperatorKind::And), 3, &m, None, Basis::Cnot).unwrap();
    let p4 = predict_tqc(&r3, Some(&m)).unwrap();
    assert_eq!((p4.n, p4.core_cnot, p4.xc), (4, 7, Some(0)));
    let r4 = analyze_gala(Operator::Boolean(OperatorKind::And), 4, &m, None, Basis::Cnot).unwrap();
    assert_eq!(p4.tqc(), Some(r4.tqc));
    let p5 = predict_tqc(&r4, Some(&m)).unwrap();
    assert_eq!((p5.core_rz, p5.xc), (16, None));
    assert!(find_star_placement(&m, 5, None).is_none());
    assert!(place_operator(&m, 5, None).is_ok());
}

#[test]
fn mcz_reports_are_experimental() {
    let r = analyze_gala(Operator::Boolean(OperatorKind::Mcz), 3, &heavy_hex_127(), None, Basis::Cnot).unwrap();
    assert!(r.experimental);
    assert_eq!(r.gala.unwrap().kind, OperatorKind::Mcz);
}
