use std::collections::HashSet;

use polycode::codegen::{self, checks_from_polyhedron};
use polycode::decoder::{syndrome_of, DecoderTable, Syndrome};
use polycode::polyhedron::{self, Polyhedron};
use polycode::{Exec, PauliOperator, StabilizerCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RD_CHECKS: &str = include_str!("golden/rd_checks.txt");
const CUBE_CHECKS: &str = include_str!("golden/cube_checks.txt");
const RD_LOGICALS: &str = include_str!("golden/rd_logicals.txt");
const RD_TABLE: &str = include_str!("golden/rd_decoder_table.txt");
const RD_POLY: &str = include_str!("golden/rhombic_dodecahedron.poly");

fn lines(text: &str) -> Vec<String> {
    text.lines().map(str::to_string).collect()
}

fn printed(ops: &[PauliOperator]) -> Vec<String> {
    ops.iter().map(|c| c.to_string()).collect()
}

fn rd_code() -> StabilizerCode {
    let rd = polyhedron::rhombic_dodecahedron();
    StabilizerCode::from_checks(checks_from_polyhedron(&rd).unwrap()).unwrap()
}

#[test]
fn rd_checks_match_golden() {
    let rd = polyhedron::rhombic_dodecahedron();
    assert_eq!(printed(&checks_from_polyhedron(&rd).unwrap()), lines(RD_CHECKS));
}

#[test]
fn cube_checks_match_golden() {
    let cube = polyhedron::cube();
    assert_eq!(printed(&checks_from_polyhedron(&cube).unwrap()), lines(CUBE_CHECKS));
}

#[test]
fn rd_poly_round_trips() {
    let parsed: Polyhedron = RD_POLY.parse().unwrap();
    assert_eq!(parsed, polyhedron::rhombic_dodecahedron());
    assert_eq!(parsed.to_text(), RD_POLY);
}

#[test]
fn rd_logicals_match_golden() {
    let code = rd_code();
    let mut got = Vec::new();
    for (i, pair) in code.logicals().iter().enumerate() {
        got.push(format!("X{} {}", i + 1, pair.x));
        got.push(format!("Z{} {}", i + 1, pair.z));
    }
    assert_eq!(got, lines(RD_LOGICALS));
}

#[test]
fn golden_logicals_are_a_symplectic_basis() {
    let code = rd_code();
    let ops: Vec<PauliOperator> = lines(RD_LOGICALS)
        .iter()
        .map(|l| l.split_whitespace().nth(1).unwrap().parse().unwrap())
        .collect();
    for (i, a) in ops.iter().enumerate() {
        assert!(code.is_logical(a), "{a}");
        for (j, b) in ops.iter().enumerate() {
            let partner = i / 2 == j / 2 && i != j;
            assert_eq!(!a.commutes_with(b).unwrap(), partner, "{a} {b}");
        }
    }
}

#[test]
fn decoder_table_is_bit_exact() {
    let table = DecoderTable::build(&rd_code()).unwrap();
    assert_eq!(table.to_text(), RD_TABLE);
    let parsed = DecoderTable::parse(RD_TABLE).unwrap();
    assert_eq!(parsed, table);
}

#[test]
fn decoder_entries_reproduce_their_syndromes() {
    let code = rd_code();
    let table = DecoderTable::parse(RD_TABLE).unwrap();
    assert_eq!(table.len(), 1 << 11);
    for (index, c) in table.entries().iter().enumerate() {
        assert_eq!(syndrome_of(&code, c).unwrap().index(), index);
    }
}

#[test]
fn decoder_entries_are_minimal_on_random_syndromes() {
    let code = rd_code();
    let table = DecoderTable::parse(RD_TABLE).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let mut seen = HashSet::new();
    while seen.len() < 32 {
        seen.insert(rng.gen_range(0..table.len()));
    }
    for index in seen {
        let s = Syndrome::from_index(11, index);
        let min = (0..=code.n())
            .find(|&w| {
                PauliOperator::all_of_weight(code.n(), w)
                    .any(|e| syndrome_of(&code, &e).unwrap() == s)
            })
            .unwrap();
        assert_eq!(table.decode(&s).unwrap().weight(), min, "syndrome index {index}");
    }
}

#[test]
fn printed_s2y_row_breaks_commutation() {
    let mut rows: Vec<PauliOperator> = lines(RD_CHECKS).iter().map(|l| l.parse().unwrap()).collect();
    rows[5] = "IIYIIYYIIIIYII".parse().unwrap();
    assert!(!codegen::verify_commuting(&rows));
    let (a, b) = codegen::first_anticommuting_pair(&rows, Exec::Sequential).unwrap();
    assert!(a == 5 || b == 5, "{a} {b}");
    assert!(StabilizerCode::from_checks(rows).is_err());
}
