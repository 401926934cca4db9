//! Complete lookup-table decoding.
//!
//! Syndrome bit `i` is the symplectic product of the error with the `i`-th
//! independent check (see [`StabilizerCode::independent_indices`]). As an
//! integer, bit `i` has value `2^i`.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::pauli::PauliOperator;
use crate::stabcode::StabilizerCode;

/// Largest supported number of independent checks.
pub const MAX_TABLE_BITS: usize = 24;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Syndrome(BitVec);

impl Syndrome {
    pub fn from_bits(bits: BitVec) -> Self {
        Syndrome(bits)
    }

    pub fn from_index(len: usize, index: usize) -> Self {
        Syndrome(BitVec::from_u64(len, index as u64))
    }

    /// Parses `0`/`1` characters, bit 0 first.
    pub fn parse(text: &str) -> Result<Self> {
        if let Some(pos) = text.chars().position(|c| c != '0' && c != '1') {
            return Err(Error::SyndromeSyntax(pos + 1));
        }
        Ok(Syndrome(BitVec::parse(text).expect("checked")))
    }

    pub fn bits(&self) -> &BitVec {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_zero()
    }

    pub fn index(&self) -> usize {
        self.0.iter_ones().map(|i| 1usize << i).sum()
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Syndrome({})", self.0)
    }
}

pub fn syndrome_of(code: &StabilizerCode, e: &PauliOperator) -> Result<Syndrome> {
    if e.n() != code.n() {
        return Err(Error::LengthMismatch {
            left: e.n(),
            right: code.n(),
        });
    }
    let bits: Vec<bool> = code
        .independent_checks()
        .map(|c| c.anticommutes_unchecked(e))
        .collect();
    Ok(Syndrome(BitVec::from_bools(&bits)))
}

#[inline]
pub(crate) fn syndrome_index(code: &StabilizerCode, e: &PauliOperator) -> usize {
    code.independent_checks()
        .enumerate()
        .fold(0, |acc, (i, c)| acc | ((c.anticommutes_unchecked(e) as usize) << i))
}

/// Minimum-weight correction for every syndrome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoderTable {
    bits: usize,
    entries: Vec<PauliOperator>,
}

impl DecoderTable {
    /// Enumerates errors by increasing weight (supports lexicographic,
    /// letters base-3); the first error reaching a syndrome is its entry.
    pub fn build(code: &StabilizerCode) -> Result<Self> {
        let bits = code.rank();
        if bits > MAX_TABLE_BITS {
            return Err(Error::TableTooLarge(bits, MAX_TABLE_BITS));
        }
        let size = 1usize << bits;
        let mut entries: Vec<Option<PauliOperator>> = vec![None; size];
        entries[0] = Some(PauliOperator::identity(code.n()));
        let mut filled = 1;
        'weights: for w in 1..=code.n() {
            if filled == size {
                break;
            }
            for e in PauliOperator::all_of_weight(code.n(), w) {
                let idx = syndrome_index(code, &e);
                if entries[idx].is_none() {
                    entries[idx] = Some(e);
                    filled += 1;
                    if filled == size {
                        break 'weights;
                    }
                }
            }
        }
        // Independent checks make the syndrome map onto, so every slot fills.
        let entries = entries
            .into_iter()
            .map(|e| e.expect("syndrome map is surjective"))
            .collect();
        Ok(DecoderTable { bits, entries })
    }

    /// Number of syndrome bits.
    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[PauliOperator] {
        &self.entries
    }

    pub fn decode(&self, s: &Syndrome) -> Result<&PauliOperator> {
        if s.len() != self.bits {
            return Err(Error::LengthMismatch {
                left: s.len(),
                right: self.bits,
            });
        }
        Ok(&self.entries[s.index()])
    }

    #[inline]
    pub(crate) fn entry(&self, index: usize) -> &PauliOperator {
        &self.entries[index]
    }

    pub fn max_weight(&self) -> usize {
        self.entries.iter().map(PauliOperator::weight).max().unwrap_or(0)
    }

    /// One line per syndrome: `<bits, bit 0 first> <pauli>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, e) in self.entries.iter().enumerate() {
            writeln!(out, "{} {}", Syndrome::from_index(self.bits, i), e).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::TableFormat { line, message };
        let mut entries: Vec<Option<PauliOperator>> = Vec::new();
        let mut bits = None;
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let (s, p) = match tokens[..] {
                [p] => ("", p),
                [s, p] => (s, p),
                _ => return Err(err(line_no, "expected '<syndrome> <pauli>'".into())),
            };
            let s = Syndrome::parse(s).map_err(|e| err(line_no, e.to_string()))?;
            let p: PauliOperator = p.parse().map_err(|e: Error| err(line_no, e.to_string()))?;
            let b = *bits.get_or_insert(s.len());
            if s.len() != b || b > MAX_TABLE_BITS {
                return Err(err(line_no, format!("syndrome has {} bits", s.len())));
            }
            if entries.is_empty() {
                entries = vec![None; 1 << b];
            }
            if entries[s.index()].replace(p).is_some() {
                return Err(err(line_no, format!("duplicate syndrome {s}")));
            }
        }
        let bits = bits.ok_or_else(|| err(0, "empty table".into()))?;
        let entries = entries
            .into_iter()
            .enumerate()
            .map(|(i, e)| e.ok_or_else(|| err(0, format!("missing syndrome {}", Syndrome::from_index(bits, i)))))
            .collect::<Result<_>>()?;
        Ok(DecoderTable { bits, entries })
    }
}

pub fn build_table(code: &StabilizerCode) -> Result<DecoderTable> {
    DecoderTable::build(code)
}

pub fn decode<'a>(table: &'a DecoderTable, s: &Syndrome) -> Result<&'a PauliOperator> {
    table.decode(s)
}

/// Result of applying a correction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    /// `e · c` is a product of checks.
    Success,
    /// `e · c` is a nontrivial logical. `x_detects` lists the logical pairs
    /// whose `x̄` anticommutes with the residual; `z_detects` those whose
    /// `z̄` does.
    LogicalFailure {
        x_detects: Vec<usize>,
        z_detects: Vec<usize>,
    },
}

impl Residual {
    pub fn is_success(&self) -> bool {
        matches!(self, Residual::Success)
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Success => f.write_str("success"),
            Residual::LogicalFailure {
                x_detects,
                z_detects,
            } => {
                let list = |v: &[usize]| {
                    v.iter()
                        .map(|i| (i + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                write!(
                    f,
                    "logical_failure x_detects=[{}] z_detects=[{}]",
                    list(x_detects),
                    list(z_detects)
                )
            }
        }
    }
}

pub fn classify_residual(
    code: &StabilizerCode,
    e: &PauliOperator,
    c: &PauliOperator,
) -> Result<Residual> {
    if syndrome_of(code, e)? != syndrome_of(code, c)? {
        return Err(Error::SyndromeMismatch);
    }
    let mut residual = e.clone();
    residual.xor_pattern(c);
    Ok(classify_trivial_syndrome(code, &residual))
}

/// Classifies an operator known to commute with every check.
pub(crate) fn classify_trivial_syndrome(code: &StabilizerCode, residual: &PauliOperator) -> Residual {
    if code.in_stabilizer_span(residual).expect("length checked") {
        return Residual::Success;
    }
    let mut x_detects = Vec::new();
    let mut z_detects = Vec::new();
    for (i, pair) in code.logicals().iter().enumerate() {
        if pair.x.anticommutes_unchecked(residual) {
            x_detects.push(i);
        }
        if pair.z.anticommutes_unchecked(residual) {
            z_detects.push(i);
        }
    }
    Residual::LogicalFailure {
        x_detects,
        z_detects,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codegen::checks_from_polyhedron;
    use crate::pauli::Letter;
    use crate::polyhedron::cube;
    use crate::reference::{RD_CHECKS, RD_LOGICAL_X, RD_LOGICAL_Z};
    use crate::stabcode::LogicalPair;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    fn rd() -> StabilizerCode {
        StabilizerCode::from_checks(RD_CHECKS.iter().map(|s| p(s)).collect()).unwrap()
    }

    fn rd_golden() -> StabilizerCode {
        let pairs = RD_LOGICAL_X
            .iter()
            .zip(RD_LOGICAL_Z)
            .map(|(x, z)| LogicalPair { x: p(x), z: p(z) })
            .collect();
        rd().with_logical_basis(pairs).unwrap()
    }

    #[test]
    fn syndromes() {
        let code = rd();
        assert!(syndrome_of(&code, &PauliOperator::identity(14)).unwrap().is_trivial());
        let s = syndrome_of(&code, &PauliOperator::single(14, 1, Letter::X)).unwrap();
        // Qubit 2 sits in S1X, S1Y and S1Z; X flips the Y and Z checks.
        assert_eq!(s.bits().iter_ones().collect::<Vec<_>>(), vec![4, 8]);
        assert_eq!(s.to_string(), "00001000100");
        for c in code.checks() {
            assert!(syndrome_of(&code, c).unwrap().is_trivial());
        }
        assert!(syndrome_of(&code, &p("XX")).is_err());
    }

    #[test]
    fn syndrome_text() {
        let s = Syndrome::parse("0110").unwrap();
        assert_eq!(s.index(), 6);
        assert_eq!(Syndrome::from_index(4, 6), s);
        assert_eq!(Syndrome::parse("01x"), Err(Error::SyndromeSyntax(3)));
    }

    #[test]
    fn rd_table() {
        let code = rd();
        let table = DecoderTable::build(&code).unwrap();
        assert_eq!(table.len(), 2048);
        assert!(table.entries()[0].is_identity_pattern());
        for (i, e) in table.entries().iter().enumerate() {
            assert_eq!(syndrome_index(&code, e), i);
        }
        for e in PauliOperator::all_of_weight(14, 1) {
            let s = syndrome_of(&code, &e).unwrap();
            assert_eq!(table.decode(&s).unwrap(), &e);
        }
    }

    #[test]
    fn table_sizes() {
        let cube = StabilizerCode::from_checks(checks_from_polyhedron(&cube()).unwrap()).unwrap();
        assert_eq!(DecoderTable::build(&cube).unwrap().len(), 32);
        let empty = StabilizerCode::new(3, vec![]).unwrap();
        let t = DecoderTable::build(&empty).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t.entries()[0].is_identity_pattern());
        assert_eq!(t.to_text(), " III\n");
        assert_eq!(DecoderTable::parse(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn table_guard() {
        let n = MAX_TABLE_BITS + 1;
        let checks = (0..n).map(|q| PauliOperator::single(n, q, Letter::Z)).collect();
        let code = StabilizerCode::new(n, checks).unwrap();
        assert_eq!(
            DecoderTable::build(&code).unwrap_err(),
            Error::TableTooLarge(n, MAX_TABLE_BITS)
        );
    }

    #[test]
    fn decode_checks_length() {
        let table = DecoderTable::build(&rd()).unwrap();
        assert!(table.decode(&Syndrome::parse("0").unwrap()).is_err());
        assert!(table.decode(&Syndrome::from_index(11, 0)).unwrap().is_identity_pattern());
    }

    #[test]
    fn table_text_round_trip() {
        let table = DecoderTable::build(&rd()).unwrap();
        assert_eq!(DecoderTable::parse(&table.to_text()).unwrap(), table);
        assert!(DecoderTable::parse("0 X\n0 Y\n").is_err());
        assert!(DecoderTable::parse("0 X\n").is_err());
        assert!(DecoderTable::parse("").is_err());
    }

    #[test]
    fn residual_classes() {
        let code = rd_golden();
        let e = PauliOperator::single(14, 6, Letter::Y);
        assert_eq!(classify_residual(&code, &e, &e).unwrap(), Residual::Success);

        let zr = p(RD_LOGICAL_Z[0]);
        let id = PauliOperator::identity(14);
        assert_eq!(
            classify_residual(&code, &zr, &id).unwrap(),
            Residual::LogicalFailure {
                x_detects: vec![0],
                z_detects: vec![]
            }
        );
        assert_eq!(
            classify_residual(&code, &e, &id).unwrap_err(),
            Error::SyndromeMismatch
        );
    }

    #[test]
    fn weight_one_errors_corrected() {
        let code = rd();
        let table = DecoderTable::build(&code).unwrap();
        let mut cases = 0;
        for e in std::iter::once(PauliOperator::identity(14)).chain(PauliOperator::all_of_weight(14, 1)) {
            let c = table.decode(&syndrome_of(&code, &e).unwrap()).unwrap();
            assert!(classify_residual(&code, &e, c).unwrap().is_success());
            cases += 1;
        }
        assert_eq!(cases, 43);
    }

    #[test]
    fn logical_times_weight_one_can_fail() {
        let code = rd_golden();
        let table = DecoderTable::build(&code).unwrap();
        let zr = p(RD_LOGICAL_Z[0]);
        let mut failures = 0;
        for e1 in PauliOperator::all_of_weight(14, 1) {
            let e = zr.multiply(&e1).unwrap();
            let c = table.decode(&syndrome_of(&code, &e).unwrap()).unwrap();
            if !classify_residual(&code, &e, c).unwrap().is_success() {
                failures += 1;
            }
        }
        assert!(failures > 0);
    }

    #[test]
    fn pairing_test_agrees_with_span_test() {
        let code = rd();
        for w in 1..=3 {
            for op in PauliOperator::all_of_weight(14, w).filter(|o| code.commutes_with_checks(o)) {
                let in_span = code.in_stabilizer_span(&op).unwrap();
                let detected = code.logicals().iter().any(|l| {
                    l.x.anticommutes_unchecked(&op) || l.z.anticommutes_unchecked(&op)
                });
                assert_eq!(in_span, !detected, "{op}");
            }
        }
    }
}
