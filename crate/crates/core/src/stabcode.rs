//! Stabilizer codes: parameters, logical basis and exhaustive distance.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gf2::{self, BitMatrix, SpanBasis};
use crate::pauli::{patterns_on, PauliOperator};

/// A canonical logical pair: `x` and `z` anticommute, and commute with
/// every other pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalPair {
    pub x: PauliOperator,
    pub z: PauliOperator,
}

#[derive(Clone, Debug)]
pub struct StabilizerCode {
    n: usize,
    checks: Vec<PauliOperator>,
    independent: Vec<usize>,
    span: SpanBasis,
    logicals: Vec<LogicalPair>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    /// Absent when `k = 0`.
    pub d: Option<usize>,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[[{},{},{}]]", self.n, self.k, d),
            None => write!(f, "[[{},{}]]", self.n, self.k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistanceBound {
    /// Minimum weight together with the first logical operator found.
    Exact { d: usize, witness: PauliOperator },
    /// No logical operator up to this weight.
    Exceeds(usize),
}

impl StabilizerCode {
    /// Builds a code on `n` qubits. Checks may be dependent but must
    /// pairwise commute.
    pub fn new(n: usize, checks: Vec<PauliOperator>) -> Result<Self> {
        if let Some(bad) = checks.iter().find(|c| c.n() != n) {
            return Err(Error::LengthMismatch {
                left: bad.n(),
                right: n,
            });
        }
        let rows = checks.iter().map(PauliOperator::to_symplectic).collect();
        let matrix = BitMatrix::from_rows(2 * n, rows)?;
        let basis = gf2::symplectic_gram_schmidt(&matrix)?;
        let logicals = basis
            .logical_pairs
            .iter()
            .map(|(x, z)| {
                Ok(LogicalPair {
                    x: PauliOperator::from_symplectic(x)?,
                    z: PauliOperator::from_symplectic(z)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(StabilizerCode {
            n,
            checks,
            independent: basis.independent_rows,
            span: basis.span,
            logicals,
        })
    }

    /// Builds from a non-empty check list, taking `n` from the first check.
    pub fn from_checks(checks: Vec<PauliOperator>) -> Result<Self> {
        let n = checks.first().map(PauliOperator::n).ok_or(Error::NoChecks)?;
        StabilizerCode::new(n, checks)
    }

    /// Replaces the logical basis with `pairs`, which must be a canonical
    /// basis for this code.
    pub fn with_logical_basis(mut self, pairs: Vec<LogicalPair>) -> Result<Self> {
        if pairs.len() != self.k() {
            return Err(Error::InvalidLogicals(format!(
                "expected {} pairs, got {}",
                self.k(),
                pairs.len()
            )));
        }
        let xs: Vec<PauliOperator> = pairs.iter().map(|p| p.x.clone()).collect();
        let zs: Vec<PauliOperator> = pairs.iter().map(|p| p.z.clone()).collect();
        let report = verify_golden_logicals(&self, &xs, &zs);
        let blocking: Vec<&String> = report
            .failures
            .iter()
            .filter(|f| !f.starts_with("z supports"))
            .collect();
        if let Some(first) = blocking.first() {
            return Err(Error::InvalidLogicals((*first).clone()));
        }
        self.logicals = pairs;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of independent checks.
    pub fn rank(&self) -> usize {
        self.independent.len()
    }

    pub fn k(&self) -> usize {
        self.n - self.rank()
    }

    pub fn checks(&self) -> &[PauliOperator] {
        &self.checks
    }

    /// Indices into [`checks`](Self::checks) of a maximal independent
    /// subset, in input order. Syndrome bits follow this order.
    pub fn independent_indices(&self) -> &[usize] {
        &self.independent
    }

    pub fn independent_checks(&self) -> impl Iterator<Item = &PauliOperator> {
        self.independent.iter().map(|&i| &self.checks[i])
    }

    pub fn logicals(&self) -> &[LogicalPair] {
        &self.logicals
    }

    fn assert_len(&self, op: &PauliOperator) -> Result<()> {
        if op.n() != self.n {
            return Err(Error::LengthMismatch {
                left: op.n(),
                right: self.n,
            });
        }
        Ok(())
    }

    /// Whether `op` (ignoring phase) is a product of checks.
    pub fn in_stabilizer_span(&self, op: &PauliOperator) -> Result<bool> {
        self.assert_len(op)?;
        Ok(self.span.contains(&op.to_symplectic()))
    }

    /// Check indices whose product equals `op` up to phase.
    pub fn stabilizer_witness(&self, op: &PauliOperator) -> Result<Option<Vec<usize>>> {
        self.assert_len(op)?;
        Ok(self.span.witness(&op.to_symplectic()))
    }

    pub fn commutes_with_checks(&self, op: &PauliOperator) -> bool {
        self.checks.iter().all(|c| !c.anticommutes_unchecked(op))
    }

    /// Commutes with all checks but is not a product of them.
    pub fn is_logical(&self, op: &PauliOperator) -> bool {
        op.n() == self.n && self.commutes_with_checks(op) && !self.span.contains(&op.to_symplectic())
    }

    /// Exhaustive scan by increasing weight up to `max_weight`. Supports
    /// are visited in lexicographic order and letters in base-3 order, so
    /// the witness is the same for every [`Exec`].
    pub fn distance(&self, max_weight: usize, exec: Exec) -> Result<DistanceBound> {
        if self.k() == 0 {
            return Err(Error::NoLogicalQubits);
        }
        let n = self.n;
        for w in 1..=max_weight.min(n) {
            let supports: Vec<Vec<usize>> = (0..n).combinations(w).collect();
            let hit = exec.find_map_first(&supports, |s| {
                patterns_on(n, s.clone()).find(|op| self.is_logical(op))
            });
            if let Some(witness) = hit {
                return Ok(DistanceBound::Exact { d: w, witness });
            }
        }
        Ok(DistanceBound::Exceeds(max_weight))
    }

    /// First non-identity operator of weight `<= max_weight` commuting with
    /// every check, with the number of operators examined.
    pub fn first_undetected(&self, max_weight: usize) -> (usize, Option<PauliOperator>) {
        let mut examined = 0;
        for w in 1..=max_weight.min(self.n) {
            for op in PauliOperator::all_of_weight(self.n, w) {
                examined += 1;
                if self.commutes_with_checks(&op) {
                    return (examined, Some(op));
                }
            }
        }
        (examined, None)
    }

    /// Every non-identity Pauli of weight at most two anticommutes with
    /// some check.
    pub fn weight_two_scan(&self) -> bool {
        self.first_undetected(2).1.is_none()
    }

    pub fn params(&self, max_weight: usize, exec: Exec) -> Result<CodeParams> {
        let d = if self.k() == 0 {
            None
        } else {
            match self.distance(max_weight, exec)? {
                DistanceBound::Exact { d, .. } => Some(d),
                DistanceBound::Exceeds(w) => return Err(Error::DistanceExceeds(w)),
            }
        };
        Ok(CodeParams {
            n: self.n,
            k: self.k(),
            d,
        })
    }
}

/// Number of operators the distance scan examines up to weight `w`.
pub fn scan_cost(n: usize, w: usize) -> f64 {
    (1..=w.min(n))
        .map(|j| {
            let binom = (0..j).fold(1f64, |acc, i| acc * (n - i) as f64 / (i + 1) as f64);
            3f64.powi(j as i32) * binom
        })
        .sum()
}

/// Outcome of [`verify_golden_logicals`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenReport {
    /// `pairing[i][j]` = symplectic product of `xbars[i]` and `zbars[j]`.
    pub pairing: Vec<Vec<u8>>,
    pub x_weights: Vec<usize>,
    pub z_weights: Vec<usize>,
    pub failures: Vec<String>,
}

impl GoldenReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for GoldenReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pairing:")?;
        for row in &self.pairing {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        writeln!(f, "x weights: {:?}", self.x_weights)?;
        writeln!(f, "z weights: {:?}", self.z_weights)?;
        if self.passed() {
            write!(f, "result: pass")
        } else {
            for fail in &self.failures {
                writeln!(f, "fail: {fail}")?;
            }
            write!(f, "result: fail")
        }
    }
}

/// Checks that `xbars`/`zbars` form a canonical logical basis for `code`.
/// Every failed condition is listed; nothing short-circuits.
pub fn verify_golden_logicals(
    code: &StabilizerCode,
    xbars: &[PauliOperator],
    zbars: &[PauliOperator],
) -> GoldenReport {
    let mut failures = Vec::new();
    let all: Vec<(&str, usize, &PauliOperator)> = xbars
        .iter()
        .enumerate()
        .map(|(i, p)| ("x", i, p))
        .chain(zbars.iter().enumerate().map(|(i, p)| ("z", i, p)))
        .collect();

    if xbars.len() != zbars.len() {
        failures.push(format!(
            "{} x operators but {} z operators",
            xbars.len(),
            zbars.len()
        ));
    }
    if xbars.len() != code.k() {
        failures.push(format!("code has k={} but {} pairs given", code.k(), xbars.len()));
    }
    let mut usable = true;
    for &(kind, i, p) in &all {
        if p.n() != code.n() {
            failures.push(format!("{kind}{} acts on {} qubits, code has {}", i + 1, p.n(), code.n()));
            usable = false;
        }
    }
    if !usable {
        return GoldenReport {
            pairing: Vec::new(),
            x_weights: xbars.iter().map(PauliOperator::weight).collect(),
            z_weights: zbars.iter().map(PauliOperator::weight).collect(),
            failures,
        };
    }

    for &(kind, i, p) in &all {
        for (c, check) in code.checks().iter().enumerate() {
            if check.anticommutes_unchecked(p) {
                failures.push(format!("{kind}{} anticommutes with check {}", i + 1, c + 1));
            }
        }
        if code.span.contains(&p.to_symplectic()) {
            failures.push(format!("{kind}{} is a product of checks", i + 1));
        }
    }

    let pairing: Vec<Vec<u8>> = xbars
        .iter()
        .map(|x| zbars.iter().map(|z| x.anticommutes_unchecked(z) as u8).collect())
        .collect();
    for (i, row) in pairing.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != (i == j) as u8 {
                failures.push(format!("pairing[{}][{}] = {v}", i + 1, j + 1));
            }
        }
    }
    for (kind, ops) in [("x", xbars), ("z", zbars)] {
        for i in 0..ops.len() {
            for j in i + 1..ops.len() {
                if ops[i].anticommutes_unchecked(&ops[j]) {
                    failures.push(format!("{kind}{} and {kind}{} anticommute", i + 1, j + 1));
                }
            }
        }
    }
    for i in 0..zbars.len() {
        for j in i + 1..zbars.len() {
            let a = zbars[i].support();
            if zbars[j].support().iter().any(|q| a.contains(q)) {
                failures.push(format!("z supports {} and {} overlap", i + 1, j + 1));
            }
        }
    }

    GoldenReport {
        pairing,
        x_weights: xbars.iter().map(PauliOperator::weight).collect(),
        z_weights: zbars.iter().map(PauliOperator::weight).collect(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codegen::checks_from_polyhedron;
    use crate::polyhedron::{cube, rhombic_dodecahedron};
    use crate::reference::{RD_CHECKS, RD_LOGICAL_X, RD_LOGICAL_Z};

    fn ops(rows: &[&str]) -> Vec<PauliOperator> {
        rows.iter().map(|r| r.parse().unwrap()).collect()
    }

    fn rd() -> StabilizerCode {
        StabilizerCode::from_checks(ops(&RD_CHECKS)).unwrap()
    }

    fn cube_code() -> StabilizerCode {
        StabilizerCode::from_checks(checks_from_polyhedron(&cube()).unwrap()).unwrap()
    }

    #[test]
    fn rd_rank_and_k() {
        let code = rd();
        assert_eq!(code.rank(), 11);
        assert_eq!(code.k(), 3);
        assert_eq!(code.independent_indices(), &(0..11).collect::<Vec<_>>()[..]);
        assert_eq!(
            code.stabilizer_witness(&code.checks()[11]).unwrap(),
            Some((0..11).collect())
        );
    }

    #[test]
    fn cube_rank_and_k() {
        let code = cube_code();
        assert_eq!(code.rank(), 5);
        assert_eq!(code.k(), 3);
    }

    #[test]
    fn empty_code() {
        let code = StabilizerCode::new(1, vec![]).unwrap();
        assert_eq!(code.k(), 1);
        assert_eq!(
            code.params(1, Exec::Sequential).unwrap(),
            CodeParams { n: 1, k: 1, d: Some(1) }
        );
        assert!(!code.weight_two_scan());
        let two = StabilizerCode::new(2, vec![]).unwrap();
        assert_eq!(two.params(2, Exec::Parallel).unwrap().to_string(), "[[2,2,1]]");
    }

    #[test]
    fn rejects_anticommuting_and_ragged_checks() {
        let bad = ops(&["XX", "ZI"]);
        assert_eq!(
            StabilizerCode::from_checks(bad).unwrap_err(),
            Error::NonCommuting { first: 1, second: 2 }
        );
        assert!(matches!(
            StabilizerCode::new(3, ops(&["XX"])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn canonical_logical_basis() {
        for code in [rd(), cube_code()] {
            let xs: Vec<PauliOperator> = code.logicals().iter().map(|l| l.x.clone()).collect();
            let zs: Vec<PauliOperator> = code.logicals().iter().map(|l| l.z.clone()).collect();
            let report = verify_golden_logicals(&code, &xs, &zs);
            let real: Vec<&String> = report
                .failures
                .iter()
                .filter(|f| !f.starts_with("z supports"))
                .collect();
            assert!(real.is_empty(), "{report}");
            assert_eq!(report.pairing, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        }
    }

    #[test]
    fn distances() {
        let code = rd();
        for exec in [Exec::Sequential, Exec::Parallel] {
            match code.distance(14, exec).unwrap() {
                DistanceBound::Exact { d, witness } => {
                    assert_eq!(d, 3);
                    assert!(code.is_logical(&witness));
                    assert_eq!(witness.weight(), 3);
                }
                other => panic!("{other:?}"),
            }
        }
        assert_eq!(code.distance(2, Exec::Parallel).unwrap(), DistanceBound::Exceeds(2));
        assert_eq!(cube_code().params(8, Exec::Parallel).unwrap().to_string(), "[[8,3,2]]");
    }

    #[test]
    fn distance_needs_logicals() {
        let code = StabilizerCode::from_checks(ops(&["XX", "ZZ"])).unwrap();
        assert_eq!(code.k(), 0);
        assert_eq!(code.distance(2, Exec::Sequential), Err(Error::NoLogicalQubits));
        assert_eq!(code.params(2, Exec::Sequential).unwrap().to_string(), "[[2,0]]");
    }

    #[test]
    fn weight_two_scans() {
        let code = rd();
        assert!(code.weight_two_scan());
        assert_eq!(code.first_undetected(2), (42 + 819, None));
        assert!(!cube_code().weight_two_scan());
    }

    #[test]
    fn golden_rd_logicals() {
        let code = rd();
        let report = verify_golden_logicals(&code, &ops(&RD_LOGICAL_X), &ops(&RD_LOGICAL_Z));
        assert!(report.passed(), "{report}");
        assert_eq!(report.z_weights, vec![3, 3, 3]);
        assert_eq!(report.x_weights, vec![4, 4, 4]);
    }

    #[test]
    fn check_is_not_a_logical() {
        let code = rd();
        let mut xs = ops(&RD_LOGICAL_X);
        xs[0] = RD_CHECKS[0].parse().unwrap();
        let report = verify_golden_logicals(&code, &xs, &ops(&RD_LOGICAL_Z));
        assert!(!report.passed());
        assert!(report.failures.contains(&"x1 is a product of checks".to_string()));
    }

    #[test]
    fn golden_basis_swap_in() {
        let pairs: Vec<LogicalPair> = RD_LOGICAL_X
            .iter()
            .zip(RD_LOGICAL_Z)
            .map(|(x, z)| LogicalPair { x: x.parse().unwrap(), z: z.parse().unwrap() })
            .collect();
        let code = rd().with_logical_basis(pairs.clone()).unwrap();
        assert_eq!(code.logicals(), &pairs[..]);
        let mut swapped = pairs;
        let z0 = swapped[0].z.clone();
        swapped[0].z = swapped[1].z.clone();
        swapped[1].z = z0;
        let err = rd().with_logical_basis(swapped.clone()).unwrap_err();
        assert!(matches!(err, Error::InvalidLogicals(_)));
        assert!(rd().with_logical_basis(swapped[..2].to_vec()).is_err());
    }

    #[test]
    fn builtin_polyhedra_give_reference_codes() {
        let from_poly =
            StabilizerCode::from_checks(checks_from_polyhedron(&rhombic_dodecahedron()).unwrap())
                .unwrap();
        assert_eq!(from_poly.params(14, Exec::Parallel).unwrap().to_string(), "[[14,3,3]]");
    }

    #[test]
    fn cost_estimate() {
        assert_eq!(scan_cost(14, 2), 42.0 + 819.0);
        assert_eq!(scan_cost(14, 3), 42.0 + 819.0 + 364.0 * 27.0);
    }
}
