//! Linear algebra over GF(2).
//!
//! Vectors are packed 64 bits to a word. Symplectic vectors of length `2n`
//! store the x-part in columns `0..n` and the z-part in `n..2n`.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// Fixed-length packed bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parses a string of `0`/`1` characters, bit 0 first.
    pub fn parse(text: &str) -> Option<Self> {
        let mut bits = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return None,
            }
        }
        Some(BitVec::from_bools(&bits))
    }

    /// Low `len` bits of `value`, bit 0 = least significant.
    pub fn from_u64(len: usize, value: u64) -> Self {
        assert!(len <= WORD);
        let mut v = BitVec::zeros(len);
        if len > 0 {
            let mask = if len == WORD { !0 } else { (1u64 << len) - 1 };
            v.words[0] = value & mask;
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    /// Inner product mod 2.
    #[inline]
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + t)
                }
            })
        })
    }

    /// Concatenation `self ∥ other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Bits `start..end` as a new vector.
    pub fn slice(&self, start: usize, end: usize) -> BitVec {
        let mut out = BitVec::zeros(end - start);
        for i in self.iter_ones().filter(|&i| i >= start && i < end) {
            out.set(i - start, true);
        }
        out
    }

    /// Swaps the two halves of a symplectic vector.
    pub fn swap_halves(&self) -> BitVec {
        let n = self.len / 2;
        self.slice(n, 2 * n).concat(&self.slice(0, n))
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

/// Symplectic form on `x ∥ z` vectors: `<a.x, b.z> + <a.z, b.x>`.
pub fn symplectic_form(a: &BitVec, b: &BitVec) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.len() % 2 != 0 {
        return Err(Error::OddColumns(a.len()));
    }
    let n = a.len() / 2;
    let mut acc = false;
    for i in a.iter_ones() {
        let partner = if i < n { i + n } else { i - n };
        acc ^= b.get(partner);
    }
    Ok(acc)
}

/// A list of equal-length rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn new(ncols: usize) -> Self {
        BitMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(ncols: usize, rows: Vec<BitVec>) -> Result<Self> {
        let mut m = BitMatrix::new(ncols);
        for row in rows {
            m.push(row)?;
        }
        Ok(m)
    }

    pub fn push(&mut self, row: BitVec) -> Result<()> {
        if row.len() != self.ncols {
            return Err(Error::LengthMismatch {
                left: row.len(),
                right: self.ncols,
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Fully reduced row-echelon basis for the span of a sequence of rows.
///
/// Every basis row has a pivot column where all other basis rows are zero,
/// so reduction can run in any order. Each basis row remembers which input
/// rows it is the sum of.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    ncols: usize,
    sources: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
    combos: Vec<BitVec>,
    independent: Vec<usize>,
}

impl SpanBasis {
    pub fn new(ncols: usize) -> Self {
        SpanBasis {
            ncols,
            sources: 0,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            independent: Vec::new(),
        }
    }

    pub fn from_matrix(m: &BitMatrix) -> Self {
        let mut basis = SpanBasis::new(m.ncols());
        for row in m.rows() {
            basis.insert(row.clone());
        }
        basis
    }

    /// Adds a row. Returns `true` if it increased the rank.
    pub fn insert(&mut self, row: BitVec) -> bool {
        assert_eq!(row.len(), self.ncols, "row length");
        let source = self.sources;
        self.sources += 1;
        for c in &mut self.combos {
            c.len += 1;
            c.words.resize(words_for(c.len), 0);
        }

        let (residual, mut combo) = self.reduce(&row);
        combo.set(source, true);
        let Some(pivot) = residual.first_one() else {
            return false;
        };
        for (r, c) in self.rows.iter_mut().zip(self.combos.iter_mut()) {
            if r.get(pivot) {
                r.xor_assign(&residual);
                c.xor_assign(&combo);
            }
        }
        self.rows.push(residual);
        self.pivots.push(pivot);
        self.combos.push(combo);
        self.independent.push(source);
        true
    }

    /// Residual of `v` after removing span components, plus the set of
    /// input rows whose sum was removed.
    pub fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut residual = v.clone();
        let mut combo = BitVec::zeros(self.sources);
        for ((row, &p), c) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            if residual.get(p) {
                residual.xor_assign(row);
                combo.xor_assign(c);
            }
        }
        (residual, combo)
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut residual = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if residual.get(p) {
                residual.xor_assign(row);
            }
        }
        residual.is_zero()
    }

    /// Input row indices summing to `v`, if `v` is in the span.
    pub fn witness(&self, v: &BitVec) -> Option<Vec<usize>> {
        let (residual, combo) = self.reduce(v);
        residual.is_zero().then(|| combo.iter_ones().collect())
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Indices of the input rows that raised the rank, in input order.
    pub fn independent(&self) -> &[usize] {
        &self.independent
    }

    /// Basis of `{ v : row · v = 0 for every row }`.
    pub fn kernel(&self) -> Vec<BitVec> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVec::zeros(self.ncols);
                v.set(free, true);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if row.get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }
}

pub fn rank(m: &BitMatrix) -> usize {
    SpanBasis::from_matrix(m).rank()
}

/// Whether `v` is a sum of rows of `m`; on success returns the row indices.
pub fn in_span(v: &BitVec, m: &BitMatrix) -> Result<Option<Vec<usize>>> {
    if v.len() != m.ncols() {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: m.ncols(),
        });
    }
    Ok(SpanBasis::from_matrix(m).witness(v))
}

pub fn kernel(m: &BitMatrix) -> Vec<BitVec> {
    SpanBasis::from_matrix(m).kernel()
}

/// Output of [`symplectic_gram_schmidt`].
#[derive(Clone, Debug)]
pub struct SymplecticBasis {
    /// Maximal independent subset of the input rows, in input order.
    pub independent: BitMatrix,
    /// Input indices of the rows in `independent`.
    pub independent_rows: Vec<usize>,
    /// Pairs `(x̄_i, z̄_i)` with `<x̄_i, z̄_j> = δ_ij` and all other products 0.
    pub logical_pairs: Vec<(BitVec, BitVec)>,
    /// The span of the input rows.
    pub span: SpanBasis,
}

/// Splits the centralizer of commuting `checks` into the check span plus
/// canonically paired logical vectors.
pub fn symplectic_gram_schmidt(checks: &BitMatrix) -> Result<SymplecticBasis> {
    let ncols = checks.ncols();
    if ncols % 2 != 0 {
        return Err(Error::OddColumns(ncols));
    }
    let rows = checks.rows();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if symplectic_form(&rows[i], &rows[j])? {
                return Err(Error::NonCommuting {
                    first: i + 1,
                    second: j + 1,
                });
            }
        }
    }

    let span = SpanBasis::from_matrix(checks);
    let independent_rows = span.independent().to_vec();
    let independent = BitMatrix::from_rows(
        ncols,
        independent_rows.iter().map(|&i| rows[i].clone()).collect(),
    )?;

    // <s, v> = (s.z ∥ s.x) · v, so the centralizer is the kernel of the
    // half-swapped check matrix.
    let mut swapped = SpanBasis::new(ncols);
    for row in rows {
        swapped.insert(row.swap_halves());
    }
    let mut extended = span.clone();
    let mut pool: Vec<BitVec> = swapped
        .kernel()
        .into_iter()
        .filter(|v| extended.insert(v.clone()))
        .collect();

    let mut logical_pairs = Vec::with_capacity(pool.len() / 2);
    while !pool.is_empty() {
        let a = pool.remove(0);
        let partner = pool
            .iter()
            .position(|b| symplectic_form(&a, b).unwrap_or(false))
            .ok_or(Error::DegenerateLogicals(logical_pairs.len() * 2 + 1))?;
        let b = pool.remove(partner);
        for c in &mut pool {
            let with_b = symplectic_form(c, &b)?;
            let with_a = symplectic_form(c, &a)?;
            if with_b {
                c.xor_assign(&a);
            }
            if with_a {
                c.xor_assign(&b);
            }
        }
        logical_pairs.push((a, b));
    }

    Ok(SymplecticBasis {
        independent,
        independent_rows,
        logical_pairs,
        span,
    })
}

/// Greedily multiplies `v` by rows of `stabilizers` while the Pauli weight
/// (number of qubits with x or z set) drops.
pub fn reduce_weight(v: &BitVec, stabilizers: &BitMatrix) -> BitVec {
    let weight = |u: &BitVec| {
        let n = u.len() / 2;
        (0..n).filter(|&q| u.get(q) || u.get(q + n)).count()
    };
    let mut best = v.clone();
    let mut best_w = weight(&best);
    loop {
        let mut improved = false;
        for s in stabilizers.rows() {
            let mut cand = best.clone();
            cand.xor_assign(s);
            let w = weight(&cand);
            if w < best_w {
                best = cand;
                best_w = w;
                improved = true;
            }
        }
        if !improved {
            return best;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bv(s: &str) -> BitVec {
        BitVec::parse(s).unwrap()
    }

    #[test]
    fn bitvec_basics() {
        let mut v = BitVec::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.count_ones(), 3);
        assert_eq!(v.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.first_one(), Some(0));
        v.flip(0);
        assert_eq!(v.first_one(), Some(64));
        assert_eq!(bv("0110").to_string(), "0110");
        assert!(BitVec::parse("01a").is_none());
        assert_eq!(BitVec::from_u64(4, 0b0110), bv("0110"));
    }

    #[test]
    fn rank_of_empty_matrix_is_zero() {
        assert_eq!(rank(&BitMatrix::new(6)), 0);
        assert_eq!(rank(&BitMatrix::new(0)), 0);
    }

    #[test]
    fn rank_counts_dependencies() {
        let m = BitMatrix::from_rows(4, vec![bv("1100"), bv("0110"), bv("1010"), bv("0001")])
            .unwrap();
        assert_eq!(rank(&m), 3);
        let basis = SpanBasis::from_matrix(&m);
        assert_eq!(basis.independent(), &[0, 1, 3]);
    }

    #[test]
    fn span_witness() {
        let m = BitMatrix::from_rows(4, vec![bv("1100"), bv("0110"), bv("0001")]).unwrap();
        assert_eq!(in_span(&bv("1010"), &m).unwrap(), Some(vec![0, 1]));
        assert_eq!(in_span(&bv("0000"), &m).unwrap(), Some(vec![]));
        assert_eq!(in_span(&bv("1000"), &m).unwrap(), None);
        assert!(matches!(
            in_span(&bv("100"), &m),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn kernel_is_orthogonal_and_complete() {
        let m = BitMatrix::from_rows(5, vec![bv("11000"), bv("01100"), bv("00111")]).unwrap();
        let ker = kernel(&m);
        assert_eq!(ker.len(), 5 - rank(&m));
        for v in &ker {
            for r in m.rows() {
                assert!(!r.dot(v));
            }
        }
        let km = BitMatrix::from_rows(5, ker).unwrap();
        assert_eq!(rank(&km), 2);
    }

    #[test]
    fn symplectic_form_on_single_qubit() {
        // X = (1|0), Z = (0|1), Y = (1|1)
        assert!(symplectic_form(&bv("10"), &bv("01")).unwrap());
        assert!(symplectic_form(&bv("10"), &bv("11")).unwrap());
        assert!(!symplectic_form(&bv("11"), &bv("11")).unwrap());
        assert!(symplectic_form(&bv("101"), &bv("011")).is_err());
    }

    #[test]
    fn gram_schmidt_without_checks() {
        let basis = symplectic_gram_schmidt(&BitMatrix::new(2)).unwrap();
        assert_eq!(basis.logical_pairs.len(), 1);
        let (x, z) = &basis.logical_pairs[0];
        assert!(symplectic_form(x, z).unwrap());
    }

    #[test]
    fn gram_schmidt_rejects_anticommuting_rows() {
        // X⊗X and Z⊗I
        let m = BitMatrix::from_rows(4, vec![bv("1100"), bv("0010")]).unwrap();
        assert_eq!(
            symplectic_gram_schmidt(&m).unwrap_err(),
            Error::NonCommuting {
                first: 1,
                second: 2
            }
        );
    }

    #[test]
    fn gram_schmidt_on_repetition_code() {
        // Z1Z2, Z2Z3 on 3 qubits.
        let m = BitMatrix::from_rows(6, vec![bv("000110"), bv("000011")]).unwrap();
        let basis = symplectic_gram_schmidt(&m).unwrap();
        assert_eq!(basis.logical_pairs.len(), 1);
        let (x, z) = &basis.logical_pairs[0];
        assert!(symplectic_form(x, z).unwrap());
        for r in m.rows() {
            assert!(!symplectic_form(r, x).unwrap());
            assert!(!symplectic_form(r, z).unwrap());
        }
    }

    #[test]
    fn reduce_weight_drops_stabilizer_factors() {
        // Z1Z2 stabilizer; Z1Z2Z3 reduces to Z3.
        let m = BitMatrix::from_rows(6, vec![bv("000110")]).unwrap();
        assert_eq!(reduce_weight(&bv("000111"), &m), bv("000001"));
    }

    fn arb_matrix() -> impl Strategy<Value = BitMatrix> {
        (1usize..12, 0usize..10).prop_flat_map(|(ncols, nrows)| {
            prop::collection::vec(prop::collection::vec(any::<bool>(), ncols), nrows).prop_map(
                move |rows| {
                    BitMatrix::from_rows(ncols, rows.iter().map(|r| BitVec::from_bools(r)).collect())
                        .unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rank_bounded_and_invariant(m in arb_matrix(), seed in any::<u64>()) {
            let r = rank(&m);
            prop_assert!(r <= m.nrows().min(m.ncols()));

            let mut rows = m.rows().to_vec();
            let len = rows.len();
            if len > 1 {
                rows.rotate_left((seed as usize) % len);
                let i = (seed >> 8) as usize % len;
                let j = (seed >> 16) as usize % len;
                if i != j {
                    let add = rows[j].clone();
                    rows[i].xor_assign(&add);
                }
            }
            let m2 = BitMatrix::from_rows(m.ncols(), rows).unwrap();
            prop_assert_eq!(rank(&m2), r);
        }

        #[test]
        fn witness_sums_to_vector(m in arb_matrix(), pick in any::<u64>()) {
            let mut v = BitVec::zeros(m.ncols());
            for (i, row) in m.rows().iter().enumerate() {
                if (pick >> (i % 64)) & 1 == 1 {
                    v.xor_assign(row);
                }
            }
            let w = in_span(&v, &m).unwrap().expect("in span");
            let mut sum = BitVec::zeros(m.ncols());
            for i in w {
                sum.xor_assign(m.row(i));
            }
            prop_assert_eq!(sum, v);
        }
    }
}
