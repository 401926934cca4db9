//! n-qubit Pauli operators in symplectic form with exact phase tracking.
//!
//! An operator is `i^phase · ∏_q X_q^{x_q} Z_q^{z_q}`. With this normal form
//! `Y = i·XZ`, so a single-qubit operator with `x = z = 1` and `phase = 1`
//! is `Y`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::gf2::BitVec;

/// Single-qubit Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    /// The three non-identity letters in enumeration order.
    pub const NONTRIVIAL: [Letter; 3] = [Letter::X, Letter::Y, Letter::Z];

    fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> Letter {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    x: BitVec,
    z: BitVec,
    phase: u8,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
            phase: 0,
        }
    }

    /// Hermitian operator with sign `+1` from per-qubit letters.
    pub fn from_letters(letters: &[Letter]) -> Self {
        let mut p = PauliOperator::identity(letters.len());
        for (q, &l) in letters.iter().enumerate() {
            p.set_letter(q, l);
        }
        p
    }

    /// `letter` on every qubit of `support` (0-based).
    pub fn uniform(n: usize, support: &[usize], letter: Letter) -> Self {
        let mut p = PauliOperator::identity(n);
        for &q in support {
            p.set_letter(q, letter);
        }
        p
    }

    pub fn single(n: usize, qubit: usize, letter: Letter) -> Self {
        PauliOperator::uniform(n, &[qubit], letter)
    }

    /// Builds from raw parts; `phase` is reduced mod 4.
    pub fn from_parts(x: BitVec, z: BitVec, phase: u8) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: z.len(),
            });
        }
        Ok(PauliOperator {
            x,
            z,
            phase: phase % 4,
        })
    }

    /// Hermitian operator with sign `+1` from an `x ∥ z` row.
    pub fn from_symplectic(row: &BitVec) -> Result<Self> {
        if row.len() % 2 != 0 {
            return Err(Error::OddColumns(row.len()));
        }
        let n = row.len() / 2;
        let mut p = PauliOperator::identity(n);
        for i in row.iter_ones() {
            if i < n {
                p.x.set(i, true);
            } else {
                p.z.set(i - n, true);
            }
        }
        p.phase = (p.y_count() % 4) as u8;
        Ok(p)
    }

    pub fn to_symplectic(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.x.len()
    }

    #[inline]
    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    #[inline]
    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    #[inline]
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn letter(&self, q: usize) -> Letter {
        Letter::from_bits(self.x.get(q), self.z.get(q))
    }

    pub fn letters(&self) -> Vec<Letter> {
        (0..self.n()).map(|q| self.letter(q)).collect()
    }

    /// Overwrites qubit `q` with `letter`, keeping the printed sign.
    pub fn set_letter(&mut self, q: usize, letter: Letter) {
        let was_y = self.letter(q) == Letter::Y;
        let (x, z) = letter.bits();
        self.x.set(q, x);
        self.z.set(q, z);
        let is_y = letter == Letter::Y;
        self.phase = (self.phase + 4 + is_y as u8 - was_y as u8) % 4;
    }

    fn y_count(&self) -> usize {
        self.x
            .words()
            .iter()
            .zip(self.z.words())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Exponent `s` of the printed sign `i^s`, i.e. the phase once each `Y`
    /// absorbs its factor of `i`.
    pub fn sign_exponent(&self) -> u8 {
        ((self.phase as usize + 4 - self.y_count() % 4) % 4) as u8
    }

    pub fn is_hermitian(&self) -> bool {
        self.sign_exponent() % 2 == 0
    }

    pub fn is_identity_pattern(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        self.x
            .words()
            .iter()
            .zip(self.z.words())
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// 0-based qubits acted on non-trivially.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&q| self.x.get(q) || self.z.get(q))
            .collect()
    }

    fn check_len(&self, other: &PauliOperator) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    /// Group product `self · other`.
    pub fn multiply(&self, other: &PauliOperator) -> Result<PauliOperator> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.mul_assign_unchecked(other);
        Ok(out)
    }

    /// `self ← self · other`; lengths must match.
    pub(crate) fn mul_assign_unchecked(&mut self, other: &PauliOperator) {
        // Z^a X^b = (-1)^{a·b} X^b Z^a when moving other's X past self's Z.
        let mut swaps = 0u32;
        for (sz, ox) in self.z.words().iter().zip(other.x.words()) {
            swaps += (sz & ox).count_ones();
        }
        self.phase = ((self.phase as u32 + other.phase as u32 + 2 * (swaps & 1)) % 4) as u8;
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    /// 0 if the operators commute, 1 if they anticommute.
    pub fn symplectic_product(&self, other: &PauliOperator) -> Result<u8> {
        self.check_len(other)?;
        Ok(self.anticommutes_unchecked(other) as u8)
    }

    #[inline]
    pub(crate) fn anticommutes_unchecked(&self, other: &PauliOperator) -> bool {
        let mut acc = 0u64;
        let xs = self.x.words();
        let zs = self.z.words();
        let xo = other.x.words();
        let zo = other.z.words();
        for i in 0..xs.len() {
            acc ^= (xs[i] & zo[i]) ^ (zs[i] & xo[i]);
        }
        acc.count_ones() & 1 == 1
    }

    pub fn commutes_with(&self, other: &PauliOperator) -> Result<bool> {
        Ok(self.symplectic_product(other)? == 0)
    }

    pub(crate) fn clear(&mut self) {
        self.x.clear();
        self.z.clear();
        self.phase = 0;
    }

    pub(crate) fn xor_pattern(&mut self, other: &PauliOperator) {
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    /// Iterates over all Hermitian operators of exactly weight `w` on `n`
    /// qubits: supports in lexicographic order, then letter patterns in
    /// base-3 order (X < Y < Z, first support qubit most significant).
    pub fn all_of_weight(n: usize, w: usize) -> impl Iterator<Item = PauliOperator> {
        (0..n)
            .combinations(w)
            .flat_map(move |support| patterns_on(n, support))
    }
}

/// All `3^w` letter patterns on a fixed support, in base-3 order.
pub fn patterns_on(n: usize, support: Vec<usize>) -> impl Iterator<Item = PauliOperator> {
    let w = support.len();
    let count = 3usize.pow(w as u32);
    (0..count).map(move |idx| {
        let mut p = PauliOperator::identity(n);
        let mut rest = idx;
        for pos in (0..w).rev() {
            p.set_letter(support[pos], Letter::NONTRIVIAL[rest % 3]);
            rest /= 3;
        }
        p
    })
}

fn sign_prefix(exp: u8) -> &'static str {
    match exp % 4 {
        0 => "",
        1 => "+i",
        2 => "-",
        _ => "-i",
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(sign_prefix(self.sign_exponent()))?;
        for q in 0..self.n() {
            write!(f, "{}", self.letter(q).as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    /// Grammar: `sign? [IXYZ]+`, sign one of `+`, `-`, `+i`, `-i`.
    /// Positions in errors are 1-based character offsets.
    fn from_str(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyPauli);
        }
        let (sign, body, offset) = if let Some(rest) = text.strip_prefix("+i") {
            (1u8, rest, 2)
        } else if let Some(rest) = text.strip_prefix("-i") {
            (3, rest, 2)
        } else if let Some(rest) = text.strip_prefix('+') {
            (0, rest, 1)
        } else if let Some(rest) = text.strip_prefix('-') {
            (2, rest, 1)
        } else {
            (0, text, 0)
        };
        if body.is_empty() {
            return Err(Error::EmptyPauli);
        }
        let mut letters = Vec::with_capacity(body.len());
        for (i, c) in body.chars().enumerate() {
            let l = match c {
                'I' => Letter::I,
                'X' => Letter::X,
                'Y' => Letter::Y,
                'Z' => Letter::Z,
                _ => {
                    return Err(Error::PauliSyntax {
                        position: offset + i + 1,
                        found: c,
                    })
                }
            };
            letters.push(l);
        }
        let mut p = PauliOperator::from_letters(&letters);
        p.phase = (p.phase + sign) % 4;
        Ok(p)
    }
}

pub fn parse_pauli(text: &str) -> Result<PauliOperator> {
    text.parse()
}
