//! Phase-tracked Pauli group elements in symplectic binary form.
//!
//! An operator on `n` qubits is stored as `i^phase_exp · X^x · Z^z`, where
//! `X^x` (resp. `Z^z`) is the tensor product of `X` (resp. `Z`) over the set
//! bits of `x` (resp. `z`). On each qubit the `X` factor sits left of the `Z`
//! factor, so `Y = i·X·Z` carries one unit of phase. Qubit `k` (0-based) is bit
//! `k` of both masks.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported qubit count; masks fit in a `u8`.
pub const MAX_QUBITS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub const PAULIS: [Letter; 3] = [Letter::X, Letter::Y, Letter::Z];

    pub fn from_bits(x: bool, z: bool) -> Letter {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (false, true) => Letter::Z,
            (true, true) => Letter::Y,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Z => (false, true),
            Letter::Y => (true, true),
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

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::Size(n));
    }
    Ok(())
}

fn full_mask(n: usize) -> u8 {
    if n >= 8 {
        u8::MAX
    } else {
        (1u8 << n) - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    n: u8,
    phase_exp: u8,
    x: u8,
    z: u8,
}

impl PauliOperator {
    pub fn new(n: usize, phase_exp: u8, x: u8, z: u8) -> Result<Self> {
        check_size(n)?;
        let mask = full_mask(n);
        if x & !mask != 0 || z & !mask != 0 {
            return Err(Error::Parse(format!("mask bits set above qubit {n}")));
        }
        Ok(PauliOperator {
            n: n as u8,
            phase_exp: phase_exp % 4,
            x,
            z,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0, 0, 0)
    }

    /// Weight-one Hermitian operator `letter` on `qubit` (0-based).
    pub fn single(n: usize, qubit: usize, letter: Letter) -> Result<Self> {
        check_size(n)?;
        if qubit >= n {
            return Err(Error::InvalidVertex { vertex: qubit, n });
        }
        let mut letters = vec![Letter::I; n];
        letters[qubit] = letter;
        Self::from_letters(false, &letters)
    }

    /// Hermitian operator `±L_1 ⊗ … ⊗ L_n`.
    pub fn from_letters(negative: bool, letters: &[Letter]) -> Result<Self> {
        check_size(letters.len())?;
        let (mut x, mut z) = (0u8, 0u8);
        for (k, l) in letters.iter().enumerate() {
            let (xb, zb) = l.bits();
            x |= (xb as u8) << k;
            z |= (zb as u8) << k;
        }
        let y = (x & z).count_ones() as u8;
        let sign_exp = if negative { 2 } else { 0 };
        Self::new(letters.len(), (sign_exp + y) % 4, x, z)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn x_mask(&self) -> u8 {
        self.x
    }

    pub fn z_mask(&self) -> u8 {
        self.z
    }

    /// Symplectic vector packed as `x | z << n`.
    pub fn symplectic(&self) -> u16 {
        self.x as u16 | (self.z as u16) << self.n
    }

    pub fn letter(&self, qubit: usize) -> Letter {
        Letter::from_bits(self.x >> qubit & 1 == 1, self.z >> qubit & 1 == 1)
    }

    pub fn letters(&self) -> Vec<Letter> {
        (0..self.n()).map(|k| self.letter(k)).collect()
    }

    /// Number of `Y` letters, i.e. `popcount(x AND z)`.
    fn y_count(&self) -> u8 {
        (self.x & self.z).count_ones() as u8
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase_exp % 2 == self.y_count() % 2
    }

    /// Overall sign `±1` of a Hermitian operator relative to its letter string.
    pub fn sign(&self) -> Option<i8> {
        if !self.is_hermitian() {
            return None;
        }
        match (self.phase_exp + 4 - self.y_count() % 4) % 4 {
            0 => Some(1),
            _ => Some(-1),
        }
    }

    /// True if this is exactly the identity, phase included.
    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0 && self.phase_exp == 0
    }

    pub fn is_scalar(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    pub fn negate(&self) -> Self {
        PauliOperator {
            phase_exp: (self.phase_exp + 2) % 4,
            ..*self
        }
    }

    /// The same letters with sign `+1`.
    pub fn unsigned(&self) -> Self {
        PauliOperator {
            phase_exp: self.y_count() % 4,
            ..*self
        }
    }

    pub fn multiply(&self, other: &PauliOperator) -> Result<PauliOperator> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        // Moving our Z factors past the other operator's X factors costs a
        // sign per overlapping qubit.
        let swaps = (self.z & other.x).count_ones() as u8;
        Ok(PauliOperator {
            n: self.n,
            phase_exp: (self.phase_exp + other.phase_exp + 2 * swaps) % 4,
            x: self.x ^ other.x,
            z: self.z ^ other.z,
        })
    }

    pub fn commutes(&self, other: &PauliOperator) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let form = (self.x & other.z).count_ones() + (self.z & other.x).count_ones();
        Ok(form.is_multiple_of(2))
    }

    /// Phaseless letters on the qubits of `side` (bit mask), ascending.
    pub fn restrict(&self, side: u8) -> PauliString {
        let letters = (0..self.n())
            .filter(|k| side >> k & 1 == 1)
            .map(|k| self.letter(k))
            .collect();
        PauliString { letters }
    }

    /// Canonical text form, e.g. `-Y1·Y2·Z3`.
    pub fn render(&self) -> Result<String> {
        let sign = self.sign().ok_or(Error::NonHermitian)?;
        let mut out = String::with_capacity(4 * self.n());
        out.push(if sign > 0 { '+' } else { '-' });
        for k in 0..self.n() {
            if k > 0 {
                out.push('·');
            }
            out.push(self.letter(k).as_char());
            out.push_str(&(k + 1).to_string());
        }
        Ok(out)
    }
}

impl Mul for PauliOperator {
    type Output = PauliOperator;

    /// Panics on mismatched qubit counts; use [`PauliOperator::multiply`] for
    /// a checked product.
    fn mul(self, rhs: PauliOperator) -> PauliOperator {
        self.multiply(&rhs).expect("qubit count mismatch")
    }
}

/// Parses the canonical form. A leading `+`, `-` or `−` is required; factors
/// are separated by `·` (`.` and `*` are accepted) and must list qubits
/// `1..=n` in order.
impl FromStr for PauliOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let negative = match chars.next() {
            Some('+') => false,
            Some('-') | Some('−') => true,
            _ => return Err(Error::Parse(format!("missing sign in '{s}'"))),
        };
        let body = chars.as_str();
        let mut letters = Vec::new();
        for (k, factor) in body.split(['·', '.', '*']).enumerate() {
            let mut fc = factor.chars();
            let letter = fc
                .next()
                .and_then(Letter::from_char)
                .ok_or_else(|| Error::Parse(format!("bad factor '{factor}' in '{s}'")))?;
            let idx: usize = fc
                .as_str()
                .parse()
                .map_err(|_| Error::Parse(format!("bad qubit index in '{factor}'")))?;
            if idx != k + 1 {
                return Err(Error::Parse(format!(
                    "factor '{factor}' out of order (expected qubit {})",
                    k + 1
                )));
            }
            letters.push(letter);
        }
        Self::from_letters(negative, &letters)
    }
}

/// A phaseless string of single-qubit letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    letters: Vec<Letter>,
}

impl PauliString {
    pub fn new(letters: Vec<Letter>) -> Self {
        PauliString { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Dense index in `0..4^len`, two bits per letter.
    pub fn index(&self) -> usize {
        self.letters.iter().enumerate().fold(0, |acc, (k, l)| {
            let (x, z) = l.bits();
            acc | (x as usize) << (2 * k) | (z as usize) << (2 * k + 1)
        })
    }

    /// Weight of the string (non-identity letters).
    pub fn weight(&self) -> usize {
        self.letters.iter().filter(|&&l| l != Letter::I).count()
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
