use core::fmt;

use crate::error::{Error, Result};
use crate::modular::{inverse_mod, ResidueInt};

/// A 2x2 matrix over `Z/MZ`, entries stored as canonical representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2Mod {
    modulus: u32,
    e: [u32; 4],
}

impl Mat2Mod {
    /// Entries in row-major order `(a b; c d)`, reduced mod `modulus`.
    pub fn new(a: i64, b: i64, c: i64, d: i64, modulus: u64) -> Self {
        assert!((1..=u32::MAX as u64).contains(&modulus));
        let r = |v: i64| ResidueInt::new(v, modulus).value() as u32;
        Mat2Mod { modulus: modulus as u32, e: [r(a), r(b), r(c), r(d)] }
    }

    pub fn from_residues(entries: [ResidueInt; 4]) -> Result<Self> {
        let m = entries[0].modulus();
        if entries.iter().any(|r| r.modulus() != m) {
            return Err(Error::ModulusMismatch);
        }
        let v = |i: usize| entries[i].value() as i64;
        Ok(Self::new(v(0), v(1), v(2), v(3), m))
    }

    pub fn identity(modulus: u64) -> Self {
        Self::new(1, 0, 0, 1, modulus)
    }

    /// `(1 1; 0 1)`
    pub fn upper_unipotent(modulus: u64) -> Self {
        Self::new(1, 1, 0, 1, modulus)
    }

    /// `(1 0; 1 1)`
    pub fn lower_unipotent(modulus: u64) -> Self {
        Self::new(1, 0, 1, 1, modulus)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus as u64
    }

    /// Row-major raw entries.
    pub fn entries(&self) -> [u64; 4] {
        self.e.map(|v| v as u64)
    }

    pub fn entry(&self, row: usize, col: usize) -> ResidueInt {
        ResidueInt::from_u64(self.e[2 * row + col] as u64, self.modulus())
    }

    pub fn det(&self) -> ResidueInt {
        let m = self.modulus as u64;
        let [a, b, c, d] = self.entries();
        ResidueInt::from_u64((a * d % m + m - b * c % m) % m, m)
    }

    pub fn is_special(&self) -> bool {
        self.det() == ResidueInt::one(self.modulus())
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        let m = self.modulus as u64;
        let [a, b, c, d] = self.entries();
        let [p, q, r, s] = o.entries();
        Mat2Mod {
            modulus: self.modulus,
            e: [
                ((a * p + b * r) % m) as u32,
                ((a * q + b * s) % m) as u32,
                ((c * p + d * r) % m) as u32,
                ((c * q + d * s) % m) as u32,
            ],
        }
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.modulus != o.modulus {
            return Err(Error::ModulusMismatch);
        }
        Ok(self.mul(o))
    }

    /// Inverse of a matrix with unit determinant.
    pub fn inverse(&self) -> Result<Self> {
        let m = self.modulus();
        let dinv = inverse_mod(&self.det())?.value() as i64;
        let [a, b, c, d] = self.entries().map(|v| v as i64);
        Ok(Self::new(d * dinv, -b * dinv, -c * dinv, a * dinv, m))
    }

    /// Entrywise reduction to a divisor of the modulus.
    pub fn reduce(&self, m: u64) -> Result<Self> {
        if m == 0 || self.modulus() % m != 0 {
            return Err(Error::NotADivisor(m, self.modulus()));
        }
        let [a, b, c, d] = self.entries().map(|v| v as i64);
        Ok(Self::new(a, b, c, d, m))
    }
}

impl fmt::Display for Mat2Mod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.e;
        write!(f, "({a} {b}; {c} {d}) mod {}", self.modulus)
    }
}
