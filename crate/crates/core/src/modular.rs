//! Residue rings `Z/MZ`, the Chinese remainder map, unit groups and exact
//! rationals.
//!
//! Moduli stay below `10^6`, so every product of two residues fits in 64
//! bits; multiplication is still overflow-checked.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// An element of `Z/MZ`, always stored as its canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueInt {
    value: u64,
    modulus: u64,
}

impl ResidueInt {
    /// Reduces `value` into `[0, modulus)`. Panics if `modulus == 0`.
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be at least 1");
        let m = modulus as i128;
        let v = (value as i128).rem_euclid(m) as u64;
        ResidueInt { value: v, modulus }
    }

    pub fn from_u64(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be at least 1");
        ResidueInt { value: value % modulus, modulus }
    }

    pub fn zero(modulus: u64) -> Self {
        Self::from_u64(0, modulus)
    }

    /// The multiplicative identity; equal to zero in the trivial ring.
    pub fn one(modulus: u64) -> Self {
        Self::from_u64(1, modulus)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        let v = (self.value + other.value) % self.modulus;
        Ok(ResidueInt { value: v, modulus: self.modulus })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        let v = (self.value + self.modulus - other.value) % self.modulus;
        Ok(ResidueInt { value: v, modulus: self.modulus })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        let prod = self.value.checked_mul(other.value).ok_or(Error::BoundExceeded)?;
        Ok(ResidueInt { value: prod % self.modulus, modulus: self.modulus })
    }

    pub fn neg(&self) -> Self {
        ResidueInt { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same modulus");
            }
            base = base.mul(&base).expect("same modulus");
            e >>= 1;
        }
        acc
    }

    pub fn is_unit(&self) -> bool {
        gcd(self.value, self.modulus) == 1
    }

    /// Reduction `Z/MZ -> Z/mZ` for `m | M`.
    pub fn reduce(&self, m: u64) -> Result<Self> {
        if m == 0 || self.modulus % m != 0 {
            return Err(Error::NotADivisor(m, self.modulus));
        }
        Ok(Self::from_u64(self.value, m))
    }
}

impl fmt::Display for ResidueInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Extended Euclid on signed integers: returns `(g, x, y)` with `ax + by = g`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

pub fn inverse_mod(a: &ResidueInt) -> Result<ResidueInt> {
    if a.modulus == 1 {
        return Ok(*a);
    }
    let (g, x, _) = ext_gcd(a.value as i64, a.modulus as i64);
    if g != 1 {
        return Err(Error::NotAUnit);
    }
    Ok(ResidueInt::new(x, a.modulus))
}

/// Combines residues with pairwise coprime moduli into one residue modulo
/// their product.
pub fn crt_combine(parts: &[ResidueInt]) -> Result<ResidueInt> {
    let (first, rest) = parts.split_first().ok_or(Error::EmptyInput)?;
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            if gcd(a.modulus, b.modulus) != 1 {
                return Err(Error::NonCoprimeModuli);
            }
        }
    }
    let mut acc = *first;
    for part in rest {
        let m = acc.modulus;
        let n = part.modulus;
        let mn = m.checked_mul(n).ok_or(Error::BoundExceeded)?;
        // acc + m * k = part (mod n)  =>  k = (part - acc) * m^{-1} (mod n)
        let m_inv = inverse_mod(&ResidueInt::from_u64(m, n))?;
        let diff = ResidueInt::new(part.value as i64 - acc.value as i64, n);
        let k = diff.mul(&m_inv)?;
        let value = acc.value + m * k.value;
        acc = ResidueInt::from_u64(value, mn);
    }
    Ok(acc)
}

/// All units of `Z/MZ` in ascending order. `Z/1Z` yields `[0]`.
pub fn unit_group(modulus: u64) -> Vec<ResidueInt> {
    if modulus == 1 {
        return alloc::vec![ResidueInt::zero(1)];
    }
    (1..modulus)
        .filter(|&v| gcd(v, modulus) == 1)
        .map(|v| ResidueInt::from_u64(v, modulus))
        .collect()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in ascending order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).iter().fold(n, |acc, &q| acc / q * (q - 1))
}

/// `a / b` in lowest terms with `b > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalNumber {
    num: i64,
    den: i64,
}

impl RationalNumber {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
        let sign = if den < 0 { -1 } else { 1 };
        Ok(RationalNumber { num: sign * num / g, den: sign * den / g })
    }

    pub fn from_int(n: i64) -> Self {
        RationalNumber { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self::new(self.num * k, self.den).expect("nonzero denominator")
    }
}

impl PartialOrd for RationalNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for RationalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
