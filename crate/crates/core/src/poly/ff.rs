//! Finite fields `F_p[w]/(m(w))` with `deg m <= 3`.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::ring::{Domain, Field, Ring};
use crate::error::{Error, Result};
use crate::modular::is_prime;

pub const MAX_EXTENSION_DEGREE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u32,
    k: usize,
    /// Monic modulus, ascending coefficients; `modulus[k] == 1`.
    modulus: [u32; 4],
}

fn has_root(p: u32, coeffs: &[u32]) -> bool {
    (0..p as u64).any(|x| {
        coeffs.iter().rev().fold(0u64, |acc, &c| (acc * x + c as u64) % p as u64) == 0
    })
}

impl FiniteField {
    pub fn prime(p: u32) -> Result<Arc<Self>> {
        Self::with_modulus(p, &[0, 1])
    }

    /// `F_p` adjoined a root of the monic polynomial with ascending
    /// coefficients `modulus`; rejected unless irreducible.
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Arc<Self>> {
        if !is_prime(p as u64) || p > 1 << 16 {
            return Err(Error::Precondition("characteristic must be a prime below 2^16"));
        }
        let k = modulus.len().checked_sub(1).ok_or(Error::EmptyInput)?;
        if k == 0 || k > MAX_EXTENSION_DEGREE {
            return Err(Error::BoundExceeded);
        }
        if modulus[k] % p != 1 {
            return Err(Error::Precondition("modulus must be monic"));
        }
        let reduced: Vec<u32> = modulus.iter().map(|c| c % p).collect();
        // degree <= 3: irreducible iff no root
        if k > 1 && has_root(p, &reduced) {
            return Err(Error::NotIrreducible);
        }
        let mut m = [0u32; 4];
        m[..=k].copy_from_slice(&reduced);
        Ok(Arc::new(FiniteField { p, k, modulus: m }))
    }

    /// The first irreducible monic of degree `k` in lexicographic order.
    pub fn extension(p: u32, k: usize) -> Result<Arc<Self>> {
        if k == 1 {
            return Self::prime(p);
        }
        if k > MAX_EXTENSION_DEGREE {
            return Err(Error::BoundExceeded);
        }
        let q = (p as u64).pow(k as u32);
        for idx in 0..q {
            let mut coeffs = Vec::with_capacity(k + 1);
            let mut rest = idx;
            for _ in 0..k {
                coeffs.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            coeffs.push(1);
            if !has_root(p, &coeffs) {
                return Self::with_modulus(p, &coeffs);
            }
        }
        Err(Error::NotIrreducible)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.k as u32)
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus[..=self.k]
    }
}

/// An element of a [`FiniteField`], as a polynomial of degree `< k` in the
/// adjoined root.
#[derive(Clone)]
pub struct FfElem {
    field: Arc<FiniteField>,
    c: [u32; 3],
}

impl FfElem {
    pub fn from_int(field: &Arc<FiniteField>, n: i64) -> Self {
        let v = n.rem_euclid(field.p as i64) as u32;
        FfElem { field: field.clone(), c: [v, 0, 0] }
    }

    /// Ascending coefficients in the adjoined root.
    pub fn from_coeffs(field: &Arc<FiniteField>, coeffs: &[i64]) -> Self {
        let mut c = [0u32; 3];
        for (slot, v) in c.iter_mut().zip(coeffs).take(field.k) {
            *slot = v.rem_euclid(field.p as i64) as u32;
        }
        FfElem { field: field.clone(), c }
    }

    /// The adjoined root `w` (equals the prime-field element 0 when `k = 1`
    /// is asked for; callers use it only for proper extensions).
    pub fn generator(field: &Arc<FiniteField>) -> Self {
        if field.k == 1 {
            let v = (field.p - field.modulus[0] % field.p) % field.p;
            return FfElem { field: field.clone(), c: [v, 0, 0] };
        }
        FfElem { field: field.clone(), c: [0, 1, 0] }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.c[..self.field.k]
    }

    /// `Some(v)` when the element lies in the prime field.
    pub fn as_prime(&self) -> Option<u32> {
        self.c[1..].iter().all(|&v| v == 0).then_some(self.c[0])
    }

    /// Every element, in the order used by all exhaustive scans.
    pub fn all(field: &Arc<FiniteField>) -> Vec<FfElem> {
        let p = field.p as u64;
        (0..field.order())
            .map(|idx| {
                let mut c = [0u32; 3];
                let mut rest = idx;
                for slot in c.iter_mut().take(field.k) {
                    *slot = (rest % p) as u32;
                    rest /= p;
                }
                FfElem { field: field.clone(), c }
            })
            .collect()
    }

    fn check(&self, o: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &o.field) || self.field == o.field,
            "finite field elements from different fields"
        );
    }

    /// A square root found by exhaustive scan.
    pub fn sqrt(&self) -> Option<FfElem> {
        FfElem::all(&self.field).into_iter().find(|x| x.clone() * x.clone() == *self)
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }
}

impl PartialEq for FfElem {
    fn eq(&self, o: &Self) -> bool {
        (Arc::ptr_eq(&self.field, &o.field) || self.field == o.field) && self.c == o.c
    }
}

impl Eq for FfElem {}

impl PartialOrd for FfElem {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FfElem {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.c.iter().rev().cmp(other.c.iter().rev())
    }
}

impl fmt::Debug for FfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.k == 1 {
            return write!(f, "{}", self.c[0]);
        }
        let mut first = true;
        for i in (0..self.field.k).rev() {
            let c = self.c[i];
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "w")?,
                (1, _) => write!(f, "{c}w")?,
                (_, 1) => write!(f, "w^{i}")?,
                _ => write!(f, "{c}w^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for FfElem {
    type Output = FfElem;
    fn add(self, o: FfElem) -> FfElem {
        self.check(&o);
        let p = self.field.p;
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(o.c) {
            *a = (*a + b) % p;
        }
        FfElem { field: self.field, c }
    }
}

impl Sub for FfElem {
    type Output = FfElem;
    fn sub(self, o: FfElem) -> FfElem {
        self + (-o)
    }
}

impl Neg for FfElem {
    type Output = FfElem;
    fn neg(self) -> FfElem {
        let p = self.field.p;
        let c = self.c.map(|v| (p - v) % p);
        FfElem { field: self.field, c }
    }
}

impl Mul for FfElem {
    type Output = FfElem;
    fn mul(self, o: FfElem) -> FfElem {
        self.check(&o);
        let p = self.field.p as u64;
        let k = self.field.k;
        let mut prod = [0u64; 5];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + self.c[i] as u64 * o.c[j] as u64) % p;
            }
        }
        let m = self.field.modulus;
        for d in (k..2 * k - 1).rev() {
            let top = prod[d];
            if top != 0 {
                for i in 0..k {
                    prod[d - k + i] = (prod[d - k + i] + (p - top) * m[i] as u64) % p;
                }
                prod[d] = 0;
            }
        }
        let mut c = [0u32; 3];
        for i in 0..k {
            c[i] = prod[i] as u32;
        }
        FfElem { field: self.field, c }
    }
}

impl Ring for FfElem {
    fn zero_like(&self) -> Self {
        FfElem::from_int(&self.field, 0)
    }

    fn one_like(&self) -> Self {
        FfElem::from_int(&self.field, 1)
    }

    fn is_zero(&self) -> bool {
        self.c == [0, 0, 0]
    }

    fn from_i64_like(&self, n: i64) -> Self {
        FfElem::from_int(&self.field, n)
    }

    fn characteristic(&self) -> u64 {
        self.field.p as u64
    }
}

impl Domain for FfElem {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.div(d)
    }
}

impl Field for FfElem {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.field.order() - 2))
        }
    }
}

/// A primitive cube root of unity and a square root of 3, when present.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialConstants {
    pub omega: Option<FfElem>,
    pub sqrt3: Option<FfElem>,
}

impl SpecialConstants {
    pub fn has_both(&self) -> bool {
        self.omega.is_some() && self.sqrt3.is_some()
    }
}

/// Scans `F` for `omega != 1` with `omega^3 = 1` and for a square root of 3.
pub fn find_special_constants(field: &Arc<FiniteField>) -> SpecialConstants {
    let elems = FfElem::all(field);
    let one = FfElem::from_int(field, 1);
    let three = FfElem::from_int(field, 3);
    let omega = elems.iter().find(|x| **x != one && x.pow(3) == one).cloned();
    let sqrt3 = elems.iter().find(|x| (*x).clone() * (*x).clone() == three).cloned();
    SpecialConstants { omega, sqrt3 }
}
