//! The principal congruence subgroup `S(Nl, N)` of `SL_2(Z/NlZ)` and its
//! two descriptions: via reduction mod `l` when `l` does not divide `N`, and
//! via the additive map `gamma` from `F_l^3` when it does.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{enumerate_sl2, MatGroup, Mat2Mod};
use crate::error::{Error, Result};
use crate::modular::{gcd, is_prime, ResidueInt};

/// Matrices of `SL_2(Z/NlZ)` congruent to `I_2` mod `N`.
pub fn subgroup_s(nl: u64, n: u64) -> Result<MatGroup> {
    if n == 0 || nl == 0 || nl % n != 0 {
        return Err(Error::NotADivisor(n, nl));
    }
    let k = nl / n;
    let mut elements = BTreeSet::new();
    // every entry is determined mod Nl by its value mod N plus a multiple of N
    for i in 0..k {
        for j in 0..k {
            for r in 0..k {
                for s in 0..k {
                    let a = 1 + (n * i) as i64;
                    let b = (n * j) as i64;
                    let c = (n * r) as i64;
                    let d = 1 + (n * s) as i64;
                    let m = Mat2Mod::new(a, b, c, d, nl);
                    if m.is_special() {
                        elements.insert(m);
                    }
                }
            }
        }
    }
    Ok(MatGroup { modulus: nl, elements, generators: Vec::new() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiIsoReport {
    pub n: u64,
    pub l: u64,
    pub subgroup_order: usize,
    pub target_order: usize,
    pub injective: bool,
    pub surjective: bool,
    /// Size of the bijection when both flags hold, otherwise 0.
    pub bijection_size: usize,
}

impl PiIsoReport {
    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Reduction mod `l` restricted to `S(Nl, N)` compared against `SL_2(F_l)`.
pub fn check_pi_iso(n: u64, l: u64) -> Result<PiIsoReport> {
    if !is_prime(l) {
        return Err(Error::Precondition("l must be prime"));
    }
    if gcd(n, l) != 1 {
        return Err(Error::NotCoprime(n, l));
    }
    let s = subgroup_s(n * l, n)?;
    let target = enumerate_sl2(l)?;
    let image: BTreeSet<Mat2Mod> = s.elements.iter().map(|a| a.reduce(l)).collect::<Result<_>>()?;
    let injective = image.len() == s.order();
    let surjective = image == target.elements;
    Ok(PiIsoReport {
        n,
        l,
        subgroup_order: s.order(),
        target_order: target.order(),
        injective,
        surjective,
        bijection_size: if injective && surjective { image.len() } else { 0 },
    })
}

/// `gamma(x, y, z) = I_2 + N * (x y; z -x)` read mod `Nl`.
pub fn gamma_map(x: ResidueInt, y: ResidueInt, z: ResidueInt, n: u64) -> Result<Mat2Mod> {
    let l = x.modulus();
    if y.modulus() != l || z.modulus() != l {
        return Err(Error::ModulusMismatch);
    }
    if n == 0 || n % l != 0 {
        return Err(Error::DivisibilityViolated);
    }
    let nn = n as i64;
    let (x, y, z) = (x.value() as i64, y.value() as i64, z.value() as i64);
    Ok(Mat2Mod::new(1 + nn * x, nn * y, nn * z, 1 - nn * x, n * l))
}

/// Recovers `(x, y, z)` over `F_l` from an element of `S(Nl, N)`.
pub fn gamma_inverse(m: &Mat2Mod, n: u64, l: u64) -> Result<[ResidueInt; 3]> {
    if n == 0 || n % l != 0 {
        return Err(Error::DivisibilityViolated);
    }
    if m.modulus() != n * l {
        return Err(Error::ModulusMismatch);
    }
    let nl = n * l;
    let [a, b, c, d] = m.entries();
    let a1 = (a + nl - 1) % nl;
    if a1 % n != 0 || b % n != 0 || c % n != 0 || (d + nl - 1) % nl % n != 0 || !m.is_special() {
        return Err(Error::NotInSubgroup);
    }
    let x = a1 / n;
    let expected_d = ResidueInt::new(1 - (n * x) as i64, nl).value();
    if d != expected_d {
        return Err(Error::NotInSubgroup);
    }
    Ok([
        ResidueInt::from_u64(x, l),
        ResidueInt::from_u64(b / n, l),
        ResidueInt::from_u64(c / n, l),
    ])
}
