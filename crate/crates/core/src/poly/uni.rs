//! Dense univariate polynomials over any [`Ring`].

use alloc::vec::Vec;
use core::fmt;

use super::ring::{Domain, Field, Ring};
use crate::error::{Error, Result};

/// Ascending coefficients with no trailing zeros; `zero` is a template
/// carrying the coefficient ring's context.
#[derive(Clone, PartialEq)]
pub struct UniPoly<R: Ring> {
    coeffs: Vec<R>,
    zero: R,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>, zero: R) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        let zero = zero.zero_like();
        UniPoly { coeffs, zero }
    }

    pub fn zero(zero: R) -> Self {
        Self::new(Vec::new(), zero)
    }

    pub fn constant(c: R) -> Self {
        let z = c.zero_like();
        Self::new(alloc::vec![c], z)
    }

    /// The indeterminate `x`.
    pub fn x(zero: R) -> Self {
        let one = zero.one_like();
        Self::new(alloc::vec![zero.zero_like(), one], zero)
    }

    /// `x - a`.
    pub fn linear(a: R) -> Self {
        let one = a.one_like();
        let z = a.zero_like();
        Self::new(alloc::vec![-a, one], z)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn zero_coeff(&self) -> &R {
        &self.zero
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect(), self.zero.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect(), self.zero.clone())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().cloned().map(|c| -c).collect(), self.zero.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.zero.clone());
        }
        let mut out = alloc::vec![self.zero.clone(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out, self.zero.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(), self.zero.clone())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(self.zero.one_like());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(self.zero.clone(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `self(g)`.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(self.zero.clone()), |acc, c| acc.mul(g).add(&Self::constant(c.clone())))
    }

    /// `self(x + a)`.
    pub fn shift(&self, a: &R) -> Self {
        let xa = Self::linear(-a.clone());
        self.compose(&xa)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * self.zero.from_i64_like(i as i64))
            .collect();
        Self::new(coeffs, self.zero.clone())
    }

    pub fn map_coeffs<S: Ring, F: Fn(&R) -> S>(&self, zero: S, f: F) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect(), zero)
    }

    /// Raises every coefficient to the characteristic: the Frobenius twist.
    pub fn frobenius_coeff_power(&self) -> Result<Self> {
        let p = self.zero.characteristic();
        if p == 0 {
            return Err(Error::Precondition("coefficient ring must have positive characteristic"));
        }
        Ok(Self::new(self.coeffs.iter().map(|c| c.pow(p)).collect(), self.zero.clone()))
    }

    /// `Some(h)` with `self(x) = h(x^k)`, when every exponent is a multiple of `k`.
    pub fn deflate(&self, k: usize) -> Option<Self> {
        if k == 0 {
            return None;
        }
        if self.coeffs.iter().enumerate().any(|(i, c)| i % k != 0 && !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().step_by(k).cloned().collect(), self.zero.clone()))
    }

    /// `self(x^k)`.
    pub fn inflate(&self, k: usize) -> Self {
        let mut out = alloc::vec![self.zero.clone(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Self::new(out, self.zero.clone())
    }
}

impl<R: Domain> UniPoly<R> {
    /// Sylvester-matrix resultant (rows of `self` first, descending powers),
    /// by fraction-free Gaussian elimination.
    pub fn resultant(&self, g: &Self) -> Result<R> {
        let (Some(m), Some(n)) = (self.degree(), g.degree()) else {
            return Ok(self.zero.clone());
        };
        if m == 0 {
            return Ok(self.coeffs[0].pow(n as u64));
        }
        if n == 0 {
            return Ok(g.coeffs[0].pow(m as u64));
        }
        let size = m + n;
        let mut mat = alloc::vec![alloc::vec![self.zero.clone(); size]; size];
        for r in 0..n {
            for (k, c) in self.coeffs.iter().rev().enumerate() {
                mat[r][r + k] = c.clone();
            }
        }
        for r in 0..m {
            for (k, c) in g.coeffs.iter().rev().enumerate() {
                mat[n + r][r + k] = c.clone();
            }
        }
        bareiss_det(mat)
    }

    /// `(-1)^{n(n-1)/2} Res(f, f') / lc(f)` for `n = deg f >= 2`.
    pub fn discriminant(&self) -> Result<R> {
        let n = match self.degree() {
            Some(n) if n >= 2 => n,
            _ => return Err(Error::Precondition("discriminant needs degree at least 2")),
        };
        let d = self.derivative();
        let dn = d.degree().ok_or(Error::ZeroDerivative)?;
        let lc = self.leading_coefficient();
        // a formal degree n-1 for f' multiplies Res by lc^(n-1-deg f')
        let mut res = self.resultant(&d)? * lc.pow((n - 1 - dn) as u64);
        if (n * (n - 1) / 2) % 2 == 1 {
            res = -res;
        }
        res.div_exact(&lc).ok_or(Error::NotDivisible)
    }
}

/// Determinant by Bareiss elimination with row pivoting; every division
/// is exact.
pub fn bareiss_det<R: Domain>(mut mat: Vec<Vec<R>>) -> Result<R> {
    let n = mat.len();
    let Some(first) = mat.first().and_then(|r| r.first()) else {
        return Err(Error::EmptyInput);
    };
    let zero = first.zero_like();
    let mut prev = zero.one_like();
    let mut negate = false;
    for k in 0..n {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&r| !mat[r][k].is_zero()) {
                Some(r) => {
                    mat.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(zero),
            }
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = mat[i][j].clone() * mat[k][k].clone() - mat[i][k].clone() * mat[k][j].clone();
                mat[i][j] = num.div_exact(&prev).ok_or(Error::NotDivisible)?;
            }
            mat[i][k] = zero.clone();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

impl<R: Field> UniPoly<R> {
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dn = d.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = d.leading_coefficient().inv().ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![self.zero.clone(); self.coeffs.len().saturating_sub(dn).max(1)];
        while rem.len() > dn {
            let top = rem.pop().expect("nonempty");
            let shift = rem.len() - dn;
            if top.is_zero() {
                continue;
            }
            let q = top * lc_inv.clone();
            for (i, c) in d.coeffs[..dn].iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - q.clone() * c.clone();
            }
            quot[shift] = q;
        }
        Ok((Self::new(quot, self.zero.clone()), Self::new(rem, self.zero.clone())))
    }

    /// Monic gcd; zero when both inputs are zero.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<R: Ring + fmt::Display> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<R: Ring + fmt::Debug> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ff::{FfElem, FiniteField};
    use alloc::sync::Arc;

    fn fp(p: u32) -> Arc<FiniteField> {
        FiniteField::prime(p).unwrap()
    }

    fn poly(f: &Arc<FiniteField>, c: &[i64]) -> UniPoly<FfElem> {
        UniPoly::new(c.iter().map(|&v| FfElem::from_int(f, v)).collect(), FfElem::from_int(f, 0))
    }

    /// Product of `g(r)` over the roots `r` of `f` in a splitting field,
    /// with `Res(f, g) = lc(f)^deg g * prod g(r)`.
    fn resultant_by_roots(f: &UniPoly<FfElem>, g: &UniPoly<FfElem>) -> FfElem {
        let field = f.zero_coeff().field().clone();
        let mut rest = f.monic();
        let mut acc = f.leading_coefficient().pow(g.degree().unwrap() as u64);
        for r in FfElem::all(&field) {
            while rest.degree().unwrap_or(0) > 0 && rest.eval(&r).is_zero() {
                acc = acc * g.eval(&r);
                rest = rest.div_rem(&UniPoly::linear(r.clone())).unwrap().0;
            }
        }
        assert_eq!(rest.degree(), Some(0), "f must split");
        acc
    }

    #[test]
    fn resultant_examples() {
        let f7 = fp(7);
        // Res(x - 2, x - 3) = 2 - 3
        let r = poly(&f7, &[-2, 1]).resultant(&poly(&f7, &[-3, 1])).unwrap();
        assert_eq!(r, FfElem::from_int(&f7, -1));
        let f5 = fp(5);
        let r = poly(&f5, &[1, 0, 1]).resultant(&poly(&f5, &[-1, 0, 1])).unwrap();
        assert_eq!(r, FfElem::from_int(&f5, 4));
        let d = poly(&f7, &[1, 0, 1]).discriminant().unwrap();
        assert_eq!(d, FfElem::from_int(&f7, 3));
        assert_eq!(poly(&f7, &[1, 0, 0, 0, 0, 0, 0, 1]).discriminant(), Err(Error::ZeroDerivative));
    }

    #[test]
    fn discriminant_of_binomials() {
        for p in [5u32, 7, 11, 13] {
            let f = fp(p);
            for n in 2..=6usize {
                if n as u32 % p == 0 {
                    continue;
                }
                let mut c = alloc::vec![0i64; n + 1];
                c[0] = 1;
                c[n] = 1;
                let sign: i64 = if (n * (n - 1) / 2) % 2 == 1 { -1 } else { 1 };
                let expected = FfElem::from_int(&f, sign) * FfElem::from_int(&f, n as i64).pow(n as u64);
                assert_eq!(poly(&f, &c).discriminant().unwrap(), expected, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn resultant_matches_root_product() {
        let f11 = fp(11);
        let a = poly(&f11, &[6, 1]).mul(&poly(&f11, &[2, 1])).mul(&poly(&f11, &[7, 1]));
        let b = poly(&f11, &[3, 5, 0, 2]);
        assert_eq!(a.resultant(&b).unwrap(), resultant_by_roots(&a, &b));
        let a = a.scale(&FfElem::from_int(&f11, 4));
        assert_eq!(a.resultant(&b).unwrap(), resultant_by_roots(&a, &b));
    }

    #[test]
    fn frobenius_twist_and_deflation() {
        let f49 = FiniteField::extension(7, 2).unwrap();
        let w = FfElem::generator(&f49);
        let zero = FfElem::from_int(&f49, 0);
        let g = UniPoly::new(alloc::vec![w.clone(), FfElem::from_int(&f49, 2), w.pow(3)], zero);
        let tw = g.frobenius_coeff_power().unwrap();
        // (sum c_i x^i)^p = sum c_i^p x^{ip}
        assert_eq!(g.pow(7), tw.inflate(7));
        assert_eq!(g.pow(7).deflate(7), Some(tw));
        assert_eq!(g.deflate(2), None);
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn resultant_vanishes_iff_common_factor(
            a in proptest::collection::vec(0i64..13, 2..6),
            b in proptest::collection::vec(0i64..13, 2..6),
        ) {
            let f13 = fp(13);
            let f = poly(&f13, &a);
            let g = poly(&f13, &b);
            prop_assume!(f.degree().unwrap_or(0) > 0 && g.degree().unwrap_or(0) > 0);
            let res = f.resultant(&g).unwrap();
            prop_assert_eq!(res.is_zero(), f.gcd(&g).degree().unwrap() > 0);
        }

        #[test]
        fn resultant_swap_sign(
            a in proptest::collection::vec(0i64..5, 2..5),
            b in proptest::collection::vec(0i64..5, 2..5),
        ) {
            let f5 = fp(5);
            let f = poly(&f5, &a);
            let g = poly(&f5, &b);
            let (Some(m), Some(n)) = (f.degree(), g.degree()) else { return Ok(()) };
            let fg = f.resultant(&g).unwrap();
            let gf = g.resultant(&f).unwrap();
            let sign = if (m * n) % 2 == 1 { -gf } else { gf };
            prop_assert_eq!(fg, sign);
        }

        #[test]
        fn twist_is_multiplicative(
            a in proptest::collection::vec((0i64..7, 0i64..7), 1..4),
            b in proptest::collection::vec((0i64..7, 0i64..7), 1..4),
        ) {
            let f49 = FiniteField::extension(7, 2).unwrap();
            let zero = FfElem::from_int(&f49, 0);
            let mk = |v: &[(i64, i64)]| UniPoly::new(
                v.iter().map(|&(x, y)| FfElem::from_coeffs(&f49, &[x, y])).collect(),
                zero.clone(),
            );
            let (f, g) = (mk(&a), mk(&b));
            let lhs = f.mul(&g).frobenius_coeff_power().unwrap();
            let rhs = f.frobenius_coeff_power().unwrap().mul(&g.frobenius_coeff_power().unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
