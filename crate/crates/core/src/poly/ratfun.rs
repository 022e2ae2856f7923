//! Fractions of [`MultiPoly`]s: the function field `F_p(vars)`.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::multi::{Monomial, MultiPoly, PolyRing};
use super::ring::{Domain, Field, Ring};
use crate::error::{Error, Result};

/// Skip trial division of numerators larger than this many terms.
const TRIAL_DIVISION_LIMIT: usize = 4000;

/// `num / den` with `den` nonzero and of leading coefficient 1.
///
/// Reduction is partial when more than one variable occurs: common
/// monomials and exact divisors are cancelled, a full multivariate gcd is
/// not attempted. Equality compares cross products, so it is exact anyway.
#[derive(Clone)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut acc, mut base, mut e) = (1u64, a as u64 % p as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn dense(f: &MultiPoly, var: usize) -> Vec<u32> {
    let mut out = alloc::vec![0u32; f.degree_in(var) as usize + 1];
    for &(m, c) in f.terms() {
        out[m.exp(var) as usize] = c;
    }
    out
}

fn from_dense(ring: &Arc<PolyRing>, var: usize, v: &[u32]) -> MultiPoly {
    let terms: Vec<([u32; super::multi::MAX_VARS], i64)> = v
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let mut e = [0u32; super::multi::MAX_VARS];
            e[var] = i as u32;
            (e, c as i64)
        })
        .collect();
    ring.from_terms(terms.iter().map(|(e, c)| (&e[..ring.nvars()], *c)))
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Monic gcd of two dense univariate polynomials over `F_p`.
fn dense_gcd(mut a: Vec<u32>, mut b: Vec<u32>, p: u32) -> Vec<u32> {
    trim(&mut a);
    trim(&mut b);
    let p64 = p as u64;
    while !b.is_empty() {
        let lb_inv = inv_mod(*b.last().expect("nonempty"), p) as u64;
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let q = *a.last().expect("nonempty") as u64 * lb_inv % p64;
            for (i, &bc) in b.iter().enumerate() {
                let idx = i + shift;
                a[idx] = ((a[idx] as u64 + p64 - q * bc as u64 % p64) % p64) as u32;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        core::mem::swap(&mut a, &mut b);
    }
    if let Some(&l) = a.last() {
        let li = inv_mod(l, p) as u64;
        for c in a.iter_mut() {
            *c = (*c as u64 * li % p64) as u32;
        }
    }
    a
}

fn may_divide(num: &MultiPoly, den: &MultiPoly) -> bool {
    num.len() <= TRIAL_DIVISION_LIMIT
        && (0..num.ring().nvars()).all(|i| den.degree_in(i) <= num.degree_in(i))
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if num.ring() != den.ring() {
            return Err(Error::RingMismatch);
        }
        if den.is_empty() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        let den = num.ring().one();
        RationalFunction { num, den }
    }

    fn normalized(mut num: MultiPoly, mut den: MultiPoly) -> Self {
        let ring = num.ring().clone();
        let p = ring.characteristic();
        if num.is_empty() {
            return RationalFunction { num, den: ring.one() };
        }
        let mut vars = num.support_vars();
        vars.extend(den.support_vars());
        vars.sort_unstable();
        vars.dedup();
        if vars.len() == 1 {
            let v = vars[0];
            let g = dense_gcd(dense(&num, v), dense(&den, v), p);
            if g.len() > 1 {
                let g = from_dense(&ring, v, &g);
                num = num.exact_divide(&g).expect("gcd divides");
                den = den.exact_divide(&g).expect("gcd divides");
            }
        } else if !vars.is_empty() {
            let m = num.content_monomial().gcd(&den.content_monomial());
            if m != Monomial::ONE {
                num = num.div_monomial(&m).expect("common monomial");
                den = den.div_monomial(&m).expect("common monomial");
            }
            if den.constant_value().is_none() {
                if may_divide(&num, &den) {
                    if let Ok(q) = num.exact_divide(&den) {
                        num = q;
                        den = ring.one();
                    }
                } else if may_divide(&den, &num) {
                    if let Ok(q) = den.exact_divide(&num) {
                        den = q;
                        num = ring.one();
                    }
                }
            }
        }
        let lc = den.leading_coefficient();
        if lc != 1 {
            let li = inv_mod(lc, p);
            num = num.scale(li);
            den = den.scale(li);
        }
        RationalFunction { num, den }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.num.ring()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    /// `Some(poly)` when the denominator is 1.
    pub fn as_poly(&self) -> Option<&MultiPoly> {
        (self.den.constant_value() == Some(1)).then_some(&self.num)
    }

    pub fn constant_value(&self) -> Option<u32> {
        self.as_poly().and_then(MultiPoly::constant_value)
    }

    /// Substitutes every variable by a rational function over `target`.
    pub fn compose(&self, target: &Arc<PolyRing>, values: &[RationalFunction]) -> Result<RationalFunction> {
        // common denominator keeps the substitution polynomial
        let mut pow_cache: Vec<Vec<RationalFunction>> =
            values.iter().map(|v| alloc::vec![RationalFunction::from_poly(target.one()), v.clone()]).collect();
        if values.len() != self.ring().nvars() || values.iter().any(|v| v.ring() != target) {
            return Err(Error::RingMismatch);
        }
        let mut eval = |f: &MultiPoly| -> RationalFunction {
            let mut acc = RationalFunction::from_poly(target.zero());
            for &(m, c) in f.terms() {
                let mut term = RationalFunction::from_poly(target.constant(c as i64));
                for (i, cache) in pow_cache.iter_mut().enumerate() {
                    let e = m.exp(i) as usize;
                    if e == 0 {
                        continue;
                    }
                    while cache.len() <= e {
                        let next = cache[cache.len() - 1].clone() * cache[1].clone();
                        cache.push(next);
                    }
                    term = term * cache[e].clone();
                }
                acc = acc + term;
            }
            acc
        };
        let n = eval(&self.num);
        let d = eval(&self.den);
        n.div(&d).ok_or(Error::DivisionByZero)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, o: &Self) -> bool {
        if self.ring() != o.ring() {
            return false;
        }
        if self.den == o.den {
            return self.num == o.num;
        }
        &self.num * &o.den == &o.num * &self.den
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.constant_value() == Some(1) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: RationalFunction) -> RationalFunction {
        if self.num.is_empty() {
            return o;
        }
        if o.num.is_empty() {
            return self;
        }
        if self.den == o.den {
            return Self::normalized(&self.num + &o.num, self.den);
        }
        Self::normalized(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: RationalFunction) -> RationalFunction {
        self + (-o)
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den }
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: RationalFunction) -> RationalFunction {
        if self.num.is_empty() || o.num.is_empty() {
            return RationalFunction::from_poly(self.ring().zero());
        }
        Self::normalized(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Ring for RationalFunction {
    fn zero_like(&self) -> Self {
        RationalFunction::from_poly(self.ring().zero())
    }

    fn one_like(&self) -> Self {
        RationalFunction::from_poly(self.ring().one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    fn from_i64_like(&self, n: i64) -> Self {
        RationalFunction::from_poly(self.ring().constant(n))
    }

    fn characteristic(&self) -> u64 {
        self.ring().characteristic() as u64
    }

    fn pow(&self, e: u64) -> Self {
        RationalFunction::normalized(self.num.pow(e), self.den.pow(e))
    }
}

impl Domain for RationalFunction {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.div(d)
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Option<Self> {
        if self.num.is_empty() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u_ring() -> (Arc<PolyRing>, MultiPoly) {
        let r = PolyRing::new(13, &["u"]).unwrap();
        let u = r.gen(0);
        (r, u)
    }

    #[test]
    fn univariate_fractions_reduce_fully() {
        let (r, u) = u_ring();
        let a = &u - &r.one();
        let b = &u + &r.one();
        let f = RationalFunction::new(&a * &b, &a * &u).unwrap();
        assert_eq!(f.numerator(), &b);
        assert_eq!(f.denominator(), &u);
        let g = RationalFunction::new(a.clone(), b.clone()).unwrap();
        let sum = f.clone() + g.clone() - g;
        assert_eq!(sum.numerator(), &b);
        assert!(RationalFunction::new(a, r.zero()).is_err());
    }

    #[test]
    fn multivariate_cancellation() {
        let r = PolyRing::new(7, &["s", "t"]).unwrap();
        let s = r.gen(0);
        let t = r.gen(1);
        let q = &(&s * &s) + &t;
        let f = RationalFunction::new(&q * &t, q.scale(3)).unwrap();
        assert_eq!(f.as_poly(), Some(&t.scale(5)));
        let inv = f.inv().unwrap();
        assert_eq!(inv.clone() * f, inv.one_like());
    }

    #[test]
    fn compose_frobenius() {
        let (r, u) = u_ring();
        let f = RationalFunction::new(&u + &r.one(), u.pow(2)).unwrap();
        let up = RationalFunction::from_poly(u.pow(13));
        assert_eq!(f.compose(&r, &[up]).unwrap(), f.pow(13));
    }
}
