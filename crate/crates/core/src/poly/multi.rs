//! Sparse multivariate polynomials over `F_p` in at most eight variables,
//! terms kept in descending lexicographic order (first variable highest).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::ring::{Domain, Ring};
use crate::error::{Error, Result};
use crate::modular::is_prime;

pub const MAX_VARS: usize = 8;
const FIELD_BITS: u32 = 16;
const FIELD_MASK: u128 = 0xffff;

/// Exponent vector packed into 16-bit fields; numeric order on the packed
/// value is lexicographic order with variable 0 most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    fn shift(i: usize) -> u32 {
        (MAX_VARS - 1 - i) as u32 * FIELD_BITS
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut packed = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e as u128 <= FIELD_MASK, "exponent overflow");
            packed |= (e as u128) << Self::shift(i);
        }
        Monomial(packed)
    }

    pub fn var(i: usize, e: u32) -> Self {
        let mut exps = [0u32; MAX_VARS];
        exps[i] = e;
        Self::from_exponents(&exps)
    }

    pub fn exp(&self, i: usize) -> u32 {
        ((self.0 >> Self::shift(i)) & FIELD_MASK) as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exp(i)).collect()
    }

    pub fn total_degree(&self) -> u32 {
        (0..MAX_VARS).map(|i| self.exp(i)).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exp(i) <= other.exp(i))
    }

    /// Product; fields never carry into each other because every exponent
    /// stays below 2^16.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert!((0..MAX_VARS).all(|i| self.exp(i) + other.exp(i) <= FIELD_MASK as u32));
        Monomial(self.0 + other.0)
    }

    /// Quotient, valid when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0 - other.0)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = (0..MAX_VARS).map(|i| self.exp(i).min(other.exp(i))).collect();
        Monomial::from_exponents(&exps)
    }

    fn without(&self, i: usize) -> Monomial {
        Monomial(self.0 & !(FIELD_MASK << Self::shift(i)))
    }
}

/// Coefficient field `F_p` and ordered variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    p: u32,
    vars: Vec<String>,
}

impl PolyRing {
    pub fn new(p: u32, vars: &[&str]) -> Result<Arc<Self>> {
        if !is_prime(p as u64) || p > 1 << 16 {
            return Err(Error::Precondition("characteristic must be a prime below 2^16"));
        }
        if vars.len() > MAX_VARS {
            return Err(Error::BoundExceeded);
        }
        Ok(Arc::new(PolyRing { p, vars: vars.iter().map(|v| v.to_string()).collect() }))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(self: &Arc<Self>) -> MultiPoly {
        MultiPoly { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(self: &Arc<Self>) -> MultiPoly {
        self.constant(1)
    }

    pub fn constant(self: &Arc<Self>, c: i64) -> MultiPoly {
        let v = c.rem_euclid(self.p as i64) as u32;
        let terms = if v == 0 { Vec::new() } else { alloc::vec![(Monomial::ONE, v)] };
        MultiPoly { ring: self.clone(), terms }
    }

    pub fn gen(self: &Arc<Self>, i: usize) -> MultiPoly {
        assert!(i < self.nvars(), "variable index out of range");
        MultiPoly { ring: self.clone(), terms: alloc::vec![(Monomial::var(i, 1), 1 % self.p)] }
    }

    pub fn var(self: &Arc<Self>, name: &str) -> Result<MultiPoly> {
        self.index_of(name).map(|i| self.gen(i)).ok_or(Error::RingMismatch)
    }

    /// Sum of `c * prod x_i^{e_i}` over the given `(exponents, c)` pairs.
    pub fn from_terms<'a, I>(self: &Arc<Self>, terms: I) -> MultiPoly
    where
        I: IntoIterator<Item = (&'a [u32], i64)>,
    {
        let raw = terms.into_iter().map(|(e, c)| {
            assert!(e.len() <= self.nvars(), "exponent vector longer than variable list");
            (Monomial::from_exponents(e), c.rem_euclid(self.p as i64) as u64)
        });
        MultiPoly::from_unsorted(self.clone(), raw.collect())
    }

    fn same(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

#[derive(Clone)]
pub struct MultiPoly {
    ring: Arc<PolyRing>,
    /// Strictly descending monomials, nonzero coefficients in `[0, p)`.
    terms: Vec<(Monomial, u32)>,
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

impl MultiPoly {
    fn from_unsorted(ring: Arc<PolyRing>, mut raw: Vec<(Monomial, u64)>) -> MultiPoly {
        let p = ring.p as u64;
        raw.sort_unstable_by_key(|&(m, _)| Reverse(m));
        let mut terms: Vec<(Monomial, u32)> = Vec::with_capacity(raw.len());
        let mut cur: Option<(Monomial, u64)> = None;
        for (m, c) in raw {
            match cur {
                Some((cm, cc)) if cm == m => cur = Some((cm, (cc + c) % p)),
                Some((cm, cc)) => {
                    if cc % p != 0 {
                        terms.push((cm, (cc % p) as u32));
                    }
                    cur = Some((m, c % p));
                }
                None => cur = Some((m, c % p)),
            }
        }
        if let Some((cm, cc)) = cur {
            if cc % p != 0 {
                terms.push((cm, (cc % p) as u32));
            }
        }
        MultiPoly { ring, terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE)
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(m, c)] if *m == Monomial::ONE => Some(*c),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(Monomial, u32)> {
        self.terms.first().copied()
    }

    pub fn leading_coefficient(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.1)
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms
            .binary_search_by(|(tm, _)| m.cmp(tm))
            .map_or(0, |i| self.terms[i].1)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    /// Indices of variables that occur with positive exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&i| self.degree_in(i) > 0).collect()
    }

    fn check(&self, o: &MultiPoly) {
        assert!(self.ring.same(&o.ring), "polynomials from different rings");
    }

    pub fn scale(&self, c: u32) -> MultiPoly {
        let p = self.ring.p as u64;
        let c = c as u64 % p;
        if c == 0 {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|&(m, v)| (m, (v as u64 * c % p) as u32)).collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: u32) -> MultiPoly {
        let p = self.ring.p as u64;
        let c = c as u64 % p;
        if c == 0 {
            return self.ring.zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|&(m, v)| (m.mul(mono), (v as u64 * c % p) as u32))
            .collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    /// Scales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            Some((_, c)) => self.scale(inv_mod(c, self.ring.p)),
            None => self.clone(),
        }
    }

    /// Largest monomial dividing every term.
    pub fn content_monomial(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some(&(first, _)) = it.next() else { return Monomial::ONE };
        it.fold(first, |g, (m, _)| g.gcd(m))
    }

    pub fn div_monomial(&self, mono: &Monomial) -> Result<MultiPoly> {
        if self.terms.iter().any(|(m, _)| !mono.divides(m)) {
            return Err(Error::NotDivisible);
        }
        let terms = self.terms.iter().map(|&(m, c)| (m.div(mono), c)).collect();
        Ok(MultiPoly { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, e: u64) -> MultiPoly {
        Ring::pow(self, e)
    }

    /// Exact quotient `self / d`, by lexicographic leading-term reduction.
    pub fn exact_divide(&self, d: &MultiPoly) -> Result<MultiPoly> {
        self.check(d);
        let Some((lm, lc)) = d.leading_term() else { return Err(Error::DivisionByZero) };
        if self.is_empty() {
            return Ok(self.ring.zero());
        }
        if let Some(c) = d.constant_value() {
            return Ok(self.scale(inv_mod(c, self.ring.p)));
        }
        if d.terms.len() == 1 {
            return Ok(self.div_monomial(&lm)?.scale(inv_mod(lc, self.ring.p)));
        }
        let p = self.ring.p as u64;
        let lc_inv = inv_mod(lc, self.ring.p) as u64;
        let mut rem: BTreeMap<Monomial, u32> = self.terms.iter().copied().collect();
        let mut quot: Vec<(Monomial, u32)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !lm.divides(&m) {
                return Err(Error::NotDivisible);
            }
            let qm = m.div(&lm);
            let qc = c as u64 * lc_inv % p;
            for &(dm, dc) in &d.terms[1..] {
                let key = dm.mul(&qm);
                let sub = qc * dc as u64 % p;
                let entry = rem.entry(key).or_insert(0);
                let v = (*entry as u64 + p - sub) % p;
                if v == 0 {
                    rem.remove(&key);
                } else {
                    *entry = v as u32;
                }
            }
            quot.push((qm, qc as u32));
        }
        Ok(MultiPoly { ring: self.ring.clone(), terms: quot })
    }

    /// Coefficients of `self` as a polynomial in `var`, ascending; each
    /// coefficient lives in the same ring with `var` absent.
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, u64)>> = alloc::vec![Vec::new(); deg + 1];
        for &(m, c) in &self.terms {
            buckets[m.exp(var) as usize].push((m.without(var), c as u64));
        }
        buckets.into_iter().map(|b| MultiPoly::from_unsorted(self.ring.clone(), b)).collect()
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let p = self.ring.p as u64;
        let raw = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) > 0)
            .map(|&(m, c)| {
                let e = m.exp(var);
                (m.div(&Monomial::var(var, 1)), c as u64 * (e as u64 % p) % p)
            })
            .collect();
        MultiPoly::from_unsorted(self.ring.clone(), raw)
    }

    /// Replaces variable `i` by `values[i]` for every variable of this ring;
    /// all values must share one target ring.
    pub fn compose(&self, target: &Arc<PolyRing>, values: &[MultiPoly]) -> Result<MultiPoly> {
        let n = self.ring.nvars();
        if values.len() != n || values.iter().any(|v| !v.ring.same(target)) {
            return Err(Error::RingMismatch);
        }
        if target.p != self.ring.p {
            return Err(Error::RingMismatch);
        }
        let mut powers: Vec<Vec<MultiPoly>> = values.iter().map(|v| alloc::vec![target.one(), v.clone()]).collect();
        let mut acc = target.zero();
        for &(m, c) in &self.terms {
            let mut term = target.constant(c as i64);
            for i in 0..n {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &values[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Moves the polynomial into `target`, matching variables by name.
    pub fn embed(&self, target: &Arc<PolyRing>) -> Result<MultiPoly> {
        if target.p != self.ring.p {
            return Err(Error::RingMismatch);
        }
        let mut map = Vec::with_capacity(self.ring.nvars());
        for (i, name) in self.ring.vars.iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None if self.degree_in(i) == 0 => map.push(None),
                None => return Err(Error::RingMismatch),
            }
        }
        let raw = self
            .terms
            .iter()
            .map(|&(m, c)| {
                let mut exps = [0u32; MAX_VARS];
                for (i, j) in map.iter().enumerate() {
                    if let Some(j) = j {
                        exps[*j] = m.exp(i);
                    }
                }
                (Monomial::from_exponents(&exps), c as u64)
            })
            .collect();
        Ok(MultiPoly::from_unsorted(target.clone(), raw))
    }

    /// Evaluates at a point of `F_p^n`.
    pub fn eval(&self, point: &[u32]) -> u32 {
        let p = self.ring.p as u64;
        let mut acc = 0u64;
        for &(m, c) in &self.terms {
            let mut v = c as u64;
            for (i, &x) in point.iter().enumerate().take(self.ring.nvars()) {
                for _ in 0..m.exp(i) {
                    v = v * x as u64 % p;
                }
            }
            acc = (acc + v) % p;
        }
        acc as u32
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, o: &Self) -> bool {
        self.ring.same(&o.ring) && self.terms == o.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if *c != 1 || *m == Monomial::ONE {
                parts.push(c.to_string());
            }
            for (i, name) in self.ring.vars.iter().enumerate() {
                match m.exp(i) {
                    0 => {}
                    1 => parts.push(name.clone()),
                    e => parts.push(alloc::format!("{name}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

fn merge(a: &MultiPoly, b: &MultiPoly, negate_b: bool) -> MultiPoly {
    a.check(b);
    let p = a.ring.p;
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    let bval = |c: u32| if negate_b { (p - c) % p } else { c };
    while i < a.terms.len() && j < b.terms.len() {
        let (am, ac) = a.terms[i];
        let (bm, bc) = b.terms[j];
        if am > bm {
            out.push((am, ac));
            i += 1;
        } else if bm > am {
            out.push((bm, bval(bc)));
            j += 1;
        } else {
            let s = (ac + bval(bc)) % p;
            if s != 0 {
                out.push((am, s));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a.terms[i..]);
    out.extend(b.terms[j..].iter().map(|&(m, c)| (m, bval(c))));
    MultiPoly { ring: a.ring.clone(), terms: out }
}

fn product(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    a.check(b);
    if a.is_empty() || b.is_empty() {
        return a.ring.zero();
    }
    if b.terms.len() == 1 {
        return a.mul_monomial(&b.terms[0].0, b.terms[0].1);
    }
    if a.terms.len() == 1 {
        return b.mul_monomial(&a.terms[0].0, a.terms[0].1);
    }
    let mut raw = Vec::with_capacity(a.terms.len() * b.terms.len());
    for &(am, ac) in &a.terms {
        for &(bm, bc) in &b.terms {
            raw.push((am.mul(&bm), ac as u64 * bc as u64));
        }
    }
    MultiPoly::from_unsorted(a.ring.clone(), raw)
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        merge(self, o, false)
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        merge(self, o, true)
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        product(self, o)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(self.ring.p - 1)
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: MultiPoly) -> MultiPoly {
        merge(&self, &o, false)
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: MultiPoly) -> MultiPoly {
        merge(&self, &o, true)
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: MultiPoly) -> MultiPoly {
        product(&self, &o)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        self.ring.zero()
    }

    fn one_like(&self) -> Self {
        self.ring.one()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_i64_like(&self, n: i64) -> Self {
        self.ring.constant(n)
    }

    fn characteristic(&self) -> u64 {
        self.ring.p as u64
    }
}

impl Domain for MultiPoly {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.exact_divide(d).ok()
    }
}
