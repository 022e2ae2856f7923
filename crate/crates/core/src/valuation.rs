//! Discrete valuations on `F_p(s, t)` and `F_p(u)` given by a prime
//! polynomial, with the checks built on them.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use rand_core::RngCore;

use crate::elliptic::{mu_from_theta, st_ring, supersingular_j_list, theta_extract};
use crate::error::{Error, Result};
use crate::modular::{is_prime, RationalNumber};
use crate::poly::{FfElem, FiniteField, MultiPoly, PolyRing, RationalFunction, Ring, UniPoly};

/// An integer or the top element, with `Infinite` above every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ValueExt {
    Finite(i64),
    Infinite,
}

impl ValueExt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ValueExt::Finite(v) => Some(v),
            ValueExt::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ValueExt::Infinite
    }

    pub fn scale(self, k: i64) -> ValueExt {
        match self {
            ValueExt::Finite(v) => ValueExt::Finite(v * k),
            ValueExt::Infinite => ValueExt::Infinite,
        }
    }
}

impl Add for ValueExt {
    type Output = ValueExt;
    fn add(self, o: ValueExt) -> ValueExt {
        match (self, o) {
            (ValueExt::Finite(a), ValueExt::Finite(b)) => ValueExt::Finite(a + b),
            _ => ValueExt::Infinite,
        }
    }
}

impl fmt::Display for ValueExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueExt::Finite(v) => write!(f, "{v}"),
            ValueExt::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValuationKind {
    /// Order of vanishing along an irreducible `h` in `F_p[s, t]`.
    HAdic,
    /// Order at an irreducible `pi` in `F_p[u]`.
    PiAdic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValuationSpec {
    kind: ValuationKind,
    prime: MultiPoly,
}

fn has_root_in_prime_field(f: &MultiPoly, var: usize) -> bool {
    let p = f.ring().characteristic();
    let n = f.ring().nvars();
    (0..p).any(|x| {
        let mut point = alloc::vec![0u32; n];
        point[var] = x;
        f.eval(&point) == 0
    })
}

impl ValuationSpec {
    /// Trusts the caller on irreducibility; only rejects constants.
    pub fn h_adic(h: MultiPoly) -> Result<Self> {
        if h.is_constant() {
            return Err(Error::NotIrreducible);
        }
        Ok(ValuationSpec { kind: ValuationKind::HAdic, prime: h.monic() })
    }

    /// Univariate `pi` of degree 1 to 3, irreducible by root search.
    pub fn pi_adic(pi: MultiPoly) -> Result<Self> {
        let vars = pi.support_vars();
        if vars.len() != 1 {
            return Err(Error::NotIrreducible);
        }
        let deg = pi.degree_in(vars[0]);
        if deg > 3 {
            return Err(Error::BoundExceeded);
        }
        if deg > 1 && has_root_in_prime_field(&pi, vars[0]) {
            return Err(Error::NotIrreducible);
        }
        Ok(ValuationSpec { kind: ValuationKind::PiAdic, prime: pi.monic() })
    }

    pub fn kind(&self) -> ValuationKind {
        self.kind
    }

    pub fn prime(&self) -> &MultiPoly {
        &self.prime
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.prime.ring()
    }

    pub fn valuate_poly(&self, f: &MultiPoly) -> Result<ValueExt> {
        if f.ring() != self.prime.ring() {
            return Err(Error::RingMismatch);
        }
        if f.is_empty() {
            return Ok(ValueExt::Infinite);
        }
        let mut rest = f.clone();
        let mut k = 0;
        while let Ok(q) = rest.exact_divide(&self.prime) {
            rest = q;
            k += 1;
        }
        Ok(ValueExt::Finite(k))
    }

    pub fn valuate(&self, g: &RationalFunction) -> Result<ValueExt> {
        let num = self.valuate_poly(g.numerator())?;
        let den = self.valuate_poly(g.denominator())?;
        Ok(match (num, den) {
            (ValueExt::Finite(a), ValueExt::Finite(b)) => ValueExt::Finite(a - b),
            _ => ValueExt::Infinite,
        })
    }
}

/// `h = s^3 - (j0/1728)(s^3 + 27 t^2 / 4)`, scaled so its `t^2` coefficient is 1.
pub fn ss_prime_poly(p: u32, j0: u64) -> Result<MultiPoly> {
    if p < 5 || !is_prime(p as u64) {
        return Err(Error::Precondition("p must be a prime >= 5"));
    }
    let pp = p as u64;
    let j0 = j0 % pp;
    if j0 == 0 || j0 == 1728 % pp || !supersingular_j_list(pp)?.contains(&j0) {
        return Err(Error::BadJInvariant);
    }
    let field = FiniteField::prime(p)?;
    let el = |v: i64| FfElem::from_int(&field, v);
    let c = el(j0 as i64) * el(1728).inv_or_zero();
    let s3 = el(1) - c.clone();
    let t2 = -(c * el(27) * el(4).inv_or_zero());
    let (Some(s3), Some(t2)) = (s3.as_prime(), t2.as_prime()) else { unreachable!("prime field") };
    if s3 == 0 || t2 == 0 {
        return Err(Error::NotIrreducible);
    }
    let ring = st_ring(p)?;
    let h = ring.from_terms([(&[3u32, 0][..], s3 as i64), (&[0, 2][..], t2 as i64)]);
    let scale = el(t2 as i64).inv_or_zero().as_prime().unwrap_or(0);
    Ok(h.scale(scale))
}

trait InvOrZero {
    fn inv_or_zero(&self) -> Self;
}

impl InvOrZero for FfElem {
    fn inv_or_zero(&self) -> Self {
        crate::poly::Field::inv(self).unwrap_or_else(|| self.zero_like())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscLemmaReport {
    pub n: usize,
    /// `v(c_1), ..., v(c_n)`.
    pub coefficient_valuations: Vec<ValueExt>,
    pub hypotheses_hold: bool,
    pub disc_valuation: ValueExt,
    pub expected: ValueExt,
    pub conclusion_holds: bool,
}

/// For monic `f = x^n + c_1 x^{n-1} + ... + c_n`: whether every
/// `v(c_i) > (i/n) v(c_n)` and whether `v(Disc f) = (n-1) v(c_n)`.
pub fn disc_lemma_check(f: &UniPoly<RationalFunction>, v: &ValuationSpec) -> Result<DiscLemmaReport> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        _ => return Err(Error::Precondition("degree must be at least 2")),
    };
    if !f.leading_coefficient().is_one() {
        return Err(Error::Precondition("polynomial must be monic"));
    }
    let p = v.ring().characteristic() as usize;
    if n % p == 0 {
        return Err(Error::Precondition("v(n) must be 0"));
    }
    let vals: Vec<ValueExt> = (1..=n).map(|i| v.valuate(&f.coeff(n - i))).collect::<Result<_>>()?;
    let vn = vals[n - 1].finite().ok_or(Error::Precondition("c_n must be nonzero"))?;
    let hypotheses_hold = vals[..n - 1].iter().enumerate().all(|(k, val)| match val {
        ValueExt::Infinite => true,
        ValueExt::Finite(x) => {
            let i = (k + 1) as i64;
            RationalNumber::from_int(*x) > RationalNumber::new(i * vn, n as i64).expect("n > 0")
        }
    });
    let disc = f.discriminant()?;
    let disc_valuation = v.valuate(&disc)?;
    let expected = ValueExt::Finite((n as i64 - 1) * vn);
    Ok(DiscLemmaReport {
        n,
        coefficient_valuations: vals,
        hypotheses_hold,
        disc_valuation,
        expected,
        conclusion_holds: disc_valuation == expected,
    })
}

/// `F_p(u)` with `u` its only variable.
pub fn u_ring(p: u32) -> Result<Arc<PolyRing>> {
    PolyRing::new(p, &["u"])
}

/// `u^e` as a rational function.
pub fn u_power(ring: &Arc<PolyRing>, e: i64) -> RationalFunction {
    let u = ring.gen(0);
    if e >= 0 {
        RationalFunction::from_poly(u.pow(e as u64))
    } else {
        RationalFunction::new(ring.one(), u.pow((-e) as u64)).expect("nonzero denominator")
    }
}

/// `kappa * u^e * (1 + u r(u))` with random nonzero `kappa` and `deg r <= 2`:
/// a random element of `u`-adic valuation exactly `e`.
pub fn random_with_valuation<R: RngCore>(ring: &Arc<PolyRing>, e: i64, rng: &mut R) -> RationalFunction {
    let p = ring.characteristic() as u64;
    let u = ring.gen(0);
    let mut unit = ring.one();
    for k in 1..=3u64 {
        let c = (rng.next_u64() % p) as i64;
        unit = &unit + &(&ring.constant(c) * &u.pow(k));
    }
    let kappa = 1 + (rng.next_u64() % (p - 1)) as i64;
    u_power(ring, e) * RationalFunction::from_poly(&ring.constant(kappa) * &unit)
}

/// A monic `f` of degree `n` over `F_p(u)` satisfying the strict hypotheses
/// `v_u(c_i) > (i/n) v_u(c_n)`; some middle coefficients are zero.
pub fn random_disc_instance<R: RngCore>(ring: &Arc<PolyRing>, n: usize, rng: &mut R) -> UniPoly<RationalFunction> {
    let en = (rng.next_u64() % 7) as i64 - 3;
    let zero = RationalFunction::from_poly(ring.zero());
    // coeffs[n - i] = c_i
    let mut coeffs = alloc::vec![zero.clone(); n + 1];
    coeffs[n] = zero.one_like();
    coeffs[0] = random_with_valuation(ring, en, rng);
    for i in 1..n {
        if rng.next_u64() % 4 == 0 {
            continue;
        }
        let floor = (i as i64 * en).div_euclid(n as i64);
        let ei = floor + 1 + (rng.next_u64() % 3) as i64;
        coeffs[n - i] = random_with_valuation(ring, ei, rng);
    }
    UniPoly::new(coeffs, zero)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KummerReport {
    pub l: u64,
    pub field_order: u64,
    /// All ordered pairs of nonzero elements.
    pub pairs_scanned: usize,
    pub both_powers: usize,
    pub both_non_powers: usize,
    /// One power, one non-power: different extensions, nothing to check.
    pub mixed: usize,
    /// Pairs generating the same extension with `beta1^eps beta2` an `l`-th power.
    pub passed: usize,
    pub failures: Vec<(FfElem, FfElem)>,
}

impl KummerReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.passed == self.both_powers + self.both_non_powers
    }
}

/// Over a finite field all non-`l`-th powers generate the same degree-`l`
/// extension; for every such pair (and every pair of `l`-th powers) some
/// `eps` in `{1, -1}` must make `beta1^eps beta2` an `l`-th power.
pub fn kummer_pair_check(field: &Arc<FiniteField>, l: u64) -> Result<KummerReport> {
    if l != 2 && l != 3 {
        return Err(Error::Precondition("l must be 2 or 3"));
    }
    if field.characteristic() as u64 == l {
        return Err(Error::Precondition("characteristic must differ from l"));
    }
    if l == 3 && (field.order() - 1) % 3 != 0 {
        return Err(Error::Precondition("field must contain a primitive cube root of unity"));
    }
    let nonzero: Vec<FfElem> = FfElem::all(field).into_iter().filter(|x| !x.is_zero()).collect();
    let powers: alloc::collections::BTreeSet<FfElem> = nonzero.iter().map(|x| x.pow(l)).collect();
    let is_power = |x: &FfElem| powers.contains(x);
    let mut rep = KummerReport {
        l,
        field_order: field.order(),
        pairs_scanned: 0,
        both_powers: 0,
        both_non_powers: 0,
        mixed: 0,
        passed: 0,
        failures: Vec::new(),
    };
    for b1 in &nonzero {
        let b1_inv = crate::poly::Field::inv(b1).expect("nonzero");
        for b2 in &nonzero {
            rep.pairs_scanned += 1;
            match (is_power(b1), is_power(b2)) {
                (true, true) => rep.both_powers += 1,
                (false, false) => rep.both_non_powers += 1,
                _ => {
                    rep.mixed += 1;
                    continue;
                }
            }
            if is_power(&(b1.clone() * b2.clone())) || is_power(&(b1_inv.clone() * b2.clone())) {
                rep.passed += 1;
            } else {
                rep.failures.push((b1.clone(), b2.clone()));
            }
        }
    }
    Ok(rep)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ik24Row {
    pub label: String,
    pub expected: String,
    pub observed: ValueExt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ik24Report {
    pub p: u32,
    pub j0: Option<u64>,
    /// Set when no row could be produced.
    pub reason: Option<&'static str>,
    pub prime: Option<MultiPoly>,
    pub rows: Vec<Ik24Row>,
}

/// `h`-adic valuations of the `theta` coefficient ratios and of `mu` at the
/// supersingular prime, next to the values a suitable valuation should give.
pub fn ik24_exploratory_report(p: u32, j0: Option<u64>) -> Result<Ik24Report> {
    let empty = |reason| Ik24Report { p, j0, reason: Some(reason), prime: None, rows: Vec::new() };
    let candidates: Vec<u64> = supersingular_j_list(p as u64)?
        .into_iter()
        .filter(|&j| j != 0 && j != 1728 % p as u64)
        .collect();
    let j0 = match j0 {
        Some(j) => j % p as u64,
        None => match candidates.first() {
            Some(&j) => j,
            None => return Ok(empty("no supersingular j outside {0, 1728}")),
        },
    };
    let h = match ss_prime_poly(p, j0) {
        Ok(h) => h,
        Err(Error::BadJInvariant) => return Ok(empty("j0 is 0, 1728 or not supersingular")),
        Err(e) => return Err(e),
    };
    let v = ValuationSpec::h_adic(h.clone())?;
    let theta = theta_extract(p)?;
    let lead = theta.leading().clone();
    let half = (p as usize - 1) / 2;
    let last = (p as usize * p as usize - 1) / 2;
    let mut rows = Vec::new();
    for k in theta.indices() {
        let ratio = RationalFunction::new(theta.a(k).expect("theta index").clone(), lead.clone())?;
        let expected = if k == half {
            String::from("0")
        } else if k == last {
            String::from("-1")
        } else {
            String::from(">= 0")
        };
        rows.push(Ik24Row { label: format!("v(a_{k}/a_{half})"), expected, observed: v.valuate(&ratio)? });
    }
    if p % 4 == 1 {
        let mu = mu_from_theta(&theta)?;
        rows.push(Ik24Row {
            label: String::from("v(mu)"),
            expected: format!("{}", -((p as i64 - 3) / 2)),
            observed: v.valuate(&mu)?,
        });
    }
    Ok(Ik24Report { p, j0: Some(j0), reason: None, prime: Some(h), rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::lambda;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn value_ext_order() {
        assert!(ValueExt::Infinite > ValueExt::Finite(i64::MAX));
        assert_eq!(ValueExt::Infinite + ValueExt::Finite(-3), ValueExt::Infinite);
        assert_eq!(ValueExt::Finite(2) + ValueExt::Finite(-3), ValueExt::Finite(-1));
    }

    #[test]
    fn ss_prime_examples() {
        let h = ss_prime_poly(13, 5).unwrap();
        let r = h.ring().clone();
        let expected = &r.gen(1).pow(2) - &(&r.constant(3) * &r.gen(0).pow(3));
        assert_eq!(h, expected);
        assert_eq!(ss_prime_poly(13, 0), Err(Error::BadJInvariant));
        assert_eq!(ss_prime_poly(5, 5), Err(Error::BadJInvariant));
        assert_eq!(ss_prime_poly(13, 6), Err(Error::BadJInvariant));
    }

    #[test]
    fn lambda_is_a_unit_at_h() {
        let h = ss_prime_poly(13, 5).unwrap();
        let v = ValuationSpec::h_adic(h.clone()).unwrap();
        let l = RationalFunction::from_poly(lambda(h.ring()));
        assert_eq!(v.valuate(&l).unwrap(), ValueExt::Finite(0));
        let l2h = RationalFunction::from_poly(&lambda(h.ring()) * &h);
        assert_eq!(v.valuate(&l2h).unwrap(), ValueExt::Finite(1));
    }

    #[test]
    fn u_adic_examples() {
        let r = u_ring(5).unwrap();
        let u = r.gen(0);
        let v = ValuationSpec::pi_adic(u.clone()).unwrap();
        let f = RationalFunction::new(u.pow(3), &u - &r.one()).unwrap();
        assert_eq!(v.valuate(&f).unwrap(), ValueExt::Finite(3));
        assert_eq!(v.valuate(&RationalFunction::from_poly(r.zero())).unwrap(), ValueExt::Infinite);
        // u^2 - 2 has no root mod 5; u^2 - 1 does
        assert!(ValuationSpec::pi_adic(&u.pow(2) - &r.constant(2)).is_ok());
        assert_eq!(ValuationSpec::pi_adic(&u.pow(2) - &r.one()), Err(Error::NotIrreducible));
        for c in 1..5 {
            assert_eq!(v.valuate(&RationalFunction::from_poly(r.constant(c))).unwrap(), ValueExt::Finite(0));
        }
    }

    #[test]
    fn disc_lemma_examples() {
        let r = u_ring(5).unwrap();
        let v = ValuationSpec::pi_adic(r.gen(0)).unwrap();
        let one = RationalFunction::from_poly(r.one());
        let f = UniPoly::new(alloc::vec![u_power(&r, -1), u_power(&r, 1), one.clone()], one.zero_like());
        let rep = disc_lemma_check(&f, &v).unwrap();
        assert!(rep.hypotheses_hold && rep.conclusion_holds);
        assert_eq!(rep.disc_valuation, ValueExt::Finite(-1));
        let g = UniPoly::new(alloc::vec![one.clone(), one.zero_like(), one.zero_like(), one.clone()], one.zero_like());
        let rep = disc_lemma_check(&g, &v).unwrap();
        assert!(rep.hypotheses_hold && rep.conclusion_holds);
        assert_eq!(rep.disc_valuation, ValueExt::Finite(0));
        // v(c_1) = 0 is not above (1/2) v(c_2) = 1/2
        let h = UniPoly::new(alloc::vec![u_power(&r, 1), one.clone(), one.clone()], one.zero_like());
        assert!(!disc_lemma_check(&h, &v).unwrap().hypotheses_hold);
    }

    #[test]
    fn random_disc_instances_satisfy_lemma() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [5u32, 13] {
            let r = u_ring(p).unwrap();
            let v = ValuationSpec::pi_adic(r.gen(0)).unwrap();
            for k in 0..40 {
                let n = 2 + k % 4;
                if n % p as usize == 0 {
                    continue;
                }
                let f = random_disc_instance(&r, n, &mut rng);
                let rep = disc_lemma_check(&f, &v).unwrap();
                assert!(rep.hypotheses_hold, "{f}");
                // oracle: product formula over the splitting-free resultant
                let res = f.resultant(&f.derivative()).unwrap();
                assert_eq!(v.valuate(&res).unwrap(), rep.disc_valuation);
                assert!(rep.conclusion_holds, "p={p} f={f}");
            }
        }
    }

    #[test]
    fn kummer_counts() {
        let f13 = FiniteField::prime(13).unwrap();
        let r3 = kummer_pair_check(&f13, 3).unwrap();
        assert_eq!(r3.pairs_scanned, 144);
        assert_eq!(r3.both_non_powers, 64);
        assert_eq!(r3.both_powers, 16);
        assert!(r3.holds());
        let r2 = kummer_pair_check(&f13, 2).unwrap();
        assert_eq!(r2.both_non_powers, 36);
        assert!(r2.holds());
        assert!(kummer_pair_check(&FiniteField::prime(5).unwrap(), 3).is_err());
        assert!(kummer_pair_check(&FiniteField::extension(5, 2).unwrap(), 3).unwrap().holds());
    }

    #[test]
    fn ik24_report_shapes() {
        let rep = ik24_exploratory_report(5, None).unwrap();
        assert!(rep.rows.is_empty() && rep.reason.is_some());
        let rep = ik24_exploratory_report(13, Some(5)).unwrap();
        assert_eq!(rep.rows.len(), 8);
        assert_eq!(rep.rows[0].observed, ValueExt::Finite(0));
    }

    use proptest::prelude::*;

    type RfSpec = (i64, Vec<(u32, u32, i64)>, Vec<(u32, u32, i64)>);

    /// Power of the prime shifted by -1, then numerator and denominator terms.
    fn arb_rf(p: u32) -> impl Strategy<Value = RfSpec> {
        let term = (0u32..3, 0u32..3, 1i64..p as i64);
        (0i64..4, proptest::collection::vec(term.clone(), 1..4), proptest::collection::vec(term, 1..3))
    }

    fn build(ring: &Arc<PolyRing>, prime: &MultiPoly, spec: &RfSpec) -> Option<RationalFunction> {
        let n = ring.nvars();
        let mk = |ts: &Vec<(u32, u32, i64)>| {
            let exps: Vec<(Vec<u32>, i64)> =
                ts.iter().map(|&(a, b, c)| (if n == 2 { alloc::vec![a, b] } else { alloc::vec![a + b] }, c)).collect();
            ring.from_terms(exps.iter().map(|(e, c)| (&e[..], *c)))
        };
        let num = mk(&spec.1);
        let den = mk(&spec.2);
        if num.is_empty() || den.is_empty() {
            return None;
        }
        let k = spec.0 - 1;
        let pk = prime.pow(k.unsigned_abs());
        let (num, den) = if k >= 0 { (&num * &pk, den) } else { (num, &den * &pk) };
        RationalFunction::new(num, den).ok()
    }

    fn axioms(v: &ValuationSpec, a: &RationalFunction, b: &RationalFunction) -> core::result::Result<(), TestCaseError> {
        let va = v.valuate(a).unwrap();
        let vb = v.valuate(b).unwrap();
        prop_assert_eq!(v.valuate(&(a.clone() * b.clone())).unwrap(), va + vb);
        let vs = v.valuate(&(a.clone() + b.clone())).unwrap();
        prop_assert!(vs >= va.min(vb));
        if va != vb {
            prop_assert_eq!(vs, va.min(vb));
        }
        Ok(())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn h_adic_axioms(x in arb_rf(13), y in arb_rf(13)) {
            let h = ss_prime_poly(13, 5).unwrap();
            let v = ValuationSpec::h_adic(h.clone()).unwrap();
            let ring = h.ring().clone();
            if let (Some(a), Some(b)) = (build(&ring, &h, &x), build(&ring, &h, &y)) {
                axioms(&v, &a, &b)?;
            }
        }

        #[test]
        fn u_adic_axioms(x in arb_rf(5), y in arb_rf(5)) {
            let ring = u_ring(5).unwrap();
            let u = ring.gen(0);
            let v = ValuationSpec::pi_adic(u.clone()).unwrap();
            if let (Some(a), Some(b)) = (build(&ring, &u, &x), build(&ring, &u, &y)) {
                axioms(&v, &a, &b)?;
            }
        }
    }
}
