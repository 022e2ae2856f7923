//! Cardano's formula in characteristic at least 5, with every root identity
//! checked in `K[z]/(z^3 - beta)` instead of extracting cube roots.

use alloc::sync::Arc;

use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::modular::RationalNumber;
use crate::poly::{find_special_constants, FfElem, Field, FiniteField, PolyRing, RationalFunction, Ring, UniPoly};
use crate::valuation::{random_with_valuation, ValuationSpec, ValueExt};

/// `x^3 + c1 x^2 + c2 x + c3` and its depressed form `x^3 + A x + B`,
/// `A = (3 c2 - c1^2)/3`, `B = (2 c1^3 - 9 c1 c2 + 27 c3)/27`.
#[derive(Debug, Clone, PartialEq)]
pub struct DepressedCubic<F> {
    pub c1: F,
    pub c2: F,
    pub c3: F,
    pub a: F,
    pub b: F,
}

fn small<F: Ring>(like: &F, n: i64) -> F {
    like.from_i64_like(n)
}

fn over<F: Field>(x: F, d: i64) -> Result<F> {
    let den = small(&x, d);
    x.div(&den).ok_or(Error::Precondition("characteristic must be at least 5"))
}

pub fn depress<F: Field>(c1: F, c2: F, c3: F) -> Result<DepressedCubic<F>> {
    let ch = c1.characteristic();
    if ch == 2 || ch == 3 {
        return Err(Error::Precondition("characteristic must be at least 5"));
    }
    let n = |k| small(&c1, k);
    let a = over(n(3) * c2.clone() - c1.clone() * c1.clone(), 3)?;
    let b = over(
        n(2) * c1.pow(3) - n(9) * c1.clone() * c2.clone() + n(27) * c3.clone(),
        27,
    )?;
    let dc = DepressedCubic { c1, c2, c3, a, b };
    if dc.shifted() != dc.depressed() {
        return Err(Error::Precondition("depression identity failed"));
    }
    Ok(dc)
}

impl<F: Field> DepressedCubic<F> {
    pub fn cubic(&self) -> UniPoly<F> {
        let one = self.c1.one_like();
        UniPoly::new(alloc::vec![self.c3.clone(), self.c2.clone(), self.c1.clone(), one], self.c1.zero_like())
    }

    pub fn depressed(&self) -> UniPoly<F> {
        let one = self.c1.one_like();
        let zero = self.c1.zero_like();
        UniPoly::new(alloc::vec![self.b.clone(), self.a.clone(), zero.clone(), one], zero)
    }

    /// `f(x - c1/3)`.
    pub fn shifted(&self) -> UniPoly<F> {
        let third = self.c1.clone().div(&small(&self.c1, 3)).expect("3 invertible");
        self.cubic().shift(&-third)
    }

    /// `4A^3 + 27B^2`, the square of `R`.
    pub fn r_squared(&self) -> F {
        small(&self.a, 4) * self.a.pow(3) + small(&self.a, 27) * self.b.clone() * self.b.clone()
    }
}

/// `beta_pm = -B/2 +- R / (6 sqrt 3)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CardanoData<F> {
    pub r: F,
    pub beta_plus: F,
    pub beta_minus: F,
}

impl<F: Field> CardanoData<F> {
    /// `beta_plus` unless it vanishes.
    pub fn nonzero_beta(&self) -> Option<&F> {
        [&self.beta_plus, &self.beta_minus].into_iter().find(|b| !b.is_zero())
    }

    /// `beta_+ + beta_- = -B` and `27 beta_+ beta_- = -A^3`.
    pub fn invariants_hold(&self, dc: &DepressedCubic<F>) -> bool {
        let sum = self.beta_plus.clone() + self.beta_minus.clone();
        let prod = small(&dc.a, 27) * self.beta_plus.clone() * self.beta_minus.clone();
        sum == -dc.b.clone() && prod == -dc.a.pow(3)
    }
}

pub fn cardano_beta<F: Field>(dc: &DepressedCubic<F>, sqrt3: &F, r: &F) -> Result<CardanoData<F>> {
    if sqrt3.clone() * sqrt3.clone() != small(sqrt3, 3) {
        return Err(Error::Precondition("sqrt3 must square to 3"));
    }
    if r.clone() * r.clone() != dc.r_squared() {
        return Err(Error::DiscriminantNotSquare);
    }
    let half_b = over(dc.b.clone(), 2)?;
    let shift = r.clone().div(&(small(r, 6) * sqrt3.clone())).ok_or(Error::DivisionByZero)?;
    Ok(CardanoData {
        r: r.clone(),
        beta_plus: shift.clone() - half_b.clone(),
        beta_minus: -half_b - shift,
    })
}

/// [`cardano_beta`] over a finite field, finding `sqrt 3` and `R` by scan.
pub fn cardano_beta_finite(dc: &DepressedCubic<FfElem>) -> Result<CardanoData<FfElem>> {
    let consts = find_special_constants(dc.a.field());
    let sqrt3 = consts.sqrt3.ok_or(Error::Precondition("field must contain sqrt 3"))?;
    let r = dc.r_squared().sqrt().ok_or(Error::DiscriminantNotSquare)?;
    cardano_beta(dc, &sqrt3, &r)
}

/// `c0 + c1 z + c2 z^2` in `K[z]/(z^3 - beta)`.
#[derive(Debug, Clone, PartialEq)]
struct Cubed<F> {
    c: [F; 3],
    beta: F,
}

impl<F: Field> Cubed<F> {
    fn constant(x: F, beta: &F) -> Self {
        let z = x.zero_like();
        Cubed { c: [x, z.clone(), z], beta: beta.clone() }
    }

    fn add(&self, o: &Self) -> Self {
        Cubed {
            c: [0, 1, 2].map(|i| self.c[i].clone() + o.c[i].clone()),
            beta: self.beta.clone(),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        let zero = self.beta.zero_like();
        let mut prod = [zero.clone(), zero.clone(), zero.clone(), zero.clone(), zero];
        for i in 0..3 {
            for j in 0..3 {
                prod[i + j] = prod[i + j].clone() + self.c[i].clone() * o.c[j].clone();
            }
        }
        let b = &self.beta;
        Cubed {
            c: [
                prod[0].clone() + prod[3].clone() * b.clone(),
                prod[1].clone() + prod[4].clone() * b.clone(),
                prod[2].clone(),
            ],
            beta: b.clone(),
        }
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(Ring::is_zero)
    }
}

/// Which of the candidate roots `-+c1/3 + w^i z - A/(3 w^i z)` annihilate `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCheck {
    /// Shift by `-c1/3`, for `i = 0, 1, 2`.
    pub minus_shift: [bool; 3],
    /// Shift by `+c1/3`.
    pub plus_shift: [bool; 3],
}

impl RootCheck {
    pub fn holds(&self) -> bool {
        self.minus_shift.iter().all(|&b| b)
    }
}

pub fn root_identity_check<F: Field>(dc: &DepressedCubic<F>, beta: &F, omega: &F) -> Result<RootCheck> {
    if beta.is_zero() {
        return Err(Error::BetaZero);
    }
    if omega.is_one() || !omega.pow(3).is_one() {
        return Err(Error::Precondition("omega must be a primitive cube root of unity"));
    }
    let third = over(dc.c1.clone(), 3)?;
    let eval = |shift: &F, w: &F| -> Result<bool> {
        // z^{-1} = z^2 / beta
        let coeff = -(over(dc.a.clone(), 3)?.div(&(w.clone() * beta.clone())).ok_or(Error::DivisionByZero)?);
        let root = Cubed { c: [shift.clone(), w.clone(), coeff], beta: beta.clone() };
        let k = |x: &F| Cubed::constant(x.clone(), beta);
        let r2 = root.mul(&root);
        let r3 = r2.mul(&root);
        let val = r3.add(&k(&dc.c1).mul(&r2)).add(&k(&dc.c2).mul(&root)).add(&k(&dc.c3));
        Ok(val.is_zero())
    };
    let mut minus_shift = [false; 3];
    let mut plus_shift = [false; 3];
    let mut w = omega.one_like();
    for i in 0..3 {
        minus_shift[i] = eval(&-third.clone(), &w)?;
        plus_shift[i] = eval(&third, &w)?;
        w = w * omega.clone();
    }
    Ok(RootCheck { minus_shift, plus_shift })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicValuationReport {
    pub hypotheses_hold: bool,
    pub v_c3: ValueExt,
    pub v_b: ValueExt,
    pub v_r: ValueExt,
    pub v_beta_plus: ValueExt,
    pub v_beta_minus: ValueExt,
    /// `v(R) = v(c3) = v(B)` and some `v(beta) = v(c3)`.
    pub holds: bool,
}

/// Valuations in Cardano's formula over a valued function field; `r` is a
/// caller-supplied square root of `4A^3 + 27B^2`.
pub fn cubic_valuation_check(
    dc: &DepressedCubic<RationalFunction>,
    v: &ValuationSpec,
    sqrt3: &RationalFunction,
    r: &RationalFunction,
) -> Result<CubicValuationReport> {
    let v_c1 = v.valuate(&dc.c1)?;
    let v_c2 = v.valuate(&dc.c2)?;
    let v_c3 = v.valuate(&dc.c3)?;
    let e3 = v_c3.finite().ok_or(Error::Precondition("c3 must be nonzero"))?;
    let above = |val: ValueExt, num: i64| match val {
        ValueExt::Infinite => true,
        ValueExt::Finite(x) => RationalNumber::from_int(x) > RationalNumber::new(num * e3, 3).expect("nonzero"),
    };
    let hypotheses_hold = above(v_c1, 1) && above(v_c2, 2);
    let data = cardano_beta(dc, sqrt3, r)?;
    let v_b = v.valuate(&dc.b)?;
    let v_r = v.valuate(&data.r)?;
    let v_beta_plus = v.valuate(&data.beta_plus)?;
    let v_beta_minus = v.valuate(&data.beta_minus)?;
    let holds = hypotheses_hold && v_r == v_c3 && v_b == v_c3 && (v_beta_plus == v_c3 || v_beta_minus == v_c3);
    Ok(CubicValuationReport { hypotheses_hold, v_c3, v_b, v_r, v_beta_plus, v_beta_minus, holds })
}

/// A random monic cubic over `F_q` with `4A^3 + 27B^2` a nonzero square and
/// a nonzero `beta`, by rejection sampling.
pub fn random_cyclic_cubic<R: RngCore>(field: &Arc<FiniteField>, rng: &mut R) -> (DepressedCubic<FfElem>, CardanoData<FfElem>) {
    let q = field.order();
    loop {
        let mut draw = || FfElem::all(field)[(rng.next_u64() % q) as usize].clone();
        let (c1, c2, c3) = (draw(), draw(), draw());
        let Ok(dc) = depress(c1, c2, c3) else { continue };
        if dc.r_squared().is_zero() {
            continue;
        }
        if let Ok(data) = cardano_beta_finite(&dc) {
            if data.nonzero_beta().is_some() {
                return (dc, data);
            }
        }
    }
}

/// An instance over `F_p(u)` meeting the valuation hypotheses, built from
/// `beta` with `v(beta) = e`: `beta_- = -A^3/(27 beta)`, `B = -(beta + beta_-)`,
/// `R = 3 sqrt3 (beta - beta_-)`. Returns the cubic and its witness `R`.
pub fn random_valuation_instance<R: RngCore>(
    ring: &Arc<PolyRing>,
    sqrt3: &RationalFunction,
    rng: &mut R,
) -> Result<(DepressedCubic<RationalFunction>, RationalFunction)> {
    let zero = RationalFunction::from_poly(ring.zero());
    let n = |k| zero.from_i64_like(k);
    let e = (rng.next_u64() % 7) as i64 - 3;
    let beta = random_with_valuation(ring, e, rng);
    let a = if rng.next_u64() % 4 == 0 {
        zero.clone()
    } else {
        random_with_valuation(ring, (2 * e).div_euclid(3) + 1 + (rng.next_u64() % 2) as i64, rng)
    };
    let c1 = if rng.next_u64() % 3 == 0 {
        zero.clone()
    } else {
        random_with_valuation(ring, e.div_euclid(3) + 1 + (rng.next_u64() % 2) as i64, rng)
    };
    let beta_minus = -(a.pow(3).div(&(n(27) * beta.clone())).ok_or(Error::DivisionByZero)?);
    let b = -(beta.clone() + beta_minus.clone());
    let r = n(3) * sqrt3.clone() * (beta - beta_minus);
    let c2 = a + c1.clone() * c1.clone() * n(3).inv().ok_or(Error::DivisionByZero)?;
    let c3 = (n(27) * b - n(2) * c1.pow(3) + n(9) * c1.clone() * c2.clone())
        .div(&n(27))
        .ok_or(Error::DivisionByZero)?;
    Ok((depress(c1, c2, c3)?, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::{u_power, u_ring};
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ff(f: &Arc<FiniteField>, v: i64) -> FfElem {
        FfElem::from_int(f, v)
    }

    #[test]
    fn depress_examples() {
        let f = FiniteField::prime(13).unwrap();
        let dc = depress(ff(&f, 0), ff(&f, 0), ff(&f, -2)).unwrap();
        assert_eq!((dc.a.clone(), dc.b.clone()), (ff(&f, 0), ff(&f, -2)));
        let dc = depress(ff(&f, 3), ff(&f, 0), ff(&f, 0)).unwrap();
        assert_eq!((dc.a, dc.b), (ff(&f, -3), ff(&f, 2)));
        let f3 = FiniteField::prime(3).unwrap();
        assert!(depress(ff(&f3, 1), ff(&f3, 0), ff(&f3, 0)).is_err());
    }

    #[test]
    fn depress_symbolic() {
        let r = PolyRing::new(5, &["s", "t"]).unwrap();
        let (s, t) = (r.gen(0), r.gen(1));
        let rf = RationalFunction::from_poly;
        let dc = depress(rf(s.clone()), rf(&s * &t), rf(&t.pow(2) + &r.one())).unwrap();
        assert_eq!(dc.shifted(), dc.depressed());
    }

    #[test]
    fn beta_examples() {
        let f = FiniteField::prime(13).unwrap();
        let dc = depress(ff(&f, 0), ff(&f, 0), ff(&f, -2)).unwrap();
        let data = cardano_beta_finite(&dc).unwrap();
        assert_eq!(data.r, ff(&f, 2));
        assert_eq!((data.beta_plus.clone(), data.beta_minus.clone()), (ff(&f, 0), ff(&f, 2)));
        assert!(data.invariants_hold(&dc));
        assert_eq!(data.nonzero_beta(), Some(&ff(&f, 2)));

        let triple = depress(ff(&f, 0), ff(&f, 0), ff(&f, 0)).unwrap();
        let d0 = cardano_beta_finite(&triple).unwrap();
        assert!(d0.beta_plus.is_zero() && d0.beta_minus.is_zero());

        let f49 = FiniteField::extension(7, 2).unwrap();
        let dc = depress(ff(&f49, 3), ff(&f49, 0), ff(&f49, 0)).unwrap();
        let data = cardano_beta_finite(&dc).unwrap();
        assert!(data.r.is_zero());
        assert_eq!((data.beta_plus.clone(), data.beta_minus.clone()), (ff(&f49, -1), ff(&f49, -1)));
        // A = 2, B = 0: 4A^3 + 27B^2 = 32 = 6 is not a square mod 13
        let f13 = FiniteField::prime(13).unwrap();
        let ns = depress(ff(&f13, 0), ff(&f13, 2), ff(&f13, 0)).unwrap();
        assert_eq!(ns.r_squared(), ff(&f13, 32));
        assert_eq!(cardano_beta_finite(&ns).unwrap_err(), Error::DiscriminantNotSquare);
    }

    #[test]
    fn root_identity_examples() {
        let f = FiniteField::prime(13).unwrap();
        let omega = ff(&f, 3);
        let dc = depress(ff(&f, 0), ff(&f, 0), ff(&f, -2)).unwrap();
        let rc = root_identity_check(&dc, &ff(&f, 2), &omega).unwrap();
        assert!(rc.holds());
        assert_eq!(root_identity_check(&dc, &ff(&f, 0), &omega), Err(Error::BetaZero));

        let f49 = FiniteField::extension(7, 2).unwrap();
        let w = find_special_constants(&f49).omega.unwrap();
        let dc = depress(ff(&f49, 3), ff(&f49, 0), ff(&f49, 0)).unwrap();
        let data = cardano_beta_finite(&dc).unwrap();
        let rc = root_identity_check(&dc, data.nonzero_beta().unwrap(), &w).unwrap();
        assert!(rc.holds());
        assert_eq!(rc.plus_shift, [false; 3]);
    }

    #[test]
    fn random_cubics_have_cardano_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for q in [13u32, 37] {
            let f = FiniteField::prime(q).unwrap();
            let omega = find_special_constants(&f).omega.unwrap();
            for _ in 0..30 {
                let (dc, data) = random_cyclic_cubic(&f, &mut rng);
                assert!(data.invariants_hold(&dc));
                for beta in [&data.beta_plus, &data.beta_minus] {
                    if !beta.is_zero() {
                        assert!(root_identity_check(&dc, beta, &omega).unwrap().holds());
                    }
                }
            }
        }
    }

    #[test]
    fn cubic_valuation_examples() {
        let r = u_ring(13).unwrap();
        let v = ValuationSpec::pi_adic(r.gen(0)).unwrap();
        let zero = RationalFunction::from_poly(r.zero());
        let sqrt3 = zero.from_i64_like(4);
        let dc = depress(zero.clone(), zero.clone(), u_power(&r, -1)).unwrap();
        let witness = zero.from_i64_like(3) * sqrt3.clone() * u_power(&r, -1);
        let rep = cubic_valuation_check(&dc, &v, &sqrt3, &witness).unwrap();
        assert!(rep.hypotheses_hold && rep.holds);
        assert_eq!(rep.v_b, ValueExt::Finite(-1));
        assert_eq!((rep.v_beta_plus, rep.v_beta_minus), (ValueExt::Infinite, ValueExt::Finite(-1)));

        // c1 = 1 gives v(c1) = 0, not above v(c3)/3 = 0
        let third = zero.from_i64_like(3).inv().unwrap();
        let c3 = (zero.one_like() - zero.from_i64_like(27) * u_power(&r, 3)) * zero.from_i64_like(27).inv().unwrap();
        let bad = depress(zero.one_like(), third, c3).unwrap();
        assert!(bad.a.is_zero());
        let witness = zero.from_i64_like(3) * sqrt3.clone() * u_power(&r, 3);
        let rep = cubic_valuation_check(&bad, &v, &sqrt3, &witness).unwrap();
        assert!(!rep.hypotheses_hold && !rep.holds);
        assert_eq!(cardano_beta(&bad, &sqrt3, &zero).unwrap_err(), Error::DiscriminantNotSquare);
    }

    #[test]
    fn constructed_instances_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let r = u_ring(13).unwrap();
        let v = ValuationSpec::pi_adic(r.gen(0)).unwrap();
        let sqrt3 = RationalFunction::from_poly(r.constant(4));
        for _ in 0..30 {
            let (dc, witness) = random_valuation_instance(&r, &sqrt3, &mut rng).unwrap();
            let rep = cubic_valuation_check(&dc, &v, &sqrt3, &witness).unwrap();
            assert!(rep.hypotheses_hold, "{rep:?}");
            assert!(rep.holds, "{rep:?}");
        }
    }
}
