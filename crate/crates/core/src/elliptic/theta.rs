use alloc::sync::Arc;
use alloc::vec::Vec;

use super::division::{division_polynomials, st_ring, DivisionPolySet};
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, PolyRing, RationalFunction, Ring, UniPoly};

pub const THETA_MAX_P: u32 = 13;

/// `theta(X) = sum_i a_{(p-1)/2 + p i} X^{(p-1)/2 - i}`, where `a_k` is the
/// coefficient of `x^{(p^2-1)/2 - k}` in `psi_p`.
#[derive(Debug, Clone)]
pub struct Theta {
    p: u32,
    ring: Arc<PolyRing>,
    /// `coeffs[i] = a_{(p-1)/2 + p i}`.
    coeffs: Vec<MultiPoly>,
    /// `psi_p` has no monomial `x^e` with `p` not dividing `e`.
    p_power_shaped: bool,
}

impl Theta {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        (self.p as usize - 1) / 2
    }

    /// `a_k` for `k = (p-1)/2 + p i`; `None` at other indices.
    pub fn a(&self, k: usize) -> Option<&MultiPoly> {
        let h = self.degree();
        (k >= h && (k - h) % self.p as usize == 0).then(|| self.coeffs.get((k - h) / self.p as usize)).flatten()
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..=self.degree()).map(|i| self.degree() + self.p as usize * i).collect()
    }

    pub fn coefficients(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// The leading coefficient `a_{(p-1)/2}`.
    pub fn leading(&self) -> &MultiPoly {
        &self.coeffs[0]
    }

    pub fn is_p_power_shaped(&self) -> bool {
        self.p_power_shaped
    }

    /// `theta` as a polynomial in `X` over `F_p[s, t]`.
    pub fn as_univariate(&self) -> UniPoly<MultiPoly> {
        UniPoly::new(self.coeffs.iter().rev().cloned().collect(), self.ring.zero())
    }
}

pub fn theta_extract(p: u32) -> Result<Theta> {
    if p > THETA_MAX_P {
        return Err(Error::BoundExceeded);
    }
    let d = division_polynomials(p, p as usize)?;
    theta_from_set(&d)
}

pub(crate) fn theta_from_set(d: &DivisionPolySet) -> Result<Theta> {
    let p = d.characteristic();
    let psi = d.as_univariate(p as usize)?;
    let top = (p as usize * p as usize - 1) / 2;
    let h = (p as usize - 1) / 2;
    let coeffs: Vec<MultiPoly> = (0..=h).map(|i| psi.coeff(top - (h + p as usize * i))).collect();
    if coeffs[0].is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let p_power_shaped = psi.coeffs().iter().enumerate().all(|(e, c)| e % p as usize == 0 || c.is_zero());
    Ok(Theta { p, ring: st_ring(p)?, coeffs, p_power_shaped })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalReport {
    pub p: u32,
    pub expected_degree: usize,
    pub radical_degree: usize,
    /// `k` with `psi = h(x^k)` and `h'` nonzero.
    pub inseparable_degree: usize,
    /// `theta = a * radical`.
    pub theta_matches: bool,
    /// The twist of the `p`-th root radical equals the radical read at `s^p, t^p`.
    pub twist_matches: bool,
    /// `psi_p(S^p, T^p; x) = (a * g)(x)^p` with `g` the `p`-th root radical.
    pub power_matches: bool,
}

fn to_rational(f: &UniPoly<MultiPoly>) -> UniPoly<RationalFunction> {
    let zero = RationalFunction::from_poly(f.zero_coeff().clone());
    f.map_coeffs(zero, |c| RationalFunction::from_poly(c.clone()))
}

/// Consistency of `theta` with the torsion `x`-coordinates.
///
/// `psi_p` is a polynomial in `x^p`, so its radical over the perfect
/// closure is read off after deflation: `h(X) = psi_p` with `X = x^p`, and
/// the separable radical of `h` must be `theta / a` of degree `(p-1)/2`. Its
/// `p`-th root `g` lives in `F_p(S, T)` with `s = S^p`, `t = T^p`.
pub fn theta_radical_check(p: u32) -> Result<RadicalReport> {
    if p != 5 && p != 7 {
        return Err(Error::Precondition("radical check runs for p in {5, 7}"));
    }
    let d = division_polynomials(p, p as usize)?;
    let theta = theta_from_set(&d)?;
    radical_check_for(&d.as_univariate(p as usize)?, &theta)
}

/// [`theta_radical_check`] against an arbitrary stand-in for `psi_p`.
pub fn radical_check_for(psi: &UniPoly<MultiPoly>, theta: &Theta) -> Result<RadicalReport> {
    let p = theta.characteristic();
    let ring = theta.ring().clone();
    let expected = theta.degree();
    let mut h = to_rational(psi);
    let mut inseparable = 1usize;
    while h.degree().unwrap_or(0) > 0 && h.derivative().is_zero() {
        h = h.deflate(p as usize).ok_or(Error::ZeroDerivative)?;
        inseparable *= p as usize;
    }
    let g = h.gcd(&h.derivative());
    let radical = h.div_rem(&g)?.0.monic();
    let radical_degree = radical.degree().unwrap_or(0);
    if radical_degree != expected {
        return Err(Error::RadicalDegreeMismatch { expected, observed: radical_degree });
    }
    let theta_r = to_rational(&theta.as_univariate());
    let a = RationalFunction::from_poly(theta.leading().clone());
    let theta_matches = theta_r == radical.scale(&a);

    // coefficients of the radical, read in S, T, are those of its p-th root g
    let frob: Vec<MultiPoly> = (0..ring.nvars()).map(|i| ring.gen(i).pow(p as u64)).collect();
    let frob_r: Vec<RationalFunction> = frob.iter().cloned().map(RationalFunction::from_poly).collect();
    let twisted = radical.frobenius_coeff_power()?;
    let at_powers = radical
        .coeffs()
        .iter()
        .map(|c| c.compose(&ring, &frob_r))
        .collect::<Result<Vec<_>>>()?;
    let twist_matches = twisted == UniPoly::new(at_powers, radical.zero_coeff().clone());

    let big = theta.as_univariate();
    let lhs = psi.map_coeffs(ring.zero(), |c| c.compose(&ring, &frob).expect("same ring"));
    let power_matches = inseparable == p as usize && big.pow(p as u64) == lhs;

    if !(theta_matches && twist_matches && power_matches) {
        return Err(Error::TwistMismatch);
    }
    Ok(RadicalReport {
        p,
        expected_degree: expected,
        radical_degree,
        inseparable_degree: inseparable,
        theta_matches,
        twist_matches,
        power_matches,
    })
}

/// `mu = Disc(theta / a)` over `F_p(s, t)`, via a fraction-free resultant:
/// `mu = (-1)^{n(n-1)/2} Res(theta, theta') / a^{2n-1}`.
pub fn mu_discriminant(p: u32) -> Result<RationalFunction> {
    if p % 4 != 1 {
        return Err(Error::Precondition("p must be 1 mod 4"));
    }
    let theta = theta_extract(p)?;
    mu_from_theta(&theta)
}

pub fn mu_from_theta(theta: &Theta) -> Result<RationalFunction> {
    let th = theta.as_univariate();
    let n = th.degree().ok_or(Error::ZeroLeadingCoefficient)?;
    let res = th.resultant(&th.derivative())?;
    let signed = if (n * n.saturating_sub(1) / 2) % 2 == 1 { -res } else { res };
    let mu = RationalFunction::new(signed, theta.leading().pow(2 * n as u64 - 1))?;
    if mu.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    Ok(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    #[test]
    fn theta_shapes() {
        for p in [5u32, 7, 11, 13] {
            let th = theta_extract(p).unwrap();
            assert_eq!(th.as_univariate().degree(), Some(((p - 1) / 2) as usize), "p={p}");
            assert!(!th.leading().is_zero());
            assert!(th.is_p_power_shaped(), "p={p}");
        }
        let t5 = theta_extract(5).unwrap();
        assert_eq!(t5.indices(), alloc::vec![2, 7, 12]);
        let t13 = theta_extract(13).unwrap();
        assert_eq!(*t13.indices().last().unwrap(), 84);
        assert!(t13.a(84).is_some() && t13.a(83).is_none());
        assert_eq!(theta_extract(17).unwrap_err(), Error::BoundExceeded);
    }

    #[test]
    fn theta_reads_the_right_coefficients() {
        // independent read: coefficient of x^{p j} in psi_p is theta's X^j coefficient
        for p in [5u32, 7] {
            let d = division_polynomials(p, p as usize).unwrap();
            let psi = d.get(p as usize).unwrap();
            let th = theta_extract(p).unwrap().as_univariate();
            let st = st_ring(p).unwrap();
            let cs = psi.coeffs_in(2);
            for j in 0..=((p - 1) / 2) as usize {
                assert_eq!(cs[p as usize * j].embed(&st).unwrap(), th.coeff(j));
            }
        }
    }

    #[test]
    fn radical_check_passes() {
        for (p, deg) in [(5u32, 2usize), (7, 3)] {
            let rep = theta_radical_check(p).unwrap();
            assert_eq!(rep.radical_degree, deg);
            assert_eq!(rep.inseparable_degree, p as usize);
            assert!(rep.theta_matches && rep.twist_matches && rep.power_matches);
        }
        assert!(theta_radical_check(11).is_err());
    }

    #[test]
    fn radical_guard_with_psi3() {
        let d = division_polynomials(5, 5).unwrap();
        let theta = theta_from_set(&d).unwrap();
        let psi3 = d.as_univariate(3).unwrap();
        assert_eq!(
            radical_check_for(&psi3, &theta),
            Err(Error::RadicalDegreeMismatch { expected: 2, observed: 4 })
        );
    }

    #[test]
    fn mu_at_five_is_quadratic_discriminant() {
        let th = theta_extract(5).unwrap();
        let rf = |k| RationalFunction::from_poly(th.a(k).unwrap().clone());
        let (a2, a7, a12) = (rf(2), rf(7), rf(12));
        let b = a7.div(&a2).unwrap();
        let c = a12.div(&a2).unwrap();
        let expected = b.clone() * b - c.from_i64_like(4) * c;
        assert_eq!(mu_discriminant(5).unwrap(), expected);
        assert_eq!(mu_discriminant(7).unwrap_err(), Error::Precondition("p must be 1 mod 4"));
    }

    #[test]
    fn mu_at_thirteen_nonzero() {
        let mu = mu_discriminant(13).unwrap();
        assert!(!mu.is_zero());
    }
}
