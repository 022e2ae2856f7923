use alloc::vec::Vec;

use super::division::st_ring;
use crate::error::{Error, Result};
use crate::modular::is_prime;
use crate::poly::{symmetric_reduce, MultiPoly, PolyRing, UniPoly};

/// The cubic `f(T) = prod (T + y_i)` over the three pairings
/// `y = a1 a2 + a3 a4, a1 a3 + a2 a4, a1 a4 + a2 a3` of the roots of `psi_3`.
#[derive(Debug, Clone)]
pub struct ResolventReport {
    pub p: u32,
    /// Elementary symmetric values `e1..e4` of the roots of `psi_3`.
    pub vieta: [MultiPoly; 4],
    /// Coefficients as polynomials in `e1..e4`, `T^2` first.
    pub symmetric_forms: [MultiPoly; 3],
    pub t2: MultiPoly,
    pub t1: MultiPoly,
    pub t0: MultiPoly,
    pub cubic: UniPoly<MultiPoly>,
    /// `f(T - 2s/3)`.
    pub shifted: UniPoly<MultiPoly>,
}

/// `lambda = 4 s^3 + 27 t^2`.
pub fn lambda(ring: &alloc::sync::Arc<PolyRing>) -> MultiPoly {
    let (s, t) = (ring.gen(0), ring.gen(1));
    &(&ring.constant(4) * &s.pow(3)) + &(&ring.constant(27) * &t.pow(2))
}

fn inv(p: u32, a: i64) -> i64 {
    let a = a.rem_euclid(p as i64) as u64;
    let mut acc = 1u64;
    let (mut b, mut e) = (a, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    acc as i64
}

/// `n / d` as an element of `F_p`.
pub(crate) fn frac(p: u32, n: i64, d: i64) -> i64 {
    n.rem_euclid(p as i64) * inv(p, d) % p as i64
}

pub fn three_torsion_resolvent(p: u32) -> Result<ResolventReport> {
    if p < 5 || !is_prime(p as u64) {
        return Err(Error::Precondition("p must be a prime >= 5"));
    }
    let alpha = PolyRing::new(p, &["a1", "a2", "a3", "a4"])?;
    let a: Vec<MultiPoly> = (0..4).map(|i| alpha.gen(i)).collect();
    let y = [
        &(&a[0] * &a[1]) + &(&a[2] * &a[3]),
        &(&a[0] * &a[2]) + &(&a[1] * &a[3]),
        &(&a[0] * &a[3]) + &(&a[1] * &a[2]),
    ];
    let sym = [
        &(&y[0] + &y[1]) + &y[2],
        &(&(&y[0] * &y[1]) + &(&y[0] * &y[2])) + &(&y[1] * &y[2]),
        &(&y[0] * &y[1]) * &y[2],
    ];
    let forms = [symmetric_reduce(&sym[0])?, symmetric_reduce(&sym[1])?, symmetric_reduce(&sym[2])?];

    // psi_3 / 3 = x^4 + 2s x^2 + 4t x - s^2/3
    let st = st_ring(p)?;
    let (s, t) = (st.gen(0), st.gen(1));
    let vieta = [
        st.zero(),
        &st.constant(2) * &s,
        &st.constant(-4) * &t,
        &st.constant(frac(p, -1, 3)) * &s.pow(2),
    ];
    let t2 = forms[0].compose(&st, &vieta)?;
    let t1 = forms[1].compose(&st, &vieta)?;
    let t0 = forms[2].compose(&st, &vieta)?;
    let cubic = UniPoly::new(alloc::vec![t0.clone(), t1.clone(), t2.clone(), st.one()], st.zero());
    let shift = &st.constant(frac(p, -2, 3)) * &s;
    let shifted = cubic.shift(&shift);
    Ok(ResolventReport { p, vieta, symmetric_forms: forms, t2, t1, t0, cubic, shifted })
}

/// Coefficients claimed in closed form: `2s`, `4s^2/3`, `8s^3/3 + 16t^2`,
/// and the shifted cubic `T^3 + (16/27) lambda`.
pub fn expected_resolvent(p: u32) -> Result<([MultiPoly; 3], UniPoly<MultiPoly>)> {
    let st = st_ring(p)?;
    let (s, t) = (st.gen(0), st.gen(1));
    let t2 = &st.constant(2) * &s;
    let t1 = &st.constant(frac(p, 4, 3)) * &s.pow(2);
    let t0 = &(&st.constant(frac(p, 8, 3)) * &s.pow(3)) + &(&st.constant(16) * &t.pow(2));
    let c = &st.constant(frac(p, 16, 27)) * &lambda(&st);
    let shifted = UniPoly::new(alloc::vec![c, st.zero(), st.zero(), st.one()], st.zero());
    Ok(([t2, t1, t0], shifted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{FfElem, FiniteField};

    #[test]
    fn closed_forms_hold() {
        for p in [5u32, 7, 11, 13] {
            let rep = three_torsion_resolvent(p).unwrap();
            let ([t2, t1, t0], shifted) = expected_resolvent(p).unwrap();
            assert_eq!(rep.t2, t2, "p={p}");
            assert_eq!(rep.t1, t1, "p={p}");
            assert_eq!(rep.t0, t0, "p={p}");
            assert_eq!(rep.shifted, shifted, "p={p}");
        }
    }

    #[test]
    fn symmetric_forms() {
        let rep = three_torsion_resolvent(13).unwrap();
        // y1 + y2 + y3 = e2
        assert_eq!(alloc::format!("{}", rep.symmetric_forms[0]), "e2");
    }

    /// Roots of `psi_3` found in `F_p`, then `prod (T + y_i)` formed directly.
    #[test]
    fn split_instances_match_numerically() {
        for p in [13u32, 37, 61] {
            let f = FiniteField::prime(p).unwrap();
            let ([t2, t1, t0], _) = expected_resolvent(p).unwrap();
            let mut hits = 0;
            for s in 0..p {
                for t in 0..p {
                    let quartic = |x: u64| {
                        let (s, t, pp) = (s as u64, t as u64, p as u64);
                        (3 * x.pow(4) + 6 * s * x * x % pp + 12 * t * x + pp * pp - s * s) % pp
                    };
                    let roots: Vec<u64> = (0..p as u64).filter(|&x| quartic(x % p as u64) == 0).collect();
                    if roots.len() != 4 {
                        continue;
                    }
                    let r: Vec<FfElem> = roots.iter().map(|&v| FfElem::from_int(&f, v as i64)).collect();
                    let y = [
                        r[0].clone() * r[1].clone() + r[2].clone() * r[3].clone(),
                        r[0].clone() * r[2].clone() + r[1].clone() * r[3].clone(),
                        r[0].clone() * r[3].clone() + r[1].clone() * r[2].clone(),
                    ];
                    let e1 = y[0].clone() + y[1].clone() + y[2].clone();
                    let e2 = y[0].clone() * y[1].clone() + y[0].clone() * y[2].clone() + y[1].clone() * y[2].clone();
                    let e3 = y[0].clone() * y[1].clone() * y[2].clone();
                    let at = |g: &MultiPoly| FfElem::from_int(&f, g.eval(&[s, t]) as i64);
                    assert_eq!(at(&t2), e1, "p={p} s={s} t={t}");
                    assert_eq!(at(&t1), e2, "p={p} s={s} t={t}");
                    assert_eq!(at(&t0), e3, "p={p} s={s} t={t}");
                    hits += 1;
                }
            }
            assert!(hits > 0, "p={p}");
        }
    }
}
