use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::modular::is_prime;
use crate::poly::{MultiPoly, PolyRing, UniPoly};

/// Largest index accepted by [`division_polynomials`].
pub const DIVISION_BOUND: usize = 32;

/// `F_p[s, t]`.
pub fn st_ring(p: u32) -> Result<Arc<PolyRing>> {
    PolyRing::new(p, &["s", "t"])
}

/// `F_p[s, t, x]`, the home of the division polynomials.
pub fn stx_ring(p: u32) -> Result<Arc<PolyRing>> {
    PolyRing::new(p, &["s", "t", "x"])
}

pub(crate) const X: usize = 2;

/// `x^3 + s x + t`.
pub fn curve_rhs(ring: &Arc<PolyRing>) -> MultiPoly {
    let (s, t, x) = (ring.gen(0), ring.gen(1), ring.gen(X));
    &(&x.pow(3) + &(&s * &x)) + &t
}

/// Division polynomials of `y^2 = x^3 + s x + t` over `F_p[s, t]`.
///
/// Slot `m` holds `psi_m` for odd `m` and `psi_m / y` for even `m`, so
/// every entry lies in `F_p[s, t, x]`.
#[derive(Debug, Clone)]
pub struct DivisionPolySet {
    p: u32,
    ring: Arc<PolyRing>,
    psi: Vec<MultiPoly>,
}

impl DivisionPolySet {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn m_max(&self) -> usize {
        self.psi.len() - 1
    }

    pub fn get(&self, m: usize) -> Option<&MultiPoly> {
        self.psi.get(m)
    }

    /// True when the stored slot must be multiplied by `y`.
    pub fn times_y(m: usize) -> bool {
        m % 2 == 0
    }

    pub fn degree_x(&self, m: usize) -> Option<u32> {
        self.psi.get(m).map(|f| f.degree_in(X))
    }

    /// Slot `m` as a polynomial in `x` over `F_p[s, t]`.
    pub fn as_univariate(&self, m: usize) -> Result<UniPoly<MultiPoly>> {
        let f = self.psi.get(m).ok_or(Error::BoundExceeded)?;
        let st = st_ring(self.p)?;
        let coeffs = f.coeffs_in(X).iter().map(|c| c.embed(&st)).collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(coeffs, st.zero()))
    }
}

pub fn division_polynomials(p: u32, m_max: usize) -> Result<DivisionPolySet> {
    if p < 5 || !is_prime(p as u64) {
        return Err(Error::Precondition("p must be a prime >= 5"));
    }
    if m_max > DIVISION_BOUND {
        return Err(Error::BoundExceeded);
    }
    let ring = stx_ring(p)?;
    let (s, t, x) = (ring.gen(0), ring.gen(1), ring.gen(X));
    let c = |k: i64| ring.constant(k);
    let f2 = curve_rhs(&ring).pow(2);
    let psi3 = &(&(&(&c(3) * &x.pow(4)) + &(&c(6) * &(&s * &x.pow(2)))) + &(&c(12) * &(&t * &x))) - &s.pow(2);
    let psi4_inner = [
        x.pow(6),
        &c(5) * &(&s * &x.pow(4)),
        &c(20) * &(&t * &x.pow(3)),
        &c(-5) * &(&s.pow(2) * &x.pow(2)),
        &c(-4) * &(&(&s * &t) * &x),
        &c(-8) * &t.pow(2),
        -&s.pow(3),
    ]
    .into_iter()
    .fold(ring.zero(), |a, b| a + b);
    let mut psi = alloc::vec![ring.zero(), ring.one(), c(2), psi3, &c(4) * &psi4_inner];
    let half = ring.constant(((p as i64) + 1) / 2);
    for n in 5..=m_max {
        let m = n / 2;
        let next = if n % 2 == 1 {
            let a = &psi[m + 2] * &psi[m].pow(3);
            let b = &psi[m - 1] * &psi[m + 1].pow(3);
            if m % 2 == 0 {
                &(&a * &f2) - &b
            } else {
                &a - &(&b * &f2)
            }
        } else {
            let inner = &(&psi[m + 2] * &psi[m - 1].pow(2)) - &(&psi[m - 2] * &psi[m + 1].pow(2));
            &(&psi[m] * &inner) * &half
        };
        psi.push(next);
    }
    psi.truncate(m_max + 1);
    Ok(DivisionPolySet { p, ring, psi })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Full division polynomials with `y` kept as a variable, reduced by
    /// `y^2 = x^3 + s x + t` after each product.
    fn explicit_y(p: u32, m_max: usize) -> (Arc<PolyRing>, Vec<MultiPoly>) {
        let r = PolyRing::new(p, &["s", "t", "x", "y"]).unwrap();
        let (s, t, x, y) = (r.gen(0), r.gen(1), r.gen(2), r.gen(3));
        let rhs = &(&x.pow(3) + &(&s * &x)) + &t;
        let reduce = |g: MultiPoly| -> MultiPoly {
            let cs = g.coeffs_in(3);
            let mut acc = r.zero();
            for (k, ck) in cs.iter().enumerate() {
                acc = &acc + &(&(ck * &rhs.pow((k / 2) as u64)) * &y.pow((k % 2) as u64));
            }
            acc
        };
        let c = |k: i64| r.constant(k);
        let mut psi = alloc::vec![
            r.zero(),
            r.one(),
            &c(2) * &y,
            &(&(&(&c(3) * &x.pow(4)) + &(&c(6) * &(&s * &x.pow(2)))) + &(&c(12) * &(&t * &x))) - &s.pow(2),
        ];
        let psi4 = [
            x.pow(6),
            &c(5) * &(&s * &x.pow(4)),
            &c(20) * &(&t * &x.pow(3)),
            &c(-5) * &(&s.pow(2) * &x.pow(2)),
            &c(-4) * &(&(&s * &t) * &x),
            &c(-8) * &t.pow(2),
            -&s.pow(3),
        ]
        .into_iter()
        .fold(r.zero(), |a, b| a + b);
        psi.push(&(&c(4) * &y) * &psi4);
        for n in 5..=m_max {
            let m = n / 2;
            let next = if n % 2 == 1 {
                reduce(&(&psi[m + 2] * &psi[m].pow(3)) - &(&psi[m - 1] * &psi[m + 1].pow(3)))
            } else {
                let inner = reduce(&(&psi[m + 2] * &psi[m - 1].pow(2)) - &(&psi[m - 2] * &psi[m + 1].pow(2)));
                // num = A + y B, and num / y = B + y A / (x^3 + s x + t)
                let num = reduce(&psi[m] * &inner);
                let parts = num.coeffs_in(3);
                let a = parts[0].exact_divide(&rhs).unwrap();
                let b = parts.get(1).cloned().unwrap_or_else(|| r.zero());
                assert!(parts.len() <= 2);
                (&b + &(&y * &a)).exact_divide(&c(2)).unwrap()
            };
            psi.push(next);
        }
        (r, psi)
    }

    #[test]
    fn psi3_matches_printed_quartic() {
        let d = division_polynomials(5, 5).unwrap();
        let r = d.ring();
        let printed = r.from_terms([(&[0u32, 0, 4][..], 3), (&[1, 0, 2][..], 6), (&[0, 1, 1][..], 12), (&[2, 0, 0][..], -1)]);
        assert_eq!(d.get(3).unwrap(), &printed);
        // leading coefficient 5 vanishes: psi_5 = theta(x^5) has degree 10
        assert_eq!(d.degree_x(5), Some(10));
        assert_eq!(division_polynomials(7, 5).unwrap().degree_x(5), Some(12));
        assert_eq!(division_polynomials(5, 33).unwrap_err(), Error::BoundExceeded);
        assert!(division_polynomials(3, 4).is_err());
    }

    #[test]
    fn agrees_with_explicit_y_elimination() {
        for p in [5u32, 7, 13] {
            let d = division_polynomials(p, 13).unwrap();
            let (r, full) = explicit_y(p, 13);
            let y = r.gen(3);
            for m in 1..=13 {
                let stored = d.get(m).unwrap().embed(&r).unwrap();
                let expected = if DivisionPolySet::times_y(m) { &stored * &y } else { stored };
                assert_eq!(full[m], expected, "p={p} m={m}");
            }
        }
    }

    #[test]
    fn degrees_and_leading_coefficients() {
        let d = division_polynomials(13, 13).unwrap();
        for m in 1..=12usize {
            let want = if m % 2 == 1 { (m * m - 1) / 2 } else { (m * m - 4) / 2 };
            assert_eq!(d.degree_x(m), Some(want as u32), "m={m}");
        }
        // leading coefficient m vanishes mod p: degree drops at m = p
        assert!(d.degree_x(13).unwrap() < 84);
        let d7 = division_polynomials(7, 7).unwrap();
        assert!(d7.degree_x(7).unwrap() < 24);
    }

    #[test]
    fn elliptic_net_relation() {
        // psi_{m+2} psi_{m-2} = psi_{m+1} psi_{m-1} psi_2^2 - psi_3 psi_1 psi_m^2 on the curve
        let p = 11u32;
        let (_, full) = explicit_y(p, 12);
        let (s, t) = (3u64, 5u64);
        let mut checked = 0;
        for x in 0..p as u64 {
            let rhs = (x * x * x + s * x + t) % p as u64;
            let Some(y) = (1..p as u64).find(|v| v * v % p as u64 == rhs) else { continue };
            let at = |f: &MultiPoly| f.eval(&[s as u32, t as u32, x as u32, y as u32]) as i64;
            for m in 3..=10usize {
                let lhs = at(&full[m + 2]) * at(&full[m - 2]);
                let rhs = at(&full[m + 1]) * at(&full[m - 1]) * at(&full[2]).pow(2)
                    - at(&full[3]) * at(&full[1]) * at(&full[m]).pow(2);
                assert_eq!(lhs.rem_euclid(p as i64), rhs.rem_euclid(p as i64), "x={x} m={m}");
            }
            checked += 1;
        }
        assert!(checked > 0);
    }
}
