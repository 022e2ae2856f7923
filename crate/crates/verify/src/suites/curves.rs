//! Division-polynomial, resolvent and supersingular suites.

use serde_json::json;
use torsion_core::elliptic::{
    curve_for_j, division_polynomials, expected_resolvent, mu_discriminant, stx_ring, supersingular_j_list,
    theta_extract, theta_radical_check, three_torsion_resolvent, THETA_MAX_P,
};
use torsion_core::poly::{MultiPoly, Ring};
use torsion_core::valuation::ik24_exploratory_report;

use super::{CaseResult, Ctx, Outcome, Params, SuiteError, DEFAULT_PRIMES};

fn small_p(p: u32) -> bool {
    (5..=THETA_MAX_P).contains(&p)
}

pub(super) fn division_theta(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    for p in params.primes(&DEFAULT_PRIMES, small_p, "must be a prime in 5..=13")? {
        let pp = json!({ "p": p });
        ctx.case(format!("p={p}/psi3"), pp.clone(), |_| -> CaseResult {
            let r = stx_ring(p)?;
            // 3x^4 + 6 s x^2 + 12 t x - s^2 over (s, t, x)
            let expected = r.from_terms([
                (&[0u32, 0, 4][..], 3),
                (&[1, 0, 2][..], 6),
                (&[0, 1, 1][..], 12),
                (&[2, 0, 0][..], -1),
            ]);
            let d = division_polynomials(p, 3)?;
            Ok(Outcome::equal(expected, d.get(3).expect("computed up to 3")))
        });
        ctx.case(format!("p={p}/theta-degree"), pp.clone(), |_| -> CaseResult {
            let th = theta_extract(p)?;
            let ok = th.is_p_power_shaped() && !th.leading().is_zero();
            Ok(Outcome::check(
                ok && th.degree() == (p as usize - 1) / 2,
                format!("degree {}, psi_p a polynomial in x^p", (p - 1) / 2),
                format!(
                    "degree {}, psi_p {}a polynomial in x^p",
                    th.degree(),
                    if th.is_p_power_shaped() { "" } else { "not " }
                ),
            ))
        });
        if p == 5 || p == 7 {
            ctx.case(format!("p={p}/radical"), pp.clone(), |_| -> CaseResult {
                let rep = theta_radical_check(p)?;
                let ok = rep.theta_matches && rep.twist_matches && rep.power_matches;
                Ok(Outcome::check(
                    ok && rep.radical_degree == (p as usize - 1) / 2,
                    format!("radical degree {}, theta = a * twist, psi_p = theta^p at s^p, t^p", (p - 1) / 2),
                    format!(
                        "radical degree {}, theta match {}, twist match {}, power match {}",
                        rep.radical_degree, rep.theta_matches, rep.twist_matches, rep.power_matches
                    ),
                ))
            });
        }
        if p % 4 == 1 {
            ctx.case(format!("p={p}/mu"), pp, |_| -> CaseResult {
                let mu = mu_discriminant(p)?;
                Ok(Outcome::check(
                    !mu.is_zero(),
                    "mu != 0",
                    format!("mu != 0 with {} numerator terms", mu.numerator().len()),
                ))
            });
        }
    }
    Ok(())
}

pub(super) fn three_torsion(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    for p in params.primes(&DEFAULT_PRIMES, |p| (5..=50).contains(&p), "must be a prime in 5..=50")? {
        let pp = json!({ "p": p });
        ctx.case(format!("p={p}/s-values"), pp.clone(), |_| -> CaseResult {
            let rep = three_torsion_resolvent(p)?;
            // elementary symmetric values of the roots of psi_3 / 3, read off psi_3
            let psi = division_polynomials(p, 3)?.as_univariate(3)?;
            let third = psi.leading_coefficient().constant_value().expect("leading coefficient 3");
            let inv3 = torsion_core::modular::inverse_mod(&torsion_core::modular::ResidueInt::from_u64(
                third as u64,
                p as u64,
            ))?
            .value() as u32;
            let e: Vec<MultiPoly> = (1..=4)
                .map(|i| {
                    let c = psi.coeff(4 - i).scale(inv3);
                    if i % 2 == 1 {
                        -c
                    } else {
                        c
                    }
                })
                .collect();
            let show = |v: &[MultiPoly]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
            Ok(Outcome::equal(show(&e), show(&rep.vieta)))
        });
        ctx.case(format!("p={p}/coefficients"), pp.clone(), |_| -> CaseResult {
            let rep = three_torsion_resolvent(p)?;
            let (expected, _) = expected_resolvent(p)?;
            Ok(Outcome::equal(
                format!("T2={}, T1={}, T0={}", expected[0], expected[1], expected[2]),
                format!("T2={}, T1={}, T0={}", rep.t2, rep.t1, rep.t0),
            ))
        });
        ctx.case(format!("p={p}/shift-identity"), pp.clone(), |_| -> CaseResult {
            let rep = three_torsion_resolvent(p)?;
            let (_, shifted) = expected_resolvent(p)?;
            Ok(Outcome::equal(shifted, rep.shifted))
        });
        ctx.case(format!("p={p}/symmetric-forms"), pp, |_| -> CaseResult {
            let rep = three_torsion_resolvent(p)?;
            let r = rep.symmetric_forms[0].ring().clone();
            let e = |i: usize| r.var(&format!("e{i}"));
            let (e1, e2, e3, e4) = (e(1)?, e(2)?, e(3)?, e(4)?);
            let four = r.constant(4);
            let expected = [
                e2.clone(),
                &(&e1 * &e3) - &(&four * &e4),
                &(&(&(&e1 * &e1) * &e4) + &(&e3 * &e3)) - &(&(&four * &e2) * &e4),
            ];
            let show = |v: &[MultiPoly]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("; ");
            Ok(Outcome::equal(show(&expected), show(&rep.symmetric_forms)))
        });
    }
    Ok(())
}

/// Coefficient of `x^{p-1}` in `(x^3 + a x + b)^{(p-1)/2}`; zero exactly for
/// supersingular curves.
fn hasse_invariant(a: u64, b: u64, p: u64) -> u64 {
    let cubic = [b, a, 0, 1];
    let mut acc = vec![1u64];
    for _ in 0..(p - 1) / 2 {
        let mut next = vec![0u64; acc.len() + 3];
        for (i, &x) in acc.iter().enumerate() {
            for (j, &y) in cubic.iter().enumerate() {
                next[i + j] = (next[i + j] + x * y) % p;
            }
        }
        acc = next;
    }
    acc.get(p as usize - 1).copied().unwrap_or(0)
}

pub(super) fn ss_j(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    for p in params.primes(&DEFAULT_PRIMES, |p| (5..=50).contains(&p), "must be a prime in 5..=50")? {
        let pp = json!({ "p": p });
        let q = p as u64;
        ctx.case(format!("p={p}/j-list"), pp.clone(), |_| -> CaseResult {
            let by_hasse: Vec<u64> = (0..q)
                .filter(|&j| {
                    let (a, b) = curve_for_j(j, q);
                    hasse_invariant(a, b, q) == 0
                })
                .collect();
            Ok(Outcome::equal(format!("{by_hasse:?}"), format!("{:?}", supersingular_j_list(q)?)))
        });
        ctx.case(format!("p={p}/count-bound"), pp, |_| -> CaseResult {
            let n = supersingular_j_list(q)?.len();
            Ok(Outcome::report(format!("{} to {}", q / 12, q / 12 + 2), n))
        });
    }
    Ok(())
}

pub(super) fn ik24(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    for p in params.primes(&[13], small_p, "must be a prime in 5..=13")? {
        let rep = match ik24_exploratory_report(p, None) {
            Ok(rep) => rep,
            Err(e) => {
                ctx.case(format!("p={p}"), json!({ "p": p }), |_| Err(e));
                continue;
            }
        };
        if let Some(reason) = rep.reason {
            ctx.case(format!("p={p}/no-prime"), json!({ "p": p }), |_| -> CaseResult {
                Ok(Outcome::report("a supersingular j outside {0, 1728}", reason))
            });
        }
        let prime = rep.prime.as_ref().map(|h| h.to_string()).unwrap_or_default();
        for row in &rep.rows {
            let pp = json!({ "p": p, "j0": rep.j0, "h": prime });
            ctx.case(format!("p={p}/{}", row.label), pp, |_| -> CaseResult {
                Ok(Outcome::report(&row.expected, row.observed))
            });
        }
    }
    Ok(())
}
