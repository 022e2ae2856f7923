//! Finite-field, valuation and Cardano suites.

use std::sync::Arc;

use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;
use serde_json::json;
use torsion_core::cardano::{
    cardano_beta_finite, cubic_valuation_check, depress, random_cyclic_cubic, random_valuation_instance,
    root_identity_check,
};
use torsion_core::elliptic::{lambda, supersingular_j_list};
use torsion_core::poly::{find_special_constants, FfElem, Field, FiniteField, MultiPoly, PolyRing, RationalFunction, Ring, UniPoly};
use torsion_core::valuation::{
    disc_lemma_check, kummer_pair_check, random_disc_instance, random_with_valuation, ss_prime_poly, u_power, u_ring,
    ValuationSpec, ValueExt,
};

use super::{CaseResult, Ctx, Outcome, Params, SuiteError, DEFAULT_PRIMES};

pub(super) fn kummer(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    let ps = params.primes(&[13], |p| p >= 5, "must be a prime >= 5")?;
    for p in ps {
        let valid = |l: u64| l == 2 || (l == 3 && (p as u64 - 1) % 3 == 0);
        let ells: Vec<u64> = params
            .ells(&[2, 3], valid, "needs l = 2, or l = 3 with p = 1 mod 3")?
            .into_iter()
            .filter(|&l| valid(l))
            .collect();
        for l in ells {
            ctx.case(format!("p={p},l={l}"), json!({ "p": p, "ell": l }), |_| -> CaseResult {
                let rep = kummer_pair_check(&FiniteField::prime(p)?, l)?;
                let same = rep.both_powers + rep.both_non_powers;
                Ok(Outcome::check(
                    rep.holds(),
                    format!("{same} of {same} same-extension pairs related"),
                    format!("{} of {same} related, {} mixed pairs skipped", rep.passed, rep.mixed),
                ))
            });
        }
    }
    Ok(())
}

fn draw(rng: &mut ChaCha8Rng, n: u64) -> u64 {
    rng.next_u64() % n
}

/// Nonzero polynomial in `s, t` of total degree at most 2.
fn random_st_poly(ring: &Arc<PolyRing>, rng: &mut ChaCha8Rng) -> MultiPoly {
    let p = ring.characteristic() as u64;
    loop {
        let mut f = ring.zero();
        for (i, j) in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)] {
            let c = draw(rng, p) as i64;
            f = &f + &(&ring.constant(c) * &(&ring.gen(0).pow(i) * &ring.gen(1).pow(j)));
        }
        if !f.is_zero() {
            return f;
        }
    }
}

/// `h^k a / b` with `k` in `-2..=2`, or zero one time in ten.
fn random_h_element(h: &MultiPoly, rng: &mut ChaCha8Rng) -> torsion_core::Result<RationalFunction> {
    let ring = h.ring().clone();
    if draw(rng, 10) == 0 {
        return Ok(RationalFunction::from_poly(ring.zero()));
    }
    let k = draw(rng, 5) as i64 - 2;
    let (a, b) = (random_st_poly(&ring, rng), random_st_poly(&ring, rng));
    if k >= 0 {
        RationalFunction::new(&a * &h.pow(k as u64), b)
    } else {
        RationalFunction::new(a, &b * &h.pow((-k) as u64))
    }
}

fn random_u_element(ring: &Arc<PolyRing>, rng: &mut ChaCha8Rng) -> RationalFunction {
    if draw(rng, 10) == 0 {
        return RationalFunction::from_poly(ring.zero());
    }
    random_with_valuation(ring, draw(rng, 9) as i64 - 4, rng)
}

/// First failing axiom for the pair, if any.
fn axiom_failure(v: &ValuationSpec, f: &RationalFunction, g: &RationalFunction) -> torsion_core::Result<Option<String>> {
    let (vf, vg) = (v.valuate(f)?, v.valuate(g)?);
    let vprod = v.valuate(&(f.clone() * g.clone()))?;
    if vprod != vf + vg {
        return Ok(Some(format!("v(fg)={vprod} but v(f)+v(g)={}", vf + vg)));
    }
    let vsum = v.valuate(&(f.clone() + g.clone()))?;
    if vsum < vf.min(vg) || (vf != vg && vsum != vf.min(vg)) {
        return Ok(Some(format!("v(f+g)={vsum} with v(f)={vf}, v(g)={vg}")));
    }
    if v.valuate(&-f.clone())? != vf {
        return Ok(Some(String::from("v(-f) != v(f)")));
    }
    Ok(None)
}

fn axiom_case(
    v: &ValuationSpec,
    pairs: usize,
    rng: &mut ChaCha8Rng,
    mut sample: impl FnMut(&mut ChaCha8Rng) -> torsion_core::Result<RationalFunction>,
) -> CaseResult {
    let zero = RationalFunction::from_poly(v.ring().zero());
    let constants_ok = v.valuate(&zero)? == ValueExt::Infinite
        && v.valuate(&zero.from_i64_like(2))? == ValueExt::Finite(0);
    let mut good = 0;
    let mut first = None;
    for _ in 0..pairs {
        let (f, g) = (sample(rng)?, sample(rng)?);
        match axiom_failure(v, &f, &g)? {
            None => good += 1,
            Some(msg) => {
                first.get_or_insert(msg);
            }
        }
    }
    let mut observed = format!("{good}/{pairs} pairs, v(0)=inf and v(2)=0: {constants_ok}");
    if let Some(msg) = first {
        observed.push_str(&format!("; first failure: {msg}"));
    }
    Ok(Outcome::check(
        constants_ok && good == pairs,
        format!("{pairs}/{pairs} pairs, v(0)=inf and v(2)=0: true"),
        observed,
    ))
}

/// The supersingular prime of `F_p[s, t]` when one exists away from
/// `j = 0, 1728`, else the linear prime `t - s^2 - 1`.
fn h_prime(p: u32) -> torsion_core::Result<(MultiPoly, Option<u64>)> {
    let js = supersingular_j_list(p as u64)?;
    if let Some(&j) = js.iter().find(|&&j| j != 0 && j != 1728 % p as u64) {
        return Ok((ss_prime_poly(p, j)?, Some(j)));
    }
    let r = PolyRing::new(p, &["s", "t"])?;
    Ok((&(&r.gen(1) - &r.gen(0).pow(2)) - &r.one(), None))
}

pub(super) fn valuation_axioms(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    let pairs = params.cases()?;
    for p in params.primes(&DEFAULT_PRIMES, |p| (5..=50).contains(&p), "must be a prime in 5..=50")? {
        ctx.case(format!("p={p}/u-adic"), json!({ "p": p, "pairs": pairs }), |rng| -> CaseResult {
            let ring = u_ring(p)?;
            let v = ValuationSpec::pi_adic(ring.gen(0))?;
            axiom_case(&v, pairs, rng, |r| Ok(random_u_element(&ring, r)))
        });
        ctx.case(format!("p={p}/h-adic"), json!({ "p": p, "pairs": pairs }), |rng| -> CaseResult {
            let (h, _) = h_prime(p)?;
            let v = ValuationSpec::h_adic(h.clone())?;
            axiom_case(&v, pairs, rng, |r| random_h_element(&h, r))
        });
        if let Ok((h, Some(j))) = h_prime(p) {
            ctx.case(format!("p={p}/lambda-unit"), json!({ "p": p, "j": j }), |_| -> CaseResult {
                let v = ValuationSpec::h_adic(h.clone())?;
                let lam = RationalFunction::from_poly(lambda(h.ring()));
                Ok(Outcome::equal("0", v.valuate(&lam)?))
            });
        }
    }
    Ok(())
}

pub(super) fn disc_lemma(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    let count = params.cases()?;
    for p in params.primes(&[5, 13], |p| (5..=50).contains(&p), "must be a prime in 5..=50")? {
        let degrees: Vec<usize> = (2..=5).filter(|n| n % p as usize != 0).collect();
        for i in 0..count {
            ctx.case(format!("p={p}/#{i}"), json!({ "p": p }), |rng| -> CaseResult {
                let ring = u_ring(p)?;
                let v = ValuationSpec::pi_adic(ring.gen(0))?;
                let n = degrees[draw(rng, degrees.len() as u64) as usize];
                let f = random_disc_instance(&ring, n, rng);
                let rep = disc_lemma_check(&f, &v)?;
                Ok(Outcome::check(
                    rep.hypotheses_hold && rep.conclusion_holds,
                    format!("n={n}, hypotheses hold, v(Disc)={}", rep.expected),
                    format!(
                        "n={n}, hypotheses {}, v(Disc)={}",
                        if rep.hypotheses_hold { "hold" } else { "fail" },
                        rep.disc_valuation
                    ),
                ))
            });
        }
    }
    Ok(())
}

/// `(-1)^{n(n-1)/2} n^n mod p` by integer arithmetic.
fn disc_constant_mod(n: u64, p: u64) -> u64 {
    let pow = (0..n).fold(1u64, |acc, _| acc * (n % p) % p);
    if (n * (n - 1) / 2) % 2 == 1 {
        (p - pow) % p
    } else {
        pow
    }
}

pub(super) fn disc_constant(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    for p in params.primes(&DEFAULT_PRIMES, |p| p >= 3, "must be an odd prime")? {
        for n in (2..=8u64).filter(|n| n % p as u64 != 0) {
            ctx.case(format!("p={p},n={n}"), json!({ "p": p, "n": n }), |_| -> CaseResult {
                let field = FiniteField::prime(p)?;
                let zero = FfElem::from_int(&field, 0);
                let mut coeffs = vec![zero.clone(); n as usize + 1];
                coeffs[0] = zero.one_like();
                coeffs[n as usize] = zero.one_like();
                let disc = UniPoly::new(coeffs, zero).discriminant()?;
                Ok(Outcome::equal(disc_constant_mod(n, p as u64), disc))
            });
        }
    }
    Ok(())
}

pub(super) fn cardano(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    let count = params.cases()?;
    let ps = params.primes(&[13, 37], |p| p % 12 == 1, "must be a prime = 1 mod 12")?;
    ctx.case("example/x^3-2", json!({ "p": 13 }), |_| -> CaseResult {
        let f = FiniteField::prime(13)?;
        let k = |v| FfElem::from_int(&f, v);
        let dc = depress(k(0), k(0), k(-2))?;
        let data = cardano_beta_finite(&dc)?;
        Ok(Outcome::equal(
            "R=2, beta+=0, beta-=2",
            format!("R={}, beta+={}, beta-={}", data.r, data.beta_plus, data.beta_minus),
        ))
    });
    for p in ps {
        let mut plus_sign = 0usize;
        for i in 0..count {
            ctx.case(format!("p={p}/#{i}"), json!({ "p": p }), |rng| -> CaseResult {
                let field = FiniteField::prime(p)?;
                let omega = find_special_constants(&field)
                    .omega
                    .ok_or(torsion_core::Error::Precondition("no cube root of unity"))?;
                let (dc, data) = random_cyclic_cubic(&field, rng);
                let mut roots_ok = true;
                let mut all_plus = true;
                for beta in [&data.beta_plus, &data.beta_minus] {
                    if !beta.is_zero() {
                        let rc = root_identity_check(&dc, beta, &omega)?;
                        roots_ok &= rc.holds();
                        all_plus &= rc.plus_shift.iter().all(|&b| b);
                    }
                }
                plus_sign += all_plus as usize;
                let inv = data.invariants_hold(&dc);
                Ok(Outcome::check(
                    inv && roots_ok,
                    "beta identities hold, roots with -c1/3 annihilate f",
                    format!(
                        "c=({}, {}, {}), beta identities {}, roots {}",
                        dc.c1,
                        dc.c2,
                        dc.c3,
                        if inv { "hold" } else { "fail" },
                        if roots_ok { "annihilate f" } else { "do not annihilate f" }
                    ),
                ))
            });
        }
        ctx.case(format!("p={p}/printed-sign"), json!({ "p": p }), |_| -> CaseResult {
            Ok(Outcome::report(
                "roots with +c1/3 annihilate f",
                format!("{plus_sign} of {count} cubics"),
            ))
        });
    }
    Ok(())
}

pub(super) fn cubic_valuation(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    let count = params.cases()?;
    let ok = |p: u32| p % 12 == 1 || p % 12 == 11;
    for p in params.primes(&[13], ok, "needs sqrt 3 in F_p (p = +-1 mod 12)")? {
        let sqrt3 = find_special_constants(&FiniteField::prime(p).map_err(|e| super::bad(e.to_string()))?)
            .sqrt3
            .and_then(|r| r.as_prime())
            .ok_or_else(|| super::bad(format!("no sqrt 3 in F_{p}")))?;
        let setup = move || -> torsion_core::Result<_> {
            let ring = u_ring(p)?;
            let v = ValuationSpec::pi_adic(ring.gen(0))?;
            let s3 = RationalFunction::from_poly(ring.constant(sqrt3 as i64));
            Ok((ring, v, s3))
        };
        ctx.case(format!("p={p}/example/c3=u^-1"), json!({ "p": p }), |_| -> CaseResult {
            let (ring, v, s3) = setup()?;
            let zero = RationalFunction::from_poly(ring.zero());
            let dc = depress(zero.clone(), zero.clone(), u_power(&ring, -1))?;
            let r = zero.from_i64_like(3) * s3.clone() * u_power(&ring, -1);
            let rep = cubic_valuation_check(&dc, &v, &s3, &r)?;
            Ok(Outcome::check(
                rep.holds && rep.v_b == ValueExt::Finite(-1),
                "hypotheses hold, v(B)=-1, some v(beta)=-1",
                format!(
                    "hypotheses {}, v(B)={}, v(beta+)={}, v(beta-)={}",
                    rep.hypotheses_hold, rep.v_b, rep.v_beta_plus, rep.v_beta_minus
                ),
            ))
        });
        ctx.case(format!("p={p}/example/c3=u^3"), json!({ "p": p }), |_| -> CaseResult {
            let (ring, v, s3) = setup()?;
            let zero = RationalFunction::from_poly(ring.zero());
            let dc = depress(zero.clone(), zero.clone(), u_power(&ring, 3))?;
            let r = zero.from_i64_like(3) * s3.clone() * u_power(&ring, 3);
            let rep = cubic_valuation_check(&dc, &v, &s3, &r)?;
            Ok(Outcome::report(
                "computed values",
                format!(
                    "hypotheses {}, v(c3)={}, v(R)={}, v(beta+)={}, v(beta-)={}",
                    rep.hypotheses_hold, rep.v_c3, rep.v_r, rep.v_beta_plus, rep.v_beta_minus
                ),
            ))
        });
        ctx.case(format!("p={p}/example/v(c1)-too-small"), json!({ "p": p }), |_| -> CaseResult {
            let (ring, v, s3) = setup()?;
            let zero = RationalFunction::from_poly(ring.zero());
            let n = |k| zero.from_i64_like(k);
            // c1 = 1, c2 = 1/3 gives A = 0 and v(c1) = 0 = v(c3)/3
            let c3 = (zero.one_like() - n(27) * u_power(&ring, 3)) * n(27).inv().expect("p > 3");
            let dc = depress(zero.one_like(), n(3).inv().expect("p > 3"), c3)?;
            let r = n(3) * s3.clone() * u_power(&ring, 3);
            let rep = cubic_valuation_check(&dc, &v, &s3, &r)?;
            Ok(Outcome::check(
                !rep.hypotheses_hold && !rep.holds,
                "hypotheses violated",
                if rep.hypotheses_hold { "hypotheses hold" } else { "hypotheses violated" },
            ))
        });
        for i in 0..count {
            ctx.case(format!("p={p}/#{i}"), json!({ "p": p }), |rng| -> CaseResult {
                let (ring, v, s3) = setup()?;
                let (dc, r) = random_valuation_instance(&ring, &s3, rng)?;
                let rep = cubic_valuation_check(&dc, &v, &s3, &r)?;
                Ok(Outcome::check(
                    rep.holds,
                    format!("v(R)=v(B)=v(c3)={}, some v(beta)={}", rep.v_c3, rep.v_c3),
                    format!(
                        "hypotheses {}, v(R)={}, v(B)={}, v(beta+)={}, v(beta-)={}",
                        rep.hypotheses_hold, rep.v_r, rep.v_b, rep.v_beta_plus, rep.v_beta_minus
                    ),
                ))
            });
        }
    }
    Ok(())
}
