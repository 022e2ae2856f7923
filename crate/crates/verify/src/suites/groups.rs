//! Matrix-group suites.

use std::collections::BTreeSet;

use serde_json::json;
use torsion_core::groups::{
    abelianization_order, char_poly, check_pi_iso, conj_rep, enumerate_sl2, gamma_inverse, gamma_map,
    goursat_subgroup, invariant_planes as planes_of, kernel_divisibility_check, m1, m2, product_closure_report,
    product_set_report, sl2_order, subgroup_s, unipotent_generators, Mat2Mod, PlaneFl, ProductElem,
    DEFAULT_CLOSURE_BOUND, DEFAULT_SL2_BOUND,
};
use torsion_core::modular::{gcd, ResidueInt};

use super::{is_prime, CaseResult, Ctx, Outcome, Params, SuiteError, DEFAULT_ELLS, DEFAULT_N_MAX};

const B: usize = DEFAULT_CLOSURE_BOUND;

fn primes_upto(n: u64) -> Vec<u64> {
    (2..=n).filter(|&q| is_prime(q)).collect()
}

pub(super) fn group_orders(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    for n in params.moduli(DEFAULT_SL2_BOUND, DEFAULT_N_MAX)? {
        ctx.case(format!("N={n}"), json!({ "N": n }), |_| -> CaseResult {
            Ok(Outcome::equal(sl2_order(n), enumerate_sl2(n)?.order()))
        });
    }
    Ok(())
}

/// Coprime pairs with `N l <= 30`, narrowed by `--N` and `--ell`.
pub(super) fn s_subgroup(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    let ells = params.ells(&primes_upto(30), |l| l <= 30, "must be a prime <= 30")?;
    let ns = params.moduli(30, 30)?;
    for &l in &ells {
        for &n in ns.iter().filter(|&&n| n * l <= 30 && gcd(n, l) == 1) {
            ctx.case(format!("N={n},l={l}"), json!({ "N": n, "ell": l }), |_| -> CaseResult {
                let rep = check_pi_iso(n, l)?;
                let normal = subgroup_s(n * l, n)?.is_normalized_by(&unipotent_generators(n * l));
                let expected = format!("normal, reduction is a bijection of size {}", sl2_order(l));
                let observed = format!(
                    "{}, injective={}, surjective={}, |S|={}",
                    if normal { "normal" } else { "not normal" },
                    rep.injective,
                    rep.surjective,
                    rep.subgroup_order
                );
                let ok = normal && rep.is_isomorphism() && rep.bijection_size as u64 == sl2_order(l);
                Ok(Outcome::check(ok, expected, observed))
            });
        }
    }
    Ok(())
}

/// `l | N` with `N l <= 24`.
pub(super) fn gamma_iso(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    let ells = params.ells(&primes_upto(24), |l| l * l <= 30, "must be a prime with l^2 <= 30")?;
    let ns = params.moduli(30, 24)?;
    let limit = if params.n.is_some() { 30 } else { 24 };
    for &l in &ells {
        for &n in ns.iter().filter(|&&n| n % l == 0 && n * l <= limit) {
            ctx.case(format!("N={n},l={l}"), json!({ "N": n, "ell": l }), |_| gamma_case(n, l));
        }
    }
    Ok(())
}

fn gamma_case(n: u64, l: u64) -> CaseResult {
    let s = subgroup_s(n * l, n)?;
    let r = |v: u64| ResidueInt::from_u64(v, l);
    let vecs: Vec<[u64; 3]> = (0..l * l * l).map(|i| [i % l, i / l % l, i / (l * l)]).collect();
    let g = |v: &[u64; 3]| gamma_map(r(v[0]), r(v[1]), r(v[2]), n);
    let mut image = BTreeSet::new();
    let mut homomorphism = true;
    let mut inverse = true;
    for v in &vecs {
        let gv = g(v)?;
        inverse &= gamma_inverse(&gv, n, l)?.map(|x| x.value()) == *v;
        image.insert(gv);
        for w in &vecs {
            let sum = [0, 1, 2].map(|i| (v[i] + w[i]) % l);
            homomorphism &= gv.mul(&g(w)?) == g(&sum)?;
        }
    }
    let ok = homomorphism && inverse && image == s.elements && s.order() as u64 == l * l * l;
    let observed = format!(
        "|S|={}, homomorphism={homomorphism}, image=S:{}, inverse={inverse}",
        s.order(),
        image == s.elements
    );
    Ok(Outcome::check(ok, format!("|S|={}, homomorphism=true, image=S:true, inverse=true", l * l * l), observed))
}

fn commutator_index(l: u64) -> u64 {
    match l {
        2 => 2,
        3 => 3,
        _ => 1,
    }
}

pub(super) fn commutators(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    for l in params.ells(&DEFAULT_ELLS, |l| l <= 13, "must be a prime <= 13")? {
        ctx.case(format!("l={l}"), json!({ "ell": l }), |_| -> CaseResult {
            let g = enumerate_sl2(l)?;
            Ok(Outcome::equal(commutator_index(l), abelianization_order(&g.elements, B)?))
        });
    }
    Ok(())
}

fn planes_text(ps: &[PlaneFl]) -> String {
    let normals: Vec<String> = ps.iter().map(|p| format!("{:?}", p.normal())).collect();
    format!("{} [{}]", ps.len(), normals.join(" "))
}

pub(super) fn invariant_planes(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    for l in params.ells(&DEFAULT_ELLS, |l| l <= 13, "must be a prime <= 13")? {
        let p = json!({ "ell": l });
        ctx.case(format!("l={l}/f-matrices"), p.clone(), |_| -> CaseResult {
            let f1 = conj_rep(&Mat2Mod::lower_unipotent(l * l), l, l)?;
            let f2 = conj_rep(&Mat2Mod::upper_unipotent(l * l), l, l)?;
            let ok = f1 == m1(l) && f2 == m2(l);
            Ok(Outcome::check(ok, format!("f1={} f2={}", m1(l), m2(l)), format!("f1={f1} f2={f2}")))
        });
        ctx.case(format!("l={l}/char-poly"), p.clone(), |_| -> CaseResult {
            // (T - 1)^3 = T^3 - 3T^2 + 3T - 1, ascending
            let expected = [l - 1, 3 % l, (l - 3 % l) % l, 1];
            Ok(Outcome::equal(format!("{expected:?}"), format!("{:?}", char_poly(&m1(l)))))
        });
        ctx.case(format!("l={l}/common-planes"), p.clone(), |_| -> CaseResult {
            let common = planes_of(&[m1(l), m2(l)], l)?;
            Ok(Outcome::check(common.is_empty(), "0", planes_text(&common)))
        });
        ctx.case(format!("l={l}/m1-planes"), p, |_| -> CaseResult {
            let own = planes_of(&[m1(l)], l)?;
            let expected = if l == 2 { 2 } else { 1 };
            Ok(Outcome::check(own.len() == expected, expected, planes_text(&own)))
        });
    }
    Ok(())
}

pub(super) fn no_prime_index(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    let ells = params.ells(&DEFAULT_ELLS, |_| true, "must be prime")?;
    for n in params.moduli(DEFAULT_N_MAX, DEFAULT_N_MAX)? {
        let tested: Vec<u64> = ells.iter().copied().filter(|l| n % l != 0).collect();
        ctx.case(format!("N={n}"), json!({ "N": n, "ell": tested }), |_| -> CaseResult {
            let ab = abelianization_order(&enumerate_sl2(n)?.elements, B)? as u64;
            let dividing: Vec<u64> = tested.iter().copied().filter(|l| ab % l == 0).collect();
            Ok(Outcome::check(
                dividing.is_empty(),
                format!("no l in {tested:?} divides |G^ab|"),
                format!("|G^ab|={ab}, dividing={dividing:?}"),
            ))
        });
    }
    Ok(())
}

/// Reductions `SL_2(Z/NlZ) -> SL_2(Z/NZ)` with `N l <= 12`.
pub(super) fn kernel_divisibility(ctx: &mut Ctx, params: &Params) -> Result<(), SuiteError> {
    let ells = params.ells(&primes_upto(12), |l| l <= 12, "must be a prime <= 12")?;
    let ns = params.moduli(DEFAULT_N_MAX, DEFAULT_N_MAX)?;
    for &l in &ells {
        for &n in ns.iter().filter(|&&n| n * l <= DEFAULT_N_MAX) {
            ctx.case(format!("N={n},l={l}"), json!({ "N": n, "ell": l }), |_| -> CaseResult {
                let rep = kernel_divisibility_check(
                    &unipotent_generators(n * l),
                    &Mat2Mod::identity(n * l),
                    &unipotent_generators(n),
                    &Mat2Mod::identity(n),
                    |a: &Mat2Mod| a.reduce(n).expect("n divides nl"),
                    B,
                )?;
                Ok(Outcome::check(
                    rep.divides,
                    "|G^ab| divides |ker|*|H^ab|",
                    format!("|G^ab|={}, |ker|={}, |H^ab|={}", rep.g_ab, rep.kernel_order, rep.h_ab),
                ))
            });
        }
    }
    Ok(())
}

fn pe(u: i64, m: u64, a: [i64; 4], big_m: u64) -> torsion_core::Result<ProductElem> {
    ProductElem::new(ResidueInt::new(u, m), Mat2Mod::new(a[0], a[1], a[2], a[3], big_m))
}

/// The printed generators in `(Z/5Z)^x x SL_2(F_2)` next to a Goursat
/// subgroup that does have the intended shape.
pub(super) fn remark_product(ctx: &mut Ctx, _params: &Params) -> Result<(), SuiteError> {
    let p = json!({ "m": 5, "M": 2 });
    ctx.case("remark-generators", p.clone(), |_| -> CaseResult {
        let gens = [pe(2, 5, [0, 1, 1, 0], 2)?, pe(1, 5, [1, 1, 0, 1], 2)?];
        let query = pe(1, 5, [0, 1, 1, 0], 2)?;
        let rep = product_closure_report(5, 2, &gens, &[query], B)?;
        Ok(Outcome::report(
            "proper subgroup with both projections onto; (1, (0 1; 1 0)) not a member",
            format!(
                "order {} of {}; projections onto: {}, {}; member: {}",
                rep.order,
                rep.full_order,
                rep.unit_projection_surjective,
                rep.matrix_projection_surjective,
                rep.memberships[0].1
            ),
        ))
    });
    ctx.case("goursat-fiber-product", p, |_| -> CaseResult {
        let g = goursat_subgroup(5)?;
        let query = pe(1, 5, [0, 1, 1, 0], 2)?;
        let rep = product_set_report(5, 2, &g, &[query])?;
        let ok = rep.is_proper()
            && rep.unit_projection_surjective
            && rep.matrix_projection_surjective
            && !rep.memberships[0].1;
        Ok(Outcome::check(
            ok,
            "order 12 of 24; projections onto: true, true; member: false",
            format!(
                "order {} of {}; projections onto: {}, {}; member: {}",
                rep.order,
                rep.full_order,
                rep.unit_projection_surjective,
                rep.matrix_projection_surjective,
                rep.memberships[0].1
            ),
        ))
    });
    Ok(())
}
