//! Suite dispatch, parameter handling and the per-case harness.

mod curves;
mod fields;
mod groups;

use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use serde_json::{Map, Value};

use crate::report::{CaseRecord, CaseStatus, SuiteReport};

/// Every runnable suite, in listing order.
pub const SUITES: [&str; 18] = [
    "group-orders",
    "s-subgroup",
    "gamma-iso",
    "commutators",
    "invariant-planes",
    "sl2-no-prime-index",
    "kernel-divisibility",
    "remark-product",
    "kummer",
    "valuation-axioms",
    "disc-lemma",
    "disc-constant",
    "cardano",
    "cubic-valuation",
    "division-theta",
    "three-torsion",
    "ss-j",
    "ik24-exploratory",
];

pub const DEFAULT_CASES: usize = 100;
pub const MAX_CASES: usize = 10_000;
pub const DEFAULT_PRIMES: [u32; 4] = [5, 7, 11, 13];
pub const DEFAULT_ELLS: [u64; 4] = [2, 3, 5, 7];
pub const DEFAULT_N_MAX: u64 = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

/// Optional overrides; `None` selects the suite's default range.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Params {
    pub p: Option<u32>,
    pub n: Option<u64>,
    pub ell: Option<u64>,
    pub cases: Option<usize>,
}

fn bad(msg: impl Into<String>) -> SuiteError {
    SuiteError::BadParameters(msg.into())
}

fn is_prime(n: u64) -> bool {
    torsion_core::modular::is_prime(n)
}

impl Params {
    fn cases(&self) -> Result<usize, SuiteError> {
        match self.cases {
            None => Ok(DEFAULT_CASES),
            Some(c) if (1..=MAX_CASES).contains(&c) => Ok(c),
            Some(c) => Err(bad(format!("--cases must lie in 1..={MAX_CASES}, got {c}"))),
        }
    }

    /// `--p` if given and accepted by `ok`, otherwise `default`.
    fn primes(&self, default: &[u32], ok: impl Fn(u32) -> bool, rule: &str) -> Result<Vec<u32>, SuiteError> {
        match self.p {
            Some(p) if is_prime(p as u64) && ok(p) => Ok(vec![p]),
            Some(p) => Err(bad(format!("--p {p}: {rule}"))),
            None => Ok(default.to_vec()),
        }
    }

    fn ells(&self, default: &[u64], ok: impl Fn(u64) -> bool, rule: &str) -> Result<Vec<u64>, SuiteError> {
        match self.ell {
            Some(l) if is_prime(l) && ok(l) => Ok(vec![l]),
            Some(l) => Err(bad(format!("--ell {l}: {rule}"))),
            None => Ok(default.to_vec()),
        }
    }

    fn moduli(&self, max: u64, default_max: u64) -> Result<Vec<u64>, SuiteError> {
        match self.n {
            Some(n) if (1..=max).contains(&n) => Ok(vec![n]),
            Some(n) => Err(bad(format!("--N must lie in 1..={max}, got {n}"))),
            None => Ok((1..=default_max).collect()),
        }
    }
}

/// Expected and observed values of one finished case.
pub(crate) struct Outcome {
    status: CaseStatus,
    expected: String,
    observed: String,
}

impl Outcome {
    pub(crate) fn check(ok: bool, expected: impl ToString, observed: impl ToString) -> Self {
        let status = if ok { CaseStatus::Pass } else { CaseStatus::Fail };
        Outcome { status, expected: expected.to_string(), observed: observed.to_string() }
    }

    /// Passes when the two renderings agree.
    pub(crate) fn equal(expected: impl ToString, observed: impl ToString) -> Self {
        let (e, o) = (expected.to_string(), observed.to_string());
        Outcome::check(e == o, e, o)
    }

    pub(crate) fn report(expected: impl ToString, observed: impl ToString) -> Self {
        Outcome { status: CaseStatus::Report, expected: expected.to_string(), observed: observed.to_string() }
    }
}

pub(crate) type CaseResult = torsion_core::Result<Outcome>;

/// Collects cases for one suite run.
pub(crate) struct Ctx {
    seed: u64,
    report: SuiteReport,
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Stream for one case: a function of the master seed, suite and case id only.
pub fn case_rng(seed: u64, suite: &str, case_id: &str) -> ChaCha8Rng {
    let tag = fnv1a(format!("{suite}/{case_id}").as_bytes());
    ChaCha8Rng::seed_from_u64(seed.rotate_left(17) ^ tag)
}

impl Ctx {
    fn new(suite: &str, seed: u64) -> Self {
        Ctx { seed, report: SuiteReport::new(suite, seed) }
    }

    pub(crate) fn case(&mut self, id: impl Into<String>, params: Value, f: impl FnOnce(&mut ChaCha8Rng) -> CaseResult) {
        let case_id = id.into();
        let mut rng = case_rng(self.seed, &self.report.suite, &case_id);
        let start = Instant::now();
        let outcome = f(&mut rng);
        let elapsed_ms = start.elapsed().as_millis() as u64;
        let (status, expected, observed) = match outcome {
            Ok(o) => (o.status, o.expected, o.observed),
            Err(e) => (CaseStatus::Fail, String::from("no error"), format!("error: {e}")),
        };
        let params = match params {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        self.report.cases.push(CaseRecord { case_id, params, status, expected, observed, elapsed_ms });
    }
}

/// Runs one suite. Parameters a suite does not use are ignored.
pub fn run_suite(name: &str, params: &Params, seed: u64) -> Result<SuiteReport, SuiteError> {
    let Some(&suite) = SUITES.iter().find(|s| **s == name) else {
        return Err(SuiteError::UnknownSuite(name.to_string()));
    };
    let mut ctx = Ctx::new(suite, seed);
    match suite {
        "group-orders" => groups::group_orders(&mut ctx, params)?,
        "s-subgroup" => groups::s_subgroup(&mut ctx, params)?,
        "gamma-iso" => groups::gamma_iso(&mut ctx, params)?,
        "commutators" => groups::commutators(&mut ctx, params)?,
        "invariant-planes" => groups::invariant_planes(&mut ctx, params)?,
        "sl2-no-prime-index" => groups::no_prime_index(&mut ctx, params)?,
        "kernel-divisibility" => groups::kernel_divisibility(&mut ctx, params)?,
        "remark-product" => groups::remark_product(&mut ctx, params)?,
        "kummer" => fields::kummer(&mut ctx, params)?,
        "valuation-axioms" => fields::valuation_axioms(&mut ctx, params)?,
        "disc-lemma" => fields::disc_lemma(&mut ctx, params)?,
        "disc-constant" => fields::disc_constant(&mut ctx, params)?,
        "cardano" => fields::cardano(&mut ctx, params)?,
        "cubic-valuation" => fields::cubic_valuation(&mut ctx, params)?,
        "division-theta" => curves::division_theta(&mut ctx, params)?,
        "three-torsion" => curves::three_torsion(&mut ctx, params)?,
        "ss-j" => curves::ss_j(&mut ctx, params)?,
        "ik24-exploratory" => curves::ik24(&mut ctx, params)?,
        _ => unreachable!("listed in SUITES"),
    }
    Ok(ctx.report)
}

/// Every suite, one thread per suite, in listing order.
pub fn run_all(params: &Params, seed: u64) -> Result<Vec<SuiteReport>, SuiteError> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = SUITES
            .iter()
            .map(|name| scope.spawn(move || run_suite(name, params, seed)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_core::RngCore;

    #[test]
    fn unknown_suite() {
        assert_eq!(
            run_suite("unknown", &Params::default(), 0),
            Err(SuiteError::UnknownSuite("unknown".into()))
        );
    }

    #[test]
    fn three_torsion_at_seven() {
        let r = run_suite("three-torsion", &Params { p: Some(7), ..Params::default() }, 0).unwrap();
        assert_eq!(r.cases.len(), 4);
        assert!(r.cases.iter().all(|c| c.status == CaseStatus::Pass), "{r:?}");
        assert_eq!(r.cases[0].observed, "0, 2*s, 3*t, 2*s^2");
    }

    #[test]
    fn invariant_planes_at_three() {
        let r = run_suite("invariant-planes", &Params { ell: Some(3), ..Params::default() }, 0).unwrap();
        assert!(r.passed());
        let common = r.cases.iter().find(|c| c.case_id == "l=3/common-planes").unwrap();
        assert_eq!(common.observed, "0 []");
    }

    #[test]
    fn same_seed_same_cases() {
        let p = Params { cases: Some(10), ..Params::default() };
        for name in ["disc-lemma", "cubic-valuation", "valuation-axioms"] {
            let a = run_suite(name, &p, 5).unwrap().without_timing();
            assert_eq!(a, run_suite(name, &p, 5).unwrap().without_timing(), "{name}");
        }
    }

    #[test]
    fn case_streams_depend_on_seed_and_id() {
        let a = case_rng(1, "s", "x").next_u64();
        assert_eq!(a, case_rng(1, "s", "x").next_u64());
        assert_ne!(a, case_rng(2, "s", "x").next_u64());
        assert_ne!(a, case_rng(1, "s", "y").next_u64());
        assert_ne!(a, case_rng(1, "t", "x").next_u64());
    }

    #[test]
    fn parameter_validation() {
        let p = Params { cases: Some(0), ..Params::default() };
        assert!(matches!(run_suite("disc-lemma", &p, 0), Err(SuiteError::BadParameters(_))));
        let p = Params { p: Some(9), ..Params::default() };
        assert!(matches!(run_suite("three-torsion", &p, 0), Err(SuiteError::BadParameters(_))));
        let p = Params { n: Some(31), ..Params::default() };
        assert!(matches!(run_suite("group-orders", &p, 0), Err(SuiteError::BadParameters(_))));
        let p = Params { ell: Some(4), ..Params::default() };
        assert!(matches!(run_suite("commutators", &p, 0), Err(SuiteError::BadParameters(_))));
    }
}
