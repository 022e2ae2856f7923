//! Elementary symmetric polynomials and the fundamental theorem.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::multi::{MultiPoly, PolyRing};
use crate::error::{Error, Result};

/// `e_1, ..., e_n` in the variables of `ring`.
pub fn elementary_symmetric(ring: &Arc<PolyRing>) -> Vec<MultiPoly> {
    let n = ring.nvars();
    // coefficients of prod (1 + x_i T)
    let mut e = alloc::vec![ring.one()];
    for i in 0..n {
        let xi = ring.gen(i);
        let mut next = e.clone();
        next.push(ring.zero());
        for k in 1..=i + 1 {
            next[k] = &next[k] + &(&e[k - 1] * &xi);
        }
        e = next;
    }
    e.remove(0);
    e
}

/// Invariance under every transposition of variables.
pub fn is_symmetric(q: &MultiPoly) -> bool {
    let ring = q.ring();
    let n = ring.nvars();
    for i in 0..n {
        for j in i + 1..n {
            let mut vals: Vec<MultiPoly> = (0..n).map(|k| ring.gen(k)).collect();
            vals.swap(i, j);
            if q.compose(ring, &vals).as_ref() != Ok(q) {
                return false;
            }
        }
    }
    true
}

/// Ring `F_p[e1, ..., en]` receiving the output of [`symmetric_reduce`].
pub fn elementary_ring(p: u32, n: usize) -> Result<Arc<PolyRing>> {
    let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    PolyRing::new(p, &refs)
}

/// Writes a symmetric `q` as a polynomial in the elementary symmetric
/// functions of all variables of its ring, by repeatedly removing the
/// lexicographic leading term.
pub fn symmetric_reduce(q: &MultiPoly) -> Result<MultiPoly> {
    let ring = q.ring();
    let n = ring.nvars();
    let out_ring = elementary_ring(ring.characteristic(), n)?;
    let e = elementary_symmetric(ring);
    let mut powers: Vec<Vec<MultiPoly>> = e.iter().map(|ei| alloc::vec![ring.one(), ei.clone()]).collect();
    let mut rest = q.clone();
    let mut out_terms: Vec<(Vec<u32>, i64)> = Vec::new();
    while let Some((m, c)) = rest.leading_term() {
        let a: Vec<u32> = m.exponents(n);
        if a.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        // exponent of e_k is a_k - a_{k+1}
        let d: Vec<u32> = (0..n).map(|k| a[k] - a.get(k + 1).copied().unwrap_or(0)).collect();
        let mut term = ring.constant(c as i64);
        for (k, &dk) in d.iter().enumerate() {
            let dk = dk as usize;
            while powers[k].len() <= dk {
                let next = &powers[k][powers[k].len() - 1] * &e[k];
                powers[k].push(next);
            }
            if dk > 0 {
                term = &term * &powers[k][dk];
            }
        }
        let next = &rest - &term;
        if next.leading_term().is_some_and(|(nm, _)| nm >= m) {
            return Err(Error::NotSymmetric);
        }
        rest = next;
        out_terms.push((d, c as i64));
    }
    Ok(out_ring.from_terms(out_terms.iter().map(|(d, c)| (&d[..], *c))))
}
