//! Commutator subgroups, abelianizations and the kernel divisibility check.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{generate, GroupElem};
use crate::error::{Error, Result};

/// The subgroup generated by all commutators `g h g^{-1} h^{-1}`.
pub fn commutator_subgroup<E: GroupElem>(
    elements: &BTreeSet<E>,
    bound: usize,
) -> Result<BTreeSet<E>> {
    let identity = elements.iter().next().ok_or(Error::EmptyInput)?.identity_like();
    let elems: Vec<&E> = elements.iter().collect();
    let inverses: Vec<E> = elems.iter().map(|g| g.inv()).collect();
    let mut commutators = BTreeSet::new();
    for (i, g) in elems.iter().enumerate() {
        for (j, h) in elems.iter().enumerate() {
            let c = g.op(h).op(&inverses[i]).op(&inverses[j]);
            commutators.insert(c);
        }
    }
    commutators.remove(&identity);
    let gens: Vec<E> = commutators.into_iter().collect();
    generate(&gens, &identity, bound)
}

/// `|G / [G, G]|`.
pub fn abelianization_order<E: GroupElem>(elements: &BTreeSet<E>, bound: usize) -> Result<usize> {
    let derived = commutator_subgroup(elements, bound)?;
    Ok(elements.len() / derived.len())
}

/// Whether `G` has a normal subgroup of index `l`, decided through `G^ab`:
/// a prime-index normal subgroup has abelian quotient, so it exists exactly
/// when `l` divides `|G^ab|`.
pub fn prime_index_normal_exists<E: GroupElem>(
    elements: &BTreeSet<E>,
    l: u64,
    bound: usize,
) -> Result<bool> {
    Ok(abelianization_order(elements, bound)? as u64 % l == 0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub g_order: usize,
    pub h_order: usize,
    pub g_ab: usize,
    pub kernel_order: usize,
    pub h_ab: usize,
    pub divides: bool,
}

/// Checks `|G^ab|` divides `|ker phi| * |H^ab|` for a surjection `phi: G -> H`.
///
/// `phi` is verified to be a homomorphism on `G x generators(G)` (which
/// suffices on the generated group) and to hit every element of `H`.
pub fn kernel_divisibility_check<G, H, F>(
    g_gens: &[G],
    g_identity: &G,
    h_gens: &[H],
    h_identity: &H,
    phi: F,
    bound: usize,
) -> Result<KernelReport>
where
    G: GroupElem,
    H: GroupElem,
    F: Fn(&G) -> H,
{
    let g = generate(g_gens, g_identity, bound)?;
    let h = generate(h_gens, h_identity, bound)?;
    for x in &g {
        let px = phi(x);
        for s in g_gens {
            if phi(&x.op(s)) != px.op(&phi(s)) {
                return Err(Error::NotAHomomorphism);
            }
        }
    }
    let image: BTreeSet<H> = g.iter().map(&phi).collect();
    if image != h {
        return Err(Error::NotSurjective);
    }
    let kernel_order = g.iter().filter(|x| phi(x) == *h_identity).count();
    let g_ab = abelianization_order(&g, bound)?;
    let h_ab = abelianization_order(&h, bound)?;
    Ok(KernelReport {
        g_order: g.len(),
        h_order: h.len(),
        g_ab,
        kernel_order,
        h_ab,
        divides: (kernel_order * h_ab) % g_ab == 0,
    })
}
