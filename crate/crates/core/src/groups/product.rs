//! Subgroups of `(Z/mZ)^x x SL_2(Z/MZ)` and their projections.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{enumerate_sl2, generate, GroupElem, Mat2Mod};
use crate::error::{Error, Result};
use crate::modular::{inverse_mod, unit_group, ResidueInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductElem {
    pub unit: ResidueInt,
    pub matrix: Mat2Mod,
}

impl ProductElem {
    pub fn new(unit: ResidueInt, matrix: Mat2Mod) -> Result<Self> {
        if !unit.is_unit() {
            return Err(Error::NotAUnit);
        }
        if !matrix.is_special() {
            return Err(Error::Precondition("matrix must have determinant 1"));
        }
        Ok(ProductElem { unit, matrix })
    }

    pub fn identity(m: u64, big_m: u64) -> Self {
        ProductElem { unit: ResidueInt::one(m), matrix: Mat2Mod::identity(big_m) }
    }
}

impl GroupElem for ProductElem {
    fn op(&self, other: &Self) -> Self {
        ProductElem {
            unit: self.unit.mul(&other.unit).expect("same modulus"),
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    fn inv(&self) -> Self {
        ProductElem {
            unit: inverse_mod(&self.unit).expect("unit"),
            matrix: self.matrix.inverse().expect("invertible"),
        }
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.unit.modulus(), self.matrix.modulus())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductReport {
    pub order: usize,
    pub full_order: usize,
    pub unit_projection_surjective: bool,
    pub matrix_projection_surjective: bool,
    pub memberships: Vec<(ProductElem, bool)>,
}

impl ProductReport {
    pub fn is_proper(&self) -> bool {
        self.order < self.full_order
    }
}

fn report_for(
    m: u64,
    big_m: u64,
    elements: &BTreeSet<ProductElem>,
    queries: &[ProductElem],
) -> Result<ProductReport> {
    let units: BTreeSet<ResidueInt> = unit_group(m).into_iter().collect();
    let sl2 = enumerate_sl2(big_m)?;
    let unit_image: BTreeSet<ResidueInt> = elements.iter().map(|e| e.unit).collect();
    let matrix_image: BTreeSet<Mat2Mod> = elements.iter().map(|e| e.matrix).collect();
    Ok(ProductReport {
        order: elements.len(),
        full_order: units.len() * sl2.order(),
        unit_projection_surjective: unit_image == units,
        matrix_projection_surjective: matrix_image == sl2.elements,
        memberships: queries.iter().map(|q| (*q, elements.contains(q))).collect(),
    })
}

/// Closes `generators` in `(Z/mZ)^x x SL_2(Z/MZ)` and reports the order,
/// both projections, and membership of each query.
pub fn product_closure_report(
    m: u64,
    big_m: u64,
    generators: &[ProductElem],
    queries: &[ProductElem],
    bound: usize,
) -> Result<ProductReport> {
    if generators.iter().chain(queries).any(|g| g.unit.modulus() != m || g.matrix.modulus() != big_m) {
        return Err(Error::ModulusMismatch);
    }
    let elements = generate(generators, &ProductElem::identity(m, big_m), bound)?;
    report_for(m, big_m, &elements, queries)
}

/// Report for an explicitly listed subgroup.
pub fn product_set_report(
    m: u64,
    big_m: u64,
    elements: &BTreeSet<ProductElem>,
    queries: &[ProductElem],
) -> Result<ProductReport> {
    report_for(m, big_m, elements, queries)
}

/// Sign of the permutation `A` induces on the three nonzero vectors of `F_2^2`.
fn is_even_on_f2_vectors(a: &Mat2Mod) -> bool {
    let vecs = [[1u64, 0], [0, 1], [1, 1]];
    let [p, q, r, s] = a.entries();
    let image = |v: [u64; 2]| [(p * v[0] + q * v[1]) % 2, (r * v[0] + s * v[1]) % 2];
    let perm: Vec<usize> = vecs
        .iter()
        .map(|v| vecs.iter().position(|w| *w == image(*v)).expect("permutes nonzero vectors"))
        .collect();
    let mut inversions = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// The fiber product `{(u, A) : u is a square mod m <=> A is even}` inside
/// `(Z/mZ)^x x SL_2(F_2)` for an odd prime `m`. Both projections are onto,
/// yet it has index 2.
pub fn goursat_subgroup(m: u64) -> Result<BTreeSet<ProductElem>> {
    if m < 3 || m % 2 == 0 || !crate::modular::is_prime(m) {
        return Err(Error::Precondition("m must be an odd prime"));
    }
    let squares: BTreeSet<ResidueInt> = unit_group(m).iter().map(|u| u.mul(u).expect("same")).collect();
    let sl2 = enumerate_sl2(2)?;
    let mut out = BTreeSet::new();
    for u in unit_group(m) {
        for a in &sl2.elements {
            if squares.contains(&u) == is_even_on_f2_vectors(a) {
                out.insert(ProductElem { unit: u, matrix: *a });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::DEFAULT_CLOSURE_BOUND;

    fn pe(u: i64, m: u64, a: [i64; 4], big_m: u64) -> ProductElem {
        ProductElem::new(ResidueInt::new(u, m), Mat2Mod::new(a[0], a[1], a[2], a[3], big_m)).unwrap()
    }

    #[test]
    fn remark_generators_close_to_full_product() {
        let gens = [pe(2, 5, [0, 1, 1, 0], 2), pe(1, 5, [1, 1, 0, 1], 2)];
        let query = pe(1, 5, [0, 1, 1, 0], 2);
        let rep = product_closure_report(5, 2, &gens, &[query], DEFAULT_CLOSURE_BOUND).unwrap();
        assert!(rep.unit_projection_surjective);
        assert!(rep.matrix_projection_surjective);
        assert_eq!(rep.full_order, 24);
        // brute-force closure: the conjugates of (1, (1 1; 0 1)) fill {1} x SL_2(F_2)
        assert_eq!(rep.order, 24);
        assert_eq!(rep.memberships, alloc::vec![(query, true)]);
    }

    #[test]
    fn empty_generators() {
        let rep = product_closure_report(5, 2, &[], &[], DEFAULT_CLOSURE_BOUND).unwrap();
        assert_eq!(rep.order, 1);
        assert!(!rep.unit_projection_surjective);
        assert!(!rep.matrix_projection_surjective);
    }

    #[test]
    fn goursat_example() {
        let g = goursat_subgroup(5).unwrap();
        assert_eq!(g.len(), 12);
        // closed under the group law
        for a in &g {
            assert!(g.contains(&a.inv()));
            for b in &g {
                assert!(g.contains(&a.op(b)));
            }
        }
        let query = pe(1, 5, [0, 1, 1, 0], 2);
        let rep = product_set_report(5, 2, &g, &[query]).unwrap();
        assert!(rep.unit_projection_surjective && rep.matrix_projection_surjective);
        assert!(rep.is_proper());
        assert_eq!(rep.memberships, alloc::vec![(query, false)]);
    }

    #[test]
    fn rejects_non_units() {
        assert_eq!(
            ProductElem::new(ResidueInt::new(5, 10), Mat2Mod::identity(2)),
            Err(Error::NotAUnit)
        );
    }
}
