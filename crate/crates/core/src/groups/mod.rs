//! Finite matrix groups over `Z/MZ` stored as explicit element sets.

mod abelian;
mod conj;
mod congruence;
mod mat2;
mod product;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub use abelian::{
    abelianization_order, commutator_subgroup, kernel_divisibility_check,
    prime_index_normal_exists, KernelReport,
};
pub use conj::{
    char_poly, conj_rep, invariant_planes, m1, m2, minimal_poly_degree, Mat3Mod, PlaneFl,
};
pub use congruence::{check_pi_iso, gamma_inverse, gamma_map, subgroup_s, PiIsoReport};
pub use mat2::Mat2Mod;
pub use product::{
    goursat_subgroup, product_closure_report, product_set_report, ProductElem, ProductReport,
};

/// Default upper bound on the size of any generated subgroup.
pub const DEFAULT_CLOSURE_BOUND: usize = 1_000_000;
/// Default upper bound on `M` for exhaustive `SL_2(Z/MZ)` scans.
pub const DEFAULT_SL2_BOUND: u64 = 30;

/// Group law used by the generic closure and commutator routines.
pub trait GroupElem: Clone + Ord {
    fn op(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
    fn identity_like(&self) -> Self;
}

impl GroupElem for Mat2Mod {
    fn op(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inv(&self) -> Self {
        self.inverse().expect("group elements are invertible")
    }

    fn identity_like(&self) -> Self {
        Mat2Mod::identity(self.modulus())
    }
}

/// Smallest multiplication-closed set containing `generators` and `identity`.
///
/// In a finite group this is the generated subgroup: inverses appear as
/// positive powers.
pub fn closure_subgroup<E, F>(
    generators: &[E],
    identity: E,
    multiply: F,
    bound: usize,
) -> Result<BTreeSet<E>>
where
    E: Clone + Ord,
    F: Fn(&E, &E) -> E,
{
    let mut gens: Vec<E> = generators.to_vec();
    gens.sort();
    gens.dedup();
    let mut seen = BTreeSet::new();
    seen.insert(identity.clone());
    let mut frontier = alloc::vec![identity];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = multiply(&x, g);
            if !seen.contains(&y) {
                if seen.len() >= bound {
                    return Err(Error::ClosureBoundExceeded(bound));
                }
                seen.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    Ok(seen)
}

/// Closure for types carrying their own group law.
pub fn generate<E: GroupElem>(generators: &[E], identity: &E, bound: usize) -> Result<BTreeSet<E>> {
    closure_subgroup(generators, identity.clone(), |a, b| a.op(b), bound)
}

/// A finite subgroup of `GL_2(Z/MZ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatGroup {
    pub modulus: u64,
    pub elements: BTreeSet<Mat2Mod>,
    /// Empty when the group was built by a membership predicate.
    pub generators: Vec<Mat2Mod>,
}

impl MatGroup {
    pub fn from_generators(modulus: u64, generators: Vec<Mat2Mod>, bound: usize) -> Result<Self> {
        if generators.iter().any(|g| g.modulus() != modulus) {
            return Err(Error::ModulusMismatch);
        }
        let elements = generate(&generators, &Mat2Mod::identity(modulus), bound)?;
        Ok(MatGroup { modulus, elements, generators })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: &Mat2Mod) -> bool {
        self.elements.contains(a)
    }

    pub fn is_special_linear(&self) -> bool {
        self.elements.iter().all(Mat2Mod::is_special)
    }

    /// Checks closure under products and inverses and presence of `I_2`.
    pub fn is_subgroup(&self) -> bool {
        if !self.contains(&Mat2Mod::identity(self.modulus)) {
            return false;
        }
        self.elements.iter().all(|a| match a.inverse() {
            Ok(inv) => {
                self.contains(&inv) && self.elements.iter().all(|b| self.contains(&a.mul(b)))
            }
            Err(_) => false,
        })
    }

    /// `g H g^{-1} = H` for every `g` in `ambient_generators`; enough for
    /// normality in the group those generators span.
    pub fn is_normalized_by(&self, ambient_generators: &[Mat2Mod]) -> bool {
        ambient_generators.iter().all(|g| {
            let gi = g.inv();
            self.elements.iter().all(|h| self.contains(&g.mul(h).mul(&gi)))
        })
    }
}

/// Order of `SL_2(Z/MZ)`: `M^3 * prod_{q | M} (1 - q^-2)`.
pub fn sl2_order(m: u64) -> u64 {
    crate::modular::prime_factors(m)
        .iter()
        .fold(m * m * m, |acc, &q| acc / (q * q) * (q * q - 1))
}

/// All determinant-one matrices mod `m`, by scanning the `m^4` candidates.
pub fn enumerate_sl2(m: u64) -> Result<MatGroup> {
    enumerate_sl2_bounded(m, DEFAULT_SL2_BOUND)
}

pub fn enumerate_sl2_bounded(m: u64, bound: u64) -> Result<MatGroup> {
    if m == 0 || m > bound {
        return Err(Error::BoundExceeded);
    }
    let mut elements = BTreeSet::new();
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for d in 0..m {
                    if (a * d + m * m - b * c) % m == 1 % m {
                        elements.insert(Mat2Mod::new(a as i64, b as i64, c as i64, d as i64, m));
                    }
                }
            }
        }
    }
    Ok(MatGroup { modulus: m, elements, generators: Vec::new() })
}

/// The two standard unipotent generators of `SL_2(Z/MZ)`.
pub fn unipotent_generators(m: u64) -> [Mat2Mod; 2] {
    [Mat2Mod::upper_unipotent(m), Mat2Mod::lower_unipotent(m)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_small_orders() {
        assert_eq!(enumerate_sl2(2).unwrap().order(), 6);
        assert_eq!(enumerate_sl2(1).unwrap().order(), 1);
        let g12 = enumerate_sl2(12).unwrap();
        assert_eq!(g12.order(), 1152);
        assert_eq!(sl2_order(12), 1152);
        assert_eq!(enumerate_sl2(31), Err(Error::BoundExceeded));
    }

    #[test]
    fn brute_force_count_mod_2() {
        let mut count = 0;
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        if (a * d + 4 - b * c) % 2 == 1 {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(count, 6);
    }

    #[test]
    fn closure_examples() {
        let id = Mat2Mod::identity(2);
        let mul = |a: &Mat2Mod, b: &Mat2Mod| a.mul(b);
        assert_eq!(closure_subgroup(&[], id, mul, 10).unwrap().len(), 1);
        let u = Mat2Mod::upper_unipotent(2);
        assert_eq!(u.mul(&u), id);
        assert_eq!(closure_subgroup(&[u], id, mul, 10).unwrap().len(), 2);
        let g3 = closure_subgroup(&unipotent_generators(3), Mat2Mod::identity(3), mul, 100).unwrap();
        assert_eq!(g3.len(), 24);
        assert_eq!(g3, enumerate_sl2(3).unwrap().elements);
        assert_eq!(
            closure_subgroup(&unipotent_generators(3), Mat2Mod::identity(3), mul, 10),
            Err(Error::ClosureBoundExceeded(10))
        );
    }

    #[test]
    fn orders_and_generation_agree_up_to_30() {
        for m in 1..=30 {
            let g = enumerate_sl2(m).unwrap();
            assert_eq!(g.order() as u64, sl2_order(m), "M = {m}");
            let h = MatGroup::from_generators(m, unipotent_generators(m).to_vec(), DEFAULT_CLOSURE_BOUND)
                .unwrap();
            assert_eq!(h.elements, g.elements, "M = {m}");
        }
    }

    #[test]
    fn enumerated_group_is_subgroup() {
        let g = enumerate_sl2(4).unwrap();
        assert!(g.is_subgroup());
        assert!(g.is_special_linear());
    }
}
