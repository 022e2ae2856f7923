use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};

/// A commutative ring whose elements carry their own context (modulus,
/// variable set), so constants can be produced from any element.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64_like(&self, n: i64) -> Self;
    fn characteristic(&self) -> u64;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// An integral domain with exact division (used by fraction-free elimination).
pub trait Domain: Ring {
    /// `Some(q)` with `q * d == self` when `d` divides `self`.
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

pub trait Field: Domain {
    fn inv(&self) -> Option<Self>;

    fn div(&self, d: &Self) -> Option<Self> {
        d.inv().map(|i| self.clone() * i)
    }
}
