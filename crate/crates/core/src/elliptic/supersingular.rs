use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::modular::is_prime;

pub const SUPERSINGULAR_MAX_P: u64 = 50;

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Coefficients `(a, b)` of a curve `y^2 = x^3 + a x + b` with invariant `j`.
pub fn curve_for_j(j: u64, p: u64) -> (u64, u64) {
    let j = j % p;
    if j == 0 {
        return (0, 1);
    }
    if j == 1728 % p {
        return (1, 0);
    }
    let d = (1728 + p - j) % p;
    let di = pow_mod(d, p - 2, p);
    (3 * j % p * di % p, 2 * j % p * di % p)
}

/// `p + 1 - #E(F_p)` by counting points.
pub fn frobenius_trace(a: u64, b: u64, p: u64) -> i64 {
    let mut sum = 0i64;
    for x in 0..p {
        let v = (x * x % p * x + a * x + b) % p;
        if v != 0 {
            sum += if pow_mod(v, (p - 1) / 2, p) == 1 { 1 } else { -1 };
        }
    }
    -sum
}

/// `j` in `F_p` whose curves have trace divisible by `p`, in increasing order.
pub fn supersingular_j_list(p: u64) -> Result<Vec<u64>> {
    if p < 5 || !is_prime(p) {
        return Err(Error::Precondition("p must be a prime >= 5"));
    }
    if p > SUPERSINGULAR_MAX_P {
        return Err(Error::BoundExceeded);
    }
    Ok((0..p)
        .filter(|&j| {
            let (a, b) = curve_for_j(j, p);
            frobenius_trace(a, b, p).rem_euclid(p as i64) == 0
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Coefficient of `x^{p-1}` in `(x^3 + a x + b)^{(p-1)/2}`.
    fn hasse_invariant(a: u64, b: u64, p: u64) -> u64 {
        let mut poly = alloc::vec![1u64];
        let cubic = [b, a, 0, 1];
        for _ in 0..(p - 1) / 2 {
            let mut next = alloc::vec![0u64; poly.len() + 3];
            for (i, c) in poly.iter().enumerate() {
                for (k, d) in cubic.iter().enumerate() {
                    next[i + k] = (next[i + k] + c * d) % p;
                }
            }
            poly = next;
        }
        poly[(p - 1) as usize]
    }

    #[test]
    fn examples() {
        assert_eq!(supersingular_j_list(5).unwrap(), alloc::vec![0]);
        assert_eq!(supersingular_j_list(13).unwrap(), alloc::vec![5]);
        assert_eq!(supersingular_j_list(11).unwrap(), alloc::vec![0, 1]);
        assert!(supersingular_j_list(53).is_err());
    }

    #[test]
    fn agrees_with_hasse_invariant() {
        for p in (5..=50u64).filter(|&p| is_prime(p)) {
            let by_hasse: Vec<u64> = (0..p)
                .filter(|&j| {
                    let (a, b) = curve_for_j(j, p);
                    hasse_invariant(a, b, p) == 0
                })
                .collect();
            assert_eq!(supersingular_j_list(p).unwrap(), by_hasse, "p={p}");
        }
    }

    #[test]
    fn curves_have_requested_invariant() {
        for p in [5u64, 7, 11, 13, 37] {
            for j in 0..p {
                let (a, b) = curve_for_j(j, p);
                let num = 1728 * 4 % p * pow_mod(a, 3, p) % p;
                let den = (4 * pow_mod(a, 3, p) + 27 * b % p * b) % p;
                assert_ne!(den, 0, "singular curve p={p} j={j}");
                assert_eq!(num * pow_mod(den, p - 2, p) % p, j, "p={p}");
            }
        }
    }

    #[test]
    fn rational_count_bounds() {
        // every p has a rational supersingular j; the upper Deuring bound holds,
        // the lower one counts F_{p^2} values and fails for F_p-rational ones
        let mut below_floor = Vec::new();
        for p in (5..=50u64).filter(|&p| is_prime(p)) {
            let n = supersingular_j_list(p).unwrap().len() as u64;
            assert!(n >= 1 && n <= p / 12 + 2, "p={p} count={n}");
            if n < p / 12 {
                below_floor.push(p);
            }
        }
        assert_eq!(below_floor, alloc::vec![37, 43]);
    }
}
