//! The conjugation action of `SL_2(Z/NlZ)` on `S(Nl, N) = F_l^3` and its
//! invariant planes.

use alloc::vec::Vec;
use core::fmt;

use super::congruence::{gamma_inverse, gamma_map};
use super::Mat2Mod;
use crate::error::{Error, Result};
use crate::modular::{inverse_mod, is_prime, ResidueInt};

/// A 3x3 matrix over `F_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat3Mod {
    l: u32,
    rows: [[u32; 3]; 3],
}

impl Mat3Mod {
    pub fn new(rows: [[i64; 3]; 3], l: u64) -> Self {
        let r = |v: i64| ResidueInt::new(v, l).value() as u32;
        Mat3Mod { l: l as u32, rows: rows.map(|row| row.map(r)) }
    }

    pub fn identity(l: u64) -> Self {
        Self::new([[1, 0, 0], [0, 1, 0], [0, 0, 1]], l)
    }

    pub fn modulus(&self) -> u64 {
        self.l as u64
    }

    pub fn rows(&self) -> [[u64; 3]; 3] {
        self.rows.map(|row| row.map(|v| v as u64))
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows[i][j] as u64
    }

    pub fn mul(&self, o: &Self) -> Self {
        let l = self.l as u64;
        let mut out = [[0u32; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let s: u64 = (0..3).map(|k| self.get(i, k) * o.get(k, j)).sum();
                *cell = (s % l) as u32;
            }
        }
        Mat3Mod { l: self.l, rows: out }
    }

    pub fn apply(&self, v: [u64; 3]) -> [u64; 3] {
        let l = self.l as u64;
        let mut out = [0u64; 3];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..3).map(|k| self.get(i, k) * v[k]).sum::<u64>() % l;
        }
        out
    }

    pub fn det(&self) -> u64 {
        let l = self.l as i64;
        let m = self.rows.map(|row| row.map(|v| v as i64));
        let d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        d.rem_euclid(l) as u64
    }

    fn flat(&self) -> [u64; 9] {
        let mut out = [0u64; 9];
        for i in 0..3 {
            for j in 0..3 {
                out[3 * i + j] = self.get(i, j);
            }
        }
        out
    }
}

impl fmt::Display for Mat3Mod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.rows;
        write!(
            f,
            "({} {} {}; {} {} {}; {} {} {}) mod {}",
            r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2], self.l
        )
    }
}

/// `(1 -1 0; 0 1 0; 2 -1 1)`, the image of `(1 0; 1 1)`.
pub fn m1(l: u64) -> Mat3Mod {
    Mat3Mod::new([[1, -1, 0], [0, 1, 0], [2, -1, 1]], l)
}

/// `(1 0 1; -2 1 -1; 0 0 1)`, the image of `(1 1; 0 1)`.
pub fn m2(l: u64) -> Mat3Mod {
    Mat3Mod::new([[1, 0, 1], [-2, 1, -1], [0, 0, 1]], l)
}

/// The matrix `f(A)` with `A gamma(v) A^{-1} = gamma(f(A) v)`.
pub fn conj_rep(a: &Mat2Mod, n: u64, l: u64) -> Result<Mat3Mod> {
    if n == 0 || n % l != 0 {
        return Err(Error::DivisibilityViolated);
    }
    if a.modulus() != n * l {
        return Err(Error::ModulusMismatch);
    }
    if !a.is_special() {
        return Err(Error::Precondition("A must have determinant 1"));
    }
    let a_inv = a.inverse()?;
    let mut cols = [[0u64; 3]; 3];
    for (i, col) in cols.iter_mut().enumerate() {
        let e = |j: usize| ResidueInt::from_u64((i == j) as u64, l);
        let g = gamma_map(e(0), e(1), e(2), n)?;
        let conj = a.mul(&g).mul(&a_inv);
        *col = gamma_inverse(&conj, n, l)?.map(|r| r.value());
    }
    let mut rows = [[0i64; 3]; 3];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = cols[j][i] as i64;
        }
    }
    Ok(Mat3Mod::new(rows, l))
}

/// A plane in `F_l^3`, stored as the kernel of a covector whose first
/// nonzero entry is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneFl {
    l: u32,
    normal: [u32; 3],
}

impl PlaneFl {
    pub fn from_normal(normal: [u64; 3], l: u64) -> Result<Self> {
        let n = normal.map(|v| v % l);
        let k = n.iter().position(|&v| v != 0).ok_or(Error::Precondition("zero covector"))?;
        let inv = inverse_mod(&ResidueInt::from_u64(n[k], l))?.value();
        Ok(PlaneFl { l: l as u32, normal: n.map(|v| (v * inv % l) as u32) })
    }

    pub fn normal(&self) -> [u64; 3] {
        self.normal.map(|v| v as u64)
    }

    pub fn contains(&self, v: [u64; 3]) -> bool {
        let l = self.l as u64;
        (0..3).map(|i| self.normal[i] as u64 * (v[i] % l)).sum::<u64>() % l == 0
    }

    /// Two vectors spanning the plane.
    pub fn basis(&self) -> [[u64; 3]; 2] {
        let l = self.l as u64;
        let n = self.normal();
        let k = n.iter().position(|&v| v != 0).expect("normalized");
        let mut out = [[0u64; 3]; 2];
        let others = (0..3).filter(|&j| j != k);
        for (slot, j) in out.iter_mut().zip(others) {
            slot[j] = 1;
            slot[k] = (l - n[j]) % l;
        }
        out
    }

    /// All `l^2 + l + 1` planes.
    pub fn all(l: u64) -> Vec<PlaneFl> {
        let mut out = Vec::new();
        for a in 0..l {
            for b in 0..l {
                out.push(PlaneFl { l: l as u32, normal: [1, a as u32, b as u32] });
            }
        }
        for b in 0..l {
            out.push(PlaneFl { l: l as u32, normal: [0, 1, b as u32] });
        }
        out.push(PlaneFl { l: l as u32, normal: [0, 0, 1] });
        out
    }
}

/// Planes mapped into themselves by every matrix in `ms`.
pub fn invariant_planes(ms: &[Mat3Mod], l: u64) -> Result<Vec<PlaneFl>> {
    if !is_prime(l) {
        return Err(Error::Precondition("l must be prime"));
    }
    if ms.iter().any(|m| m.modulus() != l) {
        return Err(Error::ModulusMismatch);
    }
    Ok(PlaneFl::all(l)
        .into_iter()
        .filter(|p| {
            let basis = p.basis();
            ms.iter().all(|m| basis.iter().all(|v| p.contains(m.apply(*v))))
        })
        .collect())
}

/// Coefficients `[c0, c1, c2, 1]` of `det(T I - M)`.
pub fn char_poly(m: &Mat3Mod) -> [u64; 4] {
    let l = m.modulus() as i64;
    let g = |i: usize, j: usize| m.get(i, j) as i64;
    let trace = g(0, 0) + g(1, 1) + g(2, 2);
    let minors = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) + g(0, 0) * g(2, 2) - g(0, 2) * g(2, 0)
        + g(1, 1) * g(2, 2)
        - g(1, 2) * g(2, 1);
    let det = m.det() as i64;
    [(-det).rem_euclid(l) as u64, minors.rem_euclid(l) as u64, (-trace).rem_euclid(l) as u64, 1]
}

/// Degree of the minimal polynomial: the first `d` with `M^d` in the span of
/// `I, M, ..., M^{d-1}`.
pub fn minimal_poly_degree(m: &Mat3Mod) -> usize {
    let l = m.modulus();
    let mut powers: Vec<[u64; 9]> = Vec::new();
    let mut cur = Mat3Mod::identity(l);
    for d in 0..=3 {
        powers.push(cur.flat());
        if rank_mod(&powers, l) < powers.len() {
            return d;
        }
        cur = cur.mul(m);
    }
    3
}

fn rank_mod(vectors: &[[u64; 9]], l: u64) -> usize {
    let mut rows: Vec<[u64; 9]> = vectors.to_vec();
    let mut rank = 0;
    for col in 0..9 {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] % l != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inverse_mod(&ResidueInt::from_u64(rows[rank][col], l)).expect("prime").value();
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col] * inv % l;
                for c in 0..9 {
                    rows[r][c] = (rows[r][c] + l * l - factor * rows[rank][c] % l) % l;
                }
            }
        }
        rank += 1;
    }
    rank
}
