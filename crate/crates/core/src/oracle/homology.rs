//! Reduced simplicial homology by exact boundary-matrix ranks.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::VarMask;
use crate::oracle::complex::SimplicialComplex;

/// Coefficient field for homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Self> {
        if p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::InvalidField(u64::from(p)))
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// `q`, `f2`, or `f<p>` for a prime `p`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(Field::Rationals),
            _ => {
                let p = s
                    .strip_prefix('f')
                    .or_else(|| s.strip_prefix('F'))
                    .and_then(|d| d.parse::<u32>().ok())
                    .ok_or(Error::InvalidField(0))?;
                Field::prime(p)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "f{p}"),
        }
    }
}

/// Dense integer matrix, row-major.
pub type IntMatrix = Vec<Vec<i64>>;

/// Rank over the given field.
pub fn rank(matrix: &IntMatrix, field: Field) -> usize {
    match field {
        Field::Rationals => rank_rational(matrix),
        Field::Prime(p) => rank_mod_p(matrix, p),
    }
}

pub fn rank_mod_p(matrix: &IntMatrix, p: u32) -> usize {
    let p = u64::from(p);
    let mut rows: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = mod_pow(rows[rank][col], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let (top, below) = rows.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in below {
            let factor = row[col];
            if factor != 0 {
                for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x = (*x + p - factor * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Exact rank over the rationals: fraction-free elimination in `i64` with rows
/// reduced by their gcd, falling back to arbitrary precision on overflow.
pub fn rank_rational(matrix: &IntMatrix) -> usize {
    match rank_rational_i64(matrix) {
        Some(r) => r,
        None => rank_rational_bigint(matrix),
    }
}

fn rank_rational_i64(matrix: &IntMatrix) -> Option<usize> {
    let mut rows = matrix.clone();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len())
            .filter(|&r| rows[r][col] != 0)
            .min_by_key(|&r| rows[r][col].unsigned_abs())
        else {
            continue;
        };
        rows.swap(rank, piv);
        let pv = rows[rank][col];
        for r in rank + 1..rows.len() {
            let a = rows[r][col];
            if a == 0 {
                continue;
            }
            let g = pv.gcd(&a);
            let (mp, ma) = (pv / g, a / g);
            let (top, below) = rows.split_at_mut(r);
            let (pivot, row) = (&top[rank], &mut below[0]);
            let mut row_gcd = 0i64;
            for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x = x.checked_mul(mp)?.checked_sub(y.checked_mul(ma)?)?;
                row_gcd = row_gcd.gcd(x);
            }
            if row_gcd > 1 {
                for x in &mut row[col..] {
                    *x /= row_gcd;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_rational_bigint(matrix: &IntMatrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> =
        matrix.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).filter(|&r| !rows[r][col].is_zero()).min_by_key(|&r| rows[r][col].abs())
        else {
            continue;
        };
        rows.swap(rank, piv);
        let pv = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let g = pv.gcd(&rows[r][col]);
            let mp = &pv / &g;
            let ma = &rows[r][col] / &g;
            let (top, below) = rows.split_at_mut(r);
            let (pivot, row) = (&top[rank], &mut below[0]);
            let mut row_gcd = BigInt::zero();
            for (x, y) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x = &*x * &mp - y * &ma;
                row_gcd = row_gcd.gcd(x);
            }
            if row_gcd > BigInt::from(1) {
                for x in &mut row[col..] {
                    *x = &*x / &row_gcd;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Boundary matrices `∂_k : C_k → C_{k-1}` for `k = 0..=dim`, with `C_{-1}`
/// spanned by the empty face. Entry `(row, col)` is the coefficient of the
/// `row`-th `(k-1)`-face in the boundary of the `col`-th `k`-face.
pub fn boundary_matrices(complex: &SimplicialComplex) -> Vec<IntMatrix> {
    let Some(dim) = complex.dim() else {
        return Vec::new();
    };
    let mut by_size: Vec<Vec<VarMask>> = vec![Vec::new(); (dim + 2) as usize];
    for f in complex.faces() {
        by_size[f.len()].push(f);
    }
    let index: Vec<HashMap<VarMask, usize>> =
        by_size.iter().map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect()).collect();
    let mut out = Vec::with_capacity((dim + 1) as usize);
    for size in 1..by_size.len() {
        let mut m = vec![vec![0i64; by_size[size].len()]; by_size[size - 1].len()];
        for (col, &face) in by_size[size].iter().enumerate() {
            for (pos, v) in face.iter().enumerate() {
                let row = index[size - 1][&face.without(v)];
                m[row][col] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        out.push(m);
    }
    out
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, ..., β̃_dim`. Empty for the void complex.
pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: Field) -> Vec<usize> {
    let f = complex.f_vector();
    if f.is_empty() {
        return Vec::new();
    }
    let ranks: Vec<usize> = boundary_matrices(complex).iter().map(|m| rank(m, field)).collect();
    // f[k + 1] faces of dimension k; ranks[k] is the rank of ∂_k (k = 0..=dim)
    (0..f.len())
        .map(|slot| {
            let into = if slot == 0 { 0 } else { ranks[slot - 1] };
            let out = ranks.get(slot).copied().unwrap_or(0);
            f[slot] - into - out
        })
        .collect()
}

/// Reduced Euler characteristic from face counts, `Σ (-1)^k f_k` over `k >= -1`.
pub fn reduced_euler_characteristic(complex: &SimplicialComplex) -> i64 {
    complex
        .f_vector()
        .iter()
        .enumerate()
        .map(|(slot, &c)| if slot % 2 == 1 { c as i64 } else { -(c as i64) })
        .sum()
}
