//! Exact rank of sparse integer matrices over GF(2), GF(p) and the rationals.
//!
//! All three use the same column-insertion scheme: each column is reduced
//! against a basis kept in echelon form by lowest nonzero row, and becomes a
//! new basis vector if anything survives.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::homology::FieldSpec;

/// A sparse column: `(row, value)` pairs with distinct rows.
pub type SparseColumn = Vec<(usize, i64)>;

pub fn rank(columns: &[SparseColumn], nrows: usize, field: FieldSpec) -> usize {
    match field.characteristic() {
        0 => rank_rational(columns, nrows),
        2 => rank_gf2(columns, nrows),
        p => rank_gfp(columns, nrows, p),
    }
}

fn rank_gf2(columns: &[SparseColumn], nrows: usize) -> usize {
    let words = nrows.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; nrows];
    let mut rank = 0;
    for col in columns {
        let mut v = vec![0u64; words];
        for &(r, x) in col {
            if x & 1 == 1 {
                v[r / 64] ^= 1 << (r % 64);
            }
        }
        while let Some(low) = lowest_bit(&v) {
            match &pivots[low] {
                Some(b) => {
                    for (a, b) in v.iter_mut().zip(b) {
                        *a ^= b;
                    }
                }
                None => {
                    pivots[low] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn rank_gfp(columns: &[SparseColumn], nrows: usize, p: u64) -> usize {
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; nrows];
    let mut rank = 0;
    for col in columns {
        let mut v = vec![0u64; nrows];
        for &(r, x) in col {
            v[r] = x.rem_euclid(p as i64) as u64;
        }
        let mut start = 0;
        while let Some(low) = (start..nrows).find(|&i| v[i] != 0) {
            start = low;
            match &pivots[low] {
                Some(b) => {
                    // b[low] == 1, entries below `low` are zero.
                    let c = p - v[low];
                    for i in low..nrows {
                        if b[i] != 0 {
                            v[i] = (v[i] + c * b[i]) % p;
                        }
                    }
                }
                None => {
                    let inv = mod_inverse(v[low], p);
                    for x in v[low..].iter_mut() {
                        *x = *x * inv % p;
                    }
                    pivots[low] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn rank_rational(columns: &[SparseColumn], nrows: usize) -> usize {
    let mut pivots: Vec<Option<Vec<BigInt>>> = vec![None; nrows];
    let mut rank = 0;
    for col in columns {
        let mut v = vec![BigInt::zero(); nrows];
        for &(r, x) in col {
            v[r] = BigInt::from(x);
        }
        let mut start = 0;
        while let Some(low) = (start..nrows).find(|&i| !v[i].is_zero()) {
            start = low;
            match &pivots[low] {
                Some(b) => {
                    // Fraction-free: v <- b[low] * v - v[low] * b, then strip content.
                    let a = b[low].clone();
                    let c = v[low].clone();
                    for i in low..nrows {
                        if !v[i].is_zero() || !b[i].is_zero() {
                            v[i] = &a * &v[i] - &c * &b[i];
                        }
                    }
                    strip_content(&mut v[low..]);
                }
                None => {
                    strip_content(&mut v[low..]);
                    pivots[low] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn strip_content(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.abs().is_one() {
        return;
    }
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> (Vec<SparseColumn>, usize) {
        let nrows = rows.len();
        let ncols = rows[0].len();
        let cols = (0..ncols)
            .map(|c| {
                (0..nrows)
                    .filter(|&r| rows[r][c] != 0)
                    .map(|r| (r, rows[r][c]))
                    .collect()
            })
            .collect();
        (cols, nrows)
    }

    fn all_fields() -> [FieldSpec; 3] {
        [FieldSpec::gf2(), FieldSpec::new(3).unwrap(), FieldSpec::rationals()]
    }

    #[test]
    fn identity_and_zero() {
        let (c, r) = dense(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        for f in all_fields() {
            assert_eq!(rank(&c, r, f), 3);
        }
        let (c, r) = dense(&[&[0, 0], &[0, 0]]);
        for f in all_fields() {
            assert_eq!(rank(&c, r, f), 0);
        }
    }

    #[test]
    fn characteristic_dependent_rank() {
        // det = 2: singular over GF(2), regular elsewhere.
        let (c, r) = dense(&[&[1, 1], &[1, -1]]);
        assert_eq!(rank(&c, r, FieldSpec::gf2()), 1);
        assert_eq!(rank(&c, r, FieldSpec::new(3).unwrap()), 2);
        assert_eq!(rank(&c, r, FieldSpec::rationals()), 2);
        // det = 3.
        let (c, r) = dense(&[&[2, 1], &[1, 2]]);
        assert_eq!(rank(&c, r, FieldSpec::new(3).unwrap()), 1);
        assert_eq!(rank(&c, r, FieldSpec::new(5).unwrap()), 2);
        assert_eq!(rank(&c, r, FieldSpec::rationals()), 2);
    }

    #[test]
    fn dependent_columns() {
        let (c, r) = dense(&[&[1, 2, 3], &[4, 5, 9], &[7, 8, 15]]);
        assert_eq!(rank(&c, r, FieldSpec::rationals()), 2);
        assert_eq!(rank(&c, r, FieldSpec::new(7).unwrap()), 2);
    }

    #[test]
    fn rational_rank_survives_large_entries() {
        // Hilbert-like integer matrix with growing entries.
        let n = 8;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| ((i + 1) as i64).pow(j as u32)).collect())
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let (c, r) = dense(&refs);
        assert_eq!(rank(&c, r, FieldSpec::rationals()), n);
    }
}
