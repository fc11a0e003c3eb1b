//! Prime fields GF(p) and exact matrix rank over them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field GF(p), `p` prime and below 2^15 so products fit in a `u32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub const GF2: PrimeField = PrimeField { p: 2 };

    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 15 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    fn reduce_signed(self, v: i64) -> u32 {
        v.rem_euclid(i64::from(self.p)) as u32
    }

    fn inverse(self, a: u32) -> u32 {
        // Fermat: a^(p-2)
        let mut base = u64::from(a);
        let p = u64::from(self.p);
        let mut e = self.p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc as u32
    }

    /// Rank of a sparse integer matrix reduced mod p.
    pub fn rank(self, m: &SparseMatrix) -> usize {
        if m.rows.is_empty() || m.ncols == 0 {
            return 0;
        }
        if self.p == 2 {
            rank_gf2(m)
        } else {
            self.rank_dense(m)
        }
    }

    fn rank_dense(self, m: &SparseMatrix) -> usize {
        let p = self.p;
        let mut rows: Vec<Vec<u32>> = m
            .rows
            .iter()
            .map(|r| {
                let mut dense = vec![0u32; m.ncols];
                for &(c, v) in r {
                    dense[c] = self.reduce_signed(i64::from(dense[c]) + i64::from(v));
                }
                dense
            })
            .collect();
        let mut rank = 0;
        for col in 0..m.ncols {
            let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, piv);
            let inv = self.inverse(rows[rank][col]);
            for x in rows[rank][col..].iter_mut() {
                *x = *x * inv % p;
            }
            let (top, rest) = rows.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            for row in rest.iter_mut() {
                let f = row[col];
                if f == 0 {
                    continue;
                }
                for c in col..m.ncols {
                    row[c] = (row[c] + (p - f) * pivot_row[c]) % p;
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

fn rank_gf2(m: &SparseMatrix) -> usize {
    let words = m.ncols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = m
        .rows
        .iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for &(c, v) in r {
                if v & 1 != 0 {
                    w[c / 64] ^= 1 << (c % 64);
                }
            }
            w
        })
        .collect();
    let mut rank = 0;
    for col in 0..m.ncols {
        let (wi, bit) = (col / 64, 1u64 << (col % 64));
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][wi] & bit != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[wi] & bit != 0 {
                for (a, b) in row[wi..].iter_mut().zip(&pivot_row[wi..]) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl TryFrom<u32> for PrimeField {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.p
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField::GF2
    }
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// Row-major sparse integer matrix.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub ncols: usize,
    pub rows: Vec<Vec<(usize, i32)>>,
}
