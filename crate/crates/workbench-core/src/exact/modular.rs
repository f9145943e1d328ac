#![allow(clippy::needless_range_loop, clippy::should_implement_trait)] // indexed elimination loops; plain-value add/mul

//! Arithmetic modulo a small odd prime, for the modular character-table
//! algorithm. The prime must satisfy `p ≡ 1 (mod exponent)` so that the
//! eigenvalues of the class-sum matrices all lie in the prime field, and
//! `p > 2·sqrt(|G|)` so that character degrees lift unambiguously.

use super::ExactError;

/// A residue in `[0, p)` for a fixed prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModularScalar {
    pub residue: u64,
    pub modulus: u64,
}

impl ModularScalar {
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i64;
        ModularScalar {
            residue: value.rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn add(self, other: ModularScalar) -> ModularScalar {
        debug_assert_eq!(self.modulus, other.modulus);
        ModularScalar {
            residue: (self.residue + other.residue) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn mul(self, other: ModularScalar) -> ModularScalar {
        debug_assert_eq!(self.modulus, other.modulus);
        ModularScalar {
            residue: self.residue * other.residue % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn pow(self, mut e: u64) -> ModularScalar {
        let mut base = self.residue;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.modulus;
            }
            base = base * base % self.modulus;
            e >>= 1;
        }
        ModularScalar {
            residue: acc,
            modulus: self.modulus,
        }
    }

    /// Inverse by Fermat; the modulus is prime.
    pub fn inv(self) -> ModularScalar {
        assert!(self.residue != 0, "inverse of zero residue");
        self.pow(self.modulus - 2)
    }
}

/// Checks primality by trial division; moduli here are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> Result<u64, ExactError> {
    if !is_prime(p) {
        return Err(ExactError::BadModulus(p, "not prime".into()));
    }
    if p == 2 {
        return Ok(1);
    }
    let phi = p - 1;
    let mut factors = Vec::new();
    let mut m = phi;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'outer: for g in 2..p {
        for &q in &factors {
            if ModularScalar::new(g as i64, p).pow(phi / q).residue == 1 {
                continue 'outer;
            }
        }
        return Ok(g);
    }
    Err(ExactError::BadModulus(p, "no primitive root found".into()))
}

/// Small dense matrix over the prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    pub rows: usize,
    pub cols: usize,
    pub modulus: u64,
    pub entries: Vec<u64>,
}

impl ModMatrix {
    pub fn zero(rows: usize, cols: usize, modulus: u64) -> Self {
        ModMatrix {
            rows,
            cols,
            modulus,
            entries: vec![0; rows * cols],
        }
    }

    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.modulus;
    }

    pub fn mul(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.modulus, other.modulus);
        let p = self.modulus;
        let mut out = ModMatrix::zero(self.rows, other.cols, p);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = (out.at(r, c) + a * other.at(k, c)) % p;
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Basis of the right nullspace over the prime field.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let p = self.modulus;
        let mut m: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c)).collect())
            .collect();
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; self.cols];
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = ModularScalar {
                residue: m[rank][col],
                modulus: p,
            }
            .inv()
            .residue;
            for c in 0..self.cols {
                m[rank][c] = m[rank][c] * inv % p;
            }
            for r in 0..self.rows {
                if r != rank && m[r][col] != 0 {
                    let f = m[r][col];
                    for c in 0..self.cols {
                        let sub = f * m[rank][c] % p;
                        m[r][c] = (m[r][c] + p - sub) % p;
                    }
                }
            }
            pivot_of_col[col] = Some(rank);
            rank += 1;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (col, pivot) in pivot_of_col.iter().enumerate() {
                if let Some(row) = pivot {
                    v[col] = (p - m[*row][free]) % p;
                }
            }
            basis.push(v);
        }
        basis
    }
}
