#![allow(clippy::needless_range_loop)] // row/column elimination reads clearest with indices

//! Dense matrices over the cyclotomic field, with exact elimination.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::cyclotomic::Cyclotomic;
use super::rational::Rational;
use super::ExactError;

/// Row-major matrix with cyclotomic entries.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Cyclotomic>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Cyclotomic>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        ExactMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix::new(rows, cols, vec![Cyclotomic::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n, n);
        for k in 0..n {
            *m.at_mut(k, k) = Cyclotomic::one();
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Cyclotomic,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        ExactMatrix::new(rows, cols, entries)
    }

    /// Builds a matrix from rows of pretty-form scalar literals.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(ExactError::Dimension("ragged rows".into()));
            }
            for cell in *row {
                entries.push(Cyclotomic::parse_pretty(cell)?);
            }
        }
        Ok(ExactMatrix::new(r, c, entries))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Cyclotomic {
        &mut self.entries[r * self.cols + c]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn trace(&self) -> Cyclotomic {
        assert!(self.is_square());
        let mut acc = Cyclotomic::zero();
        for k in 0..self.rows {
            acc = &acc + self.at(k, k);
        }
        acc
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Conjugate transpose, entrywise complex conjugation.
    pub fn conj_transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    pub fn scale(&self, s: &Cyclotomic) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c).mul(s))
    }

    pub fn scale_rational(&self, s: &Rational) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c).scale(s))
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + other.at(r, c))
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - other.at(r, c))
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = ExactMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c).clone();
                    *out.at_mut(r, c) = &cur + &a.mul(b);
                }
            }
        }
        out
    }

    pub fn neg(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows, self.cols, |r, c| -self.at(r, c))
    }

    pub fn pow(&self, mut n: u64) -> ExactMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = ExactMatrix::identity(self.rows);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Rank over the field, by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Cyclotomic>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = m[rank][col].inv().expect("pivot nonzero");
            for c in col..self.cols {
                m[rank][c] = m[rank][c].mul(&inv);
            }
            for r in 0..self.rows {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..self.cols {
                        let delta = m[rank][c].mul(&f);
                        m[r][c] = &m[r][c] - &delta;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Basis of the right nullspace, as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<Cyclotomic>> {
        let mut m: Vec<Vec<Cyclotomic>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c).clone()).collect())
            .collect();
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; self.cols];
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = m[rank][col].inv().expect("pivot nonzero");
            for c in 0..self.cols {
                m[rank][c] = m[rank][c].mul(&inv);
            }
            for r in 0..self.rows {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..self.cols {
                        let delta = m[rank][c].mul(&f);
                        m[r][c] = &m[r][c] - &delta;
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
            let mut v = vec![Cyclotomic::zero(); self.cols];
            v[free] = Cyclotomic::one();
            for (col, pivot) in pivot_of_col.iter().enumerate() {
                if let Some(row) = pivot {
                    v[col] = -&m[*row][free];
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the `lambda`-eigenspace, i.e. the nullspace of `self - lambda I`.
    /// Empty when `lambda` is not an eigenvalue.
    pub fn eigenspace(&self, lambda: &Cyclotomic) -> Vec<Vec<Cyclotomic>> {
        assert!(self.is_square(), "eigenspace needs a square matrix");
        let shifted = self.sub(&ExactMatrix::identity(self.rows).scale(lambda));
        shifted.nullspace()
    }

    /// Determinant by elimination.
    pub fn det(&self) -> Cyclotomic {
        assert!(self.is_square());
        let n = self.rows;
        let mut m: Vec<Vec<Cyclotomic>> = (0..n)
            .map(|r| (0..n).map(|c| self.at(r, c).clone()).collect())
            .collect();
        let mut det = Cyclotomic::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Cyclotomic::zero();
            };
            if pivot != col {
                m.swap(col, pivot);
                det = -&det;
            }
            det = det.mul(&m[col][col]);
            let inv = m[col][col].inv().expect("pivot nonzero");
            for r in col + 1..n {
                if !m[r][col].is_zero() {
                    let f = m[r][col].mul(&inv);
                    for c in col..n {
                        let delta = m[col][c].mul(&f);
                        m[r][c] = &m[r][c] - &delta;
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<ExactMatrix, ExactError> {
        assert!(self.is_square());
        let n = self.rows;
        let mut m: Vec<Vec<Cyclotomic>> = (0..n)
            .map(|r| {
                let mut row: Vec<Cyclotomic> = (0..n).map(|c| self.at(r, c).clone()).collect();
                row.extend((0..n).map(|c| {
                    if c == r {
                        Cyclotomic::one()
                    } else {
                        Cyclotomic::zero()
                    }
                }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(ExactError::DivisionByZero)?;
            m.swap(col, pivot);
            let inv = m[col][col].inv().expect("pivot nonzero");
            for c in 0..2 * n {
                m[col][c] = m[col][c].mul(&inv);
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..2 * n {
                        let delta = m[col][c].mul(&f);
                        m[r][c] = &m[r][c] - &delta;
                    }
                }
            }
        }
        Ok(ExactMatrix::from_fn(n, n, |r, c| m[r][n + c].clone()))
    }

    /// True when every row and every column holds exactly one `±1` and the
    /// rest zeros.
    pub fn is_signed_permutation(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let one = Cyclotomic::one();
        let minus_one = Cyclotomic::from_int(-1);
        let mut col_seen = vec![false; self.cols];
        for r in 0..self.rows {
            let mut hit = None;
            for c in 0..self.cols {
                let e = self.at(r, c);
                if e.is_zero() {
                    continue;
                }
                if (e != &one && e != &minus_one) || hit.is_some() {
                    return false;
                }
                hit = Some(c);
            }
            match hit {
                Some(c) if !col_seen[c] => col_seen[c] = true,
                _ => return false,
            }
        }
        true
    }

    /// Stable content key used to identify equal matrices across
    /// constructions.
    pub fn content_key(&self) -> String {
        let mut key = format!("{}x{}:", self.rows, self.cols);
        for e in &self.entries {
            key.push_str(&e.to_canonical_string());
            key.push(';');
        }
        key
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.at(r, c).to_pretty_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.at(r, c).to_pretty_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn c(s: &str) -> Cyclotomic {
        Cyclotomic::parse_pretty(s).unwrap()
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(ExactMatrix::identity(2).rank(), 2);
        assert_eq!(ExactMatrix::zero(3, 3).rank(), 0);
    }

    #[test]
    fn rank_equals_transpose_rank_on_seeded_matrices() {
        let mut state = 0x1234_5678_u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..6 {
            let m = ExactMatrix::from_fn(4, 5, |_, _| {
                let k = (next() % 5) as i64 - 2;
                if next() % 3 == 0 {
                    Cyclotomic::zero()
                } else {
                    Cyclotomic::from_int(k).mul(&Cyclotomic::zeta_pow((next() % 24) as i64))
                }
            });
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn eigenspace_of_diagonal() {
        let d = ExactMatrix::parse_rows(&[&["1", "0"], &["0", "-1"]]).unwrap();
        let plus = d.eigenspace(&Cyclotomic::one());
        assert_eq!(plus.len(), 1);
        assert!(plus[0][1].is_zero() && !plus[0][0].is_zero());
        assert!(d.eigenspace(&Cyclotomic::from_int(2)).is_empty());
    }

    #[test]
    fn eigenspace_of_reflection_matches_known_line() {
        // (1/2)·[[-1, -sqrt3], [-sqrt3, 1]] fixes the line through (-1, sqrt3).
        let m =
            ExactMatrix::parse_rows(&[&["-1/2", "-1/2*sqrt3"], &["-1/2*sqrt3", "1/2"]]).unwrap();
        let space = m.eigenspace(&Cyclotomic::one());
        assert_eq!(space.len(), 1);
        let v = &space[0];
        // Proportional to (-1, sqrt3): cross product must vanish.
        let cross = &v[0].mul(&c("sqrt3")) - &v[1].mul(&c("-1"));
        assert!(cross.is_zero());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = ExactMatrix::parse_rows(&[&["1", "i"], &["i", "1"]]).unwrap();
        assert_eq!(m.det(), Cyclotomic::from_int(2));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), ExactMatrix::identity(2));
        assert!(ExactMatrix::zero(2, 2).inverse().is_err());
    }

    #[test]
    fn signed_permutation_detection() {
        let p = ExactMatrix::parse_rows(&[&["0", "-1"], &["1", "0"]]).unwrap();
        assert!(p.is_signed_permutation());
        let q = ExactMatrix::parse_rows(&[&["0", "i"], &["1", "0"]]).unwrap();
        assert!(!q.is_signed_permutation());
        let r = ExactMatrix::parse_rows(&[&["1", "1"], &["0", "1"]]).unwrap();
        assert!(!r.is_signed_permutation());
    }

    #[test]
    fn nullspace_dimension_balances_rank() {
        let m = ExactMatrix::parse_rows(&[&["1", "2", "3"], &["2", "4", "6"]]).unwrap();
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            for r in 0..m.rows() {
                let mut acc = Cyclotomic::zero();
                for c in 0..m.cols() {
                    acc = &acc + &m.at(r, c).mul(&v[c]);
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn unitary_check_uses_conjugate_transpose() {
        // (1/sqrt2)·[[1, 1], [-1, 1]] is real orthogonal, hence unitary.
        let m = ExactMatrix::parse_rows(&[&["1", "1"], &["-1", "1"]])
            .unwrap()
            .scale(&c("sqrt2").inv().unwrap());
        assert_eq!(m.conj_transpose().mul(&m), ExactMatrix::identity(2));
        // Scaling by 1/2 instead of 1/sqrt2 breaks it.
        let bad = ExactMatrix::parse_rows(&[&["1", "1"], &["-1", "1"]])
            .unwrap()
            .scale_rational(&rat(1, 2));
        assert_ne!(bad.conj_transpose().mul(&bad), ExactMatrix::identity(2));
    }
}
