#![allow(clippy::needless_range_loop)] // row/column elimination reads clearest with indices

//! Arbitrary-precision rationals and a small dense solver over them.

use num_bigint::BigInt;
use num_traits::Zero;

use super::ExactError;

/// Exact rational number, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational, ExactError> {
    let t = text.trim();
    t.parse::<Rational>()
        .map_err(|_| ExactError::Parse(t.to_string()))
}

/// Solves the square system `a · x = b` in place by Gaussian elimination.
///
/// Returns `None` when `a` is singular. `a` is given row-major, `b` is one
/// column. This is only used for small fixed-size systems (the field has
/// degree 8), so no pivoting strategy beyond "first nonzero" is needed.
pub fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    let d = &a[col][c] * &f;
                    a[r][c] -= d;
                }
                let d = &b[col] * &f;
                b[r] -= d;
            }
        }
    }
    Some(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["0", "5", "-3", "3/4", "-7/12"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!(parse_rational("6/8").unwrap(), rat(3, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn solver_inverts_small_system() {
        // 2x + y = 5, x - y = 1  =>  x = 2, y = 1
        let a = vec![vec![rat_int(2), rat_int(1)], vec![rat_int(1), rat_int(-1)]];
        let b = vec![rat_int(5), rat_int(1)];
        let x = solve_square(a, b).unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(1)]);
    }

    #[test]
    fn solver_reports_singular() {
        let a = vec![vec![rat_int(1), rat_int(2)], vec![rat_int(2), rat_int(4)]];
        let b = vec![rat_int(1), rat_int(2)];
        assert!(solve_square(a, b).is_none());
    }
}
