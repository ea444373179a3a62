//! Determinant routes: non-colliding families as determinants of single-walker
//! polynomials, plus exact counts of families with a prescribed number of contacts.
//!
//! The path-switching (Lindstrom–Gessel–Viennot) argument turns a family of
//! non-colliding walkers into a determinant of single-walker partition functions, with
//! the wall interaction riding along because only the lowest walker can reach the wall.
//! This module implements three determinantal presentations:
//!
//! * [`z_det_general`] — the direct `n x n` determinant of single-walker contact
//!   polynomials for arbitrary start/end configurations;
//! * [`z_det_watermelon`] — a transformed determinant for the watermelon configuration
//!   whose `(i, j)` entry is a single walker pinned to the wall at the start, at the
//!   price of an overall factor `kappa^(n-1)` that is divided out exactly;
//! * [`z_det_deviation0`] — for watermelons that return to their starting heights
//!   (`y = 0`, `t = 2r`), a Hankel determinant in the single-excursion polynomials.
//!
//! Determinants are computed exactly: Laplace expansion for sizes up to 4 and
//! fraction-free (Bareiss) elimination beyond, with every division checked.
//!
//! The same switching argument refines to families with a prescribed number of wall
//! contacts: [`contact_count_det`] evaluates an integer determinant for the number of
//! families whose lowest walk touches the wall exactly `l` times after the start, and
//! [`contact_count_formula`] evaluates the single-sum closed form of that determinant.
//! Summing `N_l * kappa^(l+1)` over `l` recovers the contact polynomial, which the
//! tests exploit as a route-independence check.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::combin::{binom_nat, FactorialTable};
use crate::error::{Error, Result};
use crate::model::{WalkerSpec, WatermelonSpec};
use crate::poly::ContactPolynomial;
use crate::walks1::z1_exact;

/// Exact determinant of a square matrix of contact polynomials. Laplace expansion for
/// small sizes; fraction-free elimination (two-term cross-products divided by the
/// previous pivot, always exactly) for larger ones, which keeps intermediate
/// coefficient growth polynomial instead of exponential.
pub fn det_polynomial(matrix: &[Vec<ContactPolynomial>]) -> ContactPolynomial {
    let n = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "matrix must be square"
    );
    if n == 0 {
        return ContactPolynomial::one();
    }
    if n <= 4 {
        det_laplace(matrix)
    } else {
        det_bareiss(matrix.to_vec())
    }
}

fn det_laplace(m: &[Vec<ContactPolynomial>]) -> ContactPolynomial {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = ContactPolynomial::zero();
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<ContactPolynomial>> = m
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let term = &m[i][0] * &det_laplace(&minor);
        if i % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn det_bareiss(mut m: Vec<Vec<ContactPolynomial>>) -> ContactPolynomial {
    let n = m.len();
    let mut sign_flip = false;
    let mut prev_pivot = ContactPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return ContactPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = cross
                    .div_exact(&prev_pivot)
                    .expect("fraction-free elimination divides exactly");
            }
            m[i][k] = ContactPolynomial::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Contact polynomial of a general non-colliding family as the determinant of
/// single-walker contact polynomials: entry `(i, j)` is the single walker from start
/// `j` to end `i`. Requires `t >= 1`; the zero-length boundary case carries no
/// combinatorics and is left to the oracle.
pub fn z_det_general(spec: &WalkerSpec) -> Result<ContactPolynomial> {
    if spec.t() < 1 {
        return Err(Error::InvalidConfig(
            "determinant route needs t >= 1; length zero is a pure boundary case".into(),
        ));
    }
    let n = spec.n();
    let mut matrix = Vec::with_capacity(n);
    for &e in spec.ends() {
        let mut row = Vec::with_capacity(n);
        for &a in spec.starts() {
            row.push(z1_exact(spec.t(), a, e)?);
        }
        matrix.push(row);
    }
    det_polynomial(&matrix).check_counting()
}

/// Contact polynomial of the watermelon configuration via a transformed determinant:
/// entry `(i, j)` (0-based) is the single walker of length `t + 2j` from the wall to
/// height `y + 2i`. Column operations concentrate all wall information in walkers
/// that start on the wall, each contributing one forced contact; the surplus factor
/// `kappa^(n-1)` is divided out exactly at the end.
pub fn z_det_watermelon(w: &WatermelonSpec) -> Result<ContactPolynomial> {
    let n = w.n();
    let (t, y) = (w.t(), w.y());
    let mut matrix = Vec::with_capacity(n);
    for i in 0..n as i64 {
        let mut row = Vec::with_capacity(n);
        for j in 0..n as i64 {
            row.push(z1_exact(t + 2 * j, 0, y + 2 * i)?);
        }
        matrix.push(row);
    }
    det_polynomial(&matrix)
        .div_exact_kappa_power(n - 1)?
        .check_counting()
}

/// Contact polynomial of the zero-deviation watermelon (`y = 0`, `t = 2r`, `r >= 1`)
/// as a Hankel determinant: entry `(i, j)` is the single wall-to-wall excursion of
/// length `2(r + i + j)`, and the surplus factor `kappa^(2n-2)` is divided out.
pub fn z_det_deviation0(n: usize, r: i64) -> Result<ContactPolynomial> {
    if n < 1 || r < 1 {
        return Err(Error::InvalidConfig(format!(
            "zero-deviation determinant needs n >= 1 and r >= 1, got n = {n}, r = {r}"
        )));
    }
    let mut matrix = Vec::with_capacity(n);
    for i in 0..n as i64 {
        let mut row = Vec::with_capacity(n);
        for j in 0..n as i64 {
            row.push(z1_exact(2 * (r + i + j), 0, 0)?);
        }
        matrix.push(row);
    }
    det_polynomial(&matrix)
        .div_exact_kappa_power(2 * n - 2)?
        .check_counting()
}

/// Dodgson-style condensation for the zero-deviation polynomials: checks
///
/// ```text
/// Z[n](2r) * Z[n-2](2r+4)  ==  Z[n-1](2r+4) * Z[n-1](2r) - Z[n-1](2r+2)^2
/// ```
///
/// for `n >= 2`, `r >= 1`, where `Z[k]` is the `k`-walker zero-deviation polynomial
/// and the zero-walker convention is `Z[0] = kappa^2` (both endpoint contacts of a
/// phantom walk of length zero on the wall). This two-dimensional recurrence pins each
/// polynomial against its neighbors and makes a sharp cross-check of the Hankel route.
pub fn condensation_identity_holds(n: usize, r: i64) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidConfig(format!(
            "condensation needs n >= 2, got n = {n}"
        )));
    }
    let z = |walkers: usize, half_len: i64| -> Result<ContactPolynomial> {
        if walkers == 0 {
            Ok(ContactPolynomial::monomial(2, BigInt::one()))
        } else {
            z_det_deviation0(walkers, half_len)
        }
    };
    let lhs = z(n, r)? * z(n - 2, r + 2)?;
    let mid = z(n - 1, r + 1)?;
    let rhs = z(n - 1, r + 2)? * z(n - 1, r)? - mid.clone() * mid;
    Ok(lhs == rhs)
}

/// Number of watermelon families whose lowest walk touches the wall exactly `l` times
/// after the start (so `l + 1` contacts in total, the forced start included), as an
/// integer determinant. Rows below the last count plain non-colliding walkers; the
/// last row pins the lowest walk's final return at `l` prescribed contacts.
pub fn contact_count_det(w: &WatermelonSpec, l: i64) -> Result<BigInt> {
    if l < 0 {
        return Err(Error::InvalidConfig(format!(
            "contact count l must be >= 0, got {l}"
        )));
    }
    let n = w.n() as i64;
    let (t, y) = (w.t(), w.y());
    let half = (t + y) / 2;
    let mut matrix = Vec::with_capacity(w.n());
    for r in 0..n {
        let mut row = Vec::with_capacity(w.n());
        for c in 0..n {
            let entry = if r < n - 1 {
                binom_nat(t + 2 * c, half + r + c) - binom_nat(t + 2 * c, half + r + c + 1)
            } else {
                binom_nat(t + 2 * c - l - 1, half + n + c - 2)
                    - binom_nat(t + 2 * c - l - 1, half + n + c - 1)
            };
            row.push(ContactPolynomial::monomial(0, entry));
        }
        matrix.push(row);
    }
    let det = det_polynomial(&matrix);
    let count = det.coeff(0);
    if count.is_negative() {
        return Err(Error::NotInteger {
            value: format!("negative family count {count}"),
        });
    }
    Ok(count)
}

/// The same count as [`contact_count_det`], via the single-sum closed form obtained by
/// evaluating that determinant: a rational product prefactor times an alternating sum
/// over `k`, with the convention that a factorial reciprocal at a negative argument is
/// zero. The product is checked to be a nonnegative integer.
pub fn contact_count_formula(w: &WatermelonSpec, l: i64) -> Result<BigInt> {
    if l < 0 {
        return Err(Error::InvalidConfig(format!(
            "contact count l must be >= 0, got {l}"
        )));
    }
    let n = w.n() as i64;
    let (t, y) = (w.t(), w.y());
    let up = (t + y) / 2;
    let down = (t - y) / 2;
    let mut f = FactorialTable::with_max((t + 2 * n + y + l) as u64);

    let mut prefactor = BigRational::one();
    for i in 0..n {
        prefactor *= BigRational::new(
            f.fact((t + 2 * i) as u64) * f.fact(i as u64),
            f.fact((up + n + i - 1) as u64) * f.fact((down + i) as u64),
        );
    }
    for i in 0..n - 1 {
        prefactor *= BigRational::new(
            f.fact((y + n + i - 1) as u64).clone(),
            f.fact((y + 2 * i) as u64).clone(),
        );
    }

    let mut sum = BigRational::zero();
    for k in 0..n {
        // reciprocal of the truncating factorial first: if its argument is negative
        // the whole term vanishes and the remaining factorials need not be formed
        let trunc = f.recip_fact(down + k - n - l + 1);
        if trunc.is_zero() {
            continue;
        }
        let numer = f.fact((t + 2 * k - l - 1) as u64) * f.fact((down + k) as u64);
        let denom = f.fact((t + 2 * k) as u64) * f.fact(k as u64) * f.fact((n - k - 1) as u64);
        let term = BigRational::new(numer, denom) * trunc;
        if (n - k - 1) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let count = prefactor * sum * BigRational::from(BigInt::from(y + 2 * n + l - 2));
    if !count.is_integer() {
        return Err(Error::NotInteger {
            value: count.to_string(),
        });
    }
    let count = count.to_integer();
    if count.is_negative() {
        return Err(Error::NotInteger {
            value: format!("negative family count {count}"),
        });
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_contact_polynomial;

    fn poly(terms: &[(usize, i64)]) -> ContactPolynomial {
        ContactPolynomial::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    fn watermelon_grid(max_n: usize, max_t: i64, max_y: i64) -> Vec<WatermelonSpec> {
        let mut grid = Vec::new();
        for n in 1..=max_n {
            for y in 0..=max_y {
                let mut t = if y > 0 { y } else { 2 };
                while t <= max_t {
                    grid.push(WatermelonSpec::new(n, t, y).unwrap());
                    t += 2;
                }
            }
        }
        grid
    }

    #[test]
    fn determinant_on_known_matrices() {
        // 2x2 with polynomial entries
        let m = vec![
            vec![poly(&[(0, 1), (1, 1)]), poly(&[(1, 2)])],
            vec![poly(&[(0, 3)]), poly(&[(2, 1)])],
        ];
        assert_eq!(det_polynomial(&m), poly(&[(2, 1), (3, 1), (1, -6)]));
        // singular integer matrix, sizes on both sides of the Laplace/elimination cut
        for size in [3usize, 5, 6] {
            let m: Vec<Vec<ContactPolynomial>> = (0..size)
                .map(|i| {
                    (0..size)
                        .map(|j| ContactPolynomial::monomial(0, BigInt::from((i + j) as i64)))
                        .collect()
                })
                .collect();
            assert!(det_polynomial(&m).is_zero(), "size {size}");
        }
    }

    #[test]
    fn elimination_agrees_with_laplace() {
        // pseudo-random small polynomial matrices, deterministic seed
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 7) as i64 - 3
        };
        for _ in 0..5 {
            let m: Vec<Vec<ContactPolynomial>> = (0..4)
                .map(|_| {
                    (0..4)
                        .map(|_| poly(&[(0, next()), (1, next()), (2, next())]))
                        .collect()
                })
                .collect();
            assert_eq!(det_laplace(&m), det_bareiss(m.clone()));
        }
    }

    #[test]
    fn general_determinant_matches_oracle() {
        for w in watermelon_grid(3, 8, 3) {
            let spec = w.walker_spec();
            assert_eq!(
                z_det_general(&spec).unwrap(),
                enumerate_contact_polynomial(&spec),
                "n={} t={} y={}",
                w.n(),
                w.t(),
                w.y()
            );
        }
        // a non-watermelon configuration: spread starts, spread ends
        let spec = WalkerSpec::new(6, vec![0, 4], vec![2, 6]).unwrap();
        assert_eq!(
            z_det_general(&spec).unwrap(),
            enumerate_contact_polynomial(&spec)
        );
    }

    #[test]
    fn watermelon_determinant_matches_oracle() {
        for w in watermelon_grid(3, 8, 3) {
            assert_eq!(
                z_det_watermelon(&w).unwrap(),
                enumerate_contact_polynomial(&w.walker_spec()),
                "n={} t={} y={}",
                w.n(),
                w.t(),
                w.y()
            );
        }
    }

    #[test]
    fn hankel_determinant_matches_oracle() {
        for n in 1..=3usize {
            for r in 1..=4i64 {
                let w = WatermelonSpec::new(n, 2 * r, 0).unwrap();
                assert_eq!(
                    z_det_deviation0(n, r).unwrap(),
                    enumerate_contact_polynomial(&w.walker_spec()),
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn two_walker_excursion_value() {
        assert_eq!(z_det_deviation0(2, 2).unwrap(), poly(&[(2, 1), (3, 2)]));
    }

    #[test]
    fn condensation_small() {
        for n in 2..=3usize {
            for r in 1..=3i64 {
                assert!(condensation_identity_holds(n, r).unwrap(), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn contact_counts_match_oracle_tally() {
        for w in watermelon_grid(3, 8, 2) {
            let z = enumerate_contact_polynomial(&w.walker_spec());
            for l in 0..=(w.t() - w.y()) / 2 + 1 {
                let expected = z.coeff((l + 1) as usize);
                assert_eq!(
                    contact_count_det(&w, l).unwrap(),
                    expected,
                    "det route n={} t={} y={} l={l}",
                    w.n(),
                    w.t(),
                    w.y()
                );
                assert_eq!(
                    contact_count_formula(&w, l).unwrap(),
                    expected,
                    "formula route n={} t={} y={} l={l}",
                    w.n(),
                    w.t(),
                    w.y()
                );
            }
        }
    }

    #[test]
    fn contact_counts_assemble_partition_function() {
        for w in watermelon_grid(3, 8, 2) {
            let mut assembled = ContactPolynomial::zero();
            for l in 0..=(w.t() - w.y()) / 2 {
                assembled.add_term((l + 1) as usize, contact_count_formula(&w, l).unwrap());
            }
            assert_eq!(
                assembled,
                enumerate_contact_polynomial(&w.walker_spec()),
                "n={} t={} y={}",
                w.n(),
                w.t(),
                w.y()
            );
        }
    }

    #[test]
    fn known_contact_counts() {
        let w = WatermelonSpec::new(2, 4, 0).unwrap();
        assert_eq!(contact_count_formula(&w, 1).unwrap(), BigInt::from(1));
        assert_eq!(contact_count_formula(&w, 2).unwrap(), BigInt::from(2));
        assert_eq!(contact_count_formula(&w, 3).unwrap(), BigInt::zero());
    }
}
