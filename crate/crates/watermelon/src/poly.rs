//! The contact polynomial: partition functions as polynomials in the wall fugacity.
//!
//! Every exact route in this crate produces the same object: the generating polynomial
//! `Z(kappa) = sum_c N_c kappa^c`, where `N_c` counts walker families whose lowest walk
//! touches the wall exactly `c` times (both endpoints included). The coefficients are
//! therefore nonnegative integers, `Z(1)` is the total number of families, and the mean
//! number of contacts at fugacity `kappa` is `kappa Z'(kappa) / Z(kappa)`.
//!
//! The representation is a sparse exponent -> coefficient map with arbitrary-precision
//! integer coefficients. Sparseness matters less for single partition functions (their
//! support is an interval of exponents) than for determinant intermediates, where entry
//! products shift supports around before massive cancellation.
//!
//! Intermediate results inside determinant expansions and condensation identities are
//! *signed*, so the type is a full commutative ring (`+`, `-`, `*`, negation). The
//! nonnegativity of final coefficients is a property of the model, not an invariant of
//! the type; routes assert it at their boundaries via [`ContactPolynomial::check_counting`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A sparse polynomial in the contact fugacity with exact integer coefficients.
///
/// Zero coefficients are never stored; the zero polynomial is the empty map.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ContactPolynomial {
    coeffs: BTreeMap<usize, BigInt>,
}

impl ContactPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        ContactPolynomial::default()
    }

    /// The polynomial `c * kappa^exp`.
    pub fn monomial(exp: usize, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        ContactPolynomial { coeffs }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I: IntoIterator<Item = (usize, BigInt)>>(terms: I) -> Self {
        let mut p = ContactPolynomial::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c * kappa^exp` in place.
    pub fn add_term(&mut self, exp: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of `kappa^exp` (zero if absent).
    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Largest exponent with nonzero coefficient, if any.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Smallest exponent with nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    /// Multiplies every coefficient by an integer scalar.
    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return ContactPolynomial::zero();
        }
        ContactPolynomial {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Exact evaluation at a rational fugacity (Horner over the sparse support).
    pub fn eval(&self, kappa: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut prev_exp: Option<usize> = None;
        // descending exponents; between consecutive stored exponents multiply by the
        // appropriate power of kappa
        for (e, c) in self.coeffs.iter().rev() {
            if let Some(p) = prev_exp {
                acc *= pow_rational(kappa, p - e);
            }
            acc += BigRational::from(c.clone());
            prev_exp = Some(*e);
        }
        if let Some(p) = prev_exp {
            acc *= pow_rational(kappa, p);
        }
        acc
    }

    /// Exact evaluation at an integer fugacity.
    pub fn eval_int(&self, kappa: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut prev_exp: Option<usize> = None;
        for (e, c) in self.coeffs.iter().rev() {
            if let Some(p) = prev_exp {
                acc *= num::pow::pow(kappa.clone(), p - e);
            }
            acc += c;
            prev_exp = Some(*e);
        }
        if let Some(p) = prev_exp {
            acc *= num::pow::pow(kappa.clone(), p);
        }
        acc
    }

    /// Sum of all coefficients, i.e. the evaluation at fugacity 1. For a counting
    /// polynomial this is the total number of walker families.
    pub fn total_count(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// The polynomial `kappa * dZ/dkappa`, whose value at a fugacity, divided by the
    /// partition function there, is the mean number of wall contacts.
    pub fn kappa_times_derivative(&self) -> Self {
        ContactPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (*e, c * BigInt::from(*e)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Divides by `kappa^power`, failing unless the division is exact (i.e. every
    /// stored exponent is at least `power`). The determinant routes rely on this to
    /// peel off the fugacity power contributed by forced wall contacts.
    pub fn div_exact_kappa_power(&self, power: usize) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (e, c) in &self.coeffs {
            if *e < power {
                return Err(Error::NotDivisible { power });
            }
            coeffs.insert(e - power, c.clone());
        }
        Ok(ContactPolynomial { coeffs })
    }

    /// Exact polynomial division: returns `self / divisor` when the divisor divides
    /// `self` in the integer-coefficient polynomial ring, `None` otherwise (including
    /// division by zero). Long division from the top; because a factorization over the
    /// integers forces every intermediate leading-coefficient division to be exact, any
    /// inexact step or nonzero remainder proves indivisibility.
    ///
    /// The fraction-free determinant eliminates with products of earlier pivots that
    /// are guaranteed divisors; this method supplies (and checks) those divisions.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(ContactPolynomial::zero());
        }
        let (d_deg, d_lead) = divisor.coeffs.iter().next_back().map(|(e, c)| (*e, c))?;
        let mut rem = self.clone();
        let mut quot = ContactPolynomial::zero();
        while let Some((r_deg, r_lead)) =
            rem.coeffs.iter().next_back().map(|(e, c)| (*e, c.clone()))
        {
            if r_deg < d_deg {
                return None;
            }
            let (q, q_rem) = num::Integer::div_rem(&r_lead, d_lead);
            if !q_rem.is_zero() {
                return None;
            }
            let shift = r_deg - d_deg;
            quot.add_term(shift, q.clone());
            for (e, c) in &divisor.coeffs {
                rem.add_term(e + shift, -(c * &q));
            }
        }
        Some(quot)
    }

    /// Verifies the counting-polynomial contract: all coefficients nonnegative.
    /// Returns the polynomial itself for call chaining.
    pub fn check_counting(self) -> Result<Self> {
        if let Some((e, c)) = self.coeffs.iter().find(|(_, c)| c.is_negative()) {
            return Err(Error::NotInteger {
                value: format!("negative count {c} at kappa^{e}"),
            });
        }
        Ok(self)
    }

    /// Builds a counting polynomial from exact rational coefficients, failing if any
    /// coefficient is non-integral. The closed-form routes produce coefficients as
    /// rational prefactor times integer sums; integrality of the product is part of
    /// their correctness and is checked here rather than assumed.
    pub fn from_rational_coeffs<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, BigRational)>,
    {
        let mut p = ContactPolynomial::zero();
        for (e, c) in terms {
            if !c.is_integer() {
                return Err(Error::NotInteger {
                    value: c.to_string(),
                });
            }
            p.add_term(e, c.to_integer());
        }
        Ok(p)
    }
}

fn pow_rational(x: &BigRational, n: usize) -> BigRational {
    if n == 0 {
        return BigRational::one();
    }
    num::pow::pow(x.clone(), n)
}

impl Add for ContactPolynomial {
    type Output = ContactPolynomial;
    fn add(mut self, rhs: ContactPolynomial) -> ContactPolynomial {
        self += rhs;
        self
    }
}

impl AddAssign for ContactPolynomial {
    fn add_assign(&mut self, rhs: ContactPolynomial) {
        for (e, c) in rhs.coeffs {
            self.add_term(e, c);
        }
    }
}

impl Sub for ContactPolynomial {
    type Output = ContactPolynomial;
    fn sub(mut self, rhs: ContactPolynomial) -> ContactPolynomial {
        self -= rhs;
        self
    }
}

impl SubAssign for ContactPolynomial {
    fn sub_assign(&mut self, rhs: ContactPolynomial) {
        for (e, c) in rhs.coeffs {
            self.add_term(e, -c);
        }
    }
}

impl Neg for ContactPolynomial {
    type Output = ContactPolynomial;
    fn neg(self) -> ContactPolynomial {
        ContactPolynomial {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for ContactPolynomial {
    type Output = ContactPolynomial;
    fn mul(self, rhs: ContactPolynomial) -> ContactPolynomial {
        &self * &rhs
    }
}

impl Mul for &ContactPolynomial {
    type Output = ContactPolynomial;
    fn mul(self, rhs: &ContactPolynomial) -> ContactPolynomial {
        let mut out = ContactPolynomial::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl MulAssign<&ContactPolynomial> for ContactPolynomial {
    fn mul_assign(&mut self, rhs: &ContactPolynomial) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for ContactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "k")?,
                (1, false) => write!(f, "{mag}*k")?,
                (_, true) => write!(f, "k^{e}")?,
                (_, false) => write!(f, "{mag}*k^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(usize, i64)]) -> ContactPolynomial {
        ContactPolynomial::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn zero_handling() {
        assert!(ContactPolynomial::zero().is_zero());
        assert!(poly(&[(2, 3), (2, -3)]).is_zero());
        assert_eq!(poly(&[(0, 0)]), ContactPolynomial::zero());
    }

    #[test]
    fn ring_ops() {
        let a = poly(&[(2, 1), (3, 2)]);
        let b = poly(&[(0, 1), (1, -1)]);
        assert_eq!(
            a.clone() + b.clone(),
            poly(&[(0, 1), (1, -1), (2, 1), (3, 2)])
        );
        assert_eq!(a.clone() - a.clone(), ContactPolynomial::zero());
        // (k^2 + 2k^3)(1 - k) = k^2 + k^3 - 2k^4
        assert_eq!(&a * &b, poly(&[(2, 1), (3, 1), (4, -2)]));
        assert_eq!(-a.clone(), poly(&[(2, -1), (3, -2)]));
    }

    #[test]
    fn eval_matches_horner_by_hand() {
        let p = poly(&[(2, 1), (3, 2)]);
        let k = BigRational::new(BigInt::from(3), BigInt::from(2));
        // (3/2)^2 + 2 (3/2)^3 = 9/4 + 27/4 = 9
        assert_eq!(p.eval(&k), BigRational::from(BigInt::from(9)));
        assert_eq!(p.eval_int(&BigInt::from(2)), BigInt::from(20));
        assert_eq!(p.total_count(), BigInt::from(3));
    }

    #[test]
    fn derivative_weighting() {
        let p = poly(&[(2, 1), (3, 2)]);
        assert_eq!(p.kappa_times_derivative(), poly(&[(2, 2), (3, 6)]));
    }

    #[test]
    fn exact_kappa_division() {
        let p = poly(&[(2, 1), (3, 2)]);
        assert_eq!(p.div_exact_kappa_power(2).unwrap(), poly(&[(0, 1), (1, 2)]));
        assert!(matches!(
            p.div_exact_kappa_power(3),
            Err(Error::NotDivisible { power: 3 })
        ));
    }

    #[test]
    fn rational_assembly_rejects_fractions() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert!(ContactPolynomial::from_rational_coeffs(vec![(1, half)]).is_err());
        let two = BigRational::from(BigInt::from(2));
        let p = ContactPolynomial::from_rational_coeffs(vec![(1, two)]).unwrap();
        assert_eq!(p, poly(&[(1, 2)]));
    }

    #[test]
    fn display_format() {
        assert_eq!(poly(&[(2, 1), (3, 2)]).to_string(), "k^2 + 2*k^3");
        assert_eq!(poly(&[(0, 1), (1, -1)]).to_string(), "1 - k");
        assert_eq!(ContactPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = poly(&[(0, 1), (1, 2), (2, -3)]);
        let b = poly(&[(0, -2), (1, 5), (3, 7)]);
        let prod = a.clone() * b.clone();
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        // indivisible: remainder and inexact leading coefficient respectively
        assert_eq!((prod.clone() + poly(&[(0, 1)])).div_exact(&a), None);
        assert_eq!(poly(&[(2, 3)]).div_exact(&poly(&[(1, 2)])), None);
        // zero dividend and zero divisor
        assert_eq!(
            ContactPolynomial::zero().div_exact(&a),
            Some(ContactPolynomial::zero())
        );
        assert_eq!(a.div_exact(&ContactPolynomial::zero()), None);
    }
}
