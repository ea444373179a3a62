//! Contact statistics: the mean number of wall contacts and its closed forms.
//!
//! With `Z(kappa) = sum_c N_c kappa^c` the mean contact number at fugacity `kappa` is
//! the logarithmic derivative `kappa Z'(kappa) / Z(kappa)`. The numerator is an exact
//! polynomial operation; the quotient is an exact rational for rational fugacity.
//!
//! Two closed forms exist and are implemented independently of the polynomial route:
//!
//! * [`mean_kappa1`] — at fugacity 1 (uniform measure over families) the mean is a
//!   single rational expression in `n`, `t`, `y`;
//! * [`mean_kappa2_even`] — at the critical fugacity 2 with zero deviation the mean
//!   involves one central-binomial ratio.
//!
//! Both are checked against `kappa Z' / Z` by the tests.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::combin::binom_nat;
use crate::error::{Error, Result};
use crate::poly::ContactPolynomial;

/// Exact mean number of contacts under the fugacity-`kappa` weighting:
/// `kappa Z'(kappa) / Z(kappa)`. Fails with [`Error::ZeroPartition`] when `Z` vanishes
/// at `kappa` (e.g. at `kappa = 0`, where no weight remains).
pub fn normalized_mean(z: &ContactPolynomial, kappa: &BigRational) -> Result<BigRational> {
    let denom = z.eval(kappa);
    if denom.is_zero() {
        return Err(Error::ZeroPartition {
            kappa: kappa.to_string(),
        });
    }
    Ok(z.kappa_times_derivative().eval(kappa) / denom)
}

/// Closed form for the mean contact number at fugacity 1:
///
/// ```text
/// 1 + n (y + 2n + 1) (t - y) / ((y + n) (t + y + 4n))
/// ```
pub fn mean_kappa1(n: usize, t: i64, y: i64) -> BigRational {
    let n = n as i64;
    BigRational::one()
        + BigRational::new(
            BigInt::from(n * (y + 2 * n + 1) * (t - y)),
            BigInt::from((y + n) * (t + y + 4 * n)),
        )
}

/// Closed form for the mean contact number at the critical fugacity 2, zero deviation
/// (`y = 0`, `t = 2r`):
///
/// ```text
/// 2^(2r-1) n binom(2n, n) / binom(2r + 2n - 2, r + n - 1)  -  2 (n - 1)
/// ```
pub fn mean_kappa2_even(n: usize, r: i64) -> BigRational {
    let n = n as i64;
    let pow = BigInt::one() << (2 * r - 1) as usize;
    BigRational::new(
        pow * BigInt::from(n) * binom_nat(2 * n, n),
        binom_nat(2 * r + 2 * n - 2, r + n - 1),
    ) - BigRational::from(BigInt::from(2 * (n - 1)))
}
