//! Leading-order asymptotics of the partition function and of the mean contact
//! number for long walks.
//!
//! The partition function exhibits a phase transition in the contact fugacity at
//! `kappa = 2`:
//!
//! * **subcritical** (`kappa < 2`): `Z ~ (2^n)^t t^(-n(2n+1)/2) A`, the same
//!   power-law decay as the contact-free count — wall attraction only shifts the
//!   constant `A`;
//! * **critical** (`kappa = 2`): the exponent drops to `n(2n-1)/2` — contacts
//!   become marginally relevant;
//! * **supercritical** (`kappa > 2`): the lowest walker binds to the wall and the
//!   growth rate itself increases to `2^(n-1) kappa / sqrt(kappa - 1)`, with
//!   exponent `(n-1)(2n-1)/2` (one walker effectively leaves the entropic count).
//!
//! [`z_asym_leading`] evaluates the leading term in each regime;
//! [`mean_asym`] gives the matching asymptotics of the mean contact number
//! (constant, `sqrt(t)`, and linear-in-`t` behaviour respectively); and
//! [`convergence_report`] tabulates `ln Z` exact-vs-asymptotic so the `1 + O(1/t)`
//! convergence is observable. Exact reference values come from the closed product
//! formulas at fugacity 1 and 2 and from the double-sum route elsewhere, all in
//! exact arithmetic, compared in log space.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive};
use std::f64::consts::PI;

use crate::combin::{binom_gen, binom_nat, factorial, ln_bigint, ln_rational};
use crate::error::{Error, Result};
use crate::formulas::{z_double_sum, z_kappa1, z_kappa2};
use crate::model::WatermelonSpec;

/// Phase of the wall-interaction model as a function of the contact fugacity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `kappa < 2`: contacts are exponentially rare; entropy wins.
    Subcritical,
    /// `kappa = 2`: the transition point.
    Critical,
    /// `kappa > 2`: the lowest walker is bound to the wall.
    Supercritical,
}

impl Regime {
    /// Classify a fugacity. Fails unless `kappa` is finite and positive.
    pub fn classify(kappa: f64) -> Result<Regime> {
        if !kappa.is_finite() || kappa <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "fugacity must be finite and positive, got {kappa}"
            )));
        }
        Ok(if kappa < 2.0 {
            Regime::Subcritical
        } else if kappa == 2.0 {
            Regime::Critical
        } else {
            Regime::Supercritical
        })
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::Subcritical => "subcritical",
            Regime::Critical => "critical",
            Regime::Supercritical => "supercritical",
        })
    }
}

/// Leading-order description `Z ~ growth_rate^t * t^(-critical_exponent) * constant`.
#[derive(Debug, Clone)]
pub struct AsymptoticEstimate {
    /// Phase the fugacity falls in.
    pub regime: Regime,
    /// Per-step growth factor.
    pub growth_rate: f64,
    /// Power-law correction exponent (the power of `1/t`).
    pub critical_exponent: f64,
    /// Multiplicative constant of the leading term.
    pub constant: f64,
    /// Natural log of the leading-order value at the requested length.
    pub ln_value: f64,
    /// The leading-order value itself; may overflow to infinity for long walks —
    /// compare in log space via `ln_value` instead.
    pub value: f64,
}

fn check_asym_inputs(n: usize, y: i64, t: i64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidConfig(
            "at least one walker is required".into(),
        ));
    }
    if y < 0 {
        return Err(Error::InvalidConfig(format!(
            "deviation must be non-negative, got {y}"
        )));
    }
    if t < 1 {
        return Err(Error::InvalidConfig(format!(
            "walk length must be at least 1, got {t}"
        )));
    }
    Ok(())
}

/// `ln` of `prod_{i=0}^{upper} i! (y + n + i - 1)! / (y + 2i)!`, the constant that
/// carries the deviation dependence of the leading term (empty product when
/// `upper < 0`).
fn ln_deviation_product(n: i64, y: i64, upper: i64) -> f64 {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..=upper {
        num *= factorial(i as u64) * factorial((y + n + i - 1) as u64);
        den *= factorial((y + 2 * i) as u64);
    }
    ln_rational(&BigRational::new(num, den))
}

/// The fugacity polynomial part of the subcritical constant:
/// `sum_{h=0}^{n} binom(n,h) binom(y+h-2,h) / binom(2n,h) * (2-kappa)^(h-2n)`,
/// optionally with each term weighted by `2n - h` (used by the mean).
fn subcritical_sum(n: i64, y: i64, kappa: f64, weight_by_depth: bool) -> f64 {
    let mut sum = 0.0f64;
    for h in 0..=n {
        let ratio = BigRational::new(
            binom_nat(n, h) * binom_gen(y + h - 2, h as u64),
            binom_nat(2 * n, h),
        );
        let mut term = ratio.to_f64().unwrap() * (2.0 - kappa).powi((h - 2 * n) as i32);
        if weight_by_depth {
            term *= (2 * n - h) as f64;
        }
        sum += term;
    }
    sum
}

/// Leading asymptotic term of the partition function for `n` walkers with
/// deviation `y` at fugacity `kappa`, evaluated at length `t`.
///
/// The estimate is the smooth function of `t` that the partition function
/// approaches (relative error `O(1/t)`) along lengths of the correct parity.
pub fn z_asym_leading(n: usize, y: i64, kappa: f64, t: i64) -> Result<AsymptoticEstimate> {
    check_asym_inputs(n, y, t)?;
    let regime = Regime::classify(kappa)?;
    let n = n as i64;
    let nf = n as f64;
    let (ln_growth, critical_exponent, ln_constant) = match regime {
        Regime::Subcritical => {
            let sum = subcritical_sum(n, y, kappa, false);
            if sum.is_nan() || sum <= 0.0 {
                return Err(Error::Numerical(format!(
                    "subcritical constant evaluated to {sum} at kappa = {kappa}"
                )));
            }
            let ln_constant = (2.0 * nf * nf - nf / 2.0 + 1.0) * 2f64.ln() + kappa.ln()
                - nf / 2.0 * PI.ln()
                + ln_bigint(&factorial((2 * n - 1) as u64))
                + ln_deviation_product(n, y, n - 2)
                + sum.ln();
            (nf * 2f64.ln(), nf * (2.0 * nf + 1.0) / 2.0, ln_constant)
        }
        Regime::Critical => {
            let ln_constant = (2.0 * nf * nf - 1.5 * nf + 1.0) * 2f64.ln() - nf / 2.0 * PI.ln()
                + ln_deviation_product(n, y, n - 1);
            (nf * 2f64.ln(), nf * (2.0 * nf - 1.0) / 2.0, ln_constant)
        }
        Regime::Supercritical => {
            let ln_constant = ((n - 1) * (4 * n - 5)) as f64 / 2.0 * 2f64.ln()
                + kappa.ln()
                + (2.0 * nf - 1.0) * (kappa - 2.0).ln()
                - (nf - 1.0) / 2.0 * PI.ln()
                - (y as f64 / 2.0 + 2.0 * nf - 1.0) * (kappa - 1.0).ln()
                + ln_deviation_product(n, y, n - 2);
            (
                (nf - 1.0) * 2f64.ln() + kappa.ln() - 0.5 * (kappa - 1.0).ln(),
                (nf - 1.0) * (2.0 * nf - 1.0) / 2.0,
                ln_constant,
            )
        }
    };
    let ln_value = t as f64 * ln_growth - critical_exponent * (t as f64).ln() + ln_constant;
    Ok(AsymptoticEstimate {
        regime,
        growth_rate: ln_growth.exp(),
        critical_exponent,
        constant: ln_constant.exp(),
        ln_value,
        value: ln_value.exp(),
    })
}

/// Leading asymptotics of the mean contact number at length `t`:
///
/// * subcritical — a constant (independent of `t`);
/// * critical — `2^(1/2 - 2n) n binom(2n, n) sqrt(pi t) - 2n - y + 2`;
/// * supercritical — linear growth
///   `(kappa-2)/(kappa-1) * t/2 + kappa((2-kappa)y + 4n - 2) / (2(kappa-1)(kappa-2)) + 1`.
pub fn mean_asym(n: usize, y: i64, kappa: f64, t: i64) -> Result<f64> {
    check_asym_inputs(n, y, t)?;
    let regime = Regime::classify(kappa)?;
    let n = n as i64;
    let nf = n as f64;
    Ok(match regime {
        Regime::Subcritical => {
            let num = subcritical_sum(n, y, kappa, true) / (2.0 - kappa);
            let den = subcritical_sum(n, y, kappa, false);
            1.0 + kappa * num / den
        }
        Regime::Critical => {
            let central = binom_nat(2 * n, n).to_f64().unwrap();
            (0.5 - 2.0 * nf).exp2() * nf * central * (PI * t as f64).sqrt() - 2.0 * nf - y as f64
                + 2.0
        }
        Regime::Supercritical => {
            (kappa - 2.0) / (kappa - 1.0) * t as f64 / 2.0
                + kappa * ((2.0 - kappa) * y as f64 + 4.0 * nf - 2.0)
                    / (2.0 * (kappa - 1.0) * (kappa - 2.0))
                + 1.0
        }
    })
}

/// Exact `ln Z` at a rational fugacity, for cross-checking the asymptotic routes.
///
/// Uses the closed product values at fugacity 1 and 2 and the closed double-sum
/// polynomial elsewhere; all arithmetic is exact until the final logarithm.
pub fn ln_z_exact(w: &WatermelonSpec, kappa: &BigRational) -> Result<f64> {
    if !kappa.is_positive() {
        return Err(Error::OutsideDomain {
            kappa: kappa.to_f64().unwrap_or(f64::NAN),
            domain: "positive fugacity",
        });
    }
    if kappa.is_one() {
        return Ok(ln_bigint(&z_kappa1(w)?));
    }
    if *kappa == BigRational::from(BigInt::from(2)) {
        return Ok(ln_bigint(&z_kappa2(w)?));
    }
    let value = z_double_sum(w)?.eval(kappa);
    if !value.is_positive() {
        return Err(Error::Numerical(format!(
            "partition function evaluated to {value} at kappa = {kappa}"
        )));
    }
    Ok(ln_rational(&value))
}

/// One length in a convergence table: exact and asymptotic `ln Z` and the
/// relative gap `|Z / Z_asym - 1|`.
#[derive(Debug, Clone)]
pub struct ConvergenceRow {
    /// Walk length.
    pub t: i64,
    /// Exact `ln Z` (exact arithmetic, log taken last).
    pub ln_exact: f64,
    /// Leading-order asymptotic `ln Z`.
    pub ln_asym: f64,
    /// `|exp(ln_exact - ln_asym) - 1|`; decays like `1/t`.
    pub gap: f64,
}

/// Tabulate exact-vs-asymptotic `ln Z` at each requested length. Lengths must be
/// admissible for the deviation (`t >= max(y, 1)`, `t - y` even).
pub fn convergence_report(
    n: usize,
    y: i64,
    kappa: &BigRational,
    lengths: &[i64],
) -> Result<Vec<ConvergenceRow>> {
    let kappa_f = kappa.to_f64().ok_or_else(|| {
        Error::InvalidConfig(format!("fugacity {kappa} is not representable as f64"))
    })?;
    let mut rows = Vec::with_capacity(lengths.len());
    for &t in lengths {
        let w = WatermelonSpec::new(n, t, y)?;
        let ln_exact = ln_z_exact(&w, kappa)?;
        let est = z_asym_leading(n, y, kappa_f, t)?;
        rows.push(ConvergenceRow {
            t,
            ln_exact,
            ln_asym: est.ln_value,
            gap: ((ln_exact - est.ln_value).exp() - 1.0).abs(),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_contact_polynomial;
    use crate::stats::{mean_kappa1, mean_kappa2_even, normalized_mean};

    fn rational(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn regime_classification() {
        assert_eq!(Regime::classify(0.5).unwrap(), Regime::Subcritical);
        assert_eq!(Regime::classify(2.0).unwrap(), Regime::Critical);
        assert_eq!(Regime::classify(2.5).unwrap(), Regime::Supercritical);
        assert!(Regime::classify(0.0).is_err());
        assert!(Regime::classify(-1.0).is_err());
        assert!(Regime::classify(f64::NAN).is_err());
        assert!(Regime::classify(f64::INFINITY).is_err());
    }

    #[test]
    fn single_walker_closed_constants() {
        // one walker, uniform measure: Z ~ 2^t t^(-3/2) * 2^(3/2) / sqrt(pi)
        let est = z_asym_leading(1, 0, 1.0, 100).unwrap();
        assert_eq!(est.regime, Regime::Subcritical);
        assert!((est.growth_rate - 2.0).abs() < 1e-12);
        assert!((est.critical_exponent - 1.5).abs() < 1e-12);
        let expected = 2f64.powf(1.5) / PI.sqrt();
        assert!(
            (est.constant - expected).abs() < 1e-12 * expected,
            "constant {} vs {expected}",
            est.constant
        );

        // one walker at fugacity 3: Z ~ (3/sqrt 2)^t * 3/2
        let est = z_asym_leading(1, 0, 3.0, 100).unwrap();
        assert_eq!(est.regime, Regime::Supercritical);
        assert!((est.growth_rate - 3.0 / 2f64.sqrt()).abs() < 1e-12);
        assert!((est.critical_exponent - 0.0).abs() < 1e-12);
        assert!((est.constant - 1.5).abs() < 1e-12);
    }

    #[test]
    fn critical_constant_matches_central_binomial_growth() {
        // one walker at the critical fugacity: the exact value is twice a central
        // binomial coefficient, whose Stirling approximation fixes the constant
        let est = z_asym_leading(1, 0, 2.0, 100).unwrap();
        let expected = 2f64.powf(1.5) / PI.sqrt();
        assert!((est.constant - expected).abs() < 1e-12 * expected);
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(z_asym_leading(0, 0, 1.0, 10).is_err());
        assert!(z_asym_leading(1, -1, 1.0, 10).is_err());
        assert!(z_asym_leading(1, 0, 1.0, 0).is_err());
        assert!(mean_asym(1, 0, -2.0, 10).is_err());
    }

    #[test]
    fn exact_log_route_agrees_with_oracle() {
        for (n, t, y) in [(1usize, 8i64, 0i64), (2, 8, 2), (3, 7, 1)] {
            let w = WatermelonSpec::new(n, t, y).unwrap();
            let z = enumerate_contact_polynomial(&w.walker_spec());
            for kappa in [
                rational(1, 1),
                rational(3, 2),
                rational(2, 1),
                rational(3, 1),
            ] {
                let direct = ln_rational(&z.eval(&kappa));
                let routed = ln_z_exact(&w, &kappa).unwrap();
                assert!(
                    (direct - routed).abs() < 1e-12 * direct.abs().max(1.0),
                    "n={n} t={t} y={y} kappa={kappa}: {routed} vs {direct}"
                );
            }
        }
    }

    #[test]
    fn convergence_gap_shrinks_in_every_regime() {
        for (n, y, kappa) in [
            (1usize, 0i64, rational(1, 1)),
            (1, 0, rational(2, 1)),
            (2, 1, rational(3, 2)),
            (1, 2, rational(3, 1)),
            (2, 0, rational(2, 1)),
        ] {
            // both lengths share the parity of y
            let lengths = [200 + y, 400 + y];
            let rows = convergence_report(n, y, &kappa, &lengths).unwrap();
            if rows[1].gap < 1e-9 {
                // a single bound walker: the leading term equals the exact
                // dominant part, so the error is exponentially small rather than
                // O(1/t) and the shrink ratio is numerically meaningless
                assert!(
                    rows[0].gap < 1e-6,
                    "n={n} y={y} kappa={kappa}: gaps {} -> {}",
                    rows[0].gap,
                    rows[1].gap
                );
            } else {
                // the relative error is O(1/t): doubling t should roughly halve it
                let shrink = rows[0].gap / rows[1].gap;
                assert!(
                    (1.4..=2.6).contains(&shrink),
                    "gap should shrink like 1/t: n={n} y={y} kappa={kappa}: {} -> {} (factor {shrink})",
                    rows[0].gap,
                    rows[1].gap
                );
            }
        }
    }

    #[test]
    fn subcritical_mean_limit_matches_uniform_closed_form() {
        // at fugacity 1 the exact mean has the t -> infinity limit
        // 1 + n (y + 2n + 1) / (y + n), which the asymptotic route must reproduce
        for n in 1..=3usize {
            for y in 0..=3i64 {
                let limit =
                    1.0 + (n as f64) * (y + 2 * n as i64 + 1) as f64 / (y + n as i64) as f64;
                let asym = mean_asym(n, y, 1.0, 1000).unwrap();
                assert!(
                    (asym - limit).abs() < 1e-9 * limit,
                    "n={n} y={y}: {asym} vs {limit}"
                );
                // and the exact closed form approaches it
                let exact = mean_kappa1(n, 1000 + y, y);
                let exact = exact.to_f64().unwrap();
                assert!((exact - limit).abs() < 0.05 * limit, "n={n} y={y}");
            }
        }
    }

    #[test]
    fn supercritical_mean_spot_value() {
        // n=1, y=0, kappa=3: mean ~ t/4 + 5/2
        let m = mean_asym(1, 0, 3.0, 100).unwrap();
        assert!((m - (25.0 + 2.5)).abs() < 1e-12);
    }

    #[test]
    fn critical_mean_tracks_exact_closed_form() {
        // y = 0, fugacity 2: exact closed form vs sqrt(t) asymptotics at growing r
        for r in [50i64, 100, 200] {
            for n in 1..=2usize {
                let exact = mean_kappa2_even(n, r).to_f64().unwrap();
                let asym = mean_asym(n, 0, 2.0, 2 * r).unwrap();
                let gap = (exact / asym - 1.0).abs();
                assert!(
                    gap < 0.2,
                    "n={n} r={r}: exact {exact} asym {asym} gap {gap}"
                );
            }
        }
        let g100 =
            (mean_kappa2_even(1, 100).to_f64().unwrap() / mean_asym(1, 0, 2.0, 200).unwrap() - 1.0)
                .abs();
        let g200 =
            (mean_kappa2_even(1, 200).to_f64().unwrap() / mean_asym(1, 0, 2.0, 400).unwrap() - 1.0)
                .abs();
        assert!(
            g200 < g100,
            "critical mean gap should shrink: {g100} -> {g200}"
        );
    }

    #[test]
    fn mean_asym_against_polynomial_mean_moderate_length() {
        // moderate lengths already show the asymptotic mean within a few percent;
        // the exact polynomial comes from the closed double-sum route
        let w = WatermelonSpec::new(1, 400, 0).unwrap();
        let z = z_double_sum(&w).unwrap();
        for kappa in [rational(1, 1), rational(3, 1)] {
            let exact = normalized_mean(&z, &kappa).unwrap().to_f64().unwrap();
            let asym = mean_asym(1, 0, kappa.to_f64().unwrap(), 400).unwrap();
            assert!(
                (exact / asym - 1.0).abs() < 0.05,
                "kappa={kappa}: exact {exact} vs asym {asym}"
            );
        }
    }

    #[test]
    fn report_validates_lengths() {
        // odd length with even deviation is inadmissible
        assert!(convergence_report(1, 0, &rational(1, 1), &[7]).is_err());
    }
}
