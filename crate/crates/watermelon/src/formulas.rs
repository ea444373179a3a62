//! Closed forms and convergent series for the watermelon contact polynomial.
//!
//! Exact routes (arbitrary-precision rationals, integrality checked):
//!
//! * [`z_even_closed`] — zero deviation (`y = 0`, `t = 2r`): a product prefactor times
//!   a single sum, one binomial product per fugacity power.
//! * [`z_double_sum`] — any admissible `(n, t, y)`: a product prefactor times a double
//!   sum over the fugacity power and an alternating inner index. This is the workhorse
//!   exact evaluator at large `t` (everything is factorials from a shared table).
//! * [`z_marked_contacts`] — expansion in powers of `kappa - 1` whose coefficients
//!   *count* pairs (family, subset of `h` marked non-start contacts); assembling the
//!   expansion recovers the contact polynomial, and the counts themselves are exposed
//!   because they make a sharp combinatorial cross-check.
//! * [`z_kappa1`], [`z_kappa2`] — product formulas for the total family count
//!   (fugacity 1) and for fugacity 2, where every contact doubles the weight.
//!
//! Floating-point routes, valid for `kappa > 2 (sqrt 2 - 1)` where the underlying
//! series converge:
//!
//! * [`z_even_series`] — zero deviation, with an extra correction block for
//!   `kappa > 2` where a second saddle contributes;
//! * [`z_series`] — general deviation, same regime structure.
//!
//! Both series routes sum hypergeometric-style terms by incremental ratio updates
//! (O(1) work per term), with compensated summation and a geometric tail bound as the
//! stopping rule: term ratios approach `q = 4 |kappa - 1| / kappa^2 < 1`, so the tail
//! after a term of magnitude `u` is at most `u q / (1 - q)`. Near the transition
//! (`kappa` close to 2, where `q` is close to 1) convergence is slow; if the bound
//! cannot certify the requested tolerance within the iteration cap, the evaluation
//! fails with a numerical error rather than return a value of unknown accuracy. At
//! `kappa = 1.99` or `2.01`, tolerances down to `1e-10` still certify; tighter
//! requests there exhaust the cap.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use statrs::function::gamma::ln_gamma;

use crate::combin::{binom_gen, binom_nat, ln_bigint, pochhammer, FactorialTable};
use crate::error::{Error, Result};
use crate::model::WatermelonSpec;
use crate::poly::ContactPolynomial;

/// Convergence boundary of the series routes: they require
/// `kappa > 2 (sqrt 2 - 1) = 0.828...`, strictly.
pub fn series_domain_boundary() -> f64 {
    2.0 * (std::f64::consts::SQRT_2 - 1.0)
}

/// Iteration cap for the series routes. The tail-bound stopping rule fires long before
/// this except close to `kappa = 2`, where the geometric ratio approaches 1 and the
/// required term count grows like `|kappa - 2|^(-2)`. Reaching the cap without a
/// certified tail is reported as a numerical error.
pub const SERIES_TERM_CAP: usize = 1_000_000;

/// Contact polynomial of the zero-deviation watermelon (`y = 0`, `t = 2r`): product
/// prefactor times one binomial product per fugacity power. Lowest power is
/// `kappa^2` (both forced endpoint contacts).
pub fn z_even_closed(n: usize, r: i64) -> Result<ContactPolynomial> {
    if n < 1 || r < 1 {
        return Err(Error::InvalidConfig(format!(
            "zero-deviation closed form needs n >= 1 and r >= 1, got n = {n}, r = {r}"
        )));
    }
    let n = n as i64;
    let mut f = FactorialTable::with_max((2 * r + 2 * n) as u64);
    let mut pref = BigRational::from(f.fact((r - 1) as u64));
    for i in 0..n {
        pref *= BigRational::from(f.fact((2 * i + 1) as u64));
    }
    for i in 0..n - 1 {
        pref *= BigRational::from(f.fact((2 * r + 2 * i) as u64));
    }
    for i in 0..2 * n - 1 {
        pref /= BigRational::from(f.fact((r + i) as u64));
    }
    let coeffs = (0..r).map(|l| {
        let c = binom_nat(2 * r - l - 2, r - 1) * binom_nat(l + 2 * n - 1, l);
        ((l + 2) as usize, &pref * BigRational::from(c))
    });
    ContactPolynomial::from_rational_coeffs(coeffs)?.check_counting()
}

/// Contact polynomial for any admissible watermelon via the double-sum closed form:
/// coefficient of `kappa^(l+1)` is a shared rational prefactor times an alternating
/// sum over `k < n` of binomial and rising-factorial products. Both binomial
/// conventions appear: path-counting binomials truncate the sums, while
/// `binom_gen(y + 2k - 2, 2k)` must survive at negative upper index or the small-`y`
/// polynomials collapse to zero.
pub fn z_double_sum(w: &WatermelonSpec) -> Result<ContactPolynomial> {
    let n = w.n() as i64;
    let (t, y) = (w.t(), w.y());
    let up = (t + y) / 2;
    let down = (t - y) / 2;
    let mut f = FactorialTable::with_max((t + 2 * n + y) as u64);

    let mut pref = BigRational::new(f.fact((up - 1) as u64), f.fact((up + 2 * n - 2) as u64));
    for i in 0..n - 1 {
        pref *= BigRational::new(
            f.fact((t + 2 * i) as u64) * f.fact(i as u64) * f.fact((y + n + i - 1) as u64),
            f.fact((up + n + i - 1) as u64)
                * f.fact((down + i) as u64)
                * f.fact((y + 2 * i) as u64),
        );
    }

    let mut coeffs = Vec::new();
    for l in 0..=down {
        let mut s = BigRational::zero();
        for k in 0..n {
            let outer = binom_nat(n - 1, k)
                * binom_gen(y + 2 * k - 2, (2 * k) as u64)
                * binom_nat(t - l - 1, down - l - k)
                * binom_nat(y + l + 2 * n - 2, 2 * n - 2 * k - 1);
            if outer.is_zero() {
                continue;
            }
            let num = pochhammer(up, k as u64)
                * f.fact((2 * n - 2 * k - 1) as u64)
                * f.fact((2 * k) as u64);
            let den = pochhammer(down + n - k, k as u64);
            let term = BigRational::new(outer * num, den);
            if k % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        coeffs.push(((l + 1) as usize, &pref * s));
    }
    ContactPolynomial::from_rational_coeffs(coeffs)?.check_counting()
}

/// The expansion of the contact polynomial in powers of `kappa - 1`, coefficient by
/// coefficient. `counts[h]` is the number of pairs (family, choice of `h` of its
/// contacts after the forced start) — equivalently the sum over families of
/// `binom(contacts - 1, h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedContactExpansion {
    counts: Vec<BigInt>,
}

impl MarkedContactExpansion {
    /// The marked-contact counts, indexed by the number of marks `h`.
    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// Reassembles the contact polynomial: `Z = sum_h counts[h] * kappa * (kappa-1)^h`.
    pub fn assemble(&self) -> Result<ContactPolynomial> {
        let shifted =
            ContactPolynomial::from_terms([(0usize, BigInt::from(-1)), (1usize, BigInt::one())]);
        let mut power = ContactPolynomial::one();
        let mut z = ContactPolynomial::zero();
        for c in &self.counts {
            z += ContactPolynomial::monomial(1, BigInt::one()) * power.scale(c);
            power = power * shifted.clone();
        }
        z.check_counting()
    }
}

/// Computes the marked-contact expansion from its closed form: a product prefactor
/// times one factorial ratio per mark count `h = 0 .. (t-y)/2`. Every coefficient is
/// checked to be a nonnegative integer — these are cardinalities, and their
/// integrality is a nontrivial consequence of the formula.
pub fn z_marked_contacts(w: &WatermelonSpec) -> Result<MarkedContactExpansion> {
    let n = w.n() as i64;
    let (t, y) = (w.t(), w.y());
    let up = (t + y) / 2;
    let down = (t - y) / 2;
    let mut f = FactorialTable::with_max((t + y + 3 * n) as u64);

    let mut pref = BigRational::one();
    for i in 0..n {
        pref *= BigRational::from(f.fact((t + 2 * i) as u64) * f.fact(i as u64));
    }
    for i in 0..n - 1 {
        pref *= BigRational::new(
            f.fact((y + n + i - 1) as u64),
            f.fact((y + 2 * i) as u64)
                * f.fact((up + n + i) as u64)
                * f.fact((down + i + 1) as u64),
        );
    }

    let mut counts = Vec::with_capacity((down + 1) as usize);
    for h in 0..=down {
        let c = &pref
            * BigRational::new(
                binom_nat(n + h - 1, n - 1)
                    * BigInt::from(y + 2 * n + 2 * h - 1)
                    * f.fact((y + 2 * n + h - 2) as u64),
                f.fact((y + n + h - 1) as u64)
                    * f.fact((up + 2 * n + h - 1) as u64)
                    * f.fact((down - h) as u64),
            );
        if !c.is_integer() || c.is_negative() {
            return Err(Error::NotInteger {
                value: format!("marked-contact count {c} at h = {h}"),
            });
        }
        counts.push(c.to_integer());
    }
    Ok(MarkedContactExpansion { counts })
}

/// Total number of watermelon families (the contact polynomial at fugacity 1), as an
/// exact product of factorial ratios.
pub fn z_kappa1(w: &WatermelonSpec) -> Result<BigInt> {
    let n = w.n() as i64;
    let (t, y) = (w.t(), w.y());
    let up = (t + y) / 2;
    let down = (t - y) / 2;
    let mut f = FactorialTable::with_max((t + 2 * n + y) as u64);
    let mut z = BigRational::one();
    for i in 0..n {
        z *= BigRational::new(
            f.fact((y + n + i) as u64) * f.fact((t + 2 * i) as u64) * f.fact(i as u64),
            f.fact((y + 2 * i) as u64) * f.fact((up + n + i) as u64) * f.fact((down + i) as u64),
        );
    }
    rational_count(z, "family count at fugacity 1")
}

/// The contact polynomial at fugacity 2 (every contact doubles the weight), as an
/// exact product of factorial ratios times 2.
pub fn z_kappa2(w: &WatermelonSpec) -> Result<BigInt> {
    let n = w.n() as i64;
    let (t, y) = (w.t(), w.y());
    let up = (t + y) / 2;
    let down = (t - y) / 2;
    let mut f = FactorialTable::with_max((t + 2 * n + y) as u64);
    let mut z = BigRational::from(BigInt::from(2));
    for i in 0..n {
        z *= BigRational::new(
            f.fact((y + n + i - 1) as u64) * f.fact((t + 2 * i) as u64) * f.fact(i as u64),
            f.fact((y + 2 * i) as u64)
                * f.fact((up + n + i - 1) as u64)
                * f.fact((down + i) as u64),
        );
    }
    rational_count(z, "weighted count at fugacity 2")
}

fn rational_count(z: BigRational, what: &str) -> Result<BigInt> {
    if !z.is_integer() || z.is_negative() {
        return Err(Error::NotInteger {
            value: format!("{what}: {z}"),
        });
    }
    Ok(z.to_integer())
}

/// Result of a floating-point series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEstimate {
    /// The estimated value; may overflow to infinity for huge configurations, in
    /// which case `ln_value` still carries the answer.
    pub value: f64,
    /// Natural logarithm of the estimated (positive) value, assembled in log space so
    /// it stays finite far beyond the f64 range.
    pub ln_value: f64,
    /// Number of series terms consumed (0 when an exact product formula answered).
    pub terms: usize,
}

/// Sums `1 + u_1 + u_2 + ...` where `u_{h+1} = u_h * ratio(h)`, by compensated
/// (Kahan) summation. Stops when the geometric tail bound with ratio `q` certifies a
/// relative tail below `rel_tol`, or when a term vanishes exactly. Reaching the
/// iteration cap without either leaves the sum uncertified — the third component is
/// `false` and callers must treat the computation as failed rather than return a
/// value of unknown accuracy.
fn sum_by_ratios(q: f64, rel_tol: f64, mut ratio: impl FnMut(usize) -> f64) -> (f64, usize, bool) {
    let mut sum = 1.0f64;
    let mut comp = 0.0f64;
    let mut term = 1.0f64;
    let mut used = 1usize;
    for h in 0..SERIES_TERM_CAP {
        let rho = ratio(h);
        term *= rho;
        if term == 0.0 {
            return (sum, used, true);
        }
        // Kahan step
        let yv = term - comp;
        let tv = sum + yv;
        comp = (tv - sum) - yv;
        sum = tv;
        used += 1;
        // geometric tail certificate: term magnitudes fall toward the limit ratio q
        // from above, so bounding the tail by the *larger* of q and the ratio just
        // used stays valid during the transient as well
        let q_eff = q.max(rho.abs());
        if q_eff < 1.0 && term.abs() <= rel_tol * sum.abs() * (1.0 - q_eff) / q_eff {
            return (sum, used, true);
        }
    }
    (sum, used, false)
}

/// Signed log-sum-exp: combines terms given as (ln magnitude, sign), returning the
/// logarithm of the (necessarily positive) total, or `None` if the total is not
/// positive.
fn ln_sum_signed(terms: &[(f64, f64)]) -> Option<f64> {
    let m = terms
        .iter()
        .filter(|(l, _)| l.is_finite() || *l == f64::INFINITY)
        .map(|(l, _)| *l)
        .fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return None;
    }
    let total: f64 = terms.iter().map(|(l, s)| s * (l - m).exp()).sum();
    if total > 0.0 {
        Some(m + total.ln())
    } else {
        None
    }
}

fn lfact(k: i64) -> f64 {
    debug_assert!(k >= 0, "log-factorial of negative argument");
    ln_gamma((k + 1) as f64)
}

fn check_series_inputs(kappa: f64, rel_tol: f64) -> Result<()> {
    if rel_tol.is_nan() || rel_tol <= 0.0 {
        return Err(Error::InvalidConfig(format!(
            "relative tolerance must be positive, got {rel_tol}"
        )));
    }
    if !kappa.is_finite() || kappa <= series_domain_boundary() {
        return Err(Error::OutsideDomain {
            kappa,
            domain: "kappa > 2*(sqrt(2) - 1)",
        });
    }
    Ok(())
}

/// Floating-point evaluation of the zero-deviation partition function by its series
/// representation, valid for `kappa > 2 (sqrt 2 - 1)`. For `kappa > 2` a second,
/// exponentially dominant block of `n` closed terms is added: the fugacity is strong
/// enough to bind the lowest walker to the wall, and the bound phase carries an extra
/// factor `((kappa - 2) like) * kappa^(2r)` visible in the formula.
pub fn z_even_series(n: usize, r: i64, kappa: f64, rel_tol: f64) -> Result<SeriesEstimate> {
    if n < 1 || r < 1 {
        return Err(Error::InvalidConfig(format!(
            "zero-deviation series needs n >= 1 and r >= 1, got n = {n}, r = {r}"
        )));
    }
    check_series_inputs(kappa, rel_tol)?;
    let n = n as i64;
    let x = (kappa - 1.0) / (kappa * kappa);
    let q = 4.0 * x.abs();

    // product prefactor, log space
    let mut ln_pref = 0.0f64;
    for i in 0..n {
        ln_pref += lfact(2 * i + 1) + lfact(2 * r + 2 * i);
    }
    for i in 0..2 * n {
        ln_pref -= lfact(r + i);
    }

    // main series: ratio of consecutive terms in closed form
    let (s_main, terms, certified) = sum_by_ratios(q, rel_tol, |h| {
        let h = h as f64;
        let (nf, rf) = (n as f64, r as f64);
        (nf + h) / (h + 1.0)
            * ((2.0 * rf + 2.0 * nf - 1.0 + 2.0 * h) * (2.0 * rf + 2.0 * nf + 2.0 * h))
            / ((rf + nf + h) * (rf + 2.0 * nf + h))
            * x
    });
    if !certified {
        return Err(Error::Numerical(format!(
            "series tail not certified below {rel_tol:e} within {SERIES_TERM_CAP} terms \
             at kappa = {kappa}; move away from the transition or loosen the tolerance"
        )));
    }
    if s_main.is_nan() || s_main <= 0.0 {
        return Err(Error::Numerical(format!(
            "main series summed to {s_main} at kappa = {kappa}"
        )));
    }

    let mut blocks: Vec<(f64, f64)> = vec![(-(2 * n - 2) as f64 * kappa.ln() + s_main.ln(), 1.0)];
    if kappa > 2.0 {
        // bound-phase block: n terms, each assembled in log space with its sign
        let ln_corr_pref = (kappa - 2.0).ln() + (2 * r + 2 * n - 1) as f64 * kappa.ln()
            - (r + 2 * n - 1) as f64 * (kappa - 1.0).ln()
            + lfact(r + 2 * n - 1)
            - lfact(2 * n - 1)
            - lfact(r + n - 1);
        for h in 0..n {
            let ln_mag = ln_corr_pref
                + ln_bigint(&binom_nat(n - 1, h))
                + lfact(r + n - h - 1)
                + lfact(r + 2 * n - h - 2)
                - lfact(2 * r + 2 * n - 2 * h - 2)
                + h as f64 * x.ln();
            let sign = if h % 2 == 0 { 1.0 } else { -1.0 };
            blocks.push((ln_mag, sign));
        }
    }
    let ln_inner = ln_sum_signed(&blocks).ok_or_else(|| {
        Error::Numerical(format!(
            "series blocks cancelled to a nonpositive value at kappa = {kappa}"
        ))
    })?;
    let ln_value = ln_pref + ln_inner;
    Ok(SeriesEstimate {
        value: ln_value.exp(),
        ln_value,
        terms,
    })
}

/// Floating-point evaluation of the general-deviation partition function, valid for
/// `kappa > 2 (sqrt 2 - 1)`:
///
/// * below `kappa = 2`: prefactor times a single convergent series;
/// * at `kappa = 2` exactly: the series family degenerates; the exact product
///   formula [`z_kappa2`] answers instead (0 series terms);
/// * above `kappa = 2`: the same series plus a closed bound-phase block of `n` terms
///   that grow like `kappa^t` and dominate for large `t`, plus a parity-correction
///   block of `floor(y / 2)` terms of order `x^(n + (t - y) / 2)` (exponentially small
///   in `t`, but required for the route to be exact at every finite `t` once `y >= 2`).
pub fn z_series(w: &WatermelonSpec, kappa: f64, rel_tol: f64) -> Result<SeriesEstimate> {
    check_series_inputs(kappa, rel_tol)?;
    if kappa == 2.0 {
        let z = z_kappa2(w)?;
        let ln_value = ln_bigint(&z);
        return Ok(SeriesEstimate {
            value: ln_value.exp(),
            ln_value,
            terms: 0,
        });
    }
    let n = w.n() as i64;
    let (t, y) = (w.t(), w.y());
    let up = (t + y) / 2;
    let x = (kappa - 1.0) / (kappa * kappa);
    let q = 4.0 * x.abs();

    // shared product prefactor, log space
    let mut ln_pref = 0.0f64;
    for i in 0..n - 1 {
        ln_pref += lfact(y + n + i - 1) - lfact(y + 2 * i);
    }
    for i in 0..n {
        ln_pref += lfact(t + 2 * i) + lfact(i) - lfact((t - y) / 2 + i) - lfact(up + n + i - 1);
    }

    // common infinite series with its leading factorial ratio
    let ln_first =
        lfact(y + 2 * n - 1) + lfact(up + n - 1) - lfact(y + n - 1) - lfact(up + 2 * n - 1);
    let (s_inf, terms, certified) = sum_by_ratios(q, rel_tol, |h| {
        let h = h as f64;
        let (nf, yf, uf) = (n as f64, y as f64, up as f64);
        (yf + 2.0 * nf + 2.0 * h) * (yf + 2.0 * nf + 2.0 * h + 1.0) * (uf + nf + h)
            / ((h + 1.0) * (yf + nf + h) * (uf + 2.0 * nf + h))
            * x
    });
    if !certified {
        return Err(Error::Numerical(format!(
            "series tail not certified below {rel_tol:e} within {SERIES_TERM_CAP} terms \
             at kappa = {kappa}; move away from the transition or loosen the tolerance"
        )));
    }
    if s_inf.is_nan() || s_inf <= 0.0 {
        return Err(Error::Numerical(format!(
            "series summed to {s_inf} at kappa = {kappa}"
        )));
    }
    let ln_series_block = -(2 * n + y - 1) as f64 * kappa.ln() + ln_first + s_inf.ln();

    let ln_value = if kappa < 2.0 {
        ln_pref + (2.0 - kappa).ln() + ln_series_block
    } else {
        // bound-phase block, signs alternating with h
        let ln_pref2 =
            (2 * n + t - 1) as f64 * kappa.ln() - (up + 2 * n - 1) as f64 * (kappa - 1.0).ln();
        let mut blocks = vec![(ln_series_block, 1.0)];
        for h in 0..n {
            let ln_mag = ln_pref2 + lfact(up + 2 * n - h - 2) + lfact((t - y) / 2 + n - h - 1)
                - lfact(h)
                - lfact(n - h - 1)
                - lfact(t + 2 * n - 2 * h - 2)
                + h as f64 * x.ln();
            let sign = if h % 2 == 0 { 1.0 } else { -1.0 };
            blocks.push((ln_mag, sign));
        }
        // Parity-correction block: for y >= 2 the bound-phase resummation leaves
        // floor(y / 2) residual terms whose magnitude carries the factor
        // x^(n + (t - y) / 2), so they vanish exponentially as t grows but are
        // needed for exactness at finite t.
        let down = (t - y) / 2;
        let mut e = 0i64;
        while 2 * e <= y - 2 {
            let ln_mag = ln_pref2 + lfact(down + e) + lfact(n + y - e - 2)
                - lfact(y - 2 * e - 2)
                - lfact(e)
                - lfact(n + down + e)
                + (n + down + e) as f64 * x.ln();
            let sign = if (n + e) % 2 == 0 { 1.0 } else { -1.0 };
            blocks.push((ln_mag, sign));
            e += 1;
        }
        let ln_inner = ln_sum_signed(&blocks).ok_or_else(|| {
            Error::Numerical(format!(
                "series blocks cancelled to a nonpositive value at kappa = {kappa}"
            ))
        })?;
        ln_pref + (kappa - 2.0).ln() + ln_inner
    };
    Ok(SeriesEstimate {
        value: ln_value.exp(),
        ln_value,
        terms,
    })
}
