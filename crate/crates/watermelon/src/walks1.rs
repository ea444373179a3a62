//! Single-walker partition functions: reflection counts and Catalan generating
//! functions.
//!
//! For one walker everything is classical ballot-problem combinatorics, and this module
//! implements it twice, by genuinely different arguments, so that the many-walker
//! determinant routes are built on entries that have already been cross-checked:
//!
//! * [`z1_exact`] — a finite formula per fugacity power. The contact-free part is the
//!   reflection count of walks strictly above the wall; the part with `l >= 1` contacts
//!   counts walks that first hit the wall, weighted by where the last contact sits.
//!
//! * [`z1_gf`] — coefficient extraction from Catalan generating functions. Powers of
//!   the Catalan series `C(x) = (1 - sqrt(1 - 4x)) / (2x)` have the ballot-number
//!   coefficients implemented in [`catalan_power_coeff`]; the walk decomposition
//!   "(excursion between consecutive contacts)* followed by a contact-free tail" turns
//!   a product of such powers into the contact polynomial, one walk length at a time.
//!
//! Both routes agree with the brute-force oracle; that agreement is a test, not an
//! assumption.

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::combin::binom_nat;
use crate::error::{Error, Result};
use crate::poly::ContactPolynomial;

/// Number of `t`-step walks from height `a` to height `e` that never touch the wall.
/// Requires `a, e >= 1` (a walk pinned on the wall at either end trivially touches it).
///
/// This is the reflection principle: all walks minus those reflected through height 0.
pub fn paths_above_axis(t: i64, a: i64, e: i64) -> Result<BigInt> {
    if a < 1 || e < 1 {
        return Err(Error::InvalidConfig(format!(
            "paths_above_axis needs a, e >= 1, got a = {a}, e = {e}"
        )));
    }
    if t < 0 {
        return Err(Error::InvalidConfig(format!("negative walk length {t}")));
    }
    if (t + a - e) % 2 != 0 {
        return Ok(BigInt::zero());
    }
    Ok(binom_nat(t, (t + a - e) / 2) - binom_nat(t, (t - a - e) / 2))
}

/// Contact polynomial of a single `t`-step walker from height `a` to height `e`,
/// `t >= 1`. (A zero-length walker is a pure boundary case handled by the oracle.)
///
/// The coefficient of the zeroth fugacity power is the wall-avoiding reflection count;
/// for `l >= 1` the coefficient counts walks with exactly `l` contacts by splitting at
/// the last contact: a walk to the wall with `l - 1` intermediate returns, then a
/// strictly positive tail.
pub fn z1_exact(t: i64, a: i64, e: i64) -> Result<ContactPolynomial> {
    if t < 1 || a < 0 || e < 0 {
        return Err(Error::InvalidConfig(format!(
            "z1_exact needs t >= 1 and a, e >= 0, got t = {t}, a = {a}, e = {e}"
        )));
    }
    if (t + a + e) % 2 != 0 || (a - e).abs() > t {
        return Ok(ContactPolynomial::zero());
    }
    let mut z = ContactPolynomial::zero();
    // contact-free part; vanishes identically when either endpoint sits on the wall
    z.add_term(
        0,
        binom_nat(t, (t + a - e) / 2) - binom_nat(t, (t - a - e) / 2),
    );
    // one term per contact count; binomials vanish once l exceeds (t - a - e + 2) / 2
    for l in 1..=t {
        let c = binom_nat(t - l, (t + a + e - 2) / 2) - binom_nat(t - l, (t + a + e) / 2);
        if c.is_zero() && t - l < (t + a + e - 2) / 2 {
            break;
        }
        z.add_term(l as usize, c);
    }
    Ok(z)
}

/// Coefficient of `x^r` in the `(m + 1)`-st power of the Catalan generating function:
/// the ballot number `(m + 1) / (r + m + 1) * binom(2r + m, r)`.
///
/// `catalan_power_coeff(0, r)` is the `r`-th Catalan number.
pub fn catalan_power_coeff(m: i64, r: i64) -> Result<BigInt> {
    if m < 0 || r < 0 {
        return Err(Error::InvalidConfig(format!(
            "catalan_power_coeff needs m, r >= 0, got m = {m}, r = {r}"
        )));
    }
    Ok(ballot(m, r))
}

/// Ballot number valid down to `m = -1` (the zeroth power of the Catalan series,
/// i.e. the constant series 1). Used internally where a walk decomposition degenerates.
fn ballot(m: i64, r: i64) -> BigInt {
    if r == 0 {
        return BigInt::one();
    }
    if m == -1 {
        return BigInt::zero();
    }
    // (m + 1) binom(2r + m, r) / (r + m + 1); the division is exact
    let num = binom_nat(2 * r + m, r) * (m + 1);
    let (q, rem) = num::Integer::div_rem(&num, &BigInt::from(r + m + 1));
    debug_assert!(rem.is_zero(), "ballot number division must be exact");
    q
}

/// Contact polynomials of a single walker from `a` to `e` for every admissible length
/// `t <= up_to_t`, computed by Catalan-series coefficient extraction. Requires
/// `0 <= a <= e`; for `a > e` reverse the walk and call with the endpoints swapped.
///
/// Returns `(t, polynomial)` pairs for every `t` of the right parity, starting at
/// `t = e - a` (the polynomial may still be zero below the reachability threshold).
pub fn z1_gf(a: i64, e: i64, up_to_t: i64) -> Result<Vec<(i64, ContactPolynomial)>> {
    if a < 0 || e < a {
        return Err(Error::InvalidConfig(format!(
            "z1_gf needs 0 <= a <= e, got a = {a}, e = {e}"
        )));
    }
    let mut out = Vec::new();
    let mut t = e - a;
    while t <= up_to_t {
        let mut z = ContactPolynomial::zero();
        // contact-free part: the walk decomposes by the height 2j + e - a (j < a) it
        // would need to lose, giving one Catalan-power coefficient per j
        let mut c0 = BigInt::zero();
        for j in 0..a {
            let m = 2 * j + e - a;
            if (t - m) % 2 == 0 && t >= m {
                c0 += ballot(m, (t - m) / 2);
            }
        }
        z.add_term(0, c0);
        // l >= 1 contacts: excursion product of length 2l + a + e - 2 below a
        // contact-free remainder, a single Catalan power each
        for l in 1.. {
            let m = l + a + e - 2;
            let rest = t - 2 * l - a - e + 2;
            if rest < 0 {
                break;
            }
            if rest % 2 == 0 {
                z.add_term(l as usize, ballot(m, rest / 2));
            }
        }
        out.push((t, z));
        t += 2;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::WalkerSpec;
    use crate::oracle::enumerate_contact_polynomial;

    fn poly(terms: &[(usize, i64)]) -> ContactPolynomial {
        ContactPolynomial::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn catalan_numbers() {
        let catalan: Vec<i64> = (0..8)
            .map(|r| i64::try_from(&catalan_power_coeff(0, r).unwrap()).unwrap())
            .collect();
        assert_eq!(catalan, vec![1, 1, 2, 5, 14, 42, 132, 429]);
        assert!(catalan_power_coeff(-1, 0).is_err());
    }

    /// Truncated power-series identity: sum_r binom(2r + m, r) x^r equals
    /// C(x)^(m+1) / (1 - x C(x)^2) as formal power series.
    #[test]
    fn catalan_power_sum_identity() {
        let order = 16usize;
        // dense series arithmetic, test-local
        let mul = |f: &[BigInt], g: &[BigInt]| -> Vec<BigInt> {
            let mut h = vec![BigInt::zero(); order];
            for i in 0..order {
                for j in 0..order - i {
                    h[i + j] += &f[i] * &g[j];
                }
            }
            h
        };
        let c: Vec<BigInt> = (0..order as i64)
            .map(|r| catalan_power_coeff(0, r).unwrap())
            .collect();
        for m in 0..5i64 {
            // C^(m+1)
            let mut cm = vec![BigInt::zero(); order];
            cm[0] = BigInt::one();
            for _ in 0..=m {
                cm = mul(&cm, &c);
            }
            // geometric series in x C^2
            let xc2 = {
                let mut s = mul(&c, &c);
                s.rotate_right(1);
                s[0] = BigInt::zero();
                s
            };
            let mut geom = vec![BigInt::zero(); order];
            geom[0] = BigInt::one();
            let mut pow = geom.clone();
            for _ in 1..order {
                pow = mul(&pow, &xc2);
                for (g, p) in geom.iter_mut().zip(&pow) {
                    *g += p;
                }
            }
            let lhs = mul(&cm, &geom);
            for r in 0..order as i64 {
                assert_eq!(lhs[r as usize], binom_nat(2 * r + m, r), "m = {m}, r = {r}");
            }
        }
    }

    #[test]
    fn exact_small_values() {
        // excursion of length 4: one walk with 2 contacts, one with 3
        assert_eq!(z1_exact(4, 0, 0).unwrap(), poly(&[(2, 1), (3, 1)]));
        // length 3 from the wall to height 1
        assert_eq!(z1_exact(3, 0, 1).unwrap(), poly(&[(1, 1), (2, 1)]));
        // off-wall start: one contact-free walk (uud...), one with a single dip
        assert_eq!(z1_exact(2, 1, 1).unwrap(), poly(&[(0, 1), (1, 1)]));
        // parity mismatch
        assert!(z1_exact(3, 0, 0).unwrap().is_zero());
        assert!(z1_exact(2, 0, 6).unwrap().is_zero());
    }

    #[test]
    fn exact_matches_oracle() {
        for a in 0..4i64 {
            for e in 0..4i64 {
                for t in 1..=10i64 {
                    if (t + a + e) % 2 != 0 || (a - e).abs() > t {
                        continue;
                    }
                    let spec = WalkerSpec::new(t, vec![a], vec![e]).unwrap();
                    assert_eq!(
                        z1_exact(t, a, e).unwrap(),
                        enumerate_contact_polynomial(&spec),
                        "t={t} a={a} e={e}"
                    );
                }
            }
        }
    }

    #[test]
    fn generating_function_matches_exact() {
        for a in 0..4i64 {
            for e in a..5i64 {
                let table = z1_gf(a, e, 12).unwrap();
                for (t, z) in table {
                    if t == 0 {
                        // boundary case: the empty walk, one contact iff it sits on
                        // the wall
                        let expect = if a == 0 {
                            poly(&[(1, 1)])
                        } else {
                            poly(&[(0, 1)])
                        };
                        assert_eq!(z, expect, "a={a} e={e} t=0");
                        continue;
                    }
                    assert_eq!(z, z1_exact(t, a, e).unwrap(), "a={a} e={e} t={t}");
                }
            }
        }
    }

    #[test]
    fn endpoint_symmetry() {
        // reversing the walk swaps the endpoints and preserves contacts
        for a in 0..5i64 {
            for e in 0..5i64 {
                for t in 1..=9i64 {
                    if (t + a + e) % 2 != 0 {
                        continue;
                    }
                    assert_eq!(
                        z1_exact(t, a, e).unwrap(),
                        z1_exact(t, e, a).unwrap(),
                        "t={t} a={a} e={e}"
                    );
                }
            }
        }
    }

    #[test]
    fn wall_start_peels_one_contact() {
        // a walk starting on the wall is an up step after its first contact:
        // Z(t, 0 -> e) = kappa * Z(t - 1, 1 -> e)
        for e in 0..5i64 {
            for t in 2..=11i64 {
                if (t + e) % 2 != 0 {
                    continue;
                }
                let lhs = z1_exact(t, 0, e).unwrap();
                let rhs =
                    ContactPolynomial::monomial(1, BigInt::one()) * z1_exact(t - 1, 1, e).unwrap();
                assert_eq!(lhs, rhs, "t={t} e={e}");
            }
        }
    }

    #[test]
    fn contact_free_part_is_reflection_count() {
        for a in 1..5i64 {
            for e in 1..5i64 {
                for t in 1..=9i64 {
                    if (t + a - e) % 2 != 0 {
                        continue;
                    }
                    assert_eq!(
                        z1_exact(t, a, e).unwrap().coeff(0),
                        paths_above_axis(t, a, e).unwrap(),
                        "t={t} a={a} e={e}"
                    );
                }
            }
        }
    }
}
