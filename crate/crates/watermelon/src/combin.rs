//! Exact combinatorial scalars: factorials, two binomial conventions, Pochhammer symbols.
//!
//! Two different binomial-coefficient conventions are load-bearing in this crate and are
//! deliberately kept as two separate functions:
//!
//! * [`binom_nat`] is the *counting* convention: `binom_nat(m, k)` is the number of
//!   k-subsets of an m-set, and it is zero whenever `k < 0`, `m < 0`, or `k > m`.
//!   Every path-counting formula (reflection arguments, ballot numbers, determinant
//!   entries) uses this one, because there a binomial *is* a cardinality.
//!
//! * [`binom_gen`] is the *polynomial* convention: `binom_gen(m, k) = m(m-1)...(m-k+1)/k!`
//!   for any integer `m`, including negative values, so e.g. `binom_gen(-2, 0) = 1` and
//!   `binom_gen(-1, 1) = -1`. The closed-form partition-function and asymptotic formulas
//!   contain binomials whose upper index goes negative for small deviations; evaluating
//!   those with the counting convention silently kills the only surviving term and
//!   produces 0 instead of the correct polynomial. The two conventions agree exactly on
//!   `m >= 0`.
//!
//! A related convention used by the fixed-contact counting formula: a factorial of a
//! negative integer is treated as infinite, i.e. its *reciprocal* is zero. That rule
//! lives in [`FactorialTable::recip_fact`], so [`factorial`] itself stays total on
//! `u64`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Exact factorial `n!`.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// A growable table of factorials `0!, 1!, ..., n!`.
///
/// The large-deviation exact evaluations (partition functions at walk lengths in the
/// thousands) read hundreds of factorials of nearby arguments; computing each one from
/// scratch would be quadratic in the walk length. The table is filled incrementally.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    table: Vec<BigInt>,
}

impl FactorialTable {
    /// Creates a table primed up to `n!` inclusive.
    pub fn with_max(n: u64) -> Self {
        let mut t = FactorialTable {
            table: vec![BigInt::one()],
        };
        t.grow_to(n);
        t
    }

    fn grow_to(&mut self, n: u64) {
        let mut k = self.table.len() as u64;
        while k <= n {
            let next = &self.table[(k - 1) as usize] * k;
            self.table.push(next);
            k += 1;
        }
    }

    /// `n!`, growing the table if needed. Returned by value so that several factorials
    /// can be combined in a single expression; the clone is cheap next to the
    /// arithmetic the callers do with it.
    pub fn fact(&mut self, n: u64) -> BigInt {
        self.grow_to(n);
        self.table[n as usize].clone()
    }

    /// `1/n!` as a rational, with the convention that the reciprocal of a negative
    /// argument's factorial is zero. This is the truncation rule that limits the
    /// summation ranges of the fixed-contact counting formula.
    pub fn recip_fact(&mut self, n: i64) -> BigRational {
        if n < 0 {
            return BigRational::zero();
        }
        BigRational::new(BigInt::one(), self.fact(n as u64))
    }
}

/// Counting-convention binomial coefficient: zero outside `0 <= k <= m`.
pub fn binom_nat(m: i64, k: i64) -> BigInt {
    if k < 0 || m < 0 || k > m {
        return BigInt::zero();
    }
    // multiplicative evaluation with intermediate exact divisions; binom(m, j) is
    // integral at every step so the divisions never truncate
    let k = k.min(m - k) as u64;
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (m as u64 - j) / (j + 1);
    }
    acc
}

/// Polynomial-convention binomial coefficient `m(m-1)...(m-k+1)/k!`, defined for any
/// integer upper index. Agrees with [`binom_nat`] for `m >= 0`.
pub fn binom_gen(m: i64, k: u64) -> BigInt {
    // falling factorial, then one exact division by k!; the product of k consecutive
    // integers is always divisible by k!
    let mut num = BigInt::one();
    for j in 0..k as i64 {
        num *= m - j;
    }
    let (q, r) = num::Integer::div_rem(&num, &factorial(k));
    debug_assert!(r.is_zero(), "falling factorial not divisible by k!");
    q
}

/// Rising factorial (Pochhammer symbol) `(x)_k = x (x+1) ... (x+k-1)` with `(x)_0 = 1`.
pub fn pochhammer(x: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k as i64 {
        acc *= x + j;
    }
    acc
}

/// Natural logarithm of a positive big integer, accurate to f64 precision even when
/// the integer itself far exceeds the f64 range: the top 64 bits carry all the
/// precision a f64 logarithm can hold, the rest contributes an exact power of two.
pub fn ln_bigint(x: &BigInt) -> f64 {
    use num::traits::ToPrimitive;
    assert!(x.is_positive(), "ln_bigint needs a positive value");
    let bits = x.bits();
    if bits <= 1023 {
        return x.to_f64().expect("in-range conversion").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit mantissa fits");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural logarithm of a positive rational, via [`ln_bigint`] on both parts.
pub fn ln_rational(x: &BigRational) -> f64 {
    ln_bigint(x.numer()) - ln_bigint(x.denom())
}
