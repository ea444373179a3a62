//! The three large-length regimes of the partition function and of the mean
//! contact number, checked against exact values at increasing lengths.
//!
//! The contact fugacity drives a binding transition at `kappa = 2`:
//!
//! * `kappa < 2` (subcritical): the wall is entropically repulsive; the
//!   partition function keeps the free growth rate `2^n` per step and the mean
//!   contact number converges to a constant.
//! * `kappa = 2` (critical): the growth rate is still `2^n` but the power-law
//!   correction changes, and the mean grows like `sqrt(t)`.
//! * `kappa > 2` (supercritical): the lowest walker binds to the wall; the
//!   growth rate jumps to `2^(n-1) kappa / sqrt(kappa - 1)` per step and the
//!   mean grows linearly in `t`.
//!
//! Run with: `cargo run --example asymptotic_regimes`

use num::rational::BigRational;
use num::BigInt;
use watermelon::asym::{convergence_report, mean_asym, z_asym_leading, Regime};

fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn main() {
    let n = 2usize;
    let y = 0i64;

    for (kappa, kappa_f) in [
        (rational(3, 2), 1.5f64),
        (rational(2, 1), 2.0),
        (rational(3, 1), 3.0),
    ] {
        let regime = Regime::classify(kappa_f).unwrap();
        let est = z_asym_leading(n, y, kappa_f, 1000).unwrap();
        println!(
            "kappa = {kappa} ({regime}): growth rate {:.6} per step, power-law correction t^-{:.1}",
            est.growth_rate, est.critical_exponent
        );

        // Exact log-partition values against the leading-order prediction:
        // the relative gap shrinks like 1/t.
        let lengths = [250i64, 500, 1000];
        let rows = convergence_report(n, y, &kappa, &lengths).unwrap();
        println!(
            "  {:>6} {:>18} {:>18} {:>12}",
            "t", "ln Z (exact)", "ln Z (asym)", "rel gap"
        );
        for row in &rows {
            println!(
                "  {:>6} {:>18.8} {:>18.8} {:>12.3e}",
                row.t, row.ln_exact, row.ln_asym, row.gap
            );
        }
        let shrink = rows[0].gap / rows[2].gap;
        println!(
            "  gap shrink factor over 4x length: {shrink:.2} (expected ~4 for a 1/t correction)"
        );

        // Mean contact number at the same lengths.
        print!("  mean contacts:");
        for t in lengths {
            print!("  t={t}: {:.4}", mean_asym(n, y, kappa_f, t).unwrap());
        }
        println!("\n");
    }

    println!("single-walker supercritical means grow linearly: kappa=3, n=1, y=0");
    for t in [100i64, 200, 400] {
        println!(
            "  t = {t}: asymptotic mean {:.4} (slope 1/4, offset 5/2)",
            mean_asym(1, 0, 3.0, t).unwrap()
        );
    }
}
