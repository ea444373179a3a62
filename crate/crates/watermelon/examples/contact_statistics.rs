//! Contact statistics: mean number of wall touches as a function of the
//! fugacity, with exact rational arithmetic throughout.
//!
//! The mean at fugacity `kappa` is `kappa Z'(kappa) / Z(kappa)`. Two fugacity
//! values admit closed forms (the uniform ensemble `kappa = 1` and the
//! doubled-weight ensemble `kappa = 2`), and the example confirms both against
//! the polynomial derivative before sweeping the fugacity to show the
//! crossover from bounded means to linear growth.
//!
//! Run with: `cargo run --example contact_statistics`

use num::rational::BigRational;
use num::traits::ToPrimitive;
use num::BigInt;
use watermelon::formulas::{z_double_sum, z_kappa1, z_kappa2};
use watermelon::lgv::{contact_count_det, contact_count_formula};
use watermelon::model::WatermelonSpec;
use watermelon::stats::{mean_kappa1, mean_kappa2_even, normalized_mean};

fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn main() {
    let w = WatermelonSpec::new(2, 4, 0).expect("admissible configuration");
    let z = z_double_sum(&w).unwrap();

    // Closed forms at the two special fugacities, checked against kappa Z'/Z.
    let m1 = mean_kappa1(w.n(), w.t(), w.y());
    let m2 = mean_kappa2_even(w.n(), w.t() / 2);
    println!("configuration n=2, t=4, y=0");
    println!(
        "  partition values: Z(1) = {}, Z(2) = {}",
        z_kappa1(&w).unwrap(),
        z_kappa2(&w).unwrap()
    );
    println!("  mean contacts at kappa=1: {m1}");
    println!("  mean contacts at kappa=2: {m2}");
    assert_eq!(m1, normalized_mean(&z, &rational(1, 1)).unwrap());
    assert_eq!(m2, normalized_mean(&z, &rational(2, 1)).unwrap());
    assert_eq!(m1, rational(8, 3));

    // Per-count occupation numbers: how many families touch the wall exactly
    // l times after the forced start (so l + 1 contacts in total). Both the
    // determinant route and the closed formula must agree with the polynomial
    // coefficient of kappa^(l+1).
    println!("  families by contact count:");
    for (exp, coeff) in z.terms() {
        let l = exp as i64 - 1;
        let det = contact_count_det(&w, l).unwrap();
        let closed = contact_count_formula(&w, l).unwrap();
        assert_eq!(&det, coeff);
        assert_eq!(&closed, coeff);
        println!("    exactly {exp} contacts: {coeff} families");
    }

    // Fugacity sweep on a longer configuration: below the transition the mean
    // saturates; beyond it the walker binds to the wall and the mean grows
    // with the length.
    println!("\nfugacity sweep, n=2, y=0:");
    println!(
        "  {:>7} {:>12} {:>12} {:>12}",
        "kappa", "t=8", "t=16", "t=24"
    );
    for kappa in [
        rational(1, 2),
        rational(1, 1),
        rational(3, 2),
        rational(2, 1),
        rational(3, 1),
        rational(5, 1),
    ] {
        let mut row = format!("  {:>7}", kappa.to_string());
        for t in [8i64, 16, 24] {
            let w = WatermelonSpec::new(2, t, 0).unwrap();
            let z = z_double_sum(&w).unwrap();
            let mean = normalized_mean(&z, &kappa).unwrap();
            row.push_str(&format!(" {:>12.6}", mean.to_f64().unwrap()));
        }
        println!("{row}");
    }
    println!("  (kappa <= 2: mean approaches a constant; kappa > 2: mean grows linearly in t)");
}
