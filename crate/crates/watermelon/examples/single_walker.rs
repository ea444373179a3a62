//! The single-walker building block: wall-contact polynomials of one ±1 walk
//! above the wall, their generating function, and the reflection-style count
//! they refine.
//!
//! Every multi-walker determinant route is assembled from these one-walker
//! polynomials, so this example exercises the foundation: the closed
//! two-binomial formula per contact count, the recursive generating-function
//! construction, and the consistency of both with brute-force enumeration.
//!
//! Run with: `cargo run --example single_walker`

use num::BigInt;
use watermelon::model::WalkerSpec;
use watermelon::oracle::enumerate_contact_polynomial;
use watermelon::walks1::{paths_above_axis, z1_exact, z1_gf};

fn main() {
    // Contact polynomials of walks from height a to height e in t steps.
    println!("single-walker contact polynomials:");
    for (t, a, e) in [(4i64, 0i64, 0i64), (5, 1, 0), (6, 0, 2), (7, 2, 1)] {
        let z = z1_exact(t, a, e).unwrap();
        let terms = z
            .terms()
            .map(|(exp, c)| format!("{c}*k^{exp}"))
            .collect::<Vec<_>>()
            .join(" + ");
        println!("  t={t} a={a} e={e}: {terms}");

        // Brute force agrees.
        let spec = WalkerSpec::new(t, vec![a], vec![e]).unwrap();
        assert_eq!(z, enumerate_contact_polynomial(&spec));
    }

    // With both endpoints off the wall, the zero-contact coefficient is the
    // classic reflection-principle count of strictly positive walks.
    println!("\nzero-contact coefficient vs reflection count:");
    for (t, a, e) in [(4i64, 1i64, 1i64), (5, 1, 2), (6, 2, 2), (7, 2, 1)] {
        let z = z1_exact(t, a, e).unwrap();
        let avoiding = paths_above_axis(t, a, e).unwrap();
        assert_eq!(z.coeff(0), avoiding);
        println!("  t={t} a={a} e={e}: {avoiding} wall-avoiding walks");
    }

    // The recursive generating function produces all lengths at once and
    // matches the closed formula length by length.
    println!("\ngenerating function vs closed formula (a=0, e=0):");
    for (t, z_gf) in z1_gf(0, 0, 12).unwrap() {
        if t == 0 {
            continue; // zero-length boundary case; the closed formula starts at t = 1
        }
        let z_closed = z1_exact(t, 0, 0).unwrap();
        assert_eq!(z_gf, z_closed);
        let count = z_closed.total_count();
        let max_contacts = z_closed.degree().unwrap_or(0);
        println!(
            "  t={t:>2}: {count:>4} paths, contact counts {}..{}",
            z_closed.valuation().unwrap_or(0),
            max_contacts
        );
    }

    // Excursions (a = e = 0, wall touches allowed) at kappa = 1 are counted
    // by Catalan numbers.
    println!("\nexcursion counts are Catalan numbers:");
    let catalan = |m: i64| -> BigInt {
        let mut c = BigInt::from(1);
        for i in 0..m {
            c = c * BigInt::from(2 * (2 * i + 1)) / BigInt::from(i + 2);
        }
        c
    };
    for m in 1..=6i64 {
        let count = z1_exact(2 * m, 0, 0).unwrap().total_count();
        assert_eq!(count, catalan(m));
        println!("  t = {:>2}: {count} excursions", 2 * m);
    }
}
