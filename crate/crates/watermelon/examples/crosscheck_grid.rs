//! Sweep a parameter grid and verify that every applicable exact route
//! produces bitwise-identical contact polynomials.
//!
//! This is the library-level version of the `crosscheck` CLI subcommand: the
//! brute-force enumeration is the reference, and each formula route must match
//! it on every admissible `(n, t, y)` triple in the grid.
//!
//! Run with: `cargo run --example crosscheck_grid`

use watermelon::formulas::{z_double_sum, z_even_closed, z_marked_contacts};
use watermelon::lgv::{z_det_deviation0, z_det_general, z_det_watermelon};
use watermelon::model::WatermelonSpec;
use watermelon::oracle::enumerate_contact_polynomial;

fn main() {
    let (max_n, max_t, max_y) = (3usize, 10i64, 3i64);
    let mut instances = 0usize;
    let mut comparisons = 0usize;

    for n in 1..=max_n {
        for y in 0..=max_y {
            // t and y must have equal parity and t >= y.
            let mut t = if y == 0 { 2 } else { y };
            while t <= max_t {
                let w = WatermelonSpec::new(n, t, y).expect("grid point is admissible");
                let reference = enumerate_contact_polynomial(&w.walker_spec());

                let mut routes = vec![
                    ("det-general", z_det_general(&w.walker_spec()).unwrap()),
                    ("det-watermelon", z_det_watermelon(&w).unwrap()),
                    ("double-sum", z_double_sum(&w).unwrap()),
                    (
                        "marked-contacts",
                        z_marked_contacts(&w).unwrap().assemble().unwrap(),
                    ),
                ];
                if y == 0 {
                    routes.push(("det-dev0", z_det_deviation0(n, t / 2).unwrap()));
                    routes.push(("closed-product", z_even_closed(n, t / 2).unwrap()));
                }

                for (label, z) in &routes {
                    assert_eq!(z, &reference, "route {label} diverged at n={n} t={t} y={y}");
                    comparisons += 1;
                }
                instances += 1;
                t += 2;
            }
        }
    }

    println!("checked {instances} configurations, {comparisons} route comparisons: all equal");
    println!("grid: n <= {max_n}, t <= {max_t}, y <= {max_y} (parity-admissible triples)");
}
