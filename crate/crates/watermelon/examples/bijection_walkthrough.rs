//! Walk through the contact-transport bijection on a single family, then
//! verify its global counting consequence on a whole configuration class.
//!
//! The bijection encodes a family as a column-strict tableau of down-step
//! times, repeatedly slides the wall-contact entries out of the first column,
//! and reads the result back as a family whose top walker is shorter by one
//! step per transported contact (plus one). Because the procedure is
//! invertible, the number of families with exactly `l + 1` contacts equals the
//! number of image families with the corresponding length deficit — a purely
//! combinatorial proof of the contact-count formulas.
//!
//! Run with: `cargo run --example bijection_walkthrough`

use watermelon::model::WatermelonSpec;
use watermelon::oracle::{
    contacts, enumerate_contact_polynomial, enumerate_families, PathFamily, Step,
};
use watermelon::tableaux::{
    bijection_forward, bijection_inverse, family_to_tableau, transported_tally,
};

fn walk_string(steps: &[Step]) -> String {
    steps
        .iter()
        .map(|s| if *s == Step::Up { 'u' } else { 'd' })
        .collect()
}

fn print_rows(rows: &[Vec<i64>]) {
    for row in rows {
        let line = row
            .iter()
            .map(|v| format!("{v:>2}"))
            .collect::<Vec<_>>()
            .join(" ");
        println!("    {line}");
    }
}

fn main() {
    // A 4-walker family of length 12 with deviation 2 and four wall contacts
    // (the start plus three transportable ones).
    let w = WatermelonSpec::new(4, 12, 2).expect("admissible configuration");
    let family = PathFamily::from_strings(
        vec![0, 2, 4, 6],
        &[
            "uduududduduu",
            "uuduuudddduu",
            "uuduuuddudud",
            "uuuuuudddudd",
        ],
    )
    .expect("valid family");
    println!(
        "input family (n=4, t=12, y=2), {} wall contacts:",
        contacts(&family)
    );
    for (i, walk) in family.walks().iter().enumerate() {
        println!(
            "  walker {} (start {}): {}",
            i + 1,
            family.starts()[i],
            walk_string(walk)
        );
    }

    println!("  down-step time tableau (column i = walker i):");
    print_rows(&family_to_tableau(&family).unwrap().rows());

    let transport = bijection_forward(&family, &w).unwrap();
    for (round, record) in transport.rounds.iter().enumerate() {
        println!(
            "  round {}: special entry leaves column 0 row {}, exits at corner (row {}, column {}):",
            round + 1,
            record.special_row,
            record.corner.0,
            record.corner.1
        );
        print_rows(&record.after_slide_rows);
    }
    println!("  image tableau after the global decrement:");
    print_rows(&transport.end.rows());
    println!(
        "  image family (top walker shortened by {} steps):",
        transport.contacts_transported + 1
    );
    for (i, walk) in transport.family.walks().iter().enumerate() {
        println!(
            "  walker {} (start {}): {}",
            i + 1,
            transport.family.starts()[i],
            walk_string(walk)
        );
    }

    // Round trip: the inverse transport restores the original family exactly.
    let restored = bijection_inverse(&transport.family, &w).unwrap();
    assert_eq!(restored, family);
    println!("  inverse transport restores the input family: OK\n");

    // Global consequence: over all families of a configuration, tallying
    // `contacts transported + 1` reproduces the contact polynomial.
    for (n, t, y) in [(2usize, 8i64, 0i64), (3, 7, 1), (3, 8, 2)] {
        let w = WatermelonSpec::new(n, t, y).unwrap();
        let families = enumerate_families(&w.walker_spec());
        let tally = transported_tally(&families, &w).unwrap();
        let z = enumerate_contact_polynomial(&w.walker_spec());
        assert_eq!(tally, z);
        println!(
            "n={n} t={t} y={y}: transported tally over {} families matches the contact polynomial",
            families.len()
        );
    }
}
