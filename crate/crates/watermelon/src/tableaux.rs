//! The bijective route: walker families as semistandard tableaux, and a sliding
//! procedure that transports wall contacts of the lowest walk into a shortening of the
//! topmost walk.
//!
//! **Dictionary.** Label each down step of a walk by the time coordinate at which it
//! starts (0-based). Column `i` of the tableau is the label list of walker `i`'s down
//! steps. For a watermelon family the columns all have the same length `(t - y) / 2`,
//! columns increase strictly (two down steps of one walk take distinct times), rows
//! increase weakly (a lower walker must bank its descents no later than the one above),
//! and an entry in row `r` (0-based) is at least `2r + 1`: before its `(r+1)`-st
//! descent the lowest walk must have climbed at least `r + 1` times to stay above the
//! wall — and an entry *equal* to `2r + 1` marks exactly a wall contact of the lowest
//! walk. The forced contact at the start has no column entry; every later contact of
//! the lowest walk corresponds to one at-bound entry of column 0.
//!
//! **Transport.** One round takes the bottom-most at-bound entry of column 0 as a
//! *special* entry and slides it by jeu-de-taquin moves (adjusted by ±1 so that rows
//! and columns stay monotone around it) to a corner of the shape, where it is deleted.
//! Each round removes one at-bound entry and shortens the shape by one cell; after all
//! `l` rounds every entry is decremented. The result is the tableau of a family in
//! which walker `n` takes `t - l - 1` steps and ends `l + 1` levels higher relative to
//! its length, while the lowest walk has traded its `l` non-start contacts for
//! freedom: it may now touch the wall arbitrarily. Running the moves backwards
//! ([`bijection_inverse`]) restores the original family exactly, which is the
//! family-by-family proof that families with `l + 1` contacts are equinumerous with
//! the shortened-top-walk families — the combinatorial heart of the closed-form
//! contact counts.

use num::bigint::BigInt;
use num::traits::One;
use std::fmt;

use crate::error::{Error, Result};
use crate::model::WatermelonSpec;
use crate::oracle::{contacts, PathFamily, Step};
use crate::poly::ContactPolynomial;

/// A column-strict, row-weak filling of a top-left-justified shape with
/// non-increasing column heights, stored column-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemistandardTableau {
    cols: Vec<Vec<i64>>,
}

impl SemistandardTableau {
    /// Validates shape (column heights non-increasing left to right), strict increase
    /// down each column, and weak increase along each row.
    pub fn new(cols: Vec<Vec<i64>>) -> Result<Self> {
        for pair in cols.windows(2) {
            if pair[0].len() < pair[1].len() {
                return Err(Error::InvalidTableau(format!(
                    "column heights must be non-increasing, got {} then {}",
                    pair[0].len(),
                    pair[1].len()
                )));
            }
        }
        for (c, col) in cols.iter().enumerate() {
            for r in 1..col.len() {
                if col[r] <= col[r - 1] {
                    return Err(Error::InvalidTableau(format!(
                        "column {c} not strictly increasing at row {r}: {} then {}",
                        col[r - 1],
                        col[r]
                    )));
                }
            }
        }
        for c in 1..cols.len() {
            // heights are non-increasing, so the zip covers every cell of column c
            for (r, (left, right)) in cols[c - 1].iter().zip(&cols[c]).enumerate() {
                if right < left {
                    return Err(Error::InvalidTableau(format!(
                        "row {r} not weakly increasing at column {c}: {left} then {right}"
                    )));
                }
            }
        }
        Ok(SemistandardTableau { cols })
    }

    /// The columns, leftmost first.
    pub fn cols(&self) -> &[Vec<i64>] {
        &self.cols
    }

    /// The filling reorganized into rows, topmost first.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        rows_from_cols(&self.cols)
    }

    /// Checks the walker dictionary's extra constraint: the entry at (0-based) row
    /// `r` is at least `2r + 1`.
    pub fn check_row_bounds(&self) -> Result<()> {
        for (c, col) in self.cols.iter().enumerate() {
            for (r, &v) in col.iter().enumerate() {
                if v < 2 * r as i64 + 1 {
                    return Err(Error::InvalidTableau(format!(
                        "entry {v} at row {r}, column {c} is below the bound {}",
                        2 * r + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:3}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn rows_from_cols(cols: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let height = cols.first().map_or(0, Vec::len);
    (0..height)
        .map(|r| cols.iter().filter_map(|col| col.get(r).copied()).collect())
        .collect()
}

/// Reads a family's down-step time labels into a tableau (column `i` = walker `i`).
pub fn family_to_tableau(family: &PathFamily) -> Result<SemistandardTableau> {
    let cols = family
        .walks()
        .iter()
        .map(|walk| {
            walk.iter()
                .enumerate()
                .filter(|(_, s)| **s == Step::Down)
                .map(|(x, _)| x as i64)
                .collect()
        })
        .collect();
    SemistandardTableau::new(cols)
}

/// Rebuilds a family from a tableau: walker `i` starts at `starts[i]`, takes
/// `lengths[i]` steps, and descends exactly at the times in column `i`.
pub fn tableau_to_family(
    tableau: &SemistandardTableau,
    starts: &[i64],
    lengths: &[i64],
) -> Result<PathFamily> {
    let cols = tableau.cols();
    if cols.len() != starts.len() || cols.len() != lengths.len() {
        return Err(Error::InvalidTableau(format!(
            "{} columns for {} starts and {} lengths",
            cols.len(),
            starts.len(),
            lengths.len()
        )));
    }
    let mut walks = Vec::with_capacity(cols.len());
    for (i, col) in cols.iter().enumerate() {
        let len = lengths[i];
        if let Some(&label) = col.iter().find(|&&x| x < 0 || x >= len) {
            return Err(Error::InvalidTableau(format!(
                "column {i} label {label} outside walk length {len}"
            )));
        }
        let mut walk = vec![Step::Up; len as usize];
        for &x in col {
            walk[x as usize] = Step::Down;
        }
        walks.push(walk);
    }
    PathFamily::new(starts.to_vec(), walks)
}

/// One transport round: which row of column 0 went special, where its entry left the
/// shape, and the whole filling right after the slide (special still sitting in the
/// corner, about to be deleted) — the state worth printing when tracing the procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundRecord {
    /// 0-based row of column 0 whose at-bound entry was slid out.
    pub special_row: usize,
    /// (row, column) of the corner where the slide stopped.
    pub corner: (usize, usize),
    /// The filling after the slide, in rows, with the special entry still present.
    pub after_slide_rows: Vec<Vec<i64>>,
}

/// Outcome of the forward transport: the image family, the tableau before and after,
/// and per-round traces.
#[derive(Debug, Clone)]
pub struct ForwardTransport {
    /// The image: walkers 1..n unchanged in length, walker n shortened by
    /// `contacts_transported + 1` steps.
    pub family: PathFamily,
    /// Tableau of the input family.
    pub start: SemistandardTableau,
    /// Tableau of the image family (after all rounds and the global decrement).
    pub end: SemistandardTableau,
    /// One record per transported contact, in execution order.
    pub rounds: Vec<RoundRecord>,
    /// Number of contacts transported: the input family's contact count minus one.
    pub contacts_transported: usize,
}

fn cell(cols: &[Vec<i64>], r: usize, c: usize) -> Option<i64> {
    cols.get(c).and_then(|col| col.get(r)).copied()
}

/// Forward slide: move the special entry at `(r, c)` (by value-adjusted swaps with its
/// right and bottom neighbors) until it reaches a corner; returns the corner. The
/// moves never read the special value itself, only its neighbors:
/// with right neighbor `x` and bottom neighbor `b` (absent = infinite), swap down
/// when `x >= b - 1` (writing `b - 1` into the vacated cell), otherwise swap right
/// (writing `x + 1`).
fn slide_forward(cols: &mut [Vec<i64>], start: (usize, usize)) -> (usize, usize) {
    let (mut r, mut c) = start;
    loop {
        let right = cell(cols, r, c + 1);
        let below = cell(cols, r + 1, c);
        let s = cols[c][r];
        match (right, below) {
            (None, None) => return (r, c),
            (Some(x), None) => {
                cols[c][r] = x + 1;
                cols[c + 1][r] = s;
                c += 1;
            }
            (None, Some(b)) => {
                cols[c][r] = b - 1;
                cols[c][r + 1] = s;
                r += 1;
            }
            (Some(x), Some(b)) => {
                if x >= b - 1 {
                    cols[c][r] = b - 1;
                    cols[c][r + 1] = s;
                    r += 1;
                } else {
                    cols[c][r] = x + 1;
                    cols[c + 1][r] = s;
                    c += 1;
                }
            }
        }
    }
}

/// Inverse slide: move the special entry at `(r, c)` up and left until it reaches
/// column 0 at a row whose bound absorbs it (or the top-left cell); returns the
/// landing position. With left neighbor `x` and upper neighbor `u` (absent = minus
/// infinity): in column 0, stop when `u <= 2r` (the incremented entry `u + 1` fits
/// under the row bound `2r + 1`), else swap up (writing `u + 1`); elsewhere swap up
/// when `x <= u + 1`, otherwise swap left (writing `x - 1`).
fn slide_inverse(cols: &mut [Vec<i64>], start: (usize, usize)) -> (usize, usize) {
    let (mut r, mut c) = start;
    loop {
        let s = cols[c][r];
        if c == 0 {
            if r == 0 {
                return (0, 0);
            }
            let u = cols[0][r - 1];
            if u <= 2 * r as i64 {
                return (r, 0);
            }
            cols[0][r] = u + 1;
            cols[0][r - 1] = s;
            r -= 1;
            continue;
        }
        let x = cols[c - 1][r];
        let up_swap = match r {
            0 => false,
            _ => x <= cols[c][r - 1] + 1,
        };
        if up_swap {
            let u = cols[c][r - 1];
            cols[c][r] = u + 1;
            cols[c][r - 1] = s;
            r -= 1;
        } else {
            cols[c][r] = x - 1;
            cols[c - 1][r] = s;
            c -= 1;
        }
    }
}

/// Transports all non-start wall contacts of a watermelon family into a shortening of
/// the top walker: the image family has walkers `1..n` unchanged in length and walker
/// `n` of length `t - l - 1` ending at relative height `y + 2n + l - 3`, where `l + 1`
/// was the input's contact count. Bijective; see [`bijection_inverse`].
pub fn bijection_forward(family: &PathFamily, w: &WatermelonSpec) -> Result<ForwardTransport> {
    let spec = w.walker_spec();
    family.check_matches(&spec)?;
    let transported = contacts(family) - 1;

    let start = family_to_tableau(family)?;
    start.check_row_bounds()?;
    let mut cols = start.cols().to_vec();

    let mut rounds = Vec::with_capacity(transported);
    // each round removes the bottom-most at-bound entry of column 0
    while let Some(special_row) = (0..cols[0].len())
        .rev()
        .find(|&r| cols[0][r] == 2 * r as i64 + 1)
    {
        let corner = slide_forward(&mut cols, (special_row, 0));
        let after_slide_rows = rows_from_cols(&cols);
        let removed = cols[corner.1].pop().expect("corner cell exists");
        debug_assert_eq!(removed, 2 * special_row as i64 + 1);
        debug_assert_eq!(cols[corner.1].len(), corner.0);
        rounds.push(RoundRecord {
            special_row,
            corner,
            after_slide_rows,
        });
    }
    if rounds.len() != transported {
        return Err(Error::InvalidTableau(format!(
            "transport removed {} entries but the family has {} non-start contacts",
            rounds.len(),
            transported
        )));
    }

    for col in &mut cols {
        for v in col.iter_mut() {
            *v -= 1;
        }
    }
    let end = SemistandardTableau::new(cols)?;
    end.check_row_bounds()?;

    let n = w.n();
    let mut lengths = vec![w.t(); n];
    lengths[n - 1] = w.t() - transported as i64 - 1;
    let image = tableau_to_family(&end, spec.starts(), &lengths)?;
    image.check_vicious()?;
    Ok(ForwardTransport {
        family: image,
        start,
        end,
        rounds,
        contacts_transported: transported,
    })
}

/// Inverts [`bijection_forward`]: reads off `l` from the top walker's length deficit,
/// re-inserts `l` special entries (each climbing back to column 0 and crystallizing at
/// its row bound), and restores the original family with `l + 1` wall contacts.
pub fn bijection_inverse(image: &PathFamily, w: &WatermelonSpec) -> Result<PathFamily> {
    let n = w.n();
    let (t, y) = (w.t(), w.y());
    let spec = w.walker_spec();
    if image.n() != n {
        return Err(Error::InvalidConfig(format!(
            "image family has {} walkers, configuration has {n}",
            image.n()
        )));
    }
    if image.starts() != spec.starts() {
        return Err(Error::InvalidConfig(format!(
            "image family starts {:?} do not match configuration starts {:?}",
            image.starts(),
            spec.starts()
        )));
    }
    for i in 0..n - 1 {
        if image.walks()[i].len() as i64 != t {
            return Err(Error::InvalidConfig(format!(
                "walker {i} of the image must have full length {t}"
            )));
        }
        if image.end(i) != spec.ends()[i] {
            return Err(Error::InvalidConfig(format!(
                "walker {i} of the image ends at {}, want {}",
                image.end(i),
                spec.ends()[i]
            )));
        }
    }
    let short = image.walks()[n - 1].len() as i64;
    let transported = t - 1 - short;
    if transported < 0 || transported > (t - y) / 2 {
        return Err(Error::InvalidConfig(format!(
            "top walker length {short} encodes no valid contact count for t = {t}"
        )));
    }
    let want_end = y + 2 * (n as i64 - 1) + transported - 1;
    if image.end(n - 1) != want_end {
        return Err(Error::InvalidConfig(format!(
            "top walker of the image ends at {}, want {want_end}",
            image.end(n - 1)
        )));
    }
    image.check_vicious()?;

    let tab = family_to_tableau(image)?;
    let mut cols = tab.cols().to_vec();
    for col in &mut cols {
        for v in col.iter_mut() {
            *v += 1;
        }
    }
    for _ in 0..transported {
        let c = n - 1;
        let r = cols[c].len();
        cols[c].push(i64::MAX); // placeholder; the special value is never read
        let (lr, lc) = slide_inverse(&mut cols, (r, c));
        debug_assert_eq!(lc, 0);
        cols[lc][lr] = 2 * lr as i64 + 1;
    }

    let restored = SemistandardTableau::new(cols)?;
    restored.check_row_bounds()?;
    let family = tableau_to_family(&restored, spec.starts(), &vec![t; n])?;
    family.check_matches(&spec)?;
    if contacts(&family) != transported as usize + 1 {
        return Err(Error::InvalidTableau(format!(
            "restored family has {} contacts, expected {}",
            contacts(&family),
            transported + 1
        )));
    }
    Ok(family)
}

/// Tallies the image-side cardinalities: for each contact surplus `l`, the number of
/// families mapped there by [`bijection_forward`] must equal the coefficient of
/// `kappa^(l+1)` in the contact polynomial. Returns the tally as a polynomial (so the
/// caller can compare against any exact route).
pub fn transported_tally(families: &[PathFamily], w: &WatermelonSpec) -> Result<ContactPolynomial> {
    let mut tally = ContactPolynomial::zero();
    for family in families {
        let transport = bijection_forward(family, w)?;
        let restored = bijection_inverse(&transport.family, w)?;
        if &restored != family {
            return Err(Error::InvalidTableau(
                "inverse transport failed to restore the family".into(),
            ));
        }
        tally.add_term(transport.contacts_transported + 1, BigInt::one());
    }
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_contact_polynomial, enumerate_families};

    /// The worked five-column example: a 4-walker family with `t = 12`, `y = 2` and
    /// three transportable contacts.
    fn worked_family() -> (PathFamily, WatermelonSpec) {
        let family = PathFamily::from_strings(
            vec![0, 2, 4, 6],
            &[
                "uduududduduu",
                "uuduuudddduu",
                "uuduuuddudud",
                "uuuuuudddudd",
            ],
        )
        .unwrap();
        let w = WatermelonSpec::new(4, 12, 2).unwrap();
        (family, w)
    }

    fn worked_image() -> PathFamily {
        PathFamily::from_strings(
            vec![0, 2, 4, 6],
            &["uudduduudduu", "uuduudduudud", "uuuudduududd", "uuuuuddu"],
        )
        .unwrap()
    }

    #[test]
    fn dictionary_reads_down_step_times() {
        let (family, _) = worked_family();
        let tab = family_to_tableau(&family).unwrap();
        assert_eq!(
            tab.rows(),
            vec![
                vec![1, 2, 2, 6],
                vec![4, 6, 6, 7],
                vec![6, 7, 7, 8],
                vec![7, 8, 9, 10],
                vec![9, 9, 11, 11],
            ]
        );
        tab.check_row_bounds().unwrap();
        // and back
        let rebuilt = tableau_to_family(&tab, family.starts(), &[12, 12, 12, 12]).unwrap();
        assert_eq!(rebuilt, family);
    }

    #[test]
    fn tableau_validation_rejects_bad_fillings() {
        // column not strictly increasing
        assert!(SemistandardTableau::new(vec![vec![1, 1]]).is_err());
        // row decreasing
        assert!(SemistandardTableau::new(vec![vec![3], vec![2]]).is_err());
        // shape with a longer second column
        assert!(SemistandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        // bound violation caught separately
        let t = SemistandardTableau::new(vec![vec![1, 2]]).unwrap();
        assert!(t.check_row_bounds().is_err());
    }

    #[test]
    fn first_round_slides_to_the_recorded_corner() {
        let (family, w) = worked_family();
        let transport = bijection_forward(&family, &w).unwrap();
        assert_eq!(transport.contacts_transported, 3);
        let round1 = &transport.rounds[0];
        assert_eq!(round1.special_row, 4);
        assert_eq!(round1.corner, (4, 3));
        assert_eq!(
            round1.after_slide_rows,
            vec![
                vec![1, 2, 2, 6],
                vec![4, 6, 6, 7],
                vec![6, 7, 7, 8],
                vec![7, 8, 9, 10],
                vec![10, 12, 12, 9],
            ]
        );
    }

    #[test]
    fn forward_transport_matches_worked_example() {
        let (family, w) = worked_family();
        let transport = bijection_forward(&family, &w).unwrap();
        assert_eq!(
            transport.end.rows(),
            vec![
                vec![2, 2, 4, 5],
                vec![3, 5, 5, 6],
                vec![5, 6, 8],
                vec![8, 9, 10],
                vec![9, 11, 11],
            ]
        );
        assert_eq!(transport.family, worked_image());
    }

    #[test]
    fn inverse_restores_worked_example() {
        let (family, w) = worked_family();
        let restored = bijection_inverse(&worked_image(), &w).unwrap();
        assert_eq!(restored, family);
    }

    #[test]
    fn round_trip_and_cardinalities_small_grid() {
        for n in 1..=2usize {
            for y in 0..=2i64 {
                let mut t = if y > 0 { y } else { 2 };
                while t <= 6 {
                    let w = WatermelonSpec::new(n, t, y).unwrap();
                    let families = enumerate_families(&w.walker_spec());
                    let tally = transported_tally(&families, &w).unwrap();
                    assert_eq!(
                        tally,
                        enumerate_contact_polynomial(&w.walker_spec()),
                        "n={n} t={t} y={y}"
                    );
                    t += 2;
                }
            }
        }
    }

    #[test]
    fn images_are_distinct_within_length_class() {
        // injectivity on a grid cell: distinct families map to distinct images
        let w = WatermelonSpec::new(2, 6, 0).unwrap();
        let families = enumerate_families(&w.walker_spec());
        let mut images: Vec<PathFamily> = Vec::new();
        for f in &families {
            let img = bijection_forward(f, &w).unwrap().family;
            assert!(!images.contains(&img), "collision for {f:?}");
            images.push(img);
        }
    }

    #[test]
    fn inverse_rejects_malformed_images() {
        let (_, w) = worked_family();
        // wrong top-walker length parity / end height: drop two steps
        let bad = PathFamily::from_strings(
            vec![0, 2, 4, 6],
            &["uduududduduu", "uuduuudddduu", "uuduuuddudud", "uuuuud"],
        )
        .unwrap();
        assert!(bijection_inverse(&bad, &w).is_err());
    }
}
