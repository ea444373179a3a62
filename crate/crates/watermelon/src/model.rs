//! Walker configurations: what the engine computes partition functions *of*.
//!
//! The model is a family of `n` random walkers on the nonnegative integers. Each walker
//! takes `t` steps of `+1` or `-1`. The wall at height 0 is impenetrable (no walker may
//! go below it), and families must be *vicious*: at every integer time all walker
//! heights are distinct. Each visit of the lowest walk to height 0 — its start and end
//! points included — is a wall contact and is weighted by one power of the contact
//! fugacity, giving the contact polynomial of the configuration.
//!
//! [`WalkerSpec`] is the general configuration: arbitrary admissible start and end
//! heights. [`WatermelonSpec`] is the star configuration the closed-form machinery
//! targets: walker `i` runs from height `2i - 2` to height `y + 2i - 2`, so the family
//! looks like a watermelon of deviation `y` whose lowest walk starts on the wall.
//!
//! Admissibility requires all start heights to share one parity. Heights of two walkers
//! in the same parity class can never cross without colliding at an integer time, so
//! "vicious" and "vertex-disjoint paths" coincide — precisely the regime where the
//! determinant routes count the same families as direct enumeration. Mixed-parity
//! configurations would let walkers swap past each other between integer times and are
//! rejected rather than given a misleading answer.

use crate::error::{Error, Result};

/// A general admissible walker configuration.
///
/// Invariants (enforced at construction): `n >= 1`; start heights strictly increasing,
/// nonnegative, all of one parity; end heights strictly increasing, nonnegative; and
/// every end height differs from its start height by an even offset of magnitude at
/// most `t` (otherwise no walk connects them).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkerSpec {
    t: i64,
    starts: Vec<i64>,
    ends: Vec<i64>,
}

impl WalkerSpec {
    /// Validates and builds a configuration.
    pub fn new(t: i64, starts: Vec<i64>, ends: Vec<i64>) -> Result<Self> {
        if starts.is_empty() {
            return Err(Error::InvalidConfig("need at least one walker".into()));
        }
        if starts.len() != ends.len() {
            return Err(Error::InvalidConfig(format!(
                "{} start heights but {} end heights",
                starts.len(),
                ends.len()
            )));
        }
        if t < 0 {
            return Err(Error::InvalidConfig(format!("negative walk length {t}")));
        }
        for (name, v) in [("start", &starts), ("end", &ends)] {
            if v.iter().any(|&h| h < 0) {
                return Err(Error::InvalidConfig(format!(
                    "{name} heights must be nonnegative: {v:?}"
                )));
            }
            if v.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidConfig(format!(
                    "{name} heights must be strictly increasing: {v:?}"
                )));
            }
        }
        if starts.iter().any(|&a| (a - starts[0]) % 2 != 0) {
            return Err(Error::InvalidConfig(format!(
                "start heights must share one parity: {starts:?}"
            )));
        }
        for (&a, &e) in starts.iter().zip(&ends) {
            if (e - a - t) % 2 != 0 {
                return Err(Error::InvalidConfig(format!(
                    "walk of length {t} cannot connect height {a} to {e} (parity)"
                )));
            }
            if (e - a).abs() > t {
                return Err(Error::InvalidConfig(format!(
                    "walk of length {t} cannot connect height {a} to {e} (too far)"
                )));
            }
        }
        Ok(WalkerSpec { t, starts, ends })
    }

    /// Number of walkers.
    pub fn n(&self) -> usize {
        self.starts.len()
    }

    /// Number of steps each walker takes.
    pub fn t(&self) -> i64 {
        self.t
    }

    /// Start heights, lowest first.
    pub fn starts(&self) -> &[i64] {
        &self.starts
    }

    /// End heights, lowest first.
    pub fn ends(&self) -> &[i64] {
        &self.ends
    }
}

/// The star ("watermelon") configuration: walker `i` runs from `2i - 2` to `y + 2i - 2`.
///
/// `y` is the common deviation of all end points from the start points. Admissibility:
/// `n >= 1`, `y >= 0`, `t >= max(y, 1)` and `t = y (mod 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WatermelonSpec {
    n: usize,
    t: i64,
    y: i64,
}

impl WatermelonSpec {
    /// Validates and builds a watermelon configuration.
    pub fn new(n: usize, t: i64, y: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfig("need at least one walker".into()));
        }
        if y < 0 {
            return Err(Error::InvalidConfig(format!("negative deviation y = {y}")));
        }
        if t < 1.max(y) {
            return Err(Error::InvalidConfig(format!(
                "walk length t = {t} must be at least max(y, 1) = {}",
                1.max(y)
            )));
        }
        if (t - y) % 2 != 0 {
            return Err(Error::InvalidConfig(format!(
                "t = {t} and y = {y} must have equal parity"
            )));
        }
        Ok(WatermelonSpec { n, t, y })
    }

    /// Number of walkers.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of steps each walker takes.
    pub fn t(&self) -> i64 {
        self.t
    }

    /// Deviation of the end points.
    pub fn y(&self) -> i64 {
        self.y
    }

    /// Number of down steps in each walk, `(t - y) / 2`.
    pub fn down_steps(&self) -> i64 {
        (self.t - self.y) / 2
    }

    /// The equivalent general configuration with starts `2i - 2` and ends `y + 2i - 2`.
    pub fn walker_spec(&self) -> WalkerSpec {
        let starts: Vec<i64> = (0..self.n as i64).map(|i| 2 * i).collect();
        let ends: Vec<i64> = (0..self.n as i64).map(|i| self.y + 2 * i).collect();
        WalkerSpec::new(self.t, starts, ends)
            .expect("validated watermelon parameters always form a valid configuration")
    }
}
