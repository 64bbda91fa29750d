use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered pair of distinct vertices, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Pair {
    u: usize,
    v: usize,
}

impl Pair {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Pair { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Pair { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::input(format!("loop pair ({a}, {a})"))),
        }
    }

    /// Caller guarantees `a != b`.
    pub(crate) fn of(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b);
        if a < b {
            Pair { u: a, v: b }
        } else {
            Pair { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`, if `x` is an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl TryFrom<[usize; 2]> for Pair {
    type Error = Error;

    fn try_from(value: [usize; 2]) -> Result<Self> {
        Pair::new(value[0], value[1])
    }
}

impl From<Pair> for [usize; 2] {
    fn from(p: Pair) -> Self {
        [p.u, p.v]
    }
}
