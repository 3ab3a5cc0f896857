//! Degreewise dimension counts and Krull dimension from leading terms.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::syz::SubmoduleGb;
use crate::poly::{Monomial, PolyRing};

/// Vector-space dimensions `dims[d - lo]` for `d` in `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedDimTable {
    pub lo: i32,
    pub hi: i32,
    pub dims: Vec<u64>,
}

impl GradedDimTable {
    pub fn zeros(lo: i32, hi: i32) -> Self {
        GradedDimTable {
            lo,
            hi,
            dims: vec![0; (hi - lo + 1).max(0) as usize],
        }
    }

    pub fn from_fn(lo: i32, hi: i32, mut f: impl FnMut(i32) -> u64) -> Self {
        GradedDimTable {
            lo,
            hi,
            dims: (lo..=hi).map(&mut f).collect(),
        }
    }

    /// Dimension in degree `d`; zero outside the window.
    pub fn get(&self, d: i32) -> u64 {
        if d < self.lo || d > self.hi {
            0
        } else {
            self.dims[(d - self.lo) as usize]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&x| x == 0)
    }

    pub fn total(&self) -> u64 {
        self.dims.iter().sum()
    }

    /// Degrees carrying a nonzero dimension.
    pub fn support(&self) -> Vec<i32> {
        (self.lo..=self.hi).filter(|&d| self.get(d) != 0).collect()
    }
}

impl fmt::Display for GradedDimTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (self.lo..=self.hi)
            .map(|d| format!("{d}:{}", self.get(d)))
            .collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

fn standard_count(ring: &PolyRing, leads: &[Monomial], d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    if leads.iter().any(|m| m.is_one()) {
        return 0;
    }
    ring.monomials_of_degree(d)
        .iter()
        .filter(|m| {
            let mask = m.support_mask();
            !leads
                .iter()
                .any(|l| l.support_mask() & !mask == 0 && l.divides(m))
        })
        .count() as u64
}

/// `dim (F/U)_d` from the leading terms of a Gröbner basis of `U`.
pub fn quotient_dim(gb: &SubmoduleGb, d: i32) -> u64 {
    let free = gb.free();
    let ring = free.ring().poly_ring();
    (0..free.rank())
        .map(|c| standard_count(ring, &gb.leads_of(c), d as i64 - free.twists()[c] as i64))
        .sum()
}

/// Krull dimension of `S/L` for the monomial ideal `L` spanned by `leads`;
/// `None` when `L` is the unit ideal.
pub fn monomial_quotient_dim(nvars: usize, leads: &[Monomial]) -> Option<usize> {
    if leads.iter().any(|m| m.is_one()) {
        return None;
    }
    let masks: Vec<u32> = leads.iter().map(|m| m.support_mask()).collect();
    let mut best = 0usize;
    for y in 0u32..(1u32 << nvars) {
        let size = y.count_ones() as usize;
        if size > best && masks.iter().all(|&m| m & !y != 0) {
            best = size;
        }
    }
    Some(best)
}

/// Krull dimension of `F/U`; `None` for the zero module.
pub fn quotient_krull_dim(gb: &SubmoduleGb) -> Option<usize> {
    let free = gb.free();
    let n = free.ring().nvars();
    (0..free.rank())
        .filter_map(|c| monomial_quotient_dim(n, &gb.leads_of(c)))
        .max()
}
