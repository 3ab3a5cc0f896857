use std::fmt;

/// Hard upper bound on the number of ring variables.
pub const MAX_VARS: usize = 16;

/// An exponent vector together with its cached weighted degree.
///
/// Exponents beyond the ring's variable count are always zero, so equality and
/// hashing ignore the ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "m{:?}", &self.exps[..last])
    }
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
        deg: 0,
    };

    pub(crate) fn from_parts(exps: [u16; MAX_VARS], deg: u32) -> Self {
        Monomial { exps, deg }
    }

    #[inline]
    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    /// Weighted degree.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0 && self.exps.iter().all(|&e| e == 0)
    }

    /// Product, or `None` when an exponent would overflow.
    #[inline]
    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].checked_add(other.exps[i])?;
        }
        Some(Monomial {
            exps,
            deg: self.deg.checked_add(other.deg)?,
        })
    }

    /// Product inside the engine, where degree caps keep exponents far below
    /// `u16::MAX`.
    #[inline]
    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other)
            .expect("exponent overflow inside a degree-capped computation")
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    #[inline]
    pub(crate) fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = other.exps[i] - self.exps[i];
        }
        Monomial {
            exps,
            deg: other.deg - self.deg,
        }
    }

    pub(crate) fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        let mut deg = 0u32;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
            if exps[i] != 0 {
                deg += exps[i] as u32 * weights[i];
            }
        }
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` set iff variable `i` occurs.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut m = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                m |= 1 << i;
            }
        }
        m
    }
}
