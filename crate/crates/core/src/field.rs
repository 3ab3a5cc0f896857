//! Arithmetic in the prime field F_p.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default characteristic for every ring built without an explicit `char=`.
pub const DEFAULT_CHAR: u32 = 32003;

/// The prime field F_p. Elements are `u32` representatives in `[0, p-1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_CHAR }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n as u64 {
        if n as u64 % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    /// Builds F_p; `p` must be an odd prime below 2^31.
    pub fn new(p: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) || p >= (1 << 31) {
            return Err(Error::InvalidInput(format!(
                "characteristic {p} is not an odd prime below 2^31"
            )));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Reduces a signed integer into `[0, p-1]`.
    #[inline]
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0, "inverse of zero");
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        self.from_i64(t)
    }

    #[inline]
    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    /// Signed representative in `(-p/2, p/2]`, used when printing matrices.
    pub fn centered(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_two() {
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = PrimeField::new(32003).unwrap();
        for a in [1u32, 2, 3, 16001, 32002, 12345] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        let f3 = PrimeField::new(3).unwrap();
        // (2x)(2y) over F_3 has coefficient 4 = 1
        assert_eq!(f3.mul(2, 2), 1);
    }

    #[test]
    fn signed_reduction() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.from_i64(15), 1);
        assert_eq!(f.centered(6), -1);
    }
}
