use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use super::ring::PolyRing;
use crate::error::{Error, Result};

/// A polynomial in canonical form: terms strictly descending in the ring's
/// order, no zero coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, u32)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Canonical printing: descending terms, coefficients as least nonnegative
/// residues, `*` between factors, `^` for powers.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if *c == 1 {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{c}*{}", self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        Poly {
            ring: ring.clone(),
            terms: if c == 0 {
                vec![]
            } else {
                vec![(Monomial::ONE, c)]
            },
        }
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Poly {
            ring: ring.clone(),
            terms: vec![(ring.var(i), 1)],
        }
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: u32) -> Self {
        let c = c % ring.field().characteristic();
        Poly {
            ring: ring.clone(),
            terms: if c == 0 { vec![] } else { vec![(m, c)] },
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, u32)>) -> Self {
        let f = *ring.field();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % f.characteristic();
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = f.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps terms already in canonical order.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<Self> {
        super::parse::parse_poly(ring, text)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    /// Constant term (0 when absent).
    pub fn constant_term(&self) -> u32 {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    /// Weighted degree of a homogeneous polynomial, `None` for zero or
    /// inhomogeneous input.
    pub fn degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms
            .iter()
            .all(|(m, _)| m.degree() == d)
            .then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ring, other.ring
            )))
        }
    }

    pub fn arith(&self, other: &Poly, op: ArithOp) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(match op {
            ArithOp::Add => self.add_scaled(other, 1),
            ArithOp::Sub => self.add_scaled(other, self.ring.field().neg(1)),
            ArithOp::Mul => self.mul_unchecked(other)?,
        })
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.arith(other, ArithOp::Add)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.arith(other, ArithOp::Mul)
    }

    pub fn neg(&self) -> Poly {
        self.scale(self.ring.field().neg(1))
    }

    pub fn scale(&self, c: u32) -> Poly {
        let f = self.ring.field();
        let c = c % f.characteristic();
        if c == 0 {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: u32) -> Result<Poly> {
        let f = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for &(t, a) in &self.terms {
            let p = t
                .checked_mul(m)
                .ok_or_else(|| Error::Overflow("exponent overflow in product".into()))?;
            terms.push((p, f.mul(a, c)));
        }
        terms.retain(|t| t.1 != 0);
        Ok(Poly {
            ring: self.ring.clone(),
            terms,
        })
    }

    fn add_scaled(&self, other: &Poly, c: u32) -> Poly {
        let f = self.ring.field();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    let v = f.mul(b[j].1, c);
                    if v != 0 {
                        out.push((b[j].0, v));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.add(a[i].1, f.mul(b[j].1, c));
                    if v != 0 {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for &(m, v) in &b[j..] {
            let v = f.mul(v, c);
            if v != 0 {
                out.push((m, v));
            }
        }
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &Poly) -> Result<Poly> {
        let f = self.ring.field();
        let mut prod = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(m1, c1) in &self.terms {
            for &(m2, c2) in &other.terms {
                let m = m1
                    .checked_mul(&m2)
                    .ok_or_else(|| Error::Overflow("exponent overflow in product".into()))?;
                prod.push((m, f.mul(c1, c2)));
            }
        }
        Ok(Poly::from_terms(&self.ring, prod))
    }

    pub fn pow(&self, e: u32) -> Result<Poly> {
        let mut acc = Poly::constant(&self.ring, 1);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            Some(&(_, c)) if c != 1 => self.scale(self.ring.field().inv(c)),
            _ => self.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::ring::MonomialOrder;

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        Arc::new(PolyRing::standard(vars).unwrap())
    }

    #[test]
    fn cancellation() {
        let r = ring(&["x", "y"]);
        let a = Poly::parse(&r, "x+y").unwrap();
        let b = Poly::parse(&r, "-y").unwrap();
        assert_eq!(a.add(&b).unwrap(), Poly::parse(&r, "x").unwrap());
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(&["x", "y"]);
        let a = Poly::parse(&r, "x+y").unwrap();
        let b = Poly::parse(&r, "x-y").unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p, Poly::parse(&r, "x^2 - y^2").unwrap());
        assert_eq!(p.to_string(), "x^2 + 32002*y^2");
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn small_characteristic() {
        let r = Arc::new(
            PolyRing::new(
                PrimeField::new(3).unwrap(),
                &["x", "y"],
                MonomialOrder::GRevLex,
                None,
            )
            .unwrap(),
        );
        let a = Poly::parse(&r, "2*x").unwrap();
        let b = Poly::parse(&r, "2*y").unwrap();
        assert_eq!(a.mul(&b).unwrap().to_string(), "x*y");
    }

    #[test]
    fn ring_mismatch() {
        let r1 = ring(&["x", "y"]);
        let r2 = ring(&["x", "z"]);
        let a = Poly::parse(&r1, "x").unwrap();
        let b = Poly::parse(&r2, "x").unwrap();
        assert!(matches!(a.add(&b), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn homogeneity() {
        let r = ring(&["x", "y", "z"]);
        assert!(Poly::parse(&r, "x*y - z^2").unwrap().is_homogeneous());
        assert!(!Poly::parse(&r, "x*y - z").unwrap().is_homogeneous());
        assert!(Poly::zero(&r).is_homogeneous());
    }
}
