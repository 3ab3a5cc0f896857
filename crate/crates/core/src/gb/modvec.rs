//! Sparse elements of graded free modules.

use std::cmp::Ordering;

use crate::field::PrimeField;
use crate::poly::{Monomial, Poly, PolyRing};

/// A single term `coef * mon * e_comp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub comp: u32,
    pub mon: Monomial,
    pub coef: u32,
}

/// Module term order: block (lower block is greater), then the ring order on
/// monomials, then component (lower index is greater). With no blocks this is
/// the storage order used everywhere outside the engine.
#[derive(Clone, Copy)]
pub(crate) struct TermOrder<'a> {
    pub ring: &'a PolyRing,
    pub blocks: &'a [u8],
}

impl<'a> TermOrder<'a> {
    pub fn plain(ring: &'a PolyRing) -> Self {
        TermOrder { ring, blocks: &[] }
    }

    #[inline]
    pub fn cmp(&self, ac: u32, am: &Monomial, bc: u32, bm: &Monomial) -> Ordering {
        if !self.blocks.is_empty() {
            let (ba, bb) = (self.blocks[ac as usize], self.blocks[bc as usize]);
            if ba != bb {
                return bb.cmp(&ba);
            }
        }
        match self.ring.cmp(am, bm) {
            Ordering::Equal => bc.cmp(&ac),
            o => o,
        }
    }

    #[inline]
    pub fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp(a.comp, &a.mon, b.comp, &b.mon)
    }
}

/// An element of a free module, terms strictly descending in some
/// [`TermOrder`], no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModVec {
    pub(crate) terms: Vec<Term>,
}

impl ModVec {
    pub fn zero() -> Self {
        ModVec { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        ModVec { terms }
    }

    /// `e_comp` itself.
    pub fn unit(comp: usize) -> Self {
        ModVec {
            terms: vec![Term {
                comp: comp as u32,
                mon: Monomial::ONE,
                coef: 1,
            }],
        }
    }

    /// `p * e_comp` in storage order.
    pub fn from_poly(p: &Poly, comp: usize) -> Self {
        ModVec {
            terms: p
                .terms()
                .iter()
                .map(|&(mon, coef)| Term {
                    comp: comp as u32,
                    mon,
                    coef,
                })
                .collect(),
        }
    }

    /// Builds a vector from per-component polynomials, storage order.
    pub fn from_entries(ring: &PolyRing, entries: &[(usize, &Poly)]) -> Self {
        let mut terms = Vec::new();
        for &(c, p) in entries {
            for &(mon, coef) in p.terms() {
                terms.push(Term {
                    comp: c as u32,
                    mon,
                    coef,
                });
            }
        }
        ModVec::from_unsorted(terms, TermOrder::plain(ring), ring.field())
    }

    pub(crate) fn from_unsorted(mut terms: Vec<Term>, ord: TermOrder, f: &PrimeField) -> Self {
        terms.sort_by(|a, b| ord.cmp_terms(b, a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.comp == t.comp && l.mon == t.mon => l.coef = f.add(l.coef, t.coef),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coef != 0);
        ModVec { terms: out }
    }

    /// Re-sorts into another term order.
    pub(crate) fn resort(&mut self, ord: TermOrder) {
        self.terms.sort_by(|a, b| ord.cmp_terms(b, a));
    }

    /// The polynomial in component `comp`.
    pub fn entry(&self, ring: &std::sync::Arc<PolyRing>, comp: usize) -> Poly {
        let mut t: Vec<(Monomial, u32)> = self
            .terms
            .iter()
            .filter(|t| t.comp as usize == comp)
            .map(|t| (t.mon, t.coef))
            .collect();
        t.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Poly::from_sorted(ring, t)
    }

    /// Degree `deg(mon) + twist[comp]` if all terms agree.
    pub fn degree(&self, twists: &[i32]) -> Option<i32> {
        let d0 = self.terms.first().map(|t| t.mon.degree() as i32 + twists[t.comp as usize])?;
        self.terms
            .iter()
            .all(|t| t.mon.degree() as i32 + twists[t.comp as usize] == d0)
            .then_some(d0)
    }

    pub fn is_homogeneous(&self, twists: &[i32]) -> bool {
        self.is_zero() || self.degree(twists).is_some()
    }

    pub fn max_comp(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.comp as usize).max()
    }

    pub fn scale(&self, c: u32, f: &PrimeField) -> ModVec {
        if c == 0 {
            return ModVec::zero();
        }
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: f.mul(t.coef, c),
                    ..*t
                })
                .collect(),
        }
    }

    pub(crate) fn make_monic(&mut self, f: &PrimeField) {
        if let Some(l) = self.terms.first() {
            if l.coef != 1 {
                let inv = f.inv(l.coef);
                for t in &mut self.terms {
                    t.coef = f.mul(t.coef, inv);
                }
            }
        }
    }

    /// `self + c * q * other`; both sorted in `ord`.
    pub(crate) fn add_mul(
        &self,
        c: u32,
        q: &Monomial,
        other: &ModVec,
        ord: TermOrder,
        f: &PrimeField,
    ) -> ModVec {
        ModVec {
            terms: merge_add(&self.terms, c, q, &other.terms, ord, f),
        }
    }

    pub(crate) fn add(&self, other: &ModVec, ord: TermOrder, f: &PrimeField) -> ModVec {
        self.add_mul(1, &Monomial::ONE, other, ord, f)
    }


    /// `p * self`.
    pub(crate) fn mul_poly(&self, p: &Poly, ord: TermOrder, f: &PrimeField) -> ModVec {
        let mut acc = ModVec::zero();
        for &(m, c) in p.terms() {
            acc = acc.add_mul(c, &m, self, ord, f);
        }
        acc
    }

    /// Renumbers components through `map` (which must be monotone to keep
    /// the order, otherwise the caller re-sorts). Terms mapped to `None` are
    /// dropped.
    pub(crate) fn map_comps(&self, map: impl Fn(u32) -> Option<u32>) -> ModVec {
        ModVec {
            terms: self
                .terms
                .iter()
                .filter_map(|t| map(t.comp).map(|c| Term { comp: c, ..*t }))
                .collect(),
        }
    }
}

/// Merge `a + c*q*b` where `a`, `b` are sorted in `ord`.
pub(crate) fn merge_add(
    a: &[Term],
    c: u32,
    q: &Monomial,
    b: &[Term],
    ord: TermOrder,
    f: &PrimeField,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let shift = |t: &Term| Term {
        comp: t.comp,
        mon: t.mon.mul(q),
        coef: f.mul(t.coef, c),
    };
    let mut bj = b.first().map(shift);
    while i < a.len() {
        let Some(tb) = bj else { break };
        match ord.cmp_terms(&a[i], &tb) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                if tb.coef != 0 {
                    out.push(tb);
                }
                j += 1;
                bj = b.get(j).map(shift);
            }
            Ordering::Equal => {
                let v = f.add(a[i].coef, tb.coef);
                if v != 0 {
                    out.push(Term { coef: v, ..a[i] });
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(shift);
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while let Some(tb) = bj {
        if tb.coef != 0 {
            out.push(tb);
        }
        j += 1;
        bj = b.get(j).map(shift);
    }
    out
}
