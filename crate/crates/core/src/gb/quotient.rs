use std::fmt;
use std::sync::Arc;

use super::engine::{Engine, EngineSpec};
use super::modvec::{ModVec, Term, TermOrder};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, PolyRing};

/// Resource limits for Gröbner computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Caps {
    /// Largest polynomial degree an S-pair may reach.
    pub max_degree: u32,
    /// Largest Gröbner basis size.
    pub max_basis: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_degree: 24,
            max_basis: 200_000,
        }
    }
}

/// `S/I` with `I` stored as a reduced Gröbner basis.
#[derive(Clone)]
pub struct QuotientRing {
    poly: Arc<PolyRing>,
    ideal: Vec<Poly>,
    caps: Caps,
}

pub type Ring = Arc<QuotientRing>;

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly && self.ideal == other.ideal
    }
}

impl Eq for QuotientRing {}

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.poly)?;
        if !self.ideal.is_empty() {
            let gens: Vec<String> = self.ideal.iter().map(|p| p.to_string()).collect();
            write!(f, "/({})", gens.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced Gröbner basis of an ideal of `S` (no ring ideal involved).
pub(crate) fn ideal_gb(poly: &PolyRing, base: &[Poly], gens: &[Poly], caps: Caps) -> Result<Vec<Poly>> {
    for g in gens {
        if !g.is_homogeneous() {
            return Err(Error::Inhomogeneous(g.to_string()));
        }
    }
    let spec = EngineSpec {
        ring: poly,
        ideal: base,
        blocks: vec![],
        twists: vec![0],
        ideal_comps: if base.is_empty() { vec![] } else { vec![0] },
        caps,
    };
    let out = Engine::new(&spec).run(gens.iter().map(|g| ModVec::from_poly(g, 0)).collect())?;
    let ring = gens
        .first()
        .map(|g| g.ring().clone())
        .or_else(|| base.first().map(|g| g.ring().clone()));
    Ok(match ring {
        Some(r) => out
            .basis
            .into_iter()
            .map(|v| Poly::from_sorted(&r, v.terms.iter().map(|t| (t.mon, t.coef)).collect()))
            .collect(),
        None => vec![],
    })
}

impl QuotientRing {
    /// `S/(gens)`; the generators must be homogeneous.
    pub fn new(poly: Arc<PolyRing>, gens: &[Poly]) -> Result<Self> {
        QuotientRing::with_caps(poly, gens, Caps::default())
    }

    pub fn with_caps(poly: Arc<PolyRing>, gens: &[Poly], caps: Caps) -> Result<Self> {
        for g in gens {
            if g.ring().as_ref() != poly.as_ref() {
                return Err(Error::RingMismatch(format!("{g} is not in {poly:?}")));
            }
        }
        let ideal = ideal_gb(&poly, &[], gens, caps)?;
        Ok(QuotientRing { poly, ideal, caps })
    }

    /// Standard-graded `F_p[vars]/(ideal)` with `p = 32003`, as a shared handle.
    pub fn build(vars: &[&str], ideal: &[&str]) -> Result<Ring> {
        let poly = Arc::new(PolyRing::standard(vars)?);
        let gens = ideal
            .iter()
            .map(|s| Poly::parse(&poly, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(QuotientRing::new(poly, &gens)?))
    }

    /// The polynomial ring itself.
    pub fn polynomial(poly: Arc<PolyRing>) -> Self {
        QuotientRing {
            poly,
            ideal: vec![],
            caps: Caps::default(),
        }
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        &self.poly
    }

    /// Reduced Gröbner basis of the defining ideal.
    pub fn ideal(&self) -> &[Poly] {
        &self.ideal
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn set_caps(&mut self, caps: Caps) {
        self.caps = caps;
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn is_polynomial(&self) -> bool {
        self.ideal.is_empty()
    }

    /// `R/(extra)` over the same ambient ring.
    pub fn quotient(&self, extra: &[Poly]) -> Result<QuotientRing> {
        let mut gens = self.ideal.clone();
        gens.extend(extra.iter().cloned());
        QuotientRing::with_caps(self.poly.clone(), &gens, self.caps)
    }

    /// The ambient polynomial ring with the same caps.
    pub fn ambient(&self) -> QuotientRing {
        QuotientRing {
            poly: self.poly.clone(),
            ideal: vec![],
            caps: self.caps,
        }
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        Ok(self.nf(&Poly::parse(&self.poly, text)?))
    }

    fn reducer(&self, m: &Monomial) -> Option<&Poly> {
        let mask = m.support_mask();
        self.ideal.iter().find(|g| {
            let l = g.lead().unwrap().0;
            l.support_mask() & !mask == 0 && l.divides(m)
        })
    }

    /// Normal form modulo the defining ideal.
    pub fn nf(&self, p: &Poly) -> Poly {
        if self.ideal.is_empty() || p.is_zero() {
            return p.clone();
        }
        let f = *self.poly.field();
        let ord = TermOrder::plain(&self.poly);
        let mut h: Vec<Term> = ModVec::from_poly(p, 0).terms;
        let mut pos = 0;
        while pos < h.len() {
            let t = h[pos];
            if let Some(g) = self.reducer(&t.mon) {
                let lead = g.lead().unwrap().0;
                let q = lead.quotient_of(&t.mon);
                let gv = ModVec::from_poly(g, 0);
                let merged = super::modvec::merge_add(&h[pos + 1..], f.neg(t.coef), &q, &gv.terms[1..], ord, &f);
                h.truncate(pos);
                h.extend(merged);
            } else {
                pos += 1;
            }
        }
        Poly::from_sorted(&self.poly, h.into_iter().map(|t| (t.mon, t.coef)).collect())
    }

    /// Normal form of a storage-order vector, componentwise.
    pub fn nf_vec(&self, v: &ModVec) -> ModVec {
        if self.ideal.is_empty() || v.is_zero() {
            return v.clone();
        }
        if v.terms.iter().all(|t| self.reducer(&t.mon).is_none()) {
            return v.clone();
        }
        let mut comps: Vec<u32> = v.terms.iter().map(|t| t.comp).collect();
        comps.sort_unstable();
        comps.dedup();
        let mut terms = Vec::with_capacity(v.terms.len());
        for c in comps {
            let p = v.entry(&self.poly, c as usize);
            for &(mon, coef) in self.nf(&p).terms() {
                terms.push(Term { comp: c, mon, coef });
            }
        }
        ModVec::from_unsorted(terms, TermOrder::plain(&self.poly), self.poly.field())
    }

    pub fn is_zero(&self, p: &Poly) -> bool {
        self.nf(p).is_zero()
    }

    /// Whether the ring ideal is generated by monomials.
    pub fn is_monomial(&self) -> bool {
        self.ideal.iter().all(|g| g.is_monomial())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypersurface_normal_form() {
        let s = Arc::new(PolyRing::standard(&["x", "y"]).unwrap());
        let xy = Poly::parse(&s, "x*y").unwrap();
        let r = QuotientRing::new(s.clone(), &[xy]).unwrap();
        assert!(r.is_zero(&Poly::parse(&s, "x^2*y + x*y^3").unwrap()));
        assert_eq!(r.parse("x^2 + x*y").unwrap().to_string(), "x^2");
    }

    #[test]
    fn gb_is_reduced() {
        let s = Arc::new(PolyRing::standard(&["x", "y", "z"]).unwrap());
        let gens = [
            Poly::parse(&s, "x^2 - y*z").unwrap(),
            Poly::parse(&s, "x*y").unwrap(),
        ];
        let r = QuotientRing::new(s.clone(), &gens).unwrap();
        let shown: Vec<String> = r.ideal().iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["x^2 + 32002*y*z", "x*y", "y^2*z"]);
    }
}
