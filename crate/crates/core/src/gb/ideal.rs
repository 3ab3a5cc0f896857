//! Homogeneous ideals of a quotient ring and the four classical operations.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::free::{GradedFree, HomMatrix};
use super::modvec::ModVec;
use super::quotient::Ring;
use super::syz::{minimal_generators, syzygies, SubmoduleGb};
use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdealOp {
    Sum,
    Product,
    Intersection,
    Quotient,
}

impl IdealOp {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "sum" => Ok(IdealOp::Sum),
            "product" => Ok(IdealOp::Product),
            "intersection" | "intersect" => Ok(IdealOp::Intersection),
            "quotient" => Ok(IdealOp::Quotient),
            _ => Err(Error::InvalidInput(format!("unknown ideal operation `{s}`"))),
        }
    }
}

/// A homogeneous ideal `J` of `R = S/I`, kept with a Gröbner basis of
/// `J + I` and a minimal generating set.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
    gb: Arc<SubmoduleGb>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let g: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gb_polys() == other.gb_polys()
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: &[Poly]) -> Result<Self> {
        let poly = ring.poly_ring();
        let mut vecs = Vec::new();
        for g in gens {
            if g.ring().as_ref() != poly.as_ref() {
                return Err(Error::RingMismatch(format!("{g} is not in {ring:?}")));
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(g.to_string()));
            }
            let g = ring.nf(g);
            if !g.is_zero() {
                vecs.push(ModVec::from_poly(&g.monic(), 0));
            }
        }
        let free = GradedFree::new(ring, vec![0]);
        let keep = minimal_generators(&free, &vecs)?;
        let min: Vec<Poly> = keep
            .iter()
            .map(|&i| vecs[i].entry(poly, 0))
            .collect();
        let gb = SubmoduleGb::new(&free, &vecs)?;
        Ok(Ideal {
            ring: ring.clone(),
            gens: min,
            gb: Arc::new(gb),
        })
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Self> {
        let ps = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, &ps)
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal::new(ring, &[]).expect("zero ideal")
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, &[Poly::constant(ring.poly_ring(), 1)]).expect("unit ideal")
    }

    /// The irrelevant ideal generated by the variables.
    pub fn maximal(ring: &Ring) -> Self {
        let p = ring.poly_ring();
        let vars: Vec<Poly> = (0..p.nvars()).map(|i| Poly::var(p, i)).collect();
        Ideal::new(ring, &vars).expect("maximal ideal")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Minimal homogeneous generators (normal forms mod the ring ideal).
    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    /// Reduced Gröbner basis of `J` read in `R`: basis elements of `J + I`
    /// that are nonzero modulo `I`.
    pub fn gb_polys(&self) -> Vec<Poly> {
        let poly = self.ring.poly_ring();
        self.gb
            .basis()
            .iter()
            .map(|v| v.entry(poly, 0))
            .filter(|p| !self.ring.is_zero(p))
            .collect()
    }

    /// Gröbner basis of the preimage `J + I` in the ambient ring.
    pub fn preimage_gb(&self) -> Vec<Poly> {
        let poly = self.ring.poly_ring();
        self.gb.basis().iter().map(|v| v.entry(poly, 0)).collect()
    }


    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb.is_everything()
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.gb.contains(&ModVec::from_poly(p, 0))
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Generated by monomials (modulo the ring ideal).
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if self.ring.as_ref() != other.ring.as_ref() {
            return Err(Error::RingMismatch("ideals live in different rings".into()));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, &g)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b)?);
            }
        }
        Ideal::new(&self.ring, &g)
    }

    /// `J^k`.
    pub fn power(&self, k: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Elements `f` with `f·v_i ≡ 0` modulo `rel`, for the rows `v` of a
    /// column in a free module; the kernel of `R → F/rel`, `1 ↦ v`.
    pub(crate) fn kernel_of_cyclic(ring: &Ring, v: &ModVec, target: &GradedFree, rel: &[ModVec]) -> Result<Ideal> {
        let deg = match v.degree(target.twists()) {
            Some(d) => d,
            None => return Ok(Ideal::unit(ring)),
        };
        let mut tw = vec![deg];
        let mut cols = vec![v.clone()];
        for r in rel {
            if let Some(d) = r.degree(target.twists()) {
                tw.push(d);
                cols.push(r.clone());
            }
        }
        let m = HomMatrix::from_cols_unchecked(GradedFree::new(ring, tw), target.clone(), cols);
        let s = syzygies(&m)?;
        let poly = ring.poly_ring();
        let g: Vec<Poly> = s.cols().iter().map(|c| c.entry(poly, 0)).collect();
        Ideal::new(ring, &g)
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let ring = &self.ring;
        let target = GradedFree::new(ring, vec![0, 0]);
        let poly = ring.poly_ring();
        let one = Poly::constant(poly, 1);
        let v = ModVec::from_entries(poly, &[(0, &one), (1, &one)]);
        let mut rel: Vec<ModVec> = self.gens.iter().map(|g| ModVec::from_poly(g, 0)).collect();
        rel.extend(other.gens.iter().map(|g| ModVec::from_poly(g, 1)));
        Ideal::kernel_of_cyclic(ring, &v, &target, &rel)
    }

    /// `(self : other) = {f : f·other ⊆ self}`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if other.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let ring = &self.ring;
        let k = other.gens.len();
        let poly = ring.poly_ring();
        // R → ⊕_h R/self, 1 ↦ (h_1, …, h_k); each h_i lives in a copy R(d)
        // shifted so the vector is homogeneous of degree 0.
        let target = GradedFree::new(
            ring,
            other.gens.iter().map(|h| -(h.degree().unwrap() as i32)).collect(),
        );
        let entries: Vec<(usize, &Poly)> = other.gens.iter().enumerate().collect();
        let v = ModVec::from_entries(poly, &entries);
        let mut rel = Vec::new();
        for i in 0..k {
            for g in &self.gens {
                rel.push(ModVec::from_poly(g, i));
            }
        }
        Ideal::kernel_of_cyclic(ring, &v, &target, &rel)
    }

    pub fn apply(&self, other: &Ideal, op: IdealOp) -> Result<Ideal> {
        match op {
            IdealOp::Sum => self.sum(other),
            IdealOp::Product => self.product(other),
            IdealOp::Intersection => self.intersection(other),
            IdealOp::Quotient => self.quotient(other),
        }
    }

    /// Same generators read in another ring on the same ambient ring.
    pub fn change_ring(&self, ring: &Ring) -> Result<Ideal> {
        Ideal::new(ring, &self.gens)
    }
}
