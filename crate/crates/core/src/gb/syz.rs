//! Syzygies, lifting through a matrix, minimal generators and submodule
//! normal forms.

use super::engine::{Engine, EngineSpec};
use super::free::{GradedFree, HomMatrix};
use super::modvec::{merge_add, ModVec, Term, TermOrder};
use super::quotient::Ring;
use crate::error::Result;
use crate::poly::{Monomial, PolyRing};

/// A fixed Gröbner basis used only for reduction.
pub(crate) struct Reducer {
    basis: Vec<ModVec>,
    leads: Vec<(Monomial, u32)>,
    by_comp: Vec<Vec<usize>>,
    blocks: Vec<u8>,
}

impl Reducer {
    pub fn new(basis: Vec<ModVec>, ncomps: usize, blocks: Vec<u8>) -> Self {
        let mut by_comp = vec![Vec::new(); ncomps];
        let mut leads = Vec::with_capacity(basis.len());
        for (i, v) in basis.iter().enumerate() {
            let l = v.terms[0];
            by_comp[l.comp as usize].push(i);
            leads.push((l.mon, l.mon.support_mask()));
        }
        Reducer {
            basis,
            leads,
            by_comp,
            blocks,
        }
    }

    pub fn basis(&self) -> &[ModVec] {
        &self.basis
    }

    fn find(&self, t: &Term) -> Option<usize> {
        let mask = t.mon.support_mask();
        self.by_comp[t.comp as usize]
            .iter()
            .copied()
            .find(|&i| self.leads[i].1 & !mask == 0 && self.leads[i].0.divides(&t.mon))
    }

    /// Full reduction; `v` must be sorted in this reducer's order.
    pub fn reduce(&self, ring: &PolyRing, v: ModVec) -> ModVec {
        let f = ring.field();
        let ord = TermOrder {
            ring,
            blocks: &self.blocks,
        };
        let mut h = v.terms;
        let mut pos = 0;
        while pos < h.len() {
            let t = h[pos];
            if let Some(gi) = self.find(&t) {
                let g = &self.basis[gi];
                let q = g.terms[0].mon.quotient_of(&t.mon);
                let merged = merge_add(&h[pos + 1..], f.neg(t.coef), &q, &g.terms[1..], ord, f);
                h.truncate(pos);
                h.extend(merged);
            } else {
                pos += 1;
            }
        }
        ModVec::from_sorted(h)
    }

    /// Lead monomials per component.
    pub fn leads_of(&self, comp: usize) -> Vec<Monomial> {
        self.by_comp[comp].iter().map(|&i| self.leads[i].0).collect()
    }
}

/// Gröbner basis of `U + I·F` inside a free module `F`.
pub struct SubmoduleGb {
    free: GradedFree,
    red: Reducer,
}

impl SubmoduleGb {
    pub fn new(free: &GradedFree, gens: &[ModVec]) -> Result<Self> {
        let ring = free.ring();
        let spec = EngineSpec {
            ring: ring.poly_ring(),
            ideal: ring.ideal(),
            blocks: vec![],
            twists: free.twists().to_vec(),
            ideal_comps: (0..free.rank()).collect(),
            caps: ring.caps(),
        };
        let out = Engine::new(&spec).run(gens.to_vec())?;
        Ok(SubmoduleGb {
            free: free.clone(),
            red: Reducer::new(out.basis, free.rank(), vec![]),
        })
    }

    pub fn free(&self) -> &GradedFree {
        &self.free
    }

    /// Reduced Gröbner basis, sorted by degree.
    pub fn basis(&self) -> &[ModVec] {
        self.red.basis()
    }

    pub fn nf(&self, v: &ModVec) -> ModVec {
        self.red.reduce(self.free.ring().poly_ring(), v.clone())
    }

    pub fn contains(&self, v: &ModVec) -> bool {
        self.nf(v).is_zero()
    }

    pub fn leads_of(&self, comp: usize) -> Vec<Monomial> {
        self.red.leads_of(comp)
    }

    /// True when the quotient `F/U` is zero.
    pub fn is_everything(&self) -> bool {
        (0..self.free.rank()).all(|c| self.leads_of(c).iter().any(|m| m.is_one()))
    }
}

/// Indices of a minimal generating subset of the submodule spanned by `vecs`
/// (modulo the ring ideal). Vectors are homogeneous in `free`.
pub fn minimal_generators(free: &GradedFree, vecs: &[ModVec]) -> Result<Vec<usize>> {
    let ring = free.ring();
    let spec = EngineSpec {
        ring: ring.poly_ring(),
        ideal: ring.ideal(),
        blocks: vec![],
        twists: free.twists().to_vec(),
        ideal_comps: (0..free.rank()).collect(),
        caps: ring.caps(),
    };
    let out = Engine::new(&spec).run(vecs.to_vec())?;
    Ok((0..vecs.len()).filter(|&i| out.needed[i]).collect())
}

/// Augmented Gröbner basis of a matrix: lifts vectors through it and
/// produces its syzygies.
pub struct Lifter {
    m: HomMatrix,
    red: Reducer,
}

impl Lifter {
    pub fn new(m: &HomMatrix) -> Result<Self> {
        let ring = m.ring();
        let (r0, r1) = (m.nrows(), m.ncols());
        let mut twists = m.target().twists().to_vec();
        twists.extend_from_slice(m.source().twists());
        let mut blocks = vec![0u8; r0];
        blocks.extend(std::iter::repeat(1u8).take(r1));
        let gens: Vec<ModVec> = m
            .cols()
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let mut terms = c.terms.clone();
                terms.push(Term {
                    comp: (r0 + j) as u32,
                    mon: Monomial::ONE,
                    coef: 1,
                });
                ModVec::from_sorted(terms)
            })
            .collect();
        let spec = EngineSpec {
            ring: ring.poly_ring(),
            ideal: ring.ideal(),
            blocks: blocks.clone(),
            twists,
            ideal_comps: (0..r0).collect(),
            caps: ring.caps(),
        };
        let out = Engine::new(&spec).run(gens)?;
        Ok(Lifter {
            m: m.clone(),
            red: Reducer::new(out.basis, r0 + r1, blocks),
        })
    }

    pub fn matrix(&self) -> &HomMatrix {
        &self.m
    }

    /// Some `c` with `m·c ≡ v` modulo the ring ideal, if `v` is in the image.
    pub fn lift(&self, v: &ModVec) -> Option<ModVec> {
        let ring = self.m.ring();
        let r0 = self.m.nrows() as u32;
        let rem = self.red.reduce(ring.poly_ring(), v.clone());
        if rem.terms.iter().any(|t| t.comp < r0) {
            return None;
        }
        let f = ring.poly_ring().field();
        let c = rem.map_comps(|x| Some(x - r0)).scale(f.neg(1), f);
        Some(ring.nf_vec(&c))
    }

    /// Minimal generators of the kernel, as a map into the source.
    pub fn syzygies(&self) -> Result<HomMatrix> {
        let ring = self.m.ring();
        let r0 = self.m.nrows() as u32;
        let src = self.m.source();
        let mut cand = Vec::new();
        for v in self.red.basis() {
            if v.terms[0].comp >= r0 {
                let w = ring.nf_vec(&v.map_comps(|x| Some(x - r0)));
                if !w.is_zero() {
                    cand.push(w);
                }
            }
        }
        let keep = minimal_generators(src, &cand)?;
        let cols: Vec<ModVec> = keep.into_iter().map(|i| cand[i].clone()).collect();
        let tw: Vec<i32> = cols.iter().map(|c| c.degree(src.twists()).unwrap()).collect();
        Ok(HomMatrix::from_cols_unchecked(
            GradedFree::new(ring, tw),
            src.clone(),
            cols,
        ))
    }
}

/// Minimal generators of `ker m`.
pub fn syzygies(m: &HomMatrix) -> Result<HomMatrix> {
    if m.ncols() == 0 {
        return Ok(HomMatrix::zero(
            GradedFree::new(m.ring(), vec![]),
            m.source().clone(),
        ));
    }
    Lifter::new(m)?.syzygies()
}

/// The submodule of `free` spanned by `vecs`, minimally generated, as a map.
pub fn image_matrix(free: &GradedFree, vecs: &[ModVec]) -> Result<HomMatrix> {
    let ring: &Ring = free.ring();
    let reduced: Vec<ModVec> = vecs.iter().map(|v| ring.nf_vec(v)).collect();
    let keep = minimal_generators(free, &reduced)?;
    let cols: Vec<ModVec> = keep.iter().map(|&i| reduced[i].clone()).collect();
    let tw = cols.iter().map(|c| c.degree(free.twists()).unwrap()).collect();
    Ok(HomMatrix::from_cols_unchecked(GradedFree::new(ring, tw), free.clone(), cols))
}
