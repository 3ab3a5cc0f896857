//! Homogeneous Buchberger algorithm for submodules of graded free modules.
//!
//! Pairs and inputs are processed by degree. Within a degree all S-pairs are
//! reduced before the inputs of that degree, so an input that still reduces
//! to something nonzero is a minimal generator of the submodule (modulo the
//! ring ideal, whose multiples are inserted ahead of the ordinary inputs).

use std::collections::BTreeMap;

use super::modvec::{merge_add, ModVec, Term, TermOrder};
use super::quotient::Caps;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::{Monomial, Poly, PolyRing};

pub(crate) struct EngineSpec<'a> {
    pub ring: &'a PolyRing,
    /// Reduced Gröbner basis of the ring's defining ideal.
    pub ideal: &'a [Poly],
    /// Block number per component; empty means a single block.
    pub blocks: Vec<u8>,
    pub twists: Vec<i32>,
    /// Components that receive `ideal * e_c` generators.
    pub ideal_comps: Vec<usize>,
    pub caps: Caps,
}

pub(crate) struct GbOutput {
    /// Reduced Gröbner basis in engine order, monic.
    pub basis: Vec<ModVec>,
    /// For each ordinary input: whether it was needed (a minimal generator).
    pub needed: Vec<bool>,
}

struct Elem {
    v: ModVec,
    lead: Term,
    mask: u32,
    deg: i32,
    from_ideal: bool,
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
}

pub(crate) struct Engine<'a> {
    spec: &'a EngineSpec<'a>,
    field: PrimeField,
    basis: Vec<Elem>,
    by_comp: Vec<Vec<usize>>,
    pairs: BTreeMap<i32, Vec<Pair>>,
    rank_one: bool,
}

impl<'a> Engine<'a> {
    pub fn new(spec: &'a EngineSpec<'a>) -> Self {
        Engine {
            spec,
            field: *spec.ring.field(),
            basis: Vec::new(),
            by_comp: vec![Vec::new(); spec.twists.len()],
            pairs: BTreeMap::new(),
            rank_one: spec.twists.len() == 1,
        }
    }

    fn ord(&self) -> TermOrder<'_> {
        TermOrder {
            ring: self.spec.ring,
            blocks: &self.spec.blocks,
        }
    }

    fn vdeg(&self, t: &Term) -> i32 {
        t.mon.degree() as i32 + self.spec.twists[t.comp as usize]
    }

    /// Runs the algorithm; `gens` are in storage order and are re-sorted.
    pub fn run(mut self, gens: Vec<ModVec>) -> Result<GbOutput> {
        let ngens = gens.len();
        let mut needed = vec![false; ngens];
        // (degree, ideal-first rank, index, vector)
        let mut inputs: Vec<(i32, u8, usize, ModVec, bool)> = Vec::new();
        for (k, mut g) in gens.into_iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let d = g.degree(&self.spec.twists).ok_or_else(|| {
                Error::Inhomogeneous(format!("generator {k} is not homogeneous"))
            })?;
            g.resort(self.ord());
            inputs.push((d, 1, k, g, false));
        }
        for &c in &self.spec.ideal_comps {
            for (k, p) in self.spec.ideal.iter().enumerate() {
                let v = ModVec::from_poly(p, c);
                let d = p.degree().unwrap_or(0) as i32 + self.spec.twists[c];
                inputs.push((d, 0, k, v, true));
            }
        }
        inputs.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
        let mut next = 0;
        loop {
            let pd = self.pairs.keys().next().copied();
            let id = inputs.get(next).map(|x| x.0);
            let d = match (pd, id) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            if pd == Some(d) {
                let mut batch = self.pairs.remove(&d).unwrap();
                let ord = self.ord();
                batch.sort_by(|a, b| {
                    ord.cmp(a.comp, &a.lcm, b.comp, &b.lcm)
                        .then((a.i, a.j).cmp(&(b.i, b.j)))
                });
                for p in batch {
                    if p.lcm.degree() > self.spec.caps.max_degree {
                        return Err(Error::Truncation {
                            what: "polynomial degree in Gröbner basis".into(),
                            cap: self.spec.caps.max_degree as u64,
                            reached: p.lcm.degree() as u64,
                        });
                    }
                    let s = self.spoly(&p);
                    let r = self.reduce(s);
                    if !r.is_zero() {
                        self.insert(r, false)?;
                    }
                }
            }
            while next < inputs.len() && inputs[next].0 == d {
                let (_, _, k, v, from_ideal) =
                    std::mem::replace(&mut inputs[next], (0, 0, 0, ModVec::zero(), false));
                next += 1;
                let r = self.reduce(v.clone());
                if !r.is_zero() {
                    if !from_ideal {
                        needed[k] = true;
                    }
                    // only an untouched ideal multiple has trivial pairs with its peers
                    let pure = from_ideal && r == v;
                    self.insert(r, pure)?;
                }
            }
        }
        let basis = self.finish();
        Ok(GbOutput { basis, needed })
    }

    fn spoly(&self, p: &Pair) -> ModVec {
        let (a, b) = (&self.basis[p.i], &self.basis[p.j]);
        let qa = a.lead.mon.quotient_of(&p.lcm);
        let qb = b.lead.mon.quotient_of(&p.lcm);
        let f = &self.field;
        let ta: Vec<Term> = a.v.terms[1..]
            .iter()
            .map(|t| Term {
                mon: t.mon.mul(&qa),
                ..*t
            })
            .collect();
        ModVec::from_sorted(merge_add(
            &ta,
            f.neg(1),
            &qb,
            &b.v.terms[1..],
            self.ord(),
            f,
        ))
    }

    #[inline]
    fn find_reducer(&self, t: &Term) -> Option<usize> {
        let tmask = t.mon.support_mask();
        let mut best: Option<usize> = None;
        for &gi in &self.by_comp[t.comp as usize] {
            let g = &self.basis[gi];
            if g.mask & !tmask == 0 && g.lead.mon.divides(&t.mon) {
                match best {
                    Some(b) if self.basis[b].v.terms.len() <= g.v.terms.len() => {}
                    _ => best = Some(gi),
                }
            }
        }
        best
    }

    /// Full reduction against the current basis.
    pub fn reduce(&self, v: ModVec) -> ModVec {
        let f = &self.field;
        let ord = self.ord();
        let mut h = v.terms;
        let mut pos = 0;
        while pos < h.len() {
            let t = h[pos];
            if let Some(gi) = self.find_reducer(&t) {
                let g = &self.basis[gi];
                let q = g.lead.mon.quotient_of(&t.mon);
                let merged = merge_add(&h[pos + 1..], f.neg(t.coef), &q, &g.v.terms[1..], ord, f);
                h.truncate(pos);
                h.extend(merged);
            } else {
                pos += 1;
            }
        }
        ModVec::from_sorted(h)
    }

    fn insert(&mut self, mut v: ModVec, from_ideal: bool) -> Result<()> {
        v.make_monic(&self.field);
        let lead = v.terms[0];
        let idx = self.basis.len();
        if idx >= self.spec.caps.max_basis {
            return Err(Error::Truncation {
                what: "Gröbner basis size".into(),
                cap: self.spec.caps.max_basis as u64,
                reached: idx as u64 + 1,
            });
        }
        let c = lead.comp;
        let weights = self.spec.ring.weights();
        // candidate pairs with h = idx
        let mut cands: Vec<(Pair, bool)> = self.by_comp[c as usize]
            .iter()
            .map(|&g| {
                let e = &self.basis[g];
                let lcm = e.lead.mon.lcm(&lead.mon, weights);
                let disjoint = (self.rank_one && e.lead.mon.is_coprime(&lead.mon))
                    || (from_ideal && e.from_ideal);
                (
                    Pair {
                        i: g,
                        j: idx,
                        lcm,
                        comp: c,
                    },
                    disjoint,
                )
            })
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        while let Some((p, disjoint)) = cands.pop() {
            let dominated = |q: &(Pair, bool)| q.0.lcm.divides(&p.lcm);
            if disjoint || (!cands.iter().any(dominated) && !kept.iter().any(dominated)) {
                kept.push((p, disjoint));
            }
        }
        // drop old pairs made redundant by the new lead
        for list in self.pairs.values_mut() {
            list.retain(|p| {
                if p.comp != c || !lead.mon.divides(&p.lcm) {
                    return true;
                }
                let li = self.basis[p.i].lead.mon.lcm(&lead.mon, weights);
                let lj = self.basis[p.j].lead.mon.lcm(&lead.mon, weights);
                li == p.lcm || lj == p.lcm
            });
        }
        self.pairs.retain(|_, l| !l.is_empty());
        let tw = self.spec.twists[c as usize];
        for (p, disjoint) in kept {
            if !disjoint {
                let d = p.lcm.degree() as i32 + tw;
                self.pairs.entry(d).or_default().push(p);
            }
        }
        let deg = self.vdeg(&lead);
        self.basis.push(Elem {
            mask: lead.mon.support_mask(),
            lead,
            v,
            deg,
            from_ideal,
        });
        self.by_comp[c as usize].push(idx);
        Ok(())
    }

    /// Interreduces and sorts by (degree, lead descending).
    fn finish(mut self) -> Vec<ModVec> {
        for i in 0..self.basis.len() {
            let v = std::mem::take(&mut self.basis[i].v);
            let head = v.terms[0];
            let tail = ModVec::from_sorted(v.terms[1..].to_vec());
            // reducers of tail terms have leads below `head`, never `i` itself
            let r = self.reduce(tail);
            let mut terms = Vec::with_capacity(r.terms.len() + 1);
            terms.push(head);
            terms.extend(r.terms);
            self.basis[i].v = ModVec::from_sorted(terms);
        }
        let ord = self.ord();
        let mut idx: Vec<usize> = (0..self.basis.len()).collect();
        idx.sort_by(|&a, &b| {
            let (ea, eb) = (&self.basis[a], &self.basis[b]);
            ea.deg.cmp(&eb.deg).then(ord.cmp_terms(&eb.lead, &ea.lead))
        });
        let mut slots: Vec<Option<ModVec>> = self
            .basis
            .into_iter()
            .map(|e| Some(e.v))
            .collect();
        idx.into_iter().map(|i| slots[i].take().unwrap()).collect()
    }
}
