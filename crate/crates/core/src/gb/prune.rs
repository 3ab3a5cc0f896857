//! Minimal presentations by unit elimination followed by removal of
//! redundant relations.

use super::free::{GradedFree, HomMatrix};
use super::modvec::{ModVec, TermOrder};
use super::syz::minimal_generators;
use crate::error::Result;

/// Result of pruning a presentation `F1 → F0`.
#[derive(Clone, Debug)]
pub struct Pruned {
    /// Minimal presentation `F1' → F0'`.
    pub matrix: HomMatrix,
    /// Generator `i` of `F0'` is old generator `kept[i]`.
    pub kept: Vec<usize>,
    /// Old generator `j` expressed in `F0'`.
    pub to_new: Vec<ModVec>,
}

pub fn prune(m: &HomMatrix) -> Result<Pruned> {
    let ring = m.ring().clone();
    let poly = ring.poly_ring().clone();
    let f = *poly.field();
    let ord = TermOrder::plain(&poly);
    let r0 = m.nrows();
    let mut cols: Vec<(i32, ModVec)> = m
        .cols()
        .iter()
        .zip(m.source().twists())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, &d)| (d, c.clone()))
        .collect();
    let mut to_new: Vec<ModVec> = (0..r0).map(ModVec::unit).collect();
    let mut alive = vec![true; r0];
    loop {
        let pivot = cols.iter().enumerate().find_map(|(j, (_, c))| {
            c.terms
                .iter()
                .find(|t| t.mon.is_one())
                .map(|t| (j, t.comp as usize, t.coef))
        });
        let Some((j, i, a)) = pivot else { break };
        let (_, pc) = cols.remove(j);
        let inv = f.inv(a);
        let eliminate = |v: &ModVec| -> ModVec {
            let p = v.entry(&poly, i);
            if p.is_zero() {
                return v.clone();
            }
            let s = pc.mul_poly(&p.scale(f.neg(inv)), ord, &f);
            ring.nf_vec(&v.add(&s, ord, &f))
        };
        for (_, c) in cols.iter_mut() {
            *c = eliminate(c);
        }
        for v in to_new.iter_mut() {
            *v = eliminate(v);
        }
        alive[i] = false;
        cols.retain(|(_, c)| !c.is_zero());
    }
    let kept: Vec<usize> = (0..r0).filter(|&i| alive[i]).collect();
    let mut newpos = vec![u32::MAX; r0];
    for (k, &i) in kept.iter().enumerate() {
        newpos[i] = k as u32;
    }
    let remap = |v: &ModVec| {
        v.map_comps(|c| {
            let n = newpos[c as usize];
            debug_assert!(n != u32::MAX, "eliminated generator survived");
            Some(n)
        })
    };
    let f0 = GradedFree::new(
        &ring,
        kept.iter().map(|&i| m.target().twists()[i]).collect(),
    );
    let vecs: Vec<ModVec> = cols.iter().map(|(_, c)| remap(c)).collect();
    let keep = minimal_generators(&f0, &vecs)?;
    let tw = keep.iter().map(|&k| cols[k].0).collect();
    let rel = keep.iter().map(|&k| vecs[k].clone()).collect();
    let to_new = to_new.iter().map(remap).collect();
    Ok(Pruned {
        matrix: HomMatrix::from_cols_unchecked(GradedFree::new(&ring, tw), f0, rel),
        kept,
        to_new,
    })
}
