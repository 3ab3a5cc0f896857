//! Transpose, syzygies, λ and their relative versions.

use super::hom::{blocks_of, hom_free, hom_module, kernel_gens, precompose, Subquotient};
use super::module::ModulePres;
use crate::error::{Error, Result};
use crate::gb::modvec::TermOrder;
use crate::gb::{resolve, GradedFree, HomMatrix, Ideal, ModVec, SubmoduleGb};
use crate::poly::Poly;

/// `Tr M = coker(φ*)` for the minimal presentation `φ : P1 → P0`.
pub fn transpose(m: &ModulePres) -> Result<ModulePres> {
    let mm = m.minimal()?;
    ModulePres::new(mm.pres().transpose()).minimal()
}

/// `Ω^i M = coker(d_{i+1})`; `Ω^0 M` is the minimal form of `M`.
pub fn syzygy(m: &ModulePres, i: usize) -> Result<ModulePres> {
    if i == 0 {
        return m.minimal();
    }
    let r = resolve(m, i + 1)?;
    match r.free(i) {
        None => Ok(ModulePres::zero(m.ring())),
        Some(fi) => {
            let d = r.differential(i + 1);
            if d.ncols() == 0 {
                Ok(ModulePres::free(fi))
            } else {
                Ok(ModulePres::new_minimal(d))
            }
        }
    }
}

/// `λM = Ω Tr M`.
pub fn lambda(m: &ModulePres) -> Result<ModulePres> {
    syzygy(&transpose(m)?, 1)
}

/// `coker(M* → P0*)`, the other description of `λM` for stable `M`.
pub fn lambda_via_dual(m: &ModulePres) -> Result<ModulePres> {
    let r = ModulePres::ring_module(m.ring(), 0);
    lambda_c(m, &r)
}

struct Relative {
    pre: HomMatrix,
    l0: HomMatrix,
    l1: HomMatrix,
}

fn relative(m: &ModulePres, c: &ModulePres) -> Result<Relative> {
    m.same_ring(c)?;
    let mm = m.minimal()?;
    let cc = c.minimal()?;
    let ring = mm.ring().clone();
    let phi = mm.pres();
    let psi = cc.pres();
    let h0 = hom_free(&ring, mm.gens(), cc.gens());
    let h1 = hom_free(&ring, phi.source().twists(), cc.gens());
    Ok(Relative {
        pre: precompose(phi, cc.gens(), &h0, &h1),
        l0: blocks_of(psi, mm.gens(), &h0),
        l1: blocks_of(psi, phi.source().twists(), &h1),
    })
}

/// `Tr_C M = coker(Hom(φ, C))`.
pub fn transpose_c(m: &ModulePres, c: &ModulePres) -> Result<ModulePres> {
    let r = relative(m, c)?;
    ModulePres::new(r.pre.hstack(&r.l1)).minimal()
}

/// `λ_C M = coker(Hom(M, C) → Hom(P0, C))`.
pub fn lambda_c(m: &ModulePres, c: &ModulePres) -> Result<ModulePres> {
    let r = relative(m, c)?;
    let k = kernel_gens(&r.pre, &r.l1)?;
    ModulePres::new(k.hstack(&r.l0)).minimal()
}

/// The trace ideal: the sum of the images of all maps `M → R`.
pub fn trace_ideal(m: &ModulePres) -> Result<Ideal> {
    let ring = m.ring();
    let r = ModulePres::ring_module(ring, 0);
    let h = hom_module(m, &r)?;
    let poly = ring.poly_ring();
    let mut gens = Vec::new();
    for j in 0..h.module.ngens() {
        let g = h.generator_map(j);
        for c in g.cols() {
            gens.push(c.entry(poly, 0));
        }
    }
    Ideal::new(ring, &gens)
}

/// No nonzero free summand, i.e. the trace ideal is proper.
pub fn is_stable(m: &ModulePres) -> Result<bool> {
    if m.is_zero()? {
        return Ok(true);
    }
    Ok(!trace_ideal(m)?.is_unit())
}

/// The submodule of `M` generated by the images of `vecs` (cover elements).
pub fn image_in(m: &ModulePres, vecs: &[ModVec]) -> Result<ModulePres> {
    let ring = m.ring();
    let mut tw = Vec::new();
    let mut cols = Vec::new();
    for v in vecs {
        let v = m.nf(v)?;
        if let Some(d) = v.degree(m.gens()) {
            tw.push(d);
            cols.push(v);
        }
    }
    let w = HomMatrix::from_cols_unchecked(GradedFree::new(ring, tw), m.cover().clone(), cols);
    Subquotient::new(&w, m.pres())?.module.minimal()
}

/// `cM` as a submodule of `M`.
pub fn ideal_times_module(c: &Ideal, m: &ModulePres) -> Result<ModulePres> {
    let poly = m.ring().poly_ring().clone();
    let f = *poly.field();
    let ord = TermOrder::plain(&poly);
    let mut vecs = Vec::new();
    for g in c.gens() {
        for a in 0..m.ngens() {
            vecs.push(ModVec::unit(a).mul_poly(g, ord, &f));
        }
    }
    image_in(m, &vecs)
}

/// `M/cM`.
pub fn quotient_by_ideal(m: &ModulePres, c: &Ideal) -> Result<ModulePres> {
    m.quotient_by_ideal(c)?.minimal()
}

/// The universal pushforward `0 → M → F → M1 → 0`.
#[derive(Clone, Debug)]
pub struct Pushforward {
    pub free: GradedFree,
    /// `P0 → F`, the composite of the cover with `M → F`.
    pub map: HomMatrix,
    pub cokernel: ModulePres,
}

/// Embeds `M` into the dual of a free cover of `M*`; fails when `M` is not
/// torsionless.
pub fn pushforward(m: &ModulePres) -> Result<Pushforward> {
    let mm = m.minimal()?;
    let ring = mm.ring().clone();
    let r = ModulePres::ring_module(&ring, 0);
    let h = hom_module(&mm, &r)?;
    let poly = ring.poly_ring().clone();
    let dual_gens = h.module.gens().to_vec();
    let free = GradedFree::new(&ring, dual_gens.iter().map(|t| -t).collect());
    let maps: Vec<HomMatrix> = (0..dual_gens.len()).map(|j| h.generator_map(j)).collect();
    let mut cols = Vec::with_capacity(mm.ngens());
    for a in 0..mm.ngens() {
        let entries: Vec<Poly> = maps.iter().map(|g| g.cols()[a].entry(&poly, 0)).collect();
        let e: Vec<(usize, &Poly)> = entries.iter().enumerate().collect();
        cols.push(ModVec::from_entries(&poly, &e));
    }
    let map = HomMatrix::from_cols_unchecked(mm.cover().clone(), free.clone(), cols);
    let none = HomMatrix::zero(GradedFree::new(&ring, vec![]), free.clone());
    let ker = kernel_gens(&map, &none)?;
    let gb: std::sync::Arc<SubmoduleGb> = mm.gb()?;
    if ker.cols().iter().any(|v| !gb.contains(v)) {
        return Err(Error::NotTorsionfree);
    }
    let cokernel = ModulePres::new(map.clone()).minimal()?;
    Ok(Pushforward { free, map, cokernel })
}
