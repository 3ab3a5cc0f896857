//! Ext and Tor from minimal free resolutions.

use crate::error::Result;
use crate::gb::resolve::{ambient_module, ambient_resolution, ResolutionSlice};
use crate::gb::{resolve, GradedFree, HomMatrix, Ring};
use crate::modops::{homology, ModulePres};
use crate::modops::{blocks_of, hom_free, precompose};

/// `F_i` of a resolution, empty past its end.
fn free_at(r: &ResolutionSlice, i: usize) -> GradedFree {
    r.free(i)
        .cloned()
        .unwrap_or_else(|| GradedFree::new(r.f0.ring(), vec![]))
}

/// `d_i : F_i → F_{i-1}`, with the right (possibly empty) source and target.
fn diff_at(r: &ResolutionSlice, i: usize) -> HomMatrix {
    let src = free_at(r, i);
    let tgt = free_at(r, i - 1);
    if src.rank() == 0 || tgt.rank() == 0 || i > r.steps.len() {
        return HomMatrix::zero(src, tgt);
    }
    r.steps[i - 1].clone()
}

/// `H^i(Hom(F, N))` for a resolution `F` computed far enough.
pub(crate) fn ext_from(r: &ResolutionSlice, i: usize, n: &ModulePres) -> Result<ModulePres> {
    let ring = n.ring().clone();
    let nn = n.minimal()?;
    let q0 = nn.gens();
    let psi = nn.pres();
    let fi = free_at(r, i);
    if fi.rank() == 0 || nn.ngens() == 0 {
        return Ok(ModulePres::zero(&ring));
    }
    let fprev = if i == 0 { GradedFree::new(&ring, vec![]) } else { free_at(r, i - 1) };
    let fnext = free_at(r, i + 1);
    let h_prev = hom_free(&ring, fprev.twists(), q0);
    let h_i = hom_free(&ring, fi.twists(), q0);
    let h_next = hom_free(&ring, fnext.twists(), q0);
    let f = if i == 0 {
        HomMatrix::zero(GradedFree::new(&ring, vec![]), h_i.clone())
    } else {
        precompose(&diff_at(r, i), q0, &h_prev, &h_i)
    };
    let g = precompose(&diff_at(r, i + 1), q0, &h_i, &h_next);
    let b = blocks_of(psi, fi.twists(), &h_i);
    let c = blocks_of(psi, fnext.twists(), &h_next);
    homology(&f, &g, &b, &c)?.minimal()
}

/// `Ext^i_R(M, N)`.
pub fn ext(i: usize, m: &ModulePres, n: &ModulePres) -> Result<ModulePres> {
    m.same_ring(n)?;
    let r = resolve(m, i + 1)?;
    ext_from(&r, i, n)
}

/// `Ext^i_S(M, N)` over the ambient polynomial ring, both read as
/// `S`-modules; the result is an `S`-module.
pub fn ext_ambient(i: usize, m: &ModulePres, n: &ModulePres) -> Result<ModulePres> {
    let r = ambient_resolution(m)?;
    ext_from(&r, i, &ambient_module(n)?)
}

/// `Ext^i_S(M, S)` for the `S`-module `M` (read back over `R` when `ring` is
/// given and the ring ideal kills the result).
pub fn ext_ambient_dual(i: usize, m: &ModulePres, ring: Option<&Ring>) -> Result<ModulePres> {
    let r = ambient_resolution(m)?;
    let s = r.f0.ring().clone();
    let e = ext_from(&r, i, &ModulePres::ring_module(&s, 0))?;
    match ring {
        Some(rr) => e.change_ring(rr)?.minimal(),
        None => Ok(e),
    }
}

/// `F ⊗ N → F' ⊗ N` for `d : F → F'`, on the bases `(a, k)`.
fn tensor_map(d: &HomMatrix, q0: &[i32], src: &GradedFree, tgt: &GradedFree) -> HomMatrix {
    let nq = q0.len();
    let mut cols = Vec::with_capacity(d.ncols() * nq);
    for c in d.cols() {
        for k in 0..nq {
            cols.push(c.map_comps(|a| Some((a as usize * nq + k) as u32)));
        }
    }
    HomMatrix::from_cols_unchecked(src.clone(), tgt.clone(), cols)
}

fn tensor_free(ring: &Ring, f: &[i32], q0: &[i32]) -> GradedFree {
    let mut tw = Vec::with_capacity(f.len() * q0.len());
    for &a in f {
        for &g in q0 {
            tw.push(a + g);
        }
    }
    GradedFree::new(ring, tw)
}

fn tensor_blocks(psi: &HomMatrix, f: &[i32], target: &GradedFree) -> HomMatrix {
    let nq = psi.nrows();
    let mut tw = Vec::new();
    let mut cols = Vec::new();
    for (a, &fa) in f.iter().enumerate() {
        for (l, c) in psi.cols().iter().enumerate() {
            tw.push(fa + psi.source().twists()[l]);
            cols.push(c.map_comps(|k| Some((a * nq + k as usize) as u32)));
        }
    }
    HomMatrix::from_cols_unchecked(GradedFree::new(psi.ring(), tw), target.clone(), cols)
}

/// `Tor_i^R(M, N)`.
pub fn tor(i: usize, m: &ModulePres, n: &ModulePres) -> Result<ModulePres> {
    m.same_ring(n)?;
    let ring = m.ring().clone();
    let r = resolve(m, i + 1)?;
    let nn = n.minimal()?;
    let q0 = nn.gens();
    let fi = free_at(&r, i);
    if fi.rank() == 0 || nn.ngens() == 0 {
        return Ok(ModulePres::zero(&ring));
    }
    let fnext = free_at(&r, i + 1);
    let fprev = if i == 0 { GradedFree::new(&ring, vec![]) } else { free_at(&r, i - 1) };
    let t_next = tensor_free(&ring, fnext.twists(), q0);
    let t_i = tensor_free(&ring, fi.twists(), q0);
    let t_prev = tensor_free(&ring, fprev.twists(), q0);
    let f = tensor_map(&diff_at(&r, i + 1), q0, &t_next, &t_i);
    let g = if i == 0 {
        HomMatrix::zero(t_i.clone(), t_prev.clone())
    } else {
        tensor_map(&diff_at(&r, i), q0, &t_i, &t_prev)
    };
    let b = tensor_blocks(nn.pres(), fi.twists(), &t_i);
    let c = tensor_blocks(nn.pres(), fprev.twists(), &t_prev);
    homology(&f, &g, &b, &c)?.minimal()
}

/// `Ext^i(M, N)` computed from an arbitrary, non-minimal free resolution of
/// `M` built from its given presentation; used to cross-check [`ext`].
pub fn ext_unminimized(i: usize, m: &ModulePres, n: &ModulePres) -> Result<ModulePres> {
    m.same_ring(n)?;
    let mut steps = vec![m.pres().clone()];
    while steps.len() < i + 1 {
        let last = steps.last().unwrap();
        if last.ncols() == 0 {
            break;
        }
        steps.push(crate::gb::syzygies(last)?);
    }
    let complete = steps.last().is_some_and(|s| s.ncols() == 0);
    if complete {
        steps.pop();
    }
    let r = ResolutionSlice {
        module: m.clone(),
        f0: m.cover().clone(),
        steps,
        minimal: false,
        complete,
    };
    ext_from(&r, i, n)
}
