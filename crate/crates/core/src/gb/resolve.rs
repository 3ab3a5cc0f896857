//! Truncated minimal graded free resolutions.

use std::sync::Arc;

use super::free::{GradedFree, HomMatrix};
use super::syz::syzygies;
use crate::error::{Error, Result};
use crate::modops::ModulePres;

/// `F_k --d_k--> … --d_1--> F_0 → M → 0`.
#[derive(Clone, Debug)]
pub struct ResolutionSlice {
    pub module: ModulePres,
    pub f0: GradedFree,
    /// `d_1, d_2, …`; `d_i : F_i → F_{i-1}`.
    pub steps: Vec<HomMatrix>,
    pub minimal: bool,
    /// The last syzygy module computed was zero: the resolution is finite
    /// and `steps` is all of it.
    pub complete: bool,
}

impl ResolutionSlice {
    /// `F_i`, or `None` past the end of a finite resolution or the slice.
    pub fn free(&self, i: usize) -> Option<&GradedFree> {
        if i == 0 {
            Some(&self.f0)
        } else {
            self.steps.get(i - 1).map(|d| d.source())
        }
    }

    /// Ranks of `F_0, F_1, …` as far as computed.
    pub fn ranks(&self) -> Vec<usize> {
        let mut r = vec![self.f0.rank()];
        r.extend(self.steps.iter().map(|d| d.ncols()));
        r
    }

    /// Sorted generator degrees of `F_i` (graded Betti numbers).
    pub fn betti_degrees(&self, i: usize) -> Vec<i32> {
        let mut v = self.free(i).map(|f| f.twists().to_vec()).unwrap_or_default();
        v.sort_unstable();
        v
    }

    /// Projective dimension when the resolution is known to be finite.
    pub fn length(&self) -> Option<usize> {
        if !self.complete {
            return None;
        }
        if self.f0.rank() == 0 {
            return Some(0);
        }
        Some(self.steps.len())
    }

    /// `d_i`, or a zero map when the resolution stopped earlier.
    pub fn differential(&self, i: usize) -> HomMatrix {
        if let Some(d) = self.steps.get(i - 1) {
            return d.clone();
        }
        let ring = self.f0.ring();
        let tgt = self
            .free(i - 1)
            .cloned()
            .unwrap_or_else(|| GradedFree::new(ring, vec![]));
        HomMatrix::zero(GradedFree::new(ring, vec![]), tgt)
    }

    fn truncated(&self, k: usize) -> ResolutionSlice {
        let mut out = self.clone();
        if out.steps.len() > k {
            out.steps.truncate(k);
            out.complete = false;
        }
        out
    }
}

/// First `k` steps of a minimal free resolution of `m`.
pub fn resolve(m: &ModulePres, k: usize) -> Result<ResolutionSlice> {
    if k == 0 {
        return Err(Error::InvalidInput("resolve needs at least one step".into()));
    }
    let mut guard = m.res_cache().lock().unwrap();
    let mut cur = match guard.as_ref() {
        Some(r) if r.complete || r.steps.len() >= k => return Ok(r.truncated(k)),
        Some(r) => (**r).clone(),
        None => {
            let min = m.minimal()?;
            let d1 = min.pres().clone();
            let f0 = d1.target().clone();
            let complete = d1.ncols() == 0;
            ResolutionSlice {
                module: m.clone(),
                f0,
                steps: if complete { vec![] } else { vec![d1] },
                minimal: true,
                complete,
            }
        }
    };
    while !cur.complete && cur.steps.len() < k {
        let s = syzygies(cur.steps.last().unwrap())?;
        if s.ncols() == 0 {
            cur.complete = true;
        } else {
            cur.steps.push(s);
        }
    }
    *guard = Some(Arc::new(cur.clone()));
    Ok(cur.truncated(k))
}

/// The module read over the ambient polynomial ring.
pub fn ambient_module(m: &ModulePres) -> Result<ModulePres> {
    let ring = m.ring();
    if ring.is_polynomial() {
        return Ok(m.clone());
    }
    let s = Arc::new(ring.ambient());
    let poly = ring.poly_ring().clone();
    let f = *poly.field();
    let ord = super::modvec::TermOrder::plain(&poly);
    let base = m.pres().change_ring(&s)?;
    let mut tw = Vec::new();
    let mut cols = Vec::new();
    for g in ring.ideal() {
        for (a, &d) in m.gens().iter().enumerate() {
            cols.push(super::modvec::ModVec::unit(a).mul_poly(g, ord, &f));
            tw.push(d + g.degree().unwrap() as i32);
        }
    }
    let more = HomMatrix::new(GradedFree::new(&s, tw), base.target().clone(), cols)?;
    Ok(ModulePres::new(base.hstack(&more)))
}

/// Minimal free resolution over the ambient polynomial ring (always finite).
pub fn ambient_resolution(m: &ModulePres) -> Result<Arc<ResolutionSlice>> {
    m.ambient_res_cell()
        .get_or_init(|| {
            let sm = ambient_module(m)?;
            let n = m.ring().nvars();
            let r = resolve(&sm, n + 1)?;
            debug_assert!(r.complete, "Hilbert syzygy theorem");
            Ok(Arc::new(r))
        })
        .clone()
}
