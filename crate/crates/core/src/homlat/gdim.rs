//! Torsionfreeness, G_C-dimension, semidualizing modules and the Auslander
//! class. Conditions quantified over all `i ≥ 1` are checked for
//! `1 ≤ i ≤ depth R + 1`.

use serde::Serialize;

use super::depth::{depth, grade, ring_depth};
use super::ext::{ext, ext_ambient_dual, tor};
use crate::error::{Error, Result};
use crate::gb::{resolve, HomMatrix, Ideal, ModVec, QuotientRing, Ring};
use crate::modops::{
    hom_module, is_bijective, iso_probe, syzygy, tensor_raw, transpose, IsoOptions, ModulePres,
};

/// `Ext^i(Tr M, R) = 0` for `1 ≤ i ≤ n`.
pub fn n_torsionfree(m: &ModulePres, n: usize) -> Result<bool> {
    let t = transpose(m)?;
    if t.is_zero()? {
        return Ok(true);
    }
    let r = ModulePres::ring_module(m.ring(), 0);
    for i in 1..=n {
        if !ext(i, &t, &r)?.is_zero()? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `M` is an `n`-th syzygy, decided by the torsionfreeness
/// criterion (valid for modules of finite G-dimension).
pub fn nth_syzygy_test(m: &ModulePres, n: usize) -> Result<bool> {
    n_torsionfree(m, n)
}

/// `ω_R = Ext^c_S(R, S)(−w)` with `c = codim R` and `w` the weight sum, for
/// a Cohen–Macaulay ring.
pub fn canonical_module(ring: &Ring) -> Result<ModulePres> {
    if !is_cohen_macaulay_ring(ring)? {
        return Err(Error::NotCohenMacaulay(format!("{:?}", ring.ideal())));
    }
    let r = ModulePres::ring_module(ring, 0);
    let n = ring.nvars();
    let d = r.krull_dim()?.expect("the ring is nonzero");
    let w = ring.poly_ring().weights().iter().sum::<u32>() as i32;
    Ok(ext_ambient_dual(n - d, &r, Some(ring))?.shift(-w))
}

pub fn is_cohen_macaulay_ring(ring: &Ring) -> Result<bool> {
    let r = ModulePres::ring_module(ring, 0);
    Ok(depth(&r)? == r.krull_dim()?)
}

/// Cohen–Macaulay with cyclic canonical module.
pub fn is_gorenstein_ring(ring: &Ring) -> Result<bool> {
    Ok(is_cohen_macaulay_ring(ring)? && canonical_module(ring)?.minimal()?.ngens() == 1)
}

fn vanishes(range: std::ops::RangeInclusive<usize>, mut f: impl FnMut(usize) -> Result<ModulePres>) -> Result<bool> {
    for i in range {
        if !f(i)?.is_zero()? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn twist_opts() -> IsoOptions {
    IsoOptions {
        window: 6,
        ..IsoOptions::default()
    }
}

/// Outcome of a bounded total-reflexivity test.
#[derive(Clone, Debug, Serialize)]
pub struct ReflexivityReport {
    pub biduality: bool,
    pub ext_vanishing: bool,
    pub dual_ext_vanishing: bool,
    /// Ext conditions were checked for `1 ≤ i ≤ bound`.
    pub bound: usize,
}

impl ReflexivityReport {
    pub fn holds(&self) -> bool {
        self.biduality && self.ext_vanishing && self.dual_ext_vanishing
    }
}

/// The natural map `M → Hom(Hom(M, C), C)` is bijective.
pub fn biduality(m: &ModulePres, c: &ModulePres) -> Result<bool> {
    let h1 = hom_module(m, c)?;
    let mm = h1.source.clone();
    if mm.ngens() == 0 {
        return Ok(true);
    }
    let h2 = hom_module(&h1.module, c)?;
    let nh = h1.module.ngens();
    let mut cols = Vec::with_capacity(mm.ngens());
    for a in 0..mm.ngens() {
        let gens: Vec<HomMatrix> = (0..nh).map(|j| h1.generator_map(j)).collect();
        let ev_cols: Vec<ModVec> = gens.iter().map(|g| g.cols()[a].clone()).collect();
        let ev = HomMatrix::from_cols_unchecked(h1.module.cover().clone(), h1.target.cover().clone(), ev_cols);
        match h2.element_of(&ev) {
            Some(v) => cols.push(v),
            None => return Ok(false),
        }
    }
    let w = HomMatrix::from_cols_unchecked(mm.cover().clone(), h2.module.cover().clone(), cols);
    is_bijective(&mm, &h2.module, &w)
}

/// Total `C`-reflexivity with bounded Ext checks.
pub fn total_reflexivity(m: &ModulePres, c: &ModulePres) -> Result<ReflexivityReport> {
    let bound = ring_depth(m.ring())? + 1;
    let dual = hom_module(m, c)?.module;
    Ok(ReflexivityReport {
        biduality: biduality(m, c)?,
        ext_vanishing: vanishes(1..=bound, |i| ext(i, m, c))?,
        dual_ext_vanishing: vanishes(1..=bound, |i| ext(i, &dual, c))?,
        bound,
    })
}

pub fn is_totally_c_reflexive(m: &ModulePres, c: &ModulePres) -> Result<bool> {
    Ok(total_reflexivity(m, c)?.holds())
}

/// Semidualizing test: homothety `R → Hom(C, C)` bijective and
/// `Ext^i(C, C) = 0` for `1 ≤ i ≤ depth R + 1`.
pub fn is_semidualizing(c: &ModulePres) -> Result<bool> {
    if c.is_zero()? {
        return Err(Error::ZeroModule("semidualizing test needs C ≠ 0".into()));
    }
    let ring = c.ring().clone();
    let h = hom_module(c, c)?;
    let id = HomMatrix::identity(h.source.cover());
    let Some(v) = h.element_of(&id) else {
        return Ok(false);
    };
    let one = ModulePres::ring_module(&ring, 0);
    let w = HomMatrix::from_cols_unchecked(one.cover().clone(), h.module.cover().clone(), vec![v]);
    if !is_bijective(&one, &h.module, &w)? {
        return Ok(false);
    }
    let bound = ring_depth(&ring)? + 1;
    vanishes(1..=bound, |i| ext(i, c, c))
}

/// Auslander class membership with bounded Tor/Ext checks.
pub fn in_auslander_class(m: &ModulePres, c: &ModulePres) -> Result<bool> {
    let ring = m.ring().clone();
    let bound = ring_depth(&ring)? + 1;
    if !vanishes(1..=bound, |i| tor(i, m, c))? {
        return Ok(false);
    }
    let mm = m.minimal()?;
    let cc = c.minimal()?;
    let t = tensor_raw(&mm, &cc)?;
    if !vanishes(1..=bound, |i| ext(i, &cc, &t))? {
        return Ok(false);
    }
    if mm.ngens() == 0 {
        return Ok(true);
    }
    let tp = t.prune_info()?;
    let h = hom_module(&cc, &t)?;
    let q = cc.ngens();
    let mut cols = Vec::with_capacity(mm.ngens());
    for a in 0..mm.ngens() {
        let mu: Vec<ModVec> = (0..q).map(|k| tp.to_new[a * q + k].clone()).collect();
        let mu = HomMatrix::from_cols_unchecked(cc.cover().clone(), h.target.cover().clone(), mu);
        match h.element_of(&mu) {
            Some(v) => cols.push(v),
            None => return Ok(false),
        }
    }
    let w = HomMatrix::from_cols_unchecked(mm.cover().clone(), h.module.cover().clone(), cols);
    is_bijective(&mm, &h.module, &w)
}

/// `G_C`-dimension, with the certificate that made it finite.
#[derive(Clone, Debug, Serialize)]
pub struct GdimReport {
    /// `None` when no finiteness certificate was found.
    pub value: Option<usize>,
    pub certificate: String,
    /// `depth R − depth M`.
    pub ab_formula: Option<usize>,
    pub bound: usize,
}

fn finiteness_certificate(m: &ModulePres, c: &ModulePres, dr: usize) -> Result<Option<String>> {
    let ring = m.ring();
    let r = resolve(m, dr + 1)?;
    if r.complete {
        return Ok(Some("finite projective dimension".into()));
    }
    let one = ModulePres::ring_module(ring, 0);
    if iso_probe(c, &one, &twist_opts())?.is_isomorphic() {
        if is_gorenstein_ring(ring)? {
            return Ok(Some("Gorenstein ring".into()));
        }
    } else if is_cohen_macaulay_ring(ring)?
        && iso_probe(c, &canonical_module(ring)?, &twist_opts())?.is_isomorphic()
    {
        return Ok(Some("dualizing module".into()));
    }
    for j in 0..=dr {
        let s = syzygy(m, j)?;
        if is_totally_c_reflexive(&s, c)? {
            return Ok(Some(format!("syzygy {j} totally reflexive (bounded)")));
        }
    }
    Ok(None)
}

/// `G_C-dim M = sup{i : Ext^i(M, C) ≠ 0}` when certified finite.
pub fn gdim(m: &ModulePres, c: &ModulePres) -> Result<GdimReport> {
    let ring = m.ring().clone();
    let dr = ring_depth(&ring)?;
    let bound = dr + 1;
    let ab = depth(m)?.map(|d| dr.saturating_sub(d));
    if m.is_zero()? {
        return Ok(GdimReport {
            value: Some(0),
            certificate: "zero module".into(),
            ab_formula: None,
            bound,
        });
    }
    let Some(cert) = finiteness_certificate(m, c, dr)? else {
        return Ok(GdimReport {
            value: None,
            certificate: "no syzygy up to depth R is totally reflexive".into(),
            ab_formula: ab,
            bound,
        });
    };
    let mut sup = 0;
    for i in 1..=bound {
        if !ext(i, m, c)?.is_zero()? {
            sup = i;
        }
    }
    if Some(sup) != ab {
        return Err(Error::InvalidInput(format!(
            "G-dimension {sup} disagrees with depth R − depth M = {ab:?}"
        )));
    }
    Ok(GdimReport {
        value: Some(sup),
        certificate: cert,
        ab_formula: ab,
        bound,
    })
}

/// `grade(a) = G_K-dim(R/a)`.
pub fn gc_perfect(a: &Ideal, k: &ModulePres) -> Result<bool> {
    let ring = a.ring();
    let g = grade(a, &ModulePres::ring_module(ring, 0))?;
    let d = gdim(&ModulePres::cyclic(a), k)?;
    match d.value {
        None => Err(Error::InfiniteDimension(d.certificate)),
        Some(v) => Ok(g == Some(v)),
    }
}

/// `Ext^g(R/a, K)` read over `R/a`, with `g = grade(a)`.
pub fn semidualizing_from_perfect_ideal(a: &Ideal, k: &ModulePres) -> Result<ModulePres> {
    let ring = a.ring();
    let g = grade(a, &ModulePres::ring_module(ring, 0))?
        .ok_or_else(|| Error::InvalidInput("the unit ideal has infinite grade".into()))?;
    let e = ext(g, &ModulePres::cyclic(a), k)?;
    if a.is_zero() {
        return Ok(e);
    }
    let q: Ring = std::sync::Arc::new(QuotientRing::quotient(ring, a.gens())?);
    e.change_ring(&q)?.minimal()
}
