use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::gb::hilbert::{quotient_dim, quotient_krull_dim};
use crate::gb::{
    prune, syzygies, GradedDimTable, GradedFree, HomMatrix, Ideal, ModVec, Pruned, Ring,
    SubmoduleGb,
};
use crate::poly::Poly;

/// `M = coker(presentation)`, a finitely generated graded module.
///
/// Cheap to clone; derived data (pruned form, Gröbner basis, resolutions
/// over the ambient ring) is computed once and shared.
#[derive(Clone)]
pub struct ModulePres(Arc<Inner>);

struct Inner {
    pres: HomMatrix,
    minimal: bool,
    pruned: OnceLock<Result<(ModulePres, Arc<Pruned>)>>,
    gb: OnceLock<Result<Arc<SubmoduleGb>>>,
    ambient_res: OnceLock<Result<Arc<crate::gb::resolve::ResolutionSlice>>>,
    depth: OnceLock<Result<Option<usize>>>,
    res: Mutex<Option<Arc<crate::gb::resolve::ResolutionSlice>>>,
}

impl fmt::Debug for ModulePres {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ModulePres {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.0.pres;
        write!(
            f,
            "coker(rows={:?}, cols={:?}, matrix={})",
            p.target().twists(),
            p.source().twists(),
            p
        )
    }
}

impl ModulePres {
    fn wrap(pres: HomMatrix, minimal: bool) -> Self {
        ModulePres(Arc::new(Inner {
            pres,
            minimal,
            pruned: OnceLock::new(),
            gb: OnceLock::new(),
            ambient_res: OnceLock::new(),
            depth: OnceLock::new(),
            res: Mutex::new(None),
        }))
    }

    /// The cokernel of a homogeneous matrix.
    pub fn new(pres: HomMatrix) -> Self {
        ModulePres::wrap(pres, false)
    }

    pub(crate) fn new_minimal(pres: HomMatrix) -> Self {
        ModulePres::wrap(pres, true)
    }

    /// `coker(rows, cols, entries)` in row-major form.
    pub fn from_entries(ring: &Ring, rows: Vec<i32>, cols: Vec<i32>, entries: &[Vec<Poly>]) -> Result<Self> {
        Ok(ModulePres::new(HomMatrix::from_entries(ring, rows, cols, entries)?))
    }

    /// The free module itself.
    pub fn free(f: &GradedFree) -> Self {
        ModulePres::wrap(
            HomMatrix::zero(GradedFree::new(f.ring(), vec![]), f.clone()),
            true,
        )
    }

    /// `R(-d)`.
    pub fn ring_module(ring: &Ring, d: i32) -> Self {
        ModulePres::free(&GradedFree::new(ring, vec![d]))
    }

    pub fn zero(ring: &Ring) -> Self {
        ModulePres::free(&GradedFree::new(ring, vec![]))
    }

    /// `R/J`.
    pub fn cyclic(ideal: &Ideal) -> Self {
        let ring = ideal.ring();
        let gens = ideal.gens();
        let cols: Vec<ModVec> = gens.iter().map(|g| ModVec::from_poly(g, 0)).collect();
        let tw = gens.iter().map(|g| g.degree().unwrap() as i32).collect();
        ModulePres::new(HomMatrix::from_cols_unchecked(
            GradedFree::new(ring, tw),
            GradedFree::new(ring, vec![0]),
            cols,
        ))
    }

    /// The residue field `R/m`.
    pub fn residue_field(ring: &Ring) -> Self {
        ModulePres::cyclic(&Ideal::maximal(ring))
    }

    /// The submodule of `free` spanned by `vecs`, presented by its syzygies.
    pub fn submodule(free: &GradedFree, vecs: &[ModVec]) -> Result<Self> {
        let gens = crate::gb::image_matrix(free, vecs)?;
        let rel = syzygies(&gens)?;
        Ok(ModulePres::new(HomMatrix::from_cols_unchecked(
            rel.source().clone(),
            gens.source().clone(),
            rel.into_cols(),
        )))
    }

    /// The ideal `J` as a module.
    pub fn ideal_module(ideal: &Ideal) -> Result<Self> {
        let free = GradedFree::new(ideal.ring(), vec![0]);
        let vecs: Vec<ModVec> = ideal.gens().iter().map(|g| ModVec::from_poly(g, 0)).collect();
        ModulePres::submodule(&free, &vecs)
    }

    pub fn ring(&self) -> &Ring {
        self.0.pres.ring()
    }

    pub fn pres(&self) -> &HomMatrix {
        &self.0.pres
    }

    /// Generator degrees.
    pub fn gens(&self) -> &[i32] {
        self.0.pres.target().twists()
    }

    pub fn cover(&self) -> &GradedFree {
        self.0.pres.target()
    }

    pub fn ngens(&self) -> usize {
        self.0.pres.nrows()
    }

    pub fn same_ring(&self, other: &ModulePres) -> Result<()> {
        if Arc::ptr_eq(self.ring(), other.ring()) || self.ring().as_ref() == other.ring().as_ref() {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ring(),
                other.ring()
            )))
        }
    }

    /// Gröbner basis of the relations plus the ring ideal times the cover.
    pub fn gb(&self) -> Result<Arc<SubmoduleGb>> {
        self.0
            .gb
            .get_or_init(|| SubmoduleGb::new(self.cover(), self.pres().cols()).map(Arc::new))
            .clone()
    }

    /// Normal form of a cover element modulo the relations.
    pub fn nf(&self, v: &ModVec) -> Result<ModVec> {
        Ok(self.gb()?.nf(v))
    }

    pub fn is_zero(&self) -> Result<bool> {
        if self.ngens() == 0 {
            return Ok(true);
        }
        Ok(self.gb()?.is_everything())
    }

    /// `dim_k M_d` for every `d` in `[lo, hi]`.
    pub fn hilbert(&self, lo: i32, hi: i32) -> Result<GradedDimTable> {
        let gb = self.gb()?;
        Ok(GradedDimTable::from_fn(lo, hi, |d| quotient_dim(&gb, d)))
    }

    /// Krull dimension; `None` for the zero module.
    pub fn krull_dim(&self) -> Result<Option<usize>> {
        Ok(quotient_krull_dim(&*self.gb()?))
    }

    pub(crate) fn res_cache(&self) -> &Mutex<Option<Arc<crate::gb::resolve::ResolutionSlice>>> {
        &self.0.res
    }

    pub(crate) fn ambient_res_cell(&self) -> &OnceLock<Result<Arc<crate::gb::resolve::ResolutionSlice>>> {
        &self.0.ambient_res
    }

    pub(crate) fn depth_cell(&self) -> &OnceLock<Result<Option<usize>>> {
        &self.0.depth
    }

    pub fn is_minimal(&self) -> bool {
        self.0.minimal
    }

    fn pruned_entry(&self) -> Result<(ModulePres, Arc<Pruned>)> {
        self.0
            .pruned
            .get_or_init(|| {
                let p = prune(self.pres())?;
                let m = ModulePres::new_minimal(p.matrix.clone());
                Ok((m, Arc::new(p)))
            })
            .clone()
    }

    /// Minimal presentation.
    pub fn minimal(&self) -> Result<ModulePres> {
        if self.0.minimal {
            return Ok(self.clone());
        }
        Ok(self.pruned_entry()?.0)
    }

    /// How the original generators map into the minimal presentation.
    pub fn prune_info(&self) -> Result<Arc<Pruned>> {
        if self.0.minimal {
            let n = self.ngens();
            return Ok(Arc::new(Pruned {
                matrix: self.pres().clone(),
                kept: (0..n).collect(),
                to_new: (0..n).map(ModVec::unit).collect(),
            }));
        }
        Ok(self.pruned_entry()?.1)
    }

    /// Minimal graded Betti data of the presentation: generator and relation
    /// degrees, both sorted.
    pub fn presentation_degrees(&self) -> Result<(Vec<i32>, Vec<i32>)> {
        let m = self.minimal()?;
        let mut g = m.gens().to_vec();
        let mut r = m.pres().source().twists().to_vec();
        g.sort_unstable();
        r.sort_unstable();
        Ok((g, r))
    }

    /// `M(t)`, so that `M(t)_d = M_{t+d}`.
    pub fn shift(&self, t: i32) -> ModulePres {
        ModulePres::wrap(self.pres().shift(t), self.0.minimal)
    }

    /// The same presentation read over another quotient of the ambient ring.
    pub fn change_ring(&self, ring: &Ring) -> Result<ModulePres> {
        Ok(ModulePres::new(self.pres().change_ring(ring)?))
    }

    /// `M` as a module over a ring mapping onto its own, keeping the
    /// defining relations of the smaller ring.
    pub fn restrict_scalars(&self, ring: &Ring) -> Result<ModulePres> {
        let moved = self.change_ring(ring)?;
        let rel = self.ring().ideal();
        if rel.is_empty() {
            return Ok(moved);
        }
        moved.quotient_by_ideal(&Ideal::new(ring, rel)?)
    }

    pub fn direct_sum(&self, other: &ModulePres) -> Result<ModulePres> {
        self.same_ring(other)?;
        Ok(ModulePres::new(self.pres().direct_sum(other.pres())))
    }

    /// `M/cM`.
    pub fn quotient_by_ideal(&self, c: &Ideal) -> Result<ModulePres> {
        let poly = self.ring().poly_ring().clone();
        let f = *poly.field();
        let ord = crate::gb::modvec::TermOrder::plain(&poly);
        let mut extra_tw = Vec::new();
        let mut extra = Vec::new();
        for g in c.gens() {
            for (a, &d) in self.gens().iter().enumerate() {
                extra.push(ModVec::unit(a).mul_poly(g, ord, &f));
                extra_tw.push(d + g.degree().unwrap() as i32);
            }
        }
        let more = HomMatrix::new(
            GradedFree::new(self.ring(), extra_tw),
            self.cover().clone(),
            extra,
        )?;
        Ok(ModulePres::new(self.pres().hstack(&more)))
    }
}
