//! Local cohomology at the irrelevant ideal by graded local duality,
//! associated primes and attached primes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gb::{GradedDimTable, Ideal, Ring};
use crate::homlat::{
    annihilator, depth, ext_ambient, ext_ambient_dual, monomial_primes,
    PrimeCandidate, Primality, Provenance,
};
use crate::modops::ModulePres;
use crate::poly::Poly;

pub use crate::homlat::canonical_module;

fn weight_sum(ring: &Ring) -> i32 {
    ring.poly_ring().weights().iter().sum::<u32>() as i32
}

/// Graded Matlis dual of `H^i_m(M)`: `Ext^{n−i}_S(M, S)`, an `S`-module.
fn dual_ext(m: &ModulePres, i: usize) -> Result<Option<ModulePres>> {
    let n = m.ring().nvars();
    if i > n {
        return Ok(None);
    }
    Ok(Some(ext_ambient_dual(n - i, m, None)?))
}

/// `H^i_m(M)` through its Matlis dual; dimensions can be read at any degree.
pub struct LocalCohomology {
    dual: Option<ModulePres>,
    w: i32,
}

impl LocalCohomology {
    pub fn new(m: &ModulePres, i: usize) -> Result<Self> {
        Ok(LocalCohomology {
            dual: dual_ext(m, i)?,
            w: weight_sum(m.ring()),
        })
    }

    /// `Ext^{n−i}_S(M, S)`, or `None` when `i > n`.
    pub fn dual(&self) -> Option<&ModulePres> {
        self.dual.as_ref()
    }

    pub fn dim(&self, d: i32) -> Result<u64> {
        match &self.dual {
            None => Ok(0),
            Some(e) => Ok(crate::gb::hilbert::quotient_dim(&*e.gb()?, -d - self.w)),
        }
    }

    pub fn table(&self, lo: i32, hi: i32) -> Result<GradedDimTable> {
        let Some(e) = &self.dual else {
            return Ok(GradedDimTable::zeros(lo, hi));
        };
        let gb = e.gb()?;
        Ok(GradedDimTable::from_fn(lo, hi, |d| {
            crate::gb::hilbert::quotient_dim(&gb, -d - self.w)
        }))
    }

    pub fn is_zero(&self) -> Result<bool> {
        match &self.dual {
            None => Ok(true),
            Some(e) => e.is_zero(),
        }
    }
}

/// `dim_k H^i_m(M)_d` for `d` in `[lo, hi]`.
pub fn local_cohomology(m: &ModulePres, i: usize, lo: i32, hi: i32) -> Result<GradedDimTable> {
    LocalCohomology::new(m, i)?.table(lo, hi)
}

/// All local cohomology modules of `M` over a window.
#[derive(Clone, Debug, Serialize)]
pub struct CohomologyTable {
    pub lo: i32,
    pub hi: i32,
    /// `tables[i]` is `H^i_m(M)` on the window.
    pub tables: Vec<GradedDimTable>,
    /// Exact vanishing of `H^i_m(M)` as a module, independent of the window.
    pub nonzero: Vec<bool>,
    pub depth: Option<usize>,
    pub dim: Option<usize>,
}

impl CohomologyTable {
    /// `H^i = 0` outside `[depth, dim]` and `≠ 0` at both ends.
    pub fn grothendieck_bounds_hold(&self) -> bool {
        match (self.depth, self.dim) {
            (Some(d), Some(k)) => {
                self.nonzero[d]
                    && self.nonzero[k]
                    && self
                        .nonzero
                        .iter()
                        .enumerate()
                        .all(|(i, &nz)| !nz || (d..=k).contains(&i))
            }
            _ => self.nonzero.iter().all(|&nz| !nz),
        }
    }

    pub fn get(&self, i: usize, d: i32) -> u64 {
        self.tables.get(i).map_or(0, |t| t.get(d))
    }
}

pub fn cohomology_table(m: &ModulePres, lo: i32, hi: i32) -> Result<CohomologyTable> {
    let n = m.ring().nvars();
    let mut tables = Vec::with_capacity(n + 1);
    let mut nonzero = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let h = LocalCohomology::new(m, i)?;
        tables.push(h.table(lo, hi)?);
        nonzero.push(!h.is_zero()?);
    }
    Ok(CohomologyTable {
        lo,
        hi,
        tables,
        nonzero,
        depth: depth(m)?,
        dim: m.krull_dim()?,
    })
}

/// `c(M) = sup{i < dim M : H^i_m(M) ≠ 0}`.
pub fn c_value(m: &ModulePres) -> Result<Option<usize>> {
    let Some(dim) = m.krull_dim()? else {
        return Ok(None);
    };
    for i in (0..dim).rev() {
        if let Some(e) = dual_ext(m, i)? {
            if !e.is_zero()? {
                return Ok(Some(i));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PrimeKind {
    Ass,
    Att,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PrimeMethod {
    Duality,
    CandidateScan,
    MonomialMinimalPrimes,
}

#[derive(Clone, Debug)]
pub struct AttAssReport {
    pub kind: PrimeKind,
    pub primes: Vec<PrimeCandidate>,
    pub method: PrimeMethod,
    /// Candidates were generated from the monomial structure.
    pub auto_candidates: bool,
    /// For `Att`: the module has finite length (`Att ⊆ {m}`).
    pub finite_length: Option<bool>,
}

impl AttAssReport {
    /// Sorted textual forms of the primes, for set comparisons.
    pub fn labels(&self) -> Vec<String> {
        let mut v: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        v.sort();
        v
    }
}

/// Whether the minimal presentation admits a `Z^n`-grading refining the
/// standard one (monomial entries with consistent generator multidegrees),
/// over a ring with monomial defining ideal.
pub fn is_multigraded(m: &ModulePres) -> Result<bool> {
    if !m.ring().is_monomial() {
        return Ok(false);
    }
    let mm = m.minimal()?;
    let n = m.ring().nvars();
    let r = mm.ngens();
    let mut deg: Vec<Option<Vec<i64>>> = vec![None; r];
    let cols = mm.pres().cols();
    let mon = |t: &crate::gb::Term| -> Vec<i64> { (0..n).map(|i| t.mon.exp(i) as i64).collect() };
    for c in cols {
        let comps: Vec<u32> = c.terms().iter().map(|t| t.comp).collect();
        for w in comps.windows(2) {
            if w[0] == w[1] {
                return Ok(false);
            }
        }
    }
    let mut done = vec![false; cols.len()];
    loop {
        let mut progress = false;
        for (j, c) in cols.iter().enumerate() {
            if done[j] {
                continue;
            }
            let anchor = c.terms().iter().find(|t| deg[t.comp as usize].is_some());
            let Some(a) = anchor else { continue };
            let base = deg[a.comp as usize].as_ref().unwrap();
            let ma = mon(a);
            let coldeg: Vec<i64> = base.iter().zip(&ma).map(|(x, y)| x + y).collect();
            for t in c.terms() {
                let want: Vec<i64> = coldeg.iter().zip(mon(t)).map(|(x, y)| x - y).collect();
                match &deg[t.comp as usize] {
                    Some(d) if *d != want => return Ok(false),
                    Some(_) => {}
                    None => deg[t.comp as usize] = Some(want),
                }
            }
            done[j] = true;
            progress = true;
        }
        if done.iter().all(|&d| d) {
            return Ok(true);
        }
        if !progress {
            match deg.iter().position(|d| d.is_none()) {
                Some(i) => deg[i] = Some(vec![0; n]),
                None => return Ok(true),
            }
        }
    }
}

/// `p ∈ Ass M`: `Hom(R/p, M)_p ≠ 0`.
pub fn is_associated(m: &ModulePres, p: &PrimeCandidate) -> Result<bool> {
    let e = ext_ambient(0, &ModulePres::cyclic(&p.ideal), m)?;
    if e.is_zero()? {
        return Ok(false);
    }
    let big_p = Ideal::new(e.ring(), &p.ideal.preimage_gb())?;
    Ok(annihilator(&e)?.is_subset(&big_p))
}

fn candidates_for(m: &ModulePres, given: &[PrimeCandidate]) -> Result<(Vec<PrimeCandidate>, bool)> {
    if !given.is_empty() {
        return Ok((given.to_vec(), false));
    }
    if !is_multigraded(m)? {
        return Err(Error::EmptyCandidates);
    }
    let ann = annihilator(m)?;
    let c = monomial_primes(m.ring())
        .into_iter()
        .filter(|p| ann.is_subset(&p.ideal))
        .collect();
    Ok((c, true))
}

/// `Ass M` among the candidates (generated from the monomial structure when
/// none are given).
pub fn ass_module(m: &ModulePres, candidates: &[PrimeCandidate]) -> Result<AttAssReport> {
    let mut report = AttAssReport {
        kind: PrimeKind::Ass,
        primes: vec![],
        method: PrimeMethod::CandidateScan,
        auto_candidates: false,
        finite_length: None,
    };
    if m.is_zero()? {
        return Ok(report);
    }
    let (cands, auto) = candidates_for(m, candidates)?;
    report.auto_candidates = auto;
    for p in cands {
        if is_associated(m, &p)? {
            report.primes.push(p);
        }
    }
    Ok(report)
}

/// The Matlis dual of `H^i_m(M)` as an `R`-module.
pub fn matlis_dual(m: &ModulePres, i: usize) -> Result<ModulePres> {
    let ring = m.ring().clone();
    match dual_ext(m, i)? {
        None => Ok(ModulePres::zero(&ring)),
        Some(e) => e.change_ring(&ring)?.minimal(),
    }
}

/// `Att H^i_m(M) = Ass Ext^{n−i}_S(M, S)`, read over `R`.
pub fn att_local_cohomology(m: &ModulePres, i: usize, candidates: &[PrimeCandidate]) -> Result<AttAssReport> {
    let e = matlis_dual(m, i)?;
    let mut r = ass_module(&e, candidates)?;
    r.kind = PrimeKind::Att;
    r.method = PrimeMethod::Duality;
    r.finite_length = Some(e.krull_dim()?.is_none_or(|d| d == 0));
    Ok(r)
}

/// Minimal primes of a monomial ideal, from minimal vertex covers.
pub fn monomial_minimal_primes(i: &Ideal) -> Result<Vec<PrimeCandidate>> {
    if !i.is_monomial() {
        return Err(Error::NonMonomial(i.to_string()));
    }
    let ring = i.ring();
    let poly = ring.poly_ring();
    let n = poly.nvars();
    let supports: Vec<u32> = i.gens().iter().map(|g| g.lead().unwrap().0.support_mask()).collect();
    if supports.iter().any(|&s| s == 0) {
        return Ok(vec![]);
    }
    let covers: Vec<u32> = (0u32..(1 << n))
        .filter(|&y| supports.iter().all(|&s| s & y != 0))
        .collect();
    let minimal: Vec<u32> = covers
        .iter()
        .copied()
        .filter(|&y| !covers.iter().any(|&z| z != y && z & !y == 0))
        .collect();
    let mut out = Vec::new();
    for y in minimal {
        let vars: Vec<Poly> = (0..n).filter(|k| y & (1 << k) != 0).map(|k| Poly::var(poly, k)).collect();
        let ideal = Ideal::new(ring, &vars)?;
        debug_assert!(i.is_subset(&ideal));
        out.push(PrimeCandidate {
            ideal,
            provenance: Provenance::MonomialComputed,
            primality: Primality::Verified,
        });
    }
    out.sort_by_key(|p| p.to_string());
    Ok(out)
}
