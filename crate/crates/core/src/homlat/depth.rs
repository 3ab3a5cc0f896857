//! Depth, grade, annihilators and pointwise Serre conditions.

use std::fmt;

use serde::Serialize;

use super::ext::ext_ambient;
use crate::error::{Error, Result};
use crate::gb::resolve::ambient_resolution;
use crate::gb::{Ideal, ModVec, Ring};
use crate::modops::ModulePres;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    CorpusDeclared,
    MonomialComputed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Primality {
    Verified,
    Trusted,
}

/// A homogeneous prime of the ring, used as a test point for loci.
#[derive(Clone, Debug)]
pub struct PrimeCandidate {
    pub ideal: Ideal,
    pub provenance: Provenance,
    pub primality: Primality,
}

impl fmt::Display for PrimeCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ideal)
    }
}

impl PrimeCandidate {
    /// A declared prime. Preimages generated by linear forms are verified;
    /// anything else is trusted.
    pub fn declared(ideal: Ideal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::NotPrime(format!("{ideal} is the unit ideal")));
        }
        let linear = ideal
            .preimage_gb()
            .iter()
            .all(|g| g.degree() == Some(1));
        Ok(PrimeCandidate {
            ideal,
            provenance: Provenance::CorpusDeclared,
            primality: if linear { Primality::Verified } else { Primality::Trusted },
        })
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Self> {
        PrimeCandidate::declared(Ideal::parse(ring, gens)?)
    }
}

/// Every prime of `R` generated by a subset of the variables.
pub fn monomial_primes(ring: &Ring) -> Vec<PrimeCandidate> {
    let poly = ring.poly_ring();
    let n = poly.nvars();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let contains_ring_ideal = ring.ideal().iter().all(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| m.support_mask() & mask != 0)
        });
        if !contains_ring_ideal {
            continue;
        }
        let vars: Vec<Poly> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| Poly::var(poly, i))
            .collect();
        let ideal = Ideal::new(ring, &vars).expect("variables are homogeneous");
        out.push(PrimeCandidate {
            ideal,
            provenance: Provenance::MonomialComputed,
            primality: Primality::Verified,
        });
    }
    out.sort_by_key(|p| p.ideal.gens().len());
    out
}

/// `ann_R(M)`.
pub fn annihilator(m: &ModulePres) -> Result<Ideal> {
    let ring = m.ring();
    let mm = m.minimal()?;
    let mut acc = Ideal::unit(ring);
    for a in 0..mm.ngens() {
        let k = Ideal::kernel_of_cyclic(ring, &ModVec::unit(a), mm.cover(), mm.pres().cols())?;
        acc = acc.intersection(&k)?;
    }
    Ok(acc)
}

/// `depth M`; `None` for the zero module.
pub fn depth(m: &ModulePres) -> Result<Option<usize>> {
    m.depth_cell()
        .get_or_init(|| {
            if m.is_zero()? {
                return Ok(None);
            }
            let r = ambient_resolution(m)?;
            let pd = r.length().expect("resolutions over S are finite");
            Ok(Some(m.ring().nvars() - pd))
        })
        .clone()
}

/// `depth R`.
pub fn ring_depth(ring: &Ring) -> Result<usize> {
    Ok(depth(&ModulePres::ring_module(ring, 0))?.expect("the ring is nonzero"))
}

/// `dim M`; `None` for the zero module.
pub fn krull_dim(m: &ModulePres) -> Result<Option<usize>> {
    m.krull_dim()
}

/// Depth, dimension and the Cohen–Macaulay flag of a module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthProfile {
    /// `None` encodes depth `+∞` of the zero module.
    pub depth: Option<usize>,
    /// `None` encodes dimension `−∞` of the zero module.
    pub dim: Option<usize>,
    pub cm: bool,
    pub zero: bool,
}

pub fn depth_profile(m: &ModulePres) -> Result<DepthProfile> {
    let d = depth(m)?;
    let k = krull_dim(m)?;
    Ok(DepthProfile {
        depth: d,
        dim: k,
        cm: d == k,
        zero: d.is_none(),
    })
}

/// `grade(I, M) = min{i : Ext^i(R/I, M) ≠ 0}`; `None` when `IM = M`.
pub fn grade(i: &Ideal, m: &ModulePres) -> Result<Option<usize>> {
    let q = m.quotient_by_ideal(i)?;
    if q.is_zero()? {
        return Ok(None);
    }
    let ri = ModulePres::cyclic(i);
    for k in 0..=m.ring().nvars() {
        if !ext_ambient(k, &ri, m)?.is_zero()? {
            return Ok(Some(k));
        }
    }
    unreachable!("grade is bounded by the number of variables")
}

/// `grade(ann N, R)`.
pub fn module_grade(n: &ModulePres) -> Result<Option<usize>> {
    let a = annihilator(n)?;
    grade(&a, &ModulePres::ring_module(n.ring(), 0))
}

fn ambient_ideal(p: &Ideal, s: &Ring) -> Result<Ideal> {
    Ideal::new(s, &p.preimage_gb())
}

/// Whether `M_p ≠ 0`.
pub fn in_support(m: &ModulePres, p: &PrimeCandidate) -> Result<bool> {
    Ok(annihilator(m)?.is_subset(&p.ideal))
}

/// `depth M_p`, computed as `min{i : ann Ext^i_S(S/p, M) ⊆ p}`; `None` when
/// `p` is outside the support.
pub fn depth_at_prime(m: &ModulePres, p: &PrimeCandidate) -> Result<Option<usize>> {
    if !in_support(m, p)? {
        return Ok(None);
    }
    let rp = ModulePres::cyclic(&p.ideal);
    let n = m.ring().nvars();
    for i in 0..=n {
        let e = ext_ambient(i, &rp, m)?;
        if e.is_zero()? {
            continue;
        }
        let s: Ring = e.ring().clone();
        let big_p = ambient_ideal(&p.ideal, &s)?;
        if annihilator(&e)?.is_subset(&big_p) {
            return Ok(Some(i));
        }
    }
    unreachable!("depth at a prime in the support is at most the number of variables")
}

#[derive(Clone, Debug, Serialize)]
pub struct SerreEntry {
    pub prime: String,
    pub depth_module: Option<usize>,
    pub depth_ring: usize,
    pub holds: bool,
}

/// `S̃_n` evaluated at each candidate.
#[derive(Clone, Debug, Serialize)]
pub struct SerreReport {
    pub n: usize,
    pub entries: Vec<SerreEntry>,
}

impl SerreReport {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    /// Candidates where the condition holds.
    pub fn locus(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| e.holds)
            .map(|e| e.prime.as_str())
            .collect()
    }
}

/// `depth M_p ≥ min(n, depth R_p)` at every candidate.
pub fn serre_check(m: &ModulePres, n: usize, primes: &[PrimeCandidate]) -> Result<SerreReport> {
    let r = ModulePres::ring_module(m.ring(), 0);
    let mut entries = Vec::with_capacity(primes.len());
    for p in primes {
        let dr = depth_at_prime(&r, p)?.expect("primes lie in the support of R");
        let dm = depth_at_prime(m, p)?;
        let holds = match dm {
            None => true,
            Some(d) => d >= n.min(dr),
        };
        entries.push(SerreEntry {
            prime: p.to_string(),
            depth_module: dm,
            depth_ring: dr,
            holds,
        });
    }
    Ok(SerreReport { n, entries })
}

/// `X^n(R) = {p : depth R_p ≤ n}` among the candidates.
pub fn low_depth_locus(ring: &Ring, n: usize, primes: &[PrimeCandidate]) -> Result<Vec<PrimeCandidate>> {
    let r = ModulePres::ring_module(ring, 0);
    let mut out = Vec::new();
    for p in primes {
        if depth_at_prime(&r, p)?.is_some_and(|d| d <= n) {
            out.push(p.clone());
        }
    }
    Ok(out)
}
