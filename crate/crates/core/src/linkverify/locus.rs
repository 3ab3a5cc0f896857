//! Gorenstein locus and pointwise depth data over a finite candidate set.

use crate::error::Result;
use crate::gb::{Ideal, Ring};
use crate::homlat::{canonical_module, depth_at_prime, PrimeCandidate};
use crate::modops::ModulePres;
use crate::poly::Poly;

fn det(ring: &Ring, m: &[Vec<Poly>]) -> Result<Poly> {
    let n = m.len();
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut acc = Poly::zero(ring.poly_ring());
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let t = ring.nf(&a.mul(&det(ring, &minor)?)?);
        acc = if j % 2 == 0 { acc.add(&t)? } else { acc.sub(&t)? };
    }
    Ok(ring.nf(&acc))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `Fitt_1(ω_R)`. For a Cohen–Macaulay ring, `R_p` is Gorenstein exactly when
/// this ideal is not contained in `p`.
pub fn non_gorenstein_ideal(ring: &Ring) -> Result<Ideal> {
    let w = canonical_module(ring)?.minimal()?;
    let r = w.ngens();
    if r <= 1 {
        return Ok(Ideal::unit(ring));
    }
    let p = w.pres();
    let k = r - 1;
    let mut minors = Vec::new();
    for rows in subsets(r, k) {
        for cols in subsets(p.ncols(), k) {
            let m: Vec<Vec<Poly>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| p.entry(i, j)).collect())
                .collect();
            let d = det(ring, &m)?;
            if !d.is_zero() {
                minors.push(d);
            }
        }
    }
    Ideal::new(ring, &minors)
}

pub fn gorenstein_at(ring: &Ring, p: &PrimeCandidate) -> Result<bool> {
    Ok(!non_gorenstein_ideal(ring)?.is_subset(&p.ideal))
}

/// For a Cohen–Macaulay ring: `R_p` Gorenstein at every minimal prime.
pub fn is_generically_gorenstein(ring: &Ring) -> Result<bool> {
    let f = non_gorenstein_ideal(ring)?;
    let d = ModulePres::ring_module(ring, 0).krull_dim()?;
    Ok(ModulePres::cyclic(&f).krull_dim()? < d)
}

/// For a Cohen–Macaulay ring: `R_p` Gorenstein for every `p ≠ m`.
pub fn is_gorenstein_on_punctured_spectrum(ring: &Ring) -> Result<bool> {
    let f = non_gorenstein_ideal(ring)?;
    Ok(ModulePres::cyclic(&f).krull_dim()?.is_none_or(|d| d == 0))
}


/// `depth M_p` and `depth R_p` at one candidate.
#[derive(Clone, Copy, Debug)]
pub struct PointData {
    /// `None` when `p` is outside the support.
    pub depth_module: Option<usize>,
    pub depth_ring: usize,
}

impl PointData {
    /// The pointwise condition `depth M_p ≥ min(n, depth R_p)`.
    pub fn serre(&self, n: usize) -> bool {
        self.depth_module.is_none_or(|d| d >= n.min(self.depth_ring))
    }
}

/// A finite set of candidate primes with the inclusion order among them.
#[derive(Clone, Debug)]
pub struct PrimeSet {
    pub primes: Vec<PrimeCandidate>,
    below: Vec<Vec<bool>>,
}

impl PrimeSet {
    pub fn new(primes: Vec<PrimeCandidate>) -> Self {
        let below = primes
            .iter()
            .map(|p| primes.iter().map(|q| q.ideal.is_subset(&p.ideal)).collect())
            .collect();
        PrimeSet { primes, below }
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn label(&self, i: usize) -> String {
        self.primes[i].to_string()
    }

    pub fn labels(&self, idx: &[usize]) -> Vec<String> {
        let mut v: Vec<String> = idx.iter().map(|&i| self.label(i)).collect();
        v.sort();
        v
    }

    /// `q ⊆ p`.
    pub fn le(&self, q: usize, p: usize) -> bool {
        self.below[p][q]
    }

    pub fn index_of(&self, p: &PrimeCandidate) -> Option<usize> {
        self.primes
            .iter()
            .position(|q| q.ideal.is_subset(&p.ideal) && p.ideal.is_subset(&q.ideal))
    }

    /// Index of the irrelevant ideal, if present.
    pub fn maximal(&self, ring: &Ring) -> Option<usize> {
        let m = Ideal::maximal(ring);
        self.primes.iter().position(|q| m.is_subset(&q.ideal))
    }

    /// Every candidate below a member of `x` is in `x`.
    pub fn closed_under_generalization(&self, x: &[usize]) -> bool {
        x.iter().all(|&p| (0..self.len()).all(|q| !self.le(q, p) || x.contains(&q)))
    }

    /// Every candidate above a member of `x` is in `x`.
    pub fn closed_under_specialization(&self, x: &[usize]) -> bool {
        x.iter().all(|&p| (0..self.len()).all(|q| !self.le(p, q) || x.contains(&q)))
    }

    /// Candidates containing some member of `x`.
    pub fn specialization_closure(&self, x: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&q| x.iter().any(|&p| self.le(p, q))).collect()
    }

    pub fn point_data(&self, m: &ModulePres) -> Result<Vec<PointData>> {
        let r = ModulePres::ring_module(m.ring(), 0);
        self.primes
            .iter()
            .map(|p| {
                Ok(PointData {
                    depth_module: depth_at_prime(m, p)?,
                    depth_ring: depth_at_prime(&r, p)?.expect("primes lie in the support of R"),
                })
            })
            .collect()
    }

    /// `p ∈ S̃_n(M)`: the pointwise condition at every candidate `q ⊆ p`.
    pub fn in_serre_locus(&self, data: &[PointData], n: usize, p: usize) -> bool {
        (0..self.len()).all(|q| !self.le(q, p) || data[q].serre(n))
    }
}
