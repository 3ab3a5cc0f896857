//! Certified isomorphism tests between graded modules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::hom::{hom_module, kernel_gens};
use super::module::ModulePres;
use crate::error::Result;
use crate::gb::modvec::TermOrder;
use crate::gb::{resolve, HomMatrix, ModVec, SubmoduleGb};

/// Outcome of [`iso_probe`]. `Isomorphic` and `DistinguishedBy` are
/// certificates; `Unknown` means the sampling budget ran out.
#[derive(Clone, Debug)]
pub enum IsoVerdict {
    /// `witness : M → N(twist)` between the minimal covers.
    Isomorphic { twist: i32, witness: HomMatrix },
    DistinguishedBy(String),
    Unknown,
}

impl Serialize for IsoVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic { .. })
    }

    pub fn is_distinguished(&self) -> bool {
        matches!(self, IsoVerdict::DistinguishedBy(_))
    }

    pub fn label(&self) -> String {
        match self {
            IsoVerdict::Isomorphic { twist, .. } => format!("Isomorphic(twist={twist})"),
            IsoVerdict::DistinguishedBy(s) => format!("DistinguishedBy({s})"),
            IsoVerdict::Unknown => "Unknown".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct IsoOptions {
    pub seed: u64,
    /// Random degree-0 candidates tried per twist.
    pub budget: usize,
    /// Twists searched are `0, ±1, …, ±window`.
    pub window: i32,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions {
            seed: 0,
            budget: 64,
            window: 0,
        }
    }
}

/// Invariant mismatch between `m` and `n`, if any.
fn distinguish(m: &ModulePres, n: &ModulePres) -> Result<Option<String>> {
    let (gm, rm) = m.presentation_degrees()?;
    let (gn, rn) = n.presentation_degrees()?;
    if gm != gn {
        return Ok(Some("generator degrees".into()));
    }
    if rm != rn {
        return Ok(Some("relation degrees".into()));
    }
    let lo = gm.first().copied().unwrap_or(0) - 1;
    let (hm, hn) = (m.hilbert(lo, lo + 12)?, n.hilbert(lo, lo + 12)?);
    if hm != hn {
        return Ok(Some("Hilbert".into()));
    }
    let (sm, sn) = (resolve(m, 2)?, resolve(n, 2)?);
    if sm.betti_degrees(2) != sn.betti_degrees(2) {
        return Ok(Some("Betti".into()));
    }
    Ok(None)
}

/// Whether `h : P0 → Q0` induces an isomorphism `coker φ → coker ψ`.
pub fn is_bijective(m: &ModulePres, n: &ModulePres, h: &HomMatrix) -> Result<bool> {
    let mut gens = h.cols().to_vec();
    gens.extend(n.pres().cols().iter().cloned());
    if !SubmoduleGb::new(n.cover(), &gens)?.is_everything() {
        return Ok(false);
    }
    let ker = kernel_gens(h, n.pres())?;
    let gb = m.gb()?;
    Ok(ker.cols().iter().all(|v| gb.contains(v)))
}

fn combine(maps: &[HomMatrix], coeffs: &[u32]) -> HomMatrix {
    let first = &maps[0];
    let poly = first.ring().poly_ring();
    let ord = TermOrder::plain(poly);
    let f = *poly.field();
    let one = crate::poly::Monomial::ONE;
    let cols = (0..first.ncols())
        .map(|j| {
            let mut acc = ModVec::zero();
            for (h, &c) in maps.iter().zip(coeffs) {
                if c != 0 {
                    acc = acc.add_mul(c, &one, &h.cols()[j], ord, &f);
                }
            }
            acc
        })
        .collect();
    HomMatrix::from_cols_unchecked(first.source().clone(), first.target().clone(), cols)
}

enum Probe {
    Found(HomMatrix),
    Distinct(String),
    Exhausted,
}

fn probe_at(m: &ModulePres, n: &ModulePres, opts: &IsoOptions, rng: &mut ChaCha8Rng) -> Result<Probe> {
    if let Some(why) = distinguish(m, n)? {
        return Ok(Probe::Distinct(why));
    }
    if m.ngens() == 0 {
        return Ok(Probe::Found(HomMatrix::zero(m.cover().clone(), n.cover().clone())));
    }
    let h = hom_module(m, n)?;
    let span = h.degree_span(0);
    if span.is_empty() {
        return Ok(Probe::Distinct("no degree-0 maps".into()));
    }
    let p = m.ring().poly_ring().field().characteristic();
    for _ in 0..opts.budget {
        let coeffs: Vec<u32> = span.iter().map(|_| rng.gen_range(0..p)).collect();
        let cand = combine(&span, &coeffs);
        if is_bijective(m, n, &cand)? {
            return Ok(Probe::Found(cand));
        }
    }
    Ok(Probe::Exhausted)
}

/// Searches for a degree-0 isomorphism `M → N(t)`, `|t| ≤ opts.window`.
pub fn iso_probe(m: &ModulePres, n: &ModulePres, opts: &IsoOptions) -> Result<IsoVerdict> {
    m.same_ring(n)?;
    let mm = m.minimal()?;
    let nn = n.minimal()?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut twists = vec![0];
    for t in 1..=opts.window {
        twists.push(t);
        twists.push(-t);
    }
    let mut unknown = false;
    let mut last = String::new();
    for t in twists {
        match probe_at(&mm, &nn.shift(t), opts, &mut rng)? {
            Probe::Found(witness) => return Ok(IsoVerdict::Isomorphic { twist: t, witness }),
            Probe::Exhausted => unknown = true,
            Probe::Distinct(why) => last = why,
        }
    }
    if unknown {
        Ok(IsoVerdict::Unknown)
    } else if opts.window == 0 {
        Ok(IsoVerdict::DistinguishedBy(last))
    } else {
        Ok(IsoVerdict::DistinguishedBy(format!("{last}, every twist in ±{}", opts.window)))
    }
}
