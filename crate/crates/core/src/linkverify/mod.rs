//! Linkage predicates and executable checks of the linkage theorems.
//!
//! Every check returns a [`TheoremVerdict`]. Biconditionals pass only when
//! both sides were certified; an `Unknown` isomorphism probe or a failed
//! hypothesis makes the verdict `Inconclusive`.

mod locus;
mod theorems;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use serde_json::Value;

use crate::error::Result;
use crate::gb::{Ideal, QuotientRing, Ring};
use crate::homlat::{annihilator, n_torsionfree};
use crate::modops::{is_stable, iso_probe, lambda, IsoOptions, IsoVerdict, ModulePres};

pub use locus::{
    gorenstein_at, is_generically_gorenstein, is_gorenstein_on_punctured_spectrum,
    non_gorenstein_ideal, PointData, PrimeSet,
};
pub use theorems::{
    verify_cor_3_13, verify_cor_3_5, verify_cor_3_6, verify_cor_3_8, verify_cor_5_3,
    verify_lemma_3_2, verify_prop_4_6_forward, verify_thm_2_4, verify_thm_3_12, verify_thm_3_3,
    verify_thm_3_7, verify_thm_4_1, verify_thm_4_5, verify_thm_5_1, verify_thm_b,
};

/// Knobs shared by all checks.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Degree window for dimension tables.
    pub window: (i32, i32),
    /// Twists searched when matching tables or probing isomorphisms.
    pub twist_range: i32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            window: (-2, 8),
            twist_range: 6,
        }
    }
}

impl VerifyOptions {
    pub fn iso(&self) -> IsoOptions {
        IsoOptions {
            seed: self.seed,
            window: self.twist_range,
            ..IsoOptions::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        *self == Verdict::Pass
    }

    pub fn is_fail(&self) -> bool {
        *self == Verdict::Fail
    }

    pub fn label(&self) -> String {
        match self {
            Verdict::Pass => "Pass".into(),
            Verdict::Fail => "Fail".into(),
            Verdict::Inconclusive(r) => format!("Inconclusive({r})"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// Structured outcome of a check: hypotheses, evaluated sides and evidence.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremVerdict {
    pub theorem: String,
    pub hypotheses: Vec<Hypothesis>,
    pub sides: BTreeMap<String, Value>,
    pub evidence: BTreeMap<String, Value>,
    pub verdict: Verdict,
}

/// A truth value that may be uncertified.
pub type Tri = Option<bool>;

pub(crate) struct Check {
    v: TheoremVerdict,
}

impl Check {
    pub(crate) fn new(id: &str) -> Self {
        Check {
            v: TheoremVerdict {
                theorem: id.into(),
                hypotheses: vec![],
                sides: BTreeMap::new(),
                evidence: BTreeMap::new(),
                verdict: Verdict::Pass,
            },
        }
    }

    pub(crate) fn hyp(&mut self, name: &str, holds: bool, detail: impl Into<String>) -> bool {
        self.v.hypotheses.push(Hypothesis {
            name: name.into(),
            holds,
            detail: detail.into(),
        });
        holds
    }

    pub(crate) fn side(&mut self, name: &str, value: impl Serialize) {
        self.v.sides.insert(name.into(), serde_json::to_value(value).unwrap_or(Value::Null));
    }

    pub(crate) fn evidence(&mut self, name: &str, value: impl Serialize) {
        self.v.evidence.insert(name.into(), serde_json::to_value(value).unwrap_or(Value::Null));
    }

    /// `Inconclusive` naming the first failed hypothesis, if any.
    pub(crate) fn gate(&self) -> Option<TheoremVerdict> {
        let bad = self.v.hypotheses.iter().find(|h| !h.holds)?;
        Some(self.finish(Verdict::Inconclusive(format!("hypothesis failed: {}", bad.name))))
    }

    pub(crate) fn finish(&self, verdict: Verdict) -> TheoremVerdict {
        let mut v = self.v.clone();
        v.verdict = verdict;
        v
    }

    pub(crate) fn inconclusive(&self, reason: impl Into<String>) -> TheoremVerdict {
        self.finish(Verdict::Inconclusive(reason.into()))
    }

    pub(crate) fn iff(&self, a: Tri, b: Tri) -> TheoremVerdict {
        match (a, b) {
            (Some(x), Some(y)) if x == y => self.finish(Verdict::Pass),
            (Some(_), Some(_)) => self.finish(Verdict::Fail),
            _ => self.inconclusive("a side is uncertified"),
        }
    }

    pub(crate) fn implies(&self, a: Tri, b: Tri) -> TheoremVerdict {
        match (a, b) {
            (Some(false), _) | (_, Some(true)) => self.finish(Verdict::Pass),
            (Some(true), Some(false)) => self.finish(Verdict::Fail),
            _ => self.inconclusive("a side is uncertified"),
        }
    }

    /// Pass when every claim holds; any certified failure wins over `None`.
    pub(crate) fn all(&self, claims: &[Tri]) -> TheoremVerdict {
        if claims.iter().any(|c| *c == Some(false)) {
            self.finish(Verdict::Fail)
        } else if claims.iter().any(|c| c.is_none()) {
            self.inconclusive("a sub-certificate is Unknown")
        } else {
            self.finish(Verdict::Pass)
        }
    }
}

pub(crate) fn iso_tri(v: &IsoVerdict) -> Tri {
    match v {
        IsoVerdict::Isomorphic { .. } => Some(true),
        IsoVerdict::DistinguishedBy(_) => Some(false),
        IsoVerdict::Unknown => None,
    }
}

/// Outcome of the horizontal-linkage test.
#[derive(Clone, Debug, Serialize)]
pub struct LinkageCertificate {
    pub stable: bool,
    pub ext1_vanishes: bool,
    /// `iso_probe(λ²M, M)`, when requested.
    pub lambda_roundtrip: Option<IsoVerdict>,
    pub verdict: bool,
}

impl LinkageCertificate {
    /// The criterion and the roundtrip probe do not contradict each other.
    pub fn coherent(&self) -> bool {
        match &self.lambda_roundtrip {
            None | Some(IsoVerdict::Unknown) => true,
            Some(IsoVerdict::Isomorphic { .. }) => self.verdict,
            Some(IsoVerdict::DistinguishedBy(_)) => !self.verdict,
        }
    }
}

/// `M` is horizontally linked iff it is stable and `Ext^1(Tr M, R) = 0`.
pub fn is_horizontally_linked(m: &ModulePres, probe: Option<&IsoOptions>) -> Result<LinkageCertificate> {
    let stable = is_stable(m)?;
    let ext1_vanishes = n_torsionfree(m, 1)?;
    let lambda_roundtrip = match probe {
        Some(opts) => Some(iso_probe(&lambda(&lambda(m)?)?, m, opts)?),
        None => None,
    };
    Ok(LinkageCertificate {
        stable,
        ext1_vanishes,
        lambda_roundtrip,
        verdict: stable && ext1_vanishes,
    })
}

/// `R/c` as a ring; `R` itself when `c = 0`.
pub fn quotient_ring(c: &Ideal) -> Result<Ring> {
    if c.is_zero() {
        return Ok(c.ring().clone());
    }
    Ok(Arc::new(QuotientRing::quotient(c.ring(), c.gens())?))
}

/// `M ∼_c N`: `c` annihilates both and `λ_{R/c} M ≅ N`, `λ_{R/c} N ≅ M`.
pub fn linked_by_ideal(m: &ModulePres, n: &ModulePres, c: &Ideal, opts: &VerifyOptions) -> Result<TheoremVerdict> {
    m.same_ring(n)?;
    let mut ck = Check::new("linkage");
    let am = c.is_subset(&annihilator(m)?);
    let an = c.is_subset(&annihilator(n)?);
    ck.hyp("c annihilates M", am, c.to_string());
    ck.hyp("c annihilates N", an, c.to_string());
    if !(am && an) {
        return Ok(ck.finish(Verdict::Fail));
    }
    let q = quotient_ring(c)?;
    let mq = m.change_ring(&q)?;
    let nq = n.change_ring(&q)?;
    let forward = iso_probe(&lambda(&mq)?, &nq, &opts.iso())?;
    let backward = iso_probe(&lambda(&nq)?, &mq, &opts.iso())?;
    ck.side("lambda M ~ N", &forward);
    ck.side("lambda N ~ M", &backward);
    Ok(ck.all(&[iso_tri(&forward), iso_tri(&backward)]))
}
