//! One check per linkage statement. Candidate primes are passed as a
//! [`PrimeSet`]; subsets such as `X` are index lists into it.

use std::collections::BTreeSet;

use serde::Serialize;

use super::locus::{
    gorenstein_at, is_generically_gorenstein, is_gorenstein_on_punctured_spectrum,
    PointData, PrimeSet,
};
use super::{is_horizontally_linked, iso_tri, linked_by_ideal, quotient_ring, Check, TheoremVerdict, Tri, VerifyOptions};
use crate::cohatt::{c_value, is_associated, matlis_dual, LocalCohomology};
use crate::error::Result;
use crate::gb::{resolve, GradedDimTable, Ideal};
use crate::homlat::{
    annihilator, canonical_module, depth, depth_profile, ext, gdim, is_cohen_macaulay_ring,
    is_gorenstein_ring, is_semidualizing, n_torsionfree, nth_syzygy_test, ring_depth, total_reflexivity,
};
use crate::modops::{
    ideal_times_module, iso_probe, lambda, lambda_c, quotient_by_ideal, tensor, transpose, ModulePres,
};

/// Twists tried when matching dimension tables.
const TABLE_TWISTS: i32 = 24;

fn ring_dim(m: &ModulePres) -> Result<usize> {
    Ok(ModulePres::ring_module(m.ring(), 0).krull_dim()?.expect("the ring is nonzero"))
}

fn is_cm(m: &ModulePres) -> Result<bool> {
    Ok(depth_profile(m)?.cm)
}

fn has_finite_pd(m: &ModulePres) -> Result<bool> {
    let bound = m.ring().nvars() + 2;
    Ok(resolve(m, bound)?.complete)
}

/// Candidates of `x` that are attached primes of `H^i_m(m)`.
fn att_hits(m: &ModulePres, i: usize, set: &PrimeSet, x: &[usize]) -> Result<Vec<usize>> {
    let e = matlis_dual(m, i)?;
    if e.is_zero()? {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    for &p in x {
        if is_associated(&e, &set.primes[p])? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Some power of every element of `⋂ found` lies in `ann e`, so every
/// minimal prime of `e` is among `found`.
fn covers_minimal_primes(e: &ModulePres, found: &[&Ideal]) -> Result<bool> {
    if e.is_zero()? {
        return Ok(true);
    }
    let Some((first, rest)) = found.split_first() else {
        return Ok(false);
    };
    let mut j = (*first).clone();
    for p in rest {
        j = j.intersection(p)?;
    }
    let ann = annihilator(e)?;
    for g in j.gens() {
        let mut pw = g.clone();
        let mut ok = false;
        for _ in 0..8 {
            if ann.contains(&pw) {
                ok = true;
                break;
            }
            pw = e.ring().nf(&pw.mul(g)?);
        }
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Att H^i_m(m)` among all candidates, with a completeness flag for the
/// minimal attached primes.
fn att_full(m: &ModulePres, i: usize, set: &PrimeSet) -> Result<(Vec<usize>, bool)> {
    let e = matlis_dual(m, i)?;
    if e.is_zero()? {
        return Ok((vec![], true));
    }
    let all: Vec<usize> = (0..set.len()).collect();
    let mut found = Vec::new();
    for p in all {
        if is_associated(&e, &set.primes[p])? {
            found.push(p);
        }
    }
    let ideals: Vec<&Ideal> = found.iter().map(|&p| &set.primes[p].ideal).collect();
    let complete = covers_minimal_primes(&e, &ideals)?;
    Ok((found, complete))
}

fn finite_gdim_at(ring_gor: &[bool], pd_finite: bool, x: &[usize]) -> bool {
    pd_finite || x.iter().all(|&p| ring_gor[p])
}

fn gorenstein_flags(m: &ModulePres, set: &PrimeSet) -> Result<Vec<bool>> {
    set.primes.iter().map(|p| gorenstein_at(m.ring(), p)).collect()
}

/// Shared gate: Cohen–Macaulay ring and horizontally linked module.
fn linked_gate(ck: &mut Check, m: &ModulePres, opts: &VerifyOptions) -> Result<bool> {
    let cm = is_cohen_macaulay_ring(m.ring())?;
    ck.hyp("R Cohen-Macaulay", cm, "");
    let cert = is_horizontally_linked(m, Some(&opts.iso()))?;
    ck.evidence("linkage", &cert);
    Ok(ck.hyp("M horizontally linked", cert.verdict, format!("stable={} ext1={}", cert.stable, cert.ext1_vanishes)) && cm)
}

/// `n_torsionfree(M, n) ⇔ S̃_n` at every candidate, for finite G-dimension.
pub fn verify_thm_2_4(m: &ModulePres, n: usize, set: &PrimeSet) -> Result<TheoremVerdict> {
    let mut ck = Check::new("thm2.4");
    let r = ModulePres::ring_module(m.ring(), 0);
    let g = gdim(m, &r)?;
    ck.hyp("G-dim M finite", g.value.is_some(), g.certificate.clone());
    ck.hyp("candidates given", !set.is_empty(), "");
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let tf = n_torsionfree(m, n)?;
    let data = set.point_data(m)?;
    let failing: Vec<usize> = (0..set.len()).filter(|&p| !data[p].serre(n)).collect();
    ck.side("n-torsionfree", tf);
    ck.side("serre", failing.is_empty());
    ck.evidence("serre failures", set.labels(&failing));
    Ok(ck.iff(Some(tf), Some(failing.is_empty())))
}

/// `Ass Ext^{n+1}(Tr M, C) = Ass Ext^{n+1}(Tr M, R)` on the candidates.
pub fn verify_lemma_3_2(m: &ModulePres, n: usize, c: &ModulePres, set: &PrimeSet) -> Result<TheoremVerdict> {
    let mut ck = Check::new("lemma3.2");
    ck.hyp("M n-torsionfree", n_torsionfree(m, n)?, "");
    ck.hyp("M in Auslander class", crate::homlat::in_auslander_class(m, c)?, "");
    let data = set.point_data(&ModulePres::ring_module(m.ring(), 0))?;
    let low: Vec<usize> = (0..set.len()).filter(|&p| data[p].depth_ring <= n).collect();
    let gor = gorenstein_flags(m, set)?;
    ck.hyp("finite G-dim on X^n(R)", finite_gdim_at(&gor, has_finite_pd(m)?, &low), set.labels(&low).join(" "));
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let t = transpose(m)?;
    let r = ModulePres::ring_module(m.ring(), 0);
    let ass = |e: &ModulePres| -> Result<Vec<usize>> {
        let mut out = Vec::new();
        if e.is_zero()? {
            return Ok(out);
        }
        for p in 0..set.len() {
            if is_associated(e, &set.primes[p])? {
                out.push(p);
            }
        }
        Ok(out)
    };
    let ec = ext(n + 1, &t, c)?;
    let er = ext(n + 1, &t, &r)?;
    let a = ass(&ec)?;
    let b = ass(&er)?;
    ck.side("Ass Ext(TrM, C)", set.labels(&a));
    ck.side("Ass Ext(TrM, R)", set.labels(&b));
    Ok(ck.all(&[Some(a == b)]))
}

fn thm_3_3(id: &str, m: &ModulePres, n: usize, x: &[usize], set: &PrimeSet, opts: &VerifyOptions) -> Result<TheoremVerdict> {
    let mut ck = Check::new(id);
    ck.hyp("n positive", n >= 1, n.to_string());
    linked_gate(&mut ck, m, opts)?;
    ck.hyp("X stable under generalization", set.closed_under_generalization(x), "among candidates");
    let gor = gorenstein_flags(m, set)?;
    ck.hyp("finite G-dim on X", finite_gdim_at(&gor, has_finite_pd(m)?, x), "Gorenstein points or finite pd");
    ck.evidence("X", set.labels(x));
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let d = ring_dim(m)?;
    let data = set.point_data(m)?;
    let left: Vec<usize> = x.iter().copied().filter(|&p| !data[p].serre(n)).collect();
    let lm = lambda(m)?;
    let mut hits = BTreeSet::new();
    for i in (d + 1).saturating_sub(n)..d {
        for p in att_hits(&lm, i, set, x)? {
            hits.insert(format!("H^{i}: {}", set.label(p)));
        }
    }
    ck.side("X in S_n(M)", left.is_empty());
    ck.side("Att avoids X", hits.is_empty());
    ck.evidence("serre failures in X", set.labels(&left));
    ck.evidence("attached primes in X", &hits);
    Ok(ck.iff(Some(left.is_empty()), Some(hits.is_empty())))
}

/// `X ⊆ S̃_n(M) ⇔ Att H^i_m(λM) ∩ X = ∅` for `d − n < i < d`.
pub fn verify_thm_3_3(m: &ModulePres, n: usize, x: &[usize], set: &PrimeSet, opts: &VerifyOptions) -> Result<TheoremVerdict> {
    thm_3_3("thm3.3", m, n, x, set, opts)
}

/// The Serre-locus check with `X = {p : depth R_p <= n - 1}` and `S_d`.
pub fn verify_cor_3_5(m: &ModulePres, n: usize, set: &PrimeSet, opts: &VerifyOptions) -> Result<TheoremVerdict> {
    let data = set.point_data(&ModulePres::ring_module(m.ring(), 0))?;
    let x: Vec<usize> = (0..set.len()).filter(|&p| data[p].depth_ring + 1 <= n).collect();
    thm_3_3("cor3.5", m, ring_dim(m)?, &x, set, opts)
}

/// The Serre-locus check on the punctured spectrum.
pub fn verify_cor_3_6(m: &ModulePres, n: usize, set: &PrimeSet, opts: &VerifyOptions) -> Result<TheoremVerdict> {
    let mx = set.maximal(m.ring());
    let x: Vec<usize> = (0..set.len()).filter(|&p| Some(p) != mx).collect();
    thm_3_3("cor3.6", m, n, &x, set, opts)
}

/// If `Att H^j_m(λM)` avoids `X` for `d − n < j < d`, then `Att H^i_m(M)`
/// avoids `X` for `0 < i < n`.
pub fn verify_thm_3_7(m: &ModulePres, n: usize, x: &[usize], set: &PrimeSet, opts: &VerifyOptions) -> Result<TheoremVerdict> {
    let mut ck = Check::new("thm3.7");
    let d = ring_dim(m)?;
    ck.hyp("0 < n <= d", n >= 1 && n <= d, format!("n={n} d={d}"));
    linked_gate(&mut ck, m, opts)?;
    ck.hyp("X stable under generalization", set.closed_under_generalization(x), "among candidates");
    let gor = gorenstein_flags(m, set)?;
    ck.hyp("finite G-dim on X", finite_gdim_at(&gor, has_finite_pd(m)?, x), "");
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let lm = lambda(m)?;
    let mut ante = BTreeSet::new();
    for j in (d + 1 - n)..d {
        for p in att_hits(&lm, j, set, x)? {
            ante.insert(format!("H^{j}(lambda M): {}", set.label(p)));
        }
    }
    let mut cons = BTreeSet::new();
    for i in 1..n {
        for p in att_hits(m, i, set, x)? {
            cons.insert(format!("H^{i}(M): {}", set.label(p)));
        }
    }
    ck.side("antecedent", ante.is_empty());
    ck.side("consequent", cons.is_empty());
    ck.evidence("antecedent hits", &ante);
    ck.evidence("consequent hits", &cons);
    Ok(ck.implies(Some(ante.is_empty()), Some(cons.is_empty())))
}

fn att_inside(m: &ModulePres, set: &PrimeSet, x: &[usize], range: std::ops::Range<usize>) -> Result<(Tri, Vec<String>)> {
    let mut outside = Vec::new();
    let mut complete = true;
    for i in range {
        let (found, ok) = att_full(m, i, set)?;
        complete &= ok;
        outside.extend(found.into_iter().filter(|p| !x.contains(p)).map(|p| format!("H^{i}: {}", set.label(p))));
    }
    if !outside.is_empty() {
        return Ok((Some(false), outside));
    }
    Ok((complete.then_some(true), outside))
}

/// For specialization-closed `X` with `R_p` Gorenstein off `X`:
/// `Att H^i_m(M) ⊆ X ⇔ Att H^i_m(λM) ⊆ X` for `0 < i < dim R`.
pub fn verify_cor_3_8(m: &ModulePres, x: &[usize], set: &PrimeSet, opts: &VerifyOptions) -> Result<TheoremVerdict> {
    let mut ck = Check::new("cor3.8");
    linked_gate(&mut ck, m, opts)?;
    ck.hyp("X specialization-closed", set.closed_under_specialization(x), "among candidates");
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let gor = gorenstein_flags(m, set)?;
    let off: Vec<usize> = (0..set.len()).filter(|p| !x.contains(p)).collect();
    ck.hyp("Gorenstein off X", off.iter().all(|&p| gor[p]), set.labels(&off).join(" "));
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let d = ring_dim(m)?;
    let (a, wa) = att_inside(m, set, x, 1..d)?;
    let (b, wb) = att_inside(&lambda(m)?, set, x, 1..d)?;
    ck.side("Att H(M) in X", a);
    ck.side("Att H(lambda M) in X", b);
    ck.evidence("outside X (M)", wa);
    ck.evidence("outside X (lambda M)", wb);
    if a.is_none() || b.is_none() {
        return Ok(ck.inconclusive("candidate list may miss an attached prime"));
    }
    Ok(ck.iff(a, b))
}

/// `{p ∈ S_k(M) \ S_{k+1}(M) : depth M_p = k}` among the candidates.
fn depth_stratum(set: &PrimeSet, data: &[PointData], k: usize) -> Vec<usize> {
    (0..set.len())
        .filter(|&p| {
            set.in_serre_locus(data, k, p) && !set.in_serre_locus(data, k + 1, p) && data[p].depth_module == Some(k)
        })
        .collect()
}

fn positive_gdim_gate(ck: &mut Check, m: &ModulePres) -> Result<()> {
    let g = gdim(m, &ModulePres::ring_module(m.ring(), 0))?;
    ck.hyp(
        "G-dim M finite and positive",
        g.value.is_some_and(|v| v > 0),
        format!("{:?} ({})", g.value, g.certificate),
    );
    Ok(())
}

/// `Att H^c_m(λM) = {p ∈ S_{d−c}(M) \ S_{d−c+1}(M) : depth M_p = d − c}`
/// with `c = c(λM)`.
pub fn verify_thm_3_12(m: &ModulePres, set: &PrimeSet, opts: &VerifyOptions) -> Result<TheoremVerdict> {
    let mut ck = Check::new("thm3.12");
    linked_gate(&mut ck, m, opts)?;
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    positive_gdim_gate(&mut ck, m)?;
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let lm = lambda(m)?;
    let Some(c) = c_value(&lm)? else {
        return Ok(ck.inconclusive("c(lambda M) undefined: lambda M is Cohen-Macaulay"));
    };
    let d = ring_dim(m)?;
    ck.evidence("c", c);
    let (lhs, complete) = att_full(&lm, c, set)?;
    let data = set.point_data(m)?;
    let rhs = depth_stratum(set, &data, d - c);
    ck.side("Att (duality)", set.labels(&lhs));
    ck.side("depth stratum (pointwise)", set.labels(&rhs));
    if !complete {
        return Ok(ck.inconclusive("candidate list misses a minimal attached prime"));
    }
    Ok(ck.all(&[Some(set.labels(&lhs) == set.labels(&rhs))]))
}

/// `Att H^{d−n}_m(λM)` minus the specialization closure of the higher
/// attached primes equals the depth-`n` stratum of `S_n(M) \ S_{n+1}(M)`.
pub fn verify_cor_3_13(m: &ModulePres, n: usize, set: &PrimeSet, opts: &VerifyOptions) -> Result<TheoremVerdict> {
    let mut ck = Check::new("cor3.13");
    let d = ring_dim(m)?;
    ck.hyp("0 < n < d", n >= 1 && n < d, format!("n={n} d={d}"));
    linked_gate(&mut ck, m, opts)?;
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    positive_gdim_gate(&mut ck, m)?;
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let lm = lambda(m)?;
    let (a, mut complete) = att_full(&lm, d - n, set)?;
    let mut higher = Vec::new();
    for i in (d - n + 1)..d {
        let (f, ok) = att_full(&lm, i, set)?;
        complete &= ok;
        higher.extend(f);
    }
    let closure = set.specialization_closure(&higher);
    let lhs: Vec<usize> = a.into_iter().filter(|p| !closure.contains(p)).collect();
    let data = set.point_data(m)?;
    let rhs = depth_stratum(set, &data, n);
    ck.side("lhs", set.labels(&lhs));
    ck.side("rhs", set.labels(&rhs));
    if !complete {
        return Ok(ck.inconclusive("candidate list misses a minimal attached prime"));
    }
    Ok(ck.all(&[Some(set.labels(&lhs) == set.labels(&rhs))]))
}

/// Transfer of `G_c`-dimension zero, Serre conditions and Cohen–Macaulayness
/// between `M` and `cλM`, and `λ_c M ≅ cλM`.
pub fn verify_thm_4_1(
    m: &ModulePres,
    c: &Ideal,
    n: Option<usize>,
    set: &PrimeSet,
    opts: &VerifyOptions,
) -> Result<TheoremVerdict> {
    let mut ck = Check::new("thm4.1");
    let ring = m.ring();
    let cm_ring = is_cohen_macaulay_ring(ring)?;
    let gen_gor = cm_ring && is_generically_gorenstein(ring)?;
    ck.hyp("R generically Gorenstein", gen_gor, "certified through the canonical module");
    let cmod = ModulePres::ideal_module(c)?;
    ck.hyp("c semidualizing", !c.is_zero() && is_semidualizing(&cmod)?, c.to_string());
    let cert = is_horizontally_linked(m, None)?;
    ck.hyp("M horizontally linked", cert.verdict, "");
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let lm = lambda(m)?;
    let clm = ideal_times_module(c, &lm)?;
    let mut claims = Vec::new();

    let gm = total_reflexivity(m, &cmod)?.holds();
    let gc = total_reflexivity(&clm, &cmod)?.holds();
    ck.side("Gc-dim M = 0", gm);
    ck.side("Gc-dim c.lambda M = 0", gc);
    claims.push(Some(gm == gc));

    let lc = lambda_c(m, &cmod)?;
    let probe = iso_probe(&lc, &clm, &opts.iso())?;
    ck.side("lambda_c M ~ c.lambda M", &probe);
    claims.push(iso_tri(&probe));

    let g = gdim(m, &cmod)?;
    ck.evidence("Gc-dim M", &g);
    if cm_ring && g.value.is_some() {
        let a = is_cm(m)?;
        let b = is_cm(&clm)?;
        ck.side("M CM", a);
        ck.side("c.lambda M CM", b);
        claims.push(Some(a == b));
    }
    if let Some(n) = n {
        if g.value.is_some() && !set.is_empty() {
            let data = set.point_data(m)?;
            let serre = (0..set.len()).all(|p| data[p].serre(n));
            let mut vanish = true;
            for i in 1..n {
                vanish &= ext(i, &clm, &cmod)?.is_zero()?;
            }
            ck.side("M satisfies S_n", serre);
            ck.side("Ext(c.lambda M, c) vanishes", vanish);
            claims.push(Some(serre == vanish));
        }
    }
    Ok(ck.all(&claims))
}

/// For `M` Cohen–Macaulay linked to `N` by a generically Gorenstein
/// Cohen–Macaulay ideal `a` with `ω_{R/a} ≅ c/a`:
/// `N` CM `⇔ depth M/cM ≥ dim R/a − 1`.
pub fn verify_thm_b(
    m: &ModulePres,
    n: &ModulePres,
    a: &Ideal,
    c: &Ideal,
    opts: &VerifyOptions,
) -> Result<TheoremVerdict> {
    let mut ck = Check::new("thmB");
    let ring = m.ring();
    ck.hyp("R Cohen-Macaulay", is_cohen_macaulay_ring(ring)?, "");
    let q = quotient_ring(a)?;
    let q_cm = is_cohen_macaulay_ring(&q)?;
    ck.hyp("R/a Cohen-Macaulay", q_cm, a.to_string());
    ck.hyp("a generically Gorenstein", q_cm && is_generically_gorenstein(&q)?, "");
    ck.hyp("a inside c", a.is_subset(c), "");
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let link = linked_by_ideal(m, n, a, opts)?;
    ck.evidence("linkage", &link);
    ck.hyp("M linked to N by a", link.verdict.is_pass(), link.verdict.label());
    let cq = ModulePres::ideal_module(&c.change_ring(&q)?)?;
    let w = canonical_module(&q)?;
    let probe = iso_probe(&cq, &w, &opts.iso())?;
    ck.hyp("c/a is a canonical module of R/a", probe.is_isomorphic(), probe.label());
    ck.hyp("M Cohen-Macaulay", is_cm(m)?, "");
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let ncm = is_cm(n)?;
    let mc = quotient_by_ideal(m, c)?;
    let dq = ModulePres::ring_module(&q, 0).krull_dim()?.expect("R/a is nonzero");
    let dmc = depth(&mc)?;
    let ineq = dmc.is_none_or(|x| x + 1 >= dq);
    ck.side("N CM", ncm);
    ck.side("depth M/cM >= dim R/a - 1", ineq);
    ck.evidence("depth M/cM", dmc);
    ck.evidence("dim R/a", dq);
    Ok(ck.iff(Some(ncm), Some(ineq)))
}

/// `M ⊗ ω` maximal Cohen–Macaulay `⇔ λM` is a `(d+1)`-th syzygy, plus the
/// dimension tables of `Ext^i(M ⊗ ω, ω) ≅ Ext^i(M, R)` for `1 ≤ i ≤ d`.
pub fn verify_thm_4_5(m: &ModulePres, opts: &VerifyOptions) -> Result<TheoremVerdict> {
    let mut ck = Check::new("thm4.5");
    linked_gate(&mut ck, m, opts)?;
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let ring = m.ring();
    let punctured = is_gorenstein_on_punctured_spectrum(ring)? || has_finite_pd(m)?;
    ck.hyp("finite G-dim on the punctured spectrum", punctured, "");
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let d = ring_dim(m)?;
    let w = canonical_module(ring)?;
    let t = tensor(m, &w)?;
    let mcm = depth(&t)? == Some(d);
    let syz = nth_syzygy_test(&lambda(m)?, d + 1)?;
    ck.side("M (x) omega MCM", mcm);
    ck.side("lambda M is a (d+1)-th syzygy", syz);
    let r = ModulePres::ring_module(ring, 0);
    let (lo, hi) = opts.window;
    let mut tables_agree = true;
    let mut tables = Vec::new();
    for i in 1..=d {
        let a = ext(i, &t, &w)?.hilbert(lo, hi)?;
        let b = ext(i, m, &r)?.hilbert(lo, hi)?;
        tables_agree &= a == b;
        tables.push((i, a.to_string(), b.to_string()));
    }
    ck.evidence("Ext tables (M(x)w, w) vs (M, R)", &tables);
    ck.side("Ext tables agree", tables_agree);
    let iff = ck.iff(Some(mcm), Some(syz));
    if !iff.verdict.is_pass() {
        return Ok(iff);
    }
    Ok(ck.all(&[Some(tables_agree)]))
}

#[derive(Serialize)]
struct ForwardEntry {
    module: String,
    linked: bool,
    cm: bool,
    lambda_cm: Option<bool>,
}

/// Over a Gorenstein ring of dimension `> 1`, `λ` preserves Cohen–Macaulay
/// linked modules.
pub fn verify_prop_4_6_forward(modules: &[ModulePres], opts: &VerifyOptions) -> Result<TheoremVerdict> {
    let mut ck = Check::new("prop4.6");
    let Some(first) = modules.first() else {
        return Ok(ck.inconclusive("no test modules"));
    };
    let ring = first.ring();
    ck.hyp("R Gorenstein", is_gorenstein_ring(ring)?, "");
    ck.hyp("dim R > 1", ring_dim(first)? > 1, "");
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let mut entries = Vec::new();
    let mut claims = Vec::new();
    for m in modules {
        m.same_ring(first)?;
        let linked = is_horizontally_linked(m, None)?.verdict;
        let cm = is_cm(m)?;
        let lambda_cm = if linked && cm { Some(is_cm(&lambda(m)?)?) } else { None };
        if let Some(l) = lambda_cm {
            claims.push(Some(l));
        }
        entries.push(ForwardEntry {
            module: m.to_string(),
            linked,
            cm,
            lambda_cm,
        });
    }
    ck.evidence("modules", &entries);
    let _ = opts;
    if claims.is_empty() {
        return Ok(ck.inconclusive("no linked Cohen-Macaulay test module"));
    }
    Ok(ck.all(&claims))
}

/// Twists `t` with `a(j) = b(j + t)` (or `b(t − j)` when mirrored) on the
/// window of `a`.
fn matching_twists(a: &GradedDimTable, b: &GradedDimTable, mirrored: bool) -> BTreeSet<i32> {
    (-TABLE_TWISTS..=TABLE_TWISTS)
        .filter(|&t| {
            (a.lo..=a.hi).all(|j| {
                let k = if mirrored { t - j } else { j + t };
                a.get(j) == b.get(k)
            })
        })
        .collect()
}

fn wide(lo: i32, hi: i32) -> (i32, i32) {
    let r = lo.abs().max(hi.abs()) + TABLE_TWISTS;
    (-r, r)
}

#[derive(Serialize)]
struct TwistMatch {
    i: usize,
    lhs: GradedDimTable,
    rhs: GradedDimTable,
}

/// Intersect the admissible twists over all pairs; pick the one of least
/// absolute value. `Some(None)` means every twist works (all tables zero).
fn uniform_twist(pairs: &[(GradedDimTable, GradedDimTable)], mirrored: bool) -> Option<Option<i32>> {
    let mut acc: Option<BTreeSet<i32>> = None;
    for (a, b) in pairs {
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let s = matching_twists(a, b, mirrored);
        acc = Some(match acc {
            None => s,
            Some(prev) => prev.intersection(&s).copied().collect(),
        });
    }
    match acc {
        None => Some(None),
        Some(s) => s.into_iter().min_by_key(|t| (t.abs(), *t)).map(Some),
    }
}

fn punctured_serre(ck: &mut Check, m: &ModulePres, n: usize, set: &PrimeSet) -> Result<()> {
    let mx = set.maximal(m.ring());
    let data = set.point_data(m)?;
    let bad: Vec<usize> = (0..set.len()).filter(|&p| Some(p) != mx && !data[p].serre(n)).collect();
    ck.hyp("S_n on the punctured spectrum", bad.is_empty() && !set.is_empty(), set.labels(&bad).join(" "));
    Ok(())
}

/// At `a = m`: `H^i_m(M) ≅ Ext^{i+1}(Tr M, R)` for `0 ≤ i < n`, and
/// `H^i_m(M) ≅ Ext^i(λM, R)` for `0 < i < n`, up to one uniform twist.
pub fn verify_thm_5_1(m: &ModulePres, n: usize, set: &PrimeSet, opts: &VerifyOptions) -> Result<TheoremVerdict> {
    let mut ck = Check::new("thm5.1");
    let ring = m.ring();
    let dr = ring_depth(ring)?;
    ck.hyp("0 < n <= grade m", n >= 1 && n <= dr, format!("n={n} depth R={dr}"));
    punctured_serre(&mut ck, m, n, set)?;
    let fin = (is_cohen_macaulay_ring(ring)? && is_gorenstein_on_punctured_spectrum(ring)?) || has_finite_pd(m)?;
    ck.hyp("finite G-dim on the punctured spectrum", fin, "");
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let (lo, hi) = opts.window;
    let (wlo, whi) = wide(lo, hi);
    let tr = transpose(m)?;
    let r = ModulePres::ring_module(ring, 0);
    let mut pairs = Vec::new();
    let mut ev = Vec::new();
    for i in 0..n {
        let a = LocalCohomology::new(m, i)?.table(lo, hi)?;
        let b = ext(i + 1, &tr, &r)?.hilbert(wlo, whi)?;
        ev.push(TwistMatch { i, lhs: a.clone(), rhs: b.clone() });
        pairs.push((a, b));
    }
    let t1 = uniform_twist(&pairs, false);
    let i0 = uniform_twist(&pairs[..1], false).is_some();
    ck.evidence("H^i(M) vs Ext^(i+1)(TrM, R)", &ev);
    ck.evidence("i = 0 matches", i0);
    ck.side("twist H vs Ext(TrM)", t1);
    let mut claims = vec![Some(t1.is_some())];
    if n > 1 {
        let lm = lambda(m)?;
        let mut pairs = Vec::new();
        for i in 1..n {
            let a = LocalCohomology::new(m, i)?.table(lo, hi)?;
            let b = ext(i, &lm, &r)?.hilbert(wlo, whi)?;
            pairs.push((a, b));
        }
        let t2 = uniform_twist(&pairs, false);
        ck.side("twist H vs Ext(lambda M)", t2);
        claims.push(Some(t2.is_some()));
    }
    Ok(ck.all(&claims))
}

/// `dim H^i_m(M)_j = dim H^{d−i}_m(λM)_{t−j}` for `0 < i < n` with one
/// uniform `t`.
pub fn verify_cor_5_3(m: &ModulePres, n: usize, set: &PrimeSet, opts: &VerifyOptions) -> Result<TheoremVerdict> {
    let mut ck = Check::new("cor5.3");
    let ring = m.ring();
    ck.hyp("R Gorenstein", is_gorenstein_ring(ring)?, "");
    let d = ring_dim(m)?;
    ck.hyp("dim R > 1", d > 1, d.to_string());
    let cert = is_horizontally_linked(m, None)?;
    ck.hyp("M horizontally linked", cert.verdict, "");
    punctured_serre(&mut ck, m, n, set)?;
    if let Some(v) = ck.gate() {
        return Ok(v);
    }
    let (lo, hi) = opts.window;
    let (wlo, whi) = wide(lo, hi);
    let lm = lambda(m)?;
    let mut pairs = Vec::new();
    let mut ev = Vec::new();
    for i in 1..n.min(d + 1) {
        let a = LocalCohomology::new(m, i)?.table(lo, hi)?;
        let b = LocalCohomology::new(&lm, d - i)?.table(wlo, whi)?;
        ev.push(TwistMatch { i, lhs: a.clone(), rhs: b.clone() });
        pairs.push((a, b));
    }
    let t = uniform_twist(&pairs, true);
    ck.evidence("H^i(M) vs H^(d-i)(lambda M)", &ev);
    ck.side("twist", t);
    Ok(ck.all(&[Some(t.is_some())]))
}
