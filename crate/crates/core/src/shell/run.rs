//! Worksheet evaluation and reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value as Json};

use super::oracle::oracle_dims;
use super::syntax::{bind, constructor, parse_range, task_schema, Decl, Kind, Param, Spanned, Task, Value, Worksheet};
use crate::cohatt::{att_local_cohomology, ass_module, cohomology_table};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::gb::{Caps, Ideal, QuotientRing, Ring};
use crate::homlat::{
    annihilator, canonical_module, depth_profile, ext, gdim, is_cohen_macaulay_ring, is_gorenstein_ring,
    monomial_primes, n_torsionfree, serre_check, PrimeCandidate,
};
use crate::linkverify::{self as lv, PrimeSet, TheoremVerdict, Verdict, VerifyOptions};
use crate::modops::{
    dual, hom_module, ideal_times_module, is_stable, iso_probe, lambda, lambda_c, syzygy, tensor, transpose,
    IsoVerdict, ModulePres,
};
use crate::poly::{MonomialOrder, Poly, PolyRing};

#[derive(Clone, Debug, Serialize)]
pub struct RunFlags {
    pub seed: u64,
    pub max_degree: u32,
    pub window: (i32, i32),
    pub jobs: usize,
}

impl Default for RunFlags {
    fn default() -> Self {
        RunFlags {
            seed: 0,
            max_degree: 24,
            window: (-2, 8),
            jobs: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Done,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct TaskReport {
    pub task: String,
    pub line: usize,
    pub verdict: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub evidence: Json,
    pub timing_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub engine: String,
    pub seed: u64,
    pub tasks: Vec<TaskReport>,
    pub declaration_errors: Vec<String>,
}

impl RunReport {
    /// 0 when nothing failed, 1 on a `Fail`, 2 on an engine error or cap.
    pub fn exit_code(&self) -> i32 {
        if !self.declaration_errors.is_empty() || self.tasks.iter().any(|t| t.verdict == Status::Error) {
            2
        } else if self.tasks.iter().any(|t| t.verdict == Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn to_machine(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "liaison {} seed={}", self.engine, self.seed);
        for e in &self.declaration_errors {
            let _ = writeln!(s, "declaration error: {e}");
        }
        for t in &self.tasks {
            let status = match (&t.verdict, &t.reason) {
                (v, Some(r)) => format!("{v:?} ({r})"),
                (v, None) => format!("{v:?}"),
            };
            let _ = writeln!(s, "line {:>3}  {}  =>  {}  [{} ms]", t.line, t.task, status, t.timing_ms);
            if !t.evidence.is_null() {
                let _ = writeln!(s, "          {}", t.evidence);
            }
        }
        let count = |st: Status| self.tasks.iter().filter(|t| t.verdict == st).count();
        let _ = writeln!(
            s,
            "{} tasks: {} pass, {} fail, {} inconclusive, {} done, {} error",
            self.tasks.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Inconclusive),
            count(Status::Done),
            count(Status::Error)
        );
        s
    }
}

#[derive(Clone)]
enum Obj {
    Ring(Ring),
    Ideal(Ideal),
    Module(ModulePres),
    Prime(PrimeCandidate),
    Primes(Vec<PrimeCandidate>),
}

fn at(v: &Spanned<Value>, e: Error) -> Error {
    match e {
        Error::Parse { .. } | Error::Truncation { .. } => e,
        other => Error::Parse {
            line: v.line,
            col: v.col,
            msg: other.to_string(),
        },
    }
}

struct Env {
    objs: BTreeMap<String, std::result::Result<Obj, String>>,
    caps: Caps,
}

type Bound<'a> = BTreeMap<&'static str, &'a Spanned<Value>>;

impl Env {
    fn lookup(&self, v: &Spanned<Value>) -> Result<Obj> {
        match &v.node {
            Value::Atom(n) => match self.objs.get(n) {
                Some(Ok(o)) => Ok(o.clone()),
                Some(Err(e)) => Err(Error::InvalidInput(format!("`{n}` failed: {e}"))),
                None => Err(Error::UndefinedName(format!("`{n}`"))),
            },
            Value::Call(..) => self.eval(v),
            Value::List(_) => Err(at(v, Error::InvalidInput("unexpected list".into()))),
        }
    }

    fn ring(&self, b: &Bound, k: &str) -> Result<Ring> {
        match self.lookup(b[k])? {
            Obj::Ring(r) => Ok(r),
            _ => Err(at(b[k], Error::InvalidInput("expected a ring".into()))),
        }
    }

    fn ideal(&self, b: &Bound, k: &str) -> Result<Ideal> {
        match self.lookup(b[k])? {
            Obj::Ideal(i) => Ok(i),
            _ => Err(at(b[k], Error::InvalidInput("expected an ideal".into()))),
        }
    }

    fn module_of(&self, v: &Spanned<Value>) -> Result<ModulePres> {
        match self.lookup(v)? {
            Obj::Module(m) => Ok(m),
            _ => Err(at(v, Error::InvalidInput("expected a module".into()))),
        }
    }

    fn module(&self, b: &Bound, k: &str) -> Result<ModulePres> {
        self.module_of(b[k])
    }

    fn primes(&self, v: &Spanned<Value>) -> Result<Vec<PrimeCandidate>> {
        match &v.node {
            Value::List(items) => items
                .iter()
                .map(|x| match self.lookup(x)? {
                    Obj::Prime(p) => Ok(p),
                    _ => Err(at(x, Error::InvalidInput("expected a prime".into()))),
                })
                .collect(),
            _ => match self.lookup(v)? {
                Obj::Primes(ps) => Ok(ps),
                _ => Err(at(v, Error::InvalidInput("expected a prime list".into()))),
            },
        }
    }

    fn eval(&self, v: &Spanned<Value>) -> Result<Obj> {
        let Value::Call(name, args) = &v.node else {
            return self.lookup(v);
        };
        let (_, params) = constructor(name).ok_or_else(|| Error::InvalidInput(format!("unknown constructor `{name}`")))?;
        let b = bind(params, args, v.line, v.col, name)?;
        self.construct(name, &b).map_err(|e| at(v, e))
    }

    fn construct(&self, name: &str, b: &Bound) -> Result<Obj> {
        Ok(match name {
            "poly" => {
                let vars: Vec<String> = words(b["vars"])?;
                let vs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
                let p = match b.get("char") {
                    Some(v) => int(v)? as u32,
                    None => PrimeField::default().characteristic(),
                };
                let order = match b.get("order") {
                    Some(v) => MonomialOrder::parse(atom(v)?)?,
                    None => MonomialOrder::GRevLex,
                };
                let weights = match b.get("weights") {
                    Some(v) => Some(ints(v)?.into_iter().map(|w| w as u32).collect::<Vec<_>>()),
                    None => None,
                };
                let poly = PolyRing::new(PrimeField::new(p)?, &vs, order, weights.as_deref())?;
                Obj::Ring(Arc::new(QuotientRing::with_caps(Arc::new(poly), &[], self.caps)?))
            }
            "quotient" => {
                let r = self.ring(b, "ring")?;
                let gens = polys(&r, b["gens"])?;
                Obj::Ring(Arc::new(r.quotient(&gens)?))
            }
            "modulo" => Obj::Ring(lv::quotient_ring(&self.ideal(b, "ideal")?)?),
            "ideal" => {
                let r = self.ring(b, "ring")?;
                let gens = polys(&r, b["gens"])?;
                Obj::Ideal(Ideal::new(&r, &gens)?)
            }
            "maximal" => Obj::Ideal(Ideal::maximal(&self.ring(b, "ring")?)),
            "zero" => Obj::Ideal(Ideal::zero(&self.ring(b, "ring")?)),
            "unit" => Obj::Ideal(Ideal::unit(&self.ring(b, "ring")?)),
            "non_gorenstein" => Obj::Ideal(lv::non_gorenstein_ideal(&self.ring(b, "ring")?)?),
            "colon" => Obj::Ideal(self.ideal(b, "a")?.quotient(&self.ideal(b, "b")?)?),
            "sum" => Obj::Ideal(self.ideal(b, "a")?.sum(&self.ideal(b, "b")?)?),
            "product" => Obj::Ideal(self.ideal(b, "a")?.product(&self.ideal(b, "b")?)?),
            "intersect" => Obj::Ideal(self.ideal(b, "a")?.intersection(&self.ideal(b, "b")?)?),
            "power" => Obj::Ideal(self.ideal(b, "ideal")?.power(int(b["k"])? as u32)?),
            "ann" => Obj::Ideal(annihilator(&self.module(b, "module")?)?),
            "extend" => Obj::Ideal(self.ideal(b, "ideal")?.change_ring(&self.ring(b, "ring")?)?),
            "coker" => {
                let r = self.ring(b, "ring")?;
                let rows: Vec<i32> = ints(b["rows"])?.into_iter().map(|x| x as i32).collect();
                let cols: Vec<i32> = ints(b["cols"])?.into_iter().map(|x| x as i32).collect();
                let entries = match b.get("matrix") {
                    Some(v) => list(v)?.iter().map(|row| polys(&r, row)).collect::<Result<Vec<_>>>()?,
                    None => vec![vec![]; rows.len()],
                };
                let m = crate::gb::HomMatrix::from_entries(&r, rows, cols, &entries)?;
                Obj::Module(ModulePres::new(m))
            }
            "cyclic" => Obj::Module(ModulePres::cyclic(&self.ideal(b, "ideal")?)),
            "ideal_module" => Obj::Module(ModulePres::ideal_module(&self.ideal(b, "ideal")?)?),
            "free" => {
                let r = self.ring(b, "ring")?;
                let tw: Vec<i32> = ints(b["twists"])?.into_iter().map(|x| x as i32).collect();
                Obj::Module(ModulePres::free(&crate::gb::GradedFree::new(&r, tw)))
            }
            "residue" => Obj::Module(ModulePres::residue_field(&self.ring(b, "ring")?)),
            "canonical" => Obj::Module(canonical_module(&self.ring(b, "ring")?)?),
            "lambda" => Obj::Module(lambda(&self.module(b, "module")?)?),
            "transpose" => Obj::Module(transpose(&self.module(b, "module")?)?),
            "dual" => Obj::Module(dual(&self.module(b, "module")?)?),
            "minimal" => Obj::Module(self.module(b, "module")?.minimal()?),
            "syzygy" => Obj::Module(syzygy(&self.module(b, "module")?, int(b["k"])? as usize)?),
            "tensor" => Obj::Module(tensor(&self.module(b, "a")?, &self.module(b, "b")?)?),
            "hom" => Obj::Module(hom_module(&self.module(b, "a")?, &self.module(b, "b")?)?.module),
            "direct_sum" => Obj::Module(self.module(b, "a")?.direct_sum(&self.module(b, "b")?)?),
            "ext" => Obj::Module(ext(int(b["i"])? as usize, &self.module(b, "a")?, &self.module(b, "b")?)?),
            "shift" => Obj::Module(self.module(b, "module")?.shift(int(b["t"])? as i32)),
            "lambda_c" => Obj::Module(lambda_c(&self.module(b, "module")?, &self.module(b, "c")?)?),
            "times" => Obj::Module(ideal_times_module(&self.ideal(b, "ideal")?, &self.module(b, "module")?)?),
            "mod_ideal" => Obj::Module(self.module(b, "module")?.quotient_by_ideal(&self.ideal(b, "ideal")?)?),
            "restrict" => Obj::Module(self.module(b, "module")?.restrict_scalars(&self.ring(b, "ring")?)?),
            "change" => Obj::Module(self.module(b, "module")?.change_ring(&self.ring(b, "ring")?)?),
            "prime" => {
                let r = self.ring(b, "ring")?;
                Obj::Prime(PrimeCandidate::declared(Ideal::new(&r, &polys(&r, b["gens"])?)?)?)
            }
            "monomial_primes" => Obj::Primes(monomial_primes(&self.ring(b, "ring")?)),
            _ => return Err(Error::InvalidInput(format!("unknown constructor `{name}`"))),
        })
    }

    fn declare(&mut self, d: &Decl) {
        let r = match &d.value.node {
            Value::List(_) => self.primes(&d.value).map(Obj::Primes),
            _ => self.eval(&d.value),
        };
        self.objs.insert(d.name.clone(), r.map_err(|e| e.to_string()));
    }
}

fn atom(v: &Spanned<Value>) -> Result<&str> {
    match &v.node {
        Value::Atom(s) => Ok(s),
        _ => Err(at(v, Error::InvalidInput("expected a single value".into()))),
    }
}

fn list(v: &Spanned<Value>) -> Result<&[Spanned<Value>]> {
    match &v.node {
        Value::List(items) => Ok(items),
        _ => Err(at(v, Error::InvalidInput("expected a list".into()))),
    }
}

fn int(v: &Spanned<Value>) -> Result<i64> {
    let s = atom(v)?;
    s.parse().map_err(|_| at(v, Error::InvalidInput(format!("expected an integer, found `{s}`"))))
}

fn ints(v: &Spanned<Value>) -> Result<Vec<i64>> {
    list(v)?.iter().map(int).collect()
}

fn words(v: &Spanned<Value>) -> Result<Vec<String>> {
    list(v)?.iter().map(|x| atom(x).map(str::to_string)).collect()
}

fn polys(r: &Ring, v: &Spanned<Value>) -> Result<Vec<Poly>> {
    list(v)?
        .iter()
        .map(|x| r.parse(atom(x)?).map_err(|e| at(x, e)))
        .collect()
}

fn expect_flag(b: &Bound) -> Result<Option<bool>> {
    match b.get("expect") {
        None => Ok(None),
        Some(v) => match atom(v)? {
            "true" | "yes" => Ok(Some(true)),
            "false" | "no" => Ok(Some(false)),
            s => Err(at(v, Error::InvalidInput(format!("expect= takes true or false, found `{s}`")))),
        },
    }
}

struct Outcome {
    status: Status,
    reason: Option<String>,
    evidence: Json,
}

impl Outcome {
    fn done(evidence: Json) -> Self {
        Outcome { status: Status::Done, reason: None, evidence }
    }

    fn check(ok: bool, evidence: Json) -> Self {
        Outcome {
            status: if ok { Status::Pass } else { Status::Fail },
            reason: None,
            evidence,
        }
    }

    fn flag(value: bool, expect: Option<bool>) -> Self {
        match expect {
            None => Outcome::done(json!(value)),
            Some(e) => Outcome::check(value == e, json!(value)),
        }
    }

    fn theorem(v: TheoremVerdict) -> Self {
        let (status, reason) = match &v.verdict {
            Verdict::Pass => (Status::Pass, None),
            Verdict::Fail => (Status::Fail, None),
            Verdict::Inconclusive(r) => (Status::Inconclusive, Some(r.clone())),
        };
        Outcome {
            status,
            reason,
            evidence: serde_json::to_value(&v).unwrap_or(Json::Null),
        }
    }
}

struct Runner<'a> {
    env: &'a Env,
    flags: &'a RunFlags,
}

impl Runner<'_> {
    fn window(&self, b: &Bound) -> Result<(i32, i32)> {
        match b.get("window") {
            Some(v) => parse_range(atom(v)?).ok_or_else(|| at(v, Error::InvalidInput("bad window".into()))),
            None => Ok(self.flags.window),
        }
    }

    fn opts(&self, b: &Bound) -> Result<VerifyOptions> {
        Ok(VerifyOptions {
            seed: self.flags.seed,
            window: self.window(b)?,
            ..VerifyOptions::default()
        })
    }

    /// The candidate universe (`P=`, else the monomial primes) and the
    /// indices of `X` in it; primes of `X` missing from `P` are appended.
    fn universe(&self, b: &Bound, ring: &Ring, x: Option<&str>) -> Result<(PrimeSet, Vec<usize>)> {
        let mut primes = match b.get("P") {
            Some(v) => self.env.primes(v)?,
            None if ring.is_monomial() => monomial_primes(ring),
            None => return Err(Error::EmptyCandidates),
        };
        let xs = match x.and_then(|k| b.get(k)) {
            Some(v) => self.env.primes(v)?,
            None => vec![],
        };
        let mut idx = Vec::new();
        for p in xs {
            let pos = primes
                .iter()
                .position(|q| q.ideal.is_subset(&p.ideal) && p.ideal.is_subset(&q.ideal));
            idx.push(match pos {
                Some(i) => i,
                None => {
                    primes.push(p);
                    primes.len() - 1
                }
            });
        }
        Ok((PrimeSet::new(primes), idx))
    }

    fn run(&self, t: &Task, params: &[Param]) -> Result<Outcome> {
        let b = bind(params, t.params(), 0, 0, &t.key())?;
        let env = self.env;
        let n = |k: &str| -> Result<usize> { Ok(int(b[k])?.max(0) as usize) };
        Ok(match t.key().as_str() {
            "hilbert" => {
                let (lo, hi) = self.window(&b)?;
                Outcome::done(json!(env.module(&b, "module")?.hilbert(lo, hi)?))
            }
            "oracle" => {
                let (lo, hi) = self.window(&b)?;
                let m = env.module(&b, "module")?;
                let h = m.hilbert(lo, hi)?;
                let o = oracle_dims(&m, lo, hi)?;
                Outcome::check(h == o, json!({"hilbert": h, "oracle": o}))
            }
            "cohomology" => {
                let (lo, hi) = self.window(&b)?;
                let c = cohomology_table(&env.module(&b, "module")?, lo, hi)?;
                Outcome::check(c.grothendieck_bounds_hold(), json!(c))
            }
            "depth" => Outcome::done(json!(depth_profile(&env.module(&b, "module")?)?)),
            "minimal" => Outcome::done(json!(env.module(&b, "module")?.minimal()?.to_string())),
            "cm" => Outcome::flag(depth_profile(&env.module(&b, "module")?)?.cm, expect_flag(&b)?),
            "stable" => Outcome::flag(is_stable(&env.module(&b, "module")?)?, expect_flag(&b)?),
            "linked" => {
                let c = lv::is_horizontally_linked(&env.module(&b, "module")?, Some(&self.opts(&b)?.iso()))?;
                let mut o = Outcome::flag(c.verdict, expect_flag(&b)?);
                o.evidence = json!(c);
                if !c.coherent() {
                    o.status = Status::Fail;
                    o.reason = Some("criterion contradicts the roundtrip probe".into());
                }
                o
            }
            "torsionfree" => Outcome::flag(n_torsionfree(&env.module(&b, "module")?, n("n")?)?, expect_flag(&b)?),
            "serre" => {
                let m = env.module(&b, "module")?;
                let (set, _) = self.universe(&b, m.ring(), None)?;
                let rep = serre_check(&m, n("n")?, &set.primes)?;
                let mut o = Outcome::flag(rep.holds(), expect_flag(&b)?);
                o.evidence = json!(rep);
                o
            }
            "gorenstein" => Outcome::flag(is_gorenstein_ring(&env.ring(&b, "ring")?)?, expect_flag(&b)?),
            "cmring" => Outcome::flag(is_cohen_macaulay_ring(&env.ring(&b, "ring")?)?, expect_flag(&b)?),
            "iso" | "distinct" => {
                let v = iso_probe(&env.module(&b, "a")?, &env.module(&b, "b")?, &self.opts(&b)?.iso())?;
                let want_iso = t.op == "iso";
                let status = match (&v, want_iso) {
                    (IsoVerdict::Unknown, _) => Status::Inconclusive,
                    (IsoVerdict::Isomorphic { .. }, w) | (IsoVerdict::DistinguishedBy(_), w @ false) if w == v.is_isomorphic() => Status::Pass,
                    _ => Status::Fail,
                };
                Outcome { status, reason: None, evidence: json!(v) }
            }
            "linkage" => Outcome::theorem(lv::linked_by_ideal(
                &env.module(&b, "a")?,
                &env.module(&b, "b")?,
                &env.ideal(&b, "c")?,
                &self.opts(&b)?,
            )?),
            "colon" => {
                let q = env.ideal(&b, "a")?.quotient(&env.ideal(&b, "b")?)?;
                match b.get("expect") {
                    None => Outcome::done(json!(q.to_string())),
                    Some(_) => {
                        let e = env.ideal(&b, "expect")?;
                        Outcome::check(q.is_subset(&e) && e.is_subset(&q), json!(q.to_string()))
                    }
                }
            }
            "equal" => {
                let (x, y) = (env.ideal(&b, "a")?, env.ideal(&b, "b")?);
                Outcome::check(x.is_subset(&y) && y.is_subset(&x), json!([x.to_string(), y.to_string()]))
            }
            "att" | "ass" => {
                let m = env.module(&b, "module")?;
                let given = match b.get("P") {
                    Some(v) => env.primes(v)?,
                    None => vec![],
                };
                let rep = if t.op == "att" {
                    att_local_cohomology(&m, n("i")?, &given)?
                } else {
                    ass_module(&m, &given)?
                };
                Outcome::done(json!({"primes": rep.labels(), "method": rep.method, "finite_length": rep.finite_length}))
            }
            "gdim" => {
                let m = env.module(&b, "module")?;
                let c = match b.get("C") {
                    Some(v) => env.module_of(v)?,
                    None => ModulePres::ring_module(m.ring(), 0),
                };
                Outcome::done(json!(gdim(&m, &c)?))
            }
            key => self.verify(key, &b)?,
        })
    }

    fn verify(&self, key: &str, b: &Bound) -> Result<Outcome> {
        let env = self.env;
        let opts = self.opts(b)?;
        let n = |k: &str| -> Result<usize> { Ok(int(b[k])?.max(0) as usize) };
        if key == "verify prop4.6" {
            let mods = list(b["modules"])?
                .iter()
                .map(|v| env.module_of(v))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Outcome::theorem(lv::verify_prop_4_6_forward(&mods, &opts)?));
        }
        let m = env.module(b, "M")?;
        let v = match key {
            "verify thm2.4" => {
                let (set, _) = self.universe(b, m.ring(), None)?;
                lv::verify_thm_2_4(&m, n("n")?, &set)?
            }
            "verify lemma3.2" => {
                let (set, _) = self.universe(b, m.ring(), None)?;
                lv::verify_lemma_3_2(&m, n("n")?, &env.module(b, "C")?, &set)?
            }
            "verify thm3.3" | "verify thmA" => {
                let (set, x) = self.universe(b, m.ring(), Some("X"))?;
                lv::verify_thm_3_3(&m, n("n")?, &x, &set, &opts)?
            }
            "verify thm3.7" => {
                let (set, x) = self.universe(b, m.ring(), Some("X"))?;
                lv::verify_thm_3_7(&m, n("n")?, &x, &set, &opts)?
            }
            "verify cor3.5" => {
                let (set, _) = self.universe(b, m.ring(), None)?;
                lv::verify_cor_3_5(&m, n("n")?, &set, &opts)?
            }
            "verify cor3.6" => {
                let (set, _) = self.universe(b, m.ring(), None)?;
                lv::verify_cor_3_6(&m, n("n")?, &set, &opts)?
            }
            "verify cor3.8" => {
                let (set, x) = self.universe(b, m.ring(), Some("X"))?;
                lv::verify_cor_3_8(&m, &x, &set, &opts)?
            }
            "verify thm3.12" => {
                let (set, _) = self.universe(b, m.ring(), None)?;
                lv::verify_thm_3_12(&m, &set, &opts)?
            }
            "verify cor3.13" => {
                let (set, _) = self.universe(b, m.ring(), None)?;
                lv::verify_cor_3_13(&m, n("n")?, &set, &opts)?
            }
            "verify thm4.1" => {
                let (set, _) = self.universe(b, m.ring(), None)?;
                let nn = match b.get("n") {
                    Some(v) => Some(int(v)?.max(0) as usize),
                    None => None,
                };
                lv::verify_thm_4_1(&m, &env.ideal(b, "c")?, nn, &set, &opts)?
            }
            "verify thmB" => lv::verify_thm_b(&m, &env.module(b, "N")?, &env.ideal(b, "a")?, &env.ideal(b, "c")?, &opts)?,
            "verify thm4.5" => lv::verify_thm_4_5(&m, &opts)?,
            "verify thm5.1" => {
                let (set, _) = self.universe(b, m.ring(), None)?;
                lv::verify_thm_5_1(&m, n("n")?, &set, &opts)?
            }
            "verify cor5.3" => {
                let (set, _) = self.universe(b, m.ring(), None)?;
                lv::verify_cor_5_3(&m, n("n")?, &set, &opts)?
            }
            _ => return Err(Error::InvalidInput(format!("unknown task `{key}`"))),
        };
        Ok(Outcome::theorem(v))
    }
}

fn run_one(env: &Env, flags: &RunFlags, t: &Task, line: usize) -> TaskReport {
    let start = Instant::now();
    let params = task_schema(&t.key()).unwrap_or(&[]);
    let out = Runner { env, flags }.run(t, params).unwrap_or_else(|e| Outcome {
        status: Status::Error,
        reason: Some(e.to_string()),
        evidence: Json::Null,
    });
    TaskReport {
        task: t.to_string(),
        line,
        verdict: out.status,
        reason: out.reason,
        evidence: out.evidence,
        timing_ms: start.elapsed().as_millis() as u64,
    }
}

/// Evaluates the declarations in order, then the tasks on `flags.jobs`
/// threads. Task results are reported in worksheet order.
pub fn run(ws: &Worksheet, flags: &RunFlags) -> RunReport {
    let mut env = Env {
        objs: BTreeMap::new(),
        caps: Caps {
            max_degree: flags.max_degree,
            ..Caps::default()
        },
    };
    let mut declaration_errors = Vec::new();
    for (d, line) in ws.decls() {
        env.declare(d);
        if let Some(Err(e)) = env.objs.get(&d.name) {
            declaration_errors.push(format!("line {line}: {} {}: {e}", d.kind.name(), d.name));
        }
    }
    let tasks: Vec<(&Task, usize)> = ws.tasks().collect();
    let mut slots: Vec<Option<TaskReport>> = vec![None; tasks.len()];
    let jobs = flags.jobs.max(1).min(tasks.len().max(1));
    if jobs == 1 {
        for (k, (t, line)) in tasks.iter().enumerate() {
            slots[k] = Some(run_one(&env, flags, t, *line));
        }
    } else {
        let next = AtomicUsize::new(0);
        let env = &env;
        let done: Vec<(usize, TaskReport)> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..jobs)
                .map(|_| {
                    s.spawn(|| {
                        let mut out = Vec::new();
                        loop {
                            let k = next.fetch_add(1, Ordering::Relaxed);
                            let Some((t, line)) = tasks.get(k) else { break };
                            out.push((k, run_one(env, flags, t, *line)));
                        }
                        out
                    })
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        });
        for (k, r) in done {
            slots[k] = Some(r);
        }
    }
    RunReport {
        engine: env!("CARGO_PKG_VERSION").into(),
        seed: flags.seed,
        tasks: slots.into_iter().map(|s| s.expect("every task ran")).collect(),
        declaration_errors,
    }
}

/// Kinds of the declared names, for callers that inspect a worksheet.
pub fn declared_kinds(ws: &Worksheet) -> BTreeMap<String, Kind> {
    ws.decls().map(|(d, _)| (d.name.clone(), d.kind)).collect()
}
