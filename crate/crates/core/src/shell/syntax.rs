//! Worksheet grammar.
//!
//! ```text
//! ring S = poly(char=32003, vars=[x, y, z], order=grevlex)
//! ring R = quotient(S, [x*y])
//! module M = coker(R, rows=[0], cols=[1], matrix=[[x]])
//! prime p = prime(R, [y, z])
//! task verify thm3.3 M n=1 X=[p]
//! ```
//!
//! One item per line, `#` starts a comment. Declarations are
//! `kind name = value`; tasks are `task op args...` with whitespace between
//! arguments.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Ring,
    Ideal,
    Module,
    Prime,
    Primes,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Ring => "ring",
            Kind::Ideal => "ideal",
            Kind::Module => "module",
            Kind::Prime => "prime",
            Kind::Primes => "primes",
        }
    }

    fn parse(s: &str) -> Option<Kind> {
        Some(match s {
            "ring" => Kind::Ring,
            "ideal" => Kind::Ideal,
            "module" => Kind::Module,
            "prime" => Kind::Prime,
            "primes" => Kind::Primes,
            _ => return None,
        })
    }
}

/// A node with its source position (1-based). Equality ignores positions.
#[derive(Clone, Debug)]
pub struct Spanned<T> {
    pub node: T,
    pub line: usize,
    pub col: usize,
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    /// Raw text: a name, number, range or polynomial.
    Atom(String),
    List(Vec<Spanned<Value>>),
    Call(String, Vec<Arg>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Arg {
    pub key: Option<String>,
    pub value: Spanned<Value>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decl {
    pub kind: Kind,
    pub name: String,
    pub value: Spanned<Value>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Task {
    pub op: String,
    pub args: Vec<Arg>,
}

impl Task {
    /// The schema key: `verify thm3.3` for checks, the op otherwise.
    pub fn key(&self) -> String {
        match (self.op.as_str(), self.args.first()) {
            ("verify", Some(Arg { key: None, value })) => match &value.node {
                Value::Atom(id) => format!("verify {id}"),
                _ => "verify".into(),
            },
            _ => self.op.clone(),
        }
    }

    /// Arguments after the theorem id for `verify`.
    pub fn params(&self) -> &[Arg] {
        if self.op == "verify" && !self.args.is_empty() {
            &self.args[1..]
        } else {
            &self.args
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Item {
    Decl(Decl),
    Task(Task),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Worksheet {
    pub items: Vec<Spanned<Item>>,
}

impl Worksheet {
    pub fn decls(&self) -> impl Iterator<Item = (&Decl, usize)> {
        self.items.iter().filter_map(|i| match &i.node {
            Item::Decl(d) => Some((d, i.line)),
            Item::Task(_) => None,
        })
    }

    pub fn tasks(&self) -> impl Iterator<Item = (&Task, usize)> {
        self.items.iter().filter_map(|i| match &i.node {
            Item::Task(t) => Some((t, i.line)),
            Item::Decl(_) => None,
        })
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Atom(s) => f.write_str(s),
            Value::List(items) => {
                f.write_str("[")?;
                for (i, v) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{}", v.node)?;
                }
                f.write_str("]")
            }
            Value::Call(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.key {
            Some(k) => write!(f, "{k}={}", self.value.node),
            None => write!(f, "{}", self.value.node),
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "task {}", self.op)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Decl(d) => write!(f, "{} {} = {}", d.kind.name(), d.name, d.value.node),
            Item::Task(t) => write!(f, "{t}"),
        }
    }
}

impl fmt::Display for Worksheet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(f, "{}", item.node)?;
        }
        Ok(())
    }
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn is_ident(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_' || ch == '.')
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
            _src: src,
        }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        perr(self.line, self.col(), msg)
    }

    fn expect(&mut self, ch: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(ch) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{ch}`")))
        }
    }

    fn word(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a name"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    /// `ident =` (not `==`) at the cursor, consumed when present.
    fn key(&mut self) -> Option<String> {
        self.skip_ws();
        let save = self.pos;
        let mut p = self.pos;
        while self.chars.get(p).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
            p += 1;
        }
        if p == save || !self.chars[save].is_ascii_alphabetic() {
            return None;
        }
        let mut q = p;
        while self.chars.get(q).is_some_and(|c| *c == ' ' || *c == '\t') {
            q += 1;
        }
        if self.chars.get(q) == Some(&'=') && self.chars.get(q + 1) != Some(&'=') {
            self.pos = q + 1;
            return Some(self.chars[save..p].iter().collect());
        }
        None
    }

    /// A value inside brackets or parentheses; atoms end at a top-level
    /// `,`, `)` or `]`.
    fn value(&mut self) -> Result<Spanned<Value>> {
        self.skip_ws();
        let (line, col) = (self.line, self.col());
        let node = match self.peek() {
            None => return Err(self.err("expected a value")),
            Some('[') => self.list()?,
            Some(_) => {
                if let Some(call) = self.try_call()? {
                    call
                } else {
                    self.atom(false)?
                }
            }
        };
        Ok(Spanned { node, line, col })
    }

    /// A value in a task line; atoms end at whitespace.
    fn task_value(&mut self) -> Result<Spanned<Value>> {
        self.skip_ws();
        let (line, col) = (self.line, self.col());
        let node = match self.peek() {
            Some('[') => self.list()?,
            _ => match self.try_call()? {
                Some(call) => call,
                None => self.atom(true)?,
            },
        };
        Ok(Spanned { node, line, col })
    }

    fn list(&mut self) -> Result<Value> {
        self.expect('[')?;
        let mut items = Vec::new();
        self.skip_ws();
        if self.peek() == Some(']') {
            self.pos += 1;
            return Ok(Value::List(items));
        }
        loop {
            items.push(self.value()?);
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(']') => {
                    self.pos += 1;
                    return Ok(Value::List(items));
                }
                _ => return Err(self.err("expected `,` or `]`")),
            }
        }
    }

    fn try_call(&mut self) -> Result<Option<Value>> {
        let save = self.pos;
        let mut p = self.pos;
        while self.chars.get(p).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
            p += 1;
        }
        if p == save || self.chars.get(p) != Some(&'(') || !self.chars[save].is_ascii_alphabetic() {
            return Ok(None);
        }
        let name: String = self.chars[save..p].iter().collect();
        self.pos = p;
        Ok(Some(Value::Call(name.clone(), self.call_args()?)))
    }

    fn call_args(&mut self) -> Result<Vec<Arg>> {
        self.expect('(')?;
        let mut args = Vec::new();
        self.skip_ws();
        if self.peek() == Some(')') {
            self.pos += 1;
            return Ok(args);
        }
        loop {
            let key = self.key();
            let value = self.value()?;
            args.push(Arg { key, value });
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    return Ok(args);
                }
                _ => return Err(self.err("expected `,` or `)`")),
            }
        }
    }

    fn atom(&mut self, stop_at_space: bool) -> Result<Value> {
        let start = self.pos;
        let mut depth = 0i32;
        while let Some(c) = self.peek() {
            match c {
                '(' => depth += 1,
                ')' if depth > 0 => depth -= 1,
                ',' | ')' | ']' | '[' if depth == 0 => break,
                c if stop_at_space && depth == 0 && c.is_whitespace() => break,
                _ => {}
            }
            self.pos += 1;
        }
        if depth != 0 {
            return Err(self.err("unbalanced parentheses"));
        }
        let text: String = self.chars[start..self.pos].iter().collect::<String>();
        let text = text.split_whitespace().collect::<Vec<_>>().join(" ");
        if text.is_empty() {
            return Err(perr(self.line, start + 1, "expected a value"));
        }
        Ok(Value::Atom(text))
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Syntax only; see [`parse_worksheet`] for name and arity checks.
pub fn parse_syntax(text: &str) -> Result<Worksheet> {
    let mut items = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let src = strip_comment(raw);
        let mut c = Cursor::new(src, line);
        if c.at_end() {
            continue;
        }
        let col = c.col();
        let head = c.word()?;
        let item = if head == "task" {
            let op = c.word()?;
            let mut args = Vec::new();
            while !c.at_end() {
                let key = c.key();
                let value = c.task_value()?;
                args.push(Arg { key, value });
            }
            Item::Task(Task { op, args })
        } else {
            let kind = Kind::parse(&head)
                .ok_or_else(|| perr(line, col, format!("unknown declaration kind `{head}`")))?;
            c.skip_ws();
            let ncol = c.col();
            let name = c.word()?;
            if !is_ident(&name) || name.contains('.') {
                return Err(perr(line, ncol, format!("bad name `{name}`")));
            }
            c.expect('=')?;
            let value = c.value()?;
            if !c.at_end() {
                return Err(c.err("trailing input"));
            }
            Item::Decl(Decl { kind, name, value })
        };
        items.push(Spanned { node: item, line, col });
    }
    Ok(Worksheet { items })
}

/// Parameter types of constructors and tasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ty {
    Obj(Kind),
    /// A list of module names.
    Modules,
    /// A list of prime names, or a `primes` name.
    PrimeList,
    Int,
    Range,
    Polys,
    Matrix,
    Ints,
    Words,
    Word,
}

#[derive(Clone, Copy, Debug)]
pub struct Param {
    pub key: &'static str,
    pub ty: Ty,
    pub required: bool,
}

const fn req(key: &'static str, ty: Ty) -> Param {
    Param { key, ty, required: true }
}

const fn opt(key: &'static str, ty: Ty) -> Param {
    Param { key, ty, required: false }
}

use Kind::{Ideal as KI, Module as KM, Prime as KP, Primes as KPs, Ring as KR};

const R: Ty = Ty::Obj(KR);
const I: Ty = Ty::Obj(KI);
const M: Ty = Ty::Obj(KM);

/// Constructor signatures: name, result kind, parameters.
pub fn constructor(name: &str) -> Option<(Kind, &'static [Param])> {
    let s: (Kind, &'static [Param]) = match name {
        "poly" => (KR, const { &[req("vars", Ty::Words), opt("char", Ty::Int), opt("order", Ty::Word), opt("weights", Ty::Ints)] }),
        "quotient" => (KR, const { &[req("ring", R), req("gens", Ty::Polys)] }),
        "modulo" => (KR, const { &[req("ideal", I)] }),
        "ideal" => (KI, const { &[req("ring", R), req("gens", Ty::Polys)] }),
        "maximal" | "zero" | "unit" | "non_gorenstein" => (KI, const { &[req("ring", R)] }),
        "colon" | "sum" | "product" | "intersect" => (KI, const { &[req("a", I), req("b", I)] }),
        "power" => (KI, const { &[req("ideal", I), req("k", Ty::Int)] }),
        "ann" => (KI, const { &[req("module", M)] }),
        "extend" => (KI, const { &[req("ideal", I), req("ring", R)] }),
        "coker" => (KM, const { &[req("ring", R), req("rows", Ty::Ints), req("cols", Ty::Ints), opt("matrix", Ty::Matrix)] }),
        "cyclic" | "ideal_module" => (KM, const { &[req("ideal", I)] }),
        "free" => (KM, const { &[req("ring", R), req("twists", Ty::Ints)] }),
        "residue" | "canonical" => (KM, const { &[req("ring", R)] }),
        "lambda" | "transpose" | "dual" | "minimal" => (KM, const { &[req("module", M)] }),
        "syzygy" => (KM, const { &[req("module", M), req("k", Ty::Int)] }),
        "tensor" | "hom" | "direct_sum" => (KM, const { &[req("a", M), req("b", M)] }),
        "ext" => (KM, const { &[req("i", Ty::Int), req("a", M), req("b", M)] }),
        "shift" => (KM, const { &[req("module", M), req("t", Ty::Int)] }),
        "lambda_c" => (KM, const { &[req("module", M), req("c", M)] }),
        "times" => (KM, const { &[req("ideal", I), req("module", M)] }),
        "mod_ideal" => (KM, const { &[req("module", M), req("ideal", I)] }),
        "restrict" | "change" => (KM, const { &[req("module", M), req("ring", R)] }),
        "prime" => (KP, const { &[req("ring", R), req("gens", Ty::Polys)] }),
        "monomial_primes" => (KPs, const { &[req("ring", R)] }),
        _ => return None,
    };
    Some(s)
}

const P: Param = opt("P", Ty::PrimeList);

/// Task signatures, keyed by [`Task::key`].
pub fn task_schema(key: &str) -> Option<&'static [Param]> {
    let s: &'static [Param] = match key {
        "hilbert" | "oracle" | "cohomology" => const { &[req("module", M), opt("window", Ty::Range)] },
        "depth" | "minimal" => const { &[req("module", M)] },
        "cm" | "linked" | "stable" => const { &[req("module", M), opt("expect", Ty::Word)] },
        "torsionfree" => const { &[req("module", M), req("n", Ty::Int), opt("expect", Ty::Word)] },
        "serre" => const { &[req("module", M), req("n", Ty::Int), P, opt("expect", Ty::Word)] },
        "gorenstein" | "cmring" => const { &[req("ring", R), opt("expect", Ty::Word)] },
        "iso" | "distinct" => const { &[req("a", M), req("b", M)] },
        "linkage" => const { &[req("a", M), req("b", M), req("c", I)] },
        "colon" => const { &[req("a", I), req("b", I), opt("expect", I)] },
        "equal" => const { &[req("a", I), req("b", I)] },
        "att" => const { &[req("module", M), req("i", Ty::Int), P] },
        "ass" => const { &[req("module", M), P] },
        "gdim" => const { &[req("module", M), opt("C", M)] },
        "verify thm2.4" => const { &[req("M", M), req("n", Ty::Int), P] },
        "verify lemma3.2" => const { &[req("M", M), req("n", Ty::Int), req("C", M), P] },
        "verify thm3.3" | "verify thmA" | "verify thm3.7" => {
            const { &[req("M", M), req("n", Ty::Int), req("X", Ty::PrimeList), P] }
        }
        "verify cor3.5" | "verify cor3.6" | "verify cor3.13" | "verify thm5.1" | "verify cor5.3" => {
            const { &[req("M", M), req("n", Ty::Int), P, opt("window", Ty::Range)] }
        }
        "verify cor3.8" => const { &[req("M", M), req("X", Ty::PrimeList), P] },
        "verify thm3.12" => const { &[req("M", M), P] },
        "verify thm4.1" => const { &[req("M", M), req("c", I), opt("n", Ty::Int), P] },
        "verify thmB" => const { &[req("M", M), req("N", M), req("a", I), req("c", I)] },
        "verify thm4.5" => const { &[req("M", M), opt("window", Ty::Range)] },
        "verify prop4.6" => const { &[req("modules", Ty::Modules)] },
        _ => return None,
    };
    Some(s)
}

/// Matches arguments to parameters: positional ones in order, then keyed.
pub fn bind<'a>(
    params: &[Param],
    args: &'a [Arg],
    line: usize,
    col: usize,
    what: &str,
) -> Result<BTreeMap<&'static str, &'a Spanned<Value>>> {
    let mut out = BTreeMap::new();
    // optional parameters are keyword-only
    let positional: Vec<&Param> = params.iter().filter(|p| p.required).collect();
    let mut next = 0;
    for a in args {
        let p = match &a.key {
            None => {
                let p = *positional.get(next).ok_or(Error::Arity {
                    name: what.into(),
                    expected: positional.len().to_string(),
                    got: args.len(),
                })?;
                next += 1;
                p
            }
            Some(k) => params
                .iter()
                .find(|p| p.key == k)
                .ok_or_else(|| perr(a.value.line, a.value.col, format!("`{what}` has no parameter `{k}`")))?,
        };
        if out.insert(p.key, &a.value).is_some() {
            return Err(perr(a.value.line, a.value.col, format!("`{}` given twice", p.key)));
        }
    }
    let given = out.len();
    for p in params {
        if p.required && !out.contains_key(p.key) {
            let _ = (line, col);
            return Err(Error::Arity {
                name: what.into(),
                expected: params.iter().filter(|p| p.required).count().to_string(),
                got: given,
            });
        }
    }
    Ok(out)
}

struct Checker {
    env: BTreeMap<String, Kind>,
}

impl Checker {
    fn name(&self, v: &Spanned<Value>, want: Kind) -> Result<()> {
        match &v.node {
            Value::Atom(n) => match self.env.get(n) {
                None => Err(Error::UndefinedName(format!("`{n}` at line {}, column {}", v.line, v.col))),
                Some(k) if *k != want => Err(perr(
                    v.line,
                    v.col,
                    format!("`{n}` is a {}, expected a {}", k.name(), want.name()),
                )),
                Some(_) => Ok(()),
            },
            Value::Call(..) => {
                let k = self.call(v)?;
                if k != want {
                    return Err(perr(v.line, v.col, format!("expected a {}, found a {}", want.name(), k.name())));
                }
                Ok(())
            }
            Value::List(_) => Err(perr(v.line, v.col, format!("expected a {}", want.name()))),
        }
    }

    fn list<'a>(&self, v: &'a Spanned<Value>) -> Result<&'a [Spanned<Value>]> {
        match &v.node {
            Value::List(items) => Ok(items),
            _ => Err(perr(v.line, v.col, "expected a list")),
        }
    }

    fn atom<'a>(&self, v: &'a Spanned<Value>) -> Result<&'a str> {
        match &v.node {
            Value::Atom(s) => Ok(s),
            _ => Err(perr(v.line, v.col, "expected a single value")),
        }
    }

    fn ty(&self, v: &Spanned<Value>, ty: Ty) -> Result<()> {
        match ty {
            Ty::Obj(k) => self.name(v, k),
            Ty::Modules => self.list(v)?.iter().try_for_each(|x| self.name(x, Kind::Module)),
            Ty::PrimeList => match &v.node {
                Value::List(items) => items.iter().try_for_each(|x| self.name(x, Kind::Prime)),
                _ => self.name(v, Kind::Primes),
            },
            Ty::Int => {
                let s = self.atom(v)?;
                s.parse::<i64>()
                    .map(|_| ())
                    .map_err(|_| perr(v.line, v.col, format!("expected an integer, found `{s}`")))
            }
            Ty::Range => {
                let s = self.atom(v)?;
                parse_range(s).map(|_| ()).ok_or_else(|| perr(v.line, v.col, format!("expected lo..hi, found `{s}`")))
            }
            Ty::Word => self.atom(v).map(|_| ()),
            Ty::Polys | Ty::Words => self.list(v)?.iter().try_for_each(|x| self.atom(x).map(|_| ())),
            Ty::Ints => self.list(v)?.iter().try_for_each(|x| self.ty(x, Ty::Int)),
            Ty::Matrix => self.list(v)?.iter().try_for_each(|x| self.ty(x, Ty::Polys)),
        }
    }

    fn call(&self, v: &Spanned<Value>) -> Result<Kind> {
        let Value::Call(name, args) = &v.node else {
            unreachable!()
        };
        let (kind, params) =
            constructor(name).ok_or_else(|| perr(v.line, v.col, format!("unknown constructor `{name}`")))?;
        let b = bind(params, args, v.line, v.col, name)?;
        for p in params {
            if let Some(a) = b.get(p.key) {
                self.ty(a, p.ty)?;
            }
        }
        Ok(kind)
    }
}

/// Parses and checks a worksheet: names are declared before use, every
/// constructor and task is known and called with the right arity.
pub fn parse_worksheet(text: &str) -> Result<Worksheet> {
    let ws = parse_syntax(text)?;
    let mut ck = Checker { env: BTreeMap::new() };
    for item in &ws.items {
        match &item.node {
            Item::Decl(d) => {
                if ck.env.contains_key(&d.name) {
                    return Err(perr(item.line, item.col, format!("`{}` declared twice", d.name)));
                }
                let got = match &d.value.node {
                    Value::List(items) if d.kind == Kind::Primes => {
                        items.iter().try_for_each(|x| ck.name(x, Kind::Prime))?;
                        Kind::Primes
                    }
                    Value::Call(..) => ck.call(&d.value)?,
                    _ => return Err(perr(d.value.line, d.value.col, "expected a constructor call")),
                };
                if got != d.kind {
                    return Err(perr(
                        d.value.line,
                        d.value.col,
                        format!("constructor builds a {}, declared as {}", got.name(), d.kind.name()),
                    ));
                }
                ck.env.insert(d.name.clone(), d.kind);
            }
            Item::Task(t) => {
                let key = t.key();
                let params = task_schema(&key)
                    .ok_or_else(|| perr(item.line, item.col, format!("unknown task `{key}`")))?;
                let b = bind(params, t.params(), item.line, item.col, &key)?;
                for p in params {
                    if let Some(a) = b.get(p.key) {
                        ck.ty(a, p.ty)?;
                    }
                }
            }
        }
    }
    Ok(ws)
}

pub fn parse_range(s: &str) -> Option<(i32, i32)> {
    let (a, b) = s.split_once("..")?;
    let lo = a.trim().parse().ok()?;
    let hi = b.trim().parse().ok()?;
    (lo <= hi).then_some((lo, hi))
}
