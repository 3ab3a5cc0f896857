//! Degreewise dimensions of a presented module by dense rank computation.
//!
//! `M_d = (F_0)_d / (image of φ + J·F_0)_d` over the ambient polynomial
//! ring, with every graded piece spelled out on monomial bases.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gb::GradedDimTable;
use crate::modops::ModulePres;
use crate::poly::{Monomial, Poly};

/// Largest graded piece the oracle will build.
pub const ORACLE_CAP: usize = 20_000;

/// Incremental row echelon form over `F_p`.
struct Echelon {
    p: u64,
    width: usize,
    rows: HashMap<usize, Vec<u64>>,
}

impl Echelon {
    fn new(p: u64, width: usize) -> Self {
        Echelon { p, width, rows: HashMap::new() }
    }

    fn inv(&self, a: u64) -> u64 {
        let (mut r, mut b, mut e) = (1u64, a % self.p, self.p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        r
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn push(&mut self, mut v: Vec<u64>) {
        let p = self.p;
        for c in 0..self.width {
            if v[c] == 0 {
                continue;
            }
            match self.rows.get(&c) {
                Some(row) => {
                    let f = v[c];
                    for k in c..self.width {
                        if row[k] != 0 {
                            v[k] = (v[k] + p - f * row[k] % p) % p;
                        }
                    }
                }
                None => {
                    let inv = self.inv(v[c]);
                    for x in v.iter_mut().skip(c) {
                        *x = *x * inv % p;
                    }
                    self.rows.insert(c, v);
                    return;
                }
            }
        }
    }
}

fn degree_of(p: &Poly) -> Option<i64> {
    p.degree().map(|d| d as i64)
}

/// `dim_k M_d` for `d` in `[lo, hi]`.
pub fn oracle_dims(m: &ModulePres, lo: i32, hi: i32) -> Result<GradedDimTable> {
    let ring = m.ring();
    let poly = ring.poly_ring();
    let p = poly.field().characteristic() as u64;
    let pres = m.pres();
    let rows = pres.target().twists().to_vec();
    let cols = pres.source().twists().to_vec();
    let relations = ring.ideal();
    let mut dims = Vec::with_capacity((hi - lo + 1).max(0) as usize);
    for d in lo..=hi {
        // basis of (F_0)_d
        let mut index: Vec<HashMap<Monomial, usize>> = Vec::with_capacity(rows.len());
        let mut width = 0;
        for &a in &rows {
            let mut h = HashMap::new();
            for mono in poly.monomials_of_degree(d as i64 - a as i64) {
                h.insert(mono, width);
                width += 1;
            }
            index.push(h);
        }
        if width > ORACLE_CAP {
            return Err(Error::Truncation {
                what: "oracle graded piece".into(),
                cap: ORACLE_CAP as u64,
                reached: width as u64,
            });
        }
        let mut ech = Echelon::new(p, width);
        let add = |parts: &[(usize, Poly)], ech: &mut Echelon| {
            let mut v = vec![0u64; width];
            for (row, f) in parts {
                for (mono, c) in f.terms() {
                    if let Some(&k) = index[*row].get(mono) {
                        v[k] = (v[k] + *c as u64) % p;
                    }
                }
            }
            if ech.rank() < width {
                ech.push(v);
            }
        };
        for (j, &b) in cols.iter().enumerate() {
            for u in poly.monomials_of_degree(d as i64 - b as i64) {
                let mut parts = Vec::new();
                for i in 0..rows.len() {
                    let e = pres.entry(i, j);
                    if !e.is_zero() {
                        parts.push((i, e.mul_monomial(&u, 1)?));
                    }
                }
                add(&parts, &mut ech);
            }
        }
        for g in relations {
            let Some(dg) = degree_of(g) else { continue };
            for (i, &a) in rows.iter().enumerate() {
                for u in poly.monomials_of_degree(d as i64 - a as i64 - dg) {
                    add(&[(i, g.mul_monomial(&u, 1)?)], &mut ech);
                }
            }
        }
        dims.push((width - ech.rank()) as u64);
    }
    Ok(GradedDimTable { lo, hi, dims })
}
