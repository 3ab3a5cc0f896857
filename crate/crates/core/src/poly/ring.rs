use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, MAX_VARS};
use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic order.
    #[default]
    GRevLex,
    /// Pure lexicographic order.
    Lex,
}

impl MonomialOrder {
    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::GRevLex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(MonomialOrder::GRevLex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => Err(Error::InvalidInput(format!("unknown monomial order `{s}`"))),
        }
    }
}

/// The ambient graded polynomial ring `F_p[x_1, .., x_n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    order: MonomialOrder,
    field: PrimeField,
    weights: [u32; MAX_VARS],
}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[{}] ({})",
            self.field.characteristic(),
            self.vars.join(","),
            self.order.name()
        )
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new(
        field: PrimeField,
        vars: &[&str],
        order: MonomialOrder,
        weights: Option<&[u32]>,
    ) -> Result<Self> {
        if vars.len() > MAX_VARS {
            return Err(Error::InvalidInput(format!(
                "at most {MAX_VARS} variables supported, got {}",
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidInput(format!("bad variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable `{v}`")));
            }
        }
        let mut w = [0u32; MAX_VARS];
        match weights {
            Some(ws) => {
                if ws.len() != vars.len() || ws.iter().any(|&x| x == 0) {
                    return Err(Error::InvalidInput(
                        "weights must be positive, one per variable".into(),
                    ));
                }
                w[..ws.len()].copy_from_slice(ws);
            }
            None => w[..vars.len()].iter_mut().for_each(|x| *x = 1),
        }
        Ok(PolyRing {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
            field,
            weights: w,
        })
    }

    /// `F_32003[vars]` with grevlex and standard grading.
    pub fn standard(vars: &[&str]) -> Result<Self> {
        PolyRing::new(PrimeField::default(), vars, MonomialOrder::GRevLex, None)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights[..self.nvars()].iter().all(|&w| w == 1)
    }

    /// Sum of the variable weights: the twist of the canonical module of the
    /// ambient ring is minus this.
    pub fn weight_sum(&self) -> i32 {
        self.weights[..self.nvars()].iter().sum::<u32>() as i32
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn monomial(&self, exps: &[u32]) -> Result<Monomial> {
        if exps.len() != self.nvars() {
            return Err(Error::InvalidInput(format!(
                "exponent vector of length {} in a ring with {} variables",
                exps.len(),
                self.nvars()
            )));
        }
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0u32;
        for (i, &x) in exps.iter().enumerate() {
            e[i] = u16::try_from(x)
                .map_err(|_| Error::Overflow(format!("exponent {x} exceeds u16")))?;
            deg = deg
                .checked_add(x.checked_mul(self.weights[i]).ok_or_else(|| {
                    Error::Overflow("weighted degree overflow".into())
                })?)
                .ok_or_else(|| Error::Overflow("weighted degree overflow".into()))?;
        }
        Ok(Monomial::from_parts(e, deg))
    }

    pub fn var(&self, i: usize) -> Monomial {
        let mut e = [0u16; MAX_VARS];
        e[i] = 1;
        Monomial::from_parts(e, self.weights[i])
    }

    pub fn lcm(&self, a: &Monomial, b: &Monomial) -> Monomial {
        a.lcm(b, &self.weights)
    }

    /// Compares monomials in the ring's order.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = self.nvars();
        match self.order {
            MonomialOrder::GRevLex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {
                    for i in (0..n).rev() {
                        let (x, y) = (a.exp(i), b.exp(i));
                        if x != y {
                            // smaller exponent in the last differing variable wins
                            return y.cmp(&x);
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
            MonomialOrder::Lex => {
                for i in 0..n {
                    let (x, y) = (a.exp(i), b.exp(i));
                    if x != y {
                        return x.cmp(&y);
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Compares two raw exponent vectors in this ring's order.
    pub fn monomial_compare(&self, a: &[u32], b: &[u32]) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::InvalidInput(format!(
                "exponent vectors of different lengths {} and {}",
                a.len(),
                b.len()
            )));
        }
        Ok(self.cmp(&self.monomial(a)?, &self.monomial(b)?))
    }

    /// All monomials of weighted degree `d`, in no particular order.
    pub fn monomials_of_degree(&self, d: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        if d < 0 {
            return out;
        }
        let n = self.nvars();
        let mut exps = [0u16; MAX_VARS];
        self.enum_rec(0, n, d as u32, &mut exps, &mut out, d as u32);
        out
    }

    fn enum_rec(
        &self,
        i: usize,
        n: usize,
        left: u32,
        exps: &mut [u16; MAX_VARS],
        out: &mut Vec<Monomial>,
        total: u32,
    ) {
        if i == n {
            if left == 0 {
                out.push(Monomial::from_parts(*exps, total));
            }
            return;
        }
        let w = self.weights[i];
        let mut e = 0u32;
        while e * w <= left {
            exps[i] = e as u16;
            self.enum_rec(i + 1, n, left - e * w, exps, out, total);
            e += 1;
        }
        exps[i] = 0;
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for i in 0..self.nvars() {
            match m.exp(i) {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                e => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_textbook_rule() {
        let r = PolyRing::standard(&["x", "y", "z"]).unwrap();
        // xz = (1,0,1), y^2 = (0,2,0): the rightmost nonzero entry of their
        // difference is positive, so xz is the smaller monomial.
        assert_eq!(
            r.monomial_compare(&[1, 0, 1], &[0, 2, 0]).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            r.monomial_compare(&[2, 0, 0], &[0, 1, 1]).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            r.monomial_compare(&[1, 1, 1], &[1, 1, 1]).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn lex_first_exponent() {
        let r = PolyRing::new(PrimeField::default(), &["x", "y"], MonomialOrder::Lex, None)
            .unwrap();
        assert_eq!(r.monomial_compare(&[0, 3], &[1, 0]).unwrap(), Ordering::Less);
    }

    #[test]
    fn length_mismatch_is_error() {
        let r = PolyRing::standard(&["x", "y"]).unwrap();
        assert!(r.monomial_compare(&[1], &[1, 0]).is_err());
    }

    #[test]
    fn duplicate_variables_rejected() {
        assert!(PolyRing::standard(&["x", "x"]).is_err());
    }

    #[test]
    fn monomial_enumeration_counts() {
        let r = PolyRing::standard(&["x", "y", "z"]).unwrap();
        let counts: Vec<usize> = (0..4).map(|d| r.monomials_of_degree(d).len()).collect();
        assert_eq!(counts, vec![1, 3, 6, 10]);
        let w = PolyRing::new(
            PrimeField::default(),
            &["x", "y"],
            MonomialOrder::GRevLex,
            Some(&[1, 2]),
        )
        .unwrap();
        assert_eq!(w.monomials_of_degree(4).len(), 3);
    }
}
