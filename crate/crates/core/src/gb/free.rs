use std::fmt;

use super::modvec::{ModVec, Term, TermOrder};
use super::quotient::Ring;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// `⊕ R(-d_j)`: generator `j` sits in degree `twists[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFree {
    ring: Ring,
    twists: Vec<i32>,
}

impl GradedFree {
    pub fn new(ring: &Ring, twists: Vec<i32>) -> Self {
        GradedFree {
            ring: ring.clone(),
            twists,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// The dual module `Hom(F, R)`.
    pub fn dual(&self) -> GradedFree {
        GradedFree::new(&self.ring, self.twists.iter().map(|d| -d).collect())
    }

    /// `F(t)`: every generator moves to degree `d - t`.
    pub fn shift(&self, t: i32) -> GradedFree {
        GradedFree::new(&self.ring, self.twists.iter().map(|d| d - t).collect())
    }
}

/// A homogeneous map of graded free modules; column `j` is the image of the
/// `j`-th source generator, written in the target basis.
#[derive(Clone, PartialEq, Eq)]
pub struct HomMatrix {
    source: GradedFree,
    target: GradedFree,
    cols: Vec<ModVec>,
}

impl fmt::Debug for HomMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for HomMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = self.source.ring.poly_ring();
        write!(f, "[")?;
        for i in 0..self.target.rank() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.source.rank() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.cols[j].entry(poly, i))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl HomMatrix {
    /// Builds a map from columns, reducing modulo the ring ideal and checking
    /// homogeneity of every column against its source twist.
    pub fn new(source: GradedFree, target: GradedFree, cols: Vec<ModVec>) -> Result<Self> {
        if source.ring != target.ring && source.ring.as_ref() != target.ring.as_ref() {
            return Err(Error::RingMismatch("source and target rings differ".into()));
        }
        if cols.len() != source.rank() {
            return Err(Error::InvalidInput(format!(
                "{} columns for a source of rank {}",
                cols.len(),
                source.rank()
            )));
        }
        let ring = source.ring.clone();
        let mut out = Vec::with_capacity(cols.len());
        for (j, c) in cols.into_iter().enumerate() {
            if c.max_comp().is_some_and(|m| m >= target.rank()) {
                return Err(Error::InvalidInput(format!(
                    "column {j} has a component beyond the target rank"
                )));
            }
            let c = ring.nf_vec(&c);
            if let Some(d) = c.degree(target.twists()) {
                if d != source.twists[j] {
                    return Err(Error::Inhomogeneous(format!(
                        "column {j} has degree {d}, expected {}",
                        source.twists[j]
                    )));
                }
            } else if !c.is_zero() {
                return Err(Error::Inhomogeneous(format!("column {j} mixes degrees")));
            }
            out.push(c);
        }
        Ok(HomMatrix {
            source,
            target,
            cols: out,
        })
    }

    /// Columns already reduced and homogeneous.
    pub(crate) fn from_cols_unchecked(source: GradedFree, target: GradedFree, cols: Vec<ModVec>) -> Self {
        debug_assert_eq!(cols.len(), source.rank());
        HomMatrix {
            source,
            target,
            cols,
        }
    }

    /// Row-major entries; `rows` are the target twists, `cols` the source
    /// twists.
    pub fn from_entries(ring: &Ring, rows: Vec<i32>, cols: Vec<i32>, entries: &[Vec<Poly>]) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::InvalidInput(format!(
                "matrix shape does not match {} rows and {} columns",
                rows.len(),
                cols.len()
            )));
        }
        let poly = ring.poly_ring();
        let vecs = (0..cols.len())
            .map(|j| {
                let e: Vec<(usize, &Poly)> = (0..rows.len()).map(|i| (i, &entries[i][j])).collect();
                ModVec::from_entries(poly, &e)
            })
            .collect();
        HomMatrix::new(GradedFree::new(ring, cols), GradedFree::new(ring, rows), vecs)
    }

    pub fn zero(source: GradedFree, target: GradedFree) -> Self {
        let n = source.rank();
        HomMatrix {
            source,
            target,
            cols: vec![ModVec::zero(); n],
        }
    }

    pub fn identity(f: &GradedFree) -> Self {
        HomMatrix {
            source: f.clone(),
            target: f.clone(),
            cols: (0..f.rank()).map(ModVec::unit).collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.source.ring
    }

    pub fn source(&self) -> &GradedFree {
        &self.source
    }

    pub fn target(&self) -> &GradedFree {
        &self.target
    }

    pub fn cols(&self) -> &[ModVec] {
        &self.cols
    }

    pub fn into_cols(self) -> Vec<ModVec> {
        self.cols
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> Poly {
        self.cols[j].entry(self.ring().poly_ring(), i)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// True when no entry has a nonzero constant term.
    pub fn is_minimal(&self) -> bool {
        self.cols
            .iter()
            .all(|c| c.terms.iter().all(|t| !t.mon.is_one()))
    }

    /// Image of a source vector.
    pub fn apply(&self, v: &ModVec) -> ModVec {
        let ring = self.ring();
        let poly = ring.poly_ring();
        let ord = TermOrder::plain(poly);
        let f = poly.field();
        let mut acc = ModVec::zero();
        for t in &v.terms {
            acc = acc.add_mul(t.coef, &t.mon, &self.cols[t.comp as usize], ord, f);
        }
        ring.nf_vec(&acc)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &HomMatrix) -> Result<HomMatrix> {
        if other.target.twists != self.source.twists {
            return Err(Error::InvalidInput("composition of incompatible maps".into()));
        }
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        Ok(HomMatrix::from_cols_unchecked(
            other.source.clone(),
            self.target.clone(),
            cols,
        ))
    }

    /// The dual map `Hom(target, R) → Hom(source, R)`.
    pub fn transpose(&self) -> HomMatrix {
        let poly = self.ring().poly_ring();
        let mut rows: Vec<Vec<Term>> = vec![Vec::new(); self.nrows()];
        for (j, c) in self.cols.iter().enumerate() {
            for t in &c.terms {
                rows[t.comp as usize].push(Term {
                    comp: j as u32,
                    ..*t
                });
            }
        }
        let ord = TermOrder::plain(poly);
        let cols = rows
            .into_iter()
            .map(|r| ModVec::from_unsorted(r, ord, poly.field()))
            .collect();
        HomMatrix::from_cols_unchecked(self.target.dual(), self.source.dual(), cols)
    }

    /// Columns of `self` followed by columns of `other` (same target).
    pub fn hstack(&self, other: &HomMatrix) -> HomMatrix {
        let mut tw = self.source.twists.clone();
        tw.extend_from_slice(&other.source.twists);
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        HomMatrix::from_cols_unchecked(GradedFree::new(self.ring(), tw), self.target.clone(), cols)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &HomMatrix) -> HomMatrix {
        let off = self.nrows() as u32;
        let mut tw = self.source.twists.clone();
        tw.extend_from_slice(&other.source.twists);
        let mut tt = self.target.twists.clone();
        tt.extend_from_slice(&other.target.twists);
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().map(|c| c.map_comps(|x| Some(x + off))));
        HomMatrix::from_cols_unchecked(GradedFree::new(self.ring(), tw), GradedFree::new(self.ring(), tt), cols)
    }

    /// Restricts to the listed columns.
    pub fn select_cols(&self, idx: &[usize]) -> HomMatrix {
        let tw = idx.iter().map(|&j| self.source.twists[j]).collect();
        let cols = idx.iter().map(|&j| self.cols[j].clone()).collect();
        HomMatrix::from_cols_unchecked(GradedFree::new(self.ring(), tw), self.target.clone(), cols)
    }

    /// The same matrix with every twist lowered by `t` (the map `F(t) → G(t)`).
    pub fn shift(&self, t: i32) -> HomMatrix {
        HomMatrix::from_cols_unchecked(self.source.shift(t), self.target.shift(t), self.cols.clone())
    }

    /// Re-reads the same entries over another ring on the same ambient
    /// polynomial ring.
    pub fn change_ring(&self, ring: &Ring) -> Result<HomMatrix> {
        if ring.poly_ring() != self.ring().poly_ring() {
            return Err(Error::RingMismatch("different ambient rings".into()));
        }
        HomMatrix::new(
            GradedFree::new(ring, self.source.twists.clone()),
            GradedFree::new(ring, self.target.twists.clone()),
            self.cols.clone(),
        )
    }


}
