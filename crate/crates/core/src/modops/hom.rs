//! Hom, tensor products and subquotients of free modules.

use std::sync::Arc;

use super::module::ModulePres;
use crate::error::Result;
use crate::gb::modvec::TermOrder;
use crate::gb::{image_matrix, syzygies, GradedFree, HomMatrix, Lifter, ModVec, Pruned, Term};

/// `(im K + im L) / im L` inside a free module `F`, presented on the columns
/// of `K`.
pub struct Subquotient {
    pub k: HomMatrix,
    pub l: HomMatrix,
    /// Unpruned presentation on the columns of `K`.
    pub module: ModulePres,
    lifter: Lifter,
}

impl Subquotient {
    pub fn new(k: &HomMatrix, l: &HomMatrix) -> Result<Self> {
        let g = k.hstack(l);
        let lifter = Lifter::new(&g)?;
        let nk = k.ncols() as u32;
        let syz = lifter.syzygies()?;
        let ring = k.ring();
        let mut tw = Vec::new();
        let mut cols = Vec::new();
        for (c, &d) in syz.cols().iter().zip(syz.source().twists()) {
            let v = c.map_comps(|x| (x < nk).then_some(x));
            if !v.is_zero() {
                tw.push(d);
                cols.push(v);
            }
        }
        let pres = HomMatrix::from_cols_unchecked(GradedFree::new(ring, tw), k.source().clone(), cols);
        Ok(Subquotient {
            k: k.clone(),
            l: l.clone(),
            module: ModulePres::new(pres),
            lifter,
        })
    }

    /// Coordinates on the columns of `K` of a vector of `im K + im L`.
    pub fn coords(&self, v: &ModVec) -> Option<ModVec> {
        let nk = self.k.ncols() as u32;
        self.lifter
            .lift(v)
            .map(|c| c.map_comps(|x| (x < nk).then_some(x)))
    }
}

/// Generators, inside `F_B`, of the kernel of `coker(b) → coker(c)` induced
/// by `g : F_B → F_C` (only `c` matters for the kernel).
pub fn kernel_gens(g: &HomMatrix, c: &HomMatrix) -> Result<HomMatrix> {
    let nb = g.ncols() as u32;
    if nb == 0 {
        return Ok(HomMatrix::zero(GradedFree::new(g.ring(), vec![]), g.source().clone()));
    }
    let s = syzygies(&g.hstack(c))?;
    let vecs: Vec<ModVec> = s
        .cols()
        .iter()
        .map(|v| v.map_comps(|x| (x < nb).then_some(x)))
        .filter(|v| !v.is_zero())
        .collect();
    image_matrix(g.source(), &vecs)
}

/// Homology at `B` of `A --f--> B --g--> C`, where `B = coker(b)` and
/// `C = coker(c)`; `f`, `g` act on the free covers.
pub fn homology(f: &HomMatrix, g: &HomMatrix, b: &HomMatrix, c: &HomMatrix) -> Result<ModulePres> {
    let k = kernel_gens(g, c)?;
    let l = f.hstack(b);
    Ok(Subquotient::new(&k, &l)?.module)
}

/// Index of basis element `(a, k)` of `Hom(P0, Q0) = ⊕ Q0(f_a)`.
#[inline]
fn hidx(a: usize, k: usize, q: usize) -> u32 {
    (a * q + k) as u32
}

/// Free module `Hom(P, Q)` for twist lists `p`, `q`.
pub(crate) fn hom_free(ring: &crate::gb::Ring, p: &[i32], q: &[i32]) -> GradedFree {
    let mut tw = Vec::with_capacity(p.len() * q.len());
    for &fa in p {
        for &gk in q {
            tw.push(gk - fa);
        }
    }
    GradedFree::new(ring, tw)
}

/// `r` block copies of the presentation `psi`, living on `Hom(P, Q0)`.
pub(crate) fn blocks_of(psi: &HomMatrix, p: &[i32], hfree: &GradedFree) -> HomMatrix {
    let q = psi.nrows();
    let mut tw = Vec::new();
    let mut cols = Vec::new();
    for (a, &fa) in p.iter().enumerate() {
        for (l, c) in psi.cols().iter().enumerate() {
            tw.push(psi.source().twists()[l] - fa);
            cols.push(c.map_comps(|k| Some(hidx(a, k as usize, q))));
        }
    }
    HomMatrix::from_cols_unchecked(GradedFree::new(psi.ring(), tw), hfree.clone(), cols)
}

/// Precomposition with `phi : P1 → P0`, as a map `Hom(P0, Q0) → Hom(P1, Q0)`.
pub(crate) fn precompose(phi: &HomMatrix, q: &[i32], src: &GradedFree, tgt: &GradedFree) -> HomMatrix {
    let poly = phi.ring().poly_ring().clone();
    let ord = TermOrder::plain(&poly);
    let f = *poly.field();
    let nq = q.len();
    let r0 = phi.nrows();
    // row a of phi, as (b, term) lists
    let mut rows: Vec<Vec<(usize, Term)>> = vec![Vec::new(); r0];
    for (b, c) in phi.cols().iter().enumerate() {
        for t in &c.terms {
            rows[t.comp as usize].push((b, *t));
        }
    }
    let mut cols = Vec::with_capacity(r0 * nq);
    for row in rows.iter() {
        for k in 0..nq {
            let terms: Vec<Term> = row
                .iter()
                .map(|&(b, t)| Term {
                    comp: hidx(b, k, nq),
                    ..t
                })
                .collect();
            cols.push(ModVec::from_unsorted(terms, ord, &f));
        }
    }
    HomMatrix::from_cols_unchecked(src.clone(), tgt.clone(), cols)
}

/// `Hom(M, N)` together with its generators as explicit maps.
pub struct HomModule {
    /// Minimal form of the source used for the computation.
    pub source: ModulePres,
    /// Minimal form of the target used for the computation.
    pub target: ModulePres,
    sub: Subquotient,
    /// Minimal presentation of `Hom(M, N)`.
    pub module: ModulePres,
    prune: Arc<Pruned>,
}

impl HomModule {
    fn vec_to_map(&self, v: &ModVec) -> HomMatrix {
        let p = self.source.cover();
        let q = self.target.cover();
        let nq = q.rank();
        let poly = self.source.ring().poly_ring().clone();
        let ord = TermOrder::plain(&poly);
        let mut cols: Vec<Vec<Term>> = vec![Vec::new(); p.rank()];
        for t in &v.terms {
            let (a, k) = (t.comp as usize / nq, t.comp as usize % nq);
            cols[a].push(Term { comp: k as u32, ..*t });
        }
        let cols = cols
            .into_iter()
            .map(|c| ModVec::from_unsorted(c, ord, poly.field()))
            .collect();
        HomMatrix::from_cols_unchecked(p.clone(), q.clone(), cols)
    }

    fn map_to_vec(&self, h: &HomMatrix) -> ModVec {
        let nq = self.target.ngens();
        let poly = self.source.ring().poly_ring().clone();
        let ord = TermOrder::plain(&poly);
        let mut terms = Vec::new();
        for (a, c) in h.cols().iter().enumerate() {
            for t in &c.terms {
                terms.push(Term {
                    comp: hidx(a, t.comp as usize, nq),
                    ..*t
                });
            }
        }
        ModVec::from_unsorted(terms, ord, poly.field())
    }

    /// The map `P0 → Q0` of the `j`-th generator of [`HomModule::module`].
    pub fn generator_map(&self, j: usize) -> HomMatrix {
        let col = &self.sub.k.cols()[self.prune.kept[j]];
        self.vec_to_map(col)
    }

    /// The homomorphism represented by an element of the cover of
    /// [`HomModule::module`].
    pub fn element_map(&self, v: &ModVec) -> HomMatrix {
        let mut kv = Vec::new();
        for t in &v.terms {
            kv.push(Term {
                comp: self.prune.kept[t.comp as usize] as u32,
                ..*t
            });
        }
        let poly = self.source.ring().poly_ring().clone();
        let ord = TermOrder::plain(&poly);
        let kv = ModVec::from_unsorted(kv, ord, poly.field());
        let hv = self.sub.k.apply(&kv);
        self.vec_to_map(&hv)
    }

    /// Coordinates, in the cover of [`HomModule::module`], of a homomorphism
    /// given as a matrix `P0 → Q0` between the minimal covers.
    pub fn element_of(&self, h: &HomMatrix) -> Option<ModVec> {
        let v = self.map_to_vec(h);
        let c = self.sub.coords(&v)?;
        let poly = self.source.ring().poly_ring().clone();
        let ord = TermOrder::plain(&poly);
        let f = *poly.field();
        let mut acc = ModVec::zero();
        for t in &c.terms {
            acc = acc.add_mul(t.coef, &t.mon, &self.prune.to_new[t.comp as usize], ord, &f);
        }
        Some(self.module.ring().nf_vec(&acc))
    }

    /// A spanning set of the degree-`d` part, as maps.
    pub fn degree_span(&self, d: i32) -> Vec<HomMatrix> {
        let poly = self.module.ring().poly_ring().clone();
        let mut out = Vec::new();
        for (j, &t) in self.module.gens().iter().enumerate() {
            for m in poly.monomials_of_degree((d - t) as i64) {
                let v = ModVec::from_sorted(vec![Term {
                    comp: j as u32,
                    mon: m,
                    coef: 1,
                }]);
                let h = self.element_map(&v);
                if !h.is_zero() {
                    out.push(h);
                }
            }
        }
        out
    }
}

/// `Hom(M, N)` via the kernel of `Hom(P0, N) → Hom(P1, N)`.
pub fn hom_module(m: &ModulePres, n: &ModulePres) -> Result<HomModule> {
    m.same_ring(n)?;
    let mm = m.minimal()?;
    let nn = n.minimal()?;
    let ring = mm.ring().clone();
    let phi = mm.pres();
    let psi = nn.pres();
    let p0 = mm.gens();
    let p1 = phi.source().twists();
    let q0 = nn.gens();
    let h0 = hom_free(&ring, p0, q0);
    let h1 = hom_free(&ring, p1, q0);
    let l0 = blocks_of(psi, p0, &h0);
    let l1 = blocks_of(psi, p1, &h1);
    let pre = precompose(phi, q0, &h0, &h1);
    let k = kernel_gens(&pre, &l1)?;
    let sub = Subquotient::new(&k, &l0)?;
    let module = sub.module.minimal()?;
    let prune = sub.module.prune_info()?;
    Ok(HomModule {
        source: mm,
        target: nn,
        sub,
        module,
        prune,
    })
}

/// `M* = Hom(M, R)`.
pub fn dual(m: &ModulePres) -> Result<ModulePres> {
    let r = ModulePres::ring_module(m.ring(), 0);
    Ok(hom_module(m, &r)?.module)
}

/// `M ⊗ N` presented by `[phi ⊗ 1 | 1 ⊗ psi]` on the product of the given
/// covers, without pruning.
pub fn tensor_raw(m: &ModulePres, n: &ModulePres) -> Result<ModulePres> {
    m.same_ring(n)?;
    let ring = m.ring().clone();
    let (phi, psi) = (m.pres(), n.pres());
    let (p0, q0) = (m.gens(), n.gens());
    let nq = q0.len();
    let mut tw0 = Vec::new();
    for &fa in p0 {
        for &gk in q0 {
            tw0.push(fa + gk);
        }
    }
    let mut tw1 = Vec::new();
    let mut cols = Vec::new();
    for (b, c) in phi.cols().iter().enumerate() {
        for (k, &gk) in q0.iter().enumerate() {
            tw1.push(phi.source().twists()[b] + gk);
            cols.push(c.map_comps(|a| Some(hidx(a as usize, k, nq))));
        }
    }
    for (a, &fa) in p0.iter().enumerate() {
        for (l, c) in psi.cols().iter().enumerate() {
            tw1.push(fa + psi.source().twists()[l]);
            cols.push(c.map_comps(|k| Some(hidx(a, k as usize, nq))));
        }
    }
    Ok(ModulePres::new(HomMatrix::from_cols_unchecked(
        GradedFree::new(&ring, tw1),
        GradedFree::new(&ring, tw0),
        cols,
    )))
}

/// `M ⊗ N`, minimally presented.
pub fn tensor(m: &ModulePres, n: &ModulePres) -> Result<ModulePres> {
    tensor_raw(&m.minimal()?, &n.minimal()?)?.minimal()
}
