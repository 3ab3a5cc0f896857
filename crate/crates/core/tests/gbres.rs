use std::sync::Arc;

use liaison::gb::{
    buchberger_polys, normal_form, resolve, syzygies, GradedFree, HomMatrix, Ideal, ModVec,
    QuotientRing, Ring, SubmoduleGb,
};
use liaison::modops::ModulePres;
use liaison::poly::{Poly, PolyRing};

fn ring(vars: &[&str], ideal: &[&str]) -> Ring {
    QuotientRing::build(vars, ideal).unwrap()
}

fn polys(r: &Ring, s: &[&str]) -> Vec<Poly> {
    s.iter().map(|t| r.parse(t).unwrap()).collect()
}

fn shown(ps: &[Poly]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn matrix(r: &Ring, rows: Vec<i32>, cols: Vec<i32>, e: &[&[&str]]) -> HomMatrix {
    let entries: Vec<Vec<Poly>> = e.iter().map(|row| polys(r, row)).collect();
    HomMatrix::from_entries(r, rows, cols, &entries).unwrap()
}

#[test]
fn single_generator_basis() {
    let r = ring(&["x", "y"], &[]);
    let gb = buchberger_polys(r.poly_ring(), &polys(&r, &["x"])).unwrap();
    assert_eq!(shown(&gb), ["x"]);
}

#[test]
fn spair_of_monomials_reduces_to_zero() {
    let r = ring(&["x", "y", "z"], &[]);
    let gb = buchberger_polys(r.poly_ring(), &polys(&r, &["x*y", "x*z"])).unwrap();
    assert_eq!(shown(&gb), ["x*y", "x*z"]);
}

#[test]
fn buchberger_adds_one_element() {
    let r = ring(&["x", "y", "z"], &[]);
    let gb = buchberger_polys(r.poly_ring(), &polys(&r, &["x^2 - y*z", "x*y"])).unwrap();
    assert_eq!(shown(&gb), ["x^2 + 32002*y*z", "x*y", "y^2*z"]);
}

#[test]
fn basis_ignores_generator_order() {
    let r = ring(&["x", "y", "z"], &[]);
    let a = polys(&r, &["x^2 - y*z", "x*y", "z^3 + x*y*z", "y^2 - x*z"]);
    let mut b = a.clone();
    b.reverse();
    b.swap(0, 2);
    let ga = buchberger_polys(r.poly_ring(), &a).unwrap();
    let gb = buchberger_polys(r.poly_ring(), &b).unwrap();
    assert_eq!(ga, gb);
}

fn nf_str(r: &Ring, f: &str, gens: &[&str]) -> String {
    let free = GradedFree::new(r, vec![0]);
    let vecs: Vec<ModVec> = polys(r, gens).iter().map(|p| ModVec::from_poly(p, 0)).collect();
    let gb = SubmoduleGb::new(&free, &vecs).unwrap();
    let v = normal_form(&ModVec::from_poly(&r.parse(f).unwrap(), 0), &gb);
    v.entry(r.poly_ring(), 0).to_string()
}

#[test]
fn normal_forms() {
    let r = ring(&["x", "y", "z"], &[]);
    assert_eq!(nf_str(&r, "x^2*y", &["x*y"]), "0");
    assert_eq!(nf_str(&r, "x^2 + y^2", &["x^2 - y*z"]), "y^2 + y*z");
    assert_eq!(nf_str(&r, "z^3", &["x*y", "x*z"]), "z^3");
}

#[test]
fn nonzerodivisor_has_no_syzygies() {
    let r = ring(&["x", "y"], &[]);
    let m = matrix(&r, vec![0], vec![1], &[&["x"]]);
    assert_eq!(syzygies(&m).unwrap().ncols(), 0);
}

#[test]
fn koszul_syzygy() {
    let r = ring(&["x", "y"], &[]);
    let m = matrix(&r, vec![0], vec![1, 1], &[&["x", "y"]]);
    let s = syzygies(&m).unwrap();
    assert_eq!(s.ncols(), 1);
    assert!(m.compose(&s).unwrap().is_zero());
    let c: Vec<String> = (0..2).map(|i| s.entry(i, 0).monic().to_string()).collect();
    assert_eq!(c, ["y", "x"]);
    let sum = s.entry(0, 0).add(&s.entry(1, 0)).unwrap();
    assert_eq!(sum.terms().len(), 2);
}

#[test]
fn hypersurface_syzygies_split() {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = matrix(&r, vec![0], vec![1, 1], &[&["x", "y"]]);
    let s = syzygies(&m).unwrap();
    assert!(m.compose(&s).unwrap().is_zero());
    let mut cols: Vec<(String, String)> = (0..s.ncols())
        .map(|j| (s.entry(0, j).monic().to_string(), s.entry(1, j).monic().to_string()))
        .collect();
    cols.sort();
    assert_eq!(cols, [("0".into(), "x".into()), ("y".into(), "0".into())]);
}

#[test]
fn unit_presentation_prunes_to_zero() {
    let r = ring(&["x", "y"], &[]);
    let m = ModulePres::new(matrix(&r, vec![0], vec![0], &[&["1"]]));
    let p = m.minimal().unwrap();
    assert_eq!(p.ngens(), 0);
    assert!(p.is_zero().unwrap());
}

#[test]
fn unit_row_is_eliminated() {
    let r = ring(&["x", "y"], &[]);
    let m = ModulePres::new(matrix(&r, vec![0, 1], vec![1, 1], &[&["y", "x"], &["1", "0"]]));
    let p = m.minimal().unwrap();
    assert_eq!(p.ngens(), 1);
    assert!(p.pres().is_minimal());
    assert_eq!(p.pres().entry(0, 0).to_string(), "x");
    let h = p.hilbert(0, 4).unwrap();
    assert_eq!(h.dims, [1, 1, 1, 1, 1]);
}

#[test]
fn minimal_presentation_is_stable() {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = ModulePres::new(matrix(&r, vec![0], vec![1], &[&["x"]]));
    let p = m.minimal().unwrap();
    assert_eq!(p.pres().ncols(), 1);
    assert_eq!(p.pres().entry(0, 0).to_string(), "x");
    let q = p.minimal().unwrap();
    assert_eq!(q.pres().entry(0, 0).to_string(), "x");
}

#[test]
fn koszul_resolution_of_residue_field() {
    let r = ring(&["x", "y"], &[]);
    let k = ModulePres::residue_field(&r);
    let res = resolve(&k, 5).unwrap();
    assert_eq!(res.ranks(), [1, 2, 1]);
    assert_eq!(res.length(), Some(2));
    assert_eq!(res.betti_degrees(2), [2]);
}

#[test]
fn hypersurface_resolution_is_periodic() {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = ModulePres::cyclic(&Ideal::parse(&r, &["x"]).unwrap());
    let res = resolve(&m, 4).unwrap();
    assert_eq!(res.ranks(), [1, 1, 1, 1, 1]);
    let d: Vec<String> = (1..=4).map(|i| res.differential(i).entry(0, 0).monic().to_string()).collect();
    assert_eq!(d, ["x", "y", "x", "y"]);
    for i in 1..4 {
        assert!(res.differential(i).compose(&res.differential(i + 1)).unwrap().is_zero());
    }
}

#[test]
fn free_module_resolution_is_trivial() {
    let r = ring(&["x", "y"], &["x*y"]);
    let f = ModulePres::free(&GradedFree::new(&r, vec![0, 2]));
    let res = resolve(&f, 3).unwrap();
    assert_eq!(res.length(), Some(0));
    assert!(res.steps.is_empty());
}

#[test]
fn hilbert_counts() {
    let s = ring(&["x", "y"], &[]);
    let m = ModulePres::ring_module(&s, 0);
    assert_eq!(m.hilbert(0, 3).unwrap().dims, [1, 2, 3, 4]);
    let q = ModulePres::cyclic(&Ideal::parse(&s, &["x^2", "x*y", "y^2"]).unwrap());
    assert_eq!(q.hilbert(0, 2).unwrap().dims, [1, 2, 0]);
    let r = ring(&["x", "y"], &["x*y"]);
    let c = ModulePres::cyclic(&Ideal::parse(&r, &["x"]).unwrap());
    assert_eq!(c.hilbert(0, 3).unwrap().dims, [1, 1, 1, 1]);
}

#[test]
fn ideal_quotients() {
    let s = ring(&["x", "y"], &[]);
    let id = |g: &[&str]| Ideal::parse(&s, g).unwrap();
    assert_eq!(id(&["x*y"]).quotient(&id(&["x"])).unwrap(), id(&["y"]));
    let a = id(&["x^2", "y^2"]);
    let m = id(&["x", "y"]);
    let q = a.quotient(&m).unwrap();
    assert_eq!(q, id(&["x^2", "x*y", "y^2"]));
    assert_eq!(a.quotient(&q).unwrap(), m);
    let m2 = m.power(2).unwrap();
    assert_eq!(a.quotient(&m2).unwrap(), m);
    assert_eq!(a.quotient(&Ideal::unit(&s)).unwrap(), a);
}

#[test]
fn ideal_sum_product_intersection() {
    let s = ring(&["x", "y", "z"], &[]);
    let id = |g: &[&str]| Ideal::parse(&s, g).unwrap();
    let a = id(&["x*y"]);
    let b = id(&["x*z", "y^2"]);
    assert_eq!(a.sum(&b).unwrap(), id(&["x*y", "x*z", "y^2"]));
    assert_eq!(a.product(&b).unwrap(), id(&["x^2*y*z", "x*y^3"]));
    assert_eq!(id(&["x"]).intersection(&id(&["y"])).unwrap(), id(&["x*y"]));
    assert_eq!(a.intersection(&b).unwrap(), id(&["x*y*z", "x*y^2"]));
}

#[test]
fn ideals_over_a_quotient_ring() {
    let r = ring(&["x", "y"], &["x*y"]);
    let id = |g: &[&str]| Ideal::parse(&r, g).unwrap();
    assert_eq!(Ideal::zero(&r).quotient(&id(&["x"])).unwrap(), id(&["y"]));
    assert_eq!(id(&["x"]).intersection(&id(&["y"])).unwrap(), Ideal::zero(&r));
}

#[test]
fn shared_ring_handles_compare_equal() {
    let a = ring(&["x", "y"], &["x*y"]);
    let b = Arc::new((*a).clone());
    let m = ModulePres::ring_module(&a, 0);
    let n = ModulePres::ring_module(&b, 0);
    assert!(m.same_ring(&n).is_ok());
    let other = ring(&["x", "y"], &[]);
    assert!(m.same_ring(&ModulePres::ring_module(&other, 0)).is_err());
    let _ = PolyRing::standard(&["x"]).unwrap();
}

#[test]
fn syzygies_of_a_column_over_an_artinian_quotient() {
    let q = ring(&["x", "y"], &["x^2", "y^2"]);
    let x = q.parse("x").unwrap();
    let y = q.parse("y").unwrap();
    let m = HomMatrix::from_entries(&q, vec![-1, -1], vec![0], &[vec![x], vec![y]]).unwrap();
    let s = syzygies(&m).unwrap();
    assert_eq!(s.ncols(), 1);
    assert_eq!(s.entry(0, 0).to_string(), "x*y");
}
