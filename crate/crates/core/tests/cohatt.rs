use liaison::cohatt::*;
use liaison::gb::{Ideal, QuotientRing, Ring};
use liaison::homlat::PrimeCandidate;
use liaison::modops::{iso_probe, IsoOptions, ModulePres};

fn ring(vars: &[&str], ideal: &[&str]) -> Ring {
    QuotientRing::build(vars, ideal).unwrap()
}

fn cyc(r: &Ring, g: &[&str]) -> ModulePres {
    ModulePres::cyclic(&Ideal::parse(r, g).unwrap())
}

fn one(r: &Ring) -> ModulePres {
    ModulePres::ring_module(r, 0)
}

#[test]
fn canonical_modules() {
    let s = ring(&["x", "y", "z"], &[]);
    let w = canonical_module(&s).unwrap();
    assert_eq!(w.gens(), [3]);
    assert_eq!(w.pres().ncols(), 0);
    let r = ring(&["x", "y"], &["x*y"]);
    let w = canonical_module(&r).unwrap();
    assert!(iso_probe(&w, &one(&r), &IsoOptions::default()).unwrap().is_isomorphic());
    let c = ring(&["a", "b", "c", "d"], &["a*c - b^2", "b*d - c^2", "a*d - b*c"]);
    assert_eq!(canonical_module(&c).unwrap().minimal().unwrap().ngens(), 2);
    let bad = ring(&["x", "y", "z"], &["x*y", "x*z"]);
    assert!(canonical_module(&bad).is_err());
}

#[test]
fn top_cohomology_of_the_plane() {
    let s = ring(&["x", "y"], &[]);
    let h2 = local_cohomology(&one(&s), 2, -4, 0).unwrap();
    assert_eq!(h2.dims, [3, 2, 1, 0, 0]);
    for i in 0..2 {
        assert!(local_cohomology(&one(&s), i, -6, 6).unwrap().is_zero());
    }
}

#[test]
fn socle_in_degree_one() {
    let s = ring(&["x", "y"], &[]);
    let m = cyc(&s, &["x^2", "x*y"]);
    let h0 = local_cohomology(&m, 0, -2, 4).unwrap();
    assert_eq!(h0.support(), [1]);
    assert_eq!(h0.get(1), 1);
}

#[test]
fn cohen_macaulay_modules_have_one_cohomology() {
    let r = ring(&["x", "y"], &["x*y"]);
    let t = cohomology_table(&cyc(&r, &["x"]), -8, 8).unwrap();
    assert_eq!(t.nonzero, [false, true, false]);
    assert!(t.grothendieck_bounds_hold());
}

#[test]
fn c_values() {
    let r = ring(&["x", "y"], &["x*y"]);
    assert_eq!(c_value(&cyc(&r, &["x"])).unwrap(), None);
    let s = ring(&["x", "y", "z"], &[]);
    assert_eq!(c_value(&cyc(&s, &["x*y", "x*z"])).unwrap(), Some(1));
    assert_eq!(c_value(&ModulePres::residue_field(&s)).unwrap(), None);
}

#[test]
fn associated_primes() {
    let s = ring(&["x", "y", "z"], &[]);
    let a = ass_module(&cyc(&s, &["x*y", "x*z"]), &[]).unwrap();
    assert!(a.auto_candidates);
    assert_eq!(a.labels(), ["(x)", "(y, z)"]);
    assert!(ass_module(&ModulePres::zero(&s), &[]).unwrap().primes.is_empty());
    let b = ass_module(&cyc(&s, &["x^2"]), &[]).unwrap();
    assert_eq!(b.labels(), ["(x)"]);
}

#[test]
fn explicit_candidates_are_required_off_the_monomial_case() {
    let s = ring(&["x", "y"], &[]);
    let m = cyc(&s, &["x + y"]);
    assert!(ass_module(&m, &[]).is_err());
    let p = PrimeCandidate::parse(&s, &["x + y"]).unwrap();
    let q = PrimeCandidate::parse(&s, &["x", "y"]).unwrap();
    let a = ass_module(&m, &[p, q]).unwrap();
    assert_eq!(a.primes.len(), 1);
}

#[test]
fn attached_primes() {
    let s = ring(&["x", "y"], &[]);
    let a = att_local_cohomology(&one(&s), 2, &[]).unwrap();
    assert_eq!(a.labels(), ["(0)"]);
    assert_eq!(a.finite_length, Some(false));
    let t = ring(&["x", "y", "z"], &[]);
    let b = att_local_cohomology(&cyc(&t, &["x*y", "x*z"]), 1, &[]).unwrap();
    assert_eq!(b.labels(), ["(y, z)"]);
    let r = ring(&["x", "y"], &["x*y"]);
    assert!(att_local_cohomology(&cyc(&r, &["x"]), 0, &[]).unwrap().primes.is_empty());
    let m = cyc(&s, &["x^2", "x*y"]);
    let c = att_local_cohomology(&m, 0, &[]).unwrap();
    assert_eq!(c.labels(), ["(x, y)"]);
    assert_eq!(c.finite_length, Some(true));
}

#[test]
fn minimal_primes_of_monomial_ideals() {
    let s = ring(&["x", "y", "z"], &[]);
    let id = |g: &[&str]| Ideal::parse(&s, g).unwrap();
    let show = |v: Vec<PrimeCandidate>| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
    assert_eq!(show(monomial_minimal_primes(&id(&["x*y", "x*z"])).unwrap()), ["(x)", "(y, z)"]);
    assert_eq!(show(monomial_minimal_primes(&id(&["x"])).unwrap()), ["(x)"]);
    assert_eq!(show(monomial_minimal_primes(&id(&["x*y"])).unwrap()), ["(x)", "(y)"]);
    assert!(monomial_minimal_primes(&id(&["x + y"])).is_err());
}
