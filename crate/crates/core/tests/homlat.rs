use liaison::gb::{Ideal, QuotientRing, Ring};
use liaison::homlat::*;
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

fn prime(r: &Ring, g: &[&str]) -> PrimeCandidate {
    PrimeCandidate::parse(r, g).unwrap()
}

#[test]
fn ext_zero_from_ring_is_the_module() {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = cyc(&r, &["x"]);
    let e = ext(0, &one(&r), &m).unwrap();
    assert!(iso_probe(&e, &m, &IsoOptions::default()).unwrap().is_isomorphic());
}

#[test]
fn ext_of_residue_field_into_polynomial_ring() {
    let s = ring(&["x", "y"], &[]);
    let k = ModulePres::residue_field(&s);
    assert!(ext(0, &k, &one(&s)).unwrap().is_zero().unwrap());
    assert!(ext(1, &k, &one(&s)).unwrap().is_zero().unwrap());
    let e2 = ext(2, &k, &one(&s)).unwrap();
    let h = e2.hilbert(-4, 4).unwrap();
    assert_eq!(h.total(), 1);
    assert_eq!(h.support(), [-2]);
}

#[test]
fn hypersurface_cyclic_module_is_totally_reflexive() {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = cyc(&r, &["x"]);
    for i in 1..=4 {
        assert!(ext(i, &m, &one(&r)).unwrap().is_zero().unwrap(), "Ext^{i}");
    }
}

#[test]
fn tor_examples() {
    let s = ring(&["x", "y"], &[]);
    let k = ModulePres::residue_field(&s);
    let dims: Vec<u64> = (0..=3)
        .map(|i| tor(i, &k, &k).unwrap().hilbert(-1, 4).unwrap().total())
        .collect();
    assert_eq!(dims, [1, 2, 1, 0]);
    let r = ring(&["x", "y"], &["x*y"]);
    let a = cyc(&r, &["x"]);
    let b = cyc(&r, &["y"]);
    let t1 = tor(1, &a, &b).unwrap();
    let t1b = tor(1, &b, &a).unwrap();
    assert_eq!(t1.hilbert(0, 6).unwrap(), t1b.hilbert(0, 6).unwrap());
    assert!(t1.is_zero().unwrap());
    let aa = tor(1, &a, &a).unwrap().hilbert(0, 4).unwrap();
    assert_eq!(aa.dims, [0, 1, 0, 0, 0]);
}

#[test]
fn ext_does_not_depend_on_the_resolution() {
    let r = ring(&["x", "y", "z"], &["x*y"]);
    let m = ModulePres::new(
        ModulePres::cyclic(&Ideal::parse(&r, &["x", "z"]).unwrap())
            .pres()
            .hstack(&ModulePres::cyclic(&Ideal::parse(&r, &["x*z"]).unwrap()).pres().clone()),
    );
    let n = cyc(&r, &["y"]);
    for i in 0..3 {
        let a = ext(i, &m, &n).unwrap();
        let b = ext_unminimized(i, &m, &n).unwrap();
        assert!(iso_probe(&a, &b, &IsoOptions::default()).unwrap().is_isomorphic(), "i = {i}");
    }
}

#[test]
fn depth_and_dimension() {
    let s = ring(&["x", "y"], &[]);
    let k = ModulePres::residue_field(&s);
    assert_eq!(depth(&k).unwrap(), Some(0));
    assert_eq!(krull_dim(&k).unwrap(), Some(0));
    let p = depth_profile(&cyc(&s, &["x"])).unwrap();
    assert_eq!((p.depth, p.dim, p.cm), (Some(1), Some(1), true));
    let t = ring(&["x", "y", "z"], &[]);
    let p = depth_profile(&cyc(&t, &["x*y", "x*z"])).unwrap();
    assert_eq!((p.depth, p.dim, p.cm), (Some(1), Some(2), false));
    let z = depth_profile(&ModulePres::zero(&t)).unwrap();
    assert!(z.zero && z.depth.is_none());
}

#[test]
fn grades() {
    let s = ring(&["x", "y"], &[]);
    assert_eq!(grade(&Ideal::parse(&s, &["x"]).unwrap(), &one(&s)).unwrap(), Some(1));
    assert_eq!(grade(&Ideal::maximal(&s), &one(&s)).unwrap(), Some(2));
    let t = ring(&["x", "y", "z"], &[]);
    assert_eq!(grade(&Ideal::parse(&t, &["x*y", "x*z"]).unwrap(), &one(&t)).unwrap(), Some(1));
    assert_eq!(grade(&Ideal::unit(&t), &one(&t)).unwrap(), None);
}

#[test]
fn local_depths() {
    let s = ring(&["x", "y"], &[]);
    let px = prime(&s, &["x"]);
    assert_eq!(depth_at_prime(&cyc(&s, &["x"]), &px).unwrap(), Some(0));
    assert_eq!(depth_at_prime(&one(&s), &px).unwrap(), Some(1));
    assert_eq!(depth_at_prime(&cyc(&s, &["y"]), &px).unwrap(), None);
    assert_eq!(depth_at_prime(&one(&s), &prime(&s, &["x", "y"])).unwrap(), Some(2));
}

#[test]
fn serre_conditions() {
    let t = ring(&["x", "y", "z"], &[]);
    let primes = monomial_primes(&t);
    assert_eq!(primes.len(), 8);
    assert!(serre_check(&one(&t), 3, &primes).unwrap().holds());
    let m = cyc(&t, &["x*y", "x*z"]);
    let rep = serre_check(&m, 2, &[prime(&t, &["x", "y", "z"])]).unwrap();
    assert!(!rep.holds());
    let r = ring(&["x", "y"], &["x*y"]);
    let rep = serre_check(&cyc(&r, &["x"]), 3, &monomial_primes(&r)).unwrap();
    assert!(rep.holds());
}

#[test]
fn torsionfreeness() {
    let s = ring(&["x", "y"], &[]);
    assert!(!n_torsionfree(&ModulePres::residue_field(&s), 1).unwrap());
    let r = ring(&["x", "y"], &["x*y"]);
    assert!(n_torsionfree(&cyc(&r, &["x"]), 4).unwrap());
    assert!(n_torsionfree(&one(&r), 5).unwrap());
}

#[test]
fn g_dimensions() {
    let r = ring(&["x", "y"], &["x*y"]);
    assert_eq!(gdim(&one(&r), &one(&r)).unwrap().value, Some(0));
    assert_eq!(gdim(&cyc(&r, &["x"]), &one(&r)).unwrap().value, Some(0));
    let s = ring(&["x", "y"], &[]);
    assert_eq!(gdim(&ModulePres::residue_field(&s), &one(&s)).unwrap().value, Some(2));
    assert!(is_totally_c_reflexive(&cyc(&r, &["x"]), &one(&r)).unwrap());
    assert!(!is_totally_c_reflexive(&ModulePres::residue_field(&r), &one(&r)).unwrap());
}

#[test]
fn semidualizing_modules() {
    let r = ring(&["x", "y"], &["x*y"]);
    assert!(is_semidualizing(&one(&r)).unwrap());
    let s = ring(&["x", "y"], &[]);
    let m = ModulePres::ideal_module(&Ideal::maximal(&s)).unwrap();
    assert!(!is_semidualizing(&m).unwrap());
    let c = ring(&["a", "b", "c", "d"], &["a*c - b^2", "b*d - c^2", "a*d - b*c"]);
    let w = canonical_module(&c).unwrap();
    assert_eq!(w.ngens(), 2);
    assert!(is_semidualizing(&w).unwrap());
    assert!(!is_gorenstein_ring(&c).unwrap());
    assert!(is_cohen_macaulay_ring(&c).unwrap());
}

#[test]
fn auslander_class() {
    let r = ring(&["x", "y"], &["x*y"]);
    assert!(in_auslander_class(&one(&r), &one(&r)).unwrap());
    assert!(in_auslander_class(&cyc(&r, &["x"]), &one(&r)).unwrap());
    assert!(in_auslander_class(&ModulePres::residue_field(&r), &one(&r)).unwrap());
    let c = ring(&["a", "b", "c", "d"], &["a*c - b^2", "b*d - c^2", "a*d - b*c"]);
    let w = canonical_module(&c).unwrap();
    assert!(!in_auslander_class(&ModulePres::residue_field(&c), &w).unwrap());
}

#[test]
fn perfect_ideals() {
    let s = ring(&["x", "y"], &[]);
    let a = Ideal::parse(&s, &["x"]).unwrap();
    assert!(gc_perfect(&a, &one(&s)).unwrap());
    let c = semidualizing_from_perfect_ideal(&a, &one(&s)).unwrap();
    assert_eq!(c.ngens(), 1);
    assert!(is_semidualizing(&c).unwrap());
    let t = ring(&["x", "y", "z"], &[]);
    assert!(!gc_perfect(&Ideal::parse(&t, &["x*y", "x*z"]).unwrap(), &one(&t)).unwrap());
    let z = semidualizing_from_perfect_ideal(&Ideal::zero(&s), &one(&s)).unwrap();
    assert!(iso_probe(&z, &one(&s), &IsoOptions::default()).unwrap().is_isomorphic());
}
