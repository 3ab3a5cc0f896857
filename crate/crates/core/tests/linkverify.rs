use liaison::gb::{Ideal, QuotientRing, Ring};
use liaison::homlat::{canonical_module, monomial_primes, PrimeCandidate};
use liaison::linkverify::*;
use liaison::modops::{lambda, syzygy, ModulePres};

const CUBIC: [&str; 3] = ["a*c - b^2", "b*d - c^2", "a*d - b*c"];

fn ring(vars: &[&str], ideal: &[&str]) -> Ring {
    QuotientRing::build(vars, ideal).unwrap()
}

fn im(r: &Ring, g: &[&str]) -> ModulePres {
    ModulePres::ideal_module(&Ideal::parse(r, g).unwrap()).unwrap()
}

fn cyc(r: &Ring, g: &[&str]) -> ModulePres {
    ModulePres::cyclic(&Ideal::parse(r, g).unwrap())
}

fn pc(r: &Ring, g: &[&str]) -> PrimeCandidate {
    PrimeCandidate::parse(r, g).unwrap()
}

fn side(v: &TheoremVerdict, k: &str) -> serde_json::Value {
    v.sides.get(k).cloned().unwrap_or_else(|| panic!("no side {k}: {:?}", v.sides))
}

fn cubic_primes(r: &Ring) -> PrimeSet {
    PrimeSet::new(vec![
        pc(r, &["0"]),
        pc(r, &["a", "b", "c"]),
        pc(r, &["b", "c", "d"]),
        pc(r, &["a", "b", "c", "d"]),
    ])
}

#[test]
fn gorenstein_locus_of_the_twisted_cubic_is_the_punctured_spectrum() {
    let r = ring(&["a", "b", "c", "d"], &CUBIC);
    assert!(is_generically_gorenstein(&r).unwrap());
    assert!(is_gorenstein_on_punctured_spectrum(&r).unwrap());
    let set = cubic_primes(&r);
    let flags: Vec<bool> = set.primes.iter().map(|p| gorenstein_at(&r, p).unwrap()).collect();
    assert_eq!(flags, [true, true, true, false]);
    let s = ring(&["x", "y"], &["x*y"]);
    assert!(non_gorenstein_ideal(&s).unwrap().is_unit());
}

#[test]
fn prime_sets_know_their_order() {
    let s = ring(&["x", "y", "z"], &[]);
    let set = PrimeSet::new(monomial_primes(&s));
    let yz = set.index_of(&pc(&s, &["y", "z"])).unwrap();
    let m = set.maximal(&s).unwrap();
    assert!(set.le(yz, m));
    assert!(!set.le(m, yz));
    assert!(set.closed_under_specialization(&[m]));
    assert!(!set.closed_under_generalization(&[m]));
    assert_eq!(set.labels(&set.specialization_closure(&[yz])), ["(x, y, z)", "(y, z)"]);
}

#[test]
fn horizontal_linkage_certificate() {
    let r = ring(&["x", "y"], &["x*y"]);
    let opts = VerifyOptions::default().iso();
    let c = is_horizontally_linked(&cyc(&r, &["x"]), Some(&opts)).unwrap();
    assert!(c.verdict && c.coherent());
    let k = is_horizontally_linked(&ModulePres::residue_field(&r), Some(&opts)).unwrap();
    assert!(!k.verdict && k.coherent());
    assert!(!is_horizontally_linked(&ModulePres::ring_module(&r, 0), None).unwrap().verdict);
}

#[test]
fn linkage_by_an_ideal() {
    let s = ring(&["x", "y"], &[]);
    let o = VerifyOptions::default();
    let c = Ideal::parse(&s, &["x*y"]).unwrap();
    assert!(linked_by_ideal(&cyc(&s, &["x"]), &cyc(&s, &["y"]), &c, &o).unwrap().verdict.is_pass());
    assert!(linked_by_ideal(&cyc(&s, &["x"]), &cyc(&s, &["x"]), &c, &o).unwrap().verdict.is_fail());
    let q = Ideal::parse(&s, &["x^2", "y^2"]).unwrap();
    let a = cyc(&s, &["x", "y"]);
    let b = cyc(&s, &["x^2", "x*y", "y^2"]);
    assert!(linked_by_ideal(&a, &b, &q, &o).unwrap().verdict.is_pass());
    assert!(linked_by_ideal(&b, &a, &q, &o).unwrap().verdict.is_pass());
    let not_killed = Ideal::parse(&s, &["x"]).unwrap();
    assert!(linked_by_ideal(&a, &b, &not_killed, &o).unwrap().verdict.is_fail());
}

#[test]
fn torsionfreeness_matches_serre_conditions() {
    let s = ring(&["x", "y", "z"], &[]);
    let r1 = ring(&["x", "y"], &["x*y"]);
    let r2 = ring(&["x", "y", "z"], &["x*y"]);
    for (r, g) in [(&s, &["y", "z"][..]), (&r1, &["x"]), (&r2, &["x", "z"]), (&s, &["x*y", "x*z"])] {
        let set = PrimeSet::new(monomial_primes(r));
        for n in 1..=3 {
            let v = verify_thm_2_4(&im(r, g), n, &set).unwrap();
            assert!(v.verdict.is_pass(), "{g:?} n={n}: {}", v.verdict.label());
        }
    }
    let set = PrimeSet::new(monomial_primes(&s));
    let v = verify_thm_2_4(&im(&s, &["y", "z"]), 2, &set).unwrap();
    assert_eq!(side(&v, "serre"), false);
}

#[test]
fn ext_into_the_canonical_module_has_the_same_associated_primes() {
    let r = ring(&["a", "b", "c", "d"], &CUBIC);
    let w = canonical_module(&r).unwrap();
    let set = cubic_primes(&r);
    let cases = [
        (cyc(&r, &["a"]), 0, vec!["(a, b, c)"]),
        (im(&r, &["a", "d"]), 1, vec!["(a, b, c, d)"]),
        (cyc(&r, &["a", "d"]), 0, vec!["(a, b, c, d)"]),
    ];
    for (m, n, want) in cases {
        let v = verify_lemma_3_2(&m, n, &w, &set).unwrap();
        assert!(v.verdict.is_pass(), "{}", v.verdict.label());
        assert_eq!(side(&v, "Ass Ext(TrM, R)"), serde_json::json!(want));
    }
}

#[test]
fn serre_locus_and_attached_primes_of_the_linked_module() {
    let s = ring(&["x", "y", "z"], &[]);
    let set = PrimeSet::new(monomial_primes(&s));
    let o = VerifyOptions::default();
    let m = im(&s, &["y", "z"]);
    let all: Vec<usize> = (0..set.len()).collect();
    let v = verify_thm_3_3(&m, 2, &all, &set, &o).unwrap();
    assert!(v.verdict.is_pass());
    assert_eq!(side(&v, "X in S_n(M)"), false);
    assert_eq!(side(&v, "Att avoids X"), false);

    let yz = set.index_of(&pc(&s, &["y", "z"])).unwrap();
    let away: Vec<usize> = (0..set.len()).filter(|&p| !set.le(yz, p)).collect();
    let v = verify_thm_3_3(&m, 2, &away, &set, &o).unwrap();
    assert!(v.verdict.is_pass());
    assert_eq!(side(&v, "X in S_n(M)"), true);
    assert!(verify_thm_3_7(&m, 2, &away, &set, &o).unwrap().verdict.is_pass());

    let k = verify_thm_3_3(&ModulePres::residue_field(&s), 2, &away, &set, &o).unwrap();
    assert!(matches!(k.verdict, Verdict::Inconclusive(_)));
}

#[test]
fn preset_loci() {
    let s = ring(&["x", "y", "z"], &[]);
    let set = PrimeSet::new(monomial_primes(&s));
    let o = VerifyOptions::default();
    let m = im(&s, &["y", "z"]);
    let v = verify_cor_3_5(&m, 2, &set, &o).unwrap();
    assert!(v.verdict.is_pass());
    assert_eq!(side(&v, "X in S_n(M)"), true);
    let v = verify_cor_3_6(&m, 2, &set, &o).unwrap();
    assert!(v.verdict.is_pass());
    assert_eq!(side(&v, "X in S_n(M)"), false);
    let mx = set.maximal(&s).unwrap();
    assert!(verify_cor_3_8(&m, &[mx], &set, &o).unwrap().verdict.is_pass());
}

#[test]
fn attached_primes_in_degree_c_are_a_depth_stratum() {
    let s = ring(&["x", "y", "z"], &[]);
    let set = PrimeSet::new(monomial_primes(&s));
    let o = VerifyOptions::default();
    let m = im(&s, &["y", "z"]);
    let v = verify_thm_3_12(&m, &set, &o).unwrap();
    assert!(v.verdict.is_pass());
    assert_eq!(v.evidence["c"], 2);
    assert_eq!(side(&v, "Att (duality)"), serde_json::json!(["(y, z)"]));
    let v = verify_cor_3_13(&m, 1, &set, &o).unwrap();
    assert!(v.verdict.is_pass());
    assert_eq!(side(&v, "lhs"), serde_json::json!(["(y, z)"]));
}

#[test]
fn transfer_along_a_semidualizing_ideal() {
    let r = ring(&["a", "b", "c", "d"], &CUBIC);
    let c = Ideal::parse(&r, &["a", "b"]).unwrap();
    let set = cubic_primes(&r);
    let o = VerifyOptions::default();
    let v = verify_thm_4_1(&im(&r, &["a", "b", "c"]), &c, Some(1), &set, &o).unwrap();
    assert!(v.verdict.is_pass(), "{}", v.verdict.label());
    assert_eq!(side(&v, "c.lambda M CM"), true);
    let v = verify_thm_4_1(&im(&r, &["a", "b", "c", "d"]), &c, None, &set, &o).unwrap();
    assert!(v.verdict.is_pass(), "{}", v.verdict.label());
    assert_eq!(side(&v, "M CM"), false);
}

#[test]
fn linked_module_is_cohen_macaulay_iff_depth_bound_holds() {
    let s = ring(&["x", "y", "z"], &[]);
    let o = VerifyOptions::default();
    let a = Ideal::parse(&s, &["x*y"]).unwrap();
    let c = Ideal::parse(&s, &["x*y", "z"]).unwrap();
    let v = verify_thm_b(&cyc(&s, &["x"]), &cyc(&s, &["y"]), &a, &c, &o).unwrap();
    assert!(v.verdict.is_pass());
    assert_eq!(side(&v, "N CM"), true);

    let big = ring(&["a", "b", "c", "d"], &[]);
    let r = ring(&["a", "b", "c", "d"], &CUBIC);
    let a = Ideal::parse(&big, &CUBIC).unwrap();
    let c = a.sum(&Ideal::parse(&big, &["a", "b"]).unwrap()).unwrap();
    let m = im(&r, &["a", "b", "c"]);
    let n = lambda(&m).unwrap();
    let v = verify_thm_b(&m.restrict_scalars(&big).unwrap(), &n.restrict_scalars(&big).unwrap(), &a, &c, &o).unwrap();
    assert!(v.verdict.is_pass(), "{}", v.verdict.label());
    assert_eq!(side(&v, "N CM"), false);
    assert_eq!(v.evidence["depth M/cM"], 0);
}

#[test]
fn tensor_with_canonical_module_and_syzygies_of_the_link() {
    let r = ring(&["x", "y", "z"], &["x*y"]);
    let o = VerifyOptions::default();
    for (m, want) in [(cyc(&r, &["x"]), true), (im(&r, &["x", "z"]), true), (im(&r, &["x", "y", "z"]), false)] {
        let v = verify_thm_4_5(&m, &o).unwrap();
        assert!(v.verdict.is_pass(), "{}", v.verdict.label());
        assert_eq!(side(&v, "M (x) omega MCM"), want);
        assert_eq!(side(&v, "Ext tables agree"), true);
    }
}

#[test]
fn lambda_keeps_cohen_macaulay_modules_over_a_gorenstein_ring() {
    let r = ring(&["x", "y", "z"], &["x*y"]);
    let k = ModulePres::residue_field(&r);
    let mods = vec![cyc(&r, &["x"]), cyc(&r, &["y"]), syzygy(&k, 3).unwrap()];
    assert!(verify_prop_4_6_forward(&mods, &VerifyOptions::default()).unwrap().verdict.is_pass());
    let s = ring(&["x", "y"], &["x*y"]);
    let v = verify_prop_4_6_forward(&[cyc(&s, &["x"])], &VerifyOptions::default()).unwrap();
    assert!(matches!(v.verdict, Verdict::Inconclusive(_)));
}

#[test]
fn local_cohomology_against_ext_of_the_transpose() {
    let s = ring(&["x", "y", "z"], &[]);
    let set = PrimeSet::new(monomial_primes(&s));
    let m = ModulePres::ideal_module(&Ideal::maximal(&s)).unwrap();
    let v = verify_thm_5_1(&m, 2, &set, &VerifyOptions::default()).unwrap();
    assert!(v.verdict.is_pass());
    assert_eq!(side(&v, "twist H vs Ext(TrM)"), 0);
    assert_eq!(v.evidence["i = 0 matches"], true);
}

#[test]
fn mirrored_local_cohomology_of_the_link() {
    let o = VerifyOptions { window: (-10, 10), ..VerifyOptions::default() };
    let s = ring(&["x", "y", "z"], &[]);
    let set = PrimeSet::new(monomial_primes(&s));
    let v = verify_cor_5_3(&ModulePres::ideal_module(&Ideal::maximal(&s)).unwrap(), 2, &set, &o).unwrap();
    assert!(v.verdict.is_pass());
    assert_eq!(side(&v, "twist"), -3);
    let r = ring(&["x", "y", "z"], &["x*y"]);
    let set = PrimeSet::new(monomial_primes(&r));
    let v = verify_cor_5_3(&ModulePres::ideal_module(&Ideal::maximal(&r)).unwrap(), 2, &set, &o).unwrap();
    assert!(v.verdict.is_pass());
}
