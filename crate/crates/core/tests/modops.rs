use liaison::gb::{GradedFree, Ideal, QuotientRing, Ring};
use liaison::modops::*;

fn ring(vars: &[&str], ideal: &[&str]) -> Ring {
    QuotientRing::build(vars, ideal).unwrap()
}

fn cyc(r: &Ring, g: &[&str]) -> ModulePres {
    ModulePres::cyclic(&Ideal::parse(r, g).unwrap())
}

fn ideal_mod(r: &Ring, g: &[&str]) -> ModulePres {
    ModulePres::ideal_module(&Ideal::parse(r, g).unwrap()).unwrap()
}

fn iso(m: &ModulePres, n: &ModulePres) -> IsoVerdict {
    iso_probe(m, n, &IsoOptions::default()).unwrap()
}

fn dims(m: &ModulePres, lo: i32, hi: i32) -> Vec<u64> {
    m.hilbert(lo, hi).unwrap().dims
}

#[test]
fn hom_from_ring_is_identity() {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = cyc(&r, &["x"]);
    let h = hom_module(&ModulePres::ring_module(&r, 0), &m).unwrap();
    assert!(iso(&h.module, &m).is_isomorphic());
}

#[test]
fn hom_into_ring_is_annihilator() {
    let r = ring(&["x", "y"], &["x*y"]);
    let d = dual(&cyc(&r, &["x"])).unwrap();
    assert_eq!(dims(&d, -1, 4), [0, 0, 1, 1, 1, 1]);
    assert!(iso(&d, &ideal_mod(&r, &["y"])).is_isomorphic());
}

#[test]
fn residue_field_has_no_maps_to_a_domain() {
    let s = ring(&["x", "y"], &[]);
    let d = dual(&ModulePres::residue_field(&s)).unwrap();
    assert!(d.is_zero().unwrap());
}

#[test]
fn dual_and_tensor_of_free_modules() {
    let r = ring(&["x", "y"], &["x*y"]);
    let one = ModulePres::ring_module(&r, 0);
    assert!(iso(&dual(&one).unwrap(), &one).is_isomorphic());
    let m = cyc(&r, &["x"]);
    assert!(iso(&tensor(&one, &m).unwrap(), &m).is_isomorphic());
    let s = ring(&["x", "y"], &[]);
    let k = ModulePres::residue_field(&s);
    assert!(iso(&tensor(&k, &k).unwrap(), &k).is_isomorphic());
}

#[test]
fn generator_maps_are_homomorphisms() {
    let r = ring(&["x", "y", "z"], &["x*y"]);
    let m = ideal_mod(&r, &["x", "z"]);
    let n = cyc(&r, &["y"]);
    let h = hom_module(&m, &n).unwrap();
    let mm = h.source.clone();
    let nn = h.target.clone();
    for j in 0..h.module.ngens() {
        let g = h.generator_map(j);
        let comp = g.compose(mm.pres()).unwrap();
        for c in comp.cols() {
            assert!(nn.gb().unwrap().contains(c));
        }
        let back = h.element_of(&g).unwrap();
        assert_eq!(back, liaison::gb::ModVec::unit(j));
    }
}

#[test]
fn transpose_examples() {
    let r = ring(&["x", "y"], &["x*y"]);
    let free = ModulePres::free(&GradedFree::new(&r, vec![0, 1]));
    assert!(transpose(&free).unwrap().is_zero().unwrap());
    let m = cyc(&r, &["x"]);
    assert!(iso(&transpose(&m).unwrap(), &m.shift(1)).is_isomorphic());
    let s = ring(&["x"], &[]);
    let k = ModulePres::residue_field(&s);
    let t = transpose(&k).unwrap();
    assert_eq!(dims(&t, -2, 2), [0, 1, 0, 0, 0]);
}

#[test]
fn syzygy_examples() {
    let s = ring(&["x", "y"], &[]);
    let k = ModulePres::residue_field(&s);
    assert!(iso(&syzygy(&k, 1).unwrap(), &ideal_mod(&s, &["x", "y"])).is_isomorphic());
    let r = ring(&["x", "y"], &["x*y"]);
    let m = cyc(&r, &["x"]);
    assert!(iso(&syzygy(&m, 1).unwrap(), &cyc(&r, &["y"]).shift(-1)).is_isomorphic());
    let free = ModulePres::ring_module(&r, 3);
    assert!(syzygy(&free, 1).unwrap().is_zero().unwrap());
}

#[test]
fn lambda_examples() {
    let r = ring(&["x", "y"], &["x*y"]);
    let free = ModulePres::ring_module(&r, 0);
    assert!(lambda(&free).unwrap().is_zero().unwrap());
    let l = lambda(&cyc(&r, &["x"])).unwrap();
    assert!(iso(&l, &cyc(&r, &["y"])).is_isomorphic());
    let s = ring(&["x", "y"], &[]);
    let lk = lambda(&ModulePres::residue_field(&s)).unwrap();
    assert_eq!(lk.ngens(), 1);
    assert_eq!(lk.pres().ncols(), 0);
}

#[test]
fn lambda_twice_returns_the_module() {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = cyc(&r, &["x"]);
    let l2 = lambda(&lambda(&m).unwrap()).unwrap();
    assert!(iso(&l2, &m).is_isomorphic());
}

#[test]
fn lambda_from_the_dual_agrees_on_stable_modules() {
    let r = ring(&["x", "y", "z"], &["x*y"]);
    for m in [cyc(&r, &["x"]), ideal_mod(&r, &["x", "z"])] {
        assert!(is_stable(&m).unwrap());
        let a = lambda(&m).unwrap();
        let b = lambda_via_dual(&m).unwrap();
        assert!(iso(&a, &b).is_isomorphic(), "{m}");
    }
}

#[test]
fn relative_versions_reduce_to_absolute_ones() {
    let r = ring(&["x", "y"], &["x*y"]);
    let one = ModulePres::ring_module(&r, 0);
    let m = cyc(&r, &["x"]);
    assert!(iso(&transpose_c(&m, &one).unwrap(), &transpose(&m).unwrap()).is_isomorphic());
    assert!(iso(&lambda_c(&m, &one).unwrap(), &lambda(&m).unwrap()).is_isomorphic());
    let free = ModulePres::free(&GradedFree::new(&r, vec![0, 0]));
    assert!(transpose_c(&free, &one).unwrap().is_zero().unwrap());
}

#[test]
fn stability() {
    let s = ring(&["x", "y"], &[]);
    assert!(!is_stable(&ModulePres::ring_module(&s, 0)).unwrap());
    assert!(is_stable(&ideal_mod(&s, &["x", "y"])).unwrap());
    let r = ring(&["x", "y"], &["x*y"]);
    assert!(is_stable(&cyc(&r, &["x"])).unwrap());
    assert_eq!(trace_ideal(&cyc(&r, &["x"])).unwrap(), Ideal::parse(&r, &["y"]).unwrap());
    let sum = cyc(&r, &["x"]).direct_sum(&ModulePres::ring_module(&r, 2)).unwrap();
    assert!(!is_stable(&sum).unwrap());
}

#[test]
fn ideal_times_module_examples() {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = cyc(&r, &["y"]);
    assert!(iso(&ideal_times_module(&Ideal::unit(&r), &m).unwrap(), &m).is_isomorphic());
    assert!(ideal_times_module(&Ideal::zero(&r), &m).unwrap().is_zero().unwrap());
    let xm = ideal_times_module(&Ideal::parse(&r, &["x"]).unwrap(), &m).unwrap();
    assert_eq!(dims(&xm, 0, 5), [0, 1, 1, 1, 1, 1]);
    let s = ring(&["x", "y"], &[]);
    let k = ModulePres::residue_field(&s);
    assert!(ideal_times_module(&Ideal::maximal(&s), &k).unwrap().is_zero().unwrap());
}

#[test]
fn ideal_times_module_sequence_is_exact() {
    let r = ring(&["x", "y", "z"], &["x*y"]);
    let m = ideal_mod(&r, &["x", "z"]);
    let c = Ideal::parse(&r, &["y", "z"]).unwrap();
    let cm = ideal_times_module(&c, &m).unwrap();
    let q = quotient_by_ideal(&m, &c).unwrap();
    let (a, b, t) = (dims(&cm, 0, 6), dims(&q, 0, 6), dims(&m, 0, 6));
    for d in 0..7 {
        assert_eq!(a[d] + b[d], t[d]);
    }
}

#[test]
fn pushforward_of_free_module_has_zero_cokernel() {
    let r = ring(&["x", "y"], &["x*y"]);
    let p = pushforward(&ModulePres::ring_module(&r, 1)).unwrap();
    assert!(p.cokernel.is_zero().unwrap());
}

#[test]
fn pushforward_embeds_maximal_ideal() {
    let s = ring(&["x", "y"], &[]);
    let m = ideal_mod(&s, &["x", "y"]);
    let p = pushforward(&m).unwrap();
    assert_eq!(p.free.rank(), 1);
    let (fm, fc, ff) = (dims(&m, 0, 5), dims(&p.cokernel, 0, 5), ModulePres::free(&p.free).hilbert(0, 5).unwrap().dims);
    for d in 0..6 {
        assert_eq!(fm[d] + fc[d], ff[d]);
    }
}

#[test]
fn pushforward_rejects_torsion() {
    let s = ring(&["x", "y"], &[]);
    assert!(pushforward(&cyc(&s, &["x"])).is_err());
}

#[test]
fn iso_probe_examples() {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = cyc(&r, &["x"]);
    assert!(iso(&m, &m).is_isomorphic());
    let s = ring(&["x", "y"], &[]);
    match iso(&cyc(&s, &["x"]), &cyc(&s, &["x^2"])) {
        IsoVerdict::DistinguishedBy(_) => {}
        v => panic!("{}", v.label()),
    }
}

#[test]
fn iso_probe_finds_twists() {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = cyc(&r, &["x"]);
    let opts = IsoOptions {
        window: 3,
        ..IsoOptions::default()
    };
    match iso_probe(&m.shift(2), &m, &opts).unwrap() {
        IsoVerdict::Isomorphic { twist, .. } => assert_eq!(twist, 2),
        v => panic!("{}", v.label()),
    }
}
