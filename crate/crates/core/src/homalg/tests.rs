use super::*;
use crate::cli::{parse_spec, FamilyId};
use crate::exactlin::{Field, Rational};
use crate::quiver_algebra::BoundQuiverAlgebra;
use crate::repmod::{injective, is_isomorphic, projective, random::random_module, simple, Representation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = Rational;

fn build(text: &str) -> BoundQuiverAlgebra<Q> {
    parse_spec(text).unwrap().build().unwrap()
}

fn ka2() -> BoundQuiverAlgebra<Q> {
    build("vertex 1\nvertex 2\narrow a: 1 -> 2\n")
}

fn ka3() -> BoundQuiverAlgebra<Q> {
    build("vertex 1\nvertex 2\nvertex 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n")
}

fn dual_numbers() -> BoundQuiverAlgebra<Q> {
    build("vertex 1\narrow x: 1 -> 1\nrelation x*x\n")
}

fn family<F: Field>(id: &str) -> BoundQuiverAlgebra<F> {
    id.parse::<FamilyId>().unwrap().spec().build().unwrap()
}

#[test]
fn projective_resolutions() {
    let r2 = family::<Q>("radsquare_a:2");
    let p = projective(&r2, 1);
    let res = min_proj_resolution(&p, 4);
    assert_eq!(res.length(), Some(0));
    assert!(syzygy(&p, 1).is_zero());
    let s1 = simple(&r2, 0);
    let res = min_proj_resolution(&s1, 4);
    assert_eq!(res.vertices, vec![vec![0], vec![1], vec![2]]);
    assert_eq!(res.length(), Some(2));
    assert!(res.composites_vanish() && res.is_exact() && res.is_minimal());
    assert_eq!(proj_dim(&s1, 5), HomDim::Exact(2));
    let a = ka2();
    assert!(is_isomorphic(&syzygy(&simple(&a, 0), 1), &simple(&a, 1)));
}

#[test]
fn injective_coresolutions() {
    let r2 = family::<Q>("radsquare_a:2");
    let lam = Representation::regular(&r2);
    let res = min_inj_coresolution(&lam, 4);
    assert_eq!(res.vertices, vec![vec![1, 2, 2], vec![1], vec![0]]);
    assert!(res.composites_vanish() && res.is_exact() && res.is_minimal());
    assert!(is_isomorphic(&cosyzygy(&lam, 1), &simple(&r2, 1)));
    assert!(is_isomorphic(&cosyzygy(&lam, 2), &simple(&r2, 0)));
    assert_eq!(inj_dim(&lam, 5), HomDim::Exact(2));
    let i = injective(&r2, 2);
    assert_eq!(min_inj_coresolution(&i, 3).length(), Some(0));
    assert!(cosyzygy(&i, 1).is_zero());
    let d = dual_numbers();
    let lam = Representation::regular(&d);
    let res = min_inj_coresolution(&lam, 3);
    assert_eq!(res.vertices[0], vec![0]);
    assert!(cosyzygy(&lam, 1).is_zero());
}

#[test]
fn infinite_projective_dimension() {
    let d = dual_numbers();
    let s = simple(&d, 0);
    for bound in 0..4 {
        assert_eq!(proj_dim(&s, bound), HomDim::AtLeast(bound + 1));
    }
    assert_eq!(ext_dim(&s, &s, 3), 1);
    assert_eq!(ext_dim_injective(&s, &s, 3), 1);
}

#[test]
fn ext_small_cases() {
    let a = ka2();
    let (s1, s2) = (simple(&a, 0), simple(&a, 1));
    assert_eq!(ext_dim(&s1, &s2, 1), 1);
    assert_eq!(ext_dim_injective(&s1, &s2, 1), 1);
    assert_eq!(ext_dim(&s2, &s1, 1), 0);
    assert_eq!(ext_dim(&s1, &s1, 0), 1);
    let r2 = family::<Q>("radsquare_a:2");
    let s1 = simple(&r2, 0);
    assert_eq!(ext_dim(&s1, &simple(&r2, 2), 2), 1);
    for i in 0..3 {
        for k in 1..4 {
            assert_eq!(ext_dim(&projective(&r2, i), &s1, k), 0);
        }
    }
}

#[test]
fn duality_and_translates() {
    let a = ka2();
    let (s1, s2) = (simple(&a, 0), simple(&a, 1));
    assert!(is_isomorphic(&tau(&s1), &s2));
    assert!(is_isomorphic(&tau_inverse(&s2), &s1));
    for alg in [ka3(), family("radsquare_a:3"), family("auslander_uniserial:3")] {
        for i in 0..alg.num_vertices() {
            assert!(tau(&projective(&alg, i)).is_zero());
            assert!(tau_inverse(&injective(&alg, i)).is_zero());
            let p = projective(&alg, i);
            assert!(is_isomorphic(&dual(&p), &injective(&alg.opposite(), i)));
            assert!(is_isomorphic(&dual(&simple(&alg, i)), &simple(&alg.opposite(), i)));
            assert_eq!(dual(&dual(&p)), p);
        }
    }
    let b = family::<Q>("preprojective_a:3");
    // self-injective, so tau is a bijection on non-projective indecomposables
    for i in 0..3 {
        let s = simple(&b, i);
        let t = tau(&s);
        assert!(!t.is_zero() && crate::repmod::is_local(&t).unwrap());
        assert!(is_isomorphic(&tau_inverse(&t), &s));
    }
}

fn random_suite(id: &str, count: usize, seed: u64) {
    let alg = if id == "ka3" { ka3() } else { family::<Q>(id) };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let modules: Vec<Representation<Q>> = (0..count).map(|_| random_module(&alg, &mut rng)).collect();
    for (k, m) in modules.iter().enumerate() {
        let n = &modules[(k + 1) % count];
        let res = min_proj_resolution(m, 2);
        assert!(res.composites_vanish() && res.is_exact() && res.is_minimal(), "{id}: {m:?}");
        let cores = min_inj_coresolution(m, 2);
        assert!(cores.composites_vanish() && cores.is_exact() && cores.is_minimal(), "{id}: {m:?}");
        for e in 0..3 {
            assert_eq!(ext_dim(m, n, e), ext_dim_injective(m, n, e), "{id}: Ext^{e}({m:?}, {n:?})");
        }
        let t = tau(m);
        assert_eq!(ext_dim(m, n, 1), stable_hom_dim_injective(n, &t), "{id}: {m:?} {n:?}");
        assert_eq!(ext_dim(n, m, 1), stable_hom_dim_projective(&tau_inverse(m), n), "{id}: {m:?} {n:?}");
        assert!(is_isomorphic(&tau_inverse(&t), &nonprojective_part(m).unwrap()), "{id}: {m:?}");
        assert!(is_isomorphic(&tau(&tau_inverse(m)), &noninjective_part(m).unwrap()), "{id}: {m:?}");
    }
}

#[test]
fn random_suite_linear_a3() {
    random_suite("ka3", 12, 1);
}

#[test]
fn random_suite_radsquare() {
    random_suite("radsquare_a:3", 10, 2);
}

#[test]
fn random_suite_auslander_uniserial() {
    random_suite("auslander_uniserial:3", 8, 3);
}

#[test]
fn random_suite_preprojective() {
    random_suite("preprojective_a:3", 8, 4);
}

#[test]
fn resolution_json() {
    let r2 = family::<Q>("radsquare_a:2");
    let v = min_proj_resolution(&simple(&r2, 0), 3).to_json();
    assert_eq!(v["kind"], "projective");
    assert_eq!(v["terms"][1]["summands"][0], "2");
    assert_eq!(v["finite"], true);
}
