use super::*;
use crate::cli::{parse_spec, FamilyId};
use crate::exactlin::{Field, Fp31, Matrix, Rational};
use crate::quiver_algebra::BoundQuiverAlgebra;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = Rational;

/// `1 -> 2`.
fn ka2() -> BoundQuiverAlgebra<Q> {
    parse_spec("vertex 1\nvertex 2\narrow a: 1 -> 2\n").unwrap().build().unwrap()
}

fn ka3() -> BoundQuiverAlgebra<Q> {
    parse_spec("vertex 1\nvertex 2\nvertex 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n")
        .unwrap()
        .build()
        .unwrap()
}

fn family<F: Field>(id: &str) -> BoundQuiverAlgebra<F> {
    id.parse::<FamilyId>().unwrap().spec().build().unwrap()
}

/// Interval module `[i, j]` (0-based vertices) over the linear quiver `1 -> 2 -> ... -> n`.
fn interval(alg: &BoundQuiverAlgebra<Q>, i: usize, j: usize) -> Representation<Q> {
    let n = alg.num_vertices();
    let dims: Vec<usize> = (0..n).map(|v| usize::from(i <= v && v <= j)).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| Matrix::from_fn(dims[a.target], dims[a.source], |_, _| Q::one()))
        .collect();
    Representation::new(alg, dims, maps).unwrap()
}

#[test]
fn projectives_injectives_simples() {
    let r2 = family::<Q>("radsquare_a:2");
    let p1 = projective(&r2, 0);
    assert_eq!(p1.dims(), &[1, 1, 0]);
    assert!(is_isomorphic(&p1, &injective(&r2, 1)));
    let a = ka2();
    assert_eq!(projective(&a, 1), simple(&a, 1));
    assert_eq!(projective(&a, 1).dims(), &[0, 1]);
    for alg in [ka3(), r2, family("auslander_uniserial:3"), family("preprojective_a:3")] {
        let total = (0..alg.num_vertices()).fold(vec![0; alg.num_vertices()], |acc, i| {
            acc.iter().zip(projective(&alg, i).dims()).map(|(x, y)| x + y).collect()
        });
        assert_eq!(total, Representation::regular(&alg).dims());
        assert_eq!(total.iter().sum::<usize>(), alg.dim());
        for i in 0..alg.num_vertices() {
            assert!(projective(&alg, i).satisfies_relations());
            assert!(injective(&alg, i).satisfies_relations());
        }
    }
}

#[test]
fn hom_dimensions() {
    let a = ka2();
    let (p1, s1) = (projective(&a, 0), simple(&a, 0));
    assert_eq!(hom_dim(&p1, &s1), 1);
    assert_eq!(hom_dim(&s1, &p1), 0);
    for f in hom_basis(&p1, &p1) {
        assert!(f.intertwines());
    }
    assert_eq!(hom_dim(&p1, &p1), 1);
}

#[test]
fn kernels_and_cokernels() {
    let a = ka2();
    let p1 = projective(&a, 0);
    let id = ModuleMap::identity(&p1);
    assert!(kernel(&id).0.is_zero() && cokernel(&id).0.is_zero());
    let s1 = simple(&a, 0);
    let z = ModuleMap::zero(&p1, &s1);
    assert_eq!(kernel(&z).0, p1);
    assert!(is_isomorphic(&cokernel(&z).0, &s1));
    let s2 = simple(&a, 1);
    let inc = hom_basis(&s2, &p1).remove(0);
    assert!(inc.is_injective());
    let (c, proj) = cokernel(&inc);
    assert!(is_isomorphic(&c, &s1));
    assert!(proj.compose(&inc).is_zero());
    let (k, incl) = kernel(&proj);
    assert!(proj.compose(&incl).is_zero());
    assert!(is_isomorphic(&k, &s2));
}

#[test]
fn radical_socle_top() {
    let a = ka3();
    for v in 0..3 {
        let s = simple(&a, v);
        assert!(radical(&s).0.is_zero());
        assert_eq!(socle(&s).0, s);
        assert_eq!(top(&s).0, s);
    }
    let r2 = family::<Q>("radsquare_a:2");
    let p1 = projective(&r2, 0);
    assert!(is_isomorphic(&socle(&p1).0, &simple(&r2, 1)));
    assert!(is_isomorphic(&top(&p1).0, &simple(&r2, 0)));
    for i in 0..3 {
        let p = projective(&r2, i);
        assert_eq!(radical(&p).0.total_dim(), p.total_dim() - 1);
    }
}

#[test]
fn covers_and_envelopes() {
    let a = ka2();
    let lam = Representation::regular(&a);
    let cover = projective_cover(&lam);
    assert!(cover.map.is_isomorphism());
    let env = injective_envelope(&lam);
    assert_eq!(env.vertices, vec![1, 1]);
    assert!(env.map.is_injective());
    assert!(is_isomorphic(&cokernel(&env.map).0, &injective(&a, 0)));
    let r2 = family::<Q>("radsquare_a:2");
    let env = injective_envelope(&Representation::regular(&r2));
    assert_eq!(env.vertices, vec![1, 2, 2]);
    let m = simple(&r2, 1).direct_sum(&projective(&r2, 0));
    let cover = projective_cover(&m);
    assert!(cover.map.is_surjective());
    assert_eq!(cover.vertices, vec![0, 1]);
}

#[test]
fn decompositions() {
    let a = ka2();
    let (p1, s2) = (projective(&a, 0), simple(&a, 1));
    let m = Representation::direct_sum_all(&a, &[p1.clone(), s2.clone(), p1.clone()]);
    let d = decompose(&m).unwrap();
    assert_eq!(d.num_classes(), 2);
    assert_eq!(d.summands.iter().map(|(x, k)| (x.dims().to_vec(), *k)).collect::<Vec<_>>(), vec![
        (vec![0, 1], 1),
        (vec![1, 1], 2)
    ]);
    let r2 = family::<Q>("radsquare_a:2");
    let d = decompose(&Representation::regular(&r2)).unwrap();
    assert_eq!(d.num_classes(), 3);
    assert!(d.summands.iter().all(|(_, k)| *k == 1));
    let b = ka3();
    for i in 0..3 {
        for j in i..3 {
            let x = interval(&b, i, j);
            assert!(is_local(&x).unwrap());
            let d = decompose(&x).unwrap();
            assert_eq!((d.num_classes(), d.num_summands()), (1, 1));
        }
    }
}

#[test]
fn decomposition_of_a_scrambled_sum() {
    // conjugate a direct sum by a vertexwise change of basis so that no
    // standard basis endomorphism is an idempotent
    let alg = family::<Q>("auslander_uniserial:3");
    let parts: Vec<_> = (0..3).map(|i| projective(&alg, i)).chain([injective(&alg, 0), simple(&alg, 2)]).collect();
    let m = Representation::direct_sum_all(&alg, &parts);
    let g: Vec<Matrix<Q>> = m
        .dims()
        .iter()
        .map(|&d| Matrix::from_fn(d, d, |r, c| Q::from_i64(if r <= c { 1 + (r * 3 + c) as i64 % 4 } else { 0 })))
        .collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, ar)| g[ar.target].mul(m.arrow_map(k)).mul(&g[ar.source].inverse().unwrap()))
        .collect();
    let scrambled = Representation::new(&alg, m.dims().to_vec(), maps).unwrap();
    let d = decompose(&scrambled).unwrap();
    let expect = decompose(&m).unwrap();
    assert_eq!(d.dimvec_multiset(), expect.dimvec_multiset());
    assert!(is_isomorphic(&scrambled, &m));
    assert!(is_isomorphic(&d.basic(&scrambled), &expect.basic(&m)));
}

#[test]
fn isomorphism_tests() {
    let a = ka3();
    let m = interval(&a, 0, 1).direct_sum(&simple(&a, 2));
    assert!(is_isomorphic(&m, &m));
    assert!(!is_isomorphic(&simple(&a, 0), &simple(&a, 1)));
    // same dimension vector, not isomorphic
    let x = interval(&a, 0, 1);
    let y = simple(&a, 0).direct_sum(&simple(&a, 1));
    assert!(!is_isomorphic(&x, &y));
    let f = find_isomorphism(&m, &m).unwrap();
    assert!(f.is_isomorphism() && f.intertwines());
}

#[test]
fn faithfulness() {
    let a = ka2();
    assert!(is_faithful(&Representation::regular(&a)));
    assert!(!is_faithful(&simple(&a, 1)));
    assert!(is_faithful(&Representation::dual_regular(&a)));
}

#[test]
fn json_round_trip() {
    let alg = family::<Q>("preprojective_a:3");
    let m = projective(&alg, 1);
    let back = Representation::from_json(&alg, &m.to_json()).unwrap();
    assert_eq!(back, m);
}

#[test]
fn prime_field_agrees_on_small_examples() {
    let alg = family::<Fp31>("auslander_uniserial:3");
    let lam = Representation::regular(&alg);
    assert_eq!(decompose(&lam).unwrap().num_classes(), 3);
    assert!(is_isomorphic(&projective(&alg, 2), &injective(&alg, 2)));
}

#[test]
fn random_modules_are_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for id in ["radsquare_a:3", "auslander_uniserial:3", "preprojective_a:3", "auslander_nakayama:2"] {
        let alg = family::<Q>(id);
        for _ in 0..8 {
            let m = random::random_module(&alg, &mut rng);
            assert!(m.satisfies_relations());
            for i in 0..alg.num_vertices() {
                assert_eq!(hom_dim(&projective(&alg, i), &m), m.dim_at(i));
                assert_eq!(hom_dim(&m, &injective(&alg, i)), m.dim_at(i));
            }
        }
    }
}
