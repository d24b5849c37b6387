use super::*;
use crate::cli::{parse_spec, FamilyId};
use crate::exactlin::{Field, Rational};
use crate::gorenstein::minimal_tilting;
use crate::quiver_algebra::BoundQuiverAlgebra;
use crate::repmod::{injective, is_isomorphic, projective, simple, BasicModule, Representation};

type Q = Rational;

fn build(text: &str) -> BoundQuiverAlgebra<Q> {
    parse_spec(text).unwrap().build().unwrap()
}

/// `1 -> 2`.
fn ka2() -> BoundQuiverAlgebra<Q> {
    build("vertex 1\nvertex 2\narrow a: 1 -> 2\n")
}

fn family<F: Field>(id: &str) -> BoundQuiverAlgebra<F> {
    id.parse::<FamilyId>().unwrap().spec().build().unwrap()
}

fn basic(alg: &BoundQuiverAlgebra<Q>, parts: Vec<Representation<Q>>) -> BasicModule<Q> {
    BasicModule::from_indecomposables(alg, parts)
}

fn sorted(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    v.sort();
    v
}

#[test]
fn tau_rigidity() {
    let a = ka2();
    assert!(is_tau_rigid(&projective(&a, 0)));
    assert!(is_tau_rigid(&simple(&a, 0)));
    assert!(is_tau_rigid(&Representation::regular(&a)));
    let d = build("vertex 1\narrow x: 1 -> 1\nrelation x*x\n");
    assert!(!is_tau_rigid(&simple(&d, 0)));
    assert!(is_tau_rigid(&projective(&d, 0)));
}

#[test]
fn mutation_over_a2() {
    let a = ka2();
    let top = SupportTauTiltingPair::regular(&a);
    assert!(top.satisfies_invariants());
    let at_p1 = top.m.position(&projective(&a, 0)).unwrap();
    let at_p2 = top.m.position(&projective(&a, 1)).unwrap();
    let r = mutate_sttilt(&top, at_p1).unwrap();
    assert!(r.satisfies_invariants());
    assert_eq!(r.p, vec![0]);
    assert_eq!(r.m.len(), 1);
    assert!(r.m.contains(&simple(&a, 1)));
    let r = mutate_sttilt(&top, at_p2).unwrap();
    assert!(r.p.is_empty());
    assert!(r.m.same_as(&basic(&a, vec![projective(&a, 0), simple(&a, 0)])));
    // mutating back at the new summand
    let k = r.m.position(&simple(&a, 0)).unwrap();
    assert!(mutate_sttilt(&r, k).unwrap().same_as(&top));
    assert!(matches!(mutate_sttilt(&top, 2), Err(crate::Error::MalformedIndex { index: 2, len: 2 })));
}

#[test]
fn mutation_is_an_involution_on_a3() {
    let alg = family::<Q>("nakayama_a:3");
    let g = sttilt_enumerate(&alg, 100).unwrap();
    assert!(g.complete);
    let pairs: Vec<_> = (0..g.len()).map(|i| g.pair(i)).collect();
    for pair in &pairs {
        assert!(pair.satisfies_invariants());
        for k in 0..pair.len() {
            let mu = mutate_sttilt(pair, k).unwrap();
            assert!(mu.satisfies_invariants());
            assert!(!mu.same_as(pair));
            assert!(pairs.iter().any(|q| q.same_as(&mu)));
            let back = (0..mu.len()).filter_map(|j| mutate_sttilt(&mu, j).ok()).filter(|b| b.same_as(pair)).count();
            assert_eq!(back, 1, "{:?} at {k}", pair.m.dimvecs());
        }
    }
}

#[test]
fn sttilt_counts_follow_catalan_numbers() {
    for (n, count) in [(1, 2), (2, 5), (3, 14)] {
        let g = sttilt_enumerate(&family::<Q>(&format!("nakayama_a:{n}")), DEFAULT_BUDGET).unwrap();
        assert!(g.complete);
        assert_eq!(g.len(), count, "n = {n}");
        assert!(g.order_is_partial());
    }
}

#[test]
fn sttilt_over_a2_lists_five_pairs() {
    let alg = family::<Q>("nakayama_a:2");
    let g = sttilt_enumerate(&alg, DEFAULT_BUDGET).unwrap().canonicalize();
    // vertex 2 is the source: P'(2) = (1,1)
    let ms: Vec<Vec<Vec<usize>>> = (0..g.len()).map(|i| g.dimvecs(i)).collect();
    assert_eq!(ms, vec![
        vec![],
        vec![vec![0, 1]],
        vec![vec![0, 1], vec![1, 1]],
        vec![vec![1, 0]],
        vec![vec![1, 0], vec![1, 1]],
    ]);
    for i in 0..g.len() {
        assert!(g.pair(i).satisfies_invariants());
    }
}

#[test]
fn sttilt_of_preprojective_algebras() {
    let g = sttilt_enumerate(&family::<Q>("preprojective_a:2"), DEFAULT_BUDGET).unwrap();
    assert!(g.complete);
    assert_eq!(g.len(), 6);
    let g = sttilt_enumerate(&family::<Q>("preprojective_a:1"), DEFAULT_BUDGET).unwrap();
    assert_eq!(g.len(), 2);
}

#[test]
fn exploration_order_does_not_matter() {
    for id in ["nakayama_a:3", "preprojective_a:2", "auslander_uniserial:2"] {
        let alg = family::<Q>(id);
        let bfs = sttilt_enumerate(&alg, DEFAULT_BUDGET).unwrap();
        for seed in [1, 2] {
            let other = sttilt_enumerate_with(&alg, SearchOptions { budget: DEFAULT_BUDGET, seed: Some(seed) }).unwrap();
            assert!(other.complete && bfs.same_nodes(&other), "{id}, seed {seed}");
        }
    }
}

#[test]
fn budget_is_reported() {
    let g = sttilt_enumerate(&family::<Q>("nakayama_a:3"), 4).unwrap();
    assert!(!g.complete);
    assert_eq!(g.len(), 4);
    assert!(sttilt_enumerate(&family::<Q>("nakayama_a:3"), 14).unwrap().complete);
}

/// The five classical tilting modules over `3 -> 2 -> 1`, in vertex order 1, 2, 3.
fn a3_tilting_dimvecs() -> Vec<Vec<Vec<usize>>> {
    let mut all = vec![
        sorted(vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]]),
        sorted(vec![vec![1, 1, 1], vec![1, 1, 0], vec![0, 1, 0]]),
        sorted(vec![vec![1, 1, 1], vec![1, 0, 0], vec![0, 0, 1]]),
        sorted(vec![vec![1, 1, 1], vec![0, 1, 0], vec![0, 1, 1]]),
        sorted(vec![vec![1, 1, 1], vec![0, 0, 1], vec![0, 1, 1]]),
    ];
    all.sort();
    all
}

#[test]
fn classical_tilting_over_a3() {
    let alg = family::<Q>("nakayama_a:3");
    let t = tilt1_enumerate(&alg, DEFAULT_BUDGET).unwrap();
    assert!(t.complete);
    let got: Vec<_> = t.records.iter().map(|r| r.summands()).collect();
    assert_eq!(got, a3_tilting_dimvecs());
    let g = tiltn_enumerate(&alg, 1, DEFAULT_BUDGET).unwrap().canonicalize();
    assert_eq!((0..g.len()).map(|i| g.dimvecs(i)).collect::<Vec<_>>(), a3_tilting_dimvecs());
    assert!(g.order_is_partial());
    // A is the maximum and D A the minimum
    let lam = g.nodes.iter().position(|n| n.pd == Some(0)).unwrap();
    assert!((0..g.len()).all(|u| u == lam || g.order.contains(&(lam, u))));
    let min = g.minimum().unwrap();
    assert!(is_isomorphic(&g.basic(min).module(), &Representation::dual_regular(&alg)));
    assert!(g.to_dot().contains("style=dashed"));
    assert_eq!(g.to_json()["count"], 5);
}

#[test]
fn classical_tilting_over_auslander_algebras() {
    for (n, count) in [(2, 2), (3, 6)] {
        let alg = family::<Q>(&format!("auslander_uniserial:{n}"));
        let t = tilt1_enumerate(&alg, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.records.len(), count);
        let pi = projective_injective_vertices(&alg);
        for r in &t.records {
            assert_eq!(r.module.len(), n);
            for &v in &pi {
                assert!(r.module.contains(&projective(&alg, v)));
            }
        }
    }
}

#[test]
fn tilting_mutation() {
    let a = ka2();
    let lam = basic(&a, vec![projective(&a, 0), projective(&a, 1)]);
    let k = lam.position(&projective(&a, 1)).unwrap();
    let v = mutate_tilting(&lam, k, 1).unwrap().unwrap();
    assert!(v.module.same_as(&basic(&a, vec![projective(&a, 0), simple(&a, 0)])));
    assert!(tilting_order_geq(&lam, &v.module) && !tilting_order_geq(&v.module, &lam));
    assert!(mutate_tilting(&lam, k, 0).unwrap().is_none());
    // P(1) is projective-injective, so it is never exchanged
    let k = lam.position(&projective(&a, 0)).unwrap();
    assert!(mutate_tilting(&lam, k, 1).unwrap().is_none());

    let r2 = family::<Q>("radsquare_a:2");
    let lam = basic(&r2, (0..3).map(|i| projective(&r2, i)).collect());
    let k = lam.position(&simple(&r2, 2)).unwrap();
    let t1 = mutate_tilting(&lam, k, 1).unwrap().unwrap();
    assert!(t1.module.same_as(&basic(&r2, vec![injective(&r2, 1), injective(&r2, 2), simple(&r2, 1)])));
    assert_eq!(t1.pd, 1);
}

#[test]
fn minimality() {
    let a = ka2();
    let lam = basic(&a, vec![projective(&a, 0), projective(&a, 1)]);
    assert!(is_minimal_in_tiltn(&lam, 0).unwrap());
    assert!(!is_minimal_in_tiltn(&lam, 1).unwrap());
    for n in [2, 3] {
        let alg = family::<Q>(&format!("radsquare_a:{n}"));
        for j in 0..=n {
            let t = minimal_tilting(&alg, j, false).unwrap();
            assert!(is_minimal_in_tiltn(&t, j).unwrap(), "radsquare_a:{n}, j = {j}");
            if j > 0 {
                assert!(!is_minimal_in_tiltn(&minimal_tilting(&alg, j - 1, false).unwrap(), j).unwrap());
            }
        }
    }
}

#[test]
fn tilting_levels_of_radical_square_zero() {
    let alg = family::<Q>("radsquare_a:2");
    assert_eq!(tiltn_enumerate(&alg, 0, 10).unwrap().len(), 1);
    let t0 = minimal_tilting(&alg, 0, false).unwrap();
    let t1 = minimal_tilting(&alg, 1, false).unwrap();
    let g = tiltn_enumerate(&alg, 1, DEFAULT_BUDGET).unwrap();
    let find = |t: &BasicModule<Q>| (0..g.len()).find(|&i| g.basic(i).same_as(t)).unwrap();
    let (i0, i1) = (find(&t0), find(&t1));
    assert!(g.order.contains(&(i0, i1)));
    assert_eq!(g.minimum(), Some(i1));
    for u in 0..g.len() {
        assert!(tilting_order_geq(&g.basic(u), &t1));
    }
}

#[test]
fn factor_by_projective_injectives() {
    let alg = family::<Q>("nakayama_a:3");
    assert_eq!(projective_injective_vertices(&alg), vec![2]);
    let (p, s, i) = (|v| projective(&alg, v), |v| simple(&alg, v), |v| injective(&alg, v));
    let t = Representation::direct_sum_all(&alg, &[p(2), p(1), s(1)]);
    let image = BasicModule::from_module(&tensor_to_factor(&t, &[2]).unwrap()).unwrap();
    assert_eq!(image.dimvecs(), vec![vec![0, 1], vec![1, 1]]);
    let t = Representation::direct_sum_all(&alg, &[p(2), s(2), i(1)]);
    assert!(tensor_to_factor(&t, &[2]).unwrap().is_zero());
    let lam = tensor_to_factor(&Representation::regular(&alg), &[2]).unwrap();
    assert!(is_isomorphic(&lam, &Representation::regular(lam.algebra())));
}

#[test]
fn bijections() {
    let r = bijection_check(&family::<Q>("nakayama_a:3"), DEFAULT_BUDGET).unwrap();
    assert!(r.is_bijection());
    assert_eq!((r.tilt.len(), r.sttilt.len()), (5, 5));
    let r = bijection_check(&family::<Q>("auslander_uniserial:3"), DEFAULT_BUDGET).unwrap();
    assert!(r.is_bijection(), "{r:?}");
    assert_eq!((r.tilt.len(), r.sttilt.len(), r.factor_dim), (6, 6, 4));
    let r = bijection_check(&family::<Q>("preprojective_a:2"), DEFAULT_BUDGET).unwrap();
    assert!(r.degenerate && r.is_bijection());
    let not_gorenstein = build("vertex 1\nvertex 2\nvertex 3\narrow a: 1 -> 2\narrow b: 3 -> 2\n");
    assert!(matches!(bijection_check(&not_gorenstein, 100), Err(crate::Error::NotOneGorenstein(_))));
}
