mod common;

use proptest::prelude::*;
use tilting::exactlin::{Field, Rational};
use tilting::quiver_algebra::quotient_by_idempotent;
use tilting::repmod::{generated_by_vertices, total_dim, Representation};

use common::family;

const FAMILIES: [&str; 9] = [
    "nakayama_a:4",
    "radsquare_a:3",
    "auslander_uniserial:2",
    "auslander_uniserial:3",
    "auslander_uniserial:4",
    "preprojective_a:2",
    "preprojective_a:3",
    "auslander_nakayama:2",
    "auslander_nakayama:3",
];

fn unit(len: usize, i: usize) -> Vec<Rational> {
    (0..len).map(|j| if j == i { Rational::one() } else { Rational::zero() }).collect()
}

#[test]
fn dimension_splits_over_vertices() {
    for id in FAMILIES {
        let alg = family::<Rational>(id);
        let nv = alg.num_vertices();
        let left: usize = (0..nv).map(|v| Representation::projective(&alg, v).total_dim()).sum();
        let right: usize = (0..nv).map(|v| Representation::injective(&alg, v).total_dim()).sum();
        assert_eq!(left, alg.dim(), "{id}");
        assert_eq!(right, alg.dim(), "{id}");
        let sum: Vec<Rational> = (0..nv).fold(vec![Rational::zero(); alg.dim()], |acc, v| {
            acc.iter().zip(alg.idempotent(v)).map(|(a, b)| a.plus(&b)).collect()
        });
        assert_eq!(sum, alg.one(), "{id}");
    }
}

#[test]
fn radical_square_zero_dimension() {
    for n in 1..=5 {
        let alg = family::<Rational>(&format!("radsquare_a:{n}"));
        assert_eq!(alg.dim(), alg.num_vertices() + alg.num_arrows());
    }
}

#[test]
fn factor_algebra_dimensions() {
    for id in FAMILIES {
        let alg = family::<Rational>(id);
        let a = Representation::regular(&alg);
        for v in 0..alg.num_vertices() {
            let removed = [v];
            let gamma = quotient_by_idempotent(&alg, &removed).unwrap();
            let ideal = total_dim(&generated_by_vertices(&a, &removed));
            assert_eq!(gamma.dim(), alg.dim() - ideal, "{id} without vertex {v}");
        }
    }
    // with monomial relations the surviving basis paths are those avoiding the removed vertices
    for id in ["nakayama_a:4", "radsquare_a:3"] {
        let alg = family::<Rational>(id);
        for v in 0..alg.num_vertices() {
            let gamma = quotient_by_idempotent(&alg, &[v]).unwrap();
            let avoiding = alg
                .basis()
                .iter()
                .filter(|p| {
                    let mut at = p.source;
                    let mut ok = at != v;
                    for &a in &p.arrows {
                        at = alg.quiver().arrow(a).target;
                        ok &= at != v;
                    }
                    ok
                })
                .count();
            assert_eq!(gamma.dim(), avoiding, "{id} without vertex {v}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn multiplication_is_associative(f in 0..FAMILIES.len(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let alg = family::<Rational>(FAMILIES[f]);
        let d = alg.dim();
        let (x, y, z) = (unit(d, i.index(d)), unit(d, j.index(d)), unit(d, k.index(d)));
        let xy_z = alg.multiply(&alg.multiply(&x, &y), &z);
        let x_yz = alg.multiply(&x, &alg.multiply(&y, &z));
        prop_assert_eq!(xy_z, x_yz);
    }

    #[test]
    fn one_is_a_unit(f in 0..FAMILIES.len(), i in any::<prop::sample::Index>()) {
        let alg = family::<Rational>(FAMILIES[f]);
        let x = unit(alg.dim(), i.index(alg.dim()));
        prop_assert_eq!(alg.multiply(&alg.one(), &x), x.clone());
        prop_assert_eq!(alg.multiply(&x, &alg.one()), x);
    }
}
