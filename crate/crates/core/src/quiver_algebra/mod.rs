//! Bound quiver algebras `KQ/I` with a normal-form path basis.
//!
//! Paths compose left to right: for `a: i -> j` and `b: j -> k` the path
//! "a then b" is written `a*b`.

mod algebra;
mod quiver;

pub use algebra::{
    build_algebra, multiply, opposite_algebra, quotient_by_idempotent, BoundQuiverAlgebra, Sparse,
    DEFAULT_CAP,
};
pub use quiver::{Arrow, Path, Quiver, RelationDisplay, RelationExpr};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{Field, Rational};

    type Q = Rational;

    fn linear(n: usize, rad_square: bool) -> BoundQuiverAlgebra<Q> {
        let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows: Vec<(String, String, String)> =
            (1..n).map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string())).collect();
        let q = Quiver::new(&vs, &arrows).unwrap();
        let rels: Vec<RelationExpr> = if rad_square {
            (1..n.saturating_sub(1))
                .map(|i| {
                    RelationExpr::parse_terms(&q, &[(1, format!("a{}*a{}", i, i + 1).as_str())]).unwrap()
                })
                .collect()
        } else {
            Vec::new()
        };
        build_algebra(&q, &rels, DEFAULT_CAP).unwrap()
    }

    fn auslander_x2() -> BoundQuiverAlgebra<Q> {
        let q = Quiver::new(&["1", "2"], &[("a1", "1", "2"), ("b2", "2", "1")]).unwrap();
        let r = RelationExpr::parse_terms(&q, &[(1, "a1*b2")]).unwrap();
        build_algebra(&q, &[r], DEFAULT_CAP).unwrap()
    }

    fn labels(alg: &BoundQuiverAlgebra<Q>) -> Vec<String> {
        let mut l: Vec<String> = (0..alg.dim()).map(|i| alg.basis_label(i)).collect();
        l.sort();
        l
    }

    fn element(alg: &BoundQuiverAlgebra<Q>, label: &str) -> Vec<Q> {
        let i = (0..alg.dim()).find(|&i| alg.basis_label(i) == label).unwrap();
        let mut x = vec![Q::zero(); alg.dim()];
        x[i] = Q::one();
        x
    }

    #[test]
    fn radical_square_three_vertices() {
        let alg = linear(3, true);
        assert_eq!(alg.dim(), 5);
        assert_eq!(alg.loewy_bound(), 2);
        assert_eq!(labels(&alg), ["a1", "a2", "e1", "e2", "e3"]);
        let prod = alg.multiply(&element(&alg, "a1"), &element(&alg, "a2"));
        assert!(prod.iter().all(Q::is_zero));
    }

    #[test]
    fn single_vertex() {
        let q = Quiver::new(&["1"], &[] as &[(&str, &str, &str)]).unwrap();
        let alg: BoundQuiverAlgebra<Q> = build_algebra(&q, &[], DEFAULT_CAP).unwrap();
        assert_eq!(alg.dim(), 1);
        assert_eq!(labels(&alg), ["e1"]);
        let e = element(&alg, "e1");
        assert_eq!(alg.multiply(&e, &e), e);
    }

    #[test]
    fn auslander_of_dual_numbers() {
        let alg = auslander_x2();
        assert_eq!(alg.dim(), 5);
        assert_eq!(labels(&alg), ["a1", "b2", "b2*a1", "e1", "e2"]);
        let ab = alg.multiply(&element(&alg, "a1"), &element(&alg, "b2"));
        assert!(ab.iter().all(Q::is_zero));
        let ba = alg.multiply(&element(&alg, "b2"), &element(&alg, "a1"));
        assert_eq!(ba, element(&alg, "b2*a1"));
    }

    #[test]
    fn idempotents_orthogonal_and_sum_to_one() {
        let alg = auslander_x2();
        let e: Vec<Vec<Q>> = (0..2).map(|v| alg.idempotent(v)).collect();
        for i in 0..2 {
            for j in 0..2 {
                let p = alg.multiply(&e[i], &e[j]);
                if i == j {
                    assert_eq!(p, e[i]);
                } else {
                    assert!(p.iter().all(Q::is_zero));
                }
            }
        }
        let x = element(&alg, "b2*a1");
        assert_eq!(alg.multiply(&alg.one(), &x), x);
        assert_eq!(alg.multiply(&x, &alg.one()), x);
    }

    #[test]
    fn opposite_reverses_and_is_involutive() {
        let alg = linear(2, false);
        let op = alg.opposite();
        assert_eq!(op.dim(), 3);
        let a = op.quiver().arrow(0);
        assert_eq!((a.source, a.target), (1, 0));
        assert_eq!(op.opposite(), alg);
        for s in 0..2 {
            for t in 0..2 {
                assert_eq!(op.block_dim(s, t), alg.block_dim(t, s));
            }
        }
        // multiplication in the opposite algebra is reversed
        let alg = auslander_x2();
        let op = alg.opposite();
        let (a, b) = (element(&alg, "a1"), element(&alg, "b2"));
        assert_eq!(op.multiply(&a, &b), alg.multiply(&b, &a));
    }

    #[test]
    fn non_uniform_or_non_admissible_input_is_rejected() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let r = RelationExpr::parse_terms(&q, &[(1, "a*b"), (1, "b*a")]).unwrap();
        assert!(matches!(
            build_algebra::<Q>(&q, &[r], DEFAULT_CAP),
            Err(crate::error::Error::IllFormedRelation(_))
        ));
        assert!(matches!(
            build_algebra::<Q>(&q, &[], 8),
            Err(crate::error::Error::NotAdmissible { .. })
        ));
    }

    #[test]
    fn quotient_of_linear_a3() {
        let alg = linear(3, false);
        let g = quotient_by_idempotent(&alg, &[2]).unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(g.num_vertices(), 2);
        assert!(matches!(quotient_by_idempotent(&alg, &[0, 1, 2]), Err(crate::error::Error::EmptyQuotient)));
    }

    #[test]
    fn non_homogeneous_relation() {
        // loop x with x^2 = x^3 and x^3 = 0 gives K[x]/(x^2)
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let r1 = RelationExpr::parse_terms(&q, &[(1, "x*x"), (-1, "x*x*x")]).unwrap();
        let r2 = RelationExpr::parse_terms(&q, &[(1, "x*x*x")]).unwrap();
        let alg: BoundQuiverAlgebra<Q> = build_algebra(&q, &[r1, r2], DEFAULT_CAP).unwrap();
        assert_eq!(alg.dim(), 2);
    }
}
