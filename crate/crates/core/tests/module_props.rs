mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tilting::exactlin::{Fp, Rational};
use tilting::homalg::{
    ext_dim, ext_dim_injective, min_inj_coresolution, min_proj_resolution, noninjective_part, tau, tau_inverse,
};
use tilting::repmod::random::random_module;
use tilting::repmod::{decompose, is_isomorphic, is_local};

use common::{family, homological_checks};

const FAMILIES: [&str; 8] = [
    "nakayama_a:3",
    "nakayama_a:4",
    "radsquare_a:2",
    "radsquare_a:3",
    "auslander_uniserial:2",
    "auslander_uniserial:3",
    "preprojective_a:2",
    "auslander_nakayama:2",
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn homological_identities(f in 0..FAMILIES.len(), seed in any::<u64>()) {
        let alg = family::<Rational>(FAMILIES[f]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&alg, &mut rng);
        let n = random_module(&alg, &mut rng);
        if let Err(e) = homological_checks(&m, &n, &mut rng) {
            return Err(TestCaseError::fail(format!("{}: {e}", FAMILIES[f])));
        }
    }

    #[test]
    fn identities_over_a_prime_field(f in 0..FAMILIES.len(), seed in any::<u64>()) {
        let alg = family::<Fp<101>>(FAMILIES[f]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&alg, &mut rng);
        let n = random_module(&alg, &mut rng);
        if let Err(e) = homological_checks(&m, &n, &mut rng) {
            return Err(TestCaseError::fail(format!("{}: {e}", FAMILIES[f])));
        }
    }

    #[test]
    fn decomposition_is_stable(f in 0..FAMILIES.len(), seed in any::<u64>()) {
        let alg = family::<Rational>(FAMILIES[f]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&alg, &mut rng);
        let d = decompose(&m).unwrap();
        let mut total = vec![0; alg.num_vertices()];
        for (x, mult) in &d.summands {
            prop_assert!(is_local(x).unwrap());
            for (t, k) in total.iter_mut().zip(x.dims()) {
                *t += k * mult;
            }
        }
        prop_assert_eq!(&total[..], m.dims());
        let again = d.summands.iter().fold(tilting::repmod::Representation::zero(&alg), |acc, (x, k)| acc.direct_sum(&x.power(*k)));
        prop_assert!(is_isomorphic(&again, &m));
        prop_assert_eq!(decompose(&again).unwrap().dimvec_multiset(), d.dimvec_multiset());
    }

    #[test]
    fn resolutions_are_minimal_complexes(f in 0..FAMILIES.len(), seed in any::<u64>()) {
        let alg = family::<Rational>(FAMILIES[f]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&alg, &mut rng);
        for res in [min_proj_resolution(&m, 4), min_inj_coresolution(&m, 4)] {
            prop_assert!(res.composites_vanish());
            prop_assert!(res.is_exact());
            prop_assert!(res.is_minimal());
        }
    }

    #[test]
    fn ext_from_either_side(f in 0..FAMILIES.len(), seed in any::<u64>(), k in 0usize..=3) {
        let alg = family::<Rational>(FAMILIES[f]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&alg, &mut rng);
        let n = random_module(&alg, &mut rng);
        prop_assert_eq!(ext_dim(&m, &n, k), ext_dim_injective(&m, &n, k));
    }

    #[test]
    fn tau_tau_inverse(f in 0..FAMILIES.len(), seed in any::<u64>()) {
        let alg = family::<Rational>(FAMILIES[f]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&alg, &mut rng);
        prop_assert!(is_isomorphic(&tau(&tau_inverse(&m)), &noninjective_part(&m).unwrap()));
    }
}
