//! Property tests over randomly drawn types, coweights and words.

use proptest::prelude::*;

use satcomb::cartan::parse_type_string;
use satcomb::{check, minimal, paths, tables, weights, weyl, RootDatum};

const TYPE_POOL: &[&str] =
    &["A1:sc", "A1:adj", "A2:sc", "A2:adj", "B2:sc", "B2:adj", "G2:sc", "A1xA1:adj"];

fn datum_strategy() -> impl Strategy<Value = RootDatum> {
    (0..TYPE_POOL.len()).prop_map(|i| {
        let (t, iso) = parse_type_string(TYPE_POOL[i]).unwrap();
        RootDatum::build(t, iso).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn act_preserves_form_and_orbit_norms(d in datum_strategy(), seed in prop::collection::vec(-3i64..=3, 8), letters in prop::collection::vec(0usize..8, 0..8)) {
        let coords: Vec<i64> = seed.into_iter().take(d.rank()).collect();
        prop_assume!(coords.len() == d.rank());
        let nu = d.coweight(&coords).unwrap();
        let word = weyl::WeylWord::new(letters.into_iter().map(|i| i % d.rank()).collect());
        let moved = weyl::act(&d, &word, &nu);
        prop_assert_eq!(d.norm2(&moved), d.norm2(&nu));
        prop_assert_eq!(d.rho_pair2(&nu).rem_euclid(2), d.rho_pair2(&moved).rem_euclid(2));
    }

    #[test]
    fn dominant_representative_is_dominant_and_idempotent(d in datum_strategy(), seed in prop::collection::vec(-3i64..=3, 8)) {
        let coords: Vec<i64> = seed.into_iter().take(d.rank()).collect();
        prop_assume!(coords.len() == d.rank());
        let nu = d.coweight(&coords).unwrap();
        let (rep, word) = weyl::dominant_representative(&d, &nu);
        prop_assert!(weyl::is_dominant(&d, &rep));
        prop_assert_eq!(&weyl::act(&d, &word, &nu), &rep);
        let (rep2, word2) = weyl::dominant_representative(&d, &rep);
        prop_assert_eq!(&rep2, &rep);
        prop_assert!(word2.is_empty());
        // the representative dominates every element of its orbit
        prop_assert!(weights::dominance_leq(&d, &nu, &rep));
    }

    #[test]
    fn orbit_size_times_stabilizer_is_group_order(d in datum_strategy(), seed in prop::collection::vec(0i64..=2, 8)) {
        let coords: Vec<i64> = seed.into_iter().take(d.rank()).collect();
        prop_assume!(coords.len() == d.rank());
        let nu = d.coweight(&coords).unwrap();
        let orbit = weyl::orbit(&d, &nu);
        prop_assert_eq!(orbit.len() as u128 * weyl::stabilizer_order(&d, &nu), d.weyl_order());
    }

    #[test]
    fn dominance_is_a_partial_order(d in datum_strategy(), a in prop::collection::vec(-2i64..=2, 8), b in prop::collection::vec(-2i64..=2, 8)) {
        let a: Vec<i64> = a.into_iter().take(d.rank()).collect();
        let b: Vec<i64> = b.into_iter().take(d.rank()).collect();
        prop_assume!(a.len() == d.rank() && b.len() == d.rank());
        let x = d.coweight(&a).unwrap();
        let y = d.coweight(&b).unwrap();
        prop_assert!(weights::dominance_leq(&d, &x, &x));
        if weights::dominance_leq(&d, &x, &y) && weights::dominance_leq(&d, &y, &x) {
            prop_assert_eq!(&x, &y);
        }
    }

    #[test]
    fn tensor_dimension_conserved_on_random_pairs(d in datum_strategy(), i in 0usize..4, j in 0usize..4) {
        let m = minimal::minimal_elements(&d);
        let mu = m[i % m.len()].0.clone();
        let nu = m[j % m.len()].0.clone();
        let seq = vec![mu, nu];
        prop_assert!(check::path_tensor_agrees(&d, &seq).unwrap());
        let tensor = paths::iterated_tensor(&d, &seq).unwrap();
        let product: u64 = seq
            .iter()
            .map(|m| weights::weyl_dimension(&d, m).unwrap())
            .product();
        prop_assert_eq!(tensor.total_dimension(&d).unwrap(), product);
    }

    #[test]
    fn kostka_at_one_matches_multiplicity(d in datum_strategy(), i in 0usize..16, j in 0usize..16) {
        let shell = tables::dominant_shell(&d, 6);
        let lambda = shell[i % shell.len()].clone();
        let mu = shell[j % shell.len()].clone();
        let k = tables::kostka_foulkes(&d, &lambda, &mu).unwrap();
        let m = weights::weight_multiplicity(&d, &lambda, &mu).unwrap();
        prop_assert_eq!(k.eval_at_one(), m as i64);
        prop_assert!(k.coeffs().iter().all(|&c| c >= 0));
    }

    #[test]
    fn enumerated_dominant_paths_match_counts(d in datum_strategy(), i in 0usize..4, j in 0usize..4) {
        let m = minimal::minimal_elements(&d);
        let seq = vec![m[i % m.len()].0.clone(), m[j % m.len()].0.clone()];
        for (target, count) in paths::count_dominant_paths_all(&d, &seq).unwrap() {
            let listed = paths::enumerate_paths(&d, &seq, &target, true).unwrap();
            prop_assert_eq!(listed.len() as u64, count);
            for p in &listed {
                prop_assert!(paths::is_dominant_path(&d, p));
                prop_assert_eq!(p.endpoint(), &target);
            }
        }
    }

    #[test]
    fn weight_diagram_is_weyl_invariant(d in datum_strategy(), i in 0usize..8) {
        let shell = tables::dominant_shell(&d, 6);
        let lambda = shell[i % shell.len()].clone();
        let diagram = weights::weight_diagram(&d, &lambda).unwrap();
        for (nu, mult) in diagram.full_entries(&d) {
            for k in 0..d.rank() {
                prop_assert_eq!(diagram.multiplicity(&d, &d.simple_reflect(k, &nu)), mult);
            }
        }
        prop_assert_eq!(diagram.multiplicity(&d, &lambda), 1);
    }
}

#[test]
fn coset_classes_are_a_group_partition() {
    for t in TYPE_POOL {
        let (ty, iso) = parse_type_string(t).unwrap();
        let d = RootDatum::build(ty, iso).unwrap();
        let classes = check::coset_classes(&d);
        // zero class present, and class of a sum is determined by summands
        let zero = check::coset_class(&d, &d.zero_coweight());
        assert!(classes.contains(&zero));
        let e1 = d.coweight(&vec![1i64; d.rank()]).unwrap();
        assert!(classes.contains(&check::coset_class(&d, &e1)));
    }
}

#[test]
fn enumerate_all_includes_non_dominant_paths() {
    let (ty, iso) = parse_type_string("A1:sc").unwrap();
    let d = RootDatum::build(ty, iso).unwrap();
    let a = d.coweight(&[1]).unwrap();
    let seq = vec![a.clone(), a.clone()];
    let zero = d.zero_coweight();
    let all = paths::enumerate_paths(&d, &seq, &zero, false).unwrap();
    let dominant = paths::enumerate_paths(&d, &seq, &zero, true).unwrap();
    assert_eq!(all.len(), 3);
    assert_eq!(dominant.len(), 1);
    assert!(dominant.iter().all(|p| paths::is_dominant_path(&d, p)));
    assert_eq!(all.iter().filter(|p| paths::is_dominant_path(&d, p)).count(), 1);
}
