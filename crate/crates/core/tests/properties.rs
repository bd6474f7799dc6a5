mod common;

use common::*;
use monomial_crystal::crystal::{fundamental, product_set, DEFAULT_CAP};
use monomial_crystal::hw::{chain_decompose, chain_decompose_doubled, finite_dim_test};
use monomial_crystal::monomial::{decompose, e_tilde, eps_phi, f_tilde, monomial_from_data, weight};
use monomial_crystal::regularity::is_regular;
use monomial_crystal::{Crystal, DynkinDiagram, Monomial, Multiset, MultisetTuple, ParamSet};
use proptest::prelude::*;

fn small_multiset() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 0..6)
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((1usize..=4, -6i64..=6, -3i64..=3), 0..8)
        .prop_map(Monomial::from_exponents)
}

/// A parity-valid parameter list on A3 together with one element of its product.
fn a3_instance() -> impl Strategy<Value = (Vec<(usize, i64)>, usize)> {
    prop::collection::vec((1usize..=3, -2i64..=2), 1..=3).prop_flat_map(|raw| {
        let list: Vec<(usize, i64)> = raw
            .into_iter()
            .map(|(i, c)| (i, if (c + i as i64 - 1).rem_euclid(2) == 0 { c } else { c + 1 }))
            .collect();
        (Just(list), 0usize..10_000)
    })
}

fn a3() -> DynkinDiagram {
    DynkinDiagram::from_name("A3").unwrap()
}

fn params(d: &DynkinDiagram, list: &[(usize, i64)]) -> ParamSet {
    let mut r = MultisetTuple::new();
    for &(i, c) in list {
        r.insert(i, c);
    }
    ParamSet::new(d, r).unwrap()
}

proptest! {
    #[test]
    fn multiset_union_and_difference(a in small_multiset(), b in small_multiset()) {
        let am: Multiset = a.iter().copied().collect();
        let bm: Multiset = b.iter().copied().collect();
        let u = am.union(&bm);
        prop_assert_eq!(u.len(), a.len() + b.len());
        prop_assert!(am.is_subset_of(&u));
        prop_assert_eq!(u.checked_sub(&bm), Some(am.clone()));
        prop_assert_eq!(am.shifted(3).shifted(-3), am);
    }

    #[test]
    fn monomial_text_round_trip(p in monomial()) {
        let back: Monomial = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn multiset_tuple_text_round_trip(entries in prop::collection::vec((1usize..=5, -6i64..=6), 0..8)) {
        let mut t = MultisetTuple::new();
        for (i, k) in entries {
            t.insert(i, k);
        }
        let back: MultisetTuple = t.to_string().parse().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn monomial_group_laws(p in monomial(), q in monomial()) {
        prop_assert!(p.mul(&p.inverse()).is_one());
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.pow(2), p.mul(&p));
    }

    #[test]
    fn string_data_matches_reference(p in monomial(), i in 1usize..=4) {
        let sig = eps_phi(&p, i);
        let (eps, phi, k_eps, k_phi) = string_data(&from_lib(&p), i);
        prop_assert_eq!((sig.eps, sig.phi, sig.k_eps, sig.k_phi), (eps, phi, k_eps, k_phi));
    }

    #[test]
    fn operators_are_partial_inverses(raw in monomial(), i in 1usize..=4) {
        let d = DynkinDiagram::from_name("D4").unwrap();
        // operators are only defined on parity-valid monomials
        let p = Monomial::from_exponents(raw.iter().map(|(n, k, e)| (n, 2 * k + d.parity(n), e)));
        if let Some(q) = f_tilde(&d, &p, i) {
            prop_assert_eq!(e_tilde(&d, &q, i), Some(p.clone()));
        }
        if let Some(q) = e_tilde(&d, &p, i) {
            prop_assert_eq!(f_tilde(&d, &q, i), Some(p.clone()));
        }
    }

    #[test]
    fn product_elements_decompose_and_are_regular((list, pick) in a3_instance()) {
        let d = a3();
        let r = params(&d, &list);
        let set = product_set(&d, &r, DEFAULT_CAP).unwrap();
        let p = set.iter().nth(pick % set.len()).unwrap();
        let s = decompose(&d, r.multisets(), p).unwrap();
        prop_assert_eq!(&monomial_from_data(&d, r.multisets(), &s), p);
        prop_assert!(is_regular(&d, &r, &s).unwrap().is_regular());
        prop_assert_eq!(weight(&d, p).0, common::weight(3, &from_lib(p)));
    }

    #[test]
    fn highest_weight_data_has_polynomials((list, pick) in a3_instance()) {
        let d = a3();
        let r = params(&d, &list);
        let set = product_set(&d, &r, DEFAULT_CAP).unwrap();
        let p = set.iter().nth(pick % set.len()).unwrap();
        let s = decompose(&d, r.multisets(), p).unwrap();
        let hw = d.nodes().all(|i| eps_phi(p, i).eps == 0);
        let test = finite_dim_test(&d, &r, &s).unwrap();
        prop_assert_eq!(test.finite, hw);
        prop_assert_eq!(test.polys.is_some(), hw);
    }

    #[test]
    fn translation_commutes_with_generation(i in 1usize..=3, c in -2i64..=2, shift in -3i64..=3) {
        let d = a3();
        let c = 2 * c + d.parity(i);
        let base = fundamental(&d, i, c).unwrap();
        let moved = fundamental(&d, i, c + 2 * shift).unwrap();
        let shifted: Vec<Monomial> = base.elements().iter().map(|p| p.shifted(2 * shift)).collect();
        let again = Crystal::from_closed_set(&d, shifted).unwrap();
        prop_assert_eq!(again.elements(), moved.elements());
    }

    #[test]
    fn chain_decomposition_identity(
        pairs in prop::collection::vec((-8i64..=8, 0i64..=5), 0..6)
    ) {
        let b: Vec<i64> = pairs.iter().map(|&(x, _)| x).collect();
        let a: Vec<i64> = pairs.iter().map(|&(x, g)| x + g).collect();
        let am: Multiset = a.iter().copied().collect();
        let bm: Multiset = b.iter().copied().collect();
        let p = chain_decompose(&am, &bm).unwrap().expect("dominating pair");
        let roots: Vec<i64> = p.doubled_roots().values().iter().map(|r| r / 2).collect();
        let pu = poly_from_roots(&roots);
        prop_assert_eq!(
            poly_mul(&poly_from_roots(&b), &pu),
            poly_mul(&poly_shift_one(&pu), &poly_from_roots(&a))
        );
        prop_assert_eq!(p.degree() as i64, a.iter().sum::<i64>() - b.iter().sum::<i64>());
    }

    #[test]
    fn chain_rejects_mixed_cosets(a in -5i64..=5, b in -5i64..=5) {
        let am = Multiset::from(vec![2 * a]);
        let bm = Multiset::from(vec![2 * b + 1]);
        prop_assert!(chain_decompose_doubled(&am, &bm).is_err());
    }
}

#[test]
fn shared_types_are_thread_safe() {
    fn check<T: Send + Sync>() {}
    check::<Crystal>();
    check::<Monomial>();
    check::<ParamSet>();
    check::<DynkinDiagram>();
}
