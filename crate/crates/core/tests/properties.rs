mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

use common::*;
use plumbtop::homology::{h1_of_plumbed, invariant_factors, HomologyResult};
use plumbtop::seifert::{eval_neg_cont_frac, neg_cont_frac, SeifertData, SeifertPair};
use plumbtop::{smith_normal_form, IntMatrix, PlumbingGraph};

/// `H_1` of a closed Seifert manifold from its standard presentation:
/// generators `q_i, h` (plus `2g` free ones), relations `α_i q_i + β_i h`
/// and `Σ q_i + e h`.
fn seifert_presentation_h1(s: &SeifertData) -> HomologyResult {
    let n = s.pairs.len();
    let mut rows = Vec::new();
    for (i, p) in s.pairs.iter().enumerate() {
        let mut r = vec![0i64; n + 1];
        r[i] = p.alpha;
        r[n] = p.beta;
        rows.push(r);
    }
    let mut last = vec![1i64; n + 1];
    last[n] = s.e.unwrap();
    rows.push(last);
    let det = laplace_det(&rows);
    let free = 2 * s.base_genus as usize + usize::from(det == 0);
    let snf = smith_normal_form(&IntMatrix::from_rows(&rows).unwrap());
    HomologyResult::from_factors(free, &snf.torsion())
}

fn pair() -> impl Strategy<Value = SeifertPair> {
    (2i64..8, 1i64..8)
        .prop_filter("coprime", |(a, b)| a.gcd(b) == 1 && b < a)
        .prop_map(|(a, b)| SeifertPair::from_unnormalized(a, b).unwrap())
}

fn bamboo_weights() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=2, 1..7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn star_homology_matches_seifert_presentation(
        g in 0u32..2,
        pairs in prop::collection::vec(pair(), 0..5),
        e in -4i64..=4,
    ) {
        let s = SeifertData { base_genus: g, boundary_count: 0, pairs, e: Some(e) };
        let star = h1_of_plumbed(&s.star_graph().unwrap()).unwrap();
        prop_assert_eq!(star, seifert_presentation_h1(&s));
    }

    #[test]
    fn continued_fraction_roundtrip(n in 2i64..200, q in 1i64..200) {
        prop_assume!(q < n && n.gcd(&q) == 1);
        let cf = neg_cont_frac(n, q).unwrap();
        prop_assert!(cf.iter().all(|&c| c >= 2));
        prop_assert_eq!(eval_neg_cont_frac(&cf).unwrap(), BigRational::new(n.into(), q.into()));
    }

    #[test]
    fn bamboo_recognition_matches_homology(weights in bamboo_weights()) {
        let g = PlumbingGraph::bamboo(&weights);
        let lens = g.recognize_generalized_lens().unwrap().expect("every bamboo is a generalized lens space");
        let h = h1_of_plumbed(&g).unwrap();
        let order = lens.homology_order();
        if order == 0 {
            prop_assert_eq!(h, HomologyResult::from_factors(1, &[]));
        } else {
            prop_assert_eq!(h, HomologyResult::cyclic(order));
        }
    }

    #[test]
    fn blow_ups_preserve_homology(weights in bamboo_weights(), pick in 0usize..6, sign in prop::bool::ANY) {
        let g = PlumbingGraph::bamboo(&weights);
        let sign = if sign { 1 } else { -1 };
        let v = g.vertices()[pick % g.vertex_count()].id;
        let base = h1_of_plumbed(&g).unwrap();
        let (up, new) = g.blow_up_leaf(v, sign).unwrap();
        prop_assert_eq!(&h1_of_plumbed(&up).unwrap(), &base);
        let down = up.blow_down(new).unwrap();
        prop_assert!(down.is_isomorphic(&g));
        if let Some(&(a, b)) = g.edges().get(pick % g.edges().len().max(1)) {
            let (up, new) = g.blow_up_edge(a, b, sign).unwrap();
            prop_assert_eq!(&h1_of_plumbed(&up).unwrap(), &base);
            prop_assert!(up.blow_down(new).unwrap().is_isomorphic(&g));
        }
    }

    #[test]
    fn invariant_factors_are_canonical(factors in prop::collection::vec(1i64..40, 0..6)) {
        let big: Vec<BigInt> = factors.iter().map(|&x| BigInt::from(x)).collect();
        let inv = invariant_factors(&big);
        let product: BigInt = big.iter().product();
        prop_assert_eq!(inv.iter().product::<BigInt>(), product);
        prop_assert!(inv.iter().all(|x| x > &BigInt::from(1)));
        prop_assert!(inv.windows(2).all(|w| (&w[1] % &w[0]) == BigInt::from(0)));
        let diag = IntMatrix::diagonal(&big, big.len(), big.len());
        prop_assert_eq!(smith_normal_form(&diag).torsion(), inv);
    }

    #[test]
    fn torsion_order_is_determinant(weights in prop::collection::vec(-5i64..=-1, 1..6), extra in prop::collection::vec((0usize..6, -5i64..=-1), 0..4)) {
        // Random trees: a bamboo with extra leaves.
        let mut g = PlumbingGraph::bamboo(&weights);
        for (at, w) in extra {
            let anchor = g.vertices()[at % g.vertex_count()].id;
            let v = g.add_vertex(0, w);
            g.add_edge(anchor, v).unwrap();
        }
        let a = raw_intersection(&g);
        let det = rational_det(&a);
        let h = h1_of_plumbed(&g).unwrap();
        if det == BigInt::from(0) {
            prop_assert!(h.free_rank > 0);
        } else {
            prop_assert_eq!(h.free_rank, 0);
            prop_assert_eq!(h.torsion_order(), det.abs());
        }
    }
}
