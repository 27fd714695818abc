mod common;

use common::*;
use plumbtop::assembly::{
    boundary_graph_example_family, expected_graph_even, expected_graph_odd, glue_with_bamboo, lens_family_graph,
    printed_graph_even, printed_graph_odd, trunk_q, trunk_solid_torus, BoundedPiece, GluingData,
};
use plumbtop::germ::{is_lens_boundary, vanishing_zone, GermData, LensObstruction};
use plumbtop::homology::{example_family_h1, h1_of_plumbed, hirzebruch_h1};
use plumbtop::seifert::SeifertData;
use plumbtop::{GraphJson, LensParams, PlumbingGraph};

#[test]
fn example_family_matches_closed_form() {
    for l in 2..=12 {
        let g = boundary_graph_example_family(l).unwrap();
        assert_eq!(h1_of_plumbed(&g).unwrap(), example_family_h1(l).unwrap(), "l = {l}");
    }
}

#[test]
fn printed_weights_fail_the_closed_form() {
    for l in [3, 5, 7, 9] {
        let h = h1_of_plumbed(&printed_graph_odd(l).unwrap()).unwrap();
        assert_eq!(h.torsion_order(), (4 * (l - 2)).into(), "l = {l}");
    }
    for l in [2, 4, 6] {
        let h = h1_of_plumbed(&printed_graph_even(l).unwrap()).unwrap();
        assert_ne!(h.torsion_order(), (l * (l + 3)).into(), "l = {l}");
    }
}

#[test]
fn odd_zone_invariants() {
    for l in [3i64, 5, 7, 9, 11] {
        let z = vanishing_zone(&GermData::example_family(l).unwrap(), 0).unwrap();
        assert_eq!(z.monodromy.order, l);
        assert_eq!(z.monodromy.fixed_points, vec![l - 2; 2]);
        assert_eq!(z.monodromy.boundary_orbits.len(), 1);
        assert_eq!((z.seifert.base_genus, z.seifert.boundary_count), (0, 1));
        assert!(z.boundary_orbits_verified);
    }
}

#[test]
fn even_zone_invariants() {
    for l in [4i64, 6, 8, 10] {
        let z = vanishing_zone(&GermData::example_family(l).unwrap(), 0).unwrap();
        assert_eq!(z.monodromy.order, l / 2);
        assert_eq!(z.monodromy.boundary_orbits.len(), 2);
        assert!(z.monodromy.boundary_orbits.iter().all(|o| o.size == 1));
        assert_eq!((z.seifert.base_genus, z.seifert.boundary_count), (0, 2));
    }
}

#[test]
fn lens_family_is_consistent() {
    for l in 2..=10 {
        let g = lens_family_graph(l).unwrap();
        let lens = g.recognize_generalized_lens().unwrap().unwrap();
        assert_eq!(lens.homology_order(), 2 * l);
        assert_eq!(h1_of_plumbed(&g).unwrap(), hirzebruch_h1(2, 1, l).unwrap());
        assert_eq!(is_lens_boundary(&GermData::lens_family(l).unwrap()), Ok(l));
    }
    let single = GermData::single_branch(2, 7).unwrap();
    assert_eq!(is_lens_boundary(&single), Err(LensObstruction::IdentityMonodromy));
}

#[test]
fn gluing_is_symmetric_under_duality() {
    // Q glued to the odd zone with the two sides exchanged.
    for l in [3i64, 5, 7] {
        let zone = BoundedPiece::from_seifert(&vanishing_zone(&GermData::example_family(l).unwrap(), 0).unwrap().seifert)
            .unwrap();
        let g = GluingData::new(l + 3, 1).unwrap();
        let ab = glue_with_bamboo(&trunk_q(), 0, &zone, 0, g).unwrap().into_closed().unwrap();
        let ba = glue_with_bamboo(&zone, 0, &trunk_q(), 0, g.dual().unwrap()).unwrap().into_closed().unwrap();
        assert!(ab.is_isomorphic(&ba), "l = {l}");
        assert!(ab.is_isomorphic(&expected_graph_odd(l).unwrap()));
    }
    let s = trunk_solid_torus();
    for (alpha, beta) in [(5, 2), (7, 3), (9, 4)] {
        let g = GluingData::new(alpha, beta).unwrap();
        let ab = glue_with_bamboo(&trunk_q(), 0, &s, 0, g).unwrap().into_closed().unwrap();
        let ba = glue_with_bamboo(&s, 0, &trunk_q(), 0, g.dual().unwrap()).unwrap().into_closed().unwrap();
        assert!(ab.is_isomorphic(&ba));
    }
}

#[test]
fn graphs_roundtrip_through_json() {
    for l in 2..=6 {
        let g = boundary_graph_example_family(l).unwrap();
        let back = PlumbingGraph::from_json(&g.to_json()).unwrap();
        assert!(back.is_isomorphic(&g));
        let parsed: GraphJson = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(parsed.vertices.len(), g.vertex_count());
    }
    let even = expected_graph_even(4).unwrap();
    assert_eq!(cycle_rank(&even), 1);
}

#[test]
fn seifert_json_feeds_star_graph() {
    let s: SeifertData = serde_json::from_str(r#"{"g":0,"r":0,"pairs":[[2,1],[3,1],[5,1]],"e":-1}"#).unwrap();
    let star = s.star_graph().unwrap();
    // Legs 2/1, 3/2, 5/4: one, two and four vertices.
    assert_eq!(star.vertex_count(), 1 + 1 + 2 + 4);
    // e0 = -1 - 31/30 = -61/30; |H1| = |e0| * 30 = 61.
    assert_eq!(h1_of_plumbed(&star).unwrap().to_string(), "Z/61");
    assert_eq!(star.recognize_generalized_lens().unwrap(), None);
}

#[test]
fn solid_torus_caps() {
    // Each cap is a -1 vertex, so (5, 2) gives the bamboo [-1, -2, -3, -1],
    // which evaluates to 1/3: the sphere.
    let s = trunk_solid_torus();
    for (alpha, beta) in [(5, 2), (7, 2), (4, 1), (3, 1)] {
        let g = glue_with_bamboo(&s, 0, &s, 0, GluingData::new(alpha, beta).unwrap()).unwrap().into_closed().unwrap();
        let lens = g.recognize_generalized_lens().unwrap().expect("genus-one splitting");
        let h = h1_of_plumbed(&g).unwrap();
        assert_eq!(h.torsion_order(), lens.homology_order().max(1).into(), "({alpha}, {beta})");
    }
    let g = glue_with_bamboo(&s, 0, &s, 0, GluingData::new(5, 2).unwrap()).unwrap().into_closed().unwrap();
    assert_eq!(g.recognize_generalized_lens().unwrap(), Some(LensParams::Sphere3));
}
