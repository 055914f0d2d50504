mod common;

use common::{fixture, Tree};
use linkspec::algebra::{int, Rational};
use linkspec::splice::{certify, check_hypotheses, linking_data, multiplicities, quadratic_identity, random_diagram, SpliceDiagram};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn diagram(seed: u64) -> SpliceDiagram {
    random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), 10)
}

#[test]
fn briancon_linking_data() {
    let d = SpliceDiagram::from_json(&std::fs::read_to_string(fixture("briancon_diagram.json")).unwrap()).unwrap();
    let ld = linking_data(&d).unwrap();
    assert_eq!(ld.nu(), 2);
    assert_eq!(ld.n_prime, vec![2, 1]);
    let c = certify(&d).unwrap();
    assert_eq!((c.inertia.plus, c.inertia.minus, c.inertia.zero), (0, 1, 1));
    assert_eq!(c.predicted, c.inertia);
    assert!(c.negative_semidefinite && !c.weak);
}

#[test]
fn malformed_diagrams_are_rejected() {
    for text in [
        r#"{"root": "a", "vertices": [{"id": "a", "kind": "node"}], "edges": [{"a": "a", "b": "z"}]}"#,
        r#"{"root": "a", "vertices": [{"id": "a", "kind": "nodule"}], "edges": []}"#,
        r#"{"vertices": []}"#,
    ] {
        assert!(SpliceDiagram::from_json(text).is_err(), "{text}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn diagram_json_round_trips(seed in any::<u64>()) {
        let d = diagram(seed);
        let v = d.to_value();
        let back = SpliceDiagram::from_value(&v).unwrap();
        prop_assert_eq!(back.to_value(), v);
        prop_assert!(check_hypotheses(&back).passed());
    }

    #[test]
    fn arrowhead_multiplicities_are_the_declared_ones(seed in any::<u64>()) {
        let d = diagram(seed);
        let m = multiplicities(&d);
        for a in d.arrowheads() {
            prop_assert_eq!(&m[a], &int(d.vertices[a].multiplicity.unwrap()));
        }
    }

    #[test]
    fn linking_matrix_matches_path_products(seed in any::<u64>()) {
        let d = diagram(seed);
        let tree = Tree::from_value(&d.to_value());
        prop_assert_eq!(linking_data(&d).unwrap().per_component, tree.linking_matrix());
    }

    #[test]
    fn quadratic_identity_holds(seed in any::<u64>(), ell in prop::collection::vec(-6i64..=6, 12)) {
        let d = diagram(seed);
        let ld = linking_data(&d).unwrap();
        let ell: Vec<Rational> = ell.iter().take(ld.nu()).map(|&x| int(x)).collect();
        prop_assume!(ell.len() == ld.nu());
        let (direct, through) = quadratic_identity(&ld, &ell);
        prop_assert_eq!(direct, through);
    }

    #[test]
    fn certificates_agree_with_direct_inertia(seed in any::<u64>()) {
        let c = certify(&diagram(seed)).unwrap();
        prop_assert_eq!(c.predicted, c.inertia);
        let text = serde_json::to_string(&c.to_value()).unwrap();
        prop_assert!(serde_json::from_str::<serde_json::Value>(&text).is_ok());
    }
}
