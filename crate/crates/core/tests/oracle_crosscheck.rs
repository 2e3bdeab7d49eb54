mod support;

use antimagic::graph::{build_cycle, Graph};
use antimagic::labeling::{check_two_color_necessary, is_local_antimagic};
use antimagic::oracle::{exact_chi_la, feasible_with_colors, SearchBudget};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::*;

#[test]
fn pruned_search_equals_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let (n, edges) = random_connected(&mut rng, 6);
        let g = Graph::new(n, edges.clone()).unwrap();
        let brute = brute_chi_la(n, &edges);
        match exact_chi_la(&g, SearchBudget::default()) {
            Ok(r) => {
                assert_eq!(Some(r.value), brute, "{edges:?}");
                assert!(is_local_antimagic(&g, &r.witness).unwrap());
                for k in 1..=r.value {
                    let w = feasible_with_colors(&g, k, SearchBudget::default()).unwrap();
                    assert_eq!(w.witness.is_some(), k == r.value, "{edges:?}, k = {k}");
                }
            }
            Err(_) => assert_eq!(brute, None, "{edges:?}"),
        }
    }
}

#[test]
fn p3_by_hand() {
    // Ends carry the two labels, the middle their sum 3.
    let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
    assert_eq!(exact_chi_la(&g, SearchBudget::default()).unwrap().value, 3);
    assert_eq!(brute_chi_la(3, g.edges()), Some(3));
}

#[test]
fn c4_two_colours_absent() {
    let g = build_cycle(4).unwrap();
    assert!(feasible_with_colors(&g, 2, SearchBudget::default()).unwrap().witness.is_none());
    assert!(feasible_with_colors(&g, 3, SearchBudget::default()).unwrap().witness.is_some());
}

#[test]
fn necessary_condition_failures_have_no_two_colouring() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut seen = 0;
    for _ in 0..200 {
        let (n, edges) = random_connected(&mut rng, 8);
        let g = Graph::new(n, edges).unwrap();
        let verdict = check_two_color_necessary(&g);
        if verdict.forces_at_least_three() {
            seen += 1;
            let w = feasible_with_colors(&g, 2, SearchBudget::default()).unwrap();
            assert!(w.witness.is_none(), "{:?}", g.edges());
        }
    }
    assert!(seen > 20);
}

#[test]
fn budget_env_override() {
    std::env::set_var(antimagic::oracle::BUDGET_ENV, "12");
    assert_eq!(SearchBudget::from_env().max_edges, 12);
    std::env::remove_var(antimagic::oracle::BUDGET_ENV);
    assert_eq!(SearchBudget::from_env().max_edges, 10);
}
