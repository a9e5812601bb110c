//! Hereditary and threshold sparsity with exact rational thresholds.

use pcsp_width::hypergraph::{
    hereditary_violation, is_hereditarily_beta_sparse, is_threshold_sparse, Hypergraph, DEFAULT_SUBSET_BUDGET,
};
use pcsp_width::rational;

pub fn run_example() {
    // K_4 with a tail: only the dense core can violate 11/10-sparsity
    let h = Hypergraph::graph(7, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
    let beta = rational::ratio(11, 10);
    println!("hereditarily 11/10-sparse: {}", is_hereditarily_beta_sparse(&h, &beta).unwrap());
    println!("densest violation: {:?}", hereditary_violation(&h, &beta).unwrap());
    let mut holds = Vec::new();
    for gamma in 3..=6 {
        let v = is_threshold_sparse(&h, &rational::int(gamma), &beta, DEFAULT_SUBSET_BUDGET).unwrap();
        println!("({gamma}, 11/10)-threshold-sparse: {:?} [{:?}] {:?}", v.holds, v.mode, v.witness);
        holds.push(v.holds);
    }
    // four edges span at least four vertices; five can sit on four
    assert_eq!(holds, [Some(true), Some(true), Some(false), Some(false)]);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
