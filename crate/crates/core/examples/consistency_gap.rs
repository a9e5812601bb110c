//! A partial colouring that looks fine locally but is refuted by a diamond.

use pcsp_width::consistency::check_consistency_gap;
use pcsp_width::rational;
use pcsp_width::structures::{clique_structure, RelationalStructure};

pub fn run_example() {
    let edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)];
    let x = RelationalStructure::monic("E", 2, 7, edges.iter().map(|&(u, v)| vec![u, v]).collect()).unwrap();
    let k3 = clique_structure(2, 3).unwrap();
    for gamma in [rational::int(3), rational::int(10)] {
        let v = check_consistency_gap(&x, &k3, 2, &gamma, 10_000_000).unwrap();
        println!("gamma = {}: holds = {}", rational::format(&gamma), v.holds);
        if let Some(w) = &v.witness {
            println!("  map {:?} refuted by tuples {:?}", w.map, w.tuples);
        }
    }
    // at γ = 3 the small and large limits are 1 and 3; a diamond needs 5
    assert!(check_consistency_gap(&x, &k3, 2, &rational::int(3), 10_000_000).unwrap().holds);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
