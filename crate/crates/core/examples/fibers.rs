//! Fibers, pendent edges and joints of a small 3-uniform hypergraph.

use pcsp_width::hypergraph::{fiber_decomposition, fibrosity_report, joint_of, Hypergraph, JointOwner};
use pcsp_width::rational;

pub fn run_example() {
    // a chain of four triples hanging off a dense core, with a pendent triple
    let h = Hypergraph::new(
        14,
        3,
        vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![1, 2, 3],
            vec![3, 4, 5],
            vec![5, 6, 7],
            vec![7, 8, 9],
            vec![9, 10, 2],
            vec![0, 11, 12],
            vec![12, 13, 6],
        ],
    )
    .unwrap();
    let dec = fiber_decomposition(&h);
    for f in &dec.maximal_fibers {
        let j = joint_of(&h, JointOwner::Fiber(&f.edges), 0).unwrap();
        println!("fiber {:?} with joint {:?}", f.edges, j.vertices);
    }
    println!("pendent edges {:?}", dec.pendent_edges);
    let rep = fibrosity_report(&h, 2, Some(&rational::ratio(11, 10))).unwrap();
    println!("{}", serde_json::to_string_pretty(&rep).unwrap());
    assert!(rep.sdr_identity_holds);
    assert_eq!(rep.sdr_total, rational::int(14));
}

#[allow(dead_code)]
fn main() {
    run_example();
}
