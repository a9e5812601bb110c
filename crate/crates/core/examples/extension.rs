//! Extending a colouring across a fiber by following a walk in the template.

use pcsp_width::hypergraph::{fiber_decomposition, joint_of, Hypergraph, JointOwner};
use pcsp_width::pipeline::Extender;
use pcsp_width::structures::{cycle_graph, orient, symmetrize, PartialMap};

pub fn run_example() {
    // a 5-cycle with a handle of six edges from 0 to 2; the four middle
    // edges of the handle form a fiber
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend([(0, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 2)]);
    let x = orient(&Hypergraph::graph(10, &edges).unwrap(), 7);
    let c5 = cycle_graph(5).unwrap();
    let ext = Extender::new(&c5).unwrap();
    let hs = symmetrize(&x);
    let fiber = fiber_decomposition(&hs)
        .disjoint_tau_fibers(ext.tau())
        .into_iter()
        .next()
        .expect("the handle carries a 4-fiber");
    let joint = joint_of(&hs, JointOwner::Fiber(&fiber), 0).unwrap();
    println!("fiber {fiber:?}, joint {:?}", joint.vertices);
    let (u, v) = (joint.vertices[0], joint.vertices[1]);
    // every colouring of the joint extends
    for a in 0..5 {
        for b in 0..5 {
            let h0 = PartialMap::from_pairs([(u, a), (v, b)]).unwrap();
            let out = ext.over_fiber(&x, &fiber, &joint, &h0).unwrap();
            assert!(out.extends(&h0));
            if (a, b) == (0, 2) {
                println!("extension of {u}->0, {v}->2: {:?}", out.iter().collect::<Vec<_>>());
            }
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
