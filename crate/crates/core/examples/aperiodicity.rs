//! Mixing times of small templates and a walk following a mixed pattern.

use pcsp_width::aperiodicity::{find_lambda_walk, is_aperiodic, TauPattern};
use pcsp_width::structures::{clique_structure, cycle_graph, cyclic_group_table, group_structure};

pub fn run_example() {
    for n in 3..=8 {
        let rep = is_aperiodic(&cycle_graph(n).unwrap()).unwrap();
        println!("C_{n}: aperiodic = {}, mixing time = {:?}", rep.aperiodic, rep.mixing_time);
        assert_eq!(rep.aperiodic, n % 2 == 1);
    }
    let k3 = clique_structure(2, 3).unwrap();
    println!("K_3 mixing time = {:?}", is_aperiodic(&k3).unwrap().mixing_time);
    let z3 = group_structure(&cyclic_group_table(3)).unwrap();
    assert_eq!(is_aperiodic(&z3).unwrap().mixing_time, Some(1));

    // forward, backward, forward, backward on C_5 from 0 back to 0
    let c5 = cycle_graph(5).unwrap();
    let walk = find_lambda_walk(&c5, &TauPattern::alternating(4), 0, 0).unwrap().unwrap();
    println!("alternating walk in C_5: {:?}", walk.vertices);
    assert!(walk.is_valid(&c5, &TauPattern::alternating(4)));
}

#[allow(dead_code)]
fn main() {
    run_example();
}
