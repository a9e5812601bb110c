//! A non-3-colourable graph that 3-consistency accepts.

use pcsp_width::pipeline::{fooling_pipeline, FoolingConfig};
use pcsp_width::structures::clique_structure;

pub fn run_example() {
    let k3 = clique_structure(2, 3).unwrap();
    let mut cfg = FoolingConfig::new(30, 0.25);
    cfg.runs = 20;
    cfg.seed = 5;
    let rep = fooling_pipeline(&k3, &k3, &cfg).unwrap();
    println!("tau = {}, weak chromatic number = {}", rep.tau, rep.weak_chromatic_number);
    println!("fooled = {} at levels {:?} (n = {}, m = {})", rep.fooled, rep.fooled_at, rep.n, rep.m);
    println!("certificate: {:?}", rep.certificate);
    assert!(rep.fooled);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
