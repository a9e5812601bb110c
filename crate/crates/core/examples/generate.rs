//! Rejection sampling of a triangle-free graph that is not 3-colourable.

use pcsp_width::generator::{generate_verified, GenerateConfig};

pub fn run_example() {
    let mut cfg = GenerateConfig::new(70, 0.1, 2, 4, 4);
    cfg.seed = 1;
    cfg.max_attempts = 100;
    cfg.require_sparsity = false;
    let out = generate_verified(&cfg).unwrap();
    let rep = &out.report;
    println!(
        "success = {} after {} attempts: n = {}, m = {}, chi = {:?}",
        rep.success, rep.attempts, rep.n, rep.m, rep.chromatic_number
    );
    for (k, v) in &rep.verified {
        println!("  {k}: {:?} ({}) {}", v.holds, v.mode, v.detail);
    }
    assert!(rep.success);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
