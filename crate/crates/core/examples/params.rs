//! The constants of the random construction and the sparsity failure bound.

use pcsp_width::generator::{paper_params, sparsity_failure_bound};
use pcsp_width::rational;

pub fn run_example() {
    let p = paper_params(4, 4, &rational::ratio(3, 2), 2).unwrap();
    println!(
        "ell = {:.3}, nu = {}, theta = {:.3e}, mu = {:.3e}, delta = {:.3e}",
        p.ell, p.nu, p.theta, p.mu, p.delta
    );
    println!("n0: {:?} ({})", p.n0, p.n0_note);
    for n in [10u64.pow(6), 10u64.pow(9), 10u64.pow(12)] {
        match sparsity_failure_bound(2, p.ell, n, p.mu, p.nu) {
            Ok(b) => println!("n = {n}: failure probability at most {b:.3e}, p = {:.3e}", p.edge_probability(n as usize)),
            Err(e) => println!("n = {n}: {e}"),
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
