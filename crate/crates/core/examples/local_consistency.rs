//! Local consistency levels of K_4 against K_3 and of C_5 against K_3.

use pcsp_width::consistency::lc;
use pcsp_width::structures::{clique_structure, cycle_graph};

pub fn run_example() {
    let (k4, k3) = (clique_structure(2, 4).unwrap(), clique_structure(2, 3).unwrap());
    for kappa in 0..=4 {
        let r = lc(&k4, &k3, kappa).unwrap();
        println!(
            "K_4 vs K_3 at level {kappa}: {:?}, {} of {} maps survive",
            r.answer, r.surviving, r.maps_considered
        );
    }
    assert!(!lc(&k4, &k3, 4).unwrap().answer.is_yes());

    let c5 = cycle_graph(5).unwrap();
    let r = lc(&c5, &k3, 3).unwrap();
    let strategy = r.strategy.unwrap();
    strategy.audit(&c5, &k3).unwrap();
    println!("C_5 vs K_3 at level 3: strategy sizes by domain {:?}", strategy.sizes());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
