//! Boolean matrix powers and the primitivity index.

use pcsp_width::boolmat::{index_of_primitivity, is_primitive, wielandt_bound, BoolMatrix};

pub fn run_example() {
    // the n-cycle with one chord reaches the all-ones matrix as late as possible
    for n in 2..=7 {
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.push((n - 1, 1));
        let m = BoolMatrix::from_edges(n, &edges);
        let idx = index_of_primitivity(&m);
        println!("n = {n}: primitive = {}, index = {idx:?}, bound = {}", is_primitive(&m), wielandt_bound(n));
        assert_eq!(idx, Some(wielandt_bound(n) as u64));
    }
    let c4 = BoolMatrix::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    assert!(!is_primitive(&c4));
    println!("C_4 squared:\n{:?}", c4.pow(2));
}

#[allow(dead_code)]
fn main() {
    run_example();
}
