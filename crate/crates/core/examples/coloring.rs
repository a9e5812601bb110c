//! Exact chromatic and independence numbers.

use pcsp_width::hypergraph::{chromatic_number, girth, independence_number, ColoringLimits, Hypergraph};

/// Mycielski's construction applied to a graph.
fn mycielski(n: usize, edges: &[(usize, usize)]) -> (usize, Vec<(usize, usize)>) {
    let mut out = edges.to_vec();
    for &(u, v) in edges {
        out.push((u, n + v));
        out.push((v, n + u));
    }
    for i in 0..n {
        out.push((n + i, 2 * n));
    }
    (2 * n + 1, out)
}

pub fn run_example() {
    let limits = ColoringLimits::default();
    let c5: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let (n, edges) = mycielski(5, &c5);
    let g = Hypergraph::graph(n, &edges).unwrap();
    let chi = chromatic_number(&g, limits).unwrap();
    println!("Groetzsch graph: n = {n}, m = {}, girth = {:?}, chi = {chi}", g.m(), girth(&g));
    assert_eq!((chi, girth(&g)), (4, Some(4)));

    let fano = Hypergraph::new(
        7,
        3,
        vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6], vec![1, 3, 5], vec![1, 4, 6], vec![2, 3, 6], vec![2, 4, 5]],
    )
    .unwrap();
    let (chi, alpha) = (chromatic_number(&fano, limits).unwrap(), independence_number(&fano, limits).unwrap());
    println!("Fano plane: chi = {chi}, alpha = {alpha}");
    assert!(chi * alpha >= fano.n());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
