#![allow(dead_code)]

use srgdim::Graph;

/// Exhaustive independence number over all vertex subsets.
pub fn brute_beta(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 24, "exhaustive search is for small graphs only");
    let adj: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, v| m | 1 << v))
        .collect();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|u| s & 1 << u == 0 || adj[u] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn check(label: &str, ok: bool, detail: &str) {
    println!("[{}] {label}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{label}: {detail}");
}
