//! Brute-force reference checks, written without the library's search or
//! verifier code.

#![allow(dead_code)]

use rainbowj::Graph;

/// True iff some assignment in `{1..k}^n` is proper, uses every colour, and
/// gives every checked vertex (all vertices, or only those of degree >= 2
/// when `internal_only`) a closed neighbourhood containing all `k` colours.
pub fn naive_k_coloring_exists(g: &Graph, k: usize, internal_only: bool) -> bool {
    let n = g.num_vertices();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).unwrap().to_vec()).collect();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut colors = vec![0usize; n];
    let total = (k as u64).pow(n as u32);
    'outer: for code in 0..total {
        let mut x = code;
        for c in colors.iter_mut() {
            *c = (x % k as u64) as usize;
            x /= k as u64;
        }
        if edges.iter().any(|&(u, v)| colors[u] == colors[v]) {
            continue;
        }
        let mut used = vec![false; k];
        colors.iter().for_each(|&c| used[c] = true);
        if used.contains(&false) {
            continue;
        }
        for v in 0..n {
            if internal_only && adj[v].len() < 2 {
                continue;
            }
            let mut seen = vec![false; k];
            seen[colors[v]] = true;
            adj[v].iter().for_each(|&u| seen[colors[u]] = true);
            if seen.contains(&false) {
                continue 'outer;
            }
        }
        return true;
    }
    false
}
