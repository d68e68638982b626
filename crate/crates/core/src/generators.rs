//! Constructors for the graph families used throughout the crate.
//!
//! Vertex numbering is fixed: rim/cycle vertices come first in cyclic order,
//! the hub (if any) is the last vertex. Certificates written by the CLI rely
//! on this layout.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A Jahangir graph `J(n, m)` together with its canonical layout.
///
/// The cycle `C_{nm}` occupies vertices `0..nm`, the hub is vertex `nm`,
/// and the spokes are the cycle positions `0, n, 2n, ..., (m-1)n`. Every
/// pair of cyclically consecutive spokes, including the wrap-around pair,
/// is at cycle distance `n`. A wheel with rim `c` is `J(1, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JahangirLayout {
    pub graph: Graph,
    pub hub: usize,
    pub spokes: Vec<usize>,
    pub cycle_order: Vec<usize>,
    pub spacing: usize,
}

impl JahangirLayout {
    pub fn num_spokes(&self) -> usize {
        self.spokes.len()
    }

    pub fn is_spoke(&self, v: usize) -> bool {
        v < self.hub && v % self.spacing == 0
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs at least one vertex".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle length must be at least 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs at least one vertex".into()));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Wheel `K_1 + C_c` with rim length `c`; identical to `jahangir(1, c)`.
pub fn wheel(c: usize) -> Result<JahangirLayout> {
    if c < 3 {
        return Err(Error::InvalidParameter(format!("wheel rim must be at least 3, got {c}")));
    }
    jahangir(1, c)
}

pub fn jahangir(n: usize, m: usize) -> Result<JahangirLayout> {
    if n < 1 || m < 3 {
        return Err(Error::InvalidParameter(format!(
            "Jahangir graph needs n >= 1 and m >= 3, got n={n}, m={m}"
        )));
    }
    let len = n * m;
    let hub = len;
    let spokes: Vec<usize> = (0..m).map(|i| i * n).collect();
    let rim = (0..len).map(|i| (i, (i + 1) % len));
    let graph = Graph::new(len + 1, rim.chain(spokes.iter().map(|&s| (hub, s))))?;
    Ok(JahangirLayout { graph, hub, spokes, cycle_order: (0..len).collect(), spacing: n })
}

/// Mycielski graph: vertices `0..n` copy `G`, `n..2n` are the shadows
/// (`n + i` is joined to every neighbour of `i`), and `2n` is the apex
/// joined to all shadows.
pub fn mycielski(g: &Graph) -> Result<Graph> {
    let n = g.num_vertices();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let apex = 2 * n;
    let mut edges = Vec::with_capacity(3 * g.num_edges() + n);
    for (u, v) in g.edges() {
        edges.push((u, v));
        edges.push((n + u, v));
        edges.push((n + v, u));
    }
    edges.extend((0..n).map(|i| (n + i, apex)));
    Graph::new(2 * n + 1, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_and_cycles() {
        assert_eq!(path(3).unwrap().num_edges(), 2);
        let k1 = path(1).unwrap();
        assert_eq!((k1.num_vertices(), k1.num_edges()), (1, 0));
        assert_eq!(path(5).unwrap().degrees(), vec![1, 2, 2, 2, 1]);
        assert!(path(0).is_err());

        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        let c6 = cycle(6).unwrap();
        assert_eq!(c6.num_edges(), 6);
        assert!(c6.degrees().iter().all(|&d| d == 2));
        assert!(cycle(2).is_err());
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(complete(4).unwrap().num_edges(), 6);
        assert_eq!(complete(1).unwrap().num_edges(), 0);
        assert!(complete(0).is_err());
    }

    #[test]
    fn wheels() {
        assert_eq!(wheel(3).unwrap().graph, complete(4).unwrap());
        let w5 = wheel(4).unwrap();
        assert_eq!((w5.graph.num_vertices(), w5.graph.num_edges()), (5, 8));
        let w7 = wheel(6).unwrap();
        assert_eq!(w7.graph.degree(w7.hub).unwrap(), 6);
        assert!(wheel(2).is_err());
    }

    #[test]
    fn jahangir_layout() {
        let j = jahangir(4, 6).unwrap();
        assert_eq!((j.graph.num_vertices(), j.graph.num_edges()), (25, 30));
        assert_eq!(j.graph.degree(j.hub).unwrap(), 6);
        assert_eq!(j.graph.min_degree().unwrap(), 2);
        assert_eq!(j.spokes, vec![0, 4, 8, 12, 16, 20]);
        assert!(j.graph.has_edge(23, 0));

        assert_eq!(jahangir(1, 4).unwrap().graph, wheel(4).unwrap().graph);
        let j23 = jahangir(2, 3).unwrap();
        assert_eq!((j23.graph.num_vertices(), j23.graph.num_edges()), (7, 9));
        assert!(jahangir(0, 4).is_err());
        assert!(jahangir(2, 2).is_err());
    }

    #[test]
    fn jahangir_degree_profile() {
        for (n, m) in [(2, 3), (3, 4), (5, 6), (7, 4)] {
            let j = jahangir(n, m).unwrap();
            for v in 0..j.hub {
                let expected = if j.is_spoke(v) { 3 } else { 2 };
                assert_eq!(j.graph.degree(v).unwrap(), expected, "J({n},{m}) vertex {v}");
            }
            assert_eq!(j.graph.degree(j.hub).unwrap(), m);
            for w in j.spokes.windows(2) {
                assert_eq!(w[1] - w[0], n);
            }
            assert_eq!(n * m - j.spokes[m - 1], n);
        }
    }

    #[test]
    fn mycielski_counts() {
        // mu(K_2) is the 5-cycle: check 2-regularity and connectivity.
        let c5 = mycielski(&path(2).unwrap()).unwrap();
        assert_eq!(c5.num_vertices(), 5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
        assert!(c5.is_connected().unwrap());

        let m4 = mycielski(&cycle(4).unwrap()).unwrap();
        assert_eq!((m4.num_vertices(), m4.num_edges()), (9, 16));

        let m1 = mycielski(&path(1).unwrap()).unwrap();
        assert_eq!((m1.num_vertices(), m1.num_edges()), (3, 1));
        assert!(!m1.is_connected().unwrap());

        assert_eq!(mycielski(&Graph::new(0, []).unwrap()), Err(Error::EmptyGraph));
    }
}
