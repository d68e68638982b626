//! Vertex colourings, rainbow neighbourhoods, chromatic numbers and
//! χ⁻-colourings (colourings that follow the rainbow neighbourhood
//! convention).

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Assignment of colours `1..=k` to the vertices `0..n`.
///
/// Colour indices are 1-based; `colors[v]` is the index of the colour on
/// vertex `v`. Not every colour has to be used, but every value must lie in
/// `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

#[derive(Deserialize)]
struct RawColoring {
    k: usize,
    colors: Vec<usize>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        Coloring::new(raw.k, raw.colors)
    }
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if let Some((vertex, &color)) =
            colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k)
        {
            return Err(Error::ColorOutOfRange { vertex, color, k });
        }
        Ok(Coloring { k, colors })
    }

    /// Uses `k = max colour`, so every index up to the maximum is in range.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        Coloring::new(k, colors)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// θ(c_i): number of vertices carrying colour `i`.
    pub fn class_size(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.k {
            return Err(Error::ColorIndexOutOfRange { index: i, k: self.k });
        }
        Ok(self.colors.iter().filter(|&&c| c == i).count())
    }

    /// `(θ(c_1), ..., θ(c_k))`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.colors {
            sizes[c - 1] += 1;
        }
        sizes
    }

    pub fn colors_used(&self) -> usize {
        self.class_sizes().iter().filter(|&&s| s > 0).count()
    }

    /// Renumbers colours by first appearance in vertex order, keeping `k`.
    pub fn canonical(&self) -> Coloring {
        let mut map = vec![0; self.k + 1];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c] == 0 {
                    next += 1;
                    map[c] = next;
                }
                map[c]
            })
            .collect();
        Coloring { k: self.k, colors }
    }

    pub(crate) fn check_shape(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.num_vertices() {
            return Err(Error::LengthMismatch {
                expected: g.num_vertices(),
                actual: self.colors.len(),
            });
        }
        Ok(())
    }
}

/// Verdict of [`rainbow_report`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowReport {
    pub proper: bool,
    pub colors_used: usize,
    /// Vertices `v` whose closed neighbourhood `N[v]` sees all `k` colours.
    pub rainbow_vertices: Vec<usize>,
    pub all_rainbow: bool,
}

pub fn is_proper(g: &Graph, col: &Coloring) -> Result<bool> {
    col.check_shape(g)?;
    Ok(g.edges().all(|(u, v)| col.color(u) != col.color(v)))
}

pub fn yields_rainbow(g: &Graph, col: &Coloring, v: usize) -> Result<bool> {
    col.check_shape(g)?;
    let mut seen = vec![false; col.k() + 1];
    for u in g.closed_neighborhood(v)? {
        seen[col.color(u)] = true;
    }
    Ok(seen[1..].iter().all(|&s| s))
}

pub fn rainbow_report(g: &Graph, col: &Coloring) -> Result<RainbowReport> {
    let proper = is_proper(g, col)?;
    let mut rainbow_vertices = Vec::new();
    for v in 0..g.num_vertices() {
        if yields_rainbow(g, col, v)? {
            rainbow_vertices.push(v);
        }
    }
    Ok(RainbowReport {
        proper,
        colors_used: col.colors_used(),
        all_rainbow: rainbow_vertices.len() == g.num_vertices(),
        rainbow_vertices,
    })
}

/// Exact χ(G) by backtracking over `k = 1, 2, ...`.
///
/// Vertices are visited in descending-degree order and new colours are
/// opened one at a time, which removes colour-permutation symmetry.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<usize> {
    let n = g.num_vertices();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.num_edges() == 0 {
        return Ok(1);
    }
    if g.is_bipartite() {
        return Ok(2);
    }
    let degrees = g.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(degrees[v]));
    let mut meter = budget.start();
    for k in 3..=n {
        let mut colors = vec![0; n];
        if extend_proper(g, &order, 0, k, 0, &mut colors, &mut meter)? {
            return Ok(k);
        }
    }
    Ok(n)
}

fn extend_proper(
    g: &Graph,
    order: &[usize],
    depth: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
    meter: &mut Meter,
) -> Result<bool> {
    let Some(&v) = order.get(depth) else {
        return Ok(true);
    };
    meter.tick()?;
    let adjacency = g.neighbors(v)?;
    for c in 1..=(used + 1).min(k) {
        if adjacency.iter().any(|&w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if extend_proper(g, order, depth + 1, k, used.max(c), colors, meter)? {
            return Ok(true);
        }
    }
    colors[v] = 0;
    Ok(false)
}

/// Every partition of `V` into exactly `k` independent sets, each given as
/// a colouring whose colours first appear in increasing vertex order.
pub(crate) fn proper_partitions(g: &Graph, k: usize, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut colors = vec![0; g.num_vertices()];
    let mut meter = budget.start();
    collect_partitions(g, 0, k, 0, &mut colors, &mut out, &mut meter)?;
    Ok(out)
}

fn collect_partitions(
    g: &Graph,
    v: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
    out: &mut Vec<Vec<usize>>,
    meter: &mut Meter,
) -> Result<()> {
    let n = colors.len();
    if v == n {
        if used == k {
            out.push(colors.to_vec());
        }
        return Ok(());
    }
    meter.tick()?;
    // remaining vertices must be able to open the missing colours
    if used + (n - v) < k {
        return Ok(());
    }
    let adjacency = g.neighbors(v)?;
    for c in 1..=(used + 1).min(k) {
        if adjacency.iter().any(|&w| w < v && colors[w] == c) {
            continue;
        }
        colors[v] = c;
        collect_partitions(g, v + 1, k, used.max(c), colors, out, meter)?;
    }
    colors[v] = 0;
    Ok(())
}

/// The χ⁻-colourings of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiMinus {
    pub chi: usize,
    /// The lexicographically maximal size vector `(θ(c_1), ..., θ(c_χ))`.
    pub theta: Vec<usize>,
    /// All proper χ-colourings attaining `theta`, sorted ascending.
    pub colorings: Vec<Coloring>,
}

/// All proper χ(G)-colourings whose class-size vector is lexicographically
/// maximal over every proper χ(G)-colouring.
///
/// Colour 1 therefore covers as many vertices as any proper χ-colouring
/// allows, colour 2 as many of the rest as possible, and so on, with the
/// maximisation taken globally rather than greedily.
pub fn chi_minus_colorings(g: &Graph, budget: &Budget) -> Result<ChiMinus> {
    let chi = chromatic_number(g, budget)?;
    let partitions = proper_partitions(g, chi, budget)?;
    let sorted_sizes = |p: &Vec<usize>| {
        let mut sizes = vec![0; chi];
        for &c in p {
            sizes[c - 1] += 1;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    };
    let theta = partitions.iter().map(sorted_sizes).max().ok_or(Error::EmptyGraph)?;

    let mut colorings = Vec::new();
    for p in partitions.iter().filter(|p| sorted_sizes(p) == theta) {
        let mut sizes = vec![0; chi];
        for &c in p {
            sizes[c - 1] += 1;
        }
        let mut assignment = vec![0; chi];
        relabel_by_size(&theta, &sizes, 0, &mut assignment, &mut |labels| {
            let colors = p.iter().map(|&c| labels[c - 1]).collect();
            colorings.push(Coloring { k: chi, colors });
        });
    }
    colorings.sort();
    Ok(ChiMinus { chi, theta, colorings })
}

// Assigns colour `j + 1` to some unassigned class of size theta[j], for
// every j, calling `emit` with the class -> colour map.
fn relabel_by_size(
    theta: &[usize],
    sizes: &[usize],
    j: usize,
    labels: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if j == theta.len() {
        emit(labels);
        return;
    }
    for class in 0..sizes.len() {
        if labels[class] == 0 && sizes[class] == theta[j] {
            labels[class] = j + 1;
            relabel_by_size(theta, sizes, j + 1, labels, emit);
            labels[class] = 0;
        }
    }
}

/// Rainbow counts over the χ⁻-colourings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RChi {
    pub min: usize,
    pub max: usize,
    pub chi_minus: ChiMinus,
    /// `counts[i]` is the number of rainbow vertices under `chi_minus.colorings[i]`.
    pub counts: Vec<usize>,
}

/// Minimum and maximum number of vertices yielding a rainbow neighbourhood
/// over all χ⁻-colourings; the two can differ in principle, so both are
/// reported.
pub fn r_chi(g: &Graph, budget: &Budget) -> Result<RChi> {
    let chi_minus = chi_minus_colorings(g, budget)?;
    let counts = chi_minus
        .colorings
        .iter()
        .map(|c| rainbow_report(g, c).map(|r| r.rainbow_vertices.len()))
        .collect::<Result<Vec<_>>>()?;
    let min = counts.iter().copied().min().unwrap_or(0);
    let max = counts.iter().copied().max().unwrap_or(0);
    Ok(RChi { min, max, chi_minus, counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, jahangir, path};

    fn col(colors: &[usize]) -> Coloring {
        Coloring::from_colors(colors.to_vec()).unwrap()
    }

    fn figure_coloring() -> Coloring {
        let rim = [1, 2, 3, 1, 2, 1, 3, 2];
        let mut colors: Vec<usize> = rim.iter().cycle().take(24).copied().collect();
        colors.push(3);
        col(&colors)
    }

    #[test]
    fn coloring_validation() {
        assert!(Coloring::new(2, vec![1, 3]).is_err());
        assert!(Coloring::new(2, vec![0, 1]).is_err());
        let c: Coloring = serde_json::from_str(r#"{"k":3,"colors":[1,2,3]}"#).unwrap();
        assert_eq!(c.k(), 3);
        assert!(serde_json::from_str::<Coloring>(r#"{"k":2,"colors":[1,2,3]}"#).is_err());
    }

    #[test]
    fn class_sizes() {
        assert_eq!(col(&[1, 2, 1, 2]).class_size(1).unwrap(), 2);
        assert_eq!(figure_coloring().class_size(3).unwrap(), 7);
        assert_eq!(col(&[1]).class_size(1).unwrap(), 1);
        assert!(col(&[1]).class_size(2).is_err());
        assert!(col(&[1]).class_size(0).is_err());
    }

    #[test]
    fn properness() {
        let c4 = cycle(4).unwrap();
        assert!(is_proper(&c4, &col(&[1, 2, 1, 2])).unwrap());
        assert!(!is_proper(&cycle(3).unwrap(), &col(&[1, 2, 1])).unwrap());
        let j = jahangir(4, 6).unwrap();
        assert!(is_proper(&j.graph, &figure_coloring()).unwrap());
        assert!(matches!(
            is_proper(&c4, &col(&[1, 2])),
            Err(Error::LengthMismatch { expected: 4, actual: 2 })
        ));
    }

    #[test]
    fn rainbow_neighbourhoods() {
        assert!(yields_rainbow(&cycle(4).unwrap(), &col(&[1, 2, 1, 2]), 0).unwrap());
        assert!(!yields_rainbow(&path(3).unwrap(), &col(&[1, 2, 3]), 0).unwrap());
        let c5 = cycle(5).unwrap();
        let c = col(&[1, 2, 1, 2, 3]);
        assert!(!yields_rainbow(&c5, &c, 1).unwrap());
        assert!(yields_rainbow(&c5, &c, 5).is_err());

        let report = rainbow_report(&c5, &c).unwrap();
        assert_eq!(report.rainbow_vertices, vec![0, 3, 4]);
        assert!(report.proper && !report.all_rainbow);
        assert!(rainbow_report(&cycle(6).unwrap(), &col(&[1, 2, 3, 1, 2, 3])).unwrap().all_rainbow);
        assert!(rainbow_report(&path(1).unwrap(), &col(&[1])).unwrap().all_rainbow);
    }

    #[test]
    fn chromatic_numbers() {
        let b = Budget::unlimited();
        assert_eq!(chromatic_number(&cycle(5).unwrap(), &b).unwrap(), 3);
        assert_eq!(chromatic_number(&complete(4).unwrap(), &b).unwrap(), 4);
        assert_eq!(chromatic_number(&path(1).unwrap(), &b).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::new(0, []).unwrap(), &b), Err(Error::EmptyGraph));
        let w6 = crate::generators::wheel(5).unwrap().graph;
        assert_eq!(chromatic_number(&w6, &b).unwrap(), 4);
    }

    #[test]
    fn jahangir_4_6_is_bipartite() {
        // Spokes sit at even rim positions, so the hub can share the odd side.
        let j = jahangir(4, 6).unwrap();
        let mut colors: Vec<usize> = (0..24).map(|i| 1 + i % 2).collect();
        colors.push(2);
        assert!(is_proper(&j.graph, &col(&colors)).unwrap());
        assert_eq!(chromatic_number(&j.graph, &Budget::unlimited()).unwrap(), 2);
        assert_eq!(chromatic_number(&jahangir(3, 6).unwrap().graph, &Budget::unlimited()).unwrap(), 3);
    }

    #[test]
    fn chi_minus_examples() {
        let b = Budget::unlimited();
        let c4 = chi_minus_colorings(&cycle(4).unwrap(), &b).unwrap();
        assert_eq!(c4.colorings, vec![col(&[1, 2, 1, 2]), col(&[2, 1, 2, 1])]);
        assert_eq!(c4.theta, vec![2, 2]);

        let c5 = chi_minus_colorings(&cycle(5).unwrap(), &b).unwrap();
        assert_eq!(c5.theta, vec![2, 2, 1]);
        // 5 partitions of type (2,2,1), each labelled in 2 ways
        assert_eq!(c5.colorings.len(), 10);
        assert!(c5.colorings.iter().all(|c| c.class_sizes() == vec![2, 2, 1]));

        let k3 = chi_minus_colorings(&complete(3).unwrap(), &b).unwrap();
        assert_eq!(k3.theta, vec![1, 1, 1]);
        assert_eq!(k3.colorings.len(), 6);
    }

    #[test]
    fn r_chi_examples() {
        let b = Budget::unlimited();
        let pair = |g: &Graph| {
            let r = r_chi(g, &b).unwrap();
            (r.min, r.max)
        };
        assert_eq!(pair(&cycle(4).unwrap()), (4, 4));
        assert_eq!(pair(&cycle(5).unwrap()), (3, 3));
        assert_eq!(pair(&complete(3).unwrap()), (3, 3));
    }

    #[test]
    fn partition_budget_is_reported() {
        let g = cycle(12).unwrap();
        assert!(matches!(
            proper_partitions(&g, 3, &Budget::nodes(10)),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
