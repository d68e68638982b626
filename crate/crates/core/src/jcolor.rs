//! J-colourings and J*-colourings.
//!
//! A J-colouring is a proper colouring that uses all of its `k` colours and
//! in which every closed neighbourhood `N[v]` contains every colour. A
//! J*-colouring asks the same only of internal vertices (degree at least 2).
//! `J(G)` / `J*(G)` is the largest such `k`.
//!
//! Two independent routes are provided: an exact backtracking search that
//! works on any graph, and closed-form deciders with explicit constructions
//! for paths, cycles, wheels and Jahangir graphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Meter};
use crate::coloring::{chromatic_number, is_proper, yields_rainbow, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which vertices must yield a rainbow neighbourhood.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Every vertex.
    #[serde(rename = "J")]
    J,
    /// Only vertices of degree at least 2.
    #[serde(rename = "Jstar")]
    JStar,
}

impl Variant {
    pub fn constrains(self, degree: usize) -> bool {
        match self {
            Variant::J => true,
            Variant::JStar => degree >= 2,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::J => "J",
            Variant::JStar => "J*",
        })
    }
}

/// What produced a [`JDecision`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Paths: J = 2, J* = 3 from three vertices on.
    Path,
    /// Cycles: admit iff even or divisible by 3; value 3 when divisible by 3.
    Cycle,
    /// Wheels: as cycles, with one extra colour for the hub.
    Wheel,
    /// `J(n, m)`, n >= 2: 3 colours iff m is even and n ≡ 1 (mod 3).
    JahangirSpacedSpokes,
    /// `J(1, m)` is the wheel with rim m.
    JahangirAsWheel,
    /// `J(n, m)` with n even is bipartite, so the 2-colouring qualifies.
    JahangirBipartite,
    /// Exact search.
    Oracle,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::Path => "path",
            Rule::Cycle => "cycle",
            Rule::Wheel => "wheel",
            Rule::JahangirSpacedSpokes => "jahangir-spaced-spokes",
            Rule::JahangirAsWheel => "jahangir-as-wheel",
            Rule::JahangirBipartite => "jahangir-bipartite",
            Rule::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Existence verdict and maximum colour count for J- or J*-colourings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JDecision {
    pub variant: Variant,
    pub admits: bool,
    pub j_number: Option<usize>,
    pub witness: Option<Coloring>,
    pub rule: Rule,
}

impl JDecision {
    fn admitting(variant: Variant, witness: Coloring, rule: Rule) -> Self {
        JDecision { variant, admits: true, j_number: Some(witness.k()), witness: Some(witness), rule }
    }

    fn refusing(variant: Variant, rule: Rule) -> Self {
        JDecision { variant, admits: false, j_number: None, witness: None, rule }
    }

    /// Same verdict and value, ignoring witness and rule.
    pub fn agrees_with(&self, other: &JDecision) -> bool {
        self.admits == other.admits && self.j_number == other.j_number
    }
}

impl fmt::Display for JDecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.j_number {
            Some(k) => write!(f, "admits, {}={}, rule={}", self.variant, k, self.rule),
            None => write!(f, "not admits, rule={}", self.rule),
        }
    }
}

/// Proper, all `k` colours used, and the rainbow condition on the vertices
/// selected by `variant`.
pub fn satisfies(g: &Graph, col: &Coloring, variant: Variant) -> Result<bool> {
    if !is_proper(g, col)? || col.colors_used() != col.k() {
        return Ok(false);
    }
    for v in 0..g.num_vertices() {
        if variant.constrains(g.degree(v)?) && !yields_rainbow(g, col, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_j_coloring(g: &Graph, col: &Coloring) -> Result<bool> {
    satisfies(g, col, Variant::J)
}

pub fn is_jstar_coloring(g: &Graph, col: &Coloring) -> Result<bool> {
    satisfies(g, col, Variant::JStar)
}

/// Largest `k` a (J or J*) colouring could have: `min(deg(v) + 1)` over
/// the constrained vertices, capped at the order.
pub fn colour_upper_bound(g: &Graph, variant: Variant) -> usize {
    g.degrees()
        .into_iter()
        .filter(|&d| variant.constrains(d))
        .map(|d| d + 1)
        .min()
        .unwrap_or(usize::MAX)
        .min(g.num_vertices())
}

/// Exact search for a colouring with exactly `k` colours meeting the
/// condition of `variant`. `Ok(None)` means none exists.
///
/// The returned witness has its colours numbered by first appearance in
/// vertex order.
pub fn exists_k_j_coloring(
    g: &Graph,
    k: usize,
    variant: Variant,
    budget: &Budget,
) -> Result<Option<Coloring>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if k > colour_upper_bound(g, variant) {
        return Ok(None);
    }
    let mut search = JSearch::new(g, k, variant, budget.start());
    if search.extend(0, 0)? {
        let colors = search.colors;
        Ok(Some(Coloring::new(k, colors)?.canonical()))
    } else {
        Ok(None)
    }
}

struct JSearch<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    constrained: Vec<bool>,
    closed: Vec<Vec<usize>>,
    colors: Vec<usize>,
    // counts[v * (k + 1) + c]: vertices of colour c inside N[v]
    counts: Vec<u32>,
    distinct: Vec<usize>,
    unassigned: Vec<usize>,
    meter: Meter,
}

impl<'a> JSearch<'a> {
    fn new(g: &'a Graph, k: usize, variant: Variant, meter: Meter) -> Self {
        let n = g.num_vertices();
        let degrees = g.degrees();
        // degree-2 vertices carry the tightest rainbow constraints
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| degrees[v]);
        let closed: Vec<Vec<usize>> =
            (0..n).map(|v| g.closed_neighborhood(v).expect("vertex in range")).collect();
        JSearch {
            g,
            k,
            order,
            constrained: degrees.iter().map(|&d| variant.constrains(d)).collect(),
            unassigned: closed.iter().map(Vec::len).collect(),
            closed,
            colors: vec![0; n],
            counts: vec![0; n * (k + 1)],
            distinct: vec![0; n],
            meter,
        }
    }

    fn place(&mut self, w: usize, c: usize) -> bool {
        self.colors[w] = c;
        let mut feasible = true;
        for i in 0..self.closed[w].len() {
            let v = self.closed[w][i];
            let slot = v * (self.k + 1) + c;
            if self.counts[slot] == 0 {
                self.distinct[v] += 1;
            }
            self.counts[slot] += 1;
            self.unassigned[v] -= 1;
            if self.constrained[v] && self.distinct[v] + self.unassigned[v] < self.k {
                feasible = false;
            }
        }
        feasible
    }

    fn unplace(&mut self, w: usize, c: usize) {
        for i in 0..self.closed[w].len() {
            let v = self.closed[w][i];
            let slot = v * (self.k + 1) + c;
            self.counts[slot] -= 1;
            if self.counts[slot] == 0 {
                self.distinct[v] -= 1;
            }
            self.unassigned[v] += 1;
        }
        self.colors[w] = 0;
    }

    fn extend(&mut self, depth: usize, used: usize) -> Result<bool> {
        let n = self.order.len();
        if depth == n {
            return Ok(used == self.k);
        }
        self.meter.tick()?;
        if used + (n - depth) < self.k {
            return Ok(false);
        }
        let w = self.order[depth];
        // a colour may only be opened after all smaller ones
        for c in 1..=(used + 1).min(self.k) {
            let g = self.g;
            if g.neighbors(w)?.iter().any(|&u| self.colors[u] == c) {
                continue;
            }
            let feasible = self.place(w, c);
            if feasible && self.extend(depth + 1, used.max(c))? {
                return Ok(true);
            }
            self.unplace(w, c);
        }
        Ok(false)
    }
}

/// `J(G)` or `J*(G)` by exact search: scans `k` downward from
/// [`colour_upper_bound`] to `χ(G)` and stops at the first success.
pub fn oracle(g: &Graph, variant: Variant, budget: &Budget) -> Result<JDecision> {
    if g.num_vertices() == 0 {
        return Err(Error::EmptyGraph);
    }
    let chi = chromatic_number(g, budget)?;
    let top = colour_upper_bound(g, variant);
    for k in (chi..=top).rev() {
        if let Some(witness) = exists_k_j_coloring(g, k, variant, budget)? {
            return Ok(JDecision::admitting(variant, witness, Rule::Oracle));
        }
    }
    Ok(JDecision::refusing(variant, Rule::Oracle))
}

pub fn j_number(g: &Graph, budget: &Budget) -> Result<JDecision> {
    oracle(g, Variant::J, budget)
}

pub fn jstar_number(g: &Graph, budget: &Budget) -> Result<JDecision> {
    oracle(g, Variant::JStar, budget)
}

/// Membership in `{1, 4, 7, 10, ...}`.
pub fn in_j_set(n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidParameter("J-set members are positive".into()));
    }
    Ok(n % 3 == 1)
}

fn repeating(pattern: &[usize], len: usize) -> Vec<usize> {
    pattern.iter().cycle().take(len).copied().collect()
}

pub fn construct_path(n: usize, variant: Variant) -> Result<Coloring> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs at least one vertex".into()));
    }
    let colors = match variant {
        Variant::J => repeating(&[1, 2], n),
        Variant::JStar => repeating(&[1, 2, 3], n),
    };
    Coloring::from_colors(colors)
}

pub fn decide_path(n: usize, variant: Variant) -> Result<JDecision> {
    Ok(JDecision::admitting(variant, construct_path(n, variant)?, Rule::Path))
}

fn check_rim(c: usize) -> Result<()> {
    if c < 3 {
        return Err(Error::InvalidParameter(format!("cycle length must be at least 3, got {c}")));
    }
    Ok(())
}

pub fn construct_cycle_j(c: usize) -> Result<Coloring> {
    check_rim(c)?;
    let colors = if c % 3 == 0 {
        repeating(&[1, 2, 3], c)
    } else if c % 2 == 0 {
        repeating(&[1, 2], c)
    } else {
        return Err(Error::NotAdmitting);
    };
    Coloring::from_colors(colors)
}

pub fn decide_cycle(c: usize) -> Result<JDecision> {
    match construct_cycle_j(c) {
        Ok(w) => Ok(JDecision::admitting(Variant::J, w, Rule::Cycle)),
        Err(Error::NotAdmitting) => Ok(JDecision::refusing(Variant::J, Rule::Cycle)),
        Err(e) => Err(e),
    }
}

/// Rim coloured as the cycle, hub (last vertex) with one fresh colour.
pub fn construct_wheel_j(c: usize) -> Result<Coloring> {
    let rim = construct_cycle_j(c)?;
    let hub = rim.k() + 1;
    let mut colors = rim.colors().to_vec();
    colors.push(hub);
    Coloring::new(hub, colors)
}

pub fn decide_wheel(c: usize) -> Result<JDecision> {
    match construct_wheel_j(c) {
        Ok(w) => Ok(JDecision::admitting(Variant::J, w, Rule::Wheel)),
        Err(Error::NotAdmitting) => Ok(JDecision::refusing(Variant::J, Rule::Wheel)),
        Err(e) => Err(e),
    }
}

fn jahangir_rule(n: usize, m: usize) -> Result<Option<Rule>> {
    if n < 1 || m < 3 {
        return Err(Error::InvalidParameter(format!(
            "Jahangir graph needs n >= 1 and m >= 3, got n={n}, m={m}"
        )));
    }
    Ok(if n == 1 {
        decide_wheel(m)?.admits.then_some(Rule::JahangirAsWheel)
    } else if m % 2 == 0 && in_j_set(n)? {
        Some(Rule::JahangirSpacedSpokes)
    } else if n % 2 == 0 {
        Some(Rule::JahangirBipartite)
    } else {
        None
    })
}

/// J-colouring of `J(n, m)` in the canonical layout of
/// [`crate::generators::jahangir`].
///
/// For `n = 3t + 1` and even `m`, spokes alternate colours 1 and 2; the
/// `n - 1` vertices after a colour-1 spoke repeat `2, 3, 1` and those after
/// a colour-2 spoke repeat `1, 3, 2`, `t` times each, and the hub takes 3.
/// Otherwise even `n` falls back to the bipartition and `n = 1` to the
/// wheel construction.
pub fn construct_jahangir_j(n: usize, m: usize) -> Result<Coloring> {
    match jahangir_rule(n, m)? {
        None => Err(Error::NotAdmitting),
        Some(Rule::JahangirAsWheel) => construct_wheel_j(m),
        Some(Rule::JahangirBipartite) => {
            let mut colors = repeating(&[1, 2], n * m);
            colors.push(2);
            Coloring::new(2, colors)
        }
        Some(_) => {
            let t = (n - 1) / 3;
            let mut colors = Vec::with_capacity(n * m + 1);
            for j in 0..m {
                let (spoke, block) = if j % 2 == 0 { (1, [2, 3, 1]) } else { (2, [1, 3, 2]) };
                colors.push(spoke);
                colors.extend(repeating(&block, 3 * t));
            }
            colors.push(3);
            Coloring::new(3, colors)
        }
    }
}

/// Closed-form decision for `J(n, m)`.
///
/// `n = 1` follows the wheel rule (so `J(1, 3) = K_4` and `J(1, 6)` take
/// 4 colours). For `n >= 2` three colours are possible exactly when `m` is
/// even and `n ≡ 1 (mod 3)`; otherwise an even `n` still admits the
/// bipartite 2-colouring, and odd `n` admits nothing.
pub fn decide_jahangir(n: usize, m: usize) -> Result<JDecision> {
    match jahangir_rule(n, m)? {
        Some(rule) => Ok(JDecision::admitting(Variant::J, construct_jahangir_j(n, m)?, rule)),
        None if n == 1 => Ok(JDecision::refusing(Variant::J, Rule::JahangirAsWheel)),
        None => Ok(JDecision::refusing(Variant::J, Rule::JahangirSpacedSpokes)),
    }
}

/// Whether `n` and `m` fall in the literal spaced-spoke statement
/// (`m` even and `n ≡ 1 (mod 3)`), which is what the closed form reduces to
/// when neither the wheel nor the bipartite case applies.
pub fn spaced_spoke_condition(n: usize, m: usize) -> bool {
    m % 2 == 0 && n % 3 == 1
}
