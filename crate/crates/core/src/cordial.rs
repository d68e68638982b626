//! Cordial labelings and the two cordial Jahangir families.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::jcolor::decide_jahangir;

/// A 0/1 label per vertex. The induced label of edge `{u, v}` is
/// `|f(u) - f(v)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLabeling")]
pub struct BinaryLabeling {
    labels: Vec<u8>,
}

#[derive(Deserialize)]
struct RawLabeling {
    labels: Vec<u8>,
}

impl TryFrom<RawLabeling> for BinaryLabeling {
    type Error = Error;

    fn try_from(raw: RawLabeling) -> Result<Self> {
        BinaryLabeling::new(raw.labels)
    }
}

impl BinaryLabeling {
    pub fn new(labels: Vec<u8>) -> Result<Self> {
        if let Some((vertex, &label)) = labels.iter().enumerate().find(|(_, &l)| l > 1) {
            return Err(Error::InvalidLabel { vertex, label });
        }
        Ok(BinaryLabeling { labels })
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// Swaps every 0 and 1.
    pub fn flipped(&self) -> BinaryLabeling {
        BinaryLabeling { labels: self.labels.iter().map(|l| 1 - l).collect() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LabelingStats {
    pub v0: usize,
    pub v1: usize,
    pub e0: usize,
    pub e1: usize,
}

impl LabelingStats {
    pub fn is_cordial(&self) -> bool {
        self.v0.abs_diff(self.v1) <= 1 && self.e0.abs_diff(self.e1) <= 1
    }
}

pub fn labeling_stats(g: &Graph, f: &BinaryLabeling) -> Result<LabelingStats> {
    if f.labels.len() != g.num_vertices() {
        return Err(Error::LengthMismatch { expected: g.num_vertices(), actual: f.labels.len() });
    }
    let v1 = f.labels.iter().filter(|&&l| l == 1).count();
    let e1 = g.edges().filter(|&(u, v)| f.labels[u] != f.labels[v]).count();
    Ok(LabelingStats { v0: f.labels.len() - v1, v1, e0: g.num_edges() - e1, e1 })
}

pub fn is_cordial_labeling(g: &Graph, f: &BinaryLabeling) -> Result<bool> {
    Ok(labeling_stats(g, f)?.is_cordial())
}

/// Depth-first search over labelings in lexicographic order, so the result
/// is the lexicographically smallest cordial labeling. `Ok(None)` means the
/// search proved that none exists.
pub fn find_cordial_labeling(g: &Graph, budget: &Budget) -> Result<Option<BinaryLabeling>> {
    let mut search = CordialSearch {
        g,
        labels: vec![0; g.num_vertices()],
        counts: LabelingStats { v0: 0, v1: 0, e0: 0, e1: 0 },
        edges_left: g.num_edges(),
        meter: budget.start(),
    };
    let found = search.extend(0)?;
    Ok(found.then_some(BinaryLabeling { labels: search.labels }))
}

struct CordialSearch<'a> {
    g: &'a Graph,
    labels: Vec<u8>,
    counts: LabelingStats,
    edges_left: usize,
    meter: Meter,
}

impl CordialSearch<'_> {
    fn extend(&mut self, v: usize) -> Result<bool> {
        let n = self.labels.len();
        let c = self.counts;
        // the unlabelled part can shift each difference by at most its size
        if c.v0.abs_diff(c.v1) > 1 + (n - v) || c.e0.abs_diff(c.e1) > 1 + self.edges_left {
            return Ok(false);
        }
        if v == n {
            return Ok(true);
        }
        self.meter.tick()?;
        let g = self.g;
        let back: Vec<usize> = g.neighbors(v)?.iter().copied().filter(|&u| u < v).collect();
        for label in [0u8, 1] {
            self.labels[v] = label;
            let ones = back.iter().filter(|&&u| self.labels[u] != label).count();
            let saved = self.counts;
            if label == 0 {
                self.counts.v0 += 1;
            } else {
                self.counts.v1 += 1;
            }
            self.counts.e1 += ones;
            self.counts.e0 += back.len() - ones;
            self.edges_left -= back.len();
            let found = self.extend(v + 1)?;
            self.edges_left += back.len();
            self.counts = saved;
            if found {
                return Ok(true);
            }
        }
        self.labels[v] = 0;
        Ok(false)
    }
}

/// The two Jahangir families known to be cordial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CordialFamily {
    /// `J(2k-1, 4l)`: odd `n`, `m ≡ 0 (mod 4)`.
    OddByFourL,
    /// `J(4k-1, 4l+2)`: `n ≡ 3 (mod 4)`, `m ≡ 2 (mod 4)` with `m >= 6`.
    ThreeModFourBySixPlus,
}

impl fmt::Display for CordialFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CordialFamily::OddByFourL => "J(2k-1,4l)",
            CordialFamily::ThreeModFourBySixPlus => "J(4k-1,4l+2)",
        })
    }
}

fn check_params(n: usize, m: usize) -> Result<()> {
    if n < 1 || m < 3 {
        return Err(Error::InvalidParameter(format!(
            "Jahangir graph needs n >= 1 and m >= 3, got n={n}, m={m}"
        )));
    }
    Ok(())
}

pub fn cordial_family_member(n: usize, m: usize) -> Result<Option<CordialFamily>> {
    check_params(n, m)?;
    Ok(if n % 2 == 1 && m % 4 == 0 {
        Some(CordialFamily::OddByFourL)
    } else if n % 4 == 3 && m % 4 == 2 && m >= 6 {
        Some(CordialFamily::ThreeModFourBySixPlus)
    } else {
        None
    })
}

/// In one of the cordial families and J-colourable.
pub fn cordial_and_j_colorable(n: usize, m: usize) -> Result<bool> {
    Ok(cordial_family_member(n, m)?.is_some() && decide_jahangir(n, m)?.admits)
}
