//! Named graph families and the closed-form vs. exact-search comparison
//! used by surveys.

use std::fmt;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::generators;
use crate::graph::Graph;
use crate::jcolor::{self, JDecision, Rule, Variant};

/// One member of a family with a closed-form J-colouring rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyInstance {
    Path { n: usize },
    Cycle { c: usize },
    Wheel { c: usize },
    Jahangir { n: usize, m: usize },
}

impl FamilyInstance {
    pub fn graph(&self) -> Result<Graph> {
        match *self {
            FamilyInstance::Path { n } => generators::path(n),
            FamilyInstance::Cycle { c } => generators::cycle(c),
            FamilyInstance::Wheel { c } => generators::wheel(c).map(|w| w.graph),
            FamilyInstance::Jahangir { n, m } => generators::jahangir(n, m).map(|j| j.graph),
        }
    }

    pub fn closed_form(&self, variant: Variant) -> Result<JDecision> {
        match (*self, variant) {
            (FamilyInstance::Path { n }, _) => jcolor::decide_path(n, variant),
            (_, Variant::JStar) => Err(Error::InvalidParameter(
                "closed forms for J* cover paths only".into(),
            )),
            (FamilyInstance::Cycle { c }, _) => jcolor::decide_cycle(c),
            (FamilyInstance::Wheel { c }, _) => jcolor::decide_wheel(c),
            (FamilyInstance::Jahangir { n, m }, _) => jcolor::decide_jahangir(n, m),
        }
    }

    pub fn params(&self) -> String {
        match *self {
            FamilyInstance::Path { n } => format!("n={n}"),
            FamilyInstance::Cycle { c } | FamilyInstance::Wheel { c } => format!("c={c}"),
            FamilyInstance::Jahangir { n, m } => format!("n={n},m={m}"),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilyInstance::Path { .. } => "path",
            FamilyInstance::Cycle { .. } => "cycle",
            FamilyInstance::Wheel { .. } => "wheel",
            FamilyInstance::Jahangir { .. } => "jahangir",
        }
    }
}

impl fmt::Display for FamilyInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyInstance::Path { n } => write!(f, "P_{n}"),
            FamilyInstance::Cycle { c } => write!(f, "C_{c}"),
            FamilyInstance::Wheel { c } => write!(f, "W_{}", c + 1),
            FamilyInstance::Jahangir { n, m } => write!(f, "J_{{{n},{m}}}"),
        }
    }
}

/// Every Jahangir graph `J(n, m)` with `n >= min_n`, `m >= 3` and at most
/// `max_vertices` vertices, ordered by `n` then `m`.
pub fn jahangir_instances(min_n: usize, max_vertices: usize) -> Vec<FamilyInstance> {
    let mut out = Vec::new();
    for n in min_n.max(1).. {
        if 3 * n + 1 > max_vertices {
            break;
        }
        out.extend((3..).take_while(|m| n * m < max_vertices).map(|m| FamilyInstance::Jahangir { n, m }));
    }
    out
}

/// Closed form and exact search for one instance.
#[derive(Debug, Clone, Serialize)]
pub struct SurveyRow {
    pub instance: FamilyInstance,
    pub closed_form: JDecision,
    /// `None` when the search ran out of budget.
    pub oracle: Option<JDecision>,
    pub agree: bool,
    pub notes: String,
}

pub fn survey_row(instance: FamilyInstance, variant: Variant, budget: &Budget) -> Result<SurveyRow> {
    let closed_form = instance.closed_form(variant)?;
    let graph = instance.graph()?;
    let oracle = match jcolor::oracle(&graph, variant, budget) {
        Ok(d) => Some(d),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let agree = oracle.as_ref().is_some_and(|o| o.agrees_with(&closed_form));
    let mut notes = Vec::new();
    if oracle.is_none() {
        notes.push("search budget exceeded".to_string());
    }
    match closed_form.rule {
        Rule::JahangirAsWheel => notes.push("n=1 follows the wheel rule".into()),
        Rule::JahangirBipartite => {
            notes.push("even n: bipartite 2-colouring, outside the spaced-spoke statement".into())
        }
        _ => {}
    }
    Ok(SurveyRow { instance, closed_form, oracle, agree, notes: notes.join("; ") })
}
