use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Default wall-clock allowance for a single exact search.
pub const DEFAULT_BUDGET_MS: u64 = 60_000;

/// Limits for an exhaustive search. Exceeding either limit aborts with
/// [`Error::BudgetExceeded`], which callers must not read as "no solution".
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub time: Option<Duration>,
    pub max_nodes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn millis(ms: u64) -> Self {
        Budget { time: Some(Duration::from_millis(ms)), max_nodes: None }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { time: None, max_nodes: Some(max_nodes) }
    }

    pub(crate) fn start(&self) -> Meter {
        Meter {
            deadline: self.time.map(|t| Instant::now() + t),
            max_nodes: self.max_nodes,
            nodes: 0,
        }
    }
}

/// Running node/time counter for one search.
pub(crate) struct Meter {
    deadline: Option<Instant>,
    max_nodes: Option<u64>,
    nodes: u64,
}

impl Meter {
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.max_nodes.is_some_and(|cap| self.nodes > cap) {
            return Err(Error::BudgetExceeded { nodes: self.nodes });
        }
        if self.nodes % 4096 == 0 && self.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::BudgetExceeded { nodes: self.nodes });
        }
        Ok(())
    }
}
