use serde::Serialize;

use crate::error::{Error, Result};
use crate::flip::catalan;

/// Resource caps, expressed as node counts of the flip-graph (`Catalan(n - 2)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Largest slice that may be materialized (and searched from a single source).
    pub slice_nodes: u128,
    /// Largest slice on which a sweep runs one BFS per triangulation.
    pub sweep_nodes: u128,
    /// Largest slice on which every ordered pair of triangulations is examined.
    pub pair_nodes: u128,
}

/// Environment variable overriding [`Budget::slice_nodes`].
pub const NODE_CAP_ENV: &str = "POLYFLIP_NODE_CAP";

impl Default for Budget {
    fn default() -> Self {
        Budget {
            // n = 13
            slice_nodes: 58_786,
            // n = 12
            sweep_nodes: 16_796,
            // n = 9
            pair_nodes: 429,
        }
    }
}

impl Budget {
    /// Defaults, with the slice cap taken from `POLYFLIP_NODE_CAP` when set.
    pub fn from_env() -> Result<Self> {
        let mut b = Budget::default();
        if let Ok(raw) = std::env::var(NODE_CAP_ENV) {
            b.slice_nodes = raw.trim().parse().map_err(|_| {
                Error::parse(&raw, format!("{NODE_CAP_ENV} must be a positive integer"))
            })?;
        }
        b.validate()?;
        Ok(b)
    }

    pub fn unlimited() -> Self {
        Budget {
            slice_nodes: u128::MAX,
            sweep_nodes: u128::MAX,
            pair_nodes: u128::MAX,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.slice_nodes == 0 || self.sweep_nodes == 0 || self.pair_nodes == 0 {
            return Err(Error::Precondition("budgets must be positive".into()));
        }
        Ok(())
    }

    pub fn check_slice(&self, nodes: u128) -> Result<()> {
        check("flip-graph slice", nodes, self.slice_nodes)
    }

    pub fn check_sweep(&self, n: usize) -> Result<()> {
        let nodes = catalan(n.saturating_sub(2));
        self.check_slice(nodes)?;
        check("per-triangulation sweep", nodes, self.sweep_nodes)
    }

    pub fn check_pairs(&self, n: usize) -> Result<()> {
        let nodes = catalan(n.saturating_sub(2));
        self.check_slice(nodes)?;
        check("all-pairs sweep", nodes, self.pair_nodes)
    }
}

fn check(what: &'static str, needed: u128, cap: u128) -> Result<()> {
    if needed > cap {
        return Err(Error::Budget { what, needed, cap });
    }
    Ok(())
}
