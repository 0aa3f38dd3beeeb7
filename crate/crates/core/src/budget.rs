use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Wall-clock allowance for long-running searches and solves.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget { deadline: None }
    }

    pub fn for_duration(limit: Duration) -> Budget {
        Budget { deadline: Some(Instant::now() + limit) }
    }

    pub fn from_secs(secs: f64) -> Budget {
        Self::for_duration(Duration::from_secs_f64(secs.max(0.0)))
    }

    pub fn is_unlimited(&self) -> bool {
        self.deadline.is_none()
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    pub fn check(&self, what: &str) -> Result<()> {
        if self.expired() {
            return Err(Error::BudgetExceeded(what.to_string()));
        }
        Ok(())
    }
}
