use std::sync::Arc;

use crate::error::{Error, Result};
use crate::repr::CharacterCache;

/// Default cap on weight instances materialized by one operation.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

/// Shared configuration for the representation and Dirac engines: an
/// enumeration budget and an optional memo of Freudenthal results.
#[derive(Clone, Debug)]
pub struct Engine {
    budget: u64,
    cache: Option<Arc<CharacterCache>>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine { budget: DEFAULT_BUDGET, cache: None }
    }
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Engine with an in-memory character memo.
    pub fn with_memo() -> Self {
        Engine { budget: DEFAULT_BUDGET, cache: Some(Arc::new(CharacterCache::new())) }
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn cache(mut self, cache: Arc<CharacterCache>) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn budget_limit(&self) -> u64 {
        self.budget
    }

    pub fn character_cache(&self) -> Option<&Arc<CharacterCache>> {
        self.cache.as_ref()
    }

    pub(crate) fn meter(&self, operation: &'static str) -> Meter {
        Meter { used: 0, limit: self.budget, operation }
    }
}

/// Running count of weight instances for one operation.
#[derive(Debug)]
pub(crate) struct Meter {
    used: u64,
    limit: u64,
    operation: &'static str,
}

impl Meter {
    pub fn charge(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            Err(Error::BudgetExceeded { operation: self.operation, budget: self.limit })
        } else {
            Ok(())
        }
    }
}
