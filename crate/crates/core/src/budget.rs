//! Step budgets and cooperative cancellation for exponential searches.

use std::cell::Cell;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::error::Error;

/// Shared flag a caller can raise to stop running searches.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// Upper bound on search steps (extension steps of a backtracking search).
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_steps: u64,
    pub cancel: Option<CancelToken>,
}

impl Budget {
    pub const DEFAULT_STEPS: u64 = 50_000_000;

    pub fn steps(max_steps: u64) -> Self {
        Budget {
            max_steps,
            cancel: None,
        }
    }

    pub fn unlimited() -> Self {
        Budget::steps(u64::MAX)
    }

    pub fn with_cancel(mut self, token: CancelToken) -> Self {
        self.cancel = Some(token);
        self
    }

    pub fn meter(&self) -> Meter<'_> {
        Meter {
            budget: self,
            used: Cell::new(0),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::steps(Self::DEFAULT_STEPS)
    }
}

/// Running step counter against a [`Budget`]. Shared by reference between
/// nested searches.
#[derive(Debug)]
pub struct Meter<'a> {
    budget: &'a Budget,
    used: Cell<u64>,
}

impl Meter<'_> {
    #[inline]
    pub fn tick(&self) -> Result<(), Error> {
        let used = self.used.get() + 1;
        self.used.set(used);
        if used > self.budget.max_steps {
            return Err(Error::BudgetExhausted { steps: used - 1 });
        }
        if used & 0x3ff == 0 {
            if let Some(c) = &self.budget.cancel {
                if c.is_cancelled() {
                    return Err(Error::Cancelled);
                }
            }
        }
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }
}
