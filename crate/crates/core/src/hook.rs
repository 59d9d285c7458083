//! Cooperative progress reporting and cancellation for the long-running
//! solves (commutants and oracle coresolutions at d = 6).

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};

pub trait ProgressHook: Sync {
    /// Called at checkpoints with a stage label and `step` out of `total`
    /// (`total` is 0 when unknown).
    fn report(&self, _stage: &str, _step: usize, _total: usize) {}

    fn is_cancelled(&self) -> bool {
        false
    }
}

/// Ignores progress and never cancels.
#[derive(Clone, Copy, Debug, Default)]
pub struct Silent;

impl ProgressHook for Silent {}

/// A shareable flag; once [`CancelToken::cancel`] is called every solve
/// polling it returns [`Error::Cancelled`] at its next checkpoint.
#[derive(Clone, Debug, Default)]
pub struct CancelToken {
    flag: Arc<AtomicBool>,
}

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.flag.store(true, Ordering::Relaxed);
    }
}

impl ProgressHook for CancelToken {
    fn is_cancelled(&self) -> bool {
        self.flag.load(Ordering::Relaxed)
    }
}

/// Prints each checkpoint to stderr.
#[derive(Clone, Copy, Debug, Default)]
pub struct StderrProgress;

impl ProgressHook for StderrProgress {
    fn report(&self, stage: &str, step: usize, total: usize) {
        if total > 0 {
            eprintln!("[{stage}] {step}/{total}");
        } else {
            eprintln!("[{stage}] {step}");
        }
    }
}

pub(crate) fn checkpoint(hook: &dyn ProgressHook, stage: &str, step: usize, total: usize) -> Result<()> {
    hook.report(stage, step, total);
    if hook.is_cancelled() {
        Err(Error::Cancelled)
    } else {
        Ok(())
    }
}
