//! A small runner for acceptance criteria.
//!
//! Each criterion is a closure that returns a short detail string on success
//! or the reason it failed. The runner times it against its budget and prints
//! exactly one `[PASS]` or `[FAIL]` line per criterion, so the outcome of every
//! criterion is visible even when an earlier one fails. Lives in its own
//! package so that `cargo test --workspace` runs it after every other suite.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

/// Result of one criterion body: detail on success, reason on failure.
pub type Check = Result<String, String>;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: String,
    pub passed: bool,
    pub elapsed: Duration,
}

#[derive(Debug, Default)]
pub struct Suite {
    outcomes: Vec<Outcome>,
}

fn human(d: Duration) -> String {
    let ms = d.as_secs_f64() * 1e3;
    if ms < 1000.0 {
        format!("{ms:.3} ms")
    } else {
        format!("{:.2} s", ms / 1e3)
    }
}

impl Suite {
    pub fn new() -> Suite {
        Suite::default()
    }

    /// Runs `body`, which passes only if it returns `Ok` within `budget`.
    pub fn criterion(
        &mut self,
        id: &str,
        title: &str,
        budget: Duration,
        body: impl FnOnce() -> Check,
    ) {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(format!("panic: {msg}"))
        });
        let elapsed = start.elapsed();
        let timing = format!("{} / budget {}", human(elapsed), human(budget));
        let (passed, detail) = match result {
            Ok(detail) if elapsed <= budget => (true, detail),
            Ok(detail) => (false, format!("over time budget; {detail}")),
            Err(reason) => (false, reason),
        };
        let tag = if passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {id} {title} ({timing}): {detail}");
        self.outcomes.push(Outcome {
            id: id.into(),
            passed,
            elapsed,
        });
    }

    pub fn outcomes(&self) -> &[Outcome] {
        &self.outcomes
    }

    /// Prints the tally; true when every criterion passed.
    pub fn finish(&self) -> bool {
        let failed: Vec<&str> = self
            .outcomes
            .iter()
            .filter(|o| !o.passed)
            .map(|o| o.id.as_str())
            .collect();
        println!(
            "acceptance: {} passed, {} failed{}",
            self.outcomes.len() - failed.len(),
            failed.len(),
            if failed.is_empty() {
                String::new()
            } else {
                format!(" ({})", failed.join(", "))
            }
        );
        failed.is_empty()
    }
}

/// `Err(msg)` unless `cond`.
pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}
