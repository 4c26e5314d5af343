//! Law reports: how many instances were checked and which ones failed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::category::MonoidalCategory;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub instance: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub universe_size: usize,
    pub failures: Vec<Failure>,
    pub seed: u64,
}

impl LawReport {
    pub fn new(law: impl Into<String>, seed: u64) -> Self {
        LawReport {
            law: law.into(),
            universe_size: 0,
            failures: Vec::new(),
            seed,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, instance: String, left: String, right: String) {
        self.failures.push(Failure {
            instance,
            left,
            right,
        });
    }

    /// Record one instance whose two sides are morphisms of `c`.
    pub fn check_sides<C: MonoidalCategory>(
        &mut self,
        c: &C,
        instance: impl FnOnce() -> String,
        sides: Result<(C::Mor, C::Mor)>,
    ) {
        self.universe_size += 1;
        match sides {
            Ok((l, r)) => {
                let same_ends = c.dom(&l) == c.dom(&r) && c.cod(&l) == c.cod(&r);
                if !(same_ends && c.mor_eq(&l, &r)) {
                    self.fail(instance(), c.mor_label(&l), c.mor_label(&r));
                }
            }
            Err(e) => self.fail(instance(), format!("error: {e}"), String::new()),
        }
    }

    /// Record one instance compared with `==`.
    pub fn check_eq<T: PartialEq + fmt::Debug>(
        &mut self,
        instance: impl FnOnce() -> String,
        left: Result<T>,
        right: Result<T>,
    ) {
        self.universe_size += 1;
        match (left, right) {
            (Ok(l), Ok(r)) if l == r => {}
            (Ok(l), Ok(r)) => self.fail(instance(), format!("{l:?}"), format!("{r:?}")),
            (Err(e), _) | (_, Err(e)) => {
                self.fail(instance(), format!("error: {e}"), String::new())
            }
        }
    }

    /// Record one instance decided by a boolean check.
    pub fn check_true(&mut self, instance: impl FnOnce() -> String, ok: Result<bool>) {
        self.universe_size += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => self.fail(instance(), "false".into(), "true".into()),
            Err(e) => self.fail(instance(), format!("error: {e}"), String::new()),
        }
    }

    /// Fold another report's counts and failures into this one.
    pub fn absorb(&mut self, other: LawReport) {
        self.universe_size += other.universe_size;
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(
            f,
            "{}: {} ({} instances, {} failures, seed {})",
            self.law,
            status,
            self.universe_size,
            self.failures.len(),
            self.seed
        )?;
        for fail in &self.failures {
            write!(f, "\n  {}: {} vs {}", fail.instance, fail.left, fail.right)?;
        }
        Ok(())
    }
}
