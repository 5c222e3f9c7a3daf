//! Axiom reports.
//!
//! Checkers never throw on mathematical failure: each axiom becomes a row with
//! a pass flag and, on failure, a minimal counterexample (the basis
//! multi-index where the two sides first disagree, with both evaluated sides).
//! Failure as data lets callers print exactly where a structure breaks.

use std::fmt;

use crate::multilinear::{first_mismatch, MultilinearMap};
use crate::scalar::{render_scalar, Scalar};

/// Witness that an axiom fails: evaluating both sides at `basis_index` gives
/// `lhs != rhs`. For invertibility checks `basis_index` is empty, `lhs` is a
/// nonzero kernel vector and `rhs` its (zero) image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub basis_index: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_vec = |v: &[Scalar]| -> String {
            let parts: Vec<String> = v.iter().map(render_scalar).collect();
            format!("({})", parts.join(", "))
        };
        write!(
            f,
            "at basis index {:?}: lhs = {}, rhs = {}",
            self.basis_index,
            fmt_vec(&self.lhs),
            fmt_vec(&self.rhs)
        )
    }
}

/// One verified axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub id: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

/// Result of running a checker: one row per axiom, in a stable order, plus
/// free-form informational notes (coverage, reported variants) that do not
/// affect the verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
    pub info: Vec<String>,
}

impl AxiomReport {
    pub fn new() -> Self {
        AxiomReport::default()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.id.as_str()).collect()
    }

    pub fn check(&self, id: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.check(id).is_some_and(|c| c.passed)
    }

    /// Records an exact equality of two multilinear maps as an axiom row.
    pub fn require_map_eq(&mut self, id: &str, lhs: &MultilinearMap, rhs: &MultilinearMap) {
        let counterexample = first_mismatch(lhs, rhs).map(|(basis_index, lhs, rhs)| Counterexample {
            basis_index,
            lhs,
            rhs,
        });
        self.checks.push(AxiomCheck {
            id: id.to_string(),
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    /// Records an exact equality of two vectors (e.g. images of the unit).
    pub fn require_vec_eq(&mut self, id: &str, lhs: &[Scalar], rhs: &[Scalar]) {
        let passed = lhs == rhs;
        self.checks.push(AxiomCheck {
            id: id.to_string(),
            passed,
            counterexample: (!passed).then(|| Counterexample {
                basis_index: vec![],
                lhs: lhs.to_vec(),
                rhs: rhs.to_vec(),
            }),
        });
    }

    /// Records invertibility of a square map, with a kernel-vector witness on
    /// failure.
    pub fn require_invertible(&mut self, id: &str, map: &crate::mat::LinMap) {
        let counterexample = if map.domain_dim() == map.codomain_dim() {
            map.kernel_vector().map(|k| {
                let image = map.apply(&k);
                Counterexample {
                    basis_index: vec![],
                    lhs: k,
                    rhs: image,
                }
            })
        } else {
            Some(Counterexample {
                basis_index: vec![],
                lhs: vec![],
                rhs: vec![],
            })
        };
        self.checks.push(AxiomCheck {
            id: id.to_string(),
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    pub fn push_result(&mut self, id: &str, passed: bool) {
        self.checks.push(AxiomCheck {
            id: id.to_string(),
            passed,
            counterexample: None,
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.info.push(text.into());
    }

    /// Appends all rows of `other`, prefixing ids with `prefix`.
    pub fn absorb(&mut self, prefix: &str, other: AxiomReport) {
        for mut c in other.checks {
            c.id = format!("{prefix}{}", c.id);
            self.checks.push(c);
        }
        for n in other.info {
            self.info.push(format!("{prefix}{n}"));
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed {
                writeln!(f, "PASS {}", c.id)?;
            } else {
                writeln!(f, "FAIL {}", c.id)?;
                if let Some(ce) = &c.counterexample {
                    writeln!(f, "     {}", ce)?;
                }
            }
        }
        for n in &self.info {
            writeln!(f, "note {}", n)?;
        }
        Ok(())
    }
}
