use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of one postulate over a case space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PostulateReport {
    pub postulate: String,
    pub passed: bool,
    /// Cases examined: the whole space on a pass, up to and including the
    /// witness on a failure.
    pub cases_checked: u64,
    /// Named inputs of the first violating case, as formula or program
    /// text over the checked alphabet.
    pub witness: Option<BTreeMap<String, String>>,
}

impl PostulateReport {
    pub(crate) fn from_search(
        postulate: &str,
        total: u64,
        found: Option<u64>,
        witness: impl FnOnce(u64) -> BTreeMap<String, String>,
    ) -> Self {
        match found {
            None => PostulateReport {
                postulate: postulate.into(),
                passed: true,
                cases_checked: total,
                witness: None,
            },
            Some(i) => PostulateReport {
                postulate: postulate.into(),
                passed: false,
                cases_checked: i + 1,
                witness: Some(witness(i)),
            },
        }
    }
}

impl fmt::Display for PostulateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(
            f,
            "{:<4} {:<5} {:>9} cases",
            self.postulate, verdict, self.cases_checked
        )?;
        if let Some(w) = &self.witness {
            for (k, v) in w {
                write!(f, "\n    {k}: {}", v.replace('\n', " "))?;
            }
        }
        Ok(())
    }
}

/// Renders a list of reports as a table.
pub fn render_reports(reports: &[PostulateReport]) -> String {
    reports
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}
