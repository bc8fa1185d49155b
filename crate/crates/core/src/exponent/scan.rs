use serde::{Deserialize, Serialize};

use super::estimate::{estimate_ce_numeric, DEFAULT_GRID_STEP};
use super::formulas::critical_exponent_clique_formula;
use super::search::SearchConfig;
use crate::chordal::is_chordal;
use crate::cones::PowerFamily;
use crate::error::Result;
use crate::graph::{max_near_complete_order_fast, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub family: PowerFamily,
    pub grid_step: f64,
    pub search: SearchConfig,
    pub seed: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            family: PowerFamily::Plain,
            grid_step: DEFAULT_GRID_STEP,
            search: SearchConfig::default(),
            seed: 0,
        }
    }
}

/// One line of the scan report. On error only `index` and `error` are set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chordal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    /// `r - 2`, the conjectured critical exponent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique_formula: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_mismatch: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_is_heuristic: Option<bool>,
    /// The bracket contains an integer.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral_candidate: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flagged: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub graphs: usize,
    pub errors: usize,
    pub agreements: usize,
    pub flags: usize,
    pub formula_mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

impl ScanReport {
    /// One JSON object per graph, newline terminated.
    pub fn to_json_lines(&self) -> String {
        self.records
            .iter()
            .map(|r| serde_json::to_string(r).expect("record serialization cannot fail") + "\n")
            .collect()
    }
}

fn scan_one(index: usize, g: &Graph, config: &ScanConfig) -> Result<ScanRecord> {
    let r = max_near_complete_order_fast(g)?;
    let predicted = r - 2;
    let chordal = is_chordal(g);
    let clique_formula = if chordal {
        Some(critical_exponent_clique_formula(g)?)
    } else {
        None
    };
    let bracket = estimate_ce_numeric(g, config.family, config.grid_step, &config.search, config.seed)?;
    let integral_candidate = bracket.upper.floor() >= bracket.lower;
    Ok(ScanRecord {
        index,
        n: Some(g.n()),
        chordal: Some(chordal),
        r: Some(r),
        predicted: Some(predicted),
        clique_formula,
        formula_mismatch: clique_formula.map(|c| c != predicted),
        lower: Some(bracket.lower),
        upper: Some(bracket.upper),
        upper_is_heuristic: Some(bracket.upper_is_heuristic),
        integral_candidate: Some(integral_candidate),
        flagged: Some(!bracket.contains(predicted as f64)),
        error: None,
    })
}

/// Compares `r - 2` with the numeric bracket for every graph. Per-graph
/// errors become error records and the scan continues.
pub fn conjecture_scan<I>(graphs: I, config: &ScanConfig) -> ScanReport
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let mut records = Vec::new();
    let mut summary = ScanSummary::default();
    for (index, g) in graphs.into_iter().enumerate() {
        summary.graphs += 1;
        let record = g.and_then(|g| scan_one(index, &g, config));
        match record {
            Ok(rec) => {
                if rec.flagged == Some(true) {
                    summary.flags += 1;
                } else {
                    summary.agreements += 1;
                }
                if rec.formula_mismatch == Some(true) {
                    summary.formula_mismatches += 1;
                }
                records.push(rec);
            }
            Err(e) => {
                summary.errors += 1;
                records.push(ScanRecord {
                    index,
                    n: None,
                    chordal: None,
                    r: None,
                    predicted: None,
                    clique_formula: None,
                    formula_mismatch: None,
                    lower: None,
                    upper: None,
                    upper_is_heuristic: None,
                    integral_candidate: None,
                    flagged: None,
                    error: Some(e.to_string()),
                });
            }
        }
    }
    ScanReport { records, summary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::GraphFamily;

    #[test]
    fn empty_stream() {
        let report = conjecture_scan(Vec::new(), &ScanConfig::default());
        assert!(report.records.is_empty());
        assert_eq!(report.summary, ScanSummary::default());
        assert_eq!(report.to_json_lines(), "");
    }

    #[test]
    fn errors_do_not_abort() {
        let graphs = vec![
            Err(Error::Parse { line: 3, message: "bad".into() }),
            Ok(Graph::empty(1)),
            GraphFamily::Path { n: 3 }.generate(),
        ];
        let report = conjecture_scan(graphs, &ScanConfig::default());
        assert_eq!(report.summary.graphs, 3);
        assert_eq!(report.summary.errors, 2);
        assert_eq!(report.summary.flags, 0);
        let last = &report.records[2];
        assert_eq!(last.predicted, Some(1));
        assert_eq!(last.formula_mismatch, Some(false));
        assert_eq!(report.to_json_lines().lines().count(), 3);
    }
}
