//! Report emitters: LaTeX table blocks ready to paste into a document,
//! CSV, and a JSON document that round-trips byte-stably.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::equivalence::{IEquivalenceClass, ZeroAudit, ZeroTableRow};
use crate::indicator::IndicatorMatrix;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("column split {split:?} sums to {got}, expected {expected}")]
    ColumnSplit {
        split: Vec<usize>,
        got: usize,
        expected: usize,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Latex,
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "latex" => Ok(OutputFormat::Latex),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format {other:?} (latex|csv|json)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReportConfig {
    pub format: OutputFormat,
    /// number of divisor columns in each emitted table; must sum to the
    /// total divisor count
    pub columns: Vec<usize>,
    /// rows per table block before a new block is started
    pub rows_cap: usize,
}

impl ReportConfig {
    pub fn new(format: OutputFormat, divisor_count: usize) -> ReportConfig {
        ReportConfig {
            format,
            columns: vec![divisor_count],
            rows_cap: usize::MAX,
        }
    }

    pub fn with_columns(mut self, columns: Vec<usize>) -> ReportConfig {
        self.columns = columns;
        self
    }

    fn check_columns(&self, divisor_count: usize) -> Result<(), ReportError> {
        let got: usize = self.columns.iter().sum();
        if got != divisor_count {
            return Err(ReportError::ColumnSplit {
                split: self.columns.clone(),
                got,
                expected: divisor_count,
            });
        }
        Ok(())
    }
}

fn latex_label(label: (usize, usize)) -> String {
    format!("\\chi_{{{}.{}}}", label.0, label.1)
}

/// The bracketed class listing: one `[ \chi_{i.j}, ... ]` group per
/// I-equivalence class.
pub fn latex_class_listing(classes: &[IEquivalenceClass]) -> String {
    let groups: Vec<String> = classes
        .iter()
        .map(|c| {
            let members: Vec<String> = c.members.iter().map(|&l| latex_label(l)).collect();
            format!("[\\ {}\\ ]", members.join(", "))
        })
        .collect();
    format!("${}$.\n", groups.join(", "))
}

/// LaTeX table blocks shaped like the published indicator tables: one row
/// per I-equivalence class, columns split according to `config.columns`.
pub fn latex_report(
    matrix: &IndicatorMatrix,
    classes: &[IEquivalenceClass],
    config: &ReportConfig,
) -> Result<String, ReportError> {
    config.check_columns(matrix.divisors.len())?;
    let mut out = String::new();
    out.push_str(
        "% Row labels chi_{i.j} use this program's character-table ordering;\n\
         % the j indices may differ from other published orderings.\n",
    );
    let mut start = 0usize;
    for &width in &config.columns {
        let cols = &matrix.divisors[start..start + width];
        out.push_str("\\begin{table}[ht]\n");
        out.push_str(&format!(
            "\\caption{{$D(S_{})$ indicators: (exponent {})}}\n",
            matrix.n, matrix.exponent
        ));
        out.push_str("$\n\\begin{array}{r|");
        out.push_str(&"c".repeat(width));
        out.push_str("} \\hline\n");
        out.push_str("m = ");
        for m in cols {
            out.push_str(&format!(" & {m}"));
        }
        out.push_str(" \\\\ \\hline\n");
        for class in classes {
            let rep = class.members[0];
            out.push_str(&format!("\\nu_m({})", latex_label(rep)));
            for c in start..start + width {
                out.push_str(&format!(" & {}", class.row[c]));
            }
            out.push_str(" \\\\\n");
        }
        out.push_str("\\hline\n\\end{array}\n$\n\\end{table}\n");
        start += width;
    }
    out.push('\n');
    out.push_str(&latex_class_listing(classes));
    Ok(out)
}

/// CSV with one line per induced character (not reduced to classes):
/// `label,m=1,m=2,...`.
pub fn csv_report(matrix: &IndicatorMatrix) -> String {
    let mut out = String::from("label");
    for m in &matrix.divisors {
        out.push_str(&format!(",m={m}"));
    }
    out.push('\n');
    for (r, row) in matrix.rows.iter().enumerate() {
        out.push_str(&matrix.label_of(r));
        for v in row {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub n: usize,
    pub exponent: u64,
    pub divisors: Vec<u64>,
    pub classes: Vec<JsonClass>,
    pub zeros: Vec<ZeroTableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonClass {
    /// `"i.j"` labels of every member
    pub members: Vec<String>,
    pub row: Vec<i64>,
}

pub fn json_report(
    matrix: &IndicatorMatrix,
    classes: &[IEquivalenceClass],
    audit: &ZeroAudit,
) -> JsonReport {
    JsonReport {
        n: matrix.n,
        exponent: matrix.exponent,
        divisors: matrix.divisors.clone(),
        classes: classes
            .iter()
            .map(|c| JsonClass {
                members: c.members.iter().map(|(i, j)| format!("{i}.{j}")).collect(),
                row: c.row.clone(),
            })
            .collect(),
        zeros: audit.table.clone(),
    }
}

pub fn json_to_string(report: &JsonReport) -> Result<String, ReportError> {
    Ok(serde_json::to_string_pretty(report)?)
}

/// The zero-audit listing in the shape of the published zero table:
/// `u | m values | class count | all`.
pub fn zeros_report(audit: &ZeroAudit) -> String {
    let mut out = String::from("u\tm\tclasses\tall\n");
    for row in &audit.table {
        let ms: Vec<String> = row.ms.iter().map(|m| m.to_string()).collect();
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            row.u,
            ms.join(" "),
            row.class_count,
            if row.all { "all" } else { "" }
        ));
    }
    out.push_str(&format!(
        "unexpected zero total: {}\nnon-trivially-induced classes: {}\n",
        audit.unexpected_total, audit.nontrivial_class_total
    ));
    out
}
