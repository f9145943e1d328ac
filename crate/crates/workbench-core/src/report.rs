//! Deterministic verification reports, emitted as JSON or Markdown.

use serde::Serialize;

use crate::chartab::CharacterTable;
use crate::group::FiniteGroup;
use crate::octa::GroupContext;

pub const SCHEMA_VERSION: u32 = 1;

/// One verified claim.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub claim: String,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
}

impl Check {
    pub fn compare(
        id: &str,
        claim: &str,
        computed: impl ToString,
        expected: impl ToString,
    ) -> Check {
        let computed = computed.to_string();
        let expected = expected.to_string();
        Check {
            id: id.to_string(),
            claim: claim.to_string(),
            pass: computed == expected,
            computed,
            expected,
        }
    }

    pub fn bool(id: &str, claim: &str, pass: bool) -> Check {
        Check {
            id: id.to_string(),
            claim: claim.to_string(),
            computed: pass.to_string(),
            expected: "true".to_string(),
            pass,
        }
    }
}

/// A titled list of checks. Serialization order is fixed, so reports are
/// byte-identical across runs.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: &str) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            title: title.to_string(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("# {}\n\n", self.title);
        out.push_str("| id | claim | computed | expected | pass |\n");
        out.push_str("|---|---|---|---|---|\n");
        for c in &self.checks {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                c.id,
                c.claim,
                escape_cell(&c.computed),
                escape_cell(&c.expected),
                if c.pass { "pass" } else { "FAIL" }
            ));
        }
        let failures = self.failures().len();
        out.push_str(&format!(
            "\n{} checks, {} failed.\n",
            self.checks.len(),
            failures
        ));
        out
    }
}

fn escape_cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', "<br>")
}

/// Class data in the canonical serialization:
/// `{group, order, classes: [{rep_word, element_order, size}]}`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassData {
    pub group: String,
    pub order: usize,
    pub classes: Vec<ClassEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassEntry {
    pub rep_word: String,
    pub element_order: u32,
    pub size: usize,
}

pub fn class_data(label: &str, g: &FiniteGroup) -> ClassData {
    ClassData {
        group: label.to_string(),
        order: g.order(),
        classes: g
            .classes()
            .iter()
            .map(|c| ClassEntry {
                rep_word: g.display(c.rep).to_string(),
                element_order: c.element_order,
                size: c.size,
            })
            .collect(),
    }
}

/// Character table serialization:
/// `{group, columns, irreps: [{label, degree, values}]}`.
#[derive(Debug, Clone, Serialize)]
pub struct TableData {
    pub group: String,
    /// Display names of the class representatives, column order.
    pub columns: Vec<String>,
    pub irreps: Vec<IrrepEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IrrepEntry {
    pub label: String,
    pub degree: String,
    pub values: Vec<String>,
}

/// Columns of a rendered table: canonical class index plus the conventional
/// column header.
pub fn default_columns(g: &FiniteGroup, class_order: &[usize]) -> Vec<(usize, String)> {
    class_order
        .iter()
        .map(|&c| (c, g.display(g.classes()[c].rep).to_string()))
        .collect()
}

/// Emits a table with columns permuted and labelled as given.
pub fn table_data(
    label: &str,
    g: &FiniteGroup,
    table: &CharacterTable,
    columns: &[(usize, String)],
) -> TableData {
    let id_class = g.class_of(0);
    let irreps = table
        .chars
        .iter()
        .map(|chi| IrrepEntry {
            label: chi.label.clone(),
            degree: chi.values[id_class].to_pretty_string(),
            values: columns
                .iter()
                .map(|(c, _)| chi.values[*c].to_canonical_string())
                .collect(),
        })
        .collect();
    TableData {
        group: label.to_string(),
        columns: columns.iter().map(|(_, n)| n.clone()).collect(),
        irreps,
    }
}

/// Markdown rendering of a character table in the conventional layout:
/// rows are irreducibles, columns are classes.
pub fn table_markdown(
    label: &str,
    _g: &FiniteGroup,
    table: &CharacterTable,
    columns: &[(usize, String)],
) -> String {
    let mut out = format!("# Character table of {label}\n\n| |");
    for (_, name) in columns {
        out.push_str(&format!(" {name} |"));
    }
    out.push_str("\n|---|");
    for _ in columns {
        out.push_str("---|");
    }
    out.push('\n');
    for chi in &table.chars {
        out.push_str(&format!("| {} |", chi.label));
        for (c, _) in columns {
            out.push_str(&format!(" {} |", chi.values[*c].to_pretty_string()));
        }
        out.push('\n');
    }
    out
}

/// Full matrix dump of a representation: one entry per group element, the
/// matrix given as rows of canonical scalar strings.
#[derive(Debug, Clone, Serialize)]
pub struct RepData {
    pub label: String,
    pub dimension: usize,
    pub images: Vec<RepImage>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RepImage {
    pub element: String,
    pub rows: Vec<Vec<String>>,
}

pub fn rep_data(g: &FiniteGroup, rep: &crate::reps::MatrixRep) -> RepData {
    let dim = rep.dimension();
    let images = rep
        .images
        .iter()
        .enumerate()
        .map(|(id, m)| RepImage {
            element: g.display(id as u32).to_string(),
            rows: (0..dim)
                .map(|r| (0..dim).map(|c| m.at(r, c).to_canonical_string()).collect())
                .collect(),
        })
        .collect();
    RepData {
        label: rep.label.clone(),
        dimension: dim,
        images,
    }
}

/// Idempotent serialization: `{name, coeffs: [{word, value}], checks}`.
#[derive(Debug, Clone, Serialize)]
pub struct IdempotentData {
    pub name: String,
    pub coeffs: Vec<CoeffEntry>,
    pub checks: Vec<PropertyEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoeffEntry {
    pub word: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyEntry {
    pub property: String,
    pub pass: bool,
}

pub fn idempotent_data(
    name: &str,
    ctx: &GroupContext,
    element: &crate::algebra::AlgebraElement,
    checks: Vec<(String, bool)>,
) -> IdempotentData {
    IdempotentData {
        name: name.to_string(),
        coeffs: element
            .support()
            .map(|(id, v)| CoeffEntry {
                word: ctx.group.display(*id).to_string(),
                value: v.to_canonical_string(),
            })
            .collect(),
        checks: checks
            .into_iter()
            .map(|(property, pass)| PropertyEntry { property, pass })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trip_and_flags() {
        let mut r = Report::new("sample");
        r.push(Check::compare("a", "one equals one", 1, 1));
        r.push(Check::bool("b", "holds", true));
        assert!(r.passed());
        r.push(Check::compare("c", "one equals two", 1, 2));
        assert!(!r.passed());
        assert_eq!(r.failures().len(), 1);
        let json = r.to_json();
        assert!(json.contains("\"schema_version\": 1"));
        // Deterministic: serializing twice gives identical bytes.
        assert_eq!(json, r.to_json());
        let md = r.to_markdown();
        assert!(md.contains("| c | one equals two | 1 | 2 | FAIL |"));
    }
}
