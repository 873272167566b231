//! Incomplete decision tables: data model, CSV ingestion and serialization.
//!
//! A table holds the universe U (row identifiers), the condition attributes C,
//! one decision attribute d and the value grid. Condition cells may be
//! missing; decision cells may not.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::sets::AttrSubset;

/// A single condition cell.
///
/// The derived `PartialEq` is structural (`Missing == Missing`) and is meant
/// for comparing tables. Relation code must use [`AttrValue::agrees_with`],
/// under which a missing value agrees with nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AttrValue {
    Missing,
    Symbol(String),
}

impl AttrValue {
    pub fn symbol(token: impl Into<String>) -> Self {
        AttrValue::Symbol(token.into())
    }

    pub fn is_missing(&self) -> bool {
        matches!(self, AttrValue::Missing)
    }

    /// Both values are specified and carry the same token.
    pub fn agrees_with(&self, other: &AttrValue) -> bool {
        match (self, other) {
            (AttrValue::Symbol(a), AttrValue::Symbol(b)) => a == b,
            _ => false,
        }
    }

    pub fn as_symbol(&self) -> Option<&str> {
        match self {
            AttrValue::Symbol(s) => Some(s),
            AttrValue::Missing => None,
        }
    }
}

/// Which column of the input holds the decision attribute.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum DecisionColumn {
    #[default]
    Last,
    Named(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseOptions {
    /// Token standing for a missing value.
    pub missing_token: String,
    /// First column holds object identifiers.
    pub id_column: bool,
    pub decision: DecisionColumn,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            missing_token: "*".to_string(),
            id_column: false,
            decision: DecisionColumn::Last,
        }
    }
}

impl ParseOptions {
    pub fn with_ids() -> Self {
        ParseOptions {
            id_column: true,
            ..Default::default()
        }
    }
}

/// An incomplete decision table K = (U, C ∪ {d}, V, f).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionTable {
    objects: Vec<String>,
    attrs: Vec<String>,
    decision_attr: String,
    /// Row-major, `objects.len() * attrs.len()` cells.
    cells: Vec<AttrValue>,
    decisions: Vec<String>,
}

impl DecisionTable {
    /// Builds a table from rows of condition values.
    ///
    /// `rows[i]` holds the condition values of `objects[i]` in `attrs` order.
    pub fn new(
        objects: Vec<String>,
        attrs: Vec<String>,
        decision_attr: impl Into<String>,
        rows: Vec<Vec<AttrValue>>,
        decisions: Vec<String>,
    ) -> Result<Self> {
        let decision_attr = decision_attr.into();
        if objects.is_empty() {
            return Err(Error::parse(0, "table has no objects"));
        }
        if attrs.is_empty() {
            return Err(Error::parse(0, "table has no condition attributes"));
        }
        if rows.len() != objects.len() || decisions.len() != objects.len() {
            return Err(Error::parse(0, "row count does not match object count"));
        }
        let mut seen = HashSet::new();
        for o in &objects {
            if !seen.insert(o.as_str()) {
                return Err(Error::parse(0, format!("duplicate object id `{o}`")));
            }
        }
        let mut seen = HashSet::new();
        for a in attrs.iter().chain(std::iter::once(&decision_attr)) {
            if !seen.insert(a.as_str()) {
                return Err(Error::parse(0, format!("duplicate attribute `{a}`")));
            }
        }
        let mut cells = Vec::with_capacity(objects.len() * attrs.len());
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != attrs.len() {
                return Err(Error::parse(
                    i + 1,
                    format!(
                        "expected {} condition values, found {}",
                        attrs.len(),
                        row.len()
                    ),
                ));
            }
            cells.extend(row);
        }
        Ok(DecisionTable {
            objects,
            attrs,
            decision_attr,
            cells,
            decisions,
        })
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_attrs(&self) -> usize {
        self.attrs.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attrs(&self) -> &[String] {
        &self.attrs
    }

    pub fn decision_attr(&self) -> &str {
        &self.decision_attr
    }

    pub fn decisions(&self) -> &[String] {
        &self.decisions
    }

    pub fn decision(&self, x: usize) -> &str {
        &self.decisions[x]
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn attr_name(&self, a: usize) -> &str {
        &self.attrs[a]
    }

    /// Panics if `x` or `a` is out of range.
    pub fn value(&self, x: usize, a: usize) -> &AttrValue {
        &self.cells[x * self.attrs.len() + a]
    }

    pub fn row(&self, x: usize) -> &[AttrValue] {
        let m = self.attrs.len();
        &self.cells[x * m..(x + 1) * m]
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn attr_index(&self, name: &str) -> Result<usize> {
        self.attrs
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::UnknownAttribute(name.to_string()))
    }

    pub(crate) fn check_object(&self, x: usize) -> Result<()> {
        if x < self.objects.len() {
            Ok(())
        } else {
            Err(Error::UnknownObject(format!("#{x}")))
        }
    }

    pub(crate) fn check_attrs(&self, attrs: &AttrSubset) -> Result<()> {
        if attrs.width() != self.attrs.len() {
            return Err(Error::Config(format!(
                "attribute subset has width {}, table has {} attributes",
                attrs.width(),
                self.attrs.len()
            )));
        }
        Ok(())
    }

    /// The full condition attribute set C.
    pub fn all_attrs(&self) -> AttrSubset {
        AttrSubset::full(self.attrs.len())
    }

    /// Resolves attribute names to a subset.
    pub fn attr_subset<S: AsRef<str>>(&self, names: &[S]) -> Result<AttrSubset> {
        let mut set = AttrSubset::empty(self.attrs.len());
        for n in names {
            set.insert(self.attr_index(n.as_ref())?);
        }
        Ok(set)
    }

    pub fn attr_names(&self, set: &AttrSubset) -> Vec<String> {
        set.iter().map(|a| self.attrs[a].clone()).collect()
    }

    pub fn object_names(&self, set: &crate::sets::ObjectSet) -> Vec<String> {
        set.iter().map(|x| self.objects[x].clone()).collect()
    }

    pub fn missing_count(&self) -> usize {
        self.cells.iter().filter(|v| v.is_missing()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.missing_count() == 0
    }

    /// P(x): the condition attributes on which `x` is specified.
    pub fn specified_attrs(&self, x: usize) -> Result<AttrSubset> {
        self.check_object(x)?;
        Ok(AttrSubset::from_indices(
            self.attrs.len(),
            self.row(x)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_missing())
                .map(|(a, _)| a),
        ))
    }

    /// Same objects and decisions, grid restricted to `attrs` (kept in table order).
    pub fn project(&self, attrs: &AttrSubset) -> Result<DecisionTable> {
        self.check_attrs(attrs)?;
        if attrs.is_empty() {
            return Err(Error::EmptyAttributes);
        }
        let keep = attrs.to_vec();
        let rows = (0..self.num_objects())
            .map(|x| keep.iter().map(|&a| self.value(x, a).clone()).collect())
            .collect();
        DecisionTable::new(
            self.objects.clone(),
            keep.iter().map(|&a| self.attrs[a].clone()).collect(),
            self.decision_attr.clone(),
            rows,
            self.decisions.clone(),
        )
    }
}

fn split_record(line: &str, line_no: usize) -> Result<Vec<String>> {
    if line.contains('"') {
        return Err(Error::parse(line_no, "quoted cells are not supported"));
    }
    Ok(line.split(',').map(|c| c.trim().to_string()).collect())
}

/// Parses a comma-separated table with a header row.
pub fn parse_table(text: &str, options: &ParseOptions) -> Result<DecisionTable> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty());

    let (header_line, header) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
    let header = split_record(header, header_line)?;
    let width = header.len();
    let first_attr = usize::from(options.id_column);
    if width < first_attr + 2 {
        return Err(Error::parse(
            header_line,
            "header needs at least one condition column and a decision column",
        ));
    }
    let decision_col = match &options.decision {
        DecisionColumn::Last => width - 1,
        DecisionColumn::Named(name) => header[first_attr..]
            .iter()
            .position(|h| h == name)
            .map(|p| p + first_attr)
            .ok_or_else(|| Error::parse(header_line, format!("no decision column `{name}`")))?,
    };
    if header.iter().any(|h| h.is_empty()) {
        return Err(Error::parse(header_line, "empty column name"));
    }
    let attr_cols: Vec<usize> = (first_attr..width).filter(|&c| c != decision_col).collect();
    let attrs = attr_cols.iter().map(|&c| header[c].clone()).collect();

    let mut objects = Vec::new();
    let mut rows = Vec::new();
    let mut decisions = Vec::new();
    for (line_no, line) in lines {
        let record = split_record(line, line_no)?;
        if record.len() != width {
            return Err(Error::parse(
                line_no,
                format!("expected {width} fields, found {}", record.len()),
            ));
        }
        let decision = &record[decision_col];
        if *decision == options.missing_token {
            return Err(Error::parse(line_no, "missing decision value"));
        }
        if decision.is_empty() {
            return Err(Error::parse(line_no, "empty decision value"));
        }
        let id = if options.id_column {
            record[0].clone()
        } else {
            (objects.len() + 1).to_string()
        };
        let row = attr_cols
            .iter()
            .map(|&c| {
                let cell = &record[c];
                if *cell == options.missing_token {
                    Ok(AttrValue::Missing)
                } else if cell.is_empty() {
                    Err(Error::parse(
                        line_no,
                        format!("empty cell in column `{}`", header[c]),
                    ))
                } else {
                    Ok(AttrValue::Symbol(cell.clone()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        objects.push(id);
        rows.push(row);
        decisions.push(decision.clone());
    }
    if objects.is_empty() {
        return Err(Error::parse(header_line, "table has no rows"));
    }
    DecisionTable::new(
        objects,
        attrs,
        header[decision_col].clone(),
        rows,
        decisions,
    )
}

/// Renders a table as CSV with a leading `id` column and the decision last.
///
/// Reading the output back requires [`ParseOptions::with_ids`].
pub fn serialize_table(table: &DecisionTable) -> String {
    let mut out = String::new();
    out.push_str("id");
    for a in &table.attrs {
        let _ = write!(out, ",{a}");
    }
    let _ = writeln!(out, ",{}", table.decision_attr);
    for x in 0..table.num_objects() {
        out.push_str(&table.objects[x]);
        for v in table.row(x) {
            out.push(',');
            out.push_str(v.as_symbol().unwrap_or("*"));
        }
        let _ = writeln!(out, ",{}", table.decisions[x]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE1: &str = include_str!("../tests/data/table1.csv");

    fn table1() -> DecisionTable {
        parse_table(TABLE1, &ParseOptions::with_ids()).unwrap()
    }

    #[test]
    fn parses_single_row() {
        let t = parse_table("id,c1,c2,d\na1,3,*,P\n", &ParseOptions::with_ids()).unwrap();
        assert_eq!(t.num_objects(), 1);
        assert_eq!(t.num_attrs(), 2);
        assert_eq!(t.value(0, 1), &AttrValue::Missing);
        assert_eq!(t.value(0, 0), &AttrValue::symbol("3"));
        assert_eq!(t.decision_attr(), "d");
    }

    #[test]
    fn table1_shape() {
        let t = table1();
        assert_eq!(t.num_objects(), 12);
        assert_eq!(t.num_attrs(), 4);
        assert_eq!(t.missing_count(), 15);
        assert_eq!(t.object_name(11), "a12");
    }

    #[test]
    fn rejects_missing_decision() {
        let err = parse_table("id,c1,c2,d\na1,3,*,*\n", &ParseOptions::with_ids()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn rejects_malformed_input() {
        let opts = ParseOptions::with_ids();
        assert!(parse_table("", &opts).is_err());
        assert!(parse_table("id,c1,d\n", &opts).is_err());
        assert!(parse_table("id,c1,d\na1,1\n", &opts).is_err());
        assert!(parse_table("id,c1,d\na1,1,P\na1,2,Q\n", &opts).is_err());
        assert!(parse_table("id,c1,c1,d\na1,1,2,P\n", &opts).is_err());
        assert!(parse_table("id,c1,d\na1,\"1,2\",P\n", &opts).is_err());
        assert!(parse_table("id,d\na1,P\n", &opts).is_err());
    }

    #[test]
    fn synthesizes_ids_and_selects_named_decision() {
        let opts = ParseOptions {
            decision: DecisionColumn::Named("d".into()),
            ..Default::default()
        };
        let t = parse_table("d,c1,c2\nP,1,?\nQ,2,3\n", &opts).unwrap();
        assert_eq!(t.objects(), &["1".to_string(), "2".to_string()]);
        assert_eq!(t.attrs(), &["c1".to_string(), "c2".to_string()]);
        assert_eq!(t.value(0, 1), &AttrValue::symbol("?"));

        let opts = ParseOptions {
            missing_token: "?".into(),
            decision: DecisionColumn::Named("d".into()),
            ..Default::default()
        };
        let t = parse_table("d,c1,c2\nP,1,?\nQ,2,3\n", &opts).unwrap();
        assert!(t.value(0, 1).is_missing());
    }

    #[test]
    fn tokens_compare_exactly() {
        assert!(!AttrValue::symbol("3").agrees_with(&AttrValue::symbol("03")));
        assert!(!AttrValue::Missing.agrees_with(&AttrValue::Missing));
        assert!(AttrValue::symbol("3").agrees_with(&AttrValue::symbol("3")));
    }

    #[test]
    fn serialize_round_trips() {
        let t = parse_table("id,c1,c2,d\na1,3,*,P\n", &ParseOptions::with_ids()).unwrap();
        let text = serialize_table(&t);
        assert_eq!(text, "id,c1,c2,d\na1,3,*,P\n");
        let t1 = table1();
        let text = serialize_table(&t1);
        assert_eq!(text.lines().count(), 13);
        assert_eq!(parse_table(&text, &ParseOptions::with_ids()).unwrap(), t1);
    }

    #[test]
    fn specified_attrs_of_table1_rows() {
        let t = table1();
        assert_eq!(t.specified_attrs(0).unwrap().to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(t.specified_attrs(10).unwrap().to_vec(), vec![1]);
        assert!(t.specified_attrs(12).is_err());

        let blank = parse_table("id,c1,c2,d\nz,*,*,P\n", &ParseOptions::with_ids()).unwrap();
        assert!(blank.specified_attrs(0).unwrap().is_empty());
    }

    #[test]
    fn projection() {
        let t = table1();
        assert_eq!(t.project(&t.all_attrs()).unwrap(), t);
        let c2 = t.attr_subset(&["c2"]).unwrap();
        let p = t.project(&c2).unwrap();
        assert_eq!((p.num_objects(), p.num_attrs()), (12, 1));
        assert!(t.attr_subset(&["unknown"]).is_err());
        assert_eq!(
            t.project(&AttrSubset::empty(4)),
            Err(Error::EmptyAttributes)
        );
    }
}
