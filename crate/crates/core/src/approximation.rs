//! Lower and upper approximations over successor neighborhoods.
//!
//! For a relation R and target X ⊆ U:
//! lower(X) = { x | R(x) ⊆ X }, upper(X) = { x | R(x) ∩ X ≠ ∅ }.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::relations::{neighborhood_map, Degree, RelationConfig};
use crate::sets::{AttrSubset, ObjectSet};
use crate::table::DecisionTable;

/// Objects sharing one decision value, in order of first occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionClass {
    pub label: String,
    pub members: ObjectSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationResult {
    pub target: ObjectSet,
    pub lower: ObjectSet,
    pub upper: ObjectSet,
    pub boundary: ObjectSet,
    /// |lower| / |upper|, or 1 when both are empty. Not a measure the
    /// relation definitions provide; kept as a convenience summary.
    pub accuracy: Degree,
}

impl ApproximationResult {
    pub fn from_parts(target: ObjectSet, lower: ObjectSet, upper: ObjectSet) -> Self {
        let boundary = upper.difference(&lower);
        let accuracy = if upper.is_empty() {
            Ratio::from_integer(1)
        } else {
            Ratio::new(lower.len(), upper.len())
        };
        ApproximationResult {
            target,
            lower,
            upper,
            boundary,
            accuracy,
        }
    }
}

pub fn decision_classes(table: &DecisionTable) -> Vec<DecisionClass> {
    let n = table.num_objects();
    let mut classes: Vec<DecisionClass> = Vec::new();
    for (x, d) in table.decisions().iter().enumerate() {
        match classes.iter_mut().find(|c| &c.label == d) {
            Some(c) => c.members.insert(x),
            None => classes.push(DecisionClass {
                label: d.clone(),
                members: ObjectSet::from_indices(n, [x]),
            }),
        }
    }
    classes
}

/// Members of the decision class labelled `label`.
pub fn decision_class(table: &DecisionTable, label: &str) -> Result<ObjectSet> {
    decision_classes(table)
        .into_iter()
        .find(|c| c.label == label)
        .map(|c| c.members)
        .ok_or_else(|| Error::UnknownDecision(label.to_string()))
}

fn check_target(table: &DecisionTable, target: &ObjectSet) -> Result<()> {
    if target.width() != table.num_objects() {
        return Err(Error::Config(format!(
            "target set has width {}, table has {} objects",
            target.width(),
            table.num_objects()
        )));
    }
    Ok(())
}

pub fn lower_approx(
    table: &DecisionTable,
    target: &ObjectSet,
    attrs: &AttrSubset,
    config: &RelationConfig,
) -> Result<ObjectSet> {
    check_target(table, target)?;
    Ok(neighborhood_map(table, attrs, config)?.lower(target))
}

pub fn upper_approx(
    table: &DecisionTable,
    target: &ObjectSet,
    attrs: &AttrSubset,
    config: &RelationConfig,
) -> Result<ObjectSet> {
    check_target(table, target)?;
    Ok(neighborhood_map(table, attrs, config)?.upper(target))
}

pub fn approximate(
    table: &DecisionTable,
    target: &ObjectSet,
    attrs: &AttrSubset,
    config: &RelationConfig,
) -> Result<ApproximationResult> {
    check_target(table, target)?;
    let hoods = neighborhood_map(table, attrs, config)?;
    Ok(ApproximationResult::from_parts(
        target.clone(),
        hoods.lower(target),
        hoods.upper(target),
    ))
}

/// pos_B(D): union of the lower approximations of all decision classes.
pub fn positive_region(
    table: &DecisionTable,
    attrs: &AttrSubset,
    config: &RelationConfig,
) -> Result<ObjectSet> {
    let hoods = neighborhood_map(table, attrs, config)?;
    let mut pos = ObjectSet::empty(table.num_objects());
    for class in decision_classes(table) {
        pos.union_with(&hoods.lower(&class.members));
    }
    Ok(pos)
}
