//! Attribute reduction through an extended discernibility matrix.
//!
//! A pair of objects is kept in the matrix when it must stay discernible to
//! preserve the positive region: exactly one of the two lies in pos_B(D), or
//! both do and their decisions differ. Its entry lists the attributes on which
//! both objects are specified and different; a missing value never discerns.
//! Reducts are the minimal attribute sets hitting every entry.

use std::collections::{BTreeMap, BTreeSet};

use crate::approximation::positive_region;
use crate::error::{Error, Result};
use crate::relations::RelationConfig;
use crate::sets::{AttrSubset, ObjectSet};
use crate::table::DecisionTable;

/// Upper bound on |B| for [`reducts_bruteforce`].
pub const BRUTEFORCE_ATTR_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscernibilityMatrix {
    objects: Vec<String>,
    attr_width: usize,
    /// Keyed by `(x, y)` with `x < y`.
    entries: BTreeMap<(usize, usize), AttrSubset>,
}

impl DiscernibilityMatrix {
    pub fn get(&self, x: usize, y: usize) -> Option<&AttrSubset> {
        self.entries.get(&(x.min(y), x.max(y)))
    }

    /// Stored pairs in ascending `(x, y)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &AttrSubset)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn attr_width(&self) -> usize {
        self.attr_width
    }
}

/// A conjunction of attribute disjunctions, sorted by size then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    width: usize,
    clauses: Vec<AttrSubset>,
}

impl Cnf {
    /// Builds a formula and applies absorption. Empty clauses are kept as-is
    /// (they make the formula unsatisfiable).
    pub fn new(width: usize, clauses: impl IntoIterator<Item = AttrSubset>) -> Self {
        let mut all: Vec<AttrSubset> = clauses.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<AttrSubset> = Vec::with_capacity(all.len());
        for clause in all {
            if !kept.iter().any(|k| k.is_subset(&clause)) {
                kept.push(clause);
            }
        }
        Cnf {
            width,
            clauses: kept,
        }
    }

    pub fn clauses(&self) -> &[AttrSubset] {
        &self.clauses
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn is_satisfied_by(&self, attrs: &AttrSubset) -> bool {
        self.clauses.iter().all(|c| !c.is_disjoint(attrs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductSet {
    /// Lexicographic by attribute order.
    pub reducts: Vec<AttrSubset>,
    pub core: AttrSubset,
}

impl ReductSet {
    pub fn new(width: usize, reducts: impl IntoIterator<Item = AttrSubset>) -> Self {
        let reducts: Vec<AttrSubset> = reducts
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let core = match reducts.split_first() {
            Some((first, rest)) => rest
                .iter()
                .fold(first.clone(), |acc, r| acc.intersection(r)),
            None => AttrSubset::empty(width),
        };
        ReductSet { reducts, core }
    }
}

/// Attributes of C on which `x` and `y` are both specified and different.
pub fn discernibility_entry(table: &DecisionTable, x: usize, y: usize) -> Result<AttrSubset> {
    table.check_object(x)?;
    table.check_object(y)?;
    if x == y {
        return Err(Error::SamePair(table.object_name(x).to_string()));
    }
    Ok(entry_on(table, x, y, &table.all_attrs()))
}

fn entry_on(table: &DecisionTable, x: usize, y: usize, attrs: &AttrSubset) -> AttrSubset {
    AttrSubset::from_indices(
        attrs.width(),
        attrs.iter().filter(|&a| {
            let (u, v) = (table.value(x, a), table.value(y, a));
            !u.is_missing() && !v.is_missing() && u != v
        }),
    )
}

fn passes(table: &DecisionTable, pos: &ObjectSet, x: usize, y: usize) -> bool {
    match (pos.contains(x), pos.contains(y)) {
        (true, false) | (false, true) => true,
        (true, true) => table.decision(x) != table.decision(y),
        (false, false) => false,
    }
}

/// Whether the pair must remain discernible to preserve pos_B(D).
pub fn pair_filter(
    table: &DecisionTable,
    x: usize,
    y: usize,
    attrs: &AttrSubset,
    config: &RelationConfig,
) -> Result<bool> {
    table.check_object(x)?;
    table.check_object(y)?;
    let pos = positive_region(table, attrs, config)?;
    Ok(passes(table, &pos, x, y))
}

pub fn discernibility_matrix(
    table: &DecisionTable,
    attrs: &AttrSubset,
    config: &RelationConfig,
) -> Result<DiscernibilityMatrix> {
    let pos = positive_region(table, attrs, config)?;
    let n = table.num_objects();
    let mut entries = BTreeMap::new();
    for x in 0..n {
        for y in x + 1..n {
            if passes(table, &pos, x, y) {
                entries.insert((x, y), entry_on(table, x, y, attrs));
            }
        }
    }
    Ok(DiscernibilityMatrix {
        objects: table.objects().to_vec(),
        attr_width: table.num_attrs(),
        entries,
    })
}

/// Conjunction over stored pairs of the disjunction of their attributes.
///
/// Fails on the first stored pair with an empty entry: no attribute subset
/// can separate it.
pub fn discernibility_function(matrix: &DiscernibilityMatrix) -> Result<Cnf> {
    if let Some(((x, y), _)) = matrix.entries().find(|(_, e)| e.is_empty()) {
        return Err(Error::InseparablePair(
            matrix.objects[x].clone(),
            matrix.objects[y].clone(),
        ));
    }
    Ok(Cnf::new(
        matrix.attr_width,
        matrix.entries.values().cloned(),
    ))
}

/// All minimal hitting sets of `cnf`.
pub fn reducts_from_function(cnf: &Cnf) -> ReductSet {
    let mut found = BTreeSet::new();
    if cnf.clauses.iter().any(AttrSubset::is_empty) {
        return ReductSet::new(cnf.width, found);
    }
    hitting_sets(
        &cnf.clauses,
        AttrSubset::empty(cnf.width),
        AttrSubset::empty(cnf.width),
        &mut found,
    );
    ReductSet::new(cnf.width, found)
}

fn hitting_sets(
    clauses: &[AttrSubset],
    chosen: AttrSubset,
    mut forbidden: AttrSubset,
    found: &mut BTreeSet<AttrSubset>,
) {
    let Some(open) = clauses.iter().find(|c| c.is_disjoint(&chosen)) else {
        found.insert(chosen);
        return;
    };
    for a in open.iter() {
        if forbidden.contains(a) {
            continue;
        }
        let mut next = chosen.clone();
        next.insert(a);
        if every_member_is_needed(clauses, &next) {
            hitting_sets(clauses, next, forbidden.clone(), found);
        }
        forbidden.insert(a);
    }
}

/// Each member of `chosen` is the only chosen attribute of some clause.
/// Adding attributes never restores this, so a failure prunes the branch.
fn every_member_is_needed(clauses: &[AttrSubset], chosen: &AttrSubset) -> bool {
    chosen.iter().all(|b| {
        clauses
            .iter()
            .any(|c| c.contains(b) && c.intersection(chosen).len() == 1)
    })
}

/// Matrix, function and hitting-set search in one step.
pub fn reducts(
    table: &DecisionTable,
    attrs: &AttrSubset,
    config: &RelationConfig,
) -> Result<ReductSet> {
    let matrix = discernibility_matrix(table, attrs, config)?;
    Ok(reducts_from_function(&discernibility_function(&matrix)?))
}

/// Exhaustive oracle: all minimal B′ ⊆ B with pos_B′(D) = pos_B(D).
pub fn reducts_bruteforce(
    table: &DecisionTable,
    attrs: &AttrSubset,
    config: &RelationConfig,
) -> Result<ReductSet> {
    table.check_attrs(attrs)?;
    let members = attrs.to_vec();
    if members.len() > BRUTEFORCE_ATTR_LIMIT {
        return Err(Error::TooManyAttributes {
            count: members.len(),
            limit: BRUTEFORCE_ATTR_LIMIT,
        });
    }
    let target = positive_region(table, attrs, config)?;
    let width = table.num_attrs();
    let mut masks: Vec<u32> = (0..1u32 << members.len()).collect();
    masks.sort_by_key(|m| m.count_ones());
    let mut minimal: Vec<AttrSubset> = Vec::new();
    for mask in masks {
        let subset = AttrSubset::from_indices(
            width,
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &a)| a),
        );
        if minimal.iter().any(|m| m.is_subset(&subset)) {
            continue;
        }
        if positive_region(table, &subset, config)? == target {
            minimal.push(subset);
        }
    }
    Ok(ReductSet::new(width, minimal))
}
