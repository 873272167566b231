#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use roughset::{AttrValue, DecisionTable, ObjectSet, ParseOptions};

pub const TABLE1: &str = include_str!("../data/table1.csv");

pub fn table1() -> DecisionTable {
    roughset::parse_table(TABLE1, &ParseOptions::with_ids()).unwrap()
}

/// Neighborhoods under limited tolerance on Table 1, row i for a(i+1).
pub const LIMITED_TOLERANCE: [&[usize]; 12] = [
    &[1, 11, 12],
    &[2, 3],
    &[2, 3],
    &[4, 5, 11, 12],
    &[4, 5, 11, 12],
    &[6],
    &[7, 9, 12],
    &[8],
    &[7, 9, 11, 12],
    &[10],
    &[1, 4, 5, 9, 11, 12],
    &[1, 4, 5, 7, 9, 11, 12],
];

/// Neighborhoods under the positive transitive relation, k = 1/4.
pub const POSITIVE_TRANSITIVE: [&[usize]; 12] = [
    &[1, 4, 5, 9, 11, 12],
    &[2, 3],
    &[2, 3],
    &[1, 4, 5, 9, 11, 12],
    &[1, 4, 5, 9, 11, 12],
    &[6],
    &[1, 7, 9, 12],
    &[8],
    &[1, 4, 5, 7, 9, 11, 12],
    &[10],
    &[1, 4, 5, 9, 11, 12],
    &[1, 4, 5, 7, 9, 11, 12],
];

pub const LOWER_P: &[usize] = &[10];
pub const LOWER_Q: &[usize] = &[6, 8];
pub const UPPER_P: &[usize] = &[1, 2, 3, 4, 5, 7, 9, 10, 11, 12];
pub const UPPER_Q: &[usize] = &[1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12];

/// Set of Table 1 objects from their 1-based subscripts.
pub fn objs(subscripts: &[usize]) -> ObjectSet {
    ObjectSet::from_indices(12, subscripts.iter().map(|s| s - 1))
}

/// Builds a table from small integer codes; `None` is missing.
pub fn table_from_codes(rows: &[Vec<Option<u8>>], decisions: &[u8]) -> DecisionTable {
    let m = rows.first().map_or(0, Vec::len);
    DecisionTable::new(
        (0..rows.len()).map(|i| format!("x{}", i + 1)).collect(),
        (0..m).map(|a| format!("c{}", a + 1)).collect(),
        "d",
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.map_or(AttrValue::Missing, |s| AttrValue::symbol(s.to_string())))
                    .collect()
            })
            .collect(),
        decisions.iter().map(|d| format!("D{d}")).collect(),
    )
    .unwrap()
}

/// Random table with `missing_rate` chance per condition cell of being `*`.
pub fn random_table<R: Rng>(
    rng: &mut R,
    max_objects: usize,
    max_attrs: usize,
    max_symbols: u8,
    max_decisions: u8,
    missing_rate: f64,
) -> DecisionTable {
    let n = rng.gen_range(1..=max_objects);
    let m = rng.gen_range(1..=max_attrs);
    let symbols = rng.gen_range(1..=max_symbols);
    let decisions = rng.gen_range(1..=max_decisions);
    let rows: Vec<Vec<Option<u8>>> = (0..n)
        .map(|_| {
            (0..m)
                .map(|_| {
                    if rng.gen_bool(missing_rate) {
                        None
                    } else {
                        Some(rng.gen_range(0..symbols))
                    }
                })
                .collect()
        })
        .collect();
    let ds: Vec<u8> = (0..n).map(|_| rng.gen_range(0..decisions)).collect();
    table_from_codes(&rows, &ds)
}

pub fn random_subset<R: Rng>(rng: &mut R, width: usize) -> ObjectSet {
    ObjectSet::from_indices(width, (0..width).filter(|_| rng.gen_bool(0.5)))
}

/// Classical rough approximations of a complete table, from grouping rows
/// by their literal values.
pub fn classical_approximations(
    table: &DecisionTable,
    target: &ObjectSet,
) -> (ObjectSet, ObjectSet) {
    let n = table.num_objects();
    let mut blocks: HashMap<Vec<AttrValue>, Vec<usize>> = HashMap::new();
    for x in 0..n {
        blocks.entry(table.row(x).to_vec()).or_default().push(x);
    }
    let mut lower = ObjectSet::empty(n);
    let mut upper = ObjectSet::empty(n);
    for block in blocks.values() {
        let inside = block.iter().all(|&x| target.contains(x));
        let meets = block.iter().any(|&x| target.contains(x));
        for &x in block {
            if inside {
                lower.insert(x);
            }
            if meets {
                upper.insert(x);
            }
        }
    }
    (lower, upper)
}
