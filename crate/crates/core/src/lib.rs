//! Rough-set analysis of incomplete decision tables.
//!
//! A [`DecisionTable`] holds objects described by condition attributes, some
//! of whose values may be missing (`*`), plus a fully specified decision.
//! The crate induces one of six relations on the objects:
//!
//! * `equivalence`: classical indiscernibility, missing treated as a literal
//! * `tolerance`: missing matches anything
//! * `similarity`: every value specified on the left object is matched on the right
//! * `limited-tolerance`: tolerance restricted to pairs that agree on at least
//!   one specified attribute (or are missing everywhere)
//! * `k-limited-tolerance`: limited tolerance with agreement degree at least k
//! * `positive-transitive`: k-limited tolerance extended through bridge objects
//!
//! and from it computes neighborhoods, approximations, the positive region,
//! the discernibility matrix and attribute reducts.
//!
//! ```
//! use roughset::{parse_table, ParseOptions, RelationConfig, RelationKind, neighborhood_map};
//!
//! let table = parse_table("id,c1,c2,d\na,1,*,P\nb,1,2,Q\nc,3,2,P\n", &ParseOptions::with_ids())?;
//! let config = RelationConfig::new(RelationKind::Tolerance);
//! let hoods = neighborhood_map(&table, &table.all_attrs(), &config)?;
//! assert_eq!(table.object_names(hoods.get(0)), ["a", "b"]);
//! # Ok::<(), roughset::Error>(())
//! ```

pub mod approximation;
pub mod cli;
pub mod error;
pub mod reduction;
pub mod relations;
pub mod sets;
pub mod table;

pub use approximation::{
    approximate, decision_class, decision_classes, lower_approx, positive_region, upper_approx,
    ApproximationResult, DecisionClass,
};
pub use error::{Error, Result};
pub use reduction::{
    discernibility_entry, discernibility_function, discernibility_matrix, pair_filter, reducts,
    reducts_bruteforce, reducts_from_function, Cnf, DiscernibilityMatrix, ReductSet,
};
pub use relations::{
    agreement_degree, bridge_triple, bridge_witness, equivalence, k_limited_tolerance,
    limited_tolerance, neighborhood_map, parse_degree, positive_transitive, related,
    relation_matrix, shared_agreeing_attrs, similarity, tolerance, Degree, NeighborhoodMap,
    RelationConfig, RelationKind, RelationMatrix,
};
pub use sets::{AttrSubset, ObjectSet};
pub use table::{
    parse_table, serialize_table, AttrValue, DecisionColumn, DecisionTable, ParseOptions,
};
