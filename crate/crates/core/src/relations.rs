//! Pairwise relations over incomplete tables and the neighborhoods they induce.
//!
//! Every relation is evaluated on an attribute subset B. With `B = ∅` every
//! relation is vacuously universal.
//!
//! | kind                  | reflexive | symmetric | transitive |
//! |-----------------------|-----------|-----------|------------|
//! | equivalence           | yes       | yes       | yes        |
//! | tolerance (T)         | yes       | yes       | no         |
//! | similarity (S)        | yes       | no        | yes        |
//! | limited tolerance (L) | yes       | yes       | no         |
//! | k-limited (L_k)       | yes       | yes       | no         |
//! | positive transitive   | yes       | no        | no         |
//!
//! The positive transitive relation extends L_k with *bridges*: `y` is related
//! to `x` when some object `z` is k-limited tolerant to `x` and every value
//! specified on `z` is matched by `y`. Its neighborhoods are computed from the
//! L_k and S matrices as `M(x) = L_k(x) ∪ ⋃ { S(z) | z ∈ L_k(x) }`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::{AttrSubset, ObjectSet};
use crate::table::DecisionTable;

/// An exact fraction in `[0, 1]`: agreement degrees and thresholds.
pub type Degree = Ratio<usize>;

/// Threshold used when none is given.
pub fn default_threshold() -> Degree {
    Ratio::new(1, 4)
}

/// Parses `0.25`, `1/4`, `1` or `0` into an exact degree in `[0, 1]`.
pub fn parse_degree(text: &str) -> Result<Degree> {
    let text = text.trim();
    let bad = || Error::InvalidThreshold(text.to_string());
    let value = if let Some((num, den)) = text.split_once('/') {
        let num: usize = num.trim().parse().map_err(|_| bad())?;
        let den: usize = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ratio::new(num, den)
    } else {
        let (int, frac) = text.split_once('.').unwrap_or((text, ""));
        if (int.is_empty() && frac.is_empty())
            || !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit())
            || frac.len() > 18
        {
            return Err(bad());
        }
        let int: usize = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let scale = 10usize.pow(frac.len() as u32);
        let frac: usize = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        let num = int
            .checked_mul(scale)
            .and_then(|v| v.checked_add(frac))
            .ok_or_else(bad)?;
        Ratio::new(num, scale)
    };
    if value > Ratio::from_integer(1) {
        return Err(bad());
    }
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationKind {
    Equivalence,
    Tolerance,
    Similarity,
    LimitedTolerance,
    KLimitedTolerance,
    PositiveTransitive,
}

impl RelationKind {
    pub const ALL: [RelationKind; 6] = [
        RelationKind::Equivalence,
        RelationKind::Tolerance,
        RelationKind::Similarity,
        RelationKind::LimitedTolerance,
        RelationKind::KLimitedTolerance,
        RelationKind::PositiveTransitive,
    ];

    /// Stable token used on the command line and in JSON.
    pub fn token(self) -> &'static str {
        match self {
            RelationKind::Equivalence => "equivalence",
            RelationKind::Tolerance => "tolerance",
            RelationKind::Similarity => "similarity",
            RelationKind::LimitedTolerance => "limited-tolerance",
            RelationKind::KLimitedTolerance => "k-limited-tolerance",
            RelationKind::PositiveTransitive => "positive-transitive",
        }
    }

    pub fn uses_threshold(self) -> bool {
        matches!(
            self,
            RelationKind::KLimitedTolerance | RelationKind::PositiveTransitive
        )
    }

    /// Symmetric for every table. Positive transitive is symmetric only when
    /// symmetrized explicitly.
    pub fn is_symmetric(self) -> bool {
        !matches!(
            self,
            RelationKind::Similarity | RelationKind::PositiveTransitive
        )
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for RelationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RelationKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| Error::Config(format!("unknown relation `{s}`")))
    }
}

/// Which relation to induce and with which parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationConfig {
    pub kind: RelationKind,
    k: Degree,
    pub symmetrize: bool,
}

impl RelationConfig {
    /// Uses the default threshold 1/4 and no symmetrization.
    pub fn new(kind: RelationKind) -> Self {
        RelationConfig {
            kind,
            k: default_threshold(),
            symmetrize: false,
        }
    }

    pub fn with_threshold(kind: RelationKind, k: Degree) -> Result<Self> {
        Self::new(kind).threshold(k)
    }

    pub fn threshold(mut self, k: Degree) -> Result<Self> {
        if k > Ratio::from_integer(1) {
            return Err(Error::InvalidThreshold(k.to_string()));
        }
        self.k = k;
        Ok(self)
    }

    pub fn symmetrized(mut self, symmetrize: bool) -> Self {
        self.symmetrize = symmetrize;
        self
    }

    pub fn k(&self) -> Degree {
        self.k
    }
}

fn check_pair(table: &DecisionTable, x: usize, y: usize, attrs: &AttrSubset) -> Result<()> {
    table.check_object(x)?;
    table.check_object(y)?;
    table.check_attrs(attrs)
}

/// P_B(x, y): attributes of B on which both objects are specified and equal.
pub fn shared_agreeing_attrs(
    table: &DecisionTable,
    x: usize,
    y: usize,
    attrs: &AttrSubset,
) -> Result<AttrSubset> {
    check_pair(table, x, y, attrs)?;
    Ok(AttrSubset::from_indices(
        attrs.width(),
        attrs
            .iter()
            .filter(|&a| table.value(x, a).agrees_with(table.value(y, a))),
    ))
}

/// |P_B(x, y)| / |B|.
pub fn agreement_degree(
    table: &DecisionTable,
    x: usize,
    y: usize,
    attrs: &AttrSubset,
) -> Result<Degree> {
    let shared = shared_agreeing_attrs(table, x, y, attrs)?;
    if attrs.is_empty() {
        return Err(Error::EmptyAttributes);
    }
    Ok(Ratio::new(shared.len(), attrs.len()))
}

pub fn tolerance(table: &DecisionTable, x: usize, y: usize, attrs: &AttrSubset) -> Result<bool> {
    check_pair(table, x, y, attrs)?;
    Ok(tolerant(table, x, y, attrs))
}

/// S(x, y): every value specified on `x` is matched by `y`.
pub fn similarity(table: &DecisionTable, x: usize, y: usize, attrs: &AttrSubset) -> Result<bool> {
    check_pair(table, x, y, attrs)?;
    Ok(similar(table, x, y, attrs))
}

pub fn limited_tolerance(
    table: &DecisionTable,
    x: usize,
    y: usize,
    attrs: &AttrSubset,
) -> Result<bool> {
    check_pair(table, x, y, attrs)?;
    Ok(limited(table, x, y, attrs, None))
}

/// Limited tolerance whose agreement degree reaches `k`.
///
/// Pairs missing on every attribute of B pass regardless of `k`, and an
/// object is always related to itself.
pub fn k_limited_tolerance(
    table: &DecisionTable,
    x: usize,
    y: usize,
    attrs: &AttrSubset,
    k: Degree,
) -> Result<bool> {
    check_pair(table, x, y, attrs)?;
    check_threshold(k)?;
    Ok(limited(table, x, y, attrs, Some(k)))
}

/// `z` bridges `x` to `y`: L_k(x, z) and S(z, y).
pub fn bridge_triple(
    table: &DecisionTable,
    x: usize,
    y: usize,
    z: usize,
    attrs: &AttrSubset,
    k: Degree,
) -> Result<bool> {
    check_pair(table, x, y, attrs)?;
    table.check_object(z)?;
    check_threshold(k)?;
    Ok(limited(table, x, z, attrs, Some(k)) && similar(table, z, y, attrs))
}

/// First object (in table order) bridging `x` to `y`, if any.
pub fn bridge_witness(
    table: &DecisionTable,
    x: usize,
    y: usize,
    attrs: &AttrSubset,
    k: Degree,
) -> Result<Option<usize>> {
    check_pair(table, x, y, attrs)?;
    check_threshold(k)?;
    Ok(witness(table, x, y, attrs, k))
}

pub fn positive_transitive(
    table: &DecisionTable,
    x: usize,
    y: usize,
    attrs: &AttrSubset,
    k: Degree,
    symmetrize: bool,
) -> Result<bool> {
    check_pair(table, x, y, attrs)?;
    check_threshold(k)?;
    let forward =
        |x, y| limited(table, x, y, attrs, Some(k)) || witness(table, x, y, attrs, k).is_some();
    Ok(forward(x, y) || (symmetrize && forward(y, x)))
}

/// Classical indiscernibility; a missing cell is treated as one more literal.
pub fn equivalence(table: &DecisionTable, x: usize, y: usize, attrs: &AttrSubset) -> Result<bool> {
    check_pair(table, x, y, attrs)?;
    Ok(equivalent(table, x, y, attrs))
}

/// Evaluates the configured relation on one ordered pair.
pub fn related(
    table: &DecisionTable,
    x: usize,
    y: usize,
    attrs: &AttrSubset,
    config: &RelationConfig,
) -> Result<bool> {
    match config.kind {
        RelationKind::Equivalence => equivalence(table, x, y, attrs),
        RelationKind::Tolerance => tolerance(table, x, y, attrs),
        RelationKind::Similarity => similarity(table, x, y, attrs),
        RelationKind::LimitedTolerance => limited_tolerance(table, x, y, attrs),
        RelationKind::KLimitedTolerance => k_limited_tolerance(table, x, y, attrs, config.k),
        RelationKind::PositiveTransitive => {
            positive_transitive(table, x, y, attrs, config.k, config.symmetrize)
        }
    }
}

fn check_threshold(k: Degree) -> Result<()> {
    if k > Ratio::from_integer(1) {
        Err(Error::InvalidThreshold(k.to_string()))
    } else {
        Ok(())
    }
}

fn tolerant(table: &DecisionTable, x: usize, y: usize, attrs: &AttrSubset) -> bool {
    attrs.iter().all(|a| {
        let (u, v) = (table.value(x, a), table.value(y, a));
        u.is_missing() || v.is_missing() || u == v
    })
}

fn similar(table: &DecisionTable, x: usize, y: usize, attrs: &AttrSubset) -> bool {
    attrs.iter().all(|a| {
        let u = table.value(x, a);
        u.is_missing() || u.agrees_with(table.value(y, a))
    })
}

fn equivalent(table: &DecisionTable, x: usize, y: usize, attrs: &AttrSubset) -> bool {
    attrs.iter().all(|a| table.value(x, a) == table.value(y, a))
}

/// Limited tolerance, optionally gated by the degree threshold `k`.
fn limited(
    table: &DecisionTable,
    x: usize,
    y: usize,
    attrs: &AttrSubset,
    k: Option<Degree>,
) -> bool {
    if x == y && k.is_some() {
        return true;
    }
    let mut all_missing = true;
    let mut shared = 0usize;
    for a in attrs.iter() {
        let (u, v) = (table.value(x, a), table.value(y, a));
        match (u.is_missing(), v.is_missing()) {
            (true, true) => {}
            (false, false) => {
                if u != v {
                    return false;
                }
                shared += 1;
                all_missing = false;
            }
            _ => all_missing = false,
        }
    }
    if all_missing {
        return true;
    }
    match k {
        _ if shared == 0 => false,
        None => true,
        // shared / |B| >= numer / denom, cross-multiplied
        Some(k) => shared * k.denom() >= k.numer() * attrs.len(),
    }
}

fn witness(
    table: &DecisionTable,
    x: usize,
    y: usize,
    attrs: &AttrSubset,
    k: Degree,
) -> Option<usize> {
    (0..table.num_objects())
        .find(|&z| limited(table, x, z, attrs, Some(k)) && similar(table, z, y, attrs))
}

/// Dense boolean matrix of an ordered relation on U; row `x` is R(x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationMatrix {
    rows: Vec<ObjectSet>,
}

impl RelationMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn row(&self, x: usize) -> &ObjectSet {
        &self.rows[x]
    }

    pub fn rows(&self) -> &[ObjectSet] {
        &self.rows
    }

    pub fn transpose(&self) -> RelationMatrix {
        let n = self.size();
        let mut rows = vec![ObjectSet::empty(n); n];
        for (x, row) in self.rows.iter().enumerate() {
            for y in row.iter() {
                rows[y].insert(x);
            }
        }
        RelationMatrix { rows }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size()).all(|x| self.get(x, x))
    }

    /// Every related pair of `self` is related in `other`.
    pub fn is_subset(&self, other: &RelationMatrix) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_subset(b))
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(ObjectSet::len).sum()
    }

    fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let rows = (0..n)
            .map(|x| ObjectSet::from_indices(n, (0..n).filter(|&y| f(x, y))))
            .collect();
        RelationMatrix { rows }
    }
}

pub fn relation_matrix(
    table: &DecisionTable,
    attrs: &AttrSubset,
    config: &RelationConfig,
) -> Result<RelationMatrix> {
    table.check_attrs(attrs)?;
    check_threshold(config.k)?;
    let n = table.num_objects();
    let k = config.k;
    let matrix = match config.kind {
        RelationKind::Equivalence => {
            RelationMatrix::from_fn(n, |x, y| equivalent(table, x, y, attrs))
        }
        RelationKind::Tolerance => RelationMatrix::from_fn(n, |x, y| tolerant(table, x, y, attrs)),
        RelationKind::Similarity => RelationMatrix::from_fn(n, |x, y| similar(table, x, y, attrs)),
        RelationKind::LimitedTolerance => {
            RelationMatrix::from_fn(n, |x, y| limited(table, x, y, attrs, None))
        }
        RelationKind::KLimitedTolerance => {
            RelationMatrix::from_fn(n, |x, y| limited(table, x, y, attrs, Some(k)))
        }
        RelationKind::PositiveTransitive => {
            let base = RelationMatrix::from_fn(n, |x, y| limited(table, x, y, attrs, Some(k)));
            let sim = RelationMatrix::from_fn(n, |x, y| similar(table, x, y, attrs));
            let rows = base
                .rows
                .iter()
                .map(|row| {
                    let mut out = row.clone();
                    for z in row.iter() {
                        out.union_with(&sim.rows[z]);
                    }
                    out
                })
                .collect();
            let forward = RelationMatrix { rows };
            if config.symmetrize {
                let back = forward.transpose();
                RelationMatrix {
                    rows: forward
                        .rows
                        .iter()
                        .zip(&back.rows)
                        .map(|(a, b)| a.union(b))
                        .collect(),
                }
            } else {
                forward
            }
        }
    };
    Ok(matrix)
}

/// R(x) for every object, in table order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodMap {
    sets: Vec<ObjectSet>,
}

impl NeighborhoodMap {
    pub fn get(&self, x: usize) -> &ObjectSet {
        &self.sets[x]
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &ObjectSet)> {
        self.sets.iter().enumerate()
    }

    /// Objects whose neighborhood lies inside `target`.
    pub fn lower(&self, target: &ObjectSet) -> ObjectSet {
        ObjectSet::from_indices(
            self.sets.len(),
            self.iter()
                .filter(|(_, n)| n.is_subset(target))
                .map(|(x, _)| x),
        )
    }

    /// Objects whose neighborhood meets `target`.
    pub fn upper(&self, target: &ObjectSet) -> ObjectSet {
        ObjectSet::from_indices(
            self.sets.len(),
            self.iter()
                .filter(|(_, n)| !n.is_disjoint(target))
                .map(|(x, _)| x),
        )
    }
}

impl From<RelationMatrix> for NeighborhoodMap {
    fn from(m: RelationMatrix) -> Self {
        NeighborhoodMap { sets: m.rows }
    }
}

pub fn neighborhood_map(
    table: &DecisionTable,
    attrs: &AttrSubset,
    config: &RelationConfig,
) -> Result<NeighborhoodMap> {
    relation_matrix(table, attrs, config).map(NeighborhoodMap::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{parse_table, ParseOptions};

    fn table1() -> DecisionTable {
        parse_table(
            include_str!("../tests/data/table1.csv"),
            &ParseOptions::with_ids(),
        )
        .unwrap()
    }

    fn q(n: usize, d: usize) -> Degree {
        Ratio::new(n, d)
    }

    // a1 is row 0, a12 is row 11
    const A: [usize; 13] = [usize::MAX, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11];

    #[test]
    fn degree_parsing() {
        assert_eq!(parse_degree("0.25").unwrap(), q(1, 4));
        assert_eq!(parse_degree("1/4").unwrap(), q(1, 4));
        assert_eq!(parse_degree("2/8").unwrap(), q(1, 4));
        assert_eq!(parse_degree("1").unwrap(), q(1, 1));
        assert_eq!(parse_degree("0").unwrap(), q(0, 1));
        assert_eq!(parse_degree(".5").unwrap(), q(1, 2));
        for bad in ["", "1.5", "5/4", "1/0", "-0.1", "abc", "0.2.5", "."] {
            assert!(parse_degree(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn kind_tokens_round_trip() {
        for kind in RelationKind::ALL {
            assert_eq!(kind.token().parse::<RelationKind>().unwrap(), kind);
        }
        assert!("bogus".parse::<RelationKind>().is_err());
    }

    #[test]
    fn shared_attrs_and_degree() {
        let t = table1();
        let c = t.all_attrs();
        assert_eq!(
            shared_agreeing_attrs(&t, A[1], A[12], &c).unwrap().to_vec(),
            vec![0, 1, 2]
        );
        assert!(shared_agreeing_attrs(&t, A[4], A[8], &c)
            .unwrap()
            .is_empty());
        assert_eq!(agreement_degree(&t, A[1], A[12], &c).unwrap(), q(3, 4));
        assert_eq!(agreement_degree(&t, A[4], A[8], &c).unwrap(), q(0, 1));
        assert_eq!(agreement_degree(&t, A[1], A[1], &c).unwrap(), q(1, 1));
        assert_eq!(
            agreement_degree(&t, 0, 1, &AttrSubset::empty(4)),
            Err(Error::EmptyAttributes)
        );
        assert!(agreement_degree(&t, 0, 12, &c).is_err());
    }

    #[test]
    fn pairwise_examples() {
        let t = table1();
        let c = t.all_attrs();
        assert!(tolerance(&t, A[4], A[5], &c).unwrap());
        assert!(!tolerance(&t, A[1], A[9], &c).unwrap());
        assert!(similarity(&t, A[12], A[1], &c).unwrap());
        assert!(!similarity(&t, A[1], A[12], &c).unwrap());
        assert!(limited_tolerance(&t, A[1], A[11], &c).unwrap());
        assert!(!limited_tolerance(&t, A[1], A[9], &c).unwrap());
        assert!(k_limited_tolerance(&t, A[2], A[3], &c, q(1, 4)).unwrap());
        assert!(!k_limited_tolerance(&t, A[1], A[11], &c, q(1, 2)).unwrap());
        assert!(k_limited_tolerance(&t, A[1], A[1], &c, q(1, 1)).unwrap());
        assert!(equivalence(&t, A[2], A[3], &c).unwrap());
        assert!(!equivalence(&t, A[1], A[12], &c).unwrap());
        for x in 0..12 {
            assert!(tolerance(&t, x, x, &c).unwrap());
            assert!(similarity(&t, x, x, &c).unwrap());
            assert!(equivalence(&t, x, x, &c).unwrap());
        }
    }

    #[test]
    fn all_missing_rows_are_limited_tolerant() {
        let t = parse_table(
            "id,c1,c2,d\nx,*,*,P\ny,*,*,Q\nz,1,*,P\n",
            &ParseOptions::with_ids(),
        )
        .unwrap();
        let c = t.all_attrs();
        assert!(limited_tolerance(&t, 0, 1, &c).unwrap());
        assert!(k_limited_tolerance(&t, 0, 1, &c, q(1, 1)).unwrap());
        // no shared specified attribute
        assert!(!limited_tolerance(&t, 0, 2, &c).unwrap());
        assert!(tolerance(&t, 0, 2, &c).unwrap());
    }

    #[test]
    fn positive_transitive_is_directional_on_table1() {
        let t = table1();
        let c = t.all_attrs();
        let k = q(1, 4);
        assert!(positive_transitive(&t, A[7], A[1], &c, k, false).unwrap());
        assert_eq!(bridge_witness(&t, A[7], A[1], &c, k).unwrap(), Some(A[12]));
        assert!(!positive_transitive(&t, A[1], A[7], &c, k, false).unwrap());
        assert!(positive_transitive(&t, A[1], A[7], &c, k, true).unwrap());
        for x in 0..12 {
            assert!(positive_transitive(&t, x, x, &c, k, false).unwrap());
        }
    }

    #[test]
    fn matrix_agrees_with_pairwise_evaluation() {
        let t = table1();
        let c = t.all_attrs();
        for kind in RelationKind::ALL {
            for sym in [false, true] {
                let cfg = RelationConfig::new(kind).symmetrized(sym);
                let m = relation_matrix(&t, &c, &cfg).unwrap();
                for x in 0..12 {
                    for y in 0..12 {
                        assert_eq!(
                            m.get(x, y),
                            related(&t, x, y, &c, &cfg).unwrap(),
                            "{kind} {x} {y}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn positive_transitive_row_counts() {
        let t = table1();
        let m = relation_matrix(
            &t,
            &t.all_attrs(),
            &RelationConfig::new(RelationKind::PositiveTransitive),
        )
        .unwrap();
        assert_eq!(m.row(A[1]).len(), 6);
        assert!(!m.is_symmetric());
        let sym = RelationConfig::new(RelationKind::PositiveTransitive).symmetrized(true);
        assert!(relation_matrix(&t, &t.all_attrs(), &sym)
            .unwrap()
            .is_symmetric());
    }

    #[test]
    fn single_object_matrix() {
        let t = parse_table("id,c1,d\nx,*,P\n", &ParseOptions::with_ids()).unwrap();
        for kind in RelationKind::ALL {
            let m = relation_matrix(&t, &t.all_attrs(), &RelationConfig::new(kind)).unwrap();
            assert_eq!(m.size(), 1);
            assert!(m.get(0, 0));
        }
    }

    #[test]
    fn empty_subset_is_universal() {
        let t = table1();
        let none = AttrSubset::empty(4);
        for kind in RelationKind::ALL {
            let m = relation_matrix(&t, &none, &RelationConfig::new(kind)).unwrap();
            assert_eq!(m.pair_count(), 144, "{kind}");
        }
    }

    #[test]
    fn threshold_above_one_is_rejected() {
        assert!(RelationConfig::with_threshold(RelationKind::KLimitedTolerance, q(5, 4)).is_err());
        let t = table1();
        assert!(k_limited_tolerance(&t, 0, 1, &t.all_attrs(), q(3, 2)).is_err());
    }
}
