//! Index-based sets over objects and attributes.
//!
//! Both set types are thin wrappers around [`FixedBitSet`]; the bit width is
//! fixed by the owning table (|U| for objects, |C| for attributes). Iteration
//! is always in ascending index order, which is table order.

use std::fmt;

use fixedbitset::FixedBitSet;

macro_rules! index_set {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash, Default)]
        pub struct $name(FixedBitSet);

        impl $name {
            /// Empty set able to hold indices `0..width`.
            pub fn empty(width: usize) -> Self {
                Self(FixedBitSet::with_capacity(width))
            }

            /// Set containing every index in `0..width`.
            pub fn full(width: usize) -> Self {
                let mut bits = FixedBitSet::with_capacity(width);
                bits.insert_range(..);
                Self(bits)
            }

            pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
                let mut set = Self::empty(width);
                for i in indices {
                    set.insert(i);
                }
                set
            }

            pub fn width(&self) -> usize {
                self.0.len()
            }

            pub fn insert(&mut self, index: usize) {
                self.0.insert(index);
            }

            pub fn remove(&mut self, index: usize) {
                self.0.set(index, false);
            }

            pub fn contains(&self, index: usize) -> bool {
                self.0.contains(index)
            }

            pub fn len(&self) -> usize {
                self.0.count_ones(..)
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_clear()
            }

            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.0.ones()
            }

            pub fn to_vec(&self) -> Vec<usize> {
                self.iter().collect()
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.0.is_subset(&other.0)
            }

            pub fn is_disjoint(&self, other: &Self) -> bool {
                self.0.is_disjoint(&other.0)
            }

            pub fn union(&self, other: &Self) -> Self {
                let mut out = self.clone();
                out.0.union_with(&other.0);
                out
            }

            pub fn intersection(&self, other: &Self) -> Self {
                let mut out = self.clone();
                out.0.intersect_with(&other.0);
                out
            }

            pub fn difference(&self, other: &Self) -> Self {
                let mut out = self.clone();
                out.0.difference_with(&other.0);
                out
            }

            pub fn symmetric_difference(&self, other: &Self) -> Self {
                let mut out = self.clone();
                out.0.symmetric_difference_with(&other.0);
                out
            }

            /// Complement within `0..width`.
            pub fn complement(&self) -> Self {
                let mut out = self.clone();
                out.0.toggle_range(..);
                out
            }

            pub fn union_with(&mut self, other: &Self) {
                self.0.union_with(&other.0);
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }

        /// Lexicographic order on the ascending index sequence.
        impl Ord for $name {
            fn cmp(&self, other: &Self) -> std::cmp::Ordering {
                self.iter().cmp(other.iter())
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
                Some(self.cmp(other))
            }
        }
    };
}

index_set! {
    /// A set of objects of one table, by row index.
    ObjectSet
}

index_set! {
    /// A subset B of the condition attributes of one table, by column index.
    AttrSubset
}
