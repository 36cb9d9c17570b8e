//! Degree sequences and degree vectors.
//!
//! A degree sequence is a multiset of nonnegative integers (stored sorted
//! nonincreasing). The equivalent degree vector counts how many vertices have
//! each degree; two degree vectors are equal when they agree up to trailing
//! zeros.

use crate::graph::Graph;
use std::fmt;
use std::hash::{Hash, Hasher};

/// A target degree multiset, stored canonically in nonincreasing order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeSequence {
    values: Vec<usize>,
}

impl DegreeSequence {
    /// Builds a sequence from values in any order.
    pub fn from_values(mut values: Vec<usize>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { values }
    }

    /// The degree sequence of a graph.
    pub fn of_graph(g: &Graph) -> Self {
        DegreeSequence::from_values(g.vertices().map(|v| g.degree(v)).collect())
    }

    /// Maximum entry; 0 for the empty sequence.
    pub fn max(&self) -> usize {
        self.values.first().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entries in nonincreasing order.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn sum(&self) -> usize {
        self.values.iter().sum()
    }

    /// Multiplicity of `d` in the sequence.
    pub fn count_of(&self, d: usize) -> usize {
        self.values.iter().filter(|&&x| x == d).count()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Counts of vertices per degree: entry `i` is the number of vertices of
/// degree `i`. Equality ignores trailing zeros.
#[derive(Clone, Debug)]
pub struct DegreeVector {
    counts: Vec<usize>,
}

impl DegreeVector {
    pub fn new(counts: Vec<usize>) -> Self {
        DegreeVector { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Entry `i`, treating indices past the stored length as 0.
    pub fn get(&self, i: usize) -> usize {
        self.counts.get(i).copied().unwrap_or(0)
    }

    /// The counts with trailing zeros stripped.
    pub fn trimmed(&self) -> &[usize] {
        let end = self
            .counts
            .iter()
            .rposition(|&c| c != 0)
            .map_or(0, |p| p + 1);
        &self.counts[..end]
    }

    /// Total number of vertices described.
    pub fn sum(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl PartialEq for DegreeVector {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for DegreeVector {}

impl Hash for DegreeVector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Degree vector of a graph: `(d_0, ..., d_max)`. The empty graph yields the
/// empty vector.
pub fn degree_vector(g: &Graph) -> DegreeVector {
    if g.vertex_count() == 0 {
        return DegreeVector::new(Vec::new());
    }
    let mut counts = vec![0usize; g.max_degree() + 1];
    for v in g.vertices() {
        counts[g.degree(v)] += 1;
    }
    DegreeVector::new(counts)
}

/// Degree vector of a sequence: entry `i` is the multiplicity of `i`.
pub fn degree_vector_of_sequence(sigma: &DegreeSequence) -> DegreeVector {
    if sigma.is_empty() {
        return DegreeVector::new(Vec::new());
    }
    let mut counts = vec![0usize; sigma.max() + 1];
    for &d in sigma.values() {
        counts[d] += 1;
    }
    DegreeVector::new(counts)
}

/// True iff the two vectors agree on the common prefix and the longer one is
/// zero beyond it.
pub fn vectors_equal_padded(a: &DegreeVector, b: &DegreeVector) -> bool {
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_vector_examples() {
        assert_eq!(degree_vector(&Graph::complete(3)).counts(), &[0, 0, 3]);
        assert_eq!(degree_vector(&Graph::path(3)).counts(), &[0, 2, 1]);
        assert_eq!(degree_vector(&Graph::with_vertices(2)).counts(), &[2]);
        assert_eq!(degree_vector(&Graph::new()).counts(), &[] as &[usize]);
    }

    #[test]
    fn sequence_vector_examples() {
        let s = DegreeSequence::from_values(vec![2, 2, 2]);
        assert_eq!(degree_vector_of_sequence(&s).counts(), &[0, 0, 3]);
        let s = DegreeSequence::from_values(vec![3, 1, 1, 1]);
        assert_eq!(degree_vector_of_sequence(&s).counts(), &[0, 3, 0, 1]);
        let s = DegreeSequence::from_values(vec![]);
        assert_eq!(degree_vector_of_sequence(&s).counts(), &[] as &[usize]);
    }

    #[test]
    fn sequence_is_multiset() {
        assert_eq!(
            DegreeSequence::from_values(vec![1, 2, 0]),
            DegreeSequence::from_values(vec![0, 1, 2])
        );
        assert_eq!(DegreeSequence::from_values(vec![]).max(), 0);
    }

    #[test]
    fn padded_equality() {
        let a = DegreeVector::new(vec![0, 2, 1]);
        let b = DegreeVector::new(vec![0, 2, 1, 0, 0]);
        let c = DegreeVector::new(vec![0, 2]);
        assert!(vectors_equal_padded(&a, &b));
        assert!(!vectors_equal_padded(&a, &c));
        assert!(vectors_equal_padded(
            &DegreeVector::new(vec![]),
            &DegreeVector::new(vec![0, 0])
        ));
    }

    #[test]
    fn round_trip_graph_sequence_vector() {
        for g in [
            Graph::new(),
            Graph::with_vertices(3),
            Graph::complete(4),
            Graph::path(5),
            Graph::star(4),
        ] {
            let sigma = DegreeSequence::of_graph(&g);
            assert_eq!(degree_vector_of_sequence(&sigma), degree_vector(&g));
        }
    }
}
