//! Partition of enumerated submodules by the number of radical entries in
//! their generating vectors.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::ring::Ideal;
use crate::submodule::{CyclicSubmodule, RingVector};

/// One class of the decomposition: all submodules whose generators have
/// exactly `radical_entry_count` coordinates in the radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalClass {
    radical_entry_count: usize,
    members: Vec<CyclicSubmodule>,
}

impl RadicalClass {
    /// Assembles a class directly. [`decompose`] is the usual constructor;
    /// this exists for callers that classify by other means.
    pub fn new(radical_entry_count: usize, members: Vec<CyclicSubmodule>) -> Self {
        RadicalClass {
            radical_entry_count,
            members,
        }
    }

    pub fn radical_entry_count(&self) -> usize {
        self.radical_entry_count
    }

    pub fn members(&self) -> &[CyclicSubmodule] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ClassifyError {
    /// Two generators of one submodule disagree on their signature. Reported,
    /// never silently dropped: it would mean the classification criterion is
    /// not well defined for this ring.
    #[error("generators of the submodule with canonical generator {canonical_id} have differing radical signatures {sig_a} and {sig_b}")]
    InconsistentSignature {
        canonical_id: RingVector,
        sig_a: usize,
        sig_b: usize,
    },
}

/// Number of coordinates of v lying in the ideal.
pub fn radical_signature(v: &RingVector, radical: &Ideal) -> usize {
    v.coords().iter().filter(|&&e| radical.contains(e)).count()
}

/// Groups submodules by the common signature of their generators, classes in
/// descending signature order. The signature is computed from generators
/// only — orbit members vary — and cross-generator consistency is checked,
/// not assumed.
pub fn decompose(
    submodules: &[CyclicSubmodule],
    radical: &Ideal,
) -> Result<Vec<RadicalClass>, ClassifyError> {
    let mut by_signature: BTreeMap<usize, Vec<CyclicSubmodule>> = BTreeMap::new();
    for sub in submodules {
        let mut gens = sub.generators().iter();
        let first = gens
            .next()
            .map(|g| radical_signature(g, radical))
            .expect("submodule has at least one generator");
        for g in gens {
            let sig = radical_signature(g, radical);
            if sig != first {
                return Err(ClassifyError::InconsistentSignature {
                    canonical_id: sub.canonical_id().clone(),
                    sig_a: first,
                    sig_b: sig,
                });
            }
        }
        by_signature.entry(first).or_default().push(sub.clone());
    }
    Ok(by_signature
        .into_iter()
        .rev()
        .map(|(radical_entry_count, members)| RadicalClass {
            radical_entry_count,
            members,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;
    use crate::submodule::{enumerate_nonunimodular_free, RingVector};
    use crate::testdata::t2_tables;

    fn t2() -> FiniteRing {
        let (add, mul) = t2_tables();
        FiniteRing::from_tables(&add, &mul).unwrap().0
    }

    #[test]
    fn signature_counts_radical_coordinates() {
        let ring = t2();
        let j = ring.jacobson_radical().unwrap();
        assert_eq!(radical_signature(&RingVector::from_indices(&[6, 6, 7]), j), 2);
        assert_eq!(radical_signature(&RingVector::from_indices(&[4, 4, 7]), j), 0);
        assert_eq!(radical_signature(&RingVector::from_indices(&[0, 0, 0]), j), 3);
    }

    #[test]
    fn t2_rank3_classes_are_9_9_3() {
        let ring = t2();
        let j = ring.jacobson_radical().unwrap();
        let e = enumerate_nonunimodular_free(&ring, 3, 1 << 24).unwrap();
        let classes = decompose(&e.submodules, j).unwrap();
        let sizes: Vec<(usize, usize)> = classes
            .iter()
            .map(|c| (c.radical_entry_count(), c.len()))
            .collect();
        assert_eq!(sizes, vec![(2, 9), (1, 9), (0, 3)]);
        // No free submodule has all generator entries in J.
        assert!(classes.iter().all(|c| c.radical_entry_count() < 3));
        // Classes partition the input.
        assert_eq!(classes.iter().map(RadicalClass::len).sum::<usize>(), 21);
    }

    #[test]
    fn empty_input_gives_empty_classes() {
        let ring = t2();
        let j = ring.jacobson_radical().unwrap();
        assert!(decompose(&[], j).unwrap().is_empty());
    }
}
