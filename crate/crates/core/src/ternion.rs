//! The ternion ring T(q): upper-triangular 2x2 matrices over GF(q).
//!
//! Elements are triples (a, b, c) standing for the matrix
//!
//! ```text
//! ( a b )
//! ( 0 c )
//! ```
//!
//! with entries from GF(q). For q = 2 the element labeling is pinned to the
//! classical numbering 0..7 (0 the zero matrix, 1 the identity, 2 = (1 1; 0 1),
//! 3 = (1 1; 0 0), 4 = (0 0; 0 1), 5 = (1 0; 0 0), 6 = (0 1; 0 0),
//! 7 = (0 1; 0 1)); for q > 2 elements are ranked lexicographically by
//! (a, c, b) after placing the zero matrix at index 0 and the identity at 1.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::ring::{Elem, FiniteRing, RingError};

/// A ternion ring together with its base field and the matrix coordinates of
/// every element label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernionRing {
    ring: FiniteRing,
    field: FiniteRing,
    coords: Vec<(u16, u16, u16)>,
    index_of: BTreeMap<(u16, u16, u16), Elem>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TernionError {
    #[error("input ring is not a field: element {element} has no multiplicative inverse")]
    NotAField { element: u16 },
    #[error("input ring is not a field: {a}*{b} != {b}*{a}")]
    NotAFieldNoncommutative { a: u16, b: u16 },
    #[error(transparent)]
    Ring(#[from] RingError),
}

impl TernionRing {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn field(&self) -> &FiniteRing {
        &self.field
    }

    /// Order of the base field.
    pub fn q(&self) -> usize {
        self.field.order()
    }

    /// Matrix coordinates (a, b, c) of an element label.
    pub fn coords(&self, e: Elem) -> (u16, u16, u16) {
        self.coords[e.index()]
    }

    /// Element label of the matrix (a b; 0 c).
    pub fn element(&self, a: u16, b: u16, c: u16) -> Option<Elem> {
        self.index_of.get(&(a, b, c)).copied()
    }
}

/// Builds T(q) from a validated field of order q. The resulting ring passes
/// the full axiom scan and has order q^3.
pub fn build_ternions(field: &FiniteRing) -> Result<TernionRing, TernionError> {
    if let Some((a, b)) = field.noncommuting_pair() {
        return Err(TernionError::NotAFieldNoncommutative { a: a.0, b: b.0 });
    }
    if let Some(x) = field.elements().skip(1).find(|&x| !field.is_unit(x)) {
        return Err(TernionError::NotAField { element: x.0 });
    }

    let q = field.order();
    let coords = canonical_labels(q as u16);
    let order = coords.len();
    let index_of: BTreeMap<(u16, u16, u16), Elem> = coords
        .iter()
        .enumerate()
        .map(|(i, &t)| (t, Elem(i as u16)))
        .collect();

    let fa = |x: u16, y: u16| field.add(Elem(x), Elem(y)).0;
    let fm = |x: u16, y: u16| field.mul(Elem(x), Elem(y)).0;

    let mut add_rows = vec![vec![0u16; order]; order];
    let mut mul_rows = vec![vec![0u16; order]; order];
    for (i, &(a1, b1, c1)) in coords.iter().enumerate() {
        for (j, &(a2, b2, c2)) in coords.iter().enumerate() {
            let sum = (fa(a1, a2), fa(b1, b2), fa(c1, c2));
            let prod = (fm(a1, a2), fa(fm(a1, b2), fm(b1, c2)), fm(c1, c2));
            add_rows[i][j] = index_of[&sum].0;
            mul_rows[i][j] = index_of[&prod].0;
        }
    }

    let (ring, perm) = FiniteRing::from_tables(&add_rows, &mul_rows)?;
    debug_assert!(
        perm.iter().enumerate().all(|(i, &v)| i == v as usize),
        "ternion labeling places zero at 0 and unity at 1"
    );
    Ok(TernionRing {
        ring,
        field: field.clone(),
        coords,
        index_of,
    })
}

fn canonical_labels(q: u16) -> Vec<(u16, u16, u16)> {
    if q == 2 {
        return vec![
            (0, 0, 0),
            (1, 0, 1),
            (1, 1, 1),
            (1, 1, 0),
            (0, 0, 1),
            (1, 0, 0),
            (0, 1, 0),
            (0, 1, 1),
        ];
    }
    let mut triples: Vec<(u16, u16, u16)> = Vec::with_capacity((q as usize).pow(3));
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                triples.push((a, b, c));
            }
        }
    }
    triples.sort_by_key(|&(a, b, c)| (a, c, b));
    // The zero matrix is already first; move the identity to index 1.
    let identity = (1, 0, 1);
    let pos = triples.iter().position(|&t| t == identity).unwrap();
    triples.remove(pos);
    triples.insert(1, identity);
    triples
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{build_field, FieldSpec};
    use crate::testdata::{T2_ADD, T2_MUL};

    fn t2() -> TernionRing {
        let gf2 = build_field(&FieldSpec::new(2, 1)).unwrap();
        build_ternions(&gf2).unwrap()
    }

    #[test]
    fn t2_tables_match_the_reference_entry_for_entry() {
        let t = t2();
        let add = t.ring().add_table();
        let mul = t.ring().mul_table();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(add[i][j], T2_ADD[i][j], "add[{i}][{j}]");
                assert_eq!(mul[i][j], T2_MUL[i][j], "mul[{i}][{j}]");
            }
        }
    }

    #[test]
    fn t2_element_labels_are_pinned() {
        let t = t2();
        assert_eq!(t.coords(Elem(0)), (0, 0, 0));
        assert_eq!(t.coords(Elem(1)), (1, 0, 1));
        assert_eq!(t.coords(Elem(2)), (1, 1, 1));
        assert_eq!(t.coords(Elem(3)), (1, 1, 0));
        assert_eq!(t.coords(Elem(4)), (0, 0, 1));
        assert_eq!(t.coords(Elem(5)), (1, 0, 0));
        assert_eq!(t.coords(Elem(6)), (0, 1, 0));
        assert_eq!(t.coords(Elem(7)), (0, 1, 1));
        assert_eq!(t.element(0, 1, 0), Some(Elem(6)));
        // 2 * 2 = 1.
        assert_eq!(t.ring().mul(Elem(2), Elem(2)), Elem(1));
    }

    #[test]
    fn ternion_family_counts() {
        for (p, k) in [(2u16, 1u32), (3, 1), (2, 2)] {
            let field = build_field(&FieldSpec::new(p, k)).unwrap();
            let q = field.order();
            let t = build_ternions(&field).unwrap();
            assert_eq!(t.ring().order(), q * q * q, "order q^3");
            assert_eq!(t.ring().units().len(), q * (q - 1) * (q - 1), "q(q-1)^2 units");
            let radical = t.ring().jacobson_radical().unwrap();
            assert_eq!(radical.len(), q, "|J| = q");
            // J is exactly the strictly upper-triangular matrices.
            for e in radical.elements() {
                let (a, b, c) = t.coords(*e);
                assert_eq!((a, c), (0, 0), "radical element ({a},{b},{c})");
            }
            assert!(t.ring().noncommuting_pair().is_some());
            // Units and zero-divisors partition the ring, and J sits inside
            // every maximal two-sided ideal.
            let units = t.ring().units().clone();
            let zd = t.ring().zero_divisors();
            assert!(units.is_disjoint(&zd));
            assert_eq!(units.len() + zd.len(), t.ring().order());
            for m in t.ring().maximal_ideals(crate::ring::Sidedness::TwoSided) {
                assert!(radical.elements().is_subset(m.elements()));
            }
        }
    }

    #[test]
    fn t3_has_two_maximal_two_sided_ideals_of_order_nine() {
        let field = build_field(&FieldSpec::new(3, 1)).unwrap();
        let t = build_ternions(&field).unwrap();
        let maximal = t.ring().maximal_ideals(crate::ring::Sidedness::TwoSided);
        assert_eq!(maximal.len(), 2);
        assert!(maximal.iter().all(|m| m.len() == 9));
    }

    #[test]
    fn non_field_input_is_rejected() {
        // Z/4: commutative but 2 has no inverse.
        let add: Vec<Vec<u16>> = (0..4)
            .map(|a| (0..4).map(|b| (a + b) % 4).collect())
            .collect();
        let mul: Vec<Vec<u16>> = (0..4)
            .map(|a| (0..4).map(|b| (a * b) % 4).collect())
            .collect();
        let z4 = FiniteRing::from_tables(&add, &mul).unwrap().0;
        let err = build_ternions(&z4).unwrap_err();
        assert_eq!(err, TernionError::NotAField { element: 2 });
        // A noncommutative ring is rejected too.
        let t = t2();
        let err = build_ternions(t.ring()).unwrap_err();
        assert!(matches!(err, TernionError::NotAFieldNoncommutative { .. }));
    }

    #[test]
    fn q3_canonical_labels_start_with_zero_and_identity() {
        let labels = canonical_labels(3);
        assert_eq!(labels[0], (0, 0, 0));
        assert_eq!(labels[1], (1, 0, 1));
        assert_eq!(labels.len(), 27);
        // Lexicographic in (a, c, b) elsewhere: the next labels after the
        // displaced identity are the remaining (0, *, *) block.
        assert_eq!(labels[2], (0, 1, 0));
        assert_eq!(labels[3], (0, 2, 0));
    }
}
