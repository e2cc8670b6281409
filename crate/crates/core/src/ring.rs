//! Arbitrary finite unital rings represented by exhaustive operation tables.
//!
//! A [`FiniteRing`] owns its complete addition and multiplication tables and
//! is validated exhaustively at construction: addition must form an abelian
//! group, multiplication must be associative with a two-sided unity distinct
//! from zero, and both distributive laws must hold for every triple. Elements
//! are plain indices into the tables; construction relabels them so that
//! index 0 is the additive identity and index 1 the unity.
//!
//! Ideals of either sidedness are produced by exhaustive closure from seed
//! sets, which is exact (and fast enough) at the table sizes this crate
//! targets. The Jacobson radical is computed along two independent routes —
//! the intersection of all maximal left ideals, and the quasi-regularity
//! criterion `{x | 1 - a*x is a unit for all a}` — and the two must agree.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use thiserror::Error;

/// Index of one element of a fixed finite ring.
///
/// After construction index 0 is always the additive identity and index 1
/// the multiplicative unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u16);

impl Elem {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which side(s) of multiplication an ideal absorbs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sidedness {
    Left,
    Right,
    TwoSided,
}

/// A subset of ring elements containing zero, closed under addition and under
/// multiplication by arbitrary ring elements on the stated side(s).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    elements: BTreeSet<Elem>,
    sidedness: Sidedness,
}

impl Ideal {
    pub fn elements(&self) -> &BTreeSet<Elem> {
        &self.elements
    }

    pub fn sidedness(&self) -> Sidedness {
        self.sidedness
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.elements.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Sorted element indices, the canonical external form of the ideal.
    pub fn indices(&self) -> Vec<u16> {
        self.elements.iter().map(|e| e.0).collect()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RingError {
    /// The input tables are malformed (not square, mismatched sizes, or
    /// entries out of range). Raised before any axiom is checked.
    #[error("invalid table: {0}")]
    InvalidTable(String),
    /// A ring axiom fails. `witness` holds the elements at which the failure
    /// was observed, in original (pre-relabeling) indices; unused positions
    /// are zero.
    #[error("ring axiom `{axiom}` fails at witness ({}, {}, {})", witness.0, witness.1, witness.2)]
    AxiomViolation {
        axiom: &'static str,
        witness: (u16, u16, u16),
    },
    #[error("addition table has no identity element")]
    NoAdditiveIdentity,
    /// No two-sided multiplicative identity distinct from zero exists.
    #[error("no two-sided multiplicative unity (distinct from zero) exists")]
    NoUnity,
    /// The two Jacobson-radical characterizations disagree. This signals a
    /// bug in the implementation, never a mathematical outcome.
    #[error("jacobson radical characterizations disagree: maximal-left-ideal intersection {via_ideals:?} vs quasi-regularity {via_units:?}")]
    InternalDisagreement {
        via_ideals: Vec<u16>,
        via_units: Vec<u16>,
    },
}

/// A finite unital associative ring, given by its full operation tables.
///
/// Immutable after construction and safe to share across threads; the unit
/// set and the Jacobson radical are computed once on first use.
pub struct FiniteRing {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    units: OnceLock<BTreeSet<Elem>>,
    radical: OnceLock<Result<Ideal, RingError>>,
}

impl Clone for FiniteRing {
    fn clone(&self) -> Self {
        FiniteRing {
            order: self.order,
            add: self.add.clone(),
            mul: self.mul.clone(),
            neg: self.neg.clone(),
            units: OnceLock::new(),
            radical: OnceLock::new(),
        }
    }
}

// Manual Debug keeps failure output readable; the tables are recoverable via
// the accessors.
impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.add == other.add && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    /// Validates the given Cayley tables and builds the ring. Elements are
    /// relabeled if necessary so the additive identity gets index 0 and the
    /// unity index 1; the relabeling permutation (old index -> new index) is
    /// returned alongside the ring.
    pub fn from_tables(
        add_rows: &[Vec<u16>],
        mul_rows: &[Vec<u16>],
    ) -> Result<(Self, Vec<u16>), RingError> {
        let n = add_rows.len();
        if n < 2 {
            return Err(RingError::InvalidTable(format!(
                "order must be at least 2, got {n}"
            )));
        }
        if n > u16::MAX as usize + 1 {
            return Err(RingError::InvalidTable(format!("order {n} too large")));
        }
        if mul_rows.len() != n {
            return Err(RingError::InvalidTable(format!(
                "addition table has {n} rows but multiplication table has {}",
                mul_rows.len()
            )));
        }
        let flatten = |rows: &[Vec<u16>], what: &str| -> Result<Vec<u16>, RingError> {
            let mut flat = Vec::with_capacity(n * n);
            for (i, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(RingError::InvalidTable(format!(
                        "{what} row {i} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                for (j, &v) in row.iter().enumerate() {
                    if (v as usize) >= n {
                        return Err(RingError::InvalidTable(format!(
                            "{what} entry ({i}, {j}) = {v} out of range [0, {n})"
                        )));
                    }
                    flat.push(v);
                }
            }
            Ok(flat)
        };
        let add = flatten(add_rows, "addition")?;
        let mul = flatten(mul_rows, "multiplication")?;

        let (zero, one) = validate(n, &add, &mul)?;

        // Relabel so zero -> 0, one -> 1, all other elements in increasing
        // original order.
        let mut perm = vec![0u16; n];
        perm[zero as usize] = 0;
        perm[one as usize] = 1;
        let mut next = 2u16;
        for x in 0..n as u16 {
            if x != zero && x != one {
                perm[x as usize] = next;
                next += 1;
            }
        }
        let mut new_add = vec![0u16; n * n];
        let mut new_mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let (pa, pb) = (perm[a] as usize, perm[b] as usize);
                new_add[pa * n + pb] = perm[add[a * n + b] as usize];
                new_mul[pa * n + pb] = perm[mul[a * n + b] as usize];
            }
        }
        let mut neg = vec![0u16; n];
        for a in 0..n {
            let b = (0..n).find(|&b| new_add[a * n + b] == 0).expect("inverse");
            neg[a] = b as u16;
        }
        Ok((
            FiniteRing {
                order: n,
                add: new_add,
                mul: new_mul,
                neg,
                units: OnceLock::new(),
                radical: OnceLock::new(),
            },
            perm,
        ))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order as u16).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.add[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// The addition table as rows, in canonical labels.
    pub fn add_table(&self) -> Vec<Vec<u16>> {
        (0..self.order)
            .map(|a| self.add[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }

    /// The multiplication table as rows, in canonical labels.
    pub fn mul_table(&self) -> Vec<Vec<u16>> {
        (0..self.order)
            .map(|a| self.mul[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }

    /// Elements with a two-sided multiplicative inverse.
    pub fn units(&self) -> &BTreeSet<Elem> {
        self.units.get_or_init(|| {
            let one = self.one();
            self.elements()
                .filter(|&x| {
                    self.elements()
                        .any(|y| self.mul(x, y) == one && self.mul(y, x) == one)
                })
                .collect()
        })
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        self.units().contains(&x)
    }

    /// All one- or two-sided zero divisors, including zero itself by the
    /// convention fixed here. Reports derived from this set print the census
    /// both with and without zero.
    pub fn zero_divisors(&self) -> BTreeSet<Elem> {
        let z = self.zero();
        self.elements()
            .filter(|&x| {
                x == z
                    || self
                        .elements()
                        .any(|y| y != z && (self.mul(x, y) == z || self.mul(y, x) == z))
            })
            .collect()
    }

    /// Witness pair (a, b) with a*b != b*a, if any.
    pub fn noncommuting_pair(&self) -> Option<(Elem, Elem)> {
        for a in self.elements() {
            for b in self.elements() {
                if self.mul(a, b) != self.mul(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.noncommuting_pair().is_none()
    }

    /// Smallest ideal of the given sidedness containing the seed elements:
    /// the seed plus zero, closed under addition and under multiplication by
    /// arbitrary ring elements on the stated side(s), iterated to fixpoint.
    pub fn ideal_closure(&self, seed: &[Elem], sidedness: Sidedness) -> Ideal {
        let n = self.order;
        let mut member = vec![false; n];
        let mut worklist: Vec<Elem> = Vec::new();
        let insert = |e: Elem, member: &mut Vec<bool>, worklist: &mut Vec<Elem>| {
            if !member[e.index()] {
                member[e.index()] = true;
                worklist.push(e);
            }
        };
        insert(self.zero(), &mut member, &mut worklist);
        for &e in seed {
            insert(e, &mut member, &mut worklist);
        }
        let mut processed: Vec<Elem> = Vec::new();
        while let Some(x) = worklist.pop() {
            // Additive closure: sums with everything already present.
            insert(self.add(x, x), &mut member, &mut worklist);
            for &y in &processed {
                insert(self.add(x, y), &mut member, &mut worklist);
            }
            // Absorption on the requested side(s).
            for r in self.elements() {
                match sidedness {
                    Sidedness::Left => insert(self.mul(r, x), &mut member, &mut worklist),
                    Sidedness::Right => insert(self.mul(x, r), &mut member, &mut worklist),
                    Sidedness::TwoSided => {
                        insert(self.mul(r, x), &mut member, &mut worklist);
                        insert(self.mul(x, r), &mut member, &mut worklist);
                    }
                }
            }
            processed.push(x);
        }
        let elements = (0..n as u16).map(Elem).filter(|e| member[e.index()]).collect();
        Ideal {
            elements,
            sidedness,
        }
    }

    /// Every ideal of the given sidedness, found as the join-closure of all
    /// principal ideals. Exhaustive and exact; meant for the desk-scale
    /// orders this crate targets.
    pub fn all_ideals(&self, sidedness: Sidedness) -> Vec<Ideal> {
        let mut seen: BTreeSet<BTreeSet<Elem>> = BTreeSet::new();
        for x in self.elements() {
            seen.insert(self.ideal_closure(&[x], sidedness).elements);
        }
        loop {
            let current: Vec<BTreeSet<Elem>> = seen.iter().cloned().collect();
            let mut grew = false;
            for i in 0..current.len() {
                for j in (i + 1)..current.len() {
                    if current[i].is_subset(&current[j]) || current[j].is_subset(&current[i]) {
                        continue;
                    }
                    let seed: Vec<Elem> = current[i].union(&current[j]).copied().collect();
                    let joined = self.ideal_closure(&seed, sidedness).elements;
                    if seen.insert(joined) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        seen.into_iter()
            .map(|elements| Ideal {
                elements,
                sidedness,
            })
            .collect()
    }

    /// Proper ideals of the given sidedness that are maximal under inclusion,
    /// in descending lexicographic order of their element lists (so the
    /// order-8 ternion ring lists {0, 4, 6, 7} before {0, 3, 5, 6}).
    pub fn maximal_ideals(&self, sidedness: Sidedness) -> Vec<Ideal> {
        let all = self.all_ideals(sidedness);
        let proper: Vec<&Ideal> = all.iter().filter(|i| i.len() < self.order).collect();
        let mut maximal: Vec<Ideal> = proper
            .iter()
            .filter(|i| {
                !proper
                    .iter()
                    .any(|j| i.len() < j.len() && i.elements.is_subset(&j.elements))
            })
            .map(|i| (*i).clone())
            .collect();
        maximal.sort_by(|a, b| b.indices().cmp(&a.indices()));
        maximal
    }

    /// The Jacobson radical, computed two independent ways and cross-checked:
    /// as the intersection of all maximal left ideals, and as the set of x
    /// such that 1 - a*x is a unit for every a (equivalent in finite rings,
    /// where one-sided invertibility implies two-sided). Cached after the
    /// first call.
    pub fn jacobson_radical(&self) -> Result<&Ideal, RingError> {
        self.radical
            .get_or_init(|| self.compute_radical())
            .as_ref()
            .map_err(Clone::clone)
    }

    /// True iff the element lies in the (cached) Jacobson radical.
    pub fn in_radical(&self, e: Elem) -> Result<bool, RingError> {
        Ok(self.jacobson_radical()?.contains(e))
    }

    fn compute_radical(&self) -> Result<Ideal, RingError> {
        let maximal_left = self.maximal_ideals(Sidedness::Left);
        let mut via_ideals: BTreeSet<Elem> = self.elements().collect();
        for ideal in &maximal_left {
            via_ideals = via_ideals.intersection(&ideal.elements).copied().collect();
        }
        let one = self.one();
        let via_units: BTreeSet<Elem> = self
            .elements()
            .filter(|&x| {
                self.elements()
                    .all(|a| self.is_unit(self.sub(one, self.mul(a, x))))
            })
            .collect();
        if via_ideals != via_units {
            return Err(RingError::InternalDisagreement {
                via_ideals: via_ideals.iter().map(|e| e.0).collect(),
                via_units: via_units.iter().map(|e| e.0).collect(),
            });
        }
        Ok(Ideal {
            elements: via_ideals,
            sidedness: Sidedness::TwoSided,
        })
    }
}

/// Exhaustive axiom scan over raw (pre-relabeling) tables. Returns the
/// indices of the additive identity and the unity.
fn validate(n: usize, add: &[u16], mul: &[u16]) -> Result<(u16, u16), RingError> {
    let at = |t: &[u16], a: usize, b: usize| t[a * n + b] as usize;

    // Addition: commutativity.
    for a in 0..n {
        for b in (a + 1)..n {
            if at(add, a, b) != at(add, b, a) {
                return Err(RingError::AxiomViolation {
                    axiom: "add-commutativity",
                    witness: (a as u16, b as u16, 0),
                });
            }
        }
    }
    // Addition: every row is a permutation (gives cancellation; together with
    // an identity this yields inverses).
    for a in 0..n {
        let mut first = vec![usize::MAX; n];
        for b in 0..n {
            let v = at(add, a, b);
            if first[v] != usize::MAX {
                return Err(RingError::AxiomViolation {
                    axiom: "add-row-bijection",
                    witness: (a as u16, first[v] as u16, b as u16),
                });
            }
            first[v] = b;
        }
    }
    // Addition: associativity.
    if let Some(err) = (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                if at(add, at(add, a, b), c) != at(add, a, at(add, b, c)) {
                    return Some(RingError::AxiomViolation {
                        axiom: "add-associativity",
                        witness: (a as u16, b as u16, c as u16),
                    });
                }
            }
        }
        None
    }) {
        return Err(err);
    }
    // Additive identity.
    let zero = (0..n)
        .find(|&e| (0..n).all(|x| at(add, e, x) == x))
        .ok_or(RingError::NoAdditiveIdentity)?;

    // Two-sided unity, distinct from zero.
    let one = (0..n)
        .find(|&e| (0..n).all(|x| at(mul, e, x) == x && at(mul, x, e) == x))
        .filter(|&e| e != zero)
        .ok_or(RingError::NoUnity)?;

    // Multiplication: associativity.
    if let Some(err) = (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                if at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c)) {
                    return Some(RingError::AxiomViolation {
                        axiom: "mul-associativity",
                        witness: (a as u16, b as u16, c as u16),
                    });
                }
            }
        }
        None
    }) {
        return Err(err);
    }
    // Distributivity, both sides.
    if let Some(err) = (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                if at(mul, a, at(add, b, c)) != at(add, at(mul, a, b), at(mul, a, c)) {
                    return Some(RingError::AxiomViolation {
                        axiom: "left-distributivity",
                        witness: (a as u16, b as u16, c as u16),
                    });
                }
                if at(mul, at(add, a, b), c) != at(add, at(mul, a, c), at(mul, b, c)) {
                    return Some(RingError::AxiomViolation {
                        axiom: "right-distributivity",
                        witness: (a as u16, b as u16, c as u16),
                    });
                }
            }
        }
        None
    }) {
        return Err(err);
    }
    Ok((zero as u16, one as u16))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata::t2_tables;

    fn gf2_tables() -> (Vec<Vec<u16>>, Vec<Vec<u16>>) {
        (
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![0, 0], vec![0, 1]],
        )
    }

    fn t2() -> FiniteRing {
        let (add, mul) = t2_tables();
        let (ring, perm) = FiniteRing::from_tables(&add, &mul).unwrap();
        assert_eq!(perm, (0..8).collect::<Vec<u16>>(), "already canonical");
        ring
    }

    fn idx(v: &[u16]) -> BTreeSet<Elem> {
        v.iter().map(|&i| Elem(i)).collect()
    }

    #[test]
    fn gf2_is_a_valid_ring() {
        let (add, mul) = gf2_tables();
        let (ring, perm) = FiniteRing::from_tables(&add, &mul).unwrap();
        assert_eq!(ring.order(), 2);
        assert_eq!(perm, vec![0, 1]);
        assert_eq!(ring.units(), &idx(&[1]));
        assert_eq!(ring.zero_divisors(), idx(&[0]));
        let maximal = ring.maximal_ideals(Sidedness::TwoSided);
        assert_eq!(maximal.len(), 1);
        assert_eq!(maximal[0].indices(), vec![0]);
        assert_eq!(ring.jacobson_radical().unwrap().indices(), vec![0]);
    }

    #[test]
    fn t2_units_and_zero_divisors() {
        let ring = t2();
        assert_eq!(ring.units(), &idx(&[1, 2]));
        // 2 * 2 = 1 per the table.
        assert_eq!(ring.mul(Elem(2), Elem(2)), Elem(1));
        assert_eq!(ring.zero_divisors(), idx(&[0, 3, 4, 5, 6, 7]));
        // 4 * 3 = 0: a concrete annihilation witness.
        assert_eq!(ring.mul(Elem(4), Elem(3)), Elem(0));
        // Units and nonzero zero-divisors partition the nonzero elements.
        let zd: BTreeSet<Elem> = ring.zero_divisors();
        assert!(ring.units().is_disjoint(&zd));
        let mut all: BTreeSet<Elem> = ring.units().clone();
        all.extend(zd);
        assert_eq!(all, ring.elements().collect());
    }

    #[test]
    fn t2_maximal_ideals_and_radical() {
        let ring = t2();
        let maximal = ring.maximal_ideals(Sidedness::TwoSided);
        assert_eq!(maximal.len(), 2);
        assert_eq!(maximal[0].indices(), vec![0, 4, 6, 7]);
        assert_eq!(maximal[1].indices(), vec![0, 3, 5, 6]);
        let radical = ring.jacobson_radical().unwrap();
        assert_eq!(radical.indices(), vec![0, 6]);
        // J is contained in every maximal two-sided ideal.
        for m in &maximal {
            assert!(radical.elements().is_subset(m.elements()));
        }
        // J is itself a two-sided ideal: closure adds nothing.
        let closed = ring.ideal_closure(&[Elem(6)], Sidedness::TwoSided);
        assert_eq!(closed.elements(), radical.elements());
        assert!(ring.in_radical(Elem(6)).unwrap());
        assert!(ring.in_radical(Elem(0)).unwrap());
        assert!(!ring.in_radical(Elem(7)).unwrap());
    }

    #[test]
    fn t2_is_noncommutative_with_witness() {
        let ring = t2();
        let (a, b) = ring.noncommuting_pair().expect("noncommutative");
        assert_ne!(ring.mul(a, b), ring.mul(b, a));
        // The classic witness: 3*2 = 5 but 2*3 = 3.
        assert_eq!(ring.mul(Elem(3), Elem(2)), Elem(5));
        assert_eq!(ring.mul(Elem(2), Elem(3)), Elem(3));
    }

    #[test]
    fn add_table_as_mul_table_is_rejected() {
        let (add, _) = t2_tables();
        let err = FiniteRing::from_tables(&add, &add).unwrap_err();
        // The only candidate unity would be the additive identity.
        assert_eq!(err, RingError::NoUnity);
    }

    #[test]
    fn distributivity_violation_reports_witness() {
        let (add, mut mul) = t2_tables();
        // 2*2 = 1; corrupt it to 2*2 = 5. One=1 and zero=0 survive, so the
        // scan reaches associativity/distributivity and must name a triple.
        mul[2][2] = 5;
        let err = FiniteRing::from_tables(&add, &mul).unwrap_err();
        match err {
            RingError::AxiomViolation { axiom, witness } => {
                assert!(
                    axiom == "mul-associativity"
                        || axiom == "left-distributivity"
                        || axiom == "right-distributivity",
                    "unexpected axiom {axiom}"
                );
                let (a, b, c) = witness;
                assert!((a as usize) < 8 && (b as usize) < 8 && (c as usize) < 8);
            }
            other => panic!("expected axiom violation, got {other:?}"),
        }
    }

    #[test]
    fn relabeling_moves_zero_and_one_to_front() {
        // GF(2) with swapped labels: index 1 is the additive identity
        // (add[1][x] = x) and index 0 the unity (mul[0][x] = x).
        let add = vec![vec![1, 0], vec![0, 1]];
        let mul = vec![vec![0, 1], vec![1, 1]];
        let (ring, perm) = FiniteRing::from_tables(&add, &mul).unwrap();
        assert_eq!(perm, vec![1, 0]);
        assert_eq!(ring.add(Elem(0), Elem(1)), Elem(1));
        assert_eq!(ring.mul(Elem(1), Elem(1)), Elem(1));
        let (canonical, perm2) = FiniteRing::from_tables(&ring.add_table(), &ring.mul_table()).unwrap();
        assert_eq!(perm2, vec![0, 1]);
        assert_eq!(canonical, ring);
    }

    #[test]
    fn malformed_tables_are_rejected_before_axioms() {
        let err = FiniteRing::from_tables(&[vec![0]], &[vec![0]]).unwrap_err();
        assert!(matches!(err, RingError::InvalidTable(_)));
        let err =
            FiniteRing::from_tables(&[vec![0, 1], vec![1, 0, 0]], &[vec![0, 0], vec![0, 1]])
                .unwrap_err();
        assert!(matches!(err, RingError::InvalidTable(_)));
        let err = FiniteRing::from_tables(&[vec![0, 9], vec![1, 0]], &[vec![0, 0], vec![0, 1]])
            .unwrap_err();
        assert!(matches!(err, RingError::InvalidTable(_)));
    }

    #[test]
    fn left_ideals_of_t2() {
        let ring = t2();
        // The radical route uses maximal left ideals; spot-check the closure
        // engine in left mode: the principal left ideal of 6 is {0, 6}
        // because r*6 lands in {0, 6} for every r.
        let left = ring.ideal_closure(&[Elem(6)], Sidedness::Left);
        assert_eq!(left.indices(), vec![0, 6]);
        let maximal_left = ring.maximal_ideals(Sidedness::Left);
        for m in &maximal_left {
            assert!(m.len() < 8);
        }
        // Their intersection is J = {0, 6}.
        let mut inter: BTreeSet<Elem> = ring.elements().collect();
        for m in &maximal_left {
            inter = inter.intersection(m.elements()).copied().collect();
        }
        assert_eq!(inter, idx(&[0, 6]));
    }
}
