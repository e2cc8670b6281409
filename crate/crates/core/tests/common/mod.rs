//! Independent oracles shared by the integration suites.
//!
//! Everything here deliberately avoids the library's own algorithms: the
//! unimodularity oracle scans coefficient tuples outright, the axiom oracle
//! re-checks raw tables with direct loops, and the matrix oracle works on
//! upper-triangular matrices over GF(3) without Cayley tables at all.

// Each integration target compiles this module separately and uses a subset.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use ternion::ring::{Elem, FiniteRing};
use ternion::submodule::RingVector;

/// Brute-force unimodularity: does any coefficient tuple (x1, ..., xn)
/// satisfy r1 x1 + ... + rn xn = 1?
pub fn brute_force_unimodular(ring: &FiniteRing, v: &RingVector) -> bool {
    let n = ring.order() as u64;
    let rank = v.rank();
    let total = n.pow(rank as u32);
    for code in 0..total {
        let mut rest = code;
        let mut sum = ring.zero();
        for &r in v.coords() {
            let x = Elem((rest % n) as u16);
            rest /= n;
            sum = ring.add(sum, ring.mul(r, x));
        }
        if sum == ring.one() {
            return true;
        }
    }
    false
}

/// Direct exhaustive ring-axiom scan over raw tables, independent of
/// `FiniteRing::from_tables`. Returns true iff the tables describe a finite
/// unital ring (with unity distinct from zero).
pub fn oracle_ring_axioms(add: &[Vec<u16>], mul: &[Vec<u16>]) -> bool {
    let n = add.len();
    if n < 2 || mul.len() != n {
        return false;
    }
    let ok_shape = |t: &[Vec<u16>]| t.iter().all(|r| r.len() == n && r.iter().all(|&v| (v as usize) < n));
    if !ok_shape(add) || !ok_shape(mul) {
        return false;
    }
    let a = |x: usize, y: usize| add[x][y] as usize;
    let m = |x: usize, y: usize| mul[x][y] as usize;
    // Abelian group under addition.
    let zero = match (0..n).find(|&e| (0..n).all(|x| a(e, x) == x && a(x, e) == x)) {
        Some(z) => z,
        None => return false,
    };
    for x in 0..n {
        if !(0..n).any(|y| a(x, y) == zero) {
            return false;
        }
        for y in 0..n {
            if a(x, y) != a(y, x) {
                return false;
            }
            for z in 0..n {
                if a(a(x, y), z) != a(x, a(y, z)) {
                    return false;
                }
            }
        }
    }
    // Unity distinct from zero.
    let one = match (0..n).find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x)) {
        Some(o) if o != zero => o,
        _ => return false,
    };
    let _ = one;
    // Associativity and distributivity.
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m(m(x, y), z) != m(x, m(y, z)) {
                    return false;
                }
                if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                    return false;
                }
                if m(a(x, y), z) != a(m(x, z), m(y, z)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Upper-triangular 2x2 matrices over GF(3), handled directly as (a, b, c)
/// triples: a matrix-arithmetic re-derivation of the rank-3 enumeration that
/// shares no code path with the library.
pub mod matrix_oracle {
    use super::{BTreeMap, BTreeSet};

    pub type M = (u8, u8, u8);

    pub fn elements() -> Vec<M> {
        let mut v = Vec::with_capacity(27);
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    v.push((a, b, c));
                }
            }
        }
        v
    }

    pub fn mul(x: M, y: M) -> M {
        (
            (x.0 * y.0) % 3,
            (x.0 * y.1 + x.1 * y.2) % 3,
            (x.2 * y.2) % 3,
        )
    }

    fn add(x: M, y: M) -> M {
        ((x.0 + y.0) % 3, (x.1 + y.1) % 3, (x.2 + y.2) % 3)
    }

    /// Closed form: some a-entry nonzero and some c-entry nonzero. Validated
    /// against the exhaustive coefficient scan at rank 2 by the test suite.
    pub fn unimodular_closed_form(v: &[M]) -> bool {
        v.iter().any(|m| m.0 != 0) && v.iter().any(|m| m.2 != 0)
    }

    /// Exhaustive coefficient-tuple scan for rank-2 vectors.
    pub fn unimodular_exhaustive_rank2(v: [M; 2]) -> bool {
        let elems = elements();
        for &x0 in &elems {
            for &x1 in &elems {
                if add(mul(v[0], x0), mul(v[1], x1)) == (1, 0, 1) {
                    return true;
                }
            }
        }
        false
    }

    fn orbit(elems: &[M], v: &[M; 3]) -> BTreeSet<[M; 3]> {
        elems
            .iter()
            .map(|&al| [mul(al, v[0]), mul(al, v[1]), mul(al, v[2])])
            .collect()
    }

    /// Radical-signature class sizes of the rank-3 enumeration, recomputed
    /// from matrices alone.
    pub fn rank3_class_sizes() -> BTreeMap<usize, usize> {
        let elems = elements();
        let mut seen: BTreeSet<BTreeSet<[M; 3]>> = BTreeSet::new();
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for &r0 in &elems {
            for &r1 in &elems {
                for &r2 in &elems {
                    let v = [r0, r1, r2];
                    if unimodular_closed_form(&v) {
                        continue;
                    }
                    let orb = orbit(&elems, &v);
                    if orb.len() != 27 {
                        continue;
                    }
                    if !seen.insert(orb.clone()) {
                        continue;
                    }
                    let generators: Vec<[M; 3]> = orb
                        .iter()
                        .filter(|w| orbit(&elems, w) == orb)
                        .cloned()
                        .collect();
                    assert!(
                        generators.iter().all(|g| !unimodular_closed_form(&g[..])),
                        "oracle found a unimodular generator"
                    );
                    let sigs: BTreeSet<usize> = generators
                        .iter()
                        .map(|g| g.iter().filter(|m| m.0 == 0 && m.2 == 0).count())
                        .collect();
                    assert_eq!(sigs.len(), 1, "oracle found inconsistent signatures");
                    *sizes.entry(*sigs.iter().next().unwrap()).or_default() += 1;
                }
            }
        }
        sizes
    }
}
