//! Cyclic submodules of the free left module R^n.
//!
//! A vector generates the orbit {alpha * v | alpha in R} under componentwise
//! left scaling; the orbit is free when all |R| scalings are distinct. The
//! enumerator walks every vector of R^n, keeps the free orbits all of whose
//! generators are non-unimodular, and deduplicates by orbit-set identity.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::ring::{Elem, FiniteRing};

/// An n-tuple of ring elements: one point of R^n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingVector {
    coords: Vec<Elem>,
}

impl RingVector {
    pub fn new(coords: Vec<Elem>) -> Self {
        RingVector { coords }
    }

    pub fn from_indices(indices: &[u16]) -> Self {
        RingVector {
            coords: indices.iter().map(|&i| Elem(i)).collect(),
        }
    }

    pub fn coords(&self) -> &[Elem] {
        &self.coords
    }

    pub fn indices(&self) -> Vec<u16> {
        self.coords.iter().map(|e| e.0).collect()
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|e| e.0 == 0)
    }
}

impl fmt::Display for RingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Componentwise left scaling: alpha * (r1, ..., rn) = (alpha r1, ..., alpha rn).
pub fn scale(ring: &FiniteRing, alpha: Elem, v: &RingVector) -> RingVector {
    RingVector {
        coords: v.coords.iter().map(|&r| ring.mul(alpha, r)).collect(),
    }
}

/// The orbit of a vector under left scaling, with its generator set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSubmodule {
    orbit: Vec<RingVector>,
    generators: Vec<RingVector>,
    canonical_id: RingVector,
    is_free: bool,
}

impl CyclicSubmodule {
    /// Orbit members in ascending lexicographic order.
    pub fn orbit(&self) -> &[RingVector] {
        &self.orbit
    }

    pub fn orbit_size(&self) -> usize {
        self.orbit.len()
    }

    /// All orbit members that regenerate the full orbit, ascending.
    pub fn generators(&self) -> &[RingVector] {
        &self.generators
    }

    /// The lexicographically least generator; stable identity for output
    /// ordering and deduplication reports.
    pub fn canonical_id(&self) -> &RingVector {
        &self.canonical_id
    }

    /// True iff the scaling map is injective, i.e. the orbit has |R| members.
    pub fn is_free(&self) -> bool {
        self.is_free
    }
}

/// Generates the cyclic submodule of g: scales g by every ring element, then
/// finds the generators by regenerating from each orbit member and keeping
/// those whose orbit equals the original.
pub fn generate_submodule(ring: &FiniteRing, g: &RingVector) -> CyclicSubmodule {
    let codec = Codec::new(ring, g.rank());
    let orbit_codes = codec.orbit_codes(g);
    codec.submodule_from_orbit(orbit_codes)
}

/// Unimodularity via right-ideal closure: v = (r1, ..., rn) is unimodular iff
/// 1 lies in r1 R + ... + rn R, computed as the additive closure of the union
/// of the sets ri * R. (The brute-force coefficient-tuple scan is retained as
/// a test oracle, not used here.)
pub fn is_unimodular(ring: &FiniteRing, v: &RingVector) -> bool {
    let n = ring.order();
    let mut member = vec![false; n];
    let mut list: Vec<u16> = Vec::new();
    for &r in v.coords() {
        for x in ring.elements() {
            let m = ring.mul(r, x);
            if !member[m.index()] {
                member[m.index()] = true;
                list.push(m.0);
            }
        }
    }
    let mut i = 0;
    while i < list.len() {
        let x = Elem(list[i]);
        for j in 0..=i {
            let s = ring.add(x, Elem(list[j]));
            if !member[s.index()] {
                member[s.index()] = true;
                list.push(s.0);
            }
        }
        i += 1;
    }
    member[ring.one().index()]
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SubmoduleError {
    #[error("enumeration of {vectors} vectors exceeds the budget of {budget}")]
    BudgetExceeded { vectors: u128, budget: u64 },
}

/// Result of [`enumerate_nonunimodular_free`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Free cyclic submodules all of whose generators are non-unimodular,
    /// sorted by canonical generator.
    pub submodules: Vec<CyclicSubmodule>,
    /// Diagnostics: free submodules that were reached from a non-unimodular
    /// vector but also admit a unimodular generator. Excluded from the main
    /// list; empty for every ring exercised by the test suite.
    pub mixed_generators: Vec<CyclicSubmodule>,
}

/// Enumerates every distinct free cyclic submodule of R^rank whose generators
/// are all non-unimodular. Exhaustive over all |R|^rank vectors (parallelized
/// over index ranges with a deterministic merge), deduplicated by orbit-set
/// identity.
pub fn enumerate_nonunimodular_free(
    ring: &FiniteRing,
    rank: usize,
    budget: u64,
) -> Result<Enumeration, SubmoduleError> {
    let vectors = (ring.order() as u128).pow(rank as u32);
    if vectors > budget as u128 {
        return Err(SubmoduleError::BudgetExceeded { vectors, budget });
    }
    let total = vectors as u64;
    let codec = Codec::new(ring, rank);

    type Found = BTreeMap<Vec<u64>, (CyclicSubmodule, bool)>;
    let found: Found = (0..total)
        .into_par_iter()
        .fold(Found::new, |mut acc, code| {
            let v = codec.decode(code);
            if is_unimodular(ring, &v) {
                return acc;
            }
            let orbit_codes = codec.orbit_codes(&v);
            if orbit_codes.len() != ring.order() {
                return acc;
            }
            if acc.contains_key(&orbit_codes) {
                return acc;
            }
            let sub = codec.submodule_from_orbit(orbit_codes.clone());
            let all_nonunimodular = sub
                .generators
                .iter()
                .all(|g| !is_unimodular(ring, g));
            acc.insert(orbit_codes, (sub, all_nonunimodular));
            acc
        })
        .reduce(Found::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_insert(v);
            }
            a
        });

    let mut submodules = Vec::new();
    let mut mixed = Vec::new();
    for (_, (sub, all_nonunimodular)) in found {
        if all_nonunimodular {
            submodules.push(sub);
        } else {
            mixed.push(sub);
        }
    }
    submodules.sort_by(|a, b| a.canonical_id.cmp(&b.canonical_id));
    mixed.sort_by(|a, b| a.canonical_id.cmp(&b.canonical_id));
    Ok(Enumeration {
        submodules,
        mixed_generators: mixed,
    })
}

/// Base-|R| vector codec plus orbit helpers shared by the single-vector and
/// exhaustive paths.
struct Codec<'r> {
    ring: &'r FiniteRing,
    rank: usize,
}

impl<'r> Codec<'r> {
    fn new(ring: &'r FiniteRing, rank: usize) -> Self {
        Codec { ring, rank }
    }

    fn decode(&self, mut code: u64) -> RingVector {
        let n = self.ring.order() as u64;
        let mut coords = Vec::with_capacity(self.rank);
        for _ in 0..self.rank {
            coords.push(Elem((code % n) as u16));
            code /= n;
        }
        RingVector { coords }
    }

    fn encode(&self, v: &RingVector) -> u64 {
        let n = self.ring.order() as u64;
        let mut code = 0u64;
        for &e in v.coords.iter().rev() {
            code = code * n + e.0 as u64;
        }
        code
    }

    /// Sorted, deduplicated codes of {alpha * v | alpha in R}.
    fn orbit_codes(&self, v: &RingVector) -> Vec<u64> {
        let mut codes: Vec<u64> = self
            .ring
            .elements()
            .map(|alpha| self.encode(&scale(self.ring, alpha, v)))
            .collect();
        codes.sort_unstable();
        codes.dedup();
        codes
    }

    fn submodule_from_orbit(&self, orbit_codes: Vec<u64>) -> CyclicSubmodule {
        let members: Vec<RingVector> = orbit_codes.iter().map(|&c| self.decode(c)).collect();
        let mut generators: Vec<RingVector> = members
            .iter()
            .filter(|w| self.orbit_codes(w) == orbit_codes)
            .cloned()
            .collect();
        let mut orbit = members;
        orbit.sort_unstable();
        generators.sort_unstable();
        let canonical_id = generators
            .first()
            .cloned()
            .expect("every orbit regenerates itself from at least one member");
        let is_free = orbit.len() == self.ring.order();
        CyclicSubmodule {
            orbit,
            generators,
            canonical_id,
            is_free,
        }
    }
}
