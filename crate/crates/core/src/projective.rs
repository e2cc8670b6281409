//! The core projective space PG(n-1, q) sitting inside J^n.
//!
//! Nonzero vectors with all coordinates in the Jacobson radical J map, via an
//! additive isomorphism J = GF(q), to projective points; the intersection of
//! a free submodule's orbit with J^n maps onto a single line. Grouping those
//! lines by the radical signature of the submodules gives the induced
//! factorization, compared here with the ordinary factorization of the same
//! lines by the zero count of their dual coordinates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::classify::RadicalClass;
use crate::field::{build_field, is_prime, FieldError, FieldSpec};
use crate::ring::{Elem, FiniteRing, Ideal, RingError};
use crate::submodule::{CyclicSubmodule, RingVector};
use crate::ternion::TernionRing;

/// A point of PG(n-1, q): homogeneous coordinates over GF(q), canonicalized
/// so the first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CorePoint {
    coords: Vec<u16>,
}

impl CorePoint {
    pub fn coords(&self) -> &[u16] {
        &self.coords
    }
}

impl fmt::Display for CorePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A line of the core space: its sorted point set, its dual coordinate vector
/// when one exists (n = 3), and the canonical generators of the submodules
/// that map onto it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreLine {
    points: Vec<CorePoint>,
    dual: Option<Vec<u16>>,
    sources: Vec<RingVector>,
}

impl CoreLine {
    pub fn points(&self) -> &[CorePoint] {
        &self.points
    }

    /// Dual (normal-vector) coordinates, leading coefficient 1; present for
    /// three-coordinate spaces.
    pub fn dual(&self) -> Option<&[u16]> {
        self.dual.as_deref()
    }

    /// Canonical generators of the submodules mapping onto this line, in the
    /// context that produced it (per class for the induced factorization).
    pub fn sources(&self) -> &[RingVector] {
        &self.sources
    }

    pub fn multiplicity(&self) -> usize {
        self.sources.len()
    }
}

impl fmt::Display for CoreLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ProjectiveError {
    #[error("coordinate {index} (element {element}) lies outside the radical")]
    NotInCore { index: usize, element: u16 },
    #[error("the zero vector has no projective image")]
    ZeroVector,
    /// The J^n section of a submodule is not a full projective line. A
    /// diagnostic: it is never expected for ternion rings.
    #[error("submodule section of J^n is not a projective line: got {points:?}")]
    NotALine { points: Vec<CorePoint> },
    #[error("core extraction unavailable: {reason}")]
    CoreUnavailable { reason: String },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// The additive isomorphism J = GF(q) for a fixed ring, plus the field
/// arithmetic needed to canonicalize projective coordinates.
#[derive(Debug, Clone)]
pub struct CoreContext {
    field: FiniteRing,
    radical: Ideal,
    to_field: BTreeMap<Elem, u16>,
}

impl CoreContext {
    /// Native correspondence for ternion rings: a radical element (0 b; 0 0)
    /// maps to its upper-right entry b.
    pub fn for_ternions(t: &TernionRing) -> Result<Self, ProjectiveError> {
        let radical = t.ring().jacobson_radical()?.clone();
        if radical.len() != t.q() {
            return Err(ProjectiveError::CoreUnavailable {
                reason: format!(
                    "radical has {} elements, expected the field order {}",
                    radical.len(),
                    t.q()
                ),
            });
        }
        let mut to_field = BTreeMap::new();
        for &e in radical.elements() {
            let (a, b, c) = t.coords(e);
            if a != 0 || c != 0 {
                return Err(ProjectiveError::CoreUnavailable {
                    reason: format!(
                        "radical element {e} = ({a},{b},{c}) is not strictly upper triangular"
                    ),
                });
            }
            to_field.insert(e, b);
        }
        Ok(CoreContext {
            field: t.field().clone(),
            radical,
            to_field,
        })
    }

    /// Fallback for table-loaded rings: available only when |J| is a prime p,
    /// in which case the additive isomorphism J = GF(p) is unique up to a
    /// scalar and therefore projectively canonical. The least-index nonzero
    /// radical element is mapped to 1.
    pub fn for_generic(ring: &FiniteRing) -> Result<Self, ProjectiveError> {
        let radical = ring.jacobson_radical()?.clone();
        let size = radical.len();
        if size < 2 {
            return Err(ProjectiveError::CoreUnavailable {
                reason: "radical is trivial, there is no core space".to_string(),
            });
        }
        if !is_prime(size as u64) {
            return Err(ProjectiveError::CoreUnavailable {
                reason: format!(
                    "radical has {size} elements; core extraction for table-loaded rings \
                     needs a prime-order radical (build the ring as ternions for the native \
                     correspondence)"
                ),
            });
        }
        let field = build_field(&FieldSpec::new(size as u16, 1))?;
        let generator = *radical
            .elements()
            .iter()
            .find(|e| e.0 != 0)
            .expect("radical has a nonzero element");
        let mut to_field = BTreeMap::new();
        let mut acc = ring.zero();
        for k in 0..size as u16 {
            to_field.insert(acc, k);
            acc = ring.add(acc, generator);
        }
        if to_field.len() != size {
            return Err(ProjectiveError::CoreUnavailable {
                reason: "radical is not additively cyclic".to_string(),
            });
        }
        Ok(CoreContext {
            field,
            radical,
            to_field,
        })
    }

    pub fn field(&self) -> &FiniteRing {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.order()
    }

    pub fn radical(&self) -> &Ideal {
        &self.radical
    }

    fn canonicalize(&self, coords: Vec<u16>) -> CorePoint {
        canonicalize_coords(&self.field, coords)
    }
}

/// Scales so the first nonzero coordinate becomes 1.
fn canonicalize_coords(field: &FiniteRing, mut coords: Vec<u16>) -> CorePoint {
    let lead = coords.iter().copied().find(|&c| c != 0);
    if let Some(lead) = lead {
        if lead != 1 {
            let inv = field
                .elements()
                .find(|&y| field.mul(Elem(lead), y) == field.one())
                .expect("nonzero field element has an inverse");
            for c in coords.iter_mut() {
                *c = field.mul(inv, Elem(*c)).0;
            }
        }
    }
    CorePoint { coords }
}

/// Maps a nonzero vector of J^n to its point of PG(n-1, q).
pub fn core_point_of(ctx: &CoreContext, v: &RingVector) -> Result<CorePoint, ProjectiveError> {
    let mut coords = Vec::with_capacity(v.rank());
    for (index, &e) in v.coords().iter().enumerate() {
        match ctx.to_field.get(&e) {
            Some(&f) => coords.push(f),
            None => return Err(ProjectiveError::NotInCore { index, element: e.0 }),
        }
    }
    if coords.iter().all(|&c| c == 0) {
        return Err(ProjectiveError::ZeroVector);
    }
    Ok(ctx.canonicalize(coords))
}

/// Intersects the orbit with J^n, drops the zero vector, and maps the rest
/// through [`core_point_of`]; the result must be exactly one full line of
/// PG(n-1, q).
pub fn core_line_of(ctx: &CoreContext, s: &CyclicSubmodule) -> Result<CoreLine, ProjectiveError> {
    let mut points: BTreeSet<CorePoint> = BTreeSet::new();
    for w in s.orbit() {
        if w.is_zero() {
            continue;
        }
        if w.coords().iter().all(|&e| ctx.radical.contains(e)) {
            points.insert(core_point_of(ctx, w)?);
        }
    }
    let points: Vec<CorePoint> = points.into_iter().collect();
    if points.len() != ctx.q() + 1 || !is_full_line(ctx, &points) {
        return Err(ProjectiveError::NotALine { points });
    }
    let rank = points[0].coords.len();
    let dual = (rank == 3).then(|| normal_vector(ctx, &points[0], &points[1]));
    Ok(CoreLine {
        points,
        dual,
        sources: vec![s.canonical_id().clone()],
    })
}

/// The q+1 canonical points of the line through two distinct points.
fn line_through(ctx: &CoreContext, p0: &CorePoint, p1: &CorePoint) -> BTreeSet<CorePoint> {
    let f = &ctx.field;
    let mut line = BTreeSet::new();
    line.insert(ctx.canonicalize(p0.coords.clone()));
    for lambda in f.elements() {
        let combo: Vec<u16> = p0
            .coords
            .iter()
            .zip(&p1.coords)
            .map(|(&a, &b)| f.add(Elem(b), f.mul(lambda, Elem(a))).0)
            .collect();
        line.insert(ctx.canonicalize(combo));
    }
    line
}

fn is_full_line(ctx: &CoreContext, points: &[CorePoint]) -> bool {
    let span = line_through(ctx, &points[0], &points[1]);
    span.len() == points.len() && points.iter().all(|p| span.contains(p))
}

/// Dual coordinates of a line of PG(2, q): the vector orthogonal to every
/// point, computed as the cross product of two of them, leading coefficient
/// normalized to 1.
fn normal_vector(ctx: &CoreContext, p0: &CorePoint, p1: &CorePoint) -> Vec<u16> {
    let f = &ctx.field;
    let m = |x: u16, y: u16| f.mul(Elem(x), Elem(y));
    let s = |x: Elem, y: Elem| f.sub(x, y).0;
    let (a, b) = (&p0.coords, &p1.coords);
    let cross = vec![
        s(m(a[1], b[2]), m(a[2], b[1])),
        s(m(a[2], b[0]), m(a[0], b[2])),
        s(m(a[0], b[1]), m(a[1], b[0])),
    ];
    ctx.canonicalize(cross).coords
}

/// A grouping of core lines, keyed by radical signature (induced) or by the
/// zero count of dual coordinates (ordinary).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineFactorization {
    /// Class key to the distinct lines of that class, each line carrying its
    /// in-class sources (multiplicity).
    pub classes: BTreeMap<usize, Vec<CoreLine>>,
    /// Whether the line sets of distinct classes are pairwise disjoint.
    /// Computed, never asserted.
    pub pairwise_disjoint: bool,
}

impl LineFactorization {
    /// All distinct lines across all classes.
    pub fn distinct_lines(&self) -> BTreeSet<Vec<CorePoint>> {
        self.classes
            .values()
            .flatten()
            .map(|l| l.points.to_vec())
            .collect()
    }
}

fn pairwise_disjoint(classes: &BTreeMap<usize, Vec<CoreLine>>) -> bool {
    let keys: Vec<usize> = classes.keys().copied().collect();
    for (i, &ki) in keys.iter().enumerate() {
        for &kj in keys.iter().skip(i + 1) {
            let set_i: BTreeSet<&Vec<CorePoint>> =
                classes[&ki].iter().map(|l| &l.points).collect();
            if classes[&kj].iter().any(|l| set_i.contains(&l.points)) {
                return false;
            }
        }
    }
    true
}

/// For each radical class, the distinct core lines of its members with
/// per-class multiplicities.
pub fn induced_factorization(
    ctx: &CoreContext,
    classes: &[RadicalClass],
) -> Result<LineFactorization, ProjectiveError> {
    let mut grouped: BTreeMap<usize, Vec<CoreLine>> = BTreeMap::new();
    for class in classes {
        let mut by_points: BTreeMap<Vec<CorePoint>, CoreLine> = BTreeMap::new();
        for sub in class.members() {
            let line = core_line_of(ctx, sub)?;
            match by_points.get_mut(&line.points) {
                Some(existing) => existing.sources.extend(line.sources),
                None => {
                    by_points.insert(line.points.clone(), line);
                }
            }
        }
        grouped.insert(
            class.radical_entry_count(),
            by_points.into_values().collect(),
        );
    }
    let disjoint = pairwise_disjoint(&grouped);
    Ok(LineFactorization {
        classes: grouped,
        pairwise_disjoint: disjoint,
    })
}

/// The ordinary factorization of PG(n-1, q): canonical dual coordinate
/// vectors (leading coefficient 1) grouped by their number of zero entries.
/// For n = 3 the duals are exactly the lines of the projective plane; for
/// other n they describe hyperplanes.
pub fn ordinary_factorization(field: &FiniteRing, n: usize) -> LineFactorization {
    let q = field.order();
    let total = q.pow(n as u32);
    let decode = |mut code: usize| -> Vec<u16> {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push((code % q) as u16);
            code /= q;
        }
        v
    };
    let mut canonical_points: BTreeSet<CorePoint> = BTreeSet::new();
    for code in 1..total {
        canonical_points.insert(canonicalize_coords(field, decode(code)));
    }
    let mut classes: BTreeMap<usize, Vec<CoreLine>> = BTreeMap::new();
    for dual in &canonical_points {
        let zero_count = dual.coords.iter().filter(|&&c| c == 0).count();
        let points: Vec<CorePoint> = canonical_points
            .iter()
            .filter(|p| {
                let dot = p
                    .coords
                    .iter()
                    .zip(&dual.coords)
                    .fold(field.zero(), |acc, (&x, &d)| {
                        field.add(acc, field.mul(Elem(x), Elem(d)))
                    });
                dot == field.zero()
            })
            .cloned()
            .collect();
        classes.entry(zero_count).or_default().push(CoreLine {
            points,
            dual: Some(dual.coords.clone()),
            sources: Vec::new(),
        });
    }
    let disjoint = pairwise_disjoint(&classes);
    LineFactorization {
        classes,
        pairwise_disjoint: disjoint,
    }
}
