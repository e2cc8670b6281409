//! Report documents and their JSON/CSV/DOT/text renderings.
//!
//! Every JSON document is built from `BTreeMap`s and `Vec`s only, so
//! serialization is deterministic and re-reading a report and re-serializing
//! it reproduces the identical byte stream.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::RadicalClass;
use crate::projective::{CoreContext, CoreLine, LineFactorization, ProjectiveError};
use crate::ring::FiniteRing;
use crate::submodule::CyclicSubmodule;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmoduleDoc {
    pub canonical_generator: Vec<u16>,
    pub generators: Vec<Vec<u16>>,
    pub orbit: Vec<Vec<u16>>,
    pub orbit_size: usize,
}

impl SubmoduleDoc {
    pub fn new(sub: &CyclicSubmodule) -> Self {
        SubmoduleDoc {
            canonical_generator: sub.canonical_id().indices(),
            generators: sub.generators().iter().map(|g| g.indices()).collect(),
            orbit: sub.orbit().iter().map(|v| v.indices()).collect(),
            orbit_size: sub.orbit_size(),
        }
    }
}

pub fn submodule_docs(subs: &[CyclicSubmodule]) -> Vec<SubmoduleDoc> {
    subs.iter().map(SubmoduleDoc::new).collect()
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serialization");
    s.push('\n');
    s
}

fn tuple(ix: &[u16]) -> String {
    let parts: Vec<String> = ix.iter().map(u16::to_string).collect();
    format!("({})", parts.join(","))
}

fn colon_tuple(ix: &[u16]) -> String {
    let parts: Vec<String> = ix.iter().map(u16::to_string).collect();
    parts.join(":")
}

pub fn enumeration_text(subs: &[CyclicSubmodule]) -> String {
    let mut out = format!("{} non-unimodular free cyclic submodules\n", subs.len());
    for sub in subs {
        let gens: Vec<String> = sub.generators().iter().map(|g| tuple(&g.indices())).collect();
        let orbit: Vec<String> = sub.orbit().iter().map(|v| tuple(&v.indices())).collect();
        let _ = writeln!(
            out,
            "{}  generators {}  orbit {{{}}}",
            tuple(&sub.canonical_id().indices()),
            gens.join(" = "),
            orbit.join(", ")
        );
    }
    out
}

/// CSV with colon-separated coordinate tuples so no quoting is needed.
pub fn enumeration_csv(subs: &[CyclicSubmodule]) -> String {
    let mut out = String::from("canonical_generator,orbit_size,generator_count,generators,orbit\n");
    for sub in subs {
        let gens: Vec<String> = sub
            .generators()
            .iter()
            .map(|g| colon_tuple(&g.indices()))
            .collect();
        let orbit: Vec<String> = sub
            .orbit()
            .iter()
            .map(|v| colon_tuple(&v.indices()))
            .collect();
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            colon_tuple(&sub.canonical_id().indices()),
            sub.orbit_size(),
            sub.generators().len(),
            gens.join(" "),
            orbit.join(" ")
        );
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealsDoc {
    pub order: usize,
    pub maximal_two_sided_ideals: Vec<Vec<u16>>,
    pub jacobson_radical: Vec<u16>,
    pub units: Vec<u16>,
    pub unit_count: usize,
    pub zero_divisors: Vec<u16>,
    pub zero_divisor_count_including_zero: usize,
    pub zero_divisor_count_excluding_zero: usize,
}

impl IdealsDoc {
    pub fn new(ring: &FiniteRing) -> Result<Self, crate::ring::RingError> {
        let maximal = ring.maximal_ideals(crate::ring::Sidedness::TwoSided);
        let radical = ring.jacobson_radical()?;
        let units: Vec<u16> = ring.units().iter().map(|e| e.0).collect();
        let zero_divisors: Vec<u16> = ring.zero_divisors().iter().map(|e| e.0).collect();
        let with_zero = zero_divisors.len();
        Ok(IdealsDoc {
            order: ring.order(),
            maximal_two_sided_ideals: maximal.iter().map(|i| i.indices()).collect(),
            jacobson_radical: radical.indices(),
            unit_count: units.len(),
            units,
            zero_divisor_count_including_zero: with_zero,
            zero_divisor_count_excluding_zero: with_zero.saturating_sub(1),
            zero_divisors,
        })
    }
}

fn set(ix: &[u16]) -> String {
    let parts: Vec<String> = ix.iter().map(u16::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn ideals_text(doc: &IdealsDoc) -> String {
    let mut out = String::new();
    for (i, ideal) in doc.maximal_two_sided_ideals.iter().enumerate() {
        let _ = writeln!(out, "I{} = {}", i + 1, set(ideal));
    }
    let _ = writeln!(out, "J = {}", set(&doc.jacobson_radical));
    let _ = writeln!(out, "units = {} ({} elements)", set(&doc.units), doc.unit_count);
    let _ = writeln!(
        out,
        "zero divisors = {} ({} including zero, {} excluding zero)",
        set(&doc.zero_divisors),
        doc.zero_divisor_count_including_zero,
        doc.zero_divisor_count_excluding_zero
    );
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub count: usize,
    pub canonical_generators: Vec<Vec<u16>>,
}

pub fn classify_doc(classes: &[RadicalClass]) -> BTreeMap<usize, ClassDoc> {
    classes
        .iter()
        .map(|c| {
            (
                c.radical_entry_count(),
                ClassDoc {
                    count: c.len(),
                    canonical_generators: c
                        .members()
                        .iter()
                        .map(|s| s.canonical_id().indices())
                        .collect(),
                },
            )
        })
        .collect()
}

pub fn classify_text(classes: &[RadicalClass]) -> String {
    let mut out = String::new();
    for class in classes {
        let _ = writeln!(
            out,
            "signature {} ({} submodules):",
            class.radical_entry_count(),
            class.len()
        );
        for sub in class.members() {
            let gens: Vec<String> = sub
                .generators()
                .iter()
                .map(|g| tuple(&g.indices()))
                .collect();
            let _ = writeln!(out, "  {}", gens.join(" = "));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineClassDoc {
    pub distinct_lines: usize,
    pub line_list: Vec<Vec<Vec<u16>>>,
    pub multiplicity_map: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizeDoc {
    pub induced: BTreeMap<usize, LineClassDoc>,
    pub induced_pairwise_disjoint: bool,
    pub ordinary: BTreeMap<usize, Vec<Vec<Vec<u16>>>>,
    pub ordinary_pairwise_disjoint: bool,
}

fn line_points(line: &CoreLine) -> Vec<Vec<u16>> {
    line.points().iter().map(|p| p.coords().to_vec()).collect()
}

pub fn line_label(line: &CoreLine) -> String {
    let pts: Vec<String> = line
        .points()
        .iter()
        .map(|p| tuple(p.coords()))
        .collect();
    format!("[{}]", pts.join(","))
}

pub fn factorize_doc(induced: &LineFactorization, ordinary: &LineFactorization) -> FactorizeDoc {
    let induced_doc: BTreeMap<usize, LineClassDoc> = induced
        .classes
        .iter()
        .map(|(&sig, lines)| {
            let mut sorted: Vec<&CoreLine> = lines.iter().collect();
            sorted.sort_by(|a, b| a.points().cmp(b.points()));
            (
                sig,
                LineClassDoc {
                    distinct_lines: sorted.len(),
                    line_list: sorted.iter().map(|l| line_points(l)).collect(),
                    multiplicity_map: sorted
                        .iter()
                        .map(|l| (line_label(l), l.multiplicity()))
                        .collect(),
                },
            )
        })
        .collect();
    let ordinary_doc: BTreeMap<usize, Vec<Vec<Vec<u16>>>> = ordinary
        .classes
        .iter()
        .map(|(&z, lines)| {
            let mut sorted: Vec<&CoreLine> = lines.iter().collect();
            sorted.sort_by(|a, b| a.points().cmp(b.points()));
            (z, sorted.iter().map(|l| line_points(l)).collect())
        })
        .collect();
    FactorizeDoc {
        induced: induced_doc,
        induced_pairwise_disjoint: induced.pairwise_disjoint,
        ordinary: ordinary_doc,
        ordinary_pairwise_disjoint: ordinary.pairwise_disjoint,
    }
}

pub fn factorize_text(doc: &FactorizeDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "induced factorization (by radical signature):");
    for (sig, class) in doc.induced.iter().rev() {
        let _ = writeln!(out, "  signature {}: {} distinct lines", sig, class.distinct_lines);
        for (label, mult) in &class.multiplicity_map {
            let _ = writeln!(out, "    {label} x{mult}");
        }
    }
    let _ = writeln!(
        out,
        "  pairwise disjoint: {}",
        doc.induced_pairwise_disjoint
    );
    let _ = writeln!(out, "ordinary factorization (by zero count of dual coordinates):");
    for (z, lines) in doc.ordinary.iter().rev() {
        let _ = writeln!(out, "  {} zeros: {} lines", z, lines.len());
    }
    let _ = writeln!(
        out,
        "  pairwise disjoint: {}",
        doc.ordinary_pairwise_disjoint
    );
    out
}

/// DOT rendering of the bipartite submodule/core-line incidence graph.
/// Submodule nodes are `s:<canonical generator>` with their radical
/// signature; line nodes are `l:<sorted point list>` with the signatures of
/// the classes hitting them.
pub fn dot_export(
    ctx: &CoreContext,
    classes: &[RadicalClass],
) -> Result<String, ProjectiveError> {
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut sub_nodes: Vec<(String, usize)> = Vec::new();
    let mut line_sigs: BTreeMap<String, std::collections::BTreeSet<usize>> = BTreeMap::new();
    for class in classes {
        for sub in class.members() {
            let line = crate::projective::core_line_of(ctx, sub)?;
            let s_id = format!("s:{}", sub.canonical_id());
            let l_id = format!("l:{}", line_label(&line));
            sub_nodes.push((s_id.clone(), class.radical_entry_count()));
            line_sigs
                .entry(l_id.clone())
                .or_default()
                .insert(class.radical_entry_count());
            edges.push((s_id, l_id));
        }
    }
    let mut out = String::from("graph core_incidence {\n");
    for (id, sig) in &sub_nodes {
        let _ = writeln!(out, "  \"{id}\" [kind=submodule, sig={sig}];");
    }
    for (id, sigs) in &line_sigs {
        let s: Vec<String> = sigs.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "  \"{id}\" [kind=line, sigs=\"{}\"];", s.join(","));
    }
    for (s, l) in &edges {
        let _ = writeln!(out, "  \"{s}\" -- \"{l}\";");
    }
    out.push_str("}\n");
    Ok(out)
}
