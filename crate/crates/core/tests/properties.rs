//! Differential tests against the brute-force oracles plus proptest
//! invariants over the pipeline's building blocks.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::{brute_force_unimodular, matrix_oracle};
use ternion::cayley;
use ternion::field::{build_field, FieldSpec};
use ternion::projective::{core_point_of, CoreContext};
use ternion::ring::{Elem, FiniteRing};
use ternion::submodule::{
    enumerate_nonunimodular_free, generate_submodule, is_unimodular, scale, RingVector,
};
use ternion::ternion::{build_ternions, TernionRing};

fn t2() -> TernionRing {
    let gf2 = build_field(&FieldSpec::new(2, 1)).unwrap();
    build_ternions(&gf2).unwrap()
}

fn t3() -> TernionRing {
    let gf3 = build_field(&FieldSpec::new(3, 1)).unwrap();
    build_ternions(&gf3).unwrap()
}

fn all_vectors(ring: &FiniteRing, rank: usize) -> Vec<RingVector> {
    let n = ring.order() as u64;
    (0..n.pow(rank as u32))
        .map(|code| {
            let mut rest = code;
            let mut coords = Vec::with_capacity(rank);
            for _ in 0..rank {
                coords.push(Elem((rest % n) as u16));
                rest /= n;
            }
            RingVector::new(coords)
        })
        .collect()
}

#[test]
fn closure_unimodularity_equals_brute_force_on_t2_rank3() {
    let t = t2();
    let ring = t.ring();
    for v in all_vectors(ring, 3) {
        assert_eq!(
            is_unimodular(ring, &v),
            brute_force_unimodular(ring, &v),
            "disagreement at {v}"
        );
    }
}

#[test]
fn closure_unimodularity_equals_brute_force_on_t3_rank2() {
    let t = t3();
    let ring = t.ring();
    for v in all_vectors(ring, 2) {
        assert_eq!(
            is_unimodular(ring, &v),
            brute_force_unimodular(ring, &v),
            "disagreement at {v}"
        );
    }
}

#[test]
fn unimodular_implies_free_exhaustively() {
    for (t, rank) in [(t2(), 3usize), (t3(), 2)] {
        let ring = t.ring();
        for v in all_vectors(ring, rank) {
            if is_unimodular(ring, &v) {
                let sub = generate_submodule(ring, &v);
                assert!(sub.is_free(), "unimodular {v} generated a non-free orbit");
            }
        }
    }
}

#[test]
fn matrix_oracle_closed_form_matches_exhaustive_scan() {
    let elems = matrix_oracle::elements();
    for &x in &elems {
        for &y in &elems {
            assert_eq!(
                matrix_oracle::unimodular_closed_form(&[x, y]),
                matrix_oracle::unimodular_exhaustive_rank2([x, y]),
                "closed form wrong at [{x:?}, {y:?}]"
            );
        }
    }
}

#[test]
fn t2_rank3_orbits_stay_inside_the_first_maximal_ideal() {
    let t = t2();
    let ring = t.ring();
    let e = enumerate_nonunimodular_free(ring, 3, 1 << 24).unwrap();
    let i1: BTreeSet<u16> = [0, 4, 6, 7].into_iter().collect();
    for sub in &e.submodules {
        for v in sub.orbit() {
            assert!(
                v.indices().iter().all(|ix| i1.contains(ix)),
                "orbit member {v} leaves I1^3"
            );
        }
    }
}

proptest! {
    #[test]
    fn orbits_contain_zero_and_the_seed(code in 0u64..19683) {
        let t = t3();
        let ring = t.ring();
        let v = decode(ring, code, 3);
        let sub = generate_submodule(ring, &v);
        let zero = RingVector::from_indices(&[0, 0, 0]);
        prop_assert!(sub.orbit().contains(&zero));
        prop_assert!(sub.orbit().contains(&v));
        prop_assert_eq!(sub.is_free(), sub.orbit_size() == ring.order());
    }

    #[test]
    fn every_generator_regenerates_its_orbit(code in 0u64..19683) {
        let t = t3();
        let ring = t.ring();
        let v = decode(ring, code, 3);
        let sub = generate_submodule(ring, &v);
        for g in sub.generators() {
            let re = generate_submodule(ring, g);
            prop_assert_eq!(re.orbit(), sub.orbit());
        }
    }

    #[test]
    fn closure_unimodularity_matches_oracle_on_sampled_t3_rank3(code in 0u64..19683) {
        let t = t3();
        let ring = t.ring();
        let v = decode(ring, code, 3);
        prop_assert_eq!(is_unimodular(ring, &v), brute_force_unimodular(ring, &v));
    }

    #[test]
    fn scaling_is_associative_with_ring_multiplication(
        code in 0u64..19683, a in 0u16..27, b in 0u16..27
    ) {
        let t = t3();
        let ring = t.ring();
        let v = decode(ring, code, 3);
        let lhs = scale(ring, Elem(a), &scale(ring, Elem(b), &v));
        let rhs = scale(ring, ring.mul(Elem(a), Elem(b)), &v);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn core_points_are_unit_scale_invariant(code in 1u64..27) {
        // Sample J^3 \ {0} directly: base-|J| digits index into the radical.
        let t = t3();
        let ring = t.ring();
        let ctx = CoreContext::for_ternions(&t).unwrap();
        let radical: Vec<Elem> = ring
            .jacobson_radical()
            .unwrap()
            .elements()
            .iter()
            .copied()
            .collect();
        let coords: Vec<Elem> = (0..3)
            .map(|i| radical[(code / 3u64.pow(i) % 3) as usize])
            .collect();
        let v = RingVector::new(coords);
        let base = core_point_of(&ctx, &v).unwrap();
        for u in ring.units().iter() {
            let scaled = scale(ring, *u, &v);
            prop_assert_eq!(core_point_of(&ctx, &scaled).unwrap(), base.clone());
        }
    }

    #[test]
    fn cayley_files_survive_comment_and_blank_noise(
        seed in 0usize..4, noise in proptest::collection::vec(0usize..3, 0..20)
    ) {
        let ring = match seed {
            0 => build_field(&FieldSpec::new(2, 1)).unwrap(),
            1 => build_field(&FieldSpec::new(3, 1)).unwrap(),
            2 => build_field(&FieldSpec::new(2, 2)).unwrap(),
            _ => t2().ring().clone(),
        };
        let canonical = cayley::write_tables(&ring);
        let mut noisy = String::new();
        let mut noise_iter = noise.iter();
        for line in canonical.lines() {
            match noise_iter.next() {
                Some(1) => noisy.push_str("# comment line\n"),
                Some(2) => noisy.push('\n'),
                _ => {}
            }
            noisy.push_str(line);
            noisy.push('\n');
        }
        let (reloaded, _) = cayley::load_ring(&noisy).unwrap();
        prop_assert_eq!(cayley::write_tables(&reloaded), canonical);
    }
}

fn decode(ring: &FiniteRing, mut code: u64, rank: usize) -> RingVector {
    let n = ring.order() as u64;
    let mut coords = Vec::with_capacity(rank);
    for _ in 0..rank {
        coords.push(Elem((code % n) as u16));
        code /= n;
    }
    RingVector::new(coords)
}
