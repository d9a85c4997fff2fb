//! Desk-scale sweeps of the lattice theorems at n = 4 and n = 5: everything
//! here is exhaustive except where a fixed-seed sample is noted.

use num_bigint::BigUint;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rectlat::counts;
use rectlat::cube::{enumerate_chords, enumerate_faces, CubeDim, Vertex};
use rectlat::geometry::{affine_frame, slice_polygon, touches_interior};
use rectlat::lattice::{DistributiveVerdict, ModularVerdict, TRIPLE_SCAN_THRESHOLD};
use rectlat::rect::{enumerate_rectangles, rect_anatomy};
use rectlat::vcr::{
    build_cubical_lattice, build_vcr, chord_intersection_witness, n5_witness, quotient_and_iso,
    vcr_join, vcr_meet, VcrElement,
};

fn d(n: u32) -> CubeDim {
    CubeDim::new(n).unwrap()
}

#[test]
fn r4_is_a_graded_atomic_nondistributive_lattice() {
    let rn = build_vcr(d(4)).unwrap();
    assert_eq!(rn.lattice.len(), 238);

    let ranks = rn.lattice.grade().unwrap();
    for i in 0..rn.lattice.len() {
        assert_eq!(ranks[i], rn.elements[i].rank());
    }

    assert!(rn.lattice.check_atomic().is_ok());
    let atoms = rn.lattice.atoms();
    assert_eq!(atoms.len(), 16);
    assert!(atoms.iter().all(|&i| matches!(rn.elements[i], VcrElement::Vertex(_))));

    match rn.lattice.check_distributive_with(rn.lattice.len(), &[]) {
        DistributiveVerdict::No { triple: Some(_), .. } => {}
        other => panic!("R_4 should fail distributivity with a triple, got {other:?}"),
    }
}

#[test]
fn r4_constructive_ops_agree_with_engine_exhaustively() {
    let rn = build_vcr(d(4)).unwrap();
    let m = rn.lattice.len();
    for i in 0..m {
        for j in i..m {
            let join_c = vcr_join(rn.dim, rn.elements[i], rn.elements[j]);
            let join_e = rn.elements[rn.lattice.join(i, j)];
            assert_eq!(join_c, join_e, "join {:?} {:?}", rn.elements[i], rn.elements[j]);
            let meet_c = vcr_meet(rn.elements[i], rn.elements[j]);
            let meet_e = rn.elements[rn.lattice.meet(i, j)];
            assert_eq!(meet_c, meet_e, "meet {:?} {:?}", rn.elements[i], rn.elements[j]);
        }
    }
}

#[test]
fn r4_order_has_no_vertex_rectangle_cover() {
    // every vertex-below-rectangle containment passes through a chord
    let rn = build_vcr(d(4)).unwrap();
    let m = rn.lattice.len();
    for v in 0..m {
        if !matches!(rn.elements[v], VcrElement::Vertex(_)) {
            continue;
        }
        for r in 0..m {
            if matches!(rn.elements[r], VcrElement::Rect(_)) && rn.lattice.leq(v, r) {
                assert!(!rn.lattice.is_cover(v, r));
            }
        }
    }
}

#[test]
fn r4_algebra_laws_on_random_triples() {
    // the exhaustive law check stops at |L| = 60; above it, sampled triples
    let rn = build_vcr(d(4)).unwrap();
    let m = rn.lattice.len();
    let mut rng = StdRng::seed_from_u64(0xA17E);
    for _ in 0..20_000 {
        let a = rng.random_range(0..m);
        let b = rng.random_range(0..m);
        let c = rng.random_range(0..m);
        assert_eq!(rn.lattice.meet(a, b), rn.lattice.meet(b, a));
        assert_eq!(rn.lattice.join(a, b), rn.lattice.join(b, a));
        assert_eq!(rn.lattice.meet(a, rn.lattice.join(a, b)), a);
        assert_eq!(rn.lattice.join(a, rn.lattice.meet(a, b)), a);
        assert_eq!(
            rn.lattice.meet(rn.lattice.meet(a, b), c),
            rn.lattice.meet(a, rn.lattice.meet(b, c))
        );
        assert_eq!(
            rn.lattice.join(rn.lattice.join(a, b), c),
            rn.lattice.join(a, rn.lattice.join(b, c))
        );
    }
}

#[test]
fn r4_rectangle_meets_are_vertices_or_chords() {
    let rn = build_vcr(d(4)).unwrap();
    let rects: Vec<VcrElement> = rn
        .elements
        .iter()
        .copied()
        .filter(|e| matches!(e, VcrElement::Rect(_)))
        .collect();
    assert_eq!(rects.len(), 100);
    for (i, a) in rects.iter().enumerate() {
        for b in rects.iter().skip(i + 1) {
            let met = vcr_meet(*a, *b);
            assert!(met.rank() <= 2, "meet of {a:?} and {b:?} is {met:?}");
        }
    }
}

#[test]
fn r5_builds_and_holds_the_theorem_structure() {
    let dim = d(5);
    let rn = build_vcr(dim).unwrap();
    assert_eq!(rn.lattice.len(), 1250);
    assert_eq!(
        BigUint::from(rn.poset_size()),
        counts::vcr_poset_size(5),
        "poset size formula at n = 5"
    );

    let ranks = rn.lattice.grade().unwrap();
    for i in 0..rn.lattice.len() {
        assert_eq!(ranks[i], rn.elements[i].rank());
    }
    assert!(rn.lattice.check_atomic().is_ok());

    // every chord covers its 2 endpoints and sits under >= 2 rectangles
    for i in 0..rn.lattice.len() {
        if matches!(rn.elements[i], VcrElement::Chord(_)) {
            assert_eq!(rn.lattice.lower_covers(i).len(), 2);
            assert!(rn.lattice.upper_covers(i).len() >= 2);
        }
    }

    // nondistributive via the pentagon hint above the scan threshold
    let cn = build_cubical_lattice(dim).unwrap();
    let face = enumerate_faces(dim, 2).unwrap()[0];
    let free = face.anchor_free().unwrap().1;
    let pent = n5_witness(&rn, &cn, face, free & free.wrapping_neg()).unwrap();
    match rn.lattice.check_distributive_with(TRIPLE_SCAN_THRESHOLD, &[pent.rect_witness]) {
        DistributiveVerdict::No { witness: Some(_), .. } => {}
        other => panic!("expected pentagon refutation, got {other:?}"),
    }
    match rn.lattice.check_modular_with(TRIPLE_SCAN_THRESHOLD, &[pent.rect_witness]) {
        ModularVerdict::No { .. } => {}
        other => panic!("expected nonmodularity, got {other:?}"),
    }
}

#[test]
fn r5_join_agrees_with_engine_on_random_pairs() {
    let rn = build_vcr(d(5)).unwrap();
    let m = rn.lattice.len();
    let mut rng = StdRng::seed_from_u64(0x5EC7);
    for _ in 0..100_000 {
        let i = rng.random_range(0..m);
        let j = rng.random_range(0..m);
        let join_c = vcr_join(rn.dim, rn.elements[i], rn.elements[j]);
        let join_e = rn.elements[rn.lattice.join(i, j)];
        assert_eq!(join_c, join_e);
        let meet_c = vcr_meet(rn.elements[i], rn.elements[j]);
        let meet_e = rn.elements[rn.lattice.meet(i, j)];
        assert_eq!(meet_c, meet_e);
    }
}

#[test]
fn chord_witnesses_are_exact_for_n3_to_n5() {
    for n in 3..=5 {
        let dim = d(n);
        for e in enumerate_chords(dim) {
            let (r1, r2) = chord_intersection_witness(dim, e).unwrap();
            assert_ne!(r1, r2);
            let common: Vec<Vertex> =
                r1.sorted_vertices().into_iter().filter(|v| r2.contains(*v)).collect();
            assert_eq!(common, vec![e.lo(), e.hi()], "chord {e:?} at n = {n}");
        }
    }
}

#[test]
fn pentagon_sweep_n4() {
    let rn = build_vcr(d(4)).unwrap();
    let cn = build_cubical_lattice(d(4)).unwrap();
    let mut count = 0;
    for face in enumerate_faces(d(4), 2).unwrap() {
        let free = face.anchor_free().unwrap().1;
        let low = free & free.wrapping_neg();
        for dir in [low, free ^ low] {
            let pent = n5_witness(&rn, &cn, face, dir).unwrap();
            assert!(rn.lattice.verify_witness(&pent.rect_witness));
            assert!(cn.lattice.verify_witness(&pent.cubical_witness));
            count += 1;
        }
    }
    assert_eq!(count, 48); // 24 two-faces x 2 directions

    // both lattices are nonmodular with explicit triples at this size
    assert!(matches!(
        rn.lattice.check_modular_with(rn.lattice.len(), &[]),
        ModularVerdict::No { triple: Some(_), .. }
    ));
    assert!(matches!(
        cn.lattice.check_modular_with(cn.lattice.len(), &[]),
        ModularVerdict::No { triple: Some(_), .. }
    ));
}

#[test]
fn quotient_iso_n4() {
    let rn = build_vcr(d(4)).unwrap();
    let cn = build_cubical_lattice(d(4)).unwrap();
    let q = quotient_and_iso(&rn, &cn).unwrap();
    assert!(q.iso_verified, "{:?}", q.failures);
    assert_eq!(q.classes.len(), 82);
    // dim-4 class: 8 diagonals + C(8,2) = 28 central rectangles + Top
    let top_class = q.classes.last().unwrap();
    assert_eq!(top_class.members.len(), 8 + 28 + 1);
}

#[test]
fn birkhoff_size_argument_n3_to_n8() {
    for n in 3..=8u32 {
        let downsets_of_atoms = BigUint::one() << (1u64 << n);
        let rn_size = counts::vcr_poset_size(n) + BigUint::from(2u32);
        assert_ne!(downsets_of_atoms, rn_size, "n = {n}");
    }
}

#[test]
fn slices_match_rectangles_n4() {
    let dim = d(4);
    let mut central = 0;
    for r in enumerate_rectangles(dim) {
        let poly = slice_polygon(&affine_frame(dim, r));
        assert_eq!(poly.param_vertices.len(), 4);
        let mut ambient = poly.ambient_vertices.clone();
        ambient.sort();
        let mut expect: Vec<Vec<rectlat::geometry::Rational>> = r
            .vertices()
            .iter()
            .map(|v| {
                (0..4)
                    .map(|j| {
                        rectlat::geometry::Rational::from_integer(
                            (((v.bits() >> j) & 1) as i64).into(),
                        )
                    })
                    .collect()
            })
            .collect();
        expect.sort();
        assert_eq!(ambient, expect);
        if touches_interior(dim, r) {
            central += 1;
            assert!(rect_anatomy(dim, r).central);
        }
    }
    assert_eq!(central, 28);
}

#[test]
fn chord_incidence_scan_n5() {
    let dim = d(5);
    for e in enumerate_chords(dim) {
        let i = e.length();
        let inc = rectlat::rect::chord_inclusions(dim, e);
        assert_eq!(inc.d_included.len() as u64, (1u64 << (i - 1)) - 1);
        assert_eq!(inc.s_included.len() as u64, (1u64 << (5 - i)) - 1);
        for r in &inc.d_included {
            assert!(r.contains(e.lo()) && r.contains(e.hi()));
            assert_eq!(r.span(), e.mask());
        }
        for r in &inc.s_included {
            assert!(r.contains(e.lo()) && r.contains(e.hi()));
            assert_eq!(r.mask_a() == e.mask() || r.mask_b() == e.mask(), true);
        }
    }
}

#[test]
fn enumeration_counts_match_formula_to_n7() {
    for n in 2..=7u32 {
        let counted = enumerate_rectangles(d(n)).count();
        assert_eq!(BigUint::from(counted), counts::rect_total(n), "n = {n}");
    }
}
