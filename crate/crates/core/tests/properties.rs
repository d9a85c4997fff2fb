//! Randomized property suites: the Hamming metric, canonical forms, text
//! round trips, exact slices, and rational normalization.

use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;
use rectlat::cube::{cube_hull, enumerate_all_faces, hamming_distance, CubeDim, Face, Vertex};
use rectlat::geometry::{affine_frame, rational, slice_polygon, vertex_on_affine_hull};
use rectlat::rect::{validate_rectangle, Rect};

fn dim_and_bits(max_n: u32) -> impl Strategy<Value = (CubeDim, u64, u64, u64)> {
    (2..=max_n).prop_flat_map(|n| {
        let dim = CubeDim::new(n).unwrap();
        let full = dim.full_mask();
        (Just(dim), 0..=full, 0..=full, 0..=full)
    })
}

fn arb_rect(max_n: u32) -> impl Strategy<Value = (CubeDim, Rect)> {
    dim_and_bits(max_n).prop_filter_map("disjoint nonempty side masks", |(dim, corner, a, b)| {
        let b = b & !a;
        if a == 0 || b == 0 {
            return None;
        }
        let corner = dim.vertex(corner).unwrap();
        Some((dim, Rect::from_corner(dim, corner, a, b).unwrap()))
    })
}

proptest! {
    #[test]
    fn hamming_is_a_metric((dim, x, y, z) in dim_and_bits(10)) {
        let (x, y, z) = (dim.vertex(x).unwrap(), dim.vertex(y).unwrap(), dim.vertex(z).unwrap());
        prop_assert_eq!(hamming_distance(x, y), hamming_distance(y, x));
        prop_assert_eq!(hamming_distance(x, y) == 0, x == y);
        prop_assert!(hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z));
        prop_assert!(hamming_distance(x, y) <= dim.n());
    }

    #[test]
    fn vertex_text_round_trips((dim, bits, _, _) in dim_and_bits(10)) {
        let v = dim.vertex(bits).unwrap();
        prop_assert_eq!(Vertex::parse(dim, &v.text(dim)).unwrap(), v);
    }

    #[test]
    fn hull_is_minimal_over_random_pairs((dim, a, b, _) in dim_and_bits(6)) {
        let (a, b) = (dim.vertex(a).unwrap(), dim.vertex(b).unwrap());
        let hull = cube_hull([a, b]);
        prop_assert!(hull.contains(a) && hull.contains(b));
        for f in enumerate_all_faces(dim) {
            if f.contains(a) && f.contains(b) {
                prop_assert!(f.includes(&hull));
            }
        }
    }

    #[test]
    fn face_text_round_trips((dim, anchor, free, _) in dim_and_bits(10)) {
        let anchor = anchor & !free;
        let f = Face::cell(dim, dim.vertex(anchor).unwrap(), free).unwrap();
        prop_assert_eq!(Face::parse(dim, &f.text(dim)).unwrap(), f);
    }

    #[test]
    fn canonical_rect_survives_validation((dim, r) in arb_rect(8)) {
        // feeding the four vertices back as <x, y; z, w> reproduces the
        // canonical form
        let [x, y, z, w] = r.vertices();
        let again = validate_rectangle(dim, x, y, z, w).unwrap();
        prop_assert_eq!(again, r);
        // the reflected ordering must be rejected
        prop_assert!(validate_rectangle(dim, x, y, w, z).is_err());
    }

    #[test]
    fn slices_equal_rectangles((dim, r) in arb_rect(6)) {
        let frame = affine_frame(dim, r);
        let poly = slice_polygon(&frame);
        prop_assert_eq!(poly.param_vertices.len(), 4);
        let mut ambient = poly.ambient_vertices.clone();
        ambient.sort();
        let mut expect: Vec<Vec<rectlat::geometry::Rational>> = r
            .vertices()
            .iter()
            .map(|v| {
                (0..dim.n()).map(|j| rational(((v.bits() >> j) & 1) as i64, 1)).collect()
            })
            .collect();
        expect.sort();
        prop_assert_eq!(ambient, expect);
    }

    #[test]
    fn affine_hull_has_no_extra_vertices((dim, r) in arb_rect(7)) {
        let frame = affine_frame(dim, r);
        let mut on_plane = 0u32;
        for w in dim.vertices() {
            if vertex_on_affine_hull(&frame, w) {
                prop_assert!(r.contains(w));
                on_plane += 1;
            }
        }
        prop_assert_eq!(on_plane, 4);
    }

    #[test]
    fn rational_ops_stay_normalized(an in -200i64..200, ad in 1i64..60, bn in -200i64..200, bd in 1i64..60) {
        let a = rational(an, ad);
        let b = rational(bn, bd);
        for value in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(value.denom().is_positive());
            prop_assert_eq!(value.numer().gcd(value.denom()), num_bigint::BigInt::one());
        }
        if bn != 0 {
            let q = &a / &b;
            prop_assert!(q.denom().is_positive());
        }
    }
}
