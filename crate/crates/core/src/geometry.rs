//! Exact rational geometry: the affine hull of a cubical rectangle and its
//! intersection with the solid cube [0,1]^n.
//!
//! The plane aff(T) is parameterized as origin + s·dirU + t·dirV with integer
//! direction vectors of disjoint support whose entries lie in {−1, 0, 1}.
//! Each cube constraint 0 ≤ x_j ≤ 1 becomes a halfplane in (s, t); clipping
//! the start box [−1, 2]² (which provably contains the feasible set, since
//! each direction has a coordinate where the other vanishes) yields the slice
//! polygon with exact rational vertices.

use crate::cube::CubeDim;
use crate::rect::Rect;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact fraction with normalized gcd and positive denominator, courtesy of
/// `num-rational`.
pub type Rational = BigRational;

/// Convenience constructor used by tests and the CLI.
pub fn rational(num: i64, den: i64) -> Rational {
    assert!(den != 0);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// aff(T) = {origin + s·dirU + t·dirV}: origin is a rectangle vertex as a
/// 0/1 vector, the directions are the side vectors. Entries are in
/// {−1, 0, 1} and the direction supports are disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineFrame {
    pub origin: Vec<i32>,
    pub dir_u: Vec<i32>,
    pub dir_v: Vec<i32>,
}

/// Frame of a rectangle: origin = base, dirU = (base⊕maskA) − base,
/// dirV = (base⊕maskB) − base. A side vector has entry +1 where the base bit
/// is 0 and −1 where it is 1.
pub fn affine_frame(dim: CubeDim, r: Rect) -> AffineFrame {
    let n = dim.n();
    let base = r.base().bits();
    let component = |mask: u64, j: u32| -> i32 {
        if mask & (1 << j) != 0 {
            1 - 2 * ((base >> j) & 1) as i32
        } else {
            0
        }
    };
    AffineFrame {
        origin: (0..n).map(|j| ((base >> j) & 1) as i32).collect(),
        dir_u: (0..n).map(|j| component(r.mask_a(), j)).collect(),
        dir_v: (0..n).map(|j| component(r.mask_b(), j)).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolygonKind {
    Empty,
    Point,
    Segment,
    Polygon,
}

/// The convex polygon aff(T) ∩ C^n in parameter coordinates, counterclockwise
/// from the lexicographically least (s, t), together with the corresponding
/// ambient points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicePolygon {
    pub param_vertices: Vec<(Rational, Rational)>,
    pub ambient_vertices: Vec<Vec<Rational>>,
}

impl SlicePolygon {
    pub fn kind(&self) -> PolygonKind {
        match self.param_vertices.len() {
            0 => PolygonKind::Empty,
            1 => PolygonKind::Point,
            2 => PolygonKind::Segment,
            _ => PolygonKind::Polygon,
        }
    }
}

/// Halfplane a·s + b·t + c ≥ 0 with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Halfplane {
    a: i64,
    b: i64,
    c: i64,
}

impl Halfplane {
    fn eval(&self, p: &(Rational, Rational)) -> Rational {
        Rational::from(BigInt::from(self.a)) * &p.0
            + Rational::from(BigInt::from(self.b)) * &p.1
            + Rational::from(BigInt::from(self.c))
    }
}

/// Clips the start box by every cube constraint. Vacuous rows (both direction
/// entries zero) are dropped when satisfied and empty the polygon when
/// violated; duplicate halfplanes are deduplicated before clipping.
pub fn slice_polygon(frame: &AffineFrame) -> SlicePolygon {
    let n = frame.origin.len();
    let mut planes = Vec::with_capacity(2 * n);
    for j in 0..n {
        let (u, v, o) = (i64::from(frame.dir_u[j]), i64::from(frame.dir_v[j]), i64::from(frame.origin[j]));
        for hp in [
            Halfplane { a: u, b: v, c: o },           // x_j >= 0
            Halfplane { a: -u, b: -v, c: 1 - o },     // x_j <= 1
        ] {
            if hp.a == 0 && hp.b == 0 {
                if hp.c < 0 {
                    return SlicePolygon { param_vertices: vec![], ambient_vertices: vec![] };
                }
                continue;
            }
            planes.push(hp);
        }
    }
    planes.sort();
    planes.dedup();

    let corner = |s: i64, t: i64| (rational(s, 1), rational(t, 1));
    let mut poly = vec![corner(-1, -1), corner(2, -1), corner(2, 2), corner(-1, 2)];
    for hp in &planes {
        poly = clip_halfplane(&poly, hp);
        if poly.is_empty() {
            break;
        }
    }
    let param_vertices = canonicalize(poly);
    let ambient_vertices = param_vertices.iter().map(|p| ambient_point(frame, p)).collect();
    SlicePolygon { param_vertices, ambient_vertices }
}

fn ambient_point(frame: &AffineFrame, (s, t): &(Rational, Rational)) -> Vec<Rational> {
    frame
        .origin
        .iter()
        .zip(frame.dir_u.iter().zip(&frame.dir_v))
        .map(|(o, (u, v))| {
            Rational::from(BigInt::from(*o))
                + Rational::from(BigInt::from(*u)) * s
                + Rational::from(BigInt::from(*v)) * t
        })
        .collect()
}

/// Sutherland–Hodgman step: keeps the closed side eval ≥ 0.
fn clip_halfplane(poly: &[(Rational, Rational)], hp: &Halfplane) -> Vec<(Rational, Rational)> {
    if poly.is_empty() {
        return vec![];
    }
    let vals: Vec<Rational> = poly.iter().map(|p| hp.eval(p)).collect();
    let mut out = Vec::with_capacity(poly.len() + 1);
    for i in 0..poly.len() {
        let j = (i + 1) % poly.len();
        let (pi, pj) = (&poly[i], &poly[j]);
        let (di, dj) = (&vals[i], &vals[j]);
        let i_in = !di.is_negative();
        let j_in = !dj.is_negative();
        if i_in {
            out.push(pi.clone());
        }
        if i_in != j_in {
            // boundary crossing at p = pi + (pj − pi)·di/(di − dj)
            let lambda = di / (di - dj);
            let s = &pi.0 + (&pj.0 - &pi.0) * &lambda;
            let t = &pi.1 + (&pj.1 - &pi.1) * &lambda;
            out.push((s, t));
        }
    }
    out
}

fn cross(
    o: &(Rational, Rational),
    a: &(Rational, Rational),
    b: &(Rational, Rational),
) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Removes duplicate and collinear vertices, fixes counterclockwise
/// orientation, and rotates the cycle to start at the lexicographically
/// least (s, t).
fn canonicalize(mut poly: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    // consecutive duplicates (including the wrap-around)
    let mut dedup: Vec<(Rational, Rational)> = Vec::with_capacity(poly.len());
    for p in poly.drain(..) {
        if dedup.last() != Some(&p) {
            dedup.push(p);
        }
    }
    while dedup.len() > 1 && dedup.first() == dedup.last() {
        dedup.pop();
    }
    let mut poly = dedup;

    // merge collinear runs
    loop {
        if poly.len() < 3 {
            break;
        }
        let m = poly.len();
        let mut removed = false;
        for i in 0..m {
            let prev = &poly[(i + m - 1) % m];
            let next = &poly[(i + 1) % m];
            if cross(prev, &poly[i], next).is_zero() {
                poly.remove(i);
                removed = true;
                break;
            }
        }
        if !removed {
            break;
        }
    }

    if poly.len() >= 3 {
        let area2: Rational = {
            let mut acc = Rational::zero();
            for i in 0..poly.len() {
                let j = (i + 1) % poly.len();
                acc += &poly[i].0 * &poly[j].1 - &poly[j].0 * &poly[i].1;
            }
            acc
        };
        if area2.is_negative() {
            poly.reverse();
        }
    } else if poly.len() == 2 && poly[1] < poly[0] {
        poly.swap(0, 1);
    }

    if poly.len() >= 2 {
        let start = poly
            .iter()
            .enumerate()
            .min_by(|(_, p), (_, q)| p.cmp(q))
            .map(|(i, _)| i)
            .unwrap_or(0);
        poly.rotate_left(start);
    }
    poly
}

/// Theorem 2(a) criterion: a convex subset of the cube misses the interior
/// iff it lies in a facet, so a rectangle touches the interior iff no
/// coordinate is constant over its four vertices. Agrees with the `central`
/// flag of the anatomy.
pub fn touches_interior(dim: CubeDim, r: Rect) -> bool {
    r.span() == dim.full_mask()
}

/// Whether a cube vertex satisfies the frame's linear system, i.e. lies on
/// aff(T). Integer arithmetic suffices: each supported coordinate pins s or
/// t, unsupported coordinates must match the origin.
pub fn vertex_on_affine_hull(frame: &AffineFrame, w: crate::cube::Vertex) -> bool {
    let n = frame.origin.len();
    let mut s: Option<i32> = None;
    let mut t: Option<i32> = None;
    for j in 0..n {
        let delta = ((w.bits() >> j) & 1) as i32 - frame.origin[j];
        if frame.dir_u[j] != 0 {
            let s_j = delta * frame.dir_u[j];
            if s.is_some_and(|prev| prev != s_j) {
                return false;
            }
            s = Some(s_j);
        } else if frame.dir_v[j] != 0 {
            let t_j = delta * frame.dir_v[j];
            if t.is_some_and(|prev| prev != t_j) {
                return false;
            }
            t = Some(t_j);
        } else if delta != 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::Vertex;
    use crate::rect::{enumerate_rectangles, rect_anatomy};
    use num_integer::Integer;
    use num_traits::One;

    fn d(n: u32) -> CubeDim {
        CubeDim::new(n).unwrap()
    }

    fn v(n: u32, s: &str) -> Vertex {
        Vertex::parse(d(n), s).unwrap()
    }

    fn int(x: i64) -> Rational {
        rational(x, 1)
    }

    #[test]
    fn frame_examples() {
        let dim = d(3);
        let r = Rect::from_corner(dim, v(3, "000"), 0b001, 0b110).unwrap();
        let f = affine_frame(dim, r);
        assert_eq!(f.origin, vec![0, 0, 0]);
        assert_eq!(f.dir_u, vec![1, 0, 0]);
        assert_eq!(f.dir_v, vec![0, 1, 1]);

        let square = Rect::from_corner(dim, v(3, "000"), 0b010, 0b100).unwrap();
        let fs = affine_frame(dim, square);
        assert_eq!(fs.dir_u, vec![0, 1, 0]);
        assert_eq!(fs.dir_v, vec![0, 0, 1]);
    }

    #[test]
    fn frame_negative_entries() {
        // base "100" has a 1 inside the mask {1,2}, so that side vector
        // carries a −1 entry: the canonical base is the least vertex but can
        // still sit on non-top bits of a mask.
        let dim = d(3);
        let r = Rect::from_corner(dim, v(3, "100"), 0b011, 0b100).unwrap();
        assert_eq!(r.base(), v(3, "100"));
        let f = affine_frame(dim, r);
        assert_eq!(f.origin, vec![1, 0, 0]);
        assert_eq!(f.dir_u, vec![-1, 1, 0]);
        assert_eq!(f.dir_v, vec![0, 0, 1]);
        // supports disjoint, entries in {-1,0,1}
        for j in 0..3 {
            assert!(f.dir_u[j] == 0 || f.dir_v[j] == 0);
            assert!((-1..=1).contains(&f.dir_u[j]));
        }
        // the slice is still exactly the rectangle
        let poly = slice_polygon(&f);
        assert_eq!(poly.param_vertices.len(), 4);
    }

    #[test]
    fn slice_is_unit_square_for_rectangles() {
        let dim = d(3);
        let r = Rect::from_corner(dim, v(3, "000"), 0b001, 0b110).unwrap();
        let poly = slice_polygon(&affine_frame(dim, r));
        assert_eq!(poly.kind(), PolygonKind::Polygon);
        assert_eq!(
            poly.param_vertices,
            vec![
                (int(0), int(0)),
                (int(1), int(0)),
                (int(1), int(1)),
                (int(0), int(1))
            ]
        );
        // ambient vertices are exactly the rectangle's corners
        let expect: Vec<Vec<Rational>> = [r.vertices()[0], r.vertices()[1], r.vertices()[3], r.vertices()[2]]
            .iter()
            .map(|vx| (0..3).map(|j| int(((vx.bits() >> j) & 1) as i64)).collect())
            .collect();
        assert_eq!(poly.ambient_vertices, expect);
    }

    #[test]
    fn slice_matches_vertices_for_all_n3_rectangles() {
        let dim = d(3);
        for r in enumerate_rectangles(dim) {
            let poly = slice_polygon(&affine_frame(dim, r));
            assert_eq!(poly.param_vertices.len(), 4, "slice of {r:?}");
            let mut ambient: Vec<Vec<Rational>> = poly.ambient_vertices.clone();
            ambient.sort();
            let mut expect: Vec<Vec<Rational>> = r
                .vertices()
                .iter()
                .map(|vx| (0..3).map(|j| int(((vx.bits() >> j) & 1) as i64)).collect())
                .collect();
            expect.sort();
            assert_eq!(ambient, expect);
        }
    }

    #[test]
    fn conflicting_vacuous_row_empties_polygon() {
        let frame = AffineFrame {
            origin: vec![2, 0, 0],
            dir_u: vec![0, 1, 0],
            dir_v: vec![0, 0, 1],
        };
        let poly = slice_polygon(&frame);
        assert_eq!(poly.kind(), PolygonKind::Empty);
    }

    #[test]
    fn degenerate_segment_slice() {
        // Opposite-signed entries pin s to 0, leaving a segment in t. Such a
        // frame never comes from a rectangle; this exercises the degenerate
        // return shapes.
        let frame = AffineFrame {
            origin: vec![0, 0, 0],
            dir_u: vec![1, -1, 0],
            dir_v: vec![0, 0, 1],
        };
        let poly = slice_polygon(&frame);
        assert_eq!(poly.kind(), PolygonKind::Segment);
        assert_eq!(poly.param_vertices, vec![(int(0), int(0)), (int(0), int(1))]);
    }

    #[test]
    fn interior_examples() {
        let dim = d(3);
        let central = Rect::from_corner(dim, v(3, "000"), 0b001, 0b110).unwrap();
        assert!(touches_interior(dim, central));
        let square = Rect::from_corner(dim, v(3, "000"), 0b010, 0b100).unwrap();
        assert!(!touches_interior(dim, square));
    }

    #[test]
    fn interior_iff_central_n4() {
        let dim = d(4);
        let mut touching = 0;
        let mut total = 0;
        for r in enumerate_rectangles(dim) {
            total += 1;
            let central = rect_anatomy(dim, r).central;
            assert_eq!(touches_interior(dim, r), central);
            if central {
                touching += 1;
            }
        }
        assert_eq!((touching, total), (28, 100));
    }

    #[test]
    fn center_is_cube_center_iff_central() {
        let dim = d(3);
        let half = rational(1, 2);
        for r in enumerate_rectangles(dim) {
            let f = affine_frame(dim, r);
            let center = ambient_point(&f, &(half.clone(), half.clone()));
            let all_half = center.iter().all(|c| *c == half);
            assert_eq!(all_half, rect_anatomy(dim, r).central);
        }
    }

    #[test]
    fn no_extra_lattice_points_on_affine_hull() {
        // The paper's first question: only the rectangle's own vertices of
        // B^n lie on aff(T). Oracle: solve the linear system for every cube
        // vertex.
        for n in 2..=4 {
            let dim = d(n);
            for r in enumerate_rectangles(dim) {
                let f = affine_frame(dim, r);
                let mut on_plane = 0;
                for w in dim.vertices() {
                    if vertex_on_affine_hull(&f, w) {
                        assert!(r.contains(w), "{w:?} on aff of {r:?}");
                        on_plane += 1;
                    }
                }
                assert_eq!(on_plane, 4);
            }
        }
    }

    #[test]
    fn polygon_vertices_have_two_active_constraints() {
        let dim = d(4);
        for r in enumerate_rectangles(dim) {
            let poly = slice_polygon(&affine_frame(dim, r));
            for point in &poly.ambient_vertices {
                let active = point
                    .iter()
                    .filter(|c| c.is_zero() || **c == Rational::one())
                    .count();
                assert!(active >= 2, "vertex {point:?} of {r:?}");
            }
        }
    }

    #[test]
    fn slice_polygon_is_convex_and_in_cube() {
        let dim = d(4);
        for r in enumerate_rectangles(dim).take(40) {
            let poly = slice_polygon(&affine_frame(dim, r));
            let m = poly.param_vertices.len();
            for i in 0..m {
                let c = cross(
                    &poly.param_vertices[i],
                    &poly.param_vertices[(i + 1) % m],
                    &poly.param_vertices[(i + 2) % m],
                );
                assert!(c.is_positive(), "non-convex corner in slice of {r:?}");
            }
            for point in &poly.ambient_vertices {
                for c in point {
                    assert!(!c.is_negative() && *c <= Rational::one());
                }
            }
        }
    }

    #[test]
    fn rationals_stay_normalized() {
        // num-rational keeps gcd-reduced, positive-denominator form; pin the
        // contract the module relies on.
        let a = rational(6, -4);
        assert_eq!(a, rational(-3, 2));
        assert!(a.denom().is_positive());
        assert_eq!(a.numer().gcd(a.denom()), BigInt::one());
        let b = rational(1, 3) + rational(1, 6);
        assert_eq!(b, rational(1, 2));
    }
}
