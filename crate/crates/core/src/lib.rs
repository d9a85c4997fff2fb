//! Cubical rectangles of the n-cube and the lattices they generate.
//!
//! A *cubical rectangle* is a set of four vertices x, y, z, w of the Boolean
//! cube B^n with w − z = y − x; the four points always span a planar rectangle
//! whose diagonals are xw and yz. This crate enumerates and counts them,
//! verifies their incidence structure with vertices and chords, slices the
//! solid cube with their affine hulls in exact rational arithmetic, and builds
//! the rectangular lattice R_n (vertices ∪ chords ∪ rectangles ordered by
//! inclusion, with 0 and 1 adjoined) alongside the cubical lattice C_n (the
//! face lattice of the n-cube). A quotient construction identifies elements
//! with the same cube hull and exhibits R_n/∼ ≅ C_n.
//!
//! Modules:
//! - [`cube`] — vertices, chords, and faces of the n-cube as bit masks.
//! - [`rect`] — rectangle validation, canonical enumeration, anatomy, and
//!   chord incidence.
//! - [`counts`] — every closed-form count in arbitrary precision.
//! - [`geometry`] — exact rational slices of the cube by a rectangle's
//!   affine hull.
//! - [`lattice`] — a generic finite-lattice kernel with property checks and
//!   N5/M3 witnesses.
//! - [`vcr`] — the rectangular lattice R_n, the cubical lattice C_n, and the
//!   quotient isomorphism between them.
//! - [`verify`] — the theorem-by-theorem verification harness behind the CLI.

#![forbid(unsafe_code)]

pub mod counts;
pub mod cube;
pub mod geometry;
pub mod lattice;
pub mod rect;
pub mod vcr;
pub mod verify;

pub use cube::{
    cube_hull, enumerate_chords, enumerate_faces, face_join, face_meet, hamming_distance, Chord,
    CubeDim, CubeError, Face, Vertex, MAX_DIM,
};
pub use rect::{
    chord_inclusions, enumerate_rectangles, rect_anatomy, rectangles_through_vertex,
    validate_rectangle, ChordInclusions, Rect, RectAnatomy, RectError,
};
