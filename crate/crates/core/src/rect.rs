//! Cubical rectangles: canonical form, validation, enumeration, anatomy, and
//! incidence with chords.
//!
//! A quadruple ⟨x, y; z, w⟩ of cube vertices is a cubical rectangle exactly
//! when w − z = y − x as signed vectors. The two side classes then have
//! disjoint coordinate supports, so the canonical form is (base, maskA, maskB)
//! with base the least of the four vertices and maskA < maskB numerically.

use crate::cube::{submasks_ascending, Chord, CubeDim, CubeError, Face, Vertex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RectError {
    #[error("the four vertices are not pairwise distinct")]
    DegenerateQuad,
    #[error("w - z = y - x fails; the quad is not a translated chord pair")]
    NotATranslation,
    #[error("side masks must be nonempty")]
    EmptySideMask,
    #[error("side masks {mask_a:#b} and {mask_b:#b} overlap")]
    OverlappingSideMasks { mask_a: u64, mask_b: u64 },
    #[error(transparent)]
    Cube(#[from] CubeError),
}

/// A cubical rectangle in canonical form: `base` is the least of the four
/// vertices and the side masks are disjoint, nonempty, and numerically
/// sorted. The vertex set is {base, base⊕A, base⊕B, base⊕A⊕B}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rect {
    base: Vertex,
    mask_a: u64,
    mask_b: u64,
}

impl Rect {
    /// Canonicalizes a rectangle given any corner and its two side masks.
    pub fn from_corner(dim: CubeDim, corner: Vertex, m1: u64, m2: u64) -> Result<Rect, RectError> {
        dim.check_mask(corner.bits())?;
        dim.check_mask(m1)?;
        dim.check_mask(m2)?;
        if m1 == 0 || m2 == 0 {
            return Err(RectError::EmptySideMask);
        }
        if m1 & m2 != 0 {
            return Err(RectError::OverlappingSideMasks { mask_a: m1, mask_b: m2 });
        }
        let c = corner.bits();
        let base = [c, c ^ m1, c ^ m2, c ^ m1 ^ m2].into_iter().min().expect("four corners");
        let (mask_a, mask_b) = if m1 < m2 { (m1, m2) } else { (m2, m1) };
        Ok(Rect { base: Vertex(base), mask_a, mask_b })
    }

    pub fn base(self) -> Vertex {
        self.base
    }

    pub fn mask_a(self) -> u64 {
        self.mask_a
    }

    pub fn mask_b(self) -> u64 {
        self.mask_b
    }

    /// Union of the side masks: the coordinates on which the rectangle moves.
    pub fn span(self) -> u64 {
        self.mask_a | self.mask_b
    }

    /// The four vertices as (base, base⊕A, base⊕B, base⊕A⊕B).
    pub fn vertices(self) -> [Vertex; 4] {
        let b = self.base.bits();
        [
            self.base,
            Vertex(b ^ self.mask_a),
            Vertex(b ^ self.mask_b),
            Vertex(b ^ self.mask_a ^ self.mask_b),
        ]
    }

    /// The four vertices in ascending order.
    pub fn sorted_vertices(self) -> [Vertex; 4] {
        let mut vs = self.vertices();
        vs.sort();
        vs
    }

    pub fn contains(self, v: Vertex) -> bool {
        let delta = v.bits() ^ self.base.bits();
        delta == 0 || delta == self.mask_a || delta == self.mask_b || delta == self.span()
    }

    /// Smallest face containing the rectangle.
    pub fn hull(self) -> Face {
        let free = self.span();
        Face::Cell { anchor: Vertex(self.base.bits() & !free), free }
    }

    /// Label form `base+maskA+maskB`, each in the x1…xn string convention.
    pub fn label(self, dim: CubeDim) -> String {
        format!(
            "{}+{}+{}",
            self.base.text(dim),
            crate::cube::mask_text(dim, self.mask_a),
            crate::cube::mask_text(dim, self.mask_b)
        )
    }
}

/// Accepts ⟨x, y; z, w⟩ iff the four points are distinct and the signed
/// translation identity w − z = y − x holds coordinatewise. XOR-mask equality
/// alone is not enough: it admits reflections, so the positive and negative
/// parts are compared separately.
pub fn validate_rectangle(
    dim: CubeDim,
    x: Vertex,
    y: Vertex,
    z: Vertex,
    w: Vertex,
) -> Result<Rect, RectError> {
    for v in [x, y, z, w] {
        dim.check_mask(v.bits())?;
    }
    let quad = [x, y, z, w];
    for i in 0..4 {
        for j in i + 1..4 {
            if quad[i] == quad[j] {
                return Err(RectError::DegenerateQuad);
            }
        }
    }
    let (xb, yb, zb, wb) = (x.bits(), y.bits(), z.bits(), w.bits());
    if (yb & !xb) != (wb & !zb) || (xb & !yb) != (zb & !wb) {
        return Err(RectError::NotATranslation);
    }
    Rect::from_corner(dim, x, xb ^ yb, xb ^ zb)
}

/// Unordered pairs of disjoint nonempty masks (a, b) with a < b, sorted
/// lexicographically; (3^n − 2^{n+1} + 1)/2 of them.
pub(crate) fn disjoint_mask_pairs(dim: CubeDim) -> Vec<(u64, u64)> {
    let full = dim.full_mask();
    let mut pairs = Vec::new();
    for a in 1..=full {
        for b in submasks_ascending(full & !a) {
            if b > a {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

/// Streams every cubical rectangle exactly once in lexicographic
/// (base, maskA, maskB) order. A (base, pair) triple is kept iff base is the
/// least of its four vertices, i.e. base has 0 at the top bit of each mask.
/// Exhaustive enumeration is practical for n ≤ 10 or so.
pub fn enumerate_rectangles(dim: CubeDim) -> Rectangles {
    let pairs: Vec<(u64, u64, u64)> = disjoint_mask_pairs(dim)
        .into_iter()
        .map(|(a, b)| {
            let top = |m: u64| 1u64 << (63 - m.leading_zeros());
            (a, b, top(a) | top(b))
        })
        .collect();
    Rectangles { dim, pairs, base: 0, idx: 0 }
}

pub struct Rectangles {
    dim: CubeDim,
    pairs: Vec<(u64, u64, u64)>,
    base: u64,
    idx: usize,
}

impl Iterator for Rectangles {
    type Item = Rect;

    fn next(&mut self) -> Option<Rect> {
        loop {
            if self.base >= self.dim.vertex_count() {
                return None;
            }
            if self.idx >= self.pairs.len() {
                self.base += 1;
                self.idx = 0;
                continue;
            }
            let (a, b, tops) = self.pairs[self.idx];
            self.idx += 1;
            if self.base & tops == 0 {
                return Some(Rect { base: Vertex(self.base), mask_a: a, mask_b: b });
            }
        }
    }
}

/// All rectangles whose vertex set contains `v`, sorted canonically. Each
/// disjoint mask pair yields exactly one rectangle through a given vertex,
/// so the count is (3^n − 2^{n+1} + 1)/2 independent of `v`.
pub fn rectangles_through_vertex(dim: CubeDim, v: Vertex) -> Vec<Rect> {
    let mut out: Vec<Rect> = disjoint_mask_pairs(dim)
        .into_iter()
        .map(|(a, b)| Rect::from_corner(dim, v, a, b).expect("masks disjoint and in range"))
        .collect();
    out.sort();
    out
}

/// Sides, diagonals, type pair, diagonal dimension, and centrality of a
/// rectangle. Each rectangle includes exactly 6 chords: 4 sides (two per
/// side class) and 2 diagonals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectAnatomy {
    /// The mask-A pair first, then the mask-B pair.
    pub sides: [Chord; 4],
    pub diagonals: [Chord; 2],
    /// Hamming lengths of the two side classes, in (maskA, maskB) order. One
    /// rectangle carries both type labels i and j simultaneously.
    pub type_pair: (u32, u32),
    /// dim(cub T): the diagonal dimension.
    pub dimension: u32,
    /// Central rectangles pass through the cube's center; equivalently the
    /// span covers every coordinate.
    pub central: bool,
}

pub fn rect_anatomy(dim: CubeDim, r: Rect) -> RectAnatomy {
    let [v00, v10, v01, v11] = r.vertices();
    let chord = |a: Vertex, b: Vertex| Chord::new(a, b).expect("rectangle vertices distinct");
    RectAnatomy {
        sides: [chord(v00, v10), chord(v01, v11), chord(v00, v01), chord(v10, v11)],
        diagonals: [chord(v00, v11), chord(v10, v01)],
        type_pair: (r.mask_a().count_ones(), r.mask_b().count_ones()),
        dimension: r.span().count_ones(),
        central: r.span() == dim.full_mask(),
    }
}

/// Rectangles containing a chord, split by how the chord sits in them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordInclusions {
    /// The chord is a diagonal: the 2^{i−1} − 1 central rectangles of cub(e)
    /// pairing e with another diagonal of that face.
    pub d_included: Vec<Rect>,
    /// The chord is a side: the 2^{n−i} − 1 translates of e by a mask
    /// disjoint from its own.
    pub s_included: Vec<Rect>,
}

pub fn chord_inclusions(dim: CubeDim, e: Chord) -> ChordInclusions {
    let m = e.mask();
    let x = e.lo();
    let mut d_included = Vec::new();
    for s in submasks_ascending(m) {
        if s != 0 && s != m && s < (m ^ s) {
            d_included.push(Rect::from_corner(dim, x, s, m ^ s).expect("split masks disjoint"));
        }
    }
    let mut s_included = Vec::new();
    for t in submasks_ascending(dim.full_mask() & !m) {
        if t != 0 {
            s_included.push(Rect::from_corner(dim, x, m, t).expect("translation mask disjoint"));
        }
    }
    d_included.sort();
    s_included.sort();
    ChordInclusions { d_included, s_included }
}
