//! Bit-level model of the n-cube: vertices, chords, and faces.
//!
//! Coordinate convention: coordinate j (1-based) lives in bit j−1, so the
//! textual form `x1 x2 … xn` prints bit 0 first. A face is an anchor vertex
//! plus a mask of free coordinates, with the fixed coordinates carried by the
//! anchor and the free ones zeroed; the empty face is its own variant rather
//! than an (anchor, free) encoding.

use std::cmp::Ordering;
use thiserror::Error;

/// Object-level cap: a vertex mask must fit one machine word with headroom.
/// Closed-form counting (module [`crate::counts`]) has no such cap.
pub const MAX_DIM: u32 = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubeError {
    #[error("ambient dimension must lie in 2..={MAX_DIM}, got {0}")]
    DimOutOfRange(u32),
    #[error("mask {mask:#b} does not fit in dimension {n}")]
    MaskOutOfRange { mask: u64, n: u32 },
    #[error("expected {expected} characters, got {got}")]
    TextLength { expected: u32, got: usize },
    #[error("unexpected character {ch:?} at position {pos}")]
    TextChar { ch: char, pos: usize },
    #[error("chord endpoints must be distinct")]
    DegenerateChord,
    #[error("face dimension {k} out of range for n = {n}")]
    FaceDimOutOfRange { k: u32, n: u32 },
    #[error("face anchor {anchor:#b} overlaps free mask {free:#b}")]
    AnchorOverlapsFree { anchor: u64, free: u64 },
}

/// Ambient dimension of the cube, validated to 2..=[`MAX_DIM`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubeDim {
    n: u32,
}

impl CubeDim {
    pub fn new(n: u32) -> Result<Self, CubeError> {
        if (2..=MAX_DIM).contains(&n) {
            Ok(CubeDim { n })
        } else {
            Err(CubeError::DimOutOfRange(n))
        }
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn full_mask(self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn vertex_count(self) -> u64 {
        1u64 << self.n
    }

    pub fn vertex(self, bits: u64) -> Result<Vertex, CubeError> {
        self.check_mask(bits).map(Vertex)
    }

    pub fn check_mask(self, mask: u64) -> Result<u64, CubeError> {
        if mask <= self.full_mask() {
            Ok(mask)
        } else {
            Err(CubeError::MaskOutOfRange { mask, n: self.n })
        }
    }

    /// All vertices in ascending mask order.
    pub fn vertices(self) -> impl Iterator<Item = Vertex> {
        (0..self.vertex_count()).map(Vertex)
    }
}

/// A point of B^n stored as an n-bit mask; coordinate x_j is bit j−1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub(crate) u64);

impl Vertex {
    pub fn bits(self) -> u64 {
        self.0
    }

    /// Value of coordinate x_j (1-based).
    pub fn coord(self, j: u32) -> u8 {
        ((self.0 >> (j - 1)) & 1) as u8
    }

    /// Canonical textual form `x1 x2 … xn`.
    pub fn text(self, dim: CubeDim) -> String {
        (1..=dim.n()).map(|j| char::from(b'0' + self.coord(j))).collect()
    }

    pub fn parse(dim: CubeDim, s: &str) -> Result<Vertex, CubeError> {
        parse_mask(dim, s).map(Vertex)
    }
}

/// Parses an n-character 0/1 string (x_1 first) into a raw mask.
pub fn parse_mask(dim: CubeDim, s: &str) -> Result<u64, CubeError> {
    let chars: Vec<char> = s.chars().collect();
    if chars.len() != dim.n() as usize {
        return Err(CubeError::TextLength { expected: dim.n(), got: chars.len() });
    }
    let mut bits = 0u64;
    for (pos, ch) in chars.iter().enumerate() {
        match ch {
            '0' => {}
            '1' => bits |= 1 << pos,
            _ => return Err(CubeError::TextChar { ch: *ch, pos }),
        }
    }
    Ok(bits)
}

/// Formats a raw mask in the same n-character 0/1 form as a vertex.
pub fn mask_text(dim: CubeDim, mask: u64) -> String {
    Vertex(mask).text(dim)
}

pub fn hamming_distance(u: Vertex, v: Vertex) -> u32 {
    (u.0 ^ v.0).count_ones()
}

/// An unordered pair of distinct vertices; the smaller endpoint is stored
/// first. A chord of Hamming length i is an i-chord; length 1 is an edge of
/// Q_n and length n a diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    lo: Vertex,
    hi: Vertex,
}

impl Chord {
    pub fn new(a: Vertex, b: Vertex) -> Result<Chord, CubeError> {
        if a == b {
            return Err(CubeError::DegenerateChord);
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        Ok(Chord { lo, hi })
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    /// Hamming length.
    pub fn length(self) -> u32 {
        hamming_distance(self.lo, self.hi)
    }

    /// XOR mask of the endpoints.
    pub fn mask(self) -> u64 {
        self.lo.0 ^ self.hi.0
    }

    pub fn contains(self, v: Vertex) -> bool {
        v == self.lo || v == self.hi
    }

    /// Smallest face containing the chord: the i-face whose center is the
    /// chord's midpoint.
    pub fn hull(self) -> Face {
        let free = self.mask();
        Face::Cell { anchor: Vertex(self.lo.0 & !free), free }
    }

    pub fn text(self, dim: CubeDim) -> String {
        format!("{}-{}", self.lo.text(dim), self.hi.text(dim))
    }
}

/// All chords in ascending (lo, hi) order; C(2^n, 2) of them.
pub fn enumerate_chords(dim: CubeDim) -> Vec<Chord> {
    let count = dim.vertex_count();
    let mut out = Vec::with_capacity((count * (count - 1) / 2) as usize);
    for lo in 0..count {
        for hi in (lo + 1)..count {
            out.push(Chord { lo: Vertex(lo), hi: Vertex(hi) });
        }
    }
    out
}

/// A subcube of the n-cube, or the distinguished empty face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Face {
    Empty,
    Cell { anchor: Vertex, free: u64 },
}

impl Face {
    pub fn cell(dim: CubeDim, anchor: Vertex, free: u64) -> Result<Face, CubeError> {
        dim.check_mask(anchor.0)?;
        dim.check_mask(free)?;
        if anchor.0 & free != 0 {
            return Err(CubeError::AnchorOverlapsFree { anchor: anchor.0, free });
        }
        Ok(Face::Cell { anchor, free })
    }

    /// The 0-face at a vertex.
    pub fn point(v: Vertex) -> Face {
        Face::Cell { anchor: v, free: 0 }
    }

    /// The whole cube as its own n-face.
    pub fn full(dim: CubeDim) -> Face {
        Face::Cell { anchor: Vertex(0), free: dim.full_mask() }
    }

    /// Number of free coordinates; `None` for the empty face.
    pub fn dim(&self) -> Option<u32> {
        match self {
            Face::Empty => None,
            Face::Cell { free, .. } => Some(free.count_ones()),
        }
    }

    pub fn anchor_free(&self) -> Option<(Vertex, u64)> {
        match self {
            Face::Empty => None,
            Face::Cell { anchor, free } => Some((*anchor, *free)),
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        match self {
            Face::Empty => false,
            Face::Cell { anchor, free } => v.0 & !free == anchor.0,
        }
    }

    /// Face inclusion: `other` ⊆ `self`. The empty face is below everything.
    pub fn includes(&self, other: &Face) -> bool {
        match (self, other) {
            (_, Face::Empty) => true,
            (Face::Empty, Face::Cell { .. }) => false,
            (Face::Cell { anchor: a, free: f }, Face::Cell { anchor: b, free: g }) => {
                g & !f == 0 && (a.0 ^ b.0) & !f == 0
            }
        }
    }

    /// Vertex set in ascending order (2^dim entries; empty for `Empty`).
    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            Face::Empty => Vec::new(),
            Face::Cell { anchor, free } => {
                submasks_ascending(*free).map(|s| Vertex(anchor.0 | s)).collect()
            }
        }
    }

    /// Textual form over {0,1,*} with `*` on free coordinates; "empty" for
    /// the empty face.
    pub fn text(&self, dim: CubeDim) -> String {
        match self {
            Face::Empty => "empty".to_string(),
            Face::Cell { anchor, free } => (1..=dim.n())
                .map(|j| {
                    if (free >> (j - 1)) & 1 == 1 {
                        '*'
                    } else {
                        char::from(b'0' + anchor.coord(j))
                    }
                })
                .collect(),
        }
    }

    pub fn parse(dim: CubeDim, s: &str) -> Result<Face, CubeError> {
        if s == "empty" {
            return Ok(Face::Empty);
        }
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != dim.n() as usize {
            return Err(CubeError::TextLength { expected: dim.n(), got: chars.len() });
        }
        let mut anchor = 0u64;
        let mut free = 0u64;
        for (pos, ch) in chars.iter().enumerate() {
            match ch {
                '0' => {}
                '1' => anchor |= 1 << pos,
                '*' => free |= 1 << pos,
                _ => return Err(CubeError::TextChar { ch: *ch, pos }),
            }
        }
        Ok(Face::Cell { anchor: Vertex(anchor), free })
    }

    /// Canonical ordering key: the empty face first, then by (dimension,
    /// free mask, anchor).
    fn sort_key(&self) -> (u32, u64, u64) {
        match self {
            Face::Empty => (0, 0, 0),
            Face::Cell { anchor, free } => (free.count_ones() + 1, *free, anchor.0),
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

/// Smallest face containing the given vertices; `Empty` for no vertices.
pub fn cube_hull<I: IntoIterator<Item = Vertex>>(vertices: I) -> Face {
    let mut iter = vertices.into_iter();
    let Some(first) = iter.next() else {
        return Face::Empty;
    };
    let mut free = 0u64;
    for v in iter {
        free |= v.0 ^ first.0;
    }
    Face::Cell { anchor: Vertex(first.0 & !free), free }
}

/// The face whose vertex set is the intersection; `Empty` on conflicting
/// fixed coordinates. Fixed coordinates of the result are the union of the
/// two faces' fixed constraints.
pub fn face_meet(a: Face, b: Face) -> Face {
    let (Face::Cell { anchor: aa, free: fa }, Face::Cell { anchor: ab, free: fb }) = (a, b) else {
        return Face::Empty;
    };
    if (aa.0 ^ ab.0) & !fa & !fb != 0 {
        return Face::Empty;
    }
    let free = fa & fb;
    debug_assert_eq!((aa.0 | ab.0) & free, 0);
    Face::Cell { anchor: Vertex(aa.0 | ab.0), free }
}

/// Cube hull of the union of the two vertex sets; `Empty` is the identity.
pub fn face_join(a: Face, b: Face) -> Face {
    match (a, b) {
        (Face::Empty, x) | (x, Face::Empty) => x,
        (Face::Cell { anchor: aa, free: fa }, Face::Cell { anchor: ab, free: fb }) => {
            let free = fa | fb | (aa.0 ^ ab.0);
            Face::Cell { anchor: Vertex(aa.0 & !free), free }
        }
    }
}

/// All k-faces in lexicographic (free, anchor) order; C(n,k)·2^{n−k} of them.
pub fn enumerate_faces(dim: CubeDim, k: u32) -> Result<Vec<Face>, CubeError> {
    let n = dim.n();
    if k > n {
        return Err(CubeError::FaceDimOutOfRange { k, n });
    }
    let mut out = Vec::new();
    for free in k_subsets_ascending(n, k) {
        let fixed = dim.full_mask() & !free;
        for anchor in submasks_ascending(fixed) {
            out.push(Face::Cell { anchor: Vertex(anchor), free });
        }
    }
    Ok(out)
}

/// All 3^n faces of every dimension, 0-faces first, each layer in its
/// canonical order. The empty face is not included.
pub fn enumerate_all_faces(dim: CubeDim) -> Vec<Face> {
    (0..=dim.n()).flat_map(|k| enumerate_faces(dim, k).expect("k <= n")).collect()
}

/// Submasks of `m` in ascending numeric order, including 0 and `m` itself.
pub(crate) fn submasks_ascending(m: u64) -> SubmaskIter {
    SubmaskIter { mask: m, next: Some(0) }
}

pub(crate) struct SubmaskIter {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for SubmaskIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == self.mask { None } else { Some((cur.wrapping_sub(self.mask)) & self.mask) };
        Some(cur)
    }
}

/// Masks ≤ 2^n − 1 with exactly k bits set, ascending (Gosper's hack).
pub(crate) fn k_subsets_ascending(n: u32, k: u32) -> KSubsetIter {
    let next = if k > n { None } else if k == 0 { Some(0) } else { Some((1u64 << k) - 1) };
    KSubsetIter { limit: 1u64 << n, next }
}

pub(crate) struct KSubsetIter {
    limit: u64,
    next: Option<u64>,
}

impl Iterator for KSubsetIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let continued = ((cur ^ ripple) / low) >> 2;
            let candidate = ripple | continued;
            if candidate < self.limit {
                Some(candidate)
            } else {
                None
            }
        };
        Some(cur)
    }
}
