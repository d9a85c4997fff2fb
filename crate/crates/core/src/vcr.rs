//! The VCR poset and rectangular lattice R_n, the cubical lattice C_n,
//! constructive meets and joins, chord intersection witnesses, the common
//! pentagon of R_n and C_n, and the quotient isomorphism R_n/∼ ≅ C_n.
//!
//! Elements of R_n are vertex sets: all of B^n, all 2-element subsets
//! (chords), all rectangle vertex sets, plus formal Bottom and Top. Top stays
//! a distinct tagged element even at n = 2, where its vertex set collides
//! with the unique rectangle's.

use crate::cube::{
    enumerate_all_faces, enumerate_chords, Chord, CubeDim, Face, Vertex,
};
use crate::lattice::{FiniteLattice, LatticeError, SublatticeWitness, WitnessKind};
use crate::rect::{enumerate_rectangles, rect_anatomy, Rect, RectError};
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VcrError {
    #[error("chord intersection witnesses need n >= 3; at n = 2 two distinct rectangles through a chord do not exist")]
    WitnessNeedsDimThree,
    #[error("the opposite-square pentagon needs n >= 3; use the K4 structure at n = 2")]
    PentagonNeedsDimThree,
    #[error("expected a 2-face, got dimension {0:?}")]
    NotATwoFace(Option<u32>),
    #[error("edge direction {dir:#b} is not a single free coordinate of the face")]
    BadEdgeDirection { dir: u64 },
    #[error("element missing from the lattice index")]
    MissingElement,
    #[error("pentagon failed verification in {0}")]
    PentagonInvalid(&'static str),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Rect(#[from] RectError),
}

/// One element of the VCR poset with 0 and 1 adjoined. The derived order is
/// Bottom < vertices < chords < rectangles < Top with payload order inside
/// each layer, which is exactly the canonical element order of R_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VcrElement {
    Bottom,
    Vertex(Vertex),
    Chord(Chord),
    Rect(Rect),
    Top,
}

impl VcrElement {
    /// Vertex set for everything except Top (whose set is all of B^n).
    pub fn small_vertex_list(&self) -> Option<Vec<Vertex>> {
        match self {
            VcrElement::Bottom => Some(vec![]),
            VcrElement::Vertex(v) => Some(vec![*v]),
            VcrElement::Chord(c) => Some(vec![c.lo(), c.hi()]),
            VcrElement::Rect(r) => Some(r.sorted_vertices().to_vec()),
            VcrElement::Top => None,
        }
    }

    /// cub S: the key of the quotient construction.
    pub fn hull(&self, dim: CubeDim) -> Face {
        match self {
            VcrElement::Bottom => Face::Empty,
            VcrElement::Vertex(v) => Face::point(*v),
            VcrElement::Chord(c) => c.hull(),
            VcrElement::Rect(r) => r.hull(),
            VcrElement::Top => Face::full(dim),
        }
    }

    /// Rank in the graded lattice: Bottom 0, vertices 1, chords 2,
    /// rectangles 3, Top 4.
    pub fn rank(&self) -> u32 {
        match self {
            VcrElement::Bottom => 0,
            VcrElement::Vertex(_) => 1,
            VcrElement::Chord(_) => 2,
            VcrElement::Rect(_) => 3,
            VcrElement::Top => 4,
        }
    }

    pub fn label(&self, dim: CubeDim) -> String {
        match self {
            VcrElement::Bottom => "bot".to_string(),
            VcrElement::Vertex(v) => v.text(dim),
            VcrElement::Chord(c) => c.text(dim),
            VcrElement::Rect(r) => r.label(dim),
            VcrElement::Top => "top".to_string(),
        }
    }
}

/// R_n together with its element table. Index layout: 0 = Bottom, then all
/// vertices, all chords, all rectangles, Top last.
#[derive(Debug, Clone)]
pub struct VcrLattice {
    pub dim: CubeDim,
    pub elements: Vec<VcrElement>,
    pub lattice: FiniteLattice,
    index: HashMap<VcrElement, usize>,
    pub vertex_count: usize,
    pub chord_count: usize,
    pub rect_count: usize,
}

impl VcrLattice {
    pub fn index_of(&self, e: &VcrElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn element(&self, i: usize) -> &VcrElement {
        &self.elements[i]
    }

    /// Poset size without the adjoined 0 and 1.
    pub fn poset_size(&self) -> usize {
        self.lattice.len() - 2
    }
}

/// Builds R_n: covers are Bottom–vertex, vertex–chord, chord–rectangle (all
/// containments between adjacent layers), rectangle–Top. The engine then
/// validates unique meets and joins — a failure would falsify the lattice
/// theorem — and every asserted cover is checked to be a true cover of the
/// closure order. Full construction is practical for n ≤ 5.
pub fn build_vcr(dim: CubeDim) -> Result<VcrLattice, LatticeError> {
    build_vcr_inner(dim, false)
}

/// Testing hook for the verification harness: drops the first
/// chord–rectangle cover, which leaves the chord's endpoints as two maximal
/// lower bounds of (chord, rectangle) and must surface as `NotALattice`.
pub fn build_vcr_corrupted(dim: CubeDim) -> Result<VcrLattice, LatticeError> {
    build_vcr_inner(dim, true)
}

fn build_vcr_inner(dim: CubeDim, corrupt_one_cover: bool) -> Result<VcrLattice, LatticeError> {
    let chords = enumerate_chords(dim);
    let rects: Vec<Rect> = enumerate_rectangles(dim).collect();

    let mut elements: Vec<VcrElement> = Vec::with_capacity(2 + (dim.vertex_count() as usize) + chords.len() + rects.len());
    elements.push(VcrElement::Bottom);
    elements.extend(dim.vertices().map(VcrElement::Vertex));
    elements.extend(chords.iter().copied().map(VcrElement::Chord));
    elements.extend(rects.iter().copied().map(VcrElement::Rect));
    elements.push(VcrElement::Top);

    let index: HashMap<VcrElement, usize> =
        elements.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let top_index = elements.len() - 1;
    let vertex_index = |v: Vertex| 1 + v.bits() as usize;

    let mut covers: Vec<(usize, usize)> = Vec::new();
    for v in dim.vertices() {
        covers.push((0, vertex_index(v)));
    }
    for c in &chords {
        let ci = index[&VcrElement::Chord(*c)];
        covers.push((vertex_index(c.lo()), ci));
        covers.push((vertex_index(c.hi()), ci));
    }
    let chord_rect_start = covers.len();
    for r in &rects {
        let ri = index[&VcrElement::Rect(*r)];
        let anatomy = rect_anatomy(dim, *r);
        for c in anatomy.sides.iter().chain(anatomy.diagonals.iter()) {
            covers.push((index[&VcrElement::Chord(*c)], ri));
        }
    }
    for r in &rects {
        covers.push((index[&VcrElement::Rect(*r)], top_index));
    }
    if corrupt_one_cover {
        covers.remove(chord_rect_start);
    }

    let labels: Vec<String> = elements.iter().map(|e| e.label(dim)).collect();
    let lattice = FiniteLattice::build_from_covers(labels, covers)?;
    if !corrupt_one_cover {
        for &(l, u) in lattice.covers() {
            assert!(lattice.is_cover(l, u), "asserted cover ({l}, {u}) is not a cover");
        }
    }
    Ok(VcrLattice {
        dim,
        vertex_count: dim.vertex_count() as usize,
        chord_count: chords.len(),
        rect_count: rects.len(),
        elements,
        lattice,
        index,
    })
}

/// Meet = vertex-set intersection, which is always representable: two
/// distinct non-disjoint elements share a vertex or a chord, never three
/// vertices.
pub fn vcr_meet(a: VcrElement, b: VcrElement) -> VcrElement {
    use VcrElement::{Bottom, Top};
    match (a, b) {
        (Top, x) | (x, Top) => x,
        (Bottom, _) | (_, Bottom) => Bottom,
        _ => {
            let va = a.small_vertex_list().expect("not Top");
            let vb = b.small_vertex_list().expect("not Top");
            let common: Vec<Vertex> = va.into_iter().filter(|v| vb.contains(v)).collect();
            match common.len() {
                0 => Bottom,
                1 => VcrElement::Vertex(common[0]),
                2 => VcrElement::Chord(Chord::new(common[0], common[1]).expect("distinct")),
                4 => a,
                _ => unreachable!("distinct rectangles share at most two vertices"),
            }
        }
    }
}

/// Join = smallest element of P ∪ {Top} containing the union. A 3-vertex
/// union completes to a rectangle iff exactly one corner has disjoint masks
/// to the other two; a 4-vertex union must itself be a rectangle's vertex
/// set; anything larger joins to Top.
pub fn vcr_join(dim: CubeDim, a: VcrElement, b: VcrElement) -> VcrElement {
    use VcrElement::{Bottom, Top};
    match (a, b) {
        (Top, _) | (_, Top) => Top,
        (Bottom, x) | (x, Bottom) => x,
        _ => {
            let mut union = a.small_vertex_list().expect("not Top");
            union.extend(b.small_vertex_list().expect("not Top"));
            union.sort();
            union.dedup();
            match union.len() {
                1 => VcrElement::Vertex(union[0]),
                2 => VcrElement::Chord(Chord::new(union[0], union[1]).expect("distinct")),
                3 => three_vertex_completion(dim, [union[0], union[1], union[2]])
                    .map_or(Top, VcrElement::Rect),
                4 => four_vertex_rect(dim, [union[0], union[1], union[2], union[3]])
                    .map_or(Top, VcrElement::Rect),
                _ => Top,
            }
        }
    }
}

/// The unique rectangle through three vertices, when it exists. At most one
/// corner admits a disjoint mask pair; the fourth vertex is then forced to
/// the XOR of the three.
fn three_vertex_completion(dim: CubeDim, [p, q, r]: [Vertex; 3]) -> Option<Rect> {
    let m_pq = p.bits() ^ q.bits();
    let m_pr = p.bits() ^ r.bits();
    let m_qr = q.bits() ^ r.bits();
    let mut corners = Vec::new();
    if m_pq & m_pr == 0 {
        corners.push((p, m_pq, m_pr));
    }
    if m_pq & m_qr == 0 {
        corners.push((q, m_pq, m_qr));
    }
    if m_pr & m_qr == 0 {
        corners.push((r, m_pr, m_qr));
    }
    debug_assert!(corners.len() <= 1, "three vertices admit at most one completion");
    let (corner, m1, m2) = corners.pop()?;
    Some(Rect::from_corner(dim, corner, m1, m2).expect("disjoint nonempty masks"))
}

/// The rectangle on exactly these four vertices, if they form one.
fn four_vertex_rect(dim: CubeDim, vs: [Vertex; 4]) -> Option<Rect> {
    if vs[0].bits() ^ vs[1].bits() ^ vs[2].bits() ^ vs[3].bits() != 0 {
        return None;
    }
    let b = vs[0];
    let m1 = b.bits() ^ vs[1].bits();
    let m2 = b.bits() ^ vs[2].bits();
    let m3 = b.bits() ^ vs[3].bits();
    for (x, y) in [(m1, m2), (m1, m3), (m2, m3)] {
        if x & y == 0 {
            return Some(Rect::from_corner(dim, b, x, y).expect("disjoint nonempty masks"));
        }
    }
    None
}

/// Two distinct rectangles whose vertex-set intersection is exactly the
/// chord's endpoints — the constructive step behind the smallest-lattice
/// claim. Masks not covering everything get two translated copies; a
/// diagonal gets two single-bit splits; the n−1 case mixes one translation
/// with the chord's d-partner in cub(e).
pub fn chord_intersection_witness(dim: CubeDim, e: Chord) -> Result<(Rect, Rect), VcrError> {
    if dim.n() < 3 {
        return Err(VcrError::WitnessNeedsDimThree);
    }
    let m = e.mask();
    let comp = dim.full_mask() & !m;
    let x = e.lo();
    let lowest = |mask: u64| mask & mask.wrapping_neg();
    let (r1, r2) = if comp.count_ones() >= 2 {
        let t1 = lowest(comp);
        let t2 = lowest(comp ^ t1);
        (Rect::from_corner(dim, x, m, t1)?, Rect::from_corner(dim, x, m, t2)?)
    } else if comp == 0 {
        let b1 = lowest(m);
        let b2 = lowest(m ^ b1);
        (Rect::from_corner(dim, x, b1, m ^ b1)?, Rect::from_corner(dim, x, b2, m ^ b2)?)
    } else {
        let b = lowest(m);
        (Rect::from_corner(dim, x, m, comp)?, Rect::from_corner(dim, x, b, m ^ b)?)
    };
    let pair = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
    debug_assert_eq!(
        intersect_rects(pair.0, pair.1),
        vec![e.lo(), e.hi()],
        "witness intersection must be the chord"
    );
    Ok(pair)
}

fn intersect_rects(a: Rect, b: Rect) -> Vec<Vertex> {
    a.sorted_vertices().into_iter().filter(|v| b.contains(*v)).collect()
}

/// C_n and its face table. Index layout: 0 = empty face, then all faces by
/// ascending dimension in canonical order; |C_n| = 3^n + 1.
#[derive(Debug, Clone)]
pub struct CubicalLattice {
    pub dim: CubeDim,
    pub faces: Vec<Face>,
    pub lattice: FiniteLattice,
    index: HashMap<Face, usize>,
}

impl CubicalLattice {
    pub fn index_of(&self, f: &Face) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }
}

/// Face lattice of the n-cube, built from facet covers and validated by the
/// engine. Practical for n ≤ 6 or so.
pub fn build_cubical_lattice(dim: CubeDim) -> Result<CubicalLattice, LatticeError> {
    let mut faces = vec![Face::Empty];
    faces.extend(enumerate_all_faces(dim));
    let index: HashMap<Face, usize> = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();

    let mut covers: Vec<(usize, usize)> = Vec::new();
    for (fi, f) in faces.iter().enumerate() {
        let Some((anchor, free)) = f.anchor_free() else {
            continue;
        };
        if free == 0 {
            covers.push((0, fi));
            continue;
        }
        let mut rest = free;
        while rest != 0 {
            let c = rest & rest.wrapping_neg();
            rest ^= c;
            for child_anchor in [anchor.bits(), anchor.bits() | c] {
                let child = Face::Cell { anchor: Vertex(child_anchor), free: free ^ c };
                covers.push((index[&child], fi));
            }
        }
    }
    let labels: Vec<String> = faces.iter().map(|f| f.text(dim)).collect();
    let lattice = FiniteLattice::build_from_covers(labels, covers)?;
    Ok(CubicalLattice { dim, faces, lattice, index })
}

/// The common pentagon of R_n and C_n built from a 2-face: {0, 1, e, ef,
/// e′f′} with e an edge of the face along `edge_dir`, ef the face's own
/// square, and e′f′ the square reflected through the cube center along the
/// face's fixed coordinates.
#[derive(Debug, Clone)]
pub struct PentagonPair {
    pub chord: Chord,
    pub square: Rect,
    pub opposite: Rect,
    pub opposite_face: Face,
    pub rect_witness: SublatticeWitness,
    pub cubical_witness: SublatticeWitness,
}

pub fn n5_witness(
    rn: &VcrLattice,
    cn: &CubicalLattice,
    two_face: Face,
    edge_dir: u64,
) -> Result<PentagonPair, VcrError> {
    let dim = rn.dim;
    if dim.n() < 3 {
        return Err(VcrError::PentagonNeedsDimThree);
    }
    let Some((anchor, free)) = two_face.anchor_free() else {
        return Err(VcrError::NotATwoFace(None));
    };
    if free.count_ones() != 2 {
        return Err(VcrError::NotATwoFace(two_face.dim()));
    }
    if edge_dir == 0 || !edge_dir.is_power_of_two() || edge_dir & free == 0 {
        return Err(VcrError::BadEdgeDirection { dir: edge_dir });
    }
    let other = free ^ edge_dir;
    let chord = Chord::new(anchor, Vertex(anchor.bits() ^ edge_dir)).expect("edge endpoints");
    let square = Rect::from_corner(dim, anchor, edge_dir, other)?;
    let fixed = dim.full_mask() & !free;
    let opp_anchor = Vertex(anchor.bits() ^ fixed);
    let opposite = Rect::from_corner(dim, opp_anchor, edge_dir, other)?;
    let opposite_face = Face::Cell { anchor: opp_anchor, free };

    let want = |e: VcrElement| rn.index_of(&e).ok_or(VcrError::MissingElement);
    let rect_witness = SublatticeWitness {
        kind: WitnessKind::N5,
        zero: rn.lattice.bottom(),
        a: want(VcrElement::Chord(chord))?,
        c: want(VcrElement::Rect(square))?,
        b: want(VcrElement::Rect(opposite))?,
        one: rn.lattice.top(),
    };
    if !rn.lattice.verify_witness(&rect_witness) {
        return Err(VcrError::PentagonInvalid("R_n"));
    }

    let want_face = |f: Face| cn.index_of(&f).ok_or(VcrError::MissingElement);
    let cubical_witness = SublatticeWitness {
        kind: WitnessKind::N5,
        zero: want_face(Face::Empty)?,
        a: want_face(chord.hull())?,
        c: want_face(two_face)?,
        b: want_face(opposite_face)?,
        one: want_face(Face::full(dim))?,
    };
    if !cn.lattice.verify_witness(&cubical_witness) {
        return Err(VcrError::PentagonInvalid("C_n"));
    }

    Ok(PentagonPair { chord, square, opposite, opposite_face, rect_witness, cubical_witness })
}

/// One ∼-class: every member has the same cube hull, which keys the class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientClass {
    pub face: Face,
    /// Indices into the R_n element table, ascending.
    pub members: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct QuotientResult {
    pub classes: Vec<QuotientClass>,
    pub lattice: FiniteLattice,
    pub iso_verified: bool,
    /// Human-readable reasons when the isomorphism check fails; empty on
    /// success. A nonempty list falsifies the quotient theorem.
    pub failures: Vec<String>,
}

/// Partitions R_n by cube hull, orders the classes by face inclusion, builds
/// the quotient lattice, and verifies φ([S]) = cub S is an order isomorphism
/// onto C_n in both directions together with the class meet/join laws
/// cub Y = cub S ∩ cub T and cub Z = cub(cub S ∪ cub T) and the class census
/// of every face.
pub fn quotient_and_iso(
    rn: &VcrLattice,
    cn: &CubicalLattice,
) -> Result<QuotientResult, LatticeError> {
    let dim = rn.dim;
    let mut groups: BTreeMap<Face, Vec<usize>> = BTreeMap::new();
    for (i, e) in rn.elements.iter().enumerate() {
        groups.entry(e.hull(dim)).or_default().push(i);
    }
    let classes: Vec<QuotientClass> =
        groups.into_iter().map(|(face, members)| QuotientClass { face, members }).collect();
    let class_index: HashMap<Face, usize> =
        classes.iter().enumerate().map(|(i, c)| (c.face, i)).collect();

    // covers mirror the facet relation on the keys
    let mut covers: Vec<(usize, usize)> = Vec::new();
    for (ci, class) in classes.iter().enumerate() {
        let Some((anchor, free)) = class.face.anchor_free() else {
            continue;
        };
        if free == 0 {
            covers.push((0, ci));
            continue;
        }
        let mut rest = free;
        while rest != 0 {
            let c = rest & rest.wrapping_neg();
            rest ^= c;
            for child_anchor in [anchor.bits(), anchor.bits() | c] {
                let child = Face::Cell { anchor: Vertex(child_anchor), free: free ^ c };
                covers.push((class_index[&child], ci));
            }
        }
    }
    let labels: Vec<String> = classes.iter().map(|c| c.face.text(dim)).collect();
    let lattice = FiniteLattice::build_from_covers(labels, covers)?;

    let mut failures: Vec<String> = Vec::new();
    let expected_count = 3usize.pow(dim.n()) + 1;
    if classes.len() != expected_count {
        failures.push(format!("expected {expected_count} classes, found {}", classes.len()));
    }
    if classes.len() != cn.lattice.len() {
        failures.push(format!(
            "class count {} differs from |C_n| = {}",
            classes.len(),
            cn.lattice.len()
        ));
    }
    // φ must be the identity on the shared canonical face order
    for (i, class) in classes.iter().enumerate() {
        if cn.faces.get(i) != Some(&class.face) {
            failures.push(format!("class {i} keyed by {:?} misaligns with C_n", class.face));
            break;
        }
    }

    if failures.is_empty() {
        let m = classes.len();
        // order agreement, three routes: quotient closure, direct face
        // inclusion, C_n closure
        'order: for i in 0..m {
            for j in 0..m {
                let q = lattice.leq(i, j);
                let direct = classes[j].face.includes(&classes[i].face);
                let c = cn.lattice.leq(i, j);
                if q != direct || q != c {
                    failures.push(format!(
                        "order mismatch on classes {i}, {j}: quotient {q}, face inclusion {direct}, C_n {c}"
                    ));
                    break 'order;
                }
            }
        }
        // meet/join laws from the quotient proof
        'laws: for i in 0..m {
            for j in 0..m {
                let meet_class = lattice.meet(i, j);
                let join_class = lattice.join(i, j);
                let face_meet = crate::cube::face_meet(classes[i].face, classes[j].face);
                let face_join = crate::cube::face_join(classes[i].face, classes[j].face);
                if classes[meet_class].face != face_meet || classes[join_class].face != face_join {
                    failures.push(format!("meet/join law fails on classes {i}, {j}"));
                    break 'laws;
                }
            }
        }
        // Remark 2 census per class
        for class in &classes {
            if let Some(problem) = census_mismatch(dim, rn, class) {
                failures.push(problem);
                break;
            }
        }
    }

    let iso_verified = failures.is_empty();
    Ok(QuotientResult { classes, lattice, iso_verified, failures })
}

/// Expected members of a class keyed by a k-face: its 2^{k−1} central chords
/// and C(2^{k−1}, 2) central rectangles for k ≥ 2, the lone vertex or chord
/// below that, Bottom for the empty face, plus Top in the dim-n class.
fn census_mismatch(dim: CubeDim, rn: &VcrLattice, class: &QuotientClass) -> Option<String> {
    let mut vertices = 0usize;
    let mut chords = 0usize;
    let mut rects = 0usize;
    let mut bottoms = 0usize;
    let mut tops = 0usize;
    for &i in &class.members {
        match rn.elements[i] {
            VcrElement::Bottom => bottoms += 1,
            VcrElement::Vertex(_) => vertices += 1,
            VcrElement::Chord(_) => chords += 1,
            VcrElement::Rect(_) => rects += 1,
            VcrElement::Top => tops += 1,
        }
    }
    let label = class.face.text(dim);
    let expect = |cond: bool, what: String| {
        if cond {
            None
        } else {
            Some(format!("class {label}: {what}"))
        }
    };
    match class.face.dim() {
        None => expect(
            class.members.len() == 1 && bottoms == 1,
            format!("expected exactly Bottom, found {} members", class.members.len()),
        ),
        Some(0) => expect(
            vertices == 1 && class.members.len() == 1,
            format!("expected one vertex, found {} members", class.members.len()),
        ),
        Some(1) => expect(
            chords == 1 && class.members.len() == 1,
            format!("expected one chord, found {} members", class.members.len()),
        ),
        Some(k) => {
            let half = 1u128 << (k - 1);
            let expected_chords = half as usize;
            let expected_rects = (half * (half - 1) / 2) as usize;
            let expected_tops = usize::from(k == dim.n());
            expect(
                chords == expected_chords
                    && rects == expected_rects
                    && tops == expected_tops
                    && vertices == 0
                    && bottoms == 0,
                format!(
                    "expected {expected_chords} chords + {expected_rects} rectangles + {expected_tops} top, found {chords}/{rects}/{tops}"
                ),
            )
        }
    }
}

/// The n = 2 reading of R_2 from the nonmodularity theorem: the vertex-edge
/// lattice of K_4 (the rectangle's vertex set coincides with Top, so the
/// paper treats the square abcd with all six chords as K_4). Returns the
/// lattice and its pentagon {0, a, ab, cd, 1}.
pub fn k4_vertex_edge_lattice() -> (FiniteLattice, SublatticeWitness) {
    let dim = CubeDim::new(2).expect("n = 2");
    let chords = enumerate_chords(dim);
    let mut labels = vec!["bot".to_string()];
    labels.extend(dim.vertices().map(|v| v.text(dim)));
    labels.extend(chords.iter().map(|c| c.text(dim)));
    labels.push("top".to_string());
    let top = labels.len() - 1;
    let vertex_index = |v: Vertex| 1 + v.bits() as usize;
    let mut covers: Vec<(usize, usize)> = Vec::new();
    for v in dim.vertices() {
        covers.push((0, vertex_index(v)));
    }
    for (k, c) in chords.iter().enumerate() {
        let ci = 5 + k;
        covers.push((vertex_index(c.lo()), ci));
        covers.push((vertex_index(c.hi()), ci));
        covers.push((ci, top));
    }
    let lattice = FiniteLattice::build_from_covers(labels, covers).expect("K4 lattice");
    // a = vertex 00, ab = edge {00,10}, cd = the opposite edge {01,11}
    let a = vertex_index(Vertex(0));
    let ab = 5 + chords
        .iter()
        .position(|c| c.lo() == Vertex(0) && c.hi() == Vertex(1))
        .expect("edge 00-10");
    let cd = 5 + chords
        .iter()
        .position(|c| c.lo() == Vertex(2) && c.hi() == Vertex(3))
        .expect("edge 01-11");
    let witness =
        SublatticeWitness { kind: WitnessKind::N5, zero: 0, a, c: ab, b: cd, one: top };
    assert!(lattice.verify_witness(&witness), "K4 pentagon");
    (lattice, witness)
}

/// The C_2 pentagon {empty, square, vertex 00, edge x2=0, edge x2=1}.
pub fn c2_pentagon(cn: &CubicalLattice) -> Result<SublatticeWitness, VcrError> {
    let dim = cn.dim;
    if dim.n() != 2 {
        return Err(VcrError::NotATwoFace(Some(dim.n())));
    }
    let want = |f: Face| cn.index_of(&f).ok_or(VcrError::MissingElement);
    let witness = SublatticeWitness {
        kind: WitnessKind::N5,
        zero: want(Face::Empty)?,
        a: want(Face::point(Vertex(0)))?,
        c: want(Face::Cell { anchor: Vertex(0), free: 0b01 })?,
        b: want(Face::Cell { anchor: Vertex(0b10), free: 0b01 })?,
        one: want(Face::full(dim))?,
    };
    if !cn.lattice.verify_witness(&witness) {
        return Err(VcrError::PentagonInvalid("C_2"));
    }
    Ok(witness)
}
