//! Near triangulations, their separators and the clique-separator
//! decomposition.
//!
//! A near triangulation splits along two kinds of clique separators: external
//! chords and separating triangles. Chordality and perfection are both
//! preserved in the sense that the whole graph has the property iff both
//! halves do, so deciders only ever look at the leaves of a [`DecompositionTree`].

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::plane::{
    rotate_to_min, sorted3, Face, FaceKind, FaceStats, PlaneError, PlaneGraph, RotationSystem, SimpleGraph, VertexId,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error(transparent)]
    Plane(#[from] PlaneError),
    #[error("near triangulations need at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("outer boundary is not a simple cycle of length >= 3")]
    OuterNotSimpleCycle,
    #[error("internal face {0:?} is not a triangle")]
    NonTriangularInternalFace(Vec<VertexId>),
    #[error("{0} is not a separator of this near triangulation")]
    NotASeparator(Separator),
    #[error("leaf still contains separator {0}")]
    UnexpectedSeparator(Separator),
}

/// A validated plane near triangulation.
///
/// Every internal face is a triangle and the outer boundary is a simple cycle.
/// `labels` maps each local vertex to the vertex it came from in the graph the
/// decomposition started from; it is the identity for freshly validated input.
#[derive(Debug, Clone)]
pub struct NearTriangulation {
    graph: PlaneGraph,
    faces: Vec<Face>,
    internal: BTreeSet<VertexId>,
    external: BTreeSet<VertexId>,
    stats: FaceStats,
    labels: Vec<VertexId>,
    adjacency: SimpleGraph,
    outer_pos: Vec<Option<usize>>,
    face_set: HashSet<[VertexId; 3]>,
}

impl NearTriangulation {
    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    /// All traced faces, the outer one included.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn internal_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| f.kind == FaceKind::Internal)
    }

    pub fn internal_vertices(&self) -> &BTreeSet<VertexId> {
        &self.internal
    }

    pub fn external_vertices(&self) -> &BTreeSet<VertexId> {
        &self.external
    }

    pub fn stats(&self) -> FaceStats {
        self.stats
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    /// Label of a local vertex in the originating graph.
    pub fn origin(&self, u: VertexId) -> VertexId {
        self.labels[u.index()]
    }

    pub fn adjacency(&self) -> &SimpleGraph {
        &self.adjacency
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.stats.e
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.graph.degree(u)
    }

    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.adjacency.adjacent(a, b)
    }

    pub fn is_internal(&self, u: VertexId) -> bool {
        self.internal.contains(&u)
    }

    pub fn outer(&self) -> &[VertexId] {
        self.graph.outer()
    }

    /// Whether `{a, b, c}` bounds a face (internal, or the outer face when
    /// `t = 3`).
    pub fn is_face(&self, a: VertexId, b: VertexId, c: VertexId) -> bool {
        let key = sorted3(a, b, c);
        self.face_set.contains(&key)
            || (self.stats.t == 3 && {
                let o = self.outer();
                sorted3(o[0], o[1], o[2]) == key
            })
    }

    fn outer_consecutive(&self, a: VertexId, b: VertexId) -> bool {
        match (self.outer_pos[a.index()], self.outer_pos[b.index()]) {
            (Some(i), Some(j)) => {
                let t = self.stats.t;
                (i + 1) % t == j || (j + 1) % t == i
            }
            _ => false,
        }
    }

    /// Whether this is the complete graph on four vertices.
    pub fn is_k4(&self) -> bool {
        self.vertex_count() == 4 && self.stats.e == 6
    }

    /// Drops provenance: labels become the identity.
    pub fn rerooted(&self) -> NearTriangulation {
        let mut t = self.clone();
        t.labels = (0..t.vertex_count()).map(VertexId::from_index).collect();
        t
    }
}

/// Checks that `g` is a plane near triangulation and computes its partition
/// and counts.
pub fn validate(g: PlaneGraph) -> Result<NearTriangulation, TriangulationError> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(TriangulationError::TooSmall(n));
    }
    let adjacency = g.to_simple();
    if !adjacency.is_connected() {
        return Err(TriangulationError::Disconnected);
    }
    let faces = g.trace_faces()?;

    let outer = g.outer();
    let mut outer_pos = vec![None; n];
    for (i, &u) in outer.iter().enumerate() {
        if outer_pos[u.index()].replace(i).is_some() {
            return Err(TriangulationError::OuterNotSimpleCycle);
        }
    }
    if outer.len() < 3 {
        return Err(TriangulationError::OuterNotSimpleCycle);
    }
    let mut face_set = HashSet::new();
    for f in faces.iter().filter(|f| f.kind == FaceKind::Internal) {
        match f.triple() {
            Some(tr) if tr[0] != tr[1] && tr[1] != tr[2] => {
                face_set.insert(tr);
            }
            _ => return Err(TriangulationError::NonTriangularInternalFace(f.boundary.clone())),
        }
    }

    let external: BTreeSet<_> = outer.iter().copied().collect();
    let internal: BTreeSet<_> = g.vertices().filter(|u| !external.contains(u)).collect();
    let stats = FaceStats {
        e: g.edge_count(),
        f: faces.len() - 1,
        t: outer.len(),
        n_e: external.len(),
        n_i: internal.len(),
    };
    Ok(NearTriangulation {
        labels: (0..n).map(VertexId::from_index).collect(),
        graph: g,
        faces,
        internal,
        external,
        stats,
        adjacency,
        outer_pos,
        face_set,
    })
}

/// Counting data of a validated near triangulation.
pub fn face_stats(t: &NearTriangulation) -> FaceStats {
    t.stats()
}

/// A clique separator of a near triangulation. Vertices are stored sorted, so
/// the derived ordering is lexicographic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Separator {
    ExternalChord(VertexId, VertexId),
    SeparatingTriangle(VertexId, VertexId, VertexId),
}

impl Separator {
    pub fn chord(a: VertexId, b: VertexId) -> Self {
        Separator::ExternalChord(a.min(b), a.max(b))
    }

    pub fn triangle(a: VertexId, b: VertexId, c: VertexId) -> Self {
        let [a, b, c] = sorted3(a, b, c);
        Separator::SeparatingTriangle(a, b, c)
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        match *self {
            Separator::ExternalChord(a, b) => vec![a, b],
            Separator::SeparatingTriangle(a, b, c) => vec![a, b, c],
        }
    }

    fn edges(&self) -> Vec<(VertexId, VertexId)> {
        match *self {
            Separator::ExternalChord(a, b) => vec![(a, b)],
            Separator::SeparatingTriangle(a, b, c) => vec![(a, b), (a, c), (b, c)],
        }
    }

    /// Same separator with vertices renamed through `f`.
    pub fn map(&self, f: impl Fn(VertexId) -> VertexId) -> Separator {
        match *self {
            Separator::ExternalChord(a, b) => Separator::chord(f(a), f(b)),
            Separator::SeparatingTriangle(a, b, c) => Separator::triangle(f(a), f(b), f(c)),
        }
    }
}

impl fmt::Display for Separator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Separator::ExternalChord(a, b) => write!(f, "chord({a},{b})"),
            Separator::SeparatingTriangle(a, b, c) => write!(f, "triangle({a},{b},{c})"),
        }
    }
}

fn is_valid_separator(t: &NearTriangulation, s: &Separator) -> bool {
    let n = t.vertex_count();
    if s.vertices().iter().any(|u| u.index() >= n) {
        return false;
    }
    match *s {
        Separator::ExternalChord(a, b) => {
            a != b
                && t.external.contains(&a)
                && t.external.contains(&b)
                && t.adjacent(a, b)
                && !t.outer_consecutive(a, b)
        }
        Separator::SeparatingTriangle(a, b, c) => {
            a != b
                && b != c
                && t.adjacent(a, b)
                && t.adjacent(b, c)
                && t.adjacent(a, c)
                && !t.is_face(a, b, c)
        }
    }
}

/// Edges joining two non-consecutive outer vertices, sorted.
pub fn find_external_chords(t: &NearTriangulation) -> Vec<Separator> {
    let mut out = Vec::new();
    for &a in &t.external {
        for &b in t.adjacency.neighbors(a) {
            if a < b && t.external.contains(&b) && !t.outer_consecutive(a, b) {
                out.push(Separator::ExternalChord(a, b));
            }
        }
    }
    out.sort();
    out
}

/// All 3-cycles that do not bound a face, sorted.
pub fn find_separating_triangles(t: &NearTriangulation) -> Vec<Separator> {
    let g = &t.adjacency;
    let mut out = Vec::new();
    for a in g.vertices() {
        let na = g.neighbors(a);
        for &b in na.iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b).iter().filter(|&&c| c > b) {
                if g.adjacent(a, c) && !t.is_face(a, b, c) {
                    out.push(Separator::SeparatingTriangle(a, b, c));
                }
            }
        }
    }
    out.sort();
    out
}

fn edge_key(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    (a.min(b), a.max(b))
}

/// Splits along a separator reported by [`find_external_chords`] or
/// [`find_separating_triangles`].
///
/// For a chord, the left child is the side holding the outer edge that leaves
/// the chord's smaller endpoint in the walk direction. For a separating
/// triangle, the left child is the inside (bounded by the triangle) and the
/// right child is the outside, where the triangle becomes a new internal face.
pub fn split_on(
    t: &NearTriangulation,
    s: &Separator,
) -> Result<(NearTriangulation, NearTriangulation), TriangulationError> {
    if !is_valid_separator(t, s) {
        return Err(TriangulationError::NotASeparator(*s));
    }
    let cut: HashSet<_> = s.edges().into_iter().collect();
    let faces: Vec<[VertexId; 3]> = t
        .internal_faces()
        .map(|f| [f.boundary[0], f.boundary[1], f.boundary[2]])
        .collect();

    let mut by_edge: HashMap<(VertexId, VertexId), Vec<usize>> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for k in 0..3 {
            by_edge.entry(edge_key(f[k], f[(k + 1) % 3])).or_default().push(i);
        }
    }
    let mut group = vec![usize::MAX; faces.len()];
    let mut groups = 0;
    for start in 0..faces.len() {
        if group[start] != usize::MAX {
            continue;
        }
        group[start] = groups;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let f = faces[i];
            for k in 0..3 {
                let e = edge_key(f[k], f[(k + 1) % 3]);
                if cut.contains(&e) {
                    continue;
                }
                for &j in &by_edge[&e] {
                    if group[j] == usize::MAX {
                        group[j] = groups;
                        stack.push(j);
                    }
                }
            }
        }
        groups += 1;
    }
    let outer = t.outer();
    let tlen = outer.len();
    let face_on_outer_edge = |a: VertexId, b: VertexId| -> Option<usize> {
        by_edge.get(&edge_key(a, b)).and_then(|fs| fs.first().copied())
    };
    let build = |pick: &dyn Fn(usize) -> bool| -> Result<NearTriangulation, TriangulationError> {
        let members: Vec<[VertexId; 3]> =
            faces.iter().zip(&group).filter(|(_, &k)| pick(k)).map(|(f, _)| *f).collect();
        build_child(t, &members, s)
    };
    match *s {
        Separator::ExternalChord(a, _) => {
            if groups != 2 {
                return Err(TriangulationError::NotASeparator(*s));
            }
            let i = t.outer_pos[a.index()].expect("chord ends are external");
            let f = face_on_outer_edge(a, outer[(i + 1) % tlen]).expect("outer edges bound one face");
            let left = group[f];
            Ok((build(&|k| k == left)?, build(&|k| k != left)?))
        }
        Separator::SeparatingTriangle(..) => {
            // the inside is the one group that reaches no outer edge
            let mut on_boundary = vec![false; groups];
            for i in 0..tlen {
                let (a, b) = (outer[i], outer[(i + 1) % tlen]);
                if !cut.contains(&edge_key(a, b)) {
                    if let Some(f) = face_on_outer_edge(a, b) {
                        on_boundary[group[f]] = true;
                    }
                }
            }
            let inside: Vec<usize> = (0..groups).filter(|&k| !on_boundary[k]).collect();
            match inside[..] {
                [g] if groups >= 2 => Ok((build(&|k| k == g)?, build(&|k| k != g)?)),
                _ => Err(TriangulationError::NotASeparator(*s)),
            }
        }
    }
}

/// Builds the near triangulation spanned by `members` (a face-connected side
/// of the separator), relabelled to `1..=m` in increasing parent order.
fn build_child(
    t: &NearTriangulation,
    members: &[[VertexId; 3]],
    s: &Separator,
) -> Result<NearTriangulation, TriangulationError> {
    let mut verts = BTreeSet::new();
    let mut edges = HashSet::new();
    let mut member_keys = HashSet::new();
    for f in members {
        verts.extend(f.iter().copied());
        for k in 0..3 {
            edges.insert(edge_key(f[k], f[(k + 1) % 3]));
        }
        member_keys.insert(rotate_to_min(f));
    }
    edges.extend(s.edges());
    verts.extend(s.vertices());
    let verts: Vec<VertexId> = verts.into_iter().collect();
    let mut local = HashMap::new();
    for (i, &u) in verts.iter().enumerate() {
        local.insert(u, VertexId::from_index(i));
    }
    let rot: Vec<Vec<VertexId>> = verts
        .iter()
        .map(|&u| {
            t.graph
                .neighbors(u)
                .iter()
                .filter(|&&w| edges.contains(&edge_key(u, w)))
                .map(|w| local[w])
                .collect()
        })
        .collect();
    let rotation = RotationSystem::new(rot)?;

    let traced: Vec<Face> = crate::plane::trace_walks(&rotation)
        .into_iter()
        .map(|boundary| Face { boundary, kind: FaceKind::Internal })
        .collect();
    let parent_outer: Vec<VertexId> = t.outer().iter().filter_map(|u| local.get(u).copied()).collect();
    let new_faces: Vec<&Face> = traced
        .iter()
        .filter(|f| {
            let walk: Vec<VertexId> = f.boundary.iter().map(|u| verts[u.index()]).collect();
            !member_keys.contains(&rotate_to_min(&walk))
        })
        .collect();
    let outer = match new_faces[..] {
        [only] => only.boundary.clone(),
        [f1, f2] => {
            let is_parent_outer = |f: &Face| {
                parent_outer.len() == t.outer().len() && crate::plane::same_cycle(&f.boundary, &parent_outer)
            };
            match (is_parent_outer(f1), is_parent_outer(f2)) {
                (true, false) if f2.len() == 3 => f1.boundary.clone(),
                (false, true) if f1.len() == 3 => f2.boundary.clone(),
                _ => return Err(TriangulationError::NotASeparator(*s)),
            }
        }
        _ => return Err(TriangulationError::NotASeparator(*s)),
    };
    let mut child = validate(PlaneGraph::new(rotation, outer)?)?;
    child.labels = verts.iter().map(|&u| t.labels[u.index()]).collect();
    Ok(child)
}

/// Classification of a decomposition leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafClass {
    TriangleLeaf,
    K4Leaf,
    WNear { even_internal: bool, eulerian: bool, min_internal_degree: usize },
}

impl LeafClass {
    pub fn is_wnear(&self) -> bool {
        matches!(self, LeafClass::WNear { .. })
    }
}

impl fmt::Display for LeafClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeafClass::TriangleLeaf => write!(f, "triangle"),
            LeafClass::K4Leaf => write!(f, "k4"),
            LeafClass::WNear { even_internal, eulerian, min_internal_degree } => write!(
                f,
                "w-near even_internal={even_internal} eulerian={eulerian} min_internal_degree={min_internal_degree}"
            ),
        }
    }
}

/// Classifies a separator-free near triangulation.
pub fn classify_leaf(t: &NearTriangulation) -> Result<LeafClass, TriangulationError> {
    if let Some(s) = find_external_chords(t).into_iter().chain(find_separating_triangles(t)).next() {
        return Err(TriangulationError::UnexpectedSeparator(s));
    }
    Ok(classify_unchecked(t))
}

fn classify_unchecked(t: &NearTriangulation) -> LeafClass {
    if t.vertex_count() == 3 {
        return LeafClass::TriangleLeaf;
    }
    if t.is_k4() {
        return LeafClass::K4Leaf;
    }
    let even_internal = t.internal.iter().all(|&u| t.degree(u).is_multiple_of(2));
    let eulerian = even_internal && t.stats.t == 3 && t.external.iter().all(|&u| t.degree(u).is_multiple_of(2));
    let min_internal_degree = t.internal.iter().map(|&u| t.degree(u)).min().unwrap_or(0);
    LeafClass::WNear { even_internal, eulerian, min_internal_degree }
}

/// Recursive split of a near triangulation down to separator-free pieces.
#[derive(Debug, Clone)]
pub enum DecompositionTree {
    Leaf { piece: NearTriangulation, class: LeafClass },
    Split { piece: NearTriangulation, separator: Separator, left: Box<DecompositionTree>, right: Box<DecompositionTree> },
}

impl DecompositionTree {
    pub fn piece(&self) -> &NearTriangulation {
        match self {
            DecompositionTree::Leaf { piece, .. } | DecompositionTree::Split { piece, .. } => piece,
        }
    }

    /// Leaves in left-first depth-first order.
    pub fn leaves(&self) -> Vec<(&NearTriangulation, LeafClass)> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            match node {
                DecompositionTree::Leaf { piece, class } => out.push((piece, *class)),
                DecompositionTree::Split { left, right, .. } => {
                    stack.push(right);
                    stack.push(left);
                }
            }
        }
        out
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            DecompositionTree::Leaf { .. } => 1,
            DecompositionTree::Split { left, right, .. } => left.leaf_count() + right.leaf_count(),
        }
    }

    fn render(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        let piece = self.piece();
        let mut verts: Vec<u32> = piece.labels().iter().map(|u| u.get()).collect();
        verts.sort_unstable();
        let verts = verts.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        match self {
            DecompositionTree::Leaf { class, .. } => {
                out.push_str(&format!("{pad}leaf {class} vertices={verts}\n"));
            }
            DecompositionTree::Split { separator, left, right, .. } => {
                let sep = separator.map(|u| piece.origin(u));
                out.push_str(&format!("{pad}split {sep} vertices={verts}\n"));
                left.render(depth + 1, out);
                right.render(depth + 1, out);
            }
        }
    }
}

impl fmt::Display for DecompositionTree {
    /// One line per node, indented by depth; vertex ids refer to the root.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(0, &mut s);
        f.write_str(&s)
    }
}

/// Splits on the smallest external chord, else the smallest separating
/// triangle, until no separator is left. Leaf labels refer to `t`'s vertex ids.
pub fn decompose(t: &NearTriangulation) -> Result<DecompositionTree, TriangulationError> {
    decompose_rec(t.rerooted())
}

fn decompose_rec(piece: NearTriangulation) -> Result<DecompositionTree, TriangulationError> {
    let next = find_external_chords(&piece)
        .into_iter()
        .next()
        .or_else(|| find_separating_triangles(&piece).into_iter().next());
    match next {
        None => {
            let class = classify_unchecked(&piece);
            Ok(DecompositionTree::Leaf { piece, class })
        }
        Some(separator) => {
            let (l, r) = split_on(&piece, &separator)?;
            let (left, right) = rayon::join(|| decompose_rec(l), || decompose_rec(r));
            Ok(DecompositionTree::Split {
                piece,
                separator,
                left: Box::new(left?),
                right: Box::new(right?),
            })
        }
    }
}
