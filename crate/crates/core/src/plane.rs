//! Combinatorial plane embeddings.
//!
//! A [`PlaneGraph`] is a simple graph together with a clockwise rotation
//! system and a declared outer boundary walk. Faces are recovered by tracing
//! the rotation system; the abstract graph underneath is available as a
//! [`SimpleGraph`] for algorithms that must ignore the embedding.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

/// A 1-based vertex label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    /// Returns `None` for 0.
    pub fn new(id: u32) -> Option<Self> {
        (id >= 1).then_some(VertexId(id))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub(crate) fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub(crate) fn from_index(i: usize) -> Self {
        VertexId(i as u32 + 1)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shorthand used throughout tests and generators.
pub fn v(id: u32) -> VertexId {
    VertexId::new(id).expect("vertex ids are 1-based")
}

#[cfg(test)]
pub(crate) fn vs(ids: &[u32]) -> Vec<VertexId> {
    ids.iter().map(|&i| v(i)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneError {
    #[error("vertex {0} is out of range")]
    UnknownVertex(u32),
    #[error("graph is not simple at vertex {vertex}: {detail}")]
    NotSimple { vertex: VertexId, detail: &'static str },
    #[error("rotation asymmetry: {from} lists {to} but {to} does not list {from}")]
    AsymmetricRotation { from: VertexId, to: VertexId },
    #[error("the outer walk is empty")]
    EmptyOuter,
    #[error("claimed outer walk is not a traced face")]
    OuterNotAFace,
    #[error("rotation system is not planar (V - E + F = {euler}, expected {expected})")]
    NonPlanarRotation { euler: i64, expected: i64 },
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
}

/// Clockwise cyclic order of neighbors around every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rot: Vec<Vec<VertexId>>,
}

impl RotationSystem {
    /// Checks ranges, simplicity and symmetry. `rot[i]` is the rotation of
    /// vertex `i + 1`.
    pub fn new(rot: Vec<Vec<VertexId>>) -> Result<Self, PlaneError> {
        let n = rot.len();
        let mut edges = HashSet::new();
        for (i, nbrs) in rot.iter().enumerate() {
            let u = VertexId::from_index(i);
            let mut seen = HashSet::with_capacity(nbrs.len());
            for &w in nbrs {
                if w.index() >= n {
                    return Err(PlaneError::UnknownVertex(w.get()));
                }
                if w == u {
                    return Err(PlaneError::NotSimple { vertex: u, detail: "self loop" });
                }
                if !seen.insert(w) {
                    return Err(PlaneError::NotSimple { vertex: u, detail: "repeated neighbor" });
                }
                edges.insert((u, w));
            }
        }
        for &(a, b) in &edges {
            if !edges.contains(&(b, a)) {
                return Err(PlaneError::AsymmetricRotation { from: a, to: b });
            }
        }
        Ok(RotationSystem { rot })
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    pub fn neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.rot[u.index()]
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.rot[u.index()].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.rot.len()).map(VertexId::from_index)
    }

    /// Undirected edges `(u, w)` with `u < w`, ordered lexicographically.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out: Vec<_> = self
            .vertices()
            .flat_map(|u| self.neighbors(u).iter().filter(move |&&w| u < w).map(move |&w| (u, w)))
            .collect();
        out.sort();
        out
    }

    pub fn adjacent(&self, u: VertexId, w: VertexId) -> bool {
        self.rot[u.index()].contains(&w)
    }

    /// The neighbor that immediately follows `u` in the rotation at `at`.
    pub fn next_after(&self, at: VertexId, u: VertexId) -> Option<VertexId> {
        let r = &self.rot[at.index()];
        let pos = r.iter().position(|&w| w == u)?;
        Some(r[(pos + 1) % r.len()])
    }

    pub(crate) fn into_inner(self) -> Vec<Vec<VertexId>> {
        self.rot
    }

    /// Every rotation rotated to start at its smallest neighbor.
    pub fn canonical(&self) -> RotationSystem {
        RotationSystem { rot: self.rot.iter().map(|r| rotate_to_min(r)).collect() }
    }
}

pub(crate) fn rotate_to_min(cycle: &[VertexId]) -> Vec<VertexId> {
    match cycle.iter().enumerate().min_by_key(|(_, &w)| w) {
        Some((pos, _)) => cycle[pos..].iter().chain(&cycle[..pos]).copied().collect(),
        None => Vec::new(),
    }
}

/// Cyclic equality up to rotation (orientation is significant).
pub(crate) fn same_cycle(a: &[VertexId], b: &[VertexId]) -> bool {
    a.len() == b.len() && rotate_to_min(a) == rotate_to_min(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceKind {
    Internal,
    Outer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<VertexId>,
    pub kind: FaceKind,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Sorted corner triple for faces of length three.
    pub fn triple(&self) -> Option<[VertexId; 3]> {
        match self.boundary[..] {
            [a, b, c] => Some(sorted3(a, b, c)),
            _ => None,
        }
    }
}

pub(crate) fn sorted3(a: VertexId, b: VertexId, c: VertexId) -> [VertexId; 3] {
    let mut t = [a, b, c];
    t.sort();
    t
}

/// A simple graph with a rotation system and a declared clockwise outer walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: RotationSystem,
    outer: Vec<VertexId>,
}

impl PlaneGraph {
    pub fn new(rotation: RotationSystem, outer: Vec<VertexId>) -> Result<Self, PlaneError> {
        if outer.is_empty() {
            return Err(PlaneError::EmptyOuter);
        }
        if let Some(bad) = outer.iter().find(|w| w.index() >= rotation.vertex_count()) {
            return Err(PlaneError::UnknownVertex(bad.get()));
        }
        Ok(PlaneGraph { rotation, outer })
    }

    /// Convenience constructor from raw 1-based ids.
    pub fn from_lists(adj: &[&[u32]], outer: &[u32]) -> Result<Self, PlaneError> {
        let mut rot = Vec::with_capacity(adj.len());
        for list in adj {
            let mut r = Vec::with_capacity(list.len());
            for &w in list.iter() {
                r.push(VertexId::new(w).ok_or(PlaneError::UnknownVertex(w))?);
            }
            rot.push(r);
        }
        let outer = outer
            .iter()
            .map(|&w| VertexId::new(w).ok_or(PlaneError::UnknownVertex(w)))
            .collect::<Result<Vec<_>, _>>()?;
        PlaneGraph::new(RotationSystem::new(rot)?, outer)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.edge_count()
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn outer(&self) -> &[VertexId] {
        &self.outer
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        self.rotation.vertices()
    }

    pub fn neighbors(&self, u: VertexId) -> &[VertexId] {
        self.rotation.neighbors(u)
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.rotation.degree(u)
    }

    fn check_vertex(&self, u: VertexId) -> Result<(), PlaneError> {
        if u.index() < self.vertex_count() {
            Ok(())
        } else {
            Err(PlaneError::UnknownVertex(u.get()))
        }
    }

    /// N(u).
    pub fn open_neighborhood(&self, u: VertexId) -> Result<BTreeSet<VertexId>, PlaneError> {
        self.check_vertex(u)?;
        Ok(self.neighbors(u).iter().copied().collect())
    }

    /// N[u] = N(u) ∪ {u}.
    pub fn closed_neighborhood(&self, u: VertexId) -> Result<BTreeSet<VertexId>, PlaneError> {
        let mut s = self.open_neighborhood(u)?;
        s.insert(u);
        Ok(s)
    }

    /// Subgraph induced by `s`, keeping the original labels and each vertex's
    /// inherited rotation order.
    pub fn induced_subgraph(&self, s: &BTreeSet<VertexId>) -> Result<InducedSubgraph, PlaneError> {
        if s.is_empty() {
            return Err(PlaneError::EmptyVertexSet);
        }
        for &u in s {
            self.check_vertex(u)?;
        }
        let rotation = s
            .iter()
            .map(|&u| (u, self.neighbors(u).iter().copied().filter(|w| s.contains(w)).collect()))
            .collect();
        Ok(InducedSubgraph { rotation })
    }

    /// The abstract graph, embedding discarded.
    pub fn to_simple(&self) -> SimpleGraph {
        SimpleGraph::from_rotation(&self.rotation)
    }

    /// Rotations start at their smallest neighbor, the outer walk at its
    /// smallest vertex.
    pub fn canonical(&self) -> PlaneGraph {
        PlaneGraph { rotation: self.rotation.canonical(), outer: rotate_to_min(&self.outer) }
    }

    /// Traces every face of the rotation system.
    ///
    /// The successor of the directed edge `(u, w)` is `(w, x)` where `x`
    /// immediately follows `u` in the clockwise rotation at `w`. The face whose
    /// walk matches the declared outer sequence (up to cyclic shift) is marked
    /// [`FaceKind::Outer`].
    pub fn trace_faces(&self) -> Result<Vec<Face>, PlaneError> {
        let rot = &self.rotation;
        let n = rot.vertex_count();
        let mut faces: Vec<Face> = trace_walks(rot)
            .into_iter()
            .map(|boundary| Face { boundary, kind: FaceKind::Internal })
            .collect();

        let components = self.to_simple().components().iter().filter(|c| c.len() > 1).count() as i64;
        let active = (0..n).filter(|&i| !rot.rot[i].is_empty()).count() as i64;
        let euler = active - rot.edge_count() as i64 + faces.len() as i64;
        if euler != 2 * components {
            return Err(PlaneError::NonPlanarRotation { euler, expected: 2 * components });
        }

        let outer_idx = faces
            .iter()
            .position(|f| same_cycle(&f.boundary, &self.outer))
            .ok_or(PlaneError::OuterNotAFace)?;
        faces[outer_idx].kind = FaceKind::Outer;
        Ok(faces)
    }
}

/// Closed walks of the face-tracing rule, in order of their first directed
/// edge.
pub(crate) fn trace_walks(rot: &RotationSystem) -> Vec<Vec<VertexId>> {
    let n = rot.vertex_count();
    // visited[u][k]: directed edge from u to its k-th rotation entry
    let mut visited: Vec<Vec<bool>> = (0..n).map(|i| vec![false; rot.rot[i].len()]).collect();
    let mut walks = Vec::new();
    for i in 0..n {
        for k in 0..rot.rot[i].len() {
            if visited[i][k] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut kk) = (i, k);
            while !visited[a][kk] {
                visited[a][kk] = true;
                walk.push(VertexId::from_index(a));
                let b = rot.rot[a][kk];
                let rb = &rot.rot[b.index()];
                let back = rb
                    .iter()
                    .position(|&w| w.index() == a)
                    .expect("rotation symmetry is checked at construction");
                kk = (back + 1) % rb.len();
                a = b.index();
            }
            walks.push(walk);
        }
    }
    walks
}

/// An induced subgraph carrying the inherited rotation order, labelled by the
/// parent's vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    rotation: BTreeMap<VertexId, Vec<VertexId>>,
}

impl InducedSubgraph {
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn neighbors(&self, u: VertexId) -> Option<&[VertexId]> {
        self.rotation.get(&u).map(Vec::as_slice)
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.values().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out: Vec<_> = self
            .rotation
            .iter()
            .flat_map(|(&u, ws)| ws.iter().filter(move |&&w| u < w).map(move |&w| (u, w)))
            .collect();
        out.sort();
        out
    }

    pub fn restrict(&self, s: &BTreeSet<VertexId>) -> Result<InducedSubgraph, PlaneError> {
        if s.is_empty() {
            return Err(PlaneError::EmptyVertexSet);
        }
        let mut rotation = BTreeMap::new();
        for &u in s {
            let ws = self.rotation.get(&u).ok_or(PlaneError::UnknownVertex(u.get()))?;
            rotation.insert(u, ws.iter().copied().filter(|w| s.contains(w)).collect());
        }
        Ok(InducedSubgraph { rotation })
    }

    /// True when the subgraph is a single chordless cycle through all of its
    /// vertices.
    pub fn is_cycle(&self) -> bool {
        if self.vertex_count() < 3 || self.rotation.values().any(|ws| ws.len() != 2) {
            return false;
        }
        let start = *self.rotation.keys().next().expect("nonempty");
        let (mut prev, mut cur) = (start, self.rotation[&start][0]);
        let mut steps = 1;
        while cur != start {
            let ws = &self.rotation[&cur];
            let next = if ws[0] == prev { ws[1] } else { ws[0] };
            prev = cur;
            cur = next;
            steps += 1;
            if steps > self.vertex_count() {
                return false;
            }
        }
        steps == self.vertex_count()
    }
}

/// Counting data of a near triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceStats {
    /// Edge count.
    pub e: usize,
    /// Internal face count.
    pub f: usize,
    /// Outer boundary length.
    pub t: usize,
    /// External vertex count.
    pub n_e: usize,
    /// Internal vertex count.
    pub n_i: usize,
}

impl FaceStats {
    pub fn n(&self) -> usize {
        self.n_e + self.n_i
    }

    /// `3f = 2e - t`.
    pub fn edge_face_identity(&self) -> bool {
        3 * self.f + self.t == 2 * self.e
    }

    /// `f` odd iff `t` odd.
    pub fn parity_identity(&self) -> bool {
        self.f % 2 == self.t % 2
    }

    /// `e = 2 n_e + 3 n_i - 3`.
    pub fn edge_count_identity(&self) -> bool {
        self.e + 3 == 2 * self.n_e + 3 * self.n_i
    }

    /// `n - e + (f + 1) = 2`.
    pub fn euler_identity(&self) -> bool {
        self.n() + self.f + 1 == self.e + 2
    }

    pub fn all_identities_hold(&self) -> bool {
        self.edge_face_identity()
            && self.parity_identity()
            && self.edge_count_identity()
            && self.euler_identity()
    }
}

impl fmt::Display for FaceStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e={} f={} t={} n_e={} n_i={}", self.e, self.f, self.t, self.n_e, self.n_i)
    }
}

/// An abstract simple graph on `1..=n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<VertexId>>,
}

impl SimpleGraph {
    pub fn from_rotation(rot: &RotationSystem) -> Self {
        let adj = rot
            .rot
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.sort();
                r
            })
            .collect();
        SimpleGraph { adj }
    }

    /// Builds from an edge list; duplicate edges collapse, loops are rejected.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, PlaneError> {
        let mut adj = vec![BTreeSet::new(); n];
        for &(a, b) in edges {
            let (va, vb) = (
                VertexId::new(a).filter(|x| x.index() < n).ok_or(PlaneError::UnknownVertex(a))?,
                VertexId::new(b).filter(|x| x.index() < n).ok_or(PlaneError::UnknownVertex(b))?,
            );
            if va == vb {
                return Err(PlaneError::NotSimple { vertex: va, detail: "self loop" });
            }
            adj[va.index()].insert(vb);
            adj[vb.index()].insert(va);
        }
        Ok(SimpleGraph { adj: adj.into_iter().map(|s| s.into_iter().collect()).collect() })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn contains(&self, u: VertexId) -> bool {
        u.index() < self.adj.len()
    }

    pub fn neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.adj[u.index()]
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.adj[u.index()].len()
    }

    pub fn adjacent(&self, u: VertexId, w: VertexId) -> bool {
        self.adj[u.index()].binary_search(&w).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.adj.len()).map(VertexId::from_index)
    }

    /// Connected components, each sorted, in order of smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![VertexId::from_index(s)];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w.index()] {
                        seen[w.index()] = true;
                        comp.push(w);
                        stack.push(w.index());
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn w6() -> PlaneGraph {
        PlaneGraph::from_lists(
            &[&[2, 3, 4, 5, 6], &[1, 6, 3], &[1, 2, 4], &[1, 3, 5], &[1, 4, 6], &[1, 5, 2]],
            &[2, 3, 4, 5, 6],
        )
        .unwrap()
    }

    fn triangle() -> PlaneGraph {
        PlaneGraph::from_lists(&[&[2, 3], &[3, 1], &[1, 2]], &[1, 2, 3]).unwrap()
    }

    fn k4() -> PlaneGraph {
        // hub 1 inside outer triangle 2,3,4
        PlaneGraph::from_lists(&[&[2, 3, 4], &[1, 4, 3], &[1, 2, 4], &[1, 3, 2]], &[2, 3, 4]).unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let faces = triangle().trace_faces().unwrap();
        assert_eq!(faces.len(), 2);
        assert_eq!(faces.iter().filter(|f| f.kind == FaceKind::Outer).count(), 1);
        assert!(faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn wheel_faces() {
        let faces = w6().trace_faces().unwrap();
        let internal: Vec<_> = faces.iter().filter(|f| f.kind == FaceKind::Internal).collect();
        assert_eq!(internal.len(), 5);
        assert!(internal.iter().all(|f| f.len() == 3 && f.boundary.contains(&v(1))));
        let outer = faces.iter().find(|f| f.kind == FaceKind::Outer).unwrap();
        assert!(same_cycle(&outer.boundary, &vs(&[2, 3, 4, 5, 6])));
        let total: usize = faces.iter().map(Face::len).sum();
        assert_eq!(total, 2 * w6().edge_count());
    }

    #[test]
    fn reversed_outer_is_not_a_face() {
        let g = w6();
        let bad = PlaneGraph::new(g.rotation().clone(), vs(&[6, 5, 4, 3, 2])).unwrap();
        assert_eq!(bad.trace_faces(), Err(PlaneError::OuterNotAFace));
    }

    #[test]
    fn asymmetric_rotation_rejected() {
        let err = PlaneGraph::from_lists(&[&[2, 3], &[1], &[1, 2]], &[1, 2, 3]).unwrap_err();
        assert!(matches!(err, PlaneError::AsymmetricRotation { .. }));
    }

    #[test]
    fn loops_and_repeats_rejected() {
        assert!(matches!(
            PlaneGraph::from_lists(&[&[1]], &[1]),
            Err(PlaneError::NotSimple { .. })
        ));
        assert!(matches!(
            PlaneGraph::from_lists(&[&[2, 2], &[1, 1]], &[1, 2]),
            Err(PlaneError::NotSimple { .. })
        ));
        assert!(matches!(PlaneGraph::from_lists(&[&[5]], &[1]), Err(PlaneError::UnknownVertex(5))));
    }

    #[test]
    fn toroidal_rotation_fails_euler() {
        // K4 with one rotation reversed is not a planar embedding.
        let g = PlaneGraph::from_lists(&[&[2, 4, 3], &[1, 4, 3], &[1, 2, 4], &[1, 3, 2]], &[1, 2, 3]);
        match g.unwrap().trace_faces() {
            Err(PlaneError::NonPlanarRotation { .. }) | Err(PlaneError::OuterNotAFace) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn neighborhoods() {
        let g = w6();
        assert_eq!(g.open_neighborhood(v(1)).unwrap(), vs(&[2, 3, 4, 5, 6]).into_iter().collect());
        assert_eq!(g.open_neighborhood(v(2)).unwrap(), vs(&[1, 3, 6]).into_iter().collect());
        assert!(g.closed_neighborhood(v(2)).unwrap().contains(&v(2)));
        assert_eq!(g.open_neighborhood(v(9)), Err(PlaneError::UnknownVertex(9)));
        let k = k4();
        for u in k.vertices() {
            let n = k.open_neighborhood(u).unwrap();
            assert_eq!(n.len(), 3);
            assert!(!n.contains(&u));
        }
    }

    #[test]
    fn induced_rim_is_a_cycle() {
        let g = w6();
        let rim: BTreeSet<_> = vs(&[2, 3, 4, 5, 6]).into_iter().collect();
        let sub = g.induced_subgraph(&rim).unwrap();
        assert_eq!(sub.edge_count(), 5);
        assert!(sub.is_cycle());
        assert_eq!(sub.restrict(&rim).unwrap(), sub);
        // inherited order at 2 was (1, 6, 3)
        assert_eq!(sub.neighbors(v(2)).unwrap(), &vs(&[6, 3])[..]);

        let three: BTreeSet<_> = vs(&[1, 2, 3]).into_iter().collect();
        let tri = k4().induced_subgraph(&three).unwrap();
        assert_eq!(tri.edge_count(), 3);
        assert!(tri.is_cycle());
        assert_eq!(g.induced_subgraph(&BTreeSet::new()), Err(PlaneError::EmptyVertexSet));
    }

    #[test]
    fn canonical_rotations() {
        let g = PlaneGraph::from_lists(&[&[3, 2], &[1, 3], &[2, 1]], &[3, 1, 2]).unwrap();
        let c = g.canonical();
        assert_eq!(c.neighbors(v(1)), &vs(&[2, 3])[..]);
        assert_eq!(c.outer(), &vs(&[1, 2, 3])[..]);
    }
}
