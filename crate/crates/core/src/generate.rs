//! Instance generators.
//!
//! Generators assemble an oriented list of triangles plus a clockwise outer
//! walk, derive the rotation system from it, and validate. A triangle
//! `(a, b, c)` stands for the face walk `a -> b -> c -> a`; the outer walk
//! uses each outer edge in the direction opposite to its internal face.
//!
//! Randomness comes from a ChaCha stream seeded with the caller's 64-bit seed,
//! so equal seeds give byte-identical instances.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::plane::{PlaneGraph, RotationSystem, VertexId};
use crate::triangulation::{validate, NearTriangulation, TriangulationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("flip of edge {0}-{1} is blocked")]
    FlipBlocked(VertexId, VertexId),
    #[error("generated graph failed validation: {0}")]
    Invalid(#[from] TriangulationError),
}

/// Instance families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Wheel { k: usize },
    Fan { t: usize },
    Apollonian { n: usize },
    RandomNear { t: usize, n_i: usize, flips: usize },
    WDelta { dx: usize, dy: usize, dz: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub family: Family,
    pub seed: u64,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Wheel { k } => write!(f, "wheel({k})"),
            Family::Fan { t } => write!(f, "fan({t})"),
            Family::Apollonian { n } => write!(f, "apollonian({n})"),
            Family::RandomNear { t, n_i, flips } => write!(f, "random-near({t},{n_i},{flips})"),
            Family::WDelta { dx, dy, dz } => write!(f, "w-delta({dx},{dy},{dz})"),
        }
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} seed={}", self.family, self.seed)
    }
}

impl GenSpec {
    pub fn generate(&self) -> Result<NearTriangulation, GenError> {
        match self.family {
            Family::Wheel { k } => gen_wheel(k),
            Family::Fan { t } => gen_fan(t),
            Family::Apollonian { n } => gen_apollonian(n, self.seed),
            Family::RandomNear { t, n_i, flips } => gen_random_near(t, n_i, flips, self.seed),
            Family::WDelta { dx, dy, dz } => gen_w_delta(dx, dy, dz),
        }
    }
}

/// Oriented triangles and an outer walk over vertices `1..=n`.
#[derive(Debug, Clone)]
struct FaceSoup {
    n: usize,
    faces: Vec<[u32; 3]>,
    outer: Vec<u32>,
}

impl FaceSoup {
    /// Polygon `1..=t` triangulated by chords from vertex 1.
    fn fan(t: usize) -> Self {
        let t32 = t as u32;
        let faces = (2..t32).map(|i| [1, i + 1, i]).collect();
        FaceSoup { n: t, faces, outer: (1..=t32).collect() }
    }

    /// Hub 1 joined to rim `2..=k`.
    fn wheel(k: usize) -> Self {
        let k32 = k as u32;
        let faces = (2..=k32).map(|i| [1, if i == k32 { 2 } else { i + 1 }, i]).collect();
        FaceSoup { n: k, faces, outer: (2..=k32).collect() }
    }

    /// Puts a new vertex inside face `idx`, joined to its corners.
    fn stack(&mut self, idx: usize) {
        self.n += 1;
        let w = self.n as u32;
        let [a, b, c] = self.faces[idx];
        self.faces[idx] = [a, b, w];
        self.faces.push([b, c, w]);
        self.faces.push([c, a, w]);
    }

    fn build(&self) -> Result<NearTriangulation, GenError> {
        // next[b] maps a -> c for every walk a -> b -> c
        let mut next: Vec<Vec<(u32, u32)>> = vec![Vec::new(); self.n];
        let mut record = |a: u32, b: u32, c: u32| next[b as usize - 1].push((a, c));
        for &[a, b, c] in &self.faces {
            record(a, b, c);
            record(b, c, a);
            record(c, a, b);
        }
        let t = self.outer.len();
        for i in 0..t {
            record(self.outer[i], self.outer[(i + 1) % t], self.outer[(i + 2) % t]);
        }
        let mut rot = Vec::with_capacity(self.n);
        for (i, pairs) in next.iter().enumerate() {
            let mut order = Vec::with_capacity(pairs.len());
            if let Some(&start) = pairs.iter().map(|(a, _)| a).min() {
                let mut cur = start;
                loop {
                    order.push(VertexId::new(cur).expect("1-based"));
                    cur = pairs
                        .iter()
                        .find(|(a, _)| *a == cur)
                        .map(|&(_, c)| c)
                        .ok_or_else(|| GenError::BadParameter(format!("vertex {} has an open fan", i + 1)))?;
                    if cur == start || order.len() > pairs.len() {
                        break;
                    }
                }
            }
            if order.len() != pairs.len() {
                return Err(GenError::BadParameter(format!("vertex {} is pinched", i + 1)));
            }
            rot.push(order);
        }
        let outer = self.outer.iter().map(|&u| VertexId::new(u).expect("1-based")).collect();
        let rotation = RotationSystem::new(rot).map_err(TriangulationError::from)?;
        Ok(validate(PlaneGraph::new(rotation, outer).map_err(TriangulationError::from)?)?)
    }
}

/// Wheel `W_k`: hub 1, rim `2..=k` as the outer face.
pub fn gen_wheel(k: usize) -> Result<NearTriangulation, GenError> {
    if k < 4 {
        return Err(GenError::BadParameter(format!("wheel needs k >= 4, got {k}")));
    }
    FaceSoup::wheel(k).build()
}

/// Polygon `1..=t` with chords `(1, i)` for `3 <= i <= t - 1`.
pub fn gen_fan(t: usize) -> Result<NearTriangulation, GenError> {
    if t < 3 {
        return Err(GenError::BadParameter(format!("fan needs t >= 3, got {t}")));
    }
    FaceSoup::fan(t).build()
}

/// `K4` followed by `n - 4` insertions into uniformly chosen internal faces.
pub fn gen_apollonian(n: usize, seed: u64) -> Result<NearTriangulation, GenError> {
    if n < 4 {
        return Err(GenError::BadParameter(format!("apollonian needs n >= 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut soup = FaceSoup::wheel(4);
    while soup.n < n {
        let idx = rng.gen_range(0..soup.faces.len());
        soup.stack(idx);
    }
    soup.build()
}

/// Triangulated `t`-gon with `n_i` stacked internal vertices, then up to
/// `flips` random diagonal flips (blocked flips are skipped).
pub fn gen_random_near(t: usize, n_i: usize, flips: usize, seed: u64) -> Result<NearTriangulation, GenError> {
    if t < 3 {
        return Err(GenError::BadParameter(format!("outer cycle needs t >= 3, got {t}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut soup = FaceSoup::fan(t);
    for _ in 0..n_i {
        let idx = rng.gen_range(0..soup.faces.len());
        soup.stack(idx);
    }
    let base = soup.build()?;
    if flips == 0 {
        return Ok(base);
    }
    let outer_edges = outer_edge_set(base.outer());
    let mut rot = base.graph().rotation().clone().into_inner();
    let mut edges: Vec<(VertexId, VertexId)> =
        base.graph().rotation().edges().into_iter().filter(|e| !outer_edges.contains(e)).collect();
    if edges.is_empty() {
        return Ok(base);
    }
    for _ in 0..flips {
        let i = rng.gen_range(0..edges.len());
        let (a, b) = edges[i];
        if let Ok((c, d)) = flip_in_place(&mut rot, &outer_edges, a, b) {
            edges[i] = (c.min(d), c.max(d));
        }
    }
    let rotation = RotationSystem::new(rot).map_err(TriangulationError::from)?;
    Ok(validate(PlaneGraph::new(rotation, base.outer().to_vec()).map_err(TriangulationError::from)?)?)
}

fn outer_edge_set(outer: &[VertexId]) -> HashSet<(VertexId, VertexId)> {
    let t = outer.len();
    (0..t)
        .map(|i| {
            let (a, b) = (outer[i], outer[(i + 1) % t]);
            (a.min(b), a.max(b))
        })
        .collect()
}

fn position(r: &[VertexId], u: VertexId) -> Option<usize> {
    r.iter().position(|&w| w == u)
}

fn next_in(rot: &[Vec<VertexId>], at: VertexId, u: VertexId) -> Option<VertexId> {
    let r = &rot[at.index()];
    position(r, u).map(|p| r[(p + 1) % r.len()])
}

/// Replaces edge `ab` by the other diagonal `cd` of the quadrilateral formed
/// by its two incident triangles. Returns `(c, d)`.
fn flip_in_place(
    rot: &mut [Vec<VertexId>],
    outer_edges: &HashSet<(VertexId, VertexId)>,
    a: VertexId,
    b: VertexId,
) -> Result<(VertexId, VertexId), GenError> {
    let blocked = || GenError::FlipBlocked(a, b);
    if a == b || a.index() >= rot.len() || b.index() >= rot.len() || outer_edges.contains(&(a.min(b), a.max(b))) {
        return Err(blocked());
    }
    // face a -> b -> c and face b -> a -> d
    let c = next_in(rot, b, a).ok_or_else(blocked)?;
    let d = next_in(rot, a, b).ok_or_else(blocked)?;
    if next_in(rot, c, b) != Some(a) || next_in(rot, d, a) != Some(b) {
        return Err(blocked());
    }
    if c == d || rot[c.index()].contains(&d) {
        return Err(blocked());
    }
    // at c, a follows b: insert d between them; at d, b follows a: insert c
    let pc = position(&rot[c.index()], b).ok_or_else(blocked)?;
    rot[c.index()].insert(pc + 1, d);
    let pd = position(&rot[d.index()], a).ok_or_else(blocked)?;
    rot[d.index()].insert(pd + 1, c);
    rot[a.index()].retain(|&w| w != b);
    rot[b.index()].retain(|&w| w != a);
    Ok((c, d))
}

/// Flips the internal edge `ab`; blocked when `ab` lies on the outer boundary
/// or the opposite corners are already adjacent.
pub fn edge_flip(t: &NearTriangulation, a: VertexId, b: VertexId) -> Result<NearTriangulation, GenError> {
    if !t.adjacent(a, b) {
        return Err(GenError::FlipBlocked(a, b));
    }
    let mut rot = t.graph().rotation().clone().into_inner();
    flip_in_place(&mut rot, &outer_edge_set(t.outer()), a, b)?;
    let rotation = RotationSystem::new(rot).map_err(TriangulationError::from)?;
    Ok(validate(PlaneGraph::new(rotation, t.outer().to_vec()).map_err(TriangulationError::from)?)?)
}

/// Three mutually adjacent internal hubs `x = 1, y = 2, z = 3` of degrees
/// `dx, dy, dz` around an outer ring of length `dx + dy + dz - 9`.
///
/// Ring order (clockwise, starting at vertex 4): `s_zx`, the `dx - 4` private
/// neighbors of `x`, `s_xy`, the private neighbors of `y`, `s_yz`, the private
/// neighbors of `z`. With all degrees 6 this is the 12-vertex odd-wheel-free
/// imperfect example.
pub fn gen_w_delta(dx: usize, dy: usize, dz: usize) -> Result<NearTriangulation, GenError> {
    for d in [dx, dy, dz] {
        if d < 6 || d % 2 == 1 {
            return Err(GenError::BadParameter(format!("hub degrees must be even and >= 6, got {d}")));
        }
    }
    let ring_len = dx + dy + dz - 9;
    let ring: Vec<u32> = (4..4 + ring_len as u32).collect();
    let (x, y, z) = (1u32, 2u32, 3u32);
    // ring index of each shared neighbor
    let s_zx = 0;
    let s_xy = dx - 3;
    let s_yz = s_xy + dy - 3;
    let mut faces = vec![[x, z, y], [ring[s_xy], x, y], [ring[s_yz], y, z], [ring[s_zx], z, x]];
    let mut fan = |hub: u32, from: usize, to: usize| {
        for j in from..to {
            faces.push([hub, ring[(j + 1) % ring_len], ring[j]]);
        }
    };
    fan(x, s_zx, s_xy);
    fan(y, s_xy, s_yz);
    fan(z, s_yz, ring_len);
    FaceSoup { n: 3 + ring_len, faces, outer: ring }.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::v;
    use crate::triangulation::{decompose, find_external_chords, find_separating_triangles, LeafClass};

    #[test]
    fn wheels() {
        let k4 = gen_wheel(4).unwrap();
        assert!(k4.is_k4());
        assert_eq!(k4.outer().len(), 3);
        let w6 = gen_wheel(6).unwrap();
        assert_eq!((w6.vertex_count(), w6.edge_count(), w6.outer().len()), (6, 10, 5));
        // same embedding as the hand-written sample file
        assert_eq!(w6.graph().neighbors(v(2)), &[v(1), v(6), v(3)]);
        let w7 = gen_wheel(7).unwrap();
        assert_eq!(w7.degree(v(1)), 6);
        assert_eq!(w7.outer().len(), 6);
        assert!(gen_wheel(3).is_err());
    }

    #[test]
    fn fans() {
        assert_eq!(gen_fan(3).unwrap().vertex_count(), 3);
        let f5 = gen_fan(5).unwrap();
        assert_eq!(find_external_chords(&f5).len(), 2);
        assert_eq!(decompose(&f5).unwrap().leaf_count(), 3);
        let s = gen_fan(8).unwrap().stats();
        assert_eq!((s.f, s.e), (6, 13));
        assert!(gen_fan(2).is_err());
    }

    #[test]
    fn apollonian_small() {
        assert!(gen_apollonian(4, 0).unwrap().is_k4());
        let a5 = gen_apollonian(5, 3).unwrap();
        assert_eq!(find_separating_triangles(&a5).len(), 1);
        assert!(gen_apollonian(3, 0).is_err());
    }

    #[test]
    fn random_near_examples() {
        assert_eq!(gen_random_near(3, 0, 0, 99).unwrap().vertex_count(), 3);
        let p = gen_random_near(5, 0, 0, 1).unwrap();
        assert_eq!((p.stats().e, p.stats().f), (7, 3));
        let r = gen_random_near(9, 3, 40, 11).unwrap();
        assert_eq!(r.vertex_count(), 12);
        assert!(r.stats().edge_face_identity());
        assert_eq!(
            r.graph().canonical(),
            gen_random_near(9, 3, 40, 11).unwrap().graph().canonical()
        );
    }

    #[test]
    fn flip_is_an_involution() {
        // two triangles glued along (1,3) inside the square 1,2,3,4
        let sq = gen_fan(4).unwrap();
        let flipped = edge_flip(&sq, v(1), v(3)).unwrap();
        assert!(flipped.adjacent(v(2), v(4)) && !flipped.adjacent(v(1), v(3)));
        assert_eq!(flipped.stats(), sq.stats());
        let back = edge_flip(&flipped, v(2), v(4)).unwrap();
        assert_eq!(back.graph().canonical(), sq.graph().canonical());
        assert!(matches!(edge_flip(&sq, v(1), v(2)), Err(GenError::FlipBlocked(..))));
        // K4's internal edges all have adjacent opposite corners
        let k4 = gen_wheel(4).unwrap();
        assert!(matches!(edge_flip(&k4, v(1), v(2)), Err(GenError::FlipBlocked(..))));
    }

    #[test]
    fn w_delta_shape() {
        let t = gen_w_delta(6, 6, 6).unwrap();
        let s = t.stats();
        assert_eq!((t.vertex_count(), s.e, s.f, s.t, s.n_e, s.n_i), (12, 24, 13, 9, 9, 3));
        assert_eq!([t.degree(v(1)), t.degree(v(2)), t.degree(v(3))], [6, 6, 6]);
        assert!(find_external_chords(&t).is_empty());
        assert!(find_separating_triangles(&t).is_empty());
        let tree = decompose(&t).unwrap();
        assert_eq!(
            tree.leaves()[0].1,
            LeafClass::WNear { even_internal: true, eulerian: false, min_internal_degree: 6 }
        );
        assert_eq!(gen_w_delta(6, 6, 8).unwrap().outer().len(), 11);
        assert!(gen_w_delta(5, 6, 6).is_err());
        assert!(gen_w_delta(4, 6, 6).is_err());
    }
}
