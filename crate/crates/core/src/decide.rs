//! Local deciders for chordality and perfection.
//!
//! All deciders decompose first and inspect each leaf on its own. In a W-near
//! leaf the closed neighborhood of every internal vertex induces a wheel whose
//! rim is the vertex's rotation, so everything interesting about a leaf is
//! readable from degrees and rotations:
//!
//! * a leaf is chordal iff it is a triangle or a `K4`;
//! * an internal vertex of odd degree `>= 5` is the hub of an odd wheel;
//! * degree 4 means an induced `W5`;
//! * when all internal degrees are even and at least 6, the leaf is imperfect
//!   iff some face has three internal corners, and the joint neighborhood of
//!   those corners is then an odd hole (a `W_Δ`).
//!
//! Every certificate is mapped back to the caller's labels and re-verified
//! with [`verify_certificate`] before it is returned.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::certificate::{Certificate, OddHoleCertificate, WDeltaCertificate, WheelCertificate};
use crate::oracle::{self, cycle_order, verify_certificate, CertificateFlaw, OracleError};
use crate::plane::{Face, FaceKind, SimpleGraph, VertexId};
use crate::triangulation::{decompose, LeafClass, NearTriangulation, TriangulationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
    #[error("vertex {0} is out of range")]
    UnknownVertex(VertexId),
    #[error("vertex {0} is not internal")]
    NotInternal(VertexId),
    #[error("vertex {vertex} has degree {degree}, a wheel needs at least 4 spokes")]
    DegreeTooSmall { vertex: VertexId, degree: usize },
    #[error("link of {hub} has chord {a}-{b}")]
    RimChordFound { hub: VertexId, a: VertexId, b: VertexId },
    #[error("link of {hub} is not closed at {a}-{b}")]
    RimNotClosed { hub: VertexId, a: VertexId, b: VertexId },
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(VertexId, VertexId),
    #[error("vertex {0} has odd degree")]
    OddDegree(VertexId),
    #[error("leaf is not an even W5-free W-near triangulation")]
    NotEvenW5Free,
    #[error("joint neighborhood of face ({x},{y},{z}) is not an odd hole: {reason}")]
    LemmaFiveViolation { x: VertexId, y: VertexId, z: VertexId, reason: String },
    #[error("odd-hole search on a leaf with {vertices} vertices exceeded its budget of {budget}")]
    OracleBudgetExceeded { vertices: usize, budget: u64 },
    #[error("W-near leaf has no internal vertex")]
    HollowLeaf,
    #[error("emitted certificate failed verification: {0}")]
    CertificateRejected(CertificateFlaw),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalVerdict {
    Chordal,
    NotChordal(WheelCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerfectWitness {
    OddHole(OddHoleCertificate),
    WDelta(WDeltaCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerfectVerdict {
    Perfect,
    NotPerfect(PerfectWitness),
    /// An induced `W5` (rim of length 4); the W5-free characterization does not
    /// apply.
    NotW5Free(WheelCertificate),
}

impl ChordalVerdict {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalVerdict::Chordal)
    }

    pub fn certificate(&self) -> Option<Certificate> {
        match self {
            ChordalVerdict::Chordal => None,
            ChordalVerdict::NotChordal(w) => Some(Certificate::Wheel(w.clone())),
        }
    }
}

impl PerfectVerdict {
    pub fn is_perfect(&self) -> bool {
        matches!(self, PerfectVerdict::Perfect)
    }

    pub fn certificate(&self) -> Option<Certificate> {
        match self {
            PerfectVerdict::Perfect => None,
            PerfectVerdict::NotPerfect(PerfectWitness::OddHole(h)) => Some(Certificate::OddHole(h.clone())),
            PerfectVerdict::NotPerfect(PerfectWitness::WDelta(d)) => Some(Certificate::WDelta(d.clone())),
            PerfectVerdict::NotW5Free(w) => Some(Certificate::Wheel(w.clone())),
        }
    }
}

fn check_internal(leaf: &NearTriangulation, u: VertexId) -> Result<(), DecideError> {
    if u.index() >= leaf.vertex_count() {
        return Err(DecideError::UnknownVertex(u));
    }
    if !leaf.is_internal(u) {
        return Err(DecideError::NotInternal(u));
    }
    Ok(())
}

/// The wheel around internal vertex `u`, rim in rotation order.
///
/// Fails if the link is not an induced cycle of length at least 4, which
/// cannot happen inside a W-near leaf.
pub fn link_of(leaf: &NearTriangulation, u: VertexId) -> Result<WheelCertificate, DecideError> {
    check_internal(leaf, u)?;
    let rim = leaf.graph().neighbors(u).to_vec();
    if rim.len() < 4 {
        return Err(DecideError::DegreeTooSmall { vertex: u, degree: rim.len() });
    }
    let k = rim.len();
    for i in 0..k {
        let (a, b) = (rim[i], rim[(i + 1) % k]);
        if !leaf.adjacent(a, b) {
            return Err(DecideError::RimNotClosed { hub: u, a, b });
        }
        for j in i + 2..k {
            if (i, j) != (0, k - 1) && leaf.adjacent(rim[i], rim[j]) {
                return Err(DecideError::RimChordFound { hub: u, a: rim[i], b: rim[j] });
            }
        }
    }
    Ok(WheelCertificate { hub: u, rim })
}

/// Every internal vertex has an induced wheel neighborhood; on failure,
/// reports the first offending vertex.
pub fn check_lemma1(leaf: &NearTriangulation) -> Result<(), (VertexId, DecideError)> {
    for &u in leaf.internal_vertices() {
        link_of(leaf, u).map_err(|e| (u, e))?;
    }
    Ok(())
}

/// Wheel of the smallest internal vertex with odd degree `>= 5`.
pub fn find_odd_wheel(leaf: &NearTriangulation) -> Result<Option<WheelCertificate>, DecideError> {
    leaf.internal_vertices()
        .iter()
        .find(|&&u| leaf.degree(u) >= 5 && leaf.degree(u) % 2 == 1)
        .map(|&u| link_of(leaf, u))
        .transpose()
}

/// Wheel of the smallest internal vertex of degree 4, an induced `W5`.
pub fn find_w5(leaf: &NearTriangulation) -> Result<Option<WheelCertificate>, DecideError> {
    leaf.internal_vertices()
        .iter()
        .find(|&&u| leaf.degree(u) == 4)
        .map(|&u| link_of(leaf, u))
        .transpose()
}

/// Looks for a face whose corners are all internal and returns the `W_Δ`
/// around the lexicographically smallest one.
///
/// Requires an even, W5-free leaf. If the joint neighborhood of such a face is
/// not an odd hole the result is [`DecideError::LemmaFiveViolation`].
pub fn find_w_delta(leaf: &NearTriangulation) -> Result<Option<WDeltaCertificate>, DecideError> {
    if leaf.internal_vertices().iter().any(|&u| leaf.degree(u) % 2 == 1 || leaf.degree(u) < 6) {
        return Err(DecideError::NotEvenW5Free);
    }
    let first = leaf
        .internal_faces()
        .filter_map(Face::triple)
        .filter(|tri| tri.iter().all(|&u| leaf.is_internal(u)))
        .min();
    let Some([x, y, z]) = first else {
        return Ok(None);
    };
    let g = leaf.adjacency();
    let hubs = [x, y, z];
    let ring: BTreeSet<VertexId> = hubs
        .iter()
        .flat_map(|&h| g.neighbors(h).iter().copied())
        .filter(|u| !hubs.contains(u))
        .collect();
    let violation = |reason: String| DecideError::LemmaFiveViolation { x, y, z, reason };
    let cycle = cycle_order(g, &ring).ok_or_else(|| violation("not an induced cycle".to_string()))?;
    if cycle.len() % 2 == 0 {
        return Err(violation(format!("even length {}", cycle.len())));
    }
    Ok(Some(WDeltaCertificate { x, y, z, hole: OddHoleCertificate { cycle } }))
}

/// Faces shared by the wheels around adjacent even-degree internal vertices
/// `u` and `w`: the wheel triangles common to both.
///
/// In a W-near leaf these are exactly the two faces on the edge `uw`.
pub fn shared_faces(leaf: &NearTriangulation, u: VertexId, w: VertexId) -> Result<Vec<Face>, DecideError> {
    check_internal(leaf, u)?;
    check_internal(leaf, w)?;
    if !leaf.adjacent(u, w) {
        return Err(DecideError::NotAdjacent(u, w));
    }
    for h in [u, w] {
        if leaf.degree(h) % 2 == 1 {
            return Err(DecideError::OddDegree(h));
        }
    }
    let wheel_faces = |h: VertexId| -> Result<BTreeSet<[VertexId; 3]>, DecideError> {
        let rim = link_of(leaf, h)?.rim;
        let k = rim.len();
        Ok((0..k).map(|i| crate::plane::sorted3(h, rim[i], rim[(i + 1) % k])).collect())
    };
    let common = wheel_faces(u)?;
    let other = wheel_faces(w)?;
    Ok(common
        .intersection(&other)
        .map(|t| Face { boundary: t.to_vec(), kind: FaceKind::Internal })
        .collect())
}

fn verified(root: &SimpleGraph, c: Certificate) -> Result<Certificate, DecideError> {
    verify_certificate(root, &c).map_err(DecideError::CertificateRejected)?;
    Ok(c)
}

/// Chordal iff every leaf of the decomposition is a triangle or a `K4`;
/// otherwise the wheel around the smallest internal vertex of the first W-near
/// leaf.
pub fn is_chordal(t: &NearTriangulation) -> Result<ChordalVerdict, DecideError> {
    let tree = decompose(t)?;
    for (leaf, class) in tree.leaves() {
        if !class.is_wnear() {
            continue;
        }
        let hub = *leaf.internal_vertices().iter().next().ok_or(DecideError::HollowLeaf)?;
        let wheel = link_of(leaf, hub)?.relabel(|u| leaf.origin(u));
        return match verified(t.adjacency(), Certificate::Wheel(wheel))? {
            Certificate::Wheel(w) => Ok(ChordalVerdict::NotChordal(w)),
            _ => unreachable!(),
        };
    }
    Ok(ChordalVerdict::Chordal)
}

fn odd_hole_verdict(
    t: &NearTriangulation,
    leaf: &NearTriangulation,
    cycle: Vec<VertexId>,
) -> Result<PerfectVerdict, DecideError> {
    let hole = OddHoleCertificate { cycle }.relabel(|u| leaf.origin(u));
    verified(t.adjacency(), Certificate::OddHole(hole.clone()))?;
    Ok(PerfectVerdict::NotPerfect(PerfectWitness::OddHole(hole)))
}

fn w_delta_verdict(
    t: &NearTriangulation,
    leaf: &NearTriangulation,
    d: WDeltaCertificate,
) -> Result<PerfectVerdict, DecideError> {
    let d = d.relabel(|u| leaf.origin(u));
    verified(t.adjacency(), Certificate::WDelta(d.clone()))?;
    Ok(PerfectVerdict::NotPerfect(PerfectWitness::WDelta(d)))
}

/// Perfection for W5-free inputs: no odd wheel and no `W_Δ`.
///
/// A leaf with an internal vertex of degree 4 yields [`PerfectVerdict::NotW5Free`].
pub fn is_perfect_w5free(t: &NearTriangulation) -> Result<PerfectVerdict, DecideError> {
    let tree = decompose(t)?;
    for (leaf, class) in tree.leaves() {
        if !class.is_wnear() {
            continue;
        }
        if let Some(w) = find_w5(leaf)? {
            let w = w.relabel(|u| leaf.origin(u));
            verified(t.adjacency(), Certificate::Wheel(w.clone()))?;
            return Ok(PerfectVerdict::NotW5Free(w));
        }
        if let Some(w) = find_odd_wheel(leaf)? {
            return odd_hole_verdict(t, leaf, w.rim);
        }
        if let Some(d) = find_w_delta(leaf)? {
            return w_delta_verdict(t, leaf, d);
        }
    }
    Ok(PerfectVerdict::Perfect)
}

/// General perfection: odd wheels and `W_Δ` where the local characterization
/// applies, exhaustive odd-hole search on leaves that contain a `W5`.
///
/// A leaf whose search exceeds `oracle_budget` makes the whole call fail with
/// [`DecideError::OracleBudgetExceeded`].
pub fn is_perfect(t: &NearTriangulation, oracle_budget: u64) -> Result<PerfectVerdict, DecideError> {
    let tree = decompose(t)?;
    for (leaf, class) in tree.leaves() {
        let LeafClass::WNear { min_internal_degree, .. } = class else {
            continue;
        };
        if let Some(w) = find_odd_wheel(leaf)? {
            return odd_hole_verdict(t, leaf, w.rim);
        }
        if min_internal_degree >= 6 {
            if let Some(d) = find_w_delta(leaf)? {
                return w_delta_verdict(t, leaf, d);
            }
            continue;
        }
        let report = oracle::find_odd_hole(leaf.adjacency(), oracle_budget).map_err(|e| match e {
            OracleError::BudgetExceeded { budget } => {
                DecideError::OracleBudgetExceeded { vertices: leaf.vertex_count(), budget }
            }
            OracleError::BadMinLength(_) => unreachable!("odd-hole search has a fixed length bound"),
        })?;
        if let Some(cycle) = report.found {
            return odd_hole_verdict(t, leaf, cycle);
        }
    }
    Ok(PerfectVerdict::Perfect)
}
