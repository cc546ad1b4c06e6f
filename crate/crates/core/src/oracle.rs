//! Exhaustive ground truth.
//!
//! Nothing here looks at the embedding: searches run on the abstract
//! [`SimpleGraph`], and certificates are checked with adjacency queries only.
//!
//! Induced cycles are enumerated by growing induced paths from an anchor that
//! is the smallest vertex of the cycle. A path `a, p1, ..., pk` may only be
//! extended by a vertex larger than `a` that is adjacent to `pk` and to no
//! other path vertex except possibly `a`; touching `a` closes the cycle. Each
//! cycle is reported once, in the orientation with `p1 < pk`.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::certificate::{Certificate, OddHoleCertificate, WDeltaCertificate, WheelCertificate};
use crate::plane::{SimpleGraph, VertexId};
use crate::triangulation::NearTriangulation;

/// Default limit on explored partial paths.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search budget of {budget} partial paths exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("minimum cycle length must be at least 4, got {0}")]
    BadMinLength(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleSearchReport {
    pub found: Option<Vec<VertexId>>,
    pub nodes_explored: u64,
    pub budget: u64,
}

struct Search<'g> {
    g: &'g SimpleGraph,
    path: Vec<VertexId>,
    on_path: Vec<bool>,
    // number of path vertices adjacent to each vertex
    touch: Vec<u32>,
    explored: u64,
    budget: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g SimpleGraph, budget: u64) -> Self {
        let n = g.vertex_count();
        Search { g, path: Vec::new(), on_path: vec![false; n], touch: vec![0; n], explored: 0, budget }
    }

    fn push(&mut self, u: VertexId) -> Result<(), OracleError> {
        if self.explored >= self.budget {
            return Err(OracleError::BudgetExceeded { budget: self.budget });
        }
        self.explored += 1;
        self.path.push(u);
        self.on_path[u.index()] = true;
        for &w in self.g.neighbors(u) {
            self.touch[w.index()] += 1;
        }
        Ok(())
    }

    fn pop(&mut self) {
        let u = self.path.pop().expect("nonempty path");
        self.on_path[u.index()] = false;
        for &w in self.g.neighbors(u) {
            self.touch[w.index()] -= 1;
        }
    }

    fn run<F>(&mut self, visit: &mut F) -> Result<ControlFlow<()>, OracleError>
    where
        F: FnMut(&[VertexId]) -> ControlFlow<()>,
    {
        for a in self.g.vertices() {
            self.push(a)?;
            for &p1 in self.g.neighbors(a) {
                if p1 < a {
                    continue;
                }
                self.push(p1)?;
                let flow = self.extend(a, visit);
                self.pop();
                if flow? == ControlFlow::Break(()) {
                    self.pop();
                    return Ok(ControlFlow::Break(()));
                }
            }
            self.pop();
        }
        Ok(ControlFlow::Continue(()))
    }

    fn extend<F>(&mut self, a: VertexId, visit: &mut F) -> Result<ControlFlow<()>, OracleError>
    where
        F: FnMut(&[VertexId]) -> ControlFlow<()>,
    {
        let last = *self.path.last().expect("path has anchor and p1");
        let p1 = self.path[1];
        let g = self.g;
        for &w in g.neighbors(last) {
            if w <= a || self.on_path[w.index()] {
                continue;
            }
            let touches_anchor = g.adjacent(w, a);
            // adjacent to `last`, maybe to `a`, and nothing else on the path
            if self.touch[w.index()] != 1 + u32::from(touches_anchor) {
                continue;
            }
            if touches_anchor {
                if self.path.len() >= 3 && p1 < w {
                    self.path.push(w);
                    let flow = visit(&self.path);
                    self.path.pop();
                    if flow == ControlFlow::Break(()) {
                        return Ok(flow);
                    }
                }
                continue;
            }
            self.push(w)?;
            let flow = self.extend(a, visit);
            self.pop();
            if flow? == ControlFlow::Break(()) {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

fn search_first(
    g: &SimpleGraph,
    budget: u64,
    accept: impl Fn(usize) -> bool,
) -> Result<HoleSearchReport, OracleError> {
    let mut found = None;
    let mut s = Search::new(g, budget);
    let _ = s.run(&mut |cycle: &[VertexId]| {
        if accept(cycle.len()) {
            found = Some(cycle.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(HoleSearchReport { found, nodes_explored: s.explored, budget })
}

/// An induced cycle of length at least `min_len`, if one exists.
pub fn find_chordless_cycle(g: &SimpleGraph, min_len: usize, budget: u64) -> Result<HoleSearchReport, OracleError> {
    if min_len < 4 {
        return Err(OracleError::BadMinLength(min_len));
    }
    search_first(g, budget, |len| len >= min_len)
}

/// An induced odd cycle of length at least five, if one exists.
pub fn find_odd_hole(g: &SimpleGraph, budget: u64) -> Result<HoleSearchReport, OracleError> {
    search_first(g, budget, |len| len >= 5 && len % 2 == 1)
}

/// Every induced cycle of length at least four, each exactly once.
pub fn induced_cycles(g: &SimpleGraph, budget: u64) -> Result<Vec<Vec<VertexId>>, OracleError> {
    let mut out = Vec::new();
    let _ = Search::new(g, budget).run(&mut |cycle: &[VertexId]| {
        out.push(cycle.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Planar graphs are perfect iff they have no odd hole: the complement of
/// `C_n` is non-planar for `n >= 7` and the complement of `C_5` is `C_5`.
pub fn is_perfect_oracle(t: &NearTriangulation, budget: u64) -> Result<bool, OracleError> {
    Ok(find_odd_hole(t.adjacency(), budget)?.found.is_none())
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateFlaw {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("vertex {0} repeats")]
    RepeatedVertex(VertexId),
    #[error("cycle of length {0} is too short")]
    TooShort(usize),
    #[error("consecutive vertices {0} and {1} are not adjacent (cycle not closed)")]
    NotClosed(VertexId, VertexId),
    #[error("chord {0}-{1}")]
    Chord(VertexId, VertexId),
    #[error("cycle length {0} is even")]
    EvenLength(usize),
    #[error("hub {hub} is not adjacent to rim vertex {rim}")]
    SpokeMissing { hub: VertexId, rim: VertexId },
    #[error("hub {0} lies on its own rim or hole")]
    HubOnCycle(VertexId),
    #[error("hubs {0} and {1} are not adjacent")]
    HubsNotAdjacent(VertexId, VertexId),
    #[error("hole vertex {0} is adjacent to none of x, y, z")]
    DetachedHoleVertex(VertexId),
    #[error("neighbors of hub {0} inside the certificate do not form an even wheel rim")]
    NotEvenWheel(VertexId),
}

fn check_ids(g: &SimpleGraph, ids: &[VertexId]) -> Result<(), CertificateFlaw> {
    let mut seen = BTreeSet::new();
    for &u in ids {
        if !g.contains(u) {
            return Err(CertificateFlaw::UnknownVertex(u));
        }
        if !seen.insert(u) {
            return Err(CertificateFlaw::RepeatedVertex(u));
        }
    }
    Ok(())
}

/// Induced cycle: consecutive vertices adjacent, no other adjacency.
fn check_induced_cycle(g: &SimpleGraph, cycle: &[VertexId], min_len: usize) -> Result<(), CertificateFlaw> {
    check_ids(g, cycle)?;
    let k = cycle.len();
    if k < min_len {
        return Err(CertificateFlaw::TooShort(k));
    }
    for i in 0..k {
        let (a, b) = (cycle[i], cycle[(i + 1) % k]);
        if !g.adjacent(a, b) {
            return Err(CertificateFlaw::NotClosed(a, b));
        }
        for j in i + 2..k {
            if (i, j) != (0, k - 1) && g.adjacent(cycle[i], cycle[j]) {
                return Err(CertificateFlaw::Chord(cycle[i], cycle[j]));
            }
        }
    }
    Ok(())
}

fn check_wheel(g: &SimpleGraph, w: &WheelCertificate) -> Result<(), CertificateFlaw> {
    if !g.contains(w.hub) {
        return Err(CertificateFlaw::UnknownVertex(w.hub));
    }
    if w.rim.contains(&w.hub) {
        return Err(CertificateFlaw::HubOnCycle(w.hub));
    }
    check_induced_cycle(g, &w.rim, 4)?;
    if let Some(&r) = w.rim.iter().find(|&&r| !g.adjacent(w.hub, r)) {
        return Err(CertificateFlaw::SpokeMissing { hub: w.hub, rim: r });
    }
    Ok(())
}

fn check_odd_hole(g: &SimpleGraph, h: &OddHoleCertificate) -> Result<(), CertificateFlaw> {
    check_induced_cycle(g, &h.cycle, 5)?;
    if h.cycle.len().is_multiple_of(2) {
        return Err(CertificateFlaw::EvenLength(h.cycle.len()));
    }
    Ok(())
}

fn check_w_delta(g: &SimpleGraph, d: &WDeltaCertificate) -> Result<(), CertificateFlaw> {
    let hubs = [d.x, d.y, d.z];
    check_ids(g, &hubs)?;
    for (a, b) in [(d.x, d.y), (d.y, d.z), (d.x, d.z)] {
        if !g.adjacent(a, b) {
            return Err(CertificateFlaw::HubsNotAdjacent(a, b));
        }
    }
    if let Some(&h) = hubs.iter().find(|h| d.hole.cycle.contains(h)) {
        return Err(CertificateFlaw::HubOnCycle(h));
    }
    check_odd_hole(g, &d.hole)?;
    if let Some(&u) = d.hole.cycle.iter().find(|&&u| hubs.iter().all(|&h| !g.adjacent(h, u))) {
        return Err(CertificateFlaw::DetachedHoleVertex(u));
    }
    // Inside the certificate's vertex set, each hub must be the center of an
    // even wheel: its neighbors form a chordless cycle of even length.
    let members: BTreeSet<VertexId> = hubs.iter().chain(&d.hole.cycle).copied().collect();
    for &h in &hubs {
        let nbrs: BTreeSet<VertexId> = g.neighbors(h).iter().copied().filter(|u| members.contains(u)).collect();
        if nbrs.len() % 2 == 1 || cycle_order(g, &nbrs).is_none() {
            return Err(CertificateFlaw::NotEvenWheel(h));
        }
    }
    Ok(())
}

/// Orders `set` as a chordless cycle if its induced subgraph is one.
pub(crate) fn cycle_order(g: &SimpleGraph, set: &BTreeSet<VertexId>) -> Option<Vec<VertexId>> {
    if set.len() < 4 {
        return None;
    }
    let inner = |u: VertexId| -> Vec<VertexId> {
        g.neighbors(u).iter().copied().filter(|w| set.contains(w)).collect()
    };
    if set.iter().any(|&u| inner(u).len() != 2) {
        return None;
    }
    let start = *set.iter().next()?;
    let first = inner(start);
    let mut order = vec![start];
    let (mut prev, mut cur) = (start, first[0].min(first[1]));
    while cur != start {
        if order.len() > set.len() {
            return None;
        }
        order.push(cur);
        let ws = inner(cur);
        let next = if ws[0] == prev { ws[1] } else { ws[0] };
        prev = cur;
        cur = next;
    }
    (order.len() == set.len()).then_some(order)
}

/// Re-checks a certificate against `g` using adjacency alone.
pub fn verify_certificate(g: &SimpleGraph, c: &Certificate) -> Result<(), CertificateFlaw> {
    match c {
        Certificate::Wheel(w) => check_wheel(g, w),
        Certificate::OddHole(h) => check_odd_hole(g, h),
        Certificate::WDelta(d) => check_w_delta(g, d),
    }
}
