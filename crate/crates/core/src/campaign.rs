//! Differential fuzzing: deciders against exhaustive search.
//!
//! Each instance is generated from its own seed, judged by both sides, and
//! audited for the structural invariants the deciders rely on. Instances run
//! in parallel; the report lists them in corpus order and contains no timing,
//! so it is a pure function of the corpus and the budget.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::certificate::Certificate;
use crate::decide::{
    check_lemma1, find_w_delta, is_chordal, is_perfect, is_perfect_w5free, shared_faces,
    DecideError, PerfectVerdict,
};
use crate::generate::{Family, GenSpec};
use crate::instance::{parse_instance, serialize_instance};
use crate::oracle::{find_chordless_cycle, find_odd_hole, verify_certificate, OracleError, DEFAULT_BUDGET};
use crate::triangulation::{
    find_external_chords, find_separating_triangles, DecompositionTree, LeafClass, NearTriangulation,
    Separator,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CampaignConfig {
    pub max_n: usize,
    pub instances: usize,
    pub seed: u64,
    pub budget: u64,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig { max_n: 12, instances: 1000, seed: 42, budget: DEFAULT_BUDGET }
    }
}

impl fmt::Display for CampaignConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "fuzz max_n={} instances={} seed={} budget={}",
            self.max_n, self.instances, self.seed, self.budget
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub seed: u64,
    pub spec: String,
    pub decider: String,
    pub oracle: String,
}

/// A failed audit on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub seed: u64,
    pub spec: String,
    pub message: String,
}

/// Tallies of the individual audits that ran.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AuditCounts {
    pub identity_checks: usize,
    pub leaves: usize,
    pub wnear_leaves: usize,
    pub links: usize,
    pub shared_face_probes: usize,
    pub w_delta_checks: usize,
    pub certificates: usize,
    pub lemma_five_violations: usize,
}

impl AuditCounts {
    fn add(&mut self, o: &AuditCounts) {
        self.identity_checks += o.identity_checks;
        self.leaves += o.leaves;
        self.wnear_leaves += o.wnear_leaves;
        self.links += o.links;
        self.shared_face_probes += o.shared_face_probes;
        self.w_delta_checks += o.w_delta_checks;
        self.certificates += o.certificates;
        self.lemma_five_violations += o.lemma_five_violations;
    }
}

/// Everything learned from one instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub chordal: Option<(bool, bool)>,
    pub perfect: Option<(String, bool)>,
    pub failures: Vec<String>,
    pub budget: Vec<String>,
    pub counts: AuditCounts,
}

impl InstanceOutcome {
    /// Both sides reached a verdict on both properties.
    pub fn checked(&self) -> bool {
        self.chordal.is_some() && self.perfect.is_some()
    }

    pub fn agrees(&self) -> bool {
        let chordal_ok = matches!(self.chordal, Some((d, o)) if d == o);
        let perfect_ok = matches!(&self.perfect, Some((d, o)) if (d == "perfect") == *o);
        chordal_ok && perfect_ok
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CampaignReport {
    pub instances: usize,
    pub agreements: usize,
    pub disagreements: Vec<Disagreement>,
    pub invariant_failures: Vec<Finding>,
    pub budget_exhausted: Vec<Finding>,
    pub counts: AuditCounts,
}

impl CampaignReport {
    /// Merges outcomes in corpus order.
    pub fn from_outcomes<'a>(items: impl IntoIterator<Item = (&'a GenSpec, &'a InstanceOutcome)>) -> Self {
        let mut r = CampaignReport::default();
        for (spec, o) in items {
            r.instances += 1;
            r.counts.add(&o.counts);
            let label = spec.family.to_string();
            for m in &o.failures {
                r.invariant_failures.push(Finding { seed: spec.seed, spec: label.clone(), message: m.clone() });
            }
            for m in &o.budget {
                r.budget_exhausted.push(Finding { seed: spec.seed, spec: label.clone(), message: m.clone() });
            }
            if !o.checked() {
                continue;
            }
            if o.agrees() {
                r.agreements += 1;
            } else {
                let (dc, oc) = o.chordal.expect("checked");
                let (dp, op) = o.perfect.clone().expect("checked");
                let word = |b: bool, yes: &str, no: &str| if b { yes.to_string() } else { no.to_string() };
                r.disagreements.push(Disagreement {
                    seed: spec.seed,
                    spec: label,
                    decider: format!("{},{}", word(dc, "chordal", "not-chordal"), dp),
                    oracle: format!("{},{}", word(oc, "chordal", "not-chordal"), word(op, "perfect", "not-perfect")),
                });
            }
        }
        r
    }

    /// 0 when clean, 3 on any disagreement or invariant failure, otherwise 4
    /// if a verdict was lost to the budget.
    pub fn exit_code(&self) -> i32 {
        if !self.disagreements.is_empty() || !self.invariant_failures.is_empty() {
            3
        } else if !self.budget_exhausted.is_empty() {
            4
        } else {
            0
        }
    }

    pub fn is_clean(&self) -> bool {
        self.exit_code() == 0
    }
}

impl fmt::Display for CampaignReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.counts;
        writeln!(f, "instances {}", self.instances)?;
        writeln!(f, "agreements {}", self.agreements)?;
        writeln!(f, "disagreements {}", self.disagreements.len())?;
        writeln!(f, "invariant_failures {}", self.invariant_failures.len())?;
        writeln!(f, "budget_exhausted {}", self.budget_exhausted.len())?;
        writeln!(f, "identity_checks {}", c.identity_checks)?;
        writeln!(f, "leaves {} wnear {}", c.leaves, c.wnear_leaves)?;
        writeln!(f, "links_checked {}", c.links)?;
        writeln!(f, "shared_face_probes {}", c.shared_face_probes)?;
        writeln!(f, "w_delta_checks {}", c.w_delta_checks)?;
        writeln!(f, "certificates_verified {}", c.certificates)?;
        writeln!(f, "lemma_five_violations {}", c.lemma_five_violations)?;
        for d in &self.disagreements {
            writeln!(f, "DISAGREE seed={} spec={} decider={} oracle={}", d.seed, d.spec, d.decider, d.oracle)?;
        }
        for x in &self.invariant_failures {
            writeln!(f, "FAIL seed={} spec={} {}", x.seed, x.spec, x.message)?;
        }
        for x in &self.budget_exhausted {
            writeln!(f, "BUDGET seed={} spec={} {}", x.seed, x.spec, x.message)?;
        }
        let status = match self.exit_code() {
            0 => "ok",
            3 => "disagreement",
            _ => "budget-exhausted",
        };
        writeln!(f, "status {status}")
    }
}

/// The random near triangulations of a fuzz run, in corpus order.
///
/// Instance seeds are consecutive draws from a stream keyed by the campaign
/// seed; each instance's shape `(t, n_i, flips)` is drawn from its own seed,
/// with `n = t + n_i` uniform in `3..=max_n`.
pub fn fuzz_specs(max_n: usize, instances: usize, seed: u64) -> Vec<GenSpec> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    (0..instances)
        .map(|_| {
            let s: u64 = master.gen();
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let n = rng.gen_range(3..=max_n.max(3));
            let t = rng.gen_range(3..=n);
            let flips = rng.gen_range(0..=2 * n);
            GenSpec { family: Family::RandomNear { t, n_i: n - t, flips }, seed: s }
        })
        .collect()
}

/// Generates and checks every spec in parallel.
pub fn run_corpus(specs: &[GenSpec], budget: u64) -> CampaignReport {
    let outcomes: Vec<InstanceOutcome> = specs
        .par_iter()
        .map(|spec| match spec.generate() {
            Ok(t) => check_instance(&t, budget),
            Err(e) => InstanceOutcome { failures: vec![format!("generator: {e}")], ..Default::default() },
        })
        .collect();
    CampaignReport::from_outcomes(specs.iter().zip(&outcomes))
}

pub fn run_fuzz(config: &CampaignConfig) -> CampaignReport {
    run_corpus(&fuzz_specs(config.max_n, config.instances, config.seed), config.budget)
}

fn budget_note(what: &str, e: &OracleError) -> String {
    format!("{what}: {e}")
}

/// Runs every decider and audit on `t`.
pub fn check_instance(t: &NearTriangulation, budget: u64) -> InstanceOutcome {
    let mut out = InstanceOutcome::default();
    audit_structure(t, &mut out);

    let root = t.adjacency();
    let verify = |c: Option<Certificate>, out: &mut InstanceOutcome| {
        if let Some(c) = c {
            out.counts.certificates += 1;
            if let Err(flaw) = verify_certificate(root, &c) {
                out.failures.push(format!("certificate rejected: {c}: {flaw}"));
            }
        }
    };

    let chordal = is_chordal(t);
    let oracle_chordal = find_chordless_cycle(root, 4, budget);
    let decided_chordal = match chordal {
        Ok(v) => {
            verify(v.certificate(), &mut out);
            Some(v.is_chordal())
        }
        Err(e) => {
            record_decider_error("is_chordal", e, &mut out);
            None
        }
    };
    let oracle_chordal = match oracle_chordal {
        Ok(r) => Some(r.found.is_none()),
        Err(e) => {
            out.budget.push(budget_note("chordless-cycle oracle", &e));
            None
        }
    };
    if let (Some(d), Some(o)) = (decided_chordal, oracle_chordal) {
        out.chordal = Some((d, o));
    }

    let oracle_perfect = match find_odd_hole(root, budget) {
        Ok(r) => Some(r.found.is_none()),
        Err(e) => {
            out.budget.push(budget_note("odd-hole oracle", &e));
            None
        }
    };
    let decided_perfect = match is_perfect(t, budget) {
        Ok(v) => {
            verify(v.certificate(), &mut out);
            Some(v)
        }
        Err(DecideError::OracleBudgetExceeded { vertices, budget }) => {
            out.budget.push(format!("is_perfect leaf search on {vertices} vertices exceeded {budget}"));
            None
        }
        Err(e) => {
            record_decider_error("is_perfect", e, &mut out);
            None
        }
    };
    if let (Some(d), Some(o)) = (&decided_perfect, oracle_perfect) {
        out.perfect = Some((verdict_word(d).to_string(), o));
    }

    match is_perfect_w5free(t) {
        Ok(v) => {
            verify(v.certificate(), &mut out);
            match (&v, oracle_perfect) {
                (PerfectVerdict::NotW5Free(w), _) if w.rim.len() != 4 => {
                    out.failures.push(format!("W5 certificate with rim of length {}", w.rim.len()));
                }
                (PerfectVerdict::NotW5Free(_), _) | (_, None) => {}
                (v, Some(o)) if v.is_perfect() != o => {
                    out.failures.push(format!("is_perfect_w5free says {} but oracle perfect={o}", verdict_word(v)));
                }
                _ => {}
            }
        }
        Err(e) => record_decider_error("is_perfect_w5free", e, &mut out),
    }

    if decided_chordal == Some(true) && matches!(decided_perfect, Some(ref v) if !v.is_perfect()) {
        out.failures.push("chordal but not perfect".to_string());
    }

    let text = serialize_instance(t.graph());
    match parse_instance(&text) {
        Ok(g) if serialize_instance(&g) == text => {}
        Ok(_) => out.failures.push("serialization is not a fixed point".to_string()),
        Err(e) => out.failures.push(format!("serialized instance does not parse: {e}")),
    }
    out
}

fn verdict_word(v: &PerfectVerdict) -> &'static str {
    match v {
        PerfectVerdict::Perfect => "perfect",
        PerfectVerdict::NotPerfect(_) => "not-perfect",
        PerfectVerdict::NotW5Free(_) => "not-w5-free",
    }
}

fn record_decider_error(who: &str, e: DecideError, out: &mut InstanceOutcome) {
    if matches!(e, DecideError::LemmaFiveViolation { .. }) {
        out.counts.lemma_five_violations += 1;
    }
    out.failures.push(format!("{who}: {e}"));
}

/// Counting identities, decomposition shape, and the per-leaf local facts.
fn audit_structure(t: &NearTriangulation, out: &mut InstanceOutcome) {
    let s = t.stats();
    out.counts.identity_checks += 1;
    if !s.edge_face_identity() {
        out.failures.push(format!("3f != 2e - t ({s})"));
    }
    if !s.parity_identity() {
        out.failures.push(format!("parity of f and t differ ({s})"));
    }
    if !s.edge_count_identity() {
        out.failures.push(format!("e != 2n_e + 3n_i - 3 ({s})"));
    }
    let tree = match crate::triangulation::decompose(t) {
        Ok(tree) => tree,
        Err(e) => {
            out.failures.push(format!("decompose: {e}"));
            return;
        }
    };
    audit_splits(&tree, out);
    for (leaf, class) in tree.leaves() {
        out.counts.leaves += 1;
        if let Some(sep) = find_external_chords(leaf).into_iter().chain(find_separating_triangles(leaf)).next() {
            out.failures.push(format!("leaf still has {}", sep.map(|u| leaf.origin(u))));
        }
        let LeafClass::WNear { even_internal, min_internal_degree, .. } = class else {
            continue;
        };
        out.counts.wnear_leaves += 1;
        out.counts.links += leaf.internal_vertices().len();
        if let Err((u, e)) = check_lemma1(leaf) {
            out.failures.push(format!("link of {} is not a wheel: {e}", leaf.origin(u)));
        }
        let internal: Vec<_> = leaf.internal_vertices().iter().copied().collect();
        for &u in &internal {
            for &w in leaf.adjacency().neighbors(u) {
                if u < w && leaf.is_internal(w) && leaf.degree(u) % 2 == 0 && leaf.degree(w) % 2 == 0 {
                    out.counts.shared_face_probes += 1;
                    match shared_faces(leaf, u, w) {
                        Ok(f) if f.len() == 2 => {}
                        Ok(f) => out.failures.push(format!(
                            "wheels of {} and {} share {} faces",
                            leaf.origin(u),
                            leaf.origin(w),
                            f.len()
                        )),
                        Err(e) => out.failures.push(format!("shared_faces: {e}")),
                    }
                }
            }
        }
        if even_internal && min_internal_degree >= 6 {
            out.counts.w_delta_checks += 1;
            if let Err(e) = find_w_delta(leaf) {
                record_decider_error("find_w_delta", e, out);
            }
        }
    }
}

/// Child face counts: chords partition the faces, a separating triangle adds
/// itself as a face of the outer child.
fn audit_splits(tree: &DecompositionTree, out: &mut InstanceOutcome) {
    if let DecompositionTree::Split { piece, separator, left, right } = tree {
        let sum = left.piece().stats().f + right.piece().stats().f;
        let expected = match separator {
            Separator::ExternalChord(..) => piece.stats().f,
            Separator::SeparatingTriangle(..) => piece.stats().f + 1,
        };
        if sum != expected {
            out.failures.push(format!("split on {separator} gives {sum} faces, expected {expected}"));
        }
        audit_splits(left, out);
        audit_splits(right, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::ChordalVerdict;

    #[test]
    fn specs_are_reproducible_and_bounded() {
        let a = fuzz_specs(9, 200, 5);
        assert_eq!(a, fuzz_specs(9, 200, 5));
        assert_ne!(a, fuzz_specs(9, 200, 6));
        for s in &a {
            let Family::RandomNear { t, n_i, .. } = s.family else { panic!() };
            assert!(t >= 3 && t + n_i <= 9);
        }
    }

    #[test]
    fn tiny_campaign_is_all_chordal() {
        let specs = fuzz_specs(4, 10, 1);
        let r = run_corpus(&specs, DEFAULT_BUDGET);
        assert_eq!(r.instances, 10);
        assert_eq!(r.agreements, 10);
        assert!(r.is_clean(), "{r}");
        for spec in &specs {
            let t = spec.generate().unwrap();
            assert_eq!(is_chordal(&t).unwrap(), ChordalVerdict::Chordal);
            assert_eq!(is_perfect(&t, DEFAULT_BUDGET).unwrap(), PerfectVerdict::Perfect);
        }
    }

    #[test]
    fn exit_codes() {
        let mut r = CampaignReport::default();
        assert_eq!(r.exit_code(), 0);
        r.budget_exhausted.push(Finding { seed: 1, spec: "x".into(), message: "y".into() });
        assert_eq!(r.exit_code(), 4);
        r.invariant_failures.push(Finding { seed: 1, spec: "x".into(), message: "y".into() });
        assert_eq!(r.exit_code(), 3);
    }
}
