//! Witnesses of non-chordality and non-perfection, and their line format.
//!
//! ```text
//! CERT wheel hub=1 rim=2,3,4,5,6
//! CERT oddhole cycle=2,3,4,5,6
//! CERT wdelta x=1 y=2 z=3 hole=4,5,6,7,8,9,10,11,12
//! ```

use std::fmt;

use crate::plane::VertexId;

/// An induced wheel: `hub` joined to every vertex of the chordless cycle `rim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelCertificate {
    pub hub: VertexId,
    pub rim: Vec<VertexId>,
}

/// An induced odd cycle of length at least five.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddHoleCertificate {
    pub cycle: Vec<VertexId>,
}

/// Three mutually adjacent even-wheel hubs whose joint neighborhood, hubs
/// removed, is an odd hole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WDeltaCertificate {
    pub x: VertexId,
    pub y: VertexId,
    pub z: VertexId,
    pub hole: OddHoleCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Wheel(WheelCertificate),
    OddHole(OddHoleCertificate),
    WDelta(WDeltaCertificate),
}

impl WheelCertificate {
    /// `k` in `W_k`.
    pub fn order(&self) -> usize {
        self.rim.len() + 1
    }

    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Self {
        WheelCertificate { hub: f(self.hub), rim: self.rim.iter().map(|&u| f(u)).collect() }
    }
}

impl OddHoleCertificate {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Self {
        OddHoleCertificate { cycle: self.cycle.iter().map(|&u| f(u)).collect() }
    }
}

impl WDeltaCertificate {
    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Self {
        WDeltaCertificate { x: f(self.x), y: f(self.y), z: f(self.z), hole: self.hole.relabel(&f) }
    }
}

fn join(vs: &[VertexId]) -> String {
    vs.iter().map(|u| u.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Wheel(w) => write!(f, "CERT wheel hub={} rim={}", w.hub, join(&w.rim)),
            Certificate::OddHole(h) => write!(f, "CERT oddhole cycle={}", join(&h.cycle)),
            Certificate::WDelta(d) => {
                write!(f, "CERT wdelta x={} y={} z={} hole={}", d.x, d.y, d.z, join(&d.hole.cycle))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed certificate line: {0}")]
pub struct CertificateSyntaxError(pub String);

impl std::str::FromStr for Certificate {
    type Err = CertificateSyntaxError;

    fn from_str(line: &str) -> Result<Self, Self::Err> {
        let bad = || CertificateSyntaxError(line.to_string());
        let mut words = line.split_whitespace();
        if words.next() != Some("CERT") {
            return Err(bad());
        }
        let kind = words.next().ok_or_else(bad)?;
        let mut fields = std::collections::BTreeMap::new();
        for w in words {
            let (k, val) = w.split_once('=').ok_or_else(bad)?;
            if fields.insert(k, val).is_some() {
                return Err(bad());
            }
        }
        let one = |k: &str| -> Result<VertexId, CertificateSyntaxError> {
            fields.get(k).and_then(|s| s.parse().ok()).and_then(VertexId::new).ok_or_else(bad)
        };
        let list = |k: &str| -> Result<Vec<VertexId>, CertificateSyntaxError> {
            let s = fields.get(k).ok_or_else(bad)?;
            s.split(',')
                .map(|p| p.parse().ok().and_then(VertexId::new).ok_or_else(bad))
                .collect()
        };
        let expect_keys = |keys: &[&str]| -> Result<(), CertificateSyntaxError> {
            if fields.len() == keys.len() && keys.iter().all(|k| fields.contains_key(k)) {
                Ok(())
            } else {
                Err(bad())
            }
        };
        match kind {
            "wheel" => {
                expect_keys(&["hub", "rim"])?;
                Ok(Certificate::Wheel(WheelCertificate { hub: one("hub")?, rim: list("rim")? }))
            }
            "oddhole" => {
                expect_keys(&["cycle"])?;
                Ok(Certificate::OddHole(OddHoleCertificate { cycle: list("cycle")? }))
            }
            "wdelta" => {
                expect_keys(&["x", "y", "z", "hole"])?;
                Ok(Certificate::WDelta(WDeltaCertificate {
                    x: one("x")?,
                    y: one("y")?,
                    z: one("z")?,
                    hole: OddHoleCertificate { cycle: list("hole")? },
                }))
            }
            _ => Err(bad()),
        }
    }
}
