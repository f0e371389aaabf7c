//! Line-oriented certificates.
//!
//! ```text
//! VERDICT method
//! T u v          tree edge
//! F u v          factor edge
//! P i:v,v,...    partition part
//! R reason ...   nonexistence reason
//! V true|false   payload re-checked by a verifier
//! ```

use std::fmt;

use oddspan::families::NonexistenceReason;
use oddspan::packing::PartitionCertificate;
use oddspan::{EdgeSet, Vertex};

use crate::io::Labeled;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Exists,
    NotExists,
    Unknown,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Exists => 0,
            Verdict::NotExists => 1,
            Verdict::Unknown => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Exists => "EXISTS",
            Verdict::NotExists => "NOT_EXISTS",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub method: String,
    pub payload: Vec<String>,
    pub verified: bool,
}

impl Certificate {
    pub fn new(verdict: Verdict, method: impl Into<String>) -> Self {
        Certificate { verdict, method: method.into(), payload: Vec::new(), verified: false }
    }

    pub fn verified(mut self, ok: bool) -> Self {
        self.verified = ok;
        self
    }

    pub fn edges(mut self, tag: char, edges: &EdgeSet, g: &Labeled) -> Self {
        for (u, v) in edges.iter() {
            self.payload.push(format!("{tag} {} {}", g.label(u), g.label(v)));
        }
        self
    }

    pub fn parts(mut self, parts: &[Vec<Vertex>], g: &Labeled) -> Self {
        for (i, part) in parts.iter().enumerate() {
            let members: Vec<&str> = part.iter().map(|&v| g.label(v)).collect();
            self.payload.push(format!("P {i}:{}", members.join(",")));
        }
        self
    }

    pub fn reason(mut self, text: impl AsRef<str>) -> Self {
        self.payload.push(format!("R {}", text.as_ref()));
        self
    }

    pub fn partition(self, cert: &PartitionCertificate, g: &Labeled) -> Self {
        self.reason(format!("crossing-edges {} parts {}", cert.cross_edges, cert.parts.len())).parts(&cert.parts, g)
    }

    pub fn nonexistence(self, reason: &NonexistenceReason, g: &Labeled) -> Self {
        let names = |vs: &[Vertex]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(",");
        match reason {
            NonexistenceReason::BipartiteBothPartsEven(bp) => {
                self.reason(reason.kind()).parts(&[bp.left.clone(), bp.right.clone()], g)
            }
            NonexistenceReason::BridgeEvenSides { bridge: (u, v) } => {
                self.reason(format!("{} {} {}", reason.kind(), g.label(*u), g.label(*v)))
            }
            NonexistenceReason::Disconnected { component } => {
                self.reason(reason.kind()).parts(std::slice::from_ref(component), g)
            }
            NonexistenceReason::SplitCondition(sp) => {
                self.reason(format!("{} X:{} Y:{}", reason.kind(), names(&sp.x), names(&sp.y)))
            }
            NonexistenceReason::ExcludedFamily(family) => self.reason(format!("{} {family}", reason.kind())),
            NonexistenceReason::OddOrder => self.reason(format!("{} {}", reason.kind(), g.graph.order())),
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!("{} {}\n", self.verdict, self.method);
        for line in &self.payload {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!("V {}\n", self.verified));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use oddspan::Graph;

    #[test]
    fn renders_lines() {
        let g = Labeled::plain(Graph::from_edges(3, [(0, 1), (1, 2)]));
        let cert = Certificate::new(Verdict::Exists, "demo")
            .edges('T', &g.graph.edge_set(), &g)
            .parts(&[vec![0, 2], vec![1]], &g)
            .verified(true);
        assert_eq!(cert.render(), "EXISTS demo\nT 0 1\nT 1 2\nP 0:0,2\nP 1:1\nV true\n");
        assert_eq!(Verdict::NotExists.exit_code(), 1);
    }
}
