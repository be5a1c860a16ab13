//! The report every subcommand produces, printed as text or JSON.

use std::fmt::Write as _;

use hyperarr::exact_math::{Polynomial, Rational};
use hyperarr::selftest::CriterionOutcome;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrangement: Option<Summary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<ChiReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<Counts>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regions: Option<Vec<RegionEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parking: Option<ParkingReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ballots: Option<BallotReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orlik_solomon: Option<OsReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linial_roots: Option<RootsReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selftest: Option<Vec<CriterionOutcome>>,
    /// Agreement flags between independent computations.
    #[serde(default)]
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub name: String,
    pub dim: usize,
    pub hyperplanes: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiReport {
    pub polynomial: String,
    /// Ascending powers of `t`.
    pub coefficients: Vec<String>,
    pub methods: Vec<MethodEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodEntry {
    pub method: String,
    pub coefficients: Vec<String>,
    pub agrees: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub regions: u64,
    pub bounded: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionEntry {
    pub signs: String,
    pub sample: Vec<String>,
    pub bounded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParkingReport {
    pub n: usize,
    pub count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<LabelEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelEntry {
    pub signs: String,
    pub label: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallotReport {
    pub n: usize,
    pub sequences: Vec<BallotEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallotEntry {
    pub signs: String,
    pub ballot: Vec<i8>,
    pub bounded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OsReport {
    pub graded_dimensions: Vec<usize>,
    pub hilbert: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootsReport {
    pub n: usize,
    pub tolerance: f64,
    pub real_parts: Vec<f64>,
    pub imaginary_parts: Vec<f64>,
    pub max_deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chromatic: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub acyclic_orientations: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regions: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

pub fn rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

pub fn coefficients(p: &Polynomial) -> Vec<String> {
    rationals(p.coeffs())
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            ..Self::default()
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.selftest.as_ref().is_none_or(|s| s.iter().all(|o| o.passed))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        if let Some(s) = &self.arrangement {
            let _ = writeln!(
                w,
                "arrangement: {} (d = {}, n = {}, rank {})",
                s.name, s.dim, s.hyperplanes, s.rank
            );
        }
        if let Some(g) = &self.graph {
            let _ = writeln!(w, "graph: {} vertices, {} edges", g.vertices, g.edges.len());
            if let Some(c) = &g.chromatic {
                let _ = writeln!(w, "chromatic polynomial: {c}");
            }
            if let Some(a) = g.acyclic_orientations {
                let _ = writeln!(w, "acyclic orientations: {a}");
            }
            if let Some(r) = g.regions {
                let _ = writeln!(w, "regions of the graphical arrangement: {r}");
            }
        }
        if let Some(c) = self.chi.as_ref().filter(|_| self.graph.is_none()) {
            let _ = writeln!(w, "chi(t) = {}", c.polynomial);
            for m in &c.methods {
                let primes = m
                    .primes
                    .as_ref()
                    .map(|p| format!(" at primes {p:?}"))
                    .unwrap_or_default();
                let verdict = if m.agrees { "agrees" } else { "DISAGREES" };
                let _ = writeln!(w, "  {}{primes}: {verdict}", m.method);
            }
        }
        if let Some(c) = &self.counts {
            let _ = writeln!(w, "regions: {}\nbounded: {}", c.regions, c.bounded);
        }
        if let Some(rs) = &self.regions {
            for r in rs {
                let b = if r.bounded { "bounded" } else { "unbounded" };
                let _ = writeln!(w, "  {}  ({})  {b}", r.signs, r.sample.join(", "));
            }
        }
        if let Some(p) = &self.parking {
            let _ = writeln!(w, "parking functions of length {}: {}", p.n, p.count);
            for l in p.labels.iter().flatten() {
                let _ = writeln!(w, "  {}  {:?}", l.signs, l.label);
            }
        }
        if let Some(b) = &self.ballots {
            let _ = writeln!(w, "chamber regions of catalan({}): {}", b.n, b.sequences.len());
            for s in &b.sequences {
                let seq: Vec<String> = s.ballot.iter().map(|x| format!("{x:+}")).collect();
                let bounded = if s.bounded { "  bounded" } else { "" };
                let _ = writeln!(w, "  {}  {}{bounded}", s.signs, seq.join(" "));
            }
        }
        if let Some(o) = &self.orlik_solomon {
            let dims: Vec<String> = o.graded_dimensions.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                w,
                "graded dimensions: {}\nhilbert series: {}",
                dims.join(", "),
                o.hilbert
            );
        }
        if let Some(r) = &self.linial_roots {
            let _ = writeln!(w, "roots of chi(t)/t for linial({}):", r.n);
            for (re, im) in r.real_parts.iter().zip(&r.imaginary_parts) {
                let _ = writeln!(w, "  {re:.9} {im:+.9}i");
            }
            let _ = writeln!(
                w,
                "max |Re - n/2| = {:.3e} (tolerance {:e})",
                r.max_deviation, r.tolerance
            );
        }
        if let Some(outcomes) = &self.selftest {
            for o in outcomes {
                let verdict = if o.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(w, "{verdict} {:>2} {}: {}", o.id, o.title, o.detail);
            }
        }
        for c in self.checks.iter().filter(|c| !c.passed) {
            let _ = writeln!(w, "check failed: {}", c.name);
        }
        out
    }
}
