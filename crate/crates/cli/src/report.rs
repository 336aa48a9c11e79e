//! Machine-readable run reports and the text / JSON / CSV renderers.
//!
//! JSON reports follow the stable schema
//! `{ "command", "selector", "tolerances", "results", "version" }` with
//! every floating-point number rendered as a decimal string with 12
//! significant digits, so reports round-trip losslessly and repeated runs
//! are byte-identical.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Output format chosen with `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Human-readable text (default).
    Text,
    /// JSON with the stable report schema.
    Json,
    /// Flat tables for spreadsheets and sweeps.
    Csv,
}

/// Renders a float as a decimal string with 12 significant digits.
pub fn dec12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{:.11e}", x)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub selector: String,
    pub tolerances: TolerancesOut,
    pub results: Results,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TolerancesOut {
    pub identity: String,
    pub amplitude: String,
    pub cluster: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Results {
    Spectrum(SpectrumResults),
    Period(PeriodResults),
    Pst(PstResults),
    Verify(VerifyResults),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumResults {
    pub vertices: usize,
    pub edges: usize,
    pub regular: Option<usize>,
    pub bipartite: bool,
    pub adjacency: SpectrumOut,
    pub discriminant: SpectrumOut,
    pub evolution: AngleOut,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumOut {
    pub exact: bool,
    pub entries: Vec<SpectrumEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: String,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngleOut {
    pub exact: bool,
    pub entries: Vec<AngleEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngleEntry {
    pub angle: String,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodResults {
    pub spectral: PeriodMethodOut,
    pub bruteforce: PeriodMethodOut,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodMethodOut {
    pub periodic: bool,
    pub period: Option<u64>,
    pub evidence: Vec<EvidenceOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvidenceOut {
    pub angle: String,
    pub order: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PstResults {
    pub periodic: bool,
    pub period: Option<u64>,
    pub tau_max: u64,
    pub certificates: Vec<CertificateOut>,
    /// Criterion diagnostics, present for circulant selectors.
    pub criterion: Option<CriterionOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateOut {
    pub source: usize,
    pub target: usize,
    pub time: u64,
    pub phase_re: String,
    pub phase_im: String,
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionOut {
    /// Number of (u, v, tau) cells on which the criterion was required to
    /// agree with the brute-force amplitudes.
    pub agreement_cells: usize,
    pub diagnostics: Vec<TauDiagnostic>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TauDiagnostic {
    pub tau: u64,
    /// Condition (ii): every indexed Chebyshev value is ±1.
    pub all_unimodular: bool,
    /// Condition (iii): consecutive values alternate in sign.
    pub alternating: bool,
    /// A value failed (ii) by less than 1e-3: numerically thin verdict.
    pub low_margin: bool,
    pub t_values: Vec<String>,
    /// Ordered pairs certified at this tau (condition (i) picks them).
    pub certified_pairs: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyResults {
    pub suite: String,
    pub n_max: usize,
    pub checks: Vec<CheckOut>,
    pub all_pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOut {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Renders the report in the requested format.
pub fn render(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => render_text(report),
        Format::Csv => render_csv(report),
    }
}

fn render_text(report: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", report.command, report.selector);
    match &report.results {
        Results::Spectrum(r) => {
            let shape = match r.regular {
                Some(k) => format!("{k}-regular"),
                None => "not regular".to_string(),
            };
            let _ = writeln!(
                out,
                "graph: {} vertices, {} edges, {shape}, bipartite: {}",
                r.vertices, r.edges, r.bipartite
            );
            for (name, spectrum) in [("adjacency", &r.adjacency), ("discriminant", &r.discriminant)]
            {
                let _ = writeln!(
                    out,
                    "{name} spectrum ({}):",
                    if spectrum.exact { "exact" } else { "numeric" }
                );
                for e in &spectrum.entries {
                    let _ = writeln!(out, "  {}  x{}", e.value, e.multiplicity);
                }
            }
            let _ = writeln!(
                out,
                "evolution spectrum, angles in [0, 2pi) ({}):",
                if r.evolution.exact { "exact" } else { "numeric" }
            );
            for e in &r.evolution.entries {
                let _ = writeln!(out, "  {}  x{}", e.angle, e.multiplicity);
            }
        }
        Results::Period(r) => {
            for (name, m) in [("spectral", &r.spectral), ("bruteforce", &r.bruteforce)] {
                let period = match m.period {
                    Some(p) => format!("period {p}"),
                    None => "no period found".to_string(),
                };
                let _ = writeln!(out, "{name}: periodic: {}, {period}", m.periodic);
                for e in &m.evidence {
                    let order = match e.order {
                        Some(q) => format!("order {q}"),
                        None => "no finite order".to_string(),
                    };
                    let _ = writeln!(out, "  angle {}  ->  {order}", e.angle);
                }
            }
            let _ = writeln!(out, "methods agree: {}", r.agree);
        }
        Results::Pst(r) => {
            let period = match r.period {
                Some(p) => format!("period {p}"),
                None => "not periodic within the scan".to_string(),
            };
            let _ = writeln!(
                out,
                "periodic: {} ({period}); searched tau <= {}",
                r.periodic, r.tau_max
            );
            if r.certificates.is_empty() {
                let _ = writeln!(out, "no perfect state transfer found");
            } else {
                let _ = writeln!(out, "certificates (source -> target at time, phase):");
                for c in &r.certificates {
                    let _ = writeln!(
                        out,
                        "  {} -> {} at tau = {}, phase = {} + {}i  [{}]",
                        c.source, c.target, c.time, c.phase_re, c.phase_im, c.method
                    );
                }
            }
            if let Some(criterion) = &r.criterion {
                let _ = writeln!(
                    out,
                    "criterion vs brute force: agreed on {} cells",
                    criterion.agreement_cells
                );
                let _ = writeln!(out, "criterion diagnostics per tau:");
                for d in &criterion.diagnostics {
                    let pairs = d
                        .certified_pairs
                        .iter()
                        .map(|p| format!("{}->{}", p[0], p[1]))
                        .collect::<Vec<_>>()
                        .join(", ");
                    let _ = writeln!(
                        out,
                        "  tau {}: unimodular: {}, alternating: {}{}, certified: [{pairs}]",
                        d.tau,
                        d.all_unimodular,
                        d.alternating,
                        if d.low_margin { ", low margin" } else { "" },
                    );
                }
            }
        }
        Results::Verify(r) => {
            let _ = writeln!(out, "suite {} (n_max {})", r.suite, r.n_max);
            for c in &r.checks {
                let _ = writeln!(
                    out,
                    "  [{}] {} — {}",
                    if c.pass { "pass" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            let _ = writeln!(out, "all checks pass: {}", r.all_pass);
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_csv(report: &RunReport) -> String {
    let mut out = String::new();
    match &report.results {
        Results::Spectrum(r) => {
            let _ = writeln!(out, "section,value,multiplicity,exact");
            for (name, spectrum) in [("adjacency", &r.adjacency), ("discriminant", &r.discriminant)]
            {
                for e in &spectrum.entries {
                    let _ =
                        writeln!(out, "{name},{},{},{}", e.value, e.multiplicity, spectrum.exact);
                }
            }
            for e in &r.evolution.entries {
                let _ = writeln!(
                    out,
                    "evolution,{},{},{}",
                    e.angle, e.multiplicity, r.evolution.exact
                );
            }
        }
        Results::Period(r) => {
            let _ = writeln!(out, "kind,periodic,period,angle,order");
            for (name, m) in [("spectral", &r.spectral), ("bruteforce", &r.bruteforce)] {
                let _ = writeln!(
                    out,
                    "{name},{},{},,",
                    m.periodic,
                    m.period.map(|p| p.to_string()).unwrap_or_default()
                );
                for e in &m.evidence {
                    let _ = writeln!(
                        out,
                        "{name}-evidence,,,{},{}",
                        e.angle,
                        e.order.map(|q| q.to_string()).unwrap_or_default()
                    );
                }
            }
        }
        Results::Pst(r) => {
            let _ = writeln!(out, "source,target,time,phase_re,phase_im,method");
            for c in &r.certificates {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    c.source, c.target, c.time, c.phase_re, c.phase_im, c.method
                );
            }
        }
        Results::Verify(r) => {
            let _ = writeln!(out, "suite,check,pass,detail");
            for c in &r.checks {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    r.suite,
                    csv_field(&c.name),
                    c.pass,
                    csv_field(&c.detail)
                );
            }
        }
    }
    out
}
