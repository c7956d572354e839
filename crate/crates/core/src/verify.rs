//! Corpus-scale checking of the bounds against exact `f_k` values.
//!
//! Each `(instance, k)` pair gets an exact value (forest DP within the size
//! guards, otherwise the exhaustive oracle for small graphs) and one entry per
//! requested claim. Results come back in instance order whatever the
//! scheduling.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    asymptotic_report, corollary1_check, corollary2_entry, corollary2_min_t, lemma2_entry, lemma3_min_t,
    moore_entry, theorem1_entry, theorem1_min_t, theorem2_entry, theorem2_min_t, theorem3_entry,
    theorem3_min_t, Claim, ClaimEntry, Status,
};
use crate::certificate::{Method, RemovalCertificate};
use crate::constructive::{equalize3_forest, girth5_equalize, ConstructError};
use crate::dp::{compute_fk_forest_with, DpError, SolveOptions};
use crate::generate::{GeneratorConfig, Instance};
use crate::graph::{Girth, Graph};
use crate::io::{parse_graph, write_edge_list};
use crate::oracle::{brute_force_fk, DEFAULT_LIMIT};

/// Largest forest the DP accepts for a given `k` unless forced.
pub fn dp_size_guard(k: usize) -> usize {
    match k {
        0..=2 => 150,
        3 => 90,
        _ => 40,
    }
}

/// A corpus file: the `k` values to check and the instance batches.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Corpus {
    pub k: Vec<usize>,
    pub instances: Vec<GeneratorConfig>,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Worker threads; 0 uses the ambient rayon pool.
    pub jobs: usize,
    /// Per `(instance, k)` budget for the exact computation.
    pub timeout: Option<Duration>,
    /// Ignore the DP size guards.
    pub force: bool,
    /// Largest order handed to the exhaustive oracle.
    pub brute_limit: usize,
    /// Moore exponents checked by the `moore` claim.
    pub moore_p: Vec<u32>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { jobs: 0, timeout: None, force: false, brute_limit: DEFAULT_LIMIT, moore_p: vec![2, 3] }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub index: usize,
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub f_k: Option<usize>,
    pub method: Option<Method>,
    pub certificate: Option<RemovalCertificate>,
    /// Whether the certificate survived a write/parse round trip of the instance.
    pub certificate_valid: Option<bool>,
    pub elapsed_ms: u128,
    pub entries: Vec<ClaimEntry>,
    /// Why the instance could not be generated or solved.
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    /// Violated entries plus invalid certificates.
    pub fail: usize,
    pub vacuous: usize,
    pub skip: usize,
    pub report: usize,
    /// Instances that failed to generate.
    pub errors: usize,
}

impl Summary {
    pub fn of(results: &[RunResult]) -> Summary {
        let mut s = Summary::default();
        for r in results {
            if r.error.is_some() && r.entries.is_empty() {
                s.errors += 1;
            }
            if r.certificate_valid == Some(false) {
                s.fail += 1;
            }
            for e in &r.entries {
                match e.status {
                    Status::Pass => s.pass += 1,
                    Status::Violated => s.fail += 1,
                    Status::Vacuous => s.vacuous += 1,
                    Status::Skipped => s.skip += 1,
                    Status::ReportOnly => s.report += 1,
                }
            }
        }
        s
    }

    pub fn ok(&self) -> bool {
        self.fail == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRun {
    pub results: Vec<RunResult>,
    pub summary: Summary,
}

/// Exact `f_k` with its certificate, or the reason it was not computed.
pub fn exact_fk(g: &Graph, k: usize, opts: &VerifyOptions) -> Result<RemovalCertificate, String> {
    if g.is_forest() {
        if g.order() > dp_size_guard(k) && !opts.force {
            return Err(format!("order {} above the DP size guard {} for k={k}", g.order(), dp_size_guard(k)));
        }
        let solve = SolveOptions { jobs: 1, prune: true, deadline: opts.timeout.map(|d| Instant::now() + d) };
        return match compute_fk_forest_with(g, k, &solve) {
            Ok(sol) => Ok(sol.certificate),
            Err(DpError::Timeout) => Err("timeout".to_string()),
            Err(e) => Err(e.to_string()),
        };
    }
    brute_force_fk(g, k, opts.brute_limit).map(|(_, c)| c).map_err(|e| e.to_string())
}

fn certificate_round_trips(g: &Graph, cert: &RemovalCertificate, k: usize) -> bool {
    parse_graph(&write_edge_list(g)).map_or(false, |h| h == *g && cert.validate(&h, k).is_ok())
}

fn construct_entry(
    claim: Claim,
    hypothesis: String,
    bound: usize,
    built: Result<RemovalCertificate, ConstructError>,
    g: &Graph,
    k: usize,
    fk: Option<usize>,
) -> ClaimEntry {
    let (holds, conclusion) = match built {
        Ok(c) => {
            let ok = c.size() <= bound && certificate_round_trips(g, &c, k);
            (ok, format!("{} certificate, |X|={} <= {bound}", c.method, c.size()))
        }
        Err(e) => (false, format!("construction failed: {e}")),
    };
    ClaimEntry::decide(claim, hypothesis, Some(true), conclusion, Some(holds), fk)
}

/// Entries for one claim on one `(graph, k)`. Claims tied to a specific `k`
/// produce nothing for other values.
pub fn claim_entries(
    claim: Claim,
    g: &Graph,
    extremal_t: Option<usize>,
    k: usize,
    fk: Option<usize>,
    opts: &VerifyOptions,
) -> Vec<ClaimEntry> {
    let profile = g.degree_profile();
    let forest = g.is_forest();
    let girth5 = g.girth() >= Girth::Finite(5);
    match claim {
        Claim::OracleEquiv => {
            if !forest || g.order() > opts.brute_limit {
                return vec![ClaimEntry::decide(
                    claim,
                    format!("forest={forest}, n={} <= {}", g.order(), opts.brute_limit),
                    Some(false),
                    String::new(),
                    None,
                    fk,
                )];
            }
            let brute = brute_force_fk(g, k, opts.brute_limit).ok().map(|(v, _)| v);
            vec![ClaimEntry::decide(
                claim,
                format!("forest, n={}", g.order()),
                Some(true),
                format!("dp {} = oracle {}", show(fk), show(brute)),
                fk.zip(brute).map(|(a, b)| a == b),
                fk,
            )]
        }
        Claim::Thm1 if k == 2 => vec![theorem1_entry(g, theorem1_min_t(g.size()), fk).expect("t >= 1")],
        Claim::Thm2 if k == 3 => vec![theorem2_entry(g, theorem2_min_t(&profile), fk).expect("t >= 2")],
        Claim::Cor2 if k == 3 => vec![corollary2_entry(g, corollary2_min_t(g.size()), fk).expect("t >= 2")],
        Claim::Cor1 if k == 3 => {
            let Some(f3) = fk else {
                return vec![ClaimEntry::skipped(claim, "f_3 unknown")];
            };
            if !forest {
                return vec![ClaimEntry::decide(claim, "forest".into(), Some(false), String::new(), None, fk)];
            }
            if f3 <= 2 {
                return vec![ClaimEntry::decide(claim, format!("f_3 = {f3} > 2"), Some(false), String::new(), None, fk)];
            }
            (2..f3)
                .map(|t| corollary1_check(&profile, t).expect("f_3 > t leaves at least t + 3 vertices").entry(fk))
                .collect()
        }
        Claim::Thm2Cert if k == 3 => {
            if !forest {
                return vec![ClaimEntry::decide(claim, "forest".into(), Some(false), String::new(), None, fk)];
            }
            let t = theorem2_min_t(&profile);
            let hyp = format!("forest, t={t}");
            vec![construct_entry(claim, hyp, t, equalize3_forest(g, t), g, 3, fk)]
        }
        Claim::Lemma2 if k == 3 => match extremal_t {
            Some(t) => vec![lemma2_entry(t, g, fk)],
            None => Vec::new(),
        },
        Claim::Thm3 => {
            let t = theorem3_min_t(&profile, k);
            vec![theorem3_entry(g, k, t, fk).expect("t >= (k-1)^2")]
        }
        Claim::Lemma3Cert => {
            if !girth5 {
                return vec![ClaimEntry::decide(claim, format!("girth={} >= 5", g.girth()), Some(false), String::new(), None, fk)];
            }
            let t = lemma3_min_t(&profile, k);
            let hyp = format!("girth={} >= 5, t={t}", g.girth());
            vec![construct_entry(claim, hyp, t, girth5_equalize(g, k, t), g, k, fk)]
        }
        Claim::Moore => opts.moore_p.iter().map(|&p| moore_entry(g, p)).collect(),
        Claim::Cor3 | Claim::Cor4 | Claim::Cor5 => asymptotic_report(g, k, 2, fk)
            .into_iter()
            .filter(|e| e.claim == claim)
            .collect(),
        _ => Vec::new(),
    }
}

fn show(v: Option<usize>) -> String {
    v.map_or_else(|| "?".to_string(), |x| x.to_string())
}

/// Checks every claim on one graph for one `k`.
pub fn verify_instance(
    index: usize,
    instance: &Instance,
    k: usize,
    claims: &[Claim],
    opts: &VerifyOptions,
) -> RunResult {
    let start = Instant::now();
    let g = &instance.graph;
    let exact = exact_fk(g, k, opts);
    let (fk, certificate, error) = match exact {
        Ok(c) => (Some(c.size()), Some(c), None),
        Err(e) => (None, None, Some(e)),
    };
    let certificate_valid = certificate.as_ref().map(|c| certificate_round_trips(g, c, k));
    let mut entries = Vec::new();
    for &claim in claims {
        entries.extend(claim_entries(claim, g, instance.extremal_t, k, fk, opts));
    }
    RunResult {
        index,
        instance: instance.name.clone(),
        n: g.order(),
        m: g.size(),
        k,
        f_k: fk,
        method: certificate.as_ref().map(|c| c.method),
        certificate,
        certificate_valid,
        elapsed_ms: start.elapsed().as_millis(),
        entries,
        error,
    }
}

/// Generates every configured instance and checks `claims` for each `k`.
pub fn run_verification(
    corpus: &[GeneratorConfig],
    claims: &[Claim],
    ks: &[usize],
    opts: &VerifyOptions,
) -> VerificationRun {
    let generated: Vec<_> = corpus.iter().flat_map(|cfg| cfg.instances()).collect();
    let work: Vec<(usize, usize)> =
        (0..generated.len()).flat_map(|i| ks.iter().map(move |&k| (i, k))).collect();
    let run = || -> Vec<RunResult> {
        work.par_iter()
            .map(|&(i, k)| match &generated[i] {
                Ok(inst) => verify_instance(i, inst, k, claims, opts),
                Err(e) => RunResult {
                    index: i,
                    instance: format!("#{i}"),
                    n: 0,
                    m: 0,
                    k,
                    f_k: None,
                    method: None,
                    certificate: None,
                    certificate_valid: None,
                    elapsed_ms: 0,
                    entries: Vec::new(),
                    error: Some(e.to_string()),
                },
            })
            .collect()
    };
    let results = if opts.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build().expect("thread pool").install(run)
    };
    let summary = Summary::of(&results);
    VerificationRun { results, summary }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    index: usize,
    instance: &'a str,
    n: usize,
    m: usize,
    k: usize,
    f_k: String,
    method: String,
    certificate_valid: String,
    claim: String,
    status: String,
    hypothesis: &'a str,
    conclusion: &'a str,
    error: &'a str,
}

/// One row per claim entry, no timing columns, so equal runs give equal bytes.
pub fn to_csv(results: &[RunResult]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in results {
        let base = |claim: String, status: String, hypothesis, conclusion| CsvRow {
            index: r.index,
            instance: &r.instance,
            n: r.n,
            m: r.m,
            k: r.k,
            f_k: show(r.f_k),
            method: r.method.map(|m| m.to_string()).unwrap_or_default(),
            certificate_valid: r.certificate_valid.map(|b| b.to_string()).unwrap_or_default(),
            claim,
            status,
            hypothesis,
            conclusion,
            error: r.error.as_deref().unwrap_or(""),
        };
        if r.entries.is_empty() {
            w.serialize(base(String::new(), String::new(), "", "")).expect("in-memory write");
        }
        for e in &r.entries {
            w.serialize(base(e.claim.to_string(), e.status.to_string(), &e.hypothesis, &e.conclusion))
                .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

pub fn to_text(run: &VerificationRun) -> String {
    let mut out = String::new();
    for r in &run.results {
        out.push_str(&format!(
            "[{}] {} n={} m={} k={} f_k={} method={}",
            r.index,
            r.instance,
            r.n,
            r.m,
            r.k,
            show(r.f_k),
            r.method.map(|m| m.to_string()).unwrap_or_else(|| "-".into())
        ));
        if let Some(e) = &r.error {
            out.push_str(&format!(" ({e})"));
        }
        if r.certificate_valid == Some(false) {
            out.push_str(" INVALID CERTIFICATE");
        }
        out.push('\n');
        for e in &r.entries {
            out.push_str(&format!("    {:<12} {:<8} {} => {}\n", e.claim, e.status, e.hypothesis, e.conclusion));
        }
    }
    let s = run.summary;
    out.push_str(&format!(
        "pass={} fail={} vacuous={} skip={} report={} errors={}\n",
        s.pass, s.fail, s.vacuous, s.skip, s.report, s.errors
    ));
    out
}
