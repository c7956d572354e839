//! Upper-bound formulas for `f_k`, the extremal star forests `F_t`, and
//! per-instance checkers that keep hypothesis and conclusion apart.
//!
//! Everything that feeds a strict inequality is evaluated exactly with
//! `i128` rationals.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DegreeProfile, Girth, Graph};

pub type Rational = Ratio<i128>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("parameter {name} = {value} is out of range (needs {requirement})")]
    OutOfRange { name: &'static str, value: i128, requirement: String },
    #[error("degree profile has {len} entries, needs at least {needed}")]
    ProfileTooShort { len: usize, needed: usize },
}

fn require(name: &'static str, value: usize, ok: bool, requirement: impl Into<String>) -> Result<(), BoundError> {
    if ok {
        Ok(())
    } else {
        Err(BoundError::OutOfRange { name, value: value as i128, requirement: requirement.into() })
    }
}

fn choose2(x: i128) -> i128 {
    x * (x - 1) / 2
}

fn int(x: i128) -> Rational {
    Rational::from_integer(x)
}

// ---------------------------------------------------------------------------
// extremal family

/// `a_i` from its recursion: `a_1 = 1`, `a_2 = 3`,
/// `a_i = max(a_{i-1}, i - a_{i-1} + 2 a_{i-2})`.
pub fn a_sequence(i: usize) -> u64 {
    assert!(i >= 1, "the sequence starts at a_1");
    *a_prefix(i).last().unwrap()
}

/// `a_1, ..., a_t`.
pub fn a_prefix(t: usize) -> Vec<u64> {
    let mut a: Vec<i128> = Vec::with_capacity(t);
    for i in 1..=t {
        let next = match i {
            1 => 1,
            2 => 3,
            _ => a[i - 2].max(i as i128 - a[i - 2] + 2 * a[i - 3]),
        };
        a.push(next);
    }
    a.into_iter().map(|x| x as u64).collect()
}

/// `a_1 = 1` and `a_{2j} = a_{2j+1} = j^2 + j + 1`.
pub fn a_closed_form(i: usize) -> u64 {
    assert!(i >= 1, "the sequence starts at a_1");
    if i == 1 {
        return 1;
    }
    let j = (i / 2) as u64;
    j * j + j + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalFamilySpec {
    pub t: usize,
    pub a: Vec<u64>,
}

impl ExtremalFamilySpec {
    pub fn new(t: usize) -> Self {
        assert!(t >= 1, "F_t needs t >= 1");
        ExtremalFamilySpec { t, a: a_prefix(t) }
    }

    /// `K_{1,a_1} ∪ ... ∪ K_{1,a_t}`, star by star, center first.
    pub fn build(&self) -> Graph {
        let stars: Vec<Graph> = self.a.iter().map(|&a| Graph::star(a as usize)).collect();
        Graph::union_all(&stars)
    }
}

pub fn build_extremal_forest(t: usize) -> Graph {
    ExtremalFamilySpec::new(t).build()
}

/// Closed form for the number of edges of `F_t`.
pub fn extremal_size(t: usize) -> u64 {
    assert!(t >= 1, "F_t needs t >= 1");
    let k = int((t / 2) as i128);
    let value = if t % 2 == 1 {
        Rational::new(2, 3) * k * k * k + int(2) * k * k + Rational::new(10, 3) * k + int(1)
    } else {
        Rational::new(2, 3) * k * k * k + k * k + Rational::new(7, 3) * k
    };
    assert!(value.is_integer(), "m(F_t) is integral");
    value.to_integer() as u64
}

// ---------------------------------------------------------------------------
// bound formulas

/// `n(t) = (t^3 + 6t^2 + 17t + 12) / 6`; forests with fewer edges have `f_2 <= t`.
pub fn bound_theorem1(t: usize) -> Result<Rational, BoundError> {
    require("t", t, t >= 1, "t >= 1")?;
    let t = t as i128;
    Ok(Rational::new(t * t * t + 6 * t * t + 17 * t + 12, 6))
}

/// `C(t+2, 2) + 2`, the cap on `Δ_1 + 2Δ_2` for `f_3 <= t` on forests.
pub fn bound_theorem2(t: usize) -> Result<i128, BoundError> {
    require("t", t, t >= 2, "t >= 2")?;
    Ok(choose2(t as i128 + 2) + 2)
}

/// `t^3/18 + t^2/3 + 11t/18 + 1`; forests with fewer edges have `f_3 <= t`.
pub fn bound_corollary2(t: usize) -> Result<Rational, BoundError> {
    require("t", t, t >= 2, "t >= 2")?;
    let t = t as i128;
    Ok(Rational::new(t * t * t + 6 * t * t + 11 * t + 18, 18))
}

/// `t^3/18 + t^2/3 + 29t/18`, the lower bound on `Δ_1 + ... + Δ_t` when `f_3 > t`.
pub fn corollary1_sum_threshold(t: usize) -> Result<Rational, BoundError> {
    require("t", t, t >= 2, "t >= 2")?;
    let t = t as i128;
    Ok(Rational::new(t * t * t + 6 * t * t + 29 * t, 18))
}

/// The constant with `C((k-1)^2 + 2, 2) + c_k = k - 1`.
pub fn c_k(k: usize) -> Result<i128, BoundError> {
    require("k", k, k >= 2, "k >= 2")?;
    let k = k as i128;
    Ok((k - 1) - choose2((k - 1) * (k - 1) + 2))
}

/// `C(t+2, 2) + c_k`, the cap on `Δ_1 + 2Δ_2 + ... + (k-1)Δ_{k-1}`.
pub fn bound_theorem3(k: usize, t: usize) -> Result<i128, BoundError> {
    let c = c_k(k)?;
    require("t", t, t >= (k - 1) * (k - 1), format!("t >= (k-1)^2 = {}", (k - 1) * (k - 1)))?;
    Ok(choose2(t as i128 + 2) + c)
}

fn delta_or_zero(profile: &DegreeProfile, i: usize) -> i128 {
    if i <= profile.len() {
        profile.delta(i) as i128
    } else {
        0
    }
}

/// `Δ_1 + 2Δ_2`.
pub fn theorem2_lhs(profile: &DegreeProfile) -> i128 {
    delta_or_zero(profile, 1) + 2 * delta_or_zero(profile, 2)
}

/// `Δ_1 + 2Δ_2 + ... + (k-1)Δ_{k-1}`.
pub fn theorem3_lhs(profile: &DegreeProfile, k: usize) -> i128 {
    (1..k).map(|i| i as i128 * delta_or_zero(profile, i)).sum()
}

/// `Δ_1 + ... + Δ_{k-1} - (k-1)Δ_k`.
pub fn lemma3_lhs(profile: &DegreeProfile, k: usize) -> i128 {
    (1..k).map(|i| delta_or_zero(profile, i)).sum::<i128>() - (k as i128 - 1) * delta_or_zero(profile, k)
}

/// Smallest `t >= 1` with `m < n(t)`.
pub fn theorem1_min_t(m: usize) -> usize {
    (1..).find(|&t| int(m as i128) < bound_theorem1(t).unwrap()).unwrap()
}

/// Smallest `t >= 2` with `Δ_1 + 2Δ_2 <= C(t+2, 2) + 2`.
pub fn theorem2_min_t(profile: &DegreeProfile) -> usize {
    let lhs = theorem2_lhs(profile);
    (2..).find(|&t| lhs <= bound_theorem2(t).unwrap()).unwrap()
}

/// Smallest `t >= 2` with `m < t^3/18 + t^2/3 + 11t/18 + 1`.
pub fn corollary2_min_t(m: usize) -> usize {
    (2..).find(|&t| int(m as i128) < bound_corollary2(t).unwrap()).unwrap()
}

/// Smallest `t >= (k-1)^2` meeting the weighted degree cap.
pub fn theorem3_min_t(profile: &DegreeProfile, k: usize) -> usize {
    let lhs = theorem3_lhs(profile, k);
    ((k - 1) * (k - 1)..).find(|&t| lhs <= bound_theorem3(k, t).unwrap()).unwrap()
}

/// Smallest `t >= (k-1)^2` with `Δ_1 + ... + Δ_{k-1} - (k-1)Δ_k <= t`.
pub fn lemma3_min_t(profile: &DegreeProfile, k: usize) -> usize {
    let lhs = lemma3_lhs(profile, k).max(0) as usize;
    lhs.max((k - 1) * (k - 1))
}

/// `m <= 2 n^{(p+1)/p}`, decided exactly as `m^p <= 2^p n^{p+1}`.
pub fn moore_inequality(n: usize, m: usize, p: u32) -> bool {
    let lhs = (m as u128).checked_pow(p);
    let rhs = 2u128.pow(p).checked_mul((n as u128).pow(p + 1));
    match (lhs, rhs) {
        (Some(l), Some(r)) => l <= r,
        _ => (m as f64) <= 2.0 * (n as f64).powf((p as f64 + 1.0) / p as f64),
    }
}

// ---------------------------------------------------------------------------
// reports

/// A checkable claim or a report-only quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    OracleEquiv,
    Thm1,
    Thm2,
    Cor1,
    Cor2,
    Thm3,
    Lemma2,
    Lemma3Cert,
    Thm2Cert,
    Moore,
    Cor3,
    Cor4,
    Cor5,
}

impl Claim {
    pub const CHECKABLE: [Claim; 10] = [
        Claim::OracleEquiv,
        Claim::Thm1,
        Claim::Thm2,
        Claim::Cor1,
        Claim::Cor2,
        Claim::Thm3,
        Claim::Lemma2,
        Claim::Lemma3Cert,
        Claim::Thm2Cert,
        Claim::Moore,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Claim::OracleEquiv => "oracle-equiv",
            Claim::Thm1 => "thm1",
            Claim::Thm2 => "thm2",
            Claim::Cor1 => "cor1",
            Claim::Cor2 => "cor2",
            Claim::Thm3 => "thm3",
            Claim::Lemma2 => "lemma2",
            Claim::Lemma3Cert => "lemma3-cert",
            Claim::Thm2Cert => "thm2-cert",
            Claim::Moore => "moore",
            Claim::Cor3 => "cor3",
            Claim::Cor4 => "cor4",
            Claim::Cor5 => "cor5",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::CHECKABLE
            .into_iter()
            .chain([Claim::Cor3, Claim::Cor4, Claim::Cor5])
            .find(|c| c.tag() == s)
            .ok_or_else(|| format!("unknown claim {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Violated,
    /// The hypothesis does not hold, so nothing is claimed.
    Vacuous,
    ReportOnly,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "pass",
            Status::Violated => "VIOLATED",
            Status::Vacuous => "vacuous",
            Status::ReportOnly => "report",
            Status::Skipped => "skip",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimEntry {
    pub claim: Claim,
    pub hypothesis: String,
    pub hypothesis_holds: Option<bool>,
    pub conclusion: String,
    pub conclusion_holds: Option<bool>,
    pub exact_fk: Option<usize>,
    pub status: Status,
}

impl ClaimEntry {
    /// Violated only when the hypothesis holds and the conclusion fails.
    pub fn decide(
        claim: Claim,
        hypothesis: String,
        hypothesis_holds: Option<bool>,
        conclusion: String,
        conclusion_holds: Option<bool>,
        exact_fk: Option<usize>,
    ) -> Self {
        let status = match (hypothesis_holds, conclusion_holds) {
            (Some(false), _) => Status::Vacuous,
            (Some(true), Some(true)) => Status::Pass,
            (Some(true), Some(false)) => Status::Violated,
            _ => Status::Skipped,
        };
        ClaimEntry { claim, hypothesis, hypothesis_holds, conclusion, conclusion_holds, exact_fk, status }
    }

    pub fn report(claim: Claim, hypothesis: String, conclusion: String, exact_fk: Option<usize>) -> Self {
        ClaimEntry {
            claim,
            hypothesis,
            hypothesis_holds: None,
            conclusion,
            conclusion_holds: None,
            exact_fk,
            status: Status::ReportOnly,
        }
    }

    pub fn skipped(claim: Claim, reason: impl Into<String>) -> Self {
        ClaimEntry {
            claim,
            hypothesis: reason.into(),
            hypothesis_holds: None,
            conclusion: String::new(),
            conclusion_holds: None,
            exact_fk: None,
            status: Status::Skipped,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub instance: String,
    pub entries: Vec<ClaimEntry>,
}

impl BoundReport {
    pub fn violations(&self) -> impl Iterator<Item = &ClaimEntry> {
        self.entries.iter().filter(|e| e.status == Status::Violated)
    }
}

/// Forest with fewer than `n(t)` edges has `f_2 <= t`.
pub fn theorem1_entry(forest: &Graph, t: usize, f2: Option<usize>) -> Result<ClaimEntry, BoundError> {
    let bound = bound_theorem1(t)?;
    let hyp = forest.is_forest() && int(forest.size() as i128) < bound;
    Ok(ClaimEntry::decide(
        Claim::Thm1,
        format!("forest, m={} < n({t})={bound}", forest.size()),
        Some(hyp),
        format!("f_2 <= {t}"),
        f2.map(|f| f <= t),
        f2,
    ))
}

/// Forest with `Δ_1 + 2Δ_2 <= C(t+2,2) + 2` has `f_3 <= t`.
pub fn theorem2_entry(forest: &Graph, t: usize, f3: Option<usize>) -> Result<ClaimEntry, BoundError> {
    let bound = bound_theorem2(t)?;
    let lhs = theorem2_lhs(&forest.degree_profile());
    Ok(ClaimEntry::decide(
        Claim::Thm2,
        format!("forest, D1+2D2={lhs} <= {bound} (t={t})"),
        Some(forest.is_forest() && lhs <= bound),
        format!("f_3 <= {t}"),
        f3.map(|f| f <= t),
        f3,
    ))
}

/// Forest with fewer than `t^3/18 + t^2/3 + 11t/18 + 1` edges has `f_3 <= t`.
pub fn corollary2_entry(forest: &Graph, t: usize, f3: Option<usize>) -> Result<ClaimEntry, BoundError> {
    let bound = bound_corollary2(t)?;
    let hyp = forest.is_forest() && int(forest.size() as i128) < bound;
    Ok(ClaimEntry::decide(
        Claim::Cor2,
        format!("forest, m={} < {bound} (t={t})", forest.size()),
        Some(hyp),
        format!("f_3 <= {t}"),
        f3.map(|f| f <= t),
        f3,
    ))
}

/// Girth at least five with the weighted degree cap has `f_k <= t`.
pub fn theorem3_entry(g: &Graph, k: usize, t: usize, fk: Option<usize>) -> Result<ClaimEntry, BoundError> {
    let bound = bound_theorem3(k, t)?;
    let lhs = theorem3_lhs(&g.degree_profile(), k);
    let girth = g.girth();
    Ok(ClaimEntry::decide(
        Claim::Thm3,
        format!("girth={girth} >= 5, sum i*D_i={lhs} <= {bound} (k={k}, t={t})"),
        Some(girth >= Girth::Finite(5) && lhs <= bound),
        format!("f_{k} <= {t}"),
        fk.map(|f| f <= t),
        fk,
    ))
}

/// The three necessary conditions for `f_3(F) > t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corollary1Check {
    pub t: usize,
    /// `Δ_t >= 2`.
    pub clause_i: bool,
    /// `(i, Δ_{t+1-i} + 2Δ_{t+2-i}, C(i+2,2) + 3)` for `i = 2..=t`.
    pub clause_ii: Vec<(usize, i128, i128)>,
    /// `Δ_1 + ... + Δ_t` against its threshold.
    pub clause_iii: (i128, Rational),
}

impl Corollary1Check {
    pub fn clause_ii_holds(&self) -> bool {
        self.clause_ii.iter().all(|&(_, lhs, rhs)| lhs >= rhs)
    }

    pub fn clause_iii_holds(&self) -> bool {
        int(self.clause_iii.0) >= self.clause_iii.1
    }

    pub fn all_hold(&self) -> bool {
        self.clause_i && self.clause_ii_holds() && self.clause_iii_holds()
    }

    /// As a claim entry whose hypothesis is `f_3(F) > t`.
    pub fn entry(&self, f3: Option<usize>) -> ClaimEntry {
        ClaimEntry::decide(
            Claim::Cor1,
            format!("f_3 > {}", self.t),
            f3.map(|f| f > self.t),
            format!(
                "(i) {} (ii) {} (iii) {} >= {}",
                self.clause_i,
                self.clause_ii_holds(),
                self.clause_iii.0,
                self.clause_iii.1
            ),
            Some(self.all_hold()),
            f3,
        )
    }
}

pub fn corollary1_check(profile: &DegreeProfile, t: usize) -> Result<Corollary1Check, BoundError> {
    let threshold = corollary1_sum_threshold(t)?;
    if profile.len() < t + 1 {
        return Err(BoundError::ProfileTooShort { len: profile.len(), needed: t + 1 });
    }
    let d = |i: usize| profile.delta(i) as i128;
    let clause_ii = (2..=t)
        .map(|i| (i, d(t + 1 - i) + 2 * d(t + 2 - i), choose2(i as i128 + 2) + 3))
        .collect();
    Ok(Corollary1Check {
        t,
        clause_i: d(t) >= 2,
        clause_ii,
        clause_iii: ((1..=t).map(d).sum(), threshold),
    })
}

/// `F_t` has `t` as its `f_3` value and the closed-form number of edges.
pub fn lemma2_entry(t: usize, g: &Graph, f3: Option<usize>) -> ClaimEntry {
    let size = extremal_size(t);
    ClaimEntry::decide(
        Claim::Lemma2,
        format!("F_{t}, m={} (closed form {size})", g.size()),
        Some(*g == build_extremal_forest(t)),
        format!("f_3 = {t}, m = {size}"),
        f3.map(|f| f == t && g.size() as u64 == size),
        f3,
    )
}

/// `m <= 2 n^{(p+1)/p}` whenever the girth exceeds `2p`.
pub fn moore_entry(g: &Graph, p: u32) -> ClaimEntry {
    let girth = g.girth();
    ClaimEntry::decide(
        Claim::Moore,
        format!("girth={girth} > {}", 2 * p),
        Some(girth.exceeds(2 * p as usize)),
        format!("m={} <= 2 n^({}/{p}) = {:.3}", g.size(), p + 1, 2.0 * (g.order() as f64).powf((p as f64 + 1.0) / p as f64)),
        Some(moore_inequality(g.order(), g.size(), p)),
        None,
    )
}

/// Leading-order terms of the asymptotic bounds, which carry unspecified
/// lower-order corrections and are therefore never judged. The Moore
/// inequality for `p` is checked.
pub fn asymptotic_report(g: &Graph, k: usize, p: u32, exact_fk: Option<usize>) -> Vec<ClaimEntry> {
    let pairs = (k * (k - 1) / 2) as f64;
    let n = g.order() as f64;
    let m = g.size() as f64;
    let girth = g.girth();
    let mut out = vec![ClaimEntry::report(
        Claim::Cor3,
        format!("girth={girth}, constant 1/(6*C(k,2)) = 1/{}", 6.0 * pairs),
        format!("leading t with t^3/{} = m: {:.3}", 6.0 * pairs, (6.0 * pairs * m).cbrt()),
        exact_fk,
    )];
    out.push(ClaimEntry::report(
        Claim::Cor4,
        format!("girth={girth} > {} (p={p})", 2 * p),
        format!(
            "leading bound ({}^(1/3)) n^({}/{}) = {:.3}",
            12.0 * pairs,
            p + 1,
            3 * p,
            (12.0 * pairs).cbrt() * n.powf((p as f64 + 1.0) / (3.0 * p as f64))
        ),
        exact_fk,
    ));
    out.push(ClaimEntry::report(
        Claim::Cor5,
        format!("forest={}, constant 6*C(k,2) = {}", g.is_forest(), 6.0 * pairs),
        format!("leading bound ({}^(1/3)) n^(1/3) = {:.3}", 6.0 * pairs, (6.0 * pairs).cbrt() * n.cbrt()),
        exact_fk,
    ));
    out.push(moore_entry(g, p));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_values() {
        assert_eq!(a_sequence(1), 1);
        assert_eq!(a_sequence(4), 7);
        assert_eq!(a_sequence(7), 13);
        assert_eq!(a_prefix(7), vec![1, 3, 3, 7, 7, 13, 13]);
        for i in 1..=200 {
            assert_eq!(a_sequence(i), a_closed_form(i), "i = {i}");
        }
    }

    #[test]
    fn extremal_forests() {
        let f1 = build_extremal_forest(1);
        assert_eq!((f1.order(), f1.size()), (2, 1));
        let f3 = build_extremal_forest(3);
        assert_eq!(f3.size(), 7);
        assert_eq!(f3.degree_profile().deltas(), &[3, 3, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(build_extremal_forest(4).size(), 14);
        assert_eq!(extremal_size(2), 4);
        assert_eq!(extremal_size(3), 7);
        assert_eq!(extremal_size(7), 47);
        for t in 1..=50 {
            let sum: u64 = a_prefix(t).iter().sum();
            assert_eq!(extremal_size(t), sum);
            assert_eq!(build_extremal_forest(t).size() as u64, sum);
        }
    }

    #[test]
    fn formula_values() {
        assert_eq!(bound_theorem1(1).unwrap(), int(6));
        assert_eq!(c_k(2).unwrap(), -2);
        assert_eq!(c_k(3).unwrap(), -13);
        assert_eq!(bound_theorem2(2).unwrap(), 8);
        assert_eq!(bound_corollary2(2).unwrap(), int(4));
        assert_eq!(corollary1_sum_threshold(2).unwrap(), int(5));
        assert_eq!(bound_theorem3(3, 4).unwrap(), 2);
        for t in 1..30 {
            assert!(bound_theorem1(t).unwrap().is_integer());
        }
        assert!(bound_theorem2(1).is_err());
        assert!(bound_theorem3(3, 3).is_err());
        assert!(c_k(1).is_err());
    }

    #[test]
    fn minimal_parameters() {
        assert_eq!(theorem1_min_t(5), 1);
        assert_eq!(theorem1_min_t(6), 2);
        assert_eq!(corollary2_min_t(3), 2);
        assert_eq!(corollary2_min_t(4), 3);
        let f = Graph::union_all(&[Graph::star(5), Graph::path(3), Graph::path(3)]);
        assert_eq!(theorem2_lhs(&f.degree_profile()), 9);
        assert_eq!(theorem2_min_t(&f.degree_profile()), 3);
    }

    #[test]
    fn corollary1_on_f3() {
        let profile = build_extremal_forest(3).degree_profile();
        let c = corollary1_check(&profile, 2).unwrap();
        assert!(c.clause_i);
        assert_eq!(c.clause_ii, vec![(2, 9, 9)]);
        assert_eq!(c.clause_iii, (6, int(5)));
        assert!(c.all_hold());
        assert!(corollary1_check(&Graph::path(2).degree_profile(), 2).is_err());
        let low = corollary1_check(&Graph::path(6).disjoint_union(&Graph::star(1)).degree_profile(), 5).unwrap();
        assert!(!low.clause_i);
        assert!(!low.all_hold());
    }

    #[test]
    fn moore() {
        let p = Graph::petersen();
        assert!(moore_inequality(p.order(), p.size(), 2));
        assert!(!moore_inequality(10, 64, 2));
        assert!(moore_inequality(10, 63, 2));
        assert_eq!(moore_entry(&p, 2).status, Status::Pass);
        assert_eq!(moore_entry(&p, 3).status, Status::Vacuous);
    }

    #[test]
    fn reports_never_judge_asymptotics() {
        let entries = asymptotic_report(&Graph::path(8), 3, 3, Some(2));
        assert!(entries[..3].iter().all(|e| e.status == Status::ReportOnly));
        assert!(entries[2].hypothesis.contains("= 18"));
        assert_eq!(entries[3].status, Status::Pass);
    }

    #[test]
    fn decide_rule() {
        let d = |h, c| ClaimEntry::decide(Claim::Thm1, String::new(), h, String::new(), c, None).status;
        assert_eq!(d(Some(true), Some(false)), Status::Violated);
        assert_eq!(d(Some(false), Some(false)), Status::Vacuous);
        assert_eq!(d(Some(true), None), Status::Skipped);
        assert_eq!(d(Some(true), Some(true)), Status::Pass);
        assert_eq!("lemma3-cert".parse::<Claim>().unwrap(), Claim::Lemma3Cert);
        assert!("bogus".parse::<Claim>().is_err());
    }
}
