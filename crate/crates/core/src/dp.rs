//! Exact `f_k` for forests.
//!
//! For a set `S` of `k` special vertices and a target degree `delta`, a
//! rooted-tree dynamic program finds the largest induced subforest that
//! contains `S`, has maximum degree at most `delta`, and puts every special
//! vertex at degree exactly `delta`. Maximizing over all `(S, delta)` gives
//! `n(F) - f_k(F)` whenever some such subforest exists.
//!
//! Each vertex `u` carries a [`DpTriple`] describing the best subforest of
//! the subtree below `u`:
//!
//! * `excluded`: `u` is not kept;
//! * `at_delta`: `u` is kept with degree exactly `delta`;
//! * `below_delta`: `u` is kept with degree exactly `delta - 1` if special,
//!   at most `delta - 1` otherwise.
//!
//! The kept-root states count `u` itself, so a kept leaf contributes 1.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{Method, RemovalCertificate};
use crate::graph::Graph;
use crate::oracle::next_combination;

/// A subforest order, or `NegInf` when no subforest meets the constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Value {
    NegInf,
    Finite(usize),
}

impl Value {
    pub fn finite(self) -> Option<usize> {
        match self {
            Value::Finite(x) => Some(x),
            Value::NegInf => None,
        }
    }

    pub fn is_neg_inf(self) -> bool {
        self == Value::NegInf
    }
}

impl Add for Value {
    type Output = Value;

    #[inline]
    fn add(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(a + b),
            _ => Value::NegInf,
        }
    }
}

impl std::iter::Sum for Value {
    fn sum<I: Iterator<Item = Value>>(iter: I) -> Value {
        iter.fold(Value::Finite(0), Add::add)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(x) => write!(f, "{x}"),
            Value::NegInf => f.write_str("-inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DpTriple {
    pub excluded: Value,
    pub at_delta: Value,
    pub below_delta: Value,
}

impl DpTriple {
    pub const NEG_INF: DpTriple = DpTriple {
        excluded: Value::NegInf,
        at_delta: Value::NegInf,
        below_delta: Value::NegInf,
    };

    pub fn new(excluded: Value, at_delta: Value, below_delta: Value) -> Self {
        DpTriple { excluded, at_delta, below_delta }
    }

    pub fn best(&self) -> Value {
        self.excluded.max(self.at_delta).max(self.below_delta)
    }

    fn get(&self, state: State) -> Value {
        match state {
            State::Excluded => self.excluded,
            State::AtDelta => self.at_delta,
            State::BelowDelta => self.below_delta,
        }
    }

    /// First state attaining [`DpTriple::best`], in the order excluded, at, below.
    fn best_state(&self) -> State {
        let best = self.best();
        [State::Excluded, State::AtDelta, State::BelowDelta]
            .into_iter()
            .find(|&s| self.get(s) == best)
            .unwrap()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Excluded,
    AtDelta,
    BelowDelta,
}

/// Triple of a leaf of the rooted tree.
pub fn dp_leaf_base(special: bool, delta: usize) -> DpTriple {
    use Value::{Finite, NegInf};
    match (special, delta) {
        (false, 0) => DpTriple::new(Finite(0), Finite(1), NegInf),
        (false, _) => DpTriple::new(Finite(0), NegInf, Finite(1)),
        (true, 0) => DpTriple::new(NegInf, Finite(1), NegInf),
        (true, 1) => DpTriple::new(NegInf, NegInf, Finite(1)),
        (true, _) => DpTriple::NEG_INF,
    }
}

/// How much a non-special child gains by being kept (`below_delta - excluded`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Gain {
    NegInf,
    Finite(i64),
    PosInf,
}

fn gain(t: &DpTriple) -> Gain {
    match (t.below_delta, t.excluded) {
        (Value::NegInf, _) => Gain::NegInf,
        (Value::Finite(_), Value::NegInf) => Gain::PosInf,
        (Value::Finite(a), Value::Finite(b)) => Gain::Finite(a as i64 - b as i64),
    }
}

/// The children of one vertex, split into special and non-special ones, the
/// latter ordered by non-increasing gain (ties keep insertion order).
#[derive(Debug, Clone, Default)]
pub struct ChildPartition {
    specials: Vec<(usize, DpTriple)>,
    nonspecials: Vec<(usize, DpTriple)>,
    keyed: Vec<(Gain, usize)>,
    /// Number of non-special children with non-negative gain.
    q_prime: usize,
}

impl ChildPartition {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a partition from `(child id, is special, triple)` entries.
    pub fn from_children<I>(children: I) -> Self
    where
        I: IntoIterator<Item = (usize, bool, DpTriple)>,
    {
        let mut p = ChildPartition::new();
        for (id, special, t) in children {
            p.push(id, special, t);
        }
        p.finish();
        p
    }

    pub fn clear(&mut self) {
        self.specials.clear();
        self.nonspecials.clear();
        self.keyed.clear();
        self.q_prime = 0;
    }

    pub fn push(&mut self, id: usize, special: bool, triple: DpTriple) {
        if special {
            self.specials.push((id, triple));
        } else {
            self.nonspecials.push((id, triple));
        }
    }

    /// Sorts the non-special children; must be called after the last push.
    pub fn finish(&mut self) {
        self.keyed.clear();
        self.keyed
            .extend(self.nonspecials.iter().enumerate().map(|(i, (_, t))| (gain(t), i)));
        self.keyed.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let sorted: Vec<(usize, DpTriple)> =
            self.keyed.iter().map(|&(_, i)| self.nonspecials[i]).collect();
        self.nonspecials = sorted;
        self.q_prime = self.keyed.iter().take_while(|(g, _)| *g >= Gain::Finite(0)).count();
    }

    pub fn p(&self) -> usize {
        self.specials.len()
    }

    pub fn q(&self) -> usize {
        self.nonspecials.len()
    }

    pub fn q_prime(&self) -> usize {
        self.q_prime
    }

    /// Non-special children in gain order.
    pub fn nonspecial_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.nonspecials.iter().map(|&(id, _)| id)
    }

    /// Keep the first `kept` non-special children (below delta), drop the rest.
    fn split_sum(&self, kept: usize) -> Value {
        let (head, tail) = self.nonspecials.split_at(kept);
        head.iter().map(|(_, t)| t.below_delta).sum::<Value>()
            + tail.iter().map(|(_, t)| t.excluded).sum::<Value>()
    }

    /// Number of non-special children kept when `u` is in `state`, or `None`
    /// when the state is infeasible for the child counts.
    fn kept_nonspecials(&self, u_special: bool, delta: usize, state: State) -> Option<usize> {
        let (p, q) = (self.p() as i64, self.q() as i64);
        let delta = delta as i64;
        match state {
            State::Excluded => (!u_special).then_some(0),
            State::AtDelta => (p <= delta && delta <= p + q).then(|| (delta - p) as usize),
            State::BelowDelta if u_special => {
                (p <= delta - 1 && delta - 1 <= p + q).then(|| (delta - 1 - p) as usize)
            }
            State::BelowDelta => {
                (p <= delta - 1).then(|| self.q_prime.min((delta - 1 - p) as usize))
            }
        }
    }
}

/// Combines the children of `u` into the triple of `u`.
pub fn dp_combine(u_special: bool, children: &ChildPartition, delta: usize) -> DpTriple {
    let excluded = if u_special {
        Value::NegInf
    } else {
        children.specials.iter().map(|(_, t)| t.at_delta).sum::<Value>()
            + children.nonspecials.iter().map(|(_, t)| t.best()).sum::<Value>()
    };
    let kept = |state| match children.kept_nonspecials(u_special, delta, state) {
        None => Value::NegInf,
        Some(c) => {
            Value::Finite(1)
                + children.specials.iter().map(|(_, t)| t.below_delta).sum::<Value>()
                + children.split_sum(c)
        }
    };
    DpTriple {
        excluded,
        at_delta: kept(State::AtDelta),
        below_delta: kept(State::BelowDelta),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DpError {
    #[error("input graph is not a forest")]
    NotAForest,
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("special vertex {0} is listed twice")]
    DuplicateSpecial(usize),
    #[error("vertex {vertex} out of range for forest of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("root {0} is special or not a vertex of the forest")]
    InvalidRoot(usize),
    #[error("virtual-root attachments must name one vertex per component")]
    InvalidAttachments,
    #[error("deadline exceeded")]
    Timeout,
}

/// Where to root the forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootChoice {
    /// Lowest-id non-special vertex for a connected forest, otherwise a
    /// virtual root joined to the lowest-id vertex of every component.
    Auto,
    /// A given non-special vertex of a connected forest.
    Vertex(usize),
    /// A virtual root joined to the lowest-id vertex of every component.
    Virtual,
    /// A virtual root joined to the given vertex of each component, in
    /// component order.
    VirtualAt(Vec<usize>),
}

/// Parent/child structure of a forest rooted at a real or virtual vertex.
/// A virtual root gets id `n`.
#[derive(Debug, Clone)]
pub struct Rooting {
    root: usize,
    virtual_root: bool,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    postorder: Vec<usize>,
}

impl Rooting {
    fn build(forest: &Graph, root: usize, attach: Option<&[usize]>) -> Rooting {
        let n = forest.order();
        let total = if attach.is_some() { n + 1 } else { n };
        let mut parent = vec![None; total];
        let mut children = vec![Vec::new(); total];
        let mut order = Vec::with_capacity(total);
        let mut seen = vec![false; total];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(u) = stack.pop() {
            order.push(u);
            let nbrs: Vec<usize> = if u == n {
                attach.unwrap().to_vec()
            } else {
                forest.neighbors(u).to_vec()
            };
            for w in nbrs {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    children[u].push(w);
                    stack.push(w);
                }
            }
        }
        order.reverse();
        Rooting {
            root,
            virtual_root: attach.is_some(),
            parent,
            children,
            postorder: order,
        }
    }

    pub fn virtual_root(forest: &Graph) -> Rooting {
        let attach: Vec<usize> = forest.components().iter().map(|c| c[0]).collect();
        Rooting::build(forest, forest.order(), Some(&attach))
    }

    pub fn at_vertex(forest: &Graph, root: usize) -> Rooting {
        Rooting::build(forest, root, None)
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn is_virtual(&self) -> bool {
        self.virtual_root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }
}

/// Reusable buffers for evaluating the DP under many `(S, delta)` pairs.
struct Evaluator {
    triples: Vec<DpTriple>,
    partition: ChildPartition,
}

impl Evaluator {
    fn new(size: usize) -> Self {
        Evaluator { triples: vec![DpTriple::NEG_INF; size], partition: ChildPartition::new() }
    }

    fn fill_partition(&mut self, rooting: &Rooting, special: &[bool], u: usize) {
        self.partition.clear();
        for &c in &rooting.children[u] {
            self.partition.push(c, special[c], self.triples[c]);
        }
        self.partition.finish();
    }

    /// Runs the DP bottom-up. Returns the root value, or `NegInf` as soon as
    /// some vertex has no feasible state (that infeasibility reaches the root).
    fn run(&mut self, rooting: &Rooting, special: &[bool], delta: usize) -> Value {
        for &u in &rooting.postorder {
            let t = if rooting.children[u].is_empty() {
                dp_leaf_base(special[u], delta)
            } else {
                self.fill_partition(rooting, special, u);
                dp_combine(special[u], &self.partition, delta)
            };
            if t == DpTriple::NEG_INF {
                return Value::NegInf;
            }
            self.triples[u] = t;
        }
        let t = self.triples[rooting.root];
        if rooting.virtual_root {
            t.excluded
        } else {
            t.best()
        }
    }

    /// Reconstructs a kept vertex set realizing the value of the last `run`.
    fn realize(&mut self, rooting: &Rooting, special: &[bool], delta: usize) -> Vec<usize> {
        let root_triple = self.triples[rooting.root];
        let root_state = if rooting.virtual_root {
            State::Excluded
        } else {
            root_triple.best_state()
        };
        let n_real = if rooting.virtual_root { rooting.parent.len() - 1 } else { rooting.parent.len() };
        let mut kept = Vec::new();
        let mut stack = vec![(rooting.root, root_state)];
        while let Some((u, state)) = stack.pop() {
            if state != State::Excluded && u < n_real {
                kept.push(u);
            }
            if rooting.children[u].is_empty() {
                continue;
            }
            self.fill_partition(rooting, special, u);
            let p = &self.partition;
            for &(c, _) in &p.specials {
                let s = if state == State::Excluded { State::AtDelta } else { State::BelowDelta };
                stack.push((c, s));
            }
            match state {
                State::Excluded => {
                    for &(c, t) in &p.nonspecials {
                        stack.push((c, t.best_state()));
                    }
                }
                _ => {
                    let c = p
                        .kept_nonspecials(special[u], delta, state)
                        .expect("backtracking follows a feasible state");
                    for (i, &(w, _)) in p.nonspecials.iter().enumerate() {
                        let s = if i < c { State::BelowDelta } else { State::Excluded };
                        stack.push((w, s));
                    }
                }
            }
        }
        kept.sort_unstable();
        kept
    }
}

/// A forest rooted for one choice of special vertices and target degree.
#[derive(Debug, Clone)]
pub struct RootedForestView<'g> {
    base: &'g Graph,
    rooting: Rooting,
    special: Vec<bool>,
    delta: usize,
}

impl<'g> RootedForestView<'g> {
    pub fn new(
        forest: &'g Graph,
        specials: &[usize],
        delta: usize,
        root: RootChoice,
    ) -> Result<Self, DpError> {
        if !forest.is_forest() {
            return Err(DpError::NotAForest);
        }
        let n = forest.order();
        let mut special = vec![false; n + 1];
        for &s in specials {
            if s >= n {
                return Err(DpError::VertexOutOfRange { vertex: s, n });
            }
            if std::mem::replace(&mut special[s], true) {
                return Err(DpError::DuplicateSpecial(s));
            }
        }
        let connected = n > 0 && forest.components().len() == 1;
        let rooting = match root {
            RootChoice::Auto => match (0..n).find(|&v| !special[v]) {
                Some(r) if connected => Rooting::at_vertex(forest, r),
                _ => Rooting::virtual_root(forest),
            },
            RootChoice::Vertex(r) => {
                if !connected || r >= n || special[r] {
                    return Err(DpError::InvalidRoot(r));
                }
                Rooting::at_vertex(forest, r)
            }
            RootChoice::Virtual => Rooting::virtual_root(forest),
            RootChoice::VirtualAt(attach) => {
                let comps = forest.components();
                let valid = attach.len() == comps.len()
                    && attach.iter().zip(&comps).all(|(a, c)| c.binary_search(a).is_ok());
                if !valid {
                    return Err(DpError::InvalidAttachments);
                }
                Rooting::build(forest, n, Some(&attach))
            }
        };
        if !rooting.virtual_root {
            special.truncate(n);
        }
        Ok(RootedForestView { base: forest, rooting, special, delta })
    }

    pub fn rooting(&self) -> &Rooting {
        &self.rooting
    }

    pub fn is_special(&self, v: usize) -> bool {
        self.special[v]
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn base(&self) -> &Graph {
        self.base
    }

    /// Triples of every vertex (virtual root last, if any).
    pub fn triples(&self) -> Vec<DpTriple> {
        let mut ev = Evaluator::new(self.special.len());
        for &u in &self.rooting.postorder {
            ev.triples[u] = if self.rooting.children[u].is_empty() {
                dp_leaf_base(self.special[u], self.delta)
            } else {
                ev.fill_partition(&self.rooting, &self.special, u);
                dp_combine(self.special[u], &ev.partition, self.delta)
            };
        }
        ev.triples
    }

    pub fn value(&self) -> Value {
        Evaluator::new(self.special.len()).run(&self.rooting, &self.special, self.delta)
    }

    /// A kept vertex set attaining [`RootedForestView::value`], if finite.
    pub fn realize(&self) -> Option<Vec<usize>> {
        let mut ev = Evaluator::new(self.special.len());
        match ev.run(&self.rooting, &self.special, self.delta) {
            Value::NegInf => None,
            Value::Finite(_) => Some(ev.realize(&self.rooting, &self.special, self.delta)),
        }
    }
}

/// Largest induced subforest of `forest` containing `specials`, with maximum
/// degree at most `delta` and every special vertex at degree exactly `delta`.
pub fn max_subforest_order(forest: &Graph, specials: &[usize], delta: usize) -> Result<Value, DpError> {
    Ok(RootedForestView::new(forest, specials, delta, RootChoice::Auto)?.value())
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Worker threads; 0 uses the ambient rayon pool.
    pub jobs: usize,
    /// Skip `(S, delta)` pairs that cannot be feasible.
    pub prune: bool,
    pub deadline: Option<Instant>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { jobs: 0, prune: true, deadline: None }
    }
}

/// The optimizing `(S, delta)` pair behind a DP solution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Optimum {
    pub specials: Vec<usize>,
    pub delta: usize,
    pub kept: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FkSolution {
    pub value: usize,
    pub certificate: RemovalCertificate,
    /// `None` when the answer comes from shrinking below `k` vertices.
    pub optimum: Option<Optimum>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Candidate {
    value: usize,
    specials: Vec<usize>,
    delta: usize,
}

impl Candidate {
    /// Larger value first; ties go to the lexicographically least `(S, delta)`.
    fn better_than(&self, other: &Candidate) -> bool {
        match self.value.cmp(&other.value) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => (&self.specials, self.delta) < (&other.specials, other.delta),
        }
    }
}

fn pick(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if b.better_than(&a) { b } else { a }),
        (a, None) => a,
        (None, b) => b,
    }
}

pub fn compute_fk_forest(forest: &Graph, k: usize) -> Result<FkSolution, DpError> {
    compute_fk_forest_with(forest, k, &SolveOptions::default())
}

/// Deletes every vertex but the first `k - 1`.
fn shrink_below_k(g: &Graph, k: usize) -> RemovalCertificate {
    RemovalCertificate::build(g, (k - 1)..g.order(), k, Method::Dp)
        .expect("fewer than k vertices always qualify")
}

pub fn compute_fk_forest_with(
    forest: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<FkSolution, DpError> {
    if k < 2 {
        return Err(DpError::InvalidK(k));
    }
    if !forest.is_forest() {
        return Err(DpError::NotAForest);
    }
    let n = forest.order();
    if n <= k {
        let certificate = match RemovalCertificate::build(forest, [], k, Method::Dp) {
            Ok(c) => c,
            Err(_) => shrink_below_k(forest, k),
        };
        return Ok(FkSolution { value: certificate.size(), certificate, optimum: None });
    }

    let rooting = Rooting::virtual_root(forest);
    let profile = forest.degree_profile();
    let max_delta = if opts.prune { profile.delta(k) } else { profile.delta(1) };
    let mut tasks = Vec::new();
    for delta in 0..=max_delta {
        let cands: Vec<usize> = (0..n)
            .filter(|&v| !opts.prune || forest.degree(v) >= delta)
            .collect();
        if cands.len() < k {
            continue;
        }
        for first in 0..=cands.len() - k {
            tasks.push((delta, first));
        }
    }

    let timed_out = AtomicBool::new(false);
    let run_task = |&(delta, first): &(usize, usize)| -> Option<Candidate> {
        if let Some(deadline) = opts.deadline {
            if timed_out.load(AtomicOrdering::Relaxed) || Instant::now() > deadline {
                timed_out.store(true, AtomicOrdering::Relaxed);
                return None;
            }
        }
        let cands: Vec<usize> = (0..n)
            .filter(|&v| !opts.prune || forest.degree(v) >= delta)
            .collect();
        let tail = &cands[first + 1..];
        let mut special = vec![false; n + 1];
        special[cands[first]] = true;
        let mut idx: Vec<usize> = (0..k - 1).collect();
        let mut ev = Evaluator::new(n + 1);
        let mut best: Option<Candidate> = None;
        loop {
            for &i in &idx {
                special[tail[i]] = true;
            }
            if let Value::Finite(value) = ev.run(&rooting, &special, delta) {
                let better = best.as_ref().map_or(true, |b| value > b.value);
                if better {
                    let mut specials = vec![cands[first]];
                    specials.extend(idx.iter().map(|&i| tail[i]));
                    best = Some(Candidate { value, specials, delta });
                }
            }
            for &i in &idx {
                special[tail[i]] = false;
            }
            if !next_combination(&mut idx, tail.len()) {
                break;
            }
        }
        best
    };

    let search = || tasks.par_iter().map(run_task).reduce(|| None, pick);
    let best = if opts.jobs == 0 {
        search()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool")
            .install(search)
    };
    if timed_out.load(AtomicOrdering::Relaxed) {
        return Err(DpError::Timeout);
    }

    let Some(best) = best else {
        let certificate = shrink_below_k(forest, k);
        return Ok(FkSolution { value: certificate.size(), certificate, optimum: None });
    };
    // kept >= k, so this always beats deleting down to k - 1 vertices
    let mut special = vec![false; n + 1];
    for &s in &best.specials {
        special[s] = true;
    }
    let mut ev = Evaluator::new(n + 1);
    let value = ev.run(&rooting, &special, best.delta);
    debug_assert_eq!(value, Value::Finite(best.value));
    let kept = ev.realize(&rooting, &special, best.delta);
    debug_assert_eq!(kept.len(), best.value);
    let mut keep_mask = vec![false; n];
    for &v in &kept {
        keep_mask[v] = true;
    }
    let certificate =
        RemovalCertificate::build(forest, (0..n).filter(|&v| !keep_mask[v]), k, Method::Dp)
            .expect("realized subforest has k vertices of maximum degree");
    Ok(FkSolution {
        value: n - best.value,
        certificate,
        optimum: Some(Optimum { specials: best.specials, delta: best.delta, kept: best.value }),
    })
}
