//! Seeded instance generators and exhaustive enumeration of small forests.
//!
//! Every random generator is a pure function of its arguments and a 64-bit
//! seed, driven by [`SplitMix64`](crate::rng::SplitMix64).

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::build_extremal_forest;
use crate::graph::{Girth, Graph};
use crate::rng::SplitMix64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("generator {kind} needs field `{field}`")]
    MissingField { kind: GraphKind, field: &'static str },
    #[error("a forest on {n} vertices has at most {max} edges, asked for {m}")]
    TooManyEdges { n: usize, m: usize, max: usize },
    #[error("girth-5 insertion saturated at {achieved} of {target} edges on {n} vertices")]
    Saturated { n: usize, target: usize, achieved: usize },
}

/// Shape parameters for [`gen_random_forest`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ForestProfile {
    /// Probability that an attachment edge survives the component split.
    pub keep_edge: f64,
    /// Probability of attaching preferentially by degree instead of uniformly.
    pub hub_bias: f64,
}

impl Default for ForestProfile {
    fn default() -> Self {
        ForestProfile { keep_edge: 0.85, hub_bias: 0.35 }
    }
}

/// Random labeled tree by parent attachment, with ids shuffled afterwards.
fn attachment_tree(n: usize, hub_bias: f64, rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    // each vertex appears once plus once per incident edge
    let mut weighted: Vec<usize> = Vec::with_capacity(3 * n);
    for v in 0..n {
        if v > 0 {
            let parent = if rng.chance(hub_bias) {
                weighted[rng.below(weighted.len() as u64) as usize]
            } else {
                rng.below(v as u64) as usize
            };
            edges.push((parent, v));
            weighted.push(parent);
            weighted.push(v);
        }
        weighted.push(v);
    }
    let mut label: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut label);
    edges.iter().map(|&(u, v)| (label[u], label[v])).collect()
}

fn graph_from(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generated edges are simple")
}

/// A forest on `n` vertices: a random attachment tree whose edges are each
/// kept with probability `profile.keep_edge`.
pub fn gen_random_forest(n: usize, profile: &ForestProfile, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let tree = attachment_tree(n, profile.hub_bias, &mut rng);
    let kept: Vec<_> = tree.into_iter().filter(|_| rng.chance(profile.keep_edge)).collect();
    graph_from(n, kept)
}

/// A forest on `n` vertices with exactly `m` edges.
pub fn gen_random_forest_with_edges(n: usize, m: usize, hub_bias: f64, seed: u64) -> Result<Graph, GenError> {
    let max = n.saturating_sub(1);
    if m > max {
        return Err(GenError::TooManyEdges { n, m, max });
    }
    let mut rng = SplitMix64::new(seed);
    let mut tree = attachment_tree(n, hub_bias, &mut rng);
    rng.shuffle(&mut tree);
    tree.truncate(m);
    Ok(graph_from(n, tree))
}

/// Whether `v` is within distance `radius` of `u`.
fn within(g: &Graph, u: usize, v: usize, radius: usize, dist: &mut [usize], queue: &mut VecDeque<usize>) -> bool {
    dist.iter_mut().for_each(|d| *d = usize::MAX);
    queue.clear();
    dist[u] = 0;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        if x == v {
            return true;
        }
        if dist[x] == radius {
            continue;
        }
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    false
}

/// Inserts shuffled vertex pairs at distance at least `girth - 1` until `cap`
/// edges are placed or every pair has been tried. A single pass is maximal:
/// distances only shrink, so a rejected pair stays rejected.
fn insert_far_pairs(n: usize, girth: usize, cap: usize, seed: u64) -> Graph {
    assert!(girth >= 3, "girth below 3 is not a simple-graph constraint");
    let mut rng = SplitMix64::new(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    rng.shuffle(&mut pairs);
    let mut g = Graph::empty(n);
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for (u, v) in pairs {
        if g.size() == cap {
            break;
        }
        if !within(&g, u, v, girth - 2, &mut dist, &mut queue) {
            g.add_edge(u, v).expect("pair is new");
        }
    }
    g
}

/// A graph of girth at least five with exactly `m` edges.
pub fn gen_random_girth5(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    let g = insert_far_pairs(n, 5, m, seed);
    if g.size() < m {
        return Err(GenError::Saturated { n, target: m, achieved: g.size() });
    }
    assert!(g.girth() >= Girth::Finite(5), "insertion keeps girth at least five");
    Ok(g)
}

/// A random edge-maximal graph of girth at least `girth`.
pub fn gen_saturated_girth(n: usize, girth: usize, seed: u64) -> Graph {
    let g = insert_far_pairs(n, girth, usize::MAX, seed);
    assert!(g.girth() >= Girth::Finite(girth), "insertion keeps the girth bound");
    g
}

/// Disjoint stars `K_{1,s}` for each entry of `leaves`, in order.
pub fn star_union(leaves: &[usize]) -> Graph {
    let parts: Vec<Graph> = leaves.iter().map(|&s| Graph::star(s)).collect();
    Graph::union_all(&parts)
}

// ---------------------------------------------------------------------------
// exhaustive enumeration

/// Canonical parenthesis string of the subtree at `v`.
fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_code(g, w, Some(v)))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

/// Center vertices of a tree given by one of its components.
fn centers(g: &Graph, comp: &[usize]) -> Vec<usize> {
    let mut deg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = comp.iter().copied().filter(|&v| deg[v] <= 1).collect();
    let mut left = comp.len();
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbors(v) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Isomorphism-invariant code of the tree containing `comp`.
fn tree_code(g: &Graph, comp: &[usize]) -> String {
    centers(g, comp).iter().map(|&c| rooted_code(g, c, None)).min().expect("nonempty tree")
}

fn graph_from_code(code: &str) -> Graph {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for ch in code.chars() {
        if ch == '(' {
            if let Some(&p) = stack.last() {
                edges.push((p, next));
            }
            stack.push(next);
            next += 1;
        } else {
            stack.pop();
        }
    }
    graph_from(next, edges)
}

/// Rooted tree codes by order, `codes[s]` sorted.
fn rooted_trees_up_to(n: usize) -> Vec<Vec<String>> {
    let mut by_size: Vec<Vec<String>> = vec![Vec::new(); n + 1];
    if n >= 1 {
        by_size[1].push("()".to_string());
    }
    for s in 2..=n {
        let pool: Vec<(usize, &String)> =
            (1..s).flat_map(|z| by_size[z].iter().map(move |c| (z, c))).collect();
        let mut found = BTreeSet::new();
        let mut chosen = Vec::new();
        multisets(&pool, s - 1, pool.len(), &mut chosen, &mut |kids| {
            let mut kids: Vec<&str> = kids.to_vec();
            kids.sort_unstable();
            found.insert(format!("({})", kids.concat()));
        });
        by_size[s] = found.into_iter().collect();
    }
    by_size
}

/// Calls `emit` for every multiset of pool items (indices below `bound`,
/// non-increasing) whose sizes sum to `total`.
fn multisets<'a>(
    pool: &[(usize, &'a String)],
    total: usize,
    bound: usize,
    chosen: &mut Vec<&'a str>,
    emit: &mut dyn FnMut(&[&'a str]),
) {
    if total == 0 {
        emit(chosen);
        return;
    }
    for i in (0..bound).rev() {
        let (size, code) = pool[i];
        if size <= total {
            chosen.push(code);
            multisets(pool, total - size, i + 1, chosen, emit);
            chosen.pop();
        }
    }
}

/// One representative of every unlabeled tree on `n` vertices, sorted by code.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    free_tree_codes(n).iter().map(|c| graph_from_code(c)).collect()
}

fn free_tree_codes(n: usize) -> Vec<String> {
    if n == 0 {
        return Vec::new();
    }
    let rooted = rooted_trees_up_to(n);
    let codes: BTreeSet<String> = rooted[n]
        .iter()
        .map(|c| {
            let g = graph_from_code(c);
            tree_code(&g, &(0..n).collect::<Vec<_>>())
        })
        .collect();
    codes.into_iter().collect()
}

/// One representative of every unlabeled forest on exactly `n` vertices.
/// `n = 0` yields the single empty graph.
pub fn enumerate_forests(n: usize) -> Vec<Graph> {
    let trees: Vec<(usize, String)> =
        (1..=n).flat_map(|s| free_tree_codes(s).into_iter().map(move |c| (s, c))).collect();
    let pool: Vec<(usize, &String)> = trees.iter().map(|(s, c)| (*s, c)).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    multisets(&pool, n, pool.len(), &mut chosen, &mut |parts| {
        let graphs: Vec<Graph> = parts.iter().map(|c| graph_from_code(c)).collect();
        out.push(Graph::union_all(&graphs));
    });
    out
}

/// All forests on at most `n` vertices, by increasing order.
pub fn enumerate_forests_up_to(n: usize) -> Vec<Graph> {
    (0..=n).flat_map(enumerate_forests).collect()
}

// ---------------------------------------------------------------------------
// configured corpora

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    RandomForest,
    RandomGirth5,
    StarUnion,
    #[serde(alias = "extremal-Ft")]
    ExtremalFt,
    Path,
    Star,
}

impl std::fmt::Display for GraphKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(match self {
            GraphKind::RandomForest => "random-forest",
            GraphKind::RandomGirth5 => "random-girth5",
            GraphKind::StarUnion => "star-union",
            GraphKind::ExtremalFt => "extremal-ft",
            GraphKind::Path => "path",
            GraphKind::Star => "star",
        })
    }
}

impl std::str::FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| format!("unknown graph kind {s:?}"))
    }
}

/// A batch of instances. Random kinds use `seed`; instance `i` draws from an
/// independent stream so batches can be split without changing members.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorConfig {
    pub kind: GraphKind,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub m: Option<usize>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "one")]
    pub count: usize,
    /// Family index for `extremal-ft`; a range `t..t+count` is produced.
    #[serde(default)]
    pub t: Option<usize>,
    /// Leaf counts for `star-union`.
    #[serde(default)]
    pub leaves: Vec<usize>,
}

fn one() -> usize {
    1
}

/// A generated graph with a stable, human-readable name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    /// The family index when the graph is `F_t`.
    pub extremal_t: Option<usize>,
}

impl GeneratorConfig {
    pub fn new(kind: GraphKind) -> Self {
        GeneratorConfig { kind, n: None, m: None, seed: 0, count: 1, t: None, leaves: Vec::new() }
    }

    fn need(&self, field: &'static str, value: Option<usize>) -> Result<usize, GenError> {
        value.ok_or(GenError::MissingField { kind: self.kind, field })
    }

    /// The seed handed to a random generator for instance `index`.
    pub fn instance_seed(&self, index: usize) -> u64 {
        SplitMix64::stream(self.seed, index as u64).next_u64()
    }

    /// The `index`-th instance of the batch.
    pub fn instance(&self, index: usize) -> Result<Instance, GenError> {
        let seed = self.instance_seed(index);
        let (name, graph) = match self.kind {
            GraphKind::RandomForest => {
                let n = self.need("n", self.n)?;
                let g = match self.m {
                    Some(m) => gen_random_forest_with_edges(n, m, ForestProfile::default().hub_bias, seed)?,
                    None => gen_random_forest(n, &ForestProfile::default(), seed),
                };
                (format!("random-forest/n{n}/s{}/{index}", self.seed), g)
            }
            GraphKind::RandomGirth5 => {
                let n = self.need("n", self.n)?;
                let m = self.need("m", self.m)?;
                (format!("random-girth5/n{n}/m{m}/s{}/{index}", self.seed), gen_random_girth5(n, m, seed)?)
            }
            GraphKind::StarUnion => {
                let leaves = self.leaves.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
                (format!("star-union/{leaves}"), star_union(&self.leaves))
            }
            GraphKind::ExtremalFt => {
                let t = self.need("t", self.t)? + index;
                (format!("extremal-ft/t{t}"), build_extremal_forest(t))
            }
            GraphKind::Path => {
                let n = self.need("n", self.n)?;
                (format!("path/n{n}"), Graph::path(n))
            }
            GraphKind::Star => {
                let n = self.need("n", self.n)?;
                (format!("star/leaves{n}"), Graph::star(n))
            }
        };
        let extremal_t = self.t.filter(|_| self.kind == GraphKind::ExtremalFt).map(|t| t + index);
        Ok(Instance { name, graph, extremal_t })
    }

    /// All `count` instances; a failing instance does not stop the others.
    pub fn instances(&self) -> Vec<Result<Instance, GenError>> {
        (0..self.count).map(|i| self.instance(i)).collect()
    }
}
