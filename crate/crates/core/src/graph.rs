//! Simple undirected graphs on dense vertex ids `0..n`, with the degree,
//! girth and component utilities the solvers share.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
}

/// A simple undirected graph. Neighbor lists are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let pos = match self.adj[u].binary_search(&v) {
            Ok(_) => return Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => pos,
        };
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.m += 1;
        Ok(())
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// `K_{1,leaves}` with the center at id 0.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are valid")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen edges are valid")
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&w| w + shift).collect()),
        );
        Graph { adj, m: self.m + other.m }
    }

    /// Disjoint union of a sequence of graphs, in order.
    pub fn union_all<'a, I: IntoIterator<Item = &'a Graph>>(parts: I) -> Graph {
        parts
            .into_iter()
            .fold(Graph::empty(0), |acc, g| acc.disjoint_union(g))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.order()
    }

    /// Length of a shortest cycle, by a breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                // no shorter cycle can be closed beyond this depth
                if 2 * dist[u] >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    fn check_vertices(&self, xs: &[usize]) -> Result<(), GraphError> {
        let n = self.order();
        match xs.iter().find(|&&x| x >= n) {
            Some(&x) => Err(GraphError::VertexOutOfRange { vertex: x, n }),
            None => Ok(()),
        }
    }

    /// `G - X`, keeping the relabeling between old and new ids.
    /// New ids preserve the relative order of the surviving vertices.
    pub fn remove_vertices(&self, removed: &[usize]) -> Result<InducedSubgraph, GraphError> {
        self.check_vertices(removed)?;
        let n = self.order();
        let mut gone = vec![false; n];
        for &x in removed {
            gone[x] = true;
        }
        let new_to_old: Vec<usize> = (0..n).filter(|&v| !gone[v]).collect();
        let mut old_to_new = vec![None; n];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let mut m = 0;
        let adj: Vec<Vec<usize>> = new_to_old
            .iter()
            .map(|&v| {
                let nbrs: Vec<usize> = self.adj[v].iter().filter_map(|&w| old_to_new[w]).collect();
                m += nbrs.len();
                nbrs
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Graph { adj, m: m / 2 },
            old_to_new,
            new_to_old,
        })
    }

    /// Degree of every vertex of `G - X` (indexed by old id, `None` for removed ones).
    pub(crate) fn residual_degrees(&self, removed: &[usize]) -> Result<Vec<Option<usize>>, GraphError> {
        self.check_vertices(removed)?;
        let mut gone = vec![false; self.order()];
        for &x in removed {
            gone[x] = true;
        }
        Ok((0..self.order())
            .map(|v| {
                (!gone[v]).then(|| self.adj[v].iter().filter(|&&w| !gone[w]).count())
            })
            .collect())
    }
}

/// Shortest cycle length; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    /// `true` when the girth is strictly larger than `len`.
    pub fn exceeds(self, len: usize) -> bool {
        self > Girth::Finite(len)
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// The result of deleting a vertex set.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

/// The degree sequence in non-increasing order, each entry paired with a
/// distinct vertex realizing it. Equal degrees are listed by ascending id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    deltas: Vec<usize>,
    witnesses: Vec<usize>,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let mut witnesses: Vec<usize> = (0..g.order()).collect();
        witnesses.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
        let deltas = witnesses.iter().map(|&v| g.degree(v)).collect();
        DegreeProfile { deltas, witnesses }
    }

    pub fn len(&self) -> usize {
        self.deltas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deltas.is_empty()
    }

    /// `Δ_i` for a 1-based rank `i`; `Δ_1` is the maximum degree.
    pub fn delta(&self, i: usize) -> usize {
        assert!(i >= 1, "degree ranks start at 1");
        self.deltas[i - 1]
    }

    /// The vertex `u_i` with degree `Δ_i`, for a 1-based rank `i`.
    pub fn witness(&self, i: usize) -> usize {
        assert!(i >= 1, "degree ranks start at 1");
        self.witnesses[i - 1]
    }

    pub fn deltas(&self) -> &[usize] {
        &self.deltas
    }

    pub fn witnesses(&self) -> &[usize] {
        &self.witnesses
    }
}

/// Whether `G - X` has at least `k` vertices of maximum degree or fewer
/// than `k` vertices. Repeated entries in `removed` count once.
pub fn check_fk_condition(g: &Graph, removed: &[usize], k: usize) -> Result<bool, GraphError> {
    let degrees = g.residual_degrees(removed)?;
    let alive: Vec<usize> = degrees.into_iter().flatten().collect();
    if alive.len() < k {
        return Ok(true);
    }
    let top = alive.iter().copied().max().unwrap_or(0);
    Ok(alive.iter().filter(|&&d| d == top).count() >= k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k13_k2() -> Graph {
        Graph::star(3).disjoint_union(&Graph::path(2))
    }

    /// Shortest cycle by explicit enumeration of simple paths; exponential, tiny inputs only.
    fn girth_by_enumeration(g: &Graph) -> Option<usize> {
        fn extend(g: &Graph, start: usize, path: &mut Vec<usize>, len: usize) -> bool {
            let last = *path.last().unwrap();
            if path.len() == len {
                return g.has_edge(last, start);
            }
            for &w in g.neighbors(last) {
                if w > start && !path.contains(&w) {
                    path.push(w);
                    if extend(g, start, path, len) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
        (3..=g.order()).find(|&len| (0..g.order()).any(|s| extend(g, s, &mut vec![s], len)))
    }

    #[test]
    fn builders_and_counts() {
        let g = Graph::path(4);
        assert_eq!((g.order(), g.size()), (4, 3));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(Graph::petersen().size(), 15);
        assert_eq!(g.closed_neighborhood(1), vec![0, 1, 2]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn degree_profiles() {
        assert_eq!(Graph::star(3).degree_profile().deltas(), &[3, 1, 1, 1]);
        assert_eq!(Graph::empty(4).degree_profile().deltas(), &[0, 0, 0, 0]);
        let p = Graph::path(4).degree_profile();
        assert_eq!(p.witnesses(), &[1, 2, 0, 3]);
        assert_eq!((p.delta(1), p.witness(1)), (2, 1));
    }

    #[test]
    fn girth_small_cases() {
        assert_eq!(Graph::cycle(5).girth(), Girth::Finite(5));
        assert_eq!(Graph::path(6).girth(), Girth::Infinite);
        assert_eq!(k13_k2().girth(), Girth::Infinite);
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.girth(), Girth::Finite(3));
        assert_eq!(Graph::cycle(8).girth(), Girth::Finite(8));
    }

    #[test]
    fn petersen_girth_matches_enumeration() {
        let p = Graph::petersen();
        assert_eq!(girth_by_enumeration(&p), Some(5));
        assert_eq!(p.girth(), Girth::Finite(5));
    }

    #[test]
    fn forests_and_components() {
        assert!(Graph::path(4).is_forest());
        assert_eq!(Graph::path(4).components().len(), 1);
        assert!(!Graph::cycle(5).is_forest());
        let g = k13_k2();
        assert!(g.is_forest());
        assert_eq!(g.components(), vec![vec![0, 1, 2, 3], vec![4, 5]]);
    }

    #[test]
    fn removal() {
        let star = Graph::star(3);
        let sub = star.remove_vertices(&[0]).unwrap();
        assert_eq!(sub.graph, Graph::empty(3));
        assert_eq!(sub.new_to_old, vec![1, 2, 3]);
        assert_eq!(Graph::path(4).remove_vertices(&[]).unwrap().graph, Graph::path(4));
        let sub = Graph::path(4).remove_vertices(&[2]).unwrap();
        assert_eq!(sub.graph, Graph::path(2).disjoint_union(&Graph::empty(1)));
        assert_eq!(sub.old_to_new, vec![Some(0), Some(1), None, Some(2)]);
        assert!(Graph::path(4).remove_vertices(&[4]).is_err());
    }

    #[test]
    fn fk_condition_examples() {
        assert!(check_fk_condition(&Graph::star(3), &[0], 3).unwrap());
        assert!(check_fk_condition(&Graph::path(4), &[], 2).unwrap());
        assert!(!check_fk_condition(&Graph::star(3), &[], 2).unwrap());
        assert!(check_fk_condition(&Graph::star(3), &[0, 1], 3).unwrap());
        assert!(check_fk_condition(&Graph::star(3), &[0, 1, 2], 3).unwrap());
        assert!(check_fk_condition(&Graph::star(3), &[9], 2).is_err());
    }
}
