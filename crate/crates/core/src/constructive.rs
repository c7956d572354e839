//! Deletion procedures with guaranteed size bounds.
//!
//! * [`peel_removal`]: drop the `k - 1` top-degree vertices, then keep
//!   stripping all maximum-degree vertices until `k` of them tie.
//! * [`girth5_equalize`]: on graphs of girth at least five, trim the
//!   neighborhoods of the `k - 1` top vertices down to degree `Δ_k`.
//! * [`equalize3_forest`]: at most `t` deletions for `k = 3` on forests with
//!   `Δ_1 + 2Δ_2 <= C(t+2, 2) + 2`.
//!
//! Whenever several vertices qualify for deletion the lowest id is taken.
//! Degree witnesses are recomputed after every deletion step.

use thiserror::Error;

use crate::bounds::{bound_theorem2, lemma3_lhs, theorem2_lhs};
use crate::certificate::{CertificateError, Method, RemovalCertificate};
use crate::graph::{check_fk_condition, Girth, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("input graph is not a forest")]
    NotAForest,
    #[error("girth {0} is below 5")]
    GirthTooSmall(Girth),
    #[error("t = {t} is below the minimum {min}")]
    TTooSmall { t: usize, min: usize },
    #[error("degree condition fails: {lhs} > {rhs}")]
    DegreeConditionFails { lhs: i128, rhs: i128 },
    #[error("procedure reached a state its case analysis excludes: {0}")]
    Unreachable(String),
    #[error("{method} produced {size} deletions, above its bound {bound}")]
    BoundExceeded { method: Method, size: usize, bound: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
}

/// The graph left after some deletions, with current ids mapped back to the
/// original ones. Relabeling preserves id order.
struct Residual {
    graph: Graph,
    original: Vec<usize>,
}

impl Residual {
    fn new(g: &Graph) -> Self {
        Residual { graph: g.clone(), original: (0..g.order()).collect() }
    }

    fn remove(&mut self, current: &[usize]) {
        let sub = self.graph.remove_vertices(current).expect("current ids are valid");
        self.original = sub.new_to_old.iter().map(|&v| self.original[v]).collect();
        self.graph = sub.graph;
    }

    fn originals(&self, current: &[usize]) -> impl Iterator<Item = usize> + '_ {
        current.iter().map(|&v| self.original[v]).collect::<Vec<_>>().into_iter()
    }
}

fn max_degree_count(g: &Graph) -> usize {
    let top = g.max_degree();
    (0..g.order()).filter(|&v| g.degree(v) == top).count()
}

/// Lowest-id `count` neighbors of `u` outside `avoid` (sorted).
fn trim_neighbors(g: &Graph, u: usize, count: usize, avoid: &[usize]) -> Result<Vec<usize>, ConstructError> {
    let picked: Vec<usize> = g
        .neighbors(u)
        .iter()
        .copied()
        .filter(|w| avoid.binary_search(w).is_err())
        .take(count)
        .collect();
    if picked.len() < count {
        return Err(ConstructError::Unreachable(format!(
            "vertex {u} has {} deletable neighbors, needs {count}",
            picked.len()
        )));
    }
    Ok(picked)
}

fn union_of_closed_neighborhoods(g: &Graph, vs: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = vs.iter().flat_map(|&v| g.closed_neighborhood(v)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn peel_removal(g: &Graph, k: usize) -> Result<RemovalCertificate, ConstructError> {
    if k < 2 {
        return Err(ConstructError::InvalidK(k));
    }
    let mut removed = Vec::new();
    if !check_fk_condition(g, &[], k)? {
        let mut cur = Residual::new(g);
        let top: Vec<usize> = cur.graph.degree_profile().witnesses()[..k - 1].to_vec();
        removed.extend(cur.originals(&top));
        cur.remove(&top);
        while cur.graph.order() >= k && max_degree_count(&cur.graph) < k {
            let top = cur.graph.max_degree();
            let layer: Vec<usize> = (0..cur.graph.order()).filter(|&v| cur.graph.degree(v) == top).collect();
            removed.extend(cur.originals(&layer));
            cur.remove(&layer);
        }
    }
    Ok(RemovalCertificate::build(g, removed, k, Method::Peel)?)
}

/// At most `t` deletions leaving `k` vertices of maximum degree (or fewer
/// than `k` vertices) on a graph of girth at least five with
/// `Δ_1 + ... + Δ_{k-1} - (k-1)Δ_k <= t` and `t >= (k-1)^2`.
pub fn girth5_equalize(g: &Graph, k: usize, t: usize) -> Result<RemovalCertificate, ConstructError> {
    if k < 2 {
        return Err(ConstructError::InvalidK(k));
    }
    let girth = g.girth();
    if girth < Girth::Finite(5) {
        return Err(ConstructError::GirthTooSmall(girth));
    }
    let min = (k - 1) * (k - 1);
    if t < min {
        return Err(ConstructError::TTooSmall { t, min });
    }
    let profile = g.degree_profile();
    let lhs = lemma3_lhs(&profile, k);
    if lhs > t as i128 {
        return Err(ConstructError::DegreeConditionFails { lhs, rhs: t as i128 });
    }
    if g.order() < k {
        return Ok(RemovalCertificate::build(g, [], k, Method::Girth5)?);
    }

    let cert = if profile.delta(k) < k - 1 {
        peel_removal(g, k)?
    } else {
        let top = &profile.witnesses()[..k];
        let target = profile.delta(k);
        let mut removed = Vec::new();
        for i in 0..k - 1 {
            let others: Vec<usize> = top.iter().copied().filter(|&v| v != top[i]).collect();
            let avoid = union_of_closed_neighborhoods(g, &others);
            removed.extend(trim_neighbors(g, top[i], profile.delta(i + 1) - target, &avoid)?);
        }
        RemovalCertificate::build(g, removed, k, Method::Girth5)?
    };
    if cert.size() > t {
        return Err(ConstructError::BoundExceeded { method: cert.method, size: cert.size(), bound: t });
    }
    Ok(cert)
}

/// At most `t` deletions leaving three vertices of maximum degree (or fewer
/// than three vertices) on a forest with `Δ_1 + 2Δ_2 <= C(t+2, 2) + 2`.
pub fn equalize3_forest(forest: &Graph, t: usize) -> Result<RemovalCertificate, ConstructError> {
    if !forest.is_forest() {
        return Err(ConstructError::NotAForest);
    }
    if t < 2 {
        return Err(ConstructError::TTooSmall { t, min: 2 });
    }
    check_degree_cap(forest, t)?;
    let mut cur = Residual::new(forest);
    let mut removed = Vec::new();
    equalize3_step(&mut cur, t, &mut removed)?;
    let cert = RemovalCertificate::build(forest, removed, 3, Method::Theorem2)?;
    if cert.size() > t {
        return Err(ConstructError::BoundExceeded { method: Method::Theorem2, size: cert.size(), bound: t });
    }
    Ok(cert)
}

fn check_degree_cap(forest: &Graph, t: usize) -> Result<(), ConstructError> {
    let lhs = theorem2_lhs(&forest.degree_profile());
    let rhs = bound_theorem2(t).expect("t >= 2");
    if lhs > rhs {
        return Err(ConstructError::DegreeConditionFails { lhs, rhs });
    }
    Ok(())
}

fn k2_components(g: &Graph) -> Vec<Vec<usize>> {
    g.components().into_iter().filter(|c| c.len() == 2).collect()
}

fn equalize3_step(cur: &mut Residual, t: usize, out: &mut Vec<usize>) -> Result<(), ConstructError> {
    let g = &cur.graph;
    if g.order() < 3 {
        return Ok(());
    }
    let profile = g.degree_profile();
    let (d1, d2, d3) = (profile.delta(1), profile.delta(2), profile.delta(3));
    if d1 == d3 {
        return Ok(());
    }
    let (u1, u2, u3) = (profile.witness(1), profile.witness(2), profile.witness(3));

    let x = if t == 2 {
        base_case(g, d1, d2, d3, [u1, u2, u3])?
    } else if d1 + d2 <= t + 2 * d3 {
        match d3 {
            // only K_2 plus isolated vertices has a single pair of positive degrees
            0 => vec![u1],
            1 => {
                let both = vec![u1, u2];
                if check_fk_condition(g, &both, 3)? {
                    both
                } else {
                    let mut x = trim_neighbors(g, u1, d1 - 1, &g.closed_neighborhood(u2))?;
                    x.extend(trim_neighbors(g, u2, d2 - 1, &g.closed_neighborhood(u1))?);
                    x
                }
            }
            _ => {
                let mut x = trim_neighbors(g, u1, d1 - d3, &union_of_closed_neighborhoods(g, &[u2, u3]))?;
                x.extend(trim_neighbors(g, u2, d2 - d3, &union_of_closed_neighborhoods(g, &[u1, u3]))?);
                x
            }
        }
    } else {
        out.extend(cur.originals(&[u1]));
        cur.remove(&[u1]);
        check_degree_cap(&cur.graph, t - 1).map_err(|e| {
            ConstructError::Unreachable(format!("after removing the top vertex the bound for t - 1 fails: {e}"))
        })?;
        return equalize3_step(cur, t - 1, out);
    };
    out.extend(cur.originals(&x));
    Ok(())
}

fn unreachable_unless(cond: bool, what: &str) -> Result<(), ConstructError> {
    if cond {
        Ok(())
    } else {
        Err(ConstructError::Unreachable(what.to_string()))
    }
}

/// The `t = 2` case analysis. Each arm checks the structure it relies on.
fn base_case(g: &Graph, d1: usize, d2: usize, d3: usize, [u1, u2, u3]: [usize; 3]) -> Result<Vec<usize>, ConstructError> {
    unreachable_unless(d1 + 2 * d2 <= 8, "t = 2 with D1 + 2 D2 > 8")?;
    if d1 == 1 {
        // a single K_2 among isolated vertices
        unreachable_unless(d3 == 0, "D1 = 1 with three degree-1 vertices")?;
        return Ok(vec![u1]);
    }
    if d2 == 1 {
        // one star, isolated vertices and p copies of K_2
        let k2 = k2_components(g);
        return Ok(if k2.len() == 1 { vec![u1, k2[0][0]] } else { vec![u1] });
    }
    unreachable_unless(d2 == 2 && (2..=4).contains(&d1), "D2 >= 2 outside D1 in {2,3,4}, D2 = 2")?;
    if d1 == 2 {
        unreachable_unless(d3 == 1, "D1 = D2 = 2 with D3 != 1")?;
        if !g.has_edge(u1, u2) {
            // two copies of P_3: cut one end of each
            return Ok(vec![g.neighbors(u1)[0], g.neighbors(u2)[0]]);
        }
        return Ok(if k2_components(g).is_empty() { vec![u1, u2] } else { vec![u1] });
    }
    if d3 == 2 {
        return trim_neighbors(g, u1, d1 - 2, &union_of_closed_neighborhoods(g, &[u2, u3]));
    }
    unreachable_unless(d3 == 1, "D1 >= 3, D2 = 2 with D3 != 1")?;
    if k2_components(g).is_empty() {
        Ok(vec![u1, u2])
    } else if g.has_edge(u1, u2) {
        Ok(vec![u1])
    } else {
        Ok(vec![u1, g.neighbors(u2)[0]])
    }
}
