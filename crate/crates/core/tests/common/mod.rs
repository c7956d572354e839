#![allow(dead_code)]

use maxdeg::generate::{gen_random_forest, gen_random_girth5, ForestProfile};
use maxdeg::rng::SplitMix64;
use maxdeg::Graph;

/// Random forest whose first vertex has degree at most `cap_first` and every
/// other vertex at most `cap_rest`, with ids shuffled.
pub fn capped_forest(n: usize, cap_first: usize, cap_rest: usize, keep_edge: f64, rng: &mut SplitMix64) -> Graph {
    let cap = |v: usize| if v == 0 { cap_first } else { cap_rest };
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| deg[u] < cap(u)).collect();
        if open.is_empty() || cap(v) == 0 || !rng.chance(keep_edge) {
            continue;
        }
        // favor the first vertex so its cap is actually reached
        let u = if deg[0] < cap(0) && rng.chance(0.4) { 0 } else { open[rng.below(open.len() as u64) as usize] };
        deg[u] += 1;
        deg[v] += 1;
        edges.push((u, v));
    }
    let mut label: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut label);
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (label[u], label[v]))).unwrap()
}

/// `g` with vertex `v` renamed to `perm[v]`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.order(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

/// A random forest with a seed-dependent shape.
pub fn varied_forest(n: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let profile = ForestProfile { keep_edge: 0.5 + 0.5 * rng.unit(), hub_bias: rng.unit() };
    gen_random_forest(n, &profile, rng.next_u64())
}

/// A girth-5 graph on `n` vertices with a random edge target, retrying
/// saturated draws with smaller targets.
pub fn varied_girth5(n: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut m = rng.range(n.saturating_sub(2), n + n / 2);
    loop {
        if let Ok(g) = gen_random_girth5(n, m, rng.next_u64()) {
            return g;
        }
        if rng.chance(0.3) {
            m = m.saturating_sub(1);
        }
    }
}
