//! Fixed benchmark suites with seeded instances.

use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::bounds::build_extremal_forest;
use crate::certificate::Method;
use crate::dp::{compute_fk_forest_with, SolveOptions};
use crate::generate::{gen_random_forest, gen_random_girth5, star_union, ForestProfile};
use crate::graph::Graph;
use crate::oracle::{brute_force_fk, DEFAULT_LIMIT};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Small fixed forests through both solvers.
    Small,
    /// The forest DP on random forests up to the performance targets.
    ForestDp,
    /// The exhaustive oracle on small forests and girth-5 graphs.
    Oracle,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "small" => Ok(Suite::Small),
            "forest-dp" => Ok(Suite::ForestDp),
            "oracle" => Ok(Suite::Oracle),
            _ => Err(format!("unknown suite {s:?} (small, forest-dp, oracle)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub case: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub f_k: usize,
    pub method: Method,
    pub elapsed_ms: f64,
}

const SEED: u64 = 0x5EED;

fn timed(case: String, g: &Graph, k: usize, method: Method, jobs: usize) -> BenchRecord {
    let start = Instant::now();
    let f_k = match method {
        Method::Brute => brute_force_fk(g, k, DEFAULT_LIMIT).expect("bench graphs fit the oracle").0,
        _ => compute_fk_forest_with(g, k, &SolveOptions { jobs, ..SolveOptions::default() })
            .expect("bench forests are valid")
            .value,
    };
    BenchRecord {
        case,
        n: g.order(),
        m: g.size(),
        k,
        f_k,
        method,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Instances of a suite, `(case, graph, k, method)`.
pub fn suite_cases(suite: Suite) -> Vec<(String, Graph, usize, Method)> {
    let mut cases = Vec::new();
    match suite {
        Suite::Small => {
            let fixtures = [
                ("K13+K2", star_union(&[3]).disjoint_union(&Graph::path(2))),
                ("K15+P3+P3", Graph::union_all(&[Graph::star(5), Graph::path(3), Graph::path(3)])),
                ("F4", build_extremal_forest(4)),
                ("P4", Graph::path(4)),
            ];
            for (name, g) in fixtures {
                for method in [Method::Dp, Method::Brute] {
                    cases.push((name.to_string(), g.clone(), 3, method));
                }
            }
        }
        Suite::ForestDp => {
            for (n, k) in [(25, 2), (50, 2), (100, 2), (20, 3), (40, 3), (60, 3)] {
                let mut rng = SplitMix64::stream(SEED, (n * 10 + k) as u64);
                let g = gen_random_forest(n, &ForestProfile::default(), rng.next_u64());
                cases.push((format!("random-forest/n{n}"), g, k, Method::Dp));
            }
            cases.push(("F7".to_string(), build_extremal_forest(7), 3, Method::Dp));
        }
        Suite::Oracle => {
            for n in [10, 13, 16] {
                let g = gen_random_forest(n, &ForestProfile::default(), SEED + n as u64);
                cases.push((format!("random-forest/n{n}"), g, 3, Method::Brute));
            }
            for n in [10, 13, 16] {
                let g = (0..)
                    .find_map(|s| gen_random_girth5(n, n + n / 3, SEED + s).ok())
                    .expect("sparse girth-5 targets are reachable");
                cases.push((format!("random-girth5/n{n}"), g, 2, Method::Brute));
            }
        }
    }
    cases
}

pub fn run_suite(suite: Suite, jobs: usize) -> Vec<BenchRecord> {
    suite_cases(suite)
        .into_iter()
        .map(|(case, g, k, method)| timed(case, &g, k, method, jobs))
        .collect()
}
