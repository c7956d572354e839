//! Exact `f_k` on a forest with the DP, then a certificate check on a
//! reloaded copy of the instance.
//!
//! cargo run --example exact_forest

use maxdeg::{compute_fk_forest, parse_graph, write_edge_list, Graph};

fn main() {
    // K_{1,3} plus a path on three vertices plus an isolated vertex
    let forest = Graph::from_edges(8, [(0, 1), (0, 2), (0, 3), (4, 5), (5, 6)]).unwrap();

    for k in 2..=4 {
        let sol = compute_fk_forest(&forest, k).unwrap();
        let cert = &sol.certificate;
        println!(
            "f_{k} = {} remove {:?} residual max degree {:?} witnesses {:?}",
            sol.value, cert.removed, cert.residual_max_degree, cert.witnesses
        );
        if let Some(opt) = &sol.optimum {
            println!("  kept {} vertices with specials {:?} at degree {}", opt.kept, opt.specials, opt.delta);
        }

        let text = write_edge_list(&forest);
        let reloaded = parse_graph(&text).unwrap();
        cert.validate(&reloaded, k).unwrap();
    }
}
