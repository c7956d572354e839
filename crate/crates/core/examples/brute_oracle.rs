//! The exhaustive oracle works on any graph, cycles included.
//!
//! cargo run --example brute_oracle

use maxdeg::oracle::DEFAULT_LIMIT;
use maxdeg::{brute_force_fk, compute_fk_forest, Graph};

fn main() {
    let graphs = [
        ("C5+K2", Graph::cycle(5).disjoint_union(&Graph::path(2))),
        ("K13+K2", Graph::star(3).disjoint_union(&Graph::path(2))),
        ("Petersen", Graph::petersen()),
        ("P6", Graph::path(6)),
        ("K_{1,4}", Graph::star(4)),
    ];
    for (name, g) in &graphs {
        for k in 2..=3 {
            let (value, cert) = brute_force_fk(g, k, DEFAULT_LIMIT).unwrap();
            print!("{name:9} k={k} f_k={value} X={:?}", cert.removed);
            if g.is_forest() {
                // the DP and the oracle agree on forests
                assert_eq!(compute_fk_forest(g, k).unwrap().value, value);
                print!(" (dp agrees)");
            }
            println!();
        }
    }

    let too_big = Graph::path(DEFAULT_LIMIT + 1);
    println!("{}", brute_force_fk(&too_big, 2, DEFAULT_LIMIT).unwrap_err());
}
