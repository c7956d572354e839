//! Exact bound formulas and per-instance claim entries that keep the
//! hypothesis apart from the conclusion.
//!
//! cargo run --example bounds_report

use maxdeg::bounds::{
    asymptotic_report, bound_corollary2, bound_theorem1, bound_theorem2, bound_theorem3, corollary1_check,
    theorem1_entry, theorem2_entry, theorem3_entry,
};
use maxdeg::generate::star_union;
use maxdeg::oracle::DEFAULT_LIMIT;
use maxdeg::{brute_force_fk, compute_fk_forest, Graph};

fn main() {
    for t in 2..=5 {
        println!(
            "t={t} n(t)={} thm2 cap={} cor2={} thm3(k=3)={:?}",
            bound_theorem1(t).unwrap(),
            bound_theorem2(t).unwrap(),
            bound_corollary2(t).unwrap(),
            bound_theorem3(3, t).ok(),
        );
    }

    let forest = star_union(&[6, 4, 4, 2, 1]);
    let f2 = compute_fk_forest(&forest, 2).unwrap().value;
    let f3 = compute_fk_forest(&forest, 3).unwrap().value;
    for entry in [theorem1_entry(&forest, 3, Some(f2)).unwrap(), theorem2_entry(&forest, 3, Some(f3)).unwrap()] {
        println!("{:?} {:8} {} => {}", entry.claim, entry.status, entry.hypothesis, entry.conclusion);
    }
    let cor1 = corollary1_check(&forest.degree_profile(), 2).unwrap().entry(Some(f3));
    println!("{:?} {:8} {} => {}", cor1.claim, cor1.status, cor1.hypothesis, cor1.conclusion);

    let petersen = Graph::petersen();
    let (f3, _) = brute_force_fk(&petersen, 3, DEFAULT_LIMIT).unwrap();
    let entries = [theorem3_entry(&petersen, 3, 4, Some(f3)).unwrap()];
    for e in entries.iter().chain(&asymptotic_report(&petersen, 3, 2, Some(f3))) {
        println!("{:?} {:8} {} => {}", e.claim, e.status, e.hypothesis, e.conclusion);
    }
}
