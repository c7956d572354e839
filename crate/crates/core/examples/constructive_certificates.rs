//! Constructive deletion sets with size guarantees, each checked against
//! the exact value.
//!
//! cargo run --example constructive_certificates

use maxdeg::bounds::{lemma3_min_t, theorem2_min_t};
use maxdeg::constructive::{equalize3_forest, girth5_equalize, peel_removal};
use maxdeg::generate::{gen_random_forest, gen_random_girth5, star_union, ForestProfile};
use maxdeg::oracle::DEFAULT_LIMIT;
use maxdeg::{brute_force_fk, compute_fk_forest};

fn main() {
    let g = (0..).find_map(|seed| gen_random_girth5(14, 18, seed).ok()).unwrap();
    let (exact, _) = brute_force_fk(&g, 3, DEFAULT_LIMIT).unwrap();

    let peel = peel_removal(&g, 3).unwrap();
    peel.validate(&g, 3).unwrap();
    println!("peel      |X|={} exact={exact}", peel.size());

    let t = lemma3_min_t(&g.degree_profile(), 3);
    let eq = girth5_equalize(&g, 3, t).unwrap();
    eq.validate(&g, 3).unwrap();
    println!("girth5    |X|={} <= t={t} method={}", eq.size(), eq.method);

    let forest = star_union(&[5, 4, 4, 3]).disjoint_union(&gen_random_forest(30, &ForestProfile::default(), 7));
    let t = theorem2_min_t(&forest.degree_profile());
    let cert = equalize3_forest(&forest, t).unwrap();
    cert.validate(&forest, 3).unwrap();
    let exact = compute_fk_forest(&forest, 3).unwrap().value;
    println!("equalize3 |X|={} <= t={t} exact={exact}", cert.size());

    // t below the degree cap is rejected up front
    println!("{}", equalize3_forest(&forest, 1).unwrap_err());
}
