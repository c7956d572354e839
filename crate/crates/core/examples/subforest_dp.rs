//! The inner subproblem: the largest induced subforest that keeps a set of
//! special vertices at degree exactly `delta` and everything else at most
//! `delta`.
//!
//! cargo run --example subforest_dp

use maxdeg::dp::{RootChoice, RootedForestView};
use maxdeg::oracle::DEFAULT_LIMIT;
use maxdeg::{brute_force_subforest, Graph};

fn main() {
    // a spider: center 0 with legs of lengths 1, 2 and 3
    let spider = Graph::from_edges(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
    let specials = [0, 5];
    let delta = 2;

    let view = RootedForestView::new(&spider, &specials, delta, RootChoice::Virtual).unwrap();
    println!("root {} (virtual: {})", view.rooting().root(), view.rooting().is_virtual());
    for (v, triple) in view.triples().iter().enumerate().take(spider.order()) {
        println!("  vertex {v}: {triple:?}");
    }
    println!("value {:?}, kept {:?}", view.value(), view.realize());

    let oracle = brute_force_subforest(&spider, &specials, delta, DEFAULT_LIMIT).unwrap();
    assert_eq!(view.value(), oracle);

    // rooting the tree at a real vertex gives the same answer
    let real = RootedForestView::new(&spider, &specials, delta, RootChoice::Vertex(3)).unwrap();
    assert_eq!(real.value(), view.value());

    // no subforest keeps a leaf at degree 3
    let none = RootedForestView::new(&spider, &[1], 3, RootChoice::Auto).unwrap();
    println!("leaf at degree 3: {:?}", none.value());
}
