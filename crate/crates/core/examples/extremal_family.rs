//! The star forests `F_t` built from `a_1, ..., a_t`, their edge counts and
//! their exact `f_3` values.
//!
//! cargo run --example extremal_family

use maxdeg::bounds::{a_closed_form, a_prefix, build_extremal_forest, extremal_size};
use maxdeg::compute_fk_forest;

fn main() {
    println!("{:>2} {:>18} {:>4} {:>4} {:>3}", "t", "a_1..a_t", "n", "m", "f_3");
    for t in 1..=7 {
        let a = a_prefix(t);
        assert_eq!(a[t - 1], a_closed_form(t));
        let f = build_extremal_forest(t);
        assert_eq!(f.size() as u64, extremal_size(t));
        let f3 = compute_fk_forest(&f, 3).unwrap().value;
        println!("{t:>2} {:>18} {:>4} {:>4} {f3:>3}", format!("{a:?}"), f.order(), f.size());
    }
}
