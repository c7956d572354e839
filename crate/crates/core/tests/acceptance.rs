//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{capped_forest, varied_forest, varied_girth5};
use maxdeg::bounds::{
    a_closed_form, a_sequence, bound_corollary2, bound_theorem1, bound_theorem2, bound_theorem3, build_extremal_forest,
    corollary1_check, extremal_size, lemma3_lhs, theorem2_lhs, theorem3_lhs, moore_inequality, Rational,
};
use maxdeg::constructive::{equalize3_forest, girth5_equalize};
use maxdeg::dp::{compute_fk_forest_with, SolveOptions};
use maxdeg::generate::{enumerate_forests_up_to, gen_random_forest_with_edges, gen_saturated_girth, star_union};
use maxdeg::oracle::{brute_force_fk, brute_force_subforest, DEFAULT_LIMIT};
use maxdeg::rng::SplitMix64;
use maxdeg::{compute_fk_forest, max_subforest_order, Girth, Graph};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], summary: String) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail: summary }
    } else {
        let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
        Outcome {
            pass: false,
            detail: format!("{summary}; {} failure(s), first: {}", failures.len(), shown.join(" | ")),
        }
    }
}

fn f3(g: &Graph) -> usize {
    compute_fk_forest(g, 3).unwrap().value
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut forests = enumerate_forests_up_to(9);
    let exhaustive = forests.len();
    let mut rng = SplitMix64::new(0xC1);
    for i in 0..500 {
        forests.push(varied_forest(rng.range(10, 16), 0xC1_0000 + i));
    }
    let mut failures = Vec::new();
    let mut checks = 0;
    for f in &forests {
        for k in [2, 3] {
            let dp = compute_fk_forest(f, k).unwrap().value;
            let (brute, _) = brute_force_fk(f, k, DEFAULT_LIMIT).unwrap();
            checks += 1;
            if dp != brute {
                failures.push(format!("{f:?} k={k}: dp {dp} oracle {brute}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(600) {
        failures.push(format!("runtime {elapsed:?} above 10 minutes"));
    }
    outcome(
        &failures,
        format!("{exhaustive} unlabeled forests on <= 9 vertices + 500 random (n 10..16), {checks} comparisons in {elapsed:.1?}"),
    )
}

fn dp_recursion() -> Outcome {
    let mut rng = SplitMix64::new(0xC2);
    let mut failures = Vec::new();
    let mut pairs = 0;
    for i in 0..200 {
        let n = rng.range(3, 12);
        let f = varied_forest(n, 0xC2_0000 + i);
        for k in [2, 3] {
            let mut s: Vec<usize> = (0..k).collect();
            loop {
                for delta in 0..=f.max_degree() + 1 {
                    pairs += 1;
                    let dp = max_subforest_order(&f, &s, delta).unwrap();
                    let brute = brute_force_subforest(&f, &s, delta, DEFAULT_LIMIT).unwrap();
                    if dp != brute {
                        failures.push(format!("{f:?} S={s:?} delta={delta}: dp {dp} oracle {brute}"));
                    }
                }
                if !next_combination(&mut s, n) {
                    break;
                }
            }
        }
    }
    outcome(&failures, format!("200 forests, {pairs} (S, delta) pairs"))
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let r = idx.len();
    let Some(i) = (0..r).rev().find(|&i| idx[i] < n - r + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..r {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

fn fixtures() -> Outcome {
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: String| {
        if !ok {
            failures.push(what);
        }
    };
    let k13_k2 = star_union(&[3]).disjoint_union(&Graph::path(2));
    let k15_p3_p3 = Graph::union_all(&[Graph::star(5), Graph::path(3), Graph::path(3)]);
    for (name, g, want) in [("K_{1,3} u K_2", &k13_k2, 2), ("K_{1,5} u P_3 u P_3", &k15_p3_p3, 3)] {
        let dp = f3(g);
        let brute = brute_force_fk(g, 3, DEFAULT_LIMIT).unwrap().0;
        check(dp == want && brute == want, format!("f_3({name}) = {dp} (oracle {brute}), expected {want}"));
    }
    for t in 1..=7 {
        let ft = build_extremal_forest(t);
        let dp = f3(&ft);
        let mut note = String::new();
        if ft.order() <= 41 {
            let brute = brute_force_fk(&ft, 3, 64).unwrap().0;
            check(brute == dp, format!("F_{t}: dp {dp} but oracle {brute}"));
        }
        if t == 1 {
            note = format!(" (F_1 = K_2 has {} < 3 vertices)", ft.order());
        }
        check(dp == t, format!("f_3(F_{t}) = {dp}, expected {t}{note}"));
    }
    for t in 1..=50 {
        check(
            build_extremal_forest(t).size() as u64 == extremal_size(t),
            format!("m(F_{t}) = {} but closed form {}", build_extremal_forest(t).size(), extremal_size(t)),
        );
    }
    for i in 1..=100u64 {
        let want = i * i + i + 1;
        let (even, odd) = (a_sequence(2 * i as usize), a_sequence(2 * i as usize + 1));
        check(even == want && odd == want && a_closed_form(2 * i as usize) == want, format!("a_{} / a_{}", 2 * i, 2 * i + 1));
    }
    check(bound_theorem1(1).unwrap() == Rational::from_integer(6), "n(1) != 6".into());
    outcome(&failures, "two fixtures, f_3(F_t) for t 1..7, m(F_t) for t <= 50, a_i for i <= 201, n(1)".into())
}

/// Stars with at most `edges` edges in total, sizes drawn without repeats where possible.
fn random_star_union(edges: usize, rng: &mut SplitMix64) -> Graph {
    let mut leaves = Vec::new();
    let mut left = edges;
    while left > 0 {
        let size = rng.range(1, left);
        if !leaves.contains(&size) || rng.chance(0.2) {
            leaves.push(size);
            left -= size;
        } else if rng.chance(0.3) {
            break;
        }
    }
    star_union(&leaves)
}

fn f2_edge_bound() -> Outcome {
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for t in 1..=5usize {
        let cap = bound_theorem1(t).unwrap().ceil().to_integer() as usize - 1;
        let mut rng = SplitMix64::new(0xC4_00 + t as u64);
        let mut tight = 0;
        for _ in 0..1000 {
            let f = if rng.chance(0.3) {
                // stars of distinct sizes are the hard case for equalizing two degrees
                random_star_union(cap, &mut rng)
            } else {
                let m = if rng.chance(0.7) { cap } else { rng.range(0, cap) };
                let n = m + 1 + rng.range(0, m.max(1));
                gen_random_forest_with_edges(n, m, rng.unit(), rng.next_u64()).unwrap()
            };
            assert!(Rational::from_integer(f.size() as i128) < bound_theorem1(t).unwrap());
            let f2 = compute_fk_forest(&f, 2).unwrap().value;
            if f2 == t {
                tight += 1;
            }
            if f2 > t {
                failures.push(format!("t={t}: f_2 = {f2} on {f:?}"));
            }
        }
        counts.push(format!("t={t}: 1000 (f_2 = t on {tight})"));
    }
    outcome(&failures, counts.join(", "))
}

fn f3_degree_cap() -> Outcome {
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for t in 2..=6usize {
        let bound = bound_theorem2(t).unwrap() as usize;
        let mut rng = SplitMix64::new(0xC5_00 + t as u64);
        let mut tight = 0;
        for _ in 0..1000 {
            let d2 = rng.range(1, (bound - 1) / 3);
            let d1 = rng.range(d2, bound - 2 * d2);
            let f = if rng.chance(0.4) {
                // one star per degree below the caps, which keeps degrees far apart
                let mut leaves = vec![d1, d2];
                leaves.extend((1..d2).rev().filter(|_| rng.chance(0.7)));
                star_union(&leaves)
            } else {
                capped_forest(rng.range(3, 30), d1, d2, 0.6 + 0.4 * rng.unit(), &mut rng)
            };
            let lhs = theorem2_lhs(&f.degree_profile());
            assert!(lhs <= bound as i128, "generator respects the degree caps");
            let exact = f3(&f);
            tight += usize::from(exact == t);
            match equalize3_forest(&f, t) {
                Ok(cert) => {
                    if cert.validate(&f, 3).is_err() || cert.size() > t {
                        failures.push(format!("t={t}: certificate of size {} invalid on {f:?}", cert.size()));
                    }
                }
                Err(e) => failures.push(format!("t={t}: {e} on {f:?}")),
            }
            if exact > t {
                failures.push(format!("t={t}: f_3 = {exact} on {f:?}"));
            }
        }
        counts.push(format!("t={t}: 1000 (f_3 = t on {tight})"));
    }
    let spot = Graph::union_all(&[Graph::star(5), Graph::path(3), Graph::path(3)]);
    let lhs = theorem2_lhs(&spot.degree_profile());
    if lhs != 9 || lhs <= bound_theorem2(2).unwrap() || f3(&spot) != 3 {
        failures.push(format!("spot check: D1+2D2 = {lhs}, f_3 = {}", f3(&spot)));
    }
    outcome(&failures, format!("{}; K_(1,5) u P_3 u P_3 has 9 > 8", counts.join(", ")))
}

fn f3_necessary_conditions() -> Outcome {
    let mut corpus: Vec<Graph> = enumerate_forests_up_to(9);
    corpus.extend((1..=7).map(build_extremal_forest));
    let mut rng = SplitMix64::new(0xC6);
    for i in 0..300 {
        let stars = rng.range(3, 8);
        let mut leaves: Vec<usize> = (0..stars).map(|_| rng.range(1, 12)).collect();
        while leaves.iter().map(|l| l + 1).sum::<usize>() > 60 {
            leaves.pop();
        }
        corpus.push(star_union(&leaves));
        corpus.push(varied_forest(rng.range(10, 30), 0xC6_0000 + i));
    }
    let mut failures = Vec::new();
    let mut hits = [0usize; 6];
    let mut cor2_applied = 0;
    for f in &corpus {
        let exact = f3(f);
        for t in 2..=5 {
            if exact > t {
                hits[t] += 1;
                let check = corollary1_check(&f.degree_profile(), t).unwrap();
                if !check.all_hold() {
                    failures.push(format!("cor1 t={t}: {check:?} on {f:?}"));
                }
            }
        }
        for t in 2..=7 {
            if Rational::from_integer(f.size() as i128) < bound_corollary2(t).unwrap() {
                cor2_applied += 1;
                if exact > t {
                    failures.push(format!("cor2 t={t}: f_3 = {exact} on {f:?}"));
                }
            }
        }
    }
    for t in 2..=5 {
        if hits[t] == 0 {
            failures.push(format!("no corpus forest with f_3 > {t}"));
        }
    }
    let tight = corollary1_check(&build_extremal_forest(3).degree_profile(), 2).unwrap();
    if tight.clause_ii.first() != Some(&(2, 9, 9)) {
        failures.push(format!("F_3 at t=2: clause (ii) is {:?}, expected 9 = 9", tight.clause_ii));
    }
    outcome(
        &failures,
        format!(
            "{} forests; f_3 > t for t=2..5 on {:?}; cor2 hypothesis held {cor2_applied} times; F_3 tight 9 = 9",
            corpus.len(),
            &hits[2..]
        ),
    )
}

fn girth5_bounds() -> Outcome {
    let mut rng = SplitMix64::new(0xC7);
    let mut failures = Vec::new();
    let (mut equalize_cases, mut cap_cases) = (0, 0);
    for i in 0..300 {
        let g = varied_girth5(rng.range(5, 16), 0xC7_0000 + i);
        assert!(g.girth() >= Girth::Finite(5));
        let profile = g.degree_profile();
        for k in [2, 3] {
            let (exact, _) = brute_force_fk(&g, k, DEFAULT_LIMIT).unwrap();
            for t in (k - 1) * (k - 1)..=24 {
                if lemma3_lhs(&profile, k) <= t as i128 {
                    equalize_cases += 1;
                    match girth5_equalize(&g, k, t) {
                        Ok(c) if c.size() <= t && c.validate(&g, k).is_ok() => {}
                        Ok(c) => failures.push(format!("equalize k={k} t={t}: bad certificate {c:?} on {g:?}")),
                        Err(e) => failures.push(format!("equalize k={k} t={t}: {e} on {g:?}")),
                    }
                }
                if theorem3_lhs(&profile, k) <= bound_theorem3(k, t).unwrap() {
                    cap_cases += 1;
                    if exact > t {
                        failures.push(format!("weighted cap k={k} t={t}: f_k = {exact} on {g:?}"));
                    }
                }
            }
        }
    }
    outcome(&failures, format!("300 graphs, k in {{2,3}}: {equalize_cases} equalization and {cap_cases} weighted-cap hypotheses held"))
}

fn moore() -> Outcome {
    let mut pool: Vec<Graph> = (0..300).map(|i| varied_girth5(5 + i % 12, 0xC7_0000 + i as u64)).collect();
    for n in (10..=200).step_by(10) {
        pool.push(gen_saturated_girth(n, 5, n as u64));
        pool.push(gen_saturated_girth(n, 7, n as u64));
    }
    pool.push(Graph::petersen());
    let mut failures = Vec::new();
    let mut checked = [0usize; 2];
    for g in &pool {
        for (slot, p) in [(0, 2u32), (1, 3)] {
            if g.girth().exceeds(2 * p as usize) {
                checked[slot] += 1;
                if !moore_inequality(g.order(), g.size(), p) {
                    failures.push(format!("p={p}: n={} m={}", g.order(), g.size()));
                }
            }
        }
    }
    outcome(&failures, format!("{} graphs with girth > 4, {} with girth > 6", checked[0], checked[1]))
}

fn performance() -> Outcome {
    let mut failures = Vec::new();
    let mut times = Vec::new();
    for (k, n) in [(2, 100), (3, 60)] {
        for seed in 0..3u64 {
            let f = varied_forest(n, 0xC9_00 + seed);
            let run = |jobs: usize| {
                let start = Instant::now();
                let sol = compute_fk_forest_with(&f, k, &SolveOptions { jobs, ..SolveOptions::default() }).unwrap();
                (start.elapsed(), format!("{} {:?} {:?}", sol.value, sol.certificate, sol.optimum))
            };
            let (t1, out1) = run(1);
            let (t8, out8) = run(8);
            times.push(format!("k={k} n={n} #{seed}: {t1:.2?}/{t8:.2?}"));
            if t1.max(t8) > Duration::from_secs(60) {
                failures.push(format!("k={k} n={n} seed {seed} took {:?}", t1.max(t8)));
            }
            if out1 != out8 {
                failures.push(format!("k={k} n={n} seed {seed}: jobs=1 and jobs=8 differ"));
            }
        }
    }
    outcome(&failures, format!("jobs=1/jobs=8 times {}", times.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("oracle equivalence", oracle_equivalence),
        ("DP recursion vs subforest oracle", dp_recursion),
        ("exact fixtures and closed forms", fixtures),
        ("f_2 <= t below n(t) edges", f2_edge_bound),
        ("f_3 <= t under the degree cap, with certificates", f3_degree_cap),
        ("necessary conditions and edge bound for f_3", f3_necessary_conditions),
        ("deletion bounds on girth-5 graphs", girth5_bounds),
        ("Moore inequality", moore),
        ("performance and determinism", performance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        failed += usize::from(!o.pass);
        println!(
            "criterion {} ({name}): {} [{:.1?}] {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed(),
            o.detail
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
