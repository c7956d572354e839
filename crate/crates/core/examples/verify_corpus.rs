//! A corpus run: generate instances, compute exact values and judge claims.
//!
//! cargo run --example verify_corpus

use maxdeg::bounds::Claim;
use maxdeg::verify::{run_verification, to_csv, to_text, Corpus, VerifyOptions};

fn main() {
    let corpus: Corpus = serde_json::from_str(
        r#"{
            "k": [2, 3],
            "instances": [
                {"kind": "extremal-ft", "t": 3},
                {"kind": "random-forest", "n": 14, "seed": 1, "count": 3},
                {"kind": "random-girth5", "n": 12, "m": 14, "seed": 2, "count": 2}
            ]
        }"#,
    )
    .unwrap();
    let claims = [Claim::OracleEquiv, Claim::Thm1, Claim::Thm2, Claim::Thm3, Claim::Thm2Cert, Claim::Moore];
    let run = run_verification(&corpus.instances, &claims, &corpus.k, &VerifyOptions::default());

    print!("{}", to_text(&run));
    println!("{}", to_csv(&run.results).lines().take(4).collect::<Vec<_>>().join("\n"));
    assert!(run.summary.ok());
}
