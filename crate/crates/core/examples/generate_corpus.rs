//! Seeded instance generation: the same config always yields the same graphs.
//!
//! cargo run --example generate_corpus

use maxdeg::generate::{enumerate_forests, GeneratorConfig, GraphKind};

fn main() {
    let mut cfg = GeneratorConfig::new(GraphKind::RandomGirth5);
    cfg.n = Some(12);
    cfg.m = Some(14);
    cfg.seed = 42;
    cfg.count = 3;
    for inst in cfg.instances() {
        let inst = inst.unwrap();
        println!("{} n={} m={} girth={}", inst.name, inst.graph.order(), inst.graph.size(), inst.graph.girth());
    }
    assert_eq!(cfg.instance(1).unwrap().graph, cfg.instance(1).unwrap().graph);

    let json = r#"{"kind":"random-forest","n":20,"seed":5,"count":2}"#;
    let parsed: GeneratorConfig = serde_json::from_str(json).unwrap();
    println!("{}", serde_json::to_string(&parsed).unwrap());

    // too many edges for the order is reported, not panicked on
    cfg.m = Some(100);
    println!("{}", cfg.instance(0).unwrap_err());

    for n in 1..=8 {
        print!("{} ", enumerate_forests(n).len());
    }
    println!("forests up to isomorphism");
}
