//! Catalog documents, JSON round trips and the pipeline.

use partial_hopf::catalog::{catalog, Params, NAMES};
use partial_hopf::document::Document;
use partial_hopf::pipeline::{exit_code, run, Stage};

fn main() {
    for name in NAMES {
        let doc = catalog(name, &Params::default()).unwrap();
        let text = doc.to_json();
        let back = Document::from_json(&text).unwrap();
        assert_eq!(back, doc);
        let r = run(Stage::Full, &back).unwrap();
        let flags: Vec<String> = r.summary.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!("{name:20} {} bytes, exit {}, {}", text.len(), exit_code(&r), flags.join(" "));
    }
    match Document::from_json(r#"{"field": "Q", "algebra": {"names": ["1"], "mult": [[["1/0"]]], "unit": ["1"]}}"#) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
