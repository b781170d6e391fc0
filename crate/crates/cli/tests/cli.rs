use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn cayleylab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayleylab"))
        .args(args)
        .env_remove("CAYLEYLAB_MAX_RING_SIZE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn build_dot_is_deterministic() {
    let a = cayleylab(&["build", "--ring", "F(13,1)", "--p", "3", "--format", "dot"]);
    assert!(a.status.success());
    let text = stdout(&a);
    assert!(text.starts_with("graph "));
    assert_eq!(text.lines().filter(|l| l.contains(" -- ")).count(), 26);
    assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 13);
    assert!(!text.contains('\r'));
    let b = cayleylab(&["build", "--ring", "F(13,1)", "--p", "3", "--format", "dot"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn build_edge_list_and_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z25.edges");
    let o = cayleylab(&["build", "-r", "Z/25", "--p", "5", "--format", "edgelist", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 50);

    let o = cayleylab(&["build", "-r", "Z/9", "--p", "3", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["n"], 9);
    assert_eq!(v["degree"], 2);
}

#[test]
fn asymmetric_and_malformed_inputs_exit_2() {
    let o = cayleylab(&["build", "--ring", "Z/8", "--p", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("directed"));
    assert_eq!(cayleylab(&["build", "--ring", "Z/", "--p", "3"]).status.code(), Some(2));
    assert_eq!(cayleylab(&["verify", "nosuchtheorem"]).status.code(), Some(2));
    assert_eq!(cayleylab(&["poly", "g", "--p", "3"]).status.code(), Some(2));
}

#[test]
fn size_guardrail_flag_and_env() {
    let o = cayleylab(&["--max-ring-size", "100", "build", "-r", "Z/125", "--p", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_cayleylab"))
        .args(["build", "-r", "Z/125", "--p", "5"])
        .env("CAYLEYLAB_MAX_RING_SIZE", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(cayleylab(&["build", "-r", "Z/125", "--p", "5"]).status.success());
}

#[test]
fn analyze_examples() {
    let v = json(&cayleylab(&["analyze", "-r", "F(2,4)", "--p", "5"]));
    assert_eq!(v["components"], 4);
    assert_eq!(v["prime_theorem"], false);
    assert_eq!(v["prime_oracle"], false);
    let v = json(&cayleylab(&["analyze", "-r", "Z/9", "--p", "3"]));
    assert_eq!((v["prime_theorem"].clone(), v["prime_oracle"].clone()), (true.into(), true.into()));
    let v = json(&cayleylab(&["analyze", "-r", "Z/27", "--p", "3"]));
    assert_eq!(v["prime_theorem"], false);
    assert_eq!(v["certificate"], serde_json::json!([0, 9, 18]));
    assert_eq!(v["mismatches"], serde_json::json!([]));
}

#[test]
fn verify_rootprimes_and_wreath() {
    let o = cayleylab(&["verify", "rootprimes", "--limit", "500"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let primes: Vec<u64> = text.lines().skip(1).map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
    assert_eq!(primes, [59, 79, 83, 179, 193, 227, 337, 419, 421, 443, 457]);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));

    let o = cayleylab(&["verify", "wreath", "--rings", "Z/125,Z/27"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "spec,p,|V|,quotient,blocks,isomorphic\nZ/125,5,125,Z/25,5,true\nZ/27,3,27,Z/9,3,true\n");
}

#[test]
fn verify_primality_quotes_specs() {
    let o = cayleylab(&["verify", "primality", "--rings", "F(13,1),Z/9 x F(7,1),Z/4 x Z/3,GR(9,2)", "--p", "3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.starts_with("spec,p,|V|,degree,components,anticonnected,bipartite,prime_theorem,prime_oracle,certificate,clauses_fired,mismatch\n"));
    assert!(text.contains("\"F(13,1)\",3,13,4,1,true,false,true,true,,"));
}

#[test]
fn verify_primality_default_corpus() {
    let o = cayleylab(&["verify", "primality", "--corpus", "default"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains(" 0 mismatches"));
}

#[test]
fn verify_numeric_sweeps() {
    for args in [
        &["verify", "weil", "--limit", "300"][..],
        &["verify", "k3bound", "--limit", "400", "--p", "3"],
        &["verify", "phi3", "--limit", "300"],
        &["verify", "repeatedroots", "--limit", "200"],
        &["verify", "homogeneous", "--corpus", "integers", "--p", "3,5"],
        &["verify", "connectivity", "--corpus", "fields", "--p", "3,5,7"],
        &["verify", "anticonnectivity", "--corpus", "integers", "--p", "3,5,7"],
    ] {
        let o = cayleylab(args);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).lines().count() > 1, "{args:?}");
    }
}

#[test]
fn search_commands() {
    let v = json(&cayleylab(&["search", "k3", "--field", "F(271,1)", "--p", "3"]));
    assert_eq!(v["found"], true);
    assert_eq!(v["verified"], true);
    let v = json(&cayleylab(&["search", "k3", "--field", "F(13,1)", "--p", "3"]));
    assert_eq!(v["found"], false);
    assert_eq!(v["search_space"], 13);

    let dir = tempfile::tempdir().unwrap();
    let c5 = dir.path().join("c5.edgelist");
    fs::write(&c5, "0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let v = json(&cayleylab(&["search", "embed", "--target", c5.to_str().unwrap(), "--p", "3", "--ell-max", "200"]));
    assert_eq!(v["found"], true);
    assert_eq!(v["verified"], true);
    assert!(v["ell"].as_u64().unwrap() <= 200);

    let o = cayleylab(&["search", "embed", "--target", dir.path().join("missing").to_str().unwrap(), "--p", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let bad = dir.path().join("bad.edgelist");
    fs::write(&bad, "0 x\n").unwrap();
    assert_eq!(cayleylab(&["search", "embed", "--target", bad.to_str().unwrap(), "--p", "3"]).status.code(), Some(2));

    let v = json(&cayleylab(&["search", "bipartite-char2", "--m-max", "8", "--p", "3"]));
    assert_eq!(v["found"], false);
    assert_eq!(v["checked"].as_array().unwrap().len(), 7);
}

#[test]
fn poly_output() {
    assert_eq!(stdout(&cayleylab(&["poly", "f", "--p", "3"])), "3*x^2 + 3*x\n");
    assert_eq!(stdout(&cayleylab(&["poly", "g", "--p", "11"])), "x^6 + 3*x^5 + 7*x^4 + 9*x^3 + 7*x^2 + 3*x + 1\n");
    let v = json(&cayleylab(&["poly", "h", "--p", "5", "--format", "json"]));
    assert_eq!(v["coefficients"], serde_json::json!(["0", "1", "2", "2", "1"]));
    let v = json(&cayleylab(&["poly", "g", "--p", "7", "--format", "json"]));
    assert_eq!(v["phi3_multiplicity"], 2);
}
