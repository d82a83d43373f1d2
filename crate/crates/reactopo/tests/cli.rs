use reactopo::cli::{run, Outcome, REPORT_SCHEMA};
use serde_json::Value;

fn reactopo(args: &[&str]) -> Outcome {
    run(std::iter::once("reactopo").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = reactopo(&full);
    (
        out.code,
        serde_json::from_str(&out.stdout).expect("valid JSON report"),
    )
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn validate_neutron_decay() {
    let (code, v) = json(&["validate", "n -> p + e- + anti:nu_e"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], REPORT_SCHEMA);
    assert_eq!(v["command"], "validate");
    assert_eq!(v["result"]["classification"], "allowed-weak");
    assert_eq!(v["error"], Value::Null);
}

#[test]
fn time_and_chi_examples() {
    let (code, v) = json(&["time", "--deltaE", "0.6"]);
    assert_eq!(code, 0);
    let t = v["result"]["time_s"].as_f64().unwrap();
    assert!((t - 1.097e-24).abs() / 1.097e-24 < 5e-3);
    assert_eq!(v["result"]["class"], "strong");
    let (code, v) = json(&["chi", "h(0|0)+h(1|1)+h(1|1)+h(2|2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["chi"], 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(reactopo(&[]).code, 2);
    assert_eq!(reactopo(&["frobnicate"]).code, 2);
    assert_eq!(reactopo(&["thermo", &data("spectrum.txt")]).code, 2);
    assert_eq!(reactopo(&["--format", "yaml", "chi", "h(0|0)"]).code, 2);
    assert_eq!(reactopo(&["--help"]).code, 0);
}

#[test]
fn domain_errors_exit_one_with_name() {
    let cases: &[(&[&str], &str)] = &[
        (&["validate", "p -> unobtainium"], "UnknownParticle"),
        (&["validate", "p -> -> n"], "SyntaxError"),
        (&["susy", "e+ + e- -> 2 gamma"], "NoPartner"),
        (&["time", "--deltaE", "0"], "NonPositiveEnergy"),
        (&["spin", "--values", "1,-2"], "NegativeValue"),
        (&["chi", "dim(2|2) + h(3|3)"], "IndexOutOfRange"),
        (&["decompose", "nope"], "UnknownPropagator"),
        (&["confine", "/nonexistent/descriptor.json"], "LoadError"),
    ];
    for (args, name) in cases {
        let (code, v) = json(args);
        assert_eq!(code, 1, "{args:?}");
        assert_eq!(v["error"]["name"], *name, "{args:?}");
        assert_eq!(v["result"], Value::Null);
    }
    let text = reactopo(&["time", "--deltaE", "-3"]);
    assert_eq!(text.code, 1);
    assert!(text.stderr.starts_with("error[NonPositiveEnergy]"));
}

#[test]
fn text_and_json_agree_on_numbers() {
    let spectrum = data("spectrum.txt");
    let (_, v) = json(&["thermo", &spectrum, "--beta", "0.7"]);
    let text = reactopo(&["thermo", &spectrum, "--beta", "0.7"]).stdout;
    for (key, value) in v["result"].as_object().unwrap() {
        let line = text
            .lines()
            .find(|l| l.starts_with(&format!("{key}: ")))
            .unwrap_or_else(|| panic!("missing {key}"));
        let shown = line.split_once(": ").unwrap().1;
        match value {
            Value::Number(n) => {
                assert_eq!(shown.parse::<f64>().unwrap(), n.as_f64().unwrap(), "{key}")
            }
            Value::Null => assert_eq!(shown, "-"),
            _ => {}
        }
    }
}

#[test]
fn theta_and_beta_agree() {
    let spectrum = data("spectrum.txt");
    let (_, by_beta) = json(&["thermo", &spectrum, "--beta", "0.25", "--kB", "2"]);
    let (_, by_theta) = json(&["thermo", &spectrum, "--theta", "2", "--kB", "2"]);
    for key in [
        "ln_Z",
        "avg_energy",
        "entropy",
        "free_energy",
        "heat_capacity",
    ] {
        let a = by_beta["result"][key].as_f64().unwrap();
        let b = by_theta["result"][key].as_f64().unwrap();
        assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0), "{key}");
    }
    let (code, neg) = json(&["thermo", &spectrum, "--beta", "-0.5"]);
    assert_eq!(code, 0);
    assert_eq!(neg["result"]["free_energy"], Value::Null);
    assert_eq!(neg["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn batch_validate_reports_mismatches() {
    let (code, v) = json(&["validate", &data("reactions.tsv")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["failures"], 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.tsv");
    std::fs::write(
        &path,
        "p -> n + e+ + nu_e\tallowed-strong\nzz -> p\tforbidden\n",
    )
    .unwrap();
    let (code, v) = json(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["name"], "CorpusMismatch");
    let entries = v["result"]["entries"].as_array().unwrap();
    assert_eq!(entries[0]["matches"], false);
    assert_eq!(entries[1]["error"]["name"], "UnknownParticle");
    assert_eq!(entries[1]["line"], 2);
}

#[test]
fn cross_and_susy() {
    let (_, v) = json(&["cross", "n -> p + e- + anti:nu_e", "--depth", "2"]);
    let members: Vec<&str> = v["result"]["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["reaction"].as_str().unwrap())
        .collect();
    assert_eq!(members[0], "n -> p + e- + anti:nu_e");
    assert!(members.contains(&"p + anti:nu_e -> n + e+"));
    let (code, v) = json(&["susy", "W+ + W- -> 2 Z0"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["result"]["partner"]["reaction"],
        "susy:W+ + susy:W- -> 2 susy:Z0"
    );
    assert_eq!(v["result"]["deltas_preserved"], true);
}

#[test]
fn gmn_and_decompose() {
    let (_, v) = json(&["gmn", "--all"]);
    assert_eq!(v["result"]["nonzero"], 0);
    let (_, v) = json(&["gmn", "s"]);
    assert_eq!(v["result"]["Q"], "-1/3");
    let (code, v) = json(&["decompose", "majorana"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["shape"], "disk with two handles");
    assert_eq!(v["result"]["elementary"], false);
}

#[test]
fn custom_registry_flag() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reg.jsonl");
    std::fs::write(&path, "{ not json\n").unwrap();
    let (code, v) = json(&["--registry", path.to_str().unwrap(), "gmn", "p"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["name"], "LoadError");
    assert!(v["error"]["message"].as_str().unwrap().contains(":1:"));
}

#[test]
fn spin_and_confine() {
    let (_, v) = json(&["spin", "--values", "0.75,3.75"]);
    assert_eq!(v["result"]["class"], "fermionic");
    let (code, v) = json(&["confine", &data("descriptor.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["class"], "confined-deconfinable");
}
