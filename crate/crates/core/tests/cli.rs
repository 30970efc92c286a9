use artin_kernels::cli::run_from_args;
use serde_json::Value;

fn run(args: &[&str]) -> artin_kernels::cli::Outcome {
    run_from_args(std::iter::once("artin").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&run(args).stdout).unwrap()
}

const GRAPHS: [&str; 8] = ["Km(2,2,2)", "K(5)", "path(4)", "Km(2,2)", "cycle(5)", "Kbar(3)", "join(K(1),cycle(4))", "K(1)"];

#[test]
fn output_is_deterministic() {
    for g in GRAPHS {
        for verb in ["analyze", "classify", "resonance", "present", "cohomology", "realize"] {
            for format in ["json", "text"] {
                let a = run(&[verb, "--format", format, g]);
                let b = run(&[verb, "--format", format, g]);
                assert_eq!(a, b, "{verb} {format} {g}");
            }
        }
    }
}

#[test]
fn analyze_slots_equal_individual_verbs() {
    for g in GRAPHS {
        let all = json(&["analyze", g]);
        for verb in ["classify", "resonance", "present", "cohomology", "realize"] {
            assert_eq!(all[verb], json(&[verb, g]), "{verb} {g}");
        }
    }
}

#[test]
fn worked_examples() {
    let c = run(&["classify", "Km(2,2)"]);
    assert_eq!(c.status, 0);
    let v: Value = serde_json::from_str(&c.stdout).unwrap();
    assert_eq!(v["groupClass"]["class"], "NotQuasiKahler");
    let p = json(&["present", "--group", "bb", "path(3)"]);
    assert_eq!(p["presentation"]["generators"].as_array().unwrap().len(), 2);
    assert_eq!(p["presentation"]["relators"].as_array().unwrap().len(), 0);
    let a = json(&["analyze", "Km(2,2,2)"]);
    assert_eq!(a["classify"]["groupClass"]["class"], "B4");
    assert_eq!(a["resonance"]["components"].as_array().unwrap().len(), 3);
    assert_eq!(a["realize"]["realization"]["hyperplanes"].as_array().unwrap().len(), 6);
}

#[test]
fn exit_statuses() {
    assert_eq!(run(&["classify", "K("]).status, 1);
    assert_eq!(run(&["classify", "--file", "/nonexistent/graph.txt"]).status, 1);
    assert_eq!(run(&["classify", "K(3)", "--file", "x"]).status, 1);
    assert_eq!(run(&["resonance", "path(17)"]).status, 1);
    assert_eq!(run(&["resonance", "--group", "raag", "--allow-large", "path(17)"]).status, 0);
    assert_eq!(run(&["cohomology", "cycle(5)"]).status, 2);
    assert_eq!(run(&["realize", "Km(1,2,2)", "--exponents", "1,1,1,1"]).status, 2);
    assert_eq!(run(&["--help"]).status, 0);
    let refusal = json(&["cohomology", "cycle(5)"]);
    assert!(refusal["refused"].as_str().unwrap().contains("H1"));
}

#[test]
fn file_input() {
    let dir = std::env::temp_dir().join(format!("artin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("square.txt");
    std::fs::write(&path, "# a 4-cycle with a cone point\nvertices: a b c d z\na b\nb c\nc d\nd a\nz a\nz b\nz c\nz d\n").unwrap();
    let v = json(&["classify", "--file", path.to_str().unwrap()]);
    assert_eq!(v["groupClass"]["class"], "B2");
    assert_eq!(v["structure"], "F_2 x F_2");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn raag_group_flag() {
    let v = json(&["classify", "--group", "raag", "Km(2,3)"]);
    assert_eq!(v["structure"], "F_2 x F_3");
    let r = json(&["resonance", "--group", "raag", "Km(2,3)"]);
    assert_eq!(r["components"].as_array().unwrap().len(), 2);
    let c = json(&["cohomology", "--group", "raag", "K(3)"]);
    assert_eq!(c["betti"], serde_json::json!([1, 3, 3, 1]));
}

#[test]
fn explain_adds_certificate_chain() {
    let v = json(&["classify", "--explain", "Km(1,2,2)"]);
    assert!(v["explanation"].as_array().unwrap().len() >= 2);
    assert!(json(&["classify", "Km(1,2,2)"]).get("explanation").is_none());
}
