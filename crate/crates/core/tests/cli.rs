use clap::Parser;
use cubic_qupit::cli::{run, Cli, Command, Outcome};
use serde_json::Value;

const D5: [&str; 10] = ["--p", "5", "--alpha", "1,0", "--beta", "0,1", "--gamma", "1,1", "--delta", "3,-3"];

fn invoke(args: &[&str]) -> Outcome {
    run(std::iter::once("cubic-qupit").chain(args.iter().copied()))
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}{}", out.stdout, out.stderr))
}

fn with_d5<'a>(head: &[&'a str], tail: &[&'a str]) -> Vec<&'a str> {
    head.iter().chain(D5.iter()).chain(tail).copied().collect()
}

fn temp_path(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("cubic-qupit-{}-{name}", std::process::id()))
}

#[test]
fn parses_subcommands() {
    let cli = Cli::try_parse_from(["cubic-qupit", "check", "--params", "file"]).unwrap();
    assert!(matches!(cli.command, Some(Command::Check(ref a)) if a.params.is_some()));
    let argv = with_d5(&["cubic-qupit", "strings"], &["--wmax", "4"]);
    let cli = Cli::try_parse_from(argv).unwrap();
    match cli.command {
        Some(Command::Strings(a)) => {
            assert_eq!(a.wmax, 4);
            assert_eq!(a.code.delta, Some([3, -3]));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["check", "--frobnicate"],
        &["check", "--p", "5", "--alpha", "1"],
        &["check", "--params", "x.json", "--p", "5"],
        &["scan", "--p", "4"],
        &["check", "--p", "5"],
        &[],
    ] {
        let out = invoke(args);
        assert_eq!(out.code, 2, "{args:?}: {out:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn schema_version_flag() {
    let out = invoke(&["--schema-version"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "1\n"));
}

#[test]
fn scan_at_two_finds_nothing() {
    let out = invoke(&["scan", "--p", "2"]);
    assert_eq!(out.code, 0);
    let report = json(&out);
    assert_eq!(report["schema"], "1");
    assert_eq!(report["results"]["deformable_tuples"], 0);
}

#[test]
fn check_reports_pairing_discrepancy() {
    let out = invoke(&with_d5(&["check"], &[]));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report = json(&out);
    assert_eq!(report["results"]["generator_consistent"], true);
    assert_eq!(report["results"]["theorem"]["overall"], false);
    assert_eq!(report["results"]["theorem"]["minimal_string"], serde_json::json!([true, true, true]));
    let notes = report["discrepancies"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().starts_with("pairing")), "{notes:?}");
}

#[test]
fn qubit_strings_fail_expectation() {
    let args = ["strings", "--p", "2", "--alpha", "1,0", "--beta", "0,1", "--gamma", "1,1", "--delta", "1,1"];
    let mut strict = args.to_vec();
    strict.extend(["--wmax", "2", "--expect-no-string"]);
    let out = invoke(&strict);
    assert_eq!(out.code, 1);
    assert!(!json(&out)["results"]["exceeds_2w"].as_array().unwrap().is_empty());
    let mut lax = args.to_vec();
    lax.extend(["--wmax", "2"]);
    assert_eq!(invoke(&lax).code, 0);
}

#[test]
fn d5_strings_meet_expectation() {
    let out = invoke(&with_d5(&["strings"], &["--wmax", "3", "--expect-no-string"]));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report = json(&out);
    let widths = report["results"]["widths"].as_array().unwrap();
    assert_eq!(widths.len(), 3);
    assert_eq!(widths[0]["l_max"], 6);
    assert_eq!(widths[2]["cornered"]["max_nontrivial_length"], 4);
}

#[test]
fn params_file_matches_inline_flags() {
    let json_file = temp_path("d5.json");
    std::fs::write(
        &json_file,
        r#"{"p": 5, "alpha": [1, 0], "beta": [0, 1], "gamma": [1, 1], "delta": [3, -3], "parity": "A"}"#,
    )
    .unwrap();
    let toml_file = temp_path("d5.toml");
    std::fs::write(
        &toml_file,
        "p = 5\nalpha = [1, 0]\nbeta = [0, 1]\ngamma = [1, 1]\ndelta = [3, -3]\nparity = \"A\"\n",
    )
    .unwrap();
    for sub in [&["check"][..], &["strings", "--wmax", "2"], &["logical", "--dims", "3x3x3"]] {
        let inline = invoke(&with_d5(&sub[..1], &[&sub[1..], &["--parity", "A"][..]].concat()));
        for file in [&json_file, &toml_file] {
            let mut args = sub[..1].to_vec();
            args.extend(["--params", file.to_str().unwrap()]);
            args.extend(&sub[1..]);
            let from_file = invoke(&args);
            assert_eq!(from_file, inline, "{sub:?} via {}", file.display());
        }
    }
    let _ = std::fs::remove_file(json_file);
    let _ = std::fs::remove_file(toml_file);
}

#[test]
fn output_is_identical_across_worker_counts() {
    for args in [with_d5(&["strings"], &["--wmax", "3"]), vec!["classify", "--p", "5", "--wmax", "1"]] {
        let one = invoke(&[&["--workers", "1"][..], &args].concat());
        let four = invoke(&[&["--workers", "4"][..], &args].concat());
        let default = invoke(&args);
        assert_eq!(one.code, 0);
        assert_eq!(one, four);
        assert_eq!(one, default);
    }
}

#[test]
fn classify_writes_and_reuses_cache() {
    let cache = temp_path("p3.cache");
    let _ = std::fs::remove_file(&cache);
    let args = ["classify", "--p", "3", "--cache", cache.to_str().unwrap()];
    let first = invoke(&args);
    assert_eq!(first.code, 0);
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), 2);
    let second = invoke(&args);
    assert_eq!(first, second);
    let report = json(&first);
    assert_eq!(report["results"]["orbit_counts"], serde_json::json!([2, 2]));
    assert_eq!(report["discrepancies"].as_array().unwrap().len(), 4);
    std::fs::write(&cache, "1 0 0 1 1 1\n").unwrap();
    assert_eq!(invoke(&args).code, 2);
    let _ = std::fs::remove_file(cache);
}

#[test]
fn logical_and_algebra_subcommands() {
    let args = ["--p", "3", "--alpha", "1,0", "--beta", "0,1", "--gamma", "1,1", "--delta", "1,2", "--parity", "A"];
    let out = invoke(&[&["logical"][..], &args, &["--dims", "2x2x2", "--dims", "3,3,3"]].concat());
    assert_eq!(out.code, 0, "{}", out.stderr);
    let tori = json(&out)["results"]["tori"].clone();
    assert_eq!(tori[0]["encoded_qudits"], 4);
    assert_eq!(tori[1]["encoded_qudits"], 3);
    assert_eq!(tori[1]["generator_product_is_identity"], true);

    let out = invoke(&[&["algebra"][..], &args].concat());
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report = json(&out);
    assert_eq!(report["results"]["report"]["zx_phase"], 2);
    assert_eq!(report["results"]["report"]["inversion"][1]["expected"], 2);

    let out = invoke(&[&["algebra"][..], &args, &["--dims", "3x3x3"]].concat());
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("exceeds"), "{}", out.stderr);
}
