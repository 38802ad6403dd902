//! Drive the command-line front end in-process and read its JSON report.

use cubic_qupit::cli;

fn main() {
    let out = cli::run([
        "cubic-qupit",
        "check",
        "--p",
        "5",
        "--alpha",
        "1,0",
        "--beta",
        "0,1",
        "--gamma",
        "1,1",
        "--delta",
        "3,-3",
    ]);
    let report: serde_json::Value = serde_json::from_str(&out.stdout).expect("json report");
    println!("exit {}", out.code);
    println!("overall {}", report["results"]["theorem"]["overall"]);
    println!("discrepancies {}", report["discrepancies"]);
}
