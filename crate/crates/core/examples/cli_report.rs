//! Driving the command-line front end from code and reading its JSON report.

use pmcover::cli;

fn main() {
    let args = [
        "pmcover",
        "cover",
        "--gen",
        "petersen",
        "-r",
        "3",
        "-k",
        "2",
        "--mode",
        "exact-lemma",
        "--format",
        "json",
    ];
    let mut out = Vec::new();
    let code = cli::run(args, &mut out, &mut std::io::stderr());
    let report: serde_json::Value = serde_json::from_slice(&out).expect("json report");
    println!("exit {code}");
    println!("fraction {}", report["result"]["fraction"]);
    for c in report["certificates"].as_array().into_iter().flatten() {
        println!(
            "step {} level {} gain {}",
            c["step"], c["level"], c["actual_gain"]
        );
    }
}
