use std::collections::BTreeSet;

use rvar_cli::run;
use serde_json::Value;

fn rvar(args: &[&str]) -> rvar_cli::Outcome {
    run(std::iter::once("rvar").chain(args.iter().copied()))
}

const EX30_TEXT: &str = "\
<5,6,7>  [7]  F_Δ=-1
  <5,6,13,14>  [13,14]  F_Δ=7
    <5,6,14>  [14]  F_Δ=13
      <5,6,19>  [19]  F_Δ=14
        <5,6>  []  F_Δ=19
    <5,6,13>  [13]  F_Δ=14
";

#[test]
fn interval_tree_text() {
    let out = rvar(&["tree", "--interval", "<5,6>:<5,6,7>"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, EX30_TEXT);
    assert!(out.stderr.is_empty());
}

#[test]
fn interval_tree_dot() {
    let out = rvar(&["tree", "--interval", "<5,6>:<5,6,7>", "--format", "dot"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("digraph G {\n"));
    assert!(out.stdout.ends_with("}\n"));
    assert!(out.stdout.contains("  n0 [label=\"<5,6,7>\"];\n"));
    assert!(out.stdout.contains("  n1 -> n0;\n"));
    assert_eq!(out.stdout.matches(" -> ").count(), 5);
}

#[test]
fn json_tree_round_trips() {
    let out = rvar(&[
        "tree",
        "--generated",
        "<5,7,9,11,13>;<4,10,11,13>:<4,5,7>",
        "--format",
        "json",
    ]);
    assert_eq!(out.code, 0);
    let records: Vec<Value> = out
        .stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 12);
    assert_eq!(records[0]["parent"], Value::Null);
    assert_eq!(records[0]["fdelta"], -1);
    let from_json: BTreeSet<String> = records
        .iter()
        .map(|r| r["sg"].as_str().unwrap().to_string())
        .collect();
    let text = rvar(&["tree", "--generated", "<5,7,9,11,13>;<4,10,11,13>:<4,5,7>"]);
    let from_text: BTreeSet<String> = text
        .stdout
        .lines()
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(from_json, from_text);
    for r in &records[1..] {
        let parent = &records[r["parent"].as_u64().unwrap() as usize];
        assert_eq!(
            parent["genus"].as_u64().unwrap() + 1,
            r["genus"].as_u64().unwrap()
        );
    }
}

#[test]
fn genus_level_and_trace() {
    let out = rvar(&["genus-level", "--restricted", "4,6:<4,6,7>", "--genus", "8"]);
    assert_eq!(out.stdout, "<4,6,13>\n<4,6,15,17>\n");
    let out = rvar(&[
        "genus-level",
        "--restricted",
        "4,6:<4,6,7>",
        "--genus",
        "8",
        "--trace",
    ]);
    assert_eq!(
        out.stdout,
        "i=5  <4,6,7>  B=[7]\n\
         i=6  <4,6,11,13>  B=[11,13]\n\
         i=7  <4,6,13,15>  B=[13,15]\n\
         i=7  <4,6,11>  B=[]\n\
         i=8  <4,6,15,17>\n\
         i=8  <4,6,13>\n"
    );
    let out = rvar(&["genus-level", "--interval", "<5,6>:<5,6,7>", "--genus", "3"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, ""));
}

#[test]
fn semigroup_queries() {
    assert_eq!(rvar(&["genus", "<4,6,7>"]).stdout, "5\n");
    assert_eq!(rvar(&["genus", "4,6,13"]).stdout, "8\n");
    assert_eq!(rvar(&["msg", "<5,6,7,8,9>"]).stdout, "[5,6,7,8,9]\n");
    assert_eq!(rvar(&["frobenius", "<5,6>"]).stdout, "19\n");
    assert_eq!(rvar(&["frobenius", "N"]).stdout, "-1\n");
    assert_eq!(
        rvar(&["frobenius", "<5,6,13>", "--within", "<5,6,7>"]).stdout,
        "14\n"
    );
    assert_eq!(rvar(&["intersect", "<2,5>", "<3,4>"]).stdout, "<4,6,7,9>\n");
    let info = rvar(&["info", "<4,6,7>"]);
    assert!(info.stdout.contains("gaps: [1,2,3,5,9]\n"));
}

#[test]
fn chain_and_minsys() {
    let out = rvar(&["chain", "<5,6>", "<5,6,7>"]);
    assert_eq!(
        out.stdout,
        "<5,6>  F_T=19\n<5,6,19>  F_T=14\n<5,6,14>  F_T=13\n<5,6,13,14>  F_T=7\n<5,6,7>\n"
    );
    let out = rvar(&[
        "minsys",
        "--generated",
        "<5,7,9,11,13>;<4,10,11,13>:<4,5,7>",
        "<4,7,9,10>",
    ]);
    assert_eq!(out.stdout, "[4,7]\n");
}

#[test]
fn closures() {
    assert_eq!(
        rvar(&["closure", "--kind", "ld", "5"]).stdout,
        "<5,9,13,17,21>\n"
    );
    assert_eq!(
        rvar(&["closure", "--kind", "pl", "{4,7}", "--within", "<4,7,13>"]).stdout,
        "<4,7,13>\n"
    );
    assert_eq!(
        rvar(&["closure", "--kind", "ld", "--minimal-system", "<4,7,10,13>"]).stdout,
        "[4]\n"
    );
    let out = rvar(&["closure", "--kind", "ld", "--minimal-system", "<5,6>"]);
    assert_eq!(out.code, 2);
}

#[test]
fn descendants_and_restrict() {
    let p = "<5,6,8,9>;<5,6,9,13>;<5,6,8>;<5,6,13,14>;<5,6,9>;<5,6,14>;<5,6,13>;<5,6,19>;<5,6>:<5,6,8,9>";
    let out = rvar(&["descendants", "--generated", p, "--of", "<5,6,13,14>"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(
        out.stdout,
        "<5,6,13,14>  [13,14]  F_Δ=-1\n  <5,6,14>  [14]  F_Δ=13\n    <5,6,19>  [19]  F_Δ=14\n      <5,6>  []  F_Δ=19\n  <5,6,13>  [13]  F_Δ=14\n"
    );
    let out = rvar(&["restrict", "--interval", "<5,6>:<5,6,7>", "--by", "N"]);
    assert_eq!(out.stdout.lines().count(), 6);
}

#[test]
fn exit_codes() {
    assert_eq!(rvar(&["genus", "<4,6>"]).code, 2);
    assert_eq!(rvar(&["genus", "<4,-6>"]).code, 1);
    assert_eq!(rvar(&["tree"]).code, 1);
    assert_eq!(
        rvar(&["tree", "--interval", "<5,6>:<5,6,7>", "--format", "svg"]).code,
        1
    );
    assert_eq!(
        rvar(&["tree", "--interval", "a:b", "--restricted", "4:<4,5>"]).code,
        1
    );
    assert_eq!(rvar(&["tree", "--interval", "<5,6,7>:<5,6>"]).code, 2);
    assert_eq!(
        rvar(&["minsys", "--interval", "<5,6>:<5,6,7>", "<5,7>"]).code,
        2
    );
    assert_eq!(rvar(&["tree", "--restricted", "4,6:<4,6,7>"]).code, 1);
    assert_eq!(rvar(&["--help"]).code, 0);
    let out = rvar(&["genus", "<4,6,x>"]);
    assert!(out.stderr.contains("`x`"), "{}", out.stderr);
}

#[test]
fn truncation_is_reported() {
    let out = rvar(&["tree", "--restricted", "4,6:<4,6,7>", "--genus-bound", "7"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().count(), 4);
    assert!(out.stderr.contains("truncated at genus 7"));
}

#[test]
fn verify_fixtures() {
    let out = rvar(&["verify"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(!out.stdout.contains("FAIL"));
    let out = rvar(&[
        "verify",
        "--restricted",
        "4,6:<4,6,7>",
        "--genus-bound",
        "10",
    ]);
    assert_eq!(out.code, 0, "{}", out.stdout);
}
