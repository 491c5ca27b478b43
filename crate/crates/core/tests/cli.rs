use std::path::PathBuf;
use std::process::{Command, Output};

use favour::construction::build_two_class_world;
use favour::logic::parse_formula;
use favour::rational::exact;
use favour::world::parse_world;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn favour(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_favour"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = favour(&all);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn value<'a>(report: &'a serde_json::Value, name: &str) -> &'a str {
    report["values"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["name"] == name)
        .unwrap_or_else(|| panic!("no value {name} in {report}"))["exact"]
        .as_str()
        .unwrap()
}

fn result<'a>(report: &'a serde_json::Value, name: &str) -> &'a str {
    report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["name"] == name)
        .unwrap_or_else(|| panic!("no result {name} in {report}"))["value"]
        .as_str()
        .unwrap()
}

#[test]
fn favours_on_two_class_world() {
    let world = data("twoclass.world");
    let out = favour(&[
        "favours",
        "--world",
        world.to_str().unwrap(),
        "-h",
        "s",
        "-e",
        "c1 | c2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("p(s | (c1 | c2)) = 3/7 (0.428571428571429)"),
        "{text}"
    );
    assert!(text.contains("p(s) = 1/2 (0.5)"), "{text}");
    assert!(text.contains("verdict: disfavours"), "{text}");
}

#[test]
fn bundled_world_matches_the_construction() {
    let bundled = parse_world(&std::fs::read_to_string(data("twoclass.world")).unwrap()).unwrap();
    let built = build_two_class_world(1);
    for (h, e) in [
        ("s", "c1"),
        ("s", "c2"),
        ("s", "c1 | c2"),
        ("s", "c1 & c2"),
        ("c1", "s"),
    ] {
        let (h, e) = (parse_formula(h).unwrap(), parse_formula(e).unwrap());
        assert_eq!(
            bundled.conditional(&h, &e).unwrap(),
            built.conditional(&h, &e).unwrap()
        );
    }
}

#[test]
fn report_values_equal_library_rationals() {
    let world_path = data("twoclass.world");
    let world = parse_world(&std::fs::read_to_string(&world_path).unwrap()).unwrap();
    for (h, e) in [("s", "c1"), ("c1 | s", "!c2"), ("s -> c1", "c2 & s")] {
        let report = json(&[
            "eval",
            "--world",
            world_path.to_str().unwrap(),
            "-h",
            h,
            "-e",
            e,
        ]);
        let expected = world
            .conditional(&parse_formula(h).unwrap(), &parse_formula(e).unwrap())
            .unwrap();
        assert_eq!(report["values"][0]["exact"], exact(&expected));
    }
}

#[test]
fn construct_general_writes_world() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("general.world");
    let report = json(&[
        "construct",
        "general",
        "--v1",
        "9/10",
        "--v2",
        "1/10",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(result(&report, "k"), "9");
    assert_eq!(result(&report, "n"), "81");
    assert_eq!(value(&report, "min over i of p(s | c_i)"), "9/10");
    assert_eq!(value(&report, "p(s | c_1 | ... | c_n)"), "1/10");
    let world = parse_world(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(world.universe().len(), 82);
    let s = parse_formula("s").unwrap();
    assert_eq!(
        exact(
            &world
                .conditional(&s, &parse_formula("c40").unwrap())
                .unwrap()
        ),
        "9/10"
    );

    let again = favour(&[
        "--json",
        "eval",
        "--world",
        out.to_str().unwrap(),
        "-h",
        "s",
        "-e",
        "c1 | c81",
    ]);
    assert_eq!(out_value(&again), "9/11");
}

fn out_value(out: &Output) -> String {
    let report: serde_json::Value = serde_json::from_str(&stdout(out)).unwrap();
    report["values"][0]["exact"].as_str().unwrap().to_string()
}

#[test]
fn construct_two_class_and_conjunctive() {
    let report = json(&["construct", "two-class"]);
    assert_eq!(value(&report, "p(s | (c1 | c2))"), "3/7");
    assert_eq!(value(&report, "p(s | c1 & c2)"), "1/1");
    assert_eq!(result(&report, "c1 | c2 favours s"), "disfavours");

    let report = json(&["construct", "conjunctive", "--v1", "3/4", "--v2", "1/5"]);
    assert_eq!(value(&report, "p(c | a)"), "3/4");
    assert_eq!(value(&report, "p(c | b)"), "3/4");
    assert_eq!(value(&report, "p(c | a & b)"), "1/5");
}

#[test]
fn extensions_of_polly() {
    let theory = data("poly.theory");
    let report = json(&[
        "extensions",
        "--theory",
        theory.to_str().unwrap(),
        "-h",
        "run",
    ]);
    assert_eq!(result(&report, "extensions"), "1");
    assert_eq!(result(&report, "extension 1 generating defaults"), "none");
    assert_eq!(result(&report, "extension 1 entails run"), "false");
    assert_eq!(result(&report, "extension 1 verified"), "true");

    let theory = data("poly-consequent.theory");
    let report = json(&["query", "--theory", theory.to_str().unwrap(), "-h", "run"]);
    assert_eq!(result(&report, "entailed"), "true");
}

#[test]
fn to_consequent_then_query() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bird.theory");
    let theory = data("bird.theory");
    let status = favour(&[
        "to-consequent",
        "--theory",
        theory.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(status.status.code(), Some(0));
    let report = json(&["query", "--theory", out.to_str().unwrap(), "-h", "!emu"]);
    assert_eq!(result(&report, "entailed"), "true");
    let report = json(&["query", "--theory", theory.to_str().unwrap(), "-h", "!emu"]);
    assert_eq!(result(&report, "entailed"), "false");

    let emu = data("emu.theory");
    let emu = emu.to_str().unwrap();
    assert_eq!(
        result(&json(&["query", "--theory", emu, "-h", "fly"]), "entailed"),
        "false"
    );
    assert_eq!(
        result(
            &json(&["query", "--theory", emu, "-h", "fly", "--mode", "credulous"]),
            "entailed"
        ),
        "true"
    );
}

#[test]
fn cell_table_sources() {
    let simpson = data("simpson.cells");
    let report = json(&["simpson", "--world", simpson.to_str().unwrap()]);
    assert_eq!(result(&report, "verdict"), "reversal");
    assert_eq!(value(&report, "p(a | b & c)"), "1/1");
    assert_eq!(value(&report, "p(a | c)"), "5/6");
    assert_eq!(value(&report, "p(a | b & !c)"), "3/10");
    assert_eq!(value(&report, "p(a | !c)"), "1/4");
    assert_eq!(value(&report, "p(a | b)"), "5/12");
    assert_eq!(value(&report, "p(a)"), "13/24");

    let inline = json(&["simpson", "--cells", "cells a b c : 2 3 8 0 0 7 2 2"]);
    assert_eq!(inline["values"], report["values"]);

    let chung = data("chung.cells");
    let report = json(&[
        "chung",
        "--world",
        chung.to_str().unwrap(),
        "--pattern",
        "chung-conj",
    ]);
    assert_eq!(result(&report, "chung-conjunctive"), "holds");
    let report = json(&["prop2", "--world", chung.to_str().unwrap()]);
    assert_eq!(result(&report, "verdict"), "satisfied-via-disjunction");

    let report = json(&["profile", "--world", simpson.to_str().unwrap()]);
    assert_eq!(result(&report, "verdict"), "consistent");
}

#[test]
fn principle_and_prop1() {
    let two = data("twoclass.world");
    let two = two.to_str().unwrap();
    let report = json(&[
        "principle",
        "--world",
        two,
        "-a",
        "c1",
        "-b",
        "c2",
        "-c",
        "s",
    ]);
    assert_eq!(result(&report, "verdict"), "counterexample");
    let report = json(&["prop2", "--world", two, "-a", "s", "-b", "c1", "-c", "c2"]);
    assert_eq!(result(&report, "verdict"), "satisfied-via-conjunction");

    let exclusive = data("exclusive.world");
    let exclusive = exclusive.to_str().unwrap();
    let report = json(&[
        "prop1", "--world", exclusive, "-a", "a", "-b", "b", "-c", "c",
    ]);
    assert_eq!(result(&report, "verdict"), "confirmed");
    assert_eq!(value(&report, "p((a | b) | c)"), "1/1");
    let report = json(&[
        "principle",
        "--world",
        exclusive,
        "-a",
        "a",
        "-b",
        "b",
        "-c",
        "c",
    ]);
    assert_eq!(result(&report, "verdict"), "holds");
    let report = json(&["prop1", "--world", two, "-a", "c1", "-b", "c2", "-c", "s"]);
    assert_eq!(result(&report, "verdict"), "precondition-failed");
}

#[test]
fn search_is_deterministic() {
    let args = [
        "--json",
        "search",
        "--pattern",
        "chung-disj",
        "--max-cell",
        "3",
        "--limit",
        "20",
    ];
    let first = favour(&args);
    let second = favour(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let report: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(report["payload"].as_array().unwrap().len(), 20);
}

#[test]
fn exit_codes_and_diagnostics() {
    let world = data("twoclass.world");
    let world = world.to_str().unwrap();

    let out = favour(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    let out = favour(&["construct", "general", "--v1", "0.9", "--v2", "1/10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("0.9"));

    let out = favour(&["simpson", "--world", world]);
    assert_eq!(out.status.code(), Some(2));

    let out = favour(&[
        "favours",
        "--world",
        "/nonexistent/x.world",
        "-h",
        "s",
        "-e",
        "c1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr(&out).lines().count(), 1);

    let out = favour(&["favours", "--world", world, "-h", "s", "-e", "c1 & (c2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("position 8"), "{}", stderr(&out));

    let out = favour(&["favours", "--world", world, "-h", "s", "-e", "c3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("unknown atom `c3` at position 0"),
        "{}",
        stderr(&out)
    );

    let out = favour(&["construct", "general", "--v1", "1/10", "--v2", "9/10"]);
    assert_eq!(out.status.code(), Some(1));

    // A disfavouring verdict is still a successful run.
    let out = favour(&["favours", "--world", world, "-h", "s", "-e", "c1 | c2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_reports_are_byte_identical() {
    let theory = data("emu.theory");
    let args = [
        "--json",
        "extensions",
        "--theory",
        theory.to_str().unwrap(),
        "-h",
        "fly",
    ];
    assert_eq!(favour(&args).stdout, favour(&args).stdout);
    let world = data("twoclass.world");
    let args = [
        "profile",
        "--world",
        world.to_str().unwrap(),
        "-a",
        "s",
        "-b",
        "c1",
        "-c",
        "c2",
        "--json",
    ];
    assert_eq!(favour(&args).stdout, favour(&args).stdout);
}

fn golden(name: &str, args: &[&str]) {
    let out = Command::new(env!("CARGO_BIN_EXE_favour"))
        .args(args)
        .current_dir(data(""))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        stdout(&out),
        expected,
        "report differs from {}",
        path.display()
    );
}

#[test]
fn golden_reports() {
    golden(
        "favours.txt",
        &[
            "favours",
            "--world",
            "twoclass.world",
            "-h",
            "s",
            "-e",
            "c1 | c2",
        ],
    );
    golden(
        "simpson.json",
        &["--json", "simpson", "--world", "simpson.cells"],
    );
    golden(
        "extensions.txt",
        &["extensions", "--theory", "emu.theory", "-h", "fly"],
    );
    golden("two-class.txt", &["construct", "two-class"]);
}
