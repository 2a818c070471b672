//! The installed binary, driven as a subprocess.

use std::process::{Command, Output};

fn braidskein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidskein")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

#[test]
fn documented_examples() {
    let o = braidskein(&["resolve", "2: 1 1 1"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "(2): A + B^2 ; (1,1): A*B\n"));
    let o = braidskein(&["parity", "2: 1 1 1"]);
    assert_eq!(stdout(&o), "k=1 p=1 n=0 ok\n");
    let o = braidskein(&["homfly", "2: 1 1 1"]);
    assert_eq!(stdout(&o), "-l^-4 - 2l^-2 + l^-2 m^2\n");
    let o = braidskein(&["homfly", "--oracle", "2: 1 1 1"]);
    assert_eq!(stdout(&o), "-l^-4 - 2l^-2 + l^-2 m^2\n");
}

#[test]
fn exit_codes() {
    let o = braidskein(&["resolve", ""]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty() && !o.stderr.is_empty());
    assert_eq!(braidskein(&[]).status.code(), Some(2));
    assert_eq!(braidskein(&["exchange-test", "--strands", "3", "3: 2", "2:"]).status.code(), Some(2));
    assert_eq!(braidskein(&["certify3", "3: 1 -2 1 -2"]).status.code(), Some(0));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["tree", "3: 1 -2 1 -2"][..],
        &["nugatory", "--json", "3: 1 1 2 -1 2"],
        &["exchange-search", "--max-len", "1", "--json"],
        &["jones", "3: 1 1 1 2 -1 2"],
    ] {
        let (a, b) = (braidskein(args), braidskein(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn json_reports_carry_the_text_data() {
    let o = braidskein(&["nugatory", "--json", "3: 1 -2 1 -2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["certificate"], "certified");
    let entries = v["scan"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    assert!(entries.iter().all(|e| e["verdict"] == "different"));
    assert_eq!(entries[1]["crossing"], "c2");
    assert_eq!(entries[1]["changed_word"], "3: 1 2 1 -2");

    let o = braidskein(&["labels", "--json", "2: 1 1 1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, serde_json::json!({"c1": "good", "c2": "bad", "c3": "good"}));
}

#[test]
fn quick_selftest_passes() {
    let start = std::time::Instant::now();
    let o = braidskein(&["selftest", "--quick"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("[PASS]")).count(), 10);
    assert!(start.elapsed().as_secs() < 10, "took {:?}", start.elapsed());
}
