use std::process::{Command, Output};

use serde_json::Value;

fn monored(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monored"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = monored(args);
    assert!(
        o.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).unwrap()
}

#[test]
fn rnum_prints_reduction_number_and_frame() {
    let out = ok(&["rnum", "x^4 + y^8 + x^3*y^3"]);
    assert!(out.lines().any(|l| l == "r=2"), "{out}");
    assert!(out.lines().any(|l| l == "J=(x^4,y^8)"), "{out}");
}

#[test]
fn rnum_json_is_a_flat_record() {
    let v = json(&["rnum", "--json", "x^4 + y^8 + x^3*y^3"]);
    assert_eq!(v["a"], 4);
    assert_eq!(v["b"], 8);
    assert_eq!(v["r"], 2);
    assert_eq!(v["witness_k"], 2);
    assert_eq!(v["J"], serde_json::json!([[0, 8], [4, 0]]));
    assert!(v.get("cold_bound").is_none());

    let v = json(&["rnum", "--json", "--set", "6:0,1,6"]);
    assert_eq!(
        (
            v["r"].as_u64(),
            v["cold_bound"].as_u64(),
            v["glp_bound"].as_i64()
        ),
        (Some(5), Some(6), Some(5))
    );
}

#[test]
fn closure_trace_table() {
    let out = ok(&["closure", "x^4 + y^8 + x^3*y^3", "--trace"]);
    assert!(out.contains("L=(x^4,x^3*y^3,x^2*y^6,y^8)"), "{out}");
    assert!(out.contains("added: x^2*y^6"), "{out}");
    assert!(out.lines().any(|l| l == "k=3"), "{out}");
    let rows: Vec<Vec<u64>> = out
        .lines()
        .filter_map(|l| {
            l.split_whitespace()
                .map(|t| t.parse().ok())
                .collect::<Option<Vec<u64>>>()
        })
        .filter(|r| r.len() == 5)
        .collect();
    assert_eq!(
        rows,
        vec![
            vec![1, 0, 0, 3, 3],
            vec![2, 1, 0, 2, 6],
            vec![3, 2, 1, 1, 1]
        ]
    );

    let v = json(&["closure", "--json", "--trace", "x^4 + y^8 + x^3*y^3"]);
    assert_eq!(v["k"], 3);
    assert_eq!(
        v["closure"],
        serde_json::json!([[0, 8], [2, 6], [3, 3], [4, 0]])
    );
}

#[test]
fn survey_rset_json() {
    assert_eq!(
        ok(&["survey", "rset", "5", "7", "--json"]).trim(),
        r#"{"set":[1,2,3,4]}"#
    );
}

#[test]
fn survey_tables_csv_and_json() {
    let csv = ok(&["survey", "m", "5"]);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("parameter,j,count,total,ratio_num,ratio_den")
    );
    let total: u64 = lines
        .map(|l| l.split(',').nth(2).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 16);

    let v = json(&["survey", "n", "10", "--json"]);
    assert_eq!(v["total"], 9);
    assert_eq!(v["buckets"]["9"], 4);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["total"] == 9));
}

#[test]
fn json_output_round_trips() {
    // Feeding emitted generators back in reproduces the output byte for byte.
    for ideal in [
        "x^4 + y^8 + x^3*y^3",
        "x^5 + y^7 + x*y^6",
        "x^6 + x^4*y^3 + x*y^5 + y^6",
    ] {
        for verb in ["rnum", "closure", "powers"] {
            let first = ok(&[verb, "--json", ideal]);
            let v: Value = serde_json::from_str(&first).unwrap();
            let again = ok(&[verb, "--json", &v["generators"].to_string()]);
            assert_eq!(first, again, "{verb} {ideal}");
        }
    }
    let first = ok(&["closure", "--json", "x^4 + y^8 + x^3*y^3"]);
    let v: Value = serde_json::from_str(&first).unwrap();
    let l = v["closure"].to_string();
    let again: Value = serde_json::from_str(&ok(&["closure", "--json", &l])).unwrap();
    assert_eq!(again["closure"], v["closure"]);
    assert_eq!(again["added"], serde_json::json!([]));
}

#[test]
fn exponent_sets_round_trip() {
    let v = json(&["sumset", "--json", "--set", "3:0,1,3", "--set", "2:0,2"]);
    assert_eq!(v, serde_json::json!({"g": 5, "members": [0, 1, 2, 3, 5]}));
    let members: Vec<String> = v["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m.to_string())
        .collect();
    let text = format!("{}:{}", v["g"], members.join(","));
    assert_eq!(ok(&["sumset", "--set", &text, "--kmax", "1"]).trim(), text);
    assert_eq!(
        ok(&["sumset", "--set", "4:0,1,4", "--kmax", "3"]).trim(),
        "12:0,1,2,3,4,5,6,8,9,12"
    );
}

#[test]
fn cap_hits_exit_one() {
    let o = monored(&["rnum", "x^5 + y^7 + x*y^6", "--cap", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap 3"));
    assert!(o.stdout.is_empty());

    let o = monored(&["powers", "x^5 + y^7 + x*y^6", "--cap", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = monored(&["rnum", "--set", "5:0,1,5", "--cap", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let o = monored(&["closure", "x^4 + y^8 + x^3*y^3", "--cap", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        monored(&["rnum", "--set", "5:0,1,5", "--cap", "5"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        &["rnum", "x^4 + y^8 + x*y"][..],
        &["rnum", "x^4 + x*y"],
        &["closure", "x^4 + y^8 + x*y"],
        &["survey", "prime-gap", "9"],
        &["survey", "m", "40"],
    ] {
        let o = monored(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        &["rnum", "x^4 + y^"][..],
        &["rnum", "z^2"],
        &["classify", "[(1,2"],
        &["sumset", "--set", "3:0,2"],
        &["rnum", "--cap", "many", "x^2 + y^2"],
        &["frobnicate"],
    ] {
        let o = monored(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn output_is_ascii() {
    for args in [
        &["rnum", "x^4 + y^8 + x^3*y^3"][..],
        &["closure", "--trace", "x^4 + y^8 + x^3*y^3"],
        &["powers", "x^5 + y^7 + x*y^6", "--kmax", "4"],
        &["survey", "coverage", "5"],
        &["--help"],
    ] {
        assert!(ok(args).is_ascii(), "{args:?}");
    }
}

#[test]
fn reduce_and_classify() {
    let out = ok(&["reduce", "x^7 + x^6*y^2 + x^3*y^3 + x^2*y^5 + x*y^6 + y^10"]);
    assert!(out.contains("J=(x^7,x^3*y^3,x*y^6,y^10)"), "{out}");
    let v = json(&["classify", "--json", "x^4 + y^4 + x^2*y^2"]);
    assert_eq!(
        v,
        serde_json::json!({"a": 4, "b": 4, "in_frame": true, "quasi_equigenerated": true})
    );
    let v = json(&["classify", "--json", "x^4 + y^8 + x*y"]);
    assert_eq!(v["in_frame"], false);
}
