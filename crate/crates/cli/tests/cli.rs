use std::path::Path;
use std::process::{Command, Output};

use knotforge::kh::KhGroup;
use knotforge::BigradedGroup;
use knotforge_cli::render_svg;
use serde_json::Value;

fn knotforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotforge")).args(args).env_remove("KNOTFORGE_CATALOG").output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = knotforge(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn obstruct_fig5_right() {
    let v = ok_json(&["cfk", "obstruct", "fig5-right.json"]);
    assert_eq!(v["obstructed"], true);
    let c = &v["certificate"];
    assert_eq!((c["dval"].as_i64(), c["hbar"].as_i64(), c["rasmussen_bound"].as_i64()), (Some(-4), Some(2), Some(1)));
}

#[test]
fn stilde_of_mirror_8_19() {
    assert_eq!(ok_json(&["kh", "stilde", "--knot", "8_19m"]), Value::from(-3));
    assert_eq!(ok_json(&["kh", "stilde", "8_19"]), Value::from(3));
}

#[test]
fn hfk_of_unknot() {
    let v = ok_json(&["cfk", "hfk", "unknot.json"]);
    assert_eq!(v, serde_json::json!([{ "maslov": 0, "alexander": 0, "rank": 1 }]));
    let out = knotforge(&["cfk", "hfk", "unknot", "--format", "tsv"]);
    assert_eq!(stdout(&out), "maslov\talexander\trank\n0\t0\t1\n");
}

#[test]
fn exit_codes() {
    let out = knotforge(&["cfk", "tau", "--no-such-flag", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(knotforge(&[]).status.code(), Some(2));
    assert_eq!(knotforge(&["kh", "frobnicate"]).status.code(), Some(2));
    let out = knotforge(&["cfk", "tau", "/nonexistent/c.json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["code"], "IoError");
    assert!(!out.stderr.is_empty());
    let out = knotforge(&["kh", "compute", "9_42"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["code"], "UnknownKnot");
    let out = knotforge(&["kh", "compute", "kanenobu:3:3", "--max-crossings", "12"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((out.status.code(), v["code"].as_str()), (Some(1), Some("DiagramTooLarge")));
    let v: Value = serde_json::from_slice(&knotforge(&["cfk", "tau", "trefoil", "--max-grid", "13"]).stdout).unwrap();
    assert_eq!(v, Value::from(1));
    let out = knotforge(&["grid", "hfk", "--knot", "6_1", "--max-grid", "7"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((out.status.code(), v["code"].as_str()), (Some(1), Some("GridTooLarge")));
    let out = knotforge(&["verify", "nope"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cfk_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("t.json");
    let red = knotforge(&["cfk", "reduce", "trefoil"]);
    std::fs::write(&p, &red.stdout).unwrap();
    let ps = p.to_str().unwrap();
    assert_eq!(ok_json(&["cfk", "tau", ps]), Value::from(1));
    let v = ok_json(&["cfk", "validate", ps]);
    assert_eq!(v["valid"], true);
    let m = dir.path().join("m.json");
    std::fs::write(&m, knotforge(&["cfk", "mirror", ps]).stdout).unwrap();
    assert_eq!(ok_json(&["cfk", "tau", m.to_str().unwrap()]), Value::from(-1));
    let sum = dir.path().join("s.json");
    std::fs::write(&sum, knotforge(&["cfk", "tensor", ps, ps]).stdout).unwrap();
    assert_eq!(ok_json(&["cfk", "tau", sum.to_str().unwrap()]), Value::from(2));
    assert_eq!(ok_json(&["cfk", "dval", "trefoil", "--s", "0"]), Value::from(-2));
    assert_eq!(ok_json(&["cfk", "hbar", "fig5-right", "--m", "0"]), Value::from(2));
    let t = ok_json(&["cfk", "transpose", "trefoil"]);
    assert_eq!(t["generators"].as_array().unwrap().len(), 3);
    let minus = ok_json(&["cfk", "minus", "trefoil"]);
    assert_eq!(minus["free_summands"], serde_json::json!([{ "maslov": -2, "alexander": -1 }]));
    assert_eq!(ok_json(&["cfk", "lspace", "gap3"])["passes"], false);
    assert_eq!(ok_json(&["cfk", "lspace", "trefoil"])["passes"], true);
    std::fs::write(&p, r#"{"generators":[{"name":"x","maslov":0,"alexander":0}],"differential":[{"from":"x","to":"y","upower":0}]}"#).unwrap();
    assert_eq!(ok_json(&["cfk", "validate", ps])["valid"], false);
    let out = knotforge(&["cfk", "tau", ps]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["code"], "InvalidComplex");
}

#[test]
fn grid_commands() {
    let v = ok_json(&["grid", "hfk", "--knot", "trefoil_rh"]);
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(ok_json(&["grid", "alexander", "--knot", "6_1"]), serde_json::json!({ "-1": -2, "0": 5, "1": -2 }));
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("g.json");
    std::fs::write(&p, r#"{"size":2,"xs":[0,1],"os":[1,0]}"#).unwrap();
    assert_eq!(ok_json(&["grid", "alexander", "--grid", p.to_str().unwrap()]), serde_json::json!({ "0": 1 }));
    std::fs::write(&p, r#"{"size":2,"xs":[0,1],"os":[0,1]}"#).unwrap();
    let v: Value = serde_json::from_slice(&knotforge(&["grid", "hfk", "--grid", p.to_str().unwrap()]).stdout).unwrap();
    assert_eq!(v["code"], "InvalidGrid");
}

#[test]
fn knots_and_kh_commands() {
    let dir = tempfile::tempdir().unwrap();
    let k1 = dir.path().join("k1.json");
    std::fs::write(&k1, knotforge(&["knots", "family", "--i", "1"]).stdout).unwrap();
    let k1s = k1.to_str().unwrap();
    assert_eq!(ok_json(&["knots", "alexander", k1s]), ok_json(&["knots", "alexander", "6_1"]));
    assert_eq!(ok_json(&["kh", "compute", k1s]), ok_json(&["kh", "compute", "family:6_1:1"]));
    let v0 = ok_json(&["kh", "jones", "kanenobu:0:0"]);
    assert_eq!(ok_json(&["kh", "jones", "kanenobu:2:-2"]), v0);
    let kp = ok_json(&["knots", "kanenobu", "--p", "1", "--q", "-1"]);
    assert_eq!(kp["crossings"].as_array().unwrap().len(), 12);
    let sum = ok_json(&["knots", "sum", "trefoil_rh", "fig8"]);
    assert_eq!(sum["crossings"].as_array().unwrap().len(), 7);
    let m = dir.path().join("m.json");
    std::fs::write(&m, knotforge(&["knots", "mirror", "8_19"]).stdout).unwrap();
    assert_eq!(ok_json(&["kh", "stilde", m.to_str().unwrap()]), Value::from(-3));
    let names = ok_json(&["knots", "catalog"]);
    assert!(names.as_array().unwrap().contains(&Value::from("T(3,5)")));
    let e = ok_json(&["knots", "catalog", "fig8"]);
    assert_eq!(e["known"]["genus"], 1);
    let ss = ok_json(&["kh", "ss", "8_19m"]);
    assert_eq!((ss["collapse_page"].as_i64(), ss["survivor"].clone()), (Some(2), serde_json::json!([3, -3])));
    let rep = ok_json(&["kh", "skein", "--knot", "T(3,4)", "--crossing", "3"]);
    assert_eq!(rep["holds"], true);
    // two-component unlink from the closure of the trivial 2-braid
    let unlink = dir.path().join("u.json");
    std::fs::write(&unlink, r#"{"crossings":[],"signs":[],"basepoints":[1],"joins":[[1,1],[2,2]]}"#).unwrap();
    let u = unlink.to_str().unwrap();
    let cone = ok_json(&["kh", "cone", u, "--basepoints", "1,2"]);
    assert_eq!(cone, serde_json::json!([{ "delta2": -2, "q2": 4, "rank": 1 }, { "delta2": 0, "q2": 0, "rank": 1 }]));
    let v: Value = serde_json::from_slice(&knotforge(&["kh", "cone", u]).stdout).unwrap();
    assert_eq!(v["code"], "NoSecondBasepoint");
}

fn circles(svg: &str) -> usize {
    svg.matches("<circle").count()
}

#[test]
fn svg_plots() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for p in [&a, &b] {
        ok_json(&["kh", "compute", "8_19m", "--svg", p.to_str().unwrap()]);
    }
    let sa = std::fs::read(&a).unwrap();
    assert_eq!(sa, std::fs::read(&b).unwrap());
    assert_eq!(circles(std::str::from_utf8(&sa).unwrap()), 5);
    let t = dir.path().join("t.svg");
    ok_json(&["cfk", "hfk", "trefoil", "--svg", t.to_str().unwrap()]);
    let st = std::fs::read_to_string(&t).unwrap();
    assert_eq!(circles(&st), 3);
    assert!(st.contains(">m</text>") && st.contains(">a</text>"));
    let empty = render_svg(&BigradedGroup::new());
    assert!(empty.starts_with("<svg") && empty.trim_end().ends_with("</svg>") && circles(&empty) == 0);
    let g = KhGroup::from_ranks([((0, 0), 3)]);
    assert!(render_svg(&g).contains(">3</text>"));
    let out = knotforge(&["kh", "compute", "fig8", "--svg", "/nonexistent/dir/x.svg"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["code"], "IoError");
}

#[test]
fn verify_suites() {
    let v = ok_json(&["verify", "lspace"]);
    assert_eq!(v[0]["passed"], true);
    let a = ok_json(&["verify", "obstruction", "--seed", "9"]);
    assert_eq!(a[0]["passed"], true);
    let out = knotforge(&["verify", "cross-oracle", "--format", "tsv"]);
    assert!(stdout(&out).starts_with("id\tname\tpassed"));
}

fn copy_catalog(to: &Path) {
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/catalog");
    for f in std::fs::read_dir(src).unwrap() {
        let f = f.unwrap();
        std::fs::copy(f.path(), to.join(f.file_name())).unwrap();
    }
}

#[test]
fn catalog_override() {
    let dir = tempfile::tempdir().unwrap();
    copy_catalog(dir.path());
    let run = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_knotforge")).args(args).env("KNOTFORGE_CATALOG", dir.path()).output().unwrap();
    let manifest = dir.path().join("manifest.json");
    let mut m: Value = serde_json::from_str(&std::fs::read_to_string(&manifest).unwrap()).unwrap();
    m["entries"].as_array_mut().unwrap().retain(|e| e["name"] == "fig8");
    std::fs::write(&manifest, serde_json::to_string(&m).unwrap()).unwrap();
    let out = run(&["knots", "catalog"]);
    assert_eq!(serde_json::from_slice::<Value>(&out.stdout).unwrap(), serde_json::json!(["fig8"]));
    assert_eq!(run(&["kh", "stilde", "trefoil_rh"]).status.code(), Some(1));
    std::fs::write(dir.path().join("fig8.json"), "{}").unwrap();
    let out = run(&["kh", "stilde", "fig8"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((out.status.code(), v["code"].as_str()), (Some(1), Some("Catalog")));
}
