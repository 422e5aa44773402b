use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn ncph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncph")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn info_summaries() {
    let a2 = stdout(&ncph(&["info", "A", "2"]));
    assert!(a2.contains("n=2 h=3 |W|=6 |T|=3"));
    let b3 = stdout(&ncph(&["info", "B", "3"]));
    assert!(b3.contains("n=3 h=6 |W|=48 |T|=9"));
    let a1 = stdout(&ncph(&["info", "A", "1"]));
    assert!(a1.contains("n=1 h=2 |W|=2 |T|=1"));
    let j = json_of(&ncph(&["info", "H", "3", "--json"]));
    assert_eq!(j["order"], 120);
    assert_eq!(j["roots"].as_array().unwrap().len(), 15);
}

#[test]
fn verify_all_b3() {
    let out = ncph(&["verify", "B", "3", "--all"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("all suites passed: 15 bounded regions, 10 facets"));
}

#[test]
fn verify_single_suite_and_degenerate_rank() {
    assert!(ncph(&["verify", "A", "2", "--suite", "fibers"]).status.success());
    assert!(ncph(&["verify", "A", "1", "--all"]).status.success());
    let bad = ncph(&["verify", "A", "2", "--suite", "nonsense"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn exit_codes_distinguish_budgets_and_input() {
    assert_eq!(ncph(&["info", "B", "3", "--group-cap", "10"]).status.code(), Some(3));
    assert_eq!(ncph(&["verify", "A", "3", "--simplex-budget", "3"]).status.code(), Some(3));
    assert_eq!(ncph(&["info", "X", "3"]).status.code(), Some(2));
    assert_eq!(ncph(&["render", "A", "2"]).status.code(), Some(2));
}

#[test]
fn export_documents() {
    let ncp = json_of(&ncph(&["export", "ncp", "A", "2"]));
    assert_eq!(ncp["elements"].as_array().unwrap().len(), 5);
    assert_eq!(ncp["hasse"].as_array().unwrap().len(), 6);

    let xc = json_of(&ncph(&["export", "xc", "A", "1"]));
    assert_eq!(xc["vertices"].as_array().unwrap().len(), 1);
    assert!(xc["edges"].as_array().unwrap().is_empty());

    let embed = json_of(&ncph(&["export", "embed", "B", "3"]));
    let inc = embed["incidence"].as_array().unwrap();
    assert_eq!(inc.len(), 15);
    assert!(inc.iter().all(|r| r.as_array().unwrap().len() == 10));
    assert_eq!(embed["rank"], 10);
    assert_eq!(embed["injective"], true);
    assert_eq!(embed["header"]["field"]["degree"], 2);

    let lattice = json_of(&ncph(&["export", "lattice", "A", "3"]));
    assert_eq!(lattice["reducedBetti"], serde_json::json!([[1, 6]]));
}

#[test]
fn outputs_are_byte_stable() {
    for args in [
        &["export", "embed", "B", "3"][..],
        &["export", "ncp", "H", "3"][..],
        &["render", "B", "3"][..],
    ] {
        assert_eq!(ncph(args).stdout, ncph(args).stdout);
    }
}

#[test]
fn matrix_file_and_swap() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c3.txt");
    std::fs::write(&file, "m = [[1,4,2],[4,1,3],[2,3,1]]\n").unwrap();
    let f = file.to_str().unwrap();
    let xc = json_of(&ncph(&["export", "xc", "C", "3", "--matrix", f]));
    assert_eq!(xc["facets"].as_array().unwrap().len(), 10);
    assert!(xc["facets"].as_array().unwrap().contains(&serde_json::json!([1, 3, 7])));
    std::fs::write(&file, "type=A rank=3").unwrap();
    assert!(stdout(&ncph(&["info", "Z", "9", "--matrix", f])).contains("|W|=24"));

    let plain = json_of(&ncph(&["info", "A", "3", "--json"]));
    let swapped = json_of(&ncph(&["info", "A", "3", "--json", "--swap-bipartition"]));
    assert_ne!(plain["header"]["bipartiteOrder"], swapped["header"]["bipartiteOrder"]);
    assert!(ncph(&["verify", "B", "3", "--all", "--swap-bipartition"]).status.success());
}

fn files_in(dir: &Path) -> Vec<String> {
    let mut v: Vec<String> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    v.sort();
    v
}

#[test]
fn out_dir_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert!(ncph(&["render", "B", "3", "--out", d]).status.success());
    assert!(ncph(&["export", "embed", "B", "3", "--out", d]).status.success());
    assert!(ncph(&["verify", "B", "3", "--out", d]).status.success());
    assert_eq!(files_in(dir.path()), vec![".ncph-cache", "B3.svg", "embed-B3.json", "verify-B3.json"]);
    let hashes = files_in(&dir.path().join(".ncph-cache"));
    assert_eq!(hashes.len(), 1);
    let entry = dir.path().join(".ncph-cache").join(&hashes[0]);
    assert_eq!(files_in(&entry), vec!["embed.json", "render.svg", "system.json"]);

    let first = std::fs::read(dir.path().join("embed-B3.json")).unwrap();
    assert!(ncph(&["export", "embed", "B", "3", "--out", d]).status.success());
    assert_eq!(std::fs::read(dir.path().join("embed-B3.json")).unwrap(), first);
    let fresh = ncph(&["export", "embed", "B", "3"]).stdout;
    assert_eq!(fresh, first);

    let report: Value = serde_json::from_slice(&std::fs::read(dir.path().join("verify-B3.json")).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["suites"].as_array().unwrap().len(), 13);
}

#[test]
fn render_counts() {
    let svg = stdout(&ncph(&["render", "B", "3"]));
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains(r#"viewBox="0 0 1000 1000""#));
    let section = |id: &str| {
        let start = svg.find(&format!(r#"<g id="{id}""#)).unwrap();
        let end = start + svg[start..].find("</g>").unwrap();
        svg[start..end].matches("<path").count()
    };
    assert_eq!(section("regions"), 15);
    assert_eq!(section("facets"), 10);
    assert_eq!(section("planes"), 9);
    assert!(ncph(&["render", "H", "3"]).status.success());
}
