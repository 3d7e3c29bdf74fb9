use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_grafotop")).args(args).output().expect("spawn grafotop");
    let stdout = String::from_utf8(out.stdout).expect("utf8");
    let json = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("bad json ({e}): {stdout}"));
    (out.status.code().expect("exit code"), json)
}

#[test]
fn bull_dimension() {
    let (code, v) = run(&["dim", "--builtin", "bull"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "22/15");
    assert_eq!(v["details"]["local"]["4"], "0");
}

#[test]
fn spec_form_matches_builtin_flag() {
    let (_, a) = run(&["dim", "builtin:cycle:7"]);
    let (_, b) = run(&["dim", "--builtin", "cycle", "--params", "7"]);
    assert_eq!(a, b);
    assert_eq!(a["value"], "1");
}

#[test]
fn petersen_euler_characteristic() {
    let (code, v) = run(&["chi", "--builtin", "petersen"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], -5);
}

#[test]
fn curvature_sums_to_chi() {
    let (_, v) = run(&["curvature", "--builtin", "octahedron"]);
    assert_eq!(v["value"], "2");
    assert_eq!(v["details"]["euler_characteristic"], 2);
}

#[test]
fn morse_indices_sum_to_chi() {
    let (_, v) = run(&["morse", "--builtin", "icosahedron", "--seed", "5"]);
    assert_eq!(v["value"], 2);
    assert_eq!(v["details"]["equal"], true);
}

#[test]
fn betti_check_on_octahedron() {
    let (code, v) = run(&["betti", "--builtin", "octahedron", "--check"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], serde_json::json!([1, 0, 1]));
    assert_eq!(v["details"]["checks"]["d_squared_zero"], true);
}

#[test]
fn negative_verdict_exits_one() {
    let (code, v) = run(&["homotopy", "contractible", "--builtin", "cycle", "--params", "4"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "no");
    let (code, v) = run(&["homotopy", "contractible", "--builtin", "wheel", "--params", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "yes");
}

#[test]
fn input_errors_exit_two() {
    let (code, v) = run(&["dim", "--builtin", "no-such-graph"]);
    assert_eq!(code, 2);
    assert!(v["error"].is_string());
    let (code, _) = run(&["dim", "/nonexistent/graph.json"]);
    assert_eq!(code, 2);
}

#[test]
fn c6_windows_validates() {
    let (code, v) = run(&["topo", "validate", "library:c6-windows"]);
    assert_eq!(code, 0);
    assert_eq!(v["overall"]["verdict"], "yes");
}

#[test]
fn graph_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("grafotop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (_, g) = run(&["graph", "builtin", "wheel", "--params", "5"]);
    let path = dir.join("w5.json");
    std::fs::write(&path, g.to_string()).unwrap();
    let (_, v) = run(&["chi", path.to_str().unwrap()]);
    assert_eq!(v["value"], 1);
    let (_, dot) = run(&["graph", "convert", path.to_str().unwrap(), "--format", "dot"]);
    let dot_path = dir.join("w5.dot");
    std::fs::write(&dot_path, dot.as_str().unwrap()).unwrap();
    let (_, v) = run(&["dim", dot_path.to_str().unwrap()]);
    assert_eq!(v["value"], "2");
}

#[test]
fn octahedron_antipode_lefschetz() {
    let dir = std::env::temp_dir().join(format!("grafotop-cli-map-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("map.json");
    // pairs of opposite vertices in the builtin octahedron
    let (_, g) = run(&["graph", "builtin", "octahedron"]);
    let labels: Vec<i64> = g["vertices"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
    let edges: Vec<(i64, i64)> =
        g["edges"].as_array().unwrap().iter().map(|e| (e[0].as_i64().unwrap(), e[1].as_i64().unwrap())).collect();
    let adjacent = |a: i64, b: i64| edges.contains(&(a.min(b), a.max(b)));
    let pairs: Vec<[i64; 2]> = labels
        .iter()
        .map(|&a| [a, *labels.iter().find(|&&b| b != a && !adjacent(a, b)).unwrap()])
        .collect();
    std::fs::write(&path, serde_json::to_string(&pairs).unwrap()).unwrap();
    let (code, v) = run(&["fix", "lefschetz", "--builtin", "octahedron", "--map", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["lefschetz"], 0);
    assert_eq!(v["traces"], serde_json::json!([1, 0, -1]));
}

#[test]
fn one_homeomorphic_cycles() {
    let (code, v) = run(&["homeo", "one-homeomorphic", "builtin:cycle:4", "builtin:cycle:9"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "yes");
}

#[test]
fn suite_subset_passes() {
    let (code, v) = run(&["suite", "--theorems", "gauss-bonnet,euler-poincare", "--random", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
}

fn raw(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_grafotop")).args(args).output().expect("spawn grafotop");
    (out.status.code().expect("exit code"), out.stdout)
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["topo", "summary", "library:circle-g15"][..],
        &["homeo", "check", "library:circle-h10", "library:circle-g15"],
        &["morse", "--builtin", "cube", "--seed", "9"],
        &["topo", "optimize", "star:builtin:wheel:6"],
    ] {
        let (c1, a) = raw(args);
        let (c2, b) = raw(args);
        assert_eq!((c1, &a), (c2, &b), "{args:?}");
        serde_json::from_slice::<Value>(&a).expect("json");
    }
}

#[test]
fn corpus_never_violates_internal_identities() {
    let (_, list) = run(&["graph", "list"]);
    for entry in list["graphs"].as_array().unwrap() {
        let name = entry["name"].as_str().unwrap();
        for args in [
            vec!["betti", "--builtin", name, "--check"],
            vec!["fix", "lefschetz", "--builtin", name],
            vec!["topo", "validate", &format!("star:builtin:{name}")],
        ] {
            let (code, out) = raw(&args.iter().map(|s| s.as_ref()).collect::<Vec<&str>>());
            assert!(code == 0 || code == 1, "{args:?} exited {code}: {}", String::from_utf8_lossy(&out));
        }
    }
    for entry in list["topologies"].as_array().unwrap() {
        let spec = format!("library:{}", entry["name"].as_str().unwrap());
        let (code, _) = raw(&["topo", "validate", &spec]);
        assert!(code == 0 || code == 1, "{spec} exited {code}");
    }
}
