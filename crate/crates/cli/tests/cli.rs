use std::path::{Path, PathBuf};

use bottleneck_voronoi::{Instance, Scalar};
use bottleneck_voronoi_cli::io::InstanceFile;
use bottleneck_voronoi_cli::output::{CoverOutput, DiagramOutput, EvalOutput, MatchOutput, PathOutput, Summary};
use bottleneck_voronoi_cli::run_with;
use serde::de::DeserializeOwned;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn bvd(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bvd").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn parse<T: DeserializeOwned>(r: &Run) -> T {
    assert_eq!(r.code, 0, "stderr: {}", r.err);
    serde_json::from_str(&r.out).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn eval_reports_exact_and_approximate_value() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i.json", r#"{"A": [[0, 0], [10, 0]], "B": [[0, 0], [1, 0]]}"#);
    let r: EvalOutput = parse(&bvd(&["eval", s(&f), "--t", "0,0"]));
    assert_eq!(r.value, "81");
    assert_eq!(r.approx, 81.0);
    assert_eq!(r.matching, vec![[0, 0], [1, 1]]);
}

#[test]
fn match_on_a_subset_translate_is_zero() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i.json", r#"{"A": [[0, 0], [5, 1], [8, 7], [9, 9]], "B": [[1, 1], [4, 7]]}"#);
    let r: MatchOutput = parse(&bvd(&["match", s(&f)]));
    assert_eq!(r.value, "0");
    let t = r.t.parse().unwrap();
    let inst: Instance = serde_json::from_str::<InstanceFile>(&std::fs::read_to_string(&f).unwrap())
        .unwrap()
        .to_instance()
        .unwrap();
    assert_eq!(bottleneck_voronoi::eval_e(&inst, &t).0, Scalar::zero());
}

#[test]
fn diagram_of_a_triangle_uses_three_bisectors() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i.json", r#"{"A": [[0, 0], [4, 0], [0, 4]], "B": [[0, 0]]}"#);
    let r: DiagramOutput = parse(&bvd(&["diagram", s(&f)]));
    assert_eq!(r.summary.used_bisectors, 3);
    assert_eq!(r.summary.cells, r.cells.len());
    assert!(r.lex_faces.is_none());

    let out = dir.path().join("d.json");
    let svg = dir.path().join("d.svg");
    let summary: Summary = parse(&bvd(&["diagram", s(&f), "--lex", "-o", s(&out), "--svg", s(&svg)]));
    assert_eq!(summary, r.summary);
    let full: DiagramOutput = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(full.lex_faces.unwrap().len() > full.cells.len());
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn path_and_cover_commands() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i.json", r#"{"A": [[0, 0], [10, 0]], "B": [[0, 0]]}"#);
    let p: PathOutput = parse(&bvd(&["path", s(&f), "--from", "0,0", "--to", "10,0"]));
    assert_eq!(p.value, "25");
    assert!(p.polyline.iter().any(|v| v.exact == ["5".to_string(), "0".to_string()]));

    let single = write(&dir, "one.json", r#"{"A": [[0, 0]], "B": [[0, 0]]}"#);
    let sq = write(&dir, "q.json", r#"[[-1, -1], [1, -1], [1, 1], [-1, 1]]"#);
    let c: CoverOutput = parse(&bvd(&["cover", s(&single), "--polygon", s(&sq)]));
    assert!(c.feasible);
    assert_eq!(c.value.as_deref(), Some("2"));

    let wide = write(&dir, "w.json", r#"{"A": [[0, 0], [5, 0]], "B": [[0, 0], [5, 0]]}"#);
    let c: CoverOutput = parse(&bvd(&["cover", s(&wide), "--polygon", s(&sq)]));
    assert!(!c.feasible && c.value.is_none());
}

#[test]
fn negative_and_fractional_points_parse() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i.json", r#"{"A": [[0, 0]], "B": [[0, 0]]}"#);
    let r: EvalOutput = parse(&bvd(&["eval", s(&f), "--t", "-1/2,3"]));
    assert_eq!(r.value, "37/4");
    assert_eq!(r.t.exact, ["-1/2".to_string(), "3".to_string()]);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "i.json", r#"{"A": [[0, 0], [1, 0]], "B": [[0, 0]]}"#);
    assert_eq!(bvd(&[]).code, 1);
    assert_eq!(bvd(&["frobnicate"]).code, 1);
    assert_eq!(bvd(&["eval", s(&good)]).code, 1);
    assert_eq!(bvd(&["eval", s(&good), "--t", "1.5,0"]).code, 1);
    assert_eq!(bvd(&["--help"]).code, 0);

    let missing = dir.path().join("missing.json");
    assert_eq!(bvd(&["match", s(&missing)]).code, 2);
    let cases = [
        r#"{"A": [[0, 0]], "B": [[0, 0], [1, 1]]}"#,
        r#"{"A": [[0, 0], [0, 0]], "B": [[0, 0]]}"#,
        r#"{"A": [[0.5, 0]], "B": [[0, 0]]}"#,
        r#"{"A": [["1/0", 0]], "B": [[0, 0]]}"#,
        r#"{"A": [[0, 0]]}"#,
        "not json",
    ];
    for (i, text) in cases.iter().enumerate() {
        let f = write(&dir, &format!("bad{i}.json"), text);
        let r = bvd(&["match", s(&f)]);
        assert_eq!(r.code, 2, "case {i}: {}", r.err);
        assert!(r.err.starts_with("bvd: invalid input"));
    }
    let not_convex = write(&dir, "nc.json", r#"[[0, 0], [2, 0], [1, 1], [2, 2], [0, 2]]"#);
    assert_eq!(bvd(&["cover", s(&good), "--polygon", s(&not_convex)]).code, 2);

    let a: Vec<String> = (0..12).map(|i| format!("[{i}, {}]", i * i)).collect();
    let b: Vec<String> = (0..7).map(|i| format!("[{i}, {}]", -i)).collect();
    let big = write(&dir, "big.json", &format!(r#"{{"A": [{}], "B": [{}]}}"#, a.join(","), b.join(",")));
    assert_eq!(bvd(&["oracle", "eval", s(&big), "--t", "0,0"]).code, 3);
}

#[test]
fn oracle_agrees_with_eval() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i.json", r#"{"A": [[0, 0], [3, 1], [-2, 5], [4, 4]], "B": [[0, 0], [1, 2]]}"#);
    for t in ["0,0", "1/3,-2", "5,5"] {
        let fast: EvalOutput = parse(&bvd(&["eval", s(&f), "--t", t]));
        let slow: EvalOutput = parse(&bvd(&["oracle", "eval", s(&f), "--t", t]));
        assert_eq!(fast.value, slow.value);
    }
    let fast: MatchOutput = parse(&bvd(&["match", s(&f)]));
    let slow: MatchOutput = parse(&bvd(&["oracle", "match", s(&f)]));
    assert_eq!(fast.value, slow.value);
}

#[test]
fn results_round_trip() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i.json", r#"{"A": [[0, 0], ["7/2", 1], [-2, "5/3"]], "B": [[0, 0], [1, 2]]}"#);
    let run = bvd(&["diagram", s(&f), "--lex"]);
    let doc: DiagramOutput = parse(&run);
    let again: DiagramOutput = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(again, doc);
    for c in &doc.cells {
        let v = c.value.parse().unwrap();
        assert_eq!(v.to_string(), c.value.value);
    }

    let text = std::fs::read_to_string(&f).unwrap();
    let inst_file: InstanceFile = serde_json::from_str(&text).unwrap();
    let again: InstanceFile = serde_json::from_str(&serde_json::to_string(&inst_file).unwrap()).unwrap();
    assert_eq!(again, inst_file);
    assert_eq!(InstanceFile::from_instance(&inst_file.to_instance().unwrap()), inst_file);
}

#[test]
fn svg_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i.json", r#"{"A": [[0, 0], [4, 1], [1, 5], [-3, 2]], "B": [[0, 0], [2, 1]]}"#);
    let (a, b) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    assert_eq!(bvd(&["diagram", s(&f), "--svg", s(&a)]).code, 0);
    assert_eq!(bvd(&["diagram", s(&f), "--svg", s(&b)]).code, 0);
    let (a, b) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);

    let p = dir.path().join("p.svg");
    assert_eq!(bvd(&["path", s(&f), "--from", "0,0", "--to", "3,-2", "--svg", s(&p)]).code, 0);
    assert!(std::fs::read_to_string(&p).unwrap().contains("id=\"path\""));
}
