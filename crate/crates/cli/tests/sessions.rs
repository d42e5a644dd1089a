//! Recorded GAP/MAGMA sessions replayed through the binary.

use std::collections::BTreeSet;
use std::process::{Command, Output};

use toric::{BinomialIdeal, Fan, MonomialMap};

fn toric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let o = toric(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

/// Trailing blanks and surrounding blank lines do not count.
fn normalize(s: &str) -> String {
    s.trim().lines().map(str::trim_end).collect::<Vec<_>>().join("\n")
}

fn assert_session(args: &[&str], expected: &str) {
    assert_eq!(normalize(&stdout(args)), normalize(expected), "{args:?}");
}

const QUARTIC: &str = "[[1,0],[3,4]]";
const P1XP1: &str = "[[[1,0],[0,1]],[[0,1],[-1,0]],[[-1,0],[0,-1]],[[0,-1],[1,0]]]";
const POLYB: &str = "[[0,0],[0,1],[1,0],[1,1],[0,2],[1,2],[2,0],[2,1],[0,3],[3,0]]";

#[test]
fn dual_cone_membership() {
    assert_session(&["in-dual-cone", "--w", "[1,-7]", "--cone", QUARTIC], "false");
    assert_session(&["in_dual_cone", "--w", "[4,-3]", "--cone", QUARTIC], "true");
}

#[test]
fn torus_embedding() {
    assert_session(
        &["embedding_affine_toric_variety", "--cone", QUARTIC],
        "Mapping from: Scheme over Rational Field defined by
x1*x3 - 1
x2*x4 - 1 to Affine Space of dimension 5
Variables : $.1, $.2, $.3, $.4, $.5 
with equations : 
x2
x1
x1^2*x4
x1^3*x4^2
x1^4*x4^3",
    );
}

#[test]
fn desingularization_chart() {
    assert_session(
        &["desing", "--cone", QUARTIC, "--torus-chart"],
        "Mapping from: Affine Space of dimension 2
Variables : x1, x2 to Affine Space of dimension 5
Variables : $.1, $.2, $.3, $.4, $.5
with equations : 
$.2
$.1
$.1^2/$.2
$.1^3/$.2^2
$.1^4/$.2^3 ",
    );
    let full = stdout(&["desing", "--cone", QUARTIC]);
    assert_eq!(full.matches("// patch on").count(), 2);
}

#[test]
fn ideal_header_and_session_binomials() {
    // The recorded basis has only two binomials, too few for a surface in
    // five variables; the header is replayed and both recorded binomials
    // must follow from the computed ones.
    let text = stdout(&["ideal", "--cone", QUARTIC]);
    assert!(normalize(&text).starts_with(
        "Ideal of Polynomial ring of rank 5 over Rational Field\nLexicographical Order\nVariables: x1, x2, x3, x4, x5\nBasis:\n["
    ));
    let ideal: BinomialIdeal = serde_json::from_str(&stdout(&["--format", "json", "ideal", "--cone", QUARTIC])).unwrap();
    for (l, r) in [([1, 0, 0, 0, 3], [0, 0, 0, 4, 0]), ([0, 1, 0, 0, 2], [0, 0, 0, 3, 0])] {
        let b = toric::Binomial::new(l.as_slice().into(), r.as_slice().into()).unwrap();
        assert!(ideal.reduces_to_zero(&b, 8).unwrap());
    }
}

/// GAP cone lists are valid JSON; compare them as sets of cones.
fn cone_set(gap: &str) -> BTreeSet<toric::Cone> {
    let raw: Vec<Vec<Vec<i64>>> = serde_json::from_str(gap).unwrap();
    raw.iter()
        .map(|c| toric::Cone::new(c[0].len(), c.iter().map(|g| g.as_slice().into()).collect()).unwrap())
        .collect()
}

#[test]
fn stars() {
    let cones2 = "[[[2,-1],[1,0]],[[1,0],[1,1]],[[1,1],[2,0]]]";
    let cones3 = "[[[2,0,0],[0,2,0],[0,0,2]],[[2,0,0],[0,2,0],[1,1,-2]]]";
    let cases = [
        (cones2, "[[1,0]]", "[ [ [ 1, 0 ] ], [ [ 2, -1 ], [ 1, 0 ] ], [ [ 1, 0 ], [ 1, 1 ] ] ]"),
        (cones2, "[[1,0],[2,-1]]", "[ [ [ 2, -1 ], [ 1, 0 ] ] ]"),
        (
            cones3,
            "[[2,0,0]]",
            "[ [ [ 2, 0, 0 ] ], [ [ 0, 0, 2 ], [ 2, 0, 0 ] ], [ [ 0, 2, 0 ], [ 2, 0, 0 ] ],
  [ [ 1, 1, -2 ], [ 2, 0, 0 ] ], [ [ 2, 0, 0 ], [ 0, 2, 0 ], [ 0, 0, 2 ] ],
  [ [ 2, 0, 0 ], [ 0, 2, 0 ], [ 1, 1, -2 ] ] ]",
        ),
        (
            cones3,
            "[[2,0,0],[0,2,0]]",
            "[ [ [ 0, 2, 0 ], [ 2, 0, 0 ] ], [ [ 2, 0, 0 ], [ 0, 2, 0 ], [ 0, 0, 2 ] ],
  [ [ 2, 0, 0 ], [ 0, 2, 0 ], [ 1, 1, -2 ] ] ]",
        ),
    ];
    for (fan, sigma, gap) in cases {
        let ours = stdout(&["star", fan, "--sigma", sigma]);
        assert_eq!(cone_set(&ours), cone_set(gap), "star of {sigma}");
    }
}

#[test]
fn betti_euler_cardinality() {
    assert_session(&["betti_number", P1XP1, "--k", "1"], "0");
    assert_session(&["betti", P1XP1, "--k", "2"], "2");
    assert_session(&["euler_characteristic", P1XP1], "4");
    for (q, n) in [("2", "9"), ("3", "16"), ("5", "36")] {
        assert_session(&["cardinality_of_X", P1XP1, "--q", q], n);
    }
}

#[test]
fn riemann_roch_session() {
    let divisor = r#"{"rays": [[2,-1],[-1,2],[-1,-1]], "coefficients": [6,6,0],
        "maximal_cones": [[[2,-1],[-1,2]],[[-1,2],[-1,-1]],[[-1,-1],[2,-1]]]}"#;
    assert_session(
        &["riemann_roch", divisor],
        "[
    1/(x1^6*x2^6),
    1/(x1^5*x2^5),
    1/(x1^5*x2^4),
    1/(x1^4*x2^5),
    1/(x1^4*x2^4),
    1/(x1^4*x2^3),
    1/(x1^4*x2^2),
    1/(x1^3*x2^4),
    1/(x1^3*x2^3),
    1/(x1^3*x2^2),
    1/(x1^3*x2),
    1/x1^3,
    1/(x1^2*x2^4),
    1/(x1^2*x2^3),
    1/(x1^2*x2^2),
    1/(x1^2*x2),
    1/x1^2,
    x2/x1^2,
    x2^2/x1^2,
    1/(x1*x2^3),
    1/(x1*x2^2),
    1/(x1*x2),
    1/x1,
    x2/x1,
    1/x2^3,
    1/x2^2,
    1/x2,
    1,
    x1/x2^2,
    x1/x2,
    x1^2/x2^2
]",
    );
}

#[test]
fn toric_code_sessions() {
    assert_session(&["toric_code", "--points", POLYB, "--q", "3"], "[4, 4, 1] Linear Code over GF(3)");
    let words = stdout(&["toric_codewords", "--points", POLYB, "--q", "3"]);
    let listed: BTreeSet<&str> = words.lines().filter(|l| l.trim_start().starts_with('(')).collect();
    assert_eq!(listed.len(), 81);
    assert_session(&["toric-code", "--points", "[[0,0],[1,0],[0,1]]", "--q", "3"], "[4, 3, 2] Linear Code over GF(3)");
}

#[test]
fn exit_codes() {
    assert_eq!(toric(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(toric(&["euler", "[[[1,0]"]).status.code(), Some(2));
    assert_eq!(toric(&["euler", "/nonexistent/fan.json"]).status.code(), Some(2));
    let not_convex = toric(&["validate-fan", "[[[1,0],[-1,0],[0,-1]]]"]);
    assert_eq!(not_convex.status.code(), Some(1));
    let over = Command::new(env!("CARGO_BIN_EXE_toric"))
        .args(["codewords", "--points", POLYB, "--q", "3"])
        .env("TORIC_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(over.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&over.stderr).contains("budget"));
}

#[test]
fn json_round_trips() {
    let fan: Fan = serde_json::from_str(&stdout(&["--format", "json", "validate-fan", P1XP1])).unwrap();
    assert_eq!(fan.cones().len(), 9);
    let again: Fan = serde_json::from_str(&stdout(&["--format", "json", "validate-fan", &serde_json::to_string(&fan).unwrap()])).unwrap();
    assert_eq!(again, fan);
    let map: MonomialMap = serde_json::from_str(&stdout(&["--format", "json", "embed", "--cone", QUARTIC])).unwrap();
    assert_eq!(map.target_dim(), 5);
    let n: u64 = serde_json::from_str(&stdout(&["--format", "json", "cardinality", P1XP1, "--q", "5"])).unwrap();
    assert_eq!(n, 36);
}

#[test]
fn remaining_subcommands() {
    assert_session(&["dual-semigroup-gens", "--cone", QUARTIC], "[ [ 0, 1 ], [ 1, 0 ], [ 2, -1 ], [ 3, -2 ], [ 4, -3 ] ]");
    assert_session(&["n-cones-dim", P1XP1, "--k", "1"], "4");
    assert_eq!(stdout(&["subcones", P1XP1]).matches("[ [ ").count(), 9);
    assert_session(&["is-complete", P1XP1], "true");
    assert!(stdout(&["aut-group", P1XP1]).starts_with("Group of order 8"));
    let square = r#"{"vertices": [[0,0],[1,0],[0,1],[1,1]]}"#;
    assert_eq!(stdout(&["lattice-points", "--polytope", square]).matches('(').count(), 4);
    let divisor = r#"{"rays": [[1,0],[0,1],[-1,-1]], "coefficients": [1,1,1]}"#;
    assert!(stdout(&["divisor-polytope", divisor]).contains("Vertices:"));
    assert_session(
        &["glue", "--tau", "[[1,1]]", "--sigma1", "[[1,0],[1,1]]", "--sigma2", "[[1,1],[0,1]]"],
        &stdout(&["gluing_map", "--tau", "[[1,1]]", "--sigma1", "[[1,0],[1,1]]", "--sigma2", "[[1,1],[0,1]]"]),
    );
}
