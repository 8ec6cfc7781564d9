use std::io::Write;
use std::process::{Command, Output, Stdio};

use proptest::prelude::*;
use serde_json::Value;

use semideal::script;

const EXAMPLE: &str = "semiring R = nat_gcd\nmultset S = <2> in R\nideal I = (18) in R\nsradical I S\n";

/// Touches every query kind over every built-in carrier, including one
/// query that fails.
const EVERYTHING: &str = "\
semiring R = nat_gcd
multset S = <2> in R
multset T = <3> in R
ideal I = (18) in R
sradical I S
radical I
check s_primary I S
check s_k_irreducible I T
check s_k_maximal (0) S
colon I 4
decompose (90) T
assoc_primes (90) T
member I 36
semiring P = nat_plus
ideal J = (4, 6) in P
check k J
colon J 2
check primary J
sradical J <3>
semiring N = nat_poly
ideal X = (1+x) in N
check k X
member X x^3+1
semiring B = table {
  add [[0,1],[1,1]]
  mul [[0,0],[0,1]]
}
ideal Z = (0) in B
check prime Z
check s_k_maximal Z <1>
lab run order<=2
";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semideal"))
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn with_file<T>(text: &str, f: impl FnOnce(&str) -> T) -> T {
    let dir = std::env::temp_dir().join(format!("semideal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{:x}.sd", text.len() * 31 + text.bytes().map(usize::from).sum::<usize>()));
    std::fs::write(&path, text).unwrap();
    let out = f(path.to_str().unwrap());
    let _ = std::fs::remove_file(&path);
    out
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report-schema.json")).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&value).unwrap()
}

fn assert_valid(schema: &jsonschema::JSONSchema, v: &Value) {
    if let Err(errors) = schema.validate(v) {
        let msgs: Vec<String> = errors.map(|e| format!("{e} at {}", e.instance_path)).collect();
        panic!("{v}\n{msgs:#?}");
    }
}

#[test]
fn sradical_example() {
    let o = with_file(EXAMPLE, |p| bin().args(["run", p]).output().unwrap());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "sradical (18) wrt <2> = (3)\n");
}

#[test]
fn decompose_example() {
    let src = "semiring R = nat_gcd\nmultset S = <3> in R\ndecompose (90) S\n";
    let o = run_stdin(&["run", "-"], src);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("components (18), (45)"), "{out}");
    assert!(out.contains("minimal=true"), "{out}");
}

#[test]
fn lab_run_order_three_passes() {
    let o = run_stdin(&["run", "-"], "lab run order<=3\n");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("lab run order<=3: all passed"), "{out}");
    assert_eq!(out.matches("AllPassed").count(), 10, "{out}");
}

#[test]
fn stdin_matches_file() {
    let from_file = with_file(EVERYTHING, |p| bin().args(["run", p]).output().unwrap());
    let from_stdin = run_stdin(&["run", "-"], EVERYTHING);
    assert_eq!(from_file.stdout, from_stdin.stdout);
    assert_eq!(from_file.status.code(), from_stdin.status.code());
}

#[test]
fn exit_codes() {
    // a failed query is a result line and exit 1; other lines still run
    let o = run_stdin(&["run", "-"], EVERYTHING);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("error at 19:1: sradical J <3>"), "{out}");
    assert!(out.contains("check k (4, 6): Disproved [4, 2]"), "{out}");
    assert!(out.contains("member (1 + x) 1 + x^3: false"), "{out}");

    // Disproved and UnknownUpTo are answers, not errors
    let o = run_stdin(&["run", "-"], "semiring R = nat_gcd\ncheck prime (12)\n");
    assert_eq!(o.status.code(), Some(0));

    let o = run_stdin(&["run", "-"], "ideal I = (18) in R\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:19"));

    let o = run_stdin(&["run", "-"], "semiring R = nat_gcd\nideal I = (6) in R\ncheck s_primary I\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(err.contains("3:18") && err.contains("expected MULTSET"), "{err}");

    let o = bin().args(["run", "/nonexistent/semideal.sd"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));

    let o = bin().args(["lab", "--order-cap", "9"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds"));
}

#[test]
fn lab_order_four_reports_the_counterexample() {
    let o = bin().args(["lab", "--order-cap", "4", "--json"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_valid(&schema(), &v);
    assert_eq!(v["all_passed"], false);
    let violated: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "Violated")
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(violated, ["T_existence"]);
}

#[test]
fn lab_flags() {
    let o = bin().args(["lab", "--order-cap", "3", "--scope", "Z4,C4"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2), "named entries of order four are above the cap");
    let o = bin().args(["lab", "--order-cap", "4", "--scope", "Z4,C4", "--mode", "drop-all"]).output().unwrap();
    assert!(matches!(o.status.code(), Some(0 | 1)));
    assert!(stdout(&o).contains("T_hom"));
    let o = bin().args(["lab", "--time-budget", "0"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_output_matches_schema() {
    let schema = schema();
    let o = run_stdin(&["run", "-", "--json"], EVERYTHING);
    let out = stdout(&o);
    let mut commands = Vec::new();
    for line in out.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_valid(&schema, &v);
        commands.push(v["command"].as_str().unwrap().to_string());
    }
    for c in ["check", "radical", "sradical", "colon", "decompose", "assoc_primes", "member", "lab"] {
        assert!(commands.iter().any(|x| x == c), "no {c} line");
    }
    assert!(out.contains("\"error\""));
    let failed = run_stdin(&["run", "-", "--json"], "semiring R = table { add [[0]] mul [[1]] }\nideal I = (0) in R\n");
    for line in stdout(&failed).lines() {
        assert_valid(&schema, &serde_json::from_str(line).unwrap());
    }
    let lab = bin().args(["lab", "--json"]).output().unwrap();
    assert_valid(&schema, &serde_json::from_slice(&lab.stdout).unwrap());
}

#[test]
fn output_is_deterministic() {
    for args in [&["run", "-"][..], &["run", "-", "--json"], &["run", "-", "--elem-bound", "50", "--exp-bound", "3"]] {
        let a = run_stdin(args, EVERYTHING);
        let b = run_stdin(args, EVERYTHING);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = bin().args(["lab", "--order-cap", "4", "--json"]).output().unwrap();
    let b = bin().args(["lab", "--order-cap", "4", "--json"]).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bounds_are_echoed() {
    let o = run_stdin(&["run", "-", "--json", "--elem-bound", "77", "--exp-bound", "5", "--rad-bound", "9"], EXAMPLE);
    let v: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(v["bounds"]["elem_bound"], 77);
    assert_eq!(v["bounds"]["exp_bound"], 5);
    assert_eq!(v["bounds"]["rad_bound"], 9);
}

// Random scripts: declarations first, then queries that only use declared
// names or inline literals. Spacing and comments vary.

#[derive(Debug, Clone)]
enum Carrier {
    Gcd,
    Plus,
    Poly,
    Table(usize),
}

const TABLES: [&str; 3] = [
    "table { add [[0,1],[1,1]] mul [[0,0],[0,1]] }",
    "table { add [[0,1],[1,0]] mul [[0,0],[0,1]] zero 0 one 1 }",
    "table {\n  add [[0,1,2],[1,2,0],[2,0,1]]\n  mul [[0,0,0],[0,1,2],[0,2,1]]\n}",
];

fn carrier() -> impl Strategy<Value = Carrier> {
    prop_oneof![
        Just(Carrier::Gcd),
        Just(Carrier::Plus),
        Just(Carrier::Poly),
        (0..TABLES.len()).prop_map(Carrier::Table),
    ]
}

fn elem(c: &Carrier, n: u64, k: u64) -> String {
    match c {
        Carrier::Table(t) => ((n + k) % [2, 2, 3][*t]).to_string(),
        Carrier::Poly if k.is_multiple_of(3) => format!("{}+{}x^{}", n % 5 + 1, k % 4 + 1, n % 3 + 1),
        Carrier::Poly if k % 3 == 1 => "x".to_string(),
        _ => (n % 500 + 1).to_string(),
    }
}

fn render(c: &Carrier, picks: &[(u8, u64, u64)], pad: &str) -> String {
    let mut s = String::from("# generated\n");
    let decl = match c {
        Carrier::Gcd => "nat_gcd".to_string(),
        Carrier::Plus => "nat_plus".to_string(),
        Carrier::Poly => "nat_poly".to_string(),
        Carrier::Table(t) => TABLES[*t].to_string(),
    };
    let unit = if matches!(c, Carrier::Table(_)) { "1".to_string() } else { elem(c, 1, 7) };
    s += &format!("semiring{pad}R = {decl}\n");
    s += &format!("multset S = <{unit}>{pad}in R  # comment\n");
    s += &format!("ideal I = ({}, {}) in R\n", elem(c, 3, 0), elem(c, 5, 1));
    for (i, &(kind, n, k)) in picks.iter().enumerate() {
        let e = elem(c, n, k);
        let line = match kind % 9 {
            0 => format!("check {} I S", script::CHECK_PREDICATES[(n % 8) as usize]),
            1 => format!("check {} ({e})", ["prime", "primary", "k"][(k % 3) as usize]),
            2 => "radical I".to_string(),
            3 => format!("sradical{pad}({e}) S"),
            4 => format!("colon I {e}"),
            5 => format!("decompose ({e}) <{unit}>"),
            6 => "assoc_primes I S".to_string(),
            7 => format!("member ({e}) {}", elem(c, k, n)),
            _ => {
                s += &format!("ideal J{i} = ({e}) in R\n");
                format!("member J{i} {e}")
            }
        };
        s += &line;
        s.push('\n');
    }
    s += "lab run order<=2\n";
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn scripts_round_trip(
        c in carrier(),
        picks in prop::collection::vec((any::<u8>(), 0u64..1000, 0u64..1000), 0..12),
        pad in prop::sample::select(vec![" ", "  ", "\t"]),
    ) {
        let src = render(&c, &picks, pad);
        let parsed = script::parse(&src).map_err(|e| TestCaseError::fail(format!("{e}\n{src}")))?;
        let printed = parsed.to_string();
        let again = script::parse(&printed).map_err(|e| TestCaseError::fail(format!("{e}\n{printed}")))?;
        prop_assert_eq!(&parsed, &again, "{}", printed);
        prop_assert_eq!(printed.clone(), again.to_string());
    }
}
