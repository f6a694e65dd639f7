use std::io::Write;
use std::process::{Command, Output, Stdio};

use euclid::command::{parse, Command as Cmd};
use euclid::session::{Config, Format, Session};
use euclid_core::rational::rat;
use euclid_core::{EuclideanNumber, Exponent};
use proptest::prelude::*;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_euclid"))
}

fn one_shot(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn repl(args: &[&str], input: &str) -> Output {
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

#[test]
fn golden_one_shot() {
    let cases = [
        (vec!["num(Q)"], "2·α^2 + 1"),
        (vec!["eval(alpha*eta)"], "1"),
        (vec!["integ(x^2, 0, 1)"], "1/3 − (1/2)·η + (1/6)·η^2   [real part: 1/3]"),
        (vec!["num", "Z"], "2·α + 1"),
        (vec!["num", "Pfin(N+)"], "2^α"),
        (vec!["st((2*alpha+1)/alpha)"], "2"),
        (vec!["deriv", "mean", "abs(x)", "at", "0"], "0"),
        (vec!["ord2num", "w"], "α + 1"),
        (vec!["sum", "k^2", "to", "alpha"], "(1/3)·α^3 + (1/2)·α^2 + (1/6)·α"),
    ];
    for (args, expected) in cases {
        let o = one_shot(&args);
        assert!(o.status.success(), "{:?}: {}", args, stderr(&o));
        assert_eq!(stdout(&o).trim_end(), expected, "{:?}", args);
    }
}

#[test]
fn exit_codes() {
    let o = one_shot(&["eval", "1/(alpha-alpha)"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr(&o).trim_end(), "error: ArithmeticError: division by zero");

    let o = one_shot(&["st", "alpha"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("ArithmeticError: not finite"));

    let o = one_shot(&["ord2num", "w^w"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("OrdinalError"));

    let o = one_shot(&["num", "mult(0)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("NumerosityError"));

    let o = one_shot(&["eval", "2", "+", "*", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(
        stderr(&o).trim_end(),
        "error: ParseError: at column 10: expected an expression, found '*'"
    );
}

#[test]
fn parse_errors_name_the_column_and_expectation() {
    let cases = [
        ("eval (1 + 2", 12, "expected ')'"),
        ("num Q(0,2]", 9, "length 1"),
        ("deriv sideways x at 0", 7, "expected plus, minus, mean or grid"),
        ("eval 2 $ 3", 8, "unexpected character '$'"),
        ("deriv plus x at y", 17, "unknown name 'y'"),
        ("integ x from 0", 1, "integ takes 3 argument(s), found 2"),
    ];
    for (line, column, message) in cases {
        let e = parse(line).unwrap_err();
        assert_eq!(e.column, column, "{}: {}", line, e);
        assert!(e.message.contains(message), "{}: {}", line, e);
    }
}

#[test]
fn repl_keeps_bindings_and_reports_worst_exit_code() {
    let o = repl(&["--quiet"], "let a = 1/3\nderiv plus x^2 at a\neval (\neval a*3\n");
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "a = 1/3");
    assert_eq!(lines[1], "2/3");
    assert!(lines[2].starts_with("error: ParseError"));
    assert_eq!(lines[3], "1");
    assert!(!out.contains('>'), "no prompt when stdin is not a terminal");
}

#[test]
fn structured_output_is_one_record_per_line() {
    let o = repl(
        &["--format", "structured"],
        "num Q\ninteg x from 0 to 1\nderiv plus x*sin(1/x^2) at 0\n",
    );
    assert!(o.status.success());
    let out = stdout(&o);
    let records: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 3);
    assert_eq!(
        records[0]["terms"],
        serde_json::json!([["0/1", "2/1", "2/1"], ["0/1", "0/1", "1/1"]])
    );
    assert_eq!(records[0]["flags"], serde_json::json!(["exact"]));
    assert_eq!(records[1]["real_part"], "1/2");
    assert_eq!(
        records[1]["terms"],
        serde_json::json!([["0/1", "0/1", "1/2"], ["0/1", "-1/1", "−1/2"]])
    );
    assert_eq!(records[2]["flags"], serde_json::json!(["indeterminate"]));
}

#[test]
fn flags_change_order_and_precision() {
    let o = one_shot(&["--order", "6", "expand", "sin(x)", "at", "0,", "plus"]);
    assert_eq!(stdout(&o).trim_end(), "η − (1/6)·η^3 + (1/120)·η^5 + O(η^6)");
    let o = one_shot(&["--precision", "30", "deriv", "plus", "sin(x)", "at", "pi"]);
    assert_eq!(stdout(&o).trim_end(), "−1");
    let o = one_shot(&["--order", "0", "num", "N"]);
    assert_eq!(o.status.code(), Some(2), "clap rejects an out-of-range flag");
}

#[test]
fn output_is_deterministic() {
    let input = "num Q\neval 2^alpha/(alpha+1)\nexpand exp(x) at 1, plus\nderivable abs(x) at 0\nintegrate\n";
    let a = repl(&["--quiet"], input);
    let b = repl(&["--quiet"], input);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

fn evaluate(text: &str) -> EuclideanNumber {
    match parse(text).unwrap_or_else(|e| panic!("{} does not parse: {}", text, e)) {
        Cmd::Eval(e) => e.eval().unwrap(),
        other => panic!("{:?}", other),
    }
}

fn small_number() -> impl Strategy<Value = EuclideanNumber> {
    let exponent = (-1i64..=1, 0i64..=1, -3i64..=3, 1i64..=2)
        .prop_map(|(e2a, e2a_den, ea, ea_den)| Exponent::new(rat(e2a, 1 + e2a_den), rat(ea, ea_den)));
    let coef = (-9i64..=9, 1i64..=4)
        .prop_filter("nonzero", |(p, _)| *p != 0)
        .prop_map(|(p, q)| rat(p, q));
    let series = prop::collection::vec((exponent, coef), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(e, c)| EuclideanNumber::monomial(e, c))
            .fold(EuclideanNumber::zero(), |a, b| &a + &b)
    });
    (series.clone(), series).prop_map(|(n, d)| if d.is_zero() { n } else { n.checked_div(&d).unwrap() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_rendering_round_trips(x in small_number()) {
        let mut s = Session::default();
        let r = s.execute(&Cmd::Eval(euclid::command::NumExpr::Const(x.clone()))).unwrap();
        prop_assert_eq!(evaluate(&r.text), x.clone());

        // the structured record describes the same value
        let st = Session::new(Config { format: Format::Structured, ..Config::default() });
        let json: serde_json::Value = serde_json::from_str(&st.format(&r)).unwrap();
        prop_assert_eq!(json["text"].as_str().unwrap(), r.text.as_str());
        prop_assert_eq!(json["terms"].as_array().unwrap().len(), x.numerator().len());
    }
}
