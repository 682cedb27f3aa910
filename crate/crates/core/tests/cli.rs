use std::collections::BTreeMap;
use std::process::{Command, Output};

use skeinforge::cli::{scalar_from_json, JsonInvariant, JsonSuite};
use skeinforge::coeff::RingMode;
use skeinforge::diagram::ResolutionVector;
use skeinforge::skein::{OrderedSkeinElement, SkeinEngine, SkeinPolynomial};

fn skeinforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skeinforge"))
        .args(args)
        .env_remove("SKEINFORGE_JOBS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let cases: [(&[&str], &str); 5] = [
        (&["invariant", "2: t1"], "X\n"),
        (
            &["invariant", "--ring", "conway", "2: t1 s1^-1"],
            "Y - x X\n",
        ),
        (&["invariant", "1:"], "1\n"),
        (&["homfly", "2: s1 s1 s1"], "-1 t^4 + 2 t^2 + 1 t^2 x^2\n"),
        (&["homfly", "2:"], "-1 t x^(-1) + 1 t^(-1) x^(-1)\n"),
    ];
    for (args, expected) in cases {
        let o = skeinforge(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o), expected, "{args:?}");
    }
    assert_eq!(skeinforge(&["homfly", "2: t1"]).status.code(), Some(4));
    assert_eq!(skeinforge(&["invariant", "2: s1 s"]).status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs_and_jobs() {
    let word = "4: t1 s2 t3 s1^-1 t2 s3 | o = 3 1 2";
    let reference = skeinforge(&["invariant", "--ordered", "--json", word]);
    assert_eq!(reference.status.code(), Some(0));
    for jobs in ["1", "3"] {
        let o = skeinforge(&["invariant", "--ordered", "--json", "--jobs", jobs, word]);
        assert_eq!(o.stdout, reference.stdout);
    }
    let check_a = skeinforge(&["check", "ordering", "--seed", "9", "--cases", "10"]);
    let check_b = skeinforge(&[
        "check", "ordering", "--seed", "9", "--cases", "10", "--jobs", "2",
    ]);
    assert_eq!(check_a.status.code(), Some(0));
    assert_eq!(check_a.stdout, check_b.stdout);
}

#[test]
fn jobs_default_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_skeinforge"))
        .args(["invariant", "3: t1 t2 s1"])
        .env("SKEINFORGE_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_skeinforge"))
        .args(["invariant", "1:"])
        .env("SKEINFORGE_JOBS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn json_round_trips_through_schema() {
    for (ring, mode) in [
        ("generic", RingMode::Generic),
        ("conway", RingMode::Conway),
        ("gf:5", RingMode::PrimeField(5)),
    ] {
        let word = "3: t1 s2^-1 t2 s1 t1 | o = 2 3 1";
        let o = skeinforge(&["invariant", "--ordered", "--json", "--ring", ring, word]);
        assert_eq!(o.status.code(), Some(0));
        let doc: JsonInvariant = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(doc.d, 3);
        assert_eq!(doc.ring, ring);

        let coeffs: BTreeMap<_, _> = doc
            .coeffs
            .iter()
            .map(|c| ((c.i, c.j), scalar_from_json(mode, &c.num, c.dpow).unwrap()))
            .collect();
        let p = SkeinPolynomial::from_coeffs(mode, coeffs).unwrap();
        let coords: BTreeMap<_, _> = doc
            .ordered
            .as_ref()
            .unwrap()
            .iter()
            .map(|c| {
                let bits = c.eps.chars().map(|b| b == '1').collect();
                (
                    ResolutionVector::new(bits),
                    scalar_from_json(mode, &c.num, c.dpow).unwrap(),
                )
            })
            .collect();
        let a = OrderedSkeinElement::new(mode, doc.d, coords).unwrap();

        let engine = SkeinEngine::new(mode);
        let expected = engine.invariant_ordered(&word.parse().unwrap()).unwrap();
        assert_eq!(a, expected);
        assert_eq!(p, expected.project());
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(format!("{text}\n").as_bytes(), &o.stdout[..]);
    }
}

#[test]
fn check_reports_seed_and_exit_status() {
    let o = skeinforge(&["check", "lemma22", "--seed", "42", "--cases", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "lemma22: ok (5 cases, ring generic, seed 42)\n");
    let j = skeinforge(&["check", "oracle", "--json"]);
    let docs: Vec<JsonSuite> = serde_json::from_slice(&j.stdout).unwrap();
    assert!(docs[0].passed && docs[0].counterexample.is_none());
    assert_eq!(skeinforge(&["check", "everything"]).status.code(), Some(2));
}
