use shg_cli::run_cli;

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("shg").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn check_valid_fixture_passes() {
    let (code, out, _) = run(&["check", &fixture("example_3_2_default.shg")]);
    assert_eq!(code, 0);
    assert!(out.contains("axioms: PASS"), "{out}");
}

#[test]
fn check_remark_fixture_reports_the_associativity_defect() {
    let (code, out, _) = run(&["check", &fixture("remark_5_9.shg")]);
    assert_eq!(code, 1);
    assert!(out.contains("axioms: FAIL"), "{out}");
    assert!(out.contains("(a, a, b)"), "{out}");
}

#[test]
fn check_rejects_floats_as_input_errors() {
    let dir = std::env::temp_dir().join("shg-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("float.shg");
    std::fs::write(
        &bad,
        "semihypergroup\nelements: a\ntable:\na * a = 0.5 a + 0.5 a\n",
    )
    .unwrap();
    let (code, _, err) = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("floating-point"), "{err}");
}

#[test]
fn check_reports_non_probability_rows_with_exit_one() {
    let dir = std::env::temp_dir().join("shg-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("mass.shg");
    std::fs::write(
        &bad,
        "semihypergroup\nelements: a\ntable:\na * a = 2 a\n",
    )
    .unwrap();
    let (code, out, _) = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("mass 2"), "{out}");
}

#[test]
fn unknown_subcommand_is_an_input_error_with_usage() {
    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"), "{err}");
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn means_right_on_the_coset_fixture_prints_the_uniform_witness() {
    let (code, out, _) = run(&["means", "--side", "right", &fixture("s4_mod_d8.shg")]);
    assert_eq!(code, 0);
    assert!(out.contains("1/3 1/3 1/3"), "{out}");
}

#[test]
fn means_right_on_the_remark_fixture_is_a_mathematical_negative() {
    let (code, out, _) = run(&["means", "--side", "right", &fixture("remark_5_9.shg")]);
    assert_eq!(code, 1);
    assert!(out.contains("none"), "{out}");
    // the left side finds the point mass at a
    let (code, out, _) = run(&["means", "--side", "left", &fixture("remark_5_9.shg")]);
    assert_eq!(code, 0);
    assert!(out.contains("1 0 0"), "{out}");
}

#[test]
fn construct_coset_reproduces_the_fixture_table() {
    let (code, out, _) = run(&[
        "construct",
        "coset",
        &fixture("s4.group"),
        "--subgroup-file",
        &fixture("d8_in_s4.subset"),
    ]);
    assert_eq!(code, 0);
    // same table as the bundled fixture, with generic coset names
    let expected = std::fs::read_to_string(fixture("s4_mod_d8.shg")).unwrap();
    let canonical = expected
        .replace("s1H", "(34)H")
        .replace("s2H", "(23)H");
    assert_eq!(out, canonical);
}

#[test]
fn construct_accepts_generators() {
    let (code, out, _) = run(&[
        "construct",
        "double-coset",
        &fixture("s4.group"),
        "--generators",
        "(1234) (13)",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("semihypergroup\n"), "{out}");
    assert!(out.contains("elements: H H(34)H"), "{out}");
}

#[test]
fn construct_rejects_non_subgroups() {
    let (code, _, err) = run(&[
        "construct",
        "coset",
        &fixture("s4.group"),
        "--subgroup",
        "e (1234)",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("not a subgroup"), "{err}");
}

#[test]
fn construct_orbit_requires_an_action_choice() {
    let (code, _, err) = run(&[
        "construct",
        "orbit",
        &fixture("s3.group"),
        "--generators",
        "(12)",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("--inner or --translation"), "{err}");
    let (code, out, _) = run(&[
        "construct",
        "orbit",
        &fixture("s3.group"),
        "--generators",
        "(12) (123)",
        "--inner",
    ]);
    assert_eq!(code, 0);
    // conjugation by all of S3: three classes, named by least-index reps
    assert!(out.contains("elements: e^H (23)^H (123)^H"), "{out}");
}

#[test]
fn ideals_classification_matches_the_counterexample() {
    let (code, out, _) = run(&["ideals", &fixture("remark_5_9.shg"), "--subset", "a b"]);
    assert_eq!(code, 0);
    assert!(out.contains("left ideal: yes"), "{out}");
    assert!(out.contains("right ideal: no"), "{out}");
    assert!(out.contains("minimal left ideal: no"), "{out}");
    let (code, out, _) = run(&["ideals", &fixture("remark_5_9.shg")]);
    assert_eq!(code, 0);
    assert!(out.contains("minimal left ideals: {a}"), "{out}");
    assert!(out.contains("minimal right ideals: {a, b, c}"), "{out}");
}

#[test]
fn kernel_reports_the_sandwich() {
    let (code, out, _) = run(&["kernel", &fixture("remark_5_9.shg")]);
    assert_eq!(code, 0);
    assert!(out.contains("kernel: {a, b, c}"), "{out}");
    assert!(out.contains("sandwich holds"), "{out}");
}

#[test]
fn hom_verifies_the_constant_map_and_refutes_the_bad_one() {
    let (code, out, _) = run(&[
        "hom",
        "--map",
        &fixture("remark59_to_point.map"),
        &fixture("remark_5_9.shg"),
        &fixture("point.shg"),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("homomorphism: yes"), "{out}");
    assert!(out.contains("support lemma: PASS"), "{out}");

    let (code, out, _) = run(&[
        "hom",
        "--map",
        &fixture("remark59_const_b.map"),
        &fixture("remark_5_9.shg"),
        &fixture("remark_5_9.shg"),
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("not a homomorphism"), "{out}");
    assert!(out.contains("(a, a)"), "{out}");
}

#[test]
fn arens_computes_products_and_self_checks() {
    let (code, out, _) = run(&[
        "arens",
        &fixture("s4_mod_d8.shg"),
        "--mu",
        "1/2 H + 1/2 s1H",
        "--nu",
        "s2H",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("μ ⋆ ν ="), "{out}");
    let (code, out, _) = run(&["arens", &fixture("example_3_2_default.shg"), "--samples", "25"]);
    assert_eq!(code, 0);
    assert!(out.contains("dual algebra: PASS"), "{out}");
}

#[test]
fn fixtures_lists_and_prints() {
    let (code, out, _) = run(&["fixtures"]);
    assert_eq!(code, 0);
    for name in ["s4_mod_d8", "remark_5_9", "example_3_2_default"] {
        assert!(out.contains(name), "{out}");
    }
    let (code, out, _) = run(&["fixtures", "remark_5_9"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        std::fs::read_to_string(fixture("remark_5_9.shg")).unwrap()
    );
    let (code, _, err) = run(&["fixtures", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown fixture"), "{err}");
}

#[test]
fn report_runs_the_full_suite() {
    let (code, out, _) = run(&["report", &fixture("s4_mod_d8.shg"), "--samples", "25"]);
    assert_eq!(code, 0);
    assert!(out.contains("axioms: PASS"), "{out}");
    assert!(out.contains("right amenability ⇒ unique minimal left ideal: PASS"), "{out}");
    assert!(out.contains("dual algebra: PASS"), "{out}");

    let (code, out, _) = run(&["report", &fixture("example_3_2_default.shg"), "--samples", "25"]);
    assert_eq!(code, 0);
    assert!(out.contains("commutative: true"), "{out}");
    assert!(out.contains("commutative amenability: PASS"), "{out}");
    assert!(out.contains("hypergroup: true"), "{out}");
}

#[test]
fn json_lines_output_is_valid_json_with_the_human_fields() {
    let (code, out, _) = run(&[
        "report",
        &fixture("s4_mod_d8.shg"),
        "--samples",
        "10",
        "--format",
        "json-lines",
    ]);
    assert_eq!(code, 0);
    let mut kinds = Vec::new();
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap_or_else(|e| {
            panic!("line is not JSON: {line} ({e})");
        });
        kinds.push(v["record"].as_str().unwrap().to_string());
    }
    for expected in [
        "axioms",
        "structure",
        "orbits",
        "ideals",
        "invariant-mean",
        "rim-unique-minimal",
        "dual-algebra",
    ] {
        assert!(kinds.iter().any(|k| k == expected), "missing {expected} in {kinds:?}");
    }
    // spot-check a field that the human line also carries
    let (_, json_out, _) = run(&[
        "means",
        "--side",
        "right",
        &fixture("s4_mod_d8.shg"),
        "--format",
        "json-lines",
    ]);
    let v: serde_json::Value = serde_json::from_str(json_out.lines().next().unwrap()).unwrap();
    assert_eq!(v["witness"], "1/3 1/3 1/3");
    assert_eq!(v["status"], "found");
    assert_eq!(v["reverified"], true);
}

#[test]
fn scan_bound_env_must_be_numeric() {
    // the env var is read per invocation; an invalid value is an input error
    std::env::set_var("SHG_SCAN_BOUND", "abc");
    let (code, _, err) = run(&["ideals", &fixture("remark_5_9.shg")]);
    std::env::remove_var("SHG_SCAN_BOUND");
    assert_eq!(code, 2);
    assert!(err.contains("SHG_SCAN_BOUND"), "{err}");
}
