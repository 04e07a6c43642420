use std::fs;
use std::path::PathBuf;
use std::process::Command;

use galcount::cli::{self, EXIT_CAP, EXIT_CHECK_FAILED, EXIT_DATA, EXIT_INCONSISTENT, EXIT_INTRANSITIVE, EXIT_SAMPLES, EXIT_USAGE};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(std::iter::once("galcount").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn rows(csv: &str) -> Vec<(u64, u64)> {
    csv.lines()
        .skip(1)
        .map(|l| {
            let (x, z) = l.split_once(',').unwrap();
            (x.parse().unwrap(), z.parse().unwrap())
        })
        .collect()
}

#[test]
fn aval_reports_exact_fractions() {
    let (code, out, _) = run(&["aval", "regular(C 4)"]);
    assert_eq!(code, 0);
    assert!(out.contains("a(G) = 1/2"), "{out}");
    let (code, out, _) = run(&["aval", "wreath(C 2, natural(A 4))"]);
    assert_eq!(code, 0);
    assert!(out.contains("order: 192") && out.contains("a(G) = 1\n"), "{out}");
    let (code, out, _) = run(&["aval", "heis3()"]);
    assert_eq!(code, 0);
    assert!(out.contains("degree: 9") && out.contains("a(G) = 1/4"), "{out}");
}

#[test]
fn aval_errors() {
    assert_eq!(run(&["aval", "--file", &data("intransitive.grp")]).0, EXIT_INTRANSITIVE);
    assert_eq!(run(&["aval", "product(C 2"]).0, EXIT_USAGE);
    assert_eq!(run(&["aval", "--file", "/nonexistent/group.grp"]).0, EXIT_USAGE);
    assert_eq!(run(&["aval", "S 8", "--cap", "1000"]).0, EXIT_CAP);
    assert_eq!(run(&["aval", "sl2(6)"]).0, EXIT_USAGE);
    assert_eq!(run(&["aval"]).0, EXIT_USAGE);
}

#[test]
fn aval_reads_group_files_inside_expressions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c3.grp");
    fs::write(&path, "degree=3\ngen=(1 2 3)\n").unwrap();
    let expr = format!("regular(file(\"{}\"))", path.display());
    let (code, out, _) = run(&["aval", &expr]);
    assert_eq!(code, 0);
    assert!(out.contains("a(G) = 1/2"), "{out}");
}

#[test]
fn tables_pass() {
    let (code, out, _) = run(&["table", "deg6"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("passed 3, failed 0, skipped 0"), "{out}");
    let (code, out, _) = run(&["table", "deg8", "--format", "csv"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("deg8/Nr12,24,1/4,1/4,PASS"), "{out}");
    assert!(out.contains("deg8/Nr7,16,1/2,,SKIPPED"), "{out}");
    assert_eq!(out.lines().filter(|l| l.ends_with("PASS")).count(), 9);
}

#[test]
fn table_uses_external_generator_files() {
    let dir = tempfile::tempdir().unwrap();
    // C8 has order 8, not 16: the row must fail.
    fs::write(dir.path().join("deg8_Nr7.grp"), "degree=8\ngen=(1 2 3 4 5 6 7 8)\n").unwrap();
    // C2 x D4 has the row's order and a-value; the table checks only those,
    // not which order-16 group was supplied.
    fs::write(dir.path().join("deg8_Nr10.grp"), "degree=8\ngen=(1 5)(2 6)(3 7)(4 8)\ngen=(1 2 3 4)(5 6 7 8)\ngen=(2 4)(6 8)\n")
        .unwrap();
    let external = dir.path().display().to_string();
    let (code, out, _) = run(&["table", "deg8", "--external", &external]);
    assert_eq!(code, EXIT_CHECK_FAILED, "{out}");
    assert!(out.lines().any(|l| l.starts_with("deg8/Nr7 ") && l.contains("FAIL")), "{out}");
    assert!(out.lines().any(|l| l.starts_with("deg8/Nr10 ") && l.contains("PASS")), "{out}");
    assert!(out.contains("passed 10, failed 1, skipped 11"), "{out}");
}

#[test]
fn count_examples() {
    let (code, out, _) = run(&["count", "quadratic", "--grid", "1:1e5:6"]);
    assert_eq!(code, 0);
    let r = rows(&out);
    assert_eq!(r.len(), 6);
    assert!(r.windows(2).all(|w| w[0].1 <= w[1].1));
    assert_eq!(r[1], (10, 6));

    let (code, out, err) = run(&["count", "cyclic", "--ell", "3", "--grid", "49:3969:4", "--sieve"]);
    assert_eq!(code, 0);
    assert_eq!(rows(&out).last(), Some(&(3969, 10)));
    assert!(err.contains("sieve: 2-powerful check: 9 of 9"), "{err}");

    let (code, out, _) = run(&["count", "biquadratic", "--grid", "100:256:3"]);
    assert_eq!(code, 0);
    assert_eq!(rows(&out).last(), Some(&(256, 3)));
}

#[test]
fn count_errors() {
    assert_eq!(run(&["count", "cyclic", "--ell", "4", "--grid", "1:100:3"]).0, EXIT_USAGE);
    assert_eq!(run(&["count", "cyclic", "--grid", "1:100:3"]).0, EXIT_USAGE);
    assert_eq!(run(&["count", "quadratic", "--grid", "1:100"]).0, EXIT_USAGE);
    assert_eq!(run(&["count", "quadratic", "--grid", "1:1e12:3"]).0, EXIT_USAGE);
    assert_eq!(run(&["count", "census", "--label", "S3", "--grid", "1:100:3"]).0, EXIT_USAGE);
    assert_eq!(run(&["count", "census", "--label", "S3", "--file", "/nonexistent", "--grid", "1:100:3"]).0, EXIT_DATA);
}

#[test]
fn census_counts() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("census.csv");
    fs::write(&good, "degree,group,abs_disc\n3,S3,23\n3,S3,31\n3,C3,49\n3,S3,44\n").unwrap();
    let good = good.display().to_string();
    let (code, out, _) = run(&["count", "census", "--label", "S3", "--file", &good, "--grid", "10:100:3"]);
    assert_eq!(code, 0);
    assert_eq!(rows(&out), [(10, 0), (32, 2), (100, 3)]);
    assert_eq!(run(&["count", "census", "--label", "D4", "--file", &good, "--grid", "10:100:3"]).0, EXIT_DATA);

    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "degree,group,abs_disc\n3,S3,twenty\n").unwrap();
    let (code, _, err) =
        run(&["count", "census", "--label", "S3", "--file", &bad.display().to_string(), "--grid", "1:9:2"]);
    assert_eq!(code, EXIT_DATA);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn fit_from_sample_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("samples.csv");
    let body: String = (1..=8).map(|j| format!("{},{}\n", 100u64.pow(j), 5 * 10u64.pow(j))).collect();
    fs::write(&path, format!("x,count\n{body}")).unwrap();
    let path = path.display().to_string();
    let (code, out, _) = run(&["fit", "--samples", &path, "--log-power", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("a_hat = 0.500000"), "{out}");
    assert!(out.contains("c_hat = 5.000000"), "{out}");

    let (code, out, _) = run(&["fit", "--samples", &path, "--log-power", "0", "--predict", "regular(C 2)"]);
    assert_eq!(code, EXIT_CHECK_FAILED, "{out}");
    assert!(out.contains("INCONSISTENT"));
    let (code, _, _) = run(&["fit", "--samples", &path, "--log-power", "0", "--predict", "regular(C 3)"]);
    assert_eq!(code, 0);

    let empty = dir.path().join("empty.csv");
    fs::write(&empty, "").unwrap();
    assert_eq!(run(&["fit", "--samples", &empty.display().to_string()]).0, EXIT_SAMPLES);
    let garbage = dir.path().join("garbage.csv");
    fs::write(&garbage, "x,count\n1;2\n").unwrap();
    assert_eq!(run(&["fit", "--samples", &garbage.display().to_string()]).0, EXIT_DATA);
    assert_eq!(run(&["fit", "--samples", &path, "--log-power", "free"]).0, EXIT_USAGE);
}

#[test]
fn fit_cubic_family_with_prediction() {
    let (code, out, _) = run(&["fit", "--family", "cyclic", "--ell", "3", "--predict", "regular(C 3)"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("verdict: CONSISTENT (empirical evidence only)"), "{out}");
    assert!(out.contains("predicted a(G) = 1/2"));
    assert_eq!(run(&["fit", "--family", "cyclic", "--ell", "7"]).0, EXIT_USAGE);
}

#[test]
fn compare_reps_examples() {
    let (code, out, _) = run(&["compare-reps", "--example", "7.4"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(out.contains("a1 = 1/27\na2 = 1/8"), "{out}");
    assert!(out.contains("FAILS: witness g2 with ind1 = 36, ind2 = 8"), "{out}");
    let (code, out, _) = run(&["compare-reps", "--example", "d4"]);
    assert_eq!(code, 0);
    assert!(out.contains("HOLDS"));
    assert_eq!(run(&["compare-reps", "--example", "nope"]).0, EXIT_USAGE);
}

#[test]
fn compare_reps_files() {
    let (code, out, _) = run(&["compare-reps", &data("s3_two_ways.pair")]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(out.contains("ind1 = 2, ind2 = 4"), "{out}");
    assert_eq!(run(&["compare-reps", &data("mismatched.pair")]).0, EXIT_INCONSISTENT);
    let (code, _, err) = run(&["compare-reps", &data("c2_in_c4.pair")]);
    assert_eq!(code, EXIT_INCONSISTENT);
    assert!(err.contains("g1*g1"), "{err}");
}

#[test]
fn binary_matches_library_and_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_galcount");
    let args = ["table", "deg8", "--format", "csv"];
    let first = Command::new(bin).args(args).output().unwrap();
    let second = Command::new(bin).args(args).output().unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(String::from_utf8(first.stdout).unwrap(), run(&args).1);

    let status = Command::new(bin).args(["aval", "--file", &data("intransitive.grp")]).output().unwrap().status;
    assert_eq!(status.code(), Some(EXIT_INTRANSITIVE));
    let status = Command::new(bin).args(["compare-reps", "--example", "7.4"]).output().unwrap().status;
    assert_eq!(status.code(), Some(EXIT_CHECK_FAILED));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
    assert_eq!(Command::new(bin).arg("frobnicate").output().unwrap().status.code(), Some(EXIT_USAGE));
}
