use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn tatami(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tatami"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(rel)
}

fn tokens(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(str::to_owned).collect())
        .collect()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

/// Aligned output agrees cell for cell with a published table after
/// whitespace normalization.
/// Rows beyond `max_n` are skipped to keep enumeration short.
fn golden_matches(
    file: &str,
    tile: &str,
    width: &str,
    mode: &str,
    incongruent: bool,
    max_n: usize,
) {
    let mut golden = tokens(&fs::read_to_string(data(&format!("published/{file}.txt"))).unwrap());
    golden.retain(|row| row[0].parse::<usize>().unwrap() <= max_n);
    let lo = &golden[0][0];
    let hi = &golden[golden.len() - 1][0];
    let columns = (golden[0].len() - 2).to_string();
    let range = format!("{lo}..{hi}");
    let mut args = vec![
        "table", "--tile", tile, "--width", width, "--length", &range,
    ];
    args.extend(["--classify", mode, "--columns", &columns]);
    if incongruent {
        args.push("--incongruent");
    }
    let out = tatami(&args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let rows = tokens(&stdout(&out));
    assert_eq!(rows[0][..2], ["n", "T"]);
    assert_eq!(rows.len() - 1, golden.len(), "{file}");
    // Published tables stop after a fixed number of class columns, so each
    // printed row must be the leading slice of the computed row.
    for (row, want) in rows[1..].iter().zip(&golden) {
        assert_eq!(row[..want.len()], want[..], "{file}");
    }
}

#[test]
fn golden_domino_tables() {
    golden_matches("1x2_w2_tatami_full", "1x2", "2", "tatami", false, 27);
    golden_matches("1x2_w3_tatami_full", "1x2", "3", "tatami", false, 20);
    golden_matches("1x2_w3_slide_full", "1x2", "3", "slide", false, 20);
    golden_matches("1x2_w3_slide_incongruent", "1x2", "3", "slide", true, 20);
    golden_matches("1x2_w3_tatami_incongruent", "1x2", "3", "tatami", true, 20);
}

#[test]
fn golden_other_tiles() {
    golden_matches("1x3_w3_tatami_full", "1x3", "3", "tatami", false, 39);
    golden_matches("2x3_w3_tatami_full", "2x3", "3", "tatami", false, 16);
    golden_matches("1x4_w3_tatami_full", "1x4", "3", "tatami", false, 32);
}

#[test]
fn table_examples() {
    let out = tatami(&[
        "table",
        "--tile",
        "1x2",
        "--width",
        "3",
        "--length",
        "2..8",
        "--classify",
        "slide",
    ]);
    assert_eq!(code(&out), 0);
    let rows = tokens(&stdout(&out));
    let got: Vec<Vec<&str>> = rows[1..]
        .iter()
        .map(|r| r[2..].iter().map(String::as_str).collect())
        .collect();
    assert_eq!(
        got,
        [
            ["0", "2", "1"],
            ["2", "8", "1"],
            ["16", "24", "1"],
            ["86", "66", "1"]
        ]
    );

    let out = tatami(&[
        "table",
        "--tile",
        "2x3",
        "--width",
        "3",
        "--length",
        "2..16",
        "--classify",
        "tatami",
    ]);
    assert_eq!(code(&out), 0);
    for row in &tokens(&stdout(&out))[1..] {
        assert_eq!(row[1..], ["1", "1"]);
    }
}

#[test]
fn csv_and_json_round_trip_through_gfcheck() {
    let spec = scratch(
        "t0_w2.gf",
        "name: T_0(z,2)\ntile: 1x2\nwidth: 2\nclassify: tatami\ncongruence: full\ncolumn: c0\nterms: 20\nnum: 1 0 1\nden: 1 -1 0 -1\n",
    );
    for format in ["csv", "json"] {
        let out = tatami(&[
            "table", "--tile", "1x2", "--width", "2", "--length", "1..20", "--format", format,
        ]);
        assert_eq!(code(&out), 0);
        let table = scratch(&format!("w2.{format}"), &stdout(&out));
        let check = tatami(&[
            "gfcheck",
            spec.to_str().unwrap(),
            "--data",
            table.to_str().unwrap(),
        ]);
        assert_eq!(code(&check), 0, "{format}: {}", stdout(&check));
        assert!(stdout(&check).contains("T_0(z,2): match (20 terms)"));
    }
}

#[test]
fn csv_keeps_zero_rows() {
    let out = tatami(&[
        "table", "--tile", "1x2", "--width", "3", "--length", "1..4", "--format", "csv",
    ]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    assert!(lines[0].starts_with("n,total,c0"));
    assert!(lines[1].starts_with("1,0"));
    assert!(lines[3].starts_with("3,0"));
}

#[test]
fn gfcheck_examples() {
    let good = scratch(
        "good.gf",
        "name: T_0(z,2)\ntile: 1x2\nwidth: 2\nclassify: tatami\ncongruence: full\ncolumn: c0\nterms: 20\nnum: 1 0 1\nden: 1 -1 0 -1\n",
    );
    let out = tatami(&["gfcheck", good.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("1/1 generating functions match"));

    let wrong = scratch(
        "wrong.gf",
        "name: wrong\ntile: 1x2\nwidth: 2\nclassify: tatami\ncongruence: full\ncolumn: c0\nterms: 20\nnum: 1 0 2\nden: 1 -1 0 -1\n",
    );
    let out = tatami(&["gfcheck", wrong.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(
        stdout(&out).contains("wrong: mismatch at n=2"),
        "{}",
        stdout(&out)
    );

    let broken = scratch("broken.gf", "name: x\nnum: 1 a\n");
    assert_eq!(code(&tatami(&["gfcheck", broken.to_str().unwrap()])), 2);
}

#[test]
fn invert_examples() {
    let out = tatami(&["invert", "--tile", "1x2", "--width", "3", "--length", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("{3}: 1 x 0 = 0"));
    assert!(text.contains("{1,2}: 2 x 1 x 1 = 2"));
    assert!(text.contains("{1,1,1}: 1 x 1 x 1 x 1 = 1"));
    assert!(text.contains("T(2,3) = 3"));

    let out = tatami(&["invert", "--tile", "1x2", "--width", "1", "--length", "4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("T(4,1) = 1"));
}

#[test]
fn oracle_examples() {
    let out = tatami(&["oracle", "--tile", "1x2", "--width", "8", "--length", "8"]);
    assert_eq!((code(&out), stdout(&out).trim()), (0, "12988816"));

    let out = tatami(&["oracle", "--tile", "1x4", "--width", "3", "--length", "5"]);
    assert_eq!((code(&out), stdout(&out).trim()), (0, "0"));

    let out = tatami(&[
        "oracle",
        "--tile",
        "1x2",
        "--width",
        "6",
        "--length",
        "13",
        "--validate",
        "--max-nodes",
        "10000",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("536948224\n"));
    assert!(text.contains("validation skipped"));

    let out = tatami(&[
        "oracle",
        "--tile",
        "1x2",
        "--width",
        "4",
        "--length",
        "10",
        "--validate",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("enumerated: 18061 (match)"));
}

#[test]
fn exit_codes() {
    // Usage errors.
    assert_eq!(
        code(&tatami(&[
            "table", "--tile", "2x2", "--width", "2", "--length", "4"
        ])),
        2
    );
    assert_eq!(
        code(&tatami(&[
            "table", "--tile", "1x2", "--width", "0", "--length", "4"
        ])),
        2
    );
    assert_eq!(
        code(&tatami(&[
            "table", "--tile", "1x2", "--width", "2", "--length", "5..3"
        ])),
        2
    );
    assert_eq!(code(&tatami(&["bogus"])), 2);
    // Overflow.
    assert_eq!(
        code(&tatami(&[
            "oracle", "--tile", "1x2", "--width", "10", "--length", "60"
        ])),
        3
    );
    // Budget.
    let out = tatami(&[
        "table",
        "--tile",
        "1x2",
        "--width",
        "6",
        "--length",
        "13",
        "--max-nodes",
        "1000",
    ]);
    assert_eq!(code(&out), 4);
}
