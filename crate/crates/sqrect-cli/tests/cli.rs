//! End-to-end tests of the `sqrect` binary: exit codes, output formats, and
//! round trips between subcommands.

use std::path::Path;
use std::process::{Command, Output};

use sqrect::search::{self, SearchConfig};

fn sqrect(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqrect"))
        .args(args)
        .output()
        .expect("failed to run sqrect")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no exit code")
}

#[test]
fn decide_exit_codes_and_messages() {
    let out = sqrect(&["decide", "3", "7"]);
    assert_eq!(stdout(&out), "not tileable (row3)\n");
    assert_eq!(exit_code(&out), 1);

    let out = sqrect(&["decide", "10", "10"]);
    assert!(stdout(&out).starts_with("tileable"));
    assert_eq!(exit_code(&out), 0);

    let out = sqrect(&["decide", "0", "5"]);
    assert_eq!(exit_code(&out), 2);

    // Unknown flags are usage errors too.
    let out = sqrect(&["decide", "--bogus"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn solve_writes_canonical_format() {
    let out = sqrect(&["solve", "5", "6"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "tiling 5 6");
    assert_eq!(lines.len(), 6); // header plus five placements

    let out = sqrect(&["solve", "2", "3"]);
    assert_eq!(stdout(&out), "no tiling\n");
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn solve_node_limit_is_inconclusive() {
    let out = sqrect(&["solve", "7", "11", "--node-limit", "3"]);
    assert_eq!(stdout(&out), "inconclusive (node limit reached)\n");
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn solve_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t.tiling");
    for engine in ["search", "construct"] {
        let out = sqrect(&[
            "solve",
            "11",
            "14",
            "--engine",
            engine,
            "-o",
            file.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0, "engine {engine}");
        let out = sqrect(&["verify", file.to_str().unwrap()]);
        assert_eq!(stdout(&out), "VALID\n");
        assert_eq!(exit_code(&out), 0);
    }
}

#[test]
fn construct_engine_scales() {
    let out = sqrect(&["solve", "41", "57", "--engine", "construct"]);
    assert_eq!(exit_code(&out), 0);
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("41x57.tiling");
    std::fs::write(&file, stdout(&out)).unwrap();
    let out = sqrect(&["verify", file.to_str().unwrap()]);
    assert_eq!(stdout(&out), "VALID\n");
}

#[test]
fn verify_reports_first_failure() {
    let dir = tempfile::tempdir().unwrap();

    let overlap = dir.path().join("overlap.tiling");
    std::fs::write(&overlap, "tiling 3 3\n0 0 3\n1 1 2\n").unwrap();
    let out = sqrect(&["verify", overlap.to_str().unwrap()]);
    assert!(stdout(&out).starts_with("OVERLAP"));
    assert_eq!(exit_code(&out), 1);

    let small = dir.path().join("small.tiling");
    std::fs::write(&small, "tiling 2 3\n0 0 1\n1 0 2\n").unwrap();
    let out = sqrect(&["verify", small.to_str().unwrap(), "--min-side", "2"]);
    assert!(stdout(&out).starts_with("SIDE_TOO_SMALL"));
    assert_eq!(exit_code(&out), 1);

    let unsorted = dir.path().join("unsorted.tiling");
    std::fs::write(&unsorted, "tiling 2 4\n2 0 2\n0 0 2\n").unwrap();
    let out = sqrect(&["verify", unsorted.to_str().unwrap()]);
    assert!(stdout(&out).starts_with("INVALID"));
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn table_tiny() {
    let out = sqrect(&["table", "--max", "2"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches('\u{2713}').count(), 1);
}

/// The pretty grid, parsed back, must match the library's table bit for bit.
#[test]
fn table_matches_library() {
    let out = sqrect(&["table", "--max", "8"]);
    let text = stdout(&out);
    let table = search::build_table(8, &SearchConfig::default());
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 7);
    for (i, row) in rows.iter().enumerate() {
        let m = i as u32 + 2;
        let chars: Vec<char> = row.chars().collect();
        for n in 2..=8u32 {
            // Label is 3 chars; each cell is 3 chars with the mark last.
            let pos = 3 * (n as usize - 2) + 5;
            let mark = chars.get(pos).copied().unwrap_or(' ');
            assert_eq!(mark == '\u{2713}', table.get(m, n), "cell {m}x{n}");
        }
    }
}

#[test]
fn render_svg_rect_count() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t.tiling");
    let out = sqrect(&["solve", "5", "6", "-o", file.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);

    let out = sqrect(&["render", file.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let svg = stdout(&out);
    assert!(svg.starts_with("<svg "));
    assert!(svg.trim_end().ends_with("</svg>"));
    // Background plus one rect per placement.
    assert_eq!(svg.matches("<rect ").count(), 6);
    assert_eq!(svg.matches("fill=\"teal\"").count(), 2);
    assert_eq!(svg.matches("fill=\"purple\"").count(), 3);
}

#[test]
fn render_ascii_tolerates_gaps() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("gap.tiling");
    std::fs::write(&file, "tiling 4 4\n0 0 2\n2 0 2\n0 2 2\n").unwrap();
    let out = sqrect(&["render", file.to_str().unwrap(), "--ascii"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "aabb\naabb\ncc..\ncc..\n");
}

#[test]
fn closure_reports() {
    let out = sqrect(&["closure", "--max", "10"]);
    assert_eq!(stdout(&out), "exceptions: none\n");

    let out = sqrect(&["closure", "--max", "13", "--seeds", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("3x3"));
}

#[test]
fn solve_is_deterministic_and_matches_golden() {
    let a = sqrect(&["solve", "11", "13"]);
    let b = sqrect(&["solve", "11", "13"]);
    assert_eq!(a.stdout, b.stdout);

    let golden = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../sqrect/tests/golden/11x13.tiling");
    let golden = std::fs::read_to_string(golden).unwrap();
    assert_eq!(stdout(&a), golden);
}

#[test]
fn figures_emits_the_59_canonical_svgs() {
    let dir = tempfile::tempdir().unwrap();
    let out = sqrect(&["figures", "--outdir", dir.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).starts_with("wrote 59 figures"));
    let count = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(count, 59);
    // Spot-check one figure named in the published set.
    assert!(dir.path().join("11x13.svg").exists());
    assert!(!dir.path().join("6x8.svg").exists()); // common divisor, excluded
}
