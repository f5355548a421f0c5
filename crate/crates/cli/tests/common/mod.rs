//! Golden cases shared by the golden test target and the acceptance harness.
//! Set `UPDATE_GOLDEN=1` to rewrite the expected outputs.

use std::path::{Path, PathBuf};
use std::process::Command;

use stochpoly::smx::{emit_matrix, parse_matrix};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub input: Option<&'static str>,
    pub exit: i32,
}

pub const CASES: &[Case] = &[
    Case {
        name: "decompose_centro_s",
        args: &["--json", "decompose", "--centro"],
        input: Some("s.smx"),
        exit: 0,
    },
    Case {
        name: "basis_centro_odd_5x4",
        args: &["basis", "--set", "centro-odd", "--m", "5", "--n", "4", "--verify"],
        input: None,
        exit: 0,
    },
    Case {
        name: "basis_rect_5x3_json",
        args: &["--json", "basis", "--set", "rect", "--m", "5", "--n", "3", "--verify"],
        input: None,
        exit: 0,
    },
    Case {
        name: "face_count_centro_c1",
        args: &["face", "count", "--centro"],
        input: Some("face_c1.smx"),
        exit: 0,
    },
    Case {
        name: "face_count_centro_c0",
        args: &["face", "count", "--centro"],
        input: Some("face_c0.smx"),
        exit: 0,
    },
    Case {
        name: "face_vertices_centro_c1",
        args: &["face", "vertices", "--centro"],
        input: Some("face_c1.smx"),
        exit: 0,
    },
    Case {
        name: "face_vertices_3x2",
        args: &["face", "vertices"],
        input: Some("face_3x2.smx"),
        exit: 0,
    },
    Case {
        name: "face_support_lopsided",
        args: &["face", "support", "--centro"],
        input: Some("lopsided.smx"),
        exit: 0,
    },
    Case {
        name: "face_count_lopsided",
        args: &["face", "count", "--centro"],
        input: Some("lopsided.smx"),
        exit: 1,
    },
    Case {
        name: "normalize_lopsided",
        args: &["normalize", "--centro-and"],
        input: Some("lopsided.smx"),
        exit: 0,
    },
    Case {
        name: "decompose_example1",
        args: &["decompose"],
        input: Some("example1.smx"),
        exit: 0,
    },
    Case {
        name: "decompose_example1_json",
        args: &["--json", "decompose"],
        input: Some("example1.smx"),
        exit: 0,
    },
    Case {
        name: "check_s",
        args: &["check"],
        input: Some("s.smx"),
        exit: 0,
    },
    Case {
        name: "graph_basis_last",
        args: &["graph", "--fill"],
        input: Some("basis_last.smx"),
        exit: 0,
    },
    Case {
        name: "graph_basis_last_dot",
        args: &["graph", "--dot", "--fill"],
        input: Some("basis_last.smx"),
        exit: 0,
    },
    Case {
        name: "enumerate_centro_3x3",
        args: &["--json", "enumerate", "--extremes", "--centro", "--m", "3", "--n", "3"],
        input: None,
        exit: 0,
    },
    Case {
        name: "enumerate_over_cap",
        args: &["--cap", "10", "enumerate", "--extremes", "--m", "3", "--n", "3"],
        input: None,
        exit: 1,
    },
    Case {
        name: "decompose_not_stochastic",
        args: &["decompose"],
        input: Some("not_stochastic.smx"),
        exit: 1,
    },
    Case {
        name: "check_zero_denominator",
        args: &["check"],
        input: Some("zero_denominator.smx"),
        exit: 2,
    },
];

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn updating() -> bool {
    std::env::var_os("UPDATE_GOLDEN").is_some()
}

fn compare(path: &Path, actual: &[u8]) -> Result<(), String> {
    if updating() {
        std::fs::write(path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected != actual {
        return Err(format!(
            "{} differs\n--- expected\n{}\n--- actual\n{}",
            path.display(),
            String::from_utf8_lossy(&expected),
            String::from_utf8_lossy(actual)
        ));
    }
    Ok(())
}

/// Runs the binary for one case, checking exit status and stdout bytes.
pub fn run_case(case: &Case) -> Result<(), String> {
    let dir = golden_dir();
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_stochpoly"));
    cmd.args(case.args);
    if let Some(input) = case.input {
        cmd.arg("--input").arg(dir.join(input));
    }
    let output = cmd.output().map_err(|e| e.to_string())?;
    let code = output.status.code().unwrap_or(-1);
    if code != case.exit {
        return Err(format!(
            "{}: exit {code}, expected {}; stderr: {}",
            case.name,
            case.exit,
            String::from_utf8_lossy(&output.stderr)
        ));
    }
    if case.exit != 0 && output.stderr.is_empty() {
        return Err(format!("{}: failed without a diagnostic", case.name));
    }
    compare(&dir.join(format!("{}.out", case.name)), &output.stdout)
}

/// Emitting a parsed file and parsing it again is lossless.
pub fn smx_round_trip() -> Result<(), String> {
    let dir = golden_dir();
    let text = std::fs::read_to_string(dir.join("roundtrip.smx")).map_err(|e| e.to_string())?;
    let parsed = parse_matrix(&text).map_err(|e| e.to_string())?;
    let emitted = emit_matrix(&parsed);
    compare(&dir.join("roundtrip.out"), emitted.as_bytes())?;
    let reparsed = parse_matrix(&emitted).map_err(|e| e.to_string())?;
    if reparsed != parsed {
        return Err("re-parsed matrix differs".into());
    }
    if emit_matrix(&reparsed) != emitted {
        return Err("second emission differs".into());
    }
    Ok(())
}

pub fn run_all() -> Vec<(String, Result<(), String>)> {
    let mut results: Vec<(String, Result<(), String>)> =
        CASES.iter().map(|c| (c.name.to_string(), run_case(c))).collect();
    results.push(("smx_round_trip".into(), smx_round_trip()));
    results
}
