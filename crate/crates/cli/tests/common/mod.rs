#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn cases() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("cases.txt")).expect("cases.txt");
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, args) = l.split_once(':').expect("`name: args`");
            Case {
                name: name.trim().to_string(),
                args: args.split_whitespace().map(str::to_string).collect(),
            }
        })
        .collect()
}

/// Runs the binary and renders a transcript: the command line, stdout,
/// stderr and exit code.
pub fn transcript(case: &Case) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_semicong"))
        .args(&case.args)
        .current_dir(golden_dir().join("scripts"))
        .output()
        .expect("run semicong");
    format!(
        "$ semicong {}\n{}--- stderr\n{}--- exit {}\n",
        case.args.join(" "),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr),
        out.status
            .code()
            .map_or("signal".to_string(), |c| c.to_string())
    )
}

pub fn expected_path(case: &Case) -> PathBuf {
    golden_dir()
        .join("expected")
        .join(format!("{}.txt", case.name))
}
