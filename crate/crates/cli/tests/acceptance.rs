//! Acceptance: the verification sweep exits clean and JSON output
//! round-trips byte-identically.

use std::process::{Command, Output};

fn pellfrac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pellfrac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn criterion(name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("{name}: PASS"),
        Err(msg) => {
            println!("{name}: FAIL — {msg}");
            panic!("{name} failed: {msg}");
        }
    }
}

#[test]
fn criterion_9_sweep_exits_clean_and_json_round_trips() {
    criterion(
        "criterion 9 (verify-theorems --a 1..50 --n 10 exits 0; JSON round-trips byte-identically)",
        || {
            let out = pellfrac(&["verify-theorems", "--a", "1..50", "--n", "10"]);
            if !out.status.success() {
                return Err(format!(
                    "sweep exited with {:?}: {}",
                    out.status.code(),
                    String::from_utf8_lossy(&out.stdout)
                ));
            }

            let json_invocations: &[&[&str]] = &[
                &["cf", "2", "--format", "json"],
                &["cf", "8", "--format", "json"],
                &["solve", "3", "1", "--count", "3", "--format", "json"],
                &["solve", "8", "-4", "--count", "2", "--format", "json"],
                &["solve", "15", "-4", "--format", "json"],
                &["family", "3", "4", "--count", "2", "--format", "json"],
                &["family", "2", "-4", "--format", "json"],
                &["verify-theorems", "--a", "1..5", "--n", "3", "--format", "json"],
                &["cf", "9", "--format", "json"],
            ];
            for args in json_invocations {
                let out = pellfrac(args);
                let emitted = String::from_utf8(out.stdout)
                    .map_err(|_| format!("{args:?}: stdout is not UTF-8"))?;
                let emitted = emitted.trim_end();
                let parsed: serde_json::Value = serde_json::from_str(emitted)
                    .map_err(|e| format!("{args:?}: stdout is not JSON: {e}"))?;
                let reserialized = serde_json::to_string(&parsed)
                    .map_err(|e| format!("{args:?}: reserialization failed: {e}"))?;
                if reserialized != emitted {
                    return Err(format!(
                        "{args:?}: round-trip changed bytes\n  emitted: {emitted}\n  round-trip: {reserialized}"
                    ));
                }
            }
            Ok(())
        },
    );
}
